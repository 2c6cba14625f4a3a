#include <set>

#include "doctest.h"
#include "sptq/gen_fns.hpp"
#include "sptq/partitions.hpp"

using namespace sptq;

TEST_CASE("basic enumeration") {
  auto p4 = enumerate_partitions(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4.front().str() == "4");
  CHECK(p4.back().str() == "1+1+1+1");
  // lexicographically descending, no duplicates
  for (size_t i = 1; i < p4.size(); ++i) CHECK(p4[i - 1].parts > p4[i].parts);
  CHECK(enumerate_partitions(0).size() == 1);
  CHECK(enumerate_partitions(0).front().empty());
  for (int n = 1; n <= 20; ++n)
    CHECK(Int(long(enumerate_partitions(n).size())) == count_partitions(n));
}

TEST_CASE("constrained enumeration") {
  PartitionConstraints distinct;
  distinct.distinct = true;
  for (int n = 1; n <= 20; ++n)
    CHECK(Int(long(enumerate_partitions(n, distinct).size())) == count_distinct_partitions(n));

  PartitionConstraints distinct_odd_all;
  distinct_odd_all.distinct = true;
  distinct_odd_all.parts_parity = Parity::odd;
  for (int n = 1; n <= 20; ++n)
    CHECK(Int(long(enumerate_partitions(n, distinct_odd_all).size())) ==
          count_distinct_odd_partitions(n));

  // distinct odd parts (repeats allowed on evens), smallest even, n = 6: {6, 4+2, 2+2+2}
  PartitionConstraints c;
  c.distinct_odd = true;
  c.smallest_parity = Parity::even;
  auto got = enumerate_partitions(6, c);
  REQUIRE(got.size() == 3);
  CHECK(got[0].str() == "6");
  CHECK(got[1].str() == "4+2");
  CHECK(got[2].str() == "2+2+2");
}

TEST_CASE("overpartition enumeration") {
  auto o4 = enumerate_overpartitions(4);
  CHECK(o4.size() == 14);
  for (int n = 1; n <= 20; ++n)
    CHECK(Int(long(enumerate_overpartitions(n).size())) == count_overpartitions(n));

  auto o3 = enumerate_overpartitions(3, true);
  std::vector<std::string> want3 = {"3", "2+1", "2~+1", "1+1+1"};
  REQUIRE(o3.size() == want3.size());
  for (size_t i = 0; i < o3.size(); ++i) CHECK(o3[i].str() == want3[i]);

  auto o8 = enumerate_overpartitions(8, true, Parity::even);
  std::set<std::string> got8, want8 = {"8",    "6+2",   "6~+2",   "3+3+2",   "3~+3+2",
                                       "4+4", "4+2+2", "4~+2+2", "2+2+2+2"};
  for (const auto& o : o8) got8.insert(o.str());
  CHECK(got8 == want8);

  CHECK(enumerate_overpartitions(5, true, Parity::odd).size() == 10);
}

TEST_CASE("statistics") {
  CHECK(rank_stat({{5, 2, 1}}) == 2);
  CHECK(crank_stat({{4, 2}}) == 4);
  CHECK(crank_stat({{1}}) == -1);  // one 1, no part exceeds it
  CHECK(m2_rank({{5, 4, 2}}) == 0);
  CHECK_THROWS(m2_rank({{3, 3}}));
  Overpartition empty;
  CHECK(dyson_rank(empty) == 0);
  Overpartition o{{{4, 2, 1}}, {2}};
  CHECK(dyson_rank(o) == 1);      // largest 4, three parts
  CHECK(residual_crank(o) == 0);  // non-overlined sub 4+1: one 1, one part above it
  Overpartition o2{{{4, 2}}, {}};
  CHECK(residual_crank(o2) == 4);
  CHECK(m2_residual_crank({{6, 4, 3}}) == 3);  // halved evens 3+2, no ones -> largest
}

TEST_CASE("spt counts") {
  CHECK(spt_count(1, SptVariant::spt) == 1);
  CHECK(spt_count(4, SptVariant::spt) == 10);
  CHECK(spt_count(4, SptVariant::sptbar) == 13);
  CHECK(spt_count(4, SptVariant::sptbar1) == 10);
  CHECK(spt_count(4, SptVariant::sptbar2) == 3);
  CHECK(spt_count(3, SptVariant::sptbar) == 6);
  CHECK(spt_count(6, SptVariant::m2spt) == 5);
  CHECK(spt_count(5, SptVariant::sptbar1) == 20);
  CHECK(spt_count(8, SptVariant::sptbar2) == 15);
}

TEST_CASE("spt recurrence equals brute-force enumeration") {
  for (SptVariant v : {SptVariant::spt, SptVariant::sptbar, SptVariant::sptbar1,
                       SptVariant::sptbar2, SptVariant::m2spt})
    for (int n = 1; n <= 25; ++n) CHECK(spt_count(n, v) == spt_count_enum(n, v));
}

TEST_CASE("sptbar splits by smallest-part parity") {
  for (int n = 1; n <= 60; ++n)
    CHECK(spt_count(n, SptVariant::sptbar) ==
          spt_count(n, SptVariant::sptbar1) + spt_count(n, SptVariant::sptbar2));
}

TEST_CASE("rank tables: enumeration equals series") {
  int N = 40;
  for (StatFamily f : {StatFamily::Nbar, StatFamily::N2, StatFamily::N})
    CHECK(stat_table_enum(f, N) == stat_table(f, N));
}

TEST_CASE("table shape invariants") {
  int N = 40;
  TwoVarTable nbar = stat_table_enum(StatFamily::Nbar, N);
  CHECK(nbar.symmetric());
  for (int n = 1; n <= N; ++n) CHECK(nbar.row_sum(n) == count_overpartitions(n));
  CHECK(nbar.entry(0, 0) == 1);
  // the canonical crank table takes the series convention at n = 1
  TwoVarTable m = stat_table(StatFamily::M, N);
  CHECK(m.entry(0, 1) == -1);
  CHECK(m.entry(1, 1) == 1);
  CHECK(m.entry(-1, 1) == 1);
  TwoVarTable me = stat_table_enum(StatFamily::M, N);
  CHECK(me.entry(-1, 1) == 1);
  CHECK(me.entry(0, 1) == 0);
  for (int n = 2; n <= N; ++n) {
    CHECK(m.row_sum(n) == count_partitions(n));
    CHECK(me.row_sum(n) == count_partitions(n));
  }
}
