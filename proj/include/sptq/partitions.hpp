#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sptq/laurent.hpp"

namespace sptq {

enum class Parity { any, odd, even };

inline bool parity_ok(int v, Parity p) {
  return p == Parity::any || (v % 2 == (p == Parity::odd ? 1 : 0));
}

struct Partition {
  std::vector<int> parts;  // weakly decreasing

  int weight() const;
  int num_parts() const { return int(parts.size()); }
  bool empty() const { return parts.empty(); }
  int largest() const { return parts.empty() ? 0 : parts.front(); }
  // s(pi); nullopt is the infinity sentinel of the empty partition.
  std::optional<int> smallest() const;
  int mult_smallest() const;  // nu(pi), 0 for the empty partition
  int count_ones() const;
  int num_odd() const;
  int num_even() const;
  bool has_distinct_parts() const;
  bool has_distinct_odd_parts() const;  // no odd part repeats
  std::string str() const;              // "3+2+1", "-" for empty

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts <=> b.parts; }
};

struct PartitionConstraints {
  int min_part = 1;
  bool distinct = false;
  bool distinct_odd = false;  // forbid repeated odd parts
  Parity smallest_parity = Parity::any;
  Parity parts_parity = Parity::any;  // parity of every part
};

// Complete, duplicate-free, lexicographically descending list.
std::vector<Partition> enumerate_partitions(int n, const PartitionConstraints& cons = {});

struct Overpartition {
  Partition parts;
  std::vector<int> overlined;  // distinct part sizes carrying an overline, descending

  int weight() const { return parts.weight(); }
  bool is_overlined(int size) const;
  Partition non_overlined_sub() const;  // drop one copy of each overlined size
  Partition overlined_sub() const;      // the overlined parts (distinct sizes)
  // True when the smallest part size carries an overline.
  bool smallest_size_overlined() const;
  std::string str() const;  // overlined copy rendered with a trailing '~'

  friend bool operator==(const Overpartition&, const Overpartition&) = default;
};

// Deterministic order: partitions lexicographically descending; for each
// partition, overline subsets in binary counting order over the distinct sizes
// listed in descending order (no overlines first).
std::vector<Overpartition> enumerate_overpartitions(int n, bool smallest_not_overlined = false,
                                                    Parity smallest_parity = Parity::any);

int rank_stat(const Partition& p);   // largest - #parts
int crank_stat(const Partition& p);  // Andrews-Garvan crank
int dyson_rank(const Overpartition& o);  // empty overpartition has rank 0
int m2_rank(const Partition& p);         // ceil(l/2) - #parts; rejects repeated odd parts
int residual_crank(const Overpartition& o);  // crank of the non-overlined subpartition
int m2_residual_crank(const Partition& p);   // crank of the halved even subpartition

enum class SptVariant { spt, sptbar, sptbar1, sptbar2, m2spt };
SptVariant spt_variant_from_name(const std::string& name);

Int spt_count(int n, SptVariant v);       // counting recurrences, no q-series
Int spt_count_enum(int n, SptVariant v);  // brute-force object enumeration

enum class StatFamily { Nbar, Mbar, N2, M2, N, M };
StatFamily stat_family_from_name(const std::string& name);

// Tables from direct object enumeration with the combinatorial statistics.
// For the crank families the series expansions are canonical; the enumeration
// table deviates from them exactly at the documented single-one / single-two
// objects (see gen_fns stat_table and the discrepancy tests).
TwoVarTable stat_table_enum(StatFamily f, int max_n);

Int count_partitions(int n);           // p(n)
Int count_overpartitions(int n);       // pbar(n)
Int count_distinct_partitions(int n);  // partitions into distinct parts
Int count_distinct_odd_partitions(int n);  // partitions into distinct odd parts

}  // namespace sptq
