#include <set>

#include "doctest.h"
#include "sptq/checks.hpp"

using namespace sptq;

TEST_CASE("catalog is populated and queryable") {
  auto ids = catalog_ids();
  CHECK(ids.size() >= 40);
  std::set<std::string> s(ids.begin(), ids.end());
  CHECK(s.size() == ids.size());  // no duplicate ids
  for (const char* id : {"T2_1", "T2_5", "T2_14", "T2_17", "spt5", "sb2_5p3", "m2_3p1",
                         "parity_sb", "mainthm_i", "mainthm_viii", "moments", "nonneg_SB",
                         "nonneg_S2B_conjecture", "s2b_summand_counterexample",
                         "watson_rank_forms", "watson_m2_forms", "phi_entries", "lambert_prop_3",
                         "sptcrank_pairs", "vector_models_agree", "phi_bijection",
                         "psi_bijection", "spt_genfun"}) {
    CHECK(known_check(id));
    CHECK(s.count(id) == 1);
    CHECK(check_default_order(id) >= 1);
  }
  CHECK(!known_check("T2_15"));
  CHECK(!known_check("T2_16"));
  CHECK(!known_check("bogus"));
  CHECK_THROWS(check_default_order("bogus"));
  CHECK_THROWS(run_check("bogus"));
}

TEST_CASE("every check passes at a reduced order") {
  for (const std::string& id : catalog_ids()) {
    long order = std::min(check_default_order(id), 20L);
    CheckReport rep = run_check(id, order);
    INFO("check " << id);
    CHECK(rep.pass);
    CHECK(rep.id == id);
    CHECK(rep.order_checked == order);
    CHECK(!rep.witness.has_value());
    CHECK(rep.elapsed_ms >= 0.0);
  }
}

TEST_CASE("order zero selects the default") {
  CheckReport rep = run_check("s2b_summand_counterexample", 0);
  CHECK(rep.order_checked == check_default_order("s2b_summand_counterexample"));
  CHECK(rep.pass);
}

TEST_CASE("reports are deterministic") {
  CheckReport a = run_check("T2_1", 15);
  CheckReport b = run_check("T2_1", 15);
  CHECK(a.pass == b.pass);
  CHECK(a.order_checked == b.order_checked);
  CHECK(a.witness.has_value() == b.witness.has_value());
}
