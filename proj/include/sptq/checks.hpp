#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sptq/spt_crank.hpp"

namespace sptq {

struct CheckWitness {
  long n = 0;
  long m = 0;  // z-exponent, component index, or sub-identity index, per check
  std::string expected;
  std::string got;
};

struct CheckReport {
  std::string id;
  long order_checked = 0;
  bool pass = false;
  std::optional<CheckWitness> witness;  // present exactly when pass is false
  double elapsed_ms = 0.0;
};

std::vector<std::string> catalog_ids();
bool known_check(const std::string& id);
long check_default_order(const std::string& id);

// order <= 0 selects the check's default order.
CheckReport run_check(const std::string& id, long order = 0);

}  // namespace sptq
