#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "su3/group.hpp"
#include "su3/monomial.hpp"

namespace su3 {

struct CheckResult {
  std::string name;
  std::string claim;  // the reference value or relation being reproduced
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  /// Source of the F(n,a,b) generator for the (C)-group checks; replaceable
  /// so tests can inject a faulty generator.
  std::function<MonomialElement(std::int64_t, std::int64_t, std::int64_t)> make_f = make_F;
  std::size_t order_cap = default_order_cap();
};

/// Runs the reference checks for the (C)/(D) classification: the worked
/// examples, the Delta(3n^2), Delta(6n^2) and T_n families, the Delta(6n^2)
/// irreps and the order formula sweep.
std::vector<CheckResult> run_reference_checks(const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

nlohmann::json to_json(const std::vector<CheckResult>& results);

} // namespace su3
