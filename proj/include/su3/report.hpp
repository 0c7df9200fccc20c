#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "su3/group.hpp"
#include "su3/series_c.hpp"
#include "su3/series_d.hpp"

namespace su3 {

inline constexpr int report_schema_version = 1;

/// Structure strings use a fixed grammar: abelian factors of order > 1 joined
/// by " x " (parenthesised when there are two), then " : " and the
/// complement, e.g. "(Z9 x Z3) : Z3", "Z21 : Z3", "S3".
std::string structure_string(std::int64_t m, std::int64_t p, std::string_view complement);
std::string structure_string(const CStructure& cs);
std::string structure_string(const DStructure& ds);

struct ReportFlags {
  std::optional<bool> tn;
  std::optional<bool> z3_split;
  /// Whether the order has the form 6 m^2 (D-groups only). False rules out
  /// the group being the image of any Delta(6n^2) irrep.
  std::optional<bool> delta6_image_possible;

  friend bool operator==(const ReportFlags&, const ReportFlags&) = default;
};

struct ClassificationReport {
  std::variant<CStructure, DStructure> record;
  std::string structure;
  std::string series_label;  // "Delta(12)", "T_21", ... or empty
  GroupFingerprint fingerprint;
  ReportFlags flags;
  std::int64_t elapsed_us = 0;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

ClassificationReport analyze_c(std::int64_t n, std::int64_t a, std::int64_t b,
                               std::size_t order_cap = default_order_cap());
ClassificationReport analyze_d(const DParams& params, std::size_t order_cap = default_order_cap());

nlohmann::json to_json(const MonomialElement& x);
MonomialElement element_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GroupFingerprint& fp);
GroupFingerprint fingerprint_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ClassificationReport& report);
ClassificationReport report_from_json(const nlohmann::json& j);

std::string render_table(const ClassificationReport& report);
std::string render_csv(const ClassificationReport& report);

} // namespace su3
