#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "su3/group.hpp"

namespace su3 {

enum class ScanType { C, D, Both };

struct ScanOptions {
  std::int64_t max_n = 1;
  std::int64_t max_d = 1;
  ScanType type = ScanType::C;
  std::size_t order_cap = default_order_cap();
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Classifies every (C) and/or (D) group within the bounds and merges them
/// into a catalog keyed by fingerprint, sorted by (order, fingerprint).
///
/// Catalog layout: { "schema": 1, "generated": <UTC timestamp>, "params": {...},
/// "entries": [...], "skipped": [...] }. Apart from "generated", the output
/// depends only on the options (not on thread count or scheduling).
/// Tuples whose closure exceeds the cap are listed under "skipped".
nlohmann::json scan_catalog(const ScanOptions& options);

ScanType scan_type_from_string(const std::string& s);
std::string to_string(ScanType t);

} // namespace su3
