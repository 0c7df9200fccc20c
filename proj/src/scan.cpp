#include "su3/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <variant>
#include <vector>

#include "su3/errors.hpp"
#include "su3/report.hpp"

namespace su3 {

using nlohmann::json;

ScanType scan_type_from_string(const std::string& s) {
  if (s == "c")
    return ScanType::C;
  if (s == "d")
    return ScanType::D;
  if (s == "both")
    return ScanType::Both;
  throw ParameterError("scan type must be c, d or both");
}

std::string to_string(ScanType t) {
  switch (t) {
  case ScanType::C:
    return "c";
  case ScanType::D:
    return "d";
  case ScanType::Both:
    return "both";
  }
  return "c";
}

namespace {

struct Tuple {
  char series;
  std::vector<std::int64_t> params;
};

struct Outcome {
  bool skipped = false;
  std::string reason;
  GroupFingerprint fingerprint;
  std::string structure;
  std::string label;
};

std::vector<Tuple> enumerate(const ScanOptions& o) {
  std::vector<Tuple> tuples;
  if (o.type != ScanType::D)
    for (std::int64_t n = 1; n <= o.max_n; ++n)
      for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b)
          tuples.push_back({'C', {n, a, b}});
  if (o.type != ScanType::C)
    for (std::int64_t n = 1; n <= o.max_n; ++n)
      for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b)
          for (std::int64_t d = 1; d <= o.max_d; ++d)
            for (std::int64_t r = 0; r < d; ++r)
              for (std::int64_t s = 0; s < d; ++s)
                tuples.push_back({'D', {n, a, b, d, r, s}});
  return tuples;
}

Outcome evaluate(const Tuple& t, std::size_t cap) {
  Outcome out;
  try {
    const ClassificationReport r =
        t.series == 'C' ? analyze_c(t.params[0], t.params[1], t.params[2], cap)
                        : analyze_d({t.params[0], t.params[1], t.params[2], t.params[3], t.params[4], t.params[5]}, cap);
    out.fingerprint = r.fingerprint;
    out.structure = r.structure;
    out.label = r.series_label;
  } catch (const CapExceeded& e) {
    out.skipped = true;
    out.reason = e.what();
  }
  return out;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

} // namespace

json scan_catalog(const ScanOptions& o) {
  if (o.max_n < 1 || o.max_d < 1)
    throw ParameterError("scan bounds must be at least 1");

  const auto tuples = enumerate(o);
  std::vector<Outcome> outcomes(tuples.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < tuples.size(); i = next++) {
      try {
        outcomes[i] = evaluate(tuples[i], o.order_cap);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
      }
    }
  };
  unsigned threads = o.threads ? o.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, tuples.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i)
      pool.emplace_back(worker);
  }
  if (failure)
    std::rethrow_exception(failure);

  struct Entry {
    std::set<std::string> structures;
    std::set<std::string> labels;
    json members = json::array();
  };
  std::map<GroupFingerprint, Entry> merged;
  json skipped = json::array();
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const auto& t = tuples[i];
    const auto& out = outcomes[i];
    json member{{"series", std::string(1, t.series)}, {"params", t.params}};
    if (out.skipped) {
      member["reason"] = out.reason;
      skipped.push_back(std::move(member));
      continue;
    }
    auto& e = merged[out.fingerprint];
    e.structures.insert(std::string(1, t.series) + ": " + out.structure);
    if (!out.label.empty())
      e.labels.insert(out.label);
    e.members.push_back(std::move(member));
  }

  json entries = json::array();
  for (const auto& [fp, e] : merged) {
    entries.push_back({{"order", fp.order},
                       {"fingerprint", to_json(fp)},
                       {"fingerprint_key", to_string(fp)},
                       {"structures", e.structures},
                       {"series_labels", e.labels},
                       {"isomorphism", e.members.size() > 1 ? "fingerprint-equal" : "single"},
                       {"members", e.members}});
  }

  return json{{"schema", report_schema_version},
              {"generated", utc_timestamp()},
              {"params",
               {{"max_n", o.max_n},
                {"max_d", o.max_d},
                {"type", to_string(o.type)},
                {"order_cap", o.order_cap}}},
              {"entries", entries},
              {"skipped", skipped}};
}

} // namespace su3
