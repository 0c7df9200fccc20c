#include "su3/report.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "su3/delta6.hpp"

namespace su3 {

using nlohmann::json;

std::string structure_string(std::int64_t m, std::int64_t p, std::string_view complement) {
  std::vector<std::string> factors;
  for (auto k : {m, p})
    if (k > 1)
      factors.push_back("Z" + std::to_string(k));
  std::string abelian;
  if (factors.size() == 1)
    abelian = factors[0];
  else if (factors.size() == 2)
    abelian = "(" + factors[0] + " x " + factors[1] + ")";
  if (abelian.empty())
    return std::string(complement);
  return abelian + " : " + std::string(complement);
}

std::string structure_string(const CStructure& cs) {
  return structure_string(cs.m, cs.p, "Z3");
}

std::string structure_string(const DStructure& ds) {
  return structure_string(ds.p, ds.q, "S3");
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t micros_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
}

std::string c_label(const CStructure& cs) {
  if (cs.m == 1)
    return "Z3";
  if (cs.verdict == CVerdict::Delta3m2)
    return "Delta(" + std::to_string(3 * cs.m * cs.m) + ")";
  if (cs.tn_flag)
    return "T_" + std::to_string(cs.m);
  return {};
}

} // namespace

ClassificationReport analyze_c(std::int64_t n, std::int64_t a, std::int64_t b, std::size_t order_cap) {
  const auto start = Clock::now();
  ClassificationReport report;
  const CStructure cs = classify_C(n, a, b, {true, order_cap});
  report.fingerprint = fingerprint(build_C(n, a, b, order_cap));
  report.structure = structure_string(cs);
  report.series_label = c_label(cs);
  report.flags.tn = cs.tn_flag;
  report.flags.z3_split = cs.z3_split;
  report.record = cs;
  report.elapsed_us = micros_since(start);
  return report;
}

ClassificationReport analyze_d(const DParams& params, std::size_t order_cap) {
  const auto start = Clock::now();
  ClassificationReport report;
  const DStructure ds = classify_D(params, order_cap);
  const GroupTable group = build_D(params, order_cap);
  report.fingerprint = fingerprint(group);
  report.structure = structure_string(ds);
  if (ds.p == 1) {
    report.series_label = "S3";
  } else if (ds.p == ds.q) {
    const GroupTable model = build_D({ds.p, 0, 1, 2, 1, 1}, order_cap);
    if (fingerprint(model) == report.fingerprint)
      report.series_label = "Delta(" + std::to_string(6 * ds.p * ds.p) + ")";
  }
  report.flags.z3_split = has_central_z3_splitting(group);
  report.flags.delta6_image_possible = delta6_image_obstruction(ds.order);
  report.record = ds;
  report.elapsed_us = micros_since(start);
  return report;
}

json to_json(const MonomialElement& x) {
  const Perm3 p = x.perm();
  return json{{"perm", {p(0), p(1), p(2)}}, {"exps", x.exps()}, {"modulus", x.modulus()}};
}

MonomialElement element_from_json(const json& j) {
  const auto perm = j.at("perm").get<std::array<int, 3>>();
  return {Perm3{perm[0], perm[1], perm[2]}, j.at("exps").get<std::array<std::int64_t, 3>>(),
          j.at("modulus").get<std::int64_t>()};
}

json to_json(const GroupFingerprint& fp) {
  json hist = json::array();
  for (const auto& [o, c] : fp.histogram)
    hist.push_back({o, c});
  return json{{"order", fp.order},
              {"histogram", hist},
              {"center_order", fp.center_order},
              {"derived_order", fp.derived_order},
              {"abelianization", fp.abelianization}};
}

GroupFingerprint fingerprint_from_json(const json& j) {
  GroupFingerprint fp;
  fp.order = j.at("order").get<std::int64_t>();
  for (const auto& entry : j.at("histogram"))
    fp.histogram[entry.at(0).get<std::int64_t>()] = entry.at(1).get<std::int64_t>();
  fp.center_order = j.at("center_order").get<std::int64_t>();
  fp.derived_order = j.at("derived_order").get<std::int64_t>();
  fp.abelianization = j.at("abelianization").get<std::vector<std::int64_t>>();
  return fp;
}

namespace {

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null())
    return std::nullopt;
  return j.at(key).get<T>();
}

json to_json(const CStructure& cs) {
  return json{{"n", cs.n},
              {"a", cs.a},
              {"b", cs.b},
              {"m", cs.m},
              {"p", cs.p},
              {"t", cs.t},
              {"order", cs.order},
              {"verdict", std::string(to_string(cs.verdict))},
              {"tn_flag", cs.tn_flag},
              {"z3_split", optional_json(cs.z3_split)},
              {"closure_order", optional_json(cs.closure_order)}};
}

CVerdict verdict_from(const std::string& s) {
  for (auto v : {CVerdict::CyclicSemidirect, CVerdict::Delta3m2, CVerdict::Generic})
    if (to_string(v) == s)
      return v;
  throw std::invalid_argument("unknown verdict: " + s);
}

CStructure c_from_json(const json& j) {
  CStructure cs;
  cs.n = j.at("n");
  cs.a = j.at("a");
  cs.b = j.at("b");
  cs.m = j.at("m");
  cs.p = j.at("p");
  cs.t = j.at("t");
  cs.order = j.at("order");
  cs.verdict = verdict_from(j.at("verdict").get<std::string>());
  cs.tn_flag = j.at("tn_flag");
  cs.z3_split = optional_from<bool>(j, "z3_split");
  cs.closure_order = optional_from<std::int64_t>(j, "closure_order");
  return cs;
}

json to_json(const DStructure& ds) {
  const auto& p = ds.params;
  return json{{"n", p.n},
              {"a", p.a},
              {"b", p.b},
              {"d", p.d},
              {"r", p.r},
              {"s", p.s},
              {"p", ds.p},
              {"q", ds.q},
              {"order", ds.order},
              {"s3_split", ds.s3_split},
              {"closure_order", ds.closure_order},
              {"c_subgroup_order", ds.c_subgroup_order},
              {"extends_c_trivially", ds.extends_c_trivially},
              {"diagonal",
               {{"m", ds.diagonal.m},
                {"n", ds.diagonal.n},
                {"gen_m", to_json(ds.diagonal.gen_m)},
                {"gen_n", to_json(ds.diagonal.gen_n)}}}};
}

DStructure d_from_json(const json& j) {
  DStructure ds;
  ds.params = {j.at("n"), j.at("a"), j.at("b"), j.at("d"), j.at("r"), j.at("s")};
  ds.p = j.at("p");
  ds.q = j.at("q");
  ds.order = j.at("order");
  ds.s3_split = j.at("s3_split");
  ds.closure_order = j.at("closure_order");
  ds.c_subgroup_order = j.at("c_subgroup_order");
  ds.extends_c_trivially = j.at("extends_c_trivially");
  const auto& diag = j.at("diagonal");
  ds.diagonal.m = diag.at("m");
  ds.diagonal.n = diag.at("n");
  ds.diagonal.gen_m = element_from_json(diag.at("gen_m"));
  ds.diagonal.gen_n = element_from_json(diag.at("gen_n"));
  return ds;
}

} // namespace

json to_json(const ClassificationReport& report) {
  json j;
  j["schema"] = report_schema_version;
  if (const auto* cs = std::get_if<CStructure>(&report.record)) {
    j["series"] = "C";
    j["record"] = to_json(*cs);
  } else {
    j["series"] = "D";
    j["record"] = to_json(std::get<DStructure>(report.record));
  }
  j["structure"] = report.structure;
  j["series_label"] = report.series_label;
  j["fingerprint"] = to_json(report.fingerprint);
  j["flags"] = {{"tn", optional_json(report.flags.tn)},
                {"z3_split", optional_json(report.flags.z3_split)},
                {"delta6_image_possible", optional_json(report.flags.delta6_image_possible)}};
  j["elapsed_us"] = report.elapsed_us;
  return j;
}

ClassificationReport report_from_json(const json& j) {
  if (j.at("schema").get<int>() != report_schema_version)
    throw std::invalid_argument("unsupported report schema");
  ClassificationReport report;
  const auto series = j.at("series").get<std::string>();
  if (series == "C")
    report.record = c_from_json(j.at("record"));
  else if (series == "D")
    report.record = d_from_json(j.at("record"));
  else
    throw std::invalid_argument("unknown series: " + series);
  report.structure = j.at("structure");
  report.series_label = j.at("series_label");
  report.fingerprint = fingerprint_from_json(j.at("fingerprint"));
  const auto& flags = j.at("flags");
  report.flags.tn = optional_from<bool>(flags, "tn");
  report.flags.z3_split = optional_from<bool>(flags, "z3_split");
  report.flags.delta6_image_possible = optional_from<bool>(flags, "delta6_image_possible");
  report.elapsed_us = j.at("elapsed_us");
  return report;
}

namespace {

std::string yes_no(const std::optional<bool>& v) {
  return v ? (*v ? "yes" : "no") : "-";
}

std::string params_string(const ClassificationReport& r) {
  std::ostringstream os;
  if (const auto* cs = std::get_if<CStructure>(&r.record)) {
    os << "C(" << cs->n << ',' << cs->a << ',' << cs->b << ')';
  } else {
    const auto& p = std::get<DStructure>(r.record).params;
    os << "D(" << p.n << ',' << p.a << ',' << p.b << ';' << p.d << ',' << p.r << ',' << p.s << ')';
  }
  return os.str();
}

} // namespace

std::string render_table(const ClassificationReport& r) {
  std::ostringstream os;
  auto row = [&os](std::string_view key, const auto& value) {
    os << "  " << key;
    for (std::size_t i = key.size(); i < 22; ++i)
      os << ' ';
    os << value << '\n';
  };
  os << params_string(r) << '\n';
  if (const auto* cs = std::get_if<CStructure>(&r.record)) {
    row("order", cs->order);
    row("structure", r.structure);
    row("m, p, t", std::to_string(cs->m) + ", " + std::to_string(cs->p) + ", " + std::to_string(cs->t));
    row("verdict", to_string(cs->verdict));
    row("T_n", yes_no(r.flags.tn));
    if (cs->tn_flag)
      row("T_n prime shape", tn_prime_shape(cs->m) ? "yes" : "no");
  } else {
    const auto& ds = std::get<DStructure>(r.record);
    row("order", ds.order);
    row("structure", r.structure);
    row("p, q", std::to_string(ds.p) + ", " + std::to_string(ds.q));
    row("S3 complement", ds.s3_split ? "yes" : "no");
    row("|C(n,a,b)|", ds.c_subgroup_order);
    row("extends C trivially", ds.extends_c_trivially ? "yes" : "no");
    row("Delta(6m^2) image", r.flags.delta6_image_possible.value_or(false)
                                 ? "possible (order is 6 m^2)"
                                 : "no (order / 6 is not a square)");
  }
  row("known series", r.series_label.empty() ? std::string("-") : r.series_label);
  row("central Z3 factor", yes_no(r.flags.z3_split));
  row("fingerprint", to_string(r.fingerprint));
  row("elapsed (us)", r.elapsed_us);
  return os.str();
}

std::string render_csv(const ClassificationReport& r) {
  std::ostringstream os;
  os << "series,n,a,b,d,r,s,order,structure,series_label,m_or_p,p_or_q,t,tn,z3_split,delta6_image_possible,"
        "fingerprint,elapsed_us\n";
  auto opt = [](const std::optional<bool>& v) { return v ? (*v ? "true" : "false") : ""; };
  if (const auto* cs = std::get_if<CStructure>(&r.record)) {
    os << "C," << cs->n << ',' << cs->a << ',' << cs->b << ",,,," << cs->order << ",\"" << r.structure << "\","
       << r.series_label << ',' << cs->m << ',' << cs->p << ',' << cs->t << ',';
  } else {
    const auto& ds = std::get<DStructure>(r.record);
    const auto& p = ds.params;
    os << "D," << p.n << ',' << p.a << ',' << p.b << ',' << p.d << ',' << p.r << ',' << p.s << ',' << ds.order
       << ",\"" << r.structure << "\"," << r.series_label << ',' << ds.p << ',' << ds.q << ",,";
  }
  os << opt(r.flags.tn) << ',' << opt(r.flags.z3_split) << ',' << opt(r.flags.delta6_image_possible) << ",\""
     << to_string(r.fingerprint) << "\"," << r.elapsed_us << '\n';
  return os.str();
}

} // namespace su3
