#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "su3/errors.hpp"
#include "su3/report.hpp"
#include "su3/scan.hpp"
#include "su3/verify.hpp"

namespace su3::cli {

namespace {

struct OutputFlags {
  bool json = false;
  bool csv = false;
  std::string path;
};

void add_output_flags(CLI::App& cmd, OutputFlags& flags) {
  auto* json = cmd.add_flag("--json", flags.json, "Emit a JSON report");
  cmd.add_flag("--csv", flags.csv, "Emit a CSV report")->excludes(json);
  cmd.add_option("-o,--output", flags.path, "Write the report to FILE instead of stdout");
}

int emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return ok;
  }
  std::ofstream file(path);
  if (!file || !(file << text)) {
    err << "error: cannot write " << path << '\n';
    return usage_error;
  }
  return ok;
}

std::string render(const ClassificationReport& report, const OutputFlags& flags) {
  if (flags.json)
    return to_json(report).dump(2) + "\n";
  if (flags.csv)
    return render_csv(report);
  return render_table(report);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite SU(3) subgroups of type (C) and (D): construction and classification", "su3-groups"};
  app.require_subcommand(1);

  std::size_t order_cap = default_order_cap();

  std::array<std::int64_t, 3> c_args{};
  OutputFlags c_flags;
  auto* analyze_c_cmd = app.add_subcommand("analyze-c", "Classify C(n,a,b)");
  analyze_c_cmd->add_option("N", c_args[0])->required();
  analyze_c_cmd->add_option("A", c_args[1])->required();
  analyze_c_cmd->add_option("B", c_args[2])->required();
  analyze_c_cmd->add_option("--order-cap", order_cap, "Maximum number of group elements");
  add_output_flags(*analyze_c_cmd, c_flags);

  std::array<std::int64_t, 6> d_args{};
  OutputFlags d_flags;
  auto* analyze_d_cmd = app.add_subcommand("analyze-d", "Classify D(n,a,b;d,r,s)");
  const std::array<const char*, 6> d_names{"N", "A", "B", "D", "R", "S"};
  for (std::size_t i = 0; i < d_names.size(); ++i)
    analyze_d_cmd->add_option(d_names[i], d_args[i])->required();
  analyze_d_cmd->add_option("--order-cap", order_cap, "Maximum number of group elements");
  add_output_flags(*analyze_d_cmd, d_flags);

  ScanOptions scan_opts;
  std::string scan_type = "both";
  std::string scan_path;
  auto* scan_cmd = app.add_subcommand("scan", "Classify a parameter range into a catalog deduplicated by fingerprint");
  scan_cmd->add_option("--max-n", scan_opts.max_n, "Largest n")->required();
  scan_cmd->add_option("--max-d", scan_opts.max_d, "Largest d for (D)-groups");
  scan_cmd->add_option("--type", scan_type, "Series to scan")->check(CLI::IsMember({"c", "d", "both"}));
  scan_cmd->add_option("--order-cap", order_cap, "Maximum number of group elements");
  scan_cmd->add_option("--threads", scan_opts.threads, "Worker threads (0: all cores)");
  scan_cmd->add_option("-o,--output", scan_path, "Catalog file")->required();

  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Rerun the reference checks on known orders and structures");
  verify_cmd->add_flag("--json", verify_json, "Machine-readable results");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (*analyze_c_cmd) {
      const auto report = analyze_c(c_args[0], c_args[1], c_args[2], order_cap);
      return emit(render(report, c_flags), c_flags.path, out, err);
    }
    if (*analyze_d_cmd) {
      const auto report = analyze_d({d_args[0], d_args[1], d_args[2], d_args[3], d_args[4], d_args[5]}, order_cap);
      return emit(render(report, d_flags), d_flags.path, out, err);
    }
    if (*scan_cmd) {
      scan_opts.type = scan_type_from_string(scan_type);
      scan_opts.order_cap = order_cap;
      const auto catalog = scan_catalog(scan_opts);
      const int rc = emit(catalog.dump(2) + "\n", scan_path, out, err);
      if (rc == ok)
        out << "wrote " << catalog.at("entries").size() << " entries (" << catalog.at("skipped").size()
            << " skipped) to " << scan_path << '\n';
      return rc;
    }
    if (*verify_cmd) {
      VerifyOptions vopts;
      vopts.order_cap = order_cap;
      const auto results = run_reference_checks(vopts);
      if (verify_json) {
        out << to_json(results).dump(2) << '\n';
      } else {
        for (const auto& r : results)
          out << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  [" << r.claim << "]  " << r.detail << '\n';
        out << (all_passed(results) ? "all checks passed" : "some checks FAILED") << '\n';
      }
      return all_passed(results) ? ok : verification_failure;
    }
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (raise --order-cap or SU3_ORDER_CAP)\n";
    return resource_cap;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::logic_error& e) {
    err << "verification failure: " << e.what() << '\n';
    return verification_failure;
  }
  return usage_error;
}

} // namespace su3::cli
