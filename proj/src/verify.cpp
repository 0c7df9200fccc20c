#include "su3/verify.hpp"

#include <numeric>
#include <sstream>

#include "su3/abelian.hpp"
#include "su3/delta6.hpp"
#include "su3/series_c.hpp"
#include "su3/series_d.hpp"

namespace su3 {

namespace {

class Suite {
public:
  explicit Suite(const VerifyOptions& options) : options_(options) {}

  GroupTable c_group(std::int64_t n, std::int64_t a, std::int64_t b) const {
    return close({make_E(), options_.make_f(n, a, b)}, options_.order_cap);
  }

  template <typename Fn>
  void check(std::string name, std::string claim, Fn&& fn) {
    CheckResult r{std::move(name), std::move(claim), false, {}};
    std::ostringstream detail;
    try {
      r.passed = fn(detail);
    } catch (const std::exception& e) {
      detail << "exception: " << e.what();
    }
    r.detail = detail.str();
    results_.push_back(std::move(r));
  }

  const VerifyOptions& options() const { return options_; }
  std::vector<CheckResult> take() { return std::move(results_); }

private:
  const VerifyOptions& options_;
  std::vector<CheckResult> results_;
};

} // namespace

std::vector<CheckResult> run_reference_checks(const VerifyOptions& options) {
  Suite suite(options);
  const std::size_t cap = options.order_cap;

  suite.check("C(9,1,1) worked example", "m=9, p=3, t=1, order 81, (Z9 x Z3) : Z3", [&](std::ostream& os) {
    const auto cs = classify_C(9, 1, 1, {false, cap});
    const auto closure = suite.c_group(9, 1, 1).order();
    os << "m=" << cs.m << " p=" << cs.p << " t=" << cs.t << " order=" << cs.order << " closure=" << closure;
    return cs.m == 9 && cs.p == 3 && cs.t == 1 && cs.order == 81 && closure == 81;
  });

  suite.check("C(9,1,1) has no central Z3 factor", "not of the form H x Z3", [&](std::ostream& os) {
    const bool split = has_central_z3_splitting(suite.c_group(9, 1, 1));
    os << "z3_split=" << split;
    return !split;
  });

  suite.check("C(6,1,1) = A4 x Z3", "order 36, (Z6 x Z2) : Z3, central Z3 factor", [&](std::ostream& os) {
    const auto g = suite.c_group(6, 1, 1);
    const auto cs = classify_C(6, 1, 1, {false, cap});
    const auto model = close({make_E(), make_F(2, 0, 1), make_scalar_omega()}, cap);
    const bool same = fingerprint(g) == fingerprint(model);
    const bool split = has_central_z3_splitting(g);
    os << "order=" << g.order() << " m=" << cs.m << " p=" << cs.p << " z3_split=" << split
       << " fingerprint_matches_A4xZ3=" << same;
    return g.order() == 36 && cs.m == 6 && cs.p == 2 && split && same;
  });

  suite.check("T_21 = C(21,1,4)", "order 63, Z21 : Z3, (Z7 : Z3) x Z3", [&](std::ostream& os) {
    const auto g = suite.c_group(21, 1, 4);
    const auto cs = classify_C(21, 1, 4, {false, cap});
    const bool split = has_central_z3_splitting(g);
    os << "order=" << g.order() << " p=" << cs.p << " tn=" << cs.tn_flag << " z3_split=" << split;
    return g.order() == 63 && cs.p == 1 && cs.tn_flag && split;
  });

  suite.check("Delta(3n^2) = C(n,0,1), n = 2..7", "order 3n^2, p = m = n", [&](std::ostream& os) {
    bool ok = true;
    for (std::int64_t n = 2; n <= 7; ++n) {
      const auto cs = classify_C(n, 0, 1, {false, cap});
      const auto closure = static_cast<std::int64_t>(suite.c_group(n, 0, 1).order());
      os << "n=" << n << ":" << closure << ' ';
      ok = ok && cs.verdict == CVerdict::Delta3m2 && cs.order == 3 * n * n && closure == cs.order;
    }
    return ok;
  });

  suite.check("C(n,a,b) = irrep 3_(b,a) of Delta(3n^2)", "image equals C(n,a,b)", [&](std::ostream& os) {
    bool ok = true;
    for (auto [n, a, b] : {std::array<std::int64_t, 3>{9, 1, 1}, {6, 1, 1}, {21, 1, 4}, {4, 0, 1}}) {
      const bool r = delta3_irrep_correspondence(n, a, b, cap);
      os << "C(" << n << ',' << a << ',' << b << "):" << r << ' ';
      ok = ok && r;
    }
    return ok;
  });

  suite.check("order formula 3mp, n <= 12", "ord C(n,a,b) = 3mp for every a, b", [&](std::ostream& os) {
    std::size_t tuples = 0;
    for (std::int64_t n = 1; n <= 12; ++n)
      for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b, ++tuples) {
          const auto cs = classify_C(n, a, b, {false, cap});
          const auto closure = static_cast<std::int64_t>(suite.c_group(n, a, b).order());
          if (closure != cs.order) {
            os << "violation at C(" << n << ',' << a << ',' << b << "): 3mp=" << cs.order << " closure=" << closure;
            return false;
          }
        }
    os << tuples << " tuples";
    return true;
  });

  suite.check("Delta(6n^2) = D(n,0,1;2,1,1), n = 2..5", "order 6n^2; Delta(24) = S4", [&](std::ostream& os) {
    bool ok = true;
    for (std::int64_t n = 2; n <= 5; ++n) {
      const auto ds = classify_D({n, 0, 1, 2, 1, 1}, cap);
      os << "n=" << n << ":" << ds.closure_order << ' ';
      ok = ok && ds.order == 6 * n * n && ds.p == n && ds.q == n && ds.s3_split;
    }
    const OrderHistogram s4{{1, 1}, {2, 9}, {3, 8}, {4, 6}};
    ok = ok && element_order_histogram(build_D({2, 0, 1, 2, 1, 1}, cap)) == s4;
    return ok;
  });

  suite.check("D(9,1,1;2,1,1) structure", "order 162, (Z9 x Z3) : S3", [&](std::ostream& os) {
    const auto ds = classify_D({9, 1, 1, 2, 1, 1}, cap);
    os << "order=" << ds.order << " p=" << ds.p << " q=" << ds.q << " s3_split=" << ds.s3_split;
    return ds.order == 162 && ds.closure_order == 162 && ds.p == 9 && ds.q == 3 && ds.s3_split;
  });

  suite.check("D(9,1,1;2,1,1) is no Delta(6n^2) irrep image", "162/6 = 27 is not a square", [&](std::ostream& os) {
    bool hit_162 = false;
    for (int kind : {1, 2})
      for (std::int64_t n = 2; n <= 10; ++n)
        for (std::int64_t l = 1; l < n; ++l) {
          const auto rep = build_irrep(kind, n, l);
          hit_162 = hit_162 || close({rep.P, rep.Q, rep.R, rep.S}, cap).order() == 162;
        }
    const bool possible = delta6_image_obstruction(162);
    os << "order/6 square=" << possible << " image of order 162 for n<=10: " << hit_162;
    return !possible && !hit_162;
  });

  suite.check("Delta(6n^2) irreps 3_1(l), 3_2(l), n = 2..6", "image ~ Delta(6m^2), m = ord(eta^l)", [&](std::ostream& os) {
    bool ok = true;
    for (int kind : {1, 2})
      for (std::int64_t n = 2; n <= 6; ++n)
        for (std::int64_t l = 1; l < n; ++l) {
          const auto rep = build_irrep(kind, n, l);
          const auto img = image_structure(rep, cap);
          const std::int64_t m = n / std::gcd(l, n);
          const bool good = relations_hold(rep, n) && img.relations_hold && img.order == 6 * m * m && img.matches_delta6;
          if (!good)
            os << "failed kind=" << kind << " n=" << n << " l=" << l << ' ';
          ok = ok && good;
        }
    return ok;
  });

  return suite.take();
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed)
      return false;
  return true;
}

nlohmann::json to_json(const std::vector<CheckResult>& results) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : results)
    checks.push_back({{"name", r.name}, {"claim", r.claim}, {"passed", r.passed}, {"detail", r.detail}});
  return {{"schema", 1}, {"passed", all_passed(results)}, {"checks", checks}};
}

} // namespace su3
