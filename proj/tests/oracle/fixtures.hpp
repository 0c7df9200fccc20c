#pragma once

// Groups shared by the oracle comparisons and the acceptance binary.

#include <string>
#include <vector>

#include "numeric_oracle.hpp"
#include "su3/monomial.hpp"
#include "su3/series_d.hpp"

namespace su3::fixtures {

struct Fixture {
  std::string name;
  bool is_d = false;
  DParams params;  // for C fixtures only n, a, b are used

  std::vector<MonomialElement> exact_generators() const {
    std::vector<MonomialElement> g{make_E(), make_F(params.n, params.a, params.b)};
    if (is_d)
      g.push_back(make_Gtilde(params.d, params.r, params.s));
    return g;
  }

  std::vector<oracle::NumericMatrix> numeric_generators() const {
    std::vector<oracle::NumericMatrix> g{oracle::E(), oracle::F(params.n, params.a, params.b)};
    if (is_d)
      g.push_back(oracle::Gtilde(params.d, params.r, params.s));
    return g;
  }
};

inline Fixture c_fixture(std::int64_t n, std::int64_t a, std::int64_t b) {
  return {"C(" + std::to_string(n) + "," + std::to_string(a) + "," + std::to_string(b) + ")", false, {n, a, b, 1, 0, 0}};
}

inline Fixture d_fixture(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t d, std::int64_t r,
                         std::int64_t s) {
  return {"D(" + std::to_string(n) + "," + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(d) +
              "," + std::to_string(r) + "," + std::to_string(s) + ")",
          true,
          {n, a, b, d, r, s}};
}

inline std::vector<Fixture> all() {
  std::vector<Fixture> out;
  for (auto [n, a, b] : std::vector<std::array<std::int64_t, 3>>{
           {1, 0, 0}, {2, 0, 1}, {2, 1, 1}, {3, 0, 1}, {3, 1, 1}, {3, 1, 2}, {4, 0, 1}, {4, 1, 1}, {4, 1, 2},
           {5, 0, 1}, {5, 1, 2}, {6, 0, 1}, {6, 1, 1}, {6, 2, 3}, {7, 0, 1}, {7, 1, 2}, {8, 1, 3}, {9, 0, 1},
           {9, 1, 1}, {9, 2, 4}, {10, 1, 4}, {12, 1, 2}, {12, 3, 4}, {13, 1, 3}, {14, 2, 4}, {15, 1, 4},
           {18, 1, 7}, {19, 1, 7}, {21, 1, 4}, {24, 0, 1}})
    out.push_back(c_fixture(n, a, b));
  for (auto [n, a, b, d, r, s] : std::vector<std::array<std::int64_t, 6>>{
           {1, 0, 0, 1, 0, 0}, {2, 0, 1, 2, 1, 1}, {3, 0, 1, 2, 1, 1}, {4, 0, 1, 2, 1, 1}, {5, 0, 1, 2, 1, 1},
           {9, 1, 1, 2, 1, 1}, {3, 1, 1, 3, 1, 2}, {4, 1, 2, 4, 1, 3}, {6, 1, 1, 2, 0, 1}, {6, 0, 1, 3, 0, 1},
           {2, 1, 1, 4, 1, 1}, {7, 1, 2, 2, 1, 0}, {5, 1, 2, 5, 2, 3}, {8, 1, 3, 2, 1, 1}, {3, 1, 2, 6, 1, 1}})
    out.push_back(d_fixture(n, a, b, d, r, s));
  return out;
}

} // namespace su3::fixtures
