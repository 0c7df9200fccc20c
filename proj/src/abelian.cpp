#include "su3/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "su3/errors.hpp"

namespace su3 {

namespace {

std::unordered_set<MonomialElement> cyclic_set(const MonomialElement& x) {
  std::unordered_set<MonomialElement> out;
  MonomialElement y;
  do {
    out.insert(y);
    y = y * x;
  } while (!y.is_identity());
  return out;
}

} // namespace

std::int64_t root_order(std::int64_t n, std::int64_t a) {
  return n / std::gcd(mod(a, n), n);
}

OrderHistogram cyclic_product_histogram(std::int64_t m, std::int64_t n) {
  OrderHistogram hist;
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t j = 0; j < n; ++j)
      ++hist[std::lcm(root_order(m, i), root_order(n, j))];
  return hist;
}

AbelianStructure abelian_structure(const GroupTable& diag) {
  const auto& elements = diag.elements();
  for (const auto& x : elements)
    if (!x.is_diagonal())
      throw NotDiagonal();

  AbelianStructure s;
  for (const auto& x : elements) {
    const auto o = element_order(x);
    if (o > s.m) {
      s.m = o;
      s.gen_m = x;
    }
  }
  const auto order = static_cast<std::int64_t>(diag.order());
  s.n = order / s.m;

  // A cyclic subgroup of maximal order is a direct factor; look for a
  // complement generator of order n meeting <gen_m> trivially.
  const auto span_m = cyclic_set(s.gen_m);
  bool found = s.n == 1;
  for (const auto& y : elements) {
    if (found)
      break;
    if (element_order(y) != s.n)
      continue;
    bool trivial = true;
    MonomialElement yk = y;
    for (std::int64_t k = 1; k < s.n && trivial; ++k, yk = yk * y)
      trivial = !span_m.contains(yk);
    if (trivial) {
      s.gen_n = y;
      found = true;
    }
  }

  if (!found || order % s.m != 0 || s.m % s.n != 0)
    throw std::logic_error("diagonal group is not of the form Z_m x Z_n");
  if (element_order_histogram(diag) != cyclic_product_histogram(s.m, s.n))
    throw std::logic_error("element-order histogram differs from Z_m x Z_n");

  std::unordered_set<MonomialElement> products;
  MonomialElement xi;
  for (std::int64_t i = 0; i < s.m; ++i, xi = xi * s.gen_m) {
    MonomialElement prod = xi;
    for (std::int64_t j = 0; j < s.n; ++j, prod = prod * s.gen_n)
      products.insert(prod);
  }
  if (static_cast<std::int64_t>(products.size()) != order)
    throw std::logic_error("witness generators do not reconstruct the group");
  return s;
}

AbelianStructure abelian_structure(std::span<const MonomialElement> elements) {
  for (const auto& x : elements)
    if (!x.is_diagonal())
      throw NotDiagonal();
  std::unordered_set<MonomialElement> distinct(elements.begin(), elements.end());
  if (distinct.empty())
    throw NotClosed();
  try {
    const GroupTable closure = generated_subgroup(elements, distinct.size());
    if (closure.order() != distinct.size())
      throw NotClosed();
    return abelian_structure(closure);
  } catch (const CapExceeded&) {
    throw NotClosed();
  }
}

std::pair<MonomialElement, MonomialElement> xy_generators(std::int64_t n, std::int64_t a, std::int64_t b) {
  return {make_F(n, a, b), make_F(n, b, mod(-a - b, n))};
}

TwoGenDecomposition two_gen_decomposition(std::int64_t n, std::int64_t a, std::int64_t b) {
  if (n < 1 || a < 0 || a >= n || b < 0 || b >= n)
    throw ParameterError("decomposition requires n >= 1 and 0 <= a,b < n");
  TwoGenDecomposition d;
  d.m = std::lcm(root_order(n, a), root_order(n, b));
  for (std::int64_t p = 1; p < d.m; ++p) {
    for (std::int64_t t = 1; t <= d.m / p - 1; ++t) {
      const std::int64_t first = mod(b - mod(a * t, n), n);
      const std::int64_t second = mod(a + mod(b * (1 + t), n), n);
      if (mod(p * first, n) == 0 && mod(p * second, n) == 0) {
        d.p = p;
        d.t = t;
        return d;
      }
    }
  }
  d.p = d.m;
  d.t = 0;
  return d;
}

bool intersection_check(const MonomialElement& x, const MonomialElement& y, std::int64_t p) {
  const auto gx = cyclic_set(x);
  const auto gy = cyclic_set(y);
  std::unordered_set<MonomialElement> meet;
  for (const auto& e : gx)
    if (gy.contains(e))
      meet.insert(e);
  return meet == cyclic_set(power(x, p)) && meet == cyclic_set(power(y, p));
}

} // namespace su3
