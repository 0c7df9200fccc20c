#include "su3/monomial.hpp"

#include <cassert>
#include <numeric>
#include <ostream>

#include "su3/errors.hpp"

namespace su3 {

std::int64_t mod(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  const std::int64_t l = std::lcm(a, b);
  if (l > max_modulus)
    throw ParameterError("root-of-unity modulus exceeds 2^31-1");
  return l;
}

MonomialElement::MonomialElement(Perm3 perm, std::array<std::int64_t, 3> exps, std::int64_t modulus)
  : perm_(perm), exps_(exps), modulus_(modulus) {
  if (modulus < 1 || modulus > max_modulus)
    throw ParameterError("modulus must lie in [1, 2^31-1]");
  for (auto& e : exps_)
    e = mod(e, modulus_);
  canonicalize();
}

void MonomialElement::canonicalize() {
  std::int64_t g = modulus_;
  for (auto e : exps_)
    g = std::gcd(g, e);
  if (g > 1) {
    modulus_ /= g;
    for (auto& e : exps_)
      e /= g;
  }
}

std::array<std::int64_t, 3> MonomialElement::exps_at(std::int64_t modulus) const {
  assert(modulus % modulus_ == 0);
  const std::int64_t scale = modulus / modulus_;
  return {exps_[0] * scale, exps_[1] * scale, exps_[2] * scale};
}

MonomialElement multiply(const MonomialElement& lhs, const MonomialElement& rhs) {
  const std::int64_t L = lcm_checked(lhs.modulus(), rhs.modulus());
  const auto le = lhs.exps_at(L);
  const auto re = rhs.exps_at(L);
  const Perm3 lp = lhs.perm();
  std::array<std::int64_t, 3> exps{};
  for (int i = 0; i < 3; ++i)
    exps[static_cast<std::size_t>(i)] = le[static_cast<std::size_t>(i)] + re[static_cast<std::size_t>(lp(i))];
  MonomialElement result(lp.then(rhs.perm()), exps, L);
  assert(!(is_special_unitary(lhs) && is_special_unitary(rhs)) || is_special_unitary(result));
  return result;
}

MonomialElement inverse(const MonomialElement& x) {
  // (x^-1) has its entry for row perm(i) in column i, with the conjugate phase.
  const Perm3 p = x.perm();
  std::array<std::int64_t, 3> exps{};
  for (int i = 0; i < 3; ++i)
    exps[static_cast<std::size_t>(p(i))] = -x.exps()[static_cast<std::size_t>(i)];
  MonomialElement result(p.inverse(), exps, x.modulus());
  assert(!is_special_unitary(x) || is_special_unitary(result));
  return result;
}

MonomialElement power(const MonomialElement& x, std::int64_t k) {
  MonomialElement base = k < 0 ? inverse(x) : x;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  MonomialElement result;
  while (e != 0) {
    if (e & 1U)
      result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

MonomialElement conjugate(const MonomialElement& x, const MonomialElement& g) {
  return inverse(g) * x * g;
}

MonomialElement commutator(const MonomialElement& x, const MonomialElement& y) {
  return inverse(x) * inverse(y) * x * y;
}

namespace {

std::int64_t diagonal_order(const MonomialElement& x) {
  std::int64_t order = 1;
  for (auto e : x.exps())
    order = std::lcm(order, x.modulus() / std::gcd(e, x.modulus()));
  return order;
}

} // namespace

std::int64_t element_order(const MonomialElement& x) {
  if (x.is_diagonal())
    return diagonal_order(x);
  // x^k has trivial permutation part iff the permutation order divides k,
  // so the order factors through the diagonal power x^(perm order).
  const std::int64_t perm_order = x.perm().is_odd() ? 2 : 3;
  return perm_order * diagonal_order(power(x, perm_order));
}

bool is_special_unitary(const MonomialElement& x) {
  const std::int64_t L = x.modulus();
  const std::int64_t sum = mod(x.exps()[0] + x.exps()[1] + x.exps()[2], L);
  if (!x.perm().is_odd())
    return sum == 0;
  return L % 2 == 0 && sum == L / 2;
}

std::ostream& operator<<(std::ostream& os, const MonomialElement& x) {
  os << "[perm " << x.perm()(0) << x.perm()(1) << x.perm()(2) << " exps (" << x.exps()[0] << ','
     << x.exps()[1] << ',' << x.exps()[2] << ") mod " << x.modulus() << ']';
  return os;
}

MonomialElement make_E() {
  return {Perm3{1, 2, 0}, {0, 0, 0}, 1};
}

MonomialElement make_F(std::int64_t n, std::int64_t a, std::int64_t b) {
  if (n < 1 || a < 0 || a >= n || b < 0 || b >= n)
    throw ParameterError("F(n,a,b) requires n >= 1 and 0 <= a,b < n");
  return MonomialElement::diagonal({a, b, -a - b}, n);
}

MonomialElement make_Gtilde(std::int64_t d, std::int64_t r, std::int64_t s) {
  if (d < 1 || r < 0 || r >= d || s < 0 || s >= d)
    throw ParameterError("Gtilde(d,r,s) requires d >= 1 and 0 <= r,s < d");
  // delta = zeta_(2d)^2 and -1 = zeta_(2d)^d.
  const std::int64_t L = lcm_checked(2 * d, 2);
  return {Perm3{0, 2, 1}, {2 * r, 2 * s, d - 2 * r - 2 * s}, L};
}

MonomialElement make_scalar_omega(std::int64_t L) {
  if (L < 3 || L % 3 != 0)
    throw ParameterError("omega scalar requires a modulus divisible by 3");
  const std::int64_t third = L / 3;
  return MonomialElement::diagonal({third, third, third}, L);
}

} // namespace su3

std::size_t std::hash<su3::MonomialElement>::operator()(const su3::MonomialElement& x) const noexcept {
  std::uint64_t h = static_cast<std::uint64_t>(x.perm().index());
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(static_cast<std::uint64_t>(x.modulus()));
  for (auto e : x.exps())
    mix(static_cast<std::uint64_t>(e));
  return static_cast<std::size_t>(h);
}
