#include "su3/delta6.hpp"

#include <numeric>

#include "su3/errors.hpp"
#include "su3/series_d.hpp"

namespace su3 {

Delta6Presentation build_irrep(int kind, std::int64_t n, std::int64_t l) {
  if (kind != 1 && kind != 2)
    throw ParameterError("irrep kind must be 1 or 2");
  if (n < 2 || l < 1 || l > n - 1)
    throw ParameterError("irrep requires n >= 2 and 1 <= l <= n-1");
  Delta6Presentation rep;
  rep.kind = kind;
  rep.n = n;
  rep.l = l;
  rep.P = make_E();
  // Anti-diagonal permutation; kind 2 carries an overall sign (-1 = zeta_2).
  rep.Q = kind == 1 ? MonomialElement(Perm3{2, 1, 0}, {0, 0, 0}, 1) : MonomialElement(Perm3{2, 1, 0}, {1, 1, 1}, 2);
  rep.R = MonomialElement::diagonal({l, -l, 0}, n);
  rep.S = MonomialElement::diagonal({0, l, -l}, n);
  return rep;
}

bool relations_hold(const Delta6Presentation& rep, std::int64_t order) {
  const auto& [kind, n, l, P, Q, R, S] = rep;
  const MonomialElement one;
  const auto Pinv = inverse(P);
  const auto Qinv = inverse(Q);
  return power(P, 3) == one && power(Q, 2) == one && power(P * Q, 2) == one &&
         power(R, order) == one && power(S, order) == one && R * S == S * R &&
         P * R * Pinv == inverse(R) * inverse(S) && P * S * Pinv == R &&
         Q * R * Qinv == inverse(S) && Q * S * Qinv == inverse(R);
}

ImageStructure image_structure(const Delta6Presentation& rep, std::size_t order_cap) {
  ImageStructure out;
  out.m = rep.n / std::gcd(rep.l, rep.n);
  const GroupTable image = close({rep.P, rep.Q, rep.R, rep.S}, order_cap);
  out.order = static_cast<std::int64_t>(image.order());
  out.relations_hold = relations_hold(rep, out.m);
  if (out.order == 6 * out.m * out.m) {
    const GroupTable model = build_D({out.m, 0, 1, 2, 1, 1}, order_cap);
    out.matches_delta6 = fingerprint(image) == fingerprint(model);
  }
  return out;
}

std::optional<std::int64_t> delta6_rank(std::int64_t order) {
  if (order < 6 || order % 6 != 0)
    return std::nullopt;
  const std::int64_t k = order / 6;
  std::int64_t m = 1;
  while ((m + 1) * (m + 1) <= k)
    ++m;
  if (m * m != k)
    return std::nullopt;
  return m;
}

bool delta6_image_obstruction(std::int64_t order) {
  return delta6_rank(order).has_value();
}

} // namespace su3
