#include "su3/series_c.hpp"

#include <array>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "su3/errors.hpp"

namespace su3 {

std::string_view to_string(CVerdict v) {
  switch (v) {
  case CVerdict::CyclicSemidirect:
    return "cyclic-semidirect";
  case CVerdict::Delta3m2:
    return "delta-3m2";
  case CVerdict::Generic:
    return "generic";
  }
  return "unknown";
}

GroupTable build_C(std::int64_t n, std::int64_t a, std::int64_t b, std::size_t order_cap) {
  return close({make_E(), make_F(n, a, b)}, order_cap);
}

CStructure classify_C(std::int64_t n, std::int64_t a, std::int64_t b, const ClassifyOptions& options) {
  const auto dec = two_gen_decomposition(n, a, b);
  CStructure cs;
  cs.n = n;
  cs.a = a;
  cs.b = b;
  cs.m = dec.m;
  cs.p = dec.p;
  cs.t = dec.t;
  cs.order = 3 * dec.m * dec.p;
  if (dec.p == 1)
    cs.verdict = CVerdict::CyclicSemidirect;
  else if (dec.p == dec.m)
    cs.verdict = CVerdict::Delta3m2;
  else
    cs.verdict = CVerdict::Generic;
  cs.tn_flag = is_Tn(cs);

  if (options.verify) {
    const GroupTable g = build_C(n, a, b, options.order_cap);
    cs.closure_order = static_cast<std::int64_t>(g.order());
    if (*cs.closure_order != cs.order)
      throw std::logic_error("order 3mp disagrees with closure for C(" + std::to_string(n) + "," +
                             std::to_string(a) + "," + std::to_string(b) + ")");
    cs.z3_split = has_central_z3_splitting(g);
  }
  return cs;
}

CSemidirectWitness semidirect_witness(std::int64_t n, std::int64_t a, std::int64_t b, std::size_t order_cap) {
  const GroupTable g = build_C(n, a, b, order_cap);
  CSemidirectWitness w{diagonal_part(g), close({make_E()}), false, false, false};
  w.normal = is_normal(g, w.diagonal);

  std::size_t shared = 0;
  for (const auto& x : w.complement.elements())
    shared += w.diagonal.contains(x);
  w.trivial_intersection = shared == 1;

  std::unordered_set<MonomialElement> products;
  for (const auto& d : w.diagonal.elements())
    for (const auto& e : w.complement.elements())
      products.insert(d * e);
  w.unique_cover = products.size() == w.diagonal.order() * w.complement.order() && products.size() == g.order();
  for (const auto& x : products)
    w.unique_cover = w.unique_cover && g.contains(x);
  return w;
}

bool has_central_z3_splitting(const GroupTable& group) {
  const MonomialElement omega = make_scalar_omega();
  if (!group.contains(omega))
    return false;
  // Homomorphisms onto Z3 factor through G / <G', cubes>.
  const GroupTable derived = derived_subgroup(group);
  std::vector<MonomialElement> gens = derived.generators();
  for (const auto& x : group.elements())
    gens.push_back(power(x, 3));
  const GroupTable verbal = generated_subgroup(gens, group.order());
  return !verbal.contains(omega);
}

bool is_Tn(const CStructure& cs) {
  if (cs.p != 1 || cs.m < 2)
    return false;
  // F(n,a,b) equals F(m, a/g, b/g) with g = gcd(a, b, n) = n / m.
  const std::int64_t g = cs.n / cs.m;
  const std::int64_t m = cs.m;
  const std::array<std::int64_t, 3> entries{cs.a / g, cs.b / g, mod(-(cs.a + cs.b) / g, m)};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j || std::gcd(entries[i], m) != 1)
        continue;
      // A = y * x^-1 (mod m); x^-1 by search is fine at these sizes.
      std::int64_t x_inv = 1;
      while (mod(x_inv * entries[i], m) != 1)
        ++x_inv;
      const std::int64_t A = mod(entries[j] * x_inv, m);
      if (mod(1 + A + mod(A * A, m), m) == 0)
        return true;
    }
  }
  return false;
}

bool tn_prime_shape(std::int64_t m) {
  if (m % 3 == 0)
    m /= 3;
  if (m < 2)
    return false;
  for (std::int64_t q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      if (q % 3 != 1)
        return false;
      while (m % q == 0)
        m /= q;
    }
  }
  return m == 1 || m % 3 == 1;
}

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<MonomialElement, MonomialElement>& p) const noexcept {
    std::hash<MonomialElement> h;
    return h(p.first) * 31U + h(p.second);
  }
};

} // namespace

bool delta3_irrep_correspondence(std::int64_t n, std::int64_t a, std::int64_t b, std::size_t order_cap) {
  using Pair = std::pair<MonomialElement, MonomialElement>;
  // Generator images: (defining rep of Delta(3n^2), irrep 3_(b,a)).
  const std::array<Pair, 2> gens{Pair{make_E(), make_E()}, Pair{make_F(n, 0, n > 1 ? 1 : 0), make_F(n, a, b)}};

  std::vector<Pair> graph{Pair{}};
  std::unordered_set<Pair, PairHash> seen{Pair{}};
  for (std::size_t head = 0; head < graph.size(); ++head) {
    for (const auto& [x, y] : gens) {
      Pair next{x * graph[head].first, y * graph[head].second};
      if (seen.insert(next).second) {
        if (graph.size() >= order_cap)
          throw CapExceeded(order_cap);
        graph.push_back(std::move(next));
      }
    }
  }

  // The graph is a function (so the map is a homomorphism) iff it has
  // exactly one entry per element of Delta(3n^2).
  std::unordered_set<MonomialElement> domain, image;
  for (const auto& [x, y] : graph) {
    domain.insert(x);
    image.insert(y);
  }
  if (graph.size() != domain.size() || static_cast<std::int64_t>(domain.size()) != 3 * n * n)
    return false;

  const GroupTable c = build_C(n, a, b, order_cap);
  if (image.size() != c.order())
    return false;
  for (const auto& y : image)
    if (!c.contains(y))
      return false;
  return true;
}

} // namespace su3
