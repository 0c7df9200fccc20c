#include "su3/series_d.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "su3/errors.hpp"
#include "su3/series_c.hpp"

namespace su3 {

void validate(const DParams& p) {
  if (p.n < 1 || p.a < 0 || p.a >= p.n || p.b < 0 || p.b >= p.n)
    throw ParameterError("D(n,a,b;d,r,s) requires n >= 1 and 0 <= a,b < n");
  if (p.d < 1 || p.r < 0 || p.r >= p.d || p.s < 0 || p.s >= p.d)
    throw ParameterError("D(n,a,b;d,r,s) requires d >= 1 and 0 <= r,s < d");
}

GroupTable build_D(const DParams& p, std::size_t order_cap) {
  validate(p);
  return close({make_E(), make_F(p.n, p.a, p.b), make_Gtilde(p.d, p.r, p.s)}, order_cap);
}

DGenerators derived_generators(std::int64_t d, std::int64_t r, std::int64_t s) {
  const MonomialElement E = make_E();
  const MonomialElement Gt = make_Gtilde(d, r, s);
  DGenerators g;
  g.A = Gt * Gt;
  g.Gprime = E * E * g.A * E * Gt;
  const MonomialElement EGE = E * g.Gprime * E;
  g.B = EGE * EGE;
  // delta = zeta_(2d)^2, -1 = zeta_(2d)^d.
  const std::int64_t k = 2 * r + s;
  g.T = MonomialElement::diagonal({d - 2 * k, d + 2 * k, 0}, 2 * d);
  g.G = MonomialElement(Perm3{0, 2, 1}, {1, 1, 1}, 2);
  return g;
}

std::array<MonomialElement, 5> s3_action_table(const MonomialElement& diag, const MonomialElement& gprime) {
  if (!diag.is_diagonal())
    throw NotDiagonal();
  const MonomialElement E = make_E();
  return {conjugate(diag, gprime), conjugate(diag, E), conjugate(diag, E * gprime), conjugate(diag, E * E),
          conjugate(diag, E * E * gprime)};
}

std::vector<MonomialElement> full_diagonal_generators(const DParams& p) {
  validate(p);
  const auto g = derived_generators(p.d, p.r, p.s);
  const MonomialElement E = make_E();
  const MonomialElement F = make_F(p.n, p.a, p.b);
  const std::array<MonomialElement, 5> actors{g.G, E, E * g.G, E * E, E * E * g.G};
  std::vector<MonomialElement> gens{g.A, g.B, F};
  for (const auto& x : {g.A, g.B, F})
    for (const auto& actor : actors)
      gens.push_back(conjugate(x, actor));
  return gens;
}

std::vector<MonomialElement> reduced_diagonal_generators(const DParams& p) {
  validate(p);
  const auto g = derived_generators(p.d, p.r, p.s);
  const MonomialElement E = make_E();
  const MonomialElement F = make_F(p.n, p.a, p.b);
  return {g.A, conjugate(g.A, E), g.B, conjugate(g.B, E), F, conjugate(F, E), conjugate(F, g.G), conjugate(F, E * g.G)};
}

GroupTable diagonal_subgroup_A(const DParams& p, std::size_t order_cap) {
  return close(reduced_diagonal_generators(p), order_cap);
}

GroupTable conjugated_D(const DParams& p, std::size_t order_cap) {
  validate(p);
  const auto g = derived_generators(p.d, p.r, p.s);
  return close({g.A, g.B * make_E(), make_F(p.n, p.a, p.b), g.G}, order_cap);
}

bool split_check(const GroupTable& conjugated) {
  const MonomialElement E = make_E();
  const MonomialElement G = derived_generators(2, 1, 1).G;
  const std::array<MonomialElement, 6> s3{MonomialElement{}, E, E * E, G, E * G, E * E * G};

  std::array<bool, 6> coset_hit{};
  for (const auto& x : s3) {
    if (!conjugated.contains(x))
      return false;
    for (const auto& y : s3) {
      const auto xy = x * y;
      if (std::find(s3.begin(), s3.end(), xy) == s3.end())
        return false;
    }
    if (x.is_diagonal() && !x.is_identity())
      return false;
    coset_hit[static_cast<std::size_t>(x.perm().index())] = true;
  }
  // Non-abelian of order 6.
  if (E * G == G * E)
    return false;
  for (bool hit : coset_hit)
    if (!hit)
      return false;
  return true;
}

DStructure classify_D(const DParams& params, std::size_t order_cap) {
  validate(params);
  DStructure ds;
  ds.params = params;

  const GroupTable diag = diagonal_subgroup_A(params, order_cap);
  ds.diagonal = abelian_structure(diag);
  ds.p = ds.diagonal.m;
  ds.q = ds.diagonal.n;
  ds.order = 6 * ds.p * ds.q;

  const GroupTable conj = conjugated_D(params, order_cap);
  const GroupTable original = build_D(params, order_cap);
  ds.closure_order = static_cast<std::int64_t>(original.order());
  if (ds.closure_order != ds.order || conj.order() != original.order())
    throw std::logic_error("order 6pq disagrees with closure for a D-group");

  const auto map = perm_part_epimorphism(conj);
  if (!map.image_is_full_s3())
    throw std::logic_error("permutation image of a D-group is not S3");
  if (map.kernel_order != diag.order())
    throw std::logic_error("diagonal subgroup differs from the permutation kernel");
  for (const auto& x : conj.elements())
    if (x.is_diagonal() && !diag.contains(x))
      throw std::logic_error("diagonal subgroup differs from the permutation kernel");

  ds.s3_split = split_check(conj);
  ds.c_subgroup_order = static_cast<std::int64_t>(build_C(params.n, params.a, params.b, order_cap).order());
  ds.extends_c_trivially = ds.closure_order == 2 * ds.c_subgroup_order;
  return ds;
}

} // namespace su3
