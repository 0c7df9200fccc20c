#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "su3/abelian.hpp"
#include "su3/group.hpp"

namespace su3 {

/// Parameters of D(n,a,b;d,r,s).
struct DParams {
  std::int64_t n = 1, a = 0, b = 0;
  std::int64_t d = 1, r = 0, s = 0;

  friend bool operator==(const DParams&, const DParams&) = default;
};

/// Throws ParameterError unless n,d >= 1, 0 <= a,b < n and 0 <= r,s < d.
void validate(const DParams& params);

/// D(n,a,b;d,r,s) = <E, F(n,a,b), Gtilde(d,r,s)>.
GroupTable build_D(const DParams& params, std::size_t order_cap = default_order_cap());

/// Generators derived from Gtilde(d,r,s):
///   A  = Gtilde^2
///   G' = E^2 Gtilde^2 E Gtilde
///   T  = diag(-delta^(-2r-s), -delta^(2r+s), 1)
///   B  = (E G' E)^2
///   G  = [[-1,0,0],[0,0,-1],[0,-1,0]]
/// so that T^-1 G' T = G and T^-1 E T = B E.
struct DGenerators {
  MonomialElement A, Gprime, T, B, G;
};

DGenerators derived_generators(std::int64_t d, std::int64_t r, std::int64_t s);

/// Conjugates of a diagonal element by G', E, E G', E^2, E^2 G' (in that
/// order), i.e. the diagonal entries permuted as (a,c,b), (c,a,b), (c,b,a),
/// (b,c,a), (b,a,c). Throws NotDiagonal.
std::array<MonomialElement, 5> s3_action_table(const MonomialElement& diag,
                                               const MonomialElement& gprime = derived_generators(2, 1, 1).Gprime);

/// The 18 generators of the diagonal subgroup before reduction.
std::vector<MonomialElement> full_diagonal_generators(const DParams& params);

/// The 8 generators left after dropping the redundant conjugates:
/// A, E^-1 A E, B, E^-1 B E, F, E^-1 F E, G^-1 F G, (EG)^-1 F (EG).
std::vector<MonomialElement> reduced_diagonal_generators(const DParams& params);

/// The diagonal normal subgroup, closed from the reduced generator set.
GroupTable diagonal_subgroup_A(const DParams& params, std::size_t order_cap = default_order_cap());

/// The T-conjugated group <A, B E, F, G>.
GroupTable conjugated_D(const DParams& params, std::size_t order_cap = default_order_cap());

/// True iff {1, E, E^2, G, EG, E^2 G} lies in the group, is a subgroup
/// isomorphic to S3, meets the diagonal kernel only in 1 and hits all six
/// cosets of the kernel.
bool split_check(const GroupTable& conjugated);

struct DStructure {
  DParams params;
  std::int64_t p = 1, q = 1;  // diagonal subgroup ~ Z_p x Z_q, q | p
  std::int64_t order = 6;
  bool s3_split = false;
  std::int64_t closure_order = 0;
  std::int64_t c_subgroup_order = 0;  // |C(n,a,b)|
  /// D is C(n,a,b) extended by the transposition only: |D| == 2 |C(n,a,b)|.
  bool extends_c_trivially = false;
  AbelianStructure diagonal;

  friend bool operator==(const DStructure&, const DStructure&) = default;
};

/// Classification record; throws std::logic_error if 6pq disagrees with the
/// closure order or the diagonal subgroup differs from the kernel of the
/// permutation map.
DStructure classify_D(const DParams& params, std::size_t order_cap = default_order_cap());

} // namespace su3
