#pragma once

#include <cstdint>
#include <span>

#include "su3/group.hpp"
#include "su3/monomial.hpp"

namespace su3 {

/// A finite diagonal group written as <gen_m> x <gen_n> with n | m, where m is
/// the largest element order.
struct AbelianStructure {
  std::int64_t m = 1;
  std::int64_t n = 1;
  MonomialElement gen_m;
  MonomialElement gen_n;

  friend bool operator==(const AbelianStructure&, const AbelianStructure&) = default;
};

/// Structure of a closed group of diagonal matrices. The result is verified
/// (histogram against Z_m x Z_n and unique reconstruction from the witnesses);
/// a failed verification throws std::logic_error.
AbelianStructure abelian_structure(const GroupTable& diag);

/// Same, for a raw element set. Throws NotDiagonal or NotClosed.
AbelianStructure abelian_structure(std::span<const MonomialElement> elements);

/// Element-order histogram of the abstract group Z_m x Z_n.
OrderHistogram cyclic_product_histogram(std::int64_t m, std::int64_t n);

/// Order of eta^a in the cyclic group of n-th roots of unity.
std::int64_t root_order(std::int64_t n, std::int64_t a);

/// The (m, p, t) data of <X, Y> with X = F(n,a,b), Y = F(n,b,-a-b):
/// <X, Y> = <X> x <Y X^-t> with orders m and p.
struct TwoGenDecomposition {
  std::int64_t m = 1;
  std::int64_t p = 1;
  std::int64_t t = 0;  // 0 exactly when p == m (trivial intersection)
};

/// Smallest p in 1..m for which some t in 1..m/p-1 solves
///   p (b - a t) = 0 and p (a + b (1 + t)) = 0  (mod n),
/// with t ascending for fixed p. Falls back to p = m, t = 0.
TwoGenDecomposition two_gen_decomposition(std::int64_t n, std::int64_t a, std::int64_t b);

/// The generator pair (X, Y) for C(n,a,b).
std::pair<MonomialElement, MonomialElement> xy_generators(std::int64_t n, std::int64_t a, std::int64_t b);

/// True iff <X> meet <Y> equals both <X^p> and <Y^p>, by enumerating the
/// cyclic groups.
bool intersection_check(const MonomialElement& x, const MonomialElement& y, std::int64_t p);

} // namespace su3
