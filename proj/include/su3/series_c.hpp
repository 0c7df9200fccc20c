#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "su3/abelian.hpp"
#include "su3/group.hpp"

namespace su3 {

/// Which of the three shapes (Z_m x Z_p) : Z3 takes.
enum class CVerdict {
  CyclicSemidirect,  // p == 1: Z_m : Z3
  Delta3m2,          // p == m > 1: Delta(3 m^2)
  Generic,           // 1 < p < m
};

std::string_view to_string(CVerdict v);

struct CStructure {
  std::int64_t n = 1, a = 0, b = 0;
  std::int64_t m = 1, p = 1, t = 0;
  std::int64_t order = 3;
  CVerdict verdict = CVerdict::CyclicSemidirect;
  bool tn_flag = false;
  /// Set only when the group was built (see ClassifyOptions::verify).
  std::optional<bool> z3_split;
  /// Closure order, when the group was built.
  std::optional<std::int64_t> closure_order;

  friend bool operator==(const CStructure&, const CStructure&) = default;
};

/// C(n,a,b) = <E, F(n,a,b)>.
GroupTable build_C(std::int64_t n, std::int64_t a, std::int64_t b,
                   std::size_t order_cap = default_order_cap());

struct ClassifyOptions {
  bool verify = true;  // build the group: cross-check the order, test the Z3 splitting
  std::size_t order_cap = default_order_cap();
};

/// Classification record. With verification on, a disagreement between 3mp
/// and the closure order throws std::logic_error.
CStructure classify_C(std::int64_t n, std::int64_t a, std::int64_t b, const ClassifyOptions& options = {});

/// The diagonal normal subgroup and the complement <E>.
struct CSemidirectWitness {
  GroupTable diagonal;
  GroupTable complement;
  bool normal = false;
  bool trivial_intersection = false;
  bool unique_cover = false;  // every element is d * E^j for exactly one (d, j)

  bool holds() const { return normal && trivial_intersection && unique_cover; }
};

CSemidirectWitness semidirect_witness(std::int64_t n, std::int64_t a, std::int64_t b,
                                      std::size_t order_cap = default_order_cap());

/// True iff omega*1 lies in the group and the group is H x <omega*1> for some
/// normal H: omega*1 must survive in G / <G', g^3>.
bool has_central_z3_splitting(const GroupTable& group);

/// True iff the record describes a T_m group: p == 1 and, after reducing
/// (n,a,b) to the cyclic order m, 1 + A + A^2 = 0 (mod m) for A = y / x over
/// some ordered pair (x, y) of diagonal entries with x a unit.
bool is_Tn(const CStructure& cs);

/// Informational: m is a product of primes 3k+1, or 3 times such a product.
bool tn_prime_shape(std::int64_t m);

/// Builds the image of Delta(3n^2) under the irrep 3_(b,a) (G1 -> E,
/// G2 -> F(n,a,b)) by closing the graph of the homomorphism over the defining
/// representation, and compares it with C(n,a,b) as an element set.
bool delta3_irrep_correspondence(std::int64_t n, std::int64_t a, std::int64_t b,
                                 std::size_t order_cap = default_order_cap());

} // namespace su3
