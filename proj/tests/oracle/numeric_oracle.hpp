#pragma once

// Brute-force numeric engine used only by the tests. It shares no code path
// with the exact engine: generators are built from their matrix formulas in
// double precision, and group invariants are computed from explicit Cayley
// tables.

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "su3/group.hpp"

namespace su3::oracle {

using NumericMatrix = Eigen::Matrix3cd;

class UnstableDedup : public std::runtime_error {
public:
  UnstableDedup() : std::runtime_error("two distinct numeric elements closer than 10 eps") {}
};

class OracleCapExceeded : public std::runtime_error {
public:
  OracleCapExceeded() : std::runtime_error("numeric closure exceeded cap") {}
};

NumericMatrix E();
NumericMatrix F(std::int64_t n, std::int64_t a, std::int64_t b);
NumericMatrix Gtilde(std::int64_t d, std::int64_t r, std::int64_t s);
NumericMatrix omega_scalar();
NumericMatrix diag_phases(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c);

bool is_special_unitary(const NumericMatrix& m, double tol = 1e-9);

struct NumericClosure {
  std::vector<NumericMatrix> elements;
  std::size_t count() const { return elements.size(); }
};

/// Product closure with entrywise dedup on an eps grid; eps in [1e-12, 1e-6].
NumericClosure numeric_close(const std::vector<NumericMatrix>& generators, double eps = 1e-8,
                             std::size_t cap = 200000);

/// True iff every exact element maps to exactly one numeric element within
/// eps and the counts agree.
bool same_element_sets(const std::vector<NumericMatrix>& exact_images, const NumericClosure& numeric,
                       double eps = 1e-8);

/// A finite group given by its full multiplication table; element 0 is the
/// identity.
struct CayleyTable {
  std::vector<std::vector<int>> mul;
  int size() const { return static_cast<int>(mul.size()); }
};

CayleyTable cayley_table(const NumericClosure& g, double eps = 1e-8);

/// Closure of permutations of {0..k-1} (composition as functions).
CayleyTable permutation_group(const std::vector<std::vector<int>>& generators);

/// (Z_n x Z_n) : Z3 with Z3 acting by (x, y) -> (y, -x - y).
CayleyTable z_n_squared_by_z3(int n);

/// Z_m x Z_n.
CayleyTable cyclic_product(int m, int n);

/// Order, element-order histogram, center, derived subgroup and
/// abelianization invariants, all by brute force over the table.
GroupFingerprint table_fingerprint(const CayleyTable& t);

OrderHistogram table_histogram(const CayleyTable& t);

} // namespace su3::oracle
