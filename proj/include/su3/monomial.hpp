#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <numbers>

#include <Eigen/Dense>

namespace su3 {

/// A permutation of the row indices {0, 1, 2}. `image(i)` is the column that
/// holds the nonzero entry of row i.
class Perm3 {
public:
  constexpr Perm3() : images_{0, 1, 2} {}
  constexpr Perm3(int i0, int i1, int i2)
    : images_{static_cast<std::uint8_t>(i0), static_cast<std::uint8_t>(i1),
              static_cast<std::uint8_t>(i2)} {}

  constexpr int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }

  constexpr bool is_identity() const { return images_[0] == 0 && images_[1] == 1 && images_[2] == 2; }

  constexpr bool is_odd() const {
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        inversions += (*this)(i) > (*this)(j);
    return inversions % 2 == 1;
  }

  /// Lexicographic index in [0, 6); used as the S3 label of a permutation.
  constexpr int index() const {
    constexpr int factorial[] = {2, 1, 1};
    int idx = 0;
    for (int i = 0; i < 3; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < 3; ++j)
        smaller += (*this)(j) < (*this)(i);
      idx += smaller * factorial[i];
    }
    return idx;
  }

  static constexpr Perm3 from_index(int idx) {
    constexpr Perm3 all[] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    return all[idx];
  }

  /// `then(other)(i) == other(this(i))`.
  constexpr Perm3 then(Perm3 other) const { return {other(images_[0]), other(images_[1]), other(images_[2])}; }

  constexpr Perm3 inverse() const {
    Perm3 r;
    for (int i = 0; i < 3; ++i)
      r.images_[images_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
    return r;
  }

  friend constexpr bool operator==(Perm3, Perm3) = default;

private:
  std::array<std::uint8_t, 3> images_;
};

/// Largest modulus accepted for the root-of-unity lattice.
inline constexpr std::int64_t max_modulus = 2147483647;

/// A 3x3 monomial matrix whose nonzero entries are L-th roots of unity.
///
/// Row i carries zeta_L^exps[i] in column perm(i). Values are stored in
/// canonical form: L is the smallest modulus under which all exponents are
/// integral, so equality and hashing are plain field comparisons.
///
/// Every named SU(3) generator has determinant one. The general constructor
/// also admits other determinants because some representations studied here
/// (the 3_1(l) family) use a det = -1 transposition matrix; see
/// `is_special_unitary`.
class MonomialElement {
public:
  /// The identity matrix.
  MonomialElement() = default;

  /// Throws ParameterError if `modulus` is not in [1, max_modulus].
  MonomialElement(Perm3 perm, std::array<std::int64_t, 3> exps, std::int64_t modulus);

  static MonomialElement identity() { return {}; }
  static MonomialElement diagonal(std::array<std::int64_t, 3> exps, std::int64_t modulus) {
    return {Perm3{}, exps, modulus};
  }

  Perm3 perm() const { return perm_; }
  const std::array<std::int64_t, 3>& exps() const { return exps_; }
  std::int64_t modulus() const { return modulus_; }

  /// Exponents rescaled to a multiple of the canonical modulus.
  std::array<std::int64_t, 3> exps_at(std::int64_t modulus) const;

  bool is_diagonal() const { return perm_.is_identity(); }
  bool is_identity() const { return is_diagonal() && modulus_ == 1; }

  friend bool operator==(const MonomialElement&, const MonomialElement&) = default;

private:
  void canonicalize();

  Perm3 perm_{};
  std::array<std::int64_t, 3> exps_{0, 0, 0};
  std::int64_t modulus_ = 1;
};

MonomialElement multiply(const MonomialElement& lhs, const MonomialElement& rhs);
MonomialElement inverse(const MonomialElement& x);
MonomialElement power(const MonomialElement& x, std::int64_t k);

/// g^-1 x g
MonomialElement conjugate(const MonomialElement& x, const MonomialElement& g);

/// x^-1 y^-1 x y
MonomialElement commutator(const MonomialElement& x, const MonomialElement& y);

inline MonomialElement operator*(const MonomialElement& lhs, const MonomialElement& rhs) {
  return multiply(lhs, rhs);
}

std::int64_t element_order(const MonomialElement& x);

/// True iff the matrix has determinant exactly one.
bool is_special_unitary(const MonomialElement& x);

std::ostream& operator<<(std::ostream& os, const MonomialElement& x);

// Generators of the (C) and (D) series.

/// Cyclic permutation matrix with E(0,1) = E(1,2) = E(2,0) = 1.
MonomialElement make_E();

/// diag(eta^a, eta^b, eta^(-a-b)), eta = exp(2 pi i / n). Requires n >= 1, 0 <= a,b < n.
MonomialElement make_F(std::int64_t n, std::int64_t a, std::int64_t b);

/// [[delta^r, 0, 0], [0, 0, delta^s], [0, -delta^(-r-s), 0]], delta = exp(2 pi i / d).
MonomialElement make_Gtilde(std::int64_t d, std::int64_t r, std::int64_t s);

/// The scalar omega * 1 with omega = exp(2 pi i / 3), built in the lattice of
/// modulus L (requires 3 | L). The stored value is canonical, hence modulus 3.
MonomialElement make_scalar_omega(std::int64_t L = 3);

/// Exact matrix as complex numbers.
template <typename Scalar = double>
Eigen::Matrix<std::complex<Scalar>, 3, 3> to_complex(const MonomialElement& x) {
  using Complex = std::complex<Scalar>;
  Eigen::Matrix<std::complex<Scalar>, 3, 3> m = Eigen::Matrix<Complex, 3, 3>::Zero();
  const Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
  for (int i = 0; i < 3; ++i) {
    const auto e = x.exps()[static_cast<std::size_t>(i)];
    m(i, x.perm()(i)) = std::polar(Scalar(1), two_pi * Scalar(e) / Scalar(x.modulus()));
  }
  return m;
}

// Small integer helpers shared across the library.
std::int64_t mod(std::int64_t x, std::int64_t m);
std::int64_t lcm_checked(std::int64_t a, std::int64_t b);

} // namespace su3

template <>
struct std::hash<su3::MonomialElement> {
  std::size_t operator()(const su3::MonomialElement& x) const noexcept;
};
