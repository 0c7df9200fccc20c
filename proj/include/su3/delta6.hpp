#pragma once

#include <cstdint>
#include <optional>

#include "su3/group.hpp"

namespace su3 {

/// Images of the four Delta(6n^2) generators P, Q, R, S under one of the
/// three-dimensional irreps 3_1(l) (kind 1) or 3_2(l) (kind 2).
///
/// Kind 1 maps Q to a transposition matrix of determinant -1, so that image
/// lies in U(3) rather than SU(3).
struct Delta6Presentation {
  int kind = 1;
  std::int64_t n = 2;
  std::int64_t l = 1;
  MonomialElement P, Q, R, S;
};

/// Requires kind in {1, 2}, n >= 2, 1 <= l <= n-1; throws ParameterError.
Delta6Presentation build_irrep(int kind, std::int64_t n, std::int64_t l);

/// Checks, on the matrices, every defining relation with exponent `order`
/// in place of n:
///   P^3 = Q^2 = (PQ)^2 = 1,  R^order = S^order = 1,  RS = SR,
///   P R P^-1 = R^-1 S^-1,  P S P^-1 = R,  Q R Q^-1 = S^-1,  Q S Q^-1 = R^-1.
bool relations_hold(const Delta6Presentation& rep, std::int64_t order);

struct ImageStructure {
  std::int64_t m = 1;                 // ord(eta^l) = n / gcd(l, n)
  std::int64_t order = 0;             // closure order of the image
  bool relations_hold = false;        // with n replaced by m
  bool matches_delta6 = false;        // order == 6 m^2 and fingerprint equals Delta(6 m^2)
};

ImageStructure image_structure(const Delta6Presentation& rep, std::size_t order_cap = default_order_cap());

/// True iff order / 6 is a positive perfect square, the necessary condition
/// for a group to be some Delta(6 m^2).
bool delta6_image_obstruction(std::int64_t order);

/// The m with order == 6 m^2, if any.
std::optional<std::int64_t> delta6_rank(std::int64_t order);

} // namespace su3
