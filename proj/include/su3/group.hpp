#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "su3/monomial.hpp"

namespace su3 {

inline constexpr std::size_t default_order_cap_value = 1'000'000;

/// The element cap used when none is given: `SU3_ORDER_CAP` from the
/// environment if set and valid, otherwise 10^6.
std::size_t default_order_cap();

/// A finite group of monomial matrices, closed under multiplication.
///
/// Elements are stored in breadth-first discovery order, which depends only on
/// the generator list. The table is immutable once built.
class GroupTable {
public:
  const std::vector<MonomialElement>& generators() const { return generators_; }
  const std::vector<MonomialElement>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  bool contains(const MonomialElement& x) const { return index_.contains(x); }

  /// Position of x in `elements()`; x must be contained.
  std::size_t index_of(const MonomialElement& x) const { return index_.at(x); }

  friend GroupTable close(std::span<const MonomialElement> generators, std::size_t order_cap);

private:
  std::vector<MonomialElement> generators_;
  std::vector<MonomialElement> elements_;
  std::unordered_map<MonomialElement, std::size_t> index_;
};

/// Breadth-first closure of `generators` under left multiplication.
/// Throws CapExceeded if the group would hold more than `order_cap` elements.
GroupTable close(std::span<const MonomialElement> generators, std::size_t order_cap);

inline GroupTable close(std::initializer_list<MonomialElement> generators,
                        std::size_t order_cap = default_order_cap()) {
  return close(std::span<const MonomialElement>(generators.begin(), generators.size()), order_cap);
}

inline GroupTable close(const std::vector<MonomialElement>& generators,
                        std::size_t order_cap = default_order_cap()) {
  return close(std::span<const MonomialElement>(generators), order_cap);
}

/// The subgroup generated by `elements`, with a small generating set picked
/// greedily in input order (each pick at least doubles the order).
GroupTable generated_subgroup(std::span<const MonomialElement> elements,
                              std::size_t order_cap = default_order_cap());

/// Elements of `group` with identity permutation part, as a group.
GroupTable diagonal_part(const GroupTable& group);

/// Normal closure in `group` of the commutators of its generators.
GroupTable derived_subgroup(const GroupTable& group);

/// Elements commuting with every generator.
GroupTable center(const GroupTable& group);

/// Element order -> number of elements of that order.
using OrderHistogram = std::map<std::int64_t, std::int64_t>;

OrderHistogram element_order_histogram(const GroupTable& group);

/// Throws SubNotContained unless every element of `sub` lies in `group`.
bool is_normal(const GroupTable& group, const GroupTable& sub);

/// The homomorphism x -> perm(x) onto a subgroup of S3.
struct PermPartMap {
  std::vector<int> labels;       // S3 label (Perm3::index) of each element, aligned with elements()
  std::vector<Perm3> image;      // distinct permutations hit, sorted by label
  std::size_t kernel_order = 0;  // number of diagonal elements

  bool image_is_full_s3() const { return image.size() == 6; }
};

PermPartMap perm_part_epimorphism(const GroupTable& group);

/// Isomorphism invariants. Different fingerprints prove two groups are not
/// isomorphic; equal fingerprints do not certify isomorphism.
struct GroupFingerprint {
  std::int64_t order = 0;
  OrderHistogram histogram;
  std::int64_t center_order = 0;
  std::int64_t derived_order = 0;
  std::vector<std::int64_t> abelianization;  // invariant factors d1 | d2 | ..., all > 1

  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
  friend bool operator<(const GroupFingerprint& a, const GroupFingerprint& b);
};

GroupFingerprint fingerprint(const GroupTable& group);

/// Invariant factors of a finite abelian group from its element-order
/// histogram (which determines the group up to isomorphism).
std::vector<std::int64_t> invariant_factors_from_histogram(const OrderHistogram& histogram);

/// Compact single-line rendering, e.g. "36|1:1,2:3,3:26,6:6|3|4|3".
std::string to_string(const GroupFingerprint& fp);

} // namespace su3
