#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zdposet/errors.hpp"
#include "zdposet/index_set.hpp"

namespace zdp {

/// A down-closed subset of a poset. Values are produced by the poset
/// operations below; `is_ideal` validates hand-made ones.
class IdealSet {
public:
  IdealSet() = default;
  explicit IdealSet(ElementSet members) : members_(members) {}

  ElementSet members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(ElementId x) const { return members_.contains(x); }
  bool subset_of(const IdealSet &o) const { return members_.subset_of(o.members_); }
  bool proper_subset_of(const IdealSet &o) const { return members_.proper_subset_of(o.members_); }

  auto operator<=>(const IdealSet &) const = default;

private:
  ElementSet members_;
};

/// Arbitrary subset of the element universe.
using SubsetOfP = ElementSet;

/// Finite poset with least element. The least element always sits at index
/// 0; the order is stored fully closed as per-element down-sets and up-sets.
class Poset {
public:
  static constexpr ElementId zero = 0;

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string> &labels() const { return labels_; }
  const std::string &label(ElementId x) const { return labels_.at(x); }

  /// Index of a label, or throws UnknownLabelError.
  ElementId find(std::string_view label) const;

  bool leq(ElementId x, ElementId y) const { return down_[y].contains(x); }
  ElementSet down(ElementId x) const { return down_[x]; }
  ElementSet up(ElementId x) const { return up_[x]; }
  ElementSet ann_mask(ElementId x) const { return ann_[x]; }

  ElementSet universe() const { return ElementSet::first(size()); }
  /// P^x, everything except the least element.
  ElementSet nonzero() const { return universe() - ElementSet::single(zero); }

  /// Pairs (x, y) with x covered by y, sorted.
  std::vector<std::pair<ElementId, ElementId>> covers() const;

  bool operator==(const Poset &o) const { return labels_ == o.labels_ && down_ == o.down_; }

  /// Builds from a fully closed relation given as down-sets (down[i] holds
  /// every j <= i). Validates reflexivity, transitivity, antisymmetry and the
  /// least element, then moves the least element to index 0.
  static Poset from_down_sets(std::vector<std::string> labels, std::vector<ElementSet> down);

private:
  Poset() = default;

  std::vector<std::string> labels_;
  std::vector<ElementSet> down_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> ann_;
};

/// Reflexive-transitive closure of `generators` (pairs a < b by label).
Poset build_poset(std::vector<std::string> labels,
                  const std::vector<std::pair<std::string, std::string>> &generators);

/// L(x, y), the common lower bounds of x and y.
IdealSet lower_cone(const Poset &p, ElementId x, ElementId y);
/// (x].
IdealSet down_set(const Poset &p, ElementId x);
/// Min(Q). Throws EmptySubsetError on an empty Q.
SubsetOfP minimal_elements(const Poset &p, SubsetOfP q);
/// ann(x) = {y : L(x, y) = {0}}. ann(0) is all of P.
IdealSet annihilator(const Poset &p, ElementId x);
/// Z(P)^x, the non-zero zero-divisors.
SubsetOfP zero_divisors(const Poset &p);

bool is_ideal(const Poset &p, SubsetOfP s);
bool is_prime_ideal(const Poset &p, SubsetOfP s);

/// Brute-force caps. ZDPOSE_ORACLE_CAP, when set to a positive integer,
/// overrides both.
struct OracleCaps {
  std::size_t ideal_elements = 16;
  std::size_t graph_vertices = 12;
};
OracleCaps oracle_caps();

/// Every ideal of P, sorted by bitmask. Throws OracleCapExceeded when |P| is
/// above `cap`.
std::vector<IdealSet> enumerate_ideals(const Poset &p, std::size_t cap);
std::vector<IdealSet> enumerate_ideals(const Poset &p);

/// "{a,b,c}" using the poset's labels.
std::string format_set(const Poset &p, ElementSet s);

} // namespace zdp
