#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zdposet/poset.hpp"

namespace zdp {

/// Largest n accepted by the exhaustive enumeration.
inline constexpr std::size_t kEnumerationCap = 7;

/// Names accepted by named_example.
const std::vector<std::string> &example_names();

/// Whether the named example takes a size parameter.
bool example_takes_param(std::string_view name);

/// Builds one of the named posets:
///   antichain(n)         {}, {1}, ..., {n}
///   powerset(n)          all subsets of {1..n} (n <= 6)
///   p0_trunc(k)          {}, {1}, {2}, {2,3}, ..., {2,k+1}
///   deg_counterexample   {}, {1}..{6}, {1,2}, {3,4}, {3,5}, {3,6}
///   remark41_trunc(n)    same poset as antichain(n)
///   bipartite_example    0 < a1 < a2, 0 < b1 < b2 (Γ = K_{2,2})
/// Throws UnknownExampleError or BadParamsError.
Poset named_example(std::string_view name, std::size_t param = 0);

/// Every labelled partial order on n points (labels "0".."n-1") that has a
/// least element, each exactly once, in a fixed order: the bottom label
/// runs 0..n-1 and, for each, the partial orders on the other n-1 labels
/// follow their insertion order. Instances are materialised on demand so
/// disjoint index ranges can go to different workers.
class PosetEnumeration {
public:
  /// Throws CapExceeded unless 1 <= n <= kEnumerationCap.
  explicit PosetEnumeration(std::size_t n);

  std::size_t points() const { return n_; }
  std::size_t size() const { return n_ * tops_.size(); }
  Poset at(std::size_t index) const;

  template <class Fn>
  void for_each(Fn &&fn) const {
    for (std::size_t i = 0; i < size(); ++i)
      fn(at(i));
  }

private:
  std::size_t n_;
  /// Partial orders on n-1 points, as down-sets.
  std::vector<std::vector<ElementSet>> tops_;
};

/// Number of labelled partial orders on m points, by the same insertion
/// enumeration PosetEnumeration uses.
std::size_t count_labeled_posets(std::size_t m);

std::vector<Poset> enumerate_posets_with_zero(std::size_t n);

/// Bottom "0" below a random DAG on "1".."n-1": each pair i < j is kept
/// with probability `density`, then closed. Reproducible for fixed inputs.
Poset random_poset(std::size_t n, double density, std::uint64_t seed);

} // namespace zdp
