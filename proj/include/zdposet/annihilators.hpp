#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "zdposet/poset.hpp"

namespace zdp {

/// One distinct annihilator and every non-zero element that has it.
struct AnnEntry {
  IdealSet ann;
  ElementSet witnesses;
  /// In 𝔅, i.e. the witnesses are zero-divisors (ann != {0}).
  bool in_b = false;
};

/// 𝔄 = {ann(x) : x in P^x}, deduplicated and ordered by smallest witness.
struct AnnFamily {
  std::vector<AnnEntry> entries;
  /// included[i][j]: entries[i].ann ⊆ entries[j].ann.
  std::vector<std::vector<bool>> included;

  std::vector<IdealSet> b_view() const;
};

/// Throws TrivialPosetError when |P| = 1.
AnnFamily ann_family(const Poset &p);

/// Max(𝔄). Never empty.
std::vector<IdealSet> maximal_annihilators(const Poset &p);
std::vector<IdealSet> maximal_annihilators(const AnnFamily &family);

/// Ann(P) computed as Max(𝔄). Throws NoZeroDivisorsError.
std::vector<IdealSet> annihilator_primes(const Poset &p);

/// Ann(P) straight from the definition: the prime ideals among ann(x).
/// Throws OracleCapExceeded when |P| is above `cap`.
std::vector<IdealSet> annihilator_primes_bruteforce(const Poset &p, std::size_t cap);
std::vector<IdealSet> annihilator_primes_bruteforce(const Poset &p);

/// S_x: the annihilator primes containing ann(x), in Ann(P) order.
struct PrimeSignature {
  ElementId subject = 0;
  std::vector<IdealSet> signature;
};

/// Throws NotAZeroDivisorError when x is not in Z(P)^x.
PrimeSignature prime_signature(const Poset &p, ElementId x);
PrimeSignature prime_signature(const Poset &p, ElementId x, const std::vector<IdealSet> &primes);

struct BoundReport {
  std::size_t vertices = 0; ///< |V(Γ_E)|
  std::size_t primes = 0;   ///< |Ann(P)|
  std::uint64_t limit = 0;  ///< 2^|Ann(P)| - 2
  bool tight = false;
  bool holds() const { return vertices <= limit; }
};
BoundReport verify_cardinality_bound(const Poset &p);

/// Longest strictly ascending chain in 𝔄, smallest ideal first.
struct ChainReport {
  std::size_t length = 0;
  std::vector<IdealSet> witness;
};
ChainReport acc_chain_profile(const Poset &p);

} // namespace zdp
