#include "zdposet/annihilators.hpp"

#include <algorithm>

#include "zdposet/graph.hpp"

namespace zdp {

std::vector<IdealSet> AnnFamily::b_view() const {
  std::vector<IdealSet> out;
  for (const auto &e : entries)
    if (e.in_b)
      out.push_back(e.ann);
  return out;
}

AnnFamily ann_family(const Poset &p) {
  if (p.size() < 2)
    throw TrivialPosetError();
  AnnFamily f;
  const ElementSet bottom = ElementSet::single(Poset::zero);
  for (auto x : p.nonzero()) {
    const ElementSet ann = p.ann_mask(x);
    auto it = std::find_if(f.entries.begin(), f.entries.end(),
                           [&](const AnnEntry &e) { return e.ann.members() == ann; });
    if (it == f.entries.end())
      f.entries.push_back(AnnEntry{IdealSet(ann), ElementSet::single(x), ann != bottom});
    else
      it->witnesses.insert(x);
  }
  const std::size_t m = f.entries.size();
  f.included.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      f.included[i][j] = f.entries[i].ann.subset_of(f.entries[j].ann);
  return f;
}

std::vector<IdealSet> maximal_annihilators(const AnnFamily &family) {
  std::vector<IdealSet> out;
  const std::size_t m = family.entries.size();
  for (std::size_t i = 0; i < m; ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < m && maximal; ++j)
      maximal = j == i || !family.included[i][j];
    if (maximal)
      out.push_back(family.entries[i].ann);
  }
  return out;
}

std::vector<IdealSet> maximal_annihilators(const Poset &p) {
  return maximal_annihilators(ann_family(p));
}

std::vector<IdealSet> annihilator_primes(const Poset &p) {
  if (zero_divisors(p).empty())
    throw NoZeroDivisorsError();
  return maximal_annihilators(ann_family(p));
}

std::vector<IdealSet> annihilator_primes_bruteforce(const Poset &p, std::size_t cap) {
  if (p.size() > cap)
    throw OracleCapExceeded("prime oracle capped at " + std::to_string(cap) +
                            " elements, poset has " + std::to_string(p.size()));
  std::vector<IdealSet> out;
  for (auto x : p.nonzero()) {
    const IdealSet ann = annihilator(p, x);
    if (std::find(out.begin(), out.end(), ann) != out.end())
      continue;
    if (is_prime_ideal(p, ann.members()))
      out.push_back(ann);
  }
  return out;
}

std::vector<IdealSet> annihilator_primes_bruteforce(const Poset &p) {
  return annihilator_primes_bruteforce(p, oracle_caps().ideal_elements);
}

PrimeSignature prime_signature(const Poset &p, ElementId x, const std::vector<IdealSet> &primes) {
  if (x >= p.size() || !zero_divisors(p).contains(x))
    throw NotAZeroDivisorError("element is not a non-zero zero-divisor");
  PrimeSignature s;
  s.subject = x;
  const IdealSet ann = annihilator(p, x);
  for (const auto &q : primes)
    if (ann.subset_of(q))
      s.signature.push_back(q);
  return s;
}

PrimeSignature prime_signature(const Poset &p, ElementId x) {
  return prime_signature(p, x, annihilator_primes(p));
}

BoundReport verify_cardinality_bound(const Poset &p) {
  BoundReport r;
  r.vertices = ann_classes(p).size();
  r.primes = annihilator_primes(p).size();
  r.limit = (std::uint64_t{1} << r.primes) - 2;
  r.tight = r.vertices == r.limit;
  return r;
}

ChainReport acc_chain_profile(const Poset &p) {
  const AnnFamily f = ann_family(p);
  const std::size_t m = f.entries.size();
  // Strict inclusion implies strictly larger size, so sizes give a
  // topological order for the longest-path recurrence.
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i)
    order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return f.entries[a].ann.size() < f.entries[b].ann.size();
  });
  std::vector<std::size_t> best(m, 1), prev(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < a; ++b) {
      const std::size_t i = order[a], j = order[b];
      if (f.entries[j].ann.proper_subset_of(f.entries[i].ann) && best[j] + 1 > best[i]) {
        best[i] = best[j] + 1;
        prev[i] = j;
      }
    }
  std::size_t top = order[0];
  for (auto i : order)
    if (best[i] > best[top])
      top = i;
  ChainReport r;
  r.length = best[top];
  for (std::size_t i = top; i != m; i = prev[i])
    r.witness.push_back(f.entries[i].ann);
  std::reverse(r.witness.begin(), r.witness.end());
  return r;
}

} // namespace zdp
