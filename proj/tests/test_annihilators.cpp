#include "doctest.h"

#include <algorithm>
#include <functional>
#include <set>

#include "oracles.hpp"
#include "zdposet/annihilators.hpp"
#include "zdposet/generators.hpp"
#include "zdposet/graph.hpp"

using namespace zdp;

namespace {

IdealSet ann_of(const Poset &p, const char *label) { return annihilator(p, p.find(label)); }

Poset chain3() { return build_poset({"0", "a", "b"}, {{"0", "a"}, {"a", "b"}}); }

// Longest strictly ascending chain among the distinct annihilators, by
// plain recursion.
std::size_t longest_chain(const Poset &p) {
  std::set<std::uint64_t> family;
  for (std::size_t x = 1; x < p.size(); ++x)
    family.insert(oracle::annihilator(p, x).bits());
  std::function<std::size_t(std::uint64_t)> from = [&](std::uint64_t low) {
    std::size_t best = 1;
    for (auto up : family)
      if (up != low && (low & ~up) == 0)
        best = std::max(best, 1 + from(up));
    return best;
  };
  std::size_t best = 0;
  for (auto a : family)
    best = std::max(best, from(a));
  return best;
}

} // namespace

TEST_CASE("ann_family") {
  const Poset p0 = named_example("p0_trunc", 3);
  const AnnFamily f = ann_family(p0);
  CHECK(f.entries.size() == 2);
  CHECK(f.b_view().size() == 2);
  CHECK(f.entries[0].witnesses == ElementSet{p0.find("{1}")});
  CHECK(f.entries[1].witnesses.size() == 3);

  const AnnFamily c = ann_family(chain3());
  REQUIRE(c.entries.size() == 1);
  CHECK(c.entries[0].ann.members() == ElementSet{Poset::zero});
  CHECK_FALSE(c.entries[0].in_b);
  CHECK(c.b_view().empty());

  const AnnFamily d = ann_family(named_example("deg_counterexample"));
  CHECK(d.b_view().size() == 10);

  const Poset ps = named_example("powerset", 3);
  const AnnFamily pf = ann_family(ps);
  CHECK(pf.entries.size() == 7);
  CHECK(pf.b_view().size() == 6);
  for (std::size_t i = 0; i < pf.entries.size(); ++i)
    for (std::size_t j = 0; j < pf.entries.size(); ++j)
      CHECK(pf.included[i][j] == pf.entries[i].ann.subset_of(pf.entries[j].ann));

  CHECK_THROWS_AS(ann_family(build_poset({"0"}, {})), TrivialPosetError);
}

TEST_CASE("maximal annihilators and primes") {
  const Poset d = named_example("deg_counterexample");
  const auto primes = annihilator_primes(d);
  std::vector<IdealSet> atoms;
  for (const char *a : {"{1}", "{2}", "{3}", "{4}", "{5}", "{6}"})
    atoms.push_back(ann_of(d, a));
  std::sort(atoms.begin(), atoms.end());
  auto sorted = primes;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == atoms);
  CHECK(annihilator_primes_bruteforce(d).size() == 6);

  CHECK(annihilator_primes(named_example("powerset", 3)).size() == 3);

  const Poset v = build_poset({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}});
  const auto vp = annihilator_primes(v);
  REQUIRE(vp.size() == 2);
  for (const auto &q : vp)
    CHECK(is_prime_ideal(v, q.members()));

  CHECK(maximal_annihilators(chain3()).size() == 1);
  CHECK_THROWS_AS(annihilator_primes(chain3()), NoZeroDivisorsError);
  CHECK_THROWS_AS(annihilator_primes_bruteforce(named_example("antichain", 20), 16), OracleCapExceeded);
}

TEST_CASE("prime_signature") {
  const Poset ps = named_example("powerset", 3);
  const auto s = prime_signature(ps, ps.find("{1,2}"));
  CHECK(s.subject == ps.find("{1,2}"));
  std::vector<IdealSet> expect{ann_of(ps, "{1}"), ann_of(ps, "{2}")};
  auto got = s.signature;
  std::sort(got.begin(), got.end());
  std::sort(expect.begin(), expect.end());
  CHECK(got == expect);
  CHECK(prime_signature(ps, ps.find("{3}")).signature == std::vector<IdealSet>{ann_of(ps, "{3}")});

  const Poset d = named_example("deg_counterexample");
  std::vector<IdealSet> dexp{ann_of(d, "{1}"), ann_of(d, "{2}")};
  auto dgot = prime_signature(d, d.find("{1,2}")).signature;
  std::sort(dgot.begin(), dgot.end());
  std::sort(dexp.begin(), dexp.end());
  CHECK(dgot == dexp);

  CHECK_THROWS_AS(prime_signature(ps, ps.find("{1,2,3}")), NotAZeroDivisorError);
  CHECK_THROWS_AS(prime_signature(ps, Poset::zero), NotAZeroDivisorError);
}

TEST_CASE("verify_cardinality_bound") {
  const BoundReport ps = verify_cardinality_bound(named_example("powerset", 3));
  CHECK(ps.vertices == 6);
  CHECK(ps.primes == 3);
  CHECK(ps.limit == 6);
  CHECK(ps.tight);
  CHECK(ps.holds());

  const BoundReport a4 = verify_cardinality_bound(named_example("antichain", 4));
  CHECK(a4.vertices == 4);
  CHECK(a4.limit == 14);
  CHECK_FALSE(a4.tight);

  const BoundReport p0 = verify_cardinality_bound(named_example("p0_trunc", 5));
  CHECK(p0.vertices == 2);
  CHECK(p0.limit == 2);
  CHECK(p0.tight);
}

TEST_CASE("acc_chain_profile") {
  CHECK(acc_chain_profile(named_example("antichain", 3)).length == 1);
  CHECK(acc_chain_profile(chain3()).length == 1);
  const ChainReport ps = acc_chain_profile(named_example("powerset", 3));
  CHECK(ps.length == 3);
  REQUIRE(ps.witness.size() == 3);
  CHECK(ps.witness[0].members() == ElementSet{Poset::zero});
  CHECK(ps.witness[0].proper_subset_of(ps.witness[1]));
  CHECK(ps.witness[1].proper_subset_of(ps.witness[2]));
  CHECK(acc_chain_profile(named_example("deg_counterexample")).length == 2);
}

TEST_CASE("properties over every poset with at most 6 elements") {
  for (std::size_t n = 2; n <= 6; ++n) {
    PosetEnumeration e(n);
    for (std::size_t i = 0; i < e.size(); ++i) {
      const Poset p = e.at(i);
      REQUIRE(acc_chain_profile(p).length == longest_chain(p));
      if (zero_divisors(p).empty())
        continue;
      auto fast = annihilator_primes(p);
      auto slow = annihilator_primes_bruteforce(p);
      std::sort(fast.begin(), fast.end());
      std::sort(slow.begin(), slow.end());
      REQUIRE(fast == slow);

      const BoundReport b = verify_cardinality_bound(p);
      REQUIRE(b.holds());
      REQUIRE(b.vertices == gamma_e(p).size());

      // Distinct classes get distinct, non-empty, non-full signatures.
      std::set<std::vector<IdealSet>> seen;
      for (const auto &c : ann_classes(p)) {
        const auto sig = prime_signature(p, c.representative, fast).signature;
        REQUIRE_FALSE(sig.empty());
        REQUIRE(sig.size() < fast.size());
        REQUIRE(seen.insert(sig).second);
      }
    }
  }
}
