// Acceptance runner: one PASS/FAIL line per criterion, non-zero exit if any
// fails. Every comparison is exact; the only tolerances are the wall-clock
// budgets below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "zdposet/annihilators.hpp"
#include "zdposet/cli.hpp"
#include "zdposet/generators.hpp"
#include "zdposet/graph.hpp"
#include "zdposet/theorems.hpp"

using namespace zdp;

namespace {

constexpr double kExampleBudgetSeconds = 1.0;
constexpr double kSweep5BudgetSeconds = 10.0;
constexpr double kSweep6BudgetSeconds = 600.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string &what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::size_t vertex_of(const Poset &p, const ZdGraph &g, const char *label) {
  const ElementId x = p.find(label);
  for (std::size_t v = 0; v < g.size(); ++v)
    if (const auto *c = std::get_if<AnnClass>(&g.vertex(v)); c && c->members.contains(x))
      return v;
  return g.size();
}

Outcome degree_counterexample() {
  Outcome o;
  const Poset p = named_example("deg_counterexample");
  const ZdGraph e = gamma_e(p);
  o.expect(e.size() == 10, "|V(gamma_E)| = " + std::to_string(e.size()));
  const auto v3 = vertex_of(p, e, "{3}"), v12 = vertex_of(p, e, "{1,2}");
  o.expect(v3 < e.size() && degree(e, v3) == 6, "deg [{3}] != 6");
  o.expect(v12 < e.size() && degree(e, v12) == 7, "deg [{1,2}] != 7");
  o.expect(is_prime_ideal(p, annihilator(p, p.find("{3}")).members()), "ann({3}) not prime");
  o.expect(!is_prime_ideal(p, annihilator(p, p.find("{1,2}")).members()), "ann({1,2}) prime");
  const auto primes = annihilator_primes(p);
  o.expect(primes.size() == 6, "|Ann| = " + std::to_string(primes.size()));
  o.expect(clique_number(gamma(p)) == 6 && clique_number(e) == 6, "omega != 6");
  return o;
}

Outcome power_set() {
  Outcome o;
  const Poset p = named_example("powerset", 3);
  const BoundReport b = verify_cardinality_bound(p);
  o.expect(b.vertices == 6 && b.primes == 3 && b.limit == 6 && b.tight, "bound not tight at 6");
  const ZdGraph g = gamma(p), e = gamma_e(p);
  o.expect(reduce_graph(g).size() == g.size() && e.size() == g.size(), "reduction merged vertices");
  o.expect(diameter(g) == 3u && diameter(e) == 3u, "diameters differ from 3");
  return o;
}

Outcome p0_truncations() {
  Outcome o;
  for (std::size_t k = 2; k <= 6; ++k) {
    const Poset p = named_example("p0_trunc", k);
    o.expect(gamma_e(p).size() == 2, "k=" + std::to_string(k) + ": |V(gamma_E)| != 2");
    o.expect(gamma(p).size() == k + 1, "k=" + std::to_string(k) + ": |V(gamma)| != k+1");
  }
  return o;
}

Outcome antichains() {
  Outcome o;
  for (std::size_t n = 2; n <= 8; ++n) {
    const ZdGraph e = gamma_e(named_example("antichain", n));
    const std::string tag = "n=" + std::to_string(n) + ": ";
    o.expect(e.size() == n && classify_shape(e).is_complete, tag + "not K_n");
    o.expect(girth(e) == (n >= 3 ? Length{3} : Length{}), tag + "wrong girth");
  }
  return o;
}

Outcome timed(Outcome o, Clock::time_point start, double budget) {
  const double t = seconds_since(start);
  if (o.ok && t > budget) {
    o.ok = false;
    o.detail = "took " + std::to_string(t) + " s, budget " + std::to_string(budget) + " s";
  }
  return o;
}

Outcome exhaustive_sweep() {
  Outcome o;
  auto start = Clock::now();
  const SweepSummary s5 = sweep(5, 1);
  const double t5 = seconds_since(start);
  o.expect(s5.failures.empty(), std::to_string(s5.failures.size()) + " failures at n <= 5");
  o.expect(t5 <= kSweep5BudgetSeconds, "n <= 5 took " + std::to_string(t5) + " s");

  start = Clock::now();
  const SweepSummary s6 = sweep(6, 1);
  const double t6 = seconds_since(start);
  o.expect(s6.instances_checked == 1 + 2 + 9 + 76 + 1095 + 25386, "wrong instance count");
  if (!s6.failures.empty())
    o.expect(false, std::to_string(s6.failures.size()) + " failures, first " +
                        s6.failures.front().check + " on " + s6.failures.front().poset);
  o.expect(t6 <= kSweep6BudgetSeconds, "n <= 6 took " + std::to_string(t6) + " s");
  if (o.ok)
    o.detail = "n<=5 " + std::to_string(t5) + " s, n<=6 " + std::to_string(t6) + " s";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t instances = 0;
  const std::size_t graph_cap = oracle_caps().graph_vertices;
  for (std::size_t n = 1; n <= 6 && o.ok; ++n) {
    PosetEnumeration e(n);
    for (std::size_t i = 0; i < e.size() && o.ok; ++i) {
      const Poset p = e.at(i);
      if (zero_divisors(p).empty())
        continue;
      ++instances;
      const std::string tag = "n=" + std::to_string(n) + " #" + std::to_string(i) + ": ";
      auto fast = annihilator_primes(p), slow = annihilator_primes_bruteforce(p);
      std::sort(fast.begin(), fast.end());
      std::sort(slow.begin(), slow.end());
      o.expect(fast == slow, tag + "primes");
      for (const ZdGraph &g : {gamma(p), gamma_e(p)}) {
        if (g.size() > graph_cap)
          continue;
        o.expect(clique_number(g) == oracle::clique_number(g), tag + "clique");
        o.expect(girth(g) == oracle::girth(g), tag + "girth");
        if (g.size() >= 2)
          o.expect(diameter(g) == oracle::diameter(g), tag + "diameter");
      }
    }
  }
  if (o.ok)
    o.detail = std::to_string(instances) + " instances";
  return o;
}

std::string check_output(const std::string &workers) {
  std::istringstream in;
  std::ostringstream out, err;
  run_cli({"check", "--max-size", "6", "--workers", workers, "--json"}, in, out, err);
  return out.str();
}

Outcome determinism() {
  Outcome o;
  const std::string one = check_output("1");
  for (const char *w : {"2", "4", "8"})
    o.expect(check_output(w) == one, std::string("check differs with ") + w + " workers");
  for (std::uint64_t seed : {1u, 7u, 12345u}) {
    std::istringstream in;
    std::ostringstream a, b, err;
    const std::vector<std::string> args{"random", "--size", "20", "--density", "0.35", "--seed",
                                        std::to_string(seed)};
    run_cli(args, in, a, err);
    run_cli(args, in, b, err);
    o.expect(!a.str().empty() && a.str() == b.str(), "random differs for seed " + std::to_string(seed));
    o.expect(random_poset(20, 0.35, seed) == random_poset(20, 0.35, seed), "random_poset differs");
  }
  return o;
}

} // namespace

int main() {
  struct Criterion {
    const char *name;
    std::function<Outcome()> run;
    double budget;
  };
  const Criterion criteria[] = {
      {"1 degree counterexample", degree_counterexample, kExampleBudgetSeconds},
      {"2 power set of {1,2,3}", power_set, kExampleBudgetSeconds},
      {"3 P0 truncations k=2..6", p0_truncations, kExampleBudgetSeconds},
      {"4 antichains n=2..8", antichains, kExampleBudgetSeconds},
      {"5 exhaustive sweep n<=6", exhaustive_sweep, 0.0},
      {"6 oracle equivalence", oracle_equivalence, 0.0},
      {"7 determinism", determinism, 0.0},
  };
  int failed = 0;
  for (const auto &c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (c.budget > 0)
      o = timed(o, start, c.budget);
    std::printf("%s  %s%s%s\n", o.ok ? "PASS" : "FAIL", c.name, o.detail.empty() ? "" : "  ",
                o.detail.c_str());
    failed += o.ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
