#include "zdposet/theorems.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <thread>

#include "zdposet/annihilators.hpp"
#include "zdposet/generators.hpp"
#include "zdposet/graph.hpp"
#include "zdposet/poset_text.hpp"

namespace zdp {

const char *to_string(Status s) {
  switch (s) {
  case Status::pass:
    return "pass";
  case Status::fail:
    return "fail";
  case Status::not_applicable:
    return "not_applicable";
  }
  return "?";
}

const std::vector<std::string> &check_names() {
  static const std::vector<std::string> names = {
      "fact_3_1",    "prop_3_2",    "prop_3_3",    "cor_3_4",
      "prop_3_5",    "cor_3_6",     "cor_3_7",     "cor_3_8",
      "prop_4_2",    "lemma_4_3_a", "lemma_4_3_b", "lemma_4_3_c",
      "lemma_4_3_d", "lemma_4_3_e", "prop_4_4_a",  "prop_4_4_b",
      "prop_4_4_c",  "prop_4_5",    "prop_4_7",    "prop_4_8",
      "cor_4_9",     "prop_4_10",   "prop_4_11",   "cor_4_12",
      "prop_4_13",   "sanity_connectivity", "sanity_diam_le_3",
      "sanity_girth_trichotomy"};
  return names;
}

namespace {

Verdict pass() { return {}; }

Verdict fail(std::vector<std::string> witness) {
  if (witness.size() > 4)
    witness.resize(4);
  return Verdict{Status::fail, std::move(witness), {}};
}

Verdict not_applicable(std::string reason) {
  return Verdict{Status::not_applicable, {}, std::move(reason)};
}

std::string show(const Length &l) { return l ? std::to_string(*l) : std::string("inf"); }

using DistanceTable = std::vector<std::vector<Length>>;

DistanceTable all_distances(const ZdGraph &g) {
  DistanceTable d(g.size(), std::vector<Length>(g.size()));
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = 0; v < g.size(); ++v)
      d[u][v] = distance(g, u, v);
  return d;
}

// Everything the checks share, computed once.
struct Context {
  const Poset &p;
  ElementSet zd;
  ZdGraph g;
  ZdGraph e;
  std::vector<AnnClass> classes;
  std::array<std::size_t, kMaxIndex> g_vertex{};
  std::array<std::size_t, kMaxIndex> class_of{};
  std::vector<IdealSet> primes;
  /// Class index of each prime, or classes.size() if it matches no class.
  std::vector<std::size_t> prime_class;
  std::vector<bool> class_is_prime;
  DistanceTable g_dist, e_dist;
  Length g_diam, e_diam, g_girth, e_girth;
  ShapeReport g_shape, e_shape;

  explicit Context(const Poset &poset)
      : p(poset), zd(zero_divisors(poset)), g(gamma(poset)), e(gamma_e(poset)),
        classes(ann_classes(poset)), primes(annihilator_primes(poset)) {
    std::size_t k = 0;
    for (auto x : zd)
      g_vertex[x] = k++;
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (auto x : classes[c].members)
        class_of[x] = c;
    class_is_prime.assign(classes.size(), false);
    for (const auto &q : primes) {
      std::size_t c = 0;
      while (c < classes.size() && classes[c].ann != q)
        ++c;
      prime_class.push_back(c);
      if (c < classes.size())
        class_is_prime[c] = true;
    }
    g_dist = all_distances(g);
    e_dist = all_distances(e);
    g_diam = diameter(g);
    e_diam = diameter(e);
    g_girth = girth(g);
    e_girth = girth(e);
    g_shape = classify_shape(g);
    e_shape = classify_shape(e);
  }

  const std::string &label(ElementId x) const { return p.label(x); }
  std::string cls(std::size_t c) const { return "[" + p.label(classes[c].representative) + "]"; }
  std::string ideal(const IdealSet &s) const { return format_set(p, s.members()); }
  ElementId rep(std::size_t c) const { return classes[c].representative; }
  const IdealSet &ann(std::size_t c) const { return classes[c].ann; }
  bool meet_is_zero(ElementId x, ElementId y) const { return p.ann_mask(x).contains(y); }

  std::optional<std::string> unmatched_prime() const {
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (prime_class[i] == classes.size())
        return ideal(primes[i]);
    return std::nullopt;
  }
};

Verdict fact_3_1(const Context &c) {
  for (auto x : c.zd)
    for (auto y : c.zd) {
      if (y <= x)
        continue;
      const bool in_g = c.g.adjacent(c.g_vertex[x], c.g_vertex[y]);
      const std::size_t cx = c.class_of[x], cy = c.class_of[y];
      if (in_g && cx == cy)
        return fail({c.label(x), c.label(y), "adjacent but same class"});
      if (cx != cy && in_g != c.e.adjacent(cx, cy))
        return fail({c.label(x), c.label(y), c.cls(cx), c.cls(cy)});
    }
  return pass();
}

Verdict prop_3_2(const Context &c) {
  for (auto x : c.zd)
    for (auto y : c.zd) {
      const std::size_t cx = c.class_of[x], cy = c.class_of[y];
      if (cx == cy)
        continue;
      const Length dg = c.g_dist[c.g_vertex[x]][c.g_vertex[y]];
      const Length de = c.e_dist[cx][cy];
      if (dg != de)
        return fail({c.label(x), c.label(y), "dist_gamma=" + show(dg), "dist_gammaE=" + show(de)});
    }
  const std::string diams = "diam_gamma=" + show(c.g_diam);
  const std::string diams_e = "diam_gammaE=" + show(c.e_diam);
  if ((c.e_diam == 3u) != (c.g_diam == 3u))
    return fail({"(a)", diams, diams_e});
  // Some non-adjacent pair with distinct annihilators.
  bool distinct_nonadjacent = false;
  for (auto x : c.zd)
    for (auto y : c.zd)
      if (!c.meet_is_zero(x, y) && c.p.ann_mask(x) != c.p.ann_mask(y))
        distinct_nonadjacent = true;
  if ((c.e_diam == 2u) != (c.g_diam == 2u && distinct_nonadjacent))
    return fail({"(b)", diams, diams_e});
  if ((c.e_diam == 1u) != !distinct_nonadjacent)
    return fail({"(c)", diams, diams_e});
  return pass();
}

Verdict prop_3_3(const Context &c) {
  const bool e3 = c.e_girth == 3u;
  const bool g3 = c.g_girth == 3u;
  const bool big = c.e.size() >= 3;
  const std::string w1 = "girth_gamma=" + show(c.g_girth);
  const std::string w2 = "girth_gammaE=" + show(c.e_girth);
  const std::string w3 = "|V(gammaE)|=" + std::to_string(c.e.size());
  if (e3 != g3 || g3 != big)
    return fail({w1, w2, w3});
  if (!c.e_girth.has_value() != (c.e.size() == 2))
    return fail({w2, w3});
  return pass();
}

Verdict cor_3_4(const Context &c) {
  if (c.e_shape.is_cycle && c.e.size() >= 4)
    return fail({"gammaE is a cycle", "|V|=" + std::to_string(c.e.size())});
  return pass();
}

Verdict prop_3_5(const Context &c) {
  for (std::size_t i = 0; i < c.e.size(); ++i)
    for (std::size_t j = i + 1; j < c.e.size(); ++j)
      if (c.e.neighbors(i) == c.e.neighbors(j))
        return fail({c.cls(i), c.cls(j)});
  if (reduce_graph(c.e).size() != c.e.size())
    return fail({"reduce_graph merged vertices of gammaE"});
  return pass();
}

Verdict cor_3_6(const Context &c) {
  if (!c.e_shape.complete_multipartite)
    return not_applicable("hypothesis not met: gammaE is not complete multipartite");
  for (const auto &part : *c.e_shape.complete_multipartite)
    if (part.size() != 1)
      return fail({c.cls(part.min()), "part of size " + std::to_string(part.size())});
  if (!c.e_shape.is_complete)
    return fail({"multipartite with singleton parts but not complete"});
  return pass();
}

Verdict cor_3_7(const Context &c) {
  if (c.e.size() < 3)
    return not_applicable("hypothesis not met: |V(gammaE)| < 3");
  if (c.e_shape.is_star)
    return fail({"gammaE is a star", "|V|=" + std::to_string(c.e.size())});
  return pass();
}

Verdict cor_3_8(const Context &c) {
  if (c.e.size() != 3)
    return not_applicable("hypothesis not met: |V(gammaE)| != 3");
  if (!c.e_shape.is_complete)
    return fail({"gammaE on 3 vertices is not K3", "edges=" + std::to_string(c.e.edge_count())});
  return pass();
}

Verdict prop_4_2(const Context &c) {
  const std::size_t cap = oracle_caps().ideal_elements;
  if (c.p.size() > cap)
    return not_applicable("oracle cap exceeded");
  auto max_route = c.primes;
  auto direct = annihilator_primes_bruteforce(c.p, cap);
  std::sort(max_route.begin(), max_route.end());
  std::sort(direct.begin(), direct.end());
  if (max_route == direct)
    return pass();
  for (const auto &q : max_route)
    if (std::find(direct.begin(), direct.end(), q) == direct.end())
      return fail({"maximal but not prime", c.ideal(q)});
  for (const auto &q : direct)
    if (std::find(max_route.begin(), max_route.end(), q) == max_route.end())
      return fail({"prime but not maximal", c.ideal(q)});
  return fail({"Max(A) differs from Ann(P)"});
}

Verdict lemma_4_3_a(const Context &c) {
  for (std::size_t i = 0; i < c.classes.size(); ++i)
    for (std::size_t j = 0; j < c.classes.size(); ++j) {
      const bool by_ann = c.ann(i).proper_subset_of(c.ann(j));
      const bool by_nbd = c.e.neighbors(i).proper_subset_of(c.e.neighbors(j));
      if (by_ann != by_nbd)
        return fail({c.cls(i), c.cls(j)});
    }
  return pass();
}

Verdict lemma_4_3_b(const Context &c) {
  if (auto q = c.unmatched_prime())
    return fail({"prime matches no class", *q});
  for (std::size_t i = 0; i < c.classes.size(); ++i)
    for (auto z : c.prime_class) {
      const bool not_inside = !c.ann(i).subset_of(c.ann(z));
      if (not_inside != c.meet_is_zero(c.rep(i), c.rep(z)))
        return fail({c.cls(i), c.cls(z), "ann containment vs L(x,z)"});
      const bool nbd_inside = c.e.neighbors(i).subset_of(c.e.neighbors(z));
      if (nbd_inside != !c.e.adjacent(i, z))
        return fail({c.cls(i), c.cls(z), "nbd containment vs adjacency"});
    }
  return pass();
}

Verdict lemma_4_3_c(const Context &c) {
  for (std::size_t i = 0; i < c.classes.size(); ++i)
    for (std::size_t j = i; j < c.classes.size(); ++j) {
      const ElementSet both = c.ann(i).members() | c.ann(j).members();
      bool covered = false;
      for (const auto &q : c.primes)
        covered = covered || both.subset_of(q.members());
      if (covered != !c.meet_is_zero(c.rep(i), c.rep(j)))
        return fail({c.cls(i), c.cls(j)});
    }
  return pass();
}

Verdict lemma_4_3_d(const Context &c) {
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    bool found = false;
    for (const auto &q : c.primes)
      found = found || !c.ann(i).subset_of(q);
    if (!found)
      return fail({c.cls(i), "contained in every prime"});
  }
  return pass();
}

Verdict lemma_4_3_e(const Context &c) {
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    if (c.class_is_prime[i])
      continue;
    const ElementSet outside = c.p.universe() - c.ann(i).members();
    bool found = false;
    for (auto u : outside)
      found = found || c.p.ann_mask(u).intersects(outside);
    if (!found)
      return fail({c.cls(i), "no u,v outside ann(x) with L(u,v)={0}"});
  }
  return pass();
}

Verdict prop_4_4_a(const Context &c) {
  if (auto q = c.unmatched_prime())
    return fail({"prime matches no class", *q});
  for (auto a : c.prime_class)
    for (auto b : c.prime_class)
      if (a != b && !c.e.adjacent(a, b))
        return fail({c.cls(a), c.cls(b)});
  return pass();
}

Verdict prop_4_4_b(const Context &c) {
  for (std::size_t z = 0; z < c.e.size(); ++z) {
    const VertexSet rest = c.e.all() - c.e.neighbors(z);
    bool independent = true;
    for (auto v : rest)
      independent = independent && !c.e.neighbors(v).intersects(rest);
    if (independent != c.class_is_prime[z])
      return fail({c.cls(z), c.class_is_prime[z] ? "prime" : "not prime"});
  }
  return pass();
}

Verdict prop_4_4_c(const Context &c) {
  if (c.primes.size() < 2)
    return fail({"|Ann(P)|=" + std::to_string(c.primes.size())});
  for (std::size_t v = 0; v < c.e.size(); ++v) {
    bool found = false;
    for (auto z : c.prime_class)
      found = found || (z < c.e.size() && c.e.adjacent(v, z));
    if (!found)
      return fail({c.cls(v), "adjacent to no prime"});
  }
  return pass();
}

Verdict prop_4_5(const Context &c) {
  const std::size_t wg = clique_number(c.g);
  const std::size_t we = clique_number(c.e);
  const std::size_t a = c.primes.size();
  if (a != wg || wg != we)
    return fail({"|Ann|=" + std::to_string(a), "omega_gamma=" + std::to_string(wg),
                 "omega_gammaE=" + std::to_string(we)});
  if ((a >= 3) != (c.e.size() >= 3))
    return fail({"|Ann|=" + std::to_string(a), "|V(gammaE)|=" + std::to_string(c.e.size())});
  return pass();
}

Verdict prop_4_8(const Context &c) {
  std::size_t top = 0;
  for (std::size_t v = 0; v < c.e.size(); ++v)
    top = std::max(top, degree(c.e, v));
  for (std::size_t v = 0; v < c.e.size(); ++v)
    if (degree(c.e, v) == top && !c.class_is_prime[v])
      return fail({c.cls(v), "degree " + std::to_string(top)});
  return pass();
}

Verdict cor_4_9(const Context &c) {
  if (c.e_shape.is_regular != c.e_shape.is_complete)
    return fail({c.e_shape.is_regular ? "regular, not complete" : "complete, not regular"});
  return pass();
}

Verdict prop_4_10(const Context &c) {
  if (!c.g_shape.is_regular)
    return not_applicable("hypothesis not met: gamma is not regular");
  if (!c.e_shape.is_complete)
    return fail({"gamma regular but gammaE not complete"});
  return pass();
}

Verdict prop_4_11(const Context &c) {
  const std::size_t a = c.primes.size();
  const std::uint64_t limit = (std::uint64_t{1} << a) - 2;
  if (c.e.size() > limit)
    return fail({"|V(gammaE)|=" + std::to_string(c.e.size()), "limit=" + std::to_string(limit)});
  std::vector<std::vector<IdealSet>> seen;
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    auto sig = prime_signature(c.p, c.rep(i), c.primes).signature;
    if (sig.empty() || sig.size() == a)
      return fail({c.cls(i), "signature size " + std::to_string(sig.size())});
    for (std::size_t j = 0; j < seen.size(); ++j)
      if (seen[j] == sig)
        return fail({c.cls(j), c.cls(i), "same signature"});
    seen.push_back(std::move(sig));
  }
  return pass();
}

Verdict prop_4_13(const Context &c) {
  const ElementSet mins = minimal_elements(c.p, c.p.nonzero());
  for (auto x : c.zd)
    if (!c.p.down(x).intersects(mins))
      return fail({c.label(x), "(x] misses Min(P^x)"});
  std::vector<IdealSet> from_mins;
  for (auto z : mins) {
    const IdealSet a = annihilator(c.p, z);
    if (std::find(from_mins.begin(), from_mins.end(), a) == from_mins.end())
      from_mins.push_back(a);
  }
  auto primes = c.primes;
  std::sort(primes.begin(), primes.end());
  std::sort(from_mins.begin(), from_mins.end());
  if (primes != from_mins)
    return fail({"Ann(P) size " + std::to_string(primes.size()),
                 "minimal annihilators " + std::to_string(from_mins.size())});
  return pass();
}

Verdict sanity_connectivity(const Context &c) {
  if (!is_connected(c.g))
    return fail({"gamma disconnected"});
  if (!is_connected(c.e))
    return fail({"gammaE disconnected"});
  return pass();
}

Verdict sanity_diam_le_3(const Context &c) {
  if (!c.g_diam || *c.g_diam > 3)
    return fail({"diam_gamma=" + show(c.g_diam)});
  if (!c.e_diam || *c.e_diam > 3)
    return fail({"diam_gammaE=" + show(c.e_diam)});
  return pass();
}

Verdict sanity_girth_trichotomy(const Context &c) {
  if (c.g_girth && *c.g_girth != 3 && *c.g_girth != 4)
    return fail({"girth_gamma=" + show(c.g_girth)});
  if (c.e_girth && *c.e_girth != 3)
    return fail({"girth_gammaE=" + show(c.e_girth)});
  return pass();
}

Verdict infinite_only(const Context &) { return not_applicable("infinite-only content"); }

using Check = Verdict (*)(const Context &);

const std::map<std::string, Check> &check_table() {
  static const std::map<std::string, Check> table = {
      {"fact_3_1", fact_3_1},
      {"prop_3_2", prop_3_2},
      {"prop_3_3", prop_3_3},
      {"cor_3_4", cor_3_4},
      {"prop_3_5", prop_3_5},
      {"cor_3_6", cor_3_6},
      {"cor_3_7", cor_3_7},
      {"cor_3_8", cor_3_8},
      {"prop_4_2", prop_4_2},
      {"lemma_4_3_a", lemma_4_3_a},
      {"lemma_4_3_b", lemma_4_3_b},
      {"lemma_4_3_c", lemma_4_3_c},
      {"lemma_4_3_d", lemma_4_3_d},
      {"lemma_4_3_e", lemma_4_3_e},
      {"prop_4_4_a", prop_4_4_a},
      {"prop_4_4_b", prop_4_4_b},
      {"prop_4_4_c", prop_4_4_c},
      {"prop_4_5", prop_4_5},
      {"prop_4_7", infinite_only},
      {"prop_4_8", prop_4_8},
      {"cor_4_9", cor_4_9},
      {"prop_4_10", prop_4_10},
      {"prop_4_11", prop_4_11},
      {"cor_4_12", infinite_only},
      {"prop_4_13", prop_4_13},
      {"sanity_connectivity", sanity_connectivity},
      {"sanity_diam_le_3", sanity_diam_le_3},
      {"sanity_girth_trichotomy", sanity_girth_trichotomy},
  };
  return table;
}

} // namespace

TheoremReport check_poset(const Poset &p) {
  TheoremReport r;
  r.poset_id = encode_poset(p);
  if (zero_divisors(p).empty()) {
    for (const auto &name : check_names())
      r.verdicts[name] = not_applicable("no zero-divisors");
    return r;
  }
  const Context ctx(p);
  for (const auto &name : check_names())
    r.verdicts[name] = check_table().at(name)(ctx);
  return r;
}

namespace {

struct Partial {
  std::size_t instances = 0;
  std::map<std::string, CheckCounts> counts;
  std::vector<SweepFailure> failures;
};

void tally(Partial &acc, std::size_t size, std::size_t index, const TheoremReport &r) {
  ++acc.instances;
  for (const auto &[name, v] : r.verdicts) {
    auto &cnt = acc.counts[name];
    switch (v.status) {
    case Status::pass:
      ++cnt.pass;
      break;
    case Status::fail:
      ++cnt.fail;
      acc.failures.push_back(SweepFailure{size, index, r.poset_id, name, v.witness});
      break;
    case Status::not_applicable:
      ++cnt.not_applicable;
      break;
    }
  }
}

} // namespace

SweepSummary sweep(std::size_t max_n, std::size_t workers) {
  if (max_n < 1 || max_n > kEnumerationCap)
    throw CapExceeded("sweep size must be in [1, " + std::to_string(kEnumerationCap) + "], got " +
                      std::to_string(max_n));
  workers = std::max<std::size_t>(workers, 1);

  std::vector<Partial> partials(workers);
  for (std::size_t k = 1; k <= max_n; ++k) {
    const PosetEnumeration e(k);
    constexpr std::size_t chunk = 64;
    std::atomic<std::size_t> next{0};
    auto work = [&](Partial &acc) {
      for (;;) {
        const std::size_t begin = next.fetch_add(chunk);
        if (begin >= e.size())
          return;
        const std::size_t end = std::min(begin + chunk, e.size());
        for (std::size_t i = begin; i < end; ++i)
          tally(acc, k, i, check_poset(e.at(i)));
      }
    };
    if (workers == 1) {
      work(partials[0]);
    } else {
      std::vector<std::jthread> threads;
      for (std::size_t w = 0; w < workers; ++w)
        threads.emplace_back(work, std::ref(partials[w]));
    }
  }

  SweepSummary s;
  s.max_n = max_n;
  for (const auto &name : check_names())
    s.counts[name] = CheckCounts{};
  for (auto &part : partials) {
    s.instances_checked += part.instances;
    for (const auto &[name, cnt] : part.counts) {
      auto &dst = s.counts[name];
      dst.pass += cnt.pass;
      dst.fail += cnt.fail;
      dst.not_applicable += cnt.not_applicable;
    }
    std::move(part.failures.begin(), part.failures.end(), std::back_inserter(s.failures));
  }
  std::sort(s.failures.begin(), s.failures.end(), [](const SweepFailure &a, const SweepFailure &b) {
    return std::tie(a.size, a.index, a.check) < std::tie(b.size, b.index, b.check);
  });
  return s;
}

} // namespace zdp
