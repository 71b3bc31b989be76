#include "zdposet/generators.hpp"

#include <algorithm>
#include <random>

namespace zdp {
namespace {

using Subset = std::uint32_t; // subset of {1, 2, ...}, bit i-1 for i

std::string subset_label(Subset s) {
  std::string out = "{";
  bool first = true;
  for (unsigned i = 1; i <= 32; ++i)
    if (s >> (i - 1) & 1U) {
      if (!first)
        out += ',';
      out += std::to_string(i);
      first = false;
    }
  return out + "}";
}

Subset of(std::initializer_list<unsigned> items) {
  Subset s = 0;
  for (auto i : items)
    s |= Subset{1} << (i - 1);
  return s;
}

/// The given family of sets ordered by inclusion.
Poset inclusion_poset(const std::vector<Subset> &family) {
  std::vector<std::string> labels;
  std::vector<ElementSet> down(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    labels.push_back(subset_label(family[i]));
    for (std::size_t j = 0; j < family.size(); ++j)
      if ((family[j] & ~family[i]) == 0)
        down[i].insert(j);
  }
  return Poset::from_down_sets(std::move(labels), std::move(down));
}

void require_param(std::string_view name, std::size_t value, std::size_t lo, std::size_t hi) {
  if (value < lo || value > hi)
    throw BadParamsError(std::string(name) + " needs a parameter in [" + std::to_string(lo) +
                         ", " + std::to_string(hi) + "], got " + std::to_string(value));
}

} // namespace

const std::vector<std::string> &example_names() {
  static const std::vector<std::string> names = {"antichain",          "powerset",
                                                 "p0_trunc",           "deg_counterexample",
                                                 "remark41_trunc",     "bipartite_example"};
  return names;
}

bool example_takes_param(std::string_view name) {
  return name == "antichain" || name == "powerset" || name == "p0_trunc" ||
         name == "remark41_trunc";
}

Poset named_example(std::string_view name, std::size_t param) {
  if (name == "antichain" || name == "remark41_trunc") {
    require_param(name, param, 1, kMaxIndex - 1);
    std::vector<std::string> labels{"{}"};
    std::vector<std::pair<std::string, std::string>> gens;
    for (std::size_t i = 1; i <= param; ++i) {
      labels.push_back("{" + std::to_string(i) + "}");
      gens.emplace_back("{}", labels.back());
    }
    return build_poset(std::move(labels), gens);
  }
  if (name == "powerset") {
    require_param(name, param, 1, 6);
    std::vector<Subset> family;
    for (Subset s = 0; s < (Subset{1} << param); ++s)
      family.push_back(s);
    return inclusion_poset(family);
  }
  if (name == "p0_trunc") {
    require_param(name, param, 1, 31);
    std::vector<Subset> family{0, of({1}), of({2})};
    for (unsigned j = 3; j <= param + 1; ++j)
      family.push_back(of({2, j}));
    return inclusion_poset(family);
  }
  if (name == "deg_counterexample") {
    std::vector<Subset> family{0};
    for (unsigned i = 1; i <= 6; ++i)
      family.push_back(of({i}));
    family.push_back(of({1, 2}));
    family.push_back(of({3, 4}));
    family.push_back(of({3, 5}));
    family.push_back(of({3, 6}));
    return inclusion_poset(family);
  }
  if (name == "bipartite_example") {
    return build_poset({"0", "a1", "a2", "b1", "b2"},
                       {{"0", "a1"}, {"a1", "a2"}, {"0", "b1"}, {"b1", "b2"}});
  }
  throw UnknownExampleError("unknown example '" + std::string(name) + "'");
}

namespace {

using DownSets = std::vector<ElementSet>;

void extend(const DownSets &current, std::size_t m, std::vector<DownSets> &out) {
  const std::size_t k = current.size();
  if (k == m) {
    out.push_back(current);
    return;
  }
  std::vector<ElementSet> up(k);
  for (std::size_t i = 0; i < k; ++i)
    for (auto j : current[i])
      up[j].insert(i);

  const std::size_t subsets = std::size_t{1} << k;
  std::vector<ElementSet> down_closed, up_closed;
  for (std::size_t bits = 0; bits < subsets; ++bits) {
    const ElementSet s(bits);
    bool dc = true, uc = true;
    for (auto x : s) {
      dc = dc && current[x].subset_of(s);
      uc = uc && up[x].subset_of(s);
    }
    if (dc)
      down_closed.push_back(s);
    if (uc)
      up_closed.push_back(s);
  }

  // New point k sits above D and below U; D must lie below all of U.
  for (const auto &below : down_closed)
    for (const auto &above : up_closed) {
      if (below.intersects(above))
        continue;
      bool ok = true;
      for (auto u : above)
        ok = ok && below.subset_of(current[u]);
      if (!ok)
        continue;
      DownSets next = current;
      for (auto u : above)
        next[u].insert(k);
      next.push_back(below | ElementSet::single(k));
      extend(next, m, out);
    }
}

std::vector<DownSets> labeled_posets(std::size_t m) {
  std::vector<DownSets> out;
  extend({}, m, out);
  return out;
}

} // namespace

std::size_t count_labeled_posets(std::size_t m) { return labeled_posets(m).size(); }

PosetEnumeration::PosetEnumeration(std::size_t n) : n_(n) {
  if (n < 1 || n > kEnumerationCap)
    throw CapExceeded("enumeration size must be in [1, " + std::to_string(kEnumerationCap) +
                      "], got " + std::to_string(n));
  tops_ = labeled_posets(n - 1);
}

Poset PosetEnumeration::at(std::size_t index) const {
  const std::size_t bottom = index / tops_.size();
  const DownSets &top = tops_[index % tops_.size()];

  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < n_; ++i)
    if (i != bottom)
      others.push_back(i);

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n_; ++i)
    labels.push_back(std::to_string(i));
  std::vector<ElementSet> down(n_);
  down[bottom] = ElementSet::single(bottom);
  for (std::size_t t = 0; t < top.size(); ++t) {
    ElementSet d = ElementSet::single(bottom);
    for (auto s : top[t])
      d.insert(others[s]);
    down[others[t]] = d;
  }
  return Poset::from_down_sets(std::move(labels), std::move(down));
}

std::vector<Poset> enumerate_posets_with_zero(std::size_t n) {
  PosetEnumeration e(n);
  std::vector<Poset> out;
  out.reserve(e.size());
  e.for_each([&](Poset p) { out.push_back(std::move(p)); });
  return out;
}

Poset random_poset(std::size_t n, double density, std::uint64_t seed) {
  if (n < 1 || n > kMaxIndex)
    throw BadParamsError("random poset size must be in [1, 64]");
  if (!(density >= 0.0 && density <= 1.0))
    throw BadParamsError("density must be in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back(std::to_string(i));
  std::vector<std::pair<std::string, std::string>> gens;
  for (std::size_t i = 1; i < n; ++i)
    gens.emplace_back("0", labels[i]);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      // 53 random bits -> [0, 1), identical on every platform.
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < density)
        gens.emplace_back(labels[i], labels[j]);
    }
  return build_poset(std::move(labels), gens);
}

} // namespace zdp
