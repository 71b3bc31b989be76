#include "zdposet/poset.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>
#include <unordered_map>

namespace zdp {

Poset Poset::from_down_sets(std::vector<std::string> labels, std::vector<ElementSet> down) {
  const std::size_t n = labels.size();
  if (n == 0)
    throw ValidationError("poset has no elements");
  if (n > kMaxIndex)
    throw TooManyElementsError("poset has " + std::to_string(n) + " elements; at most " +
                               std::to_string(kMaxIndex) + " are supported");
  if (down.size() != n)
    throw ValidationError("relation size does not match the label count");
  {
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end())
      throw DuplicateLabelError("duplicate label '" + *dup + "'");
  }

  const ElementSet all = ElementSet::first(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!down[i].subset_of(all))
      throw ValidationError("relation refers to an element outside the poset");
    if (!down[i].contains(i))
      throw ValidationError("relation is not reflexive at '" + labels[i] + "'");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : down[i]) {
      if (!down[j].subset_of(down[i]))
        throw ValidationError("relation is not transitive at '" + labels[i] + "'");
      if (j != i && down[j].contains(i))
        throw CycleError("'" + labels[i] + "' and '" + labels[j] +
                         "' are each below the other");
    }

  std::size_t least = n;
  for (std::size_t i = 0; i < n && least == n; ++i) {
    bool below_all = true;
    for (std::size_t j = 0; j < n && below_all; ++j)
      below_all = down[j].contains(i);
    if (below_all)
      least = i;
  }
  if (least == n)
    throw NoLeastElementError("no element is below all others");

  // new index -> old index, least element first, the rest in given order.
  std::vector<std::size_t> order;
  order.reserve(n);
  order.push_back(least);
  for (std::size_t i = 0; i < n; ++i)
    if (i != least)
      order.push_back(i);
  std::vector<std::size_t> new_index(n);
  for (std::size_t k = 0; k < n; ++k)
    new_index[order[k]] = k;

  Poset p;
  p.labels_.resize(n);
  p.down_.resize(n);
  p.up_.assign(n, ElementSet{});
  for (std::size_t k = 0; k < n; ++k) {
    p.labels_[k] = std::move(labels[order[k]]);
    for (auto j : down[order[k]])
      p.down_[k].insert(new_index[j]);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (auto j : p.down_[k])
      p.up_[j].insert(k);

  const ElementSet bottom = ElementSet::single(zero);
  p.ann_.resize(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if ((p.down_[x] & p.down_[y]) == bottom)
        p.ann_[x].insert(y);
  return p;
}

ElementId Poset::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label)
      return i;
  throw UnknownLabelError("unknown label '" + std::string(label) + "'");
}

std::vector<std::pair<ElementId, ElementId>> Poset::covers() const {
  std::vector<std::pair<ElementId, ElementId>> out;
  for (std::size_t x = 0; x < size(); ++x)
    for (auto y : up_[x]) {
      if (y == x)
        continue;
      // x < y is a cover iff no z with x < z < y.
      const ElementSet between = (up_[x] & down_[y]) - ElementSet{x, y};
      if (between.empty())
        out.emplace_back(x, y);
    }
  std::sort(out.begin(), out.end());
  return out;
}

Poset build_poset(std::vector<std::string> labels,
                  const std::vector<std::pair<std::string, std::string>> &generators) {
  if (labels.empty())
    throw ValidationError("poset has no elements");
  if (labels.size() > kMaxIndex)
    throw TooManyElementsError("poset has " + std::to_string(labels.size()) +
                               " elements; at most " + std::to_string(kMaxIndex) +
                               " are supported");
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!index.emplace(labels[i], i).second)
      throw DuplicateLabelError("duplicate label '" + labels[i] + "'");

  const std::size_t n = labels.size();
  // up[i] = everything known to be >= i.
  std::vector<ElementSet> up(n);
  for (std::size_t i = 0; i < n; ++i)
    up[i].insert(i);
  for (const auto &[a, b] : generators) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end())
      throw UnknownLabelError("unknown label '" + a + "'");
    if (ib == index.end())
      throw UnknownLabelError("unknown label '" + b + "'");
    up[ia->second].insert(ib->second);
  }
  // Warshall, row form: if i <= k then everything above k is above i.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (up[i].contains(k))
        up[i] |= up[k];

  for (std::size_t i = 0; i < n; ++i)
    for (auto j : up[i])
      if (j != i && up[j].contains(i))
        throw CycleError("'" + labels[i] + "' and '" + labels[j] + "' are each below the other");

  std::vector<ElementSet> down(n);
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : up[i])
      down[j].insert(i);
  return Poset::from_down_sets(std::move(labels), std::move(down));
}

IdealSet lower_cone(const Poset &p, ElementId x, ElementId y) {
  return IdealSet(p.down(x) & p.down(y));
}

IdealSet down_set(const Poset &p, ElementId x) { return IdealSet(p.down(x)); }

SubsetOfP minimal_elements(const Poset &p, SubsetOfP q) {
  if (q.empty())
    throw EmptySubsetError("minimal elements of an empty subset");
  SubsetOfP out;
  for (auto x : q)
    if ((p.down(x) & q) == ElementSet::single(x))
      out.insert(x);
  return out;
}

IdealSet annihilator(const Poset &p, ElementId x) { return IdealSet(p.ann_mask(x)); }

SubsetOfP zero_divisors(const Poset &p) {
  SubsetOfP out;
  const ElementSet bottom = ElementSet::single(Poset::zero);
  for (auto x : p.nonzero())
    if (p.ann_mask(x) != bottom)
      out.insert(x);
  return out;
}

bool is_ideal(const Poset &p, SubsetOfP s) {
  if (s.empty() || !s.subset_of(p.universe()))
    return false;
  for (auto x : s)
    if (!p.down(x).subset_of(s))
      return false;
  return true;
}

bool is_prime_ideal(const Poset &p, SubsetOfP s) {
  if (!is_ideal(p, s) || s == p.universe())
    return false;
  const std::size_t n = p.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (s.contains(x))
      continue;
    for (std::size_t y = x; y < n; ++y)
      if (!s.contains(y) && (p.down(x) & p.down(y)).subset_of(s))
        return false;
  }
  return true;
}

OracleCaps oracle_caps() {
  OracleCaps caps;
  if (const char *env = std::getenv("ZDPOSE_ORACLE_CAP")) {
    char *end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      caps.ideal_elements = v;
      caps.graph_vertices = v;
    }
  }
  return caps;
}

std::vector<IdealSet> enumerate_ideals(const Poset &p, std::size_t cap) {
  if (p.size() > cap)
    throw OracleCapExceeded("ideal enumeration capped at " + std::to_string(cap) +
                            " elements, poset has " + std::to_string(p.size()));
  // Decide elements in a linear extension order; x may join only once its
  // whole down-set is in.
  std::vector<ElementId> order(p.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
    return p.down(a).size() < p.down(b).size();
  });

  std::vector<IdealSet> out;
  std::function<void(std::size_t, ElementSet)> walk = [&](std::size_t k, ElementSet chosen) {
    if (k == order.size()) {
      if (!chosen.empty())
        out.emplace_back(chosen);
      return;
    }
    const ElementId x = order[k];
    walk(k + 1, chosen);
    if ((p.down(x) - ElementSet::single(x)).subset_of(chosen))
      walk(k + 1, chosen | ElementSet::single(x));
  };
  walk(0, ElementSet{});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IdealSet> enumerate_ideals(const Poset &p) {
  return enumerate_ideals(p, oracle_caps().ideal_elements);
}

std::string format_set(const Poset &p, ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (auto x : s) {
    if (!first)
      out += ',';
    out += p.label(x);
    first = false;
  }
  out += '}';
  return out;
}

} // namespace zdp
