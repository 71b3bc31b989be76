#include "oracles.hpp"

#include <algorithm>

namespace zdp::oracle {

ElementSet lower_cone(const Poset &p, ElementId x, ElementId y) {
  ElementSet out;
  for (std::size_t z = 0; z < p.size(); ++z)
    if (p.leq(z, x) && p.leq(z, y))
      out.insert(z);
  return out;
}

ElementSet annihilator(const Poset &p, ElementId x) {
  ElementSet out;
  for (std::size_t y = 0; y < p.size(); ++y)
    if (oracle::lower_cone(p, x, y) == ElementSet{Poset::zero})
      out.insert(y);
  return out;
}

bool is_down_closed(const Poset &p, ElementSet s) {
  if (s.empty())
    return false;
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (s.contains(x) && p.leq(y, x) && !s.contains(y))
        return false;
  return true;
}

bool is_prime(const Poset &p, ElementSet s) {
  if (!is_down_closed(p, s) || s.size() == p.size())
    return false;
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (oracle::lower_cone(p, x, y).subset_of(s) && !s.contains(x) && !s.contains(y))
        return false;
  return true;
}

std::vector<ElementSet> all_ideals(const Poset &p) {
  std::vector<ElementSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << p.size()); ++bits)
    if (is_down_closed(p, ElementSet(bits)))
      out.emplace_back(bits);
  return out;
}

std::size_t count_posets_with_least(std::size_t n) {
  const std::size_t cells = n * n;
  std::size_t count = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
    auto rel = [&](std::size_t i, std::size_t j) { return (bits >> (i * n + j)) & 1U; };
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      ok = rel(i, i);
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (i != j && rel(i, j) && rel(j, i))
          ok = false;
        for (std::size_t k = 0; k < n && ok; ++k)
          if (rel(i, j) && rel(j, k) && !rel(i, k))
            ok = false;
      }
    if (!ok)
      continue;
    bool has_least = false;
    for (std::size_t i = 0; i < n && !has_least; ++i) {
      bool least = true;
      for (std::size_t j = 0; j < n; ++j)
        least = least && rel(i, j);
      has_least = least;
    }
    if (has_least)
      ++count;
  }
  return count;
}

std::size_t clique_number(const ZdGraph &g) {
  std::size_t best = 0;
  const std::size_t n = g.size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const VertexSet s(bits);
    if (s.size() <= best)
      continue;
    bool clique = true;
    for (auto u : s)
      for (auto v : s)
        clique = clique && (u == v || g.adjacent(u, v));
    if (clique)
      best = s.size();
  }
  return best;
}

std::vector<std::vector<std::optional<std::size_t>>> floyd(const ZdGraph &g) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::optional<std::size_t>>> d(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (g.adjacent(u, v))
        d[u][v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] && d[k][j] && (!d[i][j] || *d[i][k] + *d[k][j] < *d[i][j]))
          d[i][j] = *d[i][k] + *d[k][j];
  return d;
}

std::optional<std::size_t> diameter(const ZdGraph &g) {
  const auto d = floyd(g);
  std::size_t best = 0;
  for (const auto &row : d)
    for (const auto &x : row) {
      if (!x)
        return std::nullopt;
      best = std::max(best, *x);
    }
  return best;
}

std::optional<std::size_t> girth(const ZdGraph &g) {
  std::optional<std::size_t> best;
  const std::size_t n = g.size();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v))
        continue;
      std::vector<std::pair<VertexId, VertexId>> edges;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          if (g.adjacent(a, b) && !(a == u && b == v))
            edges.emplace_back(a, b);
      const auto d = floyd(ZdGraph::from_edges(n, edges));
      if (d[u][v] && (!best || *d[u][v] + 1 < *best))
        best = *d[u][v] + 1;
    }
  return best;
}

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ZdGraph random_graph(Rng &rng, std::size_t n, double density) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.unit() < density)
        edges.emplace_back(u, v);
  return ZdGraph::from_edges(n, edges);
}

} // namespace zdp::oracle
