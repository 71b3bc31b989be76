#include "zdposet/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>

namespace zdp {

ZdGraph::ZdGraph(std::vector<VertexTag> vertices, std::vector<VertexSet> adjacency)
    : vertices_(std::move(vertices)), adjacency_(std::move(adjacency)) {
  const std::size_t n = vertices_.size();
  if (n > kMaxIndex)
    throw InvalidGraphError("graph has more than 64 vertices");
  if (adjacency_.size() != n)
    throw InvalidGraphError("adjacency size does not match the vertex count");
  const VertexSet all = VertexSet::first(n);
  for (std::size_t u = 0; u < n; ++u) {
    if (!adjacency_[u].subset_of(all))
      throw InvalidGraphError("edge to a missing vertex");
    if (adjacency_[u].contains(u))
      throw InvalidGraphError("loop at vertex " + std::to_string(u));
    for (auto v : adjacency_[u])
      if (!adjacency_[v].contains(u))
        throw InvalidGraphError("adjacency is not symmetric");
  }
}

ZdGraph ZdGraph::from_edges(std::size_t n, const std::vector<std::pair<VertexId, VertexId>> &edges) {
  std::vector<VertexTag> tags;
  for (std::size_t i = 0; i < n; ++i)
    tags.emplace_back(ElementId{i});
  std::vector<VertexSet> adj(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw InvalidGraphError("edge to a missing vertex");
    adj[u].insert(v);
    adj[v].insert(u);
  }
  return ZdGraph(std::move(tags), std::move(adj));
}

ZdGraph ZdGraph::complete(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      edges.emplace_back(u, v);
  return from_edges(n, edges);
}

std::size_t ZdGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto &row : adjacency_)
    twice += row.size();
  return twice / 2;
}

ZdGraph gamma(const Poset &p) {
  const ElementSet z = zero_divisors(p);
  if (z.empty())
    throw NoZeroDivisorsError();
  std::vector<ElementId> ids = z.to_vector();
  std::vector<VertexTag> tags(ids.begin(), ids.end());
  std::vector<VertexSet> adj(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = 0; j < ids.size(); ++j)
      if (i != j && p.ann_mask(ids[i]).contains(ids[j]))
        adj[i].insert(j);
  return ZdGraph(std::move(tags), std::move(adj));
}

std::vector<AnnClass> ann_classes(const Poset &p) {
  const ElementSet z = zero_divisors(p);
  if (z.empty())
    throw NoZeroDivisorsError();
  std::vector<AnnClass> classes;
  for (auto x : z) {
    auto it = std::find_if(classes.begin(), classes.end(), [&](const AnnClass &c) {
      return c.ann.members() == p.ann_mask(x);
    });
    if (it == classes.end())
      classes.push_back(AnnClass{x, ElementSet::single(x), annihilator(p, x)});
    else
      it->members.insert(x);
  }
  return classes;
}

ZdGraph gamma_e(const Poset &p) {
  std::vector<AnnClass> classes = ann_classes(p);
  std::vector<VertexSet> adj(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j)
      if (classes[i].ann.contains(classes[j].representative))
        adj[i].insert(j);
  std::vector<VertexTag> tags(classes.begin(), classes.end());
  return ZdGraph(std::move(tags), std::move(adj));
}

namespace {

constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();

std::array<std::size_t, kMaxIndex> bfs(const ZdGraph &g, VertexId source) {
  std::array<std::size_t, kMaxIndex> dist;
  dist.fill(kUnseen);
  std::array<VertexId, kMaxIndex> queue{};
  std::size_t head = 0, tail = 0;
  dist[source] = 0;
  queue[tail++] = source;
  while (head < tail) {
    const VertexId u = queue[head++];
    for (auto w : g.neighbors(u))
      if (dist[w] == kUnseen) {
        dist[w] = dist[u] + 1;
        queue[tail++] = w;
      }
  }
  return dist;
}

} // namespace

Length distance(const ZdGraph &g, VertexId u, VertexId v) {
  if (u >= g.size() || v >= g.size())
    throw InvalidGraphError("vertex out of range");
  const auto d = bfs(g, u)[v];
  if (d == kUnseen)
    return std::nullopt;
  return d;
}

Length diameter(const ZdGraph &g) {
  if (g.size() < 2)
    throw TooFewVerticesError("diameter needs at least two vertices");
  std::size_t best = 0;
  for (std::size_t u = 0; u < g.size(); ++u) {
    const auto dist = bfs(g, u);
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (dist[v] == kUnseen)
        return std::nullopt;
      best = std::max(best, dist[v]);
    }
  }
  return best;
}

Length girth(const ZdGraph &g) {
  // Shortest cycle through a BFS root r is found at the first non-tree edge
  // seen; the minimum over all roots is exact.
  std::size_t best = kUnseen;
  const std::size_t n = g.size();
  for (std::size_t r = 0; r < n; ++r) {
    std::array<std::size_t, kMaxIndex> dist;
    std::array<VertexId, kMaxIndex> parent;
    dist.fill(kUnseen);
    parent.fill(kUnseen);
    std::array<VertexId, kMaxIndex> queue{};
    std::size_t head = 0, tail = 0;
    dist[r] = 0;
    queue[tail++] = r;
    while (head < tail) {
      const VertexId u = queue[head++];
      if (2 * dist[u] + 1 >= best)
        break;
      for (auto w : g.neighbors(u)) {
        if (dist[w] == kUnseen) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue[tail++] = w;
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == kUnseen)
    return std::nullopt;
  return best;
}

namespace {

// Branch and bound with a greedy colouring bound. Vertices are relabelled
// so that bit order is the degeneracy order (highest core first).
class CliqueSearch {
public:
  explicit CliqueSearch(const ZdGraph &g) : n_(g.size()) {
    std::vector<VertexId> removal;
    VertexSet left = g.all();
    while (!left.empty()) {
      VertexId pick = left.min();
      std::size_t pick_deg = kUnseen;
      for (auto v : left) {
        const std::size_t d = (g.neighbors(v) & left).size();
        if (d < pick_deg) {
          pick = v;
          pick_deg = d;
        }
      }
      removal.push_back(pick);
      left.erase(pick);
    }
    order_.assign(removal.rbegin(), removal.rend());
    std::array<std::size_t, kMaxIndex> pos{};
    for (std::size_t i = 0; i < n_; ++i)
      pos[order_[i]] = i;
    adj_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (auto w : g.neighbors(order_[i]))
        adj_[i] |= Word{1} << pos[w];
  }

  VertexSet run() {
    if (n_ == 0)
      return {};
    const Word all = n_ >= 64 ? ~Word{0} : ((Word{1} << n_) - 1);
    expand(all, 0, 0);
    VertexSet out;
    for (Word rest = best_set_; rest; rest &= rest - 1)
      out.insert(order_[std::countr_zero(rest)]);
    return out;
  }

private:
  using Word = std::uint64_t;

  void expand(Word cand, Word current, std::size_t depth) {
    std::array<std::size_t, kMaxIndex> verts{};
    std::array<std::size_t, kMaxIndex> colors{};
    std::size_t m = 0;
    std::size_t color = 0;
    for (Word uncolored = cand; uncolored;) {
      ++color;
      for (Word avail = uncolored; avail;) {
        const auto v = static_cast<std::size_t>(std::countr_zero(avail));
        avail &= ~(adj_[v] | (Word{1} << v));
        uncolored &= ~(Word{1} << v);
        verts[m] = v;
        colors[m] = color;
        ++m;
      }
    }
    for (std::size_t i = m; i-- > 0;) {
      if (depth + colors[i] <= best_)
        return;
      const std::size_t v = verts[i];
      const Word bit = Word{1} << v;
      const Word next = cand & adj_[v];
      if (next == 0) {
        if (depth + 1 > best_) {
          best_ = depth + 1;
          best_set_ = current | bit;
        }
      } else {
        expand(next, current | bit, depth + 1);
      }
      cand &= ~bit;
    }
  }

  std::size_t n_;
  std::vector<VertexId> order_;
  std::vector<Word> adj_;
  std::size_t best_ = 0;
  Word best_set_ = 0;
};

} // namespace

VertexSet maximum_clique(const ZdGraph &g) { return CliqueSearch(g).run(); }

std::size_t clique_number(const ZdGraph &g) { return maximum_clique(g).size(); }

std::size_t degree(const ZdGraph &g, VertexId v) { return g.neighbors(v).size(); }

VertexSet neighborhood(const ZdGraph &g, VertexId v) { return g.neighbors(v); }

bool is_connected(const ZdGraph &g) {
  if (g.size() == 0)
    return true;
  const auto dist = bfs(g, 0);
  for (std::size_t v = 0; v < g.size(); ++v)
    if (dist[v] == kUnseen)
      return false;
  return true;
}

ShapeReport classify_shape(const ZdGraph &g) {
  ShapeReport r;
  const std::size_t n = g.size();
  const VertexSet all = g.all();

  r.is_complete = true;
  r.is_regular = true;
  for (std::size_t v = 0; v < n; ++v) {
    r.is_complete = r.is_complete && g.neighbors(v) == all - VertexSet::single(v);
    r.is_regular = r.is_regular && degree(g, v) == degree(g, 0);
  }

  if (n >= 2) {
    for (std::size_t c = 0; c < n && !r.is_star; ++c) {
      if (g.neighbors(c) != all - VertexSet::single(c))
        continue;
      bool leaves = true;
      for (std::size_t v = 0; v < n && leaves; ++v)
        leaves = v == c || degree(g, v) == 1;
      r.is_star = leaves;
    }
  }

  if (n >= 3 && is_connected(g)) {
    r.is_cycle = true;
    for (std::size_t v = 0; v < n && r.is_cycle; ++v)
      r.is_cycle = degree(g, v) == 2;
  }

  // Parts are the connected components of the complement; the graph is
  // complete multipartite iff every vertex sees exactly the other parts.
  std::vector<VertexSet> parts;
  VertexSet unassigned = all;
  while (!unassigned.empty()) {
    VertexSet part = VertexSet::single(unassigned.min());
    VertexSet frontier = part;
    while (!frontier.empty()) {
      VertexSet next;
      for (auto v : frontier)
        next |= (all - g.neighbors(v) - VertexSet::single(v));
      frontier = next - part;
      part |= next;
    }
    parts.push_back(part);
    unassigned -= part;
  }
  if (parts.size() >= 2) {
    bool ok = true;
    for (const auto &part : parts)
      for (auto v : part)
        ok = ok && g.neighbors(v) == all - part;
    if (ok)
      r.complete_multipartite = std::move(parts);
  }
  return r;
}

ZdGraph reduce_graph(const ZdGraph &g) {
  const std::size_t n = g.size();
  std::vector<VertexSet> groups;
  std::vector<std::size_t> group_of(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t k = 0;
    while (k < groups.size() && g.neighbors(groups[k].min()) != g.neighbors(v))
      ++k;
    if (k == groups.size())
      groups.emplace_back();
    groups[k].insert(v);
    group_of[v] = k;
  }

  std::vector<VertexTag> tags;
  for (const auto &group : groups) {
    const VertexId first = group.min();
    if (std::holds_alternative<ElementId>(g.vertex(first))) {
      AnnClass c;
      for (auto v : group)
        if (const auto *e = std::get_if<ElementId>(&g.vertex(v)))
          c.members.insert(*e);
      c.representative = c.members.min();
      ElementSet ann = ElementSet::single(Poset::zero);
      for (auto w : g.neighbors(first))
        if (const auto *e = std::get_if<ElementId>(&g.vertex(w)))
          ann.insert(*e);
      c.ann = IdealSet(ann);
      tags.emplace_back(std::move(c));
    } else if (group.size() == 1) {
      tags.push_back(g.vertex(first));
    } else {
      AnnClass c = std::get<AnnClass>(g.vertex(first));
      for (auto v : group)
        if (const auto *other = std::get_if<AnnClass>(&g.vertex(v)))
          c.members |= other->members;
      c.representative = c.members.min();
      tags.emplace_back(std::move(c));
    }
  }

  std::vector<VertexSet> adj(groups.size());
  for (std::size_t a = 0; a < groups.size(); ++a)
    for (auto w : g.neighbors(groups[a].min()))
      adj[a].insert(group_of[w]);
  return ZdGraph(std::move(tags), std::move(adj));
}

std::string vertex_label(const Poset &p, const VertexTag &tag) {
  if (const auto *e = std::get_if<ElementId>(&tag))
    return p.label(*e);
  const auto &c = std::get<AnnClass>(tag);
  return "[" + p.label(c.representative) + "]" + format_set(p, c.members);
}

namespace {

std::string dot_escape(const std::string &s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\')
      out += '\\';
    out += ch;
  }
  return out;
}

} // namespace

std::string to_dot(const Poset &p, const ZdGraph &g, const std::string &name) {
  std::string out = "graph " + name + " {\n";
  for (std::size_t v = 0; v < g.size(); ++v)
    out += "  v" + std::to_string(v) + " [label=\"" + dot_escape(vertex_label(p, g.vertex(v))) +
           "\"];\n";
  for (std::size_t u = 0; u < g.size(); ++u)
    for (auto v : g.neighbors(u))
      if (u < v)
        out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

} // namespace zdp
