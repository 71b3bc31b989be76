#include "zdposet/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace zdp {

json length_json(const Length &l) { return l ? json(*l) : json(nullptr); }

namespace {

json labels_json(const Poset &p, ElementSet s) {
  json out = json::array();
  for (auto x : s)
    out.push_back(p.label(x));
  return out;
}

ElementId representative_of(const VertexTag &tag) {
  if (const auto *e = std::get_if<ElementId>(&tag))
    return *e;
  return std::get<AnnClass>(tag).representative;
}

} // namespace

json poset_json(const Poset &p) {
  json rel = json::array();
  for (const auto &[a, b] : p.covers())
    rel.push_back(json::array({p.label(a), p.label(b)}));
  return json{{"elements", p.labels()}, {"relations", rel}, {"zero", p.label(Poset::zero)}};
}

json ideal_json(const Poset &p, const IdealSet &s) { return labels_json(p, s.members()); }

json shape_json(const ShapeReport &s) {
  json parts = nullptr;
  if (s.complete_multipartite) {
    parts = json::array();
    for (const auto &part : *s.complete_multipartite)
      parts.push_back(part.to_vector());
  }
  return json{{"is_complete", s.is_complete},
              {"is_star", s.is_star},
              {"is_regular", s.is_regular},
              {"is_cycle", s.is_cycle},
              {"complete_multipartite", parts}};
}

json graph_summary_json(const Poset &p, const ZdGraph &g) {
  json degrees = json::object();
  json vertices = json::array();
  json edges = json::array();
  for (std::size_t v = 0; v < g.size(); ++v) {
    degrees[p.label(representative_of(g.vertex(v)))] = degree(g, v);
    vertices.push_back(vertex_label(p, g.vertex(v)));
    for (auto w : g.neighbors(v))
      if (v < w)
        edges.push_back(json::array({v, w}));
  }
  json out{{"vertices", g.size()},
           {"edges", g.edge_count()},
           {"vertex_labels", vertices},
           {"edge_list", edges},
           {"girth", length_json(girth(g))},
           {"omega", clique_number(g)},
           {"degrees", degrees},
           {"shape", shape_json(classify_shape(g))}};
  out["diameter"] = g.size() >= 2 ? length_json(diameter(g)) : json(nullptr);
  return out;
}

json ann_family_json(const Poset &p, const AnnFamily &f) {
  const auto maximal = maximal_annihilators(f);
  json out = json::array();
  for (const auto &e : f.entries)
    out.push_back(json{{"ann", ideal_json(p, e.ann)},
                       {"witnesses", labels_json(p, e.witnesses)},
                       {"in_b", e.in_b},
                       {"maximal", std::find(maximal.begin(), maximal.end(), e.ann) != maximal.end()}});
  return out;
}

json bound_json(const BoundReport &b) {
  return json{{"v", b.vertices}, {"ann", b.primes}, {"limit", b.limit}, {"tight", b.tight}};
}

json chain_json(const Poset &p, const ChainReport &c) {
  json w = json::array();
  for (const auto &s : c.witness)
    w.push_back(ideal_json(p, s));
  return json{{"length", c.length}, {"witness", w}};
}

json report_json(const TheoremReport &r) {
  json verdicts = json::object();
  for (const auto &[name, v] : r.verdicts) {
    json entry{{"status", to_string(v.status)}};
    if (v.status == Status::fail)
      entry["witness"] = v.witness;
    if (v.status == Status::not_applicable)
      entry["reason"] = v.reason;
    verdicts[name] = entry;
  }
  return json{{"poset", r.poset_id}, {"verdicts", verdicts}};
}

json summary_json(const SweepSummary &s) {
  json counts = json::object();
  for (const auto &[name, c] : s.counts)
    counts[name] = json{{"pass", c.pass}, {"fail", c.fail}, {"not_applicable", c.not_applicable}};
  json failures = json::array();
  for (const auto &f : s.failures)
    failures.push_back(json{{"size", f.size},
                            {"index", f.index},
                            {"poset", f.poset},
                            {"check", f.check},
                            {"witness", f.witness}});
  return json{{"max_size", s.max_n},
              {"instances_checked", s.instances_checked},
              {"counts", counts},
              {"failures", failures}};
}

json poset_echo_json(const Poset &p) {
  return json{{"poset", poset_json(p)}, {"zero_divisors", labels_json(p, zero_divisors(p))}};
}

json analysis_document(const Poset &p) {
  const ElementSet zd = zero_divisors(p);
  if (zd.empty())
    throw NoZeroDivisorsError();

  json doc = poset_echo_json(p);
  const ZdGraph g = gamma(p);
  const ZdGraph e = gamma_e(p);
  const auto primes = annihilator_primes(p);

  doc["gamma"] = graph_summary_json(p, g);
  json ge = graph_summary_json(p, e);
  json classes = json::array();
  for (const auto &c : ann_classes(p))
    classes.push_back(json{{"representative", p.label(c.representative)},
                           {"members", labels_json(p, c.members)},
                           {"ann", ideal_json(p, c.ann)},
                           {"prime", std::find(primes.begin(), primes.end(), c.ann) != primes.end()}});
  ge["classes"] = classes;
  doc["gamma_e"] = ge;

  doc["ann_family"] = ann_family_json(p, ann_family(p));
  json pj = json::array();
  for (const auto &q : primes)
    pj.push_back(ideal_json(p, q));
  doc["primes"] = pj;
  doc["omega"] = clique_number(e);
  doc["bound"] = bound_json(verify_cardinality_bound(p));
  doc["chain"] = chain_json(p, acc_chain_profile(p));
  doc["theorems"] = report_json(check_poset(p));
  return doc;
}

namespace {

std::string join(const json &arr, const char *sep = ",") {
  std::string out;
  for (const auto &v : arr) {
    if (!out.empty())
      out += sep;
    out += v.is_string() ? v.get<std::string>() : v.dump();
  }
  return out;
}

std::string show(const json &v) { return v.is_null() ? "inf" : v.dump(); }

void graph_block(std::ostringstream &os, const char *title, const json &g) {
  os << title << ": |V|=" << g["vertices"] << " |E|=" << g["edges"]
     << " diameter=" << show(g["diameter"]) << " girth=" << show(g["girth"])
     << " omega=" << g["omega"] << '\n';
  os << "  shape:";
  for (const char *flag : {"is_complete", "is_star", "is_regular", "is_cycle"})
    if (g["shape"][flag].get<bool>())
      os << ' ' << (flag + 3);
  if (!g["shape"]["complete_multipartite"].is_null())
    os << " complete_multipartite(" << g["shape"]["complete_multipartite"].size() << " parts)";
  os << '\n';
  for (const auto &[label, deg] : g["degrees"].items())
    os << "  deg " << std::left << std::setw(12) << label << ' ' << deg << '\n';
}

} // namespace

std::string pretty_analysis(const json &doc) {
  std::ostringstream os;
  os << "elements: " << join(doc["poset"]["elements"], " ") << '\n';
  os << "zero-divisors: " << join(doc["zero_divisors"], " ") << '\n';
  graph_block(os, "gamma", doc["gamma"]);
  graph_block(os, "gamma_e", doc["gamma_e"]);
  os << "classes:\n";
  for (const auto &c : doc["gamma_e"]["classes"])
    os << "  [" << c["representative"].get<std::string>() << "] members {" << join(c["members"])
       << "} ann {" << join(c["ann"]) << "}" << (c["prime"].get<bool>() ? " prime" : "") << '\n';
  os << "annihilator primes: " << doc["primes"].size() << '\n';
  for (const auto &q : doc["primes"])
    os << "  {" << join(q) << "}\n";
  const auto &b = doc["bound"];
  os << "bound: " << b["v"] << " <= " << b["limit"] << " (|Ann|=" << b["ann"] << ")"
     << (b["tight"].get<bool>() ? " tight" : "") << '\n';
  os << "longest annihilator chain: " << doc["chain"]["length"] << '\n';
  os << "checks:\n";
  for (const auto &[name, v] : doc["theorems"]["verdicts"].items()) {
    os << "  " << std::left << std::setw(26) << name << v["status"].get<std::string>();
    if (v.contains("witness"))
      os << "  " << join(v["witness"], " ");
    os << '\n';
  }
  return os.str();
}

std::string pretty_summary(const SweepSummary &s) {
  std::ostringstream os;
  os << "max size: " << s.max_n << '\n';
  os << "instances: " << s.instances_checked << '\n';
  os << std::left << std::setw(26) << "check" << std::right << std::setw(10) << "pass"
     << std::setw(8) << "fail" << std::setw(10) << "n/a" << '\n';
  for (const auto &[name, c] : s.counts)
    os << std::left << std::setw(26) << name << std::right << std::setw(10) << c.pass
       << std::setw(8) << c.fail << std::setw(10) << c.not_applicable << '\n';
  os << "failures: " << s.failures.size() << '\n';
  for (const auto &f : s.failures) {
    os << "  " << f.check << " on " << f.poset << " :";
    for (const auto &w : f.witness)
      os << ' ' << w;
    os << '\n';
  }
  return os.str();
}

} // namespace zdp
