#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "zdposet/annihilators.hpp"
#include "zdposet/graph.hpp"
#include "zdposet/poset.hpp"
#include "zdposet/theorems.hpp"

namespace zdp {

using nlohmann::json;

/// Infinite lengths serialize as null.
json length_json(const Length &l);

json poset_json(const Poset &p);
json ideal_json(const Poset &p, const IdealSet &s);
json graph_summary_json(const Poset &p, const ZdGraph &g);
json shape_json(const ShapeReport &s);
json ann_family_json(const Poset &p, const AnnFamily &f);
json bound_json(const BoundReport &b);
json chain_json(const Poset &p, const ChainReport &c);
json report_json(const TheoremReport &r);
json summary_json(const SweepSummary &s);

/// Full analysis of one poset. Throws NoZeroDivisorsError when Z(P)^x is
/// empty; `poset_echo_json` is the partial document printed in that case.
json analysis_document(const Poset &p);
json poset_echo_json(const Poset &p);

/// Human-readable rendering of analysis_document.
std::string pretty_analysis(const json &doc);
/// Plain-text sweep table.
std::string pretty_summary(const SweepSummary &s);

} // namespace zdp
