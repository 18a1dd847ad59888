#pragma once

#include <string>

#include "gkmchar/momentgraph.hpp"
#include "gkmchar/qseries.hpp"
#include "gkmchar/rootdata.hpp"

namespace gkmchar {

// Deterministic serializations: fixed key order, terms sorted by
// exponent, no locale dependence.  Reruns produce identical bytes.

std::string laurent_to_json(const LaurentPoly& f);
std::string poly_to_json(const Poly& f);
std::string qseries_to_json(const QSeries& f);
std::string root_system_to_json(const RootSystem& rs);
std::string moment_graph_to_json(const MomentGraph& g, const RootSystem& rs);
std::string moment_graph_to_dot(const MomentGraph& g, const RootSystem& rs);

}  // namespace gkmchar
