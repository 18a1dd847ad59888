#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gkmchar/laurent.hpp"
#include "gkmchar/parallel.hpp"
#include "gkmchar/rootdata.hpp"

namespace gkmchar {

// Which coefficient theory a section lives in.
enum class Theory { cohomology, ktheory, elliptic };

struct MomentEdge {
    std::size_t a = 0, b = 0;        // endpoint vertex indices, a = shorter rep
    std::size_t label = 0;           // index into ambient positive roots
    // The endpoint [w] whose representative satisfies w^{-1}(alpha) < 0;
    // recorded for orientation-sensitive consumers, unused by the checks.
    std::size_t flow_source = 0;
};

// Fixed points and one-dimensional orbits of the torus action on G/H:
// vertices are the cosets w W_H (minimal-length representatives), and
// there is an edge labeled alpha in R+ joining [w] and [s_alpha w]
// whenever w^{-1}(alpha) is a negative root of G but not a root of H.
class MomentGraph {
public:
    EqualRankPair pair;
    std::vector<WeylElement> vertices;   // coset representatives, sorted
    std::vector<MomentEdge> edges;       // sorted by (a, b, label)

    std::size_t num_vertices() const { return vertices.size(); }
    std::size_t num_edges() const { return edges.size(); }
    std::size_t degree(std::size_t vertex) const;
    std::optional<std::size_t> vertex_index(const WeylElement& w) const;  // by coset
    // Labels of the edges at a vertex, as indices into positive roots.
    std::vector<std::size_t> edge_labels_at(std::size_t vertex) const;
};

MomentGraph build_moment_graph(const EqualRankPair& p);

// Per-vertex values of a would-be equivariant class; only one of the two
// value vectors is populated, according to the theory tag.
struct GKMSection {
    Theory theory = Theory::ktheory;
    std::vector<LaurentPoly> k_values;   // ktheory
    std::vector<Poly> h_values;          // cohomology

    static GKMSection ktheory_section(std::vector<LaurentPoly> values);
    static GKMSection cohomology_section(std::vector<Poly> values);
};

struct GKMCheckResult {
    bool ok = true;
    // Lowest-index edge where the congruence fails, when !ok.
    std::optional<std::size_t> failing_edge;
};

// The section criterion: across every edge with label alpha the endpoint
// difference must be divisible by (1 - z^alpha) (K-theory) or by the
// linear form of alpha (cohomology).  Exactly the tuples passing this
// test are restrictions of genuine equivariant classes.
GKMCheckResult check_gkm(const MomentGraph& g, const GKMSection& s,
                         ExecMode mode = default_exec_mode());

// The section of the class induced by a W_H-invariant character chi:
// value weyl_act(w, chi) at [w].  Invariance under W_H is verified so
// the value is independent of the representative.
GKMSection restrict_character(const MomentGraph& g, const LaurentPoly& chi);

// Cohomology analogue: value weyl_act(w, f) at [w] for W_H-invariant f.
GKMSection restrict_polynomial(const MomentGraph& g, const Poly& f);

}  // namespace gkmchar
