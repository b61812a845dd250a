#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rp3link/cycle.hpp"
#include "rp3link/graph.hpp"

namespace rp3link {

/// Z/2 homology value of a cycle: 0 = null-homotopic class, 1 = the generator
/// of H1 of projective 3-space. Addition is XOR.
using Z2 = int;

/// An edge signing of a graph: one Z/2 value per edge index, 1 encoding a "-"
/// edge (odd number of transverse crossings of the projective boundary).
/// A cycle is 1-homologous iff it carries an odd number of "-" edges.
struct EdgeSigning {
    Graph graph;
    std::vector<std::uint8_t> signs;  // one per edge index

    EdgeSigning() = default;
    EdgeSigning(Graph g, std::vector<std::uint8_t> s);

    static EdgeSigning all_plus(const Graph& g);
    static EdgeSigning from_negative_edges(
        const Graph& g, const std::vector<std::pair<std::string, std::string>>& neg);

    std::uint64_t sign_mask() const;
    int negative_count() const;
    bool operator==(const EdgeSigning& o) const {
        return graph == o.graph && signs == o.signs;
    }
};

/// Parity of "-" edges along the cycle.
Z2 cycle_class(const EdgeSigning& s, const Cycle& c);

/// Parity of "-" edges over an even-degree edge set (an element of the GF(2)
/// cycle space). Rejects sets with an odd-degree vertex.
Z2 even_subgraph_class(const EdgeSigning& s, const std::vector<int>& edge_indices);

/// Flips every edge incident to v. Leaves every cycle class unchanged.
EdgeSigning switch_vertex(const EdgeSigning& s, int v);
EdgeSigning switch_vertex(const EdgeSigning& s, const std::string& label);
EdgeSigning switch_vertices(const EdgeSigning& s, std::uint32_t vertex_mask);

/// Spanning forest with least edge indices (Kruskal over the index order),
/// plus its fundamental cycles ordered by non-tree edge index. The basis used
/// for class comparison and enumeration.
struct CycleBasis {
    std::vector<int> tree_edges;
    std::vector<int> nontree_edges;
    std::vector<Cycle> fundamental;  // one per non-tree edge, same order
};
CycleBasis cycle_basis(const Graph& g);

/// True iff both signings induce the same class on every cycle (compared on a
/// fundamental cycle basis). Requires the same underlying graph.
bool same_class(const EdgeSigning& a, const EdgeSigning& b);

enum class CanonicalMode { Switching, SwitchingAndAutomorphism };

/// Lexicographically least sign vector reachable by switchings, optionally
/// also minimized over graph automorphisms. Idempotent; constant on classes.
EdgeSigning canonical_signing(const EdgeSigning& s, CanonicalMode mode);

/// One representative per switching class: the least-index spanning forest is
/// fixed all-+ and the m-n+c non-tree edges run through all assignments in
/// counter order. Visits exactly 2^(m-n+c) signings; the visitor may return
/// false to stop early.
struct ClassEnumeration {
    explicit ClassEnumeration(const Graph& g);
    std::uint64_t count() const { return 1ull << basis_.nontree_edges.size(); }
    int free_rank() const { return static_cast<int>(basis_.nontree_edges.size()); }
    EdgeSigning representative(std::uint64_t index) const;
    const CycleBasis& basis() const { return basis_; }

  private:
    const Graph* g_;
    CycleBasis basis_;
};

void enumerate_classes(const Graph& g, const std::function<bool(const EdgeSigning&)>& visit);

/// The linkless signing of K6 on labels {1..6}: negative edges exactly
/// (1,2),(1,3),(2,3),(1,4),(2,5),(3,6). Its switching class is the unique
/// class passing every homology-level linklessness condition.
EdgeSigning linkless_k6_signing();

/// Number of 1-homologous triangles among the four triangles of the K4
/// induced by the given vertices; always even.
int k4_one_hom_count(const EdgeSigning& s, const std::vector<int>& k4_vertices);

/// True iff every cycle inside the component containing any of the given
/// vertices is 0-homologous (checked on fundamental cycles).
bool component_all_zero(const EdgeSigning& s, const std::vector<int>& component);

}  // namespace rp3link
