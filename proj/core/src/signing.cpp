#include "rp3link/signing.hpp"

#include <algorithm>
#include <numeric>

#include "rp3link/automorphism.hpp"

namespace rp3link {

EdgeSigning::EdgeSigning(Graph g, std::vector<std::uint8_t> s)
    : graph(std::move(g)), signs(std::move(s)) {
    if (static_cast<int>(signs.size()) != graph.edge_count())
        throw structure_error("signing length does not match edge count");
    for (auto v : signs)
        if (v > 1) throw structure_error("signs must be 0 or 1");
}

EdgeSigning EdgeSigning::all_plus(const Graph& g) {
    return EdgeSigning(g, std::vector<std::uint8_t>(g.edge_count(), 0));
}

EdgeSigning EdgeSigning::from_negative_edges(
    const Graph& g, const std::vector<std::pair<std::string, std::string>>& neg) {
    std::vector<std::uint8_t> signs(g.edge_count(), 0);
    for (const auto& [a, b] : neg) {
        int e = g.edge_index_checked(g.vertex(a), g.vertex(b));
        signs[e] ^= 1;
    }
    return EdgeSigning(g, std::move(signs));
}

std::uint64_t EdgeSigning::sign_mask() const {
    std::uint64_t m = 0;
    for (std::size_t e = 0; e < signs.size() && e < 64; ++e)
        if (signs[e]) m |= (1ull << e);
    return m;
}

int EdgeSigning::negative_count() const {
    return static_cast<int>(std::count(signs.begin(), signs.end(), 1));
}

Z2 cycle_class(const EdgeSigning& s, const Cycle& c) {
    int parity = 0;
    for (int e : c.edge_indices()) {
        if (e >= s.graph.edge_count())
            throw structure_error("cycle does not live in the signing's graph");
        parity ^= s.signs[e];
    }
    return parity;
}

Z2 even_subgraph_class(const EdgeSigning& s, const std::vector<int>& edge_indices) {
    std::vector<int> deg(s.graph.vertex_count(), 0);
    int parity = 0;
    for (int e : edge_indices) {
        if (e < 0 || e >= s.graph.edge_count())
            throw structure_error("edge index out of range");
        auto [a, b] = s.graph.edge(e);
        deg[a]++;
        deg[b]++;
        parity ^= s.signs[e];
    }
    for (int v = 0; v < s.graph.vertex_count(); ++v)
        if (deg[v] % 2)
            throw structure_error("edge set has odd degree at " + s.graph.label(v) +
                                  "; not a cycle-space element");
    return parity;
}

EdgeSigning switch_vertex(const EdgeSigning& s, int v) {
    if (v < 0 || v >= s.graph.vertex_count()) throw label_error("vertex id out of range");
    EdgeSigning out = s;
    for (int w : s.graph.neighbors(v)) out.signs[s.graph.edge_index_checked(v, w)] ^= 1;
    return out;
}

EdgeSigning switch_vertex(const EdgeSigning& s, const std::string& label) {
    return switch_vertex(s, s.graph.vertex(label));
}

EdgeSigning switch_vertices(const EdgeSigning& s, std::uint32_t vertex_mask) {
    EdgeSigning out = s;
    for (int e = 0; e < s.graph.edge_count(); ++e) {
        auto [a, b] = s.graph.edge(e);
        // an edge flips iff exactly one endpoint is switched
        if (((vertex_mask >> a) ^ (vertex_mask >> b)) & 1) out.signs[e] ^= 1;
    }
    return out;
}

CycleBasis cycle_basis(const Graph& g) {
    CycleBasis basis;
    std::vector<int> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::vector<std::pair<int, int>>> tree_adj(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edge(e);
        int ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            basis.tree_edges.push_back(e);
            tree_adj[a].push_back({b, e});
            tree_adj[b].push_back({a, e});
        } else {
            basis.nontree_edges.push_back(e);
        }
    }
    // fundamental cycle of each non-tree edge: tree path + the edge
    for (int e : basis.nontree_edges) {
        auto [a, b] = g.edge(e);
        std::vector<int> prev(g.vertex_count(), -1);
        std::vector<int> stack{a};
        prev[a] = a;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v == b) break;
            for (auto [w, te] : tree_adj[v])
                if (prev[w] < 0) {
                    prev[w] = v;
                    stack.push_back(w);
                }
        }
        std::vector<int> path;
        for (int v = b; v != a; v = prev[v]) path.push_back(v);
        path.push_back(a);
        basis.fundamental.emplace_back(g, path);
    }
    return basis;
}

bool same_class(const EdgeSigning& a, const EdgeSigning& b) {
    if (!(a.graph == b.graph)) throw structure_error("signings live on different graphs");
    CycleBasis basis = cycle_basis(a.graph);
    for (const Cycle& c : basis.fundamental)
        if (cycle_class(a, c) != cycle_class(b, c)) return false;
    return true;
}

EdgeSigning canonical_signing(const EdgeSigning& s, CanonicalMode mode) {
    const Graph& g = s.graph;
    const int n = g.vertex_count();

    auto switching_min = [&](const EdgeSigning& base) {
        std::vector<std::uint8_t> best = base.signs;
        // switching sets and their complements act identically; fix vertex 0 out
        for (std::uint32_t sub = 0; sub < (1u << (n - 1)); ++sub) {
            EdgeSigning cand = switch_vertices(base, sub << 1);
            if (cand.signs < best) best = cand.signs;
        }
        return EdgeSigning(g, std::move(best));
    };

    if (mode == CanonicalMode::Switching) return switching_min(s);

    EdgeSigning best = switching_min(s);
    for (const Permutation& p : automorphisms(g)) {
        std::vector<std::uint8_t> mapped(g.edge_count(), 0);
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [a, b] = g.edge(e);
            mapped[g.edge_index_checked(p(a), p(b))] = s.signs[e];
        }
        EdgeSigning cand = switching_min(EdgeSigning(g, std::move(mapped)));
        if (cand.signs < best.signs) best = cand;
    }
    return best;
}

ClassEnumeration::ClassEnumeration(const Graph& g) : g_(&g), basis_(cycle_basis(g)) {
    if (basis_.nontree_edges.size() > 30)
        throw size_error("class enumeration capped at cycle rank 30, got " +
                         std::to_string(basis_.nontree_edges.size()));
}

EdgeSigning ClassEnumeration::representative(std::uint64_t index) const {
    std::vector<std::uint8_t> signs(g_->edge_count(), 0);
    for (std::size_t i = 0; i < basis_.nontree_edges.size(); ++i)
        if (index >> i & 1) signs[basis_.nontree_edges[i]] = 1;
    return EdgeSigning(*g_, std::move(signs));
}

void enumerate_classes(const Graph& g, const std::function<bool(const EdgeSigning&)>& visit) {
    ClassEnumeration en(g);
    for (std::uint64_t i = 0; i < en.count(); ++i)
        if (!visit(en.representative(i))) return;
}

EdgeSigning linkless_k6_signing() {
    return EdgeSigning::from_negative_edges(
        Graph::complete(6),
        {{"1", "2"}, {"1", "3"}, {"2", "3"}, {"1", "4"}, {"2", "5"}, {"3", "6"}});
}

int k4_one_hom_count(const EdgeSigning& s, const std::vector<int>& k4_vertices) {
    if (k4_vertices.size() != 4) throw structure_error("k4_one_hom_count needs 4 vertices");
    std::uint32_t mask = 0;
    for (int v : k4_vertices) mask |= (1u << v);
    if (__builtin_popcount(mask) != 4 || !s.graph.is_complete_on(mask))
        throw structure_error("vertices do not induce a K4");
    std::vector<int> vs = k4_vertices;
    std::sort(vs.begin(), vs.end());
    int count = 0;
    for (int skip = 0; skip < 4; ++skip) {
        std::vector<int> tri;
        for (int i = 0; i < 4; ++i)
            if (i != skip) tri.push_back(vs[i]);
        count += cycle_class(s, Cycle(s.graph, tri));
    }
    return count;
}

bool component_all_zero(const EdgeSigning& s, const std::vector<int>& component) {
    // balance check: assign potentials along a spanning tree, then every
    // cycle is 0-homologous iff every edge matches the potential difference
    const Graph& g = s.graph;
    std::vector<int> pot(g.vertex_count(), -1);
    if (component.empty()) return true;
    std::vector<int> stack{component.front()};
    pot[component.front()] = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (pot[w] < 0) {
                pot[w] = pot[v] ^ s.signs[g.edge_index_checked(v, w)];
                stack.push_back(w);
            }
    }
    for (int v : component) {
        if (pot[v] < 0) throw structure_error("vertex set is not one connected component");
        for (int w : g.neighbors(v))
            if (s.signs[g.edge_index_checked(v, w)] != (pot[v] ^ pot[w])) return false;
    }
    return true;
}

}  // namespace rp3link
