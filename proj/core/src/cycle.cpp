#include "rp3link/cycle.hpp"

#include <algorithm>
#include <set>

namespace rp3link {

namespace {

// Least rotation of the lexicographically smaller orientation.
std::vector<int> canonicalize(std::vector<int> seq) {
    const std::size_t n = seq.size();
    auto least = [&](const std::vector<int>& s) {
        std::size_t best = 0;
        for (std::size_t r = 1; r < n; ++r) {
            for (std::size_t k = 0; k < n; ++k) {
                int a = s[(r + k) % n], b = s[(best + k) % n];
                if (a != b) {
                    if (a < b) best = r;
                    break;
                }
            }
        }
        std::vector<int> out(n);
        for (std::size_t k = 0; k < n; ++k) out[k] = s[(best + k) % n];
        return out;
    };
    std::vector<int> fwd = least(seq);
    std::reverse(seq.begin(), seq.end());
    std::vector<int> rev = least(seq);
    return fwd <= rev ? fwd : rev;
}

}  // namespace

Cycle::Cycle(const Graph& g, std::vector<int> vertex_seq) {
    if (vertex_seq.size() < 3) throw structure_error("cycle needs at least 3 vertices");
    std::set<int> distinct(vertex_seq.begin(), vertex_seq.end());
    if (distinct.size() != vertex_seq.size())
        throw structure_error("cycle has repeated vertices");
    verts_ = canonicalize(std::move(vertex_seq));
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        int a = verts_[i], b = verts_[(i + 1) % verts_.size()];
        int e = g.edge_index_checked(a, b);
        if (e >= 64) throw size_error("cycle machinery requires fewer than 64 edges");
        edges_.push_back(e);
        emask_ |= (1ull << e);
        vmask_ |= (1u << a);
    }
    std::sort(edges_.begin(), edges_.end());
}

std::vector<std::string> Cycle::labels(const Graph& g) const {
    std::vector<std::string> out;
    out.reserve(verts_.size());
    for (int v : verts_) out.push_back(g.label(v));
    return out;
}

std::string Cycle::to_string(const Graph& g) const {
    std::string out = "(";
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (i) out += ",";
        out += g.label(verts_[i]);
    }
    return out + ")";
}

Cycle make_cycle(const Graph& g, const std::vector<std::string>& labels) {
    return Cycle(g, g.vertex_ids(labels));
}

std::vector<Cycle> enumerate_triangles(const Graph& g) {
    std::vector<Cycle> out;
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!g.adjacent(a, b)) continue;
            std::uint32_t common = g.neighbor_mask(a) & g.neighbor_mask(b);
            for (int c = b + 1; c < n; ++c)
                if (common >> c & 1) out.emplace_back(g, std::vector<int>{a, b, c});
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cycle> enumerate_cycles(const Graph& g, int max_len) {
    if (max_len < 3) throw std::invalid_argument("max_len must be >= 3");
    std::vector<Cycle> out;
    const int n = g.vertex_count();
    std::vector<int> path;
    std::uint32_t on_path = 0;

    // Paths start at the least vertex of the cycle; the second vertex is kept
    // below the last so each cycle is produced exactly once.
    auto extend = [&](auto&& self, int start, int v) -> void {
        for (int w : g.neighbors(v)) {
            if (w == start && path.size() >= 3 && path[1] < path.back()) {
                out.emplace_back(g, path);
                continue;
            }
            if (w <= start || (on_path >> w & 1)) continue;
            if (static_cast<int>(path.size()) >= max_len) continue;
            path.push_back(w);
            on_path |= (1u << w);
            self(self, start, w);
            on_path &= ~(1u << w);
            path.pop_back();
        }
    };

    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        on_path = (1u << s);
        extend(extend, s, s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, int>> disjoint_cycle_pairs(const std::vector<Cycle>& cycles) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < cycles.size(); ++i)
        for (std::size_t j = i + 1; j < cycles.size(); ++j)
            if (cycles[i].disjoint(cycles[j]))
                out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Intersection intersection_type(const Graph& g, const Cycle& c1, const Cycle& c2) {
    Intersection r;
    std::uint32_t vshared = c1.vertex_mask() & c2.vertex_mask();
    std::uint64_t eshared = c1.edge_mask() & c2.edge_mask();
    r.shared_vertices = __builtin_popcount(vshared);
    r.shared_edges = __builtin_popcountll(eshared);

    if (c1 == c2) {
        r.type = IntersectionType::Identical;
        return r;
    }
    if (r.shared_vertices == 0) {
        r.type = IntersectionType::Empty;
        return r;
    }
    if (r.shared_edges == 0) {
        r.type = r.shared_vertices == 1 ? IntersectionType::SingleVertex : IntersectionType::Other;
        return r;
    }

    // Path test on the shared subgraph: connected, acyclic, no stray vertices.
    if (r.shared_edges != r.shared_vertices - 1) {
        r.type = IntersectionType::Other;
        return r;
    }
    std::vector<int> deg(g.vertex_count(), 0);
    std::vector<std::vector<int>> adj(g.vertex_count());
    for (std::uint64_t bits = eshared; bits; bits &= bits - 1) {
        int e = __builtin_ctzll(bits);
        auto [a, b] = g.edge(e);
        deg[a]++;
        deg[b]++;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    int endpoints = 0, start = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!(vshared >> v & 1)) continue;
        if (deg[v] == 0 || deg[v] > 2) {
            r.type = IntersectionType::Other;
            return r;
        }
        if (deg[v] == 1) {
            endpoints++;
            start = v;
        }
    }
    if (endpoints != 2) {
        r.type = IntersectionType::Other;
        return r;
    }
    // connectivity walk from one endpoint
    std::uint32_t seen = 0;
    std::vector<int> stack{start};
    seen |= (1u << start);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!(seen >> w & 1)) {
                seen |= (1u << w);
                stack.push_back(w);
            }
    }
    r.type = seen == vshared ? IntersectionType::SimplePath : IntersectionType::Other;
    return r;
}

const char* to_string(IntersectionType t) {
    switch (t) {
        case IntersectionType::Empty: return "empty";
        case IntersectionType::SingleVertex: return "single-vertex";
        case IntersectionType::SimplePath: return "simple-path";
        case IntersectionType::Identical: return "identical";
        case IntersectionType::Other: return "other";
    }
    return "?";
}

}  // namespace rp3link
