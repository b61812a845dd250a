#include "rp3link/automorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rp3link {

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& then) const {
    std::vector<int> img(img_.size());
    for (std::size_t v = 0; v < img_.size(); ++v) img[v] = then(img_[v]);
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(img_.size());
    for (std::size_t v = 0; v < img_.size(); ++v) img[img_[v]] = static_cast<int>(v);
    return Permutation(std::move(img));
}

bool Permutation::is_automorphism(const Graph& g) const {
    if (size() != g.vertex_count()) return false;
    for (const auto& [a, b] : g.edges())
        if (!g.adjacent(img_[a], img_[b])) return false;
    return true;
}

Cycle Permutation::apply(const Graph& g, const Cycle& c) const {
    std::vector<int> seq;
    seq.reserve(c.vertices().size());
    for (int v : c.vertices()) seq.push_back(img_[v]);
    return Cycle(g, std::move(seq));
}

std::vector<Permutation> automorphisms(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 12) throw size_error("automorphism materialization capped at 12 vertices");

    std::vector<Permutation> out;
    std::vector<int> img(n, -1);
    std::vector<bool> used(n, false);

    auto extend = [&](auto&& self, int v) -> void {
        if (v == n) {
            out.emplace_back(img);
            return;
        }
        for (int t = 0; t < n; ++t) {
            if (used[t] || g.degree(t) != g.degree(v)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (g.adjacent(u, v) != g.adjacent(img[u], t)) ok = false;
            if (!ok) continue;
            img[v] = t;
            used[t] = true;
            self(self, v + 1);
            used[t] = false;
            img[v] = -1;
        }
    };
    extend(extend, 0);
    return out;
}

std::vector<Permutation> automorphism_generators(const Graph& g) {
    const int n = g.vertex_count();
    bool complete = g.edge_count() == n * (n - 1) / 2;
    if (complete && n >= 2) {
        std::vector<int> swap01(n), cyc(n);
        std::iota(swap01.begin(), swap01.end(), 0);
        std::swap(swap01[0], swap01[1]);
        for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
        return {Permutation(std::move(swap01)), Permutation(std::move(cyc))};
    }
    return automorphisms(g);
}

TriangleOrbits triangle_orbits(const Graph& g) {
    TriangleOrbits to;
    to.triangles = enumerate_triangles(g);
    const auto group = automorphisms(g);

    std::map<Cycle, int> index;
    for (std::size_t i = 0; i < to.triangles.size(); ++i)
        index.emplace(to.triangles[i], static_cast<int>(i));

    std::vector<int> parent(to.triangles.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& p : group)
        for (std::size_t i = 0; i < to.triangles.size(); ++i) {
            int j = index.at(p.apply(g, to.triangles[i]));
            int a = find(static_cast<int>(i)), b = find(j);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }

    std::map<int, int> root_to_orbit;
    to.orbit_of.assign(to.triangles.size(), -1);
    for (std::size_t i = 0; i < to.triangles.size(); ++i) {
        int r = find(static_cast<int>(i));
        auto [it, fresh] = root_to_orbit.emplace(r, static_cast<int>(to.orbits.size()));
        if (fresh) to.orbits.emplace_back();
        to.orbit_of[i] = it->second;
        to.orbits[it->second].push_back(static_cast<int>(i));
    }
    for (const auto& orbit : to.orbits) to.representatives.push_back(to.triangles[orbit.front()]);
    return to;
}

}  // namespace rp3link
