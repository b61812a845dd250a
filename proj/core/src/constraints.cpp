#include "rp3link/constraints.hpp"

#include <algorithm>

namespace rp3link {

SignConstraints::SignConstraints(const Graph& g) : g_(&g) {
    if (g.edge_count() > 64) throw size_error("constraint system limited to 64 edges");
}

std::pair<std::uint64_t, std::uint8_t> SignConstraints::reduce(std::uint64_t mask,
                                                               std::uint8_t rhs) const {
    for (const auto& [rmask, rrhs] : rows_) {
        if (!mask) break;
        std::uint64_t pivot = rmask & ~(rmask - 1);
        if (mask & pivot) {
            mask ^= rmask;
            rhs ^= rrhs;
        }
    }
    return {mask, rhs};
}

void SignConstraints::fix_mask(std::uint64_t mask, Z2 value) {
    auto [m, r] = reduce(mask, static_cast<std::uint8_t>(value));
    if (!m) {
        if (r) consistent_ = false;
        return;
    }
    // insert keeping pivots increasing, then re-reduce rows above
    std::uint64_t pivot = m & ~(m - 1);
    auto pos = std::find_if(rows_.begin(), rows_.end(), [&](const auto& row) {
        return (row.first & ~(row.first - 1)) > pivot;
    });
    pos = rows_.insert(pos, {m, r});
    for (auto it = rows_.begin(); it != rows_.end(); ++it) {
        if (it == pos) continue;
        if (it->first & pivot) {
            it->first ^= m;
            it->second ^= r;
        }
    }
}

void SignConstraints::fix_edge(int edge_index, Z2 value) {
    if (edge_index < 0 || edge_index >= g_->edge_count())
        throw structure_error("edge index out of range");
    fix_mask(1ull << edge_index, value);
}

void SignConstraints::fix_edge(const std::string& a, const std::string& b, Z2 value) {
    fix_edge(g_->edge_index_checked(g_->vertex(a), g_->vertex(b)), value);
}

void SignConstraints::fix_cycle(const Cycle& c, Z2 value) { fix_mask(c.edge_mask(), value); }

std::optional<Z2> SignConstraints::eval_mask(std::uint64_t mask) const {
    auto [m, r] = reduce(mask, 0);
    if (m) return std::nullopt;
    return static_cast<Z2>(r);
}

bool SignConstraints::implies(std::uint64_t mask, Z2 value) const {
    auto v = eval_mask(mask);
    return v && *v == value;
}

bool SignConstraints::fully_determined() const {
    if (!consistent_) return false;
    for (int e = 0; e < g_->edge_count(); ++e)
        if (!eval_edge(e)) return false;
    return true;
}

EdgeSigning SignConstraints::concrete() const {
    std::vector<std::uint8_t> signs(g_->edge_count(), 0);
    for (int e = 0; e < g_->edge_count(); ++e) {
        auto v = eval_edge(e);
        if (!v) throw structure_error("signing not fully determined by constraints");
        signs[e] = static_cast<std::uint8_t>(*v);
    }
    return EdgeSigning(*g_, std::move(signs));
}

std::array<Cycle, 4> SignConstraints::k4_triangles(const std::vector<int>& k4) const {
    if (k4.size() != 4) throw structure_error("need exactly 4 vertices");
    std::vector<int> vs = k4;
    std::sort(vs.begin(), vs.end());
    std::uint32_t mask = 0;
    for (int v : vs) mask |= (1u << v);
    if (!g_->is_complete_on(mask)) throw structure_error("vertices do not induce a K4");
    std::array<Cycle, 4> tris;
    for (int skip = 3; skip >= 0; --skip) {
        std::vector<int> tri;
        for (int i = 0; i < 4; ++i)
            if (i != skip) tri.push_back(vs[i]);
        tris[3 - skip] = Cycle(*g_, tri);
    }
    return tris;
}

std::vector<std::array<Z2, 4>> SignConstraints::k4_assignments(const std::vector<int>& k4) const {
    auto tris = k4_triangles(k4);
    std::vector<std::array<Z2, 4>> out;
    for (int bits = 0; bits < 16; ++bits) {
        if (__builtin_popcount(bits) % 2) continue;  // evenness is automatic, skip odd early
        std::array<Z2, 4> assign;
        std::vector<std::pair<std::uint64_t, Z2>> rows;
        for (int i = 0; i < 4; ++i) {
            assign[i] = (bits >> i) & 1;
            rows.push_back({tris[i].edge_mask(), assign[i]});
        }
        if (compatible(rows)) out.push_back(assign);
    }
    return out;
}

bool SignConstraints::compatible(const std::vector<std::pair<std::uint64_t, Z2>>& add) const {
    SignConstraints copy = *this;
    for (const auto& [mask, value] : add) {
        copy.fix_mask(mask, value);
        if (!copy.consistent()) return false;
    }
    return true;
}

}  // namespace rp3link
