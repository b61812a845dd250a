#include "rp3link/graph.hpp"

#include <algorithm>
#include <cctype>

namespace rp3link {

bool label_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        char ca = a[i], cb = b[j];
        bool da = std::isdigit(static_cast<unsigned char>(ca)) != 0;
        bool db = std::isdigit(static_cast<unsigned char>(cb)) != 0;
        if (da && db) {
            std::size_t ia = i, jb = j;
            while (ia < a.size() && std::isdigit(static_cast<unsigned char>(a[ia]))) ia++;
            while (jb < b.size() && std::isdigit(static_cast<unsigned char>(b[jb]))) jb++;
            // compare digit runs numerically: longer run (sans leading zeros) wins
            std::string ra = a.substr(i, ia - i), rb = b.substr(j, jb - j);
            ra.erase(0, ra.find_first_not_of('0') == std::string::npos ? ra.size() - 1
                                                                       : ra.find_first_not_of('0'));
            rb.erase(0, rb.find_first_not_of('0') == std::string::npos ? rb.size() - 1
                                                                       : rb.find_first_not_of('0'));
            if (ra.size() != rb.size()) return ra.size() < rb.size();
            if (ra != rb) return ra < rb;
            i = ia;
            j = jb;
        } else {
            if (ca != cb) return ca < cb;
            i++;
            j++;
        }
    }
    return a.size() - i < b.size() - j;
}

Graph::Graph(std::vector<std::string> labels,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : labels_(std::move(labels)) {
    if (labels_.size() > 30)
        throw size_error("graph too large: " + std::to_string(labels_.size()) +
                         " vertices (limit 30)");
    for (int v = 0; v < static_cast<int>(labels_.size()); ++v) {
        if (!index_.emplace(labels_[v], v).second)
            throw label_error("duplicate vertex label: " + labels_[v]);
    }
    std::vector<std::pair<int, int>> norm;
    norm.reserve(edges.size());
    for (const auto& [la, lb] : edges) {
        int a = vertex(la), b = vertex(lb);
        if (a == b) throw structure_error("loop edge at vertex " + la);
        norm.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(norm.begin(), norm.end());
    if (std::adjacent_find(norm.begin(), norm.end()) != norm.end())
        throw structure_error("duplicate edge in graph");
    edges_ = std::move(norm);

    adj_.assign(labels_.size(), {});
    nbr_mask_.assign(labels_.size(), 0);
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        auto [a, b] = edges_[e];
        adj_[a].push_back(b);
        adj_[b].push_back(a);
        nbr_mask_[a] |= (1u << b);
        nbr_mask_[b] |= (1u << a);
        edge_index_.emplace(edges_[e], e);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

Graph Graph::complete(int n) {
    if (n < 1 || n > 16)
        throw size_error("complete graph order out of range [1,16]: " + std::to_string(n));
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return complete(std::move(labels));
}

Graph Graph::complete(std::vector<std::string> labels) {
    if (labels.empty() || labels.size() > 16)
        throw size_error("complete graph order out of range [1,16]");
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            edges.emplace_back(labels[i], labels[j]);
    return Graph(std::move(labels), edges);
}

int Graph::vertex(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw label_error("unknown vertex label: " + label);
    return it->second;
}

bool Graph::has_vertex(const std::string& label) const { return index_.count(label) != 0; }

std::optional<int> Graph::edge_index(int a, int b) const {
    auto it = edge_index_.find({std::min(a, b), std::max(a, b)});
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
}

int Graph::edge_index_checked(int a, int b) const {
    auto e = edge_index(a, b);
    if (!e)
        throw structure_error("no edge between " + label(a) + " and " + label(b));
    return *e;
}

bool Graph::adjacent(int a, int b) const { return edge_index(a, b).has_value(); }

bool Graph::is_complete_on(std::uint32_t vertex_mask) const {
    for (int a = 0; a < vertex_count(); ++a) {
        if (!(vertex_mask >> a & 1)) continue;
        for (int b = a + 1; b < vertex_count(); ++b)
            if ((vertex_mask >> b & 1) && !adjacent(a, b)) return false;
    }
    return true;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<int> comp(vertex_count(), -1);
    int ncomp = 0;
    for (int s = 0; s < vertex_count(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj_[v])
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ncomp++;
    }
    std::vector<std::vector<int>> out(ncomp);
    for (int v = 0; v < vertex_count(); ++v) out[comp[v]].push_back(v);
    return out;
}

std::vector<int> Graph::vertex_ids(const std::vector<std::string>& labels) const {
    std::vector<int> ids;
    ids.reserve(labels.size());
    for (const auto& l : labels) ids.push_back(vertex(l));
    return ids;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<std::string>& vertices) {
    std::vector<int> ids = g.vertex_ids(vertices);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    InducedSubgraph out;
    out.vertex_map = ids;
    std::vector<std::string> labels;
    labels.reserve(ids.size());
    for (int v : ids) labels.push_back(g.label(v));

    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::pair<int, int>> parent_pairs;
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (auto e = g.edge_index(ids[i], ids[j])) {
                edges.emplace_back(g.label(ids[i]), g.label(ids[j]));
                parent_pairs.emplace_back(ids[i], ids[j]);
            }
    out.graph = Graph(labels, edges);
    out.edge_map.assign(out.graph.edge_count(), -1);
    for (int e = 0; e < out.graph.edge_count(); ++e) {
        auto [a, b] = out.graph.edge(e);
        out.edge_map[e] = g.edge_index_checked(out.vertex_map[a], out.vertex_map[b]);
    }
    return out;
}

}  // namespace rp3link
