#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rp3link {

/// Error hierarchy; everything semantic derives from std::runtime_error so
/// callers can distinguish usage problems (std::invalid_argument) from data
/// problems.
struct label_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct size_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct structure_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Orders labels the way the constructions do: digit runs compare as numbers,
/// everything else bytewise, so "2" < "10" and "7" < "A".
bool label_less(const std::string& a, const std::string& b);

/// Small simple undirected graph with stable vertex labels and dense edge
/// indices. Vertices are addressed internally by id (position in declared
/// order); edges are normalized to (lo, hi) id pairs and indexed in
/// lexicographic order of those pairs, which makes every derived artifact
/// (signing files, cycle enumerations, reports) byte-stable.
class Graph {
  public:
    Graph() = default;
    Graph(std::vector<std::string> labels,
          const std::vector<std::pair<std::string, std::string>>& edges);

    /// K_n on labels "1".."n" (or the given labels). n is capped at 16; the
    /// enumeration machinery is not meant for anything larger.
    static Graph complete(int n);
    static Graph complete(std::vector<std::string> labels);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& label(int v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Id of a declared label; throws label_error for unknown labels.
    int vertex(const std::string& label) const;
    bool has_vertex(const std::string& label) const;

    const std::pair<int, int>& edge(int index) const { return edges_.at(index); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::optional<int> edge_index(int a, int b) const;
    int edge_index_checked(int a, int b) const;
    bool adjacent(int a, int b) const;
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    /// Neighbors of v as a vertex bitmask (vertex ids fit in 32 bits).
    std::uint32_t neighbor_mask(int v) const { return nbr_mask_.at(v); }

    bool is_complete_on(std::uint32_t vertex_mask) const;

    /// Connected components as sorted vertex-id lists, ordered by least id.
    std::vector<std::vector<int>> components() const;

    bool operator==(const Graph& other) const {
        return labels_ == other.labels_ && edges_ == other.edges_;
    }

    std::vector<int> vertex_ids(const std::vector<std::string>& labels) const;

  private:
    std::vector<std::string> labels_;
    std::map<std::string, int> index_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint32_t> nbr_mask_;
    std::map<std::pair<int, int>, int> edge_index_;
};

/// Induced subgraph together with the maps back into the parent graph.
/// vertex_map[i] / edge_map[j] give parent ids for the subgraph's i-th vertex
/// and j-th edge.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map;
    std::vector<int> edge_map;
};

/// Subgraph induced by the given labels: those vertices (in parent order) and
/// every parent edge with both endpoints among them.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<std::string>& vertices);

}  // namespace rp3link
