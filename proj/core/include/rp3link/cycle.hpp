#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rp3link/graph.hpp"

namespace rp3link {

/// Simple cycle stored in canonical form: the vertex sequence is rotated and
/// reflected to the lexicographically least id sequence, so equal cycles
/// compare equal and enumeration orders are reproducible.
class Cycle {
  public:
    Cycle() = default;

    /// Builds from a vertex-id sequence (closed implicitly); validates that
    /// consecutive pairs are edges of g and vertices are distinct.
    Cycle(const Graph& g, std::vector<int> vertex_seq);

    const std::vector<int>& vertices() const { return verts_; }
    const std::vector<int>& edge_indices() const { return edges_; }
    std::uint32_t vertex_mask() const { return vmask_; }
    std::uint64_t edge_mask() const { return emask_; }
    int length() const { return static_cast<int>(verts_.size()); }

    bool disjoint(const Cycle& other) const { return (vmask_ & other.vmask_) == 0; }

    bool operator==(const Cycle& other) const { return verts_ == other.verts_; }
    bool operator<(const Cycle& other) const {
        if (verts_.size() != other.verts_.size()) return verts_.size() < other.verts_.size();
        return verts_ < other.verts_;
    }

    std::vector<std::string> labels(const Graph& g) const;
    std::string to_string(const Graph& g) const;

  private:
    std::vector<int> verts_;
    std::vector<int> edges_;
    std::uint32_t vmask_ = 0;
    std::uint64_t emask_ = 0;
};

/// Cycle from vertex labels.
Cycle make_cycle(const Graph& g, const std::vector<std::string>& labels);

/// All 3-cycles in canonical form, ordered lexicographically.
std::vector<Cycle> enumerate_triangles(const Graph& g);

/// All simple cycles with 3 <= length <= max_len, ordered by (length,
/// sequence). max_len < 3 is a usage error.
std::vector<Cycle> enumerate_cycles(const Graph& g, int max_len);

/// Unordered pairs of vertex-disjoint cycles, in lexicographic order of their
/// positions in the input sequence.
std::vector<std::pair<int, int>> disjoint_cycle_pairs(const std::vector<Cycle>& cycles);

enum class IntersectionType { Empty, SingleVertex, SimplePath, Identical, Other };

struct Intersection {
    IntersectionType type = IntersectionType::Empty;
    int shared_edges = 0;
    int shared_vertices = 0;
};

/// Classifies the intersection subgraph (shared vertices and shared edges) of
/// two cycles of the same graph. SimplePath requires a connected path with at
/// least one edge; two cycles equal as subgraphs classify as Identical; a
/// disconnected or branching intersection is Other.
Intersection intersection_type(const Graph& g, const Cycle& c1, const Cycle& c2);

const char* to_string(IntersectionType t);

}  // namespace rp3link
