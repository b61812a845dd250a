#pragma once

#include <vector>

#include "rp3link/cycle.hpp"
#include "rp3link/graph.hpp"

namespace rp3link {

/// Vertex permutation of a fixed graph, stored as the image table over ids.
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {}
    static Permutation identity(int n);

    int operator()(int v) const { return img_.at(v); }
    int size() const { return static_cast<int>(img_.size()); }
    const std::vector<int>& images() const { return img_; }

    Permutation compose(const Permutation& then) const;  // applies *this first
    Permutation inverse() const;

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    /// True iff the permutation maps the edge set of g onto itself.
    bool is_automorphism(const Graph& g) const;

    Cycle apply(const Graph& g, const Cycle& c) const;

  private:
    std::vector<int> img_;
};

/// Full automorphism group by backtracking with degree and adjacency pruning,
/// in lexicographic order of image tuples. Guarded at 12 vertices: the group
/// is materialized in full.
std::vector<Permutation> automorphisms(const Graph& g);

/// A small generating set for Aut(g): the transposition and n-cycle for
/// complete graphs, the full group otherwise (12-vertex budget applies).
std::vector<Permutation> automorphism_generators(const Graph& g);

struct TriangleOrbits {
    std::vector<Cycle> triangles;            // enumerate_triangles order
    std::vector<std::vector<int>> orbits;    // triangle indices, sorted
    std::vector<int> orbit_of;               // triangle index -> orbit index
    std::vector<Cycle> representatives;      // least triangle of each orbit
};

/// Orbits of the triangles under the full automorphism group, ordered by
/// least representative.
TriangleOrbits triangle_orbits(const Graph& g);

}  // namespace rp3link
