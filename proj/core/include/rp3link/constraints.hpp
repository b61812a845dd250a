#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rp3link/cycle.hpp"
#include "rp3link/signing.hpp"

namespace rp3link {

/// Partial description of a signing as a GF(2) linear system over the edge
/// sign variables: fixed edge signs are unit rows, fixed cycle classes are
/// cycle-indicator rows. Kept in echelon form; queries reduce against the row
/// space. A cycle's class is "determined" when its indicator lies in the row
/// span, and every signing consistent with the system then agrees on it.
class SignConstraints {
  public:
    SignConstraints() = default;
    explicit SignConstraints(const Graph& g);

    const Graph& graph() const { return *g_; }
    bool consistent() const { return consistent_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    void fix_edge(int edge_index, Z2 value);
    void fix_edge(const std::string& a, const std::string& b, Z2 value);
    void fix_cycle(const Cycle& c, Z2 value);
    void fix_mask(std::uint64_t mask, Z2 value);

    /// Value of the parity over the given edge mask if the system determines
    /// it, nullopt otherwise.
    std::optional<Z2> eval_mask(std::uint64_t mask) const;
    std::optional<Z2> eval_cycle(const Cycle& c) const { return eval_mask(c.edge_mask()); }
    std::optional<Z2> eval_edge(int edge_index) const { return eval_mask(1ull << edge_index); }

    bool implies(std::uint64_t mask, Z2 value) const;

    /// True when all edges are determined; then concrete() yields the signing.
    bool fully_determined() const;
    EdgeSigning concrete() const;

    /// The four triangles of the K4 induced by the given vertex ids, in the
    /// order "triangle omitting the largest vertex" .. "omitting the least".
    std::array<Cycle, 4> k4_triangles(const std::vector<int>& k4) const;

    /// All assignments of classes to the four triangles of the K4 consistent
    /// with this system (evenness of the count is automatic in the model).
    std::vector<std::array<Z2, 4>> k4_assignments(const std::vector<int>& k4) const;

    /// Whether adding the given (mask, value) rows keeps the system
    /// consistent.
    bool compatible(const std::vector<std::pair<std::uint64_t, Z2>>& rows) const;

    const std::vector<std::pair<std::uint64_t, std::uint8_t>>& rows() const { return rows_; }

  private:
    const Graph* g_ = nullptr;
    // echelon rows: mask plus rhs bit, pivot = lowest set bit, strictly
    // increasing pivots
    std::vector<std::pair<std::uint64_t, std::uint8_t>> rows_;
    bool consistent_ = true;

    std::pair<std::uint64_t, std::uint8_t> reduce(std::uint64_t mask, std::uint8_t rhs) const;
};

}  // namespace rp3link
