#pragma once

#include <string>
#include <vector>

#include "rp3link/graph.hpp"

namespace rp3link {

/// A built graph plus provenance of its parts: which named construction each
/// connected piece came from. The part kinds drive axiom classification in
/// searches (a part whose graph is known intrinsically triple-linked in
/// 3-space makes an all-0-homologous class axiom-dependent rather than
/// silent).
struct Construction {
    Graph graph;
    struct Part {
        std::string kind;           // "k10", "k6-c6-k6", ...
        std::vector<int> vertices;  // ids in graph
    };
    std::vector<Part> parts;
    std::string descriptor;
};

/// Descriptors:
///   k<n>                  complete graph on labels 1..n
///   k6-c6-k6              two K6s joined by a 6-cycle of connector edges,
///                         vertices {1..6, A..F}, connectors
///                         (4,A),(4,C),(5,A),(5,B),(6,B),(6,C)
///   k7-e-k7               two K7s sharing the edge (6,7), vertices {1..7, A..E}
///   union:<d1>,<d2>,...   disjoint union; labels prefixed "1:", "2:", ...
/// Unknown descriptors raise parse_error.
Construction build_construction(const std::string& descriptor);

/// True when the named construction kind is known to be intrinsically
/// triple-linked in 3-space, which makes the spatial axiom applicable to an
/// all-0-homologous part.
bool spatially_triple_linked_kind(const std::string& kind);

}  // namespace rp3link
