#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgmd/resolving.hpp"

namespace hgmd {

// A nonempty block W_{i,a} seen as a colored hyperedge of the landmark graph.
struct Hyperedge {
    Color color;
    int value;
    std::vector<std::size_t> members;  // indices into LandmarkGraph::vertices
};

// The edge-colored hypergraph G(W): landmarks as vertices, nonempty blocks as
// hyperedges. Hyperedges of one color partition the vertices.
struct LandmarkGraph {
    std::vector<Vertex> vertices;
    std::vector<Hyperedge> hyperedges;

    std::size_t count(Color color, std::size_t size) const;
};

LandmarkGraph build_landmark_graph(const LandmarkSet& w);

enum class SystemKind { TwoBasic, TripleLooped, Other };

std::string to_string(SystemKind kind);

struct SystemClass {
    SystemKind kind = SystemKind::Other;
    std::optional<Vertex> loop_vertex;
};

// TwoBasic: on HG(n,n,n;3), every block has exactly two members and no two
// landmarks agree in two coordinates.
// TripleLooped: on HG(n,n,n;3), W = B u {(n,n,n)} with B two-basic on [n-1]^3.
SystemClass classify(const LandmarkSet& w);

// A cycle in the plain-edge part of G(W). colors[j] is the color of the edge
// landmarks[j] -- landmarks[j+1 mod L].
struct ColoredCycle {
    std::vector<Vertex> landmarks;
    std::vector<Color> colors;
    bool operator==(const ColoredCycle&) const = default;
};

struct ForbiddenReport {
    // True when the scanned graph has the structure of a two-basic or
    // triple-looped system, so that the characterization applies.
    bool applicable = false;
    std::vector<ColoredCycle> c4;                 // 4-cycles with exactly three colors
    std::vector<ColoredCycle> c6;                 // 6-cycles colored a b c a b c
    std::vector<ColoredCycle> rainbow_triangles;  // 3-cycles

    bool empty() const noexcept { return c4.empty() && c6.empty() && rainbow_triangles.empty(); }
};

// Exhaustive scan of the size-2 hyperedges for the three forbidden shapes.
// Cycles are reported once, rotated to start at their least landmark and
// oriented towards the smaller neighbour.
ForbiddenReport forbidden_scan(const LandmarkGraph& g);

// Resolvability decided from the landmark graph alone. Requires a diagonal
// graph and a TwoBasic or TripleLooped system, else NotApplicable. An
// Unresolved answer carries the witness pair read off the first forbidden
// configuration.
Certificate predict_resolving(const LandmarkSet& w);

// W u {(n+1,n+1,n+1)} on HG(n+1,n+1,n+1;3) for W on HG(n,n,n;3).
LandmarkSet extend_triple_looped(const LandmarkSet& w);

enum class FootprintShape { C3, P4, P3_P2, P2x3, L2_P2, P3_L1, P2x2_L1, K13, L3, None, Other };

std::string to_string(FootprintShape shape);

struct Footprint {
    std::vector<Vertex> covered;
    FootprintShape shape = FootprintShape::None;
};

// Subgraph of G(W) induced by the blocks W_{1,v1}, W_{2,v2}, W_{3,v3}.
Footprint footprint(const LandmarkSet& w, const Vertex& v);

// Shapes a vertex may have for a system of the given kind.
bool footprint_permitted(SystemKind kind, bool is_landmark, FootprintShape shape);

}  // namespace hgmd
