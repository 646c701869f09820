#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "hgmd/resolving.hpp"

namespace hgmd {

inline constexpr Color kBlue = 1;
inline constexpr Color kGreen = 2;
inline constexpr Color kPink = 3;

struct ColoredEdge {
    std::size_t u;
    std::size_t v;
    Color color;
};

// A cubic graph on 2k vertices with a proper 3-edge-coloring. Vertices are
// labelled p1..p4, q1..qm, p1'..p4', q1'..qm' (m = k-4), in that index order;
// green edges join x and x'.
struct ColoredCubicGraph {
    int k = 0;
    std::vector<std::string> labels;
    std::vector<ColoredEdge> edges;

    std::size_t order() const noexcept { return labels.size(); }
    // Every vertex has exactly one incident edge of each color, no loops, no
    // parallel edges.
    bool is_simple_cubic_properly_colored() const;
};

// k = 4: the Moebius ladder on 8 vertices, octagon alternating pink/blue with
// green rungs between antipodal vertices. k >= 6: Hamiltonian cycle with
// alternating pink/blue edges (pink on p1p2) plus green chords x x'.
// Throws Unsupported for k = 5 and k <= 3.
ColoredCubicGraph construct_cubic(int k);

// Numbers the edges of each color 1..n-1 (sorted by endpoints) and maps each
// vertex to (blue, green, pink) edge numbers. Result lives on HG(n-1,n-1,n-1;3).
LandmarkSet graph_to_landmarks(const ColoredCubicGraph& g, int n);

// As above, then relabels: coordinate i value a becomes relabel[i-1][a-1].
// Each relabel[i] must be a permutation of 1..n-1.
LandmarkSet graph_to_landmarks(const ColoredCubicGraph& g, int n, const std::array<std::vector<int>, 3>& relabel);

// A metric basis of HG(n,n,n;3): size 2n for n in {3,4}, 2n-1 for n >= 5.
LandmarkSet metric_basis(int n);

// Size of metric_basis(n).
std::size_t metric_dimension_value(int n);

// Named landmark sets kept verbatim: "n3", "n6", "hg_5_7_11".
LandmarkSet fixture(std::string_view name);
std::vector<std::string> fixture_names();

}  // namespace hgmd
