#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace hgmd {

// A vertex of a generalized Hamming graph. Coordinates are 1-based.
class Vertex {
public:
    Vertex() = default;
    Vertex(std::initializer_list<int> coords) : coords_(coords) {}
    explicit Vertex(std::vector<int> coords) : coords_(std::move(coords)) {}

    std::size_t rank() const noexcept { return coords_.size(); }
    int operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<int>& coords() const noexcept { return coords_; }

    // "2,3,1"
    std::string to_string() const;
    static Vertex parse(std::string_view text);

    auto operator<=>(const Vertex&) const = default;
    bool operator==(const Vertex&) const = default;

private:
    std::vector<int> coords_;
};

// Descriptor of HG(n_1,...,n_r;K). The graph is never materialized; vertices
// are addressed either as Vertex values or by their lexicographic index
// (coordinate 1 most significant).
class GhgParams {
public:
    GhgParams(std::vector<int> dims, std::vector<int> distances);

    // HG(dims; {r})
    static GhgParams no_common_coordinate(std::vector<int> dims);
    // HG(n,n,n;{3})
    static GhgParams diagonal(int n);

    const std::vector<int>& dims() const noexcept { return dims_; }
    // Sorted, deduplicated distance set K.
    const std::vector<int>& distance_set() const noexcept { return distance_set_; }
    std::size_t rank() const noexcept { return dims_.size(); }
    int dim(std::size_t i) const { return dims_[i]; }

    bool in_distance_set(int k) const noexcept;
    // K = {r}
    bool is_no_common_coordinate() const noexcept;
    // K = {r} and every dim >= 3: distances follow the diameter-two closed form.
    bool has_closed_form() const noexcept;
    bool is_diagonal() const noexcept;

    std::uint64_t vertex_count() const noexcept;
    bool contains(const Vertex& v) const noexcept;
    // Throws InvalidVertex when v does not belong to this graph.
    void check(const Vertex& v) const;
    std::size_t index_of(const Vertex& v) const;
    Vertex vertex_at(std::size_t index) const;

    // "3x3x3;K=3"
    std::string to_string() const;
    // Accepts "n1xn2x...xnr" (K defaults to {r}) or "n1x...;K=k1,k2".
    static GhgParams parse(std::string_view text);

    bool operator==(const GhgParams&) const = default;

private:
    std::vector<int> dims_;
    std::vector<int> distance_set_;
};

inline constexpr std::uint64_t kBreadthFirstLimit = 10'000;

std::uint64_t vertex_count(const GhgParams& g);

// Number of coordinate positions where x and y differ.
int hamming_discrepancy(const Vertex& x, const Vertex& y);

bool adjacent(const GhgParams& g, const Vertex& x, const Vertex& y);

// Shortest-path distance. Uses the closed form when available, otherwise a
// breadth-first search limited to kBreadthFirstLimit vertices.
int distance(const GhgParams& g, const Vertex& x, const Vertex& y);

// Distances from source to every vertex, indexed by GhgParams::index_of.
// Unreachable vertices hold -1. Uses the closed form when available.
std::vector<int> distances_from(const GhgParams& g, const Vertex& source);

// Plain breadth-first search over adjacent(), regardless of closed form.
// Intended for cross-validation at desk scale.
std::vector<int> breadth_first_distances(const GhgParams& g, const Vertex& source);

}  // namespace hgmd
