#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hgmd/hamming.hpp"

namespace hgmd {

// Colors are 1-based coordinate positions: 1 = blue, 2 = green, 3 = pink.
using Color = int;

// A set of landmarks W on a graph, together with its blocks
// W_{i,a} = { w in W : w_i = a }. Members are kept in lexicographic order.
class LandmarkSet {
public:
    explicit LandmarkSet(GhgParams graph);
    LandmarkSet(GhgParams graph, std::vector<Vertex> members);

    const GhgParams& graph() const noexcept { return graph_; }
    const std::vector<Vertex>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    const Vertex& member(std::size_t index) const { return members_[index]; }

    bool contains(const Vertex& v) const;
    std::optional<std::size_t> index_of(const Vertex& v) const;

    // Member indices of W_{i,a}, sorted. Throws InvalidBlock when out of range.
    const std::vector<std::size_t>& block(Color i, int a) const;
    std::size_t block_size(Color i, int a) const { return block(i, a).size(); }

    // W plus one vertex, on the same graph.
    LandmarkSet with(const Vertex& v) const;
    // The same members on another graph (members must fit).
    LandmarkSet on_graph(GhgParams graph) const;

    bool operator==(const LandmarkSet& other) const {
        return graph_ == other.graph_ && members_ == other.members_;
    }

private:
    void index_blocks();

    GhgParams graph_;
    std::vector<Vertex> members_;
    // blocks_[i-1][a-1]
    std::vector<std::vector<std::vector<std::size_t>>> blocks_;
};

enum class Verdict { Resolving, Unresolved, Dimension, Nonexistent };

std::string to_string(Verdict v);

struct SearchStats {
    std::uint64_t space_size = 0;   // subsets in the (normalized) search space
    std::uint64_t examined = 0;     // complete candidates tested for collisions
    std::uint64_t pruned = 0;       // subtrees cut by the block-sum bound
    bool normalized = true;
    bool pruning = true;
    double elapsed_seconds = 0.0;
};

struct SizeAttempt {
    std::size_t size = 0;
    bool found = false;
    SearchStats stats;
};

// Outcome of a verification or search.
//  - Resolving:   basis holds the verified set.
//  - Unresolved:  witness holds two distinct non-landmarks with equal codes.
//  - Dimension:   dimension and basis hold a metric basis; attestation says
//                 how minimality was established.
//  - Nonexistent: no resolving set of the requested size exists; stats hold
//                 the exhaustive search counts.
class Certificate {
public:
    static Certificate resolving(LandmarkSet basis);
    // Throws InvalidPair unless x and y are distinct non-landmarks that no
    // landmark distinguishes.
    static Certificate unresolved(const LandmarkSet& w, Vertex x, Vertex y);
    static Certificate dimension(std::size_t value, LandmarkSet basis, std::string attestation,
                                 std::vector<SizeAttempt> attempts = {});
    static Certificate nonexistent(GhgParams graph, std::size_t size, SearchStats stats);

    Verdict verdict() const noexcept { return verdict_; }
    const GhgParams& graph() const noexcept { return graph_; }
    const std::optional<std::pair<Vertex, Vertex>>& witness() const noexcept { return witness_; }
    const std::optional<LandmarkSet>& basis() const noexcept { return basis_; }
    std::optional<std::size_t> dimension_value() const noexcept { return dimension_; }
    std::optional<std::size_t> requested_size() const noexcept { return requested_size_; }
    const std::string& attestation() const noexcept { return attestation_; }
    const std::optional<SearchStats>& stats() const noexcept { return stats_; }
    const std::vector<SizeAttempt>& attempts() const noexcept { return attempts_; }

    bool is_resolving() const noexcept { return verdict_ == Verdict::Resolving; }

    void set_stats(SearchStats stats) { stats_ = stats; }

private:
    explicit Certificate(Verdict verdict, GhgParams graph)
        : verdict_(verdict), graph_(std::move(graph)) {}

    Verdict verdict_;
    GhgParams graph_;
    std::optional<std::pair<Vertex, Vertex>> witness_;
    std::optional<LandmarkSet> basis_;
    std::optional<std::size_t> dimension_;
    std::optional<std::size_t> requested_size_;
    std::string attestation_;
    std::optional<SearchStats> stats_;
    std::vector<SizeAttempt> attempts_;
};

// W_{i,a} as vertices.
std::vector<Vertex> blocks(const LandmarkSet& w, Color i, int a);

// Landmarks sharing at least one coordinate with v (the union of v's blocks),
// in lexicographic order. Throws IsLandmark when v is in W.
std::vector<Vertex> code(const LandmarkSet& w, const Vertex& v);

// True when no landmark distinguishes x from y by distance.
bool same_distance_profile(const LandmarkSet& w, const Vertex& x, const Vertex& y);

// Code-collision verifier. Requires the diameter-two closed form.
// The witness of an Unresolved certificate is the lexicographically least
// colliding pair.
Certificate is_resolving(const LandmarkSet& w);

// Independent verifier from full distance vectors; works for any K within
// the breadth-first limit and for closed-form graphs up to 10^6 vertices.
Certificate is_resolving_by_distance(const LandmarkSet& w);

inline constexpr std::uint64_t kDistanceVerifierLimit = 1'000'000;

// 2*max(n_i) - 1; every n_i must be at least 3.
std::size_t lower_bound(int n1, int n2, int n3);
std::size_t lower_bound(const std::vector<int>& dims);

struct BlockSumViolation {
    Color color;
    int a;
    int b;
    bool operator==(const BlockSumViolation&) const = default;
};

// Triples (i,a,b), a<b, with |W_{i,a}| + |W_{i,b}| < 3.
std::vector<BlockSumViolation> block_sum_violations(const LandmarkSet& w);

// Per color: (#blocks of size 1, #blocks of size 2) == (1, n-1). Expected of
// every resolving set of size 2n-1 on a diagonal graph.
bool has_one_loop_profile(const LandmarkSet& w);

}  // namespace hgmd
