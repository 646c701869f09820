#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hgmd/resolving.hpp"

namespace hgmd {

inline constexpr std::uint64_t kDefaultMaxCandidates = 1'000'000'000;

struct SearchProgress {
    std::uint64_t examined = 0;
    std::uint64_t pruned = 0;
    double elapsed_seconds = 0.0;
};

struct SearchOptions {
    // Fix the landmark (1,1,1); valid because the graph is vertex-transitive.
    bool normalize = true;
    // Cut partial subsets that can no longer satisfy |W_{i,a}|+|W_{i,b}| >= 3.
    bool prune = true;
    // metric_dimension: search small cases instead of relying on the construction.
    bool exhaustive = true;
    unsigned workers = 0;  // 0: hardware concurrency
    unsigned split_depth = 2;
    std::uint64_t max_candidates = kDefaultMaxCandidates;  // bound on the search space size
    double max_seconds = 0.0;                               // 0: unlimited
    double progress_interval_seconds = 5.0;
    std::function<void(const SearchProgress&)> progress;
};

// Exhaustive search for a resolving set of size s on HG(n1,n2,n3;3) with at
// most 64 vertices. Returns Resolving with the first basis in enumeration
// order, or Nonexistent with exact counts. Counts and basis do not depend on
// workers or split_depth. Throws BudgetExceeded naming the bound that tripped.
Certificate exists_resolving_of_size(const GhgParams& g, std::size_t s, const SearchOptions& opts = {});

// Metric dimension of HG(n,n,n;3). For n in {3,4} with opts.exhaustive the
// answer is certified by search from the lower bound upwards; otherwise the
// basis comes from metric_basis(n) and minimality from the lower bound.
Certificate metric_dimension(const GhgParams& g, const SearchOptions& opts = {});

// Two-basic systems on HG(n,n,n;3). n = 3: all of them, in lexicographic
// order of their sorted member lists. n >= 4: uniform samples (with
// repetition) drawn from a generator seeded with `seed`. At most `budget`
// systems are produced.
std::vector<LandmarkSet> enumerate_two_basic(int n, std::size_t budget, std::uint64_t seed = 0);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace hgmd
