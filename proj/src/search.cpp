#include "hgmd/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <thread>

#include "hgmd/construct.hpp"
#include "hgmd/error.hpp"

namespace hgmd {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(result);
}

namespace {

using Clock = std::chrono::steady_clock;
constexpr std::size_t kNoTask = std::numeric_limits<std::size_t>::max();
constexpr int kMaxValues = 64;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Immutable description of the search space shared by all workers.
struct Space {
    int vertices = 0;
    std::array<int, 3> dims{};
    std::vector<std::array<std::uint8_t, 3>> coords;  // 0-based values per vertex
    // open[p][i][a]: some vertex with index >= p has coordinate i equal to a
    std::vector<std::array<std::array<bool, kMaxValues>, 3>> open;

    explicit Space(const GhgParams& g) {
        vertices = static_cast<int>(g.vertex_count());
        for (std::size_t i = 0; i < 3; ++i) dims[i] = g.dim(i);
        for (int v = 0; v < vertices; ++v) {
            const auto x = g.vertex_at(static_cast<std::size_t>(v));
            coords.push_back({static_cast<std::uint8_t>(x[0] - 1), static_cast<std::uint8_t>(x[1] - 1),
                              static_cast<std::uint8_t>(x[2] - 1)});
        }
        open.resize(static_cast<std::size_t>(vertices) + 1);
        for (auto& o : open.back()) o.fill(false);
        for (int p = vertices - 1; p >= 0; --p) {
            auto& row = open[static_cast<std::size_t>(p)];
            row = open[static_cast<std::size_t>(p) + 1];
            for (std::size_t i = 0; i < 3; ++i) row[i][coords[static_cast<std::size_t>(p)][i]] = true;
        }
    }
};

struct Counters {
    std::uint64_t examined = 0;
    std::uint64_t pruned = 0;
};

// Mutable per-worker state: block sizes and block masks over vertex ids.
class Walker {
public:
    Walker(const Space& space, bool prune) : space_(space), prune_(prune) {
        for (auto& c : counts_) c.fill(0);
        for (auto& m : masks_) m.fill(0);
    }

    void push(int v) {
        const auto& c = space_.coords[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < 3; ++i) {
            ++counts_[i][c[i]];
            masks_[i][c[i]] |= bit(v);
        }
        chosen_ |= bit(v);
        picked_.push_back(v);
    }

    void pop() {
        const int v = picked_.back();
        picked_.pop_back();
        const auto& c = space_.coords[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < 3; ++i) {
            --counts_[i][c[i]];
            masks_[i][c[i]] &= ~bit(v);
        }
        chosen_ &= ~bit(v);
    }

    // Lower bound on additional picks, restricted to vertices >= next, needed
    // for every color to reach |W_{i,a}| + |W_{i,b}| >= 3.
    bool feasible(int next, int remaining) const {
        if (!prune_) return true;
        const auto& open = space_.open[static_cast<std::size_t>(next)];
        for (std::size_t i = 0; i < 3; ++i) {
            if (needed(i, open[i]) > remaining) return false;
        }
        return true;
    }

    // No two non-landmarks share a code.
    bool resolves() {
        ++stamp_;
        if (stamp_ == 0) {
            table_stamp_.fill(0);
            stamp_ = 1;
        }
        for (int v = 0; v < space_.vertices; ++v) {
            if (chosen_ & bit(v)) continue;
            const auto& c = space_.coords[static_cast<std::size_t>(v)];
            const std::uint64_t code = masks_[0][c[0]] | masks_[1][c[1]] | masks_[2][c[2]];
            std::size_t slot = static_cast<std::size_t>((code * 0x9e3779b97f4a7c15ULL) >> 57);
            while (table_stamp_[slot] == stamp_) {
                if (table_key_[slot] == code) return false;
                slot = (slot + 1) & 127;
            }
            table_stamp_[slot] = stamp_;
            table_key_[slot] = code;
        }
        return true;
    }

    const std::vector<int>& picked() const noexcept { return picked_; }

private:
    static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

    int needed(std::size_t color, const std::array<bool, kMaxValues>& open) const {
        constexpr int inf = std::numeric_limits<int>::max() / 4;
        const int n = space_.dims[color];
        const auto& cnt = counts_[color];
        int total2 = 0, blocked2 = 0, total3 = 0, blocked3 = 0;
        for (int a = 0; a < n; ++a) {
            const int d2 = std::max(0, 2 - cnt[a]);
            const int d3 = std::max(0, 3 - cnt[a]);
            total2 += d2;
            total3 += d3;
            blocked2 += d2 > 0 && !open[a];
            blocked3 += d3 > 0 && !open[a];
        }
        int best = inf;
        for (int a = 0; a < n; ++a) {
            const int d1 = std::max(0, 1 - cnt[a]);
            const int d2 = std::max(0, 2 - cnt[a]);
            const int d3 = std::max(0, 3 - cnt[a]);
            // block a may stay at 1, the rest reach 2
            if (blocked2 - (d2 > 0 && !open[a]) == 0 && (d1 == 0 || open[a])) {
                best = std::min(best, total2 - d2 + d1);
            }
            // block a may stay empty, the rest reach 3
            if (blocked3 - (d3 > 0 && !open[a]) == 0) best = std::min(best, total3 - d3);
        }
        return best;
    }

    const Space& space_;
    bool prune_;
    std::array<std::array<int, kMaxValues>, 3> counts_{};
    std::array<std::array<std::uint64_t, kMaxValues>, 3> masks_{};
    std::uint64_t chosen_ = 0;
    std::vector<int> picked_;
    std::array<std::uint64_t, 128> table_key_{};
    std::array<std::uint32_t, 128> table_stamp_{};
    std::uint32_t stamp_ = 0;
};

struct Task {
    std::vector<int> prefix;
    int next = 0;       // first candidate index for the remaining picks
    int remaining = 0;  // picks left after the prefix
};

struct TaskResult {
    Counters counters;
    std::vector<int> found;  // basis as vertex ids, empty if none
    bool done = false;
};

class Search {
public:
    Search(const GhgParams& g, std::size_t size, const SearchOptions& opts)
        : graph_(g), space_(g), size_(static_cast<int>(size)), opts_(opts), start_(Clock::now()) {}

    Certificate run() {
        generate_tasks();
        results_.assign(tasks_.size(), {});
        run_workers();
        if (timed_out_) {
            throw Error(ErrorCode::BudgetExceeded,
                        "max_seconds=" + std::to_string(opts_.max_seconds) + " exceeded after " +
                            std::to_string(progress_examined_.load()) + " candidates");
        }
        return finish();
    }

private:
    void generate_tasks() {
        Walker walker(space_, opts_.prune);
        Task root;
        int first = 0;
        if (opts_.normalize && size_ > 0) {
            walker.push(0);
            root.prefix = {0};
            first = 1;
        }
        root.next = first;
        root.remaining = size_ - static_cast<int>(root.prefix.size());
        const int depth = std::min<int>(static_cast<int>(opts_.split_depth), root.remaining);
        if (!walker.feasible(root.next, root.remaining)) {
            generation_prunes_.push_back(0);
            return;
        }
        split(walker, root, depth);
    }

    void split(Walker& walker, Task& task, int depth) {
        if (depth == 0) {
            tasks_.push_back(task);
            return;
        }
        for (int v = task.next; v <= space_.vertices - task.remaining; ++v) {
            walker.push(v);
            if (walker.feasible(v + 1, task.remaining - 1)) {
                Task child{task.prefix, v + 1, task.remaining - 1};
                child.prefix.push_back(v);
                split(walker, child, depth - 1);
            } else {
                generation_prunes_.push_back(tasks_.size());
            }
            walker.pop();
        }
    }

    void run_workers() {
        unsigned workers = opts_.workers ? opts_.workers : std::max(1u, std::thread::hardware_concurrency());
        workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, tasks_.size())));
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back([this] { worker(); });

        auto last_report = Clock::now();
        while (finished_workers_.load() < workers) {
            std::this_thread::sleep_for(std::chrono::milliseconds(20));
            if (opts_.max_seconds > 0 && seconds_since(start_) > opts_.max_seconds) timed_out_ = true;
            if (opts_.progress && std::chrono::duration<double>(Clock::now() - last_report).count() >=
                                      opts_.progress_interval_seconds) {
                last_report = Clock::now();
                opts_.progress({progress_examined_.load(), progress_pruned_.load(), seconds_since(start_)});
            }
        }
        for (auto& t : pool) t.join();
    }

    void worker() {
        Walker walker(space_, opts_.prune);
        while (true) {
            const std::size_t t = next_task_.fetch_add(1);
            if (t >= tasks_.size()) break;
            if (t > best_task_.load() || timed_out_) continue;
            run_task(walker, t);
        }
        finished_workers_.fetch_add(1);
    }

    void run_task(Walker& walker, std::size_t t) {
        const Task& task = tasks_[t];
        TaskResult& result = results_[t];
        for (int v : task.prefix) walker.push(v);
        bool aborted = false;
        descend(walker, task.next, task.remaining, t, result, aborted);
        for (std::size_t i = 0; i < task.prefix.size(); ++i) walker.pop();
        result.done = !aborted;
        progress_examined_.fetch_add(result.counters.examined - reported_.examined);
        progress_pruned_.fetch_add(result.counters.pruned - reported_.pruned);
        reported_ = {};
        if (!result.found.empty()) {
            std::size_t best = best_task_.load();
            while (t < best && !best_task_.compare_exchange_weak(best, t)) {
            }
        }
    }

    // Returns true once a basis is recorded in result.
    bool descend(Walker& walker, int next, int remaining, std::size_t t, TaskResult& result, bool& aborted) {
        if (remaining == 0) {
            ++result.counters.examined;
            if ((result.counters.examined & 0xFFF) == 0) checkpoint(t, result, aborted);
            if (walker.resolves()) {
                result.found = walker.picked();
                return true;
            }
            return false;
        }
        for (int v = next; v <= space_.vertices - remaining; ++v) {
            if (aborted) return false;
            walker.push(v);
            bool found = false;
            if (walker.feasible(v + 1, remaining - 1)) {
                found = descend(walker, v + 1, remaining - 1, t, result, aborted);
            } else {
                ++result.counters.pruned;
                if ((result.counters.pruned & 0xFFFF) == 0) checkpoint(t, result, aborted);
            }
            walker.pop();
            if (found) return true;
        }
        return false;
    }

    void checkpoint(std::size_t t, const TaskResult& result, bool& aborted) {
        progress_examined_.fetch_add(result.counters.examined - reported_.examined);
        progress_pruned_.fetch_add(result.counters.pruned - reported_.pruned);
        reported_ = result.counters;
        if (timed_out_ || t > best_task_.load()) aborted = true;
    }

    Certificate finish() {
        SearchStats stats;
        stats.space_size = space_size();
        stats.normalized = opts_.normalize;
        stats.pruning = opts_.prune;
        const std::size_t best = best_task_.load();
        const std::size_t limit = best == kNoTask ? tasks_.size() : best + 1;
        for (std::size_t t = 0; t < limit; ++t) {
            stats.examined += results_[t].counters.examined;
            stats.pruned += results_[t].counters.pruned;
        }
        for (std::size_t pos : generation_prunes_) {
            if (best == kNoTask || pos <= best) ++stats.pruned;
        }
        stats.elapsed_seconds = seconds_since(start_);
        if (best == kNoTask) return Certificate::nonexistent(graph_, static_cast<std::size_t>(size_), stats);

        std::vector<Vertex> members;
        for (int v : results_[best].found) members.push_back(graph_.vertex_at(static_cast<std::size_t>(v)));
        auto cert = Certificate::resolving(LandmarkSet(graph_, std::move(members)));
        cert.set_stats(stats);
        return cert;
    }

    std::uint64_t space_size() const {
        const auto n = static_cast<std::uint64_t>(space_.vertices);
        const auto s = static_cast<std::uint64_t>(size_);
        if (opts_.normalize && s > 0) return binomial(n - 1, s - 1);
        return binomial(n, s);
    }

    GhgParams graph_;
    Space space_;
    int size_;
    SearchOptions opts_;
    Clock::time_point start_;

    std::vector<Task> tasks_;
    std::vector<std::size_t> generation_prunes_;  // number of tasks emitted before each prune
    std::vector<TaskResult> results_;

    std::atomic<std::size_t> next_task_{0};
    std::atomic<std::size_t> best_task_{kNoTask};
    std::atomic<unsigned> finished_workers_{0};
    std::atomic<bool> timed_out_{false};
    std::atomic<std::uint64_t> progress_examined_{0};
    std::atomic<std::uint64_t> progress_pruned_{0};

    static thread_local Counters reported_;
};

thread_local Counters Search::reported_{};

void require_searchable(const GhgParams& g) {
    if (g.rank() != 3 || !g.has_closed_form()) {
        throw Error(ErrorCode::Unsupported, "exhaustive search needs HG(n1,n2,n3;3) with every n_i >= 3");
    }
    if (g.vertex_count() > 64) {
        throw Error(ErrorCode::Unsupported,
                    "exhaustive search limited to 64 vertices, " + g.to_string() + " has " +
                        std::to_string(g.vertex_count()));
    }
}

}  // namespace

Certificate exists_resolving_of_size(const GhgParams& g, std::size_t s, const SearchOptions& opts) {
    require_searchable(g);
    if (s > g.vertex_count()) {
        throw Error(ErrorCode::InvalidParams, "size exceeds vertex count");
    }
    const auto n = g.vertex_count();
    const auto space = (opts.normalize && s > 0) ? binomial(n - 1, s - 1) : binomial(n, s);
    if (space > opts.max_candidates) {
        throw Error(ErrorCode::BudgetExceeded, "max_candidates=" + std::to_string(opts.max_candidates) +
                                                   " below search space " + std::to_string(space));
    }
    Search search(g, s, opts);
    return search.run();
}

Certificate metric_dimension(const GhgParams& g, const SearchOptions& opts) {
    if (g.rank() != 3 || !g.is_diagonal() || !g.is_no_common_coordinate() || g.dim(0) < 3) {
        throw Error(ErrorCode::Unsupported, "metric dimension needs HG(n,n,n;3) with n >= 3, got " + g.to_string());
    }
    const int n = g.dim(0);
    const std::size_t bound = lower_bound(n, n, n);
    if (n <= 4 && opts.exhaustive) {
        std::vector<SizeAttempt> attempts;
        for (std::size_t s = bound; s <= g.vertex_count(); ++s) {
            auto cert = exists_resolving_of_size(g, s, opts);
            attempts.push_back({s, cert.is_resolving(), *cert.stats()});
            if (!cert.is_resolving()) continue;
            auto basis = *cert.basis();
            if (!is_resolving(basis).is_resolving()) {
                throw Error(ErrorCode::InvalidParams, "search returned a set that does not verify");
            }
            std::string note = "exhaustive search: lower bound " + std::to_string(bound);
            for (const auto& a : attempts) {
                if (!a.found) note += "; no resolving set of size " + std::to_string(a.size);
            }
            note += "; resolving set of size " + std::to_string(s) + " found";
            return Certificate::dimension(s, std::move(basis), note, std::move(attempts));
        }
        throw Error(ErrorCode::NotFound, "no resolving set found");
    }

    auto basis = metric_basis(n);
    if (!is_resolving(basis).is_resolving()) {
        throw Error(ErrorCode::InvalidParams, "constructed basis does not verify");
    }
    const auto size = basis.size();
    std::string note;
    if (size == bound) {
        note = "lower bound 2n-1 = " + std::to_string(bound) + " met by verified construction";
    } else {
        note = "verified construction of size " + std::to_string(size) + "; lower bound " + std::to_string(bound) +
               "; sizes below " + std::to_string(size) + " not searched (rerun with exhaustive search)";
    }
    return Certificate::dimension(size, std::move(basis), note);
}

namespace {

// Unbiased draw from [0, bound).
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

void shuffle(std::vector<int>& values, std::mt19937_64& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        std::swap(values[i - 1], values[draw(rng, i)]);
    }
}

// Landmark j has first coordinate j/2+1; the other coordinates come from
// arrangements of the multiset {1,1,2,2,...,n,n}. Each two-basic system
// arises from exactly 2^n arrangements.
std::optional<std::vector<Vertex>> assemble(const std::vector<int>& second, const std::vector<int>& third) {
    std::vector<Vertex> members;
    for (std::size_t j = 0; j < second.size(); ++j) {
        members.push_back(Vertex{static_cast<int>(j / 2) + 1, second[j], third[j]});
    }
    for (std::size_t x = 0; x < members.size(); ++x) {
        for (std::size_t y = x + 1; y < members.size(); ++y) {
            if (hamming_discrepancy(members[x], members[y]) <= 1) return std::nullopt;
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<int> doubled(int n) {
    std::vector<int> values;
    for (int a = 1; a <= n; ++a) {
        values.push_back(a);
        values.push_back(a);
    }
    return values;
}

}  // namespace

std::vector<LandmarkSet> enumerate_two_basic(int n, std::size_t budget, std::uint64_t seed) {
    if (n < 3) throw Error(ErrorCode::Unsupported, "two-basic systems need n >= 3");
    const auto g = GhgParams::diagonal(n);
    std::vector<LandmarkSet> out;
    if (n == 3) {
        std::set<std::vector<Vertex>> systems;
        auto second = doubled(n);
        do {
            auto third = doubled(n);
            do {
                if (auto members = assemble(second, third)) systems.insert(std::move(*members));
            } while (std::next_permutation(third.begin(), third.end()));
        } while (std::next_permutation(second.begin(), second.end()));
        for (const auto& members : systems) {
            if (out.size() >= budget) break;
            out.emplace_back(g, members);
        }
        return out;
    }
    std::mt19937_64 rng(seed);
    auto second = doubled(n);
    auto third = doubled(n);
    while (out.size() < budget) {
        shuffle(second, rng);
        shuffle(third, rng);
        if (auto members = assemble(second, third)) out.emplace_back(g, std::move(*members));
    }
    return out;
}

}  // namespace hgmd
