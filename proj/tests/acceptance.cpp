// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Pass --long to add the un-normalized HG(4,4,4;3) size-7 confirmation.

#include <algorithm>
#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "hgmd/construct.hpp"
#include "hgmd/error.hpp"
#include "hgmd/landmark.hpp"
#include "hgmd/search.hpp"

using namespace hgmd;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail << "FAILED: " << what << "; ";
        pass = pass && ok;
    }
};

// Every resolving set seen by criteria 1-7 and 9, for criterion 8.
std::vector<LandmarkSet> encountered;

void remember(const LandmarkSet& w) { encountered.push_back(w); }

SearchOptions search_options(bool normalize, bool prune) {
    SearchOptions o;
    o.normalize = normalize;
    o.prune = prune;
    o.max_candidates = std::uint64_t{1} << 40;
    return o;
}

void metric_bases(Outcome& o) {
    for (int n = 3; n <= 65; ++n) {
        const auto w = metric_basis(n);
        const std::size_t expected = n <= 4 ? 2 * n : 2 * n - 1;
        const auto c = is_resolving(w);
        o.require(w.graph() == GhgParams::diagonal(n), "basis for n=" + std::to_string(n) + " on wrong graph");
        o.require(w.size() == expected, "|W| for n=" + std::to_string(n));
        o.require(c.is_resolving(), "basis for n=" + std::to_string(n) + " does not resolve");
        if (c.is_resolving()) remember(w);
    }
    o.detail << "n=3..65 all resolve with |W| = 2n (n<=4), 2n-1 (n>=5)";
}

void nonexistence_three(Outcome& o) {
    const auto g = GhgParams::diagonal(3);
    const auto normalized = exists_resolving_of_size(g, 5, search_options(true, true));
    o.require(normalized.verdict() == Verdict::Nonexistent, "normalized search found a 5-set");
    o.require(normalized.stats()->space_size == 14950, "normalized space is not C(26,4)");
    const auto full = exists_resolving_of_size(g, 5, search_options(false, false));
    o.require(full.verdict() == Verdict::Nonexistent, "un-normalized search found a 5-set");
    o.require(full.stats()->space_size == 80730 && full.stats()->examined == 80730,
              "un-normalized search did not examine all C(27,5) subsets");
    const auto six = exists_resolving_of_size(g, 6, search_options(true, true));
    o.require(six.is_resolving(), "no 6-set found");
    if (six.basis()) remember(*six.basis());
    o.detail << "size 5: none among " << normalized.stats()->space_size << " normalized subsets ("
             << normalized.stats()->examined << " examined after pruning) and none among " << full.stats()->examined
             << " un-normalized subsets; size 6 found";
}

void nonexistence_four(Outcome& o, bool long_run) {
    const auto g = GhgParams::diagonal(4);
    const auto pruned = exists_resolving_of_size(g, 7, search_options(true, true));
    o.require(pruned.verdict() == Verdict::Nonexistent, "pruned search found a 7-set");
    o.require(pruned.stats()->space_size == 67945521, "normalized space is not C(63,6)");
    const auto plain = exists_resolving_of_size(g, 7, search_options(true, false));
    o.require(plain.verdict() == Verdict::Nonexistent, "unpruned search found a 7-set");
    o.require(plain.stats()->examined == 67945521, "unpruned search did not examine all C(63,6) subsets");
    const auto eight = exists_resolving_of_size(g, 8, search_options(true, true));
    o.require(eight.is_resolving(), "no 8-set found");
    if (eight.basis()) remember(*eight.basis());
    o.detail << "size 7: none among " << pruned.stats()->space_size << " normalized subsets (pruned run examined "
             << pruned.stats()->examined << ", cut " << pruned.stats()->pruned << " subtrees; unpruned run examined "
             << plain.stats()->examined << ")";
    if (long_run) {
        const auto full = exists_resolving_of_size(g, 7, search_options(false, false));
        o.require(full.verdict() == Verdict::Nonexistent && full.stats()->examined == binomial(64, 7),
                  "un-normalized search disagrees");
        o.detail << "; un-normalized run examined " << full.stats()->examined;
    } else {
        o.detail << "; un-normalized C(64,7) run skipped (pass --long)";
    }
}

struct Tally {
    std::size_t checked = 0;
    std::size_t resolving = 0;
    std::size_t disagreements = 0;
};

void compare(const LandmarkSet& w, Tally& t) {
    const auto predicted = predict_resolving(w);
    const auto truth = is_resolving_by_distance(w);
    ++t.checked;
    if (predicted.verdict() != truth.verdict()) ++t.disagreements;
    if (truth.is_resolving()) {
        ++t.resolving;
        remember(w);
    }
}

constexpr std::size_t kSamples = 10000;

std::vector<LandmarkSet> systems(int n) {
    return n == 3 ? enumerate_two_basic(3, 1'000'000) : enumerate_two_basic(n, kSamples, 1000 + n);
}

void two_basic_equivalence(Outcome& o) {
    for (int n : {3, 4, 5}) {
        Tally t;
        for (const auto& w : systems(n)) compare(w, t);
        o.require(t.disagreements == 0, std::to_string(t.disagreements) + " disagreements at n=" + std::to_string(n));
        o.require(n == 3 || t.checked >= kSamples, "too few samples at n=" + std::to_string(n));
        o.detail << "n=" << n << (n == 3 ? " (all " : " (") << t.checked << " systems, " << t.resolving
                 << " resolving): " << t.disagreements << " disagreements; ";
    }
}

void triple_looped_equivalence(Outcome& o) {
    for (int n : {3, 4, 5}) {
        Tally t;
        for (const auto& w : systems(n)) {
            const auto looped = extend_triple_looped(w);
            if (classify(looped).kind != SystemKind::TripleLooped) {
                o.require(false, "extension not triple-looped");
                continue;
            }
            compare(looped, t);
        }
        o.require(t.disagreements == 0, std::to_string(t.disagreements) + " disagreements at n=" + std::to_string(n));
        o.detail << "HG(" << n + 1 << ") (" << t.checked << " systems, " << t.resolving
                 << " resolving): " << t.disagreements << " disagreements; ";
    }
}

void cubic_graphs(Outcome& o) {
    int checked = 0;
    for (int k = 4; k <= 64; ++k) {
        if (k == 5) continue;
        const auto g = construct_cubic(k);
        const auto w = graph_to_landmarks(g, k + 1);
        const auto graph = build_landmark_graph(w);
        o.require(g.order() == static_cast<std::size_t>(2 * k) && g.is_simple_cubic_properly_colored(),
                  "k=" + std::to_string(k) + " not simple cubic properly colored");
        o.require(classify(w).kind == SystemKind::TwoBasic, "k=" + std::to_string(k) + " landmarks not two-basic");
        const auto report = forbidden_scan(graph);
        o.require(report.applicable && report.empty(), "k=" + std::to_string(k) + " has a forbidden configuration");
        ++checked;
    }
    bool unsupported = false;
    try {
        construct_cubic(5);
    } catch (const Error& e) {
        unsupported = e.code() == ErrorCode::Unsupported;
    }
    o.require(unsupported, "k=5 did not report Unsupported");
    o.detail << checked << " graphs (k=4, 6..64) simple, cubic, properly colored, forbidden-free; k=5 Unsupported";
}

void final_example(Outcome& o) {
    const auto w = fixture("hg_5_7_11");
    const auto code_check = is_resolving(w);
    const auto distance_check = is_resolving_by_distance(w);
    o.require(code_check.is_resolving() && distance_check.is_resolving(), "fixture does not resolve");
    o.require(w.size() == 21 && lower_bound(5, 7, 11) == 21, "size or bound is not 21");
    if (code_check.is_resolving()) remember(w);
    o.detail << "21 landmarks resolve HG(5,7,11;3) (code and distance verifiers); lower bound " << lower_bound(5, 7, 11);
}

LandmarkSet random_set(const GhgParams& g, std::size_t size, std::mt19937_64& rng) {
    std::vector<std::size_t> ids(g.vertex_count());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    std::shuffle(ids.begin(), ids.end(), rng);
    std::vector<Vertex> members;
    for (std::size_t i = 0; i < size; ++i) members.push_back(g.vertex_at(ids[i]));
    return LandmarkSet(g, std::move(members));
}

void cross_oracle(Outcome& o) {
    std::mt19937_64 rng(9);
    for (int n : {3, 4}) {
        const auto g = GhgParams::diagonal(n);
        const GhgParams complement({n, n, n}, {1, 2});
        std::size_t disagree = 0, complement_disagree = 0, resolving = 0;
        constexpr std::size_t trials = 1000;
        for (std::size_t t = 0; t < trials; ++t) {
            // sizes straddle the metric dimension so both verdicts occur
            const auto size = static_cast<std::size_t>(2 * n - 3) + t % 6;
            const auto w = random_set(g, size, rng);
            const auto fast = is_resolving(w);
            const auto slow = is_resolving_by_distance(w);
            if (fast.verdict() != slow.verdict() || fast.witness() != slow.witness()) ++disagree;
            if (is_resolving_by_distance(w.on_graph(complement)).verdict() != fast.verdict()) ++complement_disagree;
            if (fast.is_resolving()) {
                ++resolving;
                remember(w);
            }
        }
        o.require(disagree == 0, "verifiers disagree at n=" + std::to_string(n));
        o.require(complement_disagree == 0, "K={3} and K={1,2} disagree at n=" + std::to_string(n));
        o.detail << "n=" << n << ": " << trials << " sets (" << resolving << " resolving), " << disagree
                 << " verifier and " << complement_disagree << " complement disagreements; ";
    }
}

void necessary_conditions(Outcome& o) {
    std::size_t loop_profiles = 0;
    for (const auto& w : encountered) {
        o.require(block_sum_violations(w).empty(), "block-sum violation in a resolving set on " + w.graph().to_string());
        const auto& g = w.graph();
        if (g.is_diagonal() && w.size() == static_cast<std::size_t>(2 * g.dim(0) - 1)) {
            ++loop_profiles;
            o.require(has_one_loop_profile(w), "size 2n-1 set without the one-loop profile on " + g.to_string());
        }
    }
    o.detail << encountered.size() << " resolving sets without block-sum violations; " << loop_profiles
             << " of size 2n-1 all have one loop and n-1 plain edges per color";
}

void footprints(Outcome& o) {
    std::map<std::string, std::size_t> shapes;
    std::size_t vertices = 0;
    for (int n = 4; n <= 10; ++n) {
        const auto w = metric_basis(n);
        const auto kind = classify(w).kind;
        const auto& g = w.graph();
        for (std::size_t i = 0; i < g.vertex_count(); ++i) {
            const auto v = g.vertex_at(i);
            if (w.contains(v)) continue;
            const auto shape = footprint(w, v).shape;
            ++vertices;
            ++shapes[to_string(shape)];
            o.require(footprint_permitted(kind, false, shape),
                      "n=" + std::to_string(n) + " vertex " + v.to_string() + " has shape " + to_string(shape));
        }
    }
    o.detail << vertices << " non-landmarks, all permitted:";
    for (const auto& [shape, count] : shapes) o.detail << " " << shape << "=" << count;
}

struct Criterion {
    int number;
    const char* title;
    std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    const bool long_run = argc > 1 && std::strcmp(argv[1], "--long") == 0;
    const std::vector<Criterion> criteria = {
        {1, "metric bases for n = 3..65", metric_bases},
        {2, "no resolving 5-set in HG(3,3,3;3)", nonexistence_three},
        {3, "no resolving 7-set in HG(4,4,4;3)", [&](Outcome& o) { nonexistence_four(o, long_run); }},
        {4, "forbidden-subgraph prediction on two-basic systems", two_basic_equivalence},
        {5, "forbidden-subgraph prediction on triple-looped systems", triple_looped_equivalence},
        {6, "cubic constructions avoid forbidden configurations", cubic_graphs},
        {7, "HG(5,7,11;3) fixture meets the lower bound", final_example},
        {9, "code verifier vs distance verifier, K={3} vs K={1,2}", cross_oracle},
        {10, "footprint shapes of metric bases", footprints},
        {8, "block-sum and one-loop profile of resolving sets", necessary_conditions},
    };

    std::map<int, std::string> lines;
    bool all = true;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << (o.pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " -- "
             << o.detail.str() << " [" << std::fixed << std::setprecision(2) << seconds << " s]";
        lines[c.number] = line.str();
        all = all && o.pass;
    }
    for (const auto& [number, line] : lines) std::cout << line << '\n';
    std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << '\n';
    return all ? 0 : 1;
}
