#include "hgmd/construct.hpp"

#include <algorithm>
#include <set>

#include "hgmd/error.hpp"
#include "hgmd/landmark.hpp"

namespace hgmd {

bool ColoredCubicGraph::is_simple_cubic_properly_colored() const {
    std::vector<std::array<int, 3>> seen(order(), {0, 0, 0});
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& e : edges) {
        if (e.u == e.v || e.u >= order() || e.v >= order()) return false;
        if (e.color < 1 || e.color > 3) return false;
        if (!pairs.insert(std::minmax(e.u, e.v)).second) return false;
        ++seen[e.u][static_cast<std::size_t>(e.color - 1)];
        ++seen[e.v][static_cast<std::size_t>(e.color - 1)];
    }
    return std::all_of(seen.begin(), seen.end(), [](const auto& s) { return s[0] == 1 && s[1] == 1 && s[2] == 1; });
}

ColoredCubicGraph construct_cubic(int k) {
    if (k == 5) {
        throw Error(ErrorCode::Unsupported,
                    "no cubic graph on 10 vertices has a proper 3-edge-coloring avoiding the forbidden "
                    "configurations");
    }
    if (k <= 3) throw Error(ErrorCode::Unsupported, "construct_cubic needs k = 4 or k >= 6");

    const int m = k - 4;
    ColoredCubicGraph g;
    g.k = k;
    const auto uk = static_cast<std::size_t>(k);
    // index layout: p1..p4 = 0..3, q_i = 3+i, primes shifted by k
    for (int prime = 0; prime < 2; ++prime) {
        for (int i = 1; i <= 4; ++i) g.labels.push_back("p" + std::to_string(i) + (prime ? "'" : ""));
        for (int i = 1; i <= m; ++i) g.labels.push_back("q" + std::to_string(i) + (prime ? "'" : ""));
    }
    auto p = [](int i) { return static_cast<std::size_t>(i - 1); };
    auto q = [](int i) { return static_cast<std::size_t>(3 + i); };
    auto prime = [&](std::size_t v) { return v + uk; };

    std::vector<std::size_t> cycle = {p(1), p(2), p(3), p(4)};
    for (int i = 1; i <= m; ++i) cycle.push_back(q(i));
    if (k == 4) {
        for (int i : {1, 2, 3, 4}) cycle.push_back(prime(p(i)));
    } else {
        const auto order = (k % 2 == 0) ? std::array<int, 4>{1, 3, 2, 4} : std::array<int, 4>{2, 4, 1, 3};
        for (int i : order) cycle.push_back(prime(p(i)));
        for (int i = m; i >= 1; --i) cycle.push_back(prime(q(i)));
    }

    for (std::size_t j = 0; j < cycle.size(); ++j) {
        g.edges.push_back({cycle[j], cycle[(j + 1) % cycle.size()], j % 2 == 0 ? kPink : kBlue});
    }
    for (std::size_t v = 0; v < uk; ++v) g.edges.push_back({v, prime(v), kGreen});
    return g;
}

LandmarkSet graph_to_landmarks(const ColoredCubicGraph& g, int n) {
    if (n < 2 || g.order() != static_cast<std::size_t>(2 * (n - 1))) {
        throw Error(ErrorCode::InvalidOrder, "graph of order " + std::to_string(g.order()) +
                                                 " does not match 2(n-1) for n = " + std::to_string(n));
    }
    if (!g.is_simple_cubic_properly_colored()) {
        throw Error(ErrorCode::InvalidParams, "graph is not a simple properly 3-edge-colored cubic graph");
    }
    std::vector<std::vector<int>> coords(g.order(), std::vector<int>(3, 0));
    for (Color c = 1; c <= 3; ++c) {
        std::vector<std::pair<std::size_t, std::size_t>> colored;
        for (const auto& e : g.edges) {
            if (e.color == c) colored.push_back(std::minmax(e.u, e.v));
        }
        std::sort(colored.begin(), colored.end());
        for (std::size_t number = 0; number < colored.size(); ++number) {
            coords[colored[number].first][static_cast<std::size_t>(c - 1)] = static_cast<int>(number + 1);
            coords[colored[number].second][static_cast<std::size_t>(c - 1)] = static_cast<int>(number + 1);
        }
    }
    std::vector<Vertex> members;
    for (auto& c : coords) members.emplace_back(std::move(c));
    return LandmarkSet(GhgParams::diagonal(n - 1), std::move(members));
}

LandmarkSet graph_to_landmarks(const ColoredCubicGraph& g, int n, const std::array<std::vector<int>, 3>& relabel) {
    const auto base = graph_to_landmarks(g, n);
    for (const auto& perm : relabel) {
        auto sorted = perm;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (sorted.size() != static_cast<std::size_t>(n - 1) || sorted[i] != static_cast<int>(i + 1)) {
                throw Error(ErrorCode::InvalidParams, "relabelling must permute 1..n-1");
            }
        }
    }
    std::vector<Vertex> members;
    for (const auto& v : base.members()) {
        members.push_back(Vertex{relabel[0][static_cast<std::size_t>(v[0] - 1)],
                                 relabel[1][static_cast<std::size_t>(v[1] - 1)],
                                 relabel[2][static_cast<std::size_t>(v[2] - 1)]});
    }
    return LandmarkSet(base.graph(), std::move(members));
}

namespace {

using Triple = std::array<int, 3>;

const std::vector<Triple> kLatinThree = {
    // 1 2 3
    // 3 1 2
    // . . .
    {1, 1, 1}, {1, 2, 2}, {1, 3, 3}, {2, 1, 3}, {2, 2, 1}, {2, 3, 2},
};

const std::vector<Triple> kPartialSix = {
    // . 1 . . . .
    // 1 2 . . . .
    // . . 2 3 . .
    // . . 3 4 . .
    // . . . . 4 5
    // . . . . 5 6
    {1, 2, 1}, {2, 1, 1}, {2, 2, 2}, {3, 3, 2}, {3, 4, 3}, {4, 3, 3},
    {4, 4, 4}, {5, 5, 4}, {5, 6, 5}, {6, 5, 5}, {6, 6, 6},
};

const std::vector<Triple> kRectangle5x7x11 = {
    //  1  2  3 10  .  .  .
    //  4  5  6  1  2  3  .
    //  7  8  9  4  5  6  .
    // 10  .  .  7  8  9  .
    //  .  .  .  .  .  . 11
    {1, 1, 1},  {1, 2, 2}, {1, 3, 3}, {1, 4, 10},
    {2, 1, 4},  {2, 2, 5}, {2, 3, 6}, {2, 4, 1}, {2, 5, 2}, {2, 6, 3},
    {3, 1, 7},  {3, 2, 8}, {3, 3, 9}, {3, 4, 4}, {3, 5, 5}, {3, 6, 6},
    {4, 1, 10}, {4, 4, 7}, {4, 5, 8}, {4, 6, 9},
    {5, 7, 11},
};

LandmarkSet from_triples(GhgParams g, const std::vector<Triple>& triples) {
    std::vector<Vertex> members;
    for (const auto& t : triples) members.push_back(Vertex{t[0], t[1], t[2]});
    return LandmarkSet(std::move(g), std::move(members));
}

}  // namespace

std::size_t metric_dimension_value(int n) {
    if (n < 3) throw Error(ErrorCode::Unsupported, "metric basis needs n >= 3");
    return n <= 4 ? static_cast<std::size_t>(2 * n) : static_cast<std::size_t>(2 * n - 1);
}

LandmarkSet metric_basis(int n) {
    if (n < 3) throw Error(ErrorCode::Unsupported, "metric basis needs n >= 3");
    switch (n) {
        case 3: return fixture("n3");
        case 4: return graph_to_landmarks(construct_cubic(4), 5);
        case 5: return extend_triple_looped(graph_to_landmarks(construct_cubic(4), 5));
        case 6: return fixture("n6");
        default: return extend_triple_looped(graph_to_landmarks(construct_cubic(n - 1), n));
    }
}

LandmarkSet fixture(std::string_view name) {
    if (name == "n3") return from_triples(GhgParams::diagonal(3), kLatinThree);
    if (name == "n6") return from_triples(GhgParams::diagonal(6), kPartialSix);
    if (name == "hg_5_7_11") return from_triples(GhgParams::no_common_coordinate({5, 7, 11}), kRectangle5x7x11);
    throw Error(ErrorCode::NotFound, "unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string> fixture_names() { return {"n3", "n6", "hg_5_7_11"}; }

}  // namespace hgmd
