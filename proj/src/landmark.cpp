#include "hgmd/landmark.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "hgmd/error.hpp"

namespace hgmd {

namespace {

void require_rank_three(const GhgParams& g) {
    if (g.rank() != 3) {
        throw Error(ErrorCode::Unsupported, "landmark graphs need r = 3, got " + g.to_string());
    }
}

bool no_two_shared_coordinates(const std::vector<Vertex>& members) {
    for (std::size_t x = 0; x < members.size(); ++x) {
        for (std::size_t y = x + 1; y < members.size(); ++y) {
            if (hamming_discrepancy(members[x], members[y]) <= 1) return false;
        }
    }
    return true;
}

// Every block of value 1..m has exactly two members and blocks above m are
// empty, for members drawn from a rank-3 graph.
bool two_per_block(const std::vector<Vertex>& members, int m) {
    std::array<std::vector<int>, 3> sizes;
    for (auto& s : sizes) s.assign(static_cast<std::size_t>(m), 0);
    for (const auto& v : members) {
        for (std::size_t i = 0; i < 3; ++i) {
            if (v[i] > m) return false;
            ++sizes[i][static_cast<std::size_t>(v[i] - 1)];
        }
    }
    for (const auto& s : sizes) {
        if (std::any_of(s.begin(), s.end(), [](int c) { return c != 2; })) return false;
    }
    return true;
}

struct PlainEdge {
    std::size_t u;
    std::size_t v;
    Color color;
};

struct Adjacency {
    std::vector<PlainEdge> edges;
    std::vector<std::vector<std::size_t>> incident;  // edge ids per vertex
};

Adjacency plain_part(const LandmarkGraph& g) {
    Adjacency adj;
    adj.incident.assign(g.vertices.size(), {});
    for (const auto& h : g.hyperedges) {
        if (h.members.size() != 2) continue;
        const std::size_t id = adj.edges.size();
        adj.edges.push_back({h.members[0], h.members[1], h.color});
        adj.incident[h.members[0]].push_back(id);
        adj.incident[h.members[1]].push_back(id);
    }
    return adj;
}

bool structure_applicable(const LandmarkGraph& g) {
    std::vector<int> loops(g.vertices.size(), 0);
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& h : g.hyperedges) {
        if (h.members.size() > 2) return false;
        if (h.members.size() == 1) {
            ++loops[h.members[0]];
            continue;
        }
        if (!pairs.insert({h.members[0], h.members[1]}).second) return false;
    }
    const auto looped = std::count_if(loops.begin(), loops.end(), [](int c) { return c > 0; });
    if (looped == 0) return true;
    return looped == 1 && std::count(loops.begin(), loops.end(), 3) == 1;
}

bool is_forbidden_four(const std::vector<Color>& c) {
    std::set<Color> distinct(c.begin(), c.end());
    return distinct.size() == 3;
}

bool is_forbidden_six(const std::vector<Color>& c) {
    return c[0] == c[3] && c[1] == c[4] && c[2] == c[5] && c[0] != c[1] && c[1] != c[2] && c[0] != c[2];
}

struct CycleWalker {
    const LandmarkGraph& graph;
    const Adjacency& adj;
    std::size_t length;
    std::vector<std::size_t> path;
    std::vector<std::size_t> path_edges;
    std::vector<char> on_path;
    std::vector<ColoredCycle>* out;

    void emit(std::size_t closing_edge) {
        // orientation: second vertex smaller than last
        if (path[1] > path.back()) return;
        ColoredCycle cycle;
        for (auto v : path) cycle.landmarks.push_back(graph.vertices[v]);
        for (auto e : path_edges) cycle.colors.push_back(adj.edges[e].color);
        cycle.colors.push_back(adj.edges[closing_edge].color);
        const bool keep = length == 3   ? std::set<Color>(cycle.colors.begin(), cycle.colors.end()).size() == 3
                          : length == 4 ? is_forbidden_four(cycle.colors)
                                        : is_forbidden_six(cycle.colors);
        if (keep) out->push_back(std::move(cycle));
    }

    void extend(std::size_t start) {
        const std::size_t at = path.back();
        for (auto e : adj.incident[at]) {
            const auto& edge = adj.edges[e];
            const std::size_t next = edge.u == at ? edge.v : edge.u;
            if (path.size() == length) {
                if (next == start && (path_edges.empty() || e != path_edges.back())) emit(e);
                continue;
            }
            if (next <= start || on_path[next]) continue;
            path.push_back(next);
            path_edges.push_back(e);
            on_path[next] = 1;
            extend(start);
            on_path[next] = 0;
            path_edges.pop_back();
            path.pop_back();
        }
    }

    void run() {
        on_path.assign(graph.vertices.size(), 0);
        for (std::size_t s = 0; s < graph.vertices.size(); ++s) {
            path = {s};
            path_edges.clear();
            on_path[s] = 1;
            extend(s);
            on_path[s] = 0;
        }
    }
};

int edge_value(const Vertex& endpoint, Color color) { return endpoint[static_cast<std::size_t>(color - 1)]; }

// Two distinct non-landmarks whose blocks cover the same landmarks.
std::pair<Vertex, Vertex> witness_from_four_cycle(const ColoredCycle& c) {
    std::size_t s = c.colors[0] == c.colors[2] ? 0 : 1;  // index of the first repeated-color edge
    const auto& v = c.landmarks;
    auto at = [&](std::size_t j) -> const Vertex& { return v[(s + j) % 4]; };
    auto color = [&](std::size_t j) { return c.colors[(s + j) % 4]; };
    std::vector<int> alpha(3), beta(3);
    const Color repeated = color(0);
    const Color side1 = color(1);
    const Color side2 = color(3);
    alpha[static_cast<std::size_t>(repeated - 1)] = edge_value(at(0), repeated);
    beta[static_cast<std::size_t>(repeated - 1)] = edge_value(at(2), repeated);
    alpha[static_cast<std::size_t>(side1 - 1)] = beta[static_cast<std::size_t>(side1 - 1)] = edge_value(at(1), side1);
    alpha[static_cast<std::size_t>(side2 - 1)] = beta[static_cast<std::size_t>(side2 - 1)] = edge_value(at(3), side2);
    return {Vertex(alpha), Vertex(beta)};
}

std::pair<Vertex, Vertex> witness_from_six_cycle(const ColoredCycle& c) {
    std::vector<int> alpha(3), beta(3);
    for (std::size_t j = 0; j < 6; ++j) {
        const Color color = c.colors[j];
        auto& target = (j % 2 == 0) ? alpha : beta;
        target[static_cast<std::size_t>(color - 1)] = edge_value(c.landmarks[j], color);
    }
    return {Vertex(alpha), Vertex(beta)};
}

std::pair<Vertex, Vertex> witness_from_triangle(const ColoredCycle& c, int top) {
    std::vector<int> alpha(3), beta(3);
    const Color x = c.colors[0], y = c.colors[1], z = c.colors[2];
    alpha[static_cast<std::size_t>(x - 1)] = beta[static_cast<std::size_t>(x - 1)] = edge_value(c.landmarks[0], x);
    alpha[static_cast<std::size_t>(y - 1)] = edge_value(c.landmarks[1], y);
    alpha[static_cast<std::size_t>(z - 1)] = top;
    beta[static_cast<std::size_t>(y - 1)] = top;
    beta[static_cast<std::size_t>(z - 1)] = edge_value(c.landmarks[2], z);
    return {Vertex(alpha), Vertex(beta)};
}

}  // namespace

std::size_t LandmarkGraph::count(Color color, std::size_t size) const {
    return static_cast<std::size_t>(std::count_if(hyperedges.begin(), hyperedges.end(), [&](const Hyperedge& h) {
        return h.color == color && h.members.size() == size;
    }));
}

LandmarkGraph build_landmark_graph(const LandmarkSet& w) {
    require_rank_three(w.graph());
    LandmarkGraph g;
    g.vertices = w.members();
    for (Color i = 1; i <= 3; ++i) {
        for (int a = 1; a <= w.graph().dim(static_cast<std::size_t>(i - 1)); ++a) {
            const auto& b = w.block(i, a);
            if (!b.empty()) g.hyperedges.push_back({i, a, b});
        }
    }
    return g;
}

std::string to_string(SystemKind kind) {
    switch (kind) {
        case SystemKind::TwoBasic: return "TWO_BASIC";
        case SystemKind::TripleLooped: return "TRIPLE_LOOPED";
        case SystemKind::Other: return "OTHER";
    }
    return "OTHER";
}

SystemClass classify(const LandmarkSet& w) {
    const auto& g = w.graph();
    if (g.rank() != 3 || !g.is_diagonal()) return {};
    const int n = g.dim(0);
    const auto& members = w.members();
    if (n >= 3 && members.size() == static_cast<std::size_t>(2 * n) && two_per_block(members, n) &&
        no_two_shared_coordinates(members)) {
        return {SystemKind::TwoBasic, std::nullopt};
    }
    const Vertex u{n, n, n};
    if (n >= 4 && members.size() == static_cast<std::size_t>(2 * n - 1) && w.contains(u)) {
        std::vector<Vertex> base;
        for (const auto& m : members) {
            if (m != u) base.push_back(m);
        }
        if (two_per_block(base, n - 1) && no_two_shared_coordinates(base)) {
            return {SystemKind::TripleLooped, u};
        }
    }
    return {};
}

ForbiddenReport forbidden_scan(const LandmarkGraph& g) {
    ForbiddenReport report;
    report.applicable = structure_applicable(g);
    const auto adj = plain_part(g);
    for (std::size_t length : {std::size_t{3}, std::size_t{4}, std::size_t{6}}) {
        auto* out = length == 3 ? &report.rainbow_triangles : length == 4 ? &report.c4 : &report.c6;
        CycleWalker walker{g, adj, length, {}, {}, {}, out};
        walker.run();
        std::sort(out->begin(), out->end(), [](const ColoredCycle& a, const ColoredCycle& b) {
            return std::tie(a.landmarks, a.colors) < std::tie(b.landmarks, b.colors);
        });
    }
    return report;
}

Certificate predict_resolving(const LandmarkSet& w) {
    const auto cls = classify(w);
    if (cls.kind == SystemKind::Other) {
        throw Error(ErrorCode::NotApplicable,
                    "prediction needs a two-basic or triple-looped system on a diagonal graph");
    }
    const auto report = forbidden_scan(build_landmark_graph(w));
    std::optional<std::pair<Vertex, Vertex>> pair;
    if (!report.c4.empty()) {
        pair = witness_from_four_cycle(report.c4.front());
    } else if (!report.c6.empty()) {
        pair = witness_from_six_cycle(report.c6.front());
    } else if (cls.kind == SystemKind::TripleLooped && !report.rainbow_triangles.empty()) {
        pair = witness_from_triangle(report.rainbow_triangles.front(), w.graph().dim(0));
    }
    if (!pair) return Certificate::resolving(w);
    return Certificate::unresolved(w, pair->first, pair->second);
}

LandmarkSet extend_triple_looped(const LandmarkSet& w) {
    const auto& g = w.graph();
    require_rank_three(g);
    if (!g.is_diagonal() || !g.is_no_common_coordinate()) {
        throw Error(ErrorCode::NotApplicable, "triple-looped extension needs HG(n,n,n;3)");
    }
    const int n = g.dim(0) + 1;
    return w.on_graph(GhgParams::diagonal(n)).with(Vertex{n, n, n});
}

std::string to_string(FootprintShape shape) {
    switch (shape) {
        case FootprintShape::C3: return "C3";
        case FootprintShape::P4: return "P4";
        case FootprintShape::P3_P2: return "P3+P2";
        case FootprintShape::P2x3: return "3P2";
        case FootprintShape::L2_P2: return "L2+P2";
        case FootprintShape::P3_L1: return "P3+L1";
        case FootprintShape::P2x2_L1: return "2P2+L1";
        case FootprintShape::K13: return "K13";
        case FootprintShape::L3: return "L3";
        case FootprintShape::None: return "NONE";
        case FootprintShape::Other: return "OTHER";
    }
    return "OTHER";
}

namespace {

FootprintShape classify_shape(const std::vector<std::vector<std::size_t>>& edges) {
    if (edges.empty()) return FootprintShape::None;
    if (edges.size() != 3) return FootprintShape::Other;
    std::vector<std::size_t> loops;
    std::vector<std::pair<std::size_t, std::size_t>> plain;
    for (const auto& e : edges) {
        if (e.size() == 1) {
            loops.push_back(e[0]);
        } else if (e.size() == 2) {
            plain.push_back({e[0], e[1]});
        } else {
            return FootprintShape::Other;
        }
    }
    std::sort(plain.begin(), plain.end());
    if (std::adjacent_find(plain.begin(), plain.end()) != plain.end()) return FootprintShape::Other;

    auto touches = [&](std::size_t v) {
        return std::any_of(plain.begin(), plain.end(), [&](const auto& p) { return p.first == v || p.second == v; });
    };
    auto share = [](const auto& p, const auto& q) {
        return p.first == q.first || p.first == q.second || p.second == q.first || p.second == q.second;
    };

    if (loops.size() == 3) {
        return loops[0] == loops[1] && loops[1] == loops[2] ? FootprintShape::L3 : FootprintShape::Other;
    }
    if (loops.size() == 2) {
        if (loops[0] != loops[1] || touches(loops[0])) return FootprintShape::Other;
        return FootprintShape::L2_P2;
    }
    if (loops.size() == 1) {
        if (touches(loops[0])) return FootprintShape::Other;
        return share(plain[0], plain[1]) ? FootprintShape::P3_L1 : FootprintShape::P2x2_L1;
    }
    std::vector<std::size_t> vs;
    for (const auto& p : plain) {
        vs.push_back(p.first);
        vs.push_back(p.second);
    }
    std::sort(vs.begin(), vs.end());
    const auto covered = static_cast<std::size_t>(std::unique(vs.begin(), vs.end()) - vs.begin());
    switch (covered) {
        case 3: return FootprintShape::C3;
        case 4: {
            std::vector<std::size_t> all;
            for (const auto& p : plain) {
                all.push_back(p.first);
                all.push_back(p.second);
            }
            for (auto v : all) {
                if (std::count(all.begin(), all.end(), v) == 3) return FootprintShape::K13;
            }
            return FootprintShape::P4;
        }
        case 5: return FootprintShape::P3_P2;
        case 6: return FootprintShape::P2x3;
        default: return FootprintShape::Other;
    }
}

}  // namespace

Footprint footprint(const LandmarkSet& w, const Vertex& v) {
    require_rank_three(w.graph());
    w.graph().check(v);
    std::vector<std::vector<std::size_t>> edges;
    std::vector<std::size_t> covered;
    for (Color i = 1; i <= 3; ++i) {
        const auto& b = w.block(i, v[static_cast<std::size_t>(i - 1)]);
        if (b.empty()) continue;
        edges.push_back(b);
        covered.insert(covered.end(), b.begin(), b.end());
    }
    std::sort(covered.begin(), covered.end());
    covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
    Footprint fp;
    for (auto m : covered) fp.covered.push_back(w.member(m));
    fp.shape = classify_shape(edges);
    return fp;
}

bool footprint_permitted(SystemKind kind, bool is_landmark, FootprintShape shape) {
    using S = FootprintShape;
    const bool basic_shape = shape == S::C3 || shape == S::P4 || shape == S::P3_P2 || shape == S::P2x3;
    const bool looped_shape = shape == S::L2_P2 || shape == S::P3_L1 || shape == S::P2x2_L1;
    switch (kind) {
        case SystemKind::TwoBasic:
            return is_landmark ? shape == S::K13 : basic_shape;
        case SystemKind::TripleLooped:
            return is_landmark ? (shape == S::K13 || shape == S::L3) : (basic_shape || looped_shape);
        case SystemKind::Other:
            // K13 and L3 need the footprint's centre to carry all three coordinates.
            return is_landmark || (shape != S::K13 && shape != S::L3);
    }
    return false;
}

}  // namespace hgmd
