#include "hgmd/resolving.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "hgmd/error.hpp"

namespace hgmd {

LandmarkSet::LandmarkSet(GhgParams graph) : LandmarkSet(std::move(graph), {}) {}

LandmarkSet::LandmarkSet(GhgParams graph, std::vector<Vertex> members)
    : graph_(std::move(graph)), members_(std::move(members)) {
    for (const auto& m : members_) graph_.check(m);
    std::sort(members_.begin(), members_.end());
    auto dup = std::adjacent_find(members_.begin(), members_.end());
    if (dup != members_.end()) {
        throw Error(ErrorCode::InvalidVertex, "duplicate landmark " + dup->to_string());
    }
    index_blocks();
}

void LandmarkSet::index_blocks() {
    blocks_.assign(graph_.rank(), {});
    for (std::size_t i = 0; i < graph_.rank(); ++i) {
        blocks_[i].assign(static_cast<std::size_t>(graph_.dim(i)), {});
    }
    for (std::size_t m = 0; m < members_.size(); ++m) {
        for (std::size_t i = 0; i < graph_.rank(); ++i) {
            blocks_[i][static_cast<std::size_t>(members_[m][i] - 1)].push_back(m);
        }
    }
}

bool LandmarkSet::contains(const Vertex& v) const { return index_of(v).has_value(); }

std::optional<std::size_t> LandmarkSet::index_of(const Vertex& v) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - members_.begin());
}

const std::vector<std::size_t>& LandmarkSet::block(Color i, int a) const {
    if (i < 1 || i > static_cast<int>(graph_.rank()) || a < 1 ||
        a > graph_.dim(static_cast<std::size_t>(i - 1))) {
        throw Error(ErrorCode::InvalidBlock, "block (" + std::to_string(i) + "," + std::to_string(a) +
                                                 ") out of range for " + graph_.to_string());
    }
    return blocks_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(a - 1)];
}

LandmarkSet LandmarkSet::with(const Vertex& v) const {
    auto members = members_;
    members.push_back(v);
    return LandmarkSet(graph_, std::move(members));
}

LandmarkSet LandmarkSet::on_graph(GhgParams graph) const { return LandmarkSet(std::move(graph), members_); }

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Resolving: return "RESOLVING";
        case Verdict::Unresolved: return "UNRESOLVED";
        case Verdict::Dimension: return "DIMENSION";
        case Verdict::Nonexistent: return "NONEXISTENT";
    }
    return "UNKNOWN";
}

Certificate Certificate::resolving(LandmarkSet basis) {
    Certificate c(Verdict::Resolving, basis.graph());
    c.basis_ = std::move(basis);
    return c;
}

Certificate Certificate::unresolved(const LandmarkSet& w, Vertex x, Vertex y) {
    w.graph().check(x);
    w.graph().check(y);
    if (x == y) throw Error(ErrorCode::InvalidPair, "witness pair must be distinct");
    if (w.contains(x) || w.contains(y)) throw Error(ErrorCode::InvalidPair, "witness pair contains a landmark");
    if (!same_distance_profile(w, x, y)) {
        throw Error(ErrorCode::InvalidPair,
                    "witness " + x.to_string() + " / " + y.to_string() + " is resolved by W");
    }
    if (y < x) std::swap(x, y);
    Certificate c(Verdict::Unresolved, w.graph());
    c.witness_ = std::make_pair(std::move(x), std::move(y));
    return c;
}

Certificate Certificate::dimension(std::size_t value, LandmarkSet basis, std::string attestation,
                                   std::vector<SizeAttempt> attempts) {
    if (basis.size() != value) throw Error(ErrorCode::InvalidParams, "basis size differs from dimension");
    Certificate c(Verdict::Dimension, basis.graph());
    c.dimension_ = value;
    c.basis_ = std::move(basis);
    c.attestation_ = std::move(attestation);
    c.attempts_ = std::move(attempts);
    return c;
}

Certificate Certificate::nonexistent(GhgParams graph, std::size_t size, SearchStats stats) {
    Certificate c(Verdict::Nonexistent, std::move(graph));
    c.requested_size_ = size;
    c.stats_ = stats;
    c.attestation_ = "exhaustive search: no resolving set of size " + std::to_string(size);
    return c;
}

std::vector<Vertex> blocks(const LandmarkSet& w, Color i, int a) {
    std::vector<Vertex> out;
    for (std::size_t m : w.block(i, a)) out.push_back(w.member(m));
    return out;
}

namespace {

void append_code_indices(const LandmarkSet& w, const std::vector<int>& coords, std::vector<std::size_t>& out) {
    out.clear();
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const auto& b = w.block(static_cast<Color>(i + 1), coords[i]);
        out.insert(out.end(), b.begin(), b.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
}

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t hash_indices(const std::vector<std::size_t>& idx) {
    std::uint64_t h = mix(idx.size());
    for (auto v : idx) h = mix(h ^ static_cast<std::uint64_t>(v));
    return h;
}

// Advances a 1-based odometer in lexicographic order; false after the last vertex.
bool next_coords(std::vector<int>& coords, const std::vector<int>& dims) {
    for (std::size_t i = coords.size(); i-- > 0;) {
        if (coords[i] < dims[i]) {
            ++coords[i];
            return true;
        }
        coords[i] = 1;
    }
    return false;
}

bool codes_distinguish_everything(const GhgParams& g) {
    // Distance 2 exactly when a coordinate is shared, for K={r} with dims >= 3.
    // For K={1..r-1} with dims >= 3 the roles of 1 and 2 swap; codes still decide.
    if (!std::all_of(g.dims().begin(), g.dims().end(), [](int d) { return d >= 3; })) return false;
    if (g.is_no_common_coordinate()) return true;
    const auto& k = g.distance_set();
    const int r = static_cast<int>(g.rank());
    if (static_cast<int>(k.size()) != r - 1) return false;
    for (int i = 0; i < r - 1; ++i) {
        if (k[static_cast<std::size_t>(i)] != i + 1) return false;
    }
    return true;
}

}  // namespace

std::vector<Vertex> code(const LandmarkSet& w, const Vertex& v) {
    w.graph().check(v);
    if (w.contains(v)) throw Error(ErrorCode::IsLandmark, v.to_string() + " is a landmark");
    std::vector<std::size_t> idx;
    append_code_indices(w, v.coords(), idx);
    std::vector<Vertex> out;
    out.reserve(idx.size());
    for (auto m : idx) out.push_back(w.member(m));
    return out;
}

bool same_distance_profile(const LandmarkSet& w, const Vertex& x, const Vertex& y) {
    const auto& g = w.graph();
    if (codes_distinguish_everything(g)) {
        std::vector<std::size_t> cx, cy;
        append_code_indices(w, x.coords(), cx);
        append_code_indices(w, y.coords(), cy);
        return cx == cy;
    }
    const auto dx = distances_from(g, x);
    const auto dy = distances_from(g, y);
    for (const auto& m : w.members()) {
        const auto i = g.index_of(m);
        if (dx[i] != dy[i]) return false;
    }
    return true;
}

Certificate is_resolving(const LandmarkSet& w) {
    const auto& g = w.graph();
    if (!g.has_closed_form()) {
        throw Error(ErrorCode::Unsupported,
                    "code verifier needs K={r} and every dimension >= 3, got " + g.to_string());
    }
    const std::size_t count = g.vertex_count();
    std::vector<char> is_landmark(count, 0);
    for (const auto& m : w.members()) is_landmark[g.index_of(m)] = 1;

    struct Entry {
        std::uint64_t hash;
        std::uint32_t vertex;
        bool operator<(const Entry& o) const { return std::tie(hash, vertex) < std::tie(o.hash, o.vertex); }
    };
    std::vector<Entry> entries;
    entries.reserve(count - w.size());

    std::vector<int> coords(g.rank(), 1);
    std::vector<std::size_t> idx;
    std::size_t index = 0;
    do {
        if (!is_landmark[index]) {
            append_code_indices(w, coords, idx);
            entries.push_back({hash_indices(idx), static_cast<std::uint32_t>(index)});
        }
        ++index;
    } while (next_coords(coords, g.dims()));

    std::sort(entries.begin(), entries.end());

    // Within one hash group, split into exact code classes. The least colliding
    // pair overall is (min, second min) of some class; keep the smallest.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> classes;
    for (std::size_t lo = 0; lo < entries.size();) {
        std::size_t hi = lo + 1;
        while (hi < entries.size() && entries[hi].hash == entries[lo].hash) ++hi;
        if (hi - lo >= 2) {
            classes.clear();
            for (std::size_t e = lo; e < hi; ++e) {
                const Vertex v = g.vertex_at(entries[e].vertex);
                append_code_indices(w, v.coords(), idx);
                auto it = std::find_if(classes.begin(), classes.end(),
                                       [&](const auto& c) { return c.first == idx; });
                if (it == classes.end()) {
                    classes.push_back({idx, {entries[e].vertex}});
                } else {
                    it->second.push_back(entries[e].vertex);
                }
            }
            for (const auto& c : classes) {
                if (c.second.size() < 2) continue;
                // entries are sorted by vertex within a hash group
                std::pair<std::size_t, std::size_t> pair{c.second[0], c.second[1]};
                if (!best || pair < *best) best = pair;
            }
        }
        lo = hi;
    }
    if (!best) return Certificate::resolving(w);
    return Certificate::unresolved(w, g.vertex_at(best->first), g.vertex_at(best->second));
}

Certificate is_resolving_by_distance(const LandmarkSet& w) {
    const auto& g = w.graph();
    const std::size_t count = g.vertex_count();
    if (count > kDistanceVerifierLimit) {
        throw Error(ErrorCode::Unsupported, "distance verifier limited to " +
                                                std::to_string(kDistanceVerifierLimit) + " vertices");
    }
    std::vector<std::vector<int>> rows;
    rows.reserve(w.size());
    for (const auto& m : w.members()) rows.push_back(distances_from(g, m));

    std::vector<char> is_landmark(count, 0);
    for (const auto& m : w.members()) is_landmark[g.index_of(m)] = 1;

    // First and second vertex (in index order) per distance vector.
    std::map<std::vector<int>, std::pair<std::size_t, std::size_t>> seen;
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<int> profile(w.size());
    for (std::size_t v = 0; v < count; ++v) {
        if (is_landmark[v]) continue;
        for (std::size_t m = 0; m < w.size(); ++m) {
            if (rows[m][v] < 0) throw Error(ErrorCode::Unreachable, "graph " + g.to_string() + " is disconnected");
            profile[m] = rows[m][v];
        }
        auto [it, inserted] = seen.try_emplace(profile, v, none);
        if (!inserted && it->second.second == none) it->second.second = v;
    }
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (const auto& [key, pair] : seen) {
        if (pair.second == none) continue;
        if (!best || pair < *best) best = pair;
    }
    if (!best) return Certificate::resolving(w);
    return Certificate::unresolved(w, g.vertex_at(best->first), g.vertex_at(best->second));
}

std::size_t lower_bound(const std::vector<int>& dims) {
    if (dims.empty()) throw Error(ErrorCode::Unsupported, "lower bound needs dimensions");
    for (int d : dims) {
        if (d < 3) throw Error(ErrorCode::Unsupported, "lower bound requires every n_i >= 3");
    }
    return 2 * static_cast<std::size_t>(*std::max_element(dims.begin(), dims.end())) - 1;
}

std::size_t lower_bound(int n1, int n2, int n3) { return lower_bound(std::vector<int>{n1, n2, n3}); }

std::vector<BlockSumViolation> block_sum_violations(const LandmarkSet& w) {
    std::vector<BlockSumViolation> out;
    const auto& g = w.graph();
    for (std::size_t i = 0; i < g.rank(); ++i) {
        const Color color = static_cast<Color>(i + 1);
        for (int a = 1; a <= g.dim(i); ++a) {
            for (int b = a + 1; b <= g.dim(i); ++b) {
                if (w.block_size(color, a) + w.block_size(color, b) < 3) out.push_back({color, a, b});
            }
        }
    }
    return out;
}

bool has_one_loop_profile(const LandmarkSet& w) {
    const auto& g = w.graph();
    for (std::size_t i = 0; i < g.rank(); ++i) {
        int loops = 0;
        int plain = 0;
        for (int a = 1; a <= g.dim(i); ++a) {
            const auto s = w.block_size(static_cast<Color>(i + 1), a);
            loops += s == 1;
            plain += s == 2;
        }
        if (loops != 1 || plain != g.dim(i) - 1) return false;
    }
    return true;
}

}  // namespace hgmd
