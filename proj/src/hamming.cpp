#include "hgmd/hamming.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>

#include "hgmd/error.hpp"

namespace hgmd {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::InvalidVertex: return "InvalidVertex";
        case ErrorCode::InvalidPair: return "InvalidPair";
        case ErrorCode::Unreachable: return "Unreachable";
        case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::InvalidBlock: return "InvalidBlock";
        case ErrorCode::IsLandmark: return "IsLandmark";
        case ErrorCode::NotApplicable: return "NotApplicable";
        case ErrorCode::InvalidOrder: return "InvalidOrder";
        case ErrorCode::NotFound: return "NotFound";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    }
    return "Unknown";
}

namespace {

int parse_int(std::string_view text, ErrorCode code, std::string_view what) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw Error(code, "cannot parse " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

std::vector<int> split_ints(std::string_view text, char sep, ErrorCode code, std::string_view what) {
    std::vector<int> out;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        out.push_back(parse_int(text.substr(start, pos - start), code, what));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

std::string Vertex::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coords_[i]);
    }
    return out;
}

Vertex Vertex::parse(std::string_view text) {
    return Vertex(split_ints(text, ',', ErrorCode::ParseError, "vertex coordinate"));
}

GhgParams::GhgParams(std::vector<int> dims, std::vector<int> distances)
    : dims_(std::move(dims)), distance_set_(std::move(distances)) {
    if (dims_.size() < 2) throw Error(ErrorCode::InvalidParams, "rank must be at least 2");
    for (int d : dims_) {
        if (d < 1) throw Error(ErrorCode::InvalidParams, "every dimension must be positive");
    }
    std::sort(distance_set_.begin(), distance_set_.end());
    distance_set_.erase(std::unique(distance_set_.begin(), distance_set_.end()), distance_set_.end());
    if (distance_set_.empty()) throw Error(ErrorCode::InvalidParams, "distance set K is empty");
    const int r = static_cast<int>(dims_.size());
    if (distance_set_.front() < 1 || distance_set_.back() > r) {
        throw Error(ErrorCode::InvalidParams, "distance set K must lie in {1,...,r}");
    }
    // Indices are size_t and the search code packs vertex ids into 64 bits.
    std::uint64_t count = 1;
    for (int d : dims_) {
        if (count > std::numeric_limits<std::uint32_t>::max() / static_cast<std::uint64_t>(d)) {
            throw Error(ErrorCode::Unsupported, "vertex count exceeds 2^32");
        }
        count *= static_cast<std::uint64_t>(d);
    }
}

GhgParams GhgParams::no_common_coordinate(std::vector<int> dims) {
    const int r = static_cast<int>(dims.size());
    return GhgParams(std::move(dims), {r});
}

GhgParams GhgParams::diagonal(int n) { return no_common_coordinate({n, n, n}); }

bool GhgParams::in_distance_set(int k) const noexcept {
    return std::binary_search(distance_set_.begin(), distance_set_.end(), k);
}

bool GhgParams::is_no_common_coordinate() const noexcept {
    return distance_set_.size() == 1 && distance_set_.front() == static_cast<int>(rank());
}

bool GhgParams::has_closed_form() const noexcept {
    return is_no_common_coordinate() &&
           std::all_of(dims_.begin(), dims_.end(), [](int d) { return d >= 3; });
}

bool GhgParams::is_diagonal() const noexcept {
    return std::all_of(dims_.begin(), dims_.end(), [&](int d) { return d == dims_.front(); });
}

std::uint64_t GhgParams::vertex_count() const noexcept {
    std::uint64_t count = 1;
    for (int d : dims_) count *= static_cast<std::uint64_t>(d);
    return count;
}

bool GhgParams::contains(const Vertex& v) const noexcept {
    if (v.rank() != rank()) return false;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (v[i] < 1 || v[i] > dims_[i]) return false;
    }
    return true;
}

void GhgParams::check(const Vertex& v) const {
    if (v.rank() != rank()) {
        throw Error(ErrorCode::InvalidVertex,
                    "vertex " + v.to_string() + " has wrong length for " + to_string());
    }
    if (!contains(v)) {
        throw Error(ErrorCode::InvalidVertex,
                    "vertex " + v.to_string() + " out of range for " + to_string());
    }
}

std::size_t GhgParams::index_of(const Vertex& v) const {
    check(v);
    std::size_t index = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        index = index * static_cast<std::size_t>(dims_[i]) + static_cast<std::size_t>(v[i] - 1);
    }
    return index;
}

Vertex GhgParams::vertex_at(std::size_t index) const {
    if (index >= vertex_count()) throw Error(ErrorCode::InvalidVertex, "vertex index out of range");
    std::vector<int> coords(rank());
    for (std::size_t i = rank(); i-- > 0;) {
        coords[i] = static_cast<int>(index % static_cast<std::size_t>(dims_[i])) + 1;
        index /= static_cast<std::size_t>(dims_[i]);
    }
    return Vertex(std::move(coords));
}

std::string GhgParams::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (i) out += 'x';
        out += std::to_string(dims_[i]);
    }
    out += ";K=";
    for (std::size_t i = 0; i < distance_set_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(distance_set_[i]);
    }
    return out;
}

GhgParams GhgParams::parse(std::string_view text) {
    auto semi = text.find(';');
    auto dims = split_ints(text.substr(0, semi), 'x', ErrorCode::ParseError, "dimension");
    if (semi == std::string_view::npos) return no_common_coordinate(std::move(dims));
    auto rest = text.substr(semi + 1);
    if (rest.substr(0, 2) != "K=") {
        throw Error(ErrorCode::ParseError, "expected 'K=' after ';' in '" + std::string(text) + "'");
    }
    return GhgParams(std::move(dims), split_ints(rest.substr(2), ',', ErrorCode::ParseError, "distance"));
}

std::uint64_t vertex_count(const GhgParams& g) { return g.vertex_count(); }

int hamming_discrepancy(const Vertex& x, const Vertex& y) {
    if (x.rank() != y.rank()) {
        throw Error(ErrorCode::InvalidVertex, "vertices " + x.to_string() + " and " + y.to_string() +
                                                  " have different lengths");
    }
    int differ = 0;
    for (std::size_t i = 0; i < x.rank(); ++i) differ += x[i] != y[i];
    return differ;
}

bool adjacent(const GhgParams& g, const Vertex& x, const Vertex& y) {
    g.check(x);
    g.check(y);
    if (x == y) throw Error(ErrorCode::InvalidPair, "adjacency of a vertex with itself");
    return g.in_distance_set(hamming_discrepancy(x, y));
}

namespace {

int closed_form_distance(const Vertex& x, const Vertex& y) {
    const int differ = hamming_discrepancy(x, y);
    if (differ == 0) return 0;
    return differ == static_cast<int>(x.rank()) ? 1 : 2;
}

// With K = {r}, two dimensions of size at most 2 leave the graph disconnected.
void reject_disconnected(const GhgParams& g) {
    if (!g.is_no_common_coordinate() || g.vertex_count() <= 1) return;
    const auto small = std::count_if(g.dims().begin(), g.dims().end(), [](int d) { return d <= 2; });
    const bool has_unit = std::any_of(g.dims().begin(), g.dims().end(), [](int d) { return d == 1; });
    if (small >= 2 || has_unit) {
        throw Error(ErrorCode::DisconnectedGraph, g.to_string() + " is disconnected");
    }
}

void require_breadth_first_scale(const GhgParams& g) {
    if (g.vertex_count() > kBreadthFirstLimit) {
        throw Error(ErrorCode::Unsupported, "breadth-first distances limited to " +
                                                std::to_string(kBreadthFirstLimit) + " vertices, " +
                                                g.to_string() + " has " +
                                                std::to_string(g.vertex_count()));
    }
}

}  // namespace

std::vector<int> breadth_first_distances(const GhgParams& g, const Vertex& source) {
    require_breadth_first_scale(g);
    const std::size_t count = g.vertex_count();
    std::vector<Vertex> vertices;
    vertices.reserve(count);
    for (std::size_t i = 0; i < count; ++i) vertices.push_back(g.vertex_at(i));

    std::vector<int> dist(count, -1);
    std::deque<std::size_t> queue;
    const std::size_t start = g.index_of(source);
    dist[start] = 0;
    queue.push_back(start);
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t v = 0; v < count; ++v) {
            if (dist[v] >= 0) continue;
            if (g.in_distance_set(hamming_discrepancy(vertices[u], vertices[v]))) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

std::vector<int> distances_from(const GhgParams& g, const Vertex& source) {
    g.check(source);
    if (g.has_closed_form()) {
        const std::size_t count = g.vertex_count();
        std::vector<int> dist(count);
        for (std::size_t i = 0; i < count; ++i) dist[i] = closed_form_distance(source, g.vertex_at(i));
        return dist;
    }
    reject_disconnected(g);
    return breadth_first_distances(g, source);
}

int distance(const GhgParams& g, const Vertex& x, const Vertex& y) {
    g.check(x);
    g.check(y);
    if (x == y) return 0;
    if (g.has_closed_form()) return closed_form_distance(x, y);
    reject_disconnected(g);
    const int d = breadth_first_distances(g, x)[g.index_of(y)];
    if (d < 0) throw Error(ErrorCode::Unreachable, y.to_string() + " unreachable from " + x.to_string());
    return d;
}

}  // namespace hgmd
