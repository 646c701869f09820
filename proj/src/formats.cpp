#include "hgmd/formats.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <vector>

#include "hgmd/error.hpp"

namespace hgmd {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

struct Line {
    std::string_view text;
    std::size_t number;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 1;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        out.push_back({text.substr(start, end - start), number++});
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

[[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& what) {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

bool try_int(std::string_view text, int& value) {
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

int parse_cell(const Token& t, std::size_t line) {
    int value = 0;
    if (!try_int(t.text, value)) fail(line, t.column, "expected an integer, got '" + std::string(t.text) + "'");
    return value;
}

bool is_blank(std::string_view line) { return tokenize(line).empty(); }

bool is_comment(std::string_view line) {
    auto tokens = tokenize(line);
    return !tokens.empty() && tokens.front().text.front() == '#';
}

bool is_graph_header(std::string_view line) {
    auto tokens = tokenize(line);
    return tokens.size() >= 2 && tokens[0].text == "#" && tokens[1].text == "graph";
}

std::string k_text(const GhgParams& g) {
    std::string out;
    for (std::size_t i = 0; i < g.distance_set().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(g.distance_set()[i]);
    }
    return out;
}

void check_header(const Line& line, const GhgParams& g) {
    auto tokens = tokenize(line.text);
    if (tokens.size() != 2 + g.rank() + 1) {
        fail(line.number, 1, "graph header must list " + std::to_string(g.rank()) + " dimensions and K");
    }
    for (std::size_t i = 0; i < g.rank(); ++i) {
        const auto& t = tokens[2 + i];
        if (parse_cell(t, line.number) != g.dim(i)) {
            fail(line.number, t.column, "header dimension differs from graph " + g.to_string());
        }
    }
    const auto& k = tokens.back();
    if (k.text != k_text(g)) fail(line.number, k.column, "header K differs from graph " + g.to_string());
}

LandmarkSet parse_triples(std::string_view text, const GhgParams& g) {
    std::vector<Vertex> members;
    std::set<Vertex> seen;
    for (const auto& line : split_lines(text)) {
        if (is_graph_header(line.text)) {
            check_header(line, g);
            continue;
        }
        if (is_blank(line.text) || is_comment(line.text)) continue;
        auto tokens = tokenize(line.text);
        if (tokens.size() != g.rank()) {
            fail(line.number, tokens.front().column,
                 "expected " + std::to_string(g.rank()) + " coordinates, got " + std::to_string(tokens.size()));
        }
        std::vector<int> coords;
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            const int value = parse_cell(tokens[i], line.number);
            if (value < 1 || value > g.dim(i)) {
                fail(line.number, tokens[i].column,
                     "coordinate " + std::to_string(value) + " outside 1.." + std::to_string(g.dim(i)));
            }
            coords.push_back(value);
        }
        Vertex v(std::move(coords));
        if (!seen.insert(v).second) fail(line.number, tokens.front().column, "duplicate landmark " + v.to_string());
        members.push_back(std::move(v));
    }
    return LandmarkSet(g, std::move(members));
}

void require_pls_graph(const GhgParams& g) {
    if (g.rank() != 3) throw Error(ErrorCode::Unsupported, "pls documents describe rank-3 graphs only");
}

LandmarkSet parse_pls(std::string_view text, const GhgParams& g) {
    require_pls_graph(g);
    std::vector<Vertex> members;
    int row = 0;
    std::size_t last_line = 0;
    for (const auto& line : split_lines(text)) {
        last_line = line.number;
        if (is_blank(line.text) || is_comment(line.text)) continue;
        ++row;
        if (row > g.dim(0)) fail(line.number, 1, "more than " + std::to_string(g.dim(0)) + " rows");
        auto tokens = tokenize(line.text);
        if (static_cast<int>(tokens.size()) != g.dim(1)) {
            fail(line.number, tokens.back().column + tokens.back().text.size(),
                 "row has " + std::to_string(tokens.size()) + " cells, expected " + std::to_string(g.dim(1)));
        }
        for (std::size_t col = 0; col < tokens.size(); ++col) {
            const auto& t = tokens[col];
            if (t.text == ".") continue;
            const int symbol = parse_cell(t, line.number);
            if (symbol < 1 || symbol > g.dim(2)) {
                fail(line.number, t.column,
                     "symbol " + std::to_string(symbol) + " outside 1.." + std::to_string(g.dim(2)));
            }
            members.push_back(Vertex{row, static_cast<int>(col) + 1, symbol});
        }
    }
    if (row != g.dim(0)) {
        fail(last_line, 1, "document has " + std::to_string(row) + " rows, expected " + std::to_string(g.dim(0)));
    }
    return LandmarkSet(g, std::move(members));
}

}  // namespace

LandmarkFormat parse_format(std::string_view name) {
    if (name == "pls") return LandmarkFormat::Pls;
    if (name == "triples") return LandmarkFormat::Triples;
    throw Error(ErrorCode::ParseError, "unknown landmark format '" + std::string(name) + "'");
}

std::string to_string(LandmarkFormat format) { return format == LandmarkFormat::Pls ? "pls" : "triples"; }

LandmarkSet parse_landmarks(std::string_view text, LandmarkFormat format, const GhgParams& g) {
    return format == LandmarkFormat::Pls ? parse_pls(text, g) : parse_triples(text, g);
}

LandmarkFormat detect_format(std::string_view text, const GhgParams& g) {
    int rows = 0;
    bool all_three = true;
    for (const auto& line : split_lines(text)) {
        if (is_graph_header(line.text)) return LandmarkFormat::Triples;
        if (is_blank(line.text) || is_comment(line.text)) continue;
        ++rows;
        auto tokens = tokenize(line.text);
        all_three = all_three && tokens.size() == g.rank() &&
                    std::none_of(tokens.begin(), tokens.end(), [](const Token& t) { return t.text == "."; });
    }
    if (g.rank() != 3) return LandmarkFormat::Triples;
    if (all_three && rows > 0 && (rows != g.dim(0) || g.dim(1) != 3)) return LandmarkFormat::Triples;
    return LandmarkFormat::Pls;
}

bool pls_representable(const LandmarkSet& w) {
    if (w.graph().rank() != 3) return false;
    const auto& m = w.members();
    for (std::size_t i = 1; i < m.size(); ++i) {
        if (m[i][0] == m[i - 1][0] && m[i][1] == m[i - 1][1]) return false;
    }
    return true;
}

std::string emit_pls(const LandmarkSet& w) {
    if (!pls_representable(w)) {
        throw Error(ErrorCode::NotApplicable, "landmark set has two landmarks in one cell; use triples");
    }
    const auto& g = w.graph();
    const std::size_t width = std::to_string(g.dim(2)).size();
    std::vector<std::vector<int>> cells(static_cast<std::size_t>(g.dim(0)),
                                        std::vector<int>(static_cast<std::size_t>(g.dim(1)), 0));
    for (const auto& v : w.members()) cells[static_cast<std::size_t>(v[0] - 1)][static_cast<std::size_t>(v[1] - 1)] = v[2];
    std::string out;
    for (const auto& row : cells) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            const std::string cell = row[j] ? std::to_string(row[j]) : ".";
            if (j) out += ' ';
            out.append(width - cell.size(), ' ');
            out += cell;
        }
        out += '\n';
    }
    return out;
}

std::string emit_triples(const LandmarkSet& w) {
    const auto& g = w.graph();
    std::string out = "# graph";
    for (int d : g.dims()) out += " " + std::to_string(d);
    out += " " + k_text(g) + "\n";
    for (const auto& v : w.members()) {
        for (std::size_t i = 0; i < v.rank(); ++i) {
            if (i) out += ' ';
            out += std::to_string(v[i]);
        }
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json to_json(const Vertex& v) { return nlohmann::ordered_json(v.coords()); }

namespace {

nlohmann::ordered_json members_json(const LandmarkSet& w) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& v : w.members()) out.push_back(to_json(v));
    return out;
}

nlohmann::ordered_json stats_json(const SearchStats& s) {
    nlohmann::ordered_json j;
    j["space_size"] = s.space_size;
    j["examined"] = s.examined;
    j["pruned"] = s.pruned;
    j["normalized"] = s.normalized;
    j["pruning"] = s.pruning;
    return j;
}

nlohmann::ordered_json cycles_json(std::string_view kind, const std::vector<ColoredCycle>& cycles) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& c : cycles) {
        nlohmann::ordered_json rec;
        rec["kind"] = kind;
        auto landmarks = nlohmann::ordered_json::array();
        for (const auto& v : c.landmarks) landmarks.push_back(to_json(v));
        rec["landmarks"] = landmarks;
        rec["colors"] = c.colors;
        out.push_back(rec);
    }
    return out;
}

}  // namespace

nlohmann::ordered_json to_json(const Certificate& c) {
    nlohmann::ordered_json j;
    j["schema"] = kCertificateSchema;
    j["verdict"] = to_string(c.verdict());
    j["graph"] = c.graph().to_string();
    if (c.witness()) {
        j["witness"] = {to_json(c.witness()->first), to_json(c.witness()->second)};
    } else {
        j["witness"] = nullptr;
    }
    j["basis"] = c.basis() ? members_json(*c.basis()) : nlohmann::ordered_json(nullptr);
    if (c.dimension_value()) j["dimension"] = *c.dimension_value();
    if (c.requested_size()) j["size"] = *c.requested_size();
    if (!c.attestation().empty()) j["attestation"] = c.attestation();
    if (c.stats()) j["search"] = stats_json(*c.stats());
    if (!c.attempts().empty()) {
        auto attempts = nlohmann::ordered_json::array();
        for (const auto& a : c.attempts()) {
            nlohmann::ordered_json rec;
            rec["size"] = a.size;
            rec["found"] = a.found;
            rec["search"] = stats_json(a.stats);
            attempts.push_back(rec);
        }
        j["attempts"] = attempts;
    }
    return j;
}

nlohmann::ordered_json to_json(const ForbiddenReport& r) {
    nlohmann::ordered_json j;
    j["schema"] = kForbiddenSchema;
    j["applicable"] = r.applicable;
    auto configurations = nlohmann::ordered_json::array();
    for (auto part : {cycles_json("C4", r.c4), cycles_json("C6", r.c6), cycles_json("C3", r.rainbow_triangles)}) {
        for (auto& rec : part) configurations.push_back(rec);
    }
    j["configurations"] = configurations;
    return j;
}

}  // namespace hgmd
