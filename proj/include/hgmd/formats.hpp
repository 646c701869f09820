#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "hgmd/landmark.hpp"
#include "hgmd/resolving.hpp"

namespace hgmd {

// pls: n1 rows of n2 whitespace-separated cells; symbol k in row i, column j
//      is the landmark (i,j,k), '.' marks an empty cell.
// triples: optional header "# graph n1 n2 n3 K", then one "i j k" per line.
enum class LandmarkFormat { Pls, Triples };

LandmarkFormat parse_format(std::string_view name);
std::string to_string(LandmarkFormat format);

// Lines starting with '#' (other than the triples header) and blank lines are
// ignored. Errors are ParseError with "line L, column C" in the message.
LandmarkSet parse_landmarks(std::string_view text, LandmarkFormat format, const GhgParams& g);

// Guesses the format: a "# graph" header or any line of exactly three
// integers whose row count differs from n1 means triples; otherwise pls.
LandmarkFormat detect_format(std::string_view text, const GhgParams& g);

// True for rank-3 sets with at most one landmark per (row, column) cell.
bool pls_representable(const LandmarkSet& w);

// Cells right-aligned to the widest symbol, separated by one space.
// Throws NotApplicable when the set is not representable.
std::string emit_pls(const LandmarkSet& w);
std::string emit_triples(const LandmarkSet& w);

inline constexpr std::string_view kCertificateSchema = "hgmd.certificate/1";
inline constexpr std::string_view kForbiddenSchema = "hgmd.forbidden/1";

nlohmann::ordered_json to_json(const Vertex& v);
nlohmann::ordered_json to_json(const Certificate& c);
nlohmann::ordered_json to_json(const ForbiddenReport& r);

}  // namespace hgmd
