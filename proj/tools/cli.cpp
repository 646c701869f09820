#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hgmd/construct.hpp"
#include "hgmd/error.hpp"
#include "hgmd/formats.hpp"
#include "hgmd/landmark.hpp"
#include "hgmd/search.hpp"

namespace hgmd::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::NotFound, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

LandmarkSet load(const GhgParams& g, const std::string& path, const std::string& format) {
    const auto text = read_file(path);
    const auto fmt = format.empty() ? detect_format(text, g) : parse_format(format);
    return parse_landmarks(text, fmt, g);
}

// pls when representable, triples otherwise (with a notice on err).
std::string emit(const LandmarkSet& w, const std::string& format, std::ostream& err) {
    if (format == "triples") return emit_triples(w);
    if (format == "pls") return emit_pls(w);
    if (pls_representable(w)) return emit_pls(w);
    err << "notice: set is not expressible as a partial Latin square; writing triples\n";
    return emit_triples(w);
}

void write(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::NotFound, "cannot write '" + path + "'");
    file << text;
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv(kBudgetEnv)) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, std::string(kBudgetEnv) + " is not a number: '" + env + "'");
        }
    }
    return kDefaultMaxCandidates;
}

void print(std::ostream& out, const nlohmann::ordered_json& doc) { out << doc.dump(2) << '\n'; }

struct VerifyArgs {
    std::string graph, in, format, method = "code";
};

int verify(const VerifyArgs& a, std::ostream& out) {
    const auto g = GhgParams::parse(a.graph);
    const auto w = load(g, a.in, a.format);
    const auto cert = a.method == "distance" ? is_resolving_by_distance(w) : is_resolving(w);
    print(out, to_json(cert));
    return cert.is_resolving() ? kExitOk : kExitUnresolved;
}

struct ConstructArgs {
    int n = 0;
    std::string out, format;
};

int construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
    write(emit(metric_basis(a.n), a.format, err), a.out, out);
    return kExitOk;
}

struct DimensionArgs {
    std::string graph;
    bool exhaustive = false;
    std::uint64_t budget = 0;
    double max_seconds = 0.0;
    unsigned workers = 0;
    double progress_interval = 5.0;
};

int dimension(const DimensionArgs& a, bool budget_given, std::ostream& out, std::ostream& err) {
    const auto g = GhgParams::parse(a.graph);
    SearchOptions opts;
    opts.exhaustive = a.exhaustive;
    opts.max_candidates = budget_given ? a.budget : default_budget();
    opts.max_seconds = a.max_seconds;
    opts.workers = a.workers;
    opts.progress_interval_seconds = a.progress_interval;
    if (a.progress_interval > 0) {
        opts.progress = [&err](const SearchProgress& p) {
            err << "progress examined=" << p.examined << " pruned=" << p.pruned << " elapsed=" << std::fixed
                << std::setprecision(1) << p.elapsed_seconds << '\n'
                << std::defaultfloat;
        };
    }
    print(out, to_json(metric_dimension(g, opts)));
    return kExitOk;
}

struct ScanArgs {
    std::string graph, in, format;
};

int scan(const ScanArgs& a, std::ostream& out) {
    const auto g = GhgParams::parse(a.graph);
    const auto w = load(g, a.in, a.format);
    const auto cls = classify(w);
    nlohmann::ordered_json doc;
    doc["graph"] = g.to_string();
    doc["class"] = to_string(cls.kind);
    doc["loop_vertex"] = cls.loop_vertex ? to_json(*cls.loop_vertex) : nlohmann::ordered_json(nullptr);
    doc["report"] = to_json(forbidden_scan(build_landmark_graph(w)));
    doc["prediction"] =
        cls.kind == SystemKind::Other ? nlohmann::ordered_json(nullptr) : to_json(predict_resolving(w));
    print(out, doc);
    return kExitOk;
}

struct FixtureArgs {
    std::string name, format;
};

int fixtures(const FixtureArgs& a, std::ostream& out, std::ostream& err) {
    out << emit(fixture(a.name), a.format, err);
    return kExitOk;
}

struct EnumerateArgs {
    int n = 0;
    std::size_t count = 10;
    std::uint64_t seed = 0;
};

// One system per line: its triples as a JSON array.
int enumerate(const EnumerateArgs& a, std::ostream& out) {
    for (const auto& w : enumerate_two_basic(a.n, a.count, a.seed)) {
        auto line = nlohmann::ordered_json::array();
        for (const auto& v : w.members()) line.push_back(to_json(v));
        out << line.dump() << '\n';
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Resolving sets and metric dimension of generalized Hamming graphs", "hgmd"};
    app.require_subcommand(1);

    const std::vector<std::string> formats = {"pls", "triples"};

    VerifyArgs va;
    auto* v = app.add_subcommand("verify", "Check whether a landmark set resolves a graph");
    v->add_option("--graph", va.graph, "graph, e.g. 5x7x11 or 3x3x3;K=1,2")->required();
    v->add_option("--in", va.in, "landmark file")->required();
    v->add_option("--format", va.format, "pls or triples (default: detect)")->check(CLI::IsMember(formats));
    v->add_option("--method", va.method, "code or distance")->check(CLI::IsMember({"code", "distance"}));

    ConstructArgs ca;
    auto* c = app.add_subcommand("construct", "Write a metric basis of HG(n,n,n;3)");
    c->add_option("--n", ca.n, "n >= 3")->required();
    c->add_option("--out", ca.out, "output file (default: stdout)");
    c->add_option("--format", ca.format, "pls or triples")->check(CLI::IsMember(formats));

    DimensionArgs da;
    auto* d = app.add_subcommand("dimension", "Metric dimension of HG(n,n,n;3) with a certificate");
    d->add_option("--graph", da.graph, "graph, e.g. 4x4x4")->required();
    d->add_flag("--exhaustive", da.exhaustive, "certify n = 3, 4 by exhaustive search");
    auto* budget = d->add_option("--budget", da.budget,
                                 std::string("largest search space to attempt (default: $") + kBudgetEnv + " or " +
                                     std::to_string(kDefaultMaxCandidates) + ")");
    d->add_option("--max-seconds", da.max_seconds, "wall-time limit, 0 for none");
    d->add_option("--workers", da.workers, "search threads, 0 for all cores");
    d->add_option("--progress-interval", da.progress_interval, "seconds between progress lines, 0 for none");

    ScanArgs sa;
    auto* s = app.add_subcommand("scan", "Report forbidden configurations of a landmark graph");
    s->add_option("--graph", sa.graph, "graph, e.g. 6x6x6")->required();
    s->add_option("--in", sa.in, "landmark file")->required();
    s->add_option("--format", sa.format, "pls or triples (default: detect)")->check(CLI::IsMember(formats));

    FixtureArgs fa;
    auto* f = app.add_subcommand("fixtures", "Write a built-in landmark set");
    f->add_option("--name", fa.name, "fixture name")->required()->check(CLI::IsMember(fixture_names()));
    f->add_option("--format", fa.format, "pls or triples")->check(CLI::IsMember(formats));

    EnumerateArgs ea;
    auto* e = app.add_subcommand("enumerate", "List (n = 3) or sample (n >= 4) two-basic systems");
    e->add_option("--n", ea.n, "n >= 3")->required();
    e->add_option("--count", ea.count, "maximum number of systems");
    e->add_option("--seed", ea.seed, "sampling seed");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& ex) {
        return app.exit(ex, out, err) == 0 ? kExitOk : kExitError;
    }

    try {
        if (*v) return verify(va, out);
        if (*c) return construct(ca, out, err);
        if (*d) return dimension(da, budget->count() > 0, out, err);
        if (*s) return scan(sa, out);
        if (*f) return fixtures(fa, out, err);
        if (*e) return enumerate(ea, out);
    } catch (const Error& ex) {
        err << "error: " << to_string(ex.code()) << ": " << ex.what() << '\n';
        return ex.code() == ErrorCode::BudgetExceeded ? kExitBudget : kExitError;
    }
    return kExitError;
}

}  // namespace hgmd::cli
