#include "primor/cli.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "primor/generators.hpp"
#include "primor/io.hpp"

namespace primor::cli {

std::string format_vertex_set(const std::vector<int>& vertices) {
    std::string out = "{";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(vertices[i]);
    }
    return out + "}";
}

std::string format_reason(const Reason& reason) {
    switch (reason.kind) {
        case ReasonKind::TooSmall:
            return "fewer than 3 vertices";
        case ReasonKind::IsK4:
            return "graph is K4";
        case ReasonKind::Disconnected:
            return "graph is disconnected";
        case ReasonKind::SmoduleDegreeViolation:
            return "violating s-module " + format_vertex_set(reason.smodule) + ", degree " +
                   std::to_string(reason.degree) + " < log2(" +
                   std::to_string(reason.smodule.size()) + ")";
    }
    return "unknown";
}

std::string format_sweep_report(const SweepReport& report) {
    std::ostringstream out;
    out << report.graphs_checked << " graphs, " << report.disagreements.size()
        << " disagreements\n";
    for (const auto& d : report.disagreements)
        out << "disagreement: graph " << d.graph_index << " decide="
            << (d.decided == Verdict::PrimarilyOrientable ? "primarily-orientable" : "not")
            << " oracle=" << (d.oracle_found ? "orientation-found" : "none") << "\n";
    return out.str();
}

namespace {

bool read_document(std::istream& in, std::ostream& err, EdgeListDocument& doc) {
    try {
        doc = parse_edge_list(in);
        return true;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return false;
    }
}

}  // namespace

int run_check(std::istream& in, std::ostream& out, std::ostream& err) {
    EdgeListDocument doc;
    if (!read_document(in, err, doc)) return kExitUsage;
    const Decision decision = decide(doc.graph);
    if (decision.verdict == Verdict::PrimarilyOrientable) {
        out << "primarily orientable\n";
        return kExitPositive;
    }
    out << "not primarily orientable: " << format_reason(*decision.reason) << "\n";
    return kExitNegative;
}

int run_orient(std::istream& in, std::ostream& out, std::ostream& err,
               const OrientOptions& options) {
    EdgeListDocument doc;
    if (!read_document(in, err, doc)) return kExitUsage;
    const Decision decision = decide(doc.graph);
    if (decision.verdict != Verdict::PrimarilyOrientable) {
        out << "not primarily orientable: " << format_reason(*decision.reason) << "\n";
        return kExitNegative;
    }
    const OrientedGraph oriented = build(doc.graph);
    if (options.dot)
        print_dot(out, oriented, doc.names);
    else
        print_orientation(out, {oriented});
    if (options.certify) {
        // Re-run the certificate from scratch; build() also certifies.
        if (!is_orientation_of(oriented, doc.graph) || !primality(oriented).prime) {
            err << "certification failed\n";
            return kExitNegative;
        }
        err << "certified prime\n";
    }
    return kExitPositive;
}

int run_modules(std::istream& in, std::ostream& out, std::ostream& err) {
    EdgeListDocument doc;
    if (!read_document(in, err, doc)) return kExitUsage;
    for (const auto& cls : maximal_smodules(doc.graph))
        out << "class " << format_vertex_set(cls) << " degree "
            << module_neighborhood(doc.graph, cls).degree << "\n";
    return kExitPositive;
}

int run_oracle(std::istream& in, std::ostream& out, std::ostream& err,
               std::optional<std::uint64_t> budget) {
    EdgeListDocument doc;
    if (!read_document(in, err, doc)) return kExitUsage;
    OracleResult result;
    try {
        result = exists_prime_orientation(doc.graph, budget);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    switch (result.status) {
        case OracleStatus::Found:
            out << "prime orientation found after " << result.orientations_tried
                << " orientations\n";
            print_orientation(out, {*result.witness});
            return kExitPositive;
        case OracleStatus::None:
            out << "no prime orientation (" << result.orientations_tried
                << " orientations checked)\n";
            return kExitNegative;
        case OracleStatus::Exhausted:
            out << "budget exhausted after " << result.orientations_tried << " orientations\n";
            return kExitExhausted;
    }
    return kExitUsage;
}

int run_sweep(std::ostream& out, std::ostream& err, int n, std::optional<std::uint64_t> sample,
              std::uint64_t seed) {
    SweepReport report;
    try {
        report = sample ? sample_sweep(n, *sample, seed) : sweep_all_graphs(n);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    out << format_sweep_report(report);
    err << "elapsed: " << report.elapsed_seconds << "s\n";
    return report.disagreements.empty() ? kExitPositive : kExitNegative;
}

int run_gen(std::ostream& out, std::ostream& err, const GenSpec& spec) {
    Graph graph;
    try {
        if (spec.family == "complete")
            graph = complete(spec.n);
        else if (spec.family == "star")
            graph = star(spec.n);
        else if (spec.family == "path")
            graph = path(spec.n);
        else if (spec.family == "cycle")
            graph = cycle(spec.n);
        else if (spec.family == "half_graph")
            graph = half_graph(spec.n);
        else if (spec.family == "erdos_renyi")
            graph = erdos_renyi(spec.n, spec.p, spec.seed);
        else {
            err << "error: unknown family '" << spec.family << "'\n";
            return kExitUsage;
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    print_edge_list(out, {std::move(graph), {}});
    return kExitPositive;
}

}  // namespace primor::cli
