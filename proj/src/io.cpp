#include "qgraph/io.hpp"

#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <vector>

#include "qgraph/error.hpp"

namespace qgraph {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line.substr(0, line.find('#')));
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

long parse_int(const std::string& tok, std::size_t line) {
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(tok, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != tok.size()) throw ParseError(ErrorCode::Parse, line, "line " + std::to_string(line) + ": expected an integer, got '" + tok + "'");
    return value;
}

double parse_real(const std::string& tok, std::size_t line) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(tok, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != tok.size()) throw ParseError(ErrorCode::Parse, line, "line " + std::to_string(line) + ": expected a number, got '" + tok + "'");
    return value;
}

} // namespace

MetricGraph parse_graph(std::istream& in, double default_length) {
    long vertex_count = -1;
    long edge_count = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<double> lengths;
    std::set<std::pair<int, int>> seen;
    int with_length = -1;  // unknown until the first edge line

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tok = tokens_of(line);
        if (tok.empty()) continue;
        auto fail = [&](ErrorCode code, const std::string& msg) {
            throw ParseError(code, line_no, "line " + std::to_string(line_no) + ": " + msg);
        };

        if (vertex_count < 0) {
            if (tok.size() != 2) fail(ErrorCode::Parse, "header must be 'V E'");
            vertex_count = parse_int(tok[0], line_no);
            edge_count = parse_int(tok[1], line_no);
            if (vertex_count < 2) fail(ErrorCode::TooFewVertices, "need at least 2 vertices");
            if (edge_count < 0) fail(ErrorCode::Parse, "negative edge count");
            continue;
        }

        if (static_cast<long>(edges.size()) == edge_count) fail(ErrorCode::Parse, "more edge lines than the header declares");
        if (tok.size() != 2 && tok.size() != 3) fail(ErrorCode::Parse, "edge line must be 'u v [length]'");
        const int has_length = tok.size() == 3 ? 1 : 0;
        if (with_length >= 0 && has_length != with_length) {
            fail(ErrorCode::MissingLength, "either every edge carries a length or none does");
        }
        with_length = has_length;

        const long u = parse_int(tok[0], line_no);
        const long v = parse_int(tok[1], line_no);
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) fail(ErrorCode::VertexOutOfRange, "vertex out of range");
        if (u == v) fail(ErrorCode::SelfLoop, "self-loop");
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second) fail(ErrorCode::DuplicateEdge, "duplicate edge");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        if (has_length) {
            const double l = parse_real(tok[2], line_no);
            if (!(l > 0.0)) fail(ErrorCode::NonpositiveLength, "edge length must be positive");
            lengths.push_back(l);
        }
    }

    if (vertex_count < 0) throw ParseError(ErrorCode::Parse, line_no, "missing 'V E' header");
    if (static_cast<long>(edges.size()) != edge_count) {
        throw ParseError(ErrorCode::Parse, line_no,
                         "header declares " + std::to_string(edge_count) + " edges, found " + std::to_string(edges.size()));
    }
    if (with_length != 1) {
        if (!(default_length > 0.0)) throw ParseError(ErrorCode::NonpositiveLength, 0, "default edge length must be positive");
        lengths.assign(edges.size(), default_length);
    }

    try {
        return attach_lengths(build_graph(static_cast<int>(vertex_count), edges), lengths);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& err) {
        throw ParseError(err.code(), 0, err.what());
    }
}

MetricGraph read_graph_file(const std::filesystem::path& path, double default_length) {
    std::ifstream in(path);
    if (!in) throw ParseError(ErrorCode::Io, 0, "cannot open " + path.string());
    return parse_graph(in, default_length);
}

std::string format_graph(const MetricGraph& mg) {
    std::ostringstream out;
    out << std::setprecision(17);
    out << mg.graph().vertex_count() << ' ' << mg.graph().edge_count() << '\n';
    for (int e = 0; e < mg.graph().edge_count(); ++e) {
        const Edge& ed = mg.graph().edge(e);
        out << ed.u << ' ' << ed.v << ' ' << mg.length(e) << '\n';
    }
    return out.str();
}

} // namespace qgraph
