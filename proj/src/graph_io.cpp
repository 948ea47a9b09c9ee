#include "goldspec/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "goldspec/errors.hpp"

namespace goldspec {

namespace {

constexpr int kG6Offset = 63;
constexpr int kG6ShortMax = 62;
constexpr int kG6LongMax = 258047;

long body_bytes(long n) { return (n * (n - 1) / 2 + 5) / 6; }

}  // namespace

std::string emit_graph6(const Graph& g) {
    const int n = g.node_count();
    std::string out;
    if (n <= kG6ShortMax) {
        out.push_back(static_cast<char>(n + kG6Offset));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Offset));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Offset));
        out.push_back(static_cast<char>((n & 0x3f) + kG6Offset));
    }
    int word = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            word = (word << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(word + kG6Offset));
                word = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + kG6Offset));
    return out;
}

Graph parse_graph6(std::string_view line) {
    // tolerate the optional format marker some tools prepend
    constexpr std::string_view kMarker = ">>graph6<<";
    if (line.substr(0, kMarker.size()) == kMarker) line.remove_prefix(kMarker.size());
    if (line.empty()) throw ParseError("graph6: empty input", -1, 0);

    for (size_t i = 0; i < line.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: byte " + std::to_string(static_cast<int>(c)) +
                                 " outside printable range [63,126] at offset " + std::to_string(i),
                             -1, static_cast<long>(i));
    }

    size_t pos = 0;
    long n;
    if (line[0] == 126) {
        if (line.size() >= 2 && line[1] == 126)
            throw ParseError("graph6: 8-byte order header not supported (n > 258047)", -1, 1);
        if (line.size() < 4) throw ParseError("graph6: truncated order header", -1, line.size());
        n = (static_cast<long>(line[1] - kG6Offset) << 12) |
            (static_cast<long>(line[2] - kG6Offset) << 6) |
            static_cast<long>(line[3] - kG6Offset);
        pos = 4;
    } else {
        n = line[0] - kG6Offset;
        pos = 1;
    }
    if (n < 1 || n > kG6LongMax)
        throw ParseError("graph6: invalid node count " + std::to_string(n), -1, 0);

    const long expected = body_bytes(n);
    const long actual = static_cast<long>(line.size() - pos);
    if (actual != expected)
        throw ParseError("graph6: expected " + std::to_string(expected) + " data bytes for n = " +
                             std::to_string(n) + ", got " + std::to_string(actual),
                         -1, static_cast<long>(pos));

    Graph g(static_cast<int>(n));  // SizeError if n exceeds the dense cap
    long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            const int byte = line[pos + bit / 6] - kG6Offset;
            if (byte >> (5 - bit % 6) & 1) g.add_edge(i, j);
        }
    return g;
}

Graph parse_edge_list(std::string_view text, EdgeListStats* stats) {
    std::map<std::string, int> index;
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    long duplicates = 0;

    std::istringstream lines{std::string(text)};
    std::string line;
    long lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream tokens(line);
        std::vector<std::string> toks;
        std::string t;
        while (tokens >> t) toks.push_back(t);
        if (toks.empty()) continue;
        if (toks.size() % 2 != 0)
            throw ParseError("edge list: odd token count (" + std::to_string(toks.size()) +
                                 ") on line " + std::to_string(lineno),
                             lineno);
        for (size_t i = 0; i < toks.size(); i += 2) {
            if (toks[i] == toks[i + 1])
                throw ParseError("edge list: self-loop '" + toks[i] + "' on line " +
                                     std::to_string(lineno),
                                 lineno);
            for (const std::string& label : {toks[i], toks[i + 1]}) {
                if (index.emplace(label, static_cast<int>(labels.size())).second)
                    labels.push_back(label);
            }
            edges.emplace_back(index[toks[i]], index[toks[i + 1]]);
        }
    }
    if (labels.empty()) throw ParseError("edge list: no edges found", -1);

    Graph g(static_cast<int>(labels.size()));
    for (auto [a, b] : edges)
        if (!g.add_edge(a, b)) ++duplicates;
    g.set_labels(std::move(labels));
    if (stats) stats->duplicate_edges = duplicates;
    return g;
}

Graph parse_adjacency(std::string_view text) {
    std::istringstream lines{std::string(text)};
    std::string first;
    do {
        if (!std::getline(lines, first)) throw ParseError("adjacency: empty input", -1);
    } while (first.find_first_not_of(" \t\r\n") == std::string::npos);

    std::istringstream head(first);
    std::vector<std::string> row;
    std::string tok;
    while (head >> tok) row.push_back(tok);
    const long n = static_cast<long>(row.size());
    if (n < 1) throw ParseError("adjacency: empty first row", 1);

    std::vector<int> cells;
    cells.reserve(n * n);
    auto push_cell = [&](const std::string& s) {
        if (s != "0" && s != "1") {
            const long k = static_cast<long>(cells.size());
            throw ParseError("adjacency: entry '" + s + "' at (" + std::to_string(k / n) + "," +
                             std::to_string(k % n) + ") is not 0/1");
        }
        cells.push_back(s == "1" ? 1 : 0);
    };
    for (const auto& s : row) push_cell(s);
    while (lines >> tok) push_cell(tok);
    if (static_cast<long>(cells.size()) != n * n)
        throw ParseError("adjacency: expected " + std::to_string(n * n) + " entries for order " +
                         std::to_string(n) + ", got " + std::to_string(cells.size()));

    for (long i = 0; i < n; ++i) {
        if (cells[i * n + i] != 0)
            throw ParseError("adjacency: nonzero diagonal at (" + std::to_string(i) + "," +
                             std::to_string(i) + ")");
        for (long j = i + 1; j < n; ++j)
            if (cells[i * n + j] != cells[j * n + i])
                throw ParseError("adjacency: asymmetric at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
    }
    Graph g(static_cast<int>(n));
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j)
            if (cells[i * n + j]) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

GraphFormat format_from_string(const std::string& s) {
    if (s == "g6" || s == "graph6") return GraphFormat::graph6;
    if (s == "edges" || s == "edgelist") return GraphFormat::edges;
    if (s == "adj" || s == "adjacency") return GraphFormat::adjacency;
    throw ParameterError("unknown graph format '" + s + "' (expected g6|edges|adj)");
}

std::optional<GraphFormat> format_from_path(const std::string& path) {
    const auto dot = path.rfind('.');
    if (dot == std::string::npos) return std::nullopt;
    const std::string ext = path.substr(dot + 1);
    if (ext == "g6") return GraphFormat::graph6;
    if (ext == "adj") return GraphFormat::adjacency;
    if (ext == "edges" || ext == "edgelist" || ext == "txt") return GraphFormat::edges;
    return std::nullopt;
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    if (format == GraphFormat::graph6) {
        // first non-empty line
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
            if (!line.empty()) return parse_graph6(line);
        }
        throw ParseError("graph6: no data lines in " + path);
    }
    if (format == GraphFormat::adjacency) return parse_adjacency(text);
    return parse_edge_list(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    if (format == GraphFormat::graph6) return emit_graph6(g) + "\n";
    std::ostringstream out;
    if (format == GraphFormat::edges) {
        const auto& labels = g.labels();
        for (auto [i, j] : g.edges()) {
            if (!labels.empty())
                out << labels[i] << ' ' << labels[j] << '\n';
            else
                out << i << ' ' << j << '\n';
        }
        return out.str();
    }
    for (int i = 0; i < g.node_count(); ++i) {
        for (int j = 0; j < g.node_count(); ++j) {
            if (j) out << ' ';
            out << (g.has_edge(i, j) ? 1 : 0);
        }
        out << '\n';
    }
    return out.str();
}

void write_graph_file(const Graph& g, const std::string& path, GraphFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << serialize_graph(g, format);
}

AnalysisReport analyze_graph(const Graph& g, double tol) {
    AnalysisReport rep{graph_props(g), adjacency_spectrum(g), std::nullopt, {}, std::nullopt,
                       std::nullopt,   std::nullopt,          tol};
    rep.gsg.tol = tol;
    if (rep.spectrum.size() >= 2) {
        rep.ratios = spectral_ratios(rep.spectrum);
        rep.gsg = classify_gsg(*rep.ratios, tol);
    }
    if (rep.props.regular && rep.props.connected && rep.props.regularity >= 1) {
        rep.ramanujan = ramanujan_check(g);
        rep.expansion = expansion_bounds(g);
    }
    if (rep.props.connected && rep.props.n >= 2) rep.sync = sync_ratio(g);
    return rep;
}

namespace {

std::string opt12(const std::optional<double>& v) { return v ? fmt12(*v) : std::string("na"); }

}  // namespace

std::string render_table(const AnalysisReport& rep) {
    std::ostringstream out;
    out << "graph      n=" << rep.props.n << " m=" << rep.props.m
        << (rep.props.regular ? " regular d=" + std::to_string(rep.props.regularity)
                              : std::string(" irregular"))
        << (rep.props.connected ? " connected" : " disconnected")
        << (rep.props.bipartite ? " bipartite" : " non-bipartite") << '\n';
    out << "spectrum   lambda1=" << fmt12(rep.spectrum.lambda1());
    if (rep.spectrum.size() >= 2)
        out << " lambda2=" << fmt12(rep.spectrum.lambda2())
            << " lambda_min=" << fmt12(rep.spectrum.lambda_min());
    out << '\n';
    if (rep.ratios) {
        out << "ratios     w1=" << opt12(rep.ratios->w1) << " w2=" << opt12(rep.ratios->w2)
            << " gap=" << fmt12(rep.ratios->gap) << " bulk=" << fmt12(rep.ratios->bulk)
            << " length=" << fmt12(rep.ratios->length) << '\n';
    } else {
        out << "ratios     na (need at least two eigenvalues)\n";
    }
    if (rep.gsg.applicable()) {
        out << "golden     " << (rep.gsg.is_golden ? "yes" : "no")
            << " deviation=" << fmt12(*rep.gsg.deviation) << " tol=" << fmt12(rep.gsg.tol) << '\n';
    } else {
        out << "golden     na (ratio undefined)\n";
    }
    if (rep.ramanujan) {
        out << "ramanujan  strict=" << (rep.ramanujan->strict_pass ? "yes" : "no")
            << " second_eigenvalue=" << (rep.ramanujan->second_eigenvalue_pass ? "yes" : "no")
            << " lambda=" << fmt12(rep.ramanujan->lambda_nontrivial)
            << " bound=" << fmt12(rep.ramanujan->bound) << '\n';
    } else {
        out << "ramanujan  na (needs a connected regular graph)\n";
    }
    if (rep.sync) {
        out << "sync       q=" << fmt12(rep.sync->q) << " mu1=" << fmt12(rep.sync->mu1)
            << " mu_second_smallest=" << fmt12(rep.sync->mu_second_smallest);
        if (rep.sync->consistent_with_ratio_product)
            out << " ratio_product=" << (*rep.sync->consistent_with_ratio_product ? "yes" : "no");
        out << '\n';
    } else {
        out << "sync       na (needs a connected graph)\n";
    }
    if (rep.expansion) {
        out << "expansion  lower=" << fmt12(rep.expansion->first)
            << " upper=" << fmt12(rep.expansion->second) << '\n';
    } else {
        out << "expansion  na (needs a connected regular graph)\n";
    }
    return out.str();
}

std::string render_json_line(const AnalysisReport& rep) {
    std::ostringstream out;
    auto field = [&](const char* key, const std::string& value, bool quote = false) {
        out << '"' << key << "\":";
        if (quote) out << '"' << value << '"';
        else out << value;
        out << ',';
    };
    out << '{';
    field("n", std::to_string(rep.props.n));
    field("m", std::to_string(rep.props.m));
    field("regular", rep.props.regular ? "true" : "false");
    field("d", rep.props.regular ? std::to_string(rep.props.regularity) : "null");
    field("connected", rep.props.connected ? "true" : "false");
    field("bipartite", rep.props.bipartite ? "true" : "false");
    field("lambda1", fmt12(rep.spectrum.lambda1()));
    field("lambda2", rep.spectrum.size() >= 2 ? fmt12(rep.spectrum.lambda2()) : "null");
    field("lambda_min", rep.spectrum.size() >= 2 ? fmt12(rep.spectrum.lambda_min()) : "null");
    auto opt = [&](const std::optional<double>& v) { return v ? fmt12(*v) : std::string("null"); };
    field("w1", rep.ratios ? opt(rep.ratios->w1) : "null");
    field("w2", rep.ratios ? opt(rep.ratios->w2) : "null");
    field("gap", rep.ratios ? fmt12(rep.ratios->gap) : "null");
    field("bulk", rep.ratios ? fmt12(rep.ratios->bulk) : "null");
    field("length", rep.ratios ? fmt12(rep.ratios->length) : "null");
    field("golden", rep.gsg.applicable() ? (rep.gsg.is_golden ? "true" : "false") : "null");
    field("deviation", opt(rep.gsg.deviation));
    field("tol", fmt12(rep.tol));
    field("ramanujan_strict",
          rep.ramanujan ? (rep.ramanujan->strict_pass ? "true" : "false") : "null");
    field("ramanujan_second",
          rep.ramanujan ? (rep.ramanujan->second_eigenvalue_pass ? "true" : "false") : "null");
    field("ramanujan_lambda", rep.ramanujan ? fmt12(rep.ramanujan->lambda_nontrivial) : "null");
    field("ramanujan_bound", rep.ramanujan ? fmt12(rep.ramanujan->bound) : "null");
    field("q", rep.sync ? fmt12(rep.sync->q) : "null");
    field("mu1", rep.sync ? fmt12(rep.sync->mu1) : "null");
    field("mu_second_smallest", rep.sync ? fmt12(rep.sync->mu_second_smallest) : "null");
    field("expansion_lower", rep.expansion ? fmt12(rep.expansion->first) : "null");
    std::string body = out.str();
    body += "\"expansion_upper\":";
    body += rep.expansion ? fmt12(rep.expansion->second) : "null";
    body += '}';
    return body;
}

}  // namespace goldspec
