#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "goldspec/analysis.hpp"
#include "goldspec/graph.hpp"
#include "goldspec/spectrum.hpp"

namespace goldspec {

/// graph6 bytes for g (no trailing newline). Upper-triangle bits in
/// colex order x(i,j) for j > i, packed 6 per printable byte offset 63;
/// short header for n <= 62, 4-byte '~' header up to 258047.
std::string emit_graph6(const Graph& g);

/// Parses one graph6 line. Throws ParseError with the byte offset on
/// malformed input (bad header, byte outside [63,126], wrong body length).
Graph parse_graph6(std::string_view line);

struct EdgeListStats {
    long duplicate_edges = 0;
};

/// Whitespace-separated label pairs (several pairs per line allowed),
/// '#' comments, blank lines ignored. Labels map to indices in
/// first-appearance order and are kept on the graph. Duplicate edges
/// collapse (counted in stats); self-loops and odd token counts throw
/// ParseError with the line number.
Graph parse_edge_list(std::string_view text, EdgeListStats* stats = nullptr);

/// n rows of n entries in {0,1}; symmetry and zero diagonal enforced,
/// violations reported with their (i,j) position.
Graph parse_adjacency(std::string_view text);

enum class GraphFormat { graph6, edges, adjacency };

GraphFormat format_from_string(const std::string& s);
std::optional<GraphFormat> format_from_path(const std::string& path);

Graph read_graph_file(const std::string& path, GraphFormat format);
void write_graph_file(const Graph& g, const std::string& path, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

/// Everything `analyze` reports for one graph. Sub-analyses that do not
/// apply (non-regular, disconnected, too small) are explicit absences.
struct AnalysisReport {
    GraphProps props;
    Spectrum spectrum;
    std::optional<SpectralRatios> ratios;
    GsgVerdict gsg;
    std::optional<RamanujanReport> ramanujan;
    std::optional<SyncReport> sync;
    std::optional<std::pair<double, double>> expansion;
    double tol = kGoldenTol;
};

AnalysisReport analyze_graph(const Graph& g, double tol = kGoldenTol);

std::string render_table(const AnalysisReport& rep);
/// Single-line machine record: JSON object with fixed key order,
/// 12 significant digits, null for not-applicable entries.
std::string render_json_line(const AnalysisReport& rep);

}  // namespace goldspec
