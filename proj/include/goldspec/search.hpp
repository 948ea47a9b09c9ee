#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "goldspec/analysis.hpp"
#include "goldspec/families.hpp"
#include "goldspec/graph.hpp"

namespace goldspec {

/// Streams the non-isomorphic free trees on n nodes, one per isomorphism
/// class. Canonical rooted level sequences are iterated by the
/// Beyer-Hedetniemi successor rule and filtered to the representative whose
/// root is the (lexicographically preferred) centroid, so no tree is stored,
/// duplicated, or missed. n is capped at 16.
class FreeTreeEnumerator {
public:
    explicit FreeTreeEnumerator(int n);
    std::optional<Graph> next();

private:
    bool advance();
    bool accepted() const;

    int n_;
    std::vector<int> levels_;
    bool started_ = false;
    bool done_ = false;
};

void enumerate_free_trees(int n_min, int n_max, const std::function<void(const Graph&)>& emit);
std::vector<long> free_tree_counts(int n_min, int n_max);

/// Canonical level-sequence code of a free tree (rooted at its centroid;
/// for bicentroidal trees the lexicographically larger of the two rootings).
/// Equal codes <=> isomorphic trees.
std::vector<int> free_tree_code(const Graph& tree);

/// Streams connected graphs on n <= 7 nodes in ascending edge-mask order.
/// With dedup (n <= 6) one canonical representative per isomorphism class
/// is emitted, chosen by adjacency-mask minimisation over all relabelings.
void enumerate_connected_graphs(int n, bool dedup,
                                const std::function<void(const Graph&)>& emit);

/// One scanned instance: family spec or canonical encoding, size, ratios,
/// distance from golden. Undefined-ratio records carry deviation = +inf and
/// rank last.
struct ScanRecord {
    std::string label;
    int n = 0;
    long m = 0;
    std::optional<double> w1;
    std::optional<double> w2;
    double deviation = 0;
    bool golden = false;   // at the exact tolerance 1e-8
    bool almost = false;   // at the scan tolerance
    int rank = 0;
};

/// Sorts ascending by (deviation, n, label) and assigns 1-based ranks.
std::vector<ScanRecord> rank_records(std::vector<ScanRecord> records);

ScanRecord scan_record(const FamilySpec& spec, double tol);
ScanRecord scan_record(const Graph& g, std::string label, double tol);

/// One record per valid instance of the family with params[var] = lo..hi;
/// invalid parameter combinations (e.g. odd Moebius sizes) are skipped.
/// Deterministic: results are ranked, ties broken by size then label.
std::vector<ScanRecord> scan_family(const FamilySpec& templ, const std::string& var, long lo,
                                    long hi, double tol);

struct FileScanIssue {
    std::string path;
    long line = -1;
    std::string message;
};

/// Scans graphs from files (format "g6": one graph per line; "edges"/"adj":
/// one graph per file). Unreadable entries become issues, not failures.
std::vector<ScanRecord> scan_files(const std::vector<std::string>& paths,
                                   const std::string& format, double tol,
                                   std::vector<FileScanIssue>* issues = nullptr);

/// Ratio study of line graphs of complete bipartite graphs over consecutive
/// Fibonacci (or Lucas) pairs (a, b) = (F_{k+1}, F_k), next to the
/// asymptotic predictions a/b and (a+b)/a.
struct FibonacciRow {
    int k = 0;
    long a = 0;
    long b = 0;
    std::optional<double> w1;
    std::optional<double> w2;
    double w1_predicted = 0;  // a / b
    double w2_predicted = 0;  // (a + b) / a
};

std::vector<FibonacciRow> fibonacci_line_graph_study(int k_max, bool lucas = false);

}  // namespace goldspec
