#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "goldspec/analysis.hpp"
#include "goldspec/common.hpp"
#include "goldspec/errors.hpp"
#include "goldspec/families.hpp"
#include "goldspec/graph_io.hpp"
#include "goldspec/search.hpp"

namespace goldspec {

namespace {

struct RangeExpr {
    std::string var;
    long lo = 0;
    long hi = -1;
};

RangeExpr parse_range(const std::string& s) {
    const auto eq = s.find('=');
    const auto dots = s.find("..");
    if (eq == std::string::npos || dots == std::string::npos || dots < eq)
        throw ParameterError("bad range expression '" + s + "' (expected var=lo..hi)");
    RangeExpr r;
    r.var = s.substr(0, eq);
    try {
        r.lo = std::stol(s.substr(eq + 1, dots - eq - 1));
        r.hi = std::stol(s.substr(dots + 2));
    } catch (const std::exception&) {
        throw ParameterError("bad range bounds in '" + s + "'");
    }
    if (r.var.empty()) throw ParameterError("bad range expression '" + s + "' (missing variable)");
    return r;
}

struct FamilyOptions {
    std::string family;
    long n = LONG_MIN, a = LONG_MIN, b = LONG_MIN, c = LONG_MIN;
    long q = LONG_MIN, r = LONG_MIN, k = LONG_MIN;
    std::vector<int> conn;
    std::string name;

    void add_to(CLI::App* cmd, bool family_required) {
        auto* opt = cmd->add_option("--family", family, "family tag");
        if (family_required) opt->required();
        cmd->add_option("--n", n, "node/size parameter");
        cmd->add_option("--a", a, "first part size");
        cmd->add_option("--b", b, "second part size");
        cmd->add_option("--c", c, "number of parts");
        cmd->add_option("--q", q, "star size");
        cmd->add_option("--r", r, "tail length");
        cmd->add_option("--k", k, "expansion/cover/skip parameter");
        cmd->add_option("--conn", conn, "circulant connection list")->delimiter(',');
        cmd->add_option("--name", name, "platonic/named graph name");
    }

    FamilySpec to_spec() const {
        FamilySpec spec;
        spec.family = family_from_string(family);
        auto put = [&](const char* key, long v) {
            if (v != LONG_MIN) spec.params[key] = v;
        };
        put("n", n);
        put("a", a);
        put("b", b);
        put("c", c);
        put("q", q);
        put("r", r);
        put("k", k);
        spec.connections = conn;
        spec.name = name;
        return spec;
    }
};

std::string opt_or_na(const std::optional<double>& v) {
    return v ? fmt12(*v) : std::string("na");
}

void write_records_csv(std::ostream& out, const std::vector<ScanRecord>& records, double tol) {
    out << "# phi=" << fmt12(kPhi) << " tol=" << fmt12(tol) << "\n";
    out << "rank,spec,n,m,w1,w2,deviation,golden,almost\n";
    for (const auto& rec : records) {
        out << rec.rank << ',' << rec.label << ',' << rec.n << ',' << rec.m << ','
            << opt_or_na(rec.w1) << ',' << opt_or_na(rec.w2) << ','
            << (rec.w1 && rec.w2 ? fmt12(rec.deviation) : std::string("na")) << ','
            << (rec.golden ? 1 : 0) << ',' << (rec.almost ? 1 : 0) << "\n";
    }
}

GraphFormat resolve_format(const std::string& given, const std::string& path, bool lenient) {
    if (!given.empty()) return format_from_string(given);
    if (auto fmt = format_from_path(path)) return *fmt;
    if (lenient) return GraphFormat::graph6;
    throw ParameterError("cannot infer graph format from '" + path + "'; pass --format g6|edges|adj");
}

int run_construct(const FamilyOptions& fam, const std::string& out_path,
                  const std::string& format) {
    const Graph g = build_family(fam.to_spec());
    write_graph_file(g, out_path, resolve_format(format, out_path, true));
    return 0;
}

int run_analyze(const std::string& path, const std::string& format, bool json, double tol,
                std::ostream& out) {
    const Graph g = read_graph_file(path, resolve_format(format, path, false));
    const AnalysisReport rep = analyze_graph(g, tol);
    out << (json ? render_json_line(rep) + "\n" : render_table(rep));
    return 0;
}

int run_scan(const FamilyOptions& fam, const std::string& range,
             const std::vector<std::string>& files, const std::string& files_format, double tol,
             long top, const std::string& csv_path, std::ostream& out, std::ostream& err) {
    std::vector<ScanRecord> records;
    if (!fam.family.empty()) {
        const RangeExpr r = parse_range(range);
        FamilySpec templ = fam.to_spec();
        records = scan_family(templ, r.var, r.lo, r.hi, tol);
    } else if (!files.empty()) {
        std::vector<FileScanIssue> issues;
        records = scan_files(files, files_format, tol, &issues);
        for (const auto& issue : issues) {
            err << "warning: " << issue.path;
            if (issue.line >= 0) err << ":" << issue.line;
            err << ": " << issue.message << "\n";
        }
    } else {
        throw ParameterError("scan: pass --family with --range, or --files");
    }

    std::vector<ScanRecord> head = records;
    if (top > 0 && static_cast<long>(head.size()) > top) head.resize(top);
    write_records_csv(out, head, tol);
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path, std::ios::binary);
        if (!csv) throw ParseError("cannot write file: " + csv_path);
        write_records_csv(csv, records, tol);
    }
    return 0;
}

int run_trees(long min_n, long max_n, double tol, const std::string& csv_path,
              std::ostream& out) {
    std::vector<ScanRecord> records;
    out << "# free trees n=" << min_n << ".." << max_n << "\n";
    long total = 0;
    for (long n = min_n; n <= max_n; ++n) {
        long count = 0;
        FreeTreeEnumerator trees(static_cast<int>(n));
        while (auto t = trees.next()) {
            records.push_back(scan_record(*t, emit_graph6(*t), tol));
            ++count;
        }
        total += count;
        out << "n=" << n << " count=" << count << "\n";
    }
    records = rank_records(std::move(records));
    long golden = std::count_if(records.begin(), records.end(),
                                [](const ScanRecord& r) { return r.golden; });
    out << "total=" << total << " golden=" << golden << "\n";
    if (!records.empty()) {
        const auto& best = records.front();
        out << "closest: " << best.label << " n=" << best.n << " m=" << best.m
            << " w1=" << opt_or_na(best.w1) << " w2=" << opt_or_na(best.w2)
            << " deviation=" << (best.w1 && best.w2 ? fmt12(best.deviation) : std::string("na"))
            << "\n";
    }
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path, std::ios::binary);
        if (!csv) throw ParseError("cannot write file: " + csv_path);
        write_records_csv(csv, records, tol);
    }
    return 0;
}

int run_verify(const FamilyOptions& fam, const std::string& range, std::ostream& out) {
    constexpr double kDeviationTol = 1e-7;
    const RangeExpr r = parse_range(range);
    FamilySpec templ = fam.to_spec();
    long checked = 0, failed = 0;
    for (long v = r.lo; v <= r.hi; ++v) {
        FamilySpec spec = templ;
        spec.params[r.var] = v;
        Graph probe(1);
        try {
            probe = build_family(spec);
        } catch (const ParameterError&) {
            continue;  // not an instance (e.g. odd Moebius size)
        }
        const VerificationReport rep = verify_closed_form(spec);
        ++checked;
        const bool ok = rep.pass(kDeviationTol);
        if (!ok) ++failed;
        out << spec.to_string() << " n=" << rep.numeric.size() << " max_deviation=";
        if (rep.structural_ok)
            out << fmt12(rep.max_abs_deviation);
        else
            out << "length-mismatch(" << rep.closed_form.size() << " vs " << rep.numeric.size()
                << ")";
        out << " multiplicities=" << (rep.multiplicities_match ? "ok" : "MISMATCH")
            << (ok ? "" : "  <-- FAIL") << "\n";
    }
    if (checked == 0) {
        out << "no instances in range\n";
        return 1;
    }
    out << (failed == 0 ? "OK" : "FAIL") << " (" << (checked - failed) << "/" << checked
        << " within " << fmt12(kDeviationTol) << ")\n";
    return failed == 0 ? 0 : 1;
}

int run_figdata(const std::string& figure, long max_n, const std::string& out_path,
                std::ostream& out) {
    std::ostringstream data;
    data << "# phi=" << fmt12(kPhi) << "\n";
    auto row = [&](const std::string& x, const std::optional<double>& w1,
                   const std::optional<double>& w2) {
        data << x << ',' << opt_or_na(w1) << ',' << opt_or_na(w2) << ',' << fmt12(kPhi) << "\n";
    };

    if (figure == "1a" || figure == "1b") {
        if (max_n <= 0) max_n = 50;
        data << "n,w1,w2,phi\n";
        const Family family = figure == "1a" ? Family::cycle : Family::path;
        for (long n = (figure == "1a" ? 3 : 2); n <= max_n; ++n) {
            FamilySpec spec;
            spec.family = family;
            spec.params["n"] = n;
            const SpectralRatios r = spectral_ratios(closed_form_spectrum(spec));
            row(std::to_string(n), r.w1, r.w2);
        }
    } else if (figure == "5") {
        if (max_n <= 0) max_n = 10;
        data << "gap,w1,w2,phi\n";
        enumerate_free_trees(2, static_cast<int>(max_n), [&](const Graph& t) {
            const SpectralRatios r = spectral_ratios(t);
            row(fmt12(r.gap), r.w1, r.w2);
        });
    } else if (figure == "6") {
        if (max_n <= 0) max_n = 22;
        data << "n,w1,w2,phi\n";
        for (long q = 3; q + 2 <= max_n; ++q) {
            const SpectralRatios r = spectral_ratios(comet_graph(static_cast<int>(q), 1));
            row(std::to_string(q + 2), r.w1, r.w2);
        }
    } else {
        throw ParameterError("unknown figure '" + figure + "' (expected 1a|1b|5|6)");
    }

    if (out_path.empty()) {
        out << data.str();
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw ParseError("cannot write file: " + out_path);
        f << data.str();
    }
    return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"goldspec: spectral-ratio analysis of graphs"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build a family instance, write to a file");
    FamilyOptions cons_fam;
    cons_fam.add_to(construct, true);
    std::string cons_out, cons_format;
    construct->add_option("--out", cons_out, "output path")->required();
    construct->add_option("--format", cons_format, "g6|edges|adj (default: from extension)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "spectral report for a graph file");
    std::string ana_path, ana_format;
    bool ana_json = false;
    double ana_tol = kGoldenTol;
    analyze->add_option("path", ana_path, "graph file")->required();
    analyze->add_option("--format", ana_format, "g6|edges|adj (default: from extension)");
    analyze->add_flag("--json", ana_json, "single-line machine record");
    analyze->add_option("--tol", ana_tol, "golden verdict tolerance (default 1e-8)");

    // scan
    auto* scan = app.add_subcommand("scan", "rank family instances (or files) by golden deviation");
    FamilyOptions scan_fam;
    scan_fam.add_to(scan, false);
    std::string scan_range, scan_csv, scan_files_format = "g6";
    std::vector<std::string> scan_paths;
    double scan_tol = kAlmostGoldenTol;
    long scan_top = 10;
    scan->add_option("--range", scan_range, "var=lo..hi over the family parameter");
    scan->add_option("--files", scan_paths, "graph files to scan instead of a family");
    scan->add_option("--files-format", scan_files_format, "format of --files inputs (g6|edges|adj)");
    scan->add_option("--tol", scan_tol, "almost-golden tolerance (default 0.05)");
    scan->add_option("--top", scan_top, "rows printed to stdout (default 10, 0 = all)");
    scan->add_option("--csv", scan_csv, "write the full ranked table to this file");

    // trees
    auto* trees = app.add_subcommand("trees", "enumerate free trees and rank by golden deviation");
    long trees_min = 2, trees_max = 10;
    double trees_tol = kAlmostGoldenTol;
    std::string trees_csv;
    trees->add_option("--min-n", trees_min, "smallest size (default 2)");
    trees->add_option("--max-n", trees_max, "largest size (default 10)");
    trees->add_option("--tol", trees_tol, "almost-golden tolerance (default 0.05)");
    trees->add_option("--csv", trees_csv, "write the full ranked table to this file");

    // verify
    auto* verify = app.add_subcommand("verify", "closed form vs numeric spectrum cross-check");
    FamilyOptions ver_fam;
    ver_fam.add_to(verify, true);
    std::string ver_range;
    verify->add_option("--range", ver_range, "var=lo..hi over the family parameter")->required();

    // figdata
    auto* figdata = app.add_subcommand("figdata", "emit plot data columns");
    std::string fig_id, fig_out;
    long fig_max_n = 0;
    figdata->add_option("--figure", fig_id, "1a (cycles) | 1b (paths) | 5 (trees vs gap) | 6 (comets)")
        ->required();
    figdata->add_option("--max-n", fig_max_n, "largest size (default per figure)");
    figdata->add_option("--out", fig_out, "output path (default stdout)");

    std::vector<std::string> argv(args);
    try {
        std::vector<const char*> raw;
        raw.push_back("goldspec");
        for (const auto& a : argv) raw.push_back(a.c_str());
        app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (construct->parsed()) return run_construct(cons_fam, cons_out, cons_format);
        if (analyze->parsed()) return run_analyze(ana_path, ana_format, ana_json, ana_tol, out);
        if (scan->parsed())
            return run_scan(scan_fam, scan_range, scan_paths, scan_files_format, scan_tol,
                            scan_top, scan_csv, out, err);
        if (trees->parsed()) return run_trees(trees_min, trees_max, trees_tol, trees_csv, out);
        if (verify->parsed()) return run_verify(ver_fam, ver_range, out);
        if (figdata->parsed()) return run_figdata(fig_id, fig_max_n, fig_out, out);
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << "\n";
        return construct->parsed() || verify->parsed() ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace goldspec
