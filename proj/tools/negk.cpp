// negk: compute K_-1(Z[G]) = Z^r + (Z/2)^s for finite groups, scan group
// catalogs, reproduce the published tables, and run the invariant suite.

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "negk/catalog.hpp"
#include "negk/schur.hpp"
#include "negk/verify.hpp"

using namespace negk;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;

std::string default_catalog_dir() {
    const char* env = std::getenv("NEGK_CATALOG_DIR");
    return env ? env : "catalog";
}

// All entries from the given file, or from every *.cat in the default
// directory; duplicates by (order, index) are dropped.
std::vector<CatalogEntry> load_entries(const std::string& catalog_opt) {
    std::vector<std::string> files;
    if (!catalog_opt.empty()) {
        files.push_back(catalog_opt);
    } else {
        std::string dir = default_catalog_dir();
        if (!std::filesystem::is_directory(dir))
            throw std::runtime_error("catalog directory not found: " + dir +
                                     " (set NEGK_CATALOG_DIR or pass --catalog)");
        for (const auto& p : std::filesystem::directory_iterator(dir))
            if (p.path().extension() == ".cat") files.push_back(p.path().string());
        std::sort(files.begin(), files.end());
    }
    std::vector<CatalogEntry> out;
    std::set<std::pair<int, int>> seen;
    for (const auto& f : files)
        for (auto& e : read_catalog(f))
            if (seen.insert({e.order, e.index}).second) out.push_back(std::move(e));
    std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.index < b.index;
    });
    return out;
}

struct ScanRow {
    int order;
    int index;
    std::string name;
    long r;
    long s;
    long ms;
};

int cmd_compute(const std::string& spec, bool emit_components, bool emit_chartab) {
    FiniteGroup g = parse_group_spec(spec);
    SchurEngine eng(std::move(g));
    KMinusOneResult k = eng.k_minus_one();
    std::cout << "group " << eng.group().label << " order " << eng.group().n << "\n";
    std::cout << "r=" << k.r << " s=" << k.s << " K-1 = " << k_minus_one_pretty(k) << "\n";
    std::cout << "r_Q=" << k.rank.r_q;
    for (auto& [p, c] : k.rank.singular) std::cout << " singular_" << p << "=" << c;
    std::cout << "\n";
    if (emit_chartab) std::cout << character_table_tsv(eng.group(), eng.table());
    if (emit_components) std::cout << components_tsv(eng);
    return 0;
}

int cmd_scan(int min_order, int max_order, bool s_positive, const std::string& catalog,
             const std::string& format, int jobs) {
    std::vector<CatalogEntry> entries = load_entries(catalog);
    std::set<int> have_orders;
    for (auto& e : entries) have_orders.insert(e.order);
    for (int o = min_order; o <= max_order; ++o)
        if (!have_orders.count(o)) std::cerr << "note: no catalog entries of order " << o << "\n";
    std::vector<const CatalogEntry*> todo;
    for (auto& e : entries)
        if (e.order >= min_order && e.order <= max_order) todo.push_back(&e);

    std::vector<ScanRow> rows(todo.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::mutex err_mu;
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= todo.size()) return;
            auto t0 = std::chrono::steady_clock::now();
            try {
                FiniteGroup g = todo[i]->build();
                KMinusOneResult k = k_minus_one(g);
                auto t1 = std::chrono::steady_clock::now();
                rows[i] = ScanRow{todo[i]->order, todo[i]->index, todo[i]->name, k.r, k.s,
                                  std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                                      .count()};
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(err_mu);
                std::cerr << "error on (" << todo[i]->order << "," << todo[i]->index
                          << "): " << e.what() << "\n";
                failed = true;
            }
        }
    };
    int nthreads = std::max(1, jobs);
    std::vector<std::thread> pool;
    for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (failed) return kExitUnsupported;

    std::sort(rows.begin(), rows.end(), [](const ScanRow& a, const ScanRow& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.index < b.index;
    });
    std::ostringstream os;
    if (format == "tsv") {
        os << "order\tindex\tname\tr\ts\tK-1\n";
        for (auto& row : rows) {
            if (s_positive && row.s == 0) continue;
            KMinusOneResult k;
            k.r = row.r;
            k.s = row.s;
            os << row.order << "\t" << row.index << "\t" << row.name << "\t" << row.r << "\t"
               << row.s << "\t" << k_minus_one_pretty(k) << "\n";
        }
    } else if (format == "latex") {
        int cur = -1;
        for (auto& row : rows) {
            if (s_positive && row.s == 0) continue;
            if (row.order != cur) {
                cur = row.order;
                os << "\\hline\n$n = " << cur << "$ & Index & Structure & $r(G)$ & $s(G)$ & "
                   << "$K_{-1}\\mathbb{Z}[G]$ \\\\\n\\hline\n";
            }
            KMinusOneResult k;
            k.r = row.r;
            k.s = row.s;
            os << " & " << row.index << " & $" << row.name << "$ & " << row.r << " & " << row.s
               << " & $" << k_minus_one_pretty(k) << "$ \\\\\n";
        }
    } else {
        std::cerr << "unknown format: " << format << "\n";
        return kExitUsage;
    }
    std::cout << os.str();
    return 0;
}

int cmd_minimal_s(int max_order, const std::string& catalog) {
    std::vector<CatalogEntry> entries = load_entries(catalog);
    std::cout << "order\tindex\tname\ts\n";
    for (auto& e : entries) {
        if (e.order > max_order) continue;
        FiniteGroup g = e.build();
        SOfGroupResult res = s_of_group(g);
        if (res.s == 0) continue;
        bool minimal = true;
        for (const auto& nsub : normal_subgroups(g)) {
            if (nsub.order == 1 || nsub.order == g.n) continue;
            FiniteGroup q = quotient_group(g, nsub);
            if (s_of_group(q).s > 0) {
                minimal = false;
                break;
            }
        }
        if (minimal)
            std::cout << e.order << "\t" << e.index << "\t" << e.name << "\t" << res.s << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& catalog) {
    std::vector<CatalogEntry> entries = load_entries(catalog);
    long failures = 0;
    long groups = 0;
    auto sink = [&](const std::string& msg) { std::cerr << "FAIL " << msg << "\n"; };
    for (auto& e : entries) {
        FiniteGroup g;
        try {
            g = e.build();
        } catch (const std::exception& ex) {
            std::cerr << "FAIL [" << e.order << "," << e.index << "] build: " << ex.what() << "\n";
            ++failures;
            continue;
        }
        ++groups;
        failures += check_group_invariants(g, sink);
        failures += check_class_invariants(g, sink);
        if (g.n <= 64) failures += check_character_invariants(g, sink);
        if (g.n <= 100) failures += check_schur_invariants(g, sink);
    }
    std::cout << "verified " << groups << " groups, " << failures << " failures\n";
    return failures == 0 ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"negative K-theory of finite group rings"};
    app.require_subcommand(1);

    std::string spec;
    bool emit_components = false, emit_chartab = false;
    auto* compute = app.add_subcommand("compute", "K_-1 of a single group");
    compute->add_option("spec", spec,
                        "Cyclic(n) | Dihedral(n) | Dicyclic(n) | Sym(n) | Alt(n) | SL(2,3) | "
                        "SL(2,5) | BinO | Prod(a,b) | perms:<cycles>;... ")
        ->required();
    compute->add_flag("--emit-components", emit_components, "print per-class component summary");
    compute->add_flag("--emit-chartab", emit_chartab, "print the character table");

    int min_order = 1, max_order = 28, jobs = 1;
    bool s_positive = false;
    std::string catalog, format = "tsv";
    auto* scan = app.add_subcommand("scan", "scan a catalog range");
    scan->add_option("--min", min_order, "smallest order");
    scan->add_option("--max", max_order, "largest order");
    scan->add_flag("--s-positive", s_positive, "only rows with s > 0");
    scan->add_option("--catalog", catalog, "catalog file (default: all *.cat in NEGK_CATALOG_DIR)");
    scan->add_option("--format", format, "tsv | latex");
    scan->add_option("--jobs", jobs, "worker threads");

    int ms_max = 60;
    std::string ms_catalog;
    auto* minimal = app.add_subcommand("minimal-s", "groups with s > 0 and no s-positive quotient");
    minimal->add_option("--max", ms_max, "largest order");
    minimal->add_option("--catalog", ms_catalog, "catalog file");

    std::string v_catalog;
    auto* verify = app.add_subcommand("verify", "run the invariant suite over the catalog");
    verify->add_option("--catalog", v_catalog, "catalog file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (compute->parsed()) return cmd_compute(spec, emit_components, emit_chartab);
        if (scan->parsed()) return cmd_scan(min_order, max_order, s_positive, catalog, format, jobs);
        if (minimal->parsed()) return cmd_minimal_s(ms_max, ms_catalog);
        if (verify->parsed()) return cmd_verify(v_catalog);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnsupportedGroupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    }
    return kExitUsage;
}
