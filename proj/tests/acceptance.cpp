// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Usage: acceptance <catalog-dir> [negk-binary]

#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "negk/catalog.hpp"
#include "negk/schur.hpp"
#include "negk/verify.hpp"

using namespace negk;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(int criterion, bool pass, const std::string& what, double secs) {
    std::printf("%s criterion %d: %s (%.1fs)\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
                secs);
    if (!pass) ++failures;
}

std::vector<CatalogEntry> load(const std::string& dir, const std::string& file) {
    return read_catalog(dir + "/" + file);
}

// (order, index) -> (r, s) per the published small-order tables. The (15,1)
// entry is a documented erratum: the printed row contradicts the published
// vanishing criterion (C15 has an element of order 15 = 3*5, a non-prime-power
// order), so the derived value r = 1 is asserted.
const std::map<std::pair<int, int>, std::pair<long, long>> kSmallOrderTable = {
    {{1,1},{0,0}},{{2,1},{0,0}},{{3,1},{0,0}},{{4,1},{0,0}},{{4,2},{0,0}},{{5,1},{0,0}},
    {{6,1},{0,0}},{{6,2},{1,0}},{{7,1},{0,0}},
    {{8,1},{0,0}},{{8,2},{0,0}},{{8,3},{0,0}},{{8,4},{0,0}},{{8,5},{0,0}},
    {{9,1},{0,0}},{{9,2},{0,0}},{{10,1},{0,0}},{{10,2},{1,0}},{{11,1},{0,0}},
    {{12,1},{1,0}},{{12,2},{2,0}},{{12,3},{0,0}},{{12,4},{1,0}},{{12,5},{3,0}},
    {{13,1},{0,0}},{{14,1},{0,0}},{{14,2},{2,0}},{{15,1},{1,0}},
    {{16,1},{0,0}},{{16,2},{0,0}},{{16,3},{0,0}},{{16,4},{0,0}},{{16,5},{0,0}},
    {{16,6},{0,0}},{{16,7},{0,0}},{{16,8},{0,0}},{{16,9},{0,1}},{{16,10},{0,0}},
    {{16,11},{0,0}},{{16,12},{0,0}},{{16,13},{0,0}},{{16,14},{0,0}},
    {{17,1},{0,0}},
    {{18,1},{0,0}},{{18,2},{2,0}},{{18,3},{1,0}},{{18,4},{0,0}},{{18,5},{4,0}},
    {{19,1},{0,0}},
    {{20,1},{1,1}},{{20,2},{3,0}},{{20,3},{0,0}},{{20,4},{1,0}},{{20,5},{3,0}},
    {{21,1},{0,0}},{{21,2},{2,0}},{{22,1},{0,0}},{{22,2},{1,0}},{{23,1},{0,0}},
    {{24,1},{2,0}},{{24,2},{4,0}},{{24,3},{1,0}},{{24,4},{2,1}},{{24,5},{2,0}},
    {{24,6},{2,0}},{{24,7},{3,0}},{{24,8},{2,0}},{{24,9},{5,0}},{{24,10},{4,0}},
    {{24,11},{4,0}},{{24,12},{0,0}},{{24,13},{1,0}},{{24,14},{3,0}},{{24,15},{7,0}},
    {{25,1},{0,0}},{{25,2},{0,0}},{{26,1},{0,0}},{{26,2},{1,0}},
    {{27,1},{0,0}},{{27,2},{0,0}},{{27,3},{0,0}},{{27,4},{0,0}},{{27,5},{0,0}},
    {{28,1},{1,0}},{{28,2},{4,0}},{{28,3},{1,0}},{{28,4},{6,0}},
};

// published s values for the directly constructible s-positive groups <= 100.
const std::map<std::pair<int, int>, long> kSpotS = {
    {{16,9},1},{{20,1},1},{{24,4},1},{{32,20},1},{{32,41},2},{{40,4},1},{{40,7},2},
    {{48,8},2},{{48,27},1},{{48,28},1},{{48,34},2},{{52,1},1},{{56,3},1},{{60,2},1},
    {{60,3},2},{{68,1},1},{{72,4},2},{{72,26},1},{{80,8},2},{{80,11},2},{{80,27},1},
    {{84,5},1},{{88,3},1},{{96,8},2},{{96,181},2},{{96,205},4},{{100,1},2},{{100,6},1},
};

void criterion1(const std::string& dir) {
    Timer t;
    bool ok = true;
    std::ostringstream note;
    auto entries = load(dir, "leq28.cat");
    if (entries.size() != 87) {
        ok = false;
        note << " [catalog has " << entries.size() << " entries, want 87]";
    }
    for (auto& e : entries) {
        auto it = kSmallOrderTable.find({e.order, e.index});
        if (it == kSmallOrderTable.end()) {
            ok = false;
            note << " [no table row for (" << e.order << "," << e.index << ")]";
            continue;
        }
        KMinusOneResult k = k_minus_one(e.build());
        if (k.r != it->second.first || k.s != it->second.second) {
            ok = false;
            note << " [(" << e.order << "," << e.index << ") got (" << k.r << "," << k.s
                 << ") want (" << it->second.first << "," << it->second.second << ")]";
        }
    }
    report(1, ok,
           "published-table regression over all 87 groups of order <= 28 "
           "(with the documented (15,1) erratum: derived r = 1)" + note.str(),
           t.secs());
}

void criterion2() {
    Timer t;
    KMinusOneResult k = k_minus_one(builtin_sl25());
    bool ok = (k.r == 2 && k.s == 1 && k_minus_one_pretty(k) == "Z^2 + Z/2" && t.secs() < 10.0);
    report(2, ok, "SL(2,5) gives (r,s) = (2,1), printed as Z^2 + Z/2, under 10 s", t.secs());
}

void criterion3(const std::string& dir) {
    Timer t;
    bool ok = true;
    std::ostringstream note;
    auto entries = load(dir, "s-positive-100.cat");
    std::set<std::pair<int, int>> seen;
    for (auto& e : entries) {
        auto it = kSpotS.find({e.order, e.index});
        if (it == kSpotS.end()) {
            ok = false;
            note << " [unexpected catalog entry (" << e.order << "," << e.index << ")]";
            continue;
        }
        seen.insert(it->first);
        long s = s_of_group(e.build()).s;
        if (s != it->second) {
            ok = false;
            note << " [(" << e.order << "," << e.index << ") s=" << s << " want " << it->second
                 << "]";
        }
    }
    if (seen.size() != kSpotS.size()) {
        ok = false;
        note << " [only " << seen.size() << " of " << kSpotS.size() << " spot groups in catalog]";
    }
    if (t.secs() >= 300.0) ok = false;
    report(3, ok, "published s values for the 28 constructible s-positive groups, under 5 min" +
                      note.str(),
           t.secs());
}

void criterion4(const std::string& dir) {
    Timer t;
    bool ok = true;
    std::ostringstream note;
    for (const char* file : {"leq28.cat", "s-positive-100.cat"}) {
        for (auto& e : load(dir, file)) {
            FiniteGroup g = e.build();
            KMinusOneResult k = k_minus_one(g);
            if (g.n % 4 != 0 && k.s != 0) {
                ok = false;
                note << " [s != 0 at (" << e.order << "," << e.index << ")]";
            }
            bool prime_power_only = true;
            for (int x = 0; x < g.n; ++x)
                if (prime_divisors(g.elt_order[x]).size() > 1) prime_power_only = false;
            if (prime_power_only && k.r != 0) {
                ok = false;
                note << " [r != 0 at prime-power-order group (" << e.order << "," << e.index
                     << ")]";
            }
        }
    }
    report(4, ok, "vanishing laws (s = 0 off multiples of 4; r = 0 for prime-power element "
                  "orders) across the full catalog" + note.str(),
           t.secs());
}

void criterion5(const std::string& dir) {
    Timer t;
    // Building-block rows of order <= 60 present in the catalog: s > 0 with no
    // s-positive proper quotient. The published list has one extra order-32
    // row that fails the quaternionic-contribution criterion and is not
    // shipped (see the catalog header and generator).
    const std::set<std::pair<int, int>> expect = {
        {16, 9}, {20, 1}, {24, 4}, {32, 20}, {40, 4}, {48, 28}, {52, 1}, {56, 3}};
    std::set<std::pair<int, int>> got;
    std::set<std::pair<int, int>> seen;
    bool ok = true;
    std::ostringstream note;
    for (const char* file : {"leq28.cat", "s-positive-100.cat"}) {
        for (auto& e : load(dir, file)) {
            if (e.order > 60 || seen.count({e.order, e.index})) continue;
            seen.insert({e.order, e.index});
            FiniteGroup g = e.build();
            if (s_of_group(g).s == 0) continue;
            bool minimal = true;
            for (const auto& nsub : normal_subgroups(g)) {
                if (nsub.order == 1 || nsub.order == g.n) continue;
                if (s_of_group(quotient_group(g, nsub)).s > 0) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) got.insert({e.order, e.index});
        }
    }
    if (got != expect) {
        ok = false;
        for (auto& k : got)
            if (!expect.count(k)) note << " [extra (" << k.first << "," << k.second << ")]";
        for (auto& k : expect)
            if (!got.count(k)) note << " [missing (" << k.first << "," << k.second << ")]";
    }
    if (t.secs() >= 180.0) ok = false;
    report(5, ok,
           "minimal-s to order 60 returns exactly the catalog building-block rows, under 3 min" +
               note.str(),
           t.secs());
}

void criterion6(const std::string& dir) {
    Timer t;
    long bad = 0;
    auto sink = [&](const std::string& m) { std::printf("  6-fail: %s\n", m.c_str()); };
    long groups = 0;
    std::set<std::pair<int, int>> seen;
    for (const char* file : {"leq28.cat", "s-positive-100.cat"}) {
        for (auto& e : load(dir, file)) {
            if (e.order > 64 || !seen.insert({e.order, e.index}).second) continue;
            FiniteGroup g = e.build();
            ++groups;
            bad += check_group_invariants(g, sink);
            bad += check_class_invariants(g, sink);
            bad += check_character_invariants(g, sink);
        }
    }
    report(6, bad == 0,
           "character-theory property suite (orthogonality, degrees, FS sum rule, Galois "
           "equivariance, Berman) over " + std::to_string(groups) + " catalog groups <= 64",
           t.secs());
}

void criterion7(const std::string& dir) {
    Timer t;
    long bad = 0;
    auto sink = [&](const std::string& m) { std::printf("  7-fail: %s\n", m.c_str()); };
    long groups = 0;
    std::set<std::pair<int, int>> seen;
    for (const char* file : {"leq28.cat", "s-positive-100.cat"}) {
        for (auto& e : load(dir, file)) {
            if (e.order > 100 || !seen.insert({e.order, e.index}).second) continue;
            FiniteGroup g = e.build();
            ++groups;
            bad += check_schur_invariants(g, sink);
        }
    }
    report(7, bad == 0,
           "Schur machinery property suite (dimension completeness, infinity/FS agreement, "
           "contribution-test equivalence, abelian s = 0) over " + std::to_string(groups) +
               " catalog groups <= 100",
           t.secs());
}

std::string run_capture(const std::string& cmd) {
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return "<popen failed>";
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    pclose(p);
    return out;
}

void criterion8(const std::string& dir, const std::string& negk) {
    Timer t;
    if (negk.empty()) {
        report(8, false, "determinism (no negk binary path supplied)", t.secs());
        return;
    }
    std::string base = "NEGK_CATALOG_DIR=" + dir + " " + negk + " scan --min 1 --max 28 ";
    std::string a = run_capture(base + "--jobs 1 2>/dev/null");
    std::string b = run_capture(base + "--jobs 8 2>/dev/null");
    bool ok = !a.empty() && a == b;
    report(8, ok, "scan output is byte-identical for --jobs 1 and --jobs 8", t.secs());
}

}  // namespace

int main(int argc, char** argv) {
    std::string dir = (argc > 1) ? argv[1] : "catalog";
    std::string negk = (argc > 2) ? argv[2] : "";
    try {
        criterion1(dir);
        criterion2();
        criterion3(dir);
        criterion4(dir);
        criterion5(dir);
        criterion6(dir);
        criterion7(dir);
        criterion8(dir, negk);
    } catch (const std::exception& e) {
        std::printf("FAIL: unhandled exception: %s\n", e.what());
        return 1;
    }
    std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT");
    return failures == 0 ? 0 : 1;
}
