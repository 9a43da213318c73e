#include "negk/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace negk {

Perm perm_identity(int degree) {
    Perm p(degree);
    for (int i = 0; i < degree; ++i) p[i] = i;
    return p;
}

Perm perm_pad(const Perm& a, int degree) {
    Perm p = a;
    for (int i = static_cast<int>(p.size()); i < degree; ++i) p.push_back(i);
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    int degree = std::max(a.size(), b.size());
    Perm aa = perm_pad(a, degree), bb = perm_pad(b, degree);
    Perm out(degree);
    for (int i = 0; i < degree; ++i) out[i] = aa[bb[i]];
    return out;
}

Perm perm_inverse(const Perm& a) {
    Perm out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<int>(i);
    return out;
}

Perm parse_cycles(const std::string& text) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw ParseError("empty permutation");
    int max_pt = 0;
    while (i < text.size()) {
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + text);
        ++i;
        std::vector<int> cyc;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("expected point number in cycle notation: " + text);
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                ++i;
            }
            if (v < 1) throw ParseError("points are 1-based in cycle notation");
            cyc.push_back(v - 1);
            max_pt = std::max(max_pt, v);
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                skip_ws();
            }
        }
        if (i == text.size()) throw ParseError("unterminated cycle: " + text);
        ++i;  // ')'
        for (std::size_t a = 0; a < cyc.size(); ++a)
            for (std::size_t b = a + 1; b < cyc.size(); ++b)
                if (cyc[a] == cyc[b]) throw ParseError("repeated point in cycle: " + text);
        if (!cyc.empty()) cycles.push_back(cyc);
        skip_ws();
    }
    Perm p = perm_identity(max_pt);
    std::vector<bool> seen(max_pt, false);
    for (const auto& cyc : cycles) {
        for (int pt : cyc) {
            if (seen[pt]) throw ParseError("cycles are not disjoint: " + text);
            seen[pt] = true;
        }
        for (std::size_t j = 0; j < cyc.size(); ++j) p[cyc[j]] = cyc[(j + 1) % cyc.size()];
    }
    return p;
}

std::string cycle_string(const Perm& p) {
    std::ostringstream os;
    std::vector<bool> seen(p.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        any = true;
        os << "(";
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) os << ",";
            os << (j + 1);
            first = false;
            j = p[j];
        }
        os << ")";
    }
    if (!any) return "()";
    return os.str();
}

}  // namespace negk
