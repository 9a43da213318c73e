#include "negk/catalog.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace negk {

FiniteGroup CatalogEntry::build(int cap) const {
    FiniteGroup g = group_from_generators(generators, cap, name);
    if (g.n != order)
        throw ParseError("catalog entry " + std::to_string(order) + "," + std::to_string(index) +
                         " closes to order " + std::to_string(g.n));
    return g;
}

std::vector<CatalogEntry> read_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file: " + path);
    std::vector<CatalogEntry> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream is(line);
        std::string word;
        if (!(is >> word)) continue;
        if (word == "group") {
            CatalogEntry e;
            if (!(is >> e.order >> e.index)) {
                throw ParseError(path + ":" + std::to_string(lineno) + ": bad group header");
            }
            std::getline(is, e.name);
            std::size_t start = e.name.find_first_not_of(" \t");
            e.name = (start == std::string::npos) ? "" : e.name.substr(start);
            out.push_back(std::move(e));
        } else if (word == "gen") {
            if (out.empty())
                throw ParseError(path + ":" + std::to_string(lineno) + ": gen before group");
            std::string rest;
            std::getline(is, rest);
            out.back().generators.push_back(parse_cycles(rest));
        } else {
            throw ParseError(path + ":" + std::to_string(lineno) + ": unknown directive " + word);
        }
    }
    return out;
}

std::string catalog_to_string(const std::vector<CatalogEntry>& entries,
                              const std::string& header_comment) {
    std::ostringstream os;
    std::istringstream hdr(header_comment);
    std::string hline;
    while (std::getline(hdr, hline)) os << "# " << hline << "\n";
    for (const auto& e : entries) {
        os << "group " << e.order << " " << e.index << " " << e.name << "\n";
        for (const auto& g : e.generators) os << "gen " << cycle_string(g) << "\n";
    }
    return os.str();
}

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

// split "a,b" at the top-level comma (respecting parentheses)
bool split_top_comma(const std::string& s, std::string& left, std::string& right) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (s[i] == ',' && depth == 0) {
            left = strip(s.substr(0, i));
            right = strip(s.substr(i + 1));
            return true;
        }
    }
    return false;
}

}  // namespace

FiniteGroup parse_group_spec(const std::string& text, int cap) {
    std::string s = strip(text);
    if (s.empty()) throw ParseError("empty group spec");
    if (s.rfind("perms:", 0) == 0) {
        std::string body = s.substr(6);
        std::vector<Perm> gens;
        std::size_t pos = 0;
        while (pos <= body.size()) {
            std::size_t semi = body.find(';', pos);
            std::string tok = strip(semi == std::string::npos ? body.substr(pos)
                                                              : body.substr(pos, semi - pos));
            if (!tok.empty()) gens.push_back(parse_cycles(tok));
            if (semi == std::string::npos) break;
            pos = semi + 1;
        }
        if (gens.empty()) throw ParseError("perms: needs at least one permutation");
        return group_from_generators(gens, cap, s);
    }
    if (s == "SL(2,3)") return builtin_sl23();
    if (s == "SL(2,5)") return builtin_sl25();
    if (s == "BinO") return builtin_binary_octahedral();
    std::size_t open = s.find('(');
    if (open == std::string::npos || s.back() != ')')
        throw ParseError("cannot parse group spec: " + s);
    std::string head = strip(s.substr(0, open));
    std::string args = s.substr(open + 1, s.size() - open - 2);
    if (head == "Prod") {
        std::string l, r;
        if (!split_top_comma(args, l, r)) throw ParseError("Prod needs two arguments: " + s);
        return direct_product(parse_group_spec(l, cap), parse_group_spec(r, cap));
    }
    long v = 0;
    try {
        v = std::stol(strip(args));
    } catch (...) {
        throw ParseError("expected integer parameter in " + s);
    }
    if (head == "Cyclic") return builtin_cyclic(static_cast<int>(v));
    if (head == "Dihedral") return builtin_dihedral(static_cast<int>(v));
    if (head == "Dicyclic") return builtin_dicyclic(static_cast<int>(v));
    if (head == "Sym") return builtin_symmetric(static_cast<int>(v));
    if (head == "Alt") return builtin_alternating(static_cast<int>(v));
    throw ParseError("unknown group family: " + head);
}

}  // namespace negk
