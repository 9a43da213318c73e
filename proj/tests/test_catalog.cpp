#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "negk/catalog.hpp"

using namespace negk;

TEST_CASE("catalog round trip") {
    std::vector<CatalogEntry> entries;
    CatalogEntry e;
    e.order = 6;
    e.index = 1;
    e.name = "S3";
    e.generators = {parse_cycles("(1,2)"), parse_cycles("(1,2,3)")};
    entries.push_back(e);
    std::string text = catalog_to_string(entries, "header line\nsecond line");
    std::string path = "roundtrip.cat.tmp";
    {
        std::ofstream f(path);
        f << text;
    }
    auto back = read_catalog(path);
    std::remove(path.c_str());
    REQUIRE(back.size() == 1);
    CHECK(back[0].order == 6);
    CHECK(back[0].index == 1);
    CHECK(back[0].name == "S3");
    CHECK(back[0].generators == entries[0].generators);
    CHECK(back[0].build().n == 6);
}

TEST_CASE("catalog parse errors") {
    std::string path = "bad.cat.tmp";
    {
        std::ofstream f(path);
        f << "gen (1,2)\n";
    }
    CHECK_THROWS_AS(read_catalog(path), ParseError);
    {
        std::ofstream f(path);
        f << "group 4 1 C4\ngen (1,2)\n";  // closes to order 2, not 4
    }
    auto entries = read_catalog(path);
    REQUIRE(entries.size() == 1);
    CHECK_THROWS_AS(entries[0].build(), ParseError);
    {
        std::ofstream f(path);
        f << "frobnicate 1 2\n";
    }
    CHECK_THROWS_AS(read_catalog(path), ParseError);
    std::remove(path.c_str());
    CHECK_THROWS(read_catalog("does-not-exist.cat"));
}

TEST_CASE("group spec grammar") {
    CHECK(parse_group_spec("Cyclic(6)").n == 6);
    CHECK(parse_group_spec("Dihedral(12)").n == 12);
    CHECK(parse_group_spec("Dicyclic(4)").n == 16);
    CHECK(parse_group_spec("Sym(4)").n == 24);
    CHECK(parse_group_spec("Alt(5)").n == 60);
    CHECK(parse_group_spec("SL(2,3)").n == 24);
    CHECK(parse_group_spec("SL(2,5)").n == 120);
    CHECK(parse_group_spec("BinO").n == 48);
    CHECK(parse_group_spec("Prod(Cyclic(2),Dicyclic(4))").n == 32);
    CHECK(parse_group_spec("Prod(Prod(Cyclic(2),Cyclic(2)),Dicyclic(6))").n == 96);
    CHECK(parse_group_spec(" Cyclic( 6 ) ").n == 6);
    CHECK(parse_group_spec("perms:(1,2);(1,2,3)").n == 6);
    CHECK_THROWS_AS(parse_group_spec("Frobnitz(3)"), ParseError);
    CHECK_THROWS_AS(parse_group_spec("Cyclic(x)"), ParseError);
    CHECK_THROWS_AS(parse_group_spec(""), ParseError);
    CHECK_THROWS_AS(parse_group_spec("Sym(9)"), ArgumentError);
}

TEST_CASE("shipped catalogs load and close to the right orders") {
    const char* dir = std::getenv("NEGK_CATALOG_DIR");
    std::string base = dir ? dir : "../catalog";
    std::vector<CatalogEntry> leq28;
    try {
        leq28 = read_catalog(base + "/leq28.cat");
    } catch (...) {
        base = "catalog";
        leq28 = read_catalog(base + "/leq28.cat");
    }
    CHECK(leq28.size() == 87);
    for (auto& e : leq28) {
        CHECK(e.order <= 28);
        CHECK(e.build().n == e.order);
    }
    auto spos = read_catalog(base + "/s-positive-100.cat");
    CHECK(spos.size() == 28);
    for (auto& e : spos) {
        CHECK(e.order % 4 == 0);
        CHECK(e.order <= 100);
        CHECK(e.build().n == e.order);
    }
}
