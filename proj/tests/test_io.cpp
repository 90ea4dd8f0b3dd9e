#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "a1mod/catalog.hpp"
#include "a1mod/io.hpp"

using namespace a1mod;

TEST_CASE("module files round trip byte for byte")
{
    for (const char* key : {"J", "P2", "S^3.R", "M1", "Fseq:3"}) {
        GradedModule m = make(key, AlgebraName::A1, kAutoLow, 20);
        std::string text = write_module(m);
        ModuleFile f = read_module(text);
        CHECK(write_module(f.module) == text);
        CHECK(f.module.trusted() == m.trusted());
        CHECK(f.module.dims() == m.dims());
    }
    GradedModule e = make("P1", AlgebraName::E1, kAutoLow, 16);
    Provenance p{{"op", "emit"}, {"inputs", "P1"}};
    std::string text = write_module(e, p);
    ModuleFile f = read_module(text);
    CHECK(f.provenance == p);
    CHECK(&f.module.algebra() == &Algebra::E1());
    CHECK(write_module(f.module, f.provenance) == text);
}

TEST_CASE("actions are stored as images of basis elements")
{
    GradedModule j = make_J();
    Json doc = module_to_json(j);
    // Sq2 on the bottom class of J is nonzero
    auto sq2 = doc["actions"]["Sq2"];
    CHECK(sq2[0 - j.window().lo][0][0] == 1);
}

TEST_CASE("malformed files")
{
    CHECK_THROWS_AS(read_module("{"), ParseError);
    CHECK_THROWS_AS(read_module("{}"), ParseError);
    Json doc = module_to_json(make_J());
    doc["dims"][2] = 5;
    CHECK_THROWS_AS(module_from_json(doc), ParseError);
    Json bad = module_to_json(make_J());
    bad["actions"]["Sq1"][2][0][0] = 7;
    CHECK_THROWS_AS(module_from_json(bad), ParseError);
}

TEST_CASE("diagrams")
{
    GradedModule p2 = make("P2", AlgebraName::A1, kAutoLow, 12);
    std::string a = to_ascii(p2);
    CHECK(a.find("deg") == 0);
    CHECK(a.find("Sq1: 2.0->3.0") != std::string::npos);
    CHECK(a.find("Sq2: 2.0->4.0") != std::string::npos);
    std::string d = to_dot(make_J(), "J");
    CHECK(d.find("digraph \"J\"") == 0);
    CHECK(d.find("style=dashed") != std::string::npos);
}
