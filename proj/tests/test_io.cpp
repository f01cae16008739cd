#include "doctest.h"
#include "support.hpp"

#include "latmut/io.hpp"
#include "latmut/render.hpp"

using namespace latmut;
using latmut::testing::data;
using latmut::testing::P;

TEST_CASE("polynomial syntax") {
    LaurentPoly f = parse_laurent("1 + 3*x - 2*x^2*y + y^-1");
    CHECK(f.coeff({0, 0}) == 1);
    CHECK(f.coeff({1, 0}) == 3);
    CHECK(f.coeff({2, 1}) == -2);
    CHECK(f.coeff({0, -1}) == 1);
    CHECK(parse_laurent("(1+x)^2") == parse_laurent("1 + 2*x + x^2"));
    CHECK(parse_laurent("x*y - x*y").is_zero());
    CHECK(parse_laurent(f.str()) == f);
    for (const char* bad : {"1 +", "x^", "z", "2**x", "(1+x", "x^y"}) CHECK_THROWS_AS(parse_laurent(bad), ParseError);
}

TEST_CASE("vector and index syntax") {
    CHECK(parse_ext("0,-1,4") == ExtDualVec{0, -1, 4});
    CHECK(parse_ext("[0, -1, 4]") == ExtDualVec{0, -1, 4});
    CHECK(parse_lattice("2,-3") == LatticeVec{2, -3});
    CHECK(parse_index("0,0,1") == std::vector<long>{0, 0, 1});
    CHECK(parse_index("[1,2]") == std::vector<long>{1, 2});
    CHECK_THROWS_AS(parse_ext("1,2"), ParseError);
    CHECK_THROWS_AS(parse_ext("a,b,c"), ParseError);
    CHECK_THROWS_AS(parse_lattice("1,2,3"), ParseError);
    CHECK_THROWS_AS(parse_index("1,,2"), ParseError);
}

TEST_CASE("json round trips") {
    Polygon T = Polygon::hull({{0, 0}, {4, 0}, {0, 5}});
    CHECK(polygon_from_json(to_json(T)) == T);
    Polygon seg = Polygon::segment({1, 1}, {3, 1});
    CHECK(polygon_from_json(to_json(seg)) == seg);
    CHECK(lattice_from_json(to_json(LatticeVec{-2, 7})) == LatticeVec{-2, 7});
    CHECK(ext_from_json(to_json(ExtDualVec{-5, -4, 20})) == ExtDualVec{-5, -4, 20});

    LaurentPoly f = read_laurent_file(data("fig5a.json"));
    CHECK(laurent_from_json(to_json(f)) == f);
    CHECK(laurent_from_json(Json("1 + x + y")) == P("1 + x + y"));
    CHECK(laurent_from_json(Json{{"poly", "1 + x"}}) == P("1 + x"));
    CHECK_THROWS(laurent_from_json(Json{{"other", 1}}));

    auto r = is_zero_mutable(f);
    MutationTrace back = trace_from_json(to_json(r.trace));
    CHECK(back.start == r.trace.start);
    REQUIRE(back.steps.size() == r.trace.steps.size());
    for (std::size_t i = 0; i < back.steps.size(); ++i) {
        CHECK(back.steps[i].m == r.trace.steps[i].m);
        CHECK(back.steps[i].g == r.trace.steps[i].g);
        CHECK(back.steps[i].result == r.trace.steps[i].result);
    }
    CHECK_NOTHROW(replay(back));
    CHECK(to_json(back).dump() == to_json(r.trace).dump());
}

TEST_CASE("data files") {
    CHECK(read_polygon_file(data("ex53_P.json")) == Polygon::hull({{0, 0}, {4, 0}, {0, 5}}));
    CHECK(read_polygon_file(data("fig5a.json")) == Polygon::hull({{0, 0}, {4, 0}, {0, 5}}));
    CHECK(read_laurent_file(data("fig3_f2.txt")) == read_laurent_file(data("fig3_f2.txt")));
    CHECK_FALSE(read_laurent_file(data("fig6_f2.txt")).is_zero());
    CHECK_THROWS(read_json_file(data("does_not_exist.json")));
    auto cj = read_json_file(data("cayley_unit_square.json"));
    CHECK(cj["parts"].size() == 2);
}

TEST_CASE("rendering is deterministic") {
    LaurentPoly f = read_laurent_file(data("fig5b.json"));
    auto r = is_zero_mutable(f);
    auto panels = panels_of(r.trace);
    CHECK(panels.size() == r.trace.steps.size() + 1);
    std::string s1 = render_svg(panels), s2 = render_svg(panels_of(r.trace));
    CHECK(s1 == s2);
    CHECK(s1.find("<svg") != std::string::npos);
    std::string t1 = render_tikz(panels), t2 = render_tikz(panels);
    CHECK(t1 == t2);
    CHECK(t1.find("tikzpicture") != std::string::npos);
    RenderOptions bare;
    bare.labels = false;
    bare.origin = true;
    CHECK(render_svg({panel_of(f)}, bare) != render_svg({panel_of(f)}));
    CHECK(render_svg({panel_of(newton(f), "P")}) == render_svg({panel_of(newton(f), "P")}));
}
