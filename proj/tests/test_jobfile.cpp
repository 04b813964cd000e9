#include <doctest.h>

#include <cmath>
#include <set>

#include "cutproject/emit.hpp"
#include "cutproject/jobfile.hpp"
#include "test_helpers.hpp"

using namespace cutproject;
using namespace cutproject::testing;

namespace {

const char* kFibonacciJson = R"({
  "name": "fibonacci",
  "d": 1, "m": 1, "N": 1,
  "M": [[1.0, 1.6180339887498949], [1.0, -0.6180339887498949]],
  "c": [0, 0]
})";

} // namespace

TEST_CASE("scheme file parsing") {
    SUBCASE("fibonacci file yields the right density") {
        auto f = parse_scheme_json(kFibonacciJson);
        CHECK(f.scheme.name() == "fibonacci");
        CHECK(f.scheme.density() == doctest::Approx(0.44721).epsilon(1e-4));
        CHECK(!f.window.has_value());
    }
    SUBCASE("scheme invariant violations surface verbatim") {
        CHECK_THROWS_AS(parse_scheme_json(R"({"name":"bad","d":1,"m":0,"N":4,
                                             "M":[[1.0]],"c":[2]})"),
                        CyclicNotDenseError);
    }
    SUBCASE("malformed matrix rows name the field") {
        try {
            parse_scheme_json(R"({"d":1,"m":1,"N":1,"M":[[1.0,2.0],[3.0]],"c":[0,0]})");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("\"M\"") != std::string::npos);
        }
    }
    SUBCASE("unknown keys are rejected") {
        CHECK_THROWS_AS(parse_scheme_json(R"({"d":1,"m":0,"N":1,"M":[[1.0]],"c":[0],
                                              "stray": 1})"),
                        ParseError);
    }
    SUBCASE("embedded window") {
        auto f = parse_scheme_json(R"({"d":1,"m":1,"N":1,
            "M":[[1.0, 1.6180339887498949],[1.0, -0.6180339887498949]],"c":[0,0],
            "window": {"kind": "box", "intervals": [[-0.5, 0.5]]}})");
        REQUIRE(f.window.has_value());
        CHECK(f.window->eval(vec1(0.2)).real() == 1.0);
        CHECK(f.window->weight_class() == WeightClass::RiemannIntegrable);
    }
}

TEST_CASE("scheme round trip is bit exact") {
    auto fib = fibonacci_scheme();
    const std::string text = emit_scheme_json(fib);
    auto back = parse_scheme_json(text);
    CHECK(back.scheme.name() == fib.name());
    CHECK(back.scheme.physical_dim() == fib.physical_dim());
    CHECK(back.scheme.internal_dim() == fib.internal_dim());
    CHECK(back.scheme.cyclic_order() == fib.cyclic_order());
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            CHECK(back.scheme.generator()(r, c) == fib.generator()(r, c));
    CHECK(emit_scheme_json(back.scheme) == text);
}

TEST_CASE("window JSON objects") {
    auto tent = parse_window_json(R"({"kind":"tent","halfwidths":[0.5]})", 1, 1);
    CHECK(tent.eval(vec1(0.0)).real() == 1.0);
    auto combo = parse_window_json(
        R"({"kind":"combination","terms":[
            {"coefficient": 2.0, "window": {"kind":"tent","halfwidths":[0.5]}},
            {"coefficient": [0.0, 1.0], "window": {"kind":"box","intervals":[[-1.0,1.0]]}}]})",
        1, 1);
    CHECK(std::abs(combo.eval(vec1(0.0)) - Complex{2.0, 1.0}) <= 1e-15);
    CHECK_THROWS_AS(parse_window_json(R"({"kind":"pyramid"})", 1, 1), ParseError);
    CHECK_THROWS_AS(parse_window_json(R"({"kind":"box","intervals":[[0,1],[0,1]]})", 1, 1),
                    ParseError);
}

TEST_CASE("inline window grammar") {
    auto b = parse_window_spec("box:-0.5,0.5", 1, 1);
    CHECK(b.eval(vec1(0.4)).real() == 1.0);
    auto t = parse_window_spec("tent:0.5", 1, 1);
    CHECK(t.eval(vec1(0.7)).real() == doctest::Approx(0.3));
    auto c = parse_window_spec("cyclic:{0,1}", 0, 4);
    CHECK(c.eval(Eigen::VectorXd(0), 1).real() == 1.0);
    CHECK(c.eval(Eigen::VectorXd(0), 2).real() == 0.0);
    auto prod = parse_window_spec("box:-0.5,0.5*cyclic:{0}", 1, 4);
    CHECK(prod.eval(vec1(0.0), 0).real() == 1.0);
    CHECK(prod.eval(vec1(0.0), 1).real() == 0.0);
    auto half = parse_window_spec("box:0,1", 1, 1, /*half_open=*/true);
    CHECK(half.eval(vec1(1.0)).real() == 0.0);
    CHECK_THROWS_AS(parse_window_spec("box:1", 1, 1), ParseError);
    CHECK_THROWS_AS(parse_window_spec("box:0,1*tent:1", 2, 1), ParseError);
    CHECK_THROWS_AS(parse_window_spec("blob:1", 1, 1), ParseError);
    CHECK_THROWS_AS(parse_window_spec("box:0,1;2,3", 1, 1), ParseError);
}

TEST_CASE("CSV emission") {
    auto ps = cut_model_set(cyclic4_scheme(), WeightFunction::box({}, 4, {0}),
                            VanHoveBox(6.0, vec1(0.0)));
    const std::string csv = points_to_csv(ps);
    // 3 points (-4, 0, 4) plus a header line
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
    CHECK(csv.rfind("z0,x0,y_cyc,re_weight,im_weight\n", 0) == 0);
    CHECK(csv.find("\r") == std::string::npos);
    CHECK(points_to_csv(ps) == csv); // byte-stable

    auto comb = theoretical_diffraction(integer_scheme(1.0),
                                        WeightFunction::box({}, 1, {0}),
                                        Box(vec1(-3.0), vec1(3.0)), 1e-4);
    const std::string mcsv = measure_to_csv(comb);
    CHECK(std::count(mcsv.begin(), mcsv.end(), '\n') == 8);
    CHECK(mcsv.rfind("location0,re_amplitude,im_amplitude\n", 0) == 0);
}

TEST_CASE("SVG stem plots") {
    SUBCASE("empty comb has axes only") {
        PurePointMeasure empty;
        empty.side = PurePointMeasure::Side::dual;
        const std::string svg = comb_to_svg(empty);
        CHECK(svg.find("<svg") != std::string::npos);
        std::size_t stems = 0;
        for (std::size_t pos = 0; (pos = svg.find("<line", pos)) != std::string::npos; ++pos)
            ++stems;
        CHECK(stems == 2); // the two axes
    }
    SUBCASE("integer comb on [-3,3] has seven equal stems") {
        auto comb = theoretical_diffraction(integer_scheme(1.0),
                                            WeightFunction::box({}, 1, {0}),
                                            Box(vec1(-3.0), vec1(3.0)), 1e-4);
        const std::string svg = comb_to_svg(comb, "integer comb");
        std::size_t stems = 0;
        std::set<std::string> heights;
        for (std::size_t pos = 0; (pos = svg.find("steelblue", pos)) != std::string::npos;
             ++pos) {
            ++stems;
            const auto y2 = svg.rfind("y2=\"", pos);
            heights.insert(svg.substr(y2, svg.find('"', y2 + 4) - y2));
        }
        CHECK(stems == 7);
        CHECK(heights.size() == 1); // equal intensities, equal stem heights
        CHECK(comb_to_svg(comb, "integer comb") == svg);
    }
}
