#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cutproject/window.hpp"
#include "test_helpers.hpp"

using namespace cutproject;
using namespace cutproject::testing;

namespace {

WeightFunction tent05() { return WeightFunction::tent({0.5}, 1, {0}); }
WeightFunction box_unit() { return WeightFunction::box({{-0.5, 0.5}}, 1, {0}); }

} // namespace

TEST_CASE("weight evaluation") {
    CHECK(tent05().eval(vec1(0.0)).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(tent05().eval(vec1(0.7)).real() == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(tent05().eval(vec1(1.2)).real() == 0.0);
    auto b = WeightFunction::box({{-1.0, kTau - 1.0}}, 1, {0});
    CHECK(b.eval(vec1(0.5)).real() == 1.0);
    CHECK(b.eval(vec1(-1.0)).real() == 1.0); // closed interval includes the boundary
    CHECK(b.eval(vec1(0.7)).real() == 0.0);
    auto half = WeightFunction::box({{0.0, 1.0}}, 1, {0}, /*half_open=*/true);
    CHECK(half.eval(vec1(0.0)).real() == 1.0);
    CHECK(half.eval(vec1(1.0)).real() == 0.0);
    CHECK_THROWS_AS(tent05().eval(Eigen::VectorXd::Zero(2)), SignatureMismatchError);
    CHECK_THROWS_AS(tent05().eval(vec1(0.0), 3), SignatureMismatchError);
}

TEST_CASE("weight transforms, closed form vs quadrature oracle") {
    SUBCASE("frozen values") {
        CHECK(tent05().inverse_ft(vec1(0.0)).real() == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(std::abs(box_unit().inverse_ft(vec1(1.0))) <= 1e-12); // sinc zero
        auto cyc = WeightFunction::box({}, 4, {0});
        CHECK(cyc.inverse_ft(Eigen::VectorXd(0), 3).real() == doctest::Approx(1.0));
    }
    SUBCASE("quadrature oracle on box, tent and the tent square") {
        auto windows = {box_unit(), tent05(), tent05().autocorrelation(),
                        WeightFunction::box({{-0.3, 0.7}}, 1, {0})};
        for (const auto& h : windows) {
            const auto [lo, hi] = std::pair{h.euclidean_support().lo[0],
                                            h.euclidean_support().hi[0]};
            for (double k : {0.0, 0.17, 0.5, 1.0, 2.31}) {
                const Complex oracle = simpson(
                    [&](double y) {
                        const double ang = 2.0 * std::numbers::pi * k * y;
                        return h.eval(vec1(y)) * Complex{std::cos(ang), std::sin(ang)};
                    },
                    lo, hi);
                const Complex closed = h.inverse_ft(vec1(k));
                CHECK(std::abs(closed - oracle) <= 1e-9);
            }
        }
    }
    SUBCASE("integral equals transform at zero") {
        auto h = WeightFunction::combination(
            {{Complex{1.0, 0.5}, tent05()}, {Complex{-0.25, 0.0}, box_unit()}});
        // quadrature split at the breakpoints of the integrand, limits nudged
        // off the closed box boundary
        Complex oracle{0.0, 0.0};
        const double knots[] = {-1.0, -0.5, 0.0, 0.5, 1.0};
        for (int i = 0; i + 1 < 5; ++i)
            oracle += simpson([&](double y) { return h.eval(vec1(y)); },
                              knots[i] + 1e-9, knots[i + 1] - 1e-9);
        CHECK(std::abs(h.integral() - oracle) <= 1e-7);
        CHECK(std::abs(h.integral() - h.inverse_ft(vec1(0.0))) == 0.0);
    }
}

TEST_CASE("weight autocorrelation") {
    SUBCASE("box autocorrelation is the tent") {
        auto ac = box_unit().autocorrelation();
        auto t = tent05();
        CHECK(ac.terms().size() == 1);
        CHECK(ac.terms().front().axes == t.terms().front().axes);
        for (double y : {-0.9, -0.3, 0.0, 0.4, 1.1})
            CHECK(std::abs(ac.eval(vec1(y)) - t.eval(vec1(y))) <= 1e-14);
        // translation invariance: a shifted box has the same autocorrelation
        auto shifted = WeightFunction::box({{2.0, 3.0}}, 1, {0}).autocorrelation();
        for (double y : {-0.9, 0.0, 0.4})
            CHECK(std::abs(shifted.eval(vec1(y)) - t.eval(vec1(y))) <= 1e-12);
    }
    SUBCASE("tent autocorrelation at zero equals the quadrature oracle 2/3") {
        auto ac = tent05().autocorrelation();
        const Complex oracle = simpson(
            [&](double y) { return std::norm(tent05().eval(vec1(y))); }, -1.0, 1.0);
        CHECK(oracle.real() == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
        CHECK(ac.eval(vec1(0.0)).real() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
        // support [-4w, 4w] = [-2, 2]
        CHECK(ac.euclidean_support().lo[0] == doctest::Approx(-2.0));
        CHECK(ac.euclidean_support().hi[0] == doctest::Approx(2.0));
        // pointwise against the convolution quadrature oracle
        for (double y : {0.3, 1.0, 1.7}) {
            const Complex conv = simpson(
                [&](double t) {
                    return tent05().eval(vec1(t)) * std::conj(tent05().eval(vec1(t - y)));
                },
                -1.0, 2.0);
            CHECK(std::abs(ac.eval(vec1(y)) - conv) <= 1e-9);
        }
    }
    SUBCASE("cyclic subsets convolve discretely") {
        auto h = WeightFunction::box({}, 4, {0, 1});
        auto ac = h.autocorrelation();
        // brute-force circular correlation of 1_{0,1} in Z/4
        std::vector<double> expect(4, 0.0);
        std::vector<double> v{1.0, 1.0, 0.0, 0.0};
        for (int c = 0; c < 4; ++c)
            for (int j = 0; j < 4; ++j)
                expect[c] += v[j] * v[((j - c) % 4 + 4) % 4];
        CHECK(expect == std::vector<double>{2.0, 1.0, 0.0, 1.0});
        for (int c = 0; c < 4; ++c)
            CHECK(ac.eval(Eigen::VectorXd(0), c).real() ==
                  doctest::Approx(expect[c]).epsilon(1e-14));
    }
}

TEST_CASE("classification") {
    CHECK(tent05().weight_class() == WeightClass::K2);
    CHECK(box_unit().weight_class() == WeightClass::RiemannIntegrable);
    auto sum = WeightFunction::combination(
        {{Complex{1.0, 0.0}, tent05()}, {Complex{2.0, 0.0}, tent05()}});
    CHECK(sum.weight_class() == WeightClass::K2); // span closure
    auto mixed = WeightFunction::combination(
        {{Complex{1.0, 0.0}, tent05()}, {Complex{1.0, 0.0}, box_unit()}});
    CHECK(mixed.weight_class() == WeightClass::RiemannIntegrable);
    // cross terms of a (box + tent) autocorrelation contain odd-order splines
    CHECK(mixed.autocorrelation().weight_class() == WeightClass::PK);
    CHECK(WeightFunction::box({}, 4, {0, 2}).weight_class() == WeightClass::K2);
}

TEST_CASE("transform-side identities on samples") {
    auto cases = {box_unit(), tent05(),
                  WeightFunction::combination({{Complex{0.5, 1.0}, tent05()},
                                               {Complex{1.0, -0.5}, box_unit()}})};
    for (const auto& h : cases) {
        const auto ac = h.autocorrelation();
        const auto refl = h.reflected();
        for (int i = 0; i < 50; ++i) {
            const double k = -2.45 + 0.1 * i;
            // Plancherel consistency: |h_check|^2 = (h * ~h)_check
            CHECK(std::abs(std::norm(h.inverse_ft(vec1(k))) - ac.inverse_ft(vec1(k))) <=
                  1e-8);
            // reflection: (~h)_check = conj(h_check)
            CHECK(std::abs(refl.inverse_ft(vec1(k)) - std::conj(h.inverse_ft(vec1(k)))) <=
                  1e-12);
        }
    }
}

TEST_CASE("tent decay witness and envelope") {
    const double w = 0.5;
    auto t = WeightFunction::tent({w}, 1, {0});
    for (double k = 1.0 / (2.0 * w); k < 40.0; k += 0.7) {
        const double bound = 1.0 / (std::numbers::pi * k) / (std::numbers::pi * k);
        CHECK(std::abs(t.inverse_ft(vec1(k))) <= bound + 1e-15);
        CHECK(std::abs(t.inverse_ft(vec1(k))) <= t.ft_envelope(vec1(k)) + 1e-15);
    }
    // envelope tail integral: for the tent, integral of min(1, 1/(pi k))^2
    // over |k| > K equals 2/(pi^2 K) beyond the breakpoint
    const double K = 5.0;
    CHECK(t.ft_envelope_tail_outside(K) ==
          doctest::Approx(2.0 / (std::numbers::pi * std::numbers::pi * K)).epsilon(1e-12));
}

TEST_CASE("descriptions") {
    CHECK(box_unit().describe() == "box");
    CHECK(tent05().describe() == "tent");
    CHECK(box_unit().autocorrelation().describe() == "tent");
    CHECK(tent05().autocorrelation().describe() == "spline");
    CHECK(WeightFunction::box({}, 4, {0, 1}).describe() == "cyclic");
    CHECK(WeightFunction::combination({{Complex{1.0, 0.0}, tent05()},
                                       {Complex{1.0, 0.0}, box_unit()}})
              .describe() == "combination(2 terms)");
}

TEST_CASE("dagger and symmetric windows") {
    auto asym = WeightFunction::box({{-0.3, 0.7}}, 1, {0});
    auto dag = asym.dagger();
    for (double y : {-0.6, -0.2, 0.0, 0.5})
        CHECK(dag.eval(vec1(y)) == asym.eval(vec1(-y)));
    auto even = tent05();
    for (double y : {-0.6, 0.0, 0.5})
        CHECK(even.dagger().eval(vec1(y)) == even.eval(vec1(y)));
}
