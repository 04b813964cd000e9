// Higher-dimensional coverage: the square lattice with d = 2 and the
// octagonal scheme with d = 2, m = 2 (silver-mean embedding of Z^4).

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cutproject/verify.hpp"
#include "test_helpers.hpp"

using namespace cutproject;
using namespace cutproject::testing;

namespace {

CutProjectScheme square_scheme() {
    Eigen::MatrixXd M = Eigen::MatrixXd::Identity(2, 2);
    Eigen::VectorXi c = Eigen::VectorXi::Zero(2);
    return CutProjectScheme(2, 0, 1, M, c, "square");
}

// columns (v_k, v_k*) with v_k = (cos(k pi/4), sin(k pi/4)) and the star map
// sending the 8th root zeta to zeta^3; columns are orthogonal of norm sqrt(2),
// so |det M| = 4 and dens = 1/4
CutProjectScheme octagonal_scheme() {
    Eigen::MatrixXd M(4, 4);
    const double s = std::numbers::sqrt2 / 2.0;
    M << 1, s, 0, -s,
         0, s, 1, s,
         1, -s, 0, s,
         0, s, -1, s;
    Eigen::VectorXi c = Eigen::VectorXi::Zero(4);
    return CutProjectScheme(2, 2, 1, M, c, "octagonal");
}

Eigen::VectorXd vec2(double x, double y) {
    Eigen::VectorXd v(2);
    v << x, y;
    return v;
}

WeightFunction trivial2() { return WeightFunction::box({}, 1, {0}); }

} // namespace

TEST_CASE("square lattice in the plane") {
    auto s = square_scheme();
    CHECK(s.density() == 1.0);

    SUBCASE("lattice PSF with an anisotropic Gaussian") {
        GaussianTest f({GaussianAxis{1.0, 0.2, 0.0}, GaussianAxis{0.7, 0.0, 0.4}});
        auto rep = lattice_psf_check(s, f, 1e-10);
        CHECK(rep.pass);
        CHECK(rep.residual <= 1e-11);
    }
    SUBCASE("diffraction comb is the integer grid") {
        Box dual_box(vec2(-1.0, -1.0), vec2(1.0, 1.0));
        auto comb = theoretical_diffraction(s, trivial2(), dual_box, 1e-4);
        CHECK(comb.size() == 9);
        for (const auto& e : comb.entries)
            CHECK(std::abs(e.amplitude - Complex{1.0, 0.0}) <= 1e-12);
    }
    SUBCASE("finite autocorrelation matches dens * delta_L in the plane") {
        auto ps = cut_model_set(s, trivial2(), VanHoveBox(40.0, vec2(0.0, 0.0)));
        REQUIRE(ps.size() == 81 * 81);
        CHECK(min_gap(ps) == doctest::Approx(1.0));
        auto fin = finite_autocorrelation(ps, 2.5);
        auto limit = theoretical_autocorrelation(s, trivial2(), 2.5);
        REQUIRE(limit.size() == 21); // lattice vectors with norm <= 2.5
        for (const auto& e : limit.entries)
            CHECK(std::abs(fin.amplitude_at(e.location) - e.amplitude) <= 0.07);
    }
    SUBCASE("two-axis character average factorises") {
        const VanHoveBox box(10.0, vec2(1.0, -2.0));
        const Complex got = character_average(vec2(0.3, 0.0), box);
        const Complex expect =
            character_average(vec1(0.3), VanHoveBox(10.0, vec1(1.0)));
        CHECK(std::abs(got - expect) <= 1e-12);
    }
}

TEST_CASE("octagonal scheme") {
    auto s = octagonal_scheme();

    SUBCASE("orthogonal embedding: determinant 4, balanced singular values") {
        CHECK(s.abs_det() == doctest::Approx(4.0).epsilon(1e-12));
        CHECK(s.density() == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(s.sigma_min() == doctest::Approx(std::numbers::sqrt2).epsilon(1e-12));
        CHECK(s.sigma_max() == doctest::Approx(std::numbers::sqrt2).epsilon(1e-12));
    }
    SUBCASE("duality and annihilator hold in four dimensions") {
        DualLattice d(s);
        CHECK(std::abs(s.density() * d.density() - 1.0) <= 1e-12);
        CHECK((d.base().inverse().transpose() - s.generator()).cwiseAbs().maxCoeff() <=
              1e-12);
    }
    SUBCASE("physical projection injective on the probe") {
        auto rep = validate_scheme(s, 4.0);
        CHECK(rep.injective);
        CHECK(rep.points_probed > 50);
    }
    SUBCASE("lattice PSF over Z^4") {
        auto rep = lattice_psf_check(s, GaussianTest::standard(4), 1e-10);
        CHECK(rep.pass);
        CHECK(rep.residual <= 1e-12);
    }
    SUBCASE("octagonal model set is uniformly discrete and has the right density") {
        auto window = WeightFunction::box({{-0.6, 0.6}, {-0.6, 0.6}}, 1, {0});
        auto ps = cut_model_set(s, window, VanHoveBox(40.0, vec2(0.0, 0.0)));
        REQUIRE(ps.size() > 100);
        CHECK(min_gap(ps) > 0.4);
        const double density = ps.total_weight().real() / ps.region().volume();
        const double target = s.density() * 1.2 * 1.2; // dens * theta_H(W)
        CHECK(std::abs(density - target) <= 0.01);
    }
    SUBCASE("weighted PSF with a two-axis tent, reported coarse tail") {
        PsfOptions opts;
        // two internal dual axes decay like 1/K jointly, so the enumeration
        // budget only supports a coarse reported tail here
        opts.internal_tail_target = 5e-2;
        auto tent2 = WeightFunction::tent({0.5, 0.5}, 1, {0});
        // width 1.5 keeps the dual-side Gaussian window small
        GaussianTest g({GaussianAxis{1.5, 0.0, 0.0}, GaussianAxis{1.5, 0.0, 0.0}});
        auto rep = weighted_psf_check(s, tent2, g, 1e-8, opts);
        CHECK(rep.pass);
        CHECK(rep.residual <= rep.tolerance + rep.truncation.direct_tail +
                                  rep.truncation.dual_tail);
        CHECK(rep.residual <= 1e-2); // actual error far below the reported bound
    }
    SUBCASE("Fourier-Bohr at a strong Bragg position in the plane") {
        auto window = WeightFunction::box({{-0.6, 0.6}, {-0.6, 0.6}}, 1, {0});
        Box dual_box(vec2(-1.5, -1.5), vec2(1.5, 1.5));
        auto peaks = diffraction_peaks(s, window, dual_box, 1e-3);
        REQUIRE(peaks.size() > 5);
        // strongest non-central peak
        const BraggPeak* best = nullptr;
        for (const auto& p : peaks)
            if (p.chi.norm() > 0.1 && (!best || p.intensity > best->intensity))
                best = &p;
        REQUIRE(best != nullptr);
        auto ps = cut_model_set(s, window, VanHoveBox(150.0, vec2(0.0, 0.0)));
        const double got = std::norm(fourier_bohr(ps, best->chi));
        CHECK(std::abs(got - best->intensity) <= 0.05 * best->intensity + 1e-4);
    }
}
