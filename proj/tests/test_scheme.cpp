#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cutproject/scheme.hpp"
#include "test_helpers.hpp"

using namespace cutproject;
using namespace cutproject::testing;

TEST_CASE("scheme construction and density") {
    SUBCASE("1-D lattice 2Z") {
        auto s = integer_scheme(2.0);
        CHECK(s.density() == doctest::Approx(0.5).epsilon(1e-14));
    }
    SUBCASE("Fibonacci: determinant arithmetic gives dens = 1/sqrt(5)") {
        auto s = fibonacci_scheme();
        // independent determinant: det = (1)(1-tau) - tau = 1 - 2 tau = -sqrt(5)
        const double det = 1.0 - 2.0 * kTau;
        CHECK(std::abs(det) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));
        CHECK(s.density() == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-14));
        CHECK(s.density() == doctest::Approx(0.44721).epsilon(1e-4));
    }
    SUBCASE("cyclic factor divides the density") {
        auto s = cyclic4_scheme();
        CHECK(s.density() == doctest::Approx(0.25).epsilon(1e-14));
        // brute force: the window all of Z/4 projects onto Z, density 1
        CHECK(s.density() * 4.0 == doctest::Approx(1.0));
    }
    SUBCASE("unit scheme") { CHECK(integer_scheme(1.0).density() == 1.0); }
}

TEST_CASE("scheme constructor rejects invalid data") {
    Eigen::MatrixXd M1(1, 1);
    M1 << 1.0;
    Eigen::VectorXi c1(1);
    c1 << 1;

    SUBCASE("singular matrix") {
        Eigen::MatrixXd M(2, 2);
        M << 1.0, 1.0, 1.0, 1.0;
        Eigen::VectorXi c(2);
        c << 0, 0;
        CHECK_THROWS_AS(CutProjectScheme(1, 1, 1, M, c), SingularMatrixError);
    }
    SUBCASE("cyclic projection not surjective") {
        Eigen::VectorXi c(1);
        c << 2;
        CHECK_THROWS_AS(CutProjectScheme(1, 0, 4, M1, c), CyclicNotDenseError);
    }
    SUBCASE("dimension mismatches") {
        Eigen::MatrixXd M(2, 2);
        M << 1.0, 0.0, 0.0, 1.0;
        CHECK_THROWS_AS(CutProjectScheme(1, 1, 1, M, c1), DimensionMismatchError);
        CHECK_THROWS_AS(CutProjectScheme(2, 0, 1, M1, c1), DimensionMismatchError);
        CHECK_THROWS_AS(CutProjectScheme(1, 0, 0, M1, c1), DimensionMismatchError);
    }
}

TEST_CASE("lattice points and cyclic coordinates") {
    auto s = cyclic4_scheme();
    auto p = s.point(ivec({-3}));
    CHECK(p.x[0] == doctest::Approx(-3.0));
    CHECK(p.y_cyc == 1); // -3 mod 4
    auto fib = fibonacci_scheme();
    auto q = fib.point(ivec({2, -1}));
    CHECK(q.x[0] == doctest::Approx(2.0 - kTau).epsilon(1e-14));
    CHECK(q.y_eucl[0] == doctest::Approx(2.0 - (1.0 - kTau)).epsilon(1e-14));
}

TEST_CASE("dual lattice") {
    SUBCASE("dual of 2Z is Z/2") {
        auto s = integer_scheme(2.0);
        DualLattice d(s);
        CHECK(d.base()(0, 0) == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(d.coset_offset(0).norm() == 0.0);
        CHECK(d.density() == doctest::Approx(2.0).epsilon(1e-14));
    }
    SUBCASE("Fibonacci dual base is the explicit inverse-transpose") {
        DualLattice d(fibonacci_scheme());
        const double s5 = std::sqrt(5.0);
        CHECK(d.base()(0, 0) == doctest::Approx((kTau - 1.0) / s5).epsilon(1e-12));
        CHECK(d.base()(0, 1) == doctest::Approx(1.0 / s5).epsilon(1e-12));
        CHECK(d.base()(1, 0) == doctest::Approx(kTau / s5).epsilon(1e-12));
        CHECK(d.base()(1, 1) == doctest::Approx(-1.0 / s5).epsilon(1e-12));
    }
    SUBCASE("cyclic cosets solve chi + eta/4 in Z") {
        DualLattice d(cyclic4_scheme());
        CHECK(d.base()(0, 0) == doctest::Approx(1.0));
        for (int eta = 0; eta < 4; ++eta)
            CHECK(d.coset_offset(eta)[0] == doctest::Approx(-eta / 4.0).epsilon(1e-14));
    }
}

TEST_CASE("annihilator condition on probe coordinates") {
    auto check_scheme = [](const CutProjectScheme& s) {
        DualLattice dual(s);
        const int dm = s.embedding_dim();
        const int N = s.cyclic_order();
        // dual generators: each eta coset with j a standard basis vector or 0
        std::vector<Eigen::VectorXi> js;
        js.push_back(Eigen::VectorXi::Zero(dm));
        for (int i = 0; i < dm; ++i) {
            Eigen::VectorXi e = Eigen::VectorXi::Zero(dm);
            e[i] = 1;
            js.push_back(e);
        }
        // all |z|_inf <= 5
        std::vector<Eigen::VectorXi> zs;
        Eigen::VectorXi z = Eigen::VectorXi::Constant(dm, -5);
        while (true) {
            zs.push_back(z);
            int i = 0;
            while (i < dm && ++z[i] > 5)
                z[i++] = -5;
            if (i == dm)
                break;
        }
        for (int eta = 0; eta < N; ++eta)
            for (const auto& j : js)
                for (const auto& zz : zs) {
                    DualPoint p = dual.point(j, eta);
                    SchemePoint q = s.point(zz);
                    double phase = p.chi.dot(q.x);
                    if (s.internal_dim() > 0)
                        phase += p.k.dot(q.y_eucl);
                    phase += static_cast<double>(p.eta) * q.y_cyc / N;
                    const std::complex<double> w{std::cos(2 * std::numbers::pi * phase),
                                                 std::sin(2 * std::numbers::pi * phase)};
                    REQUIRE(std::abs(w - std::complex<double>{1.0, 0.0}) <= 1e-9);
                }
    };
    check_scheme(integer_scheme(2.0));
    check_scheme(fibonacci_scheme());
    check_scheme(cyclic4_scheme());
}

TEST_CASE("structural identities") {
    auto schemes = {integer_scheme(2.0), fibonacci_scheme(), cyclic4_scheme()};
    for (const auto& s : schemes) {
        DualLattice d(s);
        SUBCASE("dual of dual base equals the generator") {
            const Eigen::MatrixXd back = d.base().inverse().transpose();
            CHECK((back - s.generator()).cwiseAbs().maxCoeff() <= 1e-12);
        }
        SUBCASE("density product is one") {
            CHECK(std::abs(s.density() * d.density() - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("validate_scheme probes") {
    SUBCASE("Fibonacci probe is injective, covering radius shrinks") {
        auto s = fibonacci_scheme();
        auto r10 = validate_scheme(s, 10.0);
        auto r40 = validate_scheme(s, 40.0);
        CHECK(r10.injective);
        CHECK(r40.injective);
        CHECK(r40.points_probed > r10.points_probed);
        CHECK(r40.internal_covering_radius < r10.internal_covering_radius);
        CHECK(r40.min_physical_gap > 0.0);
    }
    SUBCASE("product lattice violates injectivity") {
        Eigen::MatrixXd M(2, 2);
        M << 1.0, 0.0, 0.0, 1.0;
        Eigen::VectorXi c(2);
        c << 0, 0;
        CutProjectScheme s(1, 1, 1, M, c, "product");
        CHECK_THROWS_AS(validate_scheme(s, 10.0), InjectivityViolatedError);
    }
    SUBCASE("cyclic scheme probe passes with all residues covered") {
        auto rep = validate_scheme(cyclic4_scheme(), 10.0);
        CHECK(rep.injective);
        CHECK(rep.internal_covering_radius == 0.0);
        CHECK(rep.min_physical_gap == doctest::Approx(1.0));
    }
}
