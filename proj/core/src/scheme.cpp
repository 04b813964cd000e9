#include "cutproject/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cutproject/pointset.hpp"

namespace cutproject {

CutProjectScheme::CutProjectScheme(int d, int m, int N, Eigen::MatrixXd M,
                                   Eigen::VectorXi c, std::string name)
    : d_(d), m_(m), big_n_(N), mat_(std::move(M)), coupling_(std::move(c)),
      name_(std::move(name)) {
    if (d_ < 0 || m_ < 0)
        throw DimensionMismatchError("dimensions d, m must be nonnegative");
    const int dm = d_ + m_;
    if (dm < 1)
        throw DimensionMismatchError("d + m must be at least 1");
    if (big_n_ < 1)
        throw DimensionMismatchError("cyclic order N must be positive");
    if (mat_.rows() != dm || mat_.cols() != dm)
        throw DimensionMismatchError("generator matrix must be square of size d+m = " +
                                     std::to_string(dm));
    if (coupling_.size() != dm)
        throw DimensionMismatchError("cyclic coupling vector must have length d+m");

    // Relative singularity test against the Hadamard bound of M.
    double hadamard = 1.0;
    for (int i = 0; i < dm; ++i)
        hadamard *= mat_.col(i).norm();
    hadamard = std::max(hadamard, 1e-300);
    const double det = mat_.determinant();
    abs_det_ = std::abs(det);
    if (abs_det_ < 1e-12 * std::max(1.0, hadamard))
        throw SingularMatrixError("generator matrix is numerically singular (|det| = " +
                                  std::to_string(abs_det_) + ")");

    // gcd(c_1,...,c_{d+m}, N) = 1 makes z -> c.z mod N surjective, so the
    // cyclic factor of the internal projection is all of Z/N.
    long g = big_n_;
    for (int i = 0; i < dm; ++i)
        g = std::gcd(g, static_cast<long>(std::abs(coupling_[i])));
    if (g != 1)
        throw CyclicNotDenseError("gcd(c, N) = " + std::to_string(g) +
                                  " > 1: cyclic internal projection not surjective");

    mat_inv_ = mat_.inverse();
    density_ = 1.0 / (abs_det_ * static_cast<double>(big_n_));

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(mat_);
    sigma_min_ = svd.singularValues().minCoeff();
    sigma_max_ = svd.singularValues().maxCoeff();
}

int CutProjectScheme::cyclic_coordinate(const Eigen::VectorXi& z) const {
    long acc = 0;
    for (int i = 0; i < z.size(); ++i)
        acc += static_cast<long>(coupling_[i]) * static_cast<long>(z[i]);
    long r = acc % big_n_;
    if (r < 0)
        r += big_n_;
    return static_cast<int>(r);
}

SchemePoint CutProjectScheme::point(const Eigen::VectorXi& z) const {
    if (z.size() != embedding_dim())
        throw DimensionMismatchError("lattice coordinate vector has wrong length");
    SchemePoint p;
    p.z = z;
    const Eigen::VectorXd w = mat_ * z.cast<double>();
    p.x = w.head(d_);
    p.y_eucl = w.tail(m_);
    p.y_cyc = cyclic_coordinate(z);
    return p;
}

DualLattice::DualLattice(const CutProjectScheme& scheme)
    : scheme_(scheme), base_(scheme.generator_inverse().transpose()) {
    const int N = scheme.cyclic_order();
    const int dm = scheme.embedding_dim();
    const Eigen::VectorXd cd = scheme.cyclic_coupling().cast<double>();
    offsets_.reserve(N);
    for (int eta = 0; eta < N; ++eta)
        offsets_.push_back(base_ * (-static_cast<double>(eta) / N * cd));
    density0_ = scheme.abs_det() * N;

    // annihilator condition on generators: for every coset representative and
    // dual basis direction, chi.(M e_i) + eta c_i / N must be an integer
    for (int eta = 0; eta < N; ++eta)
        for (int gen = -1; gen < dm; ++gen) {
            Eigen::VectorXd chi = offsets_[static_cast<std::size_t>(eta)];
            if (gen >= 0)
                chi += base_.col(gen);
            for (int i = 0; i < dm; ++i) {
                const double phase = chi.dot(scheme.generator().col(i)) +
                                     static_cast<double>(eta) * cd[i] / N;
                if (std::abs(phase - std::round(phase)) > 1e-9)
                    throw SingularMatrixError(
                        "dual lattice fails the annihilator condition; generator "
                        "matrix is too ill-conditioned");
            }
        }
}

const Eigen::VectorXd& DualLattice::coset_offset(int eta) const {
    return offsets_.at(static_cast<std::size_t>(eta));
}

DualPoint DualLattice::point(const Eigen::VectorXi& j, int eta) const {
    if (j.size() != scheme_.embedding_dim())
        throw DimensionMismatchError("dual coordinate vector has wrong length");
    DualPoint p;
    p.j = j;
    p.eta = eta;
    const Eigen::VectorXd w = base_ * j.cast<double>() + coset_offset(eta);
    p.chi = w.head(scheme_.physical_dim());
    p.k = w.tail(scheme_.internal_dim());
    return p;
}

namespace {

// Covering radius of the internal sample over a centred probe grid, taken as
// the worst grid point's distance to the nearest sample with the same cyclic
// residue.  Missing residues give infinity.
double covering_radius(const CutProjectScheme& scheme,
                       const std::vector<SchemePoint>& pts, double radius) {
    const int m = scheme.internal_dim();
    const int N = scheme.cyclic_order();
    std::vector<std::vector<Eigen::VectorXd>> by_residue(N);
    for (const auto& p : pts)
        by_residue[static_cast<std::size_t>(p.y_cyc)].push_back(p.y_eucl);
    for (const auto& bucket : by_residue)
        if (bucket.empty())
            return std::numeric_limits<double>::infinity();
    if (m == 0)
        return 0.0;

    // Probe the central half of the sampled internal box.
    const double half = radius / 2.0;
    const int steps = std::max(2, static_cast<int>(std::floor(std::pow(2000.0, 1.0 / m))));
    long total = 1;
    for (int i = 0; i < m; ++i)
        total *= steps + 1;

    double worst = 0.0;
    Eigen::VectorXd q(m);
    for (long idx = 0; idx < total; ++idx) {
        long rem = idx;
        for (int i = 0; i < m; ++i) {
            const int s = static_cast<int>(rem % (steps + 1));
            rem /= steps + 1;
            q[i] = -half + 2.0 * half * s / steps;
        }
        for (int eta = 0; eta < N; ++eta) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& y : by_residue[static_cast<std::size_t>(eta)])
                best = std::min(best, (y - q).norm());
            worst = std::max(worst, best);
        }
    }
    return worst;
}

} // namespace

SchemeValidation validate_scheme(const CutProjectScheme& scheme,
                                 double probe_radius) {
    if (probe_radius <= 0.0)
        throw DimensionMismatchError("probe radius must be positive");
    const int d = scheme.physical_dim();
    const int m = scheme.internal_dim();
    Box physical(Eigen::VectorXd::Constant(d, -probe_radius),
                 Eigen::VectorXd::Constant(d, probe_radius));
    Box internal(Eigen::VectorXd::Constant(m, -probe_radius),
                 Eigen::VectorXd::Constant(m, probe_radius));
    std::vector<SchemePoint> pts = enumerate_lattice(scheme, physical, internal);

    SchemeValidation rep;
    rep.points_probed = static_cast<long>(pts.size());

    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        for (int i = 0; i < d; ++i) {
            if (pts[a].x[i] < pts[b].x[i]) return true;
            if (pts[a].x[i] > pts[b].x[i]) return false;
        }
        return false;
    });
    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        const auto& a = pts[order[i]];
        const auto& b = pts[order[i + 1]];
        const double gap = (a.x - b.x).norm();
        if (gap <= 1e-9) {
            std::string msg = "physical projection not injective on probe: z = [";
            for (int q = 0; q < a.z.size(); ++q)
                msg += (q ? "," : "") + std::to_string(a.z[q]);
            msg += "] and z = [";
            for (int q = 0; q < b.z.size(); ++q)
                msg += (q ? "," : "") + std::to_string(b.z[q]);
            msg += "] coincide in G";
            throw InjectivityViolatedError(msg);
        }
        min_gap = std::min(min_gap, gap);
    }
    rep.min_physical_gap = pts.size() > 1 ? min_gap : 0.0;
    rep.internal_covering_radius = covering_radius(scheme, pts, probe_radius);
    rep.injective = true;
    return rep;
}

} // namespace cutproject
