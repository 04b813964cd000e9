#ifndef CUTPROJECT_SCHEME_HPP
#define CUTPROJECT_SCHEME_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cutproject/errors.hpp"

namespace cutproject {

// Cut-and-project schemes on G = R^d (physical side) with internal space
// H = R^m x Z/N.  The lattice is the image of Z^{d+m} under
//
//     z  |->  ( (Mz)_{1..d}, (Mz)_{d+1..d+m}, c.z mod N ),
//
// where M is an invertible (d+m)x(d+m) matrix and c an integer coupling
// vector.  Haar measures are fixed throughout the library: Lebesgue on every
// Euclidean factor, counting measure on Z/N, and (1/N)-counting on the dual
// cyclic factor.  These are Plancherel pairs, so the transform conventions of
// window.hpp and gaussian.hpp need no extra normalisation constants.

/// A single lattice point together with its projections.
struct SchemePoint {
    Eigen::VectorXi z;      ///< integer coordinates in Z^{d+m}
    Eigen::VectorXd x;      ///< physical projection, length d
    Eigen::VectorXd y_eucl; ///< Euclidean internal projection, length m
    int y_cyc = 0;          ///< cyclic internal coordinate in [0, N)
};

class CutProjectScheme {
public:
    /// Validates invariants: M square of size d+m with |det M| above
    /// 1e-12 times its Hadamard bound, N >= 1, gcd(c_1,...,c_{d+m}, N) = 1.
    /// Throws DimensionMismatchError, SingularMatrixError,
    /// CyclicNotDenseError.
    CutProjectScheme(int d, int m, int N, Eigen::MatrixXd M,
                     Eigen::VectorXi c, std::string name = "");

    int physical_dim() const { return d_; }
    int internal_dim() const { return m_; }
    int cyclic_order() const { return big_n_; }
    int embedding_dim() const { return d_ + m_; }
    const std::string& name() const { return name_; }

    const Eigen::MatrixXd& generator() const { return mat_; }
    const Eigen::MatrixXd& generator_inverse() const { return mat_inv_; }
    const Eigen::VectorXi& cyclic_coupling() const { return coupling_; }

    double abs_det() const { return abs_det_; }

    /// dens(L) = 1 / (|det M| * N), points per unit Haar volume of G x H.
    double density() const { return density_; }

    /// Smallest / largest singular value of M (used for truncation bounds).
    double sigma_min() const { return sigma_min_; }
    double sigma_max() const { return sigma_max_; }

    /// The lattice point with integer coordinates z.
    SchemePoint point(const Eigen::VectorXi& z) const;

    /// Cyclic coordinate c.z mod N, reduced to [0, N).
    int cyclic_coordinate(const Eigen::VectorXi& z) const;

private:
    int d_, m_, big_n_;
    Eigen::MatrixXd mat_, mat_inv_;
    Eigen::VectorXi coupling_;
    std::string name_;
    double abs_det_, density_, sigma_min_, sigma_max_;
};

/// One point of the dual (annihilator) lattice.  Every character of G x H
/// trivial on the lattice has the form
///
///     (chi, k, eta) = ( M^{-T} j + o_eta  split d / m , eta ),
///
/// with o_eta = -(eta/N) M^{-T} c, j in Z^{d+m}, eta in Z/N.
struct DualPoint {
    Eigen::VectorXi j;
    int eta = 0;
    Eigen::VectorXd chi; ///< physical dual coordinate, length d
    Eigen::VectorXd k;   ///< Euclidean internal dual coordinate, length m
};

class DualLattice {
public:
    explicit DualLattice(const CutProjectScheme& scheme);

    const CutProjectScheme& scheme() const { return scheme_; }
    /// M^{-T}: columns generate the Euclidean part of every coset.
    const Eigen::MatrixXd& base() const { return base_; }
    /// Coset offset o_eta in R^{d+m}.
    const Eigen::VectorXd& coset_offset(int eta) const;
    /// dens(L_0) = |det M| * N; dens(L) * dens(L_0) = 1.
    double density() const { return density0_; }

    DualPoint point(const Eigen::VectorXi& j, int eta) const;

private:
    const CutProjectScheme& scheme_;
    Eigen::MatrixXd base_;
    std::vector<Eigen::VectorXd> offsets_;
    double density0_;
};

/// Result of probing scheme conditions on an enumerated sample.
struct SchemeValidation {
    long points_probed = 0;
    /// Smallest distance between distinct physical projections in the probe.
    double min_physical_gap = 0.0;
    /// Estimated covering radius of the internal projections over the probed
    /// internal region; shrinks as probe_radius grows when the internal
    /// projection is dense.  Infinity when some cyclic residue is missing.
    double internal_covering_radius = 0.0;
    bool injective = true;
};

/// Enumerates lattice points with physical and internal Euclidean coordinates
/// in [-probe_radius, probe_radius] and probes the scheme conditions: throws
/// InjectivityViolatedError when two sample points share a physical
/// coordinate within 1e-9, otherwise reports the denseness diagnostic.
/// Injectivity is undecidable from floating point data in general; the probe
/// only certifies the enumerated sample.
SchemeValidation validate_scheme(const CutProjectScheme& scheme,
                                 double probe_radius);

} // namespace cutproject

#endif
