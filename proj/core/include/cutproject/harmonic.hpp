#ifndef CUTPROJECT_HARMONIC_HPP
#define CUTPROJECT_HARMONIC_HPP

#include <vector>

#include "cutproject/gaussian.hpp"
#include "cutproject/pointset.hpp"

namespace cutproject {

/// Finite pure point measure: distinct locations with complex amplitudes,
/// sorted lexicographically.
struct PurePointMeasure {
    enum class Side { direct, dual };

    struct Entry {
        Eigen::VectorXd location;
        Complex amplitude;
    };

    std::vector<Entry> entries;
    Side side = Side::direct;

    /// Sorts and merges amplitudes at locations closer than merge_tol.
    static PurePointMeasure from_entries(std::vector<Entry> entries, Side side,
                                         double merge_tol = 1e-9);

    /// Amplitude at the entry within tol of loc, or 0 when absent.
    Complex amplitude_at(const Eigen::VectorXd& loc, double tol = 1e-9) const;
    std::size_t size() const { return entries.size(); }
};

/// mu~: locations negated, amplitudes conjugated.
PurePointMeasure reflect_tilde(const PurePointMeasure& m);
/// mu^dagger: locations negated only.
PurePointMeasure reflect_dagger(const PurePointMeasure& m);

/// Volume-averaged character sum over the points of ps:
/// (1/vol) sum conj(chi(x)) h(x*).
Complex fourier_bohr(const WeightedPointSet& ps, const Eigen::VectorXd& chi);
Complex fourier_bohr(const CutProjectScheme& scheme, const WeightFunction& h,
                     const Eigen::VectorXd& chi, const VanHoveBox& box,
                     const EnumerationOptions& opts = {});

/// Restricted autocorrelation (1/vol(A_n)) omega|_{A_n} * ~omega|_{A_n} on
/// difference vectors with |z| <= radius, computed by a sorted neighbour
/// sweep.  An empty point set gives the empty measure.
PurePointMeasure finite_autocorrelation(const WeightedPointSet& ps, double radius,
                                        int jobs = 1);

/// Exact limit autocorrelation dens(L) * omega_{h*~h} restricted to |z| <= radius;
/// amplitudes below 1e-14 dropped.
PurePointMeasure theoretical_autocorrelation(const CutProjectScheme& scheme,
                                             const WeightFunction& h, double radius,
                                             const EnumerationOptions& opts = {});

/// One Bragg peak of the diffraction comb dens^2 * omega_{|h_check|^2}.
struct BraggPeak {
    Eigen::VectorXd chi; ///< physical dual location
    Eigen::VectorXd k;   ///< internal dual coordinate chi* (dominant coset)
    int eta = 0;
    Complex amplitude;   ///< dens(L) * h_check(chi*), cosets merged
    double intensity = 0.0;
};

/// Bragg peaks with chi in dual_box and intensity >= eps.  The internal dual
/// coordinate is truncated where the catalogued envelope of h_check
/// guarantees dens^2 |h_check|^2 < eps, so no reported-size peak is missed.
/// Coincident physical projections (within merge tolerance 1e-9) merge by
/// amplitude before squaring.  Throws EpsTooSmallError below the 1e-12 floor.
std::vector<BraggPeak> diffraction_peaks(const CutProjectScheme& scheme,
                                         const WeightFunction& h, const Box& dual_box,
                                         double eps, const EnumerationOptions& opts = {});

/// The peaks as a dual-side measure whose amplitudes are the intensities.
PurePointMeasure theoretical_diffraction(const CutProjectScheme& scheme,
                                         const WeightFunction& h, const Box& dual_box,
                                         double eps, const EnumerationOptions& opts = {});

/// (1/vol) integral of chi over the box, closed form per axis.
Complex character_average(const Eigen::VectorXd& chi, const VanHoveBox& box);

/// Exact van Hove boundary ratio theta(partial^K A_n)/theta(A_n) for centred
/// boxes with K = [-r, r]^d.
double van_hove_ratio(int d, double r, double n);

} // namespace cutproject

#endif
