#ifndef CUTPROJECT_VERIFY_HPP
#define CUTPROJECT_VERIFY_HPP

#include <string>
#include <vector>

#include "cutproject/harmonic.hpp"

namespace cutproject {

struct TruncationInfo {
    double direct_radius = 0.0;
    double dual_radius = 0.0;
    double direct_tail = 0.0;
    double dual_tail = 0.0;
    long direct_terms = 0;
    long dual_terms = 0;
};

/// Two-sided residual record.  A check passes when the residual stays within
/// tolerance plus the reported truncation tails; tails are never silently
/// absorbed into the tolerance.
struct CheckReport {
    std::string name;
    Complex lhs{0.0, 0.0};
    Complex rhs{0.0, 0.0};
    double residual = 0.0;
    double tolerance = 0.0;
    TruncationInfo truncation;
    bool pass = false;
    std::string detail;
};

CheckReport make_report(std::string name, Complex lhs, Complex rhs, double tol,
                        TruncationInfo truncation = {}, std::string detail = "");

struct PsfOptions {
    /// Absolute target for Gaussian-side truncation tails.
    double gaussian_tail_target = 1e-15;
    /// Target for the polynomially decaying internal dual tail of the
    /// weighted checks (reported, added to the pass tolerance).
    double internal_tail_target = 1e-4;
    long point_cap = -1;
    int jobs = 1;
};

/// Poisson summation for the lattice comb: sum_L f against
/// dens(L) * sum_{L_0} f_check, both sides summed independently with
/// Gaussian-tail truncation.
CheckReport lattice_psf_check(const CutProjectScheme& scheme, const GaussianTest& f,
                              double tol, const PsfOptions& opts = {});

/// Generalised PSF sum_L g(x) h(y) = dens(L) * sum_{L_0} g_check(chi) h_check(k).
/// Refuses Riemann-integrable weights (WeightNotInKLError).
CheckReport weighted_psf_check(const CutProjectScheme& scheme, const WeightFunction& h,
                               const GaussianTest& g, double tol,
                               const PsfOptions& opts = {});

/// Second transform: sum_{L_0} u(chi) h_check = dens(L_0) * sum_L u_check(x) h(-y).
CheckReport inverse_psf_check(const CutProjectScheme& scheme, const WeightFunction& h,
                              const GaussianTest& u, double tol,
                              const PsfOptions& opts = {});

/// Density formula sweep: omega_h(t + A_n)/(2n)^d against dens(L) * integral h,
/// one report per n carrying the worst deviation over the translations.
std::vector<CheckReport> density_check(const CutProjectScheme& scheme,
                                       const WeightFunction& h,
                                       const std::vector<double>& n_list,
                                       const std::vector<Eigen::VectorXd>& t_list,
                                       double tol, const EnumerationOptions& opts = {});

/// |Fourier-Bohr|^2 against the theoretical Bragg intensity (zero off the
/// projected dual lattice), one report per frequency.
std::vector<CheckReport> diffraction_check(const CutProjectScheme& scheme,
                                           const WeightFunction& h,
                                           const std::vector<Eigen::VectorXd>& chi_list,
                                           double n, double tol,
                                           double intensity_floor = 1e-8,
                                           const EnumerationOptions& opts = {});

/// Density sweep of an indicator window against dens(L) * theta_H(cl W);
/// regular windows converge, punctured ones report the deficit.
CheckReport maximal_density_check(const CutProjectScheme& scheme, const WeightFunction& W,
                                  const std::vector<double>& n_list, double tol,
                                  const EnumerationOptions& opts = {});

/// Transform-side Wiener identity |h_check|^2 = (h * ~h)_check at the sampled
/// dual internal points (k, eta); the report carries the worst sample.
CheckReport wiener_identity_check(const WeightFunction& h,
                                  const std::vector<std::pair<Eigen::VectorXd, int>>& k_list,
                                  double tol = 1e-8);

/// JSON array of reports (stable key order, round-trip number formatting).
std::string reports_to_json(const std::vector<CheckReport>& reports);

} // namespace cutproject

#endif
