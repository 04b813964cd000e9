#ifndef CUTPROJECT_WINDOW_HPP
#define CUTPROJECT_WINDOW_HPP

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cutproject/errors.hpp"
#include "cutproject/geometry.hpp"

namespace cutproject {

using Complex = std::complex<double>;

/// Nested test-function classes, ordered from most to least specific.
/// Generalised PSF operations accept K2/PK/KL and refuse RiemannIntegrable.
enum class WeightClass { K2, PK, KL, RiemannIntegrable };

const char* to_string(WeightClass c);

// Weight functions on the internal space H = R^m x Z/N are catalogued so that
// evaluation, the inverse Fourier transform and the autocorrelation h * ~h all
// have closed forms.  The catalogue is built from one primitive per Euclidean
// axis: a convolution product of interval indicators,
//
//     1_{[a_1,b_1]} * ... * 1_{[a_p,b_p]} ,
//
// which covers box indicators (p = 1), tents (p = 2) and every function
// produced by autocorrelation (interval lists simply concatenate), so no
// numeric quadrature fallback is ever required.  The cyclic factor is an
// arbitrary complex vector on Z/N with exact discrete transforms.

/// Convolution product of interval indicators on one Euclidean axis.
class AxisFactor {
public:
    /// Single interval [a, b]; half_open selects [a, b) for boundary
    /// tie-breaking studies.  Only meaningful at order 1 where the function
    /// is discontinuous.
    static AxisFactor interval(double a, double b, bool half_open = false);
    /// Tent of halfwidth w: 1_{[-w,w]} * 1_{[-w,w]}, peak value 2w at 0.
    static AxisFactor tent(double halfwidth);

    int order() const { return static_cast<int>(intervals_.size()); }
    const std::vector<std::pair<double, double>>& intervals() const { return intervals_; }
    bool half_open() const { return half_open_; }

    double eval(double y) const;
    /// Inverse transform: product of phase * length * sinc(pi k length).
    Complex inverse_ft(double k) const;

    AxisFactor reflected() const;
    AxisFactor convolve(const AxisFactor& other) const;

    std::pair<double, double> support() const;
    /// Total mass = product of interval lengths = inverse_ft(0).
    double mass() const;
    /// Upper bound on the sup norm.
    double sup_bound() const;

    /// Decreasing even envelope of |inverse_ft|: prod_i min(len_i, 1/(pi|k|)).
    double ft_envelope(double k) const;
    /// Exact integral of the envelope over |u| > K; requires order >= 2.
    double ft_envelope_tail(double K) const;
    double ft_envelope_integral() const { return ft_envelope_tail(0.0); }

    friend bool operator==(const AxisFactor&, const AxisFactor&) = default;

private:
    std::vector<std::pair<double, double>> intervals_; // canonically sorted
    bool half_open_ = false;

    void canonicalize();
};

/// coeff * (tensor product of axis factors) * (cyclic vector on Z/N).
struct WeightTerm {
    Complex coeff{1.0, 0.0};
    std::vector<AxisFactor> axes;
    std::vector<Complex> cyclic; // length N

    /// Exact DFT+ of the cyclic vector: sum_k v[k] e^{2 pi i eta k / N}.
    Complex cyclic_inverse_ft(int eta) const;
    double cyclic_abs_sum() const;
};

class WeightFunction {
public:
    /// Indicator of a product of intervals (one per internal Euclidean axis)
    /// times the indicator of a cyclic subset S of Z/N.  Intervals are closed
    /// by default.
    static WeightFunction box(const std::vector<std::pair<double, double>>& intervals,
                              int cyclic_order, const std::vector<int>& cyclic_subset,
                              bool half_open = false);

    /// Product of per-axis tents times a cyclic subset indicator.
    static WeightFunction tent(const std::vector<double>& halfwidths,
                               int cyclic_order, const std::vector<int>& cyclic_subset);

    /// Finite linear combination; all parts must share (m, N).
    static WeightFunction
    combination(const std::vector<std::pair<Complex, WeightFunction>>& parts);

    int internal_dim() const { return m_; }
    int cyclic_order() const { return big_n_; }
    const std::vector<WeightTerm>& terms() const { return terms_; }

    /// Exact closed-form value h(y, y_cyc).  Throws SignatureMismatchError.
    Complex eval(const Eigen::VectorXd& y, int y_cyc = 0) const;

    /// Exact inverse Fourier transform at the dual internal point (k, eta).
    Complex inverse_ft(const Eigen::VectorXd& k, int eta = 0) const;

    /// integral of h over H = inverse_ft at 0.
    Complex integral() const;

    /// h * ~h, again a catalogued weight function (exact closed form).
    WeightFunction autocorrelation() const;
    /// ~h(y) = conj(h(-y)).
    WeightFunction reflected() const;
    /// h^dagger(y) = h(-y).
    WeightFunction dagger() const;

    /// Most specific provable class for this catalogue entry.
    WeightClass weight_class() const;

    Box euclidean_support() const;
    std::vector<int> cyclic_support() const;
    double sup_bound() const;

    /// Envelope of |inverse_ft| at Euclidean dual coordinate k (cyclic factor
    /// bounded by its absolute sum).
    double ft_envelope(const Eigen::VectorXd& k) const;
    /// Exact integral of the envelope over the complement of [-K, K]^m.
    /// Requires every axis order >= 2 (throws WeightNotInKLError otherwise).
    double ft_envelope_tail_outside(double K) const;
    double ft_envelope_integral() const;
    /// Smallest K with ft_envelope outside [-K,K]^m below the target,
    /// conservatively per axis.
    double ft_envelope_radius_for(double target) const;

    std::string describe() const;

private:
    WeightFunction(int m, int N) : m_(m), big_n_(N) {}

    int m_ = 0;
    int big_n_ = 1;
    std::vector<WeightTerm> terms_;

    void merge_equal_terms();
    void check_point_signature(const Eigen::VectorXd& y, int y_cyc) const;
};

} // namespace cutproject

#endif
