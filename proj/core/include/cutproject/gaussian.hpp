#ifndef CUTPROJECT_GAUSSIAN_HPP
#define CUTPROJECT_GAUSSIAN_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "cutproject/errors.hpp"
#include "cutproject/window.hpp"

namespace cutproject {

/// One Euclidean axis of a Gaussian test function:
/// exp(-pi ((x - center)/width)^2) * exp(2 pi i freq x).
struct GaussianAxis {
    double width = 1.0;
    double center = 0.0;
    double freq = 0.0;
};

/// Rapidly decaying test functions closed under the Fourier transform:
/// a separable complex Gaussian on R^n times an arbitrary complex vector on
/// the cyclic factor.  Used wherever Poisson summation is probed on both
/// sides; the transform is exact (Gaussian goes to Gaussian with reciprocal
/// width, the cyclic vector to its discrete transform).
class GaussianTest {
public:
    explicit GaussianTest(std::vector<GaussianAxis> axes,
                          std::vector<Complex> cyclic = {Complex{1.0, 0.0}},
                          Complex amplitude = Complex{1.0, 0.0});

    /// Product of exp(-pi x_i^2): self-dual under the transform.
    static GaussianTest standard(int dim, int cyclic_order = 1);

    int dim() const { return static_cast<int>(axes_.size()); }
    int cyclic_order() const { return static_cast<int>(cyclic_.size()); }
    const std::vector<GaussianAxis>& axes() const { return axes_; }
    const std::vector<Complex>& cyclic() const { return cyclic_; }
    Complex amplitude() const { return amplitude_; }

    Complex eval(const Eigen::VectorXd& x, int cyc = 0) const;

    /// Closed-form inverse transform; applying it twice gives f(-x).
    GaussianTest inverse_ft() const;

    // envelope helpers for truncation bounds
    double abs_amplitude() const;
    double axis_envelope(int axis, double u) const;
    /// Exact integral of the axis envelope over |u - center| ... |u| > X.
    double axis_tail_integral(int axis, double X) const;
    double axis_full_integral(int axis) const;
    double cyclic_abs_max() const;
    double cyclic_abs_sum() const;

private:
    std::vector<GaussianAxis> axes_;
    std::vector<Complex> cyclic_;
    Complex amplitude_;
};

} // namespace cutproject

#endif
