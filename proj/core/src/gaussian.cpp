#include "cutproject/gaussian.hpp"

#include <cmath>
#include <numbers>

namespace cutproject {

namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(std::numbers::pi);

Complex unit_phase(double angle) { return {std::cos(angle), std::sin(angle)}; }
} // namespace

GaussianTest::GaussianTest(std::vector<GaussianAxis> axes, std::vector<Complex> cyclic,
                           Complex amplitude)
    : axes_(std::move(axes)), cyclic_(std::move(cyclic)), amplitude_(amplitude) {
    for (const auto& a : axes_)
        if (!(a.width > 0.0))
            throw DimensionMismatchError("Gaussian axis width must be positive");
    if (cyclic_.empty())
        throw DimensionMismatchError("cyclic vector must have length >= 1");
}

GaussianTest GaussianTest::standard(int dim, int cyclic_order) {
    std::vector<GaussianAxis> axes(static_cast<std::size_t>(dim));
    std::vector<Complex> cyc(static_cast<std::size_t>(cyclic_order), Complex{1.0, 0.0});
    return GaussianTest(std::move(axes), std::move(cyc));
}

Complex GaussianTest::eval(const Eigen::VectorXd& x, int cyc) const {
    if (x.size() != dim())
        throw SignatureMismatchError("Gaussian argument has wrong dimension");
    if (cyc < 0 || cyc >= cyclic_order())
        throw SignatureMismatchError("cyclic coordinate outside Z/N");
    Complex v = amplitude_ * cyclic_[static_cast<std::size_t>(cyc)];
    for (int i = 0; i < dim(); ++i) {
        const auto& a = axes_[static_cast<std::size_t>(i)];
        const double u = (x[i] - a.center) / a.width;
        v *= std::exp(-kPi * u * u) * unit_phase(2.0 * kPi * a.freq * x[i]);
    }
    return v;
}

GaussianTest GaussianTest::inverse_ft() const {
    // per axis: (s, c, nu) -> (1/s, -nu, c) with amplitude factor
    // s * exp(2 pi i c nu); cyclic vector goes to its DFT+.
    std::vector<GaussianAxis> axes;
    Complex amp = amplitude_;
    for (const auto& a : axes_) {
        axes.push_back({1.0 / a.width, -a.freq, a.center});
        amp *= a.width * unit_phase(2.0 * kPi * a.center * a.freq);
    }
    const int N = cyclic_order();
    std::vector<Complex> cyc(static_cast<std::size_t>(N), Complex{0.0, 0.0});
    for (int eta = 0; eta < N; ++eta) {
        Complex acc{0.0, 0.0};
        for (int k = 0; k < N; ++k)
            acc += cyclic_[static_cast<std::size_t>(k)] *
                   unit_phase(2.0 * kPi * eta * k / N);
        cyc[static_cast<std::size_t>(eta)] = acc;
    }
    return GaussianTest(std::move(axes), std::move(cyc), amp);
}

double GaussianTest::abs_amplitude() const { return std::abs(amplitude_); }

double GaussianTest::axis_envelope(int axis, double u) const {
    const auto& a = axes_[static_cast<std::size_t>(axis)];
    const double t = (u - a.center) / a.width;
    return std::exp(-kPi * t * t);
}

double GaussianTest::axis_tail_integral(int axis, double X) const {
    const auto& a = axes_[static_cast<std::size_t>(axis)];
    // integral of exp(-pi((u-c)/s)^2) over |u| > X, both tails exactly
    const double s = a.width;
    const double right = 0.5 * s * std::erfc(kSqrtPi * (X - a.center) / s);
    const double left = 0.5 * s * std::erfc(kSqrtPi * (X + a.center) / s);
    return right + left;
}

double GaussianTest::axis_full_integral(int axis) const {
    return axes_[static_cast<std::size_t>(axis)].width;
}

double GaussianTest::cyclic_abs_max() const {
    double m = 0.0;
    for (const auto& c : cyclic_)
        m = std::max(m, std::abs(c));
    return m;
}

double GaussianTest::cyclic_abs_sum() const {
    double s = 0.0;
    for (const auto& c : cyclic_)
        s += std::abs(c);
    return s;
}

} // namespace cutproject
