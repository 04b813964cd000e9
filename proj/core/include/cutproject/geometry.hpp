#ifndef CUTPROJECT_GEOMETRY_HPP
#define CUTPROJECT_GEOMETRY_HPP

#include <Eigen/Dense>

#include "cutproject/errors.hpp"

namespace cutproject {

/// Closed axis-aligned box in R^n (n may be zero).
struct Box {
    Eigen::VectorXd lo, hi;

    Box() : lo(0), hi(0) {}
    Box(Eigen::VectorXd lo_, Eigen::VectorXd hi_)
        : lo(std::move(lo_)), hi(std::move(hi_)) {
        if (lo.size() != hi.size())
            throw DimensionMismatchError("box bounds must have equal length");
        for (int i = 0; i < lo.size(); ++i)
            if (lo[i] > hi[i])
                throw DimensionMismatchError("box has lo > hi on some axis");
    }

    int dim() const { return static_cast<int>(lo.size()); }

    double volume() const {
        double v = 1.0;
        for (int i = 0; i < lo.size(); ++i)
            v *= hi[i] - lo[i];
        return v;
    }

    bool contains(const Eigen::VectorXd& p) const {
        for (int i = 0; i < lo.size(); ++i)
            if (p[i] < lo[i] || p[i] > hi[i])
                return false;
        return true;
    }

    /// Concatenation (this) x (other).
    Box product(const Box& other) const {
        Box r;
        r.lo.resize(dim() + other.dim());
        r.hi.resize(dim() + other.dim());
        r.lo << lo, other.lo;
        r.hi << hi, other.hi;
        return r;
    }
};

/// Centred averaging box A_n = t + [-n, n]^d, the fixed van Hove family.
struct VanHoveBox {
    double halfwidth = 0.0;
    Eigen::VectorXd center;

    VanHoveBox(double n, Eigen::VectorXd t) : halfwidth(n), center(std::move(t)) {
        if (n < 0.0)
            throw DimensionMismatchError("van Hove halfwidth must be nonnegative");
    }

    int dim() const { return static_cast<int>(center.size()); }

    double volume() const {
        double v = 1.0;
        for (int i = 0; i < dim(); ++i)
            v *= 2.0 * halfwidth;
        return v;
    }

    Box box() const {
        return Box(center.array() - halfwidth, center.array() + halfwidth);
    }
};

} // namespace cutproject

#endif
