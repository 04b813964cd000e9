#ifndef CUTPROJECT_POINTSET_HPP
#define CUTPROJECT_POINTSET_HPP

#include <utility>
#include <vector>

#include "cutproject/geometry.hpp"
#include "cutproject/scheme.hpp"
#include "cutproject/window.hpp"

namespace cutproject {

/// Enumeration cap: CUTPROJECT_POINT_CAP environment variable, default 1e7.
long default_point_cap();

struct EnumerationOptions {
    long point_cap = -1; ///< -1 means default_point_cap()
    int jobs = 1;
};

/// All integer points j in Z^D with B j + offset inside the closed box,
/// sorted lexicographically.  The candidate range per coordinate comes from
/// Fourier-Motzkin projection of the box constraints (exact projection of the
/// corner-mapped preimage), every candidate is filtered exactly against the
/// box.  Throws RegionTooLargeError when the estimated point count
/// vol(box)/|det B| exceeds the cap, or when the collected count does.
std::vector<Eigen::VectorXi>
lattice_points_in_box(const Eigen::MatrixXd& B, const Eigen::VectorXd& offset,
                      const Box& box, const EnumerationOptions& opts = {});

/// Lattice points with physical coordinates in physical_box and Euclidean
/// internal coordinates in internal_hull; the cyclic coordinate is
/// unrestricted.  Output sorted lexicographically by z.
std::vector<SchemePoint>
enumerate_lattice(const CutProjectScheme& scheme, const Box& physical_box,
                  const Box& internal_hull, const EnumerationOptions& opts = {});

/// Finite restriction of the weighted comb: lattice points with physical
/// coordinate in the region, internal coordinate weighted by h, zero weights
/// dropped.  Immutable after construction.
class WeightedPointSet {
public:
    WeightedPointSet(CutProjectScheme scheme, WeightFunction weight, VanHoveBox region,
                     std::vector<std::pair<SchemePoint, Complex>> points)
        : scheme_(std::move(scheme)), weight_(std::move(weight)),
          region_(std::move(region)), points_(std::move(points)) {}

    const CutProjectScheme& scheme() const { return scheme_; }
    const WeightFunction& weight() const { return weight_; }
    const VanHoveBox& region() const { return region_; }
    const std::vector<std::pair<SchemePoint, Complex>>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

    /// omega_h(region) = sum of weights.
    Complex total_weight() const;

private:
    CutProjectScheme scheme_;
    WeightFunction weight_;
    VanHoveBox region_;
    std::vector<std::pair<SchemePoint, Complex>> points_;
};

WeightedPointSet cut_model_set(const CutProjectScheme& scheme, const WeightFunction& h,
                               const VanHoveBox& region, const EnumerationOptions& opts = {});

/// Minimal pairwise physical distance; throws TooFewPointsError below 2 points.
double min_gap(const WeightedPointSet& ps);

} // namespace cutproject

#endif
