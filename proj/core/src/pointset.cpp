#include "cutproject/pointset.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>

#include "cutproject/parallel.hpp"

namespace cutproject {

long default_point_cap() {
    if (const char* env = std::getenv("CUTPROJECT_POINT_CAP")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0)
            return static_cast<long>(v);
    }
    return 10'000'000L;
}

namespace {

// One linear constraint a.j <= b over integer coordinates.
struct LinIneq {
    Eigen::VectorXd a;
    double b;
};

// Fourier-Motzkin ladder: level v holds the exact projection of the box
// constraints onto coordinates 0..v, so the feasible interval of j_v given
// j_0..j_{v-1} is the intersection of its rows.
std::vector<std::vector<LinIneq>> fm_ladder(const Eigen::MatrixXd& B,
                                            const Eigen::VectorXd& offset,
                                            const Box& box) {
    const int D = static_cast<int>(B.cols());
    std::vector<std::vector<LinIneq>> levels(static_cast<std::size_t>(D));
    auto& top = levels[static_cast<std::size_t>(D - 1)];
    for (int r = 0; r < D; ++r) {
        top.push_back({B.row(r).transpose(), box.hi[r] - offset[r]});
        top.push_back({-B.row(r).transpose(), offset[r] - box.lo[r]});
    }
    for (int v = D - 1; v >= 1; --v) {
        std::vector<LinIneq> pos, neg;
        auto& out = levels[static_cast<std::size_t>(v - 1)];
        for (const auto& c : levels[static_cast<std::size_t>(v)]) {
            const double scale = std::max(1.0, c.a.cwiseAbs().maxCoeff());
            if (c.a[v] > 1e-12 * scale)
                pos.push_back(c);
            else if (c.a[v] < -1e-12 * scale)
                neg.push_back(c);
            else
                out.push_back(c);
        }
        for (const auto& p : pos)
            for (const auto& n : neg) {
                LinIneq c;
                c.a = (-n.a[v]) * p.a + p.a[v] * n.a;
                c.b = (-n.a[v]) * p.b + p.a[v] * n.b;
                c.a[v] = 0.0;
                out.push_back(c);
            }
    }
    return levels;
}

// Feasible closed interval of j_v given the fixed prefix.
bool level_interval(const std::vector<LinIneq>& level, const Eigen::VectorXi& j,
                    int v, long& lo, long& hi) {
    double dlo = -std::numeric_limits<double>::infinity();
    double dhi = std::numeric_limits<double>::infinity();
    for (const auto& c : level) {
        const double scale = std::max(1.0, c.a.cwiseAbs().maxCoeff());
        if (std::abs(c.a[v]) <= 1e-12 * scale)
            continue;
        double rest = c.b;
        for (int q = 0; q < v; ++q)
            rest -= c.a[q] * j[q];
        const double bound = rest / c.a[v];
        if (c.a[v] > 0)
            dhi = std::min(dhi, bound);
        else
            dlo = std::max(dlo, bound);
    }
    if (!std::isfinite(dlo) || !std::isfinite(dhi))
        throw RegionTooLargeError("enumeration region unbounded along a coordinate");
    if (!(dlo <= dhi + 1.0))
        return false;
    const double slack_lo = 1e-9 * (1.0 + std::abs(dlo));
    const double slack_hi = 1e-9 * (1.0 + std::abs(dhi));
    lo = static_cast<long>(std::ceil(dlo - slack_lo));
    hi = static_cast<long>(std::floor(dhi + slack_hi));
    return lo <= hi;
}

struct Enumerator {
    const Eigen::MatrixXd& B;
    const Eigen::VectorXd& offset;
    const Box& box;
    const std::vector<std::vector<LinIneq>>& levels;
    long cap;

    bool in_box(const Eigen::VectorXi& j) const {
        const Eigen::VectorXd w = B * j.cast<double>() + offset;
        return box.contains(w);
    }

    void recurse(Eigen::VectorXi& j, int v, std::vector<Eigen::VectorXi>& out) const {
        const int D = static_cast<int>(B.cols());
        long lo, hi;
        if (!level_interval(levels[static_cast<std::size_t>(v)], j, v, lo, hi))
            return;
        for (long val = lo; val <= hi; ++val) {
            j[v] = static_cast<int>(val);
            if (v + 1 == D) {
                if (in_box(j)) {
                    if (static_cast<long>(out.size()) >= cap)
                        throw RegionTooLargeError("enumeration exceeded point cap " +
                                                  std::to_string(cap));
                    out.push_back(j);
                }
            } else {
                recurse(j, v + 1, out);
            }
        }
    }
};

} // namespace

std::vector<Eigen::VectorXi>
lattice_points_in_box(const Eigen::MatrixXd& B, const Eigen::VectorXd& offset,
                      const Box& box, const EnumerationOptions& opts) {
    const int D = static_cast<int>(B.cols());
    if (D < 1 || B.rows() != D || offset.size() != D || box.dim() != D)
        throw DimensionMismatchError("enumeration needs square B and matching box/offset");
    const double det = std::abs(B.determinant());
    if (det <= 0.0)
        throw SingularMatrixError("enumeration base matrix is singular");
    const long cap = opts.point_cap > 0 ? opts.point_cap : default_point_cap();
    const double estimate = box.volume() / det;
    if (estimate > static_cast<double>(cap))
        throw RegionTooLargeError("estimated point count " + std::to_string(estimate) +
                                  " exceeds cap " + std::to_string(cap));

    const auto levels = fm_ladder(B, offset, box);
    Enumerator en{B, offset, box, levels, cap};

    long lo0, hi0;
    Eigen::VectorXi j0 = Eigen::VectorXi::Zero(D);
    if (!level_interval(levels[0], j0, 0, lo0, hi0))
        return {};
    const std::size_t range = static_cast<std::size_t>(hi0 - lo0 + 1);

    const int jobs = std::max(1, opts.jobs);
    std::vector<std::vector<Eigen::VectorXi>> parts(
        static_cast<std::size_t>(std::max<std::size_t>(1, std::min<std::size_t>(jobs, range))));
    std::exception_ptr err;
    std::mutex err_mutex;
    parallel_chunks(range, jobs, [&](int chunk, std::size_t begin, std::size_t end) {
        try {
            Eigen::VectorXi j = Eigen::VectorXi::Zero(D);
            auto& out = parts[static_cast<std::size_t>(chunk)];
            for (std::size_t r = begin; r < end; ++r) {
                j[0] = static_cast<int>(lo0 + static_cast<long>(r));
                if (D == 1) {
                    if (en.in_box(j))
                        out.push_back(j);
                } else {
                    en.recurse(j, 1, out);
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mutex);
            if (!err)
                err = std::current_exception();
        }
    });
    if (err)
        std::rethrow_exception(err);

    std::vector<Eigen::VectorXi> result;
    std::size_t total = 0;
    for (const auto& p : parts)
        total += p.size();
    if (static_cast<long>(total) > cap)
        throw RegionTooLargeError("enumeration exceeded point cap " + std::to_string(cap));
    result.reserve(total);
    for (auto& p : parts)
        result.insert(result.end(), p.begin(), p.end());
    return result;
}

std::vector<SchemePoint>
enumerate_lattice(const CutProjectScheme& scheme, const Box& physical_box,
                  const Box& internal_hull, const EnumerationOptions& opts) {
    if (physical_box.dim() != scheme.physical_dim() ||
        internal_hull.dim() != scheme.internal_dim())
        throw DimensionMismatchError("box dimensions do not match the scheme");
    const Box target = physical_box.product(internal_hull);
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(scheme.embedding_dim());
    auto zs = lattice_points_in_box(scheme.generator(), zero, target, opts);
    std::vector<SchemePoint> pts;
    pts.reserve(zs.size());
    for (const auto& z : zs)
        pts.push_back(scheme.point(z));
    return pts;
}

Complex WeightedPointSet::total_weight() const {
    Complex acc{0.0, 0.0};
    for (const auto& [p, w] : points_)
        acc += w;
    return acc;
}

WeightedPointSet cut_model_set(const CutProjectScheme& scheme, const WeightFunction& h,
                               const VanHoveBox& region, const EnumerationOptions& opts) {
    if (h.internal_dim() != scheme.internal_dim() ||
        h.cyclic_order() != scheme.cyclic_order())
        throw SignatureMismatchError("weight function signature does not match the scheme");
    if (region.dim() != scheme.physical_dim())
        throw DimensionMismatchError("region dimension does not match the scheme");

    std::vector<std::pair<SchemePoint, Complex>> pts;
    if (!h.terms().empty()) {
        auto sample = enumerate_lattice(scheme, region.box(), h.euclidean_support(), opts);
        pts.reserve(sample.size());
        for (auto& p : sample) {
            const Complex w = h.eval(p.y_eucl, p.y_cyc);
            if (w != Complex{0.0, 0.0})
                pts.emplace_back(std::move(p), w);
        }
    }
    return WeightedPointSet(scheme, h, region, std::move(pts));
}

double min_gap(const WeightedPointSet& ps) {
    const auto& pts = ps.points();
    if (pts.size() < 2)
        throw TooFewPointsError("min_gap needs at least two points");
    std::vector<Eigen::VectorXd> xs;
    xs.reserve(pts.size());
    for (const auto& [p, w] : pts)
        xs.push_back(p.x);
    std::sort(xs.begin(), xs.end(), [](const auto& a, const auto& b) {
        for (int i = 0; i < a.size(); ++i) {
            if (a[i] < b[i]) return true;
            if (a[i] > b[i]) return false;
        }
        return false;
    });
    // closest-pair sweep along the first coordinate
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size() && xs[j][0] - xs[i][0] < best; ++j)
            best = std::min(best, (xs[j] - xs[i]).norm());
    return best;
}

} // namespace cutproject
