#include "cutproject/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

#include "cutproject/parallel.hpp"

namespace cutproject {

namespace {

constexpr double kPi = std::numbers::pi;

Complex unit_phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

double sinc(double t) {
    if (std::abs(t) < 1e-8)
        return 1.0 - t * t / 6.0;
    return std::sin(t) / t;
}

bool lex_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    for (int i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

bool within(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double tol) {
    return (a - b).cwiseAbs().maxCoeff() <= tol;
}

} // namespace

PurePointMeasure PurePointMeasure::from_entries(std::vector<Entry> entries, Side side,
                                                double merge_tol) {
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return lex_less(a.location, b.location);
    });
    PurePointMeasure m;
    m.side = side;
    for (auto& e : entries) {
        if (!m.entries.empty() && within(m.entries.back().location, e.location, merge_tol))
            m.entries.back().amplitude += e.amplitude;
        else
            m.entries.push_back(std::move(e));
    }
    return m;
}

Complex PurePointMeasure::amplitude_at(const Eigen::VectorXd& loc, double tol) const {
    for (const auto& e : entries)
        if (within(e.location, loc, tol))
            return e.amplitude;
    return {0.0, 0.0};
}

PurePointMeasure reflect_tilde(const PurePointMeasure& m) {
    std::vector<PurePointMeasure::Entry> out;
    out.reserve(m.entries.size());
    for (const auto& e : m.entries)
        out.push_back({-e.location, std::conj(e.amplitude)});
    return PurePointMeasure::from_entries(std::move(out), m.side);
}

PurePointMeasure reflect_dagger(const PurePointMeasure& m) {
    std::vector<PurePointMeasure::Entry> out;
    out.reserve(m.entries.size());
    for (const auto& e : m.entries)
        out.push_back({-e.location, e.amplitude});
    return PurePointMeasure::from_entries(std::move(out), m.side);
}

Complex fourier_bohr(const WeightedPointSet& ps, const Eigen::VectorXd& chi) {
    const double vol = ps.region().volume();
    if (!(vol > 0.0))
        throw DimensionMismatchError("Fourier-Bohr average needs a region of positive volume");
    if (chi.size() != ps.scheme().physical_dim())
        throw DimensionMismatchError("dual frequency has wrong dimension");
    Complex acc{0.0, 0.0};
    for (const auto& [p, w] : ps.points())
        acc += unit_phase(-2.0 * kPi * chi.dot(p.x)) * w;
    return acc / vol;
}

Complex fourier_bohr(const CutProjectScheme& scheme, const WeightFunction& h,
                     const Eigen::VectorXd& chi, const VanHoveBox& box,
                     const EnumerationOptions& opts) {
    return fourier_bohr(cut_model_set(scheme, h, box, opts), chi);
}

PurePointMeasure finite_autocorrelation(const WeightedPointSet& ps, double radius,
                                        int jobs) {
    if (!(radius > 0.0))
        throw DimensionMismatchError("autocorrelation radius must be positive");
    const double vol = ps.region().volume();
    if (!(vol > 0.0))
        throw DimensionMismatchError("autocorrelation needs a region of positive volume");
    const auto& pts = ps.points();
    if (pts.empty())
        return PurePointMeasure{{}, PurePointMeasure::Side::direct};

    struct XW {
        Eigen::VectorXd x;
        Complex w;
    };
    std::vector<XW> s;
    s.reserve(pts.size());
    for (const auto& [p, w] : pts)
        s.push_back({p.x, w});
    std::sort(s.begin(), s.end(),
              [](const XW& a, const XW& b) { return lex_less(a.x, b.x); });

    // pair contributions at z = x_j - x_i (lex positive), swept along the
    // first coordinate; the z = 0 mass is sum |w|^2
    using Contribution = std::pair<Eigen::VectorXd, Complex>;
    std::vector<std::vector<Contribution>> parts(
        static_cast<std::size_t>(std::max(1, jobs)));
    std::exception_ptr err;
    std::mutex err_mutex;
    parallel_chunks(s.size(), std::max(1, jobs), [&](int chunk, std::size_t begin, std::size_t end) {
        try {
            auto& out = parts[static_cast<std::size_t>(chunk)];
            for (std::size_t i = begin; i < end; ++i) {
                for (std::size_t j = i + 1; j < s.size(); ++j) {
                    if (s[j].x[0] - s[i].x[0] > radius)
                        break;
                    const Eigen::VectorXd z = s[j].x - s[i].x;
                    if (z.norm() <= radius)
                        out.push_back({z, s[j].w * std::conj(s[i].w)});
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

    std::vector<Contribution> all;
    for (auto& p : parts) {
        all.insert(all.end(), p.begin(), p.end());
        p.clear();
    }

    std::vector<PurePointMeasure::Entry> entries;
    entries.reserve(2 * all.size() + 1);
    Complex zero_mass{0.0, 0.0};
    for (const auto& p : s)
        zero_mass += p.w * std::conj(p.w);
    entries.push_back({Eigen::VectorXd::Zero(s.front().x.size()), zero_mass / vol});
    for (const auto& [z, c] : all) {
        entries.push_back({z, c / vol});
        entries.push_back({-z, std::conj(c) / vol});
    }
    return PurePointMeasure::from_entries(std::move(entries),
                                          PurePointMeasure::Side::direct);
}

PurePointMeasure theoretical_autocorrelation(const CutProjectScheme& scheme,
                                             const WeightFunction& h, double radius,
                                             const EnumerationOptions& opts) {
    if (!(radius > 0.0))
        throw DimensionMismatchError("autocorrelation radius must be positive");
    const WeightFunction k = h.autocorrelation();
    const int d = scheme.physical_dim();
    Box physical(Eigen::VectorXd::Constant(d, -radius),
                 Eigen::VectorXd::Constant(d, radius));
    auto pts = enumerate_lattice(scheme, physical, k.euclidean_support(), opts);
    std::vector<PurePointMeasure::Entry> entries;
    for (const auto& p : pts) {
        if (p.x.norm() > radius)
            continue;
        const Complex amp = scheme.density() * k.eval(p.y_eucl, p.y_cyc);
        if (std::abs(amp) >= 1e-14)
            entries.push_back({p.x, amp});
    }
    return PurePointMeasure::from_entries(std::move(entries),
                                          PurePointMeasure::Side::direct);
}

std::vector<BraggPeak> diffraction_peaks(const CutProjectScheme& scheme,
                                         const WeightFunction& h, const Box& dual_box,
                                         double eps, const EnumerationOptions& opts) {
    if (h.internal_dim() != scheme.internal_dim() ||
        h.cyclic_order() != scheme.cyclic_order())
        throw SignatureMismatchError("weight function signature does not match the scheme");
    if (dual_box.dim() != scheme.physical_dim())
        throw DimensionMismatchError("dual box dimension does not match the scheme");
    if (eps < 1e-12)
        throw EpsTooSmallError("intensity threshold below the 1e-12 completeness floor");

    const DualLattice dual(scheme);
    const double dens = scheme.density();
    const int m = scheme.internal_dim();
    const int N = scheme.cyclic_order();

    // Internal truncation radius: beyond it the catalogued envelope keeps
    // dens^2 |h_check|^2 below eps, so no reported peak can be missed.
    const double K = h.ft_envelope_radius_for(std::sqrt(eps) / dens);
    const Box internal(Eigen::VectorXd::Constant(m, -K),
                       Eigen::VectorXd::Constant(m, K));
    const Box target = dual_box.product(internal);

    struct Raw {
        Eigen::VectorXd chi, k;
        int eta;
        Complex amp;
    };
    std::vector<Raw> raw;
    for (int eta = 0; eta < N; ++eta) {
        auto js = lattice_points_in_box(dual.base(), dual.coset_offset(eta), target, opts);
        for (const auto& j : js) {
            DualPoint p = dual.point(j, eta);
            const Complex a = dens * h.inverse_ft(p.k, p.eta);
            raw.push_back({std::move(p.chi), std::move(p.k), eta, a});
        }
    }
    std::stable_sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
        if (lex_less(a.chi, b.chi)) return true;
        if (lex_less(b.chi, a.chi)) return false;
        return a.eta < b.eta;
    });

    std::vector<BraggPeak> peaks;
    for (std::size_t i = 0; i < raw.size();) {
        std::size_t j = i + 1;
        Complex amp = raw[i].amp;
        std::size_t dominant = i;
        while (j < raw.size() && within(raw[j].chi, raw[i].chi, 1e-9)) {
            amp += raw[j].amp;
            if (std::abs(raw[j].amp) > std::abs(raw[dominant].amp))
                dominant = j;
            ++j;
        }
        const double intensity = std::norm(amp);
        if (intensity >= eps) {
            BraggPeak pk;
            pk.chi = raw[dominant].chi;
            pk.k = raw[dominant].k;
            pk.eta = raw[dominant].eta;
            pk.amplitude = amp;
            pk.intensity = intensity;
            peaks.push_back(std::move(pk));
        }
        i = j;
    }
    return peaks;
}

PurePointMeasure theoretical_diffraction(const CutProjectScheme& scheme,
                                         const WeightFunction& h, const Box& dual_box,
                                         double eps, const EnumerationOptions& opts) {
    auto peaks = diffraction_peaks(scheme, h, dual_box, eps, opts);
    std::vector<PurePointMeasure::Entry> entries;
    entries.reserve(peaks.size());
    for (auto& p : peaks)
        entries.push_back({std::move(p.chi), Complex{p.intensity, 0.0}});
    return PurePointMeasure::from_entries(std::move(entries),
                                          PurePointMeasure::Side::dual);
}

Complex character_average(const Eigen::VectorXd& chi, const VanHoveBox& box) {
    if (!(box.volume() > 0.0))
        throw DimensionMismatchError("character average needs positive volume");
    if (chi.size() != box.dim())
        throw DimensionMismatchError("frequency dimension does not match the box");
    Complex acc{1.0, 0.0};
    for (int i = 0; i < chi.size(); ++i)
        acc *= unit_phase(2.0 * kPi * chi[i] * box.center[i]) *
               sinc(2.0 * kPi * chi[i] * box.halfwidth);
    return acc;
}

double van_hove_ratio(int d, double r, double n) {
    if (d < 1 || !(r > 0.0) || !(n > 0.0))
        throw DimensionMismatchError("van Hove ratio needs d >= 1 and r, n > 0");
    const double outer = std::pow(2.0 * (n + r), d);
    const double inner = std::pow(2.0 * std::max(n - r, 0.0), d);
    return (outer - inner) / std::pow(2.0 * n, d);
}

} // namespace cutproject
