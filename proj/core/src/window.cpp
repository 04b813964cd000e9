#include "cutproject/window.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace cutproject {

namespace {

constexpr double kPi = std::numbers::pi;

double sinc(double t) {
    if (std::abs(t) < 1e-8)
        return 1.0 - t * t / 6.0;
    return std::sin(t) / t;
}

Complex unit_phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

} // namespace

const char* to_string(WeightClass c) {
    switch (c) {
    case WeightClass::K2: return "K2";
    case WeightClass::PK: return "PK";
    case WeightClass::KL: return "KL";
    case WeightClass::RiemannIntegrable: return "RiemannIntegrable";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// AxisFactor

void AxisFactor::canonicalize() { std::sort(intervals_.begin(), intervals_.end()); }

AxisFactor AxisFactor::interval(double a, double b, bool half_open) {
    if (!(a <= b))
        throw DimensionMismatchError("interval must satisfy a <= b");
    AxisFactor f;
    f.intervals_ = {{a, b}};
    f.half_open_ = half_open;
    return f;
}

AxisFactor AxisFactor::tent(double halfwidth) {
    if (!(halfwidth > 0.0))
        throw DimensionMismatchError("tent halfwidth must be positive");
    AxisFactor f;
    f.intervals_ = {{-halfwidth, halfwidth}, {-halfwidth, halfwidth}};
    return f;
}

double AxisFactor::eval(double y) const {
    const int p = order();
    if (p == 1) {
        const auto [a, b] = intervals_[0];
        if (half_open_)
            return (a <= y && y < b) ? 1.0 : 0.0;
        return (a <= y && y <= b) ? 1.0 : 0.0;
    }
    if (p > 16)
        throw UnsupportedKindError("axis convolution order exceeds 16");
    // p-fold convolution of interval indicators evaluated by inclusion-
    // exclusion over the shifted truncated powers (t - sum of lengths)_+^{p-1}.
    double alo = 0.0, ahi = 0.0;
    for (const auto& [a, b] : intervals_) {
        alo += a;
        ahi += b;
    }
    if (y <= alo || y >= ahi)
        return 0.0;
    const double t0 = y - alo;
    double fact = 1.0;
    for (int i = 2; i < p; ++i)
        fact *= i;
    double acc = 0.0;
    const unsigned subsets = 1u << p;
    for (unsigned s = 0; s < subsets; ++s) {
        double shift = 0.0;
        int bits = 0;
        for (int j = 0; j < p; ++j)
            if (s & (1u << j)) {
                shift += intervals_[static_cast<std::size_t>(j)].second -
                         intervals_[static_cast<std::size_t>(j)].first;
                ++bits;
            }
        const double t = t0 - shift;
        if (t <= 0.0)
            continue;
        const double term = std::pow(t, p - 1);
        acc += (bits % 2 == 0) ? term : -term;
    }
    return std::max(0.0, acc / fact);
}

Complex AxisFactor::inverse_ft(double k) const {
    Complex out{1.0, 0.0};
    for (const auto& [a, b] : intervals_) {
        const double len = b - a;
        out *= len * sinc(kPi * k * len) * unit_phase(kPi * k * (a + b));
    }
    return out;
}

AxisFactor AxisFactor::reflected() const {
    AxisFactor f;
    for (const auto& [a, b] : intervals_)
        f.intervals_.push_back({-b, -a});
    f.half_open_ = half_open_;
    f.canonicalize();
    return f;
}

AxisFactor AxisFactor::convolve(const AxisFactor& other) const {
    AxisFactor f;
    f.intervals_ = intervals_;
    f.intervals_.insert(f.intervals_.end(), other.intervals_.begin(),
                        other.intervals_.end());
    if (f.intervals_.size() > 16)
        throw UnsupportedKindError("axis convolution order exceeds 16");
    f.canonicalize();
    return f;
}

std::pair<double, double> AxisFactor::support() const {
    double lo = 0.0, hi = 0.0;
    for (const auto& [a, b] : intervals_) {
        lo += a;
        hi += b;
    }
    return {lo, hi};
}

double AxisFactor::mass() const {
    double m = 1.0;
    for (const auto& [a, b] : intervals_)
        m *= b - a;
    return m;
}

double AxisFactor::sup_bound() const {
    if (order() == 1)
        return 1.0;
    // drop the widest factor: |f*g| <= ||f||_inf ||g||_1
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t drop = 0; drop < intervals_.size(); ++drop) {
        double prod = 1.0;
        for (std::size_t j = 0; j < intervals_.size(); ++j)
            if (j != drop)
                prod *= intervals_[j].second - intervals_[j].first;
        best = std::min(best, prod);
    }
    return best;
}

double AxisFactor::ft_envelope(double k) const {
    const double ak = std::abs(k);
    double e = 1.0;
    for (const auto& [a, b] : intervals_) {
        const double len = b - a;
        e *= ak > 0.0 ? std::min(len, 1.0 / (kPi * ak)) : len;
    }
    return e;
}

double AxisFactor::ft_envelope_tail(double K) const {
    const int p = order();
    std::vector<double> lens, breaks;
    for (const auto& [a, b] : intervals_) {
        const double len = b - a;
        if (len <= 0.0)
            return 0.0; // zero mass, envelope identically zero
        lens.push_back(len);
        breaks.push_back(1.0 / (kPi * len));
    }
    if (p < 2)
        throw WeightNotInKLError("envelope tail integral diverges at order < 2");
    std::sort(breaks.begin(), breaks.end());
    std::sort(lens.begin(), lens.end(), std::greater<>()); // lens[i] pairs with breaks[i]

    // Piecewise power integrand on [K, inf): with r factors switched the
    // envelope is (prod of unswitched lengths) * (pi u)^{-r}.
    double total = 0.0;
    double s = std::max(K, 0.0);
    for (int r = 0; r <= p; ++r) {
        const double t = (r < p) ? breaks[static_cast<std::size_t>(r)]
                                 : std::numeric_limits<double>::infinity();
        if (t > s) {
            double coeff = 1.0;
            for (int j = r; j < p; ++j)
                coeff *= lens[static_cast<std::size_t>(j)];
            coeff *= std::pow(kPi, -r);
            double piece;
            if (r == 0)
                piece = coeff * (t - s);
            else if (r == 1)
                piece = coeff * std::log(t / s);
            else if (std::isinf(t))
                piece = coeff * std::pow(s, 1 - r) / (r - 1);
            else
                piece = coeff * (std::pow(s, 1 - r) - std::pow(t, 1 - r)) / (r - 1);
            total += piece;
            s = t;
        }
    }
    return 2.0 * total; // both tails of the even envelope
}

// ---------------------------------------------------------------------------
// WeightTerm

Complex WeightTerm::cyclic_inverse_ft(int eta) const {
    const int N = static_cast<int>(cyclic.size());
    Complex acc{0.0, 0.0};
    for (int k = 0; k < N; ++k)
        acc += cyclic[static_cast<std::size_t>(k)] *
               unit_phase(2.0 * kPi * eta * k / N);
    return acc;
}

double WeightTerm::cyclic_abs_sum() const {
    double s = 0.0;
    for (const auto& v : cyclic)
        s += std::abs(v);
    return s;
}

// ---------------------------------------------------------------------------
// WeightFunction

namespace {

std::vector<Complex> cyclic_indicator(int N, const std::vector<int>& subset) {
    if (N < 1)
        throw DimensionMismatchError("cyclic order must be positive");
    std::vector<Complex> v(static_cast<std::size_t>(N), Complex{0.0, 0.0});
    for (int s : subset) {
        if (s < 0 || s >= N)
            throw SignatureMismatchError("cyclic subset element " + std::to_string(s) +
                                         " outside Z/" + std::to_string(N));
        v[static_cast<std::size_t>(s)] = Complex{1.0, 0.0};
    }
    return v;
}

} // namespace

WeightFunction WeightFunction::box(const std::vector<std::pair<double, double>>& intervals,
                                   int cyclic_order, const std::vector<int>& cyclic_subset,
                                   bool half_open) {
    WeightFunction h(static_cast<int>(intervals.size()), cyclic_order);
    WeightTerm t;
    for (const auto& [a, b] : intervals)
        t.axes.push_back(AxisFactor::interval(a, b, half_open));
    t.cyclic = cyclic_indicator(cyclic_order, cyclic_subset);
    h.terms_.push_back(std::move(t));
    return h;
}

WeightFunction WeightFunction::tent(const std::vector<double>& halfwidths,
                                    int cyclic_order, const std::vector<int>& cyclic_subset) {
    WeightFunction h(static_cast<int>(halfwidths.size()), cyclic_order);
    WeightTerm t;
    for (double w : halfwidths)
        t.axes.push_back(AxisFactor::tent(w));
    t.cyclic = cyclic_indicator(cyclic_order, cyclic_subset);
    h.terms_.push_back(std::move(t));
    return h;
}

WeightFunction
WeightFunction::combination(const std::vector<std::pair<Complex, WeightFunction>>& parts) {
    if (parts.empty())
        throw SignatureMismatchError("combination needs at least one part");
    const int m = parts.front().second.internal_dim();
    const int N = parts.front().second.cyclic_order();
    WeightFunction h(m, N);
    for (const auto& [coeff, part] : parts) {
        if (part.internal_dim() != m || part.cyclic_order() != N)
            throw SignatureMismatchError("combination parts have mixed signatures");
        for (WeightTerm t : part.terms_) {
            t.coeff *= coeff;
            h.terms_.push_back(std::move(t));
        }
    }
    h.merge_equal_terms();
    return h;
}

void WeightFunction::merge_equal_terms() {
    std::vector<WeightTerm> merged;
    for (auto& t : terms_) {
        bool found = false;
        for (auto& u : merged) {
            if (u.axes == t.axes && u.cyclic == t.cyclic) {
                u.coeff += t.coeff;
                found = true;
                break;
            }
        }
        if (!found)
            merged.push_back(std::move(t));
    }
    terms_ = std::move(merged);
}

void WeightFunction::check_point_signature(const Eigen::VectorXd& y, int y_cyc) const {
    if (y.size() != m_)
        throw SignatureMismatchError("internal point has dimension " +
                                     std::to_string(y.size()) + ", expected " +
                                     std::to_string(m_));
    if (y_cyc < 0 || y_cyc >= big_n_)
        throw SignatureMismatchError("cyclic coordinate outside Z/" + std::to_string(big_n_));
}

Complex WeightFunction::eval(const Eigen::VectorXd& y, int y_cyc) const {
    check_point_signature(y, y_cyc);
    Complex acc{0.0, 0.0};
    for (const auto& t : terms_) {
        Complex v = t.coeff * t.cyclic[static_cast<std::size_t>(y_cyc)];
        for (int i = 0; i < m_ && v != Complex{0.0, 0.0}; ++i)
            v *= t.axes[static_cast<std::size_t>(i)].eval(y[i]);
        acc += v;
    }
    return acc;
}

Complex WeightFunction::inverse_ft(const Eigen::VectorXd& k, int eta) const {
    check_point_signature(k, eta);
    Complex acc{0.0, 0.0};
    for (const auto& t : terms_) {
        Complex v = t.coeff * t.cyclic_inverse_ft(eta);
        for (int i = 0; i < m_; ++i)
            v *= t.axes[static_cast<std::size_t>(i)].inverse_ft(k[i]);
        acc += v;
    }
    return acc;
}

Complex WeightFunction::integral() const {
    return inverse_ft(Eigen::VectorXd::Zero(m_), 0);
}

WeightFunction WeightFunction::autocorrelation() const {
    const int N = big_n_;
    WeightFunction out(m_, N);
    for (const auto& s : terms_) {
        for (const auto& t : terms_) {
            WeightTerm r;
            r.coeff = s.coeff * std::conj(t.coeff);
            for (int i = 0; i < m_; ++i)
                r.axes.push_back(s.axes[static_cast<std::size_t>(i)].convolve(
                    t.axes[static_cast<std::size_t>(i)].reflected()));
            r.cyclic.assign(static_cast<std::size_t>(N), Complex{0.0, 0.0});
            for (int c = 0; c < N; ++c) {
                Complex acc{0.0, 0.0};
                for (int j = 0; j < N; ++j)
                    acc += s.cyclic[static_cast<std::size_t>(j)] *
                           std::conj(t.cyclic[static_cast<std::size_t>(((j - c) % N + N) % N)]);
                r.cyclic[static_cast<std::size_t>(c)] = acc;
            }
            out.terms_.push_back(std::move(r));
        }
    }
    out.merge_equal_terms();
    return out;
}

WeightFunction WeightFunction::reflected() const {
    WeightFunction out(m_, big_n_);
    for (const auto& t : terms_) {
        WeightTerm r;
        r.coeff = std::conj(t.coeff);
        for (const auto& a : t.axes)
            r.axes.push_back(a.reflected());
        r.cyclic.resize(t.cyclic.size());
        const int N = big_n_;
        for (int c = 0; c < N; ++c)
            r.cyclic[static_cast<std::size_t>(c)] =
                std::conj(t.cyclic[static_cast<std::size_t>(((-c) % N + N) % N)]);
        out.terms_.push_back(std::move(r));
    }
    return out;
}

WeightFunction WeightFunction::dagger() const {
    WeightFunction out(m_, big_n_);
    for (const auto& t : terms_) {
        WeightTerm r;
        r.coeff = t.coeff;
        for (const auto& a : t.axes)
            r.axes.push_back(a.reflected());
        r.cyclic.resize(t.cyclic.size());
        const int N = big_n_;
        for (int c = 0; c < N; ++c)
            r.cyclic[static_cast<std::size_t>(c)] =
                t.cyclic[static_cast<std::size_t>(((-c) % N + N) % N)];
        out.terms_.push_back(std::move(r));
    }
    return out;
}

WeightClass WeightFunction::weight_class() const {
    // Rank: K2 < PK < KL < RiemannIntegrable; a product is as general as its
    // most general axis, a combination as its most general term.  Functions
    // on the discrete factor alone are convolution squares by polarisation.
    auto axis_class = [](const AxisFactor& a) {
        if (a.order() == 1)
            return WeightClass::RiemannIntegrable;
        return a.order() % 2 == 0 ? WeightClass::K2 : WeightClass::PK;
    };
    int worst = static_cast<int>(WeightClass::K2);
    for (const auto& t : terms_) {
        if (t.coeff == Complex{0.0, 0.0})
            continue;
        for (const auto& a : t.axes)
            worst = std::max(worst, static_cast<int>(axis_class(a)));
    }
    return static_cast<WeightClass>(worst);
}

Box WeightFunction::euclidean_support() const {
    Eigen::VectorXd lo = Eigen::VectorXd::Constant(m_, std::numeric_limits<double>::infinity());
    Eigen::VectorXd hi = -lo;
    if (terms_.empty() || m_ == 0)
        return Box(Eigen::VectorXd(0), Eigen::VectorXd(0));
    for (const auto& t : terms_) {
        for (int i = 0; i < m_; ++i) {
            const auto [a, b] = t.axes[static_cast<std::size_t>(i)].support();
            lo[i] = std::min(lo[i], a);
            hi[i] = std::max(hi[i], b);
        }
    }
    return Box(lo, hi);
}

std::vector<int> WeightFunction::cyclic_support() const {
    std::set<int> s;
    for (const auto& t : terms_)
        for (int k = 0; k < big_n_; ++k)
            if (t.cyclic[static_cast<std::size_t>(k)] != Complex{0.0, 0.0})
                s.insert(k);
    return {s.begin(), s.end()};
}

double WeightFunction::sup_bound() const {
    double b = 0.0;
    for (const auto& t : terms_) {
        double v = std::abs(t.coeff);
        for (const auto& a : t.axes)
            v *= a.sup_bound();
        double cyc = 0.0;
        for (const auto& c : t.cyclic)
            cyc = std::max(cyc, std::abs(c));
        b += v * cyc;
    }
    return b;
}

double WeightFunction::ft_envelope(const Eigen::VectorXd& k) const {
    double acc = 0.0;
    for (const auto& t : terms_) {
        double v = std::abs(t.coeff) * t.cyclic_abs_sum();
        for (int i = 0; i < m_; ++i)
            v *= t.axes[static_cast<std::size_t>(i)].ft_envelope(k[i]);
        acc += v;
    }
    return acc;
}

double WeightFunction::ft_envelope_tail_outside(double K) const {
    // Per term: integral of a separable envelope outside the box equals
    // (full product) - (product of per-axis inner integrals).
    double acc = 0.0;
    for (const auto& t : terms_) {
        double full = 1.0, inner = 1.0;
        for (const auto& a : t.axes) {
            const double f = a.ft_envelope_tail(0.0);
            full *= f;
            inner *= f - a.ft_envelope_tail(K);
        }
        acc += std::abs(t.coeff) * t.cyclic_abs_sum() * (full - inner);
    }
    return acc;
}

double WeightFunction::ft_envelope_integral() const {
    double acc = 0.0;
    for (const auto& t : terms_) {
        double full = 1.0;
        for (const auto& a : t.axes)
            full *= a.ft_envelope_tail(0.0);
        acc += std::abs(t.coeff) * t.cyclic_abs_sum() * full;
    }
    return acc;
}

double WeightFunction::ft_envelope_radius_for(double target) const {
    if (m_ == 0)
        return 0.0;
    if (!(target > 0.0))
        throw EpsTooSmallError("envelope radius target must be positive");
    auto bound_outside = [&](double K) {
        // sup of the envelope over { some |k_i| >= K }
        double acc = 0.0;
        for (const auto& t : terms_) {
            double worst = 0.0;
            for (int i = 0; i < m_; ++i) {
                double v = t.axes[static_cast<std::size_t>(i)].ft_envelope(K);
                for (int q = 0; q < m_; ++q)
                    if (q != i)
                        v *= t.axes[static_cast<std::size_t>(q)].ft_envelope(0.0);
                worst = std::max(worst, v);
            }
            acc += std::abs(t.coeff) * t.cyclic_abs_sum() * worst;
        }
        return acc;
    };
    double K = 1.0;
    int iter = 0;
    while (bound_outside(K) >= target) {
        K *= 2.0;
        if (++iter > 60)
            throw EpsTooSmallError("dual truncation radius beyond 2^60");
    }
    double lo = K / 2.0, hi = K;
    for (int i = 0; i < 40; ++i) {
        const double mid = 0.5 * (lo + hi);
        (bound_outside(mid) >= target ? lo : hi) = mid;
    }
    return hi;
}

std::string WeightFunction::describe() const {
    if (terms_.size() == 1) {
        const auto& t = terms_.front();
        bool all1 = true, all_tent = true;
        for (const auto& a : t.axes) {
            all1 = all1 && a.order() == 1;
            const auto iv = a.intervals();
            all_tent = all_tent && a.order() == 2 && iv[0] == iv[1] &&
                       iv[0].first == -iv[0].second;
        }
        if (all1 && m_ > 0)
            return "box";
        if (all_tent && m_ > 0)
            return "tent";
        if (m_ == 0)
            return "cyclic";
        return "spline";
    }
    return "combination(" + std::to_string(terms_.size()) + " terms)";
}

} // namespace cutproject
