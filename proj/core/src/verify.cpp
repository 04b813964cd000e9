#include "cutproject/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace cutproject {

namespace {

constexpr double kTailSafety = 2.0;

// Smallest X with tail(X) <= budget; tail must be nonincreasing.
double solve_radius(double budget, const std::function<double(double)>& tail) {
    if (tail(0.0) <= budget)
        return 0.0;
    double hi = 1.0;
    int it = 0;
    while (tail(hi) > budget) {
        hi *= 2.0;
        if (++it > 200)
            throw EpsTooSmallError("truncation radius solve diverged");
    }
    double lo = hi / 2.0;
    for (int i = 0; i < 50; ++i) {
        const double mid = 0.5 * (lo + hi);
        (tail(mid) > budget ? lo : hi) = mid;
    }
    return hi;
}

struct SumResult {
    Complex value{0.0, 0.0};
    double radius = 0.0;
    double tail = 0.0;
    long terms = 0;
};

// sum of f(Mz, c.z mod N) over the primal lattice, truncated per Euclidean
// axis so that the union-bound tail (lattice density times envelope slab
// integrals, with safety factor) stays below target.
SumResult sum_gaussian_primal(const CutProjectScheme& scheme, const GaussianTest& f,
                              double target, const EnumerationOptions& eopts) {
    const int dm = scheme.embedding_dim();
    const double rho = 1.0 / scheme.abs_det();
    const double common = kTailSafety * rho * f.abs_amplitude() * f.cyclic_abs_max();

    std::vector<double> fulls(static_cast<std::size_t>(dm));
    for (int a = 0; a < dm; ++a)
        fulls[static_cast<std::size_t>(a)] = f.axis_full_integral(a);

    Eigen::VectorXd lo(dm), hi(dm);
    double tail = 0.0, radius = 0.0;
    for (int a = 0; a < dm; ++a) {
        double others = 1.0;
        for (int b = 0; b < dm; ++b)
            if (b != a)
                others *= fulls[static_cast<std::size_t>(b)];
        const double coeff = common * others;
        const double budget = target / dm;
        const double X = solve_radius(budget, [&](double x) {
            return coeff * f.axis_tail_integral(a, x);
        });
        lo[a] = -X;
        hi[a] = X;
        tail += coeff * f.axis_tail_integral(a, X);
        radius = std::max(radius, X);
    }

    SumResult r;
    const auto zs = lattice_points_in_box(scheme.generator(),
                                          Eigen::VectorXd::Zero(dm), Box(lo, hi), eopts);
    for (const auto& z : zs) {
        const Eigen::VectorXd w = scheme.generator() * z.cast<double>();
        r.value += f.eval(w, scheme.cyclic_coordinate(z));
    }
    r.terms = static_cast<long>(zs.size());
    r.radius = radius;
    r.tail = tail;
    return r;
}

// sum of fc(chi-k part) * fc_cyclic[eta] over the dual lattice, all cosets.
SumResult sum_gaussian_dual(const DualLattice& dual, const GaussianTest& fc,
                            double target, const EnumerationOptions& eopts) {
    const auto& scheme = dual.scheme();
    const int dm = scheme.embedding_dim();
    const int N = scheme.cyclic_order();
    const double rho_coset = scheme.abs_det();
    const double common = kTailSafety * rho_coset * fc.abs_amplitude() * fc.cyclic_abs_sum();

    std::vector<double> fulls(static_cast<std::size_t>(dm));
    for (int a = 0; a < dm; ++a)
        fulls[static_cast<std::size_t>(a)] = fc.axis_full_integral(a);

    Eigen::VectorXd lo(dm), hi(dm);
    double tail = 0.0, radius = 0.0;
    for (int a = 0; a < dm; ++a) {
        double others = 1.0;
        for (int b = 0; b < dm; ++b)
            if (b != a)
                others *= fulls[static_cast<std::size_t>(b)];
        const double coeff = common * others;
        const double X = solve_radius(target / dm, [&](double x) {
            return coeff * fc.axis_tail_integral(a, x);
        });
        lo[a] = -X;
        hi[a] = X;
        tail += coeff * fc.axis_tail_integral(a, X);
        radius = std::max(radius, X);
    }

    SumResult r;
    const Box box(lo, hi);
    for (int eta = 0; eta < N; ++eta) {
        const auto js = lattice_points_in_box(dual.base(), dual.coset_offset(eta), box, eopts);
        for (const auto& j : js) {
            const Eigen::VectorXd w = dual.base() * j.cast<double>() + dual.coset_offset(eta);
            r.value += fc.eval(w, eta);
        }
        r.terms += static_cast<long>(js.size());
    }
    r.radius = radius;
    r.tail = tail;
    return r;
}

// sum of g(x) * w(y, eta) over the primal lattice; internal coordinates are
// confined to the support of w, so only the physical Gaussian is truncated.
SumResult sum_gaussian_weight_primal(const CutProjectScheme& scheme, const GaussianTest& g,
                                     const WeightFunction& w, double target,
                                     const EnumerationOptions& eopts) {
    const int d = scheme.physical_dim();
    const Box hull = w.euclidean_support();
    const double rho = 1.0 / scheme.abs_det();
    const double common =
        kTailSafety * rho * g.abs_amplitude() * w.sup_bound() * std::max(hull.volume(), 0.0);

    std::vector<double> fulls(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a)
        fulls[static_cast<std::size_t>(a)] = g.axis_full_integral(a);

    Eigen::VectorXd lo(d), hi(d);
    double tail = 0.0, radius = 0.0;
    for (int a = 0; a < d; ++a) {
        double others = 1.0;
        for (int b = 0; b < d; ++b)
            if (b != a)
                others *= fulls[static_cast<std::size_t>(b)];
        const double coeff = common * others;
        const double X = solve_radius(target / std::max(1, d), [&](double x) {
            return coeff * g.axis_tail_integral(a, x);
        });
        lo[a] = -X;
        hi[a] = X;
        tail += coeff * g.axis_tail_integral(a, X);
        radius = std::max(radius, X);
    }

    SumResult r;
    const auto pts = enumerate_lattice(scheme, Box(lo, hi), hull, eopts);
    for (const auto& p : pts)
        r.value += g.eval(p.x) * w.eval(p.y_eucl, p.y_cyc);
    r.terms = static_cast<long>(pts.size());
    r.radius = radius;
    r.tail = tail;
    return r;
}

// sum of u(chi) * h_check(k, eta) over the dual lattice.  The physical dual
// coordinate carries the Gaussian truncation, the internal dual coordinate
// the catalogued polynomial envelope of h_check.
SumResult sum_gaussian_weight_dual(const DualLattice& dual, const GaussianTest& u,
                                   const WeightFunction& h, double gauss_target,
                                   double poly_target, const EnumerationOptions& eopts) {
    const auto& scheme = dual.scheme();
    const int d = scheme.physical_dim();
    const int m = scheme.internal_dim();
    const int N = scheme.cyclic_order();
    const double rho = scheme.abs_det() * N; // dual points per unit volume, all cosets

    const double h_env_full = h.ft_envelope_integral();

    std::vector<double> fulls(static_cast<std::size_t>(d));
    double u_full = u.abs_amplitude();
    for (int a = 0; a < d; ++a) {
        fulls[static_cast<std::size_t>(a)] = u.axis_full_integral(a);
        u_full *= fulls[static_cast<std::size_t>(a)];
    }

    Eigen::VectorXd lo(d + m), hi(d + m);
    double gauss_tail = 0.0, radius = 0.0;
    for (int a = 0; a < d; ++a) {
        double others = 1.0;
        for (int b = 0; b < d; ++b)
            if (b != a)
                others *= fulls[static_cast<std::size_t>(b)];
        const double coeff =
            kTailSafety * rho * u.abs_amplitude() * others * h_env_full;
        const double X = solve_radius(gauss_target / std::max(1, d), [&](double x) {
            return coeff * u.axis_tail_integral(a, x);
        });
        lo[a] = -X;
        hi[a] = X;
        gauss_tail += coeff * u.axis_tail_integral(a, X);
        radius = std::max(radius, X);
    }

    double poly_tail = 0.0;
    double K = 0.0;
    if (m > 0) {
        const double coeff = kTailSafety * rho * u_full;
        K = solve_radius(poly_target, [&](double x) {
            return coeff * h.ft_envelope_tail_outside(x);
        });
        poly_tail = coeff * h.ft_envelope_tail_outside(K);
        for (int a = 0; a < m; ++a) {
            lo[d + a] = -K;
            hi[d + a] = K;
        }
        radius = std::max(radius, K);
    }

    SumResult r;
    const Box box(lo, hi);
    for (int eta = 0; eta < N; ++eta) {
        const auto js = lattice_points_in_box(dual.base(), dual.coset_offset(eta), box, eopts);
        for (const auto& j : js) {
            const Eigen::VectorXd w = dual.base() * j.cast<double>() + dual.coset_offset(eta);
            r.value += u.eval(w.head(d)) * h.inverse_ft(w.tail(m), eta);
        }
        r.terms += static_cast<long>(js.size());
    }
    r.radius = radius;
    r.tail = gauss_tail + poly_tail;
    return r;
}

EnumerationOptions to_eopts(const PsfOptions& o) {
    EnumerationOptions e;
    e.point_cap = o.point_cap;
    e.jobs = o.jobs;
    return e;
}

std::string format_vec(const Eigen::VectorXd& v) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

void require_kl_class(const WeightFunction& h) {
    if (h.weight_class() == WeightClass::RiemannIntegrable)
        throw WeightNotInKLError(
            "generalised PSF requires a weight in K2/PK/KL; this one is only "
            "Riemann integrable");
}

} // namespace

CheckReport make_report(std::string name, Complex lhs, Complex rhs, double tol,
                        TruncationInfo truncation, std::string detail) {
    CheckReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.residual = std::abs(lhs - rhs);
    r.tolerance = tol;
    r.truncation = truncation;
    r.pass = r.residual <= tol + truncation.direct_tail + truncation.dual_tail;
    r.detail = std::move(detail);
    return r;
}

CheckReport lattice_psf_check(const CutProjectScheme& scheme, const GaussianTest& f,
                              double tol, const PsfOptions& opts) {
    if (f.dim() != scheme.embedding_dim() || f.cyclic_order() != scheme.cyclic_order())
        throw SignatureMismatchError("test function signature does not match the scheme");
    const auto eopts = to_eopts(opts);
    const DualLattice dual(scheme);
    const double dens = scheme.density();

    const SumResult L = sum_gaussian_primal(scheme, f, opts.gaussian_tail_target, eopts);
    const SumResult R = sum_gaussian_dual(dual, f.inverse_ft(),
                                          opts.gaussian_tail_target, eopts);

    TruncationInfo tr;
    tr.direct_radius = L.radius;
    tr.dual_radius = R.radius;
    tr.direct_tail = L.tail;
    tr.dual_tail = dens * R.tail;
    tr.direct_terms = L.terms;
    tr.dual_terms = R.terms;
    return make_report("lattice_psf", L.value, dens * R.value, tol, tr);
}

CheckReport weighted_psf_check(const CutProjectScheme& scheme, const WeightFunction& h,
                               const GaussianTest& g, double tol, const PsfOptions& opts) {
    if (h.internal_dim() != scheme.internal_dim() ||
        h.cyclic_order() != scheme.cyclic_order())
        throw SignatureMismatchError("weight signature does not match the scheme");
    if (g.dim() != scheme.physical_dim() || g.cyclic_order() != 1)
        throw SignatureMismatchError("test function must live on the physical side");
    require_kl_class(h);
    const auto eopts = to_eopts(opts);
    const DualLattice dual(scheme);
    const double dens = scheme.density();

    const SumResult L = sum_gaussian_weight_primal(scheme, g, h,
                                                   opts.gaussian_tail_target, eopts);
    const SumResult R = sum_gaussian_weight_dual(dual, g.inverse_ft(), h,
                                                 opts.gaussian_tail_target,
                                                 opts.internal_tail_target, eopts);

    TruncationInfo tr;
    tr.direct_radius = L.radius;
    tr.dual_radius = R.radius;
    tr.direct_tail = L.tail;
    tr.dual_tail = dens * R.tail;
    tr.direct_terms = L.terms;
    tr.dual_terms = R.terms;
    return make_report("weighted_psf", L.value, dens * R.value, tol, tr);
}

CheckReport inverse_psf_check(const CutProjectScheme& scheme, const WeightFunction& h,
                              const GaussianTest& u, double tol, const PsfOptions& opts) {
    if (h.internal_dim() != scheme.internal_dim() ||
        h.cyclic_order() != scheme.cyclic_order())
        throw SignatureMismatchError("weight signature does not match the scheme");
    if (u.dim() != scheme.physical_dim() || u.cyclic_order() != 1)
        throw SignatureMismatchError("test function must live on the dual physical side");
    require_kl_class(h);
    const auto eopts = to_eopts(opts);
    const DualLattice dual(scheme);
    const double dens0 = dual.density();

    const SumResult L = sum_gaussian_weight_dual(dual, u, h, opts.gaussian_tail_target,
                                                 opts.internal_tail_target, eopts);
    const SumResult R = sum_gaussian_weight_primal(scheme, u.inverse_ft(), h.dagger(),
                                                   opts.gaussian_tail_target, eopts);

    TruncationInfo tr;
    tr.direct_radius = R.radius;
    tr.dual_radius = L.radius;
    tr.direct_tail = dens0 * R.tail;
    tr.dual_tail = L.tail;
    tr.direct_terms = R.terms;
    tr.dual_terms = L.terms;
    return make_report("inverse_psf", L.value, dens0 * R.value, tol, tr);
}

std::vector<CheckReport> density_check(const CutProjectScheme& scheme,
                                       const WeightFunction& h,
                                       const std::vector<double>& n_list,
                                       const std::vector<Eigen::VectorXd>& t_list,
                                       double tol, const EnumerationOptions& opts) {
    if (n_list.empty() || t_list.empty())
        throw DimensionMismatchError("density sweep lists must be nonempty");
    const Complex target = scheme.density() * h.integral();
    std::vector<CheckReport> reports;
    for (double n : n_list) {
        double worst = -1.0;
        Complex worst_est{0.0, 0.0};
        for (const auto& t : t_list) {
            const auto ps = cut_model_set(scheme, h, VanHoveBox(n, t), opts);
            const Complex est = ps.total_weight() / ps.region().volume();
            const double dev = std::abs(est - target);
            if (dev > worst) {
                worst = dev;
                worst_est = est;
            }
        }
        std::ostringstream detail;
        detail << "max deviation over " << t_list.size() << " translations at n=" << n;
        reports.push_back(make_report("density(n=" + std::to_string(n) + ")", worst_est,
                                      target, tol, {}, detail.str()));
    }
    return reports;
}

std::vector<CheckReport> diffraction_check(const CutProjectScheme& scheme,
                                           const WeightFunction& h,
                                           const std::vector<Eigen::VectorXd>& chi_list,
                                           double n, double tol, double intensity_floor,
                                           const EnumerationOptions& opts) {
    if (chi_list.empty())
        throw DimensionMismatchError("diffraction check needs frequencies");
    const int d = scheme.physical_dim();
    const VanHoveBox region(n, Eigen::VectorXd::Zero(d));
    const auto ps = cut_model_set(scheme, h, region, opts);

    std::vector<CheckReport> reports;
    for (const auto& chi : chi_list) {
        const Complex fb = fourier_bohr(ps, chi);
        const double lhs = std::norm(fb);
        // theoretical intensity: the Bragg peak within matching distance, if any
        Box around(chi.array() - 0.5, chi.array() + 0.5);
        double rhs = 0.0;
        for (const auto& pk : diffraction_peaks(scheme, h, around, intensity_floor, opts)) {
            if ((pk.chi - chi).cwiseAbs().maxCoeff() <= 1e-6) {
                rhs = pk.intensity;
                break;
            }
        }
        reports.push_back(make_report("diffraction(chi=" + format_vec(chi) + ")",
                                      Complex{lhs, 0.0}, Complex{rhs, 0.0}, tol, {},
                                      rhs == 0.0 ? "off the projected dual lattice"
                                                 : "Bragg position"));
    }
    return reports;
}

CheckReport maximal_density_check(const CutProjectScheme& scheme, const WeightFunction& W,
                                  const std::vector<double>& n_list, double tol,
                                  const EnumerationOptions& opts) {
    if (n_list.empty())
        throw DimensionMismatchError("density sweep list must be nonempty");
    for (const auto& t : W.terms())
        for (const auto& a : t.axes)
            if (a.order() != 1)
                throw UnsupportedKindError("maximal density check expects an indicator window");

    // theta_H of the closed window; closing a half-open box does not change
    // the Haar measure, so the target matches the closed-window formula.
    double closure_measure = 0.0;
    for (const auto& t : W.terms()) {
        double v = std::abs(t.coeff);
        for (const auto& a : t.axes)
            v *= a.mass();
        double cyc = 0.0;
        for (const auto& c : t.cyclic)
            cyc += std::abs(c);
        closure_measure += v * cyc;
    }
    const double target = scheme.density() * closure_measure;

    std::ostringstream detail;
    detail << "sweep";
    double last_est = 0.0;
    const Eigen::VectorXd t0 = Eigen::VectorXd::Zero(scheme.physical_dim());
    for (double n : n_list) {
        const auto ps = cut_model_set(scheme, W, VanHoveBox(n, t0), opts);
        last_est = ps.total_weight().real() / ps.region().volume();
        detail << " n=" << n << ":" << last_est;
    }
    detail << " target=" << target << " deficit=" << (target - last_est);
    return make_report("maximal_density", Complex{last_est, 0.0}, Complex{target, 0.0},
                       tol, {}, detail.str());
}

CheckReport wiener_identity_check(const WeightFunction& h,
                                  const std::vector<std::pair<Eigen::VectorXd, int>>& k_list,
                                  double tol) {
    if (k_list.empty())
        throw DimensionMismatchError("wiener check needs sample frequencies");
    const WeightFunction ac = h.autocorrelation();
    double worst = -1.0;
    Complex worst_lhs{0.0, 0.0}, worst_rhs{0.0, 0.0};
    std::string worst_at;
    for (const auto& [k, eta] : k_list) {
        const Complex lhs = std::norm(h.inverse_ft(k, eta));
        const Complex rhs = ac.inverse_ft(k, eta);
        const double dev = std::abs(lhs - rhs);
        if (dev > worst) {
            worst = dev;
            worst_lhs = lhs;
            worst_rhs = rhs;
            worst_at = format_vec(k) + ",eta=" + std::to_string(eta);
        }
    }
    return make_report("wiener_identity", worst_lhs, worst_rhs, tol, {},
                       "worst of " + std::to_string(k_list.size()) + " samples at k=" +
                           worst_at);
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json j;
        j["name"] = r.name;
        j["lhs"] = {r.lhs.real(), r.lhs.imag()};
        j["rhs"] = {r.rhs.real(), r.rhs.imag()};
        j["residual"] = r.residual;
        j["tolerance"] = r.tolerance;
        j["truncation"] = {{"direct_radius", r.truncation.direct_radius},
                           {"dual_radius", r.truncation.dual_radius},
                           {"direct_tail", r.truncation.direct_tail},
                           {"dual_tail", r.truncation.dual_tail},
                           {"direct_terms", r.truncation.direct_terms},
                           {"dual_terms", r.truncation.dual_terms}};
        j["pass"] = r.pass;
        if (!r.detail.empty())
            j["detail"] = r.detail;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

} // namespace cutproject
