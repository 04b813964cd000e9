// Command-line front end: reads scheme definition files, dispatches the
// library operations and emits CSV / JSON / SVG artifacts.
//
// Exit codes: 0 success, 1 usage or runtime error, 2 failed verification.

#include <charconv>
#include <iostream>
#include <optional>
#include <sstream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cutproject/emit.hpp"
#include "cutproject/jobfile.hpp"
#include "cutproject/verify.hpp"

using namespace cutproject;

namespace {

std::vector<double> parse_doubles(const std::string& text, const std::string& what) {
    std::vector<double> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty())
            return;
        try {
            out.push_back(std::stod(cur));
        } catch (...) {
            throw ParseError("cannot parse number \"" + cur + "\" in " + what);
        }
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',' || ch == ';')
            flush();
        else if (!std::isspace(static_cast<unsigned char>(ch)))
            cur.push_back(ch);
    }
    flush();
    return out;
}

// semicolon-separated points, comma-separated coordinates
std::vector<Eigen::VectorXd> parse_vectors(const std::string& text, int dim,
                                           const std::string& what) {
    std::vector<Eigen::VectorXd> out;
    std::string chunk;
    auto flush = [&] {
        if (chunk.empty())
            return;
        const auto nums = parse_doubles(chunk, what);
        if (static_cast<int>(nums.size()) != dim)
            throw ParseError(what + " entry \"" + chunk + "\" must have " +
                             std::to_string(dim) + " coordinates");
        Eigen::VectorXd v(dim);
        for (int i = 0; i < dim; ++i)
            v[i] = nums[static_cast<std::size_t>(i)];
        out.push_back(std::move(v));
        chunk.clear();
    };
    for (char ch : text) {
        if (ch == ';')
            flush();
        else
            chunk.push_back(ch);
    }
    flush();
    return out;
}

Box parse_box(const std::string& text, int dim) {
    const auto axes = parse_vectors(text, 2, "box");
    if (static_cast<int>(axes.size()) != dim)
        throw ParseError("box \"" + text + "\" must have " + std::to_string(dim) +
                         " axes of the form lo,hi");
    Eigen::VectorXd lo(dim), hi(dim);
    for (int i = 0; i < dim; ++i) {
        lo[i] = axes[static_cast<std::size_t>(i)][0];
        hi[i] = axes[static_cast<std::size_t>(i)][1];
    }
    return Box(lo, hi);
}

struct CommonArgs {
    std::string scheme_path;
    std::string window_spec;
    std::string out_path;
    bool half_open = false;
    int jobs = 1;
    double point_cap = 0.0; // 0 = default / env
};

struct Loaded {
    CutProjectScheme scheme;
    WeightFunction window;
};

Loaded load(const CommonArgs& args) {
    SchemeFile file = parse_scheme_file(args.scheme_path);
    std::optional<WeightFunction> w;
    if (!args.window_spec.empty())
        w = parse_window_spec(args.window_spec, file.scheme.internal_dim(),
                              file.scheme.cyclic_order(), args.half_open);
    else if (file.window)
        w = file.window;
    else if (file.scheme.internal_dim() == 0) {
        std::vector<int> all(static_cast<std::size_t>(file.scheme.cyclic_order()));
        for (int i = 0; i < file.scheme.cyclic_order(); ++i)
            all[static_cast<std::size_t>(i)] = i;
        w = WeightFunction::box({}, file.scheme.cyclic_order(), all);
    }
    if (!w)
        throw ParseError("no window given: pass --window or embed one in the scheme file");
    return Loaded{std::move(file.scheme), std::move(*w)};
}

EnumerationOptions eopts(const CommonArgs& args) {
    EnumerationOptions o;
    o.jobs = args.jobs;
    if (args.point_cap > 0.0)
        o.point_cap = static_cast<long>(args.point_cap);
    return o;
}

void deliver(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

int finish_reports(const std::vector<CheckReport>& reports, const std::string& out_path) {
    deliver(out_path, reports_to_json(reports));
    for (const auto& r : reports)
        if (!r.pass)
            return 2;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cut-and-project schemes, model sets and diffraction"};
    app.require_subcommand(1);

    CommonArgs args;
    app.add_option("--jobs", args.jobs, "worker threads for enumeration kernels")
        ->capture_default_str();
    app.add_option("--point-cap", args.point_cap,
                   "override the enumeration point cap (also: CUTPROJECT_POINT_CAP)");

    auto add_common = [&](CLI::App* cmd, bool with_window = true) {
        cmd->add_option("--scheme", args.scheme_path, "scheme definition file (JSON)")
            ->required();
        if (with_window) {
            cmd->add_option("--window", args.window_spec,
                            "window spec: box:a,b | tent:w | cyclic:{0,1} "
                            "(product via '*'); defaults to the scheme file window");
            cmd->add_flag("--half-open", args.half_open,
                          "use half-open [a,b) indicator intervals");
        }
        cmd->add_option("--out", args.out_path, "output file (default: stdout)");
    };

    // --- scheme validate ------------------------------------------------
    auto* scheme_cmd = app.add_subcommand("scheme", "scheme-level operations");
    scheme_cmd->require_subcommand(1);
    auto* validate_cmd = scheme_cmd->add_subcommand("validate", "probe scheme conditions");
    double probe_radius = 20.0;
    add_common(validate_cmd, false);
    validate_cmd->add_option("--radius", probe_radius, "probe radius")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // --- points ----------------------------------------------------------
    auto* points_cmd = app.add_subcommand("points", "emit a model set as CSV");
    double region_n = 0.0;
    std::string region_t;
    add_common(points_cmd);
    points_cmd->add_option("--n", region_n, "region halfwidth")
        ->required()
        ->check(CLI::PositiveNumber);
    points_cmd->add_option("--t", region_t, "region center (default origin)");

    // --- density ----------------------------------------------------------
    auto* density_cmd = app.add_subcommand("density", "density formula sweep (JSON report)");
    std::string n_list_text = "1000";
    std::string t_list_text;
    double tol = 5e-3;
    add_common(density_cmd);
    density_cmd->add_option("--n-list", n_list_text, "comma-separated halfwidths")
        ->capture_default_str();
    density_cmd->add_option("--t-list", t_list_text,
                            "semicolon-separated translations (default origin)");
    density_cmd->add_option("--tol", tol, "pass tolerance");

    // --- autocorr ----------------------------------------------------------
    auto* autocorr_cmd = app.add_subcommand("autocorr", "autocorrelation measure as CSV");
    double ac_radius = 10.0;
    bool theoretical = false;
    add_common(autocorr_cmd);
    autocorr_cmd->add_option("--n", region_n, "region halfwidth")
        ->check(CLI::PositiveNumber);
    autocorr_cmd->add_option("--radius", ac_radius, "difference-vector radius")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    autocorr_cmd->add_flag("--theoretical", theoretical,
                           "emit the exact limit instead of the finite-sample measure");

    // --- diffract / plot ---------------------------------------------------
    auto* diffract_cmd = app.add_subcommand("diffract", "Bragg peaks as CSV");
    std::string dual_box_text = "-5,5";
    double eps = 1e-4;
    add_common(diffract_cmd);
    diffract_cmd->add_option("--dual-box", dual_box_text, "dual-side box lo,hi[;lo,hi]")
        ->capture_default_str();
    diffract_cmd->add_option("--eps", eps, "intensity threshold")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* plot_cmd = app.add_subcommand("plot", "SVG stem plot of the diffraction comb");
    std::string plot_title;
    add_common(plot_cmd);
    plot_cmd->add_option("--dual-box", dual_box_text, "dual-side box lo,hi")
        ->capture_default_str();
    plot_cmd->add_option("--eps", eps, "intensity threshold")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    plot_cmd->add_option("--title", plot_title, "plot title");

    // --- fourier-bohr -------------------------------------------------------
    auto* fb_cmd = app.add_subcommand("fourier-bohr", "Fourier-Bohr coefficients as CSV");
    std::string chi_text;
    add_common(fb_cmd);
    fb_cmd->add_option("--chi", chi_text, "frequencies x1[,y1][;x2...]")->required();
    fb_cmd->add_option("--n", region_n, "averaging halfwidth")
        ->required()
        ->check(CLI::PositiveNumber);

    // --- verify --------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "identity checks (JSON report)");
    verify_cmd->require_subcommand(1);
    std::string widths_text;
    std::map<std::string, double> verify_tol;
    auto add_verify = [&](const char* name, const char* help, double default_tol,
                          bool with_window) {
        auto* c = verify_cmd->add_subcommand(name, help);
        add_common(c, with_window);
        verify_tol[name] = default_tol;
        c->add_option("--tol", verify_tol[name], "pass tolerance")->capture_default_str();
        return c;
    };
    auto* v_psf = add_verify("psf", "lattice Poisson summation", 1e-10, false);
    v_psf->add_option("--widths", widths_text, "Gaussian axis widths w1[,w2...]");
    auto* v_wpsf = add_verify("wpsf", "generalised PSF for the weighted comb", 1e-8, true);
    auto* v_inverse = add_verify("inverse", "second transform back to the comb", 1e-8, true);
    auto* v_density = add_verify("density", "density formula sweep", 5e-3, true);
    v_density->add_option("--n-list", n_list_text, "halfwidth sweep")->capture_default_str();
    v_density->add_option("--t-list", t_list_text, "translations (default origin)");
    auto* v_diffraction = add_verify("diffraction", "Bragg intensities vs |FB|^2", 1e-2, true);
    v_diffraction->add_option("--chi", chi_text, "frequencies to test")->required();
    v_diffraction->add_option("--n", region_n, "averaging halfwidth")
        ->default_val(10000.0)
        ->check(CLI::PositiveNumber);
    auto* v_maximal = add_verify("maximal", "maximal density of an indicator window", 5e-3, true);
    v_maximal->add_option("--n-list", n_list_text, "halfwidth sweep")->capture_default_str();
    auto* v_wiener = add_verify("wiener", "|h_check|^2 equals (h*~h)_check", 1e-8, true);
    std::string k_list_text = "-2.45:0.1:50";
    v_wiener->add_option("--k-list", k_list_text,
                         "dual internal samples start:step:count or k1,k2,...")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*validate_cmd) {
            SchemeFile f = parse_scheme_file(args.scheme_path);
            auto rep = validate_scheme(f.scheme, probe_radius);
            std::ostringstream os;
            os << "{\n  \"injective\": " << (rep.injective ? "true" : "false")
               << ",\n  \"points_probed\": " << rep.points_probed
               << ",\n  \"min_physical_gap\": " << rep.min_physical_gap
               << ",\n  \"internal_covering_radius\": " << rep.internal_covering_radius
               << "\n}\n";
            deliver(args.out_path, os.str());
            return 0;
        }
        if (*points_cmd) {
            auto [scheme, window] = load(args);
            Eigen::VectorXd t = Eigen::VectorXd::Zero(scheme.physical_dim());
            if (!region_t.empty())
                t = parse_vectors(region_t, scheme.physical_dim(), "--t").at(0);
            auto ps = cut_model_set(scheme, window, VanHoveBox(region_n, t), eopts(args));
            deliver(args.out_path, points_to_csv(ps));
            return 0;
        }
        if (*density_cmd || *v_density) {
            auto [scheme, window] = load(args);
            const auto ns = parse_doubles(n_list_text, "--n-list");
            std::vector<Eigen::VectorXd> ts;
            if (t_list_text.empty())
                ts.push_back(Eigen::VectorXd::Zero(scheme.physical_dim()));
            else
                ts = parse_vectors(t_list_text, scheme.physical_dim(), "--t-list");
            const double dtol = *v_density ? verify_tol.at("density") : tol;
            return finish_reports(
                density_check(scheme, window, ns, ts, dtol, eopts(args)), args.out_path);
        }
        if (*autocorr_cmd) {
            auto [scheme, window] = load(args);
            PurePointMeasure m;
            if (theoretical) {
                m = theoretical_autocorrelation(scheme, window, ac_radius, eopts(args));
            } else {
                if (!(region_n > 0.0))
                    throw ParseError("--n is required for the finite-sample autocorrelation");
                auto ps = cut_model_set(
                    scheme, window,
                    VanHoveBox(region_n, Eigen::VectorXd::Zero(scheme.physical_dim())),
                    eopts(args));
                m = finite_autocorrelation(ps, ac_radius, args.jobs);
            }
            deliver(args.out_path, measure_to_csv(m));
            return 0;
        }
        if (*diffract_cmd || *plot_cmd) {
            auto [scheme, window] = load(args);
            const Box dual_box = parse_box(dual_box_text, scheme.physical_dim());
            auto peaks = diffraction_peaks(scheme, window, dual_box, eps, eopts(args));
            if (*plot_cmd) {
                std::vector<PurePointMeasure::Entry> entries;
                for (auto& p : peaks)
                    entries.push_back({p.chi, Complex{p.intensity, 0.0}});
                auto comb = PurePointMeasure::from_entries(std::move(entries),
                                                           PurePointMeasure::Side::dual);
                deliver(args.out_path,
                        comb_to_svg(comb, plot_title.empty() ? scheme.name() : plot_title));
            } else {
                deliver(args.out_path, peaks_to_csv(peaks, scheme.physical_dim()));
            }
            return 0;
        }
        if (*fb_cmd) {
            auto [scheme, window] = load(args);
            const auto chis = parse_vectors(chi_text, scheme.physical_dim(), "--chi");
            auto ps = cut_model_set(
                scheme, window,
                VanHoveBox(region_n, Eigen::VectorXd::Zero(scheme.physical_dim())),
                eopts(args));
            auto num = [](double v) {
                char buf[64];
                const auto res = std::to_chars(buf, buf + sizeof(buf), v);
                return std::string(buf, res.ptr);
            };
            std::string csv;
            for (int i = 0; i < scheme.physical_dim(); ++i)
                csv += "chi" + std::to_string(i) + ",";
            csv += "re_fb,im_fb\n";
            for (const auto& chi : chis) {
                const Complex fb = fourier_bohr(ps, chi);
                for (int i = 0; i < chi.size(); ++i)
                    csv += num(chi[i]) + ",";
                csv += num(fb.real()) + "," + num(fb.imag()) + "\n";
            }
            deliver(args.out_path, csv);
            return 0;
        }
        if (*v_psf) {
            SchemeFile f = parse_scheme_file(args.scheme_path);
            std::vector<GaussianAxis> axes(
                static_cast<std::size_t>(f.scheme.embedding_dim()));
            if (!widths_text.empty()) {
                const auto ws = parse_doubles(widths_text, "--widths");
                if (ws.size() != axes.size())
                    throw ParseError("--widths needs one entry per embedding axis");
                for (std::size_t i = 0; i < axes.size(); ++i)
                    axes[i].width = ws[i];
            }
            GaussianTest g(std::move(axes),
                           std::vector<Complex>(
                               static_cast<std::size_t>(f.scheme.cyclic_order()),
                               Complex{1.0, 0.0}));
            PsfOptions popts;
            popts.jobs = args.jobs;
            return finish_reports(
                {lattice_psf_check(f.scheme, g, verify_tol.at("psf"), popts)},
                args.out_path);
        }
        if (*v_wpsf || *v_inverse) {
            auto [scheme, window] = load(args);
            GaussianTest g = GaussianTest::standard(scheme.physical_dim());
            PsfOptions popts;
            popts.jobs = args.jobs;
            CheckReport rep =
                *v_wpsf ? weighted_psf_check(scheme, window, g, verify_tol.at("wpsf"), popts)
                        : inverse_psf_check(scheme, window, g, verify_tol.at("inverse"), popts);
            return finish_reports({rep}, args.out_path);
        }
        if (*v_diffraction) {
            auto [scheme, window] = load(args);
            const auto chis = parse_vectors(chi_text, scheme.physical_dim(), "--chi");
            return finish_reports(diffraction_check(scheme, window, chis, region_n,
                                                    verify_tol.at("diffraction"), 1e-8,
                                                    eopts(args)),
                                  args.out_path);
        }
        if (*v_maximal) {
            auto [scheme, window] = load(args);
            const auto ns = parse_doubles(n_list_text, "--n-list");
            return finish_reports(
                {maximal_density_check(scheme, window, ns, verify_tol.at("maximal"),
                                       eopts(args))},
                args.out_path);
        }
        if (*v_wiener) {
            auto [scheme, window] = load(args);
            std::vector<double> samples;
            const auto c1 = k_list_text.find(':');
            if (c1 != std::string::npos) {
                // start:step:count
                const auto c2 = k_list_text.find(':', c1 + 1);
                if (c2 == std::string::npos)
                    throw ParseError("--k-list range must be start:step:count");
                const double start = std::stod(k_list_text.substr(0, c1));
                const double step = std::stod(k_list_text.substr(c1 + 1, c2 - c1 - 1));
                const int count = std::stoi(k_list_text.substr(c2 + 1));
                for (int i = 0; i < count; ++i)
                    samples.push_back(start + i * step);
            } else {
                samples = parse_doubles(k_list_text, "--k-list");
            }
            std::vector<std::pair<Eigen::VectorXd, int>> ks;
            for (double k : samples)
                for (int eta = 0; eta < scheme.cyclic_order(); ++eta)
                    ks.push_back({Eigen::VectorXd::Constant(scheme.internal_dim(), k), eta});
            return finish_reports({wiener_identity_check(window, ks, verify_tol.at("wiener"))},
                                  args.out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << app.help();
    return 1;
}
