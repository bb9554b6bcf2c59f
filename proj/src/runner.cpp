#include "halfline/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <future>
#include <thread>

#include "json.hpp"

#include "halfline/fd/crank_nicolson.hpp"
#include "halfline/nls.hpp"

namespace halfline {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void write_two_column(const std::string& path, const std::vector<double>& x,
                      const std::vector<double>& y) {
    std::ofstream out(path);
    out << "# t value\n";
    char buf[80];
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.12g %.12g\n", x[i], y[i]);
        out << buf;
    }
}

void write_norms_csv(const std::string& path, const std::vector<NormReport>& reports) {
    std::ofstream out(path);
    out << "t,L2,Linf,H10,H01,Jnorm,Xnorm\n";
    char buf[200];
    for (const auto& r : reports) {
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n", r.t, r.L2,
                      r.Linf, r.H10, r.H01, r.Jnorm, r.Xnorm);
        out << buf;
    }
}

void write_norms_extended_csv(const std::string& path, const std::vector<NormReport>& reports) {
    std::ofstream out(path);
    out << "t,L2,Linf,H10,H01,Jnorm,H20,dt_norm,Xnorm,phi_weight,psi_weight,gamma1\n";
    char buf[280];
    for (const auto& r : reports) {
        std::snprintf(buf, sizeof(buf),
                      "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n",
                      r.t, r.L2, r.Linf, r.H10, r.H01, r.Jnorm, r.H20, r.dt_norm, r.Xnorm,
                      r.phi_weight, r.psi_weight, r.gamma1);
        out << buf;
    }
}

json config_to_json(const RunConfig& cfg) {
    json j;
    std::istringstream in(cfg.canonical());
    std::string line;
    while (std::getline(in, line)) {
        const auto eq = line.find(" = ");
        if (eq == std::string::npos) continue;
        j[line.substr(0, eq)] = line.substr(eq + 3);
    }
    return j;
}

json summary_to_json(const RunSummary& s, const RunConfig& cfg) {
    json j;
    j["config_hash"] = s.config_hash;
    j["label"] = s.label;
    j["status"] = s.status;
    j["wall_time_s"] = s.wall_time_s;
    j["truncation_contaminated"] = s.truncation_contaminated;
    j["all_passed"] = s.all_passed();
    if (s.no_checks_requested) j["note"] = "no checks requested";
    j["checks"] = json::array();
    for (const auto& c : s.checks) {
        json cj;
        cj["name"] = c.name;
        cj["value"] = c.value;
        cj["threshold"] = c.threshold;
        cj["pass"] = c.pass;
        if (!c.note.empty()) cj["note"] = c.note;
        j["checks"].push_back(cj);
    }
    j["scalars"] = s.scalars;
    j["config"] = config_to_json(cfg);
    return j;
}

void write_summary(const std::string& dir, const RunSummary& s, const RunConfig& cfg) {
    std::ofstream out(dir + "/summary.json");
    out << summary_to_json(s, cfg).dump(2) << "\n";
}

double expected_decay_exponent(const RunConfig& cfg) {
    if (cfg.has("analysis", "decay_expected")) return cfg.get_double("analysis", "decay_expected");
    const std::string fam = cfg.get_string("boundary", "family", std::string("zero"));
    if (fam == "theorem7" || fam == "theorem8")
        return 0.5 - cfg.get_double("boundary", "beta", 0.85);
    return -0.5;
}

}  // namespace

void write_snapshots(const std::string& path, const Trajectory& traj, bool binary) {
    if (binary) {
        std::ofstream out(path, std::ios::binary);
        out.write("HLSNAP01", 8);
        const std::uint64_t n = traj.snapshots.empty() ? 0 : traj.snapshots.front().u.size();
        const double L = traj.snapshots.empty() ? 0.0 : traj.snapshots.front().u.grid().length();
        const std::uint64_t count = traj.snapshots.size();
        out.write(reinterpret_cast<const char*>(&n), 8);
        out.write(reinterpret_cast<const char*>(&L), 8);
        out.write(reinterpret_cast<const char*>(&count), 8);
        for (const auto& s : traj.snapshots) {
            out.write(reinterpret_cast<const char*>(&s.t), 8);
            for (const auto& v : s.u.values()) {
                const double re = v.real(), im = v.imag();
                out.write(reinterpret_cast<const char*>(&re), 8);
                out.write(reinterpret_cast<const char*>(&im), 8);
            }
        }
        return;
    }
    std::ofstream out(path);
    out << "HLSNAP01 text\n";
    const std::uint64_t n = traj.snapshots.empty() ? 0 : traj.snapshots.front().u.size();
    const double L = traj.snapshots.empty() ? 0.0 : traj.snapshots.front().u.grid().length();
    out << n << " " << traj.snapshots.size() << " ";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g\n", L);
    out << buf;
    for (const auto& s : traj.snapshots) {
        std::snprintf(buf, sizeof(buf), "%.17g\n", s.t);
        out << buf;
        for (const auto& v : s.u.values()) {
            std::snprintf(buf, sizeof(buf), "%.17g %.17g\n", v.real(), v.imag());
            out << buf;
        }
    }
}

Trajectory read_snapshots(const std::string& path, GridPtr g) {
    Trajectory traj;
    std::ifstream probe(path, std::ios::binary);
    if (!probe) throw ConfigError("cannot open snapshot file '" + path + "'");
    char magic[9] = {0};
    probe.read(magic, 8);
    if (std::strncmp(magic, "HLSNAP01", 8) != 0)
        throw ConfigError("'" + path + "' is not a snapshot container");
    char next = static_cast<char>(probe.peek());
    if (next == ' ') {
        // text form
        std::ifstream in(path);
        std::string header;
        std::getline(in, header);
        std::uint64_t n = 0, count = 0;
        double L = 0.0;
        in >> n >> count >> L;
        if (n != g->size()) throw ConfigError("snapshot length does not match the grid");
        for (std::uint64_t i = 0; i < count; ++i) {
            Snapshot s;
            in >> s.t;
            s.u = ComplexField(g, Rep::physical, s.t);
            for (std::uint64_t j = 0; j < n; ++j) {
                double re, im;
                in >> re >> im;
                s.u[j] = cplx(re, im);
            }
            traj.snapshots.push_back(std::move(s));
        }
        return traj;
    }
    std::uint64_t n = 0, count = 0;
    double L = 0.0;
    probe.read(reinterpret_cast<char*>(&n), 8);
    probe.read(reinterpret_cast<char*>(&L), 8);
    probe.read(reinterpret_cast<char*>(&count), 8);
    if (n != g->size()) throw ConfigError("snapshot length does not match the grid");
    for (std::uint64_t i = 0; i < count; ++i) {
        Snapshot s;
        probe.read(reinterpret_cast<char*>(&s.t), 8);
        s.u = ComplexField(g, Rep::physical, s.t);
        for (std::uint64_t j = 0; j < n; ++j) {
            double re, im;
            probe.read(reinterpret_cast<char*>(&re), 8);
            probe.read(reinterpret_cast<char*>(&im), 8);
            s.u[j] = cplx(re, im);
        }
        traj.snapshots.push_back(std::move(s));
    }
    return traj;
}

RunArtifacts run_experiment(const RunConfig& cfg) {
    const auto t_start = std::chrono::steady_clock::now();
    cfg.validate();

    RunArtifacts art;
    RunSummary& sum = art.summary;
    sum.config_hash = cfg.config_hash();
    sum.label = cfg.get_string("run", "label", cfg.origin());

    GridPtr g = cfg.build_grid();
    ModelParams mp = cfg.build_model(g);
    BoundaryData h = cfg.build_boundary();

    SolveOptions opt;
    opt.T = cfg.T();
    opt.dt = cfg.dt();
    opt.snapshot_stride = cfg.snapshot_stride();

    const std::string method = cfg.get_string("run", "method", std::string("stepped"));
    art.traj = solve(mp, h, opt,
                     method == "picard" ? SolveMethod::picard : SolveMethod::stepped_duhamel);
    if (art.traj.status == RunStatus::aborted_unstable) sum.status = "aborted-unstable";
    sum.truncation_contaminated = art.traj.truncation_contaminated;

    NormContext nctx;
    const double eps = cfg.get_double("initial", "epsilon", 1e-2);
    nctx.gamma = cfg.get_double("analysis", "gamma", std::pow(std::max(eps, 1e-12), 1.0 / 3.0));
    nctx.eps = eps;
    nctx.p = mp.p;
    if (cfg.has("boundary", "beta")) nctx.beta = cfg.get_double("boundary", "beta");
    art.norms = compute_norms(art.traj, nctx);

    const std::string dir = cfg.output_directory();
    fs::create_directories(dir);
    fs::create_directories(dir + "/plotdata");
    write_norms_csv(dir + "/norms.csv", art.norms);
    write_norms_extended_csv(dir + "/norms_extended.csv", art.norms);

    std::vector<double> ts, linf, l2;
    for (const auto& r : art.norms) {
        ts.push_back(r.t);
        linf.push_back(r.Linf);
        l2.push_back(r.L2);
    }
    write_two_column(dir + "/plotdata/linf.dat", ts, linf);
    write_two_column(dir + "/plotdata/l2.dat", ts, l2);

    if (cfg.get_bool("output", "snapshots", true))
        write_snapshots(
            dir + (cfg.get_string("output", "snapshot_format", std::string("binary")) == "text"
                       ? "/snapshots.txt"
                       : "/snapshots.snp"),
            art.traj, cfg.get_string("output", "snapshot_format", std::string("binary")) != "text");

    bool any_check = false;

    // stability + truncation are always surfaced
    sum.checks.push_back({"run_completed", sum.status == "ok" ? 1.0 : 0.0, 1.0,
                          sum.status == "ok", ""});
    sum.checks.push_back({"truncation_clean", art.traj.max_tail_fraction, 1e-6,
                          !sum.truncation_contaminated, "mass fraction in last 10% of nodes"});

    if (cfg.get_bool("analysis", "decay_fit", false)) {
        any_check = true;
        const double lo = cfg.get_double("analysis", "decay_window_lo", 10.0);
        const double hi = cfg.get_double("analysis", "decay_window_hi", 100.0);
        const double tol = cfg.get_double("analysis", "decay_tolerance", 0.1);
        const double expected = expected_decay_exponent(cfg);
        DecayFit fit = fit_decay_exponent(ts, linf, lo, hi);
        sum.scalars["linf_decay_slope"] = fit.slope;
        sum.scalars["linf_decay_expected"] = expected;
        sum.scalars["linf_decay_conf"] = fit.conf_halfwidth;
        sum.checks.push_back({"linf_decay_exponent", fit.slope, tol,
                              std::abs(fit.slope - expected) <= tol,
                              "fitted vs expected " + std::to_string(expected)});
    }

    if (cfg.get_bool("checks", "mass_conservation", false)) {
        any_check = true;
        const double tol = cfg.get_double("checks", "mass_drift_tol", 1e-6);
        const double m0 = art.norms.front().L2;
        double drift = 0.0;
        for (const auto& r : art.norms)
            if (r.t <= 10.0 + 1e-9) drift = std::max(drift, std::abs(r.L2 - m0) / m0);
        sum.scalars["mass_drift"] = drift;
        sum.checks.push_back({"mass_conservation", drift, tol, drift <= tol, "relative L2 drift"});
    }

    if (cfg.get_bool("analysis", "oracle_compare", false)) {
        any_check = true;
        fd::FDConfig fdc;
        fdc.grid = g;
        fdc.dt = cfg.get_double("oracle", "dt", opt.dt);
        fdc.params = mp;
        fdc.boundary = h;
        fdc.snapshot_stride = opt.snapshot_stride *
                              std::max<std::size_t>(1, std::llround(opt.dt / fdc.dt));
        Trajectory fd_traj = fd::crank_nicolson_robin(fdc, opt.T);
        double worst = 0.0;
        for (const auto& s : art.traj.snapshots) {
            if (s.t == 0.0) continue;
            for (const auto& f : fd_traj.snapshots) {
                if (std::abs(f.t - s.t) < 1e-9) {
                    worst = std::max(worst, rel_l2_distance(s.u, f.u));
                    break;
                }
            }
        }
        const double tol = cfg.get_double("checks", "oracle_rel_tol", 1e-3);
        sum.scalars["oracle_rel_l2"] = worst;
        sum.checks.push_back({"oracle_agreement", worst, tol, worst <= tol,
                              "max relative L2 distance, spectral vs Crank-Nicolson"});
    }

    if (cfg.get_bool("analysis", "scattering", false)) {
        any_check = true;
        ScatterState sc = extract_scattering_profile(art.traj, mp, h,
                                                     std::min(20.0, opt.T));
        std::vector<double> abs_psi(sc.xi.size());
        for (std::size_t k = 0; k < sc.xi.size(); ++k) abs_psi[k] = std::abs(sc.psi_plus[k]);
        write_two_column(dir + "/plotdata/psi_abs.dat", sc.xi, abs_psi);

        if (mp.lambda == cplx(0.0, 0.0)) {
            double var = 0.0;
            for (const auto& row : sc.psi_profile)
                for (std::size_t k = 0; k < row.size(); ++k)
                    var = std::max(var, std::abs(row[k] - sc.psi_profile.front()[k]));
            sum.scalars["psi_variation"] = var;
            sum.checks.push_back({"scattering_psi_constant", var, 1e-8, var <= 1e-8,
                                  "interaction profile variation, linear control"});
        } else {
            // |B(t, xi)| decay at a unit-frequency probe
            std::size_t kp = 0;
            for (std::size_t k = 0; k < sc.xi.size(); ++k)
                if (std::abs(sc.xi[k] - 1.0) < std::abs(sc.xi[kp] - 1.0)) kp = k;
            std::vector<double> bt, bv;
            for (std::size_t i = 0; i < sc.times.size(); ++i) {
                if (sc.times[i] < 1.0) continue;
                bt.push_back(sc.times[i]);
                bv.push_back(std::abs(sc.B_tail[i][kp]));
            }
            if (bt.size() >= 10) {
                DecayFit bfit = fit_decay_exponent(bt, bv, bt.front(), bt.back());
                sum.scalars["B_tail_slope"] = bfit.slope;
                sum.checks.push_back({"scattering_B_decay", bfit.slope, -0.5,
                                      bfit.slope <= -0.5, "fitted decay of |B(t,xi~1)|"});
            }
            sum.scalars["psi_cauchy_increment"] = sc.cauchy_increment;
        }
    }

    if (cfg.get_bool("analysis", "theorem8_profile", false)) {
        any_check = true;
        std::vector<double> times = cfg.get_double_list("analysis", "profile_times");
        if (times.empty()) times = {50.0, 200.0};
        std::vector<double> avail;
        for (double t : times) {
            double best = art.traj.snapshots.front().t;
            for (const auto& s : art.traj.snapshots)
                if (std::abs(s.t - t) < std::abs(best - t)) best = s.t;
            avail.push_back(best);
        }
        const double A = cfg.get_double("boundary", "amplitude", 1e-2);
        const double beta = cfg.get_double("boundary", "beta", 0.85);
        ProfileSelection sel =
            select_lambda_variant(art.traj, A, beta, mp.alpha, avail);
        static const char* names[3] = {"statement", "section7", "derived"};
        sum.scalars["profile_variant"] = static_cast<double>(sel.best_index);
        for (std::size_t v = 0; v < sel.checks.size(); ++v) {
            const auto& pc = sel.checks[v];
            sum.scalars[std::string("profile_first_") + names[v]] = pc.sup_diff.front();
            sum.scalars[std::string("profile_last_") + names[v]] = pc.sup_diff.back();
            std::vector<double> xs = pc.times, ys = pc.sup_diff;
            write_two_column(dir + "/plotdata/profile_diff_" + names[v] + ".dat", xs, ys);
        }
        const auto& best = sel.checks[sel.best_index];
        sum.checks.push_back({"theorem8_profile_shrinks", best.sup_diff.back(),
                              best.sup_diff.front(), best.sup_diff.back() < best.sup_diff.front(),
                              std::string("selected variant: ") + names[sel.best_index]});
    }

    sum.no_checks_requested = !any_check;
    sum.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    write_summary(dir, sum, cfg);
    return art;
}

RunSummary compare_solvers(const RunConfig& cfg) {
    const auto t_start = std::chrono::steady_clock::now();
    cfg.validate();
    RunSummary sum;
    sum.config_hash = cfg.config_hash();
    sum.label = "compare:" + cfg.get_string("run", "label", cfg.origin());

    const std::string dir = cfg.output_directory();
    fs::create_directories(dir);

    GridPtr g = cfg.build_grid();
    ModelParams mp = cfg.build_model(g);
    BoundaryData h = cfg.build_boundary();
    SolveOptions opt;
    opt.T = cfg.T();
    opt.dt = cfg.dt();
    opt.snapshot_stride = cfg.snapshot_stride();

    Trajectory sp = solve_stepped(mp, h, opt);
    fd::FDConfig fdc;
    fdc.grid = g;
    fdc.dt = cfg.get_double("oracle", "dt", opt.dt);
    fdc.params = mp;
    fdc.boundary = h;
    fdc.snapshot_stride =
        opt.snapshot_stride * std::max<std::size_t>(1, std::llround(opt.dt / fdc.dt));
    Trajectory fdt = fd::crank_nicolson_robin(fdc, opt.T);

    std::ofstream csv(dir + "/comparison.csv");
    csv << "t,rel_l2,rel_linf\n";
    double worst = 0.0;
    char buf[120];
    for (const auto& s : sp.snapshots) {
        for (const auto& f : fdt.snapshots) {
            if (std::abs(f.t - s.t) > 1e-9) continue;
            const double rl2 = s.t == 0.0 ? 0.0 : rel_l2_distance(s.u, f.u);
            double dinf = 0.0, ninf = 0.0;
            for (std::size_t j = 0; j < s.u.size(); ++j) {
                dinf = std::max(dinf, std::abs(s.u[j] - f.u[j]));
                ninf = std::max(ninf, std::abs(f.u[j]));
            }
            const double rli = (s.t == 0.0 || ninf == 0.0) ? 0.0 : dinf / ninf;
            std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g\n", s.t, rl2, rli);
            csv << buf;
            worst = std::max(worst, rl2);
        }
    }

    // Robin residual series for both paths
    {
        const auto rs = fd::robin_residual(sp, h, mp.alpha);
        const auto rf = fd::robin_residual(fdt, h, mp.alpha);
        std::ofstream rr(dir + "/robin_residual.csv");
        rr << "t,spectral,fd\n";
        for (std::size_t i = 0; i < sp.snapshots.size(); ++i) {
            double fd_val = std::numeric_limits<double>::quiet_NaN();
            for (std::size_t jj = 0; jj < fdt.snapshots.size(); ++jj)
                if (std::abs(fdt.snapshots[jj].t - sp.snapshots[i].t) < 1e-9) fd_val = rf[jj];
            std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g\n", sp.snapshots[i].t, rs[i],
                          fd_val);
            rr << buf;
        }
        double rmax = 0.0;
        for (double v : rs) rmax = std::max(rmax, v);
        for (double v : rf) rmax = std::max(rmax, v);
        sum.scalars["robin_residual_max"] = rmax;
    }

    const double tol = cfg.get_double("checks", "oracle_rel_tol", 1e-3);
    sum.scalars["rel_l2_max"] = worst;
    sum.checks.push_back({"solver_agreement", worst, tol, worst <= tol, ""});

    // convergence table: (dx, dt) halving, error against the next-finer level
    {
        std::ofstream cv(dir + "/convergence.csv");
        cv << "solver,level,dt,N,err_vs_finer,order\n";
        const long N0 = cfg.get_int("grid", "N", 1023);
        const double L = cfg.get_double("grid", "L", 40.0);
        auto nested = [&](int lvl) { return (N0 + 1) * (1L << lvl) - 1; };

        for (int leg = 0; leg < 2; ++leg) {
            std::vector<ComplexField> finals;
            std::vector<double> dts;
            for (int lvl = 0; lvl < 3; ++lvl) {
                GridPtr gl = make_grid(L, static_cast<std::size_t>(nested(lvl)));
                ModelParams ml = mp;
                ml.u0 = make_initial_datum(
                    gl, cfg.get_string("initial", "family", std::string("gaussian-odd")),
                    cfg.get_double("initial", "epsilon", 1e-2),
                    cfg.get_double("initial", "width", 1.0),
                    cfg.get_double("initial", "center", 3.0));
                const double dt_l = opt.dt / (1 << lvl);
                dts.push_back(dt_l);
                if (leg == 0) {
                    SolveOptions ol = opt;
                    ol.dt = dt_l;
                    ol.snapshot_stride = 1u << 30;  // final snapshot only
                    finals.push_back(solve_stepped(ml, h, ol).back().u);
                } else {
                    fd::FDConfig fl;
                    fl.grid = gl;
                    fl.dt = dt_l;
                    fl.params = ml;
                    fl.boundary = h;
                    fl.snapshot_stride = 1u << 30;
                    finals.push_back(fd::crank_nicolson_robin(fl, opt.T).back().u);
                }
            }
            // restrict the finer field to the coarser nodes: x_j = (j+1)dx,
            // fine index of coarse j is 2j+1
            auto err = [&](const ComplexField& coarse, const ComplexField& fine) {
                double s2 = 0.0;
                for (std::size_t j = 0; j < coarse.size(); ++j)
                    s2 += std::norm(coarse[j] - fine[2 * j + 1]);
                return std::sqrt(s2 * coarse.grid().dx());
            };
            const double e0 = err(finals[0], finals[1]);
            const double e1 = err(finals[1], finals[2]);
            const double order = std::log2(e0 / e1);
            const char* name = leg == 0 ? "spectral" : "fd";
            std::snprintf(buf, sizeof(buf), "%s,0,%.12g,%ld,%.12g,\n", name, dts[0], nested(0),
                          e0);
            cv << buf;
            std::snprintf(buf, sizeof(buf), "%s,1,%.12g,%ld,%.12g,%.6g\n", name, dts[1],
                          nested(1), e1, order);
            cv << buf;
            sum.scalars[std::string(name) + "_order"] = order;
        }
    }

    sum.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    write_summary(dir, sum, cfg);
    return sum;
}

RunSummary sweep(const RunConfig& cfg) {
    const auto t_start = std::chrono::steady_clock::now();
    RunSummary sum;
    sum.config_hash = cfg.config_hash();
    sum.label = "sweep:" + cfg.get_string("run", "label", cfg.origin());

    auto one_or = [&](std::vector<double> v, double fb) {
        if (v.empty()) v.push_back(fb);
        return v;
    };
    const auto betas = one_or(cfg.get_double_list("sweep", "beta_values"),
                              cfg.get_double("boundary", "beta", 0.85));
    const auto ps = one_or(cfg.get_double_list("sweep", "p_values"),
                           cfg.get_double("model", "p", 3.0));
    const auto epss = one_or(cfg.get_double_list("sweep", "epsilon_values"),
                             cfg.get_double("boundary", "epsilon", 1e-2));
    const auto alphas = one_or(cfg.get_double_list("sweep", "alpha_values"),
                               cfg.get_double("model", "alpha", -1.0));

    const std::size_t cells = betas.size() * ps.size() * epss.size() * alphas.size();
    const std::size_t budget =
        static_cast<std::size_t>(cfg.get_int("sweep", "cell_budget", 64));
    if (cells > budget)
        throw ConfigError("sweep grid has " + std::to_string(cells) +
                          " cells, over the budget of " + std::to_string(budget));

    struct Cell {
        double beta, p, eps, alpha;
        double fitted = 0.0, predicted = 0.0;
        bool ok = false;
    };
    std::vector<Cell> grid_cells;
    for (double b : betas)
        for (double p : ps)
            for (double e : epss)
                for (double a : alphas) grid_cells.push_back({b, p, e, a, 0, 0, false});

    auto run_cell = [&](Cell cell) {
        RunConfig c = cfg;
        c.set("boundary", "beta", std::to_string(cell.beta));
        c.set("boundary", "epsilon", std::to_string(cell.eps));
        c.set("model", "p", std::to_string(cell.p));
        c.set("model", "alpha", std::to_string(cell.alpha));
        c.set("output", "directory", cfg.output_directory() + "/cell_ignored");
        c.set("output", "snapshots", "false");
        c.set("analysis", "theorem8_profile", "false");
        c.set("analysis", "scattering", "false");
        c.set("analysis", "decay_fit", "false");

        GridPtr g = c.build_grid();
        ModelParams mp = c.build_model(g);
        BoundaryData h = c.build_boundary();
        SolveOptions opt;
        opt.T = c.T();
        opt.dt = c.dt();
        opt.snapshot_stride = c.snapshot_stride();
        Trajectory traj = solve_stepped(mp, h, opt);
        std::vector<double> ts, linf;
        for (const auto& s : traj.snapshots) {
            ts.push_back(s.t);
            double m = 0.0;
            for (const auto& v : s.u.values()) m = std::max(m, std::abs(v));
            linf.push_back(m);
        }
        const double lo = c.get_double("analysis", "decay_window_lo", 10.0);
        const double hi = c.get_double("analysis", "decay_window_hi", 100.0);
        cell.fitted = fit_decay_exponent(ts, linf, lo, hi).slope;
        const std::string fam = c.get_string("boundary", "family", std::string("theorem7"));
        cell.predicted = (fam == "theorem4" || (mp.p == 3.0 && fam != "theorem7" &&
                                                fam != "theorem8"))
                             ? -0.5
                             : 0.5 - cell.beta;
        cell.ok = true;
        return cell;
    };

    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), 8);
    std::vector<Cell> results(grid_cells.size());
    std::size_t next = 0;
    while (next < grid_cells.size()) {
        std::vector<std::future<Cell>> batch;
        for (std::size_t w = 0; w < workers && next + w < grid_cells.size(); ++w)
            batch.push_back(
                std::async(std::launch::async, run_cell, grid_cells[next + w]));
        for (std::size_t w = 0; w < batch.size(); ++w) results[next + w] = batch[w].get();
        next += batch.size();
    }

    const std::string dir = cfg.output_directory();
    fs::create_directories(dir);
    std::ofstream csv(dir + "/sweep.csv");
    csv << "beta,p,epsilon,alpha,fitted_exponent,predicted_exponent,abs_deviation\n";
    char buf[160];
    const double tol = cfg.get_double("analysis", "decay_tolerance", 0.1);
    bool all_ok = true;
    double worst_dev = 0.0;
    for (const auto& cell : results) {
        const double dev = std::abs(cell.fitted - cell.predicted);
        worst_dev = std::max(worst_dev, dev);
        all_ok = all_ok && dev <= tol;
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n", cell.beta,
                      cell.p, cell.eps, cell.alpha, cell.fitted, cell.predicted, dev);
        csv << buf;
    }
    sum.scalars["worst_deviation"] = worst_dev;
    sum.checks.push_back({"sweep_exponents", worst_dev, tol, all_ok,
                          "max |fitted - predicted| over cells"});
    sum.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    write_summary(dir, sum, cfg);
    return sum;
}

}  // namespace halfline
