// paramd: molecular-dynamics engine with multilevel-summation electrostatics,
// parareal time integration, and a flop-count / scheduler model.
//
// Subcommands: gen, simulate, compare, parareal, cost, schedule.
// Exit codes: 0 ok, 2 configuration error, 3 runtime error, 4 non-convergence.

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <memory>
#include <string>

#include "paramd/cost_model.hpp"
#include "paramd/csv.hpp"
#include "paramd/electrostatics.hpp"
#include "paramd/errors.hpp"
#include "paramd/force_field.hpp"
#include "paramd/generate.hpp"
#include "paramd/integrate.hpp"
#include "paramd/msm.hpp"
#include "paramd/parareal.hpp"
#include "paramd/schedule.hpp"
#include "paramd/system.hpp"
#include "paramd/xyz_io.hpp"

namespace fs = std::filesystem;
using namespace paramd;

namespace {

struct CommonOpts {
    std::uint64_t seed = 1;
    int threads = 1;
    std::string out_dir = ".";
    std::string units = "physical";

    UnitsConfig units_config() const {
        if (units == "physical") return UnitsConfig::physical();
        if (units == "reduced") return UnitsConfig::reduced();
        throw ConfigError("unknown units preset '" + units + "'");
    }
    fs::path out(const std::string& name) const {
        fs::create_directories(out_dir);
        return fs::path(out_dir) / name;
    }
};

struct FieldOpts {
    double cutoff = 12.0;
    double wolf_alpha = 0.2;
    double msm_a = 8.0;
    double msm_h = 2.0;
    int msm_levels = 2;
    double repulsion_eps = 0.0;  // > 0 enables the stabilizing pair repulsion
    double repulsion_sigma = 1.0;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--cutoff", cutoff, "simple-cutoff / wolf cutoff distance [A]");
        cmd->add_option("--wolf-alpha", wolf_alpha, "wolf damping parameter [1/A]");
        cmd->add_option("--a", msm_a, "MSM cutoff a [A]");
        cmd->add_option("--h", msm_h, "MSM finest grid spacing h [A]");
        cmd->add_option("--levels", msm_levels, "MSM grid levels l");
        cmd->add_option("--repulsion-eps", repulsion_eps,
                        "enable pair repulsion with this epsilon");
        cmd->add_option("--repulsion-sigma", repulsion_sigma, "pair repulsion sigma [A]");
    }

    std::shared_ptr<const ForceField> build(const std::string& kind,
                                            const UnitsConfig& units) const {
        std::shared_ptr<const ForceField> ff;
        if (kind == "direct") {
            ff = std::make_shared<DirectCoulombField>(units);
        } else if (kind == "cutoff") {
            ff = std::make_shared<SimpleCutoffField>(CutoffParams{cutoff, {}}, units);
        } else if (kind == "wolf") {
            ff = std::make_shared<WolfField>(CutoffParams{cutoff, wolf_alpha}, units);
        } else if (kind == "msm") {
            MsmConfig cfg;
            cfg.cutoff_a = msm_a;
            cfg.spacing_h = msm_h;
            cfg.levels_l = msm_levels;
            cfg.validate();
            ff = std::make_shared<MsmField>(cfg, units);
        } else {
            throw ConfigError("unknown force field '" + kind + "'");
        }
        if (repulsion_eps > 0.0)
            ff = std::make_shared<PairRepulsionOverlay>(ff, repulsion_eps, repulsion_sigma);
        return ff;
    }
};

void check_finite(const ParticleSystem& s, long long step) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!finite(s.positions[i]) || !finite(s.velocities[i]))
            throw RuntimeFault("non-finite state at step " + std::to_string(step) +
                               ", particle " + std::to_string(i));
}

int cmd_gen(const CommonOpts& common, std::size_t n, const std::vector<double>& box_in,
            const std::string& scheme, double min_sep, const std::string& out_file) {
    Vec3 box;
    if (box_in.size() == 1)
        box = {box_in[0], box_in[0], box_in[0]};
    else if (box_in.size() == 3)
        box = {box_in[0], box_in[1], box_in[2]};
    else
        throw ConfigError("--box takes 1 or 3 values");
    ParticleSystem s = generate_random_system(n, box, charge_scheme_from_string(scheme), min_sep,
                                              common.seed);
    save_system(s, out_file);
    std::cout << "wrote " << s.size() << " particles to " << out_file << "\n";
    return 0;
}

int cmd_simulate(const CommonOpts& common, const FieldOpts& fields, const std::string& input,
                 const std::string& kind, long long steps, double dt, long long log_every,
                 long long traj_every) {
    const UnitsConfig units = common.units_config();
    auto ff = fields.build(kind, units);
    if (steps < 0) throw ConfigError("--steps must be >= 0");
    if (!(dt > 0.0)) throw ConfigError("--dt must be > 0");
    if (log_every < 1 || traj_every < 1) throw ConfigError("logging intervals must be >= 1");
    ParticleSystem s = load_system(input);

    CsvWriter energy(common.out(kind + "_energy.csv").string());
    energy.row({"step", "time_fs", "kinetic", "potential", "total"});
    TrajectoryWriter traj(common.out(kind + "_trajectory.xyz").string());

    auto log_state = [&](long long step) {
        const EnergyReport rep = energy_report(s, *ff, units);
        energy.row({std::to_string(step), csv_num(step * dt), csv_num(rep.kinetic),
                    csv_num(rep.potential), csv_num(rep.total)});
    };
    log_state(0);
    traj.write_frame(s, 0, 0.0);
    for (long long step = 1; step <= steps; ++step) {
        s = verlet_step(s, *ff, dt, units);
        check_finite(s, step);
        if (step % log_every == 0 || step == steps) log_state(step);
        if (step % traj_every == 0 || step == steps) traj.write_frame(s, step, step * dt);
    }
    std::cout << "simulated " << steps << " steps with " << ff->name() << "\n";
    return 0;
}

int cmd_compare(const CommonOpts& common, const FieldOpts& fields, const std::string& input,
                std::vector<std::string> kinds, bool dump_grids) {
    const UnitsConfig units = common.units_config();
    ParticleSystem s = load_system(input);
    const PotentialResult ref = direct_coulomb(s, units);

    CsvWriter per(common.out("compare.csv").string());
    per.row({"field", "index", "u_ref", "u_test", "u_rel_err", "f_rel_err"});
    CsvWriter summary(common.out("compare_summary.csv").string());
    summary.row({"field", "energy_ref", "energy_test", "energy_rel_err", "potential_rms_rel_err",
                 "force_rms_rel_err"});

    double u_scale = 0.0, f_scale = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        u_scale = std::max(u_scale, std::fabs(ref.per_particle_potential[i]));
        f_scale = std::max(f_scale, norm(ref.per_particle_force[i]));
    }
    if (u_scale == 0.0) u_scale = 1.0;
    if (f_scale == 0.0) f_scale = 1.0;

    for (const std::string& kind : kinds) {
        auto ff = fields.build(kind, units);
        PotentialResult got;
        if (kind == "msm" && dump_grids) {
            MsmConfig cfg;
            cfg.cutoff_a = fields.msm_a;
            cfg.spacing_h = fields.msm_h;
            cfg.levels_l = fields.msm_levels;
            MsmDiagnostics diag;
            got = msm_potential(s, cfg, units, &diag);
            for (const MsmGridLevel& lvl : diag.levels) {
                CsvWriter grid(
                    common.out("grid_level_" + std::to_string(lvl.level) + ".csv").string());
                grid.row({"i", "j", "k", "charge", "potential"});
                for (int i = 0; i < lvl.dims[0]; ++i)
                    for (int j = 0; j < lvl.dims[1]; ++j)
                        for (int k = 0; k < lvl.dims[2]; ++k)
                            grid.row({std::to_string(i), std::to_string(j), std::to_string(k),
                                      csv_num(lvl.charge.at(i, j, k)),
                                      csv_num(lvl.potential.at(i, j, k))});
            }
        } else {
            got = ff->evaluate(s);
        }
        double du2 = 0.0, u2 = 0.0, df2 = 0.0, fr2 = 0.0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            const double du = got.per_particle_potential[i] - ref.per_particle_potential[i];
            const Vec3 df = got.per_particle_force[i] - ref.per_particle_force[i];
            du2 += du * du;
            u2 += ref.per_particle_potential[i] * ref.per_particle_potential[i];
            df2 += norm2(df);
            fr2 += norm2(ref.per_particle_force[i]);
            per.row({kind, std::to_string(i), csv_num(ref.per_particle_potential[i]),
                     csv_num(got.per_particle_potential[i]), csv_num(std::fabs(du) / u_scale),
                     csv_num(norm(df) / f_scale)});
        }
        const double e_rel = std::fabs(got.total_energy - ref.total_energy) /
                             std::max(1e-300, std::fabs(ref.total_energy));
        summary.row({kind, csv_num(ref.total_energy), csv_num(got.total_energy), csv_num(e_rel),
                     csv_num(std::sqrt(du2 / std::max(1e-300, u2))),
                     csv_num(std::sqrt(df2 / std::max(1e-300, fr2)))});
        std::cout << kind << ": total energy rel err " << e_rel << "\n";
    }
    return 0;
}

int cmd_parareal(const CommonOpts& common, const FieldOpts& fields, const std::string& input,
                 const std::string& fine_kind, const std::string& coarse_kind, double dt,
                 int steps_per_slice, int window, int max_iter, double tol, int points,
                 bool verify, double skip_threshold, bool no_short_circuit) {
    const UnitsConfig units = common.units_config();
    ParticleSystem v = load_system(input);

    PararealConfig cfg;
    cfg.window_points = window;
    cfg.max_iter = max_iter;
    cfg.tol = tol;
    cfg.units = units;
    cfg.fine = {fields.build(fine_kind, units), dt, steps_per_slice};
    cfg.coarse = {fields.build(coarse_kind, units), dt, steps_per_slice};
    cfg.short_circuit = !no_short_circuit;
    if (skip_threshold >= 0.0) cfg.skip_threshold = skip_threshold;
    cfg.validate();

    std::unique_ptr<Executor> exec;
    if (common.threads > 1)
        exec = std::make_unique<AsyncExecutor>(common.threads);
    else
        exec = std::make_unique<SequentialExecutor>();

    auto write_report = [&](const ConvergenceReport& rep) {
        CsvWriter conv(common.out("convergence.csv").string());
        conv.row({"window", "point", "iteration", "delta_rms", "converged"});
        for (const ConvergenceRow& r : rep.rows)
            conv.row({std::to_string(r.window), std::to_string(r.point),
                      std::to_string(r.iteration), csv_num(r.delta_rms),
                      r.converged ? "1" : "0"});
        CsvWriter evals(common.out("evals.csv").string());
        evals.row({"counter", "value"});
        evals.row({"g_evals", std::to_string(rep.counts.g_evals)});
        evals.row({"f_evals", std::to_string(rep.counts.f_evals)});
        evals.row({"f_skipped", std::to_string(rep.counts.f_skipped)});
        evals.row({"windows", std::to_string(rep.windows)});
    };

    PararealResult result;
    try {
        result = parareal_run(v, points, cfg, *exec);
    } catch (const NonConvergenceError& e) {
        write_report(e.report);
        std::cerr << "parareal: " << e.what() << "\n";
        return 4;
    }
    write_report(result.report);

    TrajectoryWriter traj(common.out("parareal_trajectory.xyz").string());
    for (std::size_t n = 0; n < result.trajectory.size(); ++n)
        traj.write_frame(result.trajectory[n], static_cast<long long>(n + 1),
                         (n + 1) * cfg.fine.slice_span());

    if (verify) {
        CsvWriter ver(common.out("verify.csv").string());
        ver.row({"point", "rms_vs_fine"});
        ParticleSystem ref = v;
        double worst = 0.0;
        for (std::size_t n = 0; n < result.trajectory.size(); ++n) {
            ref = propagate(cfg.fine, ref, units);
            const StateDelta d = state_sub(result.trajectory[n], ref);
            ver.row({std::to_string(n + 1), csv_num(d.rms_pos)});
            worst = std::max(worst, d.rms_pos);
        }
        std::cout << "verify: max RMS deviation from sequential fine run = " << worst << "\n";
    }
    std::cout << "parareal: " << points << " points in " << result.report.windows
              << " windows, F evals " << result.report.counts.f_evals << ", G evals "
              << result.report.counts.g_evals << ", skipped " << result.report.counts.f_skipped
              << "\n";
    return 0;
}

int cmd_cost(const CommonOpts& common, double a, double h, double n, double box_l, double h_star,
             double q_g) {
    FlopParams params;
    params.a = a;
    params.h = h;
    params.n = n;
    params.box_l = box_l > 0.0 ? box_l : std::pow(n, 1.0 / 3.0);  // default makes h* = 1
    params.h_star = h_star;
    const FlopBreakdown gen = msm_flops_general(params);
    const double simp = msm_flops_simplified(a, h, n);
    const double ratio = q_ratio(simp / n, q_g);

    CsvWriter out(common.out("flops_model.csv").string());
    out.row({"term", "flops_per_particle"});
    out.row({"general_short_range", csv_num(gen.short_range / n)});
    out.row({"general_interpolation", csv_num(gen.interpolation / n)});
    out.row({"general_grid", csv_num(gen.grid / n)});
    out.row({"general_total", csv_num(gen.total / n)});
    out.row({"simplified_total", csv_num(simp / n)});
    out.row({"q_g", csv_num(q_g)});
    out.row({"q_ratio", csv_num(ratio)});

    std::printf("simplified: %.0f flops/particle, %.4g total\n", simp / n, simp);
    std::printf("general:    %.1f flops/particle (%.1f%% of simplified)\n", gen.total / n,
                100.0 * gen.total / simp);
    std::printf("Q_F/Q_G = %.2f (Q_G = %.0f flops/particle)\n", ratio, q_g);
    return 0;
}

int cmd_schedule(const CommonOpts& common, int plan, double q, long long t_total, long long t_w,
                 long long windows, long long k, double r_g) {
    ScheduleParams params;
    params.plan = plan == 1 ? PlanKind::Plan1 : PlanKind::Plan2;
    if (plan != 1 && plan != 2) throw ConfigError("--plan must be 1 or 2");
    params.q_ratio = q;
    params.k_iters = k;
    params.r_g = r_g;
    if (plan == 1 && t_w == 0) t_w = static_cast<long long>(std::llround(q));
    if (t_total == 0) {
        if (windows == 0) throw ConfigError("give --t or --windows");
        t_total = windows * (t_w > 0 ? t_w : static_cast<long long>(std::llround(q)));
    }
    params.t_total = t_total;
    params.t_w = t_w;

    const ScheduleResult res = simulate_schedule(params);

    CsvWriter events(common.out("schedule_events.csv").string());
    events.row({"task", "unit", "start", "end"});
    for (const SimTask& t : res.events)
        events.row({t.name, t.unit, csv_num(t.start), csv_num(t.end)});

    CsvWriter table(common.out("speedup_table.csv").string());
    table.row({"plan", "params", "simulated", "closed_form", "ratio"});
    const std::string ptxt = "Q=" + csv_num(params.q_ratio) + ";T=" + std::to_string(t_total) +
                             ";TW=" + std::to_string(params.window_width()) +
                             ";K=" + std::to_string(k) + ";RG=" + csv_num(r_g);
    table.row({std::to_string(plan), ptxt, csv_num(res.simulated_speedup),
               csv_num(res.closed_form_speedup),
               csv_num(res.simulated_speedup / res.closed_form_speedup)});

    std::printf("plan %d: makespan %.17g (closed form %.17g)\n", plan, res.makespan,
                res.closed_form_makespan);
    std::printf("speedup %.6g simulated vs %.6g closed form\n", res.simulated_speedup,
                res.closed_form_speedup);
    std::printf("units: %d coarse, %d fine; tasks: %zu G, %zu F\n", res.g_units, res.f_units,
                res.g_task_count, res.f_task_count);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"molecular dynamics with multilevel summation and parareal time stepping"};
    app.require_subcommand(1);

    CommonOpts common;
    app.add_option("--seed", common.seed, "random seed shared by all commands");
    app.add_option("--threads", common.threads, "worker threads for parareal fine sweeps")
        ->check(CLI::PositiveNumber);
    app.add_option("--out-dir", common.out_dir, "output directory");
    app.add_option("--units", common.units, "units preset: physical | reduced");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random particle system");
    gen->set_config("--config");
    std::size_t gen_n = 32;
    std::vector<double> gen_box{20.0};
    std::string gen_scheme = "all_plus_one";
    double gen_sep = 1.0;
    std::string gen_out = "system.xyz";
    gen->add_option("--n", gen_n, "particle count")->check(CLI::PositiveNumber);
    gen->add_option("--box", gen_box, "box extents (one value or three)")->expected(1, 3);
    gen->add_option("--scheme", gen_scheme, "all_plus_one | alternating | random_neutral");
    gen->add_option("--min-sep", gen_sep, "minimum pair separation [A]");
    gen->add_option("--out", gen_out, "output file");

    // simulate
    auto* sim = app.add_subcommand("simulate", "sequential MD run");
    sim->set_config("--config");
    FieldOpts sim_fields;
    sim_fields.add_flags(sim);
    std::string sim_input, sim_kind = "direct";
    long long sim_steps = 100, sim_log_every = 1, sim_traj_every = 10;
    double sim_dt = 0.5;
    sim->add_option("--input", sim_input, "input system (extended XYZ)")->required();
    sim->add_option("--force-field", sim_kind, "direct | cutoff | wolf | msm");
    sim->add_option("--steps", sim_steps, "number of Verlet steps");
    sim->add_option("--dt", sim_dt, "timestep [fs]");
    sim->add_option("--log-every", sim_log_every, "energy log interval");
    sim->add_option("--traj-every", sim_traj_every, "trajectory frame interval");

    // compare
    auto* cmp = app.add_subcommand("compare", "compare force fields against the direct oracle");
    cmp->set_config("--config");
    FieldOpts cmp_fields;
    cmp_fields.add_flags(cmp);
    std::string cmp_input;
    std::vector<std::string> cmp_kinds{"msm", "cutoff", "wolf"};
    bool cmp_dump = false;
    cmp->add_option("--input", cmp_input, "input system")->required();
    cmp->add_option("--fields", cmp_kinds, "fields to compare");
    cmp->add_flag("--dump-grids", cmp_dump, "dump MSM per-level lattices to CSV");

    // parareal
    auto* par = app.add_subcommand("parareal", "parallel-in-time run");
    par->set_config("--config");
    FieldOpts par_fields;
    par_fields.add_flags(par);
    std::string par_input, par_fine = "msm", par_coarse = "cutoff";
    double par_dt = 0.02, par_tol = 1e-6, par_skip = -1.0;
    int par_steps_per_slice = 5, par_window = 8, par_max_iter = 5, par_points = 8;
    bool par_verify = false, par_no_short = false;
    par->add_option("--input", par_input, "input system")->required();
    par->add_option("--fine", par_fine, "fine propagator force field");
    par->add_option("--coarse", par_coarse, "coarse propagator force field");
    par->add_option("--dt", par_dt, "timestep [fs]");
    par->add_option("--steps-per-slice", par_steps_per_slice, "Verlet steps per slice");
    par->add_option("--window", par_window, "time points per computational window")
        ->check(CLI::PositiveNumber);
    par->add_option("--max-iter", par_max_iter, "max parareal iterations per window")
        ->check(CLI::PositiveNumber);
    par->add_option("--tol", par_tol, "RMS position convergence tolerance [A]");
    par->add_option("--points", par_points, "total time points")->check(CLI::PositiveNumber);
    par->add_flag("--verify", par_verify, "also run the sequential fine oracle");
    par->add_option("--skip-threshold", par_skip, "metastable-skip threshold [A], < 0 disables");
    par->add_flag("--no-short-circuit", par_no_short, "always run max-iter iterations");

    // cost
    auto* cost = app.add_subcommand("cost", "evaluate the flop-count model");
    cost->set_config("--config");
    double cost_a = 12.0, cost_h = 2.0, cost_n = 1.0, cost_l = 0.0, cost_hstar = 0.0,
           cost_qg = kSimpleCutoffFlopsPerParticle;
    bool cost_simplified = false;
    cost->add_option("--a", cost_a, "cutoff a [A]");
    cost->add_option("--h", cost_h, "finest grid spacing [A]");
    cost->add_option("--N", cost_n, "particle count");
    cost->add_option("--L", cost_l, "box length [A] (default: N^(1/3), i.e. h* = 1)");
    cost->add_option("--h-star", cost_hstar, "override h* [A]");
    cost->add_option("--q-g", cost_qg, "coarse propagator flops per particle");
    cost->add_flag("--simplified", cost_simplified, "kept for scripts; both forms are reported");

    // schedule
    auto* sched = app.add_subcommand("schedule", "simulate a calculation-distribution plan");
    sched->set_config("--config");
    int sched_plan = 2;
    double sched_q = 453.0, sched_rg = 1.0;
    long long sched_t = 0, sched_tw = 0, sched_windows = 0, sched_k = 1;
    sched->add_option("--plan", sched_plan, "1 | 2")->required();
    sched->add_option("--q-ratio", sched_q, "Q_F / Q_G");
    sched->add_option("--t", sched_t, "total time points");
    sched->add_option("--tw", sched_tw, "window width");
    sched->add_option("--windows", sched_windows, "window count (alternative to --t)");
    sched->add_option("--k", sched_k, "iterations K")->check(CLI::PositiveNumber);
    sched->add_option("--r-g", sched_rg, "coarse task duration (time quantum)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed())
            return cmd_gen(common, gen_n, gen_box, gen_scheme, gen_sep, gen_out);
        if (sim->parsed())
            return cmd_simulate(common, sim_fields, sim_input, sim_kind, sim_steps, sim_dt,
                                sim_log_every, sim_traj_every);
        if (cmp->parsed()) return cmd_compare(common, cmp_fields, cmp_input, cmp_kinds, cmp_dump);
        if (par->parsed())
            return cmd_parareal(common, par_fields, par_input, par_fine, par_coarse, par_dt,
                                par_steps_per_slice, par_window, par_max_iter, par_tol,
                                par_points, par_verify, par_skip, par_no_short);
        if (cost->parsed())
            return cmd_cost(common, cost_a, cost_h, cost_n, cost_l, cost_hstar, cost_qg);
        if (sched->parsed())
            return cmd_schedule(common, sched_plan, sched_q, sched_t, sched_tw, sched_windows,
                                sched_k, sched_rg);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
