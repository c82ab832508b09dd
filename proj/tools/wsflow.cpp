// wsflow: Wasserstein flows of Riesz-kernel discrepancies and interaction
// energies.  Subcommands cover discrepancy evaluation, equilibrium measures,
// analytic flow curves, the minimizing-movement scheme, the 1D quantile
// engine, particle simulations, and image halftoning.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wsflow/equilibrium.hpp"
#include "wsflow/flow1d.hpp"
#include "wsflow/flows.hpp"
#include "wsflow/halftone.hpp"
#include "wsflow/io.hpp"
#include "wsflow/kernels.hpp"
#include "wsflow/measures.hpp"
#include "wsflow/mms.hpp"
#include "wsflow/particles.hpp"

namespace {

using nlohmann::json;
using namespace wsflow;

struct GlobalOptions {
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "csv";
    unsigned threads = 1;
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

void write_table(std::ostream& os, const Table& table, const std::string& format) {
    if (format == "json") {
        json records = json::array();
        for (const auto& row : table.rows) {
            json rec = json::object();
            for (std::size_t c = 0; c < table.columns.size(); ++c) {
                rec[table.columns[c]] = row[c];
            }
            records.push_back(std::move(rec));
        }
        os << records.dump(2) << "\n";
        return;
    }
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        os << table.columns[c] << (c + 1 < table.columns.size() ? "," : "");
    }
    os << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            os << row[c] << (c + 1 < row.size() ? "," : "");
        }
        os << "\n";
    }
}

void emit(const Table& table, const GlobalOptions& opts) {
    if (opts.out.empty()) {
        write_table(std::cout, table, opts.format);
        return;
    }
    std::ofstream file(opts.out);
    if (!file) throw std::runtime_error("cannot open output file " + opts.out);
    write_table(file, table, opts.format);
}

std::string fd(double x) { return format_double(x); }

// measure spec: inline JSON ({"points": [...], "weights": [...]}) or a path
// to a point-cloud CSV
DiscreteMeasure measure_from_spec(const std::string& spec) {
    if (!spec.empty() && spec.front() == '{') {
        const json parsed = json::parse(spec);
        std::vector<double> coords;
        int dim = 0;
        for (const auto& entry : parsed.at("points")) {
            if (entry.is_array()) {
                if (dim == 0) dim = static_cast<int>(entry.size());
                for (const auto& c : entry) coords.push_back(c.get<double>());
            } else {
                dim = 1;
                coords.push_back(entry.get<double>());
            }
        }
        if (dim == 0) throw std::invalid_argument("measure spec: empty point list");
        if (parsed.contains("weights")) {
            std::vector<double> weights;
            for (const auto& w : parsed.at("weights")) weights.push_back(w.get<double>());
            return DiscreteMeasure(dim, std::move(coords), std::move(weights));
        }
        return DiscreteMeasure::uniform_cloud(dim, std::move(coords));
    }
    std::ifstream file(spec);
    if (!file) throw std::runtime_error("cannot open measure file " + spec);
    return read_cloud_csv(file);
}

std::vector<double> time_grid(double t0, double t1, int samples) {
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        grid.push_back(samples == 1 ? t0
                                    : t0 + (t1 - t0) * static_cast<double>(i) /
                                               static_cast<double>(samples - 1));
    }
    return grid;
}

// --- disc --------------------------------------------------------------

int run_disc(const GlobalOptions& opts, double r, bool use_wendland,
             const std::string& mu_spec, const std::string& nu_spec) {
    const Kernel kernel = use_wendland ? Kernel::wendland() : Kernel::riesz(r);
    const DiscreteMeasure mu = measure_from_spec(mu_spec);
    const DiscreteMeasure nu = measure_from_spec(nu_spec);
    const EnergyReport report = discrepancy(kernel, mu, nu, opts.threads);

    Table table;
    table.columns = {"interaction", "potential", "target_self_energy", "discrepancy"};
    table.add_row({fd(report.interaction), fd(report.potential),
                   fd(report.target_self_energy), fd(report.discrepancy)});
    emit(table, opts);
    return 0;
}

// --- equilibrium ---------------------------------------------------------

int run_equilibrium(const GlobalOptions& opts, int d, double r, double tau) {
    const EquilibriumSolution sol = equilibrium_unit(d, r);
    const char* variant = nullptr;
    switch (sol.eta_star.kind) {
        case EquilibriumKind::UniformInterval: variant = "uniform_interval"; break;
        case EquilibriumKind::BetaBall: variant = "beta_ball"; break;
        case EquilibriumKind::UniformSphere: variant = "uniform_sphere"; break;
    }
    if (opts.format == "csv") {
        Table table;
        table.columns = {"d", "r", "variant", "scale", "energy", "c_tau"};
        table.add_row({std::to_string(d), fd(r), variant, fd(sol.eta_star.scale),
                       fd(sol.energy), fd(c_tau(tau, sol))});
        emit(table, opts);
        return 0;
    }
    json record = {{"d", d},
                   {"r", r},
                   {"variant", variant},
                   {"scale", sol.eta_star.scale},
                   {"energy", sol.energy},
                   {"c_tau", c_tau(tau, sol)}};
    if (opts.out.empty()) {
        std::cout << record.dump(2) << "\n";
    } else {
        std::ofstream file(opts.out);
        if (!file) throw std::runtime_error("cannot open output file " + opts.out);
        file << record.dump(2) << "\n";
    }
    return 0;
}

// --- flow ----------------------------------------------------------------

int run_flow(const GlobalOptions& opts, const std::string& variant, int d, double r,
             double t0_param, double t0, double t1, int samples, double q_target,
             const std::string& mu0_spec, const std::string& nu_spec, std::size_t n_grid,
             double m0, double sigma0, double dt, int steps, double w_split,
             bool use_wendland) {
    Table table;
    const std::vector<double> grid = time_grid(t0, t1, samples);

    if (variant == "interaction" || variant == "delayed") {
        const EquilibriumSolution sol = equilibrium_unit(d, r);
        table.columns = {"t", "scale", "support_radius"};
        for (double t : grid) {
            const ScalingFamilyPoint p = variant == "delayed"
                                             ? delayed_interaction_flow_eval(sol, t0_param, t)
                                             : interaction_flow_eval(sol, t);
            table.add_row({fd(t), fd(p.scale), fd(p.scale * p.base.scale)});
        }
    } else if (variant == "one-particle") {
        std::vector<double> p(d, 0.0), q(d, 0.0);
        p[0] = -1.0;
        q[0] = 1.0;
        table.columns = {"t"};
        for (int c = 0; c < d; ++c) table.columns.push_back("x" + std::to_string(c + 1));
        table.columns.push_back("reached");
        for (double t : grid) {
            const OneParticlePoint point = one_particle_eval(p, q, r, t);
            std::vector<std::string> row = {fd(t)};
            for (double c : point.position) row.push_back(fd(c));
            row.push_back(point.reached ? "1" : "0");
            table.add_row(row);
        }
    } else if (variant == "disc1d") {
        const DiscreteMeasure mu0 = measure_from_spec(mu0_spec);
        const QuantileGrid q0 = quantile_of_atomic(mu0, n_grid);
        table.columns = {"t", "s", "q"};
        for (double t : grid) {
            const QuantileGrid qt = disc1d_flow_eval(q0, q_target, t);
            for (std::size_t k = 0; k < qt.size(); ++k) {
                table.add_row({fd(t), fd(qt.node(k)), fd(qt[k])});
            }
        }
    } else if (variant == "geodesic-comparison") {
        const EquilibriumSolution sol = equilibrium_unit(d, 1.0);
        table.columns = {"t", "scale", "shift1", "support_radius"};
        for (double t : grid) {
            const ScalingFamilyPoint p = geodesic_comparison_eval(sol, t);
            table.add_row({fd(t), fd(p.scale), fd(p.shift[0]), fd(p.scale * p.base.scale)});
        }
    } else if (variant == "centered") {
        const EquilibriumSolution sol = equilibrium_unit(d, r);
        std::vector<double> p(d, 0.0), q(d, 0.0);
        p[0] = -1.0;
        q[0] = 1.0;
        table.columns = {"t", "scale", "support_radius"};
        for (int c = 0; c < d; ++c) table.columns.push_back("shift" + std::to_string(c + 1));
        for (double t : grid) {
            const ScalingFamilyPoint point = centered_composite_eval(sol, p, q, t);
            std::vector<std::string> row = {fd(t), fd(point.scale),
                                            fd(point.scale * point.base.scale)};
            for (double c : point.shift) row.push_back(fd(c));
            table.add_row(row);
        }
    } else if (variant == "dirac-line") {
        table.columns = {"t", "x"};
        for (double t : grid) {
            table.add_row({fd(t), fd(dirac_line_flow(m0, q_target, t))});
        }
    } else if (variant == "double-well") {
        table.columns = {"t", "x_left", "w_left", "x_right", "w_right"};
        for (double t : grid) {
            const DiscreteMeasure m = double_well_split_eval(w_split, t);
            if (m.size() == 1) {
                const double x = m.point(0)[0];
                table.add_row({fd(t), fd(x), fd(w_split == 1.0 ? 0.0 : 1.0), fd(x),
                               fd(w_split == 1.0 ? 1.0 : 0.0)});
            } else {
                table.add_row({fd(t), fd(m.point(0)[0]), fd(m.weight(0)), fd(m.point(1)[0]),
                               fd(m.weight(1))});
            }
        }
    } else if (variant == "msigma") {
        const Kernel kernel = use_wendland ? Kernel::wendland() : Kernel::riesz(1.0);
        const DiscreteMeasure nu = measure_from_spec(nu_spec);
        const QuantileGrid target = quantile_of_atomic(nu, n_grid);
        const auto trajectory = msigma_flow({m0, sigma0}, kernel, target, dt, steps);
        table.columns = {"step", "t", "m", "sigma", "value"};
        for (std::size_t i = 0; i < trajectory.size(); ++i) {
            const auto eval = msigma_value_and_grad(trajectory[i], kernel, target);
            table.add_row({std::to_string(i), fd(static_cast<double>(i) * dt),
                           fd(trajectory[i].m), fd(trajectory[i].sigma), fd(eval.value)});
        }
    } else {
        throw std::invalid_argument("flow: unknown variant " + variant);
    }
    emit(table, opts);
    return 0;
}

// --- mms -----------------------------------------------------------------

int run_mms_cmd(const GlobalOptions& opts, double r, double tau, int steps,
                const std::string& emit_mode) {
    // the solved times are dimension-independent; d = 4 keeps every exponent
    // in the closed-form sphere branch
    const EquilibriumSolution sol = equilibrium_unit(4, r);
    const MmsTrajectory traj = run_mms(tau, r, steps, sol);

    Table table;
    if (emit_mode == "times") {
        table.columns = {"n", "t_n"};
        for (std::size_t n = 0; n < traj.times.size(); ++n) {
            table.add_row({std::to_string(n), fd(traj.times[n])});
        }
    } else {
        std::vector<double> grid;
        for (std::size_t n = 0; n < traj.times.size(); ++n) {
            grid.push_back(static_cast<double>(n) * tau);
        }
        const FCurves curves = f_curves(traj, grid);
        table.columns = {"n", "t_n", "f_tau", "f_limit"};
        for (std::size_t n = 0; n < traj.times.size(); ++n) {
            table.add_row({std::to_string(n), fd(traj.times[n]), fd(curves.f_tau[n]),
                           fd(curves.f_limit[n])});
        }
    }
    emit(table, opts);
    return 0;
}

// --- flow1d ----------------------------------------------------------------

int run_flow1d(const GlobalOptions& opts, std::size_t n, double dt, int steps,
               const std::string& mu0_spec, const std::string& nu_spec,
               bool interaction_only, int frame_every) {
    Flow1DConfig cfg{n, dt, steps, opts.threads};
    const DiscreteMeasure mu0 = measure_from_spec(mu0_spec);
    const QuantileGrid q0 = quantile_of_atomic(mu0, n);

    std::vector<QuantileGrid> trajectory;
    if (interaction_only) {
        trajectory = interaction_flow_1d(q0, cfg);
    } else {
        const DiscreteMeasure nu = measure_from_spec(nu_spec);
        trajectory = euler_flow(q0, quantile_of_atomic(nu, n), cfg);
    }

    Table table;
    table.columns = {"step", "s", "q"};
    for (std::size_t i = 0; i < trajectory.size(); ++i) {
        if (frame_every > 1 && i % static_cast<std::size_t>(frame_every) != 0 &&
            i + 1 != trajectory.size()) {
            continue;
        }
        for (std::size_t k = 0; k < trajectory[i].size(); ++k) {
            table.add_row({std::to_string(i), fd(trajectory[i].node(k)), fd(trajectory[i][k])});
        }
    }
    emit(table, opts);
    return 0;
}

// --- particles --------------------------------------------------------------

int run_particles(const GlobalOptions& opts, int d, double r, std::size_t m_count,
                  int steps, int snapshot_every, const std::string& target_spec,
                  const std::string& energy_out, bool warm_start,
                  std::vector<double> center, double halfwidth) {
    SimConfig cfg(m_count, d, r, measure_from_spec(target_spec));
    cfg.seed = opts.seed;
    cfg.steps = steps;
    cfg.threads = opts.threads;
    cfg.init_halfwidth = halfwidth;
    if (!center.empty()) {
        if (center.size() != static_cast<std::size_t>(d)) {
            throw std::invalid_argument("particles: --init-center needs d components");
        }
        cfg.init_center = std::move(center);
    }

    const RunLog log = run(cfg, snapshot_every, warm_start);

    Table snapshots;
    snapshots.columns = {"step", "i"};
    for (int c = 0; c < d; ++c) snapshots.columns.push_back("x" + std::to_string(c + 1));
    for (const auto& [step, positions] : log.snapshots) {
        const std::size_t count = positions.size() / static_cast<std::size_t>(d);
        for (std::size_t i = 0; i < count; ++i) {
            std::vector<std::string> row = {std::to_string(step), std::to_string(i)};
            for (int c = 0; c < d; ++c) row.push_back(fd(positions[i * d + c]));
            snapshots.add_row(row);
        }
    }

    Table energy;
    energy.columns = {"step", "model_time", "discrepancy"};
    for (const auto& row : log.energy) {
        energy.add_row({std::to_string(row.step), fd(row.model_time), fd(row.discrepancy)});
    }

    emit(snapshots, opts);
    std::string energy_path = energy_out;
    if (energy_path.empty() && !opts.out.empty()) energy_path = opts.out + ".energy.csv";
    if (energy_path.empty()) {
        write_table(std::cout, energy, opts.format);
    } else {
        std::ofstream file(energy_path);
        if (!file) throw std::runtime_error("cannot open output file " + energy_path);
        write_table(file, energy, opts.format);
    }
    return 0;
}

// --- halftone ---------------------------------------------------------------

int run_halftone_cmd(const GlobalOptions& opts, const std::string& input,
                     std::size_t dots, int stride, int steps, const std::string& svg_path,
                     const std::string& csv_path, double dot_radius) {
    const PixelMeasure image = load_pgm(input);
    HalftoneConfig cfg;
    cfg.dots = dots;
    cfg.stride = stride;
    cfg.steps = steps;
    cfg.seed = opts.seed;
    cfg.threads = opts.threads;
    const HalftoneResult result = run_halftone(image, cfg);

    if (!svg_path.empty()) {
        std::ofstream svg(svg_path);
        if (!svg) throw std::runtime_error("cannot open output file " + svg_path);
        svg << export_svg(result.dots, dot_radius, 100.0 * image.aspect(), 100.0);
    }
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw std::runtime_error("cannot open output file " + csv_path);
        write_cloud_csv(csv, result.dots);
    }

    Table energy;
    energy.columns = {"step", "model_time", "discrepancy"};
    for (const auto& row : result.energy) {
        energy.add_row({std::to_string(row.step), fd(row.model_time), fd(row.discrepancy)});
    }
    emit(energy, opts);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wasserstein flows of Riesz-kernel discrepancies"};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_option("--seed", opts.seed, "RNG seed");
    app.add_option("--out", opts.out, "output file (stdout if omitted)");
    auto* format_option = app.add_option("--format", opts.format, "output format")
                              ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--threads", opts.threads, "worker threads (0 = hardware)");

    // disc
    auto* disc = app.add_subcommand("disc", "discrepancy between two atomic measures");
    double disc_r = 1.0;
    bool disc_wendland = false;
    std::string disc_mu, disc_nu;
    disc->add_option("--r", disc_r, "Riesz exponent in (0,2)");
    disc->add_flag("--wendland", disc_wendland, "use the compactly supported smooth kernel");
    disc->add_option("--mu", disc_mu, "measure (inline JSON or CSV path)")->required();
    disc->add_option("--nu", disc_nu, "target measure")->required();

    // equilibrium
    auto* equi = app.add_subcommand("equilibrium", "unit-second-moment equilibrium measure");
    int equi_d = 1;
    double equi_r = 1.0, equi_tau = 1.0;
    equi->add_option("--d", equi_d, "dimension")->required();
    equi->add_option("--r", equi_r, "Riesz exponent")->required();
    equi->add_option("--tau", equi_tau, "step size for the reported c_tau");

    // flow
    auto* flow = app.add_subcommand("flow", "analytic flow curves");
    std::string flow_variant = "interaction";
    int flow_d = 1, flow_samples = 11, flow_steps = 100;
    double flow_r = 1.0, flow_t0_param = 0.0, flow_t0 = 0.0, flow_t1 = 1.0;
    double flow_q = 0.0, flow_m0 = -1.0, flow_sigma0 = 0.0, flow_dt = 1e-3, flow_w = 0.5;
    std::size_t flow_n = 256;
    std::string flow_mu0 = R"({"points": [[-1.0]]})";
    std::string flow_nu = R"({"points": [[0.0]]})";
    bool flow_wendland = false;
    flow->add_option("--variant", flow_variant,
                     "interaction | delayed | one-particle | disc1d | geodesic-comparison | "
                     "centered | dirac-line | double-well | msigma");
    flow->add_option("--d", flow_d, "dimension");
    flow->add_option("--r", flow_r, "Riesz exponent");
    flow->add_option("--stay", flow_t0_param, "length of stay t0 (delayed variant)");
    flow->add_option("--t0", flow_t0, "first sample time");
    flow->add_option("--t1", flow_t1, "last sample time");
    flow->add_option("--samples", flow_samples, "number of time samples");
    flow->add_option("--q", flow_q, "target point");
    flow->add_option("--mu0", flow_mu0, "initial 1D measure (inline JSON or CSV path)");
    flow->add_option("--nu", flow_nu, "target 1D measure (msigma variant)");
    flow->add_option("--n", flow_n, "quantile grid size");
    flow->add_option("--m0", flow_m0, "initial mean (msigma / dirac-line x0)");
    flow->add_option("--sigma0", flow_sigma0, "initial standard deviation (msigma)");
    flow->add_option("--dt", flow_dt, "Euler step (msigma)");
    flow->add_option("--steps", flow_steps, "Euler steps (msigma)");
    flow->add_option("--w", flow_w, "right-hand mass split (double-well)");
    flow->add_flag("--wendland", flow_wendland, "msigma with the smooth kernel");

    // mms
    auto* mms = app.add_subcommand("mms", "minimizing-movement scheme of the interaction energy");
    double mms_r = 1.0, mms_tau = 0.1;
    int mms_steps = 10;
    std::string mms_emit = "f-curves";
    mms->add_option("--r", mms_r, "Riesz exponent")->required();
    mms->add_option("--tau", mms_tau, "step size")->required();
    mms->add_option("--steps", mms_steps, "number of steps")->required();
    mms->add_option("--emit", mms_emit, "times | f-curves")
        ->check(CLI::IsMember({"times", "f-curves"}));

    // flow1d
    auto* f1d = app.add_subcommand("flow1d", "1D quantile-space Euler flow engine");
    std::size_t f1d_n = 256;
    double f1d_dt = 1e-3;
    int f1d_steps = 100, f1d_frame_every = 1;
    std::string f1d_mu0 = R"({"points": [[-1.0]]})";
    std::string f1d_nu = R"({"points": [[0.0]]})";
    bool f1d_interaction_only = false;
    f1d->add_option("--n", f1d_n, "quantile grid size");
    f1d->add_option("--dt", f1d_dt, "Euler step");
    f1d->add_option("--steps", f1d_steps, "step count");
    f1d->add_option("--mu0", f1d_mu0, "initial 1D measure");
    f1d->add_option("--nu", f1d_nu, "target 1D measure");
    f1d->add_flag("--interaction-only", f1d_interaction_only, "pure interaction flow");
    f1d->add_option("--frame-every", f1d_frame_every, "emit every k-th frame");

    // particles
    auto* part = app.add_subcommand("particles", "Euler-forward particle discrepancy flow");
    int part_d = 2, part_steps = 100, part_snapshot = 10;
    double part_r = 1.0, part_halfwidth = 1e-9;
    std::size_t part_m = 100;
    std::string part_target = R"({"points": [[1.0, 0.0]]})";
    std::string part_energy_out;
    bool part_warm = false;
    std::vector<double> part_center;
    part->add_option("--d", part_d, "dimension");
    part->add_option("--r", part_r, "Riesz exponent in [1,2)");
    part->add_option("--M", part_m, "particle count");
    part->add_option("--steps", part_steps, "Euler steps");
    part->add_option("--snapshot-every", part_snapshot, "snapshot stride");
    part->add_option("--target", part_target, "target measure (inline JSON or CSV path)");
    part->add_option("--energy-out", part_energy_out, "energy trace file");
    part->add_flag("--warm-start", part_warm, "seed with the steepest-descent direction");
    part->add_option("--init-center", part_center, "initial cube center");
    part->add_option("--init-halfwidth", part_halfwidth, "initial cube half-width");

    // halftone
    auto* half = app.add_subcommand("halftone", "image stippling by discrepancy descent");
    std::string half_input, half_svg, half_csv;
    std::size_t half_dots = 64;
    int half_stride = 1, half_steps = 500;
    double half_radius = 0.6;
    half->add_option("--input", half_input, "PGM image (P2 or P5)")->required();
    half->add_option("--dots", half_dots, "dot count");
    half->add_option("--stride", half_stride, "pixel subsample stride");
    half->add_option("--steps", half_steps, "Euler steps");
    half->add_option("--svg", half_svg, "SVG output path");
    half->add_option("--csv", half_csv, "dot cloud CSV output path");
    half->add_option("--dot-radius", half_radius, "SVG dot radius");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (disc->parsed()) return run_disc(opts, disc_r, disc_wendland, disc_mu, disc_nu);
        if (equi->parsed()) {
            // this subcommand reports JSON unless CSV was asked for explicitly
            if (format_option->count() == 0) opts.format = "json";
            return run_equilibrium(opts, equi_d, equi_r, equi_tau);
        }
        if (flow->parsed()) {
            return run_flow(opts, flow_variant, flow_d, flow_r, flow_t0_param, flow_t0,
                            flow_t1, flow_samples, flow_q, flow_mu0, flow_nu, flow_n,
                            flow_m0, flow_sigma0, flow_dt, flow_steps, flow_w,
                            flow_wendland);
        }
        if (mms->parsed()) return run_mms_cmd(opts, mms_r, mms_tau, mms_steps, mms_emit);
        if (f1d->parsed()) {
            return run_flow1d(opts, f1d_n, f1d_dt, f1d_steps, f1d_mu0, f1d_nu,
                              f1d_interaction_only, f1d_frame_every);
        }
        if (part->parsed()) {
            return run_particles(opts, part_d, part_r, part_m, part_steps, part_snapshot,
                                 part_target, part_energy_out, part_warm, part_center,
                                 part_halfwidth);
        }
        if (half->parsed()) {
            return run_halftone_cmd(opts, half_input, half_dots, half_stride, half_steps,
                                    half_svg, half_csv, half_radius);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
