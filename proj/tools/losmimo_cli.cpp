// SPDX-License-Identifier: Apache-2.0
//
// losmimo - line-of-sight MIMO array planning and transceiver toolkit
// Copyright (C) 2026 losmimo contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "losmimo/bound.hpp"
#include "losmimo/capacity.hpp"
#include "losmimo/channel.hpp"
#include "losmimo/experiments.hpp"
#include "losmimo/planner.hpp"
#include "losmimo/transceiver.hpp"
#include "losmimo/units.hpp"

namespace
{
    using namespace losmimo;

    // Mirrors the batch configuration: SNR grid in dB, output target, seed
    // reserved for randomized sweeps.
    struct ExperimentConfig
    {
        double snr_start_db = -30.0;
        double snr_stop_db = 20.0;
        double snr_step_db = 1.0;
        std::string output;
        std::string plot_script;
        long seed = 0;

        std::vector<double> grid() const
        {
            return experiments::snr_grid_db(snr_start_db, snr_stop_db, snr_step_db);
        }
    };

    void add_grid_options(CLI::App *cmd, ExperimentConfig &cfg)
    {
        cmd->add_option("--snr-start-db", cfg.snr_start_db, "Grid start [dB]");
        cmd->add_option("--snr-stop-db", cfg.snr_stop_db, "Grid stop [dB]");
        cmd->add_option("--snr-step-db", cfg.snr_step_db, "Grid step [dB]");
        cmd->add_option("-o,--output", cfg.output, "CSV output path (default stdout)");
        cmd->add_option("--emit-plot", cfg.plot_script,
                        "Write a gnuplot script next to the CSV");
        cmd->add_option("--seed", cfg.seed, "Seed for randomized sweeps");
    }

    void write_text(const std::string &path, const std::string &text)
    {
        if (path.empty())
        {
            std::fputs(text.c_str(), stdout);
            return;
        }
        std::ofstream out(path);
        if (!out)
            throw std::runtime_error("cannot write " + path);
        out << text;
    }

    void maybe_emit_plot(const ExperimentConfig &cfg, const std::string &title,
                         const std::string &using_spec, const std::string &ylabel)
    {
        if (cfg.plot_script.empty())
            return;
        std::ofstream out(cfg.plot_script);
        if (!out)
            throw std::runtime_error("cannot write " + cfg.plot_script);
        const std::string data = cfg.output.empty() ? "data.csv" : cfg.output;
        out << "set datafile separator ','\n"
            << "set key autotitle columnhead\n"
            << "set xlabel 'SNR [dB]'\n"
            << "set ylabel '" << ylabel << "'\n"
            << "set title '" << title << "'\n"
            << "plot '" << data << "' using " << using_spec << " with lines\n";
    }
} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"losmimo - line-of-sight MIMO capacity bounds, array planning "
                 "and reduced-complexity transceivers"};
    app.require_subcommand(1);
    // defaults may come from a TOML file with one section per subcommand,
    // e.g. [table1]; explicit flags override file values
    app.set_config("--config", "", "Read defaults from a TOML config file");

    // ---- bound-sweep -----------------------------------------------------
    ExperimentConfig bound_cfg;
    int bs_nt = 256, bs_nr = 256;
    auto *bound_cmd = app.add_subcommand(
        "bound-sweep", "Capacity upper bound (integer and relaxed) vs SNR");
    bound_cmd->add_option("--nt", bs_nt, "Transmit antennas")->check(CLI::PositiveNumber);
    bound_cmd->add_option("--nr", bs_nr, "Receive antennas")->check(CLI::PositiveNumber);
    add_grid_options(bound_cmd, bound_cfg);
    bound_cmd->callback([&]
                        {
        const auto rows = experiments::run_bound_sweep(bs_nt, bs_nr, bound_cfg.grid());
        write_text(bound_cfg.output, experiments::to_csv(rows));
        maybe_emit_plot(bound_cfg, "capacity upper bound", "1:3", "bits/s/Hz"); });

    // ---- eta-sweep -------------------------------------------------------
    ExperimentConfig eta_cfg;
    int es_n = 256, es_points = 33;
    auto *eta_cmd = app.add_subcommand(
        "eta-sweep", "Capacity share across the eta grid (envelope data)");
    eta_cmd->add_option("--n", es_n, "Antennas per array")->check(CLI::PositiveNumber);
    eta_cmd->add_option("--eta-points", es_points, "Grid resolution")
        ->check(CLI::PositiveNumber);
    add_grid_options(eta_cmd, eta_cfg);
    eta_cmd->callback([&]
                      {
        const auto grid = experiments::default_eta_grid(es_n, es_points);
        const auto rows = experiments::run_eta_sweep(es_n, eta_cfg.grid(), grid);
        write_text(eta_cfg.output, experiments::to_csv(rows));
        maybe_emit_plot(eta_cfg, "eta sweep", "1:5", "share of bound [%]"); });

    // ---- plan ------------------------------------------------------------
    double plan_r = 0.48;
    double plan_snr_min_db = -10.0;
    bool plan_untruncated = false;
    int plan_nt = 256, plan_nr = 256;
    std::string plan_output;
    auto *plan_cmd = app.add_subcommand(
        "plan", "Radial ULA bank for a geometric eta series");
    plan_cmd->add_option("--r", plan_r, "Geometric ratio in (0,1)")->required();
    plan_cmd->add_option("--snr-min-db", plan_snr_min_db,
                         "Truncate the bank below this SNR");
    plan_cmd->add_flag("--untruncated", plan_untruncated,
                       "Span the full eta range [1/n_min, 1]");
    plan_cmd->add_option("--nt", plan_nt, "Transmit antennas")->check(CLI::PositiveNumber);
    plan_cmd->add_option("--nr", plan_nr, "Receive antennas")->check(CLI::PositiveNumber);
    plan_cmd->add_option("-o,--output", plan_output, "Write the JSON record here");
    plan_cmd->callback([&]
                       {
        std::optional<double> snr_min;
        if (!plan_untruncated)
            snr_min = db_to_linear(plan_snr_min_db);
        const auto plan = geometric_plan(plan_r, plan_nt, plan_nr, snr_min);
        std::fputs(experiments::plan_to_text(plan).c_str(), stdout);
        if (!plan_output.empty())
            write_text(plan_output, experiments::plan_to_json(plan));
        else
            std::fputs(experiments::plan_to_json(plan).c_str(), stdout); });

    // ---- transceive ------------------------------------------------------
    std::string tr_geometry;
    double tr_snr_db = 0.0;
    int tr_streams = 0;
    bool tr_sweep = false;
    bool tr_nominal = false;
    std::string tr_model = "approx";
    std::string tr_output;
    auto *tr_cmd = app.add_subcommand(
        "transceive", "Fourier + MRC link evaluation for a stored geometry");
    tr_cmd->add_option("--geometry", tr_geometry, "Geometry JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    tr_cmd->add_option("--snr-db", tr_snr_db, "Receive SNR [dB]")->required();
    tr_cmd->add_option("--streams", tr_streams, "Stream count (default eta*n_min)");
    tr_cmd->add_flag("--sweep-streams", tr_sweep, "Search the best stream count");
    tr_cmd->add_flag("--nominal", tr_nominal,
                     "Score with the nominal subchannel noise instead of the "
                     "exact SINR");
    tr_cmd->add_option("--model", tr_model, "Channel model: exact|approx")
        ->check(CLI::IsMember({"exact", "approx"}));
    tr_cmd->add_option("-o,--output", tr_output, "CSV output path");
    tr_cmd->callback([&]
                     {
        const auto geom = ArrayLinkGeometry::load(tr_geometry);
        if (!geom.within_aperture_limit())
            std::fprintf(stderr,
                         "warning: array aperture exceeds 0.1 x range; the "
                         "factored model degrades in this regime\n");
        const auto model = tr_model == "exact" ? ChannelModel::exact
                                               : ChannelModel::approx;
        const auto tm = build_transceiver(geom, model);
        const double snr = db_to_linear(tr_snr_db);
        std::optional<int> streams;
        if (tr_streams > 0)
            streams = tr_streams;
        MrcResult res;
        if (tr_nominal)
            res = mrc_nominal_rate(tm, snr, streams);
        else if (tr_sweep)
            res = mrc_best_streams(tm, snr);
        else
            res = mrc_spectral_efficiency(tm, snr, streams);

        std::string csv = "stream_index,sinr_db,rate_bits\n";
        char line[96];
        for (int k = 0; k < res.n_streams; ++k)
        {
            std::snprintf(line, sizeof(line), "%d,%.12g,%.12g\n", k,
                          linear_to_db(res.per_stream_sinr[k]),
                          std::log2(1.0 + res.per_stream_sinr[k]));
            csv += line;
        }
        write_text(tr_output, csv);
        std::fprintf(stdout, "eta %.6g, %d streams, sum rate %.6g bits/s/Hz\n",
                     tm.eta, res.n_streams, res.rate_bits); });

    // ---- table1 ------------------------------------------------------------
    int t1_n = 256;
    std::vector<double> t1_snrs = {-20.0, -10.0, 0.0, 10.0};
    bool t1_sweep = false;
    std::string t1_output;
    auto *t1_cmd = app.add_subcommand(
        "table1", "Share-of-bound table for parallel, SVD and Fourier+MRC");
    t1_cmd->add_option("--n", t1_n, "Antennas per array")->check(CLI::PositiveNumber);
    t1_cmd->add_option("--snr-db", t1_snrs, "SNR points [dB]");
    t1_cmd->add_flag("--sweep-streams", t1_sweep,
                     "Search the best stream count for the exact-SINR column");
    t1_cmd->add_option("-o,--output", t1_output, "CSV output path");
    t1_cmd->callback([&]
                     {
        const auto rows = experiments::run_table1(t1_n, t1_snrs, t1_sweep);
        std::printf("%8s %8s %9s %10s %10s %10s %12s\n", "snr_db", "eta",
                    "theta_r", "parallel%", "svd%", "mrc%", "mrc_exact%");
        for (const auto &r : rows)
            std::printf("%8.1f %8.4f %8.2f° %10.2f %10.2f %10.2f %12.2f\n",
                        r.snr_db, r.eta, r.theta_r_deg, r.parallel_pct, r.svd_pct,
                        r.mrc_pct, r.mrc_exact_pct);
        if (!t1_output.empty())
            write_text(t1_output, experiments::to_csv(rows)); });

    // ---- polarization ------------------------------------------------------
    ExperimentConfig pol_cfg;
    int pol_n = 512;
    double pol_eta = 0.5, pol_eps = 0.15;
    int pol_bins = 24;
    auto *pol_cmd = app.add_subcommand(
        "polarization", "Gram eigenvalue histogram showing the 0/1 split");
    pol_cmd->add_option("--n", pol_n, "Antennas per array")->check(CLI::PositiveNumber);
    pol_cmd->add_option("--eta", pol_eta, "Configuration parameter in (0,1]");
    pol_cmd->add_option("--eps", pol_eps, "Band half-width for the mass split");
    pol_cmd->add_option("--bins", pol_bins, "Histogram bins")->check(CLI::PositiveNumber);
    pol_cmd->add_option("-o,--output", pol_cfg.output, "CSV output path");
    pol_cmd->callback([&]
                      {
        const auto res = experiments::run_polarization(pol_n, pol_eta, pol_eps);
        write_text(pol_cfg.output, experiments::to_csv(res, pol_bins));
        std::fprintf(stderr, "near-one fraction %.4f (eta %.4f), near-zero %.4f\n",
                     res.frac_near_one, res.eta, res.frac_near_zero); });

    // ---- surrogate-scaling ---------------------------------------------------
    std::vector<int> sur_sizes = {64, 128, 256, 512};
    double sur_eta = 0.5;
    std::string sur_output;
    auto *sur_cmd = app.add_subcommand(
        "surrogate-scaling", "Circulant surrogate error across array sizes");
    sur_cmd->add_option("--sizes", sur_sizes, "Array sizes to evaluate");
    sur_cmd->add_option("--eta", sur_eta, "Configuration parameter in (0,1]");
    sur_cmd->add_option("-o,--output", sur_output, "CSV output path");
    sur_cmd->callback([&]
                      {
        const auto rows = experiments::run_surrogate_scaling(sur_sizes, sur_eta);
        write_text(sur_output, experiments::to_csv(rows)); });

    // ---- three-spacing --------------------------------------------------------
    ExperimentConfig three_cfg;
    int three_n = 256;
    auto *three_cmd = app.add_subcommand(
        "three-spacing", "Best of tight / geometric-mean / Rayleigh spacings");
    three_cmd->add_option("--n", three_n, "Antennas per array")
        ->check(CLI::PositiveNumber);
    add_grid_options(three_cmd, three_cfg);
    three_cmd->callback([&]
                        {
        const auto rows = experiments::run_three_spacing(three_n, three_cfg.grid());
        write_text(three_cfg.output, experiments::to_csv(rows));
        maybe_emit_plot(three_cfg, "three-spacing switching", "1:3",
                        "share of bound [%]"); });

    try
    {
        CLI11_PARSE(app, argc, argv);
    }
    catch (const std::exception &e)
    {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
