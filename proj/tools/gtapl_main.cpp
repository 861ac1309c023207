// gtapl - ground-to-air mmWave path-loss modelling library
// Copyright (C) 2026 gtapl developers
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
//
// Command-line front end. All modelling goes through the libgtapl C API;
// this file only parses arguments and formats output.
//
// Exit codes: 0 success, 1 usage error, 2 data/validation error, 3 I/O error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gtapl.h"

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_data = 2;
constexpr int exit_io = 3;

struct GlobalOpts
{
    bool json = false;
    bool quiet = false;
    long long seed = -1; // < 0 means "not given"
    unsigned threads = 0;
};

std::string fmt(const char *f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), f, v);
    return buf;
}

// Library failure -> message on stderr + process exit code.
int report_failure(int status)
{
    std::cerr << "gtapl: " << gta_last_error() << "\n";
    return status == GTA_ERR_IO ? exit_io : exit_data;
}

// Enum-token parse failure is a usage error, unlike data errors.
int parse_enum_token(int (*parser)(const char *, int *), const std::string &text, int &out)
{
    if (parser(text.c_str(), &out) != GTA_OK)
    {
        std::cerr << "gtapl: " << gta_last_error() << "\n";
        return exit_usage;
    }
    return exit_ok;
}

void warn_extrapolation(const GlobalOpts &g, double d_3d)
{
    if (g.quiet)
        return;
    double lo = 0.0, hi = 0.0;
    gta_fit_range(&lo, &hi);
    std::cerr << "gtapl: warning: d_3d=" << fmt("%.2f", d_3d)
              << " m is outside the fitted range [" << fmt("%.0f", lo) << ", " << fmt("%.0f", hi)
              << "] m; extrapolating\n";
}

struct PlArgs
{
    std::string env_text;
    std::string band_text;
    std::string link_text;
    double d_3d = 0.0;
    double r_2d = 0.0;
    bool have_d = false;
    bool have_r2d = false;
    double h_d = 120.0;
    double h_r = 1.7;
    double lambda = 0.0;
    double g_b = 0.5;
    double h_b = 1.8;
    std::optional<double> p_t;
    double g_t = 0.0;
    double g_r = 0.0;
};

int run_pl_single(const GlobalOpts &g, const PlArgs &a, int env, int band)
{
    int link = 0;
    if (int rc = parse_enum_token(gta_link_type_from_string, a.link_text, link))
        return rc;

    gta_model_params params{};
    gta_lookup_params(env, band, link, &params);
    double pl = 0.0;
    if (int st = gta_mean_path_loss(&params, a.d_3d, &pl))
        return report_failure(st);

    double lo = 0.0, hi = 0.0;
    gta_fit_range(&lo, &hi);
    const bool extrapolated = a.d_3d < lo || a.d_3d > hi;
    if (extrapolated)
        warn_extrapolation(g, a.d_3d);

    std::optional<double> p_r;
    if (a.p_t)
    {
        double v = 0.0;
        gta_received_power(*a.p_t, a.g_t, a.g_r, pl, &v);
        p_r = v;
    }

    if (g.json)
    {
        nlohmann::ordered_json doc{{"environment", gta_environment_name(env)},
                                   {"band_ghz", band == GTA_BAND_28_GHZ ? 28 : 73},
                                   {"link", gta_link_type_name(link)},
                                   {"alpha_db", params.alpha_db},
                                   {"beta", params.beta},
                                   {"sigma_sq_db2", params.sigma_sq_db2},
                                   {"d_3d_m", a.d_3d},
                                   {"mean_path_loss_db", pl},
                                   {"extrapolated", extrapolated}};
        if (p_r)
            doc["received_power_dbm"] = *p_r;
        std::cout << doc.dump(2) << "\n";
        return exit_ok;
    }

    std::cout << "scenario: " << gta_environment_name(env) << ", " << gta_band_name(band) << ", "
              << gta_link_type_name(link) << "\n"
              << "model: alpha=" << fmt("%.2f", params.alpha_db)
              << " dB, beta=" << fmt("%.2f", params.beta)
              << ", sigma^2=" << fmt("%.2f", params.sigma_sq_db2) << " dB^2\n"
              << "d_3d: " << fmt("%.2f", a.d_3d) << " m\n"
              << "mean path loss: " << fmt("%.2f", pl) << " dB\n";
    if (p_r)
        std::cout << "received power: " << fmt("%.2f", *p_r) << " dBm (P_t="
                  << fmt("%.2f", *a.p_t) << " dBm, G_t=" << fmt("%.2f", a.g_t)
                  << " dB, G_r=" << fmt("%.2f", a.g_r) << " dB)\n";
    return exit_ok;
}

int run_pl_chain(const GlobalOpts &g, const PlArgs &a, int env, int band)
{
    const gta_link_geometry geometry{a.r_2d, a.h_d, a.h_r};
    const gta_blocker_field blockers{a.lambda, a.g_b, a.h_b};
    gta_scenario_result result{};
    if (int st = gta_scenario_path_loss(env, band, &geometry, &blockers, &result))
        return report_failure(st);

    gta_model_params los{}, nlos{};
    gta_lookup_params(env, band, GTA_LINK_LOS, &los);
    gta_lookup_params(env, band, GTA_LINK_NLOS, &nlos);

    if (result.extrapolated)
        warn_extrapolation(g, result.d_3d_m);

    std::optional<double> p_r;
    if (a.p_t)
    {
        double v = 0.0;
        gta_received_power(*a.p_t, a.g_t, a.g_r, result.average_db, &v);
        p_r = v;
    }

    if (g.json)
    {
        nlohmann::ordered_json doc{
            {"environment", gta_environment_name(env)},
            {"band_ghz", band == GTA_BAND_28_GHZ ? 28 : 73},
            {"geometry", {{"r_2d_m", a.r_2d}, {"h_d_m", a.h_d}, {"h_r_m", a.h_r}}},
            {"blockers", {{"lambda_per_m2", a.lambda}, {"g_b_m", a.g_b}, {"h_b_m", a.h_b}}},
            {"d_3d_m", result.d_3d_m},
            {"p_los", result.p_los},
            {"pl_los_db", result.pl_los_db},
            {"pl_nlos_db", result.pl_nlos_db},
            {"average_path_loss_db", result.average_db},
            {"extrapolated", result.extrapolated != 0}};
        if (p_r)
            doc["received_power_dbm"] = *p_r;
        std::cout << doc.dump(2) << "\n";
        return exit_ok;
    }

    std::cout << "scenario: " << gta_environment_name(env) << ", " << gta_band_name(band) << "\n"
              << "geometry: r_2d=" << fmt("%.2f", a.r_2d) << " m, h_d=" << fmt("%.2f", a.h_d)
              << " m, h_r=" << fmt("%.2f", a.h_r) << " m (d_3d=" << fmt("%.2f", result.d_3d_m)
              << " m)\n"
              << "blockers: lambda=" << fmt("%.6f", a.lambda) << " /m^2, g_b="
              << fmt("%.2f", a.g_b) << " m, h_b=" << fmt("%.2f", a.h_b) << " m\n"
              << "LOS:  alpha=" << fmt("%.2f", los.alpha_db) << " dB, beta="
              << fmt("%.2f", los.beta) << ", sigma^2=" << fmt("%.2f", los.sigma_sq_db2)
              << " dB^2, mean PL=" << fmt("%.2f", result.pl_los_db) << " dB\n"
              << "NLOS: alpha=" << fmt("%.2f", nlos.alpha_db) << " dB, beta="
              << fmt("%.2f", nlos.beta) << ", sigma^2=" << fmt("%.2f", nlos.sigma_sq_db2)
              << " dB^2, mean PL=" << fmt("%.2f", result.pl_nlos_db) << " dB\n"
              << "P_los: " << fmt("%.6f", result.p_los) << "\n"
              << "average path loss: " << fmt("%.2f", result.average_db) << " dB\n";
    if (p_r)
        std::cout << "received power: " << fmt("%.2f", *p_r) << " dBm\n";
    return exit_ok;
}

int run_pl(const GlobalOpts &g, const PlArgs &a)
{
    int env = 0, band = 0;
    if (int rc = parse_enum_token(gta_environment_from_string, a.env_text, env))
        return rc;
    if (int rc = parse_enum_token(gta_band_from_string, a.band_text, band))
        return rc;

    if (a.have_d == a.have_r2d)
    {
        std::cerr << "gtapl: pl needs exactly one of --d (3D distance) or --r2d (geometry)\n";
        return exit_usage;
    }
    if (a.have_d && a.link_text.empty())
    {
        std::cerr << "gtapl: pl --d needs --link (LOS or NLOS)\n";
        return exit_usage;
    }
    if (a.have_r2d && !a.link_text.empty())
    {
        std::cerr << "gtapl: --link applies only with --d; the geometry chain reports both links\n";
        return exit_usage;
    }
    return a.have_d ? run_pl_single(g, a, env, band) : run_pl_chain(g, a, env, band);
}

struct FitArgs
{
    std::string csv_path;
    std::string env_text;
    std::string band_text;
};

int run_fit(const GlobalOpts &g, const FitArgs &a)
{
    if (a.env_text.empty() != a.band_text.empty())
    {
        std::cerr << "gtapl: fit reference needs both --env and --freq\n";
        return exit_usage;
    }

    gta_model_params ref_los{}, ref_nlos{};
    bool have_reference = false;
    std::string label;
    if (!a.env_text.empty())
    {
        int env = 0, band = 0;
        if (int rc = parse_enum_token(gta_environment_from_string, a.env_text, env))
            return rc;
        if (int rc = parse_enum_token(gta_band_from_string, a.band_text, band))
            return rc;
        gta_lookup_params(env, band, GTA_LINK_LOS, &ref_los);
        gta_lookup_params(env, band, GTA_LINK_NLOS, &ref_nlos);
        label = std::string(gta_environment_name(env)) + ", " + gta_band_name(band);
        have_reference = true;
    }

    gta_samples *samples = nullptr;
    if (int st = gta_samples_load_csv(a.csv_path.c_str(), &samples))
        return report_failure(st);

    gta_fit_result los{}, nlos{};
    const int st = gta_fit_scenario(samples, &los, &nlos);
    gta_samples_destroy(samples);
    if (st != GTA_OK)
        return report_failure(st);

    char *text = nullptr;
    const int rt = gta_fit_report(&los, &nlos, have_reference ? &ref_los : nullptr,
                                  have_reference ? &ref_nlos : nullptr,
                                  have_reference ? label.c_str() : nullptr,
                                  g.json ? 1 : 0, &text);
    if (rt != GTA_OK)
        return report_failure(rt);
    std::cout << text;
    gta_string_free(text);
    return exit_ok;
}

struct MapArgs
{
    std::string config_path;
    std::string layer;
    std::string out_path;
    std::string ppm_path;
};

int run_map(const GlobalOpts &g, const MapArgs &a)
{
    const bool mean_layer = a.layer == "mean";
    if (!mean_layer && a.layer != "outage")
    {
        std::cerr << "gtapl: unknown layer '" << a.layer << "' (expected mean or outage)\n";
        return exit_usage;
    }

    gta_config *config = nullptr;
    if (int st = gta_config_load(a.config_path.c_str(), &config))
        return report_failure(st);
    if (g.seed >= 0)
        gta_config_set_seed(config, static_cast<unsigned long long>(g.seed));
    gta_config_view view{};
    gta_config_get(config, &view);
    gta_config_destroy(config);

    gta_raster *raster = nullptr;
    const int st = mean_layer
                       ? gta_mean_coverage_map(&view.grid, view.environment, view.band,
                                               &view.blockers, g.threads, &raster)
                       : gta_outage_map(&view.grid, view.environment, view.band, &view.blockers,
                                        &view.outage, g.threads, &raster);
    if (st != GTA_OK)
        return report_failure(st);

    int rc = exit_ok;
    size_t nx = 0, ny = 0;
    double lo = 0.0, hi = 0.0;
    gta_raster_size(raster, &nx, &ny);
    gta_raster_range(raster, &lo, &hi);

    if (int wst = gta_raster_write_csv(raster, a.out_path.c_str()))
        rc = report_failure(wst);
    if (rc == exit_ok && !a.ppm_path.empty())
        if (int wst = gta_raster_write_ppm(raster, a.ppm_path.c_str()))
            rc = report_failure(wst);
    gta_raster_destroy(raster);
    if (rc != exit_ok)
        return rc;

    const char *value_fmt = mean_layer ? "%.2f" : "%.6f";
    if (g.json)
    {
        nlohmann::ordered_json doc{{"layer", a.layer},
                                   {"nx", nx},
                                   {"ny", ny},
                                   {"min", lo},
                                   {"max", hi},
                                   {"csv", a.out_path}};
        if (!a.ppm_path.empty())
            doc["ppm"] = a.ppm_path;
        std::cout << doc.dump(2) << "\n";
    }
    else if (!g.quiet)
    {
        std::cout << "layer: " << a.layer << "\ncells: " << nx << " x " << ny
                  << "\nvalue range: [" << fmt(value_fmt, lo) << ", " << fmt(value_fmt, hi)
                  << "]\nwrote " << a.out_path << "\n";
        if (!a.ppm_path.empty())
            std::cout << "wrote " << a.ppm_path << "\n";
    }
    return exit_ok;
}

struct TablesArgs
{
    std::string env_text;
    std::string band_text;
    std::string link_text;
};

int run_tables(const GlobalOpts &g, const TablesArgs &a)
{
    int env = -1, band = -1, link = -1;
    if (!a.env_text.empty())
        if (int rc = parse_enum_token(gta_environment_from_string, a.env_text, env))
            return rc;
    if (!a.band_text.empty())
        if (int rc = parse_enum_token(gta_band_from_string, a.band_text, band))
            return rc;
    if (!a.link_text.empty())
        if (int rc = parse_enum_token(gta_link_type_from_string, a.link_text, link))
            return rc;

    char *text = nullptr;
    if (int st = gta_format_tables(env, band, link, g.json ? 1 : 0, &text))
        return report_failure(st);
    std::cout << text;
    gta_string_free(text);
    return exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"ground-to-air mmWave path-loss model toolkit"};
    app.require_subcommand(1);

    GlobalOpts global;
    app.add_flag("--json", global.json, "machine-readable JSON output");
    app.add_flag("--quiet", global.quiet, "suppress warnings and progress chatter");
    app.add_option("--seed", global.seed, "override the random seed (map layers)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--threads", global.threads, "worker threads for map generation (0 = auto)");

    PlArgs pl;
    CLI::App *pl_cmd = app.add_subcommand("pl", "evaluate path loss at one placement");
    pl_cmd->fallthrough();
    pl_cmd->add_option("--env", pl.env_text, "environment (suburban, urban, dense_urban, high_rise)")
        ->required();
    pl_cmd->add_option("--freq", pl.band_text, "carrier frequency in GHz (28 or 73)")->required();
    pl_cmd->add_option("--link", pl.link_text, "link type (LOS or NLOS), with --d");
    pl_cmd->add_option("--d", pl.d_3d, "3D transmitter-UAV distance [m]");
    pl_cmd->add_option("--r2d", pl.r_2d, "horizontal transmitter-UAV distance [m]");
    pl_cmd->add_option("--hd", pl.h_d, "UAV height [m] (default 120)");
    pl_cmd->add_option("--hr", pl.h_r, "transmitter height [m] (default 1.7)");
    pl_cmd->add_option("--lambda", pl.lambda, "human-blocker density [1/m^2] (default 0)");
    pl_cmd->add_option("--gb", pl.g_b, "blocker diameter [m] (default 0.5)");
    pl_cmd->add_option("--hb", pl.h_b, "blocker height [m] (default 1.8)");
    pl_cmd->add_option("--pt", pl.p_t, "transmit power [dBm]; adds received power to the report");
    pl_cmd->add_option("--gt", pl.g_t, "transmit antenna gain [dB] (default 0)");
    pl_cmd->add_option("--gr", pl.g_r, "receive antenna gain [dB] (default 0)");

    FitArgs fit;
    CLI::App *fit_cmd =
        app.add_subcommand("fit", "least-squares model fit from a measurement CSV");
    fit_cmd->fallthrough();
    fit_cmd->add_option("csv", fit.csv_path, "CSV with header distance_m,path_loss_db,link_type")
        ->required();
    fit_cmd->add_option("--env", fit.env_text, "reference environment for comparison");
    fit_cmd->add_option("--freq", fit.band_text, "reference frequency in GHz for comparison");

    MapArgs map;
    CLI::App *map_cmd = app.add_subcommand("map", "generate a coverage raster from a config");
    map_cmd->fallthrough();
    map_cmd->add_option("--config", map.config_path, "scenario config JSON")->required();
    map_cmd->add_option("--layer", map.layer, "raster layer: mean or outage")->required();
    map_cmd->add_option("--out", map.out_path, "output CSV path")->required();
    map_cmd->add_option("--ppm", map.ppm_path, "also write a PPM image (blue=low, red=high)");

    TablesArgs tables;
    CLI::App *tables_cmd =
        app.add_subcommand("tables", "print the embedded model parameter tables");
    tables_cmd->fallthrough();
    tables_cmd->add_option("--env", tables.env_text, "filter by environment");
    tables_cmd->add_option("--freq", tables.band_text, "filter by frequency in GHz");
    tables_cmd->add_option("--link", tables.link_text, "filter by link type");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        std::cerr << "gtapl: " << e.what() << "\n";
        return exit_usage;
    }

    if (pl_cmd->parsed())
    {
        pl.have_d = pl_cmd->count("--d") > 0;
        pl.have_r2d = pl_cmd->count("--r2d") > 0;
        return run_pl(global, pl);
    }
    if (fit_cmd->parsed())
        return run_fit(global, fit);
    if (map_cmd->parsed())
        return run_map(global, map);
    return run_tables(global, tables);
}
