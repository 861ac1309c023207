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

#include "gtapl.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "gta/channel_model.hpp"
#include "gta/config.hpp"
#include "gta/coverage.hpp"
#include "gta/error.hpp"
#include "gta/fitting.hpp"
#include "gta/io.hpp"

// opaque handle definitions
struct gta_rng
{
    gta::SplitMix64 stream;
};

struct gta_samples
{
    std::vector<gta::MeasurementSample> rows;
};

struct gta_raster
{
    gta::RasterLayer layer;
};

struct gta_config
{
    gta::ScenarioConfig cfg;
};

namespace
{

thread_local std::string t_last_error;

int fail(int status, const std::string &message)
{
    t_last_error = message;
    return status;
}

int map_errc(gta::errc code)
{
    switch (code)
    {
    case gta::errc::domain:
        return GTA_ERR_DOMAIN;
    case gta::errc::geometry:
        return GTA_ERR_GEOMETRY;
    case gta::errc::insufficient_data:
        return GTA_ERR_INSUFFICIENT_DATA;
    case gta::errc::rank_deficient:
        return GTA_ERR_RANK_DEFICIENT;
    case gta::errc::partial_data:
        return GTA_ERR_PARTIAL_DATA;
    case gta::errc::parse:
        return GTA_ERR_PARSE;
    case gta::errc::io:
        return GTA_ERR_IO;
    }
    return GTA_ERR_INTERNAL;
}

// Runs fn(), translating exceptions into status codes + last-error message.
template <typename Fn>
int guarded(Fn &&fn)
{
    try
    {
        return fn();
    }
    catch (const gta::Error &e)
    {
        return fail(map_errc(e.code()), e.what());
    }
    catch (const std::exception &e)
    {
        return fail(GTA_ERR_INTERNAL, e.what());
    }
    catch (...)
    {
        return fail(GTA_ERR_INTERNAL, "unknown error");
    }
}

bool to_environment(int value, gta::Environment &out)
{
    if (value < 0 || value > 3)
        return false;
    out = static_cast<gta::Environment>(value);
    return true;
}

bool to_band(int value, gta::FrequencyBand &out)
{
    if (value < 0 || value > 1)
        return false;
    out = static_cast<gta::FrequencyBand>(value);
    return true;
}

bool to_link(int value, gta::LinkType &out)
{
    if (value < 0 || value > 1)
        return false;
    out = static_cast<gta::LinkType>(value);
    return true;
}

int require(bool ok, const char *what)
{
    return ok ? GTA_OK : fail(GTA_ERR_INVALID_ARG, what);
}

gta::ModelParams from_c(const gta_model_params &p)
{
    return gta::ModelParams{p.alpha_db, p.beta, p.sigma_sq_db2};
}

gta_model_params to_c(const gta::ModelParams &p)
{
    return gta_model_params{p.alpha, p.beta, p.sigma_sq};
}

gta::LinkGeometry from_c(const gta_link_geometry &g)
{
    return gta::LinkGeometry{g.r_2d_m, g.h_d_m, g.h_r_m};
}

gta::BlockerField from_c(const gta_blocker_field &b)
{
    return gta::BlockerField{b.lambda_per_m2, b.g_b_m, b.h_b_m};
}

gta::GridSpec from_c(const gta_grid_spec &g)
{
    return gta::GridSpec{g.x_min_m, g.x_max_m, g.y_min_m, g.y_max_m, g.cell_size_m,
                         g.uav_x_m, g.uav_y_m, g.uav_h_m, g.h_r_m};
}

gta_fit_result to_c(const gta::FitResult &fit)
{
    return gta_fit_result{to_c(fit.params), fit.n_samples, fit.residual_rms_db,
                          fit.min_distance_m, fit.max_distance_m};
}

gta::FitResult from_c(const gta_fit_result &fit)
{
    return gta::FitResult{from_c(fit.params), fit.n_samples, fit.residual_rms_db,
                          fit.min_distance_m, fit.max_distance_m};
}

char *dup_string(const std::string &s)
{
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out != nullptr)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

extern "C" {

const char *gta_version(void)
{
    return "1.0.0";
}

const char *gta_status_name(int status)
{
    switch (status)
    {
    case GTA_OK:
        return "ok";
    case GTA_ERR_INVALID_ARG:
        return "invalid argument";
    case GTA_ERR_DOMAIN:
        return "domain error";
    case GTA_ERR_GEOMETRY:
        return "geometry error";
    case GTA_ERR_INSUFFICIENT_DATA:
        return "insufficient data";
    case GTA_ERR_RANK_DEFICIENT:
        return "rank-deficient fit";
    case GTA_ERR_PARTIAL_DATA:
        return "partial data";
    case GTA_ERR_PARSE:
        return "parse error";
    case GTA_ERR_IO:
        return "i/o error";
    default:
        return "internal error";
    }
}

const char *gta_last_error(void)
{
    return t_last_error.c_str();
}

void gta_string_free(char *s)
{
    std::free(s);
}

int gta_environment_from_string(const char *text, int *out_environment)
{
    if (int rc = require(text && out_environment, "null argument"))
        return rc;
    return guarded([&] {
        *out_environment = static_cast<int>(gta::parse_environment(text));
        return GTA_OK;
    });
}

int gta_band_from_string(const char *text, int *out_band)
{
    if (int rc = require(text && out_band, "null argument"))
        return rc;
    return guarded([&] {
        *out_band = static_cast<int>(gta::parse_band(text));
        return GTA_OK;
    });
}

int gta_link_type_from_string(const char *text, int *out_link)
{
    if (int rc = require(text && out_link, "null argument"))
        return rc;
    return guarded([&] {
        *out_link = static_cast<int>(gta::parse_link_type(text));
        return GTA_OK;
    });
}

const char *gta_environment_name(int environment)
{
    gta::Environment env{};
    return to_environment(environment, env) ? gta::to_string(env).data() : "?";
}

const char *gta_band_name(int band)
{
    gta::FrequencyBand b{};
    return to_band(band, b) ? gta::to_string(b).data() : "?";
}

const char *gta_link_type_name(int link)
{
    gta::LinkType l{};
    return to_link(link, l) ? gta::to_string(l).data() : "?";
}

int gta_lookup_params(int environment, int band, int link, gta_model_params *out)
{
    gta::Environment env{};
    gta::FrequencyBand b{};
    gta::LinkType l{};
    if (int rc = require(out != nullptr, "null output"))
        return rc;
    if (int rc = require(to_environment(environment, env), "environment out of range"))
        return rc;
    if (int rc = require(to_band(band, b), "band out of range"))
        return rc;
    if (int rc = require(to_link(link, l), "link type out of range"))
        return rc;
    *out = to_c(gta::lookup_params({env, b, l}));
    return GTA_OK;
}

int gta_mean_path_loss(const gta_model_params *params, double d_3d_m, double *out_db)
{
    if (int rc = require(params && out_db, "null argument"))
        return rc;
    return guarded([&] {
        *out_db = gta::mean_path_loss(from_c(*params), d_3d_m);
        return GTA_OK;
    });
}

int gta_path_loss_from_budget(const gta_link_budget *budget, double *out_db)
{
    if (int rc = require(budget && out_db, "null argument"))
        return rc;
    *out_db = gta::path_loss_from_budget(
        gta::LinkBudget{budget->p_t_dbm, budget->p_r_dbm, budget->g_t_db, budget->g_r_db});
    return GTA_OK;
}

int gta_received_power(double p_t_dbm, double g_t_db, double g_r_db, double path_loss_db,
                       double *out_dbm)
{
    if (int rc = require(out_dbm != nullptr, "null output"))
        return rc;
    *out_dbm = gta::received_power(p_t_dbm, g_t_db, g_r_db, path_loss_db);
    return GTA_OK;
}

int gta_los_probability(const gta_link_geometry *geometry, const gta_blocker_field *blockers,
                        double *out_probability)
{
    if (int rc = require(geometry && blockers && out_probability, "null argument"))
        return rc;
    return guarded([&] {
        *out_probability = gta::los_probability(from_c(*geometry), from_c(*blockers));
        return GTA_OK;
    });
}

int gta_average_path_loss(double p_los, double pl_los_db, double pl_nlos_db, double *out_db)
{
    if (int rc = require(out_db != nullptr, "null output"))
        return rc;
    return guarded([&] {
        *out_db = gta::average_path_loss(p_los, pl_los_db, pl_nlos_db);
        return GTA_OK;
    });
}

int gta_scenario_path_loss(int environment, int band, const gta_link_geometry *geometry,
                           const gta_blocker_field *blockers, gta_scenario_result *out)
{
    gta::Environment env{};
    gta::FrequencyBand b{};
    if (int rc = require(geometry && blockers && out, "null argument"))
        return rc;
    if (int rc = require(to_environment(environment, env), "environment out of range"))
        return rc;
    if (int rc = require(to_band(band, b), "band out of range"))
        return rc;
    return guarded([&] {
        const gta::ScenarioPathLoss r =
            gta::scenario_path_loss(env, b, from_c(*geometry), from_c(*blockers));
        *out = gta_scenario_result{r.average_db, r.p_los,  r.pl_los_db,
                                   r.pl_nlos_db, r.d_3d_m, r.extrapolated ? 1 : 0};
        return GTA_OK;
    });
}

int gta_link_budget_threshold(double p_t_dbm, double g_t_db, double g_r_db,
                              double sensitivity_dbm, double *out_db)
{
    if (int rc = require(out_db != nullptr, "null output"))
        return rc;
    *out_db = gta::link_budget_threshold(p_t_dbm, g_t_db, g_r_db, sensitivity_dbm);
    return GTA_OK;
}

int gta_analytic_outage(double mean_pl_db, double sigma_sq_db2, double threshold_db,
                        double *out_probability)
{
    if (int rc = require(out_probability != nullptr, "null output"))
        return rc;
    return guarded([&] {
        *out_probability = gta::analytic_outage(mean_pl_db, sigma_sq_db2, threshold_db);
        return GTA_OK;
    });
}

int gta_fit_range(double *out_min_m, double *out_max_m)
{
    if (int rc = require(out_min_m && out_max_m, "null output"))
        return rc;
    *out_min_m = gta::fit_range_min_m;
    *out_max_m = gta::fit_range_max_m;
    return GTA_OK;
}

int gta_rng_create(unsigned long long seed, gta_rng **out)
{
    if (int rc = require(out != nullptr, "null output"))
        return rc;
    return guarded([&] {
        *out = new gta_rng{gta::SplitMix64(seed)};
        return GTA_OK;
    });
}

void gta_rng_destroy(gta_rng *rng)
{
    delete rng;
}

int gta_sample_path_loss(const gta_model_params *params, double d_3d_m, gta_rng *rng,
                         double *out_db)
{
    if (int rc = require(params && rng && out_db, "null argument"))
        return rc;
    return guarded([&] {
        *out_db = gta::sample_path_loss(from_c(*params), d_3d_m, rng->stream);
        return GTA_OK;
    });
}

int gta_samples_create(gta_samples **out)
{
    if (int rc = require(out != nullptr, "null output"))
        return rc;
    return guarded([&] {
        *out = new gta_samples{};
        return GTA_OK;
    });
}

void gta_samples_destroy(gta_samples *samples)
{
    delete samples;
}

int gta_samples_push(gta_samples *samples, double distance_m, double path_loss_db, int link)
{
    gta::LinkType l{};
    if (int rc = require(samples != nullptr, "null samples handle"))
        return rc;
    if (int rc = require(to_link(link, l), "link type out of range"))
        return rc;
    return guarded([&] {
        if (!(distance_m > 0.0))
            throw gta::Error(gta::errc::domain, "sample distance must be > 0 m");
        if (!std::isfinite(path_loss_db))
            throw gta::Error(gta::errc::domain, "sample path loss must be finite");
        samples->rows.push_back(gta::MeasurementSample{distance_m, path_loss_db, l});
        return GTA_OK;
    });
}

int gta_samples_count(const gta_samples *samples, size_t *out_count)
{
    if (int rc = require(samples && out_count, "null argument"))
        return rc;
    *out_count = samples->rows.size();
    return GTA_OK;
}

int gta_samples_load_csv(const char *path, gta_samples **out)
{
    if (int rc = require(path && out, "null argument"))
        return rc;
    return guarded([&] {
        auto rows = gta::io::load_measurement_csv(path);
        *out = new gta_samples{std::move(rows)};
        return GTA_OK;
    });
}

int gta_fit_log_distance(const gta_samples *samples, int link, gta_fit_result *out)
{
    gta::LinkType l{};
    if (int rc = require(samples && out, "null argument"))
        return rc;
    if (int rc = require(to_link(link, l), "link type out of range"))
        return rc;
    return guarded([&] {
        *out = to_c(gta::fit_log_distance(samples->rows, l));
        return GTA_OK;
    });
}

int gta_fit_scenario(const gta_samples *samples, gta_fit_result *out_los,
                     gta_fit_result *out_nlos)
{
    if (int rc = require(samples && out_los && out_nlos, "null argument"))
        return rc;
    return guarded([&] {
        const gta::ScenarioFit fits = gta::fit_scenario(samples->rows);
        *out_los = to_c(fits.los);
        *out_nlos = to_c(fits.nlos);
        return GTA_OK;
    });
}

int gta_fit_report(const gta_fit_result *los, const gta_fit_result *nlos,
                   const gta_model_params *reference_los, const gta_model_params *reference_nlos,
                   const char *reference_label, int as_json, char **out_text)
{
    if (int rc = require(los && nlos && out_text, "null argument"))
        return rc;
    if (int rc = require((reference_los == nullptr) == (reference_nlos == nullptr),
                         "reference parameters must be given for both links or neither"))
        return rc;
    return guarded([&] {
        const gta::ScenarioFit fits{from_c(*los), from_c(*nlos)};
        std::optional<gta::ReferenceParams> ref;
        if (reference_los != nullptr)
            ref = gta::ReferenceParams{reference_label ? reference_label : "",
                                       from_c(*reference_los), from_c(*reference_nlos)};
        const std::string text =
            as_json ? gta::io::fit_results_json(fits, ref) : gta::fit_report(fits, ref);
        *out_text = dup_string(text);
        return *out_text ? GTA_OK : fail(GTA_ERR_INTERNAL, "out of memory");
    });
}

int gta_mean_coverage_map(const gta_grid_spec *grid, int environment, int band,
                          const gta_blocker_field *blockers, unsigned int n_threads,
                          gta_raster **out)
{
    gta::Environment env{};
    gta::FrequencyBand b{};
    if (int rc = require(grid && blockers && out, "null argument"))
        return rc;
    if (int rc = require(to_environment(environment, env), "environment out of range"))
        return rc;
    if (int rc = require(to_band(band, b), "band out of range"))
        return rc;
    return guarded([&] {
        *out = new gta_raster{
            gta::mean_coverage_map(from_c(*grid), env, b, from_c(*blockers), n_threads)};
        return GTA_OK;
    });
}

int gta_outage_map(const gta_grid_spec *grid, int environment, int band,
                   const gta_blocker_field *blockers, const gta_outage_spec *spec,
                   unsigned int n_threads, gta_raster **out)
{
    gta::Environment env{};
    gta::FrequencyBand b{};
    if (int rc = require(grid && blockers && spec && out, "null argument"))
        return rc;
    if (int rc = require(to_environment(environment, env), "environment out of range"))
        return rc;
    if (int rc = require(to_band(band, b), "band out of range"))
        return rc;
    return guarded([&] {
        const gta::OutageSpec o{spec->max_path_loss_db, spec->n_trials, spec->seed};
        *out = new gta_raster{gta::outage_map(from_c(*grid), env, b, from_c(*blockers), o,
                                              n_threads)};
        return GTA_OK;
    });
}

void gta_raster_destroy(gta_raster *raster)
{
    delete raster;
}

int gta_raster_size(const gta_raster *raster, size_t *out_nx, size_t *out_ny)
{
    if (int rc = require(raster && out_nx && out_ny, "null argument"))
        return rc;
    *out_nx = raster->layer.nx;
    *out_ny = raster->layer.ny;
    return GTA_OK;
}

int gta_raster_value(const gta_raster *raster, size_t ix, size_t iy, double *out_value)
{
    if (int rc = require(raster && out_value, "null argument"))
        return rc;
    if (int rc = require(ix < raster->layer.nx && iy < raster->layer.ny, "cell index out of range"))
        return rc;
    *out_value = raster->layer.value(ix, iy);
    return GTA_OK;
}

int gta_raster_range(const gta_raster *raster, double *out_min, double *out_max)
{
    if (int rc = require(raster && out_min && out_max, "null argument"))
        return rc;
    const auto [lo, hi] = raster->layer.value_range();
    *out_min = lo;
    *out_max = hi;
    return GTA_OK;
}

int gta_raster_write_csv(const gta_raster *raster, const char *path)
{
    if (int rc = require(raster && path, "null argument"))
        return rc;
    return guarded([&] {
        gta::io::save_raster_csv(raster->layer, path);
        return GTA_OK;
    });
}

int gta_raster_write_ppm(const gta_raster *raster, const char *path)
{
    if (int rc = require(raster && path, "null argument"))
        return rc;
    return guarded([&] {
        gta::io::save_raster_ppm(raster->layer, path);
        return GTA_OK;
    });
}

int gta_config_default(gta_config **out)
{
    if (int rc = require(out != nullptr, "null output"))
        return rc;
    return guarded([&] {
        *out = new gta_config{gta::ScenarioConfig{}};
        return GTA_OK;
    });
}

int gta_config_load(const char *path, gta_config **out)
{
    if (int rc = require(path && out, "null argument"))
        return rc;
    return guarded([&] {
        *out = new gta_config{gta::load_config(path)};
        return GTA_OK;
    });
}

int gta_config_parse(const char *json_text, gta_config **out)
{
    if (int rc = require(json_text && out, "null argument"))
        return rc;
    return guarded([&] {
        *out = new gta_config{gta::parse_config(json_text)};
        return GTA_OK;
    });
}

void gta_config_destroy(gta_config *config)
{
    delete config;
}

int gta_config_get(const gta_config *config, gta_config_view *out)
{
    if (int rc = require(config && out, "null argument"))
        return rc;
    const gta::ScenarioConfig &c = config->cfg;
    const gta::GridSpec g = c.grid_spec();
    *out = gta_config_view{
        static_cast<int>(c.environment),
        static_cast<int>(c.band),
        c.h_d_m,
        c.h_r_m,
        gta_blocker_field{c.blockers.lambda_per_m2, c.blockers.g_b_m, c.blockers.h_b_m},
        c.p_t_dbm,
        c.g_t_db,
        c.g_r_db,
        c.sensitivity_dbm,
        gta_grid_spec{g.x_min_m, g.x_max_m, g.y_min_m, g.y_max_m, g.cell_size_m, g.uav_x_m,
                      g.uav_y_m, g.uav_h_m, g.h_r_m},
        gta_outage_spec{c.outage.max_path_loss_db, c.outage.n_trials, c.outage.seed},
    };
    return GTA_OK;
}

int gta_config_set_seed(gta_config *config, unsigned long long seed)
{
    if (int rc = require(config != nullptr, "null config handle"))
        return rc;
    config->cfg.outage.seed = seed;
    return GTA_OK;
}

int gta_config_serialize(const gta_config *config, char **out_json)
{
    if (int rc = require(config && out_json, "null argument"))
        return rc;
    return guarded([&] {
        *out_json = dup_string(gta::serialize_config(config->cfg));
        return *out_json ? GTA_OK : fail(GTA_ERR_INTERNAL, "out of memory");
    });
}

int gta_format_tables(int environment_or_m1, int band_or_m1, int link_or_m1, int as_json,
                      char **out_text)
{
    if (int rc = require(out_text != nullptr, "null output"))
        return rc;
    gta::io::TableFilter filter;
    if (environment_or_m1 >= 0)
    {
        gta::Environment env{};
        if (int rc = require(to_environment(environment_or_m1, env), "environment out of range"))
            return rc;
        filter.environment = env;
    }
    if (band_or_m1 >= 0)
    {
        gta::FrequencyBand b{};
        if (int rc = require(to_band(band_or_m1, b), "band out of range"))
            return rc;
        filter.band = b;
    }
    if (link_or_m1 >= 0)
    {
        gta::LinkType l{};
        if (int rc = require(to_link(link_or_m1, l), "link type out of range"))
            return rc;
        filter.link = l;
    }
    return guarded([&] {
        const std::string text = as_json ? gta::io::parameter_tables_json(filter)
                                         : gta::io::format_parameter_tables(filter);
        *out_text = dup_string(text);
        return *out_text ? GTA_OK : fail(GTA_ERR_INTERNAL, "out of memory");
    });
}

} // extern "C"
