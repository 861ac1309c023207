/* gtapl - ground-to-air mmWave path-loss modelling library
 * Copyright (C) 2026 gtapl developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ------------------------------------------------------------------------
 *
 * C interface of the gtapl shared library.
 *
 * Every function returns a gta_status (GTA_OK on success) and writes results
 * through out-parameters. On failure, gta_last_error() returns a
 * thread-local message describing what went wrong. Objects returned from
 * create/load calls are opaque handles owned by the caller and released with
 * the matching destroy call; strings returned through char** out-params are
 * released with gta_string_free().
 *
 * Units: distances/heights in meters, powers in dBm, gains and losses in dB,
 * shadowing variance in dB^2, blocker density in blockers per m^2.
 */

#ifndef GTAPL_H
#define GTAPL_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* ---- status codes ---------------------------------------------------- */

typedef enum gta_status
{
    GTA_OK = 0,
    GTA_ERR_INVALID_ARG = 1,       /* null pointer or out-of-range enum */
    GTA_ERR_DOMAIN = 2,            /* value outside an operation's domain */
    GTA_ERR_GEOMETRY = 3,          /* inconsistent placement geometry */
    GTA_ERR_INSUFFICIENT_DATA = 4, /* too few samples to fit */
    GTA_ERR_RANK_DEFICIENT = 5,    /* regression has no unique solution */
    GTA_ERR_PARTIAL_DATA = 6,      /* a required link type is missing */
    GTA_ERR_PARSE = 7,             /* malformed file, config or token */
    GTA_ERR_IO = 8,                /* filesystem failure */
    GTA_ERR_INTERNAL = 99
} gta_status;

const char *gta_version(void);
const char *gta_status_name(int status);
/* Message from the most recent failing call on this thread. */
const char *gta_last_error(void);
void gta_string_free(char *s);

/* ---- scenario enums --------------------------------------------------- */

typedef enum gta_environment
{
    GTA_ENV_SUBURBAN = 0,
    GTA_ENV_URBAN = 1,
    GTA_ENV_DENSE_URBAN = 2,
    GTA_ENV_HIGH_RISE = 3
} gta_environment;

typedef enum gta_band
{
    GTA_BAND_28_GHZ = 0,
    GTA_BAND_73_GHZ = 1
} gta_band;

typedef enum gta_link_type
{
    GTA_LINK_LOS = 0,
    GTA_LINK_NLOS = 1
} gta_link_type;

int gta_environment_from_string(const char *text, int *out_environment);
int gta_band_from_string(const char *text, int *out_band);
int gta_link_type_from_string(const char *text, int *out_link);
const char *gta_environment_name(int environment);
const char *gta_band_name(int band);
const char *gta_link_type_name(int link);

/* ---- value types ------------------------------------------------------ */

/* PL(d) = alpha + beta * 10log10(d) + zeta, zeta ~ N(0, sigma_sq) */
typedef struct gta_model_params
{
    double alpha_db;
    double beta;
    double sigma_sq_db2;
} gta_model_params;

typedef struct gta_link_geometry
{
    double r_2d_m; /* horizontal transmitter-UAV distance */
    double h_d_m;  /* UAV height */
    double h_r_m;  /* transmitter height */
} gta_link_geometry;

typedef struct gta_blocker_field
{
    double lambda_per_m2; /* human-blocker density */
    double g_b_m;         /* blocker diameter */
    double h_b_m;         /* blocker height */
} gta_blocker_field;

typedef struct gta_link_budget
{
    double p_t_dbm;
    double p_r_dbm;
    double g_t_db;
    double g_r_db;
} gta_link_budget;

typedef struct gta_scenario_result
{
    double average_db;
    double p_los;
    double pl_los_db;
    double pl_nlos_db;
    double d_3d_m;
    int extrapolated; /* 1 when d_3d is outside the fitted 200-500 m window */
} gta_scenario_result;

/* ---- model evaluation -------------------------------------------------- */

int gta_lookup_params(int environment, int band, int link, gta_model_params *out);
int gta_mean_path_loss(const gta_model_params *params, double d_3d_m, double *out_db);
int gta_path_loss_from_budget(const gta_link_budget *budget, double *out_db);
int gta_received_power(double p_t_dbm, double g_t_db, double g_r_db, double path_loss_db,
                       double *out_dbm);
int gta_los_probability(const gta_link_geometry *geometry, const gta_blocker_field *blockers,
                        double *out_probability);
int gta_average_path_loss(double p_los, double pl_los_db, double pl_nlos_db, double *out_db);
int gta_scenario_path_loss(int environment, int band, const gta_link_geometry *geometry,
                           const gta_blocker_field *blockers, gta_scenario_result *out);
int gta_link_budget_threshold(double p_t_dbm, double g_t_db, double g_r_db,
                              double sensitivity_dbm, double *out_db);
int gta_analytic_outage(double mean_pl_db, double sigma_sq_db2, double threshold_db,
                        double *out_probability);
int gta_fit_range(double *out_min_m, double *out_max_m);

/* ---- shadowing sampler -------------------------------------------------- */

typedef struct gta_rng gta_rng;

int gta_rng_create(unsigned long long seed, gta_rng **out);
void gta_rng_destroy(gta_rng *rng);
/* mean path loss plus one N(0, sigma_sq) shadowing draw from the stream */
int gta_sample_path_loss(const gta_model_params *params, double d_3d_m, gta_rng *rng,
                         double *out_db);

/* ---- measurement samples and fitting ------------------------------------ */

typedef struct gta_samples gta_samples;

int gta_samples_create(gta_samples **out);
void gta_samples_destroy(gta_samples *samples);
int gta_samples_push(gta_samples *samples, double distance_m, double path_loss_db, int link);
int gta_samples_count(const gta_samples *samples, size_t *out_count);
/* CSV with header distance_m,path_loss_db,link_type; bad rows are reported
 * with line numbers through gta_last_error(). */
int gta_samples_load_csv(const char *path, gta_samples **out);

typedef struct gta_fit_result
{
    gta_model_params params;
    size_t n_samples;
    double residual_rms_db;
    double min_distance_m;
    double max_distance_m;
} gta_fit_result;

int gta_fit_log_distance(const gta_samples *samples, int link, gta_fit_result *out);
int gta_fit_scenario(const gta_samples *samples, gta_fit_result *out_los,
                     gta_fit_result *out_nlos);
/* Text (or JSON) report of one scenario fit. reference_* may be NULL; the
 * label annotates where the reference parameters came from. */
int gta_fit_report(const gta_fit_result *los, const gta_fit_result *nlos,
                   const gta_model_params *reference_los, const gta_model_params *reference_nlos,
                   const char *reference_label, int as_json, char **out_text);

/* ---- coverage rasters ---------------------------------------------------- */

typedef struct gta_grid_spec
{
    double x_min_m;
    double x_max_m;
    double y_min_m;
    double y_max_m;
    double cell_size_m;
    double uav_x_m;
    double uav_y_m;
    double uav_h_m;
    double h_r_m;
} gta_grid_spec;

typedef struct gta_outage_spec
{
    double max_path_loss_db;
    unsigned int n_trials;
    unsigned long long seed;
} gta_outage_spec;

typedef struct gta_raster gta_raster;

/* n_threads = 0 lets the library pick; any value gives identical results */
int gta_mean_coverage_map(const gta_grid_spec *grid, int environment, int band,
                          const gta_blocker_field *blockers, unsigned int n_threads,
                          gta_raster **out);
int gta_outage_map(const gta_grid_spec *grid, int environment, int band,
                   const gta_blocker_field *blockers, const gta_outage_spec *spec,
                   unsigned int n_threads, gta_raster **out);
void gta_raster_destroy(gta_raster *raster);
int gta_raster_size(const gta_raster *raster, size_t *out_nx, size_t *out_ny);
int gta_raster_value(const gta_raster *raster, size_t ix, size_t iy, double *out_value);
int gta_raster_range(const gta_raster *raster, double *out_min, double *out_max);
int gta_raster_write_csv(const gta_raster *raster, const char *path);
int gta_raster_write_ppm(const gta_raster *raster, const char *path);

/* ---- scenario config ------------------------------------------------------ */

typedef struct gta_config gta_config;

typedef struct gta_config_view
{
    int environment;
    int band;
    double h_d_m;
    double h_r_m;
    gta_blocker_field blockers;
    double p_t_dbm;
    double g_t_db;
    double g_r_db;
    double sensitivity_dbm;
    gta_grid_spec grid;
    gta_outage_spec outage;
} gta_config_view;

int gta_config_default(gta_config **out);
int gta_config_load(const char *path, gta_config **out);
int gta_config_parse(const char *json_text, gta_config **out);
void gta_config_destroy(gta_config *config);
int gta_config_get(const gta_config *config, gta_config_view *out);
int gta_config_set_seed(gta_config *config, unsigned long long seed);
/* canonical JSON: serialize -> parse -> serialize is byte-identical */
int gta_config_serialize(const gta_config *config, char **out_json);

/* ---- parameter table reports ---------------------------------------------- */

/* Filters may be NULL/-1 to mean "all". */
int gta_format_tables(int environment_or_m1, int band_or_m1, int link_or_m1, int as_json,
                      char **out_text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GTAPL_H */
