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

#ifndef GTA_CHANNEL_MODEL_HPP
#define GTA_CHANNEL_MODEL_HPP

#include <array>
#include <cmath>
#include <string_view>

#include "gta/rng.hpp"

namespace gta
{

// Simulation environments of the fitted ground-to-air model. Each value maps
// to one column of the embedded 28/73 GHz parameter tables.
enum class Environment
{
    Suburban = 0,
    Urban = 1,
    DenseUrban = 2,
    HighRise = 3,
};

// The two measured mmWave carrier bands. Only these are valid table keys;
// there is deliberately no interpolation between them.
enum class FrequencyBand
{
    F28GHz = 0,
    F73GHz = 1,
};

enum class LinkType
{
    Los = 0,
    Nlos = 1,
};

inline constexpr std::array<Environment, 4> all_environments{
    Environment::Suburban, Environment::Urban, Environment::DenseUrban, Environment::HighRise};
inline constexpr std::array<FrequencyBand, 2> all_bands{FrequencyBand::F28GHz, FrequencyBand::F73GHz};
inline constexpr std::array<LinkType, 2> all_link_types{LinkType::Los, LinkType::Nlos};

double carrier_ghz(FrequencyBand band) noexcept;

// One fitted floating-intercept/slope model:
//   PL(d) [dB] = alpha + beta * 10 * log10(d) + zeta,   zeta ~ N(0, sigma_sq)
struct ModelParams
{
    double alpha;    // intercept [dB]
    double beta;     // path-loss exponent (slope per decade / 10)
    double sigma_sq; // lognormal-shadowing variance [dB^2]
};

struct Scenario
{
    Environment environment;
    FrequencyBand band;
    LinkType link;
};

// Placement of one ground transmitter relative to the UAV receiver.
struct LinkGeometry
{
    double r_2d_m; // horizontal transmitter-UAV distance
    double h_d_m;  // UAV height
    double h_r_m;  // transmitter (wireless device) height

    double distance_3d_m() const noexcept { return std::hypot(r_2d_m, h_d_m - h_r_m); }
};

// Homogeneous field of human blockers around the transmitter. The default is
// an empty field, which reduces the model to the pure fitted tables.
struct BlockerField
{
    double lambda_per_m2 = 0.0; // blocker density
    double g_b_m = 0.5;         // blocker diameter
    double h_b_m = 1.8;         // blocker height
};

// Link-budget accounting identity: PL = P_t - P_r + G_t + G_r.
struct LinkBudget
{
    double p_t_dbm;
    double p_r_dbm;
    double g_t_db;
    double g_r_db;
};

// Distance window the table parameters were fitted over. Evaluation outside
// it is allowed but flagged as extrapolation where results carry a flag.
inline constexpr double fit_range_min_m = 200.0;
inline constexpr double fit_range_max_m = 500.0;

inline bool within_fit_range(double d_3d_m) noexcept
{
    return d_3d_m >= fit_range_min_m && d_3d_m <= fit_range_max_m;
}

// Embedded parameter table lookup; total over the 16 valid scenarios.
const ModelParams &lookup_params(const Scenario &scenario) noexcept;

// Deterministic mean of the log-distance model (zeta = 0). d_3d_m must be > 0.
double mean_path_loss(const ModelParams &params, double d_3d_m);

// mean_path_loss plus one shadowing draw zeta ~ N(0, sigma_sq) from the
// caller-owned stream. sigma_sq = 0 returns the mean exactly.
double sample_path_loss(const ModelParams &params, double d_3d_m, SplitMix64 &rng);

// PL = P_t - P_r + G_t + G_r
double path_loss_from_budget(const LinkBudget &budget) noexcept;

// P_r = P_t + G_t + G_r - PL (algebraic inverse of path_loss_from_budget)
double received_power(double p_t_dbm, double g_t_db, double g_r_db, double path_loss_db) noexcept;

// Probability that the ground-UAV link is unobstructed by human blockers:
//   P_L = exp(-lambda * g_B * r_2d * (h_B - h_R) / (h_D - h_R))
// clamped to [0, 1]. A blocker field shorter than the transmitter cannot
// block, so h_b < h_r clamps to 1.
double los_probability(const LinkGeometry &geometry, const BlockerField &blockers);

// Convex combination P_L * PL_LOS + (1 - P_L) * PL_NLOS.
double average_path_loss(double p_los, double pl_los_db, double pl_nlos_db);

// Full evaluation chain for one (environment, band) at one placement, with
// all intermediates kept for auditability.
struct ScenarioPathLoss
{
    double average_db;  // blockage-averaged path loss
    double p_los;       // LOS probability at this placement
    double pl_los_db;   // mean LOS path loss
    double pl_nlos_db;  // mean NLOS path loss
    double d_3d_m;      // 3D distance the means were evaluated at
    bool extrapolated;  // d_3d_m outside the fitted 200-500 m window
};

ScenarioPathLoss scenario_path_loss(Environment environment, FrequencyBand band,
                                    const LinkGeometry &geometry, const BlockerField &blockers);

// Canonical names ("suburban", "28 GHz", "LOS", ...) and tolerant parsing
// (case-insensitive, separators ignored). Parse failures throw errc::parse
// with the list of accepted values.
std::string_view to_string(Environment environment) noexcept;
std::string_view to_string(FrequencyBand band) noexcept;
std::string_view to_string(LinkType link) noexcept;
Environment parse_environment(std::string_view text);
FrequencyBand parse_band(std::string_view text);
LinkType parse_link_type(std::string_view text);

} // namespace gta

#endif
