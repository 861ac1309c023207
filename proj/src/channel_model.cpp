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

#include "gta/channel_model.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gta/error.hpp"

namespace gta
{

namespace
{

// Fitted (alpha [dB], beta, sigma^2 [dB^2]) per scenario, from least-square
// fits of the floating-intercept model over 200-500 m transmitter-UAV
// distances at a 120 m UAV height. Indexed [band][environment][link],
// link 0 = LOS, 1 = NLOS.
constexpr ModelParams param_table[2][4][2] = {
    {
        // 28 GHz
        {{84.64, 1.55, 0.12}, {113.63, 1.16, 2.58}}, // suburban
        {{82.54, 1.68, 0.79}, {97.81, 1.87, 1.69}},  // urban
        {{78.58, 1.85, 0.49}, {98.05, 1.86, 0.59}},  // dense urban
        {{88.76, 1.68, 2.47}, {66.25, 3.30, 4.48}},  // high-rise
    },
    {
        // 73 GHz
        {{93.63, 1.52, 0.16}, {115.40, 1.43, 2.74}},  // suburban
        {{90.86, 1.69, 0.84}, {100.83, 2.09, 1.90}},  // urban
        {{85.71, 1.90, 0.42}, {105.37, 1.91, 0.46}},  // dense urban
        {{85.49, 1.92, 0.57}, {102.10, 2.22, 6.61}},  // high-rise
    },
};

void validate_geometry(const LinkGeometry &g)
{
    if (!std::isfinite(g.r_2d_m) || !std::isfinite(g.h_d_m) || !std::isfinite(g.h_r_m))
        throw Error(errc::geometry, "link geometry must be finite");
    if (g.r_2d_m < 0.0)
        throw Error(errc::geometry, "horizontal distance r_2d must be >= 0");
    if (g.h_r_m < 0.0)
        throw Error(errc::geometry, "transmitter height h_r must be >= 0");
    if (!(g.h_d_m > g.h_r_m))
        throw Error(errc::geometry, "UAV height h_d must exceed transmitter height h_r");
}

void validate_blockers(const BlockerField &b)
{
    if (!std::isfinite(b.lambda_per_m2) || !std::isfinite(b.g_b_m) || !std::isfinite(b.h_b_m))
        throw Error(errc::domain, "blocker field must be finite");
    if (b.lambda_per_m2 < 0.0)
        throw Error(errc::domain, "blocker density lambda must be >= 0");
    if (b.g_b_m < 0.0)
        throw Error(errc::domain, "blocker diameter g_b must be >= 0");
    if (!(b.h_b_m > 0.0))
        throw Error(errc::domain, "blocker height h_b must be > 0");
}

// lowercase and strip separators, so "Dense-Urban" == "dense_urban"
std::string normalize_token(std::string_view text)
{
    std::string out;
    out.reserve(text.size());
    for (char c : text)
    {
        if (c == '-' || c == '_' || c == ' ' || c == '\t')
            continue;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

} // namespace

double carrier_ghz(FrequencyBand band) noexcept
{
    return band == FrequencyBand::F28GHz ? 28.0 : 73.0;
}

const ModelParams &lookup_params(const Scenario &scenario) noexcept
{
    return param_table[static_cast<int>(scenario.band)][static_cast<int>(scenario.environment)]
                      [static_cast<int>(scenario.link)];
}

double mean_path_loss(const ModelParams &params, double d_3d_m)
{
    if (!(d_3d_m > 0.0))
        throw Error(errc::domain, "path-loss distance must be > 0 m");
    return params.alpha + params.beta * 10.0 * std::log10(d_3d_m);
}

double sample_path_loss(const ModelParams &params, double d_3d_m, SplitMix64 &rng)
{
    if (!(params.sigma_sq >= 0.0))
        throw Error(errc::domain, "shadowing variance sigma_sq must be >= 0");
    const double mean = mean_path_loss(params, d_3d_m);
    return mean + std::sqrt(params.sigma_sq) * rng.next_normal();
}

double path_loss_from_budget(const LinkBudget &budget) noexcept
{
    return budget.p_t_dbm + budget.g_t_db + budget.g_r_db - budget.p_r_dbm;
}

double received_power(double p_t_dbm, double g_t_db, double g_r_db, double path_loss_db) noexcept
{
    return p_t_dbm + g_t_db + g_r_db - path_loss_db;
}

double los_probability(const LinkGeometry &geometry, const BlockerField &blockers)
{
    validate_geometry(geometry);
    validate_blockers(blockers);
    // The blocker height only constrains the geometry when blockers exist;
    // an empty field leaves the link clear for any placement.
    if (blockers.lambda_per_m2 > 0.0 && !(geometry.h_d_m > blockers.h_b_m))
        throw Error(errc::geometry, "UAV height h_d must exceed blocker height h_b");

    const double exponent = -blockers.lambda_per_m2 * blockers.g_b_m *
                            (geometry.r_2d_m * (blockers.h_b_m - geometry.h_r_m) /
                             (geometry.h_d_m - geometry.h_r_m));
    return std::clamp(std::exp(exponent), 0.0, 1.0);
}

double average_path_loss(double p_los, double pl_los_db, double pl_nlos_db)
{
    if (!(p_los >= 0.0 && p_los <= 1.0))
        throw Error(errc::domain, "LOS probability must lie in [0, 1]");
    return p_los * pl_los_db + (1.0 - p_los) * pl_nlos_db;
}

ScenarioPathLoss scenario_path_loss(Environment environment, FrequencyBand band,
                                    const LinkGeometry &geometry, const BlockerField &blockers)
{
    const double p_los = los_probability(geometry, blockers);
    const double d_3d = geometry.distance_3d_m();
    const double pl_los = mean_path_loss(lookup_params({environment, band, LinkType::Los}), d_3d);
    const double pl_nlos = mean_path_loss(lookup_params({environment, band, LinkType::Nlos}), d_3d);
    return ScenarioPathLoss{
        average_path_loss(p_los, pl_los, pl_nlos), p_los, pl_los, pl_nlos, d_3d,
        !within_fit_range(d_3d),
    };
}

std::string_view to_string(Environment environment) noexcept
{
    switch (environment)
    {
    case Environment::Suburban:
        return "suburban";
    case Environment::Urban:
        return "urban";
    case Environment::DenseUrban:
        return "dense_urban";
    case Environment::HighRise:
        return "high_rise";
    }
    return "?";
}

std::string_view to_string(FrequencyBand band) noexcept
{
    return band == FrequencyBand::F28GHz ? "28 GHz" : "73 GHz";
}

std::string_view to_string(LinkType link) noexcept
{
    return link == LinkType::Los ? "LOS" : "NLOS";
}

Environment parse_environment(std::string_view text)
{
    const std::string t = normalize_token(text);
    if (t == "suburban")
        return Environment::Suburban;
    if (t == "urban")
        return Environment::Urban;
    if (t == "denseurban")
        return Environment::DenseUrban;
    if (t == "highrise")
        return Environment::HighRise;
    std::ostringstream msg;
    msg << "unknown environment '" << text
        << "' (expected suburban, urban, dense_urban or high_rise)";
    throw Error(errc::parse, msg.str());
}

FrequencyBand parse_band(std::string_view text)
{
    const std::string t = normalize_token(text);
    if (t == "28" || t == "28ghz")
        return FrequencyBand::F28GHz;
    if (t == "73" || t == "73ghz")
        return FrequencyBand::F73GHz;
    std::ostringstream msg;
    msg << "unknown frequency band '" << text << "' (expected 28 or 73)";
    throw Error(errc::parse, msg.str());
}

LinkType parse_link_type(std::string_view text)
{
    const std::string t = normalize_token(text);
    if (t == "los")
        return LinkType::Los;
    if (t == "nlos")
        return LinkType::Nlos;
    std::ostringstream msg;
    msg << "unknown link type '" << text << "' (expected LOS or NLOS)";
    throw Error(errc::parse, msg.str());
}

} // namespace gta
