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

#ifndef GTA_COVERAGE_HPP
#define GTA_COVERAGE_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "gta/channel_model.hpp"

namespace gta
{

// Regular ground grid under a fixed UAV. Transmitters sit at cell centers at
// height h_r_m; the UAV hovers at (uav_x_m, uav_y_m, uav_h_m).
struct GridSpec
{
    double x_min_m;
    double x_max_m;
    double y_min_m;
    double y_max_m;
    double cell_size_m;
    double uav_x_m = 0.0;
    double uav_y_m = 0.0;
    double uav_h_m = 120.0;
    double h_r_m = 1.7;

    std::size_t nx() const noexcept;
    std::size_t ny() const noexcept;
    double cell_center_x(std::size_t ix) const noexcept { return x_min_m + (static_cast<double>(ix) + 0.5) * cell_size_m; }
    double cell_center_y(std::size_t iy) const noexcept { return y_min_m + (static_cast<double>(iy) + 0.5) * cell_size_m; }

    void validate() const; // throws on inconsistent extents or heights
};

// Monte Carlo outage settings. The threshold is the maximum tolerable path
// loss from the link budget; a trial is in outage when its sampled path loss
// exceeds it.
struct OutageSpec
{
    double max_path_loss_db;
    std::uint32_t n_trials = 1000;
    std::uint64_t seed = 0;
};

enum class RasterStatistic
{
    MeanPathLoss,      // blockage-averaged mean path loss [dB]
    OutageProbability, // Monte Carlo outage fraction in [0, 1]
};

// One scalar field over the grid, row-major: values[iy * nx + ix].
struct RasterLayer
{
    GridSpec grid;
    RasterStatistic statistic;
    std::size_t nx;
    std::size_t ny;
    std::vector<double> values;

    double value(std::size_t ix, std::size_t iy) const { return values[iy * nx + ix]; }
    std::pair<double, double> value_range() const;
};

// Deterministic per-cell evaluation of the blockage-averaged mean path loss.
// n_threads = 0 picks the hardware concurrency; results are identical for
// any thread count.
RasterLayer mean_coverage_map(const GridSpec &grid, Environment environment, FrequencyBand band,
                              const BlockerField &blockers, unsigned n_threads = 0);

// Per-cell Monte Carlo: each trial draws the LOS/NLOS state (Bernoulli with
// the blockage LOS probability) and that link's Gaussian shadowing, then
// counts path losses above the threshold. Every (cell, trial) pair uses its
// own counter-derived substream, so serial and parallel runs agree
// bit-for-bit.
RasterLayer outage_map(const GridSpec &grid, Environment environment, FrequencyBand band,
                       const BlockerField &blockers, const OutageSpec &spec,
                       unsigned n_threads = 0);

// Closed-form Gaussian tail P(mean + zeta > threshold), the n -> infinity
// cross-check for outage_map with a single link type. sigma_sq = 0 degrades
// to a 0/1 step.
double analytic_outage(double mean_pl_db, double sigma_sq_db2, double threshold_db);

// Maximum tolerable path loss P_t + G_t + G_r - sensitivity.
double link_budget_threshold(double p_t_dbm, double g_t_db, double g_r_db,
                             double sensitivity_dbm) noexcept;

} // namespace gta

#endif
