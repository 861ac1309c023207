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

#include "gta/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "gta/error.hpp"

namespace gta
{

namespace
{

std::size_t cell_count_along(double min_v, double max_v, double cell_size)
{
    // tiny slack so an extent that is an exact multiple of the cell size
    // does not round up to an extra cell
    return static_cast<std::size_t>(std::ceil((max_v - min_v) / cell_size - 1e-9));
}

// Runs fn(i) for i in [0, n) over n_threads workers on disjoint ranges.
// fn must not throw and must write only its own cells.
template <typename Fn>
void parallel_for_cells(std::size_t n, unsigned n_threads, Fn &&fn)
{
    if (n_threads == 0)
        n_threads = std::max(1u, std::thread::hardware_concurrency());
    n_threads = static_cast<unsigned>(std::min<std::size_t>(n_threads, n));

    if (n_threads <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }

    std::vector<std::thread> workers;
    workers.reserve(n_threads);
    const std::size_t chunk = (n + n_threads - 1) / n_threads;
    for (unsigned t = 0; t < n_threads; ++t)
    {
        const std::size_t begin = static_cast<std::size_t>(t) * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end)
            break;
        workers.emplace_back([begin, end, &fn] {
            for (std::size_t i = begin; i < end; ++i)
                fn(i);
        });
    }
    for (std::thread &w : workers)
        w.join();
}

void validate_map_inputs(const GridSpec &grid, const BlockerField &blockers)
{
    grid.validate();
    if (blockers.lambda_per_m2 > 0.0 && !(grid.uav_h_m > blockers.h_b_m))
        throw Error(errc::geometry, "UAV height must exceed blocker height when blockers exist");
    // surfaces blocker-field domain errors before any cell is evaluated
    (void)los_probability(LinkGeometry{0.0, grid.uav_h_m, grid.h_r_m}, blockers);
}

} // namespace

std::size_t GridSpec::nx() const noexcept
{
    return cell_count_along(x_min_m, x_max_m, cell_size_m);
}

std::size_t GridSpec::ny() const noexcept
{
    return cell_count_along(y_min_m, y_max_m, cell_size_m);
}

void GridSpec::validate() const
{
    if (!std::isfinite(x_min_m) || !std::isfinite(x_max_m) || !std::isfinite(y_min_m) ||
        !std::isfinite(y_max_m) || !std::isfinite(cell_size_m) || !std::isfinite(uav_x_m) ||
        !std::isfinite(uav_y_m) || !std::isfinite(uav_h_m) || !std::isfinite(h_r_m))
        throw Error(errc::domain, "grid spec must be finite");
    if (!(x_max_m > x_min_m) || !(y_max_m > y_min_m))
        throw Error(errc::domain, "grid extent must be non-empty (max > min)");
    if (!(cell_size_m > 0.0))
        throw Error(errc::domain, "grid cell size must be > 0");
    if (h_r_m < 0.0)
        throw Error(errc::geometry, "transmitter height h_r must be >= 0");
    if (!(uav_h_m > h_r_m))
        throw Error(errc::geometry, "UAV height must exceed transmitter height");
}

std::pair<double, double> RasterLayer::value_range() const
{
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return {*lo, *hi};
}

RasterLayer mean_coverage_map(const GridSpec &grid, Environment environment, FrequencyBand band,
                              const BlockerField &blockers, unsigned n_threads)
{
    validate_map_inputs(grid, blockers);

    RasterLayer layer{grid, RasterStatistic::MeanPathLoss, grid.nx(), grid.ny(), {}};
    layer.values.resize(layer.nx * layer.ny);

    parallel_for_cells(layer.values.size(), n_threads, [&](std::size_t cell) {
        const std::size_t ix = cell % layer.nx;
        const std::size_t iy = cell / layer.nx;
        const double r_2d = std::hypot(grid.cell_center_x(ix) - grid.uav_x_m,
                                       grid.cell_center_y(iy) - grid.uav_y_m);
        const LinkGeometry geometry{r_2d, grid.uav_h_m, grid.h_r_m};
        layer.values[cell] = scenario_path_loss(environment, band, geometry, blockers).average_db;
    });
    return layer;
}

RasterLayer outage_map(const GridSpec &grid, Environment environment, FrequencyBand band,
                       const BlockerField &blockers, const OutageSpec &spec, unsigned n_threads)
{
    validate_map_inputs(grid, blockers);
    if (spec.n_trials < 1)
        throw Error(errc::domain, "outage simulation needs n_trials >= 1");
    if (!std::isfinite(spec.max_path_loss_db))
        throw Error(errc::domain, "outage path-loss threshold must be finite");

    const ModelParams &los = lookup_params({environment, band, LinkType::Los});
    const ModelParams &nlos = lookup_params({environment, band, LinkType::Nlos});
    const double sd_los = std::sqrt(los.sigma_sq);
    const double sd_nlos = std::sqrt(nlos.sigma_sq);

    RasterLayer layer{grid, RasterStatistic::OutageProbability, grid.nx(), grid.ny(), {}};
    layer.values.resize(layer.nx * layer.ny);

    parallel_for_cells(layer.values.size(), n_threads, [&](std::size_t cell) {
        const std::size_t ix = cell % layer.nx;
        const std::size_t iy = cell / layer.nx;
        const double r_2d = std::hypot(grid.cell_center_x(ix) - grid.uav_x_m,
                                       grid.cell_center_y(iy) - grid.uav_y_m);
        const LinkGeometry geometry{r_2d, grid.uav_h_m, grid.h_r_m};
        const double p_los = los_probability(geometry, blockers);
        const double d_3d = geometry.distance_3d_m();
        const double mean_los = mean_path_loss(los, d_3d);
        const double mean_nlos = mean_path_loss(nlos, d_3d);

        std::uint64_t n_outage = 0;
        for (std::uint32_t trial = 0; trial < spec.n_trials; ++trial)
        {
            SplitMix64 rng(substream_key(spec.seed, cell, trial));
            // next_unit() is in (0, 1], so p_los = 1 is always LOS and
            // p_los = 0 never is
            const bool is_los = rng.next_unit() <= p_los;
            const double pl = is_los ? mean_los + sd_los * rng.next_normal()
                                     : mean_nlos + sd_nlos * rng.next_normal();
            if (pl > spec.max_path_loss_db)
                ++n_outage;
        }
        layer.values[cell] =
            static_cast<double>(n_outage) / static_cast<double>(spec.n_trials);
    });
    return layer;
}

double analytic_outage(double mean_pl_db, double sigma_sq_db2, double threshold_db)
{
    if (!(sigma_sq_db2 >= 0.0))
        throw Error(errc::domain, "shadowing variance sigma_sq must be >= 0");
    if (sigma_sq_db2 == 0.0)
        return mean_pl_db > threshold_db ? 1.0 : 0.0;
    const double z = (threshold_db - mean_pl_db) / std::sqrt(2.0 * sigma_sq_db2);
    return 0.5 * std::erfc(z);
}

double link_budget_threshold(double p_t_dbm, double g_t_db, double g_r_db,
                             double sensitivity_dbm) noexcept
{
    return p_t_dbm + g_t_db + g_r_db - sensitivity_dbm;
}

} // namespace gta
