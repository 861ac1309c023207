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

#ifndef GTA_FITTING_HPP
#define GTA_FITTING_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "gta/channel_model.hpp"

namespace gta
{

// One labeled scatter point of measured (or simulated) path loss.
struct MeasurementSample
{
    double distance_m;   // 3D transmitter-receiver distance, > 0
    double path_loss_db;
    LinkType link;
};

// Least-squares fit of PL = alpha + beta * 10log10(d) plus the residual
// spread. sqrt(params.sigma_sq) == residual_rms_db by construction (the
// variance estimator divides by n, not n-2).
struct FitResult
{
    ModelParams params;
    std::size_t n_samples;
    double residual_rms_db;
    double min_distance_m;
    double max_distance_m;
};

struct ScenarioFit
{
    FitResult los;
    FitResult nlos;
};

// Published parameters to compare a fit against, e.g. one embedded table row
// pair labeled "urban, 28 GHz".
struct ReferenceParams
{
    std::string label;
    ModelParams los;
    ModelParams nlos;
};

// Ordinary least squares of path_loss_db against x = 10*log10(distance_m),
// restricted to samples of the requested link type. Centered normal
// equations; duplicate distances are fine, but all-identical distances are
// rank-deficient. Throws errc::insufficient_data below 2 usable samples.
FitResult fit_log_distance(std::span<const MeasurementSample> samples, LinkType link);

// Fits LOS and NLOS separately from one mixed sample set. A link type with
// fewer than 2 samples raises errc::partial_data naming the absent type
// (errc::insufficient_data when both are missing).
ScenarioFit fit_scenario(std::span<const MeasurementSample> samples);

// Plain-text table of fitted parameters, with absolute deviations against
// the reference when one is given.
std::string fit_report(const ScenarioFit &fits,
                       const std::optional<ReferenceParams> &reference = std::nullopt);

} // namespace gta

#endif
