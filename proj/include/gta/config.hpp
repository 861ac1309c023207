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

#ifndef GTA_CONFIG_HPP
#define GTA_CONFIG_HPP

#include <string>

#include "gta/channel_model.hpp"
#include "gta/coverage.hpp"

namespace gta
{

// Complete scenario description for map generation. Defaults mirror the
// model's measurement setup: UAV at 120 m, transmitter at 1.7 m, 40 dBm
// transmit power with unit-gain antennas, no blockers, and a 500 m-radius
// grid around the UAV ground projection.
struct ScenarioConfig
{
    Environment environment = Environment::Urban;
    FrequencyBand band = FrequencyBand::F28GHz;

    double h_d_m = 120.0; // UAV height
    double h_r_m = 1.7;   // transmitter height

    BlockerField blockers{}; // lambda = 0 by default

    double p_t_dbm = 40.0;
    double g_t_db = 0.0;
    double g_r_db = 0.0;
    double sensitivity_dbm = -90.0;

    // extent and UAV ground position; heights are taken from above
    double x_min_m = -500.0;
    double x_max_m = 500.0;
    double y_min_m = -500.0;
    double y_max_m = 500.0;
    double cell_size_m = 10.0;
    double uav_x_m = 0.0;
    double uav_y_m = 0.0;

    OutageSpec outage{130.0, 1000, 0}; // threshold = p_t + gains - sensitivity

    GridSpec grid_spec() const;
    void validate() const;
};

// Parses a JSON scenario document. Every key is optional and defaults as
// above, but unknown keys are rejected by name. When
// outage.max_path_loss_db is absent it is derived from the link budget.
ScenarioConfig parse_config(const std::string &json_text);

// parse_config over a file; missing/unreadable file raises errc::io.
ScenarioConfig load_config(const std::string &path);

// Canonical JSON form: fixed key order and shortest round-trip numbers, so
// serialize -> parse -> serialize is byte-identical.
std::string serialize_config(const ScenarioConfig &config);

} // namespace gta

#endif
