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

#ifndef GTA_IO_HPP
#define GTA_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gta/coverage.hpp"
#include "gta/fitting.hpp"

namespace gta::io
{

// Measurement scatter CSV. Header is mandatory and fixed:
//   distance_m,path_loss_db,link_type
// Comma separator, dot decimals, UTF-8; link_type is LOS/NLOS
// case-insensitive. Bad rows raise errc::parse listing the 1-based line
// numbers. An empty file yields an empty sample list.
std::vector<MeasurementSample> read_measurement_csv(std::istream &in, const std::string &name);
std::vector<MeasurementSample> load_measurement_csv(const std::string &path);

// Raster CSV with header x_m,y_m,value, one row per cell center in
// row-major order (y outer, x inner). Numbers are written in shortest
// round-trip form so re-parsing reproduces the layer exactly.
void write_raster_csv(const RasterLayer &layer, std::ostream &out);
void save_raster_csv(const RasterLayer &layer, const std::string &path);

struct RasterCell
{
    double x_m;
    double y_m;
    double value;
};
std::vector<RasterCell> read_raster_csv(std::istream &in, const std::string &name);

// Binary PPM (P6) with a linear blue-to-red ramp over the layer's own
// [min, max]; a constant layer maps to the midpoint color. Rows are written
// north-up (decreasing y).
void write_raster_ppm(const RasterLayer &layer, std::ostream &out);
void save_raster_ppm(const RasterLayer &layer, const std::string &path);

// Machine-readable counterpart of gta::fit_report.
std::string fit_results_json(const ScenarioFit &fits,
                             const std::optional<ReferenceParams> &reference = std::nullopt);

// Embedded parameter tables rendered per band with environments as columns
// and the NLOS rows above the LOS rows. Optional filters narrow the output;
// values print with two decimals, matching the published precision.
struct TableFilter
{
    std::optional<Environment> environment;
    std::optional<FrequencyBand> band;
    std::optional<LinkType> link;
};
std::string format_parameter_tables(const TableFilter &filter = {});
std::string parameter_tables_json(const TableFilter &filter = {});

// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

} // namespace gta::io

#endif
