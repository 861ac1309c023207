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

#include "gta/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "gta/error.hpp"

namespace gta::io
{

namespace
{

constexpr const char *measurement_header = "distance_m,path_loss_db,link_type";
constexpr const char *raster_header = "x_m,y_m,value";

std::string trim(std::string_view s)
{
    const auto begin = s.find_first_not_of(" \t\r");
    const auto end = s.find_last_not_of(" \t\r");
    if (begin == std::string_view::npos)
        return {};
    return std::string(s.substr(begin, end - begin + 1));
}

std::vector<std::string> split_fields(const std::string &line)
{
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true)
    {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos)
        {
            fields.push_back(trim(std::string_view(line).substr(start)));
            break;
        }
        fields.push_back(trim(std::string_view(line).substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

bool parse_number(const std::string &field, double &out)
{
    const char *first = field.data();
    const char *last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last && !field.empty();
}

std::ofstream open_output(const std::string &path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(errc::io, "cannot open '" + path + "' for writing");
    return out;
}

void finish_output(std::ofstream &out, const std::string &path)
{
    out.flush();
    if (!out)
        throw Error(errc::io, "failed writing '" + path + "'");
}

} // namespace

std::string format_double(double value)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

std::vector<MeasurementSample> read_measurement_csv(std::istream &in, const std::string &name)
{
    std::vector<MeasurementSample> samples;
    std::vector<std::string> problems;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;

    auto complain = [&](std::size_t no, const std::string &why) {
        if (problems.size() < 20)
            problems.push_back("line " + std::to_string(no) + ": " + why);
        else if (problems.size() == 20)
            problems.push_back("...");
    };

    while (std::getline(in, line))
    {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty())
            continue;
        if (!header_seen)
        {
            if (t != measurement_header)
                throw Error(errc::parse, name + ": line " + std::to_string(line_no) +
                                             ": expected header '" + measurement_header + "'");
            header_seen = true;
            continue;
        }

        const std::vector<std::string> fields = split_fields(t);
        if (fields.size() != 3)
        {
            complain(line_no, "expected 3 comma-separated fields, got " +
                                  std::to_string(fields.size()));
            continue;
        }
        double distance = 0.0, path_loss = 0.0;
        if (!parse_number(fields[0], distance))
        {
            complain(line_no, "bad distance '" + fields[0] + "'");
            continue;
        }
        if (!(distance > 0.0))
        {
            complain(line_no, "non-positive distance " + fields[0]);
            continue;
        }
        if (!parse_number(fields[1], path_loss) || !std::isfinite(path_loss))
        {
            complain(line_no, "bad path loss '" + fields[1] + "'");
            continue;
        }
        LinkType link;
        try
        {
            link = parse_link_type(fields[2]);
        }
        catch (const Error &)
        {
            complain(line_no, "bad link type '" + fields[2] + "'");
            continue;
        }
        samples.push_back(MeasurementSample{distance, path_loss, link});
    }

    if (!problems.empty())
    {
        std::ostringstream msg;
        msg << name << ": " << problems.size() << " invalid row(s): ";
        for (std::size_t i = 0; i < problems.size(); ++i)
            msg << (i ? "; " : "") << problems[i];
        throw Error(errc::parse, msg.str());
    }
    return samples;
}

std::vector<MeasurementSample> load_measurement_csv(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(errc::io, "cannot open measurement file '" + path + "'");
    return read_measurement_csv(in, path);
}

void write_raster_csv(const RasterLayer &layer, std::ostream &out)
{
    out << raster_header << '\n';
    for (std::size_t iy = 0; iy < layer.ny; ++iy)
        for (std::size_t ix = 0; ix < layer.nx; ++ix)
            out << format_double(layer.grid.cell_center_x(ix)) << ','
                << format_double(layer.grid.cell_center_y(iy)) << ','
                << format_double(layer.value(ix, iy)) << '\n';
}

void save_raster_csv(const RasterLayer &layer, const std::string &path)
{
    std::ofstream out = open_output(path);
    write_raster_csv(layer, out);
    finish_output(out, path);
}

std::vector<RasterCell> read_raster_csv(std::istream &in, const std::string &name)
{
    std::vector<RasterCell> cells;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line))
    {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty())
            continue;
        if (!header_seen)
        {
            if (t != raster_header)
                throw Error(errc::parse, name + ": line " + std::to_string(line_no) +
                                             ": expected header '" + raster_header + "'");
            header_seen = true;
            continue;
        }
        const std::vector<std::string> fields = split_fields(t);
        RasterCell cell{};
        if (fields.size() != 3 || !parse_number(fields[0], cell.x_m) ||
            !parse_number(fields[1], cell.y_m) || !parse_number(fields[2], cell.value))
            throw Error(errc::parse,
                        name + ": line " + std::to_string(line_no) + ": malformed raster row");
        cells.push_back(cell);
    }
    return cells;
}

void write_raster_ppm(const RasterLayer &layer, std::ostream &out)
{
    const auto [lo, hi] = layer.value_range();
    const double span = hi - lo;

    out << "P6\n" << layer.nx << ' ' << layer.ny << "\n255\n";
    for (std::size_t row = 0; row < layer.ny; ++row)
    {
        const std::size_t iy = layer.ny - 1 - row; // north-up
        for (std::size_t ix = 0; ix < layer.nx; ++ix)
        {
            const double v = layer.value(ix, iy);
            const double t = span > 0.0 ? (v - lo) / span : 0.5;
            const unsigned char rgb[3] = {
                static_cast<unsigned char>(std::lround(255.0 * t)),
                0,
                static_cast<unsigned char>(std::lround(255.0 * (1.0 - t))),
            };
            out.write(reinterpret_cast<const char *>(rgb), 3);
        }
    }
}

void save_raster_ppm(const RasterLayer &layer, const std::string &path)
{
    std::ofstream out = open_output(path);
    write_raster_ppm(layer, out);
    finish_output(out, path);
}

namespace
{

nlohmann::ordered_json fit_result_json(const FitResult &fit)
{
    return {{"alpha_db", fit.params.alpha},
            {"beta", fit.params.beta},
            {"sigma_sq_db2", fit.params.sigma_sq},
            {"n_samples", fit.n_samples},
            {"residual_rms_db", fit.residual_rms_db},
            {"min_distance_m", fit.min_distance_m},
            {"max_distance_m", fit.max_distance_m}};
}

nlohmann::ordered_json params_json(const ModelParams &p)
{
    return {{"alpha_db", p.alpha}, {"beta", p.beta}, {"sigma_sq_db2", p.sigma_sq}};
}

} // namespace

std::string fit_results_json(const ScenarioFit &fits,
                             const std::optional<ReferenceParams> &reference)
{
    nlohmann::ordered_json doc;
    doc["los"] = fit_result_json(fits.los);
    doc["nlos"] = fit_result_json(fits.nlos);
    if (reference)
    {
        doc["reference"] = {{"label", reference->label},
                            {"los", params_json(reference->los)},
                            {"nlos", params_json(reference->nlos)}};
        doc["deviation"] = {
            {"los",
             {{"alpha_db", std::fabs(fits.los.params.alpha - reference->los.alpha)},
              {"beta", std::fabs(fits.los.params.beta - reference->los.beta)},
              {"sigma_sq_db2", std::fabs(fits.los.params.sigma_sq - reference->los.sigma_sq)}}},
            {"nlos",
             {{"alpha_db", std::fabs(fits.nlos.params.alpha - reference->nlos.alpha)},
              {"beta", std::fabs(fits.nlos.params.beta - reference->nlos.beta)},
              {"sigma_sq_db2",
               std::fabs(fits.nlos.params.sigma_sq - reference->nlos.sigma_sq)}}}};
    }
    return doc.dump(2) + "\n";
}

namespace
{

bool keep(const TableFilter &f, Environment e, FrequencyBand b, LinkType l)
{
    return (!f.environment || *f.environment == e) && (!f.band || *f.band == b) &&
           (!f.link || *f.link == l);
}

} // namespace

std::string format_parameter_tables(const TableFilter &filter)
{
    std::ostringstream out;
    char buf[160];
    bool first_band = true;
    for (FrequencyBand band : all_bands)
    {
        if (filter.band && *filter.band != band)
            continue;

        std::vector<Environment> envs;
        for (Environment e : all_environments)
            if (!filter.environment || *filter.environment == e)
                envs.push_back(e);

        if (!first_band)
            out << '\n';
        first_band = false;

        out << "GTA path-loss model parameters - " << to_string(band) << '\n';
        std::snprintf(buf, sizeof(buf), "%-9s %-5s", "parameter", "link");
        out << buf;
        for (Environment e : envs)
        {
            std::snprintf(buf, sizeof(buf), " %12s", std::string(to_string(e)).c_str());
            out << buf;
        }
        out << '\n';

        // NLOS block above LOS, three parameter rows each
        for (LinkType link : {LinkType::Nlos, LinkType::Los})
        {
            if (filter.link && *filter.link != link)
                continue;
            const char *names[3] = {"alpha", "beta", "sigma^2"};
            for (int row = 0; row < 3; ++row)
            {
                std::snprintf(buf, sizeof(buf), "%-9s %-5s", names[row],
                              std::string(to_string(link)).c_str());
                out << buf;
                for (Environment e : envs)
                {
                    const ModelParams &p = lookup_params({e, band, link});
                    const double v = row == 0 ? p.alpha : row == 1 ? p.beta : p.sigma_sq;
                    std::snprintf(buf, sizeof(buf), " %12.2f", v);
                    out << buf;
                }
                out << '\n';
            }
        }
    }
    return out.str();
}

std::string parameter_tables_json(const TableFilter &filter)
{
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (FrequencyBand band : all_bands)
        for (Environment env : all_environments)
            for (LinkType link : all_link_types)
            {
                if (!keep(filter, env, band, link))
                    continue;
                const ModelParams &p = lookup_params({env, band, link});
                entries.push_back({{"environment", std::string(to_string(env))},
                                   {"band_ghz", static_cast<int>(carrier_ghz(band))},
                                   {"link", std::string(to_string(link))},
                                   {"alpha_db", p.alpha},
                                   {"beta", p.beta},
                                   {"sigma_sq_db2", p.sigma_sq}});
            }
    return entries.dump(2) + "\n";
}

} // namespace gta::io
