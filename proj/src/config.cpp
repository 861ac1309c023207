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

#include "gta/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gta/error.hpp"

namespace gta
{

namespace
{

using json = nlohmann::ordered_json;

void check_keys(const json &obj, std::initializer_list<const char *> allowed,
                const std::string &section)
{
    for (const auto &item : obj.items())
    {
        bool known = false;
        for (const char *key : allowed)
            if (item.key() == key)
            {
                known = true;
                break;
            }
        if (!known)
            throw Error(errc::parse,
                        "config: unknown key '" + section + item.key() + "'");
    }
}

double get_number(const json &obj, const char *key, double fallback, const std::string &section)
{
    if (!obj.contains(key))
        return fallback;
    const json &v = obj.at(key);
    if (!v.is_number())
        throw Error(errc::parse, "config: '" + section + key + "' must be a number");
    return v.get<double>();
}

} // namespace

GridSpec ScenarioConfig::grid_spec() const
{
    return GridSpec{x_min_m, x_max_m, y_min_m, y_max_m, cell_size_m,
                    uav_x_m, uav_y_m, h_d_m,   h_r_m};
}

void ScenarioConfig::validate() const
{
    grid_spec().validate();
    if (!(h_d_m > h_r_m))
        throw Error(errc::geometry, "config: UAV height h_d_m must exceed h_r_m");
    if (!std::isfinite(p_t_dbm) || !std::isfinite(g_t_db) || !std::isfinite(g_r_db) ||
        !std::isfinite(sensitivity_dbm))
        throw Error(errc::domain, "config: link budget must be finite");
    if (blockers.lambda_per_m2 < 0.0 || blockers.g_b_m < 0.0 || !(blockers.h_b_m > 0.0))
        throw Error(errc::domain, "config: invalid blocker field");
    if (outage.n_trials < 1)
        throw Error(errc::domain, "config: outage.n_trials must be >= 1");
    if (!std::isfinite(outage.max_path_loss_db))
        throw Error(errc::domain, "config: outage.max_path_loss_db must be finite");
}

ScenarioConfig parse_config(const std::string &json_text)
{
    json doc;
    try
    {
        doc = json::parse(json_text);
    }
    catch (const json::exception &e)
    {
        throw Error(errc::parse, std::string("config: invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw Error(errc::parse, "config: top level must be a JSON object");

    check_keys(doc,
               {"environment", "band_ghz", "geometry", "blockers", "link_budget", "grid",
                "outage"},
               "");

    ScenarioConfig cfg;

    if (doc.contains("environment"))
    {
        if (!doc["environment"].is_string())
            throw Error(errc::parse, "config: 'environment' must be a string");
        cfg.environment = parse_environment(doc["environment"].get<std::string>());
    }
    if (doc.contains("band_ghz"))
    {
        if (!doc["band_ghz"].is_number())
            throw Error(errc::parse, "config: 'band_ghz' must be a number");
        std::ostringstream token;
        token << doc["band_ghz"].get<double>();
        cfg.band = parse_band(token.str());
    }

    if (doc.contains("geometry"))
    {
        const json &g = doc["geometry"];
        check_keys(g, {"h_d_m", "h_r_m"}, "geometry.");
        cfg.h_d_m = get_number(g, "h_d_m", cfg.h_d_m, "geometry.");
        cfg.h_r_m = get_number(g, "h_r_m", cfg.h_r_m, "geometry.");
    }

    if (doc.contains("blockers"))
    {
        const json &b = doc["blockers"];
        check_keys(b, {"lambda_per_m2", "g_b_m", "h_b_m"}, "blockers.");
        cfg.blockers.lambda_per_m2 =
            get_number(b, "lambda_per_m2", cfg.blockers.lambda_per_m2, "blockers.");
        cfg.blockers.g_b_m = get_number(b, "g_b_m", cfg.blockers.g_b_m, "blockers.");
        cfg.blockers.h_b_m = get_number(b, "h_b_m", cfg.blockers.h_b_m, "blockers.");
    }

    if (doc.contains("link_budget"))
    {
        const json &lb = doc["link_budget"];
        check_keys(lb, {"p_t_dbm", "g_t_db", "g_r_db", "sensitivity_dbm"}, "link_budget.");
        cfg.p_t_dbm = get_number(lb, "p_t_dbm", cfg.p_t_dbm, "link_budget.");
        cfg.g_t_db = get_number(lb, "g_t_db", cfg.g_t_db, "link_budget.");
        cfg.g_r_db = get_number(lb, "g_r_db", cfg.g_r_db, "link_budget.");
        cfg.sensitivity_dbm =
            get_number(lb, "sensitivity_dbm", cfg.sensitivity_dbm, "link_budget.");
    }

    if (doc.contains("grid"))
    {
        const json &g = doc["grid"];
        check_keys(g, {"x_min_m", "x_max_m", "y_min_m", "y_max_m", "cell_size_m", "uav_x_m",
                       "uav_y_m"},
                   "grid.");
        cfg.x_min_m = get_number(g, "x_min_m", cfg.x_min_m, "grid.");
        cfg.x_max_m = get_number(g, "x_max_m", cfg.x_max_m, "grid.");
        cfg.y_min_m = get_number(g, "y_min_m", cfg.y_min_m, "grid.");
        cfg.y_max_m = get_number(g, "y_max_m", cfg.y_max_m, "grid.");
        cfg.cell_size_m = get_number(g, "cell_size_m", cfg.cell_size_m, "grid.");
        cfg.uav_x_m = get_number(g, "uav_x_m", cfg.uav_x_m, "grid.");
        cfg.uav_y_m = get_number(g, "uav_y_m", cfg.uav_y_m, "grid.");
    }

    bool threshold_given = false;
    if (doc.contains("outage"))
    {
        const json &o = doc["outage"];
        check_keys(o, {"max_path_loss_db", "n_trials", "seed"}, "outage.");
        if (o.contains("max_path_loss_db"))
        {
            threshold_given = true;
            cfg.outage.max_path_loss_db =
                get_number(o, "max_path_loss_db", 0.0, "outage.");
        }
        if (o.contains("n_trials"))
        {
            if (!o["n_trials"].is_number_unsigned() || o["n_trials"].get<std::uint64_t>() < 1 ||
                o["n_trials"].get<std::uint64_t>() > 0xFFFFFFFFull)
                throw Error(errc::parse, "config: 'outage.n_trials' must be a positive integer");
            cfg.outage.n_trials = o["n_trials"].get<std::uint32_t>();
        }
        if (o.contains("seed"))
        {
            if (!o["seed"].is_number_unsigned())
                throw Error(errc::parse, "config: 'outage.seed' must be a non-negative integer");
            cfg.outage.seed = o["seed"].get<std::uint64_t>();
        }
    }
    if (!threshold_given)
        cfg.outage.max_path_loss_db =
            link_budget_threshold(cfg.p_t_dbm, cfg.g_t_db, cfg.g_r_db, cfg.sensitivity_dbm);

    cfg.validate();
    return cfg;
}

ScenarioConfig load_config(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(errc::io, "cannot open config file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    try
    {
        return parse_config(text.str());
    }
    catch (const Error &e)
    {
        if (e.code() == errc::parse)
            throw Error(errc::parse, path + ": " + e.what());
        throw;
    }
}

std::string serialize_config(const ScenarioConfig &config)
{
    json doc;
    doc["environment"] = std::string(to_string(config.environment));
    doc["band_ghz"] = static_cast<int>(carrier_ghz(config.band));
    doc["geometry"] = {{"h_d_m", config.h_d_m}, {"h_r_m", config.h_r_m}};
    doc["blockers"] = {{"lambda_per_m2", config.blockers.lambda_per_m2},
                       {"g_b_m", config.blockers.g_b_m},
                       {"h_b_m", config.blockers.h_b_m}};
    doc["link_budget"] = {{"p_t_dbm", config.p_t_dbm},
                          {"g_t_db", config.g_t_db},
                          {"g_r_db", config.g_r_db},
                          {"sensitivity_dbm", config.sensitivity_dbm}};
    doc["grid"] = {{"x_min_m", config.x_min_m},   {"x_max_m", config.x_max_m},
                   {"y_min_m", config.y_min_m},   {"y_max_m", config.y_max_m},
                   {"cell_size_m", config.cell_size_m}, {"uav_x_m", config.uav_x_m},
                   {"uav_y_m", config.uav_y_m}};
    doc["outage"] = {{"max_path_loss_db", config.outage.max_path_loss_db},
                     {"n_trials", config.outage.n_trials},
                     {"seed", config.outage.seed}};
    return doc.dump(2) + "\n";
}

} // namespace gta
