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
//
// End-to-end checks of the gtapl binary: output, warnings, exit codes.

#include <catch2/catch_amalgamated.hpp>

#include <string>

#include <json.hpp>

#include "gta/channel_model.hpp"
#include "gta/config.hpp"
#include "gta/fitting.hpp"
#include "gta/io.hpp"
#include "test_util.hpp"

using test_util::CliResult;
using test_util::run_cli;

TEST_CASE("pl reports the fitted mean path loss", "[cli]")
{
    const CliResult r = run_cli("pl --env urban --freq 28 --link los --d 200");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("121.20") != std::string::npos);
    CHECK(r.out.find("82.54") != std::string::npos);
    CHECK(r.err.empty());
}

TEST_CASE("pl warns when extrapolating below the fitted range", "[cli]")
{
    const CliResult r = run_cli("pl --env urban --freq 28 --link los --d 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("82.54") != std::string::npos);
    CHECK(r.err.find("extrapolat") != std::string::npos);

    const CliResult quiet = run_cli("--quiet pl --env urban --freq 28 --link los --d 1");
    CHECK(quiet.exit_code == 0);
    CHECK(quiet.err.empty());
}

TEST_CASE("pl geometry mode prints the whole blockage chain", "[cli]")
{
    const CliResult r = run_cli(
        "pl --env urban --freq 28 --r2d 100 --hd 120 --hr 1.7 --lambda 0.01 --gb 0.5 --hb 1.8");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0.999577") != std::string::npos);
    CHECK(r.out.find("119.33") != std::string::npos);
    CHECK(r.out.find("138.76") != std::string::npos);
    CHECK(r.out.find("119.34") != std::string::npos);
}

TEST_CASE("pl json output is machine readable", "[cli]")
{
    const CliResult r =
        run_cli("--json pl --env urban --freq 28 --r2d 100 --lambda 0.01 --gb 0.5 --hb 1.8");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("environment") == "urban");
    CHECK(doc.at("band_ghz") == 28);
    CHECK(std::abs(doc.at("p_los").get<double>() - 0.999577) < 1e-6);
    CHECK(std::abs(doc.at("average_path_loss_db").get<double>() - 119.34) < 0.01);
}

TEST_CASE("pl rejects unknown scenario tokens with usage errors", "[cli]")
{
    const CliResult r = run_cli("pl --env marine --freq 28 --link los --d 200");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("marine") != std::string::npos);
    CHECK(r.err.find("dense_urban") != std::string::npos); // lists the valid values

    CHECK(run_cli("pl --env urban --freq 60 --link los --d 200").exit_code == 1);
    CHECK(run_cli("pl --env urban --freq 28 --link los").exit_code == 1);
    CHECK(run_cli("pl --env urban --freq 28 --d 200").exit_code == 1);
    CHECK(run_cli("pl --env urban --freq 28 --d 200 --r2d 100 --link los").exit_code == 1);
    CHECK(run_cli("pl --env urban --freq 28").exit_code == 1);
}

TEST_CASE("pl propagates validation failures as data errors", "[cli]")
{
    CHECK(run_cli("pl --env urban --freq 28 --link los --d -5").exit_code == 2);
    CHECK(run_cli("pl --env urban --freq 28 --r2d 100 --hd 1 --hr 1.7").exit_code == 2);
}

TEST_CASE("tables prints all 16 scenarios and honors filters", "[cli]")
{
    const CliResult r = run_cli("tables");
    CHECK(r.exit_code == 0);
    for (const char *value : {"113.63", "66.25", "115.40", "102.10", "6.61", "0.12"})
        CHECK(r.out.find(value) != std::string::npos);

    const CliResult filtered = run_cli("tables --freq 73 --link los");
    CHECK(filtered.exit_code == 0);
    CHECK(filtered.out.find("93.63") != std::string::npos);
    CHECK(filtered.out.find("113.63") == std::string::npos);

    const CliResult json_out = run_cli("--json tables --freq 73 --link los");
    REQUIRE(json_out.exit_code == 0);
    const auto doc = nlohmann::json::parse(json_out.out);
    CHECK(doc.is_array());
    CHECK(doc.size() == 4);

    const CliResult bad = run_cli("tables --env marine");
    CHECK(bad.exit_code == 1);
    CHECK(bad.err.find("marine") != std::string::npos);
}

TEST_CASE("fit recovers parameters from a synthesized CSV", "[cli]")
{
    test_util::TempDir dir("cli-fit");
    const std::string csv = dir.file("urban28.csv");

    // synthesize shadowed scatter from the urban 28 GHz table entries
    std::string content = "distance_m,path_loss_db,link_type\n";
    gta::SplitMix64 rng(2025);
    const gta::ModelParams los{82.54, 1.68, 0.79};
    const gta::ModelParams nlos{97.81, 1.87, 1.69};
    for (int i = 0; i < 4000; ++i)
    {
        const double d = 200.0 + rng.next_unit() * 300.0;
        const bool is_los = (i % 2) == 0;
        const double pl = gta::sample_path_loss(is_los ? los : nlos, d, rng);
        content += gta::io::format_double(d) + "," + gta::io::format_double(pl) + "," +
                   (is_los ? "LOS\n" : "NLOS\n");
    }
    test_util::write_file(csv, content);

    const CliResult r = run_cli("fit " + csv + " --env urban --freq 28");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("urban, 28 GHz") != std::string::npos);
    CHECK(r.out.find("d_alpha") != std::string::npos);

    const CliResult json_out = run_cli("--json fit " + csv + " --env urban --freq 28");
    REQUIRE(json_out.exit_code == 0);
    const auto doc = nlohmann::json::parse(json_out.out);
    CHECK(std::abs(doc.at("los").at("alpha_db").get<double>() - 82.54) < 1.0);
    CHECK(std::abs(doc.at("nlos").at("beta").get<double>() - 1.87) < 0.1);
    CHECK(doc.at("deviation").at("los").contains("sigma_sq_db2"));
}

TEST_CASE("fit reports data problems with the right exit codes", "[cli]")
{
    test_util::TempDir dir("cli-fit-err");

    const std::string empty = dir.file("empty.csv");
    test_util::write_file(empty, "");
    CHECK(run_cli("fit " + empty).exit_code == 2);

    const std::string bad = dir.file("bad.csv");
    test_util::write_file(bad, "distance_m,path_loss_db,link_type\n"
                               "200,120,LOS\n"
                               "210,bogus,LOS\n"
                               "220,122,LOS\n");
    const CliResult r = run_cli("fit " + bad);
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);

    const std::string los_only = dir.file("los_only.csv");
    test_util::write_file(los_only, "distance_m,path_loss_db,link_type\n"
                                    "200,120,LOS\n"
                                    "300,123,LOS\n");
    const CliResult partial = run_cli("fit " + los_only);
    CHECK(partial.exit_code == 2);
    CHECK(partial.err.find("NLOS") != std::string::npos);

    CHECK(run_cli("fit " + dir.file("missing.csv")).exit_code == 3);
    CHECK(run_cli("fit " + empty + " --env urban").exit_code == 1); // reference needs both
}

TEST_CASE("map writes the raster for a single-cell config", "[cli]")
{
    test_util::TempDir dir("cli-map");
    const std::string config = dir.file("scenario.json");
    test_util::write_file(config, R"({
        "environment": "urban",
        "band_ghz": 28,
        "blockers": {"lambda_per_m2": 0.01, "g_b_m": 0.5, "h_b_m": 1.8},
        "grid": {"x_min_m": 99.5, "x_max_m": 100.5,
                 "y_min_m": -0.5, "y_max_m": 0.5, "cell_size_m": 1.0}
    })");
    const std::string out_csv = dir.file("mean.csv");
    const CliResult r =
        run_cli("map --config " + config + " --layer mean --out " + out_csv);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("value range") != std::string::npos);

    const std::string written = test_util::read_file(out_csv);
    std::istringstream in(written);
    const auto cells = gta::io::read_raster_csv(in, "mean.csv");
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].x_m == 100.0);
    CHECK(cells[0].y_m == 0.0);
    CHECK(std::abs(cells[0].value - 119.34) < 0.01);
}

TEST_CASE("map rasters are symmetric around the UAV", "[cli]")
{
    test_util::TempDir dir("cli-map-sym");
    const std::string config = dir.file("scenario.json");
    test_util::write_file(config, R"({
        "environment": "suburban",
        "band_ghz": 73,
        "grid": {"x_min_m": -60, "x_max_m": 60, "y_min_m": -60, "y_max_m": 60,
                 "cell_size_m": 20}
    })");
    const std::string out_csv = dir.file("mean.csv");
    REQUIRE(run_cli("map --config " + config + " --layer mean --out " + out_csv).exit_code == 0);
    std::istringstream in(test_util::read_file(out_csv));
    const auto cells = gta::io::read_raster_csv(in, "mean.csv");
    REQUIRE(cells.size() == 36);
    for (std::size_t iy = 0; iy < 6; ++iy)
        for (std::size_t ix = 0; ix < 6; ++ix)
        {
            CHECK(cells[iy * 6 + ix].value == cells[iy * 6 + (5 - ix)].value);
            CHECK(cells[iy * 6 + ix].value == cells[(5 - iy) * 6 + ix].value);
        }
}

TEST_CASE("map outage layer with no randomness is binary", "[cli]")
{
    test_util::TempDir dir("cli-map-outage");
    const std::string config = dir.file("scenario.json");
    // threshold far below every cell's mean: outage everywhere, regardless
    // of the shadowing draw
    test_util::write_file(config, R"({
        "environment": "urban",
        "band_ghz": 28,
        "grid": {"x_min_m": -40, "x_max_m": 40, "y_min_m": -40, "y_max_m": 40,
                 "cell_size_m": 20},
        "outage": {"max_path_loss_db": 20.0, "n_trials": 50, "seed": 3}
    })");
    const std::string out_csv = dir.file("outage.csv");
    REQUIRE(run_cli("map --config " + config + " --layer outage --out " + out_csv).exit_code ==
            0);
    std::istringstream in(test_util::read_file(out_csv));
    for (const auto &cell : gta::io::read_raster_csv(in, "outage.csv"))
        CHECK(cell.value == 1.0);
}

TEST_CASE("map runs are reproducible for a fixed seed", "[cli]")
{
    test_util::TempDir dir("cli-map-seed");
    const std::string config = dir.file("scenario.json");
    test_util::write_file(config, R"({
        "environment": "high_rise",
        "band_ghz": 73,
        "blockers": {"lambda_per_m2": 0.005, "g_b_m": 0.5, "h_b_m": 1.8},
        "grid": {"x_min_m": -100, "x_max_m": 100, "y_min_m": -100, "y_max_m": 100,
                 "cell_size_m": 25},
        "outage": {"max_path_loss_db": 135.0, "n_trials": 400}
    })");
    const std::string a = dir.file("a.csv");
    const std::string b = dir.file("b.csv");
    const std::string c = dir.file("c.csv");
    REQUIRE(run_cli("--seed 11 map --config " + config + " --layer outage --out " + a)
                .exit_code == 0);
    REQUIRE(run_cli("--seed 11 --threads 4 map --config " + config + " --layer outage --out " +
                    b)
                .exit_code == 0);
    REQUIRE(run_cli("--seed 12 map --config " + config + " --layer outage --out " + c)
                .exit_code == 0);
    CHECK(test_util::read_file(a) == test_util::read_file(b));
    CHECK(test_util::read_file(a) != test_util::read_file(c));
}

TEST_CASE("map produces a ppm when asked", "[cli]")
{
    test_util::TempDir dir("cli-map-ppm");
    const std::string config = dir.file("scenario.json");
    test_util::write_file(config, gta::serialize_config(gta::ScenarioConfig{}));
    const std::string out_csv = dir.file("mean.csv");
    const std::string out_ppm = dir.file("mean.ppm");
    REQUIRE(run_cli("map --config " + config + " --layer mean --out " + out_csv + " --ppm " +
                    out_ppm)
                .exit_code == 0);
    const std::string ppm = test_util::read_file(out_ppm);
    CHECK(ppm.substr(0, 3) == "P6\n");
    CHECK(ppm.find("100 100\n255\n") != std::string::npos);
}

TEST_CASE("map reports usage, data and i/o errors distinctly", "[cli]")
{
    test_util::TempDir dir("cli-map-err");
    const std::string config = dir.file("scenario.json");
    test_util::write_file(config, gta::serialize_config(gta::ScenarioConfig{}));

    CHECK(run_cli("map --config " + config + " --layer sideways --out x.csv").exit_code == 1);
    CHECK(run_cli("map --config " + dir.file("nope.json") + " --layer mean --out x.csv")
              .exit_code == 3);
    CHECK(run_cli("map --config " + config + " --layer mean --out /nonexistent/dir/x.csv")
              .exit_code == 3);

    const std::string bad = dir.file("bad.json");
    test_util::write_file(bad, "{\"environment\": \"urban\", \"typo\": 1}");
    CHECK(run_cli("map --config " + bad + " --layer mean --out " + dir.file("x.csv"))
              .exit_code == 2);
}

TEST_CASE("unknown subcommands and missing arguments are usage errors", "[cli]")
{
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("map --layer mean").exit_code == 1);
}
