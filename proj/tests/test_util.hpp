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

#ifndef GTAPL_TEST_UTIL_HPP
#define GTAPL_TEST_UTIL_HPP

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace test_util
{

// Gaussian tail P(X > threshold) for X ~ N(mean, sigma^2) by composite
// Simpson quadrature of the density. Independent of the library's erfc
// route; accurate to far below the tolerances it is used at.
inline double normal_tail_quadrature(double mean, double sigma, double threshold)
{
    const double z = (threshold - mean) / sigma;
    const double upper = z + 16.0; // density is ~1e-56 here; the remainder is negligible
    const int n = 40000;           // even
    const double h = (upper - z) / n;
    auto pdf = [](double t) {
        return std::exp(-0.5 * t * t) / std::sqrt(2.0 * std::numbers::pi);
    };
    double sum = pdf(z) + pdf(upper);
    for (int i = 1; i < n; ++i)
        sum += pdf(z + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

// Scratch directory, removed on destruction.
class TempDir
{
  public:
    explicit TempDir(const std::string &tag)
    {
        auto base = std::filesystem::temp_directory_path();
        for (int i = 0; i < 1000; ++i)
        {
            auto candidate = base / ("gtapl-" + tag + "-" + std::to_string(::getpid()) + "-" +
                                     std::to_string(counter_++));
            std::error_code ec;
            if (std::filesystem::create_directory(candidate, ec))
            {
                path_ = candidate;
                return;
            }
        }
        throw std::runtime_error("cannot create temp directory");
    }

    ~TempDir()
    {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }

    TempDir(const TempDir &) = delete;
    TempDir &operator=(const TempDir &) = delete;

    std::filesystem::path path() const { return path_; }
    std::string file(const std::string &name) const { return (path_ / name).string(); }

  private:
    static inline int counter_ = 0;
    std::filesystem::path path_;
};

inline void write_file(const std::string &path, const std::string &content)
{
    std::ofstream out(path, std::ios::binary);
    out << content;
}

inline std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CliResult
{
    int exit_code;
    std::string out;
    std::string err;
};

// Path of the built CLI binary: compile-time default, overridable via the
// GTAPL_CLI environment variable.
inline std::string cli_path()
{
    if (const char *env = std::getenv("GTAPL_CLI"))
        return env;
#ifdef GTAPL_CLI_PATH
    return GTAPL_CLI_PATH;
#else
    return "gtapl";
#endif
}

// Runs the CLI with the given argument string, capturing stdout/stderr.
inline CliResult run_cli(const std::string &args)
{
    TempDir dir("cli-capture");
    const std::string out_file = dir.file("out");
    const std::string err_file = dir.file("err");
    const std::string cmd =
        "\"" + cli_path() + "\" " + args + " >\"" + out_file + "\" 2>\"" + err_file + "\"";
    const int raw = std::system(cmd.c_str());
    int code = -1;
    if (raw != -1)
        code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return CliResult{code, read_file(out_file), read_file(err_file)};
}

} // namespace test_util

#endif
