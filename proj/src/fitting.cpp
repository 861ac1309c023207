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

#include "gta/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <vector>

#include "gta/error.hpp"

namespace gta
{

FitResult fit_log_distance(std::span<const MeasurementSample> samples, LinkType link)
{
    std::vector<double> x; // 10*log10(d)
    std::vector<double> y; // path loss [dB]
    double d_min = std::numeric_limits<double>::infinity();
    double d_max = -std::numeric_limits<double>::infinity();

    for (const MeasurementSample &s : samples)
    {
        if (s.link != link)
            continue;
        if (!(s.distance_m > 0.0))
            throw Error(errc::domain, "sample distance must be > 0 m");
        if (!std::isfinite(s.path_loss_db))
            throw Error(errc::domain, "sample path loss must be finite");
        x.push_back(10.0 * std::log10(s.distance_m));
        y.push_back(s.path_loss_db);
        d_min = std::min(d_min, s.distance_m);
        d_max = std::max(d_max, s.distance_m);
    }

    const std::size_t n = x.size();
    if (n < 2)
    {
        std::ostringstream msg;
        msg << "need at least 2 " << to_string(link) << " samples to fit, got " << n;
        throw Error(errc::insufficient_data, msg.str());
    }

    // Centered normal equations: with only two free parameters, subtracting
    // the means removes the dominant conditioning hazard of the
    // log-distance regressor.
    double x_mean = 0.0, y_mean = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        x_mean += x[i];
        y_mean += y[i];
    }
    x_mean /= static_cast<double>(n);
    y_mean /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        const double dx = x[i] - x_mean;
        sxx += dx * dx;
        sxy += dx * (y[i] - y_mean);
    }

    if (sxx <= 1e-12 * static_cast<double>(n) * (x_mean * x_mean + 1.0))
        throw Error(errc::rank_deficient,
                    "all sample distances are identical; slope is undetermined");

    const double beta = sxy / sxx;
    const double alpha = y_mean - beta * x_mean;

    // Maximum-likelihood residual variance (divisor n, no small-sample
    // correction), so sigma_sq and residual_rms_db are consistent.
    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        const double e = y[i] - (alpha + beta * x[i]);
        ss_res += e * e;
    }
    const double sigma_sq = ss_res / static_cast<double>(n);

    return FitResult{
        ModelParams{alpha, beta, sigma_sq}, n, std::sqrt(sigma_sq), d_min, d_max,
    };
}

ScenarioFit fit_scenario(std::span<const MeasurementSample> samples)
{
    std::size_t n_los = 0, n_nlos = 0;
    for (const MeasurementSample &s : samples)
        (s.link == LinkType::Los ? n_los : n_nlos)++;

    if (n_los < 2 && n_nlos < 2)
        throw Error(errc::insufficient_data, "need at least 2 samples of each link type");
    if (n_los < 2)
        throw Error(errc::partial_data, "no usable LOS samples (need at least 2)");
    if (n_nlos < 2)
        throw Error(errc::partial_data, "no usable NLOS samples (need at least 2)");

    return ScenarioFit{
        fit_log_distance(samples, LinkType::Los),
        fit_log_distance(samples, LinkType::Nlos),
    };
}

namespace
{

void append_fit_row(std::ostringstream &out, LinkType link, const FitResult &fit,
                    const ModelParams *ref)
{
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%-5s %9zu %9.2f %8.3f %9.3f %8.3f %9.1f %9.1f",
                  std::string(to_string(link)).c_str(), fit.n_samples, fit.params.alpha,
                  fit.params.beta, fit.params.sigma_sq, fit.residual_rms_db, fit.min_distance_m,
                  fit.max_distance_m);
    out << buf;
    if (ref != nullptr)
    {
        std::snprintf(buf, sizeof(buf), " %9.2f %8.3f %9.3f %9.4f %8.4f %9.4f", ref->alpha,
                      ref->beta, ref->sigma_sq, std::fabs(fit.params.alpha - ref->alpha),
                      std::fabs(fit.params.beta - ref->beta),
                      std::fabs(fit.params.sigma_sq - ref->sigma_sq));
        out << buf;
    }
    out << '\n';
}

} // namespace

std::string fit_report(const ScenarioFit &fits, const std::optional<ReferenceParams> &reference)
{
    std::ostringstream out;
    out << "least-squares fit of PL = alpha + beta * 10log10(d)\n";
    if (reference)
        out << "reference: " << reference->label << '\n';
    out << "link  n_samples     alpha     beta  sigma_sq   rms_db   d_min_m   d_max_m";
    if (reference)
        out << " ref_alpha ref_beta ref_s_sq   d_alpha   d_beta  d_sig_sq";
    out << '\n';
    append_fit_row(out, LinkType::Los, fits.los, reference ? &reference->los : nullptr);
    append_fit_row(out, LinkType::Nlos, fits.nlos, reference ? &reference->nlos : nullptr);
    return out.str();
}

} // namespace gta
