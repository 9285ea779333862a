// SPDX-License-Identifier: Apache-2.0
//
// sinuous-disp: dispersion modelling and pulse compression for sinuous antennas
// Copyright (C) 2026 The sinuous-disp Authors
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

#include "sinuous/fitting.hpp"
#include "sinuous/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace sinuous
{
    namespace
    {
        constexpr double band_tol = 1e-9;

        // In-band samples of a reference curve with their weights.
        struct BandSamples
        {
            std::vector<double> f;
            std::vector<double> log_f;
            std::vector<double> ref;
            std::vector<double> w;
            double w_sum = 0.0;
        };

        BandSamples select_band(const PhaseCurve &reference, FitBand band, Weighting weighting)
        {
            reference.validate();
            detail::require(band.f_min < band.f_max, "fit band needs f_min < f_max");
            const auto &g = reference.grid;
            const double slack = band_tol * g.f_step;
            detail::require(band.f_min >= g.f_start - slack && band.f_max <= g.f_end() + slack,
                            "fit band must lie within the reference grid");

            BandSamples s;
            for (std::size_t k = 0; k < g.n; ++k)
            {
                const double f = g.frequency(k);
                if (f < band.f_min - slack || f > band.f_max + slack || f <= 0.0)
                    continue;
                const double w = weighting == Weighting::uniform ? 1.0 : 1.0 / f;
                s.f.push_back(f);
                s.log_f.push_back(std::log(f));
                s.ref.push_back(reference.phase[k]);
                s.w.push_back(w);
                s.w_sum += w;
            }
            if (s.f.empty())
                throw InvalidArgument("fit band contains no reference samples");
            return s;
        }

        struct Moments
        {
            double offset;    // weighted mean of model - reference
            double objective; // weighted mean square after removing the offset
        };

        template <typename PhaseFn>
        Moments moments(const BandSamples &s, PhaseFn &&phase_at)
        {
            double mean = 0.0;
            std::vector<double> diff(s.f.size());
            for (std::size_t i = 0; i < diff.size(); ++i)
            {
                diff[i] = phase_at(i) - s.ref[i];
                mean += s.w[i] * diff[i];
            }
            mean /= s.w_sum;
            double acc = 0.0;
            for (std::size_t i = 0; i < diff.size(); ++i)
            {
                const double d = diff[i] - mean;
                acc += s.w[i] * d * d;
            }
            return {mean, acc / s.w_sum};
        }

        Moments model_moments(const DispersionModel &model, const BandSamples &s)
        {
            const double log_f0 = std::log(model.f0);
            if (!model.f_low)
                return moments(s, [&](std::size_t i) { return -model.phi0 * (s.log_f[i] - log_f0); });

            const double f_low = *model.f_low;
            const double at_cap = -model.phi0 * (std::log(f_low) - log_f0);
            const double slope = *model.tau_c * 2.0 * pi;
            return moments(s, [&](std::size_t i) {
                if (s.f[i] < f_low)
                    return at_cap + slope * (f_low - s.f[i]);
                return -model.phi0 * (s.log_f[i] - log_f0);
            });
        }

        double logistic(double x)
        {
            return 1.0 / (1.0 + std::exp(-x));
        }

        double logit(double p)
        {
            return std::log(p / (1.0 - p));
        }

        // Free coordinates of a fit and how they map back to a model.
        class Parameterization
        {
        public:
            Parameterization(const FitConfig &config, const BandSamples &samples, bool with_cap)
                : config_(config), with_cap_(with_cap)
            {
                // w0 only shifts the curve by a constant, which the objective
                // ignores, so it is held at a value safely above the band.
                f0_eval_ = std::max(config.init.f0, 2.0 * samples.f.back());
                log_lo_ = std::log(samples.f.front());
                log_hi_ = std::log(samples.f.back());
            }

            std::size_t size() const { return with_cap_ ? (config_.tau_c_continuous ? 2 : 3) : 1; }

            std::vector<double> initial() const
            {
                std::vector<double> x{std::log(config_.init.phi0)};
                if (!with_cap_)
                    return x;

                double f_low = config_.init.f_low.value_or(std::exp(log_lo_ + 0.25 * (log_hi_ - log_lo_)));
                x.push_back(logit(cap_fraction(f_low)));
                if (!config_.tau_c_continuous)
                {
                    const double tau_c = config_.init.tau_c.value_or(config_.init.phi0 / (2.0 * pi * f_low));
                    x.push_back(std::log(tau_c));
                }
                return x;
            }

            // Multiplies every physical parameter by a factor in [0.5, 2].
            std::vector<double> perturbed(std::mt19937_64 &rng) const
            {
                std::uniform_real_distribution<double> log_factor(-std::log(2.0), std::log(2.0));
                auto x = initial();
                x[0] += log_factor(rng);
                if (with_cap_)
                {
                    const double f_low = std::exp(log_lo_ + logistic(x[1]) * (log_hi_ - log_lo_));
                    x[1] = logit(cap_fraction(f_low * std::exp(log_factor(rng))));
                    if (!config_.tau_c_continuous)
                        x[2] += log_factor(rng);
                }
                return x;
            }

            std::vector<double> step() const
            {
                std::vector<double> s(size(), 0.2);
                if (with_cap_)
                    s[1] = 0.5;
                return s;
            }

            DispersionModel model(const std::vector<double> &x) const
            {
                DispersionModel m;
                m.phi0 = std::exp(x[0]);
                m.f0 = f0_eval_;
                if (with_cap_)
                {
                    const double f_low = std::exp(log_lo_ + logistic(x[1]) * (log_hi_ - log_lo_));
                    m.f_low = f_low;
                    m.tau_c = config_.tau_c_continuous ? m.phi0 / (2.0 * pi * f_low) : std::exp(x[2]);
                }
                else if (config_.init.f_low)
                {
                    m.f_low = config_.init.f_low;
                    m.tau_c = config_.init.tau_c;
                }
                return m;
            }

        private:
            // Position of f inside the band on a log scale, kept off the ends.
            double cap_fraction(double f) const
            {
                const double u = (std::log(f) - log_lo_) / (log_hi_ - log_lo_);
                return std::clamp(u, 1e-3, 1.0 - 1e-3);
            }

            const FitConfig &config_;
            bool with_cap_;
            double f0_eval_;
            double log_lo_;
            double log_hi_;
        };

        FitResult run_fit(const PhaseCurve &reference, const FitConfig &config, bool with_cap)
        {
            config.validate();
            const auto samples = select_band(reference, config.band, config.weighting);
            const Parameterization par(config, samples, with_cap);

            auto objective = [&](const std::vector<double> &x) {
                const auto m = par.model(x);
                const double v = model_moments(m, samples).objective;
                return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
            };

            SimplexResult best{{}, std::numeric_limits<double>::infinity(), 0, false};
            int best_restart = -1;
            for (int r = 0; r < config.restarts; ++r)
            {
                std::vector<double> start;
                if (r == 0)
                    start = par.initial();
                else
                {
                    std::mt19937_64 rng(config.seed * 1000003ULL + static_cast<std::uint64_t>(r));
                    start = par.perturbed(rng);
                }
                if (!std::isfinite(objective(start)))
                    continue;
                auto res = nelder_mead(objective, start, par.step(), config.max_iters, config.tol);
                // Re-seed the simplex at the optimum; a collapsed simplex can
                // stall short of the minimum on the kinked capped objective.
                for (int polish = 0; polish < 3 && res.iterations < config.max_iters; ++polish)
                {
                    auto again = nelder_mead(objective, res.x, par.step(), config.max_iters - res.iterations,
                                             config.tol);
                    const bool improved = again.value < res.value * (1.0 - 1e-9);
                    again.iterations += res.iterations;
                    res = std::move(again);
                    if (!improved)
                        break;
                }
                if (res.value < best.value)
                {
                    best = std::move(res);
                    best_restart = r;
                }
            }
            if (best_restart < 0)
                throw NumericError("fit: objective is not finite at any starting point");

            DispersionModel model = par.model(best.x);
            const auto mom = model_moments(model, samples);

            // Absorb the optimal offset into w0 so the model also matches the
            // reference level: -phi0 ln(w/w0) - c = -phi0 ln(w/w0').
            model.f0 = model.f0 * std::exp(-mom.offset / model.phi0);
            if (!std::isfinite(model.f0) || (model.f_low && *model.f_low >= model.f0))
                throw NumericError("fit: the reference level puts the zero-phase frequency below the cap cutoff");
            model.validate();

            FitResult result;
            result.model = model;
            result.rms_residual = std::sqrt(std::max(mom.objective, 0.0));
            result.iterations = best.iterations;
            result.converged = best.converged;
            result.best_restart = best_restart;

            if (with_cap)
            {
                const auto below = static_cast<std::size_t>(std::count_if(
                    samples.f.begin(), samples.f.end(), [&](double f) { return f < *model.f_low; }));
                bool sensitive = false;
                if (!config.tau_c_continuous)
                {
                    DispersionModel probe = model;
                    probe.tau_c = *model.tau_c * 1.1;
                    const double bumped = model_moments(probe, samples).objective;
                    sensitive = bumped - mom.objective > 1e-12 * (mom.objective + 1e-30);
                }
                else
                    sensitive = true;
                result.tau_c_identified = below >= 3 && sensitive;
            }
            return result;
        }
    }

    void FitConfig::validate() const
    {
        detail::require(band.f_min < band.f_max, "fit band needs f_min < f_max");
        detail::require(band.f_min > 0.0, "fit band must start above 0 Hz");
        detail::require(restarts >= 1, "restarts must be >= 1");
        detail::require(max_iters >= 1, "max_iters must be >= 1");
        detail::require(tol > 0.0, "tol must be > 0");
        init.validate();
    }

    double phase_objective(const DispersionModel &model, const PhaseCurve &reference, FitBand band,
                           Weighting weighting)
    {
        model.validate();
        return model_moments(model, select_band(reference, band, weighting)).objective;
    }

    double phase_offset(const DispersionModel &model, const PhaseCurve &reference, FitBand band,
                        Weighting weighting)
    {
        model.validate();
        return model_moments(model, select_band(reference, band, weighting)).offset;
    }

    FitResult fit(const PhaseCurve &reference, const FitConfig &config)
    {
        return run_fit(reference, config, false);
    }

    FitResult fit_with_cap(const PhaseCurve &reference, const FitConfig &config)
    {
        detail::require(config.fit_cap, "fit_with_cap needs a config with fit_cap enabled");
        return run_fit(reference, config, true);
    }

    SimplexResult nelder_mead(const std::function<double(const std::vector<double> &)> &objective,
                              std::vector<double> start, const std::vector<double> &step, int max_iters,
                              double tol)
    {
        const std::size_t dim = start.size();
        detail::require(dim >= 1 && step.size() == dim, "simplex start and step sizes differ");

        constexpr double reflect = 1.0, expand = 2.0, contract = 0.5, shrink = 0.5;

        std::vector<std::vector<double>> pts(dim + 1, start);
        for (std::size_t i = 0; i < dim; ++i)
            pts[i + 1][i] += step[i];
        std::vector<double> val(dim + 1);
        for (std::size_t i = 0; i <= dim; ++i)
            val[i] = objective(pts[i]);

        std::vector<std::size_t> order(dim + 1);
        auto sort_simplex = [&]() {
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return val[a] < val[b]; });
        };

        auto point = [&](const std::vector<double> &centroid, const std::vector<double> &from, double coef) {
            std::vector<double> p(dim);
            for (std::size_t j = 0; j < dim; ++j)
                p[j] = centroid[j] + coef * (centroid[j] - from[j]);
            return p;
        };

        int it = 0;
        bool converged = false;
        for (; it < max_iters; ++it)
        {
            sort_simplex();
            const std::size_t best = order.front(), worst = order.back(), second = order[dim - 1];
            const double f_best = val[best], f_worst = val[worst];

            double extent = 0.0;
            for (std::size_t i = 0; i <= dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    extent = std::max(extent, std::abs(pts[i][j] - pts[best][j]));

            if (f_worst - f_best <= tol * std::abs(f_best) + 1e-300 || extent <= 1e-13)
            {
                converged = true;
                break;
            }

            std::vector<double> centroid(dim, 0.0);
            for (std::size_t i = 0; i <= dim; ++i)
                if (i != worst)
                    for (std::size_t j = 0; j < dim; ++j)
                        centroid[j] += pts[i][j] / static_cast<double>(dim);

            auto xr = point(centroid, pts[worst], reflect);
            const double fr = objective(xr);
            if (fr < f_best)
            {
                auto xe = point(centroid, pts[worst], expand);
                const double fe = objective(xe);
                if (fe < fr)
                {
                    pts[worst] = std::move(xe);
                    val[worst] = fe;
                }
                else
                {
                    pts[worst] = std::move(xr);
                    val[worst] = fr;
                }
                continue;
            }
            if (fr < val[second])
            {
                pts[worst] = std::move(xr);
                val[worst] = fr;
                continue;
            }

            const bool outside = fr < f_worst;
            auto xc = outside ? point(centroid, pts[worst], contract) : point(centroid, pts[worst], -contract);
            const double fc = objective(xc);
            if (fc < (outside ? fr : f_worst))
            {
                pts[worst] = std::move(xc);
                val[worst] = fc;
                continue;
            }

            for (std::size_t i = 0; i <= dim; ++i)
            {
                if (i == best)
                    continue;
                for (std::size_t j = 0; j < dim; ++j)
                    pts[i][j] = pts[best][j] + shrink * (pts[i][j] - pts[best][j]);
                val[i] = objective(pts[i]);
            }
        }

        sort_simplex();
        return {pts[order.front()], val[order.front()], it, converged};
    }
}
