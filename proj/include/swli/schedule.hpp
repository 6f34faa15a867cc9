#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "swli/errors.hpp"
#include "swli/hashing.hpp"
#include "swli/tensor.hpp"

namespace swli {

// Timestep tag for clean (fully denoised) data. alpha_bar at the sentinel is
// 1 by convention, which makes the final denoising step and the first
// inversion step ordinary ddim steps.
inline constexpr int kCleanTimestep = -1;

// A latent sample tagged with its training-timestep index.
struct Latent {
    int channels = 0;
    int height   = 0;
    int width    = 0;
    int timestep = kCleanTimestep;
    std::vector<float> values;

    Latent() = default;
    Latent(int c, int h, int w, int t = kCleanTimestep)
        : channels(c), height(h), width(w), timestep(t), values(static_cast<size_t>(c) * h * w, 0.0f) {}

    size_t size() const { return values.size(); }
    bool same_shape(const Latent& o) const {
        return channels == o.channels && height == o.height && width == o.width;
    }
};

// Variance schedule: cumulative alpha products over the training timesteps
// plus the descending sampling subsequence. alpha_bars are kept in double so
// the step coefficients below lose nothing before the final f32 rounding.
struct NoiseSchedule {
    int num_train_steps  = 0;
    int num_sample_steps = 0;
    std::vector<double> alpha_bars;  // indexed by training timestep
    std::vector<int> timesteps;      // strictly decreasing, length num_sample_steps

    double alpha_bar_at(int t) const {
        if (t == kCleanTimestep) return 1.0;
        if (t < 0 || t >= num_train_steps)
            throw ContractError("timestep " + std::to_string(t) + " outside [0, " +
                                std::to_string(num_train_steps) + ")");
        return alpha_bars[static_cast<size_t>(t)];
    }

    uint64_t fingerprint() const {
        uint64_t h = fnv1a_value(num_train_steps);
        h          = fnv1a_value(num_sample_steps, h);
        h          = fnv1a_range(alpha_bars, h);
        h          = fnv1a_range(timesteps, h);
        return h;
    }
};

// Linear beta ramp, alpha_bars[t] = prod_{i<=t} (1 - beta_i), and an evenly
// spaced descending sampling subsequence covering [0, num_train_steps-1].
inline NoiseSchedule build_schedule(int num_train_steps, double beta_start, double beta_end,
                                    int num_sample_steps) {
    if (num_train_steps <= 0)
        throw ConfigError("num_train_steps must be positive (got " + std::to_string(num_train_steps) + ")");
    if (num_sample_steps <= 0)
        throw ConfigError("num_sample_steps must be positive (got " + std::to_string(num_sample_steps) + ")");
    if (!(beta_start > 0.0))
        throw ConfigError("beta_start must be > 0 (got " + std::to_string(beta_start) + ")");
    if (!(beta_end < 1.0))
        throw ConfigError("beta_end must be < 1 (got " + std::to_string(beta_end) + ")");
    if (beta_start > beta_end)
        throw ConfigError("beta_start must not exceed beta_end (got beta_start=" +
                          std::to_string(beta_start) + ", beta_end=" + std::to_string(beta_end) + ")");
    if (num_sample_steps > num_train_steps)
        throw ConfigError("num_sample_steps (" + std::to_string(num_sample_steps) +
                          ") must not exceed num_train_steps (" + std::to_string(num_train_steps) + ")");

    NoiseSchedule s;
    s.num_train_steps  = num_train_steps;
    s.num_sample_steps = num_sample_steps;
    s.alpha_bars.resize(static_cast<size_t>(num_train_steps));
    double product = 1.0;
    for (int i = 0; i < num_train_steps; ++i) {
        double beta = (num_train_steps == 1)
                          ? beta_start
                          : beta_start + (beta_end - beta_start) * (static_cast<double>(i) / (num_train_steps - 1));
        product *= 1.0 - beta;
        s.alpha_bars[static_cast<size_t>(i)] = product;
    }

    s.timesteps.resize(static_cast<size_t>(num_sample_steps));
    for (int k = 0; k < num_sample_steps; ++k) {
        // descending from num_train_steps-1 to 0, both endpoints included
        double pos = (num_sample_steps == 1)
                         ? static_cast<double>(num_train_steps - 1)
                         : static_cast<double>(num_train_steps - 1) *
                               (static_cast<double>(num_sample_steps - 1 - k) / (num_sample_steps - 1));
        s.timesteps[static_cast<size_t>(k)] = static_cast<int>(std::lround(pos));
    }
    for (int k = 1; k < num_sample_steps; ++k) {
        if (s.timesteps[static_cast<size_t>(k)] >= s.timesteps[static_cast<size_t>(k - 1)])
            throw ConfigError("num_sample_steps too large for a strictly decreasing timestep subsequence");
    }
    return s;
}

namespace detail {

// z' = A z + B eps with A = sqrt(abar_to/abar_from) and
// B = sqrt(1-abar_to) - A sqrt(1-abar_from): the eta=0 update through the
// predicted clean sample, folded into one affine form. A==1, B==0 exactly
// when both timesteps coincide.
struct StepCoeffs {
    double a;
    double b;
};

inline StepCoeffs step_coeffs(double abar_from, double abar_to) {
    double a = std::sqrt(abar_to / abar_from);
    double b = std::sqrt(1.0 - abar_to) - a * std::sqrt(1.0 - abar_from);
    return {a, b};
}

inline Latent apply_step(const Latent& z, const std::vector<float>& eps, int t_from, int t_to,
                         const NoiseSchedule& schedule, bool denoise) {
    if (eps.size() != z.size())
        throw ContractError("eps shape does not match latent (" + std::to_string(eps.size()) + " vs " +
                            std::to_string(z.size()) + " values)");
    if (!all_finite(eps)) throw NumericError("non-finite eps supplied to ddim step");

    double abar_from = schedule.alpha_bar_at(t_from);
    double abar_to   = schedule.alpha_bar_at(t_to);
    if (denoise) {
        if (!(abar_to >= abar_from))
            throw ContractError("ddim_step requires the denoising direction (t_to=" + std::to_string(t_to) +
                                " must precede t_from=" + std::to_string(t_from) + ")");
    } else {
        if (!(abar_to <= abar_from))
            throw ContractError("ddim_inverse_step requires the noising direction (t_to=" +
                                std::to_string(t_to) + " must succeed t_from=" + std::to_string(t_from) + ")");
    }

    auto [a, b] = step_coeffs(abar_from, abar_to);
    Latent out(z.channels, z.height, z.width, t_to);
    for (size_t i = 0; i < z.size(); ++i)
        out.values[i] = static_cast<float>(a * static_cast<double>(z.values[i]) +
                                           b * static_cast<double>(eps[i]));
    return out;
}

}  // namespace detail

// Deterministic DDIM update in the denoising direction (t_to precedes t_from).
inline Latent ddim_step(const Latent& z, const std::vector<float>& eps, int t_from, int t_to,
                        const NoiseSchedule& schedule) {
    return detail::apply_step(z, eps, t_from, t_to, schedule, /*denoise=*/true);
}

// The same update in the noising direction; exact algebraic inverse of
// ddim_step when the same eps is supplied.
inline Latent ddim_inverse_step(const Latent& z, const std::vector<float>& eps, int t_from, int t_to,
                                const NoiseSchedule& schedule) {
    return detail::apply_step(z, eps, t_from, t_to, schedule, /*denoise=*/false);
}

}  // namespace swli
