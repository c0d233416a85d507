#pragma once

#include <random>

#include "padwav/wavelet.hpp"

namespace padwav {

using Rng = std::mt19937_64;

/// Finite expansion with valuation uniform in [val_lo, val_hi] and `length`
/// uniform digits (the lowest one nonzero).
PAdic random_finite(Rng& rng, int p, int val_lo, int val_hi, int length);

/// Finite expansion inside `ball`: its center plus `extra` uniform digits at
/// positions >= scale.
PAdic random_point_in(Rng& rng, const Ball& ball, int extra);

/// Rational m / n with |m| <= magnitude, 1 <= n <= magnitude and a random
/// power of p in [val_lo, val_hi] multiplied in. Never zero.
Rational random_rational(Rng& rng, int p, int val_lo, int val_hi, int magnitude);

/// Random coset in Q_p / Z_p with at most `depth` negative digits.
CosetRep random_coset(Rng& rng, int p, int depth);

/// The first `count` cosets in the order 0, 1/p, 2/p, ..., (p-1)/p, 1/p^2, ...
/// (the order of rho(n) = 0, 1, 2, ...).
std::vector<CosetRep> coset_window(int p, int count);

/// Random test function: `cells` distinct balls at `scale`, centers drawn
/// inside p^{-radius} Z_p, values with components uniform in [-1, 1].
SchwartzFunction random_function(Rng& rng, int p, int scale, int radius, int cells);

/// Same, with the values shifted so the integral vanishes.
SchwartzFunction random_mean_zero_function(Rng& rng, int p, int scale, int radius, int cells);

/// Sample points for a function or wavelet supported in `support`: half are
/// inside the support, half are drawn with valuations in
/// [-spread + support.scale(), spread] and may land anywhere.
std::vector<PAdic> sample_points(Rng& rng, const Ball& support, int count, int spread = 4);

/// Support ball p^{-gamma} n + p^{-gamma} Z_p of psi_{gamma n j}.
Ball wavelet_support(const WaveletIndex& idx);

}  // namespace padwav
