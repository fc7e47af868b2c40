#pragma once

#include "singpack/localmodel.hpp"
#include "singpack/toric.hpp"

#include <cstdint>

namespace singpack {

/// Sampled invariant checks for the local model and the product toric field.
/// All randomness is driven by the given seed (mt19937_64).

/// max |iota_X omega - lambda|_inf over n quasi-random domain points.
double max_liouville_defect(const DiscBundleChart& c, int n, std::uint64_t seed);

/// max |FD d(lambda) + omega| over n points, central differences at step h.
double max_exactness_defect(const DiscBundleChart& c, int n, std::uint64_t seed,
                            double h);

/// max pullback_defect over a per_axis^4 grid in (P, zeta, R, theta).
double max_pullback_defect_grid(const DiscBundleChart& c, int per_axis, double h);

/// max |closed-form flow - RK4| over n sampled (point, t) pairs, t in [0, tmax].
double max_flow_vs_rk4(const DiscBundleChart& c, int n, std::uint64_t seed,
                       double tmax, double dt);

/// fraction of n random image points with inequality margin > `margin` on
/// which the analytic and dynamic basin routes agree (1.0 = full agreement).
double basin_agreement_fraction(const DiscBundleChart& c, int n,
                                std::uint64_t seed, double margin);

/// Monte Carlo basin volume over the chart, weighted by the symplectic
/// density a (1 - gamma R); converges to (A - delta) a / 2.
double monte_carlo_basin_volume(const DiscBundleChart& c, long n,
                                std::uint64_t seed);

/// max euclidean distance from the separatrix line over `points` forward RK4
/// trajectories started on the line, t in [0, tmax].
double max_separatrix_drift(const ToricField& f, int points, double dt,
                            double tmax);

/// fraction of n random rectangle points with |R2 a1 - R1 a2| > margin on
/// which the sign test and the flow-based classification agree.
double classify_agreement_fraction(const ToricField& f, int n,
                                   std::uint64_t seed, double margin);

} // namespace singpack
