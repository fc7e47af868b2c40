#pragma once

#include "singpack/lattice.hpp"

#include <vector>

namespace singpack {

/// b written as a positively weighted barycenter of nearby grid points of
/// (Z/q)^n. Weights sum to 1 and reconstruct b exactly.
struct BarycentricDecomposition {
    std::vector<RationalVec> vertices;
    RationalVec weights;
    long grid_denominator = 1;
    Rational max_deviation;  // max-norm distance of the farthest vertex from b

    void validate(const RationalVec& b) const;  // throws on broken invariants
};

/// Candidate polarization data: integral classes with positive weights whose
/// weighted sum is [omega].
struct PolarizationSketch {
    std::vector<IntVec> classes;
    RationalVec weights;
    std::vector<long> clearing_factors;
};

/// Barycentric decomposition of b over the Kuhn (Freudenthal) simplex of the
/// grid cell of (Z/q)^n containing b. At most n+1 vertices; zero-weight
/// vertices are dropped. Fractional-part ties break by ascending coordinate
/// index.
BarycentricDecomposition kuhn_simplex(const RationalVec& b, long q);

struct ReducedSystem {
    std::vector<RationalVec> classes;
    RationalVec weights;
    std::vector<size_t> kept_indices;  // positions surviving from the input
};

/// Eliminates linear relations among the classes while preserving the
/// weighted sum exactly and keeping all weights nonnegative. At each step the
/// removed index minimizes |a_N / lambda_N| over the discovered relation
/// (ties: larger |lambda_N|, then smaller index).
ReducedSystem reduce_dependent(std::vector<RationalVec> classes, RationalVec a);

/// Least positive k with k*c integral, and the integral class.
std::pair<long, IntVec> clear_denominators(const RationalVec& c);

/// kuhn_simplex -> clear_denominators per vertex -> a_j = lambda_j / k_j ->
/// reduce_dependent. Output classes are linearly independent and
/// sum (a_j * class_j) = [omega] exactly.
PolarizationSketch synthesize_polarization(const LatticeModel& m, long q);

} // namespace singpack
