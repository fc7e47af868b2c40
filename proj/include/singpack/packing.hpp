#pragma once

#include "singpack/lattice.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace singpack {

/// Thrown when an asserted exact identity fails (e.g. the packing ledger);
/// distinct from malformed-input errors so callers can map exit codes.
struct invariant_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Curve classes with weights forming the symplectic class, plus a global
/// shrinkage epsilon. Areas A_i are derived from the model.
struct Polarization {
    LatticeModel model;
    std::vector<IntVec> classes;
    RationalVec weights;   // a_i >= 0
    Rational epsilon;      // >= 0, uniform over the pieces

    /// Throws std::invalid_argument when sum a_i PD(S_i) != [omega], when a
    /// cross intersection S_i . S_j (i != j) is negative, or on bad shapes.
    void validate() const;

    Rational area(size_t i) const;                 // A_i = omega . S_i
    Rational self_intersection(size_t i) const;    // S_i . S_i
    Rational cross_area(size_t i) const;           // sum_{j!=i} a_j S_i.S_j
};

struct EllipsoidPiece {
    Rational capacity_base;   // A_i - epsilon
    Rational capacity_fiber;  // a_i
    Rational gromov_width() const;
    Rational volume() const;  // capacity_base * capacity_fiber / 2
};

struct PackingReport {
    std::vector<EllipsoidPiece> ellipsoids;
    RationalVec piece_volumes;
    Rational total_volume;
    Rational manifold_volume;
    Rational residual;  // manifold_volume - total_volume
};

struct GammaCoefficients {
    RationalVec gamma;        // per curve
    RationalVec shrunk_area;  // A^eps_{tau_i} = a_i S_i.S_i + (1-eps) cross
};

/// The pieces E(A_i - eps, a_i). Throws on a degenerate piece (A_i - eps <= 0).
std::vector<EllipsoidPiece> ellipsoid_parameters(const Polarization& p);

/// gamma_i = a_i S_i.S_i / [a_i S_i.S_i + (1-eps) sum_{j!=i} a_j S_i.S_j],
/// zero when S_i.S_i = 0. Throws when the denominator vanishes for a curve
/// with nonzero self-intersection.
GammaCoefficients gamma_coefficients(const Polarization& p);

/// Exact volume ledger of the packing. At eps = 0 the residual is exactly 0.
PackingReport packing_report(const Polarization& p);

struct PeriodVerdict {
    bool pass = false;
    std::string note;
    std::optional<RationalVec> witness;  // kernel vector on failure
};

/// PASS iff "sum f_i class_i = 0 implies f = 0" holds for this f; otherwise
/// FAIL with f as the witnessing kernel vector.
PeriodVerdict period_obstruction(const RationalVec& f,
                                 const std::vector<RationalVec>& classes);

} // namespace singpack
