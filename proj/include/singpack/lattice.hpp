#pragma once

#include "singpack/linalg.hpp"
#include "singpack/rational.hpp"

#include <string>
#include <vector>

namespace singpack {

/// Coordinates of a degree-2 cohomology class in the dual basis of the model.
/// Poincare duality is the identity on coordinates; the pairing is carried by
/// the intersection matrix.
using CohomologyClass = RationalVec;

using IntVec = std::vector<long>;

struct NamedCurve {
    std::string name;
    IntVec cls;
};

/// Exact lattice data for H^2 of a closed symplectic 4-manifold: integer
/// intersection form, rational symplectic class, named curve classes.
struct LatticeModel {
    int rank = 0;
    std::vector<std::string> basis_names;
    std::vector<IntVec> intersection;  // rank x rank, symmetric
    RationalVec omega;                 // coordinates of [omega]
    std::vector<NamedCurve> curves;

    void validate() const;  // throws std::invalid_argument on bad shape
    const NamedCurve* find_curve(const std::string& name) const;
};

RationalVec to_rational(const IntVec& v);

/// u^T Q v, exact.
Rational pairing(const RationalVec& u, const RationalVec& v,
                 const std::vector<IntVec>& Q);
Rational pairing(const IntVec& u, const IntVec& v,
                 const std::vector<IntVec>& Q);

/// Q([omega],[omega]) / 2.
Rational symplectic_volume(const LatticeModel& m);

/// A = [omega] . c
Rational omega_area(const LatticeModel& m, const IntVec& c);
Rational omega_area(const LatticeModel& m, const RationalVec& c);

} // namespace singpack
