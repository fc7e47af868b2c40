#pragma once

#include "singpack/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace singpack {

using Vec2 = std::array<Rational, 2>;

/// Convex rational polygon in moment coordinates (R1, R2), vertices
/// counterclockwise.
struct Polytope {
    std::vector<Vec2> vertices;

    Rational area() const;      // shoelace, exact
    void validate() const;      // convexity and positive area
};

Polytope rectangle(const Rational& w, const Rational& h);
Polytope ellipsoid_triangle(const Rational& a, const Rational& b);

/// Delzant corner chop: replaces vertex `corner` by the two points at
/// parameter mu along the primitive directions of its edges. Removes area
/// mu^2/2 at a unimodular corner. Throws when mu reaches an edge length.
Polytope chop(const Polytope& p, size_t corner, const Rational& mu);

/// The product model S^2 x S^2 with sphere areas (area1, area2); the Liouville
/// flow on moment coordinates is (R1dot, R2dot) = (area1 - R1, area2 - R2).
struct ToricField {
    Rational area1;
    Rational area2;
};

enum class BasinLabel { Sigma1, Sigma2, Separatrix };

/// Analytic label by the sign of R2*area1 - R1*area2 (exact): negative side
/// is the basin of Sigma1 (the R2 = 0 edge).
BasinLabel classify_point(const ToricField& f, const Vec2& p);

/// Same label via backward RK4 integration of the flow, detecting which
/// boundary edge is approached. dt and the boundary margin are fixed small.
BasinLabel classify_by_flow(const ToricField& f, double R1, double R2,
                            double dt = 1e-3, double margin = 1e-6);

/// Both basins are triangles of area (area1*area2)/2.
std::pair<Rational, Rational> basin_areas(const ToricField& f);

struct CubicPiece {
    std::string name;
    Rational capacity_base;
    Rational capacity_fiber;
    Rational volume;
};

/// The three-piece packing of P^2 induced by a singular cubic through a ball
/// of capacity mu: B(mu), E(3-2mu, 1/3), E(mu, 2/3-mu). Valid for mu < 2/3.
struct CubicReport {
    Rational mu;
    std::vector<CubicPiece> pieces;
    Rational total_volume;          // exactly 1/2
    bool identity_holds = false;    // l - mu e = (1/3)(3l - 2e) + (2/3 - mu) e
    Polytope blowup_polytope;       // P^2 triangle with the corner chopped
};

CubicReport cubic_pipeline(const Rational& mu);

} // namespace singpack
