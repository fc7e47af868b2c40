#pragma once

#include <array>
#include <cstdint>

namespace singpack {

/// Trivialized disc-bundle chart over a base disc of area A, fiber weight a,
/// curvature coefficient gamma (may be <= 0), base shrinkage delta.
/// Coordinates are (P, zeta, R, theta): base radius squared, base angle,
/// fiber radius squared, fiber angle; angles valued in R/Z.
struct DiscBundleChart {
    double a = 1.0;
    double gamma = 0.0;
    double A = 1.0;
    double delta = 0.0;

    void validate() const;  // a > 0, A - delta > 0, delta >= 0
};

struct ChartPoint {
    double P = 0.0;
    double zeta = 0.0;
    double R = 0.0;
    double theta = 0.0;
};

/// Point in ellipsoid coordinates (P', zeta', R', theta'), the image of the
/// chart under the bundle-to-ellipsoid map.
struct ImagePoint {
    double P = 0.0;
    double zeta = 0.0;
    double R = 0.0;
    double theta = 0.0;
};

using OneForm = std::array<double, 4>;                 // covector components
using TwoForm = std::array<std::array<double, 4>, 4>;  // antisymmetric matrix

struct ChartForms {
    TwoForm omega;
    OneForm lambda;
    OneForm alpha;
};

/// omega = (1 - gamma R) dP^dzeta + a dR^dtheta - gamma P dR^dzeta,
/// lambda = (1 - R)(a dtheta - gamma P dzeta) - (1 - gamma) P dzeta,
/// alpha  = a dtheta - gamma P dzeta  (gauge-fixed connection form).
ChartForms forms_at(const DiscBundleChart& c, const ChartPoint& p);

/// Liouville velocity (Pdot, zetadot, Rdot, thetadot):
/// Rdot = 1 - R, Pdot = -(1 - gamma)/(1 - gamma R) * P.
std::array<double, 4> liouville_field(const DiscBundleChart& c, const ChartPoint& p);

/// The bundle-to-ellipsoid symplectomorphism in squared-radius coordinates:
/// P' = (1 - gamma R) P, R' = a R, angles fixed.
ImagePoint phi_map(const DiscBundleChart& c, const ChartPoint& p);

/// Max-abs entry of J^T omega_st(phi(p)) J - omega(p), with J the central
/// finite-difference Jacobian of phi_map at step h.
double pullback_defect(const DiscBundleChart& c, const ChartPoint& p, double h);

/// Closed-form flow of the pushed-forward Liouville field:
/// R'(t) = a - (a - R'_0) e^{-t}, P'(t) = P'_0 e^{-t}, angles unchanged.
ImagePoint flow_closed_form(const DiscBundleChart& c, const ImagePoint& p, double t);

struct BasinVerdict {
    bool inside = false;        // analytic verdict (contractual)
    bool analytic_inside = false;
    bool dynamic_inside = false;
    bool boundary_flag = false; // R' >= a: backward flow never reaches the disc
};

/// Ellipsoid basin membership by two routes: the inequality
/// R'/a + P'/(A - delta) < 1, and the backward closed-form flow reaching
/// R' = 0 with P' < A - delta. Requires gamma >= 0 (ellipsoid regime).
BasinVerdict basin_membership(const DiscBundleChart& c, const ImagePoint& p);

} // namespace singpack
