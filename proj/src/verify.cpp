#include "singpack/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace singpack {

namespace {

double fiber_cap(const DiscBundleChart& c) {
    // stay clear of both the R < 1 bound and the gamma R < 1 locus
    double cap = 0.95;
    if (c.gamma > 0.0) cap = std::min(cap, 0.95 / c.gamma);
    return cap;
}

} // namespace

double max_liouville_defect(const DiscBundleChart& c, int n, std::uint64_t seed) {
    c.validate();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double Pmax = c.A - c.delta;
    const double Rmax = fiber_cap(c);

    double worst = 0.0;
    for (int s = 0; s < n; ++s) {
        ChartPoint p{u01(rng) * Pmax, u01(rng), u01(rng) * Rmax, u01(rng)};
        ChartForms f = forms_at(c, p);
        auto X = liouville_field(c, p);
        for (int j = 0; j < 4; ++j) {
            double contraction = 0.0;
            for (int i = 0; i < 4; ++i) contraction += X[i] * f.omega[i][j];
            worst = std::max(worst, std::fabs(contraction - f.lambda[j]));
        }
    }
    return worst;
}

double max_exactness_defect(const DiscBundleChart& c, int n, std::uint64_t seed,
                            double h) {
    c.validate();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double Pmax = c.A - c.delta;
    const double Rmax = fiber_cap(c);

    double worst = 0.0;
    for (int s = 0; s < n; ++s) {
        ChartPoint p{h + u01(rng) * (Pmax - 2 * h), u01(rng),
                     h + u01(rng) * (Rmax - 2 * h), u01(rng)};
        TwoForm omega = forms_at(c, p).omega;

        auto lambda_at = [&](double P, double zeta, double R, double theta) {
            return forms_at(c, ChartPoint{P, zeta, R, theta}).lambda;
        };
        std::array<double, 4> x{p.P, p.zeta, p.R, p.theta};
        double dl[4][4];
        OneForm lp[4], lm[4];
        for (int i = 0; i < 4; ++i) {
            auto xp = x, xm = x;
            xp[i] += h;
            xm[i] -= h;
            lp[i] = lambda_at(xp[0], xp[1], xp[2], xp[3]);
            lm[i] = lambda_at(xm[0], xm[1], xm[2], xm[3]);
        }
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                dl[i][j] = (lp[i][j] - lm[i][j]) / (2 * h) -
                           (lp[j][i] - lm[j][i]) / (2 * h);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                worst = std::max(worst, std::fabs(dl[i][j] + omega[i][j]));
    }
    return worst;
}

double max_pullback_defect_grid(const DiscBundleChart& c, int per_axis, double h) {
    c.validate();
    const double Pmax = c.A - c.delta;
    const double Rmax = fiber_cap(c);
    const double pm = 4 * h;  // keep FD stencils inside the domain

    double worst = 0.0;
    for (int ip = 0; ip < per_axis; ++ip) {
        double P = pm + (Pmax - 2 * pm) * ip / (per_axis - 1);
        for (int iz = 0; iz < per_axis; ++iz) {
            double zeta = static_cast<double>(iz) / per_axis;
            for (int ir = 0; ir < per_axis; ++ir) {
                double R = pm + (Rmax - 2 * pm) * ir / (per_axis - 1);
                for (int it = 0; it < per_axis; ++it) {
                    double theta = static_cast<double>(it) / per_axis;
                    worst = std::max(
                        worst, pullback_defect(c, ChartPoint{P, zeta, R, theta}, h));
                }
            }
        }
    }
    return worst;
}

double max_flow_vs_rk4(const DiscBundleChart& c, int n, std::uint64_t seed,
                       double tmax, double dt) {
    c.validate();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double Pmax = c.A - c.delta;

    double worst = 0.0;
    for (int s = 0; s < n; ++s) {
        ImagePoint p0{u01(rng) * Pmax, u01(rng), u01(rng) * c.a, u01(rng)};
        double t_end = u01(rng) * tmax;

        // RK4 on (R'dot, P'dot) = (a - R', -P')
        double R = p0.R, P = p0.P, t = 0.0;
        auto fR = [&](double r) { return c.a - r; };
        auto fP = [&](double q) { return -q; };
        while (t < t_end) {
            double step = std::min(dt, t_end - t);
            double k1r = fR(R), k1p = fP(P);
            double k2r = fR(R + 0.5 * step * k1r), k2p = fP(P + 0.5 * step * k1p);
            double k3r = fR(R + 0.5 * step * k2r), k3p = fP(P + 0.5 * step * k2p);
            double k4r = fR(R + step * k3r), k4p = fP(P + step * k3p);
            R += step / 6.0 * (k1r + 2 * k2r + 2 * k3r + k4r);
            P += step / 6.0 * (k1p + 2 * k2p + 2 * k3p + k4p);
            t += step;
        }
        ImagePoint q = flow_closed_form(c, p0, t_end);
        worst = std::max({worst, std::fabs(q.R - R), std::fabs(q.P - P)});
    }
    return worst;
}

double basin_agreement_fraction(const DiscBundleChart& c, int n,
                                std::uint64_t seed, double margin) {
    c.validate();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double Pspan = (c.A - c.delta) * 1.25;
    const double Rspan = c.a * 1.25;

    long tested = 0, agree = 0;
    for (int s = 0; s < n; ++s) {
        ImagePoint p{u01(rng) * Pspan, u01(rng), u01(rng) * Rspan, u01(rng)};
        double lhs = p.R / c.a + p.P / (c.A - c.delta);
        if (std::fabs(lhs - 1.0) <= margin) continue;
        BasinVerdict v = basin_membership(c, p);
        ++tested;
        if (v.analytic_inside == v.dynamic_inside) ++agree;
    }
    if (tested == 0) return 1.0;
    return static_cast<double>(agree) / static_cast<double>(tested);
}

double monte_carlo_basin_volume(const DiscBundleChart& c, long n,
                                std::uint64_t seed) {
    c.validate();
    if (c.gamma < 0.0 || c.gamma >= 1.0)
        throw std::invalid_argument("monte_carlo_basin_volume: needs 0 <= gamma < 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double Pmax = c.A - c.delta;

    // symplectic density relative to dP dzeta dR dtheta is a (1 - gamma R);
    // angles integrate to 1 each
    double acc = 0.0;
    for (long s = 0; s < n; ++s) {
        double P = u01(rng) * Pmax;
        double R = u01(rng);
        ImagePoint img{(1.0 - c.gamma * R) * P, 0.0, c.a * R, 0.0};
        if (basin_membership(c, img).inside)
            acc += c.a * (1.0 - c.gamma * R);
    }
    return acc / static_cast<double>(n) * Pmax;  // box measure Pmax * 1
}

double max_separatrix_drift(const ToricField& f, int points, double dt,
                            double tmax) {
    const double a1 = f.area1.to_double();
    const double a2 = f.area2.to_double();
    const double norm = std::hypot(a1, a2);

    double worst = 0.0;
    for (int i = 1; i <= points; ++i) {
        double R1 = a1 * i / (points + 1);
        double R2 = a2 / a1 * R1;
        auto g1 = [&](double r) { return a1 - r; };
        auto g2 = [&](double r) { return a2 - r; };
        for (double t = 0.0; t < tmax; t += dt) {
            double k1a = g1(R1), k1b = g2(R2);
            double k2a = g1(R1 + 0.5 * dt * k1a), k2b = g2(R2 + 0.5 * dt * k1b);
            double k3a = g1(R1 + 0.5 * dt * k2a), k3b = g2(R2 + 0.5 * dt * k2b);
            double k4a = g1(R1 + dt * k3a), k4b = g2(R2 + dt * k3b);
            R1 += dt / 6.0 * (k1a + 2 * k2a + 2 * k3a + k4a);
            R2 += dt / 6.0 * (k1b + 2 * k2b + 2 * k3b + k4b);
            worst = std::max(worst, std::fabs(a2 * R1 - a1 * R2) / norm);
        }
    }
    return worst;
}

double classify_agreement_fraction(const ToricField& f, int n,
                                   std::uint64_t seed, double margin) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double a1 = f.area1.to_double();
    const double a2 = f.area2.to_double();

    long tested = 0, agree = 0;
    for (int s = 0; s < n; ++s) {
        double R1 = u01(rng) * a1;
        double R2 = u01(rng) * a2;
        if (std::fabs(R2 * a1 - R1 * a2) <= margin) continue;
        // exact sign test on the binary64 values, promoted losslessly
        Vec2 p{Rational(mpq_class(R1)), Rational(mpq_class(R2))};
        BasinLabel analytic = classify_point(f, p);
        BasinLabel dynamic = classify_by_flow(f, R1, R2);
        ++tested;
        if (analytic == dynamic) ++agree;
    }
    if (tested == 0) return 1.0;
    return static_cast<double>(agree) / static_cast<double>(tested);
}

} // namespace singpack
