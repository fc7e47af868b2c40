#include "singpack/localmodel.hpp"

#include <cmath>
#include <stdexcept>
#include <algorithm>

namespace singpack {

namespace {

void check_domain(const DiscBundleChart& c, const ChartPoint& p) {
    if (p.P < 0.0 || p.R < 0.0)
        throw std::domain_error("localmodel: negative squared radius");
    if (p.R >= 1.0)
        throw std::domain_error("localmodel: fiber coordinate R must be < 1");
    if (c.gamma > 0.0 && c.gamma * p.R >= 1.0)
        throw std::domain_error("localmodel: point beyond the symplectic locus");
}

void set_entry(TwoForm& m, int i, int j, double v) {
    m[i][j] = v;
    m[j][i] = -v;
}

} // namespace

void DiscBundleChart::validate() const {
    if (a <= 0.0) throw std::invalid_argument("chart: a must be positive");
    if (delta < 0.0) throw std::invalid_argument("chart: delta must be >= 0");
    if (A - delta <= 0.0) throw std::invalid_argument("chart: A - delta must be positive");
}

ChartForms forms_at(const DiscBundleChart& c, const ChartPoint& p) {
    c.validate();
    check_domain(c, p);
    ChartForms f{};
    for (auto& row : f.omega) row.fill(0.0);

    // coordinates (0:P, 1:zeta, 2:R, 3:theta)
    set_entry(f.omega, 0, 1, 1.0 - c.gamma * p.R);
    set_entry(f.omega, 2, 3, c.a);
    set_entry(f.omega, 2, 1, -c.gamma * p.P);

    f.alpha = {0.0, -c.gamma * p.P, 0.0, c.a};

    const double oneR = 1.0 - p.R;
    f.lambda = {0.0,
                -oneR * c.gamma * p.P - (1.0 - c.gamma) * p.P,
                0.0,
                oneR * c.a};
    return f;
}

std::array<double, 4> liouville_field(const DiscBundleChart& c, const ChartPoint& p) {
    c.validate();
    check_domain(c, p);
    const double denom = 1.0 - c.gamma * p.R;
    if (denom == 0.0)
        throw std::domain_error("liouville_field: singular locus gamma R = 1");
    return {-(1.0 - c.gamma) / denom * p.P, 0.0, 1.0 - p.R, 0.0};
}

ImagePoint phi_map(const DiscBundleChart& c, const ChartPoint& p) {
    c.validate();
    check_domain(c, p);
    return {(1.0 - c.gamma * p.R) * p.P, p.zeta, c.a * p.R, p.theta};
}

double pullback_defect(const DiscBundleChart& c, const ChartPoint& p, double h) {
    if (h <= 0.0) throw std::invalid_argument("pullback_defect: step must be positive");
    if (p.R - h < 0.0 || p.R + h >= 1.0 || p.P - h < 0.0)
        throw std::domain_error("pullback_defect: step too large for domain");

    auto eval = [&](const std::array<double, 4>& x) {
        ChartPoint q{x[0], x[1], x[2], x[3]};
        ImagePoint y = phi_map(c, q);
        return std::array<double, 4>{y.P, y.zeta, y.R, y.theta};
    };

    const std::array<double, 4> x0{p.P, p.zeta, p.R, p.theta};
    double J[4][4];
    for (int l = 0; l < 4; ++l) {
        auto xp = x0, xm = x0;
        xp[l] += h;
        xm[l] -= h;
        auto fp = eval(xp), fm = eval(xm);
        for (int k = 0; k < 4; ++k) J[k][l] = (fp[k] - fm[k]) / (2.0 * h);
    }

    TwoForm wst{};
    for (auto& row : wst) row.fill(0.0);
    set_entry(wst, 0, 1, 1.0);
    set_entry(wst, 2, 3, 1.0);

    TwoForm w = forms_at(c, p).omega;

    double defect = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l)
                    s += J[k][i] * wst[k][l] * J[l][j];
            defect = std::max(defect, std::fabs(s - w[i][j]));
        }
    }
    return defect;
}

ImagePoint flow_closed_form(const DiscBundleChart& c, const ImagePoint& p, double t) {
    c.validate();
    const double decay = std::exp(-t);
    return {p.P * decay, p.zeta, c.a - (c.a - p.R) * decay, p.theta};
}

BasinVerdict basin_membership(const DiscBundleChart& c, const ImagePoint& p) {
    c.validate();
    if (c.gamma < 0.0)
        throw std::invalid_argument(
            "basin_membership: gamma < 0 is the hyperboloid regime, no basin");
    if (p.P < 0.0 || p.R < 0.0)
        throw std::domain_error("basin_membership: negative squared radius");

    BasinVerdict v;
    v.analytic_inside = p.R / c.a + p.P / (c.A - c.delta) < 1.0;

    if (p.R >= c.a) {
        // backward flow never reaches the zero section
        v.boundary_flag = true;
        v.dynamic_inside = false;
    } else {
        // P' at the backward time t0 with R'(t0) = 0
        const double P_at_disc = p.P * c.a / (c.a - p.R);
        v.dynamic_inside = P_at_disc < c.A - c.delta;
    }
    v.inside = v.analytic_inside;
    return v;
}

} // namespace singpack
