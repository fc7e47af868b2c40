#include "singpack/toric.hpp"
#include "singpack/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace singpack {

namespace {

Rational cross(const Vec2& o, const Vec2& a, const Vec2& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// scales a rational direction to its primitive integer vector
std::array<mpz_class, 2> primitive(const Vec2& d) {
    mpz_class l = 1;
    mpz_lcm(l.get_mpz_t(), d[0].denominator().get_mpz_t(), d[1].denominator().get_mpz_t());
    mpz_class x = d[0].numerator() * (l / d[0].denominator());
    mpz_class y = d[1].numerator() * (l / d[1].denominator());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    if (g == 0) throw std::invalid_argument("chop: zero-length edge");
    return {x / g, y / g};
}

} // namespace

Rational Polytope::area() const {
    Rational s(0);
    const size_t n = vertices.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2& p = vertices[i];
        const Vec2& q = vertices[(i + 1) % n];
        s += p[0] * q[1] - q[0] * p[1];
    }
    return s / Rational(2);
}

void Polytope::validate() const {
    const size_t n = vertices.size();
    if (n < 3) throw std::invalid_argument("polytope: fewer than 3 vertices");
    for (size_t i = 0; i < n; ++i) {
        Rational c = cross(vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]);
        if (c.sign() <= 0)
            throw std::invalid_argument("polytope: not strictly convex ccw at vertex " +
                                        std::to_string((i + 1) % n));
    }
    if (area().sign() <= 0)
        throw std::invalid_argument("polytope: nonpositive area");
}

Polytope rectangle(const Rational& w, const Rational& h) {
    if (w.sign() <= 0 || h.sign() <= 0)
        throw std::invalid_argument("rectangle: sides must be positive");
    Polytope p{{{Rational(0), Rational(0)}, {w, Rational(0)}, {w, h}, {Rational(0), h}}};
    p.validate();
    return p;
}

Polytope ellipsoid_triangle(const Rational& a, const Rational& b) {
    if (a.sign() <= 0 || b.sign() <= 0)
        throw std::invalid_argument("ellipsoid_triangle: capacities must be positive");
    Polytope p{{{Rational(0), Rational(0)}, {a, Rational(0)}, {Rational(0), b}}};
    p.validate();
    return p;
}

Polytope chop(const Polytope& p, size_t corner, const Rational& mu) {
    p.validate();
    if (corner >= p.vertices.size())
        throw std::invalid_argument("chop: corner index out of range");
    if (mu.sign() <= 0)
        throw std::invalid_argument("chop: mu must be positive");

    const size_t n = p.vertices.size();
    const Vec2& v = p.vertices[corner];
    const Vec2& prev = p.vertices[(corner + n - 1) % n];
    const Vec2& next = p.vertices[(corner + 1) % n];

    auto cut_point = [&](const Vec2& other) {
        Vec2 d{other[0] - v[0], other[1] - v[1]};
        auto u = primitive(d);
        Vec2 step{Rational(mpq_class(u[0])), Rational(mpq_class(u[1]))};
        // edge length in primitive units
        Rational len = !step[0].is_zero() ? d[0] / step[0] : d[1] / step[1];
        if (mu >= len)
            throw std::invalid_argument("chop: mu exceeds edge length");
        return Vec2{v[0] + mu * step[0], v[1] + mu * step[1]};
    };

    Vec2 toward_next = cut_point(next);
    Vec2 toward_prev = cut_point(prev);

    Polytope out;
    for (size_t i = 0; i < n; ++i) {
        if (i == corner) {
            out.vertices.push_back(toward_prev);
            out.vertices.push_back(toward_next);
        } else {
            out.vertices.push_back(p.vertices[i]);
        }
    }
    out.validate();
    return out;
}

BasinLabel classify_point(const ToricField& f, const Vec2& p) {
    Rational s = p[1] * f.area1 - p[0] * f.area2;
    if (s.sign() < 0) return BasinLabel::Sigma1;
    if (s.sign() > 0) return BasinLabel::Sigma2;
    return BasinLabel::Separatrix;
}

BasinLabel classify_by_flow(const ToricField& f, double R1, double R2,
                            double dt, double margin) {
    const double a1 = f.area1.to_double();
    const double a2 = f.area2.to_double();
    // backward flow: Rdot_i = -(area_i - R_i)
    auto rhs1 = [&](double r) { return -(a1 - r); };
    auto rhs2 = [&](double r) { return -(a2 - r); };

    // near the boundary the step is refined so neither coordinate can jump
    // across the [0, margin] band; the decision then rests on which edge the
    // trajectory actually reaches, not on overshoot order within one step
    const double dt_min = margin / (2.0 * std::max({a1, a2, 1e-12}));
    const long max_steps = 100'000'000;
    for (long s = 0; s < max_steps; ++s) {
        if (R1 <= margin && R2 <= margin) return BasinLabel::Separatrix;
        if (R2 <= margin) return BasinLabel::Sigma1;
        if (R1 <= margin) return BasinLabel::Sigma2;

        double step = dt;
        double n1 = R1, n2 = R2;
        for (;;) {
            double k1a = rhs1(R1), k1b = rhs2(R2);
            double k2a = rhs1(R1 + 0.5 * step * k1a), k2b = rhs2(R2 + 0.5 * step * k1b);
            double k3a = rhs1(R1 + 0.5 * step * k2a), k3b = rhs2(R2 + 0.5 * step * k2b);
            double k4a = rhs1(R1 + step * k3a), k4b = rhs2(R2 + step * k3b);
            n1 = R1 + step / 6.0 * (k1a + 2 * k2a + 2 * k3a + k4a);
            n2 = R2 + step / 6.0 * (k1b + 2 * k2b + 2 * k3b + k4b);
            if ((n1 >= 0.0 && n2 >= 0.0) || step <= dt_min) break;
            step *= 0.5;
        }
        R1 = n1;
        R2 = n2;
        if (R1 < 0.0) return BasinLabel::Sigma2;
        if (R2 < 0.0) return BasinLabel::Sigma1;
    }
    return BasinLabel::Separatrix;  // did not leave: numerically on the line
}

std::pair<Rational, Rational> basin_areas(const ToricField& f) {
    Rational half = f.area1 * f.area2 / Rational(2);
    return {half, half};
}

CubicReport cubic_pipeline(const Rational& mu) {
    const Rational two_thirds(2, 3);
    if (mu.sign() <= 0 || mu >= two_thirds)
        throw std::invalid_argument(
            "cubic_pipeline: mu must lie in (0, 2/3), the polarization range");

    CubicReport r;
    r.mu = mu;

    // blow-up lattice: basis (l, e), intersection diag(1, -1)
    LatticeModel m;
    m.rank = 2;
    m.basis_names = {"l", "e"};
    m.intersection = {{1, 0}, {0, -1}};
    m.omega = {Rational(1), -mu};
    m.validate();

    // l - mu e = (1/3)(3l - 2e) + (2/3 - mu) e, exact
    RationalVec recon(2, Rational(0));
    const RationalVec cubic_class{Rational(3), Rational(-2)};
    const RationalVec exceptional{Rational(0), Rational(1)};
    const Rational a1(1, 3);
    const Rational a2 = two_thirds - mu;
    for (int i = 0; i < 2; ++i)
        recon[i] = a1 * cubic_class[i] + a2 * exceptional[i];
    r.identity_holds = recon[0] == m.omega[0] && recon[1] == m.omega[1];
    if (!r.identity_holds)
        throw std::logic_error("cubic_pipeline: cohomology identity failed");

    const Rational half(1, 2);
    r.pieces = {
        {"B(mu)", mu, mu, mu * mu / Rational(2)},
        {"E(3-2mu,1/3)", Rational(3) - Rational(2) * mu, a1,
         (Rational(3) - Rational(2) * mu) * a1 / Rational(2)},
        {"E(mu,2/3-mu)", mu, a2, mu * a2 / Rational(2)},
    };
    r.total_volume = Rational(0);
    for (const auto& p : r.pieces) r.total_volume += p.volume;
    if (r.total_volume != half)
        throw std::logic_error("cubic_pipeline: volumes do not sum to 1/2");

    r.blowup_polytope = chop(ellipsoid_triangle(Rational(1), Rational(1)), 0, mu);
    return r;
}

} // namespace singpack
