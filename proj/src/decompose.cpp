#include "singpack/decompose.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace singpack {

namespace {

mpz_class floor_of(const Rational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
    return q;
}

} // namespace

void BarycentricDecomposition::validate(const RationalVec& b) const {
    if (vertices.size() != weights.size())
        throw std::logic_error("barycentric: vertex/weight count mismatch");
    Rational wsum(0);
    RationalVec recon(b.size(), Rational(0));
    const Rational eps(1, grid_denominator);
    for (size_t j = 0; j < vertices.size(); ++j) {
        if (weights[j].sign() <= 0)
            throw std::logic_error("barycentric: nonpositive weight");
        wsum += weights[j];
        for (size_t i = 0; i < b.size(); ++i) {
            recon[i] += weights[j] * vertices[j][i];
            if ((vertices[j][i] - b[i]).abs() > eps)
                throw std::logic_error("barycentric: vertex outside 1/q cell");
        }
    }
    if (wsum != Rational(1))
        throw std::logic_error("barycentric: weights do not sum to 1");
    for (size_t i = 0; i < b.size(); ++i)
        if (recon[i] != b[i])
            throw std::logic_error("barycentric: reconstruction mismatch");
    if (vertices.size() > b.size() + 1)
        throw std::logic_error("barycentric: too many vertices");
}

BarycentricDecomposition kuhn_simplex(const RationalVec& b, long q) {
    if (q < 1) throw std::invalid_argument("kuhn_simplex: q must be >= 1");
    const size_t n = b.size();
    const Rational qr(q);

    std::vector<mpz_class> base(n);
    RationalVec frac(n);
    for (size_t i = 0; i < n; ++i) {
        Rational g = b[i] * qr;
        base[i] = floor_of(g);
        frac[i] = g - Rational(mpq_class(base[i]));
    }

    // coordinate order: descending fractional part, ties ascending index
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t i, size_t j) { return frac[i] > frac[j]; });

    // simplex chain: v^0 = base, v^k = v^{k-1} + e_{order[k-1]}
    // weights: 1 - f_(1), f_(k) - f_(k+1), ..., f_(n)
    BarycentricDecomposition out;
    out.grid_denominator = q;
    std::vector<mpz_class> cur = base;
    auto push = [&](const Rational& w) {
        if (w.is_zero()) return;
        RationalVec v(n);
        for (size_t i = 0; i < n; ++i)
            v[i] = Rational(mpq_class(cur[i], q));
        out.vertices.push_back(std::move(v));
        out.weights.push_back(w);
    };
    push(n == 0 ? Rational(1) : Rational(1) - frac[order[0]]);
    for (size_t k = 0; k < n; ++k) {
        cur[order[k]] += 1;
        Rational w = (k + 1 < n) ? frac[order[k]] - frac[order[k + 1]]
                                 : frac[order[k]];
        push(w);
    }

    out.max_deviation = Rational(0);
    for (const auto& v : out.vertices)
        for (size_t i = 0; i < n; ++i)
            out.max_deviation = std::max(out.max_deviation, (v[i] - b[i]).abs());

    out.validate(b);
    return out;
}

ReducedSystem reduce_dependent(std::vector<RationalVec> classes, RationalVec a) {
    if (classes.size() != a.size())
        throw std::invalid_argument("reduce_dependent: class/weight count mismatch");
    for (const auto& w : a)
        if (w.sign() < 0)
            throw std::invalid_argument("reduce_dependent: negative weight");

    std::vector<size_t> kept(classes.size());
    std::iota(kept.begin(), kept.end(), 0);

    while (!classes.empty()) {
        // columns = classes; a kernel vector is a relation sum(lambda_i c_i)=0
        const size_t dim = classes[0].size();
        RationalMatrix m(dim, RationalVec(classes.size()));
        for (size_t j = 0; j < classes.size(); ++j)
            for (size_t i = 0; i < dim; ++i)
                m[i][j] = classes[j][i];
        auto kernel = kernel_basis(std::move(m));
        if (kernel.empty()) break;
        const RationalVec& lam = kernel.front();

        // removed index minimizes |a_N/lambda_N|; ties by larger |lambda_N|,
        // then smaller index
        int best = -1;
        Rational best_ratio, best_lam_abs;
        for (size_t i = 0; i < lam.size(); ++i) {
            if (lam[i].is_zero()) continue;
            Rational ratio = (a[i] / lam[i]).abs();
            Rational lam_abs = lam[i].abs();
            bool better = best < 0 || ratio < best_ratio ||
                          (ratio == best_ratio && lam_abs > best_lam_abs);
            if (better) {
                best = static_cast<int>(i);
                best_ratio = ratio;
                best_lam_abs = lam_abs;
            }
        }
        if (best < 0)
            throw std::logic_error("reduce_dependent: empty relation");

        const size_t N = static_cast<size_t>(best);
        Rational aN_over_lamN = a[N] / lam[N];
        for (size_t i = 0; i < classes.size(); ++i) {
            if (i == N) continue;
            a[i] -= lam[i] * aN_over_lamN;
            if (a[i].sign() < 0)
                throw std::logic_error("reduce_dependent: negative weight produced");
        }
        classes.erase(classes.begin() + best);
        a.erase(a.begin() + best);
        kept.erase(kept.begin() + best);
    }

    return ReducedSystem{std::move(classes), std::move(a), std::move(kept)};
}

std::pair<long, IntVec> clear_denominators(const RationalVec& c) {
    mpz_class k = 1;
    for (const auto& x : c)
        mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), x.denominator().get_mpz_t());
    if (!k.fits_slong_p())
        throw std::overflow_error("clear_denominators: factor exceeds long range");
    IntVec cls;
    cls.reserve(c.size());
    for (const auto& x : c) {
        mpz_class n = x.numerator() * (k / x.denominator());
        if (!n.fits_slong_p())
            throw std::overflow_error("clear_denominators: coordinate exceeds long range");
        cls.push_back(n.get_si());
    }
    return {k.get_si(), cls};
}

PolarizationSketch synthesize_polarization(const LatticeModel& m, long q) {
    m.validate();
    BarycentricDecomposition bary = kuhn_simplex(m.omega, q);

    std::vector<RationalVec> classes;
    RationalVec weights;
    std::vector<long> factors;
    for (size_t j = 0; j < bary.vertices.size(); ++j) {
        auto [k, cls] = clear_denominators(bary.vertices[j]);
        classes.push_back(to_rational(cls));
        weights.push_back(bary.weights[j] / Rational(k));
        factors.push_back(k);
    }

    ReducedSystem red = reduce_dependent(std::move(classes), std::move(weights));

    PolarizationSketch out;
    for (size_t i = 0; i < red.classes.size(); ++i) {
        if (red.weights[i].is_zero()) continue;  // fully absorbed by reduction
        IntVec cls;
        cls.reserve(red.classes[i].size());
        for (const auto& x : red.classes[i]) {
            mpz_class n = x.numerator();
            cls.push_back(n.get_si());
        }
        out.classes.push_back(std::move(cls));
        out.weights.push_back(red.weights[i]);
        out.clearing_factors.push_back(factors[red.kept_indices[i]]);
    }

    // exact identity check: sum a_j class_j = omega
    RationalVec recon(m.rank, Rational(0));
    for (size_t j = 0; j < out.classes.size(); ++j)
        for (int i = 0; i < m.rank; ++i)
            recon[i] += out.weights[j] * Rational(out.classes[j][i]);
    for (int i = 0; i < m.rank; ++i)
        if (recon[i] != m.omega[i])
            throw std::logic_error("synthesize_polarization: identity violated");

    return out;
}

} // namespace singpack
