#include "singpack/packing.hpp"

#include <stdexcept>

namespace singpack {

void Polarization::validate() const {
    model.validate();
    if (classes.size() != weights.size())
        throw std::invalid_argument("polarization: class/weight count mismatch");
    for (const auto& c : classes)
        if (static_cast<int>(c.size()) != model.rank)
            throw std::invalid_argument("polarization: class length != rank");
    for (const auto& a : weights)
        if (a.sign() < 0)
            throw std::invalid_argument("polarization: negative weight");
    if (epsilon.sign() < 0)
        throw std::invalid_argument("polarization: negative epsilon");

    RationalVec recon(model.rank, Rational(0));
    for (size_t j = 0; j < classes.size(); ++j)
        for (int i = 0; i < model.rank; ++i)
            recon[i] += weights[j] * Rational(classes[j][i]);
    for (int i = 0; i < model.rank; ++i)
        if (recon[i] != model.omega[i])
            throw invariant_error(
                "polarization: sum a_i PD(S_i) != [omega] (coordinate " +
                std::to_string(i) + ")");

    for (size_t i = 0; i < classes.size(); ++i)
        for (size_t j = i + 1; j < classes.size(); ++j)
            if (pairing(classes[i], classes[j], model.intersection).sign() < 0)
                throw invariant_error(
                    "polarization: negative cross intersection S_" +
                    std::to_string(i) + ".S_" + std::to_string(j));
}

Rational Polarization::area(size_t i) const {
    return omega_area(model, classes.at(i));
}

Rational Polarization::self_intersection(size_t i) const {
    return pairing(classes.at(i), classes.at(i), model.intersection);
}

Rational Polarization::cross_area(size_t i) const {
    Rational s(0);
    for (size_t j = 0; j < classes.size(); ++j) {
        if (j == i) continue;
        s += weights[j] * pairing(classes[i], classes[j], model.intersection);
    }
    return s;
}

Rational EllipsoidPiece::gromov_width() const {
    return std::min(capacity_base, capacity_fiber);
}

Rational EllipsoidPiece::volume() const {
    return capacity_base * capacity_fiber / Rational(2);
}

std::vector<EllipsoidPiece> ellipsoid_parameters(const Polarization& p) {
    p.validate();
    std::vector<EllipsoidPiece> out;
    for (size_t i = 0; i < p.classes.size(); ++i) {
        Rational base = p.area(i) - p.epsilon;
        if (base.sign() <= 0)
            throw std::invalid_argument("ellipsoid_parameters: degenerate piece " +
                                        std::to_string(i) + " (A_i - eps <= 0)");
        out.push_back({base, p.weights[i]});
    }
    return out;
}

GammaCoefficients gamma_coefficients(const Polarization& p) {
    p.validate();
    GammaCoefficients out;
    const Rational one(1);
    for (size_t i = 0; i < p.classes.size(); ++i) {
        Rational self = p.self_intersection(i);
        Rational num = p.weights[i] * self;
        Rational den = num + (one - p.epsilon) * p.cross_area(i);
        out.shrunk_area.push_back(den);
        if (self.is_zero()) {
            out.gamma.push_back(Rational(0));
            continue;
        }
        if (den.is_zero())
            throw std::invalid_argument(
                "gamma_coefficients: degenerate polarization (zero area) at " +
                std::to_string(i));
        out.gamma.push_back(num / den);
    }
    return out;
}

PackingReport packing_report(const Polarization& p) {
    PackingReport r;
    r.ellipsoids = ellipsoid_parameters(p);
    r.total_volume = Rational(0);
    for (const auto& e : r.ellipsoids) {
        r.piece_volumes.push_back(e.volume());
        r.total_volume += e.volume();
    }
    r.manifold_volume = symplectic_volume(p.model);
    r.residual = r.manifold_volume - r.total_volume;
    return r;
}

PeriodVerdict period_obstruction(const RationalVec& f,
                                 const std::vector<RationalVec>& classes) {
    if (f.size() != classes.size())
        throw std::invalid_argument("period_obstruction: length mismatch");

    bool f_zero = true;
    for (const auto& x : f)
        if (!x.is_zero()) { f_zero = false; break; }
    if (f_zero) return {true, "periods vanish", std::nullopt};

    RationalVec combo;
    if (!classes.empty()) {
        combo.assign(classes[0].size(), Rational(0));
        for (size_t j = 0; j < classes.size(); ++j)
            for (size_t i = 0; i < combo.size(); ++i)
                combo[i] += f[j] * classes[j][i];
    }
    bool combo_zero = true;
    for (const auto& x : combo)
        if (!x.is_zero()) { combo_zero = false; break; }

    if (!combo_zero)
        return {true, "no relation consumed", std::nullopt};
    // f is a nonzero kernel vector of the classes
    return {false, "nonzero periods annihilate the classes", f};
}

} // namespace singpack
