#include "singpack/lattice.hpp"

#include <stdexcept>

namespace singpack {

void LatticeModel::validate() const {
    if (rank <= 0) throw std::invalid_argument("lattice: rank must be positive");
    if (static_cast<int>(intersection.size()) != rank)
        throw std::invalid_argument("lattice: intersection matrix row count != rank");
    for (const auto& row : intersection) {
        if (static_cast<int>(row.size()) != rank)
            throw std::invalid_argument("lattice: intersection matrix not square");
    }
    for (int i = 0; i < rank; ++i) {
        for (int j = i + 1; j < rank; ++j) {
            if (intersection[i][j] != intersection[j][i])
                throw std::invalid_argument("lattice: intersection matrix not symmetric");
        }
    }
    if (static_cast<int>(omega.size()) != rank)
        throw std::invalid_argument("lattice: omega length != rank");
    if (!basis_names.empty() && static_cast<int>(basis_names.size()) != rank)
        throw std::invalid_argument("lattice: basis name count != rank");
    for (const auto& c : curves) {
        if (static_cast<int>(c.cls.size()) != rank)
            throw std::invalid_argument("lattice: curve '" + c.name + "' length != rank");
    }
}

const NamedCurve* LatticeModel::find_curve(const std::string& name) const {
    for (const auto& c : curves)
        if (c.name == name) return &c;
    return nullptr;
}

RationalVec to_rational(const IntVec& v) {
    RationalVec out;
    out.reserve(v.size());
    for (long x : v) out.emplace_back(x);
    return out;
}

Rational pairing(const RationalVec& u, const RationalVec& v,
                 const std::vector<IntVec>& Q) {
    const size_t n = Q.size();
    if (u.size() != n || v.size() != n || (n > 0 && Q[0].size() != n))
        throw std::invalid_argument("pairing: dimension mismatch");
    Rational s(0);
    for (size_t i = 0; i < n; ++i) {
        if (u[i].is_zero()) continue;
        Rational row(0);
        for (size_t j = 0; j < n; ++j) {
            if (Q[i][j] == 0) continue;
            row += Rational(Q[i][j]) * v[j];
        }
        s += u[i] * row;
    }
    return s;
}

Rational pairing(const IntVec& u, const IntVec& v, const std::vector<IntVec>& Q) {
    return pairing(to_rational(u), to_rational(v), Q);
}

Rational symplectic_volume(const LatticeModel& m) {
    return pairing(m.omega, m.omega, m.intersection) / Rational(2);
}

Rational omega_area(const LatticeModel& m, const IntVec& c) {
    return pairing(m.omega, to_rational(c), m.intersection);
}

Rational omega_area(const LatticeModel& m, const RationalVec& c) {
    return pairing(m.omega, c, m.intersection);
}

} // namespace singpack
