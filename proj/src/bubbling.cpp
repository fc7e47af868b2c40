#include "singpack/bubbling.hpp"

#include <algorithm>
#include <stdexcept>

namespace singpack {

bool BlowupClass::is_zero() const {
    if (k != 0) return false;
    return std::all_of(l.begin(), l.end(), [](long x) { return x == 0; });
}

long BlowupClass::intersect(const BlowupClass& o) const {
    if (l.size() != o.l.size())
        throw std::invalid_argument("BlowupClass: mixed exceptional ranks");
    long s = k * o.k;
    for (size_t j = 0; j < l.size(); ++j) s -= l[j] * o.l[j];
    return s;
}

std::string BlowupClass::str() const {
    std::string out;
    if (k != 0 || is_zero()) out = std::to_string(k) + "L";
    for (size_t j = 0; j < l.size(); ++j) {
        if (l[j] == 0) continue;
        std::string e = l.size() == 1 ? "E" : "E" + std::to_string(j + 1);
        out += (l[j] > 0 ? "-" : "+") + std::to_string(std::abs(l[j])) + e;
    }
    return out;
}

long genus(const BlowupClass& c) {
    long g = (c.k - 1) * (c.k - 2) / 2;
    for (long lj : c.l) g -= lj * (lj - 1) / 2;
    return g;
}

bool ClassDecomposition::survives() const {
    if (global_verdict != GlobalVerdict::Survives) return false;
    return std::all_of(part_verdicts.begin(), part_verdicts.end(),
                       [](PartVerdict v) { return v == PartVerdict::Ok; });
}

namespace {

// all nonzero candidate parts within the componentwise box of the target,
// sorted in canonical (k, l) order
std::vector<BlowupClass> candidate_parts(const BlowupClass& target) {
    std::vector<BlowupClass> out;
    std::vector<long> l(target.l.size(), 0);
    auto rec = [&](auto&& self, size_t j) -> void {
        if (j == l.size()) {
            for (long k = 0; k <= target.k; ++k) {
                BlowupClass c{k, l};
                if (c.is_zero()) continue;
                bool has_l = std::any_of(l.begin(), l.end(), [](long x) { return x > 0; });
                if (has_l && k == 0) continue;  // positivity with E forces k > 0
                out.push_back(c);
            }
            return;
        }
        long cap = std::max(target.l[j], 0L);
        for (long v = 0; v <= cap; ++v) {
            l[j] = v;
            self(self, j + 1);
        }
        l[j] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<ClassDecomposition> enumerate_decompositions(
    const BlowupClass& target, int max_parts) {
    if (max_parts < 2)
        throw std::invalid_argument("enumerate_decompositions: max_parts must be >= 2");
    for (long lj : target.l)
        if (lj < 0)
            throw std::invalid_argument(
                "enumerate_decompositions: target must have l_j >= 0 "
                "(positivity with the exceptional curves)");

    const auto cands = candidate_parts(target);
    std::vector<ClassDecomposition> result;
    std::vector<BlowupClass> stack;

    BlowupClass remaining = target;
    auto fits = [&](const BlowupClass& c) {
        if (c.k > remaining.k) return false;
        for (size_t j = 0; j < c.l.size(); ++j)
            if (c.l[j] > remaining.l[j]) return false;
        return true;
    };

    auto rec = [&](auto&& self, size_t from) -> void {
        if (remaining.is_zero()) {
            if (stack.size() >= 2 &&
                std::any_of(stack.begin(), stack.end(),
                            [](const BlowupClass& c) { return c.k > 0; })) {
                ClassDecomposition d;
                d.parts = stack;
                d.part_verdicts.assign(stack.size(), PartVerdict::Ok);
                result.push_back(std::move(d));
            }
            return;
        }
        if (static_cast<int>(stack.size()) >= max_parts) return;
        for (size_t i = from; i < cands.size(); ++i) {
            const BlowupClass& c = cands[i];
            if (!fits(c)) continue;
            bool positive = std::all_of(stack.begin(), stack.end(),
                                        [&](const BlowupClass& s) {
                                            return s.intersect(c) >= 0;
                                        });
            if (!positive) continue;
            stack.push_back(c);
            remaining.k -= c.k;
            for (size_t j = 0; j < c.l.size(); ++j) remaining.l[j] -= c.l[j];
            self(self, i);  // non-decreasing: canonical multiset order
            remaining.k += c.k;
            for (size_t j = 0; j < c.l.size(); ++j) remaining.l[j] += c.l[j];
            stack.pop_back();
        }
    };
    rec(rec, 0);
    return result;
}

void apply_filters(ClassDecomposition& d, long generic_points) {
    long budget = 0;
    for (size_t i = 0; i < d.parts.size(); ++i) {
        if (genus(d.parts[i]) < 0) d.part_verdicts[i] = PartVerdict::AdjunctionFail;
        long conditions = 3 * d.parts[i].k - 1;
        for (long lj : d.parts[i].l) conditions -= lj;
        budget += std::max(conditions, 0L);
    }
    d.global_verdict = budget >= generic_points ? GlobalVerdict::Survives
                                                : GlobalVerdict::Genericity;
}

std::string verdict_summary(const ClassDecomposition& d) {
    std::string s;
    for (size_t i = 0; i < d.parts.size(); ++i) {
        if (i) s += " + ";
        s += d.parts[i].str();
        if (d.part_verdicts[i] == PartVerdict::AdjunctionFail)
            s += "[ADJUNCTION_FAIL]";
    }
    s += d.global_verdict == GlobalVerdict::Genericity ? " : GENERICITY"
         : d.survives()                                ? " : SURVIVES"
                                                       : " : REJECTED";
    return s;
}

} // namespace singpack
