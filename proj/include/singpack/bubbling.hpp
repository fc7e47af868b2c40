#pragma once

#include <string>
#include <vector>

namespace singpack {

/// Homology class k L - sum_j l_j E_j in a blow-up of P^2.
struct BlowupClass {
    long k = 0;
    std::vector<long> l;

    bool is_zero() const;
    long intersect(const BlowupClass& o) const;  // k k' - sum l_j l_j'
    friend bool operator==(const BlowupClass&, const BlowupClass&) = default;
    friend auto operator<=>(const BlowupClass&, const BlowupClass&) = default;
    std::string str() const;  // e.g. "3L-2E1"
};

/// Adjunction genus (k-1)(k-2)/2 - sum l_j(l_j-1)/2; negative values rule out
/// irreducible representatives.
long genus(const BlowupClass& c);

enum class PartVerdict { Ok, AdjunctionFail };
enum class GlobalVerdict { Survives, Genericity };

/// Multiset of classes summing to a target, in canonical (k, l) lexicographic
/// order, with rejection-filter tags.
struct ClassDecomposition {
    std::vector<BlowupClass> parts;  // sorted ascending
    std::vector<PartVerdict> part_verdicts;
    GlobalVerdict global_verdict = GlobalVerdict::Survives;

    bool survives() const;
};

/// All multisets {A_i} (2 <= count <= max_parts) with sum A_i = target,
/// every part nonzero with k_i >= 0 and l_ij >= 0, k_i > 0 whenever some
/// l_ij > 0, and pairwise A_i . A_j >= 0. Deterministic canonical order.
std::vector<ClassDecomposition> enumerate_decompositions(
    const BlowupClass& target, int max_parts);

/// Tags parts of negative genus ADJUNCTION_FAIL and tags the decomposition
/// GENERICITY when the combined point budget sum(3 k_i - 1 - sum_j l_ij)
/// cannot carry the 6 generic points of the configuration. Advisory encoding
/// of the genericity argument; the triggering rule is reported.
void apply_filters(ClassDecomposition& d, long generic_points = 6);

std::string verdict_summary(const ClassDecomposition& d);

} // namespace singpack
