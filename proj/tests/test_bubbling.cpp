#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "singpack/bubbling.hpp"

#include <algorithm>
#include <set>
#include <vector>

using namespace singpack;

namespace {

// Brute-force reference enumeration: generate every sorted multiset of
// candidate classes by a plain odometer over part counts, then filter. Slower
// and structured differently from the production recursion on purpose.
std::vector<std::vector<BlowupClass>> brute_force(const BlowupClass& target,
                                                  int max_parts) {
    std::vector<BlowupClass> pool;
    std::vector<long> l(target.l.size(), 0);
    // enumerate the whole box [0,k]x[0,l1]x...; keep admissible parts
    auto next_l = [&]() {
        for (size_t j = 0; j < l.size(); ++j) {
            if (l[j] < target.l[j]) {
                ++l[j];
                std::fill(l.begin(), l.begin() + j, 0L);
                return true;
            }
        }
        return false;
    };
    do {
        for (long k = 0; k <= target.k; ++k) {
            BlowupClass c{k, l};
            if (c.is_zero()) continue;
            if (k == 0 && std::any_of(l.begin(), l.end(), [](long x) { return x > 0; }))
                continue;
            pool.push_back(c);
        }
    } while (next_l());

    std::set<std::vector<BlowupClass>> found;
    std::vector<size_t> idx;
    auto rec = [&](auto&& self, size_t from, BlowupClass rem) -> void {
        if (rem.is_zero() && idx.size() >= 2) {
            std::vector<BlowupClass> parts;
            for (size_t i : idx) parts.push_back(pool[i]);
            std::sort(parts.begin(), parts.end());  // canonical multiset order
            bool has_line = std::any_of(parts.begin(), parts.end(),
                                        [](const BlowupClass& c) { return c.k > 0; });
            bool positive = true;
            for (size_t a = 0; a < parts.size() && positive; ++a)
                for (size_t b = a + 1; b < parts.size(); ++b)
                    if (parts[a].intersect(parts[b]) < 0) { positive = false; break; }
            if (has_line && positive) found.insert(parts);
        }
        if (static_cast<int>(idx.size()) >= max_parts) return;
        for (size_t i = from; i < pool.size(); ++i) {
            const auto& c = pool[i];
            if (c.k > rem.k) continue;
            bool fits = true;
            for (size_t j = 0; j < c.l.size(); ++j)
                if (c.l[j] > rem.l[j]) { fits = false; break; }
            if (!fits) continue;
            BlowupClass r = rem;
            r.k -= c.k;
            for (size_t j = 0; j < c.l.size(); ++j) r.l[j] -= c.l[j];
            idx.push_back(i);
            self(self, i, r);
            idx.pop_back();
        }
    };
    rec(rec, 0, target);
    return {found.begin(), found.end()};
}

} // namespace

TEST_CASE("class arithmetic and names") {
    BlowupClass cubic{3, {2}};
    BlowupClass line{1, {0}};
    BlowupClass exc{0, {1}};
    CHECK(cubic.intersect(cubic) == 5);
    CHECK(cubic.intersect(exc) == -2);
    CHECK(line.intersect(line) == 1);
    CHECK(cubic.str() == "3L-2E");
    CHECK(BlowupClass{2, {1, 1}}.str() == "2L-1E1-1E2");
    CHECK(BlowupClass{0, {}}.str() == "0L");
    CHECK_THROWS_AS(cubic.intersect(BlowupClass{1, {0, 0}}), std::invalid_argument);
}

TEST_CASE("adjunction genus") {
    CHECK(genus(BlowupClass{1, {0}}) == 0);    // line
    CHECK(genus(BlowupClass{2, {0}}) == 0);    // conic
    CHECK(genus(BlowupClass{3, {0}}) == 1);    // smooth cubic
    CHECK(genus(BlowupClass{3, {2}}) == 0);    // nodal cubic, node blown up
    CHECK(genus(BlowupClass{1, {2}}) == -1);   // no irreducible representative
    CHECK(genus(BlowupClass{2, {2, 1}}) == -1);
}

TEST_CASE("degenerations of the polarized cubic") {
    auto ds = enumerate_decompositions(BlowupClass{3, {2}}, 3);
    REQUIRE(ds.size() == 5);

    std::set<std::string> got;
    for (auto& d : ds) {
        apply_filters(d);
        CHECK(!d.survives());
        std::string s;
        for (size_t i = 0; i < d.parts.size(); ++i)
            s += (i ? " + " : "") + d.parts[i].str();
        got.insert(s);
    }
    std::set<std::string> expected{
        "1L + 1L + 1L-2E", "1L + 1L-1E + 1L-1E", "1L + 2L-2E",
        "1L-1E + 2L-1E",   "1L-2E + 2L",
    };
    CHECK(got == expected);
}

TEST_CASE("cubic degenerations: filter reasons") {
    auto ds = enumerate_decompositions(BlowupClass{3, {2}}, 3);
    for (auto& d : ds) {
        apply_filters(d);
        bool adjunction = std::any_of(
            d.part_verdicts.begin(), d.part_verdicts.end(),
            [](PartVerdict v) { return v == PartVerdict::AdjunctionFail; });
        bool genericity = d.global_verdict == GlobalVerdict::Genericity;
        CHECK((adjunction || genericity));
    }
    // the all-lines splitting dies by genericity alone: budget 2+2+0 = 4 < 6
    ClassDecomposition lines;
    lines.parts = {{1, {0}}, {1, {0}}, {1, {2}}};
    lines.part_verdicts.assign(3, PartVerdict::Ok);
    apply_filters(lines);
    CHECK(lines.global_verdict == GlobalVerdict::Genericity);
}

TEST_CASE("genericity budget is configurable") {
    ClassDecomposition d;
    d.parts = {{1, {0}}, {2, {2}}};
    d.part_verdicts.assign(2, PartVerdict::Ok);
    apply_filters(d, 6);  // budget 2 + 3 = 5
    CHECK(d.global_verdict == GlobalVerdict::Genericity);
    apply_filters(d, 5);
    CHECK(d.global_verdict == GlobalVerdict::Survives);
}

TEST_CASE("enumeration matches brute force on small targets") {
    std::vector<std::pair<BlowupClass, int>> cases{
        {{3, {2}}, 3}, {{3, {2}}, 4}, {{2, {1}}, 3},
        {{4, {2}}, 3}, {{3, {1, 1}}, 3}, {{2, {}}, 4},
    };
    for (const auto& [target, max_parts] : cases) {
        auto fast = enumerate_decompositions(target, max_parts);
        auto slow = brute_force(target, max_parts);
        REQUIRE(fast.size() == slow.size());
        std::set<std::vector<BlowupClass>> fastset;
        for (const auto& d : fast) {
            CHECK(std::is_sorted(d.parts.begin(), d.parts.end()));
            BlowupClass sum{0, std::vector<long>(target.l.size(), 0)};
            for (const auto& c : d.parts) {
                sum.k += c.k;
                for (size_t j = 0; j < c.l.size(); ++j) sum.l[j] += c.l[j];
            }
            CHECK(sum == target);
            fastset.insert(d.parts);
        }
        CHECK(fastset.size() == fast.size());  // no duplicate multisets
        CHECK(fastset == std::set<std::vector<BlowupClass>>(slow.begin(), slow.end()));
    }
}

TEST_CASE("enumeration input validation") {
    CHECK_THROWS_AS(enumerate_decompositions(BlowupClass{3, {2}}, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(enumerate_decompositions(BlowupClass{3, {-1}}, 3),
                    std::invalid_argument);
}
