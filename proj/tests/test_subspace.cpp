#include <doctest.h>

#include <map>
#include <set>

#include "nclab/subspace.hpp"

using namespace nclab;

namespace {

// q-Pascal recurrence, an independent route to the product formula
u128 qbinom_pascal(uint32_t n, uint32_t k, uint64_t q) {
    if (k > n) return 0;
    if (k == 0 || k == n) return 1;
    return qbinom_pascal(n - 1, k - 1, q) + pow_u128(q, k) * qbinom_pascal(n - 1, k, q);
}

// counts the 2-dimensional subspaces of F_2^4 by collecting span bitmasks,
// with no echelon machinery involved
size_t census_planes_f2_4() {
    std::set<uint32_t> spans;
    for (uint32_t u = 1; u < 16; ++u) {
        for (uint32_t v = 1; v < 16; ++v) {
            if (v == u) continue;
            uint32_t mask = (1u << 0) | (1u << u) | (1u << v) | (1u << (u ^ v));
            spans.insert(mask);
        }
    }
    return spans.size();
}

Mat random_mat(const FieldCtx& F, size_t r, size_t c, SplitMix64& rng) {
    Mat m(F, r, c);
    for (auto& v : m.data()) v = static_cast<uint32_t>(rng.below(F.order()));
    return m;
}

}  // namespace

TEST_SUITE("subspace") {
    TEST_CASE("canonical form") {
        const FieldCtx& F2 = FieldCtx::get(2, 1);
        CHECK(Subspace::from(Mat::identity(F2, 4)).dim() == 4);
        CHECK(Subspace::from(Mat(F2, 3, 4)).dim() == 0);

        Mat m = Mat::of(F2, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
        Subspace s = Subspace::from(m);
        CHECK(s.dim() == 2);
        CHECK(s.basis() == Mat::of(F2, {{1, 0, 1}, {0, 1, 1}}));
    }

    TEST_CASE("row operations do not change the subspace") {
        SplitMix64 rng(31);
        for (uint64_t q : {2ull, 3ull}) {
            auto pp = as_prime_power(q);
            const FieldCtx& F = FieldCtx::get(static_cast<uint32_t>(pp->p), pp->e);
            for (int i = 0; i < 40; ++i) {
                Mat m = random_mat(F, 3, 5, rng);
                Mat b(F, 3, 3);
                do {
                    b = random_mat(F, 3, 3, rng);
                } while (rank(b) < 3);
                CHECK(Subspace::from(b * m) == Subspace::from(m));
            }
        }
    }

    TEST_CASE("sum and distance") {
        const FieldCtx& F2 = FieldCtx::get(2, 1);
        Subspace u = Subspace::from(Mat::of(F2, {{1, 0, 0}}));
        Subspace v = Subspace::from(Mat::of(F2, {{0, 1, 0}}));
        Subspace uv = Subspace::from(Mat::of(F2, {{1, 0, 0}, {0, 1, 0}}));
        CHECK(u + u == u);
        CHECK(u + Subspace::zero(F2, 3) == u);
        CHECK(u + v == uv);
        CHECK(subspace_distance(u, u) == 0);
        CHECK(subspace_distance(u, uv) == 1);

        Subspace l1 = Subspace::from(Mat::of(F2, {{1, 0}}));
        Subspace l2 = Subspace::from(Mat::of(F2, {{0, 1}}));
        CHECK(subspace_distance(l1, l2) == 2);
        CHECK_THROWS_AS(subspace_distance(u, l1), std::invalid_argument);
    }

    TEST_CASE("distance triangle inequality on random triples") {
        const FieldCtx& F3 = FieldCtx::get(3, 1);
        SplitMix64 rng(13);
        for (int i = 0; i < 60; ++i) {
            Subspace a = Subspace::from(random_mat(F3, 1 + rng.below(3), 4, rng));
            Subspace b = Subspace::from(random_mat(F3, 1 + rng.below(3), 4, rng));
            Subspace c = Subspace::from(random_mat(F3, 1 + rng.below(3), 4, rng));
            CHECK(subspace_distance(a, c) <= subspace_distance(a, b) + subspace_distance(b, c));
        }
    }

    TEST_CASE("gaussian binomial") {
        CHECK(gaussian_binomial(5, 5, 2) == 1);
        CHECK(gaussian_binomial(5, 0, 3) == 1);
        CHECK(gaussian_binomial(4, 2, 2) == 35);
        CHECK(census_planes_f2_4() == 35);  // independent census
        CHECK(gaussian_binomial(6, 3, 2) == 1395);
        CHECK(pow_u128(2, 9) <= 1395);
        CHECK(u128(1395) < 4 * pow_u128(2, 9));
        for (uint32_t n = 0; n <= 8; ++n)
            for (uint32_t k = 0; k <= n; ++k)
                for (uint64_t q : {2ull, 3ull, 4ull})
                    CHECK(gaussian_binomial(n, k, q) == qbinom_pascal(n, k, q));
        CHECK(gaussian_binomial_at_least(4, 2, 2, 35));
        CHECK(!gaussian_binomial_at_least(4, 2, 2, 36));
        CHECK(gaussian_binomial_at_least(40, 20, 16, U128_MAX));  // saturating path
    }

    TEST_CASE("aq bounds") {
        auto b1 = aq_bounds(4, 2, 2, 2);
        CHECK(b1.lower == 4);
        CHECK(b1.upper == 8);
        auto b2 = aq_bounds(4, 2, 1, 2);
        CHECK(b2.lower == 16);
        CHECK(b2.upper == 64);
        auto b3 = aq_bounds(7, 3, 3, 3);  // delta = k: lower q^{n-k}
        CHECK(b3.lower == pow_u128(3, 4));
        CHECK_THROWS_AS(aq_bounds(4, 2, 3, 2), std::invalid_argument);
    }

    TEST_CASE("grassmannian enumeration: lines of F_2^2") {
        const FieldCtx& F2 = FieldCtx::get(2, 1);
        auto lines = enumerate_grassmannian(F2, 2, 1);
        REQUIRE(lines.size() == 3);
        std::set<std::vector<uint32_t>> got;
        for (const auto& s : lines) got.insert(s.basis().data());
        std::set<std::vector<uint32_t>> want{{1, 0}, {0, 1}, {1, 1}};
        CHECK(got == want);
        // lexicographic order over the canonical matrices
        CHECK(lines[0].basis() == Mat::of(F2, {{0, 1}}));
        CHECK(lines[1].basis() == Mat::of(F2, {{1, 0}}));
        CHECK(lines[2].basis() == Mat::of(F2, {{1, 1}}));
    }

    TEST_CASE("grassmannian counts match the q-binomial") {
        for (uint64_t q : {2ull, 3ull}) {
            auto pp = as_prime_power(q);
            const FieldCtx& F = FieldCtx::get(static_cast<uint32_t>(pp->p), pp->e);
            for (uint32_t n = 1; n <= 6; ++n) {
                for (uint32_t k = 0; k <= n; ++k) {
                    u128 expect = gaussian_binomial(n, k, q);
                    if (expect > 40000) continue;
                    auto all = enumerate_grassmannian(F, n, k);
                    CHECK(static_cast<u128>(all.size()) == expect);
                    std::set<std::vector<uint32_t>> dedup;
                    for (const auto& s : all) {
                        CHECK(s.dim() == k);
                        dedup.insert(s.basis().data());
                    }
                    CHECK(dedup.size() == all.size());
                }
            }
        }
        CHECK_THROWS_AS(enumerate_grassmannian(FieldCtx::get(2, 1), 6, 3, 100),
                        std::invalid_argument);  // cap exceeded
    }

    TEST_CASE("alpha cover check") {
        const FieldCtx& F2 = FieldCtx::get(2, 1);
        auto planes = enumerate_grassmannian(F2, 4, 2);  // 35 members
        // distinct 2-spaces always span at least 3 dimensions
        CHECK(!alpha_cover_violation(planes, 2, 3).has_value());

        auto tripled = std::vector<Subspace>{planes[5], planes[5], planes[5]};
        auto v = alpha_cover_violation(tripled, 3, 3);
        REQUIRE(v.has_value());
        CHECK(v->indices == std::vector<uint32_t>{0, 1, 2});
        CHECK(v->span_dim == 2);

        CHECK_THROWS_AS(alpha_cover_violation(tripled, 4, 3), std::invalid_argument);
    }

    TEST_CASE("span condition matches subspace distance for equal dimensions") {
        // dim(U+V) >= D  <=>  d_S(U,V) >= 2(D-k) over pairs of k-subspaces
        const FieldCtx& F2 = FieldCtx::get(2, 1);
        auto planes = enumerate_grassmannian(F2, 4, 2);
        for (size_t i = 0; i < planes.size(); ++i) {
            for (size_t j = 0; j < planes.size(); ++j) {
                for (uint32_t D = 2; D <= 4; ++D) {
                    bool span_ok = (planes[i] + planes[j]).dim() >= D;
                    bool dist_ok = subspace_distance(planes[i], planes[j]) >= 2 * (D - 2);
                    CHECK(span_ok == dist_ok);
                }
            }
        }
    }

    TEST_CASE("built-in 51-subspace code") {
        CoverCode code = cover_code_51();
        CHECK(code.size() == 51);
        CHECK(code.n == 6);
        CHECK(code.alpha == 3);
        CHECK(code.min_span == 4);
        std::set<std::vector<uint32_t>> dedup;
        for (const Subspace& s : code.members) {
            CHECK(s.dim() == 2);
            CHECK(s.ambient() == 6);
            dedup.insert(s.basis().data());
        }
        CHECK(dedup.size() == 51);  // all canonical forms distinct
    }

    TEST_CASE("exhaustive search on the lines of F_2^2") {
        SearchResult res = cover_search(2, 1, 2, 2, 2, SearchStrategy::Exhaustive);
        CHECK(res.code.size() == 3);  // all lines: distinct lines span the plane
        CHECK(!res.budget_exhausted);
        CHECK(alpha_cover_check(res.code));
    }

    TEST_CASE("greedy search beats the scalar ceiling") {
        SearchResult res = cover_search(6, 2, 3, 4, 2, SearchStrategy::Greedy);
        CHECK(res.code.size() >= 43);
        CHECK(!alpha_cover_violation(res.code.members, 3, 4).has_value());
    }

    TEST_CASE("randomized search is reproducible per seed") {
        SearchResult a = cover_search(4, 2, 2, 3, 2, SearchStrategy::Randomized, 0, 99);
        SearchResult b = cover_search(4, 2, 2, 3, 2, SearchStrategy::Randomized, 0, 99);
        REQUIRE(a.code.size() == b.code.size());
        for (size_t i = 0; i < a.code.size(); ++i)
            CHECK(a.code.members[i] == b.code.members[i]);
        CHECK(alpha_cover_check(a.code));
    }

    TEST_CASE("budget exhaustion returns best-so-far with a flag") {
        SearchResult res = cover_search(6, 2, 3, 4, 2, SearchStrategy::Greedy, 10, 0);
        CHECK(res.budget_exhausted);
        CHECK(res.code.size() <= 10);
        SearchResult full = cover_search(6, 2, 3, 4, 2, SearchStrategy::Greedy);
        CHECK(res.code.size() <= full.code.size());
    }

    TEST_CASE("certificate round trip") {
        CoverCode code = cover_code_51();
        std::string text = cover_to_text(code);
        CoverCode back = cover_from_text(text);
        CHECK(back.size() == code.size());
        CHECK(back.alpha == code.alpha);
        CHECK(back.min_span == code.min_span);
        for (size_t i = 0; i < code.size(); ++i) CHECK(back.members[i] == code.members[i]);
        CHECK(cover_to_text(back) == text);

        // a non-canonical member matrix is rejected (leading entry not 1)
        std::string bad = "2 1 3 2 2 1\n1 2\n2 1\n";
        CHECK_THROWS_AS(cover_from_text(bad), std::invalid_argument);
    }
}
