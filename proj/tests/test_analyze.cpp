#include <doctest.h>

#include <cmath>

#include "nclab/analyze.hpp"

using namespace nclab;

TEST_SUITE("analyze") {
    TEST_CASE("prime power helpers") {
        CHECK(is_prime(2));
        CHECK(is_prime(65537));
        CHECK(!is_prime(1));
        CHECK(!is_prime(65536));
        CHECK(as_prime_power(8)->p == 2);
        CHECK(as_prime_power(8)->e == 3);
        CHECK(!as_prime_power(6).has_value());
        CHECK(next_prime_power(6) == 7);
        CHECK(next_prime_power(10) == 11);
        CHECK(prev_prime_power(11) == 9);
        // the canonical ascending sequence
        std::vector<uint64_t> seq;
        for (uint64_t v = 2; seq.size() < 10; v = next_prime_power(v + 1)) seq.push_back(v);
        CHECK(seq == std::vector<uint64_t>{2, 3, 4, 5, 7, 8, 9, 11, 13, 16});
    }

    TEST_CASE("vector r bound cases") {
        // case 1: h = 2*ell, eps = 0
        auto c1 = vector_r_bound(4, 2, 0, 2, 3);
        CHECK(c1.case_label == 1);
        CHECK(c1.r == pow_u128(2, 6));

        // case 2: the (1,2)-N_4 family
        auto c2 = vector_r_bound(4, 2, 1, 2, 1);
        CHECK(c2.case_label == 2);
        CHECK(c2.r == 16);

        // case 3: h-ell >= ell and 2ell-h+eps = 0: r = q^{(h-ell)t}
        auto c3 = vector_r_bound(4, 1, 2, 3, 2);
        CHECK(c3.case_label == 3);
        CHECK(c3.r == pow_u128(3, 6));

        // case 4
        auto c4 = vector_r_bound(5, 2, 2, 2, 1);
        CHECK(c4.case_label == 4);
        CHECK(c4.r == pow_u128(2, 3 * (4 - 5 + 2 + 1)));

        CHECK_THROWS_AS(vector_r_bound(3, 2, 1, 2, 1), std::invalid_argument);  // trivial network
        CHECK_THROWS_AS(vector_r_bound(8, 2, 1, 2, 1), std::invalid_argument);  // unsolvable
    }

    TEST_CASE("minimal scalar field per family") {
        CHECK(min_scalar_field({ScalarFamily::PairBlocks, 0, 2}, 36) == 3);
        CHECK(min_scalar_field({ScalarFamily::PairBlocks, 0, 2}, 35) == 2);
        CHECK(min_scalar_field({ScalarFamily::ThreeMessage}, 43) == 5);
        CHECK(min_scalar_field({ScalarFamily::ThreeMessage, 0, 0}, 42) == 4);
        CHECK(min_scalar_field({ScalarFamily::Combination, 4}, 5) == 4);
        CHECK(min_scalar_field({ScalarFamily::Combination, 3}, 6) == 4);  // hyperoval case

        // monotone nondecreasing in r
        uint64_t prev = 0;
        for (u128 r = 2; r <= 200; ++r) {
            uint64_t qs = min_scalar_field({ScalarFamily::PairBlocks, 0, 2}, r);
            CHECK(qs >= prev);
            prev = qs;
        }
    }

    TEST_CASE("gap table for the (1,2)-N_4 family") {
        auto rows = gap_table(4, 4, 2, 1, 3);
        REQUIRE(rows.size() == 3);
        for (uint32_t i = 0; i < 3; ++i) {
            const GapRow& row = rows[i];
            uint32_t t = i + 1;
            CHECK(row.ell == 2);
            CHECK(row.eps == 1);
            CHECK(row.case_label == 2);
            CHECK(row.exact);
            CHECK(row.r == pow_u128(2, 2u * t * t + 2 * t));
            // exact minimality: bound holds at qs, fails below
            ScalarFamily fam{ScalarFamily::PairBlocks, 0, 2};
            CHECK(scalar_bound_holds(fam, row.qs_min, row.r));
            if (row.qs_min > 2)
                CHECK(!scalar_bound_holds(fam, prev_prime_power(row.qs_min), row.r));
        }
        CHECK(rows[0].qs_min == 2);
        CHECK(rows[1].qs_min == 8);
        CHECK(rows[2].qs_min == 64);
    }

    TEST_CASE("growth of the scalar field requirement") {
        auto rows = gap_table(4, 4, 2, 1, 3);
        // log_2(q_s) grows superlinearly across the three rows; the ratio to
        // t^2 stays within 1/2 + 1/(2t) for the computed range
        double prev_ratio = 0;
        for (const GapRow& row : rows) {
            double lg = std::log2(static_cast<double>(row.qs_min));
            CHECK(lg / row.t > prev_ratio);
            prev_ratio = lg / row.t;
            CHECK(row.gap_exponent <= 0.5 + 0.5 / row.t + 1e-9);
        }
    }

    TEST_CASE("even h picks eps = h/2 - 1") {
        auto rows = gap_table(6, 6, 2, 1, 1);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].ell == 3);
        CHECK(rows[0].eps == 2);
        CHECK(rows[0].exact);
    }

    TEST_CASE("odd h yields the two candidate parameterizations") {
        auto rows = gap_table(5, 5, 2, 1, 1);
        REQUIRE(rows.size() == 2);
        CHECK(rows[0].ell == 3);
        CHECK(rows[0].eps == 1);
        CHECK(rows[0].case_label == 2);
        CHECK(rows[1].ell == 2);
        CHECK(rows[1].eps == 2);
        CHECK(rows[1].case_label == 4);
        for (const auto& r : rows) CHECK(!r.exact);
        // h below 4 is skipped entirely
        CHECK(gap_table(2, 3, 2, 1, 2).empty());
    }

    TEST_CASE("table output formats") {
        auto rows = gap_table(4, 4, 2, 1, 2);
        std::string csv = gap_table_csv(rows);
        CHECK(csv.find("h,ell,eps,q,t,r,qs_min,gap_exponent") == 0);
        CHECK(csv.find("4,2,1,2,1,16,2,") != std::string::npos);
        CHECK(csv.find("4,2,1,2,2,4096,8,") != std::string::npos);
        std::string text = gap_table_text(rows);
        CHECK(text.find("exact") != std::string::npos);
        CHECK(text.find("log_2(8)/4") != std::string::npos);
    }
}
