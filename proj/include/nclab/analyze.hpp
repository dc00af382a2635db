#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nclab/numutil.hpp"

namespace nclab {

// Field-size gap analysis: achievable r for the vector solution against the
// smallest prime power admitting a scalar solution at that r.

struct RBound {
    u128 r;
    int case_label;  // 1..4
};

// Achievable r for the alpha=2 family with the given parameters, by case:
//   1. h-ell <= ell, eps = 0:           r = q^{ell*t}
//   2. h-ell <= ell, eps != 0:          r = q^{(ell*t)(eps*t+1)}
//   3. h-ell >= ell, 2ell-h+eps = 0:    r = q^{(h-ell)t}
//   4. h-ell >= ell, 2ell-h+eps != 0:   r = q^{(h-ell)t(2ell*t-h*t+eps*t+1)}
// Requires the (h, ell, eps, alpha=2) network to be normal.
RBound vector_r_bound(uint32_t h, uint32_t ell, uint32_t eps, uint64_t q, uint32_t t);

// Network families with an exact scalar achievability bound in r:
//   Combination: N_{h,r,h}, r <= q_s + 1 (q_s + 2 for h=3 and even q_s)
//   PairBlocks:  (ell-1,ell)-N_{2ell,r,3ell-1}, r <= [2ell ell]_{q_s}
//                (ell = 2 is the (1,2)-N_{4,r,5} network)
//   ThreeMessage: (1,1)-N_{3,r,4}, r <= 2(q_s^2+q_s+1)
struct ScalarFamily {
    enum Kind { Combination, PairBlocks, ThreeMessage } kind;
    uint32_t h = 0;    // Combination only
    uint32_t ell = 0;  // PairBlocks only
};

// smallest prime power q_s whose family bound admits r, by ascending search
uint64_t min_scalar_field(const ScalarFamily& family, u128 r);

// evaluates the family bound at a given q_s (true iff r achievable)
bool scalar_bound_holds(const ScalarFamily& family, uint64_t qs, u128 r);

struct GapRow {
    uint32_t h, ell, eps;
    uint64_t q;
    uint32_t t;
    u128 r;
    uint64_t qs_min;
    int case_label;
    bool exact;  // scalar bound is an if-and-only-if for this family
    double gap_exponent;        // log_q(qs_min) / t^2, decimal approximation
    std::string gap_expression; // exact form, e.g. "log_2(8)/4"
};

// Best (eps, ell) per h: even h uses (h/2-1, h/2); odd h >= 5 yields the two
// candidate parameterizations, both with an achievability-side scalar bound
// [h ell]_{q_s} (order-of-magnitude only, exact=false). h < 4 is skipped.
std::vector<GapRow> gap_table(uint32_t h_lo, uint32_t h_hi, uint64_t q, uint32_t t_lo, uint32_t t_hi);

std::string gap_table_text(const std::vector<GapRow>& rows);
std::string gap_table_csv(const std::vector<GapRow>& rows);

}  // namespace nclab
