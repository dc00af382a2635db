#include "nclab/analyze.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "nclab/network.hpp"
#include "nclab/subspace.hpp"

namespace nclab {

RBound vector_r_bound(uint32_t h, uint32_t ell, uint32_t eps, uint64_t q, uint32_t t) {
    NetworkSpec probe{h, 2, ell, eps, 2};
    if (probe.classify() != NetClass::Normal)
        throw std::invalid_argument("vector_r_bound: (h, ell, eps, alpha=2) must be a normal network");
    uint64_t lt = static_cast<uint64_t>(ell) * t;
    uint64_t ht = static_cast<uint64_t>(h) * t;
    uint64_t et = static_cast<uint64_t>(eps) * t;
    if (h <= 2 * ell) {
        if (eps == 0) return RBound{pow_u128(q, lt), 1};
        return RBound{pow_u128(q, lt * (et + 1)), 2};
    }
    if (2 * ell + eps == h) return RBound{pow_u128(q, ht - lt), 3};
    // a normal network has 2*ell + eps >= h, so this stays nonnegative
    return RBound{pow_u128(q, (ht - lt) * (2 * lt + et + 1 - ht)), 4};
}

bool scalar_bound_holds(const ScalarFamily& family, uint64_t qs, u128 r) {
    switch (family.kind) {
        case ScalarFamily::Combination: {
            u128 bound = static_cast<u128>(qs) + 1;
            if (family.h == 3 && qs % 2 == 0) bound = static_cast<u128>(qs) + 2;
            return r <= bound;
        }
        case ScalarFamily::PairBlocks:
            return gaussian_binomial_at_least(2 * family.ell, family.ell, qs, r);
        case ScalarFamily::ThreeMessage:
            return r <= 2 * (static_cast<u128>(qs) * qs + qs + 1);
    }
    throw std::logic_error("scalar_bound_holds: bad family");
}

uint64_t min_scalar_field(const ScalarFamily& family, u128 r) {
    for (uint64_t qs = 2;; qs = next_prime_power(qs + 1)) {
        if (scalar_bound_holds(family, qs, r)) return qs;
        if (qs > (1ULL << 40)) throw std::overflow_error("min_scalar_field: search ran away");
    }
}

namespace {

GapRow make_row(uint32_t h, uint32_t ell, uint32_t eps, uint64_t q, uint32_t t, bool exact) {
    RBound rb = vector_r_bound(h, ell, eps, q, t);
    // at the optimized parameter choices eps = h - ell - 1, so the scalar side
    // needs exactly distinct ell-subspaces of F^h: bound [h ell]_{q_s}
    uint64_t qs = 2;
    while (!gaussian_binomial_at_least(h, ell, qs, rb.r)) qs = next_prime_power(qs + 1);

    GapRow row;
    row.h = h;
    row.ell = ell;
    row.eps = eps;
    row.q = q;
    row.t = t;
    row.r = rb.r;
    row.qs_min = qs;
    row.case_label = rb.case_label;
    row.exact = exact;
    double t2 = static_cast<double>(t) * t;
    row.gap_exponent = std::log2(static_cast<double>(qs)) / std::log2(static_cast<double>(q)) / t2;
    std::ostringstream expr;
    expr << "log_" << q << '(' << qs << ")/" << static_cast<uint64_t>(t2);
    row.gap_expression = expr.str();
    return row;
}

}  // namespace

std::vector<GapRow> gap_table(uint32_t h_lo, uint32_t h_hi, uint64_t q, uint32_t t_lo, uint32_t t_hi) {
    if (h_lo > h_hi || t_lo > t_hi || t_lo < 1)
        throw std::invalid_argument("gap_table: bad ranges");
    std::vector<GapRow> rows;
    for (uint32_t h = h_lo; h <= h_hi; ++h) {
        if (h < 4) continue;
        for (uint32_t t = t_lo; t <= t_hi; ++t) {
            if (h % 2 == 0) {
                // the largest-gap network for even h; the scalar bound is an iff
                rows.push_back(make_row(h, h / 2, h / 2 - 1, q, t, true));
            } else {
                // two candidate parameterizations, both with eps = h - ell - 1;
                // no converse is known, so the scalar side is order-of-magnitude
                uint32_t ell_a = (h + 1) / 2;
                uint32_t ell_b = (h - 1) / 2;
                rows.push_back(make_row(h, ell_a, h - ell_a - 1, q, t, false));
                rows.push_back(make_row(h, ell_b, h - ell_b - 1, q, t, false));
            }
        }
    }
    return rows;
}

std::string gap_table_text(const std::vector<GapRow>& rows) {
    std::ostringstream os;
    os << std::left << std::setw(4) << "h" << std::setw(5) << "ell" << std::setw(5) << "eps"
       << std::setw(4) << "q" << std::setw(4) << "t" << std::setw(28) << "r" << std::setw(8)
       << "qs_min" << std::setw(6) << "case" << std::setw(24) << "gap_exponent"
       << "bound" << '\n';
    for (const GapRow& r : rows) {
        std::ostringstream gap;
        gap << r.gap_expression << " ~" << std::fixed << std::setprecision(4) << r.gap_exponent;
        os << std::left << std::setw(4) << r.h << std::setw(5) << r.ell << std::setw(5) << r.eps
           << std::setw(4) << r.q << std::setw(4) << r.t << std::setw(28) << to_string_u128(r.r)
           << std::setw(8) << r.qs_min << std::setw(6) << r.case_label << std::setw(24) << gap.str()
           << (r.exact ? "exact" : "order-of-magnitude") << '\n';
    }
    return os.str();
}

std::string gap_table_csv(const std::vector<GapRow>& rows) {
    std::ostringstream os;
    os << "h,ell,eps,q,t,r,qs_min,gap_exponent\n";
    for (const GapRow& r : rows) {
        os << r.h << ',' << r.ell << ',' << r.eps << ',' << r.q << ',' << r.t << ','
           << to_string_u128(r.r) << ',' << r.qs_min << ',' << std::setprecision(10)
           << r.gap_exponent << '\n';
    }
    return os.str();
}

}  // namespace nclab
