#pragma once

#include <cstdint>
#include <vector>

#include "nclab/linalg.hpp"

namespace nclab {

// Companion matrix of a monic polynomial over the given field: superdiagonal
// ones, last row the negated coefficients.
Mat companion_matrix(const FieldCtx& base, const std::vector<uint32_t>& poly);

// The rank-metric code {0, I, C, C^2, ..., C^{q^t-2}} generated by the
// companion matrix C of a primitive degree-t polynomial: q^t pairwise
// commutative t x t matrices over GF(q), every difference of distinct members
// has full rank t. Isomorphic to GF(q^t) under alpha^i -> C^i.
struct CompanionCode {
    const FieldCtx* base = nullptr;
    uint32_t t = 0;
    std::vector<uint32_t> poly;  // primitive, degree t, coefficients over base
    std::vector<Mat> words;      // 0, I, C, C^2, ...

    size_t size() const { return words.size(); }
    const Mat& word(size_t i) const { return words.at(i); }
};

// q may be any prime power within the materialization cap (q^t matrices are
// stored). The polynomial defaults to the lexicographically smallest primitive
// one over GF(q).
CompanionCode companion_code(uint64_t q, uint32_t t);
CompanionCode companion_code(uint64_t q, uint32_t t, const std::vector<uint32_t>& poly);

// Image of a GF(q^t) element under alpha^i -> C^i. Requires prime q; ext must
// be GF(q^t) built on the same polynomial the code uses.
Mat companion_embed(const CompanionCode& code, const FieldCtx& ext, uint32_t value);

// Codewords are the matrices, over the polynomial basis {1, a, ..., a^{n-1}}
// of GF(q^n), of the maps x -> sum m_i x^{q^i} with message digits m_i in
// GF(q^n). Size q^{n(n-delta+1)}, minimum rank distance exactly delta.
// Codewords are generated on demand from the index; index digits base q^n are
// the message coefficients, least significant digit = m_0.
class GabidulinCode {
public:
    GabidulinCode(uint64_t q, uint32_t n, uint32_t delta);

    const FieldCtx& base() const { return *base_; }
    const FieldCtx& ext() const { return *ext_; }
    uint32_t n() const { return n_; }
    uint32_t delta() const { return delta_; }
    uint32_t dim() const { return k_; }
    u128 size() const;  // throws on overflow past 2^128-1

    Mat codeword(u128 index) const;

private:
    const FieldCtx* base_;
    const FieldCtx* ext_;
    uint32_t n_, delta_, k_;
    std::vector<std::vector<uint32_t>> frob_;  // frob_[j][i] = (a^j)^(q^i)
};

inline GabidulinCode gabidulin_code(uint64_t q, uint32_t n, uint32_t delta) {
    return GabidulinCode(q, n, delta);
}

// min over distinct pairs of rank(A - B); requires >= 2 same-shape words
size_t min_rank_distance(const std::vector<Mat>& words);

}  // namespace nclab
