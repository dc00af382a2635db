#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nclab/network.hpp"
#include "nclab/rankmetric.hpp"
#include "nclab/subspace.hpp"

namespace nclab {

// Complete network code: one (ell*t x h*t) coefficient matrix per middle node
// plus, when eps > 0, one (eps*t x h*t) completion matrix per receiver.
// Receiver matrices are stored in one flat buffer ordered by receiver index so
// that solutions with ~10^6 receivers stay affordable.
struct Assignment {
    NetworkSpec net;
    const FieldCtx* field = nullptr;
    uint32_t t = 1;
    std::vector<Mat> nodes;
    std::vector<uint32_t> direct;

    size_t node_rows() const { return static_cast<size_t>(net.ell) * t; }
    size_t msg_dim() const { return static_cast<size_t>(net.h) * t; }
    size_t direct_rows() const { return static_cast<size_t>(net.eps) * t; }

    Mat direct_matrix(u128 receiver) const;
    void set_direct_matrix(u128 receiver, const Mat& p);
};

// count x cols matrix of standard basis rows e_j picked greedily in increasing
// j, each emitted only if it raises the rank of the running stack (stacked
// plus the rows already emitted); once the rank reaches target the remaining
// rows are zero. Errors when target cannot be reached with count rows.
Mat completion_rows(const Mat& stacked, size_t target, size_t count);

// N_{h,r,h}: extended Reed-Solomon columns (1, a, a^2, ..., a^{h-1}) with a
// running through 0 and then the powers of the primitive element, plus e_h;
// for h = 3, even q_s and r = q_s + 2 additionally e_2 (hyperoval completion).
Assignment scalar_mds(uint32_t h, uint32_t r, uint64_t qs);

// (ell-1, ell)-N_{2ell, r, 3ell-1} scalar solution: the first r members of
// G_{q_s}(2ell, ell) as middle-node blocks; r <= [2ell ell]_{q_s}.
Assignment scalar_subspace_blocks(uint32_t ell, uint32_t r, uint64_t qs);

// (1,1)-N_{3,r,4} scalar solution: projective points of PG(2, q_s), each used
// at most twice; r <= 2(q_s^2 + q_s + 1).
Assignment scalar_three_messages(uint32_t r, uint64_t qs);

// N_{h,r,h} vector solution from the companion code: node i transmits
// [I | C_i | C_i^2 | ... | C_i^{h-1}], the last node transmits x_h; r <=
// q^t + 1, or q^t + 2 for h = 3 and even q^t (one extra node transmits x_2).
Assignment vector_companion(uint32_t h, uint64_t q, uint32_t t, uint32_t r);

// (1, ell)-N_{2ell, r, 2ell+1} vector solution from an MRD code with matrix
// side ell*t and rank distance (ell-1)*t: node i transmits [I | C_i];
// r <= q^{ell*t*(t+1)}. ell = 2 is the (1,2)-N_{4,r,5} case.
Assignment vector_mrd_single_direct(uint32_t ell, uint64_t q, uint32_t t, uint64_t r);

// (ell-1, ell)-N_{2ell, r, 3ell-1} vector solution from an MRD code with
// matrix side ell*t and rank distance t; r <= q^{ell(ell-1)t^2 + ell*t}.
Assignment vector_mrd_multi_direct(uint32_t ell, uint64_t q, uint32_t t, uint64_t r);

// Any normal spec whose receivers see alpha blocks of at most ell*t rows:
// node i carries the canonical basis of cover member i (zero-padded to ell*t
// rows). Requires cover ambient h*t, alpha matching, span requirement
// (h-eps)*t, and the first r members to satisfy the cover property.
Assignment vector_from_cover(const NetworkSpec& spec, const CoverCode& cover, uint64_t q, uint32_t t);

// Text form: network header block, then "node i" + matrix per middle node,
// then "receiver j" + matrix when eps > 0. Round-trips byte-exact.
std::string assignment_to_text(const Assignment& a);
Assignment assignment_from_text(const std::string& text);

}  // namespace nclab
