#include "nclab/rankmetric.hpp"

#include <stdexcept>

namespace nclab {

namespace {

constexpr uint64_t kCompanionCap = 1ULL << 16;  // materialized code size limit

}  // namespace

Mat companion_matrix(const FieldCtx& base, const std::vector<uint32_t>& poly) {
    if (poly.size() < 2 || poly.back() != 1)
        throw std::invalid_argument("companion_matrix: polynomial must be monic of degree >= 1");
    uint32_t t = static_cast<uint32_t>(poly.size() - 1);
    Mat c(base, t, t);
    for (uint32_t i = 0; i + 1 < t; ++i) c(i, i + 1) = 1;
    for (uint32_t j = 0; j < t; ++j) c(t - 1, j) = base.neg(poly[j]);
    return c;
}

CompanionCode companion_code(uint64_t q, uint32_t t) {
    auto pp = as_prime_power(q);
    if (!pp) throw std::invalid_argument("companion_code: q must be a prime power");
    const FieldCtx& base = FieldCtx::get(static_cast<uint32_t>(pp->p), pp->e);
    return companion_code(q, t, find_primitive_poly(base, t));
}

CompanionCode companion_code(uint64_t q, uint32_t t, const std::vector<uint32_t>& poly) {
    auto pp = as_prime_power(q);
    if (!pp) throw std::invalid_argument("companion_code: q must be a prime power");
    if (t < 1) throw std::invalid_argument("companion_code: t must be >= 1");
    u128 size = pow_u128(q, t);
    if (size > kCompanionCap)
        throw std::invalid_argument("companion_code: q^t exceeds the materialization cap");

    const FieldCtx& base = FieldCtx::get(static_cast<uint32_t>(pp->p), pp->e);
    Mat c = companion_matrix(base, poly);

    CompanionCode code;
    code.base = &base;
    code.t = t;
    code.poly = poly;
    code.words.reserve(static_cast<size_t>(size));
    Mat ident = Mat::identity(base, t);
    code.words.push_back(Mat(base, t, t));  // zero word
    code.words.push_back(ident);            // C^0
    Mat w = ident;
    for (uint64_t i = 1; i + 1 < size; ++i) {
        w = w * c;
        // the powers of a primitive companion matrix return to I only at q^t-1
        if (w == ident) throw std::invalid_argument("companion_code: polynomial is not primitive");
        code.words.push_back(w);
    }
    if (!(w * c == ident)) throw std::invalid_argument("companion_code: polynomial is not primitive");
    return code;
}

Mat companion_embed(const CompanionCode& code, const FieldCtx& ext, uint32_t value) {
    if (ext.order() != pow_u128(code.base->order(), code.t))
        throw std::invalid_argument("companion_embed: extension order mismatch");
    if (code.base->degree() != 1)
        throw std::invalid_argument("companion_embed: base field must be prime");
    if (ext.modulus() != code.poly)
        throw std::invalid_argument("companion_embed: extension modulus differs from the code polynomial");
    if (value == 0) return code.words[0];
    return code.words[1 + ext.log(value)];
}

GabidulinCode::GabidulinCode(uint64_t q, uint32_t n, uint32_t delta) {
    if (!is_prime(q))
        throw std::invalid_argument("GabidulinCode: q must be prime (subfield towers unsupported)");
    if (n < 1 || delta < 1 || delta > n)
        throw std::invalid_argument("GabidulinCode: need 1 <= delta <= n");
    base_ = &FieldCtx::get(static_cast<uint32_t>(q), 1);
    ext_ = &FieldCtx::get(static_cast<uint32_t>(q), n);  // checks q^n against the order limit
    n_ = n;
    delta_ = delta;
    k_ = n - delta + 1;

    // (a^j)^(q^i) for the polynomial basis {1, a, ..., a^{n-1}}
    uint64_t group = ext_->order() - 1;
    frob_.assign(n_, std::vector<uint32_t>(k_));
    for (uint32_t i = 0; i < k_; ++i) {
        uint64_t qi = 1;
        for (uint32_t s = 0; s < i; ++s) qi = qi * q % group;
        for (uint32_t j = 0; j < n_; ++j) {
            uint64_t lg = static_cast<uint64_t>(j) % group * qi % group;
            frob_[j][i] = ext_->primitive_power(static_cast<int64_t>(lg));
        }
    }
}

u128 GabidulinCode::size() const {
    return pow_u128(base_->order(), static_cast<uint64_t>(n_) * k_);
}

Mat GabidulinCode::codeword(u128 index) const {
    uint64_t qn = ext_->order();
    std::vector<uint32_t> msg(k_);
    for (uint32_t i = 0; i < k_; ++i) {
        msg[i] = static_cast<uint32_t>(index % qn);
        index /= qn;
    }
    if (index != 0) throw std::invalid_argument("GabidulinCode::codeword: index out of range");

    uint32_t p = base_->characteristic();
    Mat m(*base_, n_, n_);
    for (uint32_t j = 0; j < n_; ++j) {
        uint32_t v = 0;
        for (uint32_t i = 0; i < k_; ++i) {
            if (msg[i] == 0) continue;
            v = ext_->add(v, ext_->mul(msg[i], frob_[j][i]));
        }
        // base-q digits of v are the coordinates of f(a^j) in the basis
        for (uint32_t c = 0; c < n_; ++c) {
            m(j, c) = v % p;
            v /= p;
        }
    }
    return m;
}

size_t min_rank_distance(const std::vector<Mat>& words) {
    if (words.size() < 2) throw std::invalid_argument("min_rank_distance: need at least 2 codewords");
    const FieldCtx& F = words[0].ctx();
    size_t rows = words[0].rows(), cols = words[0].cols();
    for (const Mat& w : words) {
        if (&w.ctx() != &F || w.rows() != rows || w.cols() != cols)
            throw std::invalid_argument("min_rank_distance: shape mismatch");
    }
    std::vector<uint32_t> buf(rows * cols);
    size_t best = rows < cols ? rows : cols;
    for (size_t i = 0; i < words.size(); ++i) {
        const auto& wi = words[i].data();
        for (size_t j = i + 1; j < words.size(); ++j) {
            const auto& wj = words[j].data();
            for (size_t k = 0; k < buf.size(); ++k) buf[k] = F.sub(wi[k], wj[k]);
            size_t r = detail::rank_inplace(F, buf.data(), rows, cols);
            if (r < best) {
                best = r;
                if (best == 0) return 0;
            }
        }
    }
    return best;
}

}  // namespace nclab
