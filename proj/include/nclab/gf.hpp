#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "nclab/numutil.hpp"

namespace nclab {

// Exact arithmetic in GF(p^m).
//
// An element is an integer in [0, q) whose base-p digits are the coefficients
// of its residue polynomial, constant term least significant. All contexts
// carry log/antilog tables with respect to the root of the modulus, built once
// at construction; building the antilog table doubles as the primitivity proof
// of the modulus (the powers of the root must enumerate all q-1 nonzero
// elements). Contexts are interned and immutable, so raw pointers stay valid
// for the lifetime of the process and pointer equality means same field.
class FieldCtx {
public:
    static uint64_t order_limit();
    static void set_order_limit(uint64_t limit);

    // Default modulus: the lexicographically smallest primitive monic
    // polynomial of degree m over GF(p), coefficients ordered low degree to
    // high. Found by exhaustive order test and cached per (p, m).
    static const FieldCtx& get(uint32_t p, uint32_t m);
    static const FieldCtx& get(uint32_t p, uint32_t m, const std::vector<uint32_t>& poly);

    uint32_t characteristic() const { return p_; }
    uint32_t degree() const { return m_; }
    uint64_t order() const { return q_; }
    // length m+1, monic, low degree first
    const std::vector<uint32_t>& modulus() const { return poly_; }

    uint32_t add(uint32_t a, uint32_t b) const {
        if (p_ == 2) return a ^ b;
        if (m_ == 1) {
            uint64_t s = static_cast<uint64_t>(a) + b;
            return static_cast<uint32_t>(s >= p_ ? s - p_ : s);
        }
        return add_digits(a, b);
    }

    uint32_t neg(uint32_t a) const {
        if (p_ == 2) return a;
        if (m_ == 1) return a == 0 ? 0 : p_ - a;
        return neg_digits(a);
    }

    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        uint64_t s = static_cast<uint64_t>(log_[a]) + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return antilog_[s];
    }

    uint32_t inv(uint32_t a) const {
        if (a == 0) throw std::domain_error("FieldCtx::inv: inverse of zero");
        uint64_t l = log_[a];
        return antilog_[l == 0 ? 0 : q_ - 1 - l];
    }

    // a^e with 0^0 = 1; negative e inverts (a must be nonzero)
    uint32_t pow(uint32_t a, int64_t e) const;

    // discrete log base the primitive root; a must be nonzero
    uint32_t log(uint32_t a) const {
        if (a == 0) throw std::domain_error("FieldCtx::log: log of zero");
        return log_[a];
    }

    // primitive root to the i-th power, i taken mod q-1
    uint32_t primitive_power(int64_t i) const {
        int64_t l = static_cast<int64_t>(q_ - 1);
        int64_t r = i % l;
        if (r < 0) r += l;
        return antilog_[static_cast<size_t>(r)];
    }

    uint32_t generator() const { return primitive_power(1); }

    std::string element_text(uint32_t a) const { return std::to_string(a); }
    uint32_t element_from_text(const std::string& s) const;

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

private:
    FieldCtx(uint32_t p, uint32_t m, std::vector<uint32_t> poly);

    uint32_t add_digits(uint32_t a, uint32_t b) const;
    uint32_t neg_digits(uint32_t a) const;
    void build_tables();

    uint32_t p_;
    uint32_t m_;
    uint64_t q_;
    std::vector<uint32_t> poly_;
    std::vector<uint32_t> log_;      // size q, log_[0] unused
    std::vector<uint32_t> antilog_;  // size q-1
};

// Degree-deg monic polynomial over the given field whose root generates the
// multiplicative group of the degree-deg extension; lexicographically smallest
// by coefficient values (low degree first). Throws if base.order()^deg
// exceeds the context order limit.
std::vector<uint32_t> find_primitive_poly(const FieldCtx& base, uint32_t deg);

// Convenience wrapper when element-level ergonomics matter more than raw
// throughput; the matrix kernels work on raw values instead.
class FieldElement {
public:
    FieldElement(const FieldCtx& F, uint32_t v) : F_(&F), v_(v) {
        if (v >= F.order()) throw std::invalid_argument("FieldElement: value out of range");
    }

    const FieldCtx& ctx() const { return *F_; }
    uint32_t value() const { return v_; }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        a.same(b);
        return FieldElement(*a.F_, a.F_->add(a.v_, b.v_));
    }
    friend FieldElement operator-(FieldElement a, FieldElement b) {
        a.same(b);
        return FieldElement(*a.F_, a.F_->sub(a.v_, b.v_));
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        a.same(b);
        return FieldElement(*a.F_, a.F_->mul(a.v_, b.v_));
    }
    friend FieldElement operator/(FieldElement a, FieldElement b) {
        a.same(b);
        return FieldElement(*a.F_, a.F_->mul(a.v_, b.F_->inv(b.v_)));
    }
    FieldElement operator-() const { return FieldElement(*F_, F_->neg(v_)); }
    FieldElement inv() const { return FieldElement(*F_, F_->inv(v_)); }
    FieldElement pow(int64_t e) const { return FieldElement(*F_, F_->pow(v_, e)); }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.F_ == b.F_ && a.v_ == b.v_;
    }

private:
    void same(const FieldElement& b) const {
        if (F_ != b.F_) throw std::invalid_argument("FieldElement: context mismatch");
    }

    const FieldCtx* F_;
    uint32_t v_;
};

}  // namespace nclab
