#include "nclab/numutil.hpp"

#include <algorithm>

namespace nclab {

std::string to_string_u128(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

u128 pow_u128(u128 base, uint64_t e) {
    u128 r = 1;
    while (e > 0) {
        if (e & 1) {
            if (mul_overflows(r, base)) throw std::overflow_error("pow_u128: overflow");
            r *= base;
        }
        e >>= 1;
        if (e > 0) {
            if (mul_overflows(base, base)) throw std::overflow_error("pow_u128: overflow");
            base *= base;
        }
    }
    return r;
}

u128 pow_u128_sat(u128 base, uint64_t e) {
    u128 r = 1;
    while (e > 0) {
        if (e & 1) {
            if (mul_overflows(r, base)) return U128_MAX;
            r *= base;
        }
        e >>= 1;
        if (e > 0) {
            // a remaining factor is at least base^2, so an overflowing square
            // saturates the whole product
            if (mul_overflows(base, base)) return U128_MAX;
            base *= base;
        }
    }
    return r;
}

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (uint64_t d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::optional<PrimePower> as_prime_power(uint64_t n) {
    if (n < 2) return std::nullopt;
    uint64_t p = n;
    // smallest prime factor by trial division
    for (uint64_t d = 2; d <= n / d; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    uint32_t e = 0;
    uint64_t m = n;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    if (m != 1) return std::nullopt;
    return PrimePower{p, e};
}

uint64_t next_prime_power(uint64_t n) {
    if (n < 2) n = 2;
    for (uint64_t v = n;; ++v) {
        if (as_prime_power(v)) return v;
    }
}

uint64_t prev_prime_power(uint64_t n) {
    for (uint64_t v = n; v-- > 2;) {
        if (as_prime_power(v)) return v;
    }
    throw std::invalid_argument("prev_prime_power: no prime power below " + std::to_string(n));
}

u128 binomial_u128(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    u128 r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        // r * (n-k+i) / i is exact at every step: it equals C(n-k+i, i)
        u128 f = n - k + i;
        if (mul_overflows(r, f)) throw std::overflow_error("binomial_u128: overflow");
        r = r * f / i;
    }
    return r;
}

CombinationIter::CombinationIter(uint64_t n, uint64_t k) : n_(n), k_(k) {
    if (k > n) throw std::invalid_argument("CombinationIter: k > n");
    cur_.resize(k);
    for (uint64_t i = 0; i < k; ++i) cur_[i] = static_cast<uint32_t>(i);
}

bool CombinationIter::next(std::vector<uint32_t>& out) {
    if (!started_) {
        started_ = true;
        out = cur_;
        return true;
    }
    if (k_ == 0) return false;
    // advance rightmost index that can still move
    size_t i = k_;
    while (i-- > 0) {
        if (cur_[i] + (k_ - i) < n_) {
            ++cur_[i];
            for (size_t j = i + 1; j < k_; ++j) cur_[j] = cur_[j - 1] + 1;
            out = cur_;
            return true;
        }
    }
    return false;
}

std::vector<uint32_t> combination_unrank(uint64_t n, uint64_t k, u128 index) {
    if (k > n) throw std::invalid_argument("combination_unrank: k > n");
    if (index >= binomial_u128(n, k)) throw std::invalid_argument("combination_unrank: index out of range");
    std::vector<uint32_t> out;
    out.reserve(k);
    uint64_t x = 0;
    for (uint64_t slot = 0; slot < k; ++slot) {
        for (;; ++x) {
            if (x >= n) throw std::invalid_argument("combination_unrank: index out of range");
            // combinations starting with x at this slot
            u128 c = binomial_u128(n - 1 - x, k - 1 - slot);
            if (index < c) break;
            index -= c;
        }
        out.push_back(static_cast<uint32_t>(x));
        ++x;
    }
    return out;
}

}  // namespace nclab
