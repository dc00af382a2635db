#include "nclab/gf.hpp"

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace nclab {

namespace {

std::atomic<uint64_t> g_order_limit{1ULL << 20};

using CtxKey = std::tuple<uint32_t, uint32_t, std::vector<uint32_t>>;

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

std::map<CtxKey, std::unique_ptr<FieldCtx>>& registry() {
    static std::map<CtxKey, std::unique_ptr<FieldCtx>> r;
    return r;
}

std::mutex& poly_cache_mutex() {
    static std::mutex m;
    return m;
}

std::map<std::pair<uint32_t, uint32_t>, std::vector<uint32_t>>& poly_cache() {
    static std::map<std::pair<uint32_t, uint32_t>, std::vector<uint32_t>> c;
    return c;
}

uint64_t checked_order(uint32_t p, uint32_t m) {
    u128 q = pow_u128(p, m);
    if (q > g_order_limit.load()) {
        throw std::invalid_argument("FieldCtx: order " + to_string_u128(q) +
                                    " exceeds the configured limit " +
                                    std::to_string(g_order_limit.load()));
    }
    return static_cast<uint64_t>(q);
}

// root of x + c0 over GF(p) is -c0; smallest c0 whose root generates
std::vector<uint32_t> bootstrap_prime_poly(uint32_t p) {
    for (uint32_t c0 = 0; c0 < p; ++c0) {
        uint32_t root = (p - c0) % p;
        if (root == 0) continue;
        uint64_t b = root;
        uint32_t order = 1;
        while (b != 1) {
            b = b * root % p;
            ++order;
            if (order > p - 1) break;
        }
        if (order == p - 1) return {c0, 1};
    }
    throw std::logic_error("no primitive degree-1 polynomial found");  // unreachable for prime p
}

std::vector<uint32_t> default_poly(uint32_t p, uint32_t m) {
    {
        std::lock_guard<std::mutex> lk(poly_cache_mutex());
        auto it = poly_cache().find({p, m});
        if (it != poly_cache().end()) return it->second;
    }
    std::vector<uint32_t> poly =
        m == 1 ? bootstrap_prime_poly(p) : find_primitive_poly(FieldCtx::get(p, 1), m);
    std::lock_guard<std::mutex> lk(poly_cache_mutex());
    return poly_cache().emplace(std::make_pair(p, m), std::move(poly)).first->second;
}

}  // namespace

uint64_t FieldCtx::order_limit() { return g_order_limit.load(); }

void FieldCtx::set_order_limit(uint64_t limit) { g_order_limit.store(limit); }

const FieldCtx& FieldCtx::get(uint32_t p, uint32_t m) {
    if (!is_prime(p)) throw std::invalid_argument("FieldCtx: characteristic must be prime");
    if (m < 1) throw std::invalid_argument("FieldCtx: extension degree must be >= 1");
    checked_order(p, m);
    return get(p, m, default_poly(p, m));
}

const FieldCtx& FieldCtx::get(uint32_t p, uint32_t m, const std::vector<uint32_t>& poly) {
    if (!is_prime(p)) throw std::invalid_argument("FieldCtx: characteristic must be prime");
    if (m < 1) throw std::invalid_argument("FieldCtx: extension degree must be >= 1");
    checked_order(p, m);
    if (poly.size() != static_cast<size_t>(m) + 1 || poly[m] != 1)
        throw std::invalid_argument("FieldCtx: modulus must be monic of degree m");
    for (uint32_t c : poly)
        if (c >= p) throw std::invalid_argument("FieldCtx: modulus coefficient out of range");

    CtxKey key{p, m, poly};
    std::lock_guard<std::mutex> lk(registry_mutex());
    auto it = registry().find(key);
    if (it == registry().end()) {
        // private constructor, cannot use make_unique
        std::unique_ptr<FieldCtx> ctx(new FieldCtx(p, m, poly));
        it = registry().emplace(std::move(key), std::move(ctx)).first;
    }
    return *it->second;
}

FieldCtx::FieldCtx(uint32_t p, uint32_t m, std::vector<uint32_t> poly)
    : p_(p), m_(m), q_(1), poly_(std::move(poly)) {
    for (uint32_t i = 0; i < m; ++i) q_ *= p;
    build_tables();
}

void FieldCtx::build_tables() {
    // walk the powers of the root of the modulus; a primitive modulus visits
    // every nonzero element exactly once before returning to 1
    std::vector<uint32_t> digits(m_, 0);
    if (m_ == 1) {
        digits[0] = (p_ - poly_[0]) % p_;  // x = -c0
    } else {
        digits[1] = 1;  // x itself
    }

    auto value_of = [&](const std::vector<uint32_t>& d) {
        uint64_t v = 0;
        for (uint32_t i = m_; i-- > 0;) v = v * p_ + d[i];
        return static_cast<uint32_t>(v);
    };
    auto mul_x = [&](std::vector<uint32_t>& d) {
        uint32_t carry = d[m_ - 1];
        for (uint32_t i = m_; i-- > 1;) d[i] = d[i - 1];
        d[0] = 0;
        if (carry != 0) {
            for (uint32_t i = 0; i < m_; ++i) {
                uint64_t t = static_cast<uint64_t>(carry) * poly_[i] % p_;
                d[i] = static_cast<uint32_t>((d[i] + p_ - t) % p_);
            }
        }
    };

    antilog_.assign(q_ - 1, 0);
    log_.assign(q_, UINT32_MAX);
    antilog_[0] = 1;
    log_[1] = 0;
    for (uint64_t i = 1; i < q_ - 1; ++i) {
        uint32_t v = i == 1 ? value_of(digits) : (mul_x(digits), value_of(digits));
        if (v == 0 || log_[v] != UINT32_MAX)
            throw std::invalid_argument("FieldCtx: modulus is not primitive");
        antilog_[i] = v;
        log_[v] = static_cast<uint32_t>(i);
    }
    if (q_ > 2) {
        mul_x(digits);
        if (value_of(digits) != 1) throw std::invalid_argument("FieldCtx: modulus is not primitive");
    }
}

uint32_t FieldCtx::add_digits(uint32_t a, uint32_t b) const {
    uint64_t v = 0;
    uint64_t mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        uint32_t s = da + db;
        if (s >= p_) s -= p_;
        v += s * mult;
        mult *= p_;
    }
    return static_cast<uint32_t>(v);
}

uint32_t FieldCtx::neg_digits(uint32_t a) const {
    uint64_t v = 0;
    uint64_t mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t da = a % p_;
        a /= p_;
        v += (da == 0 ? 0 : p_ - da) * mult;
        mult *= p_;
    }
    return static_cast<uint32_t>(v);
}

uint32_t FieldCtx::pow(uint32_t a, int64_t e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw std::domain_error("FieldCtx::pow: negative power of zero");
        return 0;
    }
    int64_t l = static_cast<int64_t>(q_ - 1);
    int64_t em = e % l;
    if (em < 0) em += l;
    uint64_t idx = static_cast<uint64_t>(log_[a]) * static_cast<uint64_t>(em) % static_cast<uint64_t>(l);
    return antilog_[idx];
}

uint32_t FieldCtx::element_from_text(const std::string& s) const {
    size_t pos = 0;
    unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size() || v >= q_) throw std::invalid_argument("element text out of range: " + s);
    return static_cast<uint32_t>(v);
}

std::vector<uint32_t> find_primitive_poly(const FieldCtx& base, uint32_t deg) {
    if (deg < 1) throw std::invalid_argument("find_primitive_poly: degree must be >= 1");
    uint64_t q = base.order();
    u128 ext_order = pow_u128(q, deg);
    if (ext_order > FieldCtx::order_limit())
        throw std::invalid_argument("find_primitive_poly: extension order exceeds the configured limit");
    uint64_t group = static_cast<uint64_t>(ext_order) - 1;

    std::vector<uint32_t> coeffs(deg, 0);  // c0..c_{deg-1}, leading coefficient fixed to 1
    std::vector<uint32_t> v(deg);

    auto mul_x = [&](std::vector<uint32_t>& d) {
        uint32_t carry = d[deg - 1];
        for (uint32_t i = deg; i-- > 1;) d[i] = d[i - 1];
        d[0] = 0;
        if (carry != 0) {
            for (uint32_t i = 0; i < deg; ++i)
                d[i] = base.sub(d[i], base.mul(carry, coeffs[i]));
        }
    };
    auto is_one = [&](const std::vector<uint32_t>& d) {
        if (d[0] != 1) return false;
        for (uint32_t i = 1; i < deg; ++i)
            if (d[i] != 0) return false;
        return true;
    };
    auto is_zero = [&](const std::vector<uint32_t>& d) {
        for (uint32_t x : d)
            if (x != 0) return false;
        return true;
    };

    for (;;) {
        // a zero constant term makes x a zero divisor, never primitive;
        // skipping these cheaply matters for large extensions
        if (coeffs[0] != 0) {
            // x reduced modulo the candidate
            std::fill(v.begin(), v.end(), 0);
            if (deg == 1) {
                v[0] = base.neg(coeffs[0]);
            } else {
                v[1] = 1;
            }
            uint64_t order = 1;
            while (!is_one(v)) {
                mul_x(v);
                ++order;
                if (is_zero(v) || order > group) {
                    order = 0;
                    break;
                }
            }
            if (order == group) {
                std::vector<uint32_t> poly(coeffs);
                poly.push_back(1);
                return poly;
            }
        }
        // next candidate in lexicographic coefficient order
        uint32_t i = deg;
        while (i-- > 0) {
            if (++coeffs[i] < q) break;
            coeffs[i] = 0;
            if (i == 0) throw std::logic_error("find_primitive_poly: no primitive polynomial found");
        }
    }
}

}  // namespace nclab
