#include "nclab/subspace.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace nclab {

bool operator<(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient()) return u.ambient() < v.ambient();
    if (u.dim() != v.dim()) return u.dim() < v.dim();
    return u.basis_.data() < v.basis_.data();
}

size_t subspace_distance(const Subspace& u, const Subspace& v) {
    if (&u.ctx() != &v.ctx() || u.ambient() != v.ambient())
        throw std::invalid_argument("subspace_distance: ambient mismatch");
    size_t s = (u + v).dim();
    return 2 * s - u.dim() - v.dim();
}

u128 gaussian_binomial(uint32_t n, uint32_t k, uint64_t q) {
    if (q < 2) throw std::invalid_argument("gaussian_binomial: q must be >= 2");
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    u128 g = 1;
    for (uint32_t i = 1; i <= k; ++i) {
        // g * (q^{n-k+i} - 1) / (q^i - 1) is exact at every step
        u128 num = pow_u128(q, n - k + i) - 1;
        if (mul_overflows(g, num)) throw std::overflow_error("gaussian_binomial: overflow");
        g = g * num / (pow_u128(q, i) - 1);
    }
    return g;
}

bool gaussian_binomial_at_least(uint32_t n, uint32_t k, uint64_t q, u128 r) {
    if (k > n) return r == 0;
    // [n k]_q >= q^{k(n-k)}
    if (pow_u128_sat(q, static_cast<uint64_t>(k) * (n - k)) >= r) return true;
    try {
        return gaussian_binomial(n, k, q) >= r;
    } catch (const std::overflow_error&) {
        return true;  // > 2^128-1 >= r
    }
}

AqBounds aq_bounds(uint32_t n, uint32_t k, uint32_t delta, uint64_t q) {
    if (delta < 1 || delta > k || k > n) throw std::invalid_argument("aq_bounds: need 1 <= delta <= k <= n");
    u128 base = pow_u128(q, static_cast<uint64_t>(n - k) * (k - delta + 1));
    u128 factor = delta > 1 ? 2 : 4;
    if (mul_overflows(base, factor)) throw std::overflow_error("aq_bounds: overflow");
    return AqBounds{base, base * factor};
}

namespace {

// generates every RREF pattern once: pivot-column sets, then the free entries
// of each pattern; the caller establishes the published (sorted) order
void generate_grassmannian(const FieldCtx& F, uint32_t n, uint32_t k,
                           std::vector<Subspace>& out) {
    if (k > n) return;
    std::vector<uint32_t> pivots(k);
    for (uint32_t i = 0; i < k; ++i) pivots[i] = i;

    for (;;) {
        std::vector<std::pair<uint32_t, uint32_t>> free_pos;
        for (uint32_t i = 0; i < k; ++i)
            for (uint32_t j = pivots[i] + 1; j < n; ++j)
                if (!std::binary_search(pivots.begin(), pivots.end(), j)) free_pos.emplace_back(i, j);

        std::vector<uint32_t> vals(free_pos.size(), 0);
        for (;;) {
            Mat m(F, k, n);
            for (uint32_t i = 0; i < k; ++i) m(i, pivots[i]) = 1;
            for (size_t f = 0; f < free_pos.size(); ++f)
                m(free_pos[f].first, free_pos[f].second) = vals[f];
            out.push_back(Subspace::from(m));

            size_t f = vals.size();
            while (f-- > 0) {
                if (++vals[f] < F.order()) break;
                vals[f] = 0;
                if (f == 0) goto next_pivots;
            }
            if (vals.empty()) break;
        }
    next_pivots:
        uint32_t i = k;
        bool advanced = false;
        while (i-- > 0) {
            if (pivots[i] + (k - i) < n) {
                ++pivots[i];
                for (uint32_t j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return;
    }
}

}  // namespace

GrassmannianIter::GrassmannianIter(const FieldCtx& F, uint32_t n, uint32_t k, uint64_t cap) {
    all_ = enumerate_grassmannian(F, n, k, cap);
}

std::optional<Subspace> GrassmannianIter::next() {
    if (pos_ >= all_.size()) return std::nullopt;
    return all_[pos_++];
}

std::vector<Subspace> enumerate_grassmannian(const FieldCtx& F, uint32_t n, uint32_t k, uint64_t cap) {
    if (gaussian_binomial_at_least(n, k, F.order(), static_cast<u128>(cap) + 1))
        throw std::invalid_argument("enumerate_grassmannian: Grassmannian larger than the cap");
    std::vector<Subspace> out;
    generate_grassmannian(F, n, k, out);
    std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) {
        return a.basis().data() < b.basis().data();
    });
    return out;
}

namespace {

// dim of the sum of the given members plus (optionally) one extra basis,
// assembled into a scratch buffer
size_t span_dim(const std::vector<Subspace>& members, const std::vector<uint32_t>& idx,
                const Mat* extra, std::vector<uint32_t>& buf) {
    const FieldCtx& F = members[idx.empty() ? 0 : idx[0]].ctx();
    size_t n = members[idx.empty() ? 0 : idx[0]].ambient();
    size_t rows = 0;
    for (uint32_t i : idx) rows += members[i].dim();
    if (extra) rows += extra->rows();
    buf.resize(rows * n);
    size_t off = 0;
    for (uint32_t i : idx) {
        const auto& d = members[i].basis().data();
        std::copy(d.begin(), d.end(), buf.begin() + off);
        off += d.size();
    }
    if (extra) std::copy(extra->data().begin(), extra->data().end(), buf.begin() + off);
    return detail::rank_inplace(F, buf.data(), rows, n);
}

}  // namespace

std::optional<CoverViolation> alpha_cover_violation(const std::vector<Subspace>& members,
                                                    uint32_t alpha, uint32_t min_span) {
    if (alpha > members.size())
        throw std::invalid_argument("alpha_cover_violation: alpha exceeds the set size");
    if (members.empty()) return std::nullopt;
    const FieldCtx& F = members[0].ctx();
    for (const Subspace& s : members) {
        if (&s.ctx() != &F || s.ambient() != members[0].ambient())
            throw std::invalid_argument("alpha_cover_violation: ambient mismatch");
    }

    std::vector<uint32_t> idx;
    std::vector<uint32_t> buf;
    CombinationIter it(members.size(), alpha);
    while (it.next(idx)) {
        size_t d = span_dim(members, idx, nullptr, buf);
        if (d < min_span) return CoverViolation{idx, d};
    }
    return std::nullopt;
}

CoverCode cover_code_51() {
    const FieldCtx& F2 = FieldCtx::get(2, 1);
    const FieldCtx& F16 = FieldCtx::get(2, 4, {1, 1, 0, 0, 1});  // b^4 = b + 1

    // row (a, b, c0..c3) with c the coefficient bits of the GF(16) value
    auto vec = [&](uint32_t a, uint32_t b, uint32_t v) {
        Mat m(F2, 1, 6);
        m(0, 0) = a;
        m(0, 1) = b;
        for (uint32_t i = 0; i < 4; ++i) m(0, 2 + i) = (v >> i) & 1;
        return m;
    };
    auto beta = [&](int64_t i) { return F16.primitive_power(i); };
    auto span2 = [&](const Mat& x, const Mat& y) { return Subspace::from(vstack({x, y})); };

    CoverCode code;
    code.field = &F2;
    code.n = 6;
    code.k = 2;
    code.alpha = 3;
    code.min_span = 4;
    code.members.reserve(51);
    for (int64_t i = 0; i < 15; ++i)
        code.members.push_back(span2(vec(0, 1, beta(i)), vec(1, 0, beta(i + 1))));
    for (int64_t i = 0; i < 15; ++i)
        code.members.push_back(span2(vec(0, 1, beta(i)), vec(1, 0, beta(i + 2))));
    for (int64_t i = 0; i < 15; ++i)
        code.members.push_back(span2(vec(0, 1, beta(i)), vec(1, 0, beta(i - 1))));
    for (int64_t i = 0; i < 5; ++i)
        code.members.push_back(span2(vec(0, 0, beta(i)), vec(0, 0, beta(i + 5))));
    code.members.push_back(span2(vec(1, 0, 0), vec(0, 1, 0)));
    return code;
}

namespace {

// Incremental feasibility: the only alpha-subsets a new member creates are
// {candidate} + T for T an (alpha-1)-subset of the current set, so it is
// enough to test the candidate against the (alpha-1)-subset spans that are
// still below the required dimension.
class CoverBuilder {
public:
    CoverBuilder(uint32_t alpha, uint32_t min_span) : alpha_(alpha), min_span_(min_span) {}

    bool feasible(const std::vector<Subspace>& chosen, const Subspace& cand,
                  std::vector<uint32_t>& buf) const {
        if (alpha_ == 1) return cand.dim() >= min_span_;
        if (chosen.size() + 1 < alpha_) return true;
        for (const Mat& w : binding_) {
            size_t rows = w.rows() + cand.dim();
            buf.resize(rows * cand.ambient());
            std::copy(w.data().begin(), w.data().end(), buf.begin());
            std::copy(cand.basis().data().begin(), cand.basis().data().end(),
                      buf.begin() + w.data().size());
            if (detail::rank_inplace(cand.ctx(), buf.data(), rows, cand.ambient()) < min_span_)
                return false;
        }
        return true;
    }

    // call after chosen has been extended by the accepted candidate
    void accepted(const std::vector<Subspace>& chosen) {
        if (alpha_ < 2) return;
        size_t old = chosen.size() - 1;
        if (old < static_cast<size_t>(alpha_) - 2) return;
        std::vector<uint32_t> idx;
        CombinationIter it(old, alpha_ - 2);
        while (it.next(idx)) {
            idx.push_back(static_cast<uint32_t>(old));
            add_binding(chosen, idx);
            idx.pop_back();
        }
    }

private:
    void add_binding(const std::vector<Subspace>& chosen, const std::vector<uint32_t>& idx) {
        std::vector<Mat> parts;
        parts.reserve(idx.size());
        for (uint32_t i : idx) parts.push_back(chosen[i].basis());
        Mat sum = rref(vstack(parts)).mat;
        if (sum.rows() < min_span_) binding_.push_back(std::move(sum));
    }

    uint32_t alpha_, min_span_;
    std::vector<Mat> binding_;
};

// direct (non-incremental) feasibility used by branch-and-bound
bool feasible_direct(const std::vector<Subspace>& chosen, const Subspace& cand, uint32_t alpha,
                     uint32_t min_span, std::vector<uint32_t>& buf) {
    if (chosen.size() + 1 < alpha) return true;
    std::vector<uint32_t> idx;
    CombinationIter it(chosen.size(), alpha - 1);
    while (it.next(idx)) {
        size_t rows = cand.dim();
        for (uint32_t i : idx) rows += chosen[i].dim();
        buf.resize(rows * cand.ambient());
        size_t off = 0;
        for (uint32_t i : idx) {
            const auto& d = chosen[i].basis().data();
            std::copy(d.begin(), d.end(), buf.begin() + off);
            off += d.size();
        }
        std::copy(cand.basis().data().begin(), cand.basis().data().end(), buf.begin() + off);
        if (detail::rank_inplace(cand.ctx(), buf.data(), rows, cand.ambient()) < min_span)
            return false;
    }
    return true;
}

constexpr size_t kExhaustiveCap = 512;

}  // namespace

SearchResult cover_search(uint32_t n, uint32_t k, uint32_t alpha, uint32_t min_span, uint64_t q,
                          SearchStrategy strategy, uint64_t budget, uint64_t seed) {
    if (alpha < 1) throw std::invalid_argument("cover_search: alpha must be >= 1");
    auto pp = as_prime_power(q);
    if (!pp) throw std::invalid_argument("cover_search: q must be a prime power");
    const FieldCtx& F = FieldCtx::get(static_cast<uint32_t>(pp->p), pp->e);

    SearchResult res;
    res.seed = seed;
    res.strategy = strategy;
    res.code.field = &F;
    res.code.n = n;
    res.code.k = k;
    res.code.alpha = alpha;
    res.code.min_span = min_span;

    uint64_t checks = 0;
    auto spend = [&]() {
        if (budget == 0) return true;
        if (checks >= budget) return false;
        ++checks;
        return true;
    };
    std::vector<uint32_t> buf;

    if (strategy == SearchStrategy::Exhaustive) {
        std::vector<Subspace> cands = enumerate_grassmannian(F, n, k, kExhaustiveCap);
        std::vector<Subspace> cur, best;
        // depth-first include/exclude with the trivial cardinality bound
        std::function<void(size_t)> dfs = [&](size_t i) {
            if (cur.size() > best.size()) best = cur;
            if (res.budget_exhausted) return;
            if (i == cands.size()) return;
            if (cur.size() + (cands.size() - i) <= best.size()) return;
            if (!spend()) {
                res.budget_exhausted = true;
                return;
            }
            if (feasible_direct(cur, cands[i], alpha, min_span, buf)) {
                cur.push_back(cands[i]);
                dfs(i + 1);
                cur.pop_back();
            }
            dfs(i + 1);
        };
        dfs(0);
        res.code.members = best;
        return res;
    }

    std::vector<Subspace> chosen;
    CoverBuilder builder(alpha, min_span);
    auto consider = [&](const Subspace& cand) {
        if (!spend()) {
            res.budget_exhausted = true;
            return false;
        }
        if (builder.feasible(chosen, cand, buf)) {
            chosen.push_back(cand);
            builder.accepted(chosen);
        }
        return true;
    };

    if (strategy == SearchStrategy::Greedy) {
        GrassmannianIter it(F, n, k);
        while (auto s = it.next()) {
            if (!consider(*s)) break;
        }
    } else {
        std::vector<Subspace> cands = enumerate_grassmannian(F, n, k);
        SplitMix64 rng(seed);
        for (size_t i = cands.size(); i-- > 1;) {
            size_t j = rng.below(i + 1);
            std::swap(cands[i], cands[j]);
        }
        for (const Subspace& s : cands) {
            if (!consider(s)) break;
        }
    }
    res.code.members = std::move(chosen);
    return res;
}

std::string cover_to_text(const CoverCode& code) {
    std::ostringstream os;
    os << code.n << ' ' << code.k << ' ' << code.ctx().order() << ' ' << code.alpha << ' '
       << code.min_span << ' ' << code.members.size() << '\n';
    for (const Subspace& s : code.members) os << s.basis().to_text();
    return os.str();
}

CoverCode cover_from_text(const std::string& text) {
    std::istringstream is(text);
    uint32_t n, k, alpha, min_span;
    uint64_t q, count;
    if (!(is >> n >> k >> q >> alpha >> min_span >> count))
        throw std::invalid_argument("cover_from_text: bad header");
    auto pp = as_prime_power(q);
    if (!pp) throw std::invalid_argument("cover_from_text: q is not a prime power");
    const FieldCtx& F = FieldCtx::get(static_cast<uint32_t>(pp->p), pp->e);

    CoverCode code;
    code.field = &F;
    code.n = n;
    code.k = k;
    code.alpha = alpha;
    code.min_span = min_span;
    code.members.reserve(count);
    for (uint64_t i = 0; i < count; ++i) {
        size_t rows, cols;
        if (!(is >> rows >> cols)) throw std::invalid_argument("cover_from_text: bad matrix header");
        if (cols != n) throw std::invalid_argument("cover_from_text: member ambient mismatch");
        Mat m(F, rows, cols);
        for (size_t e = 0; e < rows * cols; ++e) {
            uint64_t v;
            if (!(is >> v)) throw std::invalid_argument("cover_from_text: truncated matrix");
            if (v >= F.order()) throw std::invalid_argument("cover_from_text: element out of range");
            m.data()[e] = static_cast<uint32_t>(v);
        }
        Subspace s = Subspace::from(m);
        if (!(s.basis() == m))
            throw std::invalid_argument("cover_from_text: member basis is not canonical");
        if (s.dim() != k) throw std::invalid_argument("cover_from_text: member dimension mismatch");
        code.members.push_back(std::move(s));
    }
    return code;
}

}  // namespace nclab
