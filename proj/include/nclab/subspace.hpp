#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nclab/linalg.hpp"

namespace nclab {

// Subspace of F_q^n in canonical form: the RREF basis with zero rows dropped.
// Two subspaces are equal iff their canonical matrices are identical, so
// equality and ordering are plain byte comparisons.
class Subspace {
public:
    static Subspace from(const Mat& m) { return Subspace(rref(m).mat); }
    static Subspace zero(const FieldCtx& F, size_t n) { return Subspace(Mat(F, 0, n)); }

    const Mat& basis() const { return basis_; }
    const FieldCtx& ctx() const { return basis_.ctx(); }
    size_t dim() const { return basis_.rows(); }
    size_t ambient() const { return basis_.cols(); }

    friend Subspace operator+(const Subspace& u, const Subspace& v) {
        return Subspace::from(vstack({u.basis_, v.basis_}));
    }
    friend bool operator==(const Subspace& u, const Subspace& v) { return u.basis_ == v.basis_; }
    friend bool operator<(const Subspace& u, const Subspace& v);

private:
    explicit Subspace(Mat basis) : basis_(std::move(basis)) {}
    Mat basis_;
};

// 2 dim(U+V) - dim(U) - dim(V); a metric on subspaces of a common ambient
size_t subspace_distance(const Subspace& u, const Subspace& v);

// Exact q-binomial [n k]_q; throws std::overflow_error past 2^128-1.
u128 gaussian_binomial(uint32_t n, uint32_t k, uint64_t q);

// [n k]_q >= r, evaluated without materializing huge values
bool gaussian_binomial_at_least(uint32_t n, uint32_t k, uint64_t q, u128 r);

struct AqBounds {
    u128 lower, upper;
};

// Cardinality bounds for constant dimension codes in G_q(n, k) with minimum
// subspace distance 2*delta.
AqBounds aq_bounds(uint32_t n, uint32_t k, uint32_t delta, uint64_t q);

// Streams G_q(n, k) in lexicographic order over the canonical basis matrices
// (flat row-major comparison). The whole Grassmannian is materialized up
// front, so construction fails when its size exceeds the cap.
class GrassmannianIter {
public:
    static constexpr uint64_t kDefaultCap = 1ULL << 21;

    GrassmannianIter(const FieldCtx& F, uint32_t n, uint32_t k, uint64_t cap = kDefaultCap);
    std::optional<Subspace> next();

private:
    std::vector<Subspace> all_;
    size_t pos_ = 0;
};

// the same enumeration as a vector; errors if the size exceeds cap
std::vector<Subspace> enumerate_grassmannian(const FieldCtx& F, uint32_t n, uint32_t k,
                                             uint64_t cap = GrassmannianIter::kDefaultCap);

// Set of subspaces with the spanning property: every alpha-subset spans a
// subspace of dimension >= min_span. Members form a list; subsets are taken
// by index, so duplicates (which break the property as soon as alpha of them
// meet) are representable.
struct CoverCode {
    const FieldCtx* field = nullptr;
    uint32_t n = 0;         // ambient dimension
    uint32_t k = 0;         // member dimension
    uint32_t alpha = 0;
    uint32_t min_span = 0;  // required dimension of every alpha-subset span
    std::vector<Subspace> members;

    size_t size() const { return members.size(); }
    const FieldCtx& ctx() const { return *field; }
};

struct CoverViolation {
    std::vector<uint32_t> indices;  // lexicographically first offending subset
    size_t span_dim;
};

// nullopt when every alpha-subset spans >= min_span dimensions
std::optional<CoverViolation> alpha_cover_violation(const std::vector<Subspace>& members,
                                                    uint32_t alpha, uint32_t min_span);

inline bool alpha_cover_check(const CoverCode& code) {
    return !alpha_cover_violation(code.members, code.alpha, code.min_span).has_value();
}

// The built-in set of 51 two-dimensional subspaces of F_2^6 over GF(16) with
// b^4 = b + 1: every three of them span at least a four-dimensional subspace.
CoverCode cover_code_51();

enum class SearchStrategy { Exhaustive, Greedy, Randomized };

struct SearchResult {
    CoverCode code;
    bool budget_exhausted = false;
    uint64_t seed = 0;
    SearchStrategy strategy = SearchStrategy::Greedy;
};

// Greedy scans the Grassmannian in enumeration order and keeps every candidate
// that preserves the property; randomized permutes the candidates first with
// the seeded generator; exhaustive runs branch-and-bound maximization (tiny
// parameters only). budget caps the number of candidate feasibility checks
// (0 = unlimited); when it runs out the best set found so far is returned
// with the flag set.
SearchResult cover_search(uint32_t n, uint32_t k, uint32_t alpha, uint32_t min_span, uint64_t q,
                          SearchStrategy strategy, uint64_t budget = 0, uint64_t seed = 0);

// Certificate format: line "n k q alpha D count", then one canonical basis
// matrix per member in matrix text format.
std::string cover_to_text(const CoverCode& code);
CoverCode cover_from_text(const std::string& text);

}  // namespace nclab
