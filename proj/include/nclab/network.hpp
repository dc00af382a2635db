#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nclab/numutil.hpp"

namespace nclab {

enum class NetClass { Normal, Trivial, Unsolvable };

const char* to_string(NetClass c);

// Three-layer network: a source with h messages, r middle nodes reached by
// ell parallel links each, and one receiver per alpha-subset of middle nodes,
// fed by ell parallel links from each of its alpha nodes plus eps direct links
// from the source. Receivers are index sets in lexicographic order; the
// topology itself is never materialized. Equivalent simple-graph forms exist
// (splitting each parallel-link bundle through ell relay nodes, or appending
// per-receiver gadgets that lower the min-cut to h) and are solvable over the
// same alphabet, but verification never needs the expanded graph.
struct NetworkSpec {
    uint32_t h = 0;
    uint32_t r = 0;
    uint32_t ell = 1;
    uint32_t eps = 0;
    uint32_t alpha = 1;

    uint64_t s() const { return static_cast<uint64_t>(alpha) * ell + eps; }
    u128 receiver_count() const { return binomial_u128(r, alpha); }
    NetClass classify() const {
        if (static_cast<uint64_t>(ell) + eps >= h) return NetClass::Trivial;
        if (static_cast<uint64_t>(alpha) * ell + eps < h) return NetClass::Unsolvable;
        return NetClass::Normal;
    }
    std::vector<uint32_t> receiver(u128 index) const { return combination_unrank(r, alpha, index); }

    friend bool operator==(const NetworkSpec&, const NetworkSpec&) = default;
};

// validates parameter sanity (h, ell, alpha >= 1; r >= alpha)
NetworkSpec build_network(uint32_t h, uint32_t r, uint32_t ell, uint32_t eps, uint32_t alpha);

// lexicographic stream of the receivers' middle-node subsets
class ReceiverIter {
public:
    explicit ReceiverIter(const NetworkSpec& spec) : it_(spec.r, spec.alpha) {}
    bool next(std::vector<uint32_t>& out) { return it_.next(out); }

private:
    CombinationIter it_;
};

// Text form: key:value lines h, r, ell, eps, alpha, q, t (in this order).
// q and t describe the intended solution alphabet, t=1 meaning scalar.
// Unknown keys are rejected.
struct NetworkFile {
    NetworkSpec spec;
    uint64_t q = 2;
    uint32_t t = 1;
};

std::string network_to_text(const NetworkFile& nf);
NetworkFile network_from_text(const std::string& text);

}  // namespace nclab
