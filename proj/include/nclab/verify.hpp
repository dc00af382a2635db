#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nclab/solver.hpp"

namespace nclab {

// Ground-truth validation of an Assignment, independent of how it was built:
// a receiver can decode iff its stacked transfer matrix has rank h*t.

struct CheckFailure {
    u128 receiver;
    size_t rank;
};

struct VerifyReport {
    u128 receivers_total = 0;
    u128 checked = 0;
    u128 passed = 0;
    std::vector<CheckFailure> failures;

    bool all_passed() const { return failures.empty(); }
};

struct SampleSpec {
    uint64_t count;
    uint64_t seed;
};

// vstack of the receiver's alpha middle-node blocks (ascending node index)
// followed by its completion matrix when eps > 0
Mat transfer_matrix(const Assignment& a, u128 receiver);

// rank check for every receiver, or a seeded sample without replacement when
// sample.count < N; failures are data, not errors
VerifyReport check_all(const Assignment& a, std::optional<SampleSpec> sample = std::nullopt);

// one line per checked receiver: "receiver <id> rank <k> <pass|fail>"
std::string report_lines(const Assignment& a, const VerifyReport& rep,
                         const std::vector<std::pair<u128, size_t>>& ranks);

// like check_all but also exposes the per-receiver ranks it computed
VerifyReport check_all_with_ranks(const Assignment& a, std::optional<SampleSpec> sample,
                                  std::vector<std::pair<u128, size_t>>& ranks);

std::vector<Mat> encode_node_packets(const Assignment& a, const Mat& x);
Mat encode_direct_packet(const Assignment& a, u128 receiver, const Mat& x);

// Solves the receiver's system from the first h*t independent rows; nullopt
// when the transfer matrix is rank deficient (decode impossible). Decoding is
// generic Gaussian elimination; block-Vandermonde systems with commutative
// blocks admit an asymptotically faster structured inversion, which is out of
// scope here.
std::optional<Mat> decode_receiver(const Assignment& a, u128 receiver,
                                   const std::vector<Mat>& node_packets, const Mat* direct_packet);

struct SimReport {
    u128 checked = 0;
    u128 decoded_ok = 0;
    std::vector<u128> mismatched;

    bool all_ok() const { return mismatched.empty(); }
};

// end-to-end: encode packets for message vector x (h*t x 1), decode at every
// receiver (or a seeded sample), compare against x
SimReport simulate(const Assignment& a, const Mat& x, std::optional<SampleSpec> sample = std::nullopt);

// block rows [I | M | M^2 | ... | M^{h-1}], one per member
Mat block_vandermonde(const std::vector<Mat>& members, uint32_t h);

}  // namespace nclab
