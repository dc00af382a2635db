#include "nclab/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nclab {

namespace {

// assembles a receiver's transfer rows into buf, returns the row count
size_t assemble_transfer(const Assignment& a, const std::vector<uint32_t>& rec, u128 receiver,
                         std::vector<uint32_t>& buf) {
    size_t ht = a.msg_dim();
    size_t rows = static_cast<size_t>(a.net.alpha) * a.node_rows() + a.direct_rows();
    buf.resize(rows * ht);
    size_t off = 0;
    for (uint32_t node : rec) {
        const auto& d = a.nodes[node].data();
        std::copy(d.begin(), d.end(), buf.begin() + off);
        off += d.size();
    }
    if (a.net.eps > 0) {
        size_t sz = a.direct_rows() * ht;
        size_t start = static_cast<size_t>(receiver) * sz;
        std::copy_n(a.direct.begin() + start, sz, buf.begin() + off);
    }
    return rows;
}

// sorted sample of `count` distinct receiver indices
std::vector<uint64_t> sample_ids(u128 total, uint64_t count, uint64_t seed) {
    if (total > static_cast<u128>(UINT64_MAX))
        throw std::invalid_argument("check_all: too many receivers to sample by index");
    uint64_t n = static_cast<uint64_t>(total);
    SplitMix64 rng(seed);
    std::set<uint64_t> picked;
    while (picked.size() < count) picked.insert(rng.below(n));
    return std::vector<uint64_t>(picked.begin(), picked.end());
}

VerifyReport check_impl(const Assignment& a, std::optional<SampleSpec> sample,
                        std::vector<std::pair<u128, size_t>>* ranks) {
    VerifyReport rep;
    rep.receivers_total = a.net.receiver_count();
    size_t ht = a.msg_dim();
    std::vector<uint32_t> buf;

    auto check_one = [&](u128 id, const std::vector<uint32_t>& rec) {
        size_t rows = assemble_transfer(a, rec, id, buf);
        size_t rk = detail::rank_inplace(*a.field, buf.data(), rows, ht);
        ++rep.checked;
        if (rk == ht)
            ++rep.passed;
        else
            rep.failures.push_back(CheckFailure{id, rk});
        if (ranks) ranks->emplace_back(id, rk);
    };

    if (sample && static_cast<u128>(sample->count) < rep.receivers_total) {
        for (uint64_t id : sample_ids(rep.receivers_total, sample->count, sample->seed))
            check_one(id, a.net.receiver(id));
    } else {
        ReceiverIter it(a.net);
        std::vector<uint32_t> rec;
        u128 id = 0;
        while (it.next(rec)) check_one(id++, rec);
    }
    return rep;
}

}  // namespace

Mat transfer_matrix(const Assignment& a, u128 receiver) {
    std::vector<uint32_t> rec = a.net.receiver(receiver);
    std::vector<uint32_t> buf;
    size_t rows = assemble_transfer(a, rec, receiver, buf);
    Mat m(*a.field, rows, a.msg_dim());
    std::copy(buf.begin(), buf.end(), m.data().begin());
    return m;
}

VerifyReport check_all(const Assignment& a, std::optional<SampleSpec> sample) {
    return check_impl(a, sample, nullptr);
}

VerifyReport check_all_with_ranks(const Assignment& a, std::optional<SampleSpec> sample,
                                  std::vector<std::pair<u128, size_t>>& ranks) {
    ranks.clear();
    return check_impl(a, sample, &ranks);
}

std::string report_lines(const Assignment& a, const VerifyReport& rep,
                         const std::vector<std::pair<u128, size_t>>& ranks) {
    std::ostringstream os;
    size_t ht = a.msg_dim();
    for (const auto& [id, rk] : ranks)
        os << "receiver " << to_string_u128(id) << " rank " << rk << ' '
           << (rk == ht ? "pass" : "fail") << '\n';
    os << "checked " << to_string_u128(rep.checked) << '/' << to_string_u128(rep.receivers_total)
       << " passed " << to_string_u128(rep.passed) << " failed " << rep.failures.size() << '\n';
    return os.str();
}

std::vector<Mat> encode_node_packets(const Assignment& a, const Mat& x) {
    if (x.rows() != a.msg_dim() || x.cols() != 1)
        throw std::invalid_argument("encode: message vector must be (h*t) x 1");
    std::vector<Mat> out;
    out.reserve(a.nodes.size());
    for (const Mat& g : a.nodes) out.push_back(g * x);
    return out;
}

Mat encode_direct_packet(const Assignment& a, u128 receiver, const Mat& x) {
    return a.direct_matrix(receiver) * x;
}

std::optional<Mat> decode_receiver(const Assignment& a, u128 receiver,
                                   const std::vector<Mat>& node_packets, const Mat* direct_packet) {
    const FieldCtx& F = *a.field;
    size_t ht = a.msg_dim();
    std::vector<uint32_t> rec = a.net.receiver(receiver);

    // gather the receiver's equations: coefficient rows and received symbols
    std::vector<std::vector<uint32_t>> eq_rows;
    std::vector<uint32_t> rhs;
    auto push_rows = [&](const Mat& coeff, const Mat& packet) {
        for (size_t r = 0; r < coeff.rows(); ++r) {
            std::vector<uint32_t> row(coeff.data().begin() + r * ht,
                                      coeff.data().begin() + (r + 1) * ht);
            eq_rows.push_back(std::move(row));
            rhs.push_back(packet(r, 0));
        }
    };
    for (uint32_t node : rec) push_rows(a.nodes[node], node_packets.at(node));
    if (a.net.eps > 0) {
        if (!direct_packet) throw std::invalid_argument("decode_receiver: missing direct packet");
        push_rows(a.direct_matrix(receiver), *direct_packet);
    }

    // the receiver solves the square system made of its first h*t
    // independent equations
    detail::RowBasis basis(F, ht);
    std::vector<size_t> chosen;
    for (size_t i = 0; i < eq_rows.size() && chosen.size() < ht; ++i) {
        if (basis.insert(eq_rows[i])) chosen.push_back(i);
    }
    if (chosen.size() < ht) return std::nullopt;

    Mat sys(F, ht, ht), b(F, ht, 1);
    for (size_t i = 0; i < ht; ++i) {
        std::copy(eq_rows[chosen[i]].begin(), eq_rows[chosen[i]].end(),
                  sys.data().begin() + i * ht);
        b(i, 0) = rhs[chosen[i]];
    }
    return solve(sys, b);
}

SimReport simulate(const Assignment& a, const Mat& x, std::optional<SampleSpec> sample) {
    SimReport rep;
    std::vector<Mat> packets = encode_node_packets(a, x);

    auto run_one = [&](u128 id) {
        ++rep.checked;
        std::optional<Mat> direct;
        if (a.net.eps > 0) direct = encode_direct_packet(a, id, x);
        auto decoded = decode_receiver(a, id, packets, direct ? &*direct : nullptr);
        if (decoded && *decoded == x)
            ++rep.decoded_ok;
        else
            rep.mismatched.push_back(id);
    };

    u128 total = a.net.receiver_count();
    if (sample && static_cast<u128>(sample->count) < total) {
        for (uint64_t id : sample_ids(total, sample->count, sample->seed)) run_one(id);
    } else {
        for (u128 id = 0; id < total; ++id) run_one(id);
    }
    return rep;
}

Mat block_vandermonde(const std::vector<Mat>& members, uint32_t h) {
    if (members.empty()) throw std::invalid_argument("block_vandermonde: no members");
    if (h < 1) throw std::invalid_argument("block_vandermonde: h must be >= 1");
    const FieldCtx& F = members[0].ctx();
    size_t t = members[0].rows();
    std::vector<Mat> rows;
    rows.reserve(members.size());
    for (const Mat& m : members) {
        if (&m.ctx() != &F || m.rows() != t || m.cols() != t)
            throw std::invalid_argument("block_vandermonde: members must be equal square matrices");
        std::vector<Mat> parts;
        parts.reserve(h);
        Mat p = Mat::identity(F, t);
        parts.push_back(p);
        for (uint32_t j = 1; j < h; ++j) {
            p = p * m;
            parts.push_back(p);
        }
        rows.push_back(hstack(parts));
    }
    return vstack(rows);
}

}  // namespace nclab
