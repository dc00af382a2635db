#include "nclab/solver.hpp"

#include <algorithm>
#include <sstream>

namespace nclab {

namespace {

constexpr size_t kDirectEntryCap = 1ULL << 31;

const FieldCtx& field_for(uint64_t q) {
    auto pp = as_prime_power(q);
    if (!pp) throw std::invalid_argument("solver: alphabet size must be a prime power");
    return FieldCtx::get(static_cast<uint32_t>(pp->p), pp->e);
}

Assignment make_assignment(const NetworkSpec& spec, const FieldCtx& F, uint32_t t) {
    Assignment a;
    a.net = spec;
    a.field = &F;
    a.t = t;
    a.nodes.reserve(spec.r);
    if (spec.eps > 0) {
        u128 entries = spec.receiver_count() * a.direct_rows() * a.msg_dim();
        if (entries > kDirectEntryCap)
            throw std::invalid_argument("solver: receiver completion storage exceeds the cap");
        a.direct.assign(static_cast<size_t>(entries), 0);
    }
    return a;
}

// deterministic per-receiver completions from the stacked middle-node blocks
void fill_completions(Assignment& a) {
    if (a.net.eps == 0) return;
    size_t ht = a.msg_dim();
    size_t block_rows = a.node_rows();
    Mat stacked(*a.field, static_cast<size_t>(a.net.alpha) * block_rows, ht);
    ReceiverIter it(a.net);
    std::vector<uint32_t> rec;
    u128 idx = 0;
    while (it.next(rec)) {
        size_t off = 0;
        for (uint32_t node : rec) {
            const auto& d = a.nodes[node].data();
            std::copy(d.begin(), d.end(), stacked.data().begin() + off);
            off += d.size();
        }
        a.set_direct_matrix(idx, completion_rows(stacked, ht, a.direct_rows()));
        ++idx;
    }
}

}  // namespace

Mat Assignment::direct_matrix(u128 receiver) const {
    if (net.eps == 0) throw std::logic_error("Assignment: no direct links in this network");
    size_t sz = direct_rows() * msg_dim();
    size_t off = static_cast<size_t>(receiver) * sz;
    Mat p(*field, direct_rows(), msg_dim());
    std::copy_n(direct.begin() + off, sz, p.data().begin());
    return p;
}

void Assignment::set_direct_matrix(u128 receiver, const Mat& p) {
    size_t sz = direct_rows() * msg_dim();
    size_t off = static_cast<size_t>(receiver) * sz;
    if (p.rows() != direct_rows() || p.cols() != msg_dim())
        throw std::invalid_argument("Assignment: completion matrix shape mismatch");
    std::copy(p.data().begin(), p.data().end(), direct.begin() + off);
}

Mat completion_rows(const Mat& stacked, size_t target, size_t count) {
    const FieldCtx& F = stacked.ctx();
    size_t cols = stacked.cols();
    if (target > cols) throw std::invalid_argument("completion_rows: target exceeds column count");

    detail::RowBasis basis(F, cols);
    for (size_t r = 0; r < stacked.rows(); ++r) {
        std::vector<uint32_t> row(stacked.data().begin() + r * cols,
                                  stacked.data().begin() + (r + 1) * cols);
        basis.insert(std::move(row));
    }
    if (basis.rank() + count < target)
        throw std::domain_error("completion_rows: rank too low to reach the target with " +
                                std::to_string(count) + " rows");

    Mat out(F, count, cols);
    size_t emitted = 0;
    for (size_t j = 0; j < cols && basis.rank() < target && emitted < count; ++j) {
        if (basis.insert_unit(j)) {
            out(emitted, j) = 1;
            ++emitted;
        }
    }
    if (basis.rank() < target) throw std::domain_error("completion_rows: target not reached");
    return out;
}

Assignment scalar_mds(uint32_t h, uint32_t r, uint64_t qs) {
    if (h < 2) throw std::invalid_argument("scalar_mds: h must be >= 2");
    if (r < h) throw std::invalid_argument("scalar_mds: r must be >= h");
    const FieldCtx& F = field_for(qs);
    auto pow2 = [](uint64_t x) { return x >= 2 && (x & (x - 1)) == 0; };
    uint64_t qstar = (h == 3 && r >= 4 && pow2(r - 2)) ? r - 2 : r - 1;
    if (qs < qstar)
        throw std::invalid_argument("scalar_mds: q_s=" + std::to_string(qs) +
                                    " is below the minimum " + std::to_string(qstar));

    Assignment a = make_assignment(build_network(h, r, 1, 0, h), F, 1);
    bool hyperoval = r == qs + 2;  // only reachable for h=3 and even q_s
    uint32_t value_nodes = hyperoval ? static_cast<uint32_t>(qs) : r - 1;
    for (uint32_t i = 0; i < value_nodes; ++i) {
        uint32_t aval = i == 0 ? 0 : F.primitive_power(static_cast<int64_t>(i) - 1);
        Mat g(F, 1, h);
        for (uint32_t j = 0; j < h; ++j) g(0, j) = F.pow(aval, j);
        a.nodes.push_back(std::move(g));
    }
    Mat eh(F, 1, h);
    eh(0, h - 1) = 1;
    a.nodes.push_back(std::move(eh));
    if (hyperoval) {
        Mat e2(F, 1, h);
        e2(0, 1) = 1;
        a.nodes.push_back(std::move(e2));
    }
    return a;
}

Assignment scalar_subspace_blocks(uint32_t ell, uint32_t r, uint64_t qs) {
    if (ell < 2) throw std::invalid_argument("scalar_subspace_blocks: ell must be >= 2");
    if (!gaussian_binomial_at_least(2 * ell, ell, qs, r))
        throw std::invalid_argument("scalar_subspace_blocks: r=" + std::to_string(r) +
                                    " exceeds [2ell ell]_{q_s}");
    const FieldCtx& F = field_for(qs);
    Assignment a = make_assignment(build_network(2 * ell, r, ell, ell - 1, 2), F, 1);
    GrassmannianIter it(F, 2 * ell, ell);
    for (uint32_t i = 0; i < r; ++i) {
        auto s = it.next();
        if (!s) throw std::logic_error("scalar_subspace_blocks: Grassmannian exhausted early");
        a.nodes.push_back(s->basis());
    }
    fill_completions(a);
    return a;
}

Assignment scalar_three_messages(uint32_t r, uint64_t qs) {
    u128 bound = 2 * (static_cast<u128>(qs) * qs + qs + 1);
    if (r > bound)
        throw std::invalid_argument("scalar_three_messages: r=" + std::to_string(r) +
                                    " exceeds 2(q_s^2+q_s+1)=" + to_string_u128(bound));
    const FieldCtx& F = field_for(qs);
    // each projective point of PG(2, q_s) may carry at most two middle nodes
    std::vector<Subspace> points = enumerate_grassmannian(F, 3, 1);
    Assignment a = make_assignment(build_network(3, r, 1, 1, 3), F, 1);
    for (uint32_t i = 0; i < r; ++i) a.nodes.push_back(points[i % points.size()].basis());
    fill_completions(a);
    return a;
}

Assignment vector_companion(uint32_t h, uint64_t q, uint32_t t, uint32_t r) {
    if (h < 2) throw std::invalid_argument("vector_companion: h must be >= 2");
    CompanionCode code = companion_code(q, t);
    uint64_t qt = static_cast<uint64_t>(code.size());
    uint64_t bound = (h == 3 && qt % 2 == 0) ? qt + 2 : qt + 1;
    if (r > bound) {
        std::string note = h == 3 && qt % 2 == 0
                               ? " (q^t+2 is reachable here because h=3 and q^t is even)"
                               : "";
        throw std::invalid_argument("vector_companion: r=" + std::to_string(r) + " exceeds " +
                                    std::to_string(bound) + note);
    }
    if (r < h) throw std::invalid_argument("vector_companion: r must be >= h");
    const FieldCtx& F = *code.base;
    Assignment a = make_assignment(build_network(h, r, 1, 0, h), F, t);

    uint32_t word_nodes = r > qt + 1 ? static_cast<uint32_t>(qt) : r - 1;
    for (uint32_t i = 0; i < word_nodes; ++i) {
        std::vector<Mat> parts;
        parts.reserve(h);
        parts.push_back(Mat::identity(F, t));
        Mat p = Mat::identity(F, t);
        for (uint32_t j = 1; j < h; ++j) {
            p = p * code.word(i);
            parts.push_back(p);
        }
        a.nodes.push_back(hstack(parts));
    }
    Mat last(F, t, static_cast<size_t>(h) * t);  // transmits x_h
    for (uint32_t i = 0; i < t; ++i) last(i, static_cast<size_t>(h - 1) * t + i) = 1;
    a.nodes.push_back(std::move(last));
    if (r > qt + 1) {
        Mat extra(F, t, static_cast<size_t>(h) * t);  // transmits x_2
        for (uint32_t i = 0; i < t; ++i) extra(i, static_cast<size_t>(t) + i) = 1;
        a.nodes.push_back(std::move(extra));
    }
    return a;
}

namespace {

Assignment mrd_pair_solution(uint32_t ell, uint64_t q, uint32_t t, uint64_t r, uint32_t delta_t,
                             uint32_t eps, const char* who) {
    if (ell < 2) throw std::invalid_argument(std::string(who) + ": ell must be >= 2");
    GabidulinCode gab(q, ell * t, delta_t);
    u128 bound = pow_u128_sat(q, static_cast<uint64_t>(ell) * t *
                                     (static_cast<uint64_t>(ell) * t - delta_t + 1));
    if (r > bound)
        throw std::invalid_argument(std::string(who) + ": r=" + std::to_string(r) + " exceeds " +
                                    to_string_u128(bound));
    if (r > (1u << 24))
        throw std::invalid_argument(std::string(who) + ": r too large to materialize");
    const FieldCtx& F = gab.base();
    Assignment a = make_assignment(
        build_network(2 * ell, static_cast<uint32_t>(r), ell, eps, 2), F, t);
    Mat ident = Mat::identity(F, static_cast<size_t>(ell) * t);
    for (uint64_t i = 0; i < r; ++i) a.nodes.push_back(hstack({ident, gab.codeword(i)}));
    fill_completions(a);
    return a;
}

}  // namespace

Assignment vector_mrd_single_direct(uint32_t ell, uint64_t q, uint32_t t, uint64_t r) {
    return mrd_pair_solution(ell, q, t, r, (ell - 1) * t, 1, "vector_mrd_single_direct");
}

Assignment vector_mrd_multi_direct(uint32_t ell, uint64_t q, uint32_t t, uint64_t r) {
    return mrd_pair_solution(ell, q, t, r, t, ell - 1, "vector_mrd_multi_direct");
}

Assignment vector_from_cover(const NetworkSpec& spec, const CoverCode& cover, uint64_t q,
                             uint32_t t) {
    const FieldCtx& F = field_for(q);
    if (cover.field != &F)
        throw std::invalid_argument("vector_from_cover: cover code field does not match q");
    size_t ht = static_cast<size_t>(spec.h) * t;
    size_t lt = static_cast<size_t>(spec.ell) * t;
    if (cover.n != ht) throw std::invalid_argument("vector_from_cover: cover ambient must be h*t");
    if (cover.alpha != spec.alpha)
        throw std::invalid_argument("vector_from_cover: cover alpha does not match the network");
    size_t need = static_cast<size_t>(spec.h - spec.eps) * t;
    if (cover.min_span != need)
        throw std::invalid_argument("vector_from_cover: cover span requirement must be (h-eps)*t");
    if (spec.r > cover.size())
        throw std::invalid_argument("vector_from_cover: r exceeds the cover code size");

    std::vector<Subspace> used(cover.members.begin(), cover.members.begin() + spec.r);
    for (const Subspace& s : used) {
        if (s.dim() > lt)
            throw std::invalid_argument("vector_from_cover: member dimension exceeds ell*t");
    }
    if (auto v = alpha_cover_violation(used, spec.alpha, cover.min_span)) {
        std::string idx;
        for (uint32_t i : v->indices) idx += (idx.empty() ? "" : ",") + std::to_string(i);
        throw std::invalid_argument("vector_from_cover: cover property fails on members {" + idx +
                                    "} (span dimension " + std::to_string(v->span_dim) + ")");
    }

    Assignment a = make_assignment(spec, F, t);
    for (uint32_t i = 0; i < spec.r; ++i) {
        const Mat& b = used[i].basis();
        Mat g(F, lt, ht);
        std::copy(b.data().begin(), b.data().end(), g.data().begin());
        a.nodes.push_back(std::move(g));
    }
    fill_completions(a);
    return a;
}

std::string assignment_to_text(const Assignment& a) {
    std::ostringstream os;
    os << network_to_text(NetworkFile{a.net, a.field->order(), a.t});
    for (uint32_t i = 0; i < a.net.r; ++i) os << "node " << i << '\n' << a.nodes[i].to_text();
    if (a.net.eps > 0) {
        u128 n = a.net.receiver_count();
        for (u128 j = 0; j < n; ++j)
            os << "receiver " << to_string_u128(j) << '\n' << a.direct_matrix(j).to_text();
    }
    return os.str();
}

Assignment assignment_from_text(const std::string& text) {
    size_t marker = text.find("node 0\n");
    if (marker == std::string::npos)
        throw std::invalid_argument("assignment text: missing node sections");
    NetworkFile nf = network_from_text(text.substr(0, marker));
    const FieldCtx& F = field_for(nf.q);
    Assignment a = make_assignment(nf.spec, F, nf.t);

    std::istringstream is(text.substr(marker));
    auto read_mat = [&](size_t rows, size_t cols) {
        size_t rr, cc;
        if (!(is >> rr >> cc) || rr != rows || cc != cols)
            throw std::invalid_argument("assignment text: matrix shape mismatch");
        Mat m(F, rows, cols);
        for (size_t e = 0; e < rows * cols; ++e) {
            uint64_t v;
            if (!(is >> v) || v >= F.order())
                throw std::invalid_argument("assignment text: bad matrix element");
            m.data()[e] = static_cast<uint32_t>(v);
        }
        return m;
    };
    std::string word;
    for (uint32_t i = 0; i < nf.spec.r; ++i) {
        uint64_t idx;
        if (!(is >> word >> idx) || word != "node" || idx != i)
            throw std::invalid_argument("assignment text: expected node " + std::to_string(i));
        a.nodes.push_back(read_mat(a.node_rows(), a.msg_dim()));
    }
    if (nf.spec.eps > 0) {
        u128 n = nf.spec.receiver_count();
        for (u128 j = 0; j < n; ++j) {
            uint64_t idx;
            if (!(is >> word >> idx) || word != "receiver" || idx != static_cast<uint64_t>(j))
                throw std::invalid_argument("assignment text: expected receiver " + to_string_u128(j));
            a.set_direct_matrix(j, read_mat(a.direct_rows(), a.msg_dim()));
        }
    }
    if (is >> word) throw std::invalid_argument("assignment text: trailing content");
    return a;
}

}  // namespace nclab
