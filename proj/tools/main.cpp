#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nclab/analyze.hpp"
#include "nclab/network.hpp"
#include "nclab/solver.hpp"
#include "nclab/subspace.hpp"
#include "nclab/verify.hpp"

namespace {

using namespace nclab;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << content;
}

std::pair<uint32_t, uint32_t> parse_range(const std::string& s) {
    size_t colon = s.find(':');
    if (colon == std::string::npos) {
        uint32_t v = static_cast<uint32_t>(std::stoul(s));
        return {v, v};
    }
    uint32_t lo = static_cast<uint32_t>(std::stoul(s.substr(0, colon)));
    uint32_t hi = static_cast<uint32_t>(std::stoul(s.substr(colon + 1)));
    if (lo > hi) throw std::invalid_argument("bad range " + s);
    return {lo, hi};
}

// receivers beyond this are sampled unless --sample overrides
constexpr uint64_t kAutoSampleThreshold = 1000000;
constexpr uint64_t kAutoSampleSize = 100000;

std::optional<SampleSpec> pick_sample(const Assignment& a, uint64_t sample, uint64_t seed,
                                      bool sample_given) {
    if (sample_given) return SampleSpec{sample, seed};
    if (a.net.receiver_count() > kAutoSampleThreshold) {
        std::cout << "receivers exceed " << kAutoSampleThreshold << ", sampling "
                  << kAutoSampleSize << " with seed " << seed << "\n";
        return SampleSpec{kAutoSampleSize, seed};
    }
    return std::nullopt;
}

int cmd_build(const std::string& network_path) {
    NetworkFile nf = network_from_text(read_file(network_path));
    std::cout << "network (" << nf.spec.eps << "," << nf.spec.ell << ")-N_{" << nf.spec.h << ","
              << nf.spec.r << "," << nf.spec.s() << "} alpha=" << nf.spec.alpha
              << " receivers=" << to_string_u128(nf.spec.receiver_count()) << " alphabet q=" << nf.q
              << " t=" << nf.t << "\n";
    std::cout << "classification: " << to_string(nf.spec.classify()) << "\n";
    return 0;
}

int cmd_solve(const std::string& network_path, const std::string& method,
              const std::string& cover_path, const std::string& out_path) {
    NetworkFile nf = network_from_text(read_file(network_path));
    const NetworkSpec& s = nf.spec;
    auto require = [&](bool ok, const std::string& what) {
        if (!ok) throw std::invalid_argument("method " + method + " needs " + what);
    };

    Assignment a;
    if (method == "mds") {
        require(s.ell == 1 && s.eps == 0 && s.alpha == s.h && nf.t == 1,
                "a combination network N_{h,r,h} with t=1");
        a = scalar_mds(s.h, s.r, nf.q);
    } else if (method == "blocks") {
        require(s.alpha == 2 && s.h == 2 * s.ell && s.eps == s.ell - 1 && nf.t == 1,
                "an (ell-1,ell)-N_{2ell,r,3ell-1} network with t=1");
        a = scalar_subspace_blocks(s.ell, s.r, nf.q);
    } else if (method == "3msg") {
        require(s.h == 3 && s.ell == 1 && s.eps == 1 && s.alpha == 3 && nf.t == 1,
                "the (1,1)-N_{3,r,4} network with t=1");
        a = scalar_three_messages(s.r, nf.q);
    } else if (method == "c1") {
        require(s.ell == 1 && s.eps == 0 && s.alpha == s.h, "a combination network N_{h,r,h}");
        a = vector_companion(s.h, nf.q, nf.t, s.r);
    } else if (method == "c2") {
        require(s.alpha == 2 && s.h == 2 * s.ell && s.eps == 1,
                "a (1,ell)-N_{2ell,r,2ell+1} network");
        a = vector_mrd_single_direct(s.ell, nf.q, nf.t, s.r);
    } else if (method == "c3") {
        require(s.alpha == 2 && s.h == 2 * s.ell && s.eps == s.ell - 1,
                "an (ell-1,ell)-N_{2ell,r,3ell-1} network");
        a = vector_mrd_multi_direct(s.ell, nf.q, nf.t, s.r);
    } else if (method == "cover") {
        require(!cover_path.empty(), "--cover-file");
        CoverCode cover = cover_from_text(read_file(cover_path));
        a = vector_from_cover(s, cover, nf.q, nf.t);
    } else {
        throw std::invalid_argument("unknown method " + method);
    }
    write_file(out_path, assignment_to_text(a));
    std::cout << "solved " << method << ": r=" << s.r << " nodes, "
              << to_string_u128(s.receiver_count()) << " receivers, alphabet q=" << nf.q
              << " t=" << nf.t << " -> " << out_path << "\n";
    return 0;
}

int cmd_verify(const std::string& assignment_path, uint64_t sample, uint64_t seed,
               bool sample_given, bool lines) {
    Assignment a = assignment_from_text(read_file(assignment_path));
    auto sm = pick_sample(a, sample, seed, sample_given);
    std::vector<std::pair<u128, size_t>> ranks;
    VerifyReport rep = check_all_with_ranks(a, sm, ranks);
    if (lines) {
        std::cout << report_lines(a, rep, ranks);
    } else {
        for (const CheckFailure& f : rep.failures)
            std::cout << "receiver " << to_string_u128(f.receiver) << " rank " << f.rank
                      << " fail\n";
        std::cout << "checked " << to_string_u128(rep.checked) << '/'
                  << to_string_u128(rep.receivers_total) << " passed " << to_string_u128(rep.passed)
                  << " failed " << rep.failures.size() << "\n";
    }
    return rep.all_passed() ? 0 : 1;
}

int cmd_simulate(const std::string& assignment_path, uint64_t trials, uint64_t seed,
                 uint64_t sample, bool sample_given) {
    Assignment a = assignment_from_text(read_file(assignment_path));
    auto sm = pick_sample(a, sample, seed + 1, sample_given);
    SplitMix64 rng(seed);
    bool ok = true;
    for (uint64_t k = 0; k < trials; ++k) {
        Mat x(*a.field, a.msg_dim(), 1);
        for (size_t i = 0; i < a.msg_dim(); ++i)
            x(i, 0) = static_cast<uint32_t>(rng.below(a.field->order()));
        SimReport rep = simulate(a, x, sm);
        std::cout << "trial " << k << " seed " << seed << ": decoded "
                  << to_string_u128(rep.decoded_ok) << '/' << to_string_u128(rep.checked) << "\n";
        if (!rep.all_ok()) {
            ok = false;
            for (u128 id : rep.mismatched)
                std::cout << "receiver " << to_string_u128(id) << " mismatch\n";
        }
    }
    return ok ? 0 : 1;
}

int cmd_search(uint32_t n, uint32_t k, uint32_t alpha, uint32_t dim, uint64_t q,
               const std::string& strategy, uint64_t budget, uint64_t seed,
               const std::string& out_path) {
    SearchStrategy st;
    if (strategy == "greedy")
        st = SearchStrategy::Greedy;
    else if (strategy == "randomized")
        st = SearchStrategy::Randomized;
    else if (strategy == "exhaustive")
        st = SearchStrategy::Exhaustive;
    else
        throw std::invalid_argument("unknown strategy " + strategy);

    SearchResult res = cover_search(n, k, alpha, dim, q, st, budget, seed);
    write_file(out_path, cover_to_text(res.code));
    std::cout << "search " << strategy << " seed " << seed << ": found " << res.code.size()
              << " subspaces in G_" << q << "(" << n << "," << k << ") with every " << alpha
              << " spanning >= " << dim << (res.budget_exhausted ? " (budget exhausted)" : "")
              << " -> " << out_path << "\n";
    return 0;
}

int cmd_checkcover(const std::string& path) {
    CoverCode code = cover_from_text(read_file(path));
    auto v = alpha_cover_violation(code.members, code.alpha, code.min_span);
    if (!v) {
        std::cout << "cover " << code.size() << '/' << code.size() << " OK (alpha=" << code.alpha
                  << ", D=" << code.min_span << ")\n";
        return 0;
    }
    std::cout << "cover FAIL: members {";
    for (size_t i = 0; i < v->indices.size(); ++i)
        std::cout << (i ? "," : "") << v->indices[i];
    std::cout << "} span only " << v->span_dim << " < " << code.min_span << "\n";
    return 1;
}

int cmd_analyze(const std::string& h_range, uint64_t q, const std::string& t_range, bool csv) {
    auto [hlo, hhi] = parse_range(h_range);
    auto [tlo, thi] = parse_range(t_range);
    std::vector<GapRow> rows = gap_table(hlo, hhi, q, tlo, thi);
    std::cout << (csv ? gap_table_csv(rows) : gap_table_text(rows));
    return 0;
}

int cmd_demo51() {
    CoverCode c51 = cover_code_51();
    bool cover_ok = !alpha_cover_violation(c51.members, 3, 4).has_value();

    NetworkSpec spec = build_network(3, 51, 1, 1, 3);
    Assignment a = vector_from_cover(spec, c51, 2, 2);
    VerifyReport rep = check_all(a);

    ScalarFamily fam{ScalarFamily::ThreeMessage};
    u128 scalar_max = 2 * (static_cast<u128>(4) * 4 + 4 + 1);

    std::cout << "cover " << (cover_ok ? c51.size() : 0) << '/' << c51.size() << " OK, receivers "
              << to_string_u128(rep.passed) << '/' << to_string_u128(rep.receivers_total)
              << " OK, scalar max r at q_s=4 is " << to_string_u128(scalar_max) << "\n";
    std::cout << "vector solution over q=2, t=2 reaches r=" << spec.r << " > "
              << to_string_u128(scalar_max) << " = scalar bound at q_s=4 (minimal scalar field for r="
              << spec.r << " is q_s=" << min_scalar_field(fam, spec.r) << ")\n";
    return cover_ok && rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"network-coding laboratory for generalized combination networks"};
    app.require_subcommand(1);

    std::string network_path, method, cover_path, out_path, assignment_path, file_path;
    std::string strategy = "greedy", h_range, t_range;
    uint64_t sample = 0, seed = 0, trials = 1, budget = 0, q = 2;
    uint32_t n = 0, k = 0, alpha = 0, dim = 0;
    bool lines = false, csv = false;

    auto* build = app.add_subcommand("build", "validate and classify a network file");
    build->add_option("--network", network_path)->required();

    auto* solve = app.add_subcommand("solve", "construct a network code");
    solve->add_option("--network", network_path)->required();
    solve->add_option("--method", method, "mds|blocks|c1|c2|c3|cover|3msg")->required();
    solve->add_option("--cover-file", cover_path);
    solve->add_option("--out", out_path)->required();

    auto* verify = app.add_subcommand("verify", "rank-check every receiver of an assignment");
    verify->add_option("--assignment", assignment_path)->required();
    auto* sample_opt = verify->add_option("--sample", sample);
    verify->add_option("--seed", seed);
    verify->add_flag("--lines", lines, "print one line per checked receiver");

    auto* simulate = app.add_subcommand("simulate", "end-to-end encode/decode with random messages");
    simulate->add_option("--assignment", assignment_path)->required();
    simulate->add_option("--trials", trials);
    simulate->add_option("--seed", seed);
    auto* sim_sample_opt = simulate->add_option("--sample", sample);

    auto* search = app.add_subcommand("search", "search for a spanning-property subspace code");
    search->add_option("--n", n)->required();
    search->add_option("--k", k)->required();
    search->add_option("--alpha", alpha)->required();
    search->add_option("--dim", dim)->required();
    search->add_option("--q", q)->required();
    search->add_option("--strategy", strategy, "greedy|randomized|exhaustive");
    search->add_option("--budget", budget);
    search->add_option("--seed", seed);
    search->add_option("--out", out_path)->required();

    auto* checkcover = app.add_subcommand("checkcover", "re-check a cover certificate from file");
    checkcover->add_option("--file", file_path)->required();

    auto* analyze = app.add_subcommand("analyze", "field-size gap table");
    analyze->add_option("--h-range", h_range)->required();
    analyze->add_option("--q", q);
    analyze->add_option("--t-range", t_range)->required();
    analyze->add_flag("--csv", csv);

    app.add_subcommand("demo51", "51-subspace cover demo on the (1,1)-N_{3,51,4} network");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (build->parsed()) return cmd_build(network_path);
        if (solve->parsed()) return cmd_solve(network_path, method, cover_path, out_path);
        if (verify->parsed())
            return cmd_verify(assignment_path, sample, seed, sample_opt->count() > 0, lines);
        if (simulate->parsed())
            return cmd_simulate(assignment_path, trials, seed, sample, sim_sample_opt->count() > 0);
        if (search->parsed()) return cmd_search(n, k, alpha, dim, q, strategy, budget, seed, out_path);
        if (checkcover->parsed()) return cmd_checkcover(file_path);
        if (analyze->parsed()) return cmd_analyze(h_range, q, t_range, csv);
        return cmd_demo51();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
