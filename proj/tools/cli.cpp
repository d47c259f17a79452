#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "cfftk/biclique.hpp"
#include "cfftk/cff.hpp"
#include "cfftk/combinatorics.hpp"
#include "cfftk/hadamard.hpp"
#include "cfftk/io.hpp"
#include "cfftk/search.hpp"

namespace cfftk::cli {

namespace {

struct RunConfig {
    int r = 0;
    int w = 0;
    int t = 0;
    std::uint64_t d = 0;
    std::optional<int> t_prime;
    bool exact = false;
    std::string input;
    std::string out_path;
    std::string seed_path;
    std::uint64_t budget = kDefaultNodeBudget;
    std::uint64_t gen_param = 0;
};

/// Relative output paths are placed under CFFTK_OUTPUT_DIR when it is set.
std::string resolve_output(const std::string& path) {
    namespace fs = std::filesystem;
    const char* dir = std::getenv("CFFTK_OUTPUT_DIR");
    if (!dir || !*dir || fs::path(path).is_absolute()) return path;
    return (fs::path(dir) / path).string();
}

/// Writes an artifact to --out if given, else to stdout.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
    if (cfg.out_path.empty())
        out << text;
    else
        write_text_file(resolve_output(cfg.out_path), text);
}

void print_report(std::ostream& out, const VerificationReport& rep, const char* residual_name) {
    out << "verdict: " << (rep.passed ? "PASS" : "FAIL") << '\n'
        << "pairs_checked: " << rep.pairs_checked << '\n'
        << "min_" << residual_name << ": " << rep.min_residual << '\n'
        << "max_" << residual_name << ": " << rep.max_residual << '\n';
    if (rep.witness)
        out << "witness: L=" << rep.witness->L << " M=" << rep.witness->M << ' ' << residual_name
            << '=' << rep.witness->residual << '\n';
}

CffDocument load_cff(const std::string& path) {
    std::istringstream in(read_text_file(path));
    return read_cff(in);
}

int cmd_construct(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto [f, p] = construct_optimal_cff(cfg.r, cfg.w, cfg.t, cfg.t_prime);
    std::ostringstream text;
    write_cff(text, CffDocument{std::move(f), p.r, p.w, p.d, p.t_prime});
    emit(cfg, out, text.str());
    if (!cfg.out_path.empty())
        err << "constructed r=" << p.r << " w=" << p.w << " t=" << p.t << " tprime=" << p.t_prime
            << " d=" << p.d << " n=" << p.t_double_prime << '\n';
    return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const auto doc = load_cff(cfg.input);
    const auto rep = verify_cff(doc.instance, cfg.r, cfg.w, cfg.d,
                                cfg.exact ? CoverMode::Exact : CoverMode::AtLeast);
    out << "mode: " << (cfg.exact ? "exact" : "at-least") << '\n';
    print_report(out, rep, "residual");
    return rep.passed ? kOk : kFailed;
}

int cmd_bound(const RunConfig& cfg, std::ostream& out) {
    if (cfg.d == 0) throw std::domain_error("d must be positive");
    const auto stats = graph_stats(cfg.t, cfg.r, cfg.w);
    out << "edge_count: " << stats.edge_count << '\n'
        << "max_biclique_edges: " << stats.max_biclique_edges << '\n'
        << "lower_bound: " << stats.cover_lower_bound(cfg.d) << '\n';
    return kOk;
}

int cmd_search(const RunConfig& cfg, std::ostream& out) {
    std::optional<BicliqueCoverCert> seed;
    if (!cfg.seed_path.empty()) {
        std::istringstream in(read_text_file(cfg.seed_path));
        seed = read_cover(in);
    }
    const auto res = min_cover_size(cfg.t, cfg.r, cfg.w, cfg.d, cfg.budget, seed);
    out << "optimum: " << res.optimum << '\n'
        << "status: "
        << (res.status == SearchStatus::ProvenOptimal ? "proven-optimal" : "upper-bound-only") << '\n'
        << "lower_bound: " << res.lower_bound << '\n'
        << "nodes_explored: " << res.nodes_explored << '\n';
    std::ostringstream cert;
    write_cover(cert, res.certificate);
    emit(cfg, out, cert.str());
    return kOk;
}

int cmd_hadamard_emit(const RunConfig& cfg, const HadamardMatrix& h, std::ostream& out) {
    std::ostringstream text;
    write_sign_matrix(text, h.matrix());
    emit(cfg, out, text.str());
    return kOk;
}

int cmd_hadamard_verify(const RunConfig& cfg, std::ostream& out) {
    std::istringstream in(read_text_file(cfg.input));
    const auto m = read_sign_matrix(in);
    const auto check = verify_hadamard(m);
    out << "order: " << m.order() << '\n' << "verdict: " << (check.passed ? "PASS" : "FAIL") << '\n';
    if (!check.passed)
        out << "offending_rows: " << check.offending_rows->first << ' ' << check.offending_rows->second
            << '\n'
            << "dot_product: " << check.offending_dot << '\n';
    return check.passed ? kOk : kFailed;
}

int cmd_hadamard_to_cff(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::istringstream in(read_text_file(cfg.input));
    auto m = read_sign_matrix(in);
    const auto check = verify_hadamard(m);
    if (!check.passed) {
        err << "error: input is not a Hadamard matrix (rows " << check.offending_rows->first << " and "
            << check.offending_rows->second << ")\n";
        return kFailed;
    }
    const HadamardMatrix h(std::move(m));
    auto [f, d] = hadamard_to_cff(h);
    std::ostringstream text;
    write_cff(text, CffDocument{std::move(f), 1, 1, d, std::nullopt});
    emit(cfg, out, text.str());
    return kOk;
}

int cmd_hadamard_from_cff(const RunConfig& cfg, std::ostream& out) {
    const auto doc = load_cff(cfg.input);
    const auto t = doc.instance.block_count();
    if ((t + 1) % 4 != 0)
        throw std::domain_error("from-cff: block count " + std::to_string(t) + " is not 4d - 1");
    const std::uint64_t d = (t + 1) / 4;
    if (doc.d && *doc.d != d)
        throw std::domain_error("from-cff: header d=" + std::to_string(*doc.d) + " but t = 4d - 1 gives d=" +
                                std::to_string(d));
    const auto attempt = cff_to_hadamard_attempt(doc.instance, d);
    if (!attempt.succeeded()) {
        out << "verdict: FAIL\n"
            << "offending_rows: " << attempt.check.offending_rows->first << ' '
            << attempt.check.offending_rows->second << '\n'
            << "dot_product: " << attempt.check.offending_dot << '\n';
        return kFailed;
    }
    std::ostringstream text;
    write_sign_matrix(text, attempt.matrix->matrix());
    emit(cfg, out, text.str());
    return kOk;
}

int cmd_cff_to_cover(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto doc = load_cff(cfg.input);
    const int r = cfg.r ? cfg.r : doc.r;
    const int w = cfg.w ? cfg.w : doc.w;
    const std::uint64_t d = cfg.d ? cfg.d : doc.d.value_or(0);
    if (d == 0) throw std::domain_error("cff-to-cover: d not given and absent from the file header");
    const auto cert = cover_from_cff(doc.instance, r, w, d);
    std::ostringstream text;
    write_cover(text, cert);
    emit(cfg, out, text.str());
    if (cert.rejected_points) err << "rejected points: " << cert.rejected_points << '\n';
    return kOk;
}

int cmd_cover_to_cff(const RunConfig& cfg, std::ostream& out) {
    std::istringstream in(read_text_file(cfg.input));
    const auto cert = read_cover(in);
    std::ostringstream text;
    write_cff(text, CffDocument{cff_from_cover(cert), cert.r, cert.w, cert.d, std::nullopt});
    emit(cfg, out, text.str());
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cover-free family toolkit: optimal constructions, verification, biclique covers, "
                 "Hadamard bridge and exact search"};
    app.name("cfftk");
    app.require_subcommand(1);
    RunConfig cfg;

    auto* construct = app.add_subcommand("construct", "Build the optimal (r,w;d)-CFF with C(t,t') points");
    construct->add_option("r", cfg.r)->required()->check(CLI::PositiveNumber);
    construct->add_option("w", cfg.w)->required()->check(CLI::PositiveNumber);
    construct->add_option("t", cfg.t)->required()->check(CLI::PositiveNumber);
    construct->add_option("--tprime", cfg.t_prime, "Maximizer to use (default: smallest)");
    construct->add_option("--out", cfg.out_path, "Write the incidence matrix here instead of stdout");

    auto* verify = app.add_subcommand("verify", "Exhaustively check the (r,w;d) cover-free condition");
    verify->add_option("path", cfg.input)->required();
    verify->add_option("r", cfg.r)->required()->check(CLI::PositiveNumber);
    verify->add_option("w", cfg.w)->required()->check(CLI::PositiveNumber);
    verify->add_option("d", cfg.d)->required()->check(CLI::PositiveNumber);
    verify->add_flag("--exact", cfg.exact, "Require every residual to equal d");

    auto* bound = app.add_subcommand("bound", "Edge count, largest biclique and counting lower bound");
    bound->add_option("t", cfg.t)->required()->check(CLI::PositiveNumber);
    bound->add_option("r", cfg.r)->required()->check(CLI::PositiveNumber);
    bound->add_option("w", cfg.w)->required()->check(CLI::PositiveNumber);
    bound->add_option("d", cfg.d)->required()->check(CLI::PositiveNumber);

    auto* search = app.add_subcommand("search", "Exact minimum d-biclique cover by branch and bound");
    search->add_option("t", cfg.t)->required()->check(CLI::PositiveNumber);
    search->add_option("r", cfg.r)->required()->check(CLI::PositiveNumber);
    search->add_option("w", cfg.w)->required()->check(CLI::PositiveNumber);
    search->add_option("d", cfg.d)->required()->check(CLI::PositiveNumber);
    search->add_option("--budget", cfg.budget, "Node budget")->check(CLI::PositiveNumber);
    search->add_option("--seed", cfg.seed_path, "Certificate used as the initial incumbent");
    search->add_option("--out", cfg.out_path, "Write the certificate here instead of stdout");

    auto* hadamard = app.add_subcommand("hadamard", "Hadamard matrices and the (1,1;d)-CFF bridge");
    hadamard->require_subcommand(1);
    auto* gen = hadamard->add_subcommand("gen", "Generate a Hadamard matrix");
    gen->require_subcommand(1);
    auto* gen_syl = gen->add_subcommand("sylvester", "Order 2^k");
    gen_syl->add_option("k", cfg.gen_param)->required();
    gen_syl->add_option("--out", cfg.out_path);
    auto* gen_paley = gen->add_subcommand("paley", "Order q+1, q prime, q = 3 mod 4");
    gen_paley->add_option("q", cfg.gen_param)->required();
    gen_paley->add_option("--out", cfg.out_path);
    auto* h_verify = hadamard->add_subcommand("verify", "Check H H^T = n I");
    h_verify->add_option("path", cfg.input)->required();
    auto* h_to_cff = hadamard->add_subcommand("to-cff", "Normalized matrix to a (1,1;d)-CFF(4d-1,4d-1)");
    h_to_cff->add_option("path", cfg.input)->required();
    h_to_cff->add_option("--out", cfg.out_path);
    auto* h_from_cff = hadamard->add_subcommand("from-cff", "Bordered incidence matrix, verified");
    h_from_cff->add_option("path", cfg.input)->required();
    h_from_cff->add_option("--out", cfg.out_path);

    auto* convert = app.add_subcommand("convert", "Translate between CFFs and biclique covers");
    convert->require_subcommand(1);
    auto* to_cover = convert->add_subcommand("cff-to-cover", "One generator per point signature");
    to_cover->add_option("path", cfg.input)->required();
    to_cover->add_option("--r", cfg.r, "Override r from the file header")->check(CLI::PositiveNumber);
    to_cover->add_option("--w", cfg.w, "Override w from the file header")->check(CLI::PositiveNumber);
    to_cover->add_option("--d", cfg.d, "Override d from the file header")->check(CLI::PositiveNumber);
    to_cover->add_option("--out", cfg.out_path);
    auto* to_cff = convert->add_subcommand("cover-to-cff", "One point per generator");
    to_cff->add_option("path", cfg.input)->required();
    to_cff->add_option("--out", cfg.out_path);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    try {
        if (*construct) return cmd_construct(cfg, out, err);
        if (*verify) return cmd_verify(cfg, out);
        if (*bound) return cmd_bound(cfg, out);
        if (*search) return cmd_search(cfg, out);
        if (*gen_syl) {
            if (cfg.gen_param > 62) throw std::overflow_error("sylvester: k too large");
            return cmd_hadamard_emit(cfg, sylvester(static_cast<int>(cfg.gen_param)), out);
        }
        if (*gen_paley) return cmd_hadamard_emit(cfg, paley_type1(cfg.gen_param), out);
        if (*h_verify) return cmd_hadamard_verify(cfg, out);
        if (*h_to_cff) return cmd_hadamard_to_cff(cfg, out, err);
        if (*h_from_cff) return cmd_hadamard_from_cff(cfg, out);
        if (*to_cover) return cmd_cff_to_cover(cfg, out, err);
        if (*to_cff) return cmd_cover_to_cff(cfg, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    err << app.help();
    return kUsageError;
}

}  // namespace cfftk::cli
