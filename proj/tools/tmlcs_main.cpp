// Command-line front end: generation, construction, verification, exact
// LCS, bound tables, and OEIS b-file export.
//
// Exit codes: 0 success, 1 usage error, 2 cap/budget exceeded, 3
// verification failure. Data goes to stdout only; diagnostics to stderr.

#include "tmlcs/analysis.hpp"
#include "tmlcs/construction.hpp"
#include "tmlcs/errors.hpp"
#include "tmlcs/lcs.hpp"
#include "tmlcs/oeis.hpp"
#include "tmlcs/tm.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCapBudget = 2;
constexpr int kExitVerification = 3;

struct GenerateOptions {
    std::optional<unsigned> word;
    std::optional<std::uint64_t> prefix;
    std::uint64_t cap = tmlcs::kDefaultMaterializeCap;
};

struct ConstructOptions {
    std::optional<unsigned> pow2;
    std::optional<unsigned> word;
    std::optional<std::uint64_t> prefix;
    bool length_only = false;
    std::uint64_t cap = tmlcs::kDefaultMaterializeCap;
};

struct LcsOptions {
    std::optional<unsigned> word;
    std::optional<std::uint64_t> prefix;
    std::string algorithm = "bit-parallel";
    std::optional<std::uint64_t> budget;
};

struct VerifyOptions {
    std::optional<unsigned> pow2;
    std::optional<unsigned> word;
    std::optional<std::uint64_t> prefix;
};

struct AnalyzeOptions {
    unsigned max_k = 12;
    std::string format = "csv";
};

struct OeisOptions {
    std::string sequence;
    std::uint64_t max_n = 0;
    std::optional<std::uint64_t> budget;
};

int run_generate(const GenerateOptions& opt) {
    const tmlcs::BitWord w = opt.word ? tmlcs::tm_word(*opt.word, 0, opt.cap)
                                      : tmlcs::tm_prefix(*opt.prefix, opt.cap);
    std::cout << w.to_ascii() << '\n';
    return kExitOk;
}

int run_construct(const ConstructOptions& opt) {
    const bool materialize = !opt.length_only;
    tmlcs::ConstructionResult result =
        opt.pow2 ? tmlcs::construct_pow2(*opt.pow2, materialize)
        : opt.word
            ? tmlcs::construct_word(*opt.word, materialize, opt.cap)
            : tmlcs::construct_prefix(*opt.prefix, materialize, opt.cap);
    if (opt.length_only) {
        std::cout << result.matched.get_str() << '\n';
        return kExitOk;
    }

    std::uint64_t len = 0;
    if (opt.pow2)
        len = std::uint64_t(1) << (std::uint64_t(1) << *opt.pow2);
    else if (opt.word)
        len = std::uint64_t(1) << *opt.word;
    else
        len = *opt.prefix;

    // Both words are Thue-Morse streams, so the check never needs a
    // second materialization.
    std::string diagnostic;
    if (!tmlcs::verify(*result.alignment, tmlcs::BitSource::thue_morse(len),
                       tmlcs::BitSource::thue_morse_complement(len), &diagnostic)) {
        std::cerr << "internal verification failed: " << diagnostic << '\n';
        return kExitVerification;
    }
    std::cout << tmlcs::to_json(tmlcs::AlignmentDoc{len, len, *result.alignment})
              << '\n';
    return kExitOk;
}

int run_lcs(const LcsOptions& opt) {
    const tmlcs::LcsAlgorithm algorithm = tmlcs::algorithm_from_name(opt.algorithm);
    tmlcs::BitWord x, y;
    if (opt.word) {
        x = tmlcs::tm_word(*opt.word, 0);
        y = x.complemented();
    } else if (opt.prefix) {
        x = tmlcs::tm_prefix(*opt.prefix);
        y = x.complemented();
    } else {
        std::string first, second;
        if (!std::getline(std::cin, first) || !std::getline(std::cin, second))
            throw CLI::ValidationError(
                "lcs", "expected two input lines with binary words on stdin");
        x = tmlcs::BitWord::from_ascii(first);
        y = tmlcs::BitWord::from_ascii(second);
    }
    const tmlcs::LcsResult result = tmlcs::lcs(x, y, algorithm, opt.budget);
    std::cout << tmlcs::to_json(result, x.size(), y.size()) << '\n';
    return kExitOk;
}

int run_verify(const VerifyOptions& opt) {
    if ((opt.pow2 && *opt.pow2 > 5) || (opt.word && *opt.word > 63))
        throw std::invalid_argument("word length would exceed 2^63 symbols");
    std::uint64_t len = 0;
    if (opt.pow2)
        len = std::uint64_t(1) << (std::uint64_t(1) << *opt.pow2);
    else if (opt.word)
        len = std::uint64_t(1) << *opt.word;
    else
        len = *opt.prefix;

    std::string text((std::istreambuf_iterator<char>(std::cin)),
                     std::istreambuf_iterator<char>());
    const tmlcs::AlignmentDoc doc = tmlcs::alignment_doc_from_json(text);
    if (doc.x_len != len || doc.y_len != len) {
        std::cerr << "verification failed: document is for a " +
                         std::to_string(doc.x_len) + " x " +
                         std::to_string(doc.y_len) +
                         " pair, selected words have length " +
                         std::to_string(len)
                  << '\n';
        return kExitVerification;
    }
    std::string diagnostic;
    if (!tmlcs::verify(doc.alignment, tmlcs::BitSource::thue_morse(len),
                       tmlcs::BitSource::thue_morse_complement(len), &diagnostic)) {
        std::cerr << "verification failed: " << diagnostic << '\n';
        return kExitVerification;
    }
    return kExitOk;
}

int run_analyze(const AnalyzeOptions& opt) {
    const auto rows = tmlcs::ratio_table(opt.max_k);
    std::cout << (opt.format == "json" ? tmlcs::bounds_table_json(rows)
                                       : tmlcs::bounds_table_csv(rows));
    if (opt.format == "json") std::cout << '\n';
    return kExitOk;
}

int run_oeis(const OeisOptions& opt) {
    const tmlcs::OeisSequence seq = tmlcs::oeis_sequence_from_name(opt.sequence);
    const tmlcs::Bfile bfile = tmlcs::oeis_bfile(seq, opt.max_n, opt.budget);
    std::cout << bfile.text;
    if (bfile.stopped_early)
        std::cerr << "warning: work budget exhausted after index "
                  << bfile.last_index << " of " << opt.max_n << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thue-Morse complementary-word common subsequence toolkit"};
    app.require_subcommand(1);

    GenerateOptions gen;
    CLI::App* generate = app.add_subcommand(
        "generate", "Print a Thue-Morse word or prefix as an ASCII bit string");
    auto* gw = generate->add_option("--word", gen.word,
                                    "Word exponent n (prints the length-2^n word)");
    auto* gp = generate->add_option("--prefix", gen.prefix,
                                    "Prefix length n (prints the first n digits)");
    gw->excludes(gp);
    generate->add_option("--cap", gen.cap, "Materialization cap in symbols");

    ConstructOptions cons;
    CLI::App* construct = app.add_subcommand(
        "construct",
        "Build the recursive common subsequence between a word and its complement");
    auto* cp = construct->add_option("--pow2", cons.pow2,
                                     "Level k (words of length 2^(2^k))");
    auto* cw = construct->add_option("--word", cons.word, "Word exponent n");
    auto* cpre = construct->add_option("--prefix", cons.prefix, "Prefix length n");
    cp->excludes(cw)->excludes(cpre);
    cw->excludes(cpre);
    construct->add_flag("--length-only", cons.length_only,
                        "Print the exact matched count instead of the alignment");
    construct->add_option("--cap", cons.cap, "Materialization cap in symbols");

    LcsOptions lcso;
    CLI::App* lcs = app.add_subcommand(
        "lcs", "Exact LCS of a word/prefix pair, or of two words read from stdin");
    auto* lw = lcs->add_option("--word", lcso.word, "Word exponent n");
    auto* lp = lcs->add_option("--prefix", lcso.prefix, "Prefix length n");
    lw->excludes(lp);
    lcs->add_option("--algorithm", lcso.algorithm,
                    "quadratic-dp, linear-space, or bit-parallel")
        ->capture_default_str();
    lcs->add_option("--budget", lcso.budget, "Work budget in DP cells");

    VerifyOptions ver;
    CLI::App* verify = app.add_subcommand(
        "verify", "Check an alignment JSON document from stdin against a pair");
    auto* vp2 = verify->add_option("--pow2", ver.pow2, "Level k");
    auto* vw = verify->add_option("--word", ver.word, "Word exponent n");
    auto* vp = verify->add_option("--prefix", ver.prefix, "Prefix length n");
    vp2->excludes(vw)->excludes(vp);
    vw->excludes(vp);

    AnalyzeOptions ana;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "Exact omission counts, bounds, and ratios per level");
    analyze->add_option("--max-k", ana.max_k, "Largest level to tabulate")
        ->capture_default_str();
    analyze->add_option("--format", ana.format, "csv or json")
        ->capture_default_str();

    OeisOptions oeis;
    CLI::App* oeis_cmd =
        app.add_subcommand("oeis", "Emit an OEIS b-file from the LCS oracle");
    oeis_cmd->add_option("--sequence", oeis.sequence, "A297618 or A320847")
        ->required();
    oeis_cmd->add_option("--max", oeis.max_n, "Largest index to emit")->required();
    oeis_cmd->add_option("--budget", oeis.budget, "Work budget in DP cells");

    try {
        app.parse(argc, argv);

        if (generate->parsed()) {
            if (!gen.word && !gen.prefix)
                throw CLI::RequiredError("generate: one of --word/--prefix");
            return run_generate(gen);
        }
        if (construct->parsed()) {
            if (!cons.pow2 && !cons.word && !cons.prefix)
                throw CLI::RequiredError("construct: one of --pow2/--word/--prefix");
            return run_construct(cons);
        }
        if (lcs->parsed()) return run_lcs(lcso);
        if (verify->parsed()) {
            if (!ver.pow2 && !ver.word && !ver.prefix)
                throw CLI::RequiredError("verify: one of --pow2/--word/--prefix");
            return run_verify(ver);
        }
        if (analyze->parsed()) {
            if (ana.format != "csv" && ana.format != "json")
                throw CLI::ValidationError("--format", "must be csv or json");
            return run_analyze(ana);
        }
        if (oeis_cmd->parsed()) return run_oeis(oeis);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const tmlcs::CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCapBudget;
    } catch (const tmlcs::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCapBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
