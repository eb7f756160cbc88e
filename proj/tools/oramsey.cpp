// Command-line surface for the ordered-Ramsey toolkit: construct / detect /
// extract / search / verify / count / min-k4 with file-based colorings and
// JSON outputs.
//
// Exit codes: 0 success, 1 not-found/invalid, 2 usage or parse error,
// 3 self-verification failure, 4 extractor failure, 5 budget exhausted.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "oramsey/certificate.hpp"
#include "oramsey/construct.hpp"
#include "oramsey/detect.hpp"
#include "oramsey/errors.hpp"
#include "oramsey/extract.hpp"
#include "oramsey/io.hpp"
#include "oramsey/random.hpp"
#include "oramsey/search.hpp"

namespace {

using nlohmann::json;
using namespace oramsey;

constexpr int kExitFound = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerifyFailed = 3;
constexpr int kExitExtractorFailure = 4;
constexpr int kExitBudget = 5;

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

int default_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

struct ConstructArgs {
    std::string kind;
    int s = 0;
    int n = 0;
    std::string seq;
    std::string output;
    bool no_verify = false;
    int threads = default_threads();
};

int run_construct(const ConstructArgs& args) {
    json checks = json::array();
    OrderedColoring coloring(2, 0);
    json params;
    bool verified = !args.no_verify;
    try {
        if (args.kind == "block") {
            params = {{"s", args.s}, {"n", args.n}};
            coloring = construct::build_block_coloring(args.s, args.n, !args.no_verify);
            checks.push_back({{"description", "no red ordered path on " + std::to_string(args.s) +
                                                  " vertices"},
                              {"satisfied", verified}});
            checks.push_back({{"description", "no blue ordered path on " + std::to_string(args.n) +
                                                  " vertices"},
                              {"satisfied", verified}});
        } else if (args.kind == "eh-b") {
            params = {{"n", args.n}};
            coloring = construct::build_eh_b_lower(args.n, !args.no_verify);
            checks.push_back({{"description", "no blue tight path on " + std::to_string(args.n) +
                                                  " vertices"},
                              {"satisfied", verified}});
            checks.push_back({{"description", "no 4-set with 3 or more red triples"},
                              {"satisfied", verified}});
        } else if (args.kind == "eh-c") {
            params = {{"n", args.n}};
            coloring = construct::build_eh_c_lower(args.n, !args.no_verify, args.threads);
            checks.push_back({{"description", "no blue tight path on " + std::to_string(args.n) +
                                                  " vertices"},
                              {"satisfied", verified}});
            checks.push_back({{"description", "no 5-set with 4 or more red 4-sets"},
                              {"satisfied", verified}});
        } else {
            std::vector<double> seq;
            std::stringstream ss(args.seq);
            std::string tok;
            while (std::getline(ss, tok, ',')) seq.push_back(std::stod(tok));
            params = {{"sequence", seq}};
            coloring = construct::sequence_to_coloring(seq);
            const auto [lis, lds] = construct::longest_monotone(seq);
            checks.push_back({{"description", "longest increasing subsequence"}, {"value", lis}});
            checks.push_back({{"description", "longest decreasing subsequence"}, {"value", lds}});
        }
    } catch (const verification_error& e) {
        print({{"generator", args.kind}, {"verified", false}, {"error", e.what()}});
        return kExitVerifyFailed;
    }

    json out = {{"generator", args.kind},
                {"params", params},
                {"uniformity", coloring.uniformity()},
                {"vertex_count", coloring.vertex_count()},
                {"verified", verified},
                {"checks", checks}};
    if (!args.output.empty()) {
        save_coloring(coloring, std::filesystem::path(args.output), args.no_verify);
        out["output"] = args.output;
    }
    print(out);
    return kExitFound;
}

struct PatternArgs {
    std::string pattern_token;
    std::vector<int> path_power;
    int tight_path = 0;
    std::vector<int> broom;
    int clique = 0;
    std::string violation;
};

std::optional<PatternSpec> pattern_from_args(const PatternArgs& a, int k) {
    if (!a.pattern_token.empty()) return parse_pattern(a.pattern_token);
    if (a.path_power.size() == 2) return PathPower{a.path_power[0], a.path_power[1]};
    if (a.tight_path > 0) return TightPath{k, a.tight_path};
    if (a.broom.size() == 2) return Broom{k, a.broom[0], a.broom[1]};
    if (a.clique > 0) return Clique{k, a.clique};
    return std::nullopt;
}

std::optional<ViolationKind> violation_from_args(const std::string& spec) {
    if (spec.empty()) return std::nullopt;
    if (spec == "h3") return ViolationKind{ViolationKind::Type::H3, 0};
    if (spec == "f3") return ViolationKind{ViolationKind::Type::F3, 0};
    if (spec.rfind("tred:", 0) == 0)
        return ViolationKind{ViolationKind::Type::TRed, std::stoi(spec.substr(5))};
    throw std::invalid_argument("violation: expected h3, f3 or tred:<t>, got '" + spec + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ordered Ramsey certificates: construction, detection, extraction, search"};
    app.require_subcommand(1);

    // ---- construct ----
    ConstructArgs cargs;
    auto* construct_cmd = app.add_subcommand("construct", "generate a lower-bound coloring");
    construct_cmd->require_subcommand(1);
    auto add_common_construct = [&](CLI::App* sub) {
        sub->add_option("-o,--output", cargs.output, "coloring file to write");
        sub->add_flag("--no-verify", cargs.no_verify, "skip self-verification (marks file)");
        sub->add_option("--threads", cargs.threads, "verification threads");
    };
    auto* block = construct_cmd->add_subcommand("block", "block coloring avoiding paths");
    block->add_option("--s", cargs.s, "red path size")->required();
    block->add_option("--n", cargs.n, "blue path size")->required();
    add_common_construct(block);
    auto* ehb = construct_cmd->add_subcommand("eh-b", "twin-pair triple coloring");
    ehb->add_option("--n", cargs.n, "target path size")->required();
    add_common_construct(ehb);
    auto* ehc = construct_cmd->add_subcommand("eh-c", "recursive half-split 4-set coloring");
    ehc->add_option("--n", cargs.n, "target path size")->required();
    add_common_construct(ehc);
    auto* seqc = construct_cmd->add_subcommand("sequence", "coloring from a number sequence");
    seqc->add_option("--seq", cargs.seq, "comma-separated distinct numbers")->required();
    add_common_construct(seqc);

    // ---- detect ----
    std::string detect_file, detect_color = "red";
    PatternArgs detect_pattern;
    auto* detect_cmd = app.add_subcommand("detect", "find a monochromatic pattern or violation");
    detect_cmd->add_option("file", detect_file, "coloring file")->required();
    detect_cmd->add_option("--pattern", detect_pattern.pattern_token,
                           "pattern token path:<l>:<s> | tight:<k>:<s> | broom:<k>:<a>:<m> | "
                           "clique:<k>:<s>");
    detect_cmd->add_option("--path-power", detect_pattern.path_power, "l s")->expected(2);
    detect_cmd->add_option("--tight-path", detect_pattern.tight_path, "s");
    detect_cmd->add_option("--broom", detect_pattern.broom, "a m")->expected(2);
    detect_cmd->add_option("--clique", detect_pattern.clique, "s");
    detect_cmd->add_option("--violation", detect_pattern.violation, "h3 | f3 | tred:<t>");
    detect_cmd->add_option("--color", detect_color, "red | blue");

    // ---- extract ----
    std::string extract_file;
    int ex_a = 0, ex_b = 0, ex_n = 0, ex_m = 0, ex_target = 0;
    std::string ex_alpha, ex_epsilon, ex_induced_out;
    int ex_min_recursion = 64;
    bool ex_trace = false;
    auto* extract_cmd = app.add_subcommand("extract", "run a certificate extractor");
    extract_cmd->require_subcommand(1);
    auto add_common_extract = [&](CLI::App* sub) {
        sub->add_option("file", extract_file, "coloring file")->required();
        sub->add_flag("--trace", ex_trace, "include the step trace in the output");
    };
    auto* sq = extract_cmd->add_subcommand("square-path", "red P_a^2 or blue P_b^2");
    sq->add_option("--a", ex_a)->required();
    sq->add_option("--b", ex_b)->required();
    sq->add_option("--alpha", ex_alpha, "rational p/q multiplicity constant");
    sq->add_option("--epsilon", ex_epsilon, "rational p/q slack");
    sq->add_option("--min-recursion-size", ex_min_recursion);
    add_common_extract(sq);
    auto* k4p = extract_cmd->add_subcommand("k4-or-path", "red K4 or blue tight path (k=3)");
    k4p->add_option("--n", ex_n)->required();
    k4p->add_option("--m", ex_m)->required();
    add_common_extract(k4p);
    auto* h3p = extract_cmd->add_subcommand("h3-or-path", "red H_k(3) or blue tight path");
    h3p->add_option("--n", ex_n)->required();
    add_common_extract(h3p);
    auto* f3p = extract_cmd->add_subcommand("f3-or-path", "red F(3) or blue tight path");
    f3p->add_option("--n", ex_n)->required();
    add_common_extract(f3p);
    auto* b3r = extract_cmd->add_subcommand("broom-3red", "3 red edges or blue broom (k=3)");
    b3r->add_option("--n", ex_n)->required();
    add_common_extract(b3r);
    auto* sd = extract_cmd->add_subcommand("stepdown", "pre-homogeneous sequence");
    sd->add_option("--target-len", ex_target)->required();
    sd->add_option("--induced-out", ex_induced_out, "file for the induced coloring");
    add_common_extract(sd);

    // ---- search ----
    std::string search_red, search_blue, witness_out = "witness.oc";
    search::SearchOptions sopts;
    sopts.threads = default_threads();
    std::uint64_t budget_nodes = sopts.node_budget;
    double budget_seconds = 24.0 * 3600.0;
    auto* search_cmd = app.add_subcommand("search", "exact ordered Ramsey number by pruned DFS");
    search_cmd->add_option("--red", search_red, "red pattern token")->required();
    search_cmd->add_option("--blue", search_blue, "blue pattern token")->required();
    search_cmd->add_option("--threads", sopts.threads);
    search_cmd->add_option("--node-budget", budget_nodes);
    search_cmd->add_option("--time-budget-s", budget_seconds);
    search_cmd->add_option("--split-depth", sopts.split_depth);
    search_cmd->add_option("-o,--witness-out", witness_out, "witness coloring file");

    // ---- verify ----
    std::string verify_file, verify_cert;
    auto* verify_cmd = app.add_subcommand("verify", "validate a certificate against a coloring");
    verify_cmd->add_option("file", verify_file, "coloring file")->required();
    verify_cmd->add_option("--certificate", verify_cert, "certificate JSON file, or - for stdin")
        ->required();

    // ---- count ----
    std::string count_file;
    int count_q = 4;
    auto* count_cmd = app.add_subcommand("count", "count monochromatic K_q vertex sets (k=2)");
    count_cmd->add_option("file", count_file, "coloring file")->required();
    count_cmd->add_option("--q", count_q, "3 or 4")->required();

    // ---- min-k4 ----
    int mk_n = 0, mk_seeds = 8, mk_iterations = 200;
    std::uint64_t mk_seed = 1;
    bool mk_exhaustive = false;
    std::string mk_witness_out;
    auto* mk_cmd = app.add_subcommand("min-k4", "minimum monochromatic K4 count over colorings");
    mk_cmd->add_option("--n", mk_n)->required();
    mk_cmd->add_flag("--exhaustive", mk_exhaustive);
    mk_cmd->add_option("--seeds", mk_seeds);
    mk_cmd->add_option("--iterations", mk_iterations);
    mk_cmd->add_option("--seed", mk_seed);
    mk_cmd->add_option("-o,--witness-out", mk_witness_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (construct_cmd->parsed()) {
            ConstructArgs args = cargs;
            for (const char* kind : {"block", "eh-b", "eh-c", "sequence"})
                if (construct_cmd->get_subcommand(kind)->parsed()) args.kind = kind;
            return run_construct(args);
        }

        if (detect_cmd->parsed()) {
            const OrderedColoring c = load_coloring(std::filesystem::path(detect_file));
            if (auto vkind = violation_from_args(detect_pattern.violation)) {
                const auto v = detect::find_violation(c, *vkind);
                if (!v) {
                    print({{"found", false}});
                    return kExitNotFound;
                }
                print(certificate_to_json(Certificate{*v}));
                return kExitFound;
            }
            const auto pattern = pattern_from_args(detect_pattern, c.uniformity());
            if (!pattern) throw std::invalid_argument("detect: no pattern given");
            if (pattern_uniformity(*pattern) != c.uniformity())
                throw std::invalid_argument("detect: pattern uniformity does not match file");
            if (detect_color != "red" && detect_color != "blue")
                throw std::invalid_argument("detect: --color must be red or blue");
            const Color col = detect_color == "red" ? Color::Red : Color::Blue;
            const auto emb = detect::find_pattern(c, *pattern, col);
            if (!emb) {
                print({{"found", false}});
                return kExitNotFound;
            }
            print(certificate_to_json(Certificate{*emb}));
            return kExitFound;
        }

        if (extract_cmd->parsed()) {
            const OrderedColoring c = load_coloring(std::filesystem::path(extract_file));
            if (sd->parsed()) {
                auto res = extract::erdos_rado_stepdown(c, ex_target);
                if (const auto* fail = std::get_if<Failure>(&res)) {
                    print({{"outcome", "failure"},
                           {"stage", fail->stage},
                           {"context", fail->context}});
                    return kExitExtractorFailure;
                }
                auto& ok = std::get<extract::StepdownResult>(res);
                json out = {{"outcome", "sequence"},
                            {"sequence", ok.sequence},
                            {"induced_uniformity", ok.induced.uniformity()}};
                if (!ex_induced_out.empty()) {
                    save_coloring(ok.induced, std::filesystem::path(ex_induced_out));
                    out["induced_file"] = ex_induced_out;
                }
                print(out);
                return kExitFound;
            }
            ExtractOutcome outcome;
            if (sq->parsed()) {
                extract::SquarePathConfig cfg;
                const auto parse_rational = [](const std::string& s, extract::Rational& r) {
                    if (s.empty()) return;
                    const auto slash = s.find('/');
                    if (slash == std::string::npos)
                        throw std::invalid_argument("rational: expected p/q, got '" + s + "'");
                    r.num = std::stoll(s.substr(0, slash));
                    r.den = std::stoll(s.substr(slash + 1));
                };
                parse_rational(ex_alpha, cfg.alpha);
                parse_rational(ex_epsilon, cfg.epsilon);
                cfg.min_recursion_size = ex_min_recursion;
                outcome = extract::extract_square_path(c, ex_a, ex_b, cfg, ex_trace);
            } else if (k4p->parsed()) {
                outcome = extract::extract_k4_or_tight_path(c, ex_n, ex_m, ex_trace);
            } else if (h3p->parsed()) {
                outcome = extract::extract_h3_or_path(c, ex_n, ex_trace);
            } else if (f3p->parsed()) {
                outcome = extract::extract_f3_or_path(c, ex_n, ex_trace);
            } else {
                outcome = extract::extract_3red_or_broom(c, ex_n, ex_trace);
            }
            print(outcome_to_json(outcome, ex_trace));
            return outcome.is_failure() ? kExitExtractorFailure : kExitFound;
        }

        if (search_cmd->parsed()) {
            const auto red = parse_pattern(search_red);
            const auto blue = parse_pattern(search_blue);
            sopts.node_budget = budget_nodes;
            if (const char* env = std::getenv("ORAMSEY_NODE_BUDGET"))
                sopts.node_budget = std::strtoull(env, nullptr, 10);
            sopts.time_budget = std::chrono::milliseconds(
                static_cast<std::int64_t>(budget_seconds * 1000.0));
            try {
                const auto result = search::exact_ordered_ramsey(red, blue, sopts);
                save_coloring(result.witness, std::filesystem::path(witness_out));
                print({{"value", result.value},
                       {"witness_file", witness_out},
                       {"nodes_explored", result.nodes_explored},
                       {"wall_time_ms", result.wall_time.count()},
                       {"certified", result.certified}});
                return kExitFound;
            } catch (const search::budget_exhausted_error& e) {
                json out = {{"certified", false},
                            {"lower", e.lower},
                            {"upper", nullptr},
                            {"nodes_explored", e.nodes_explored}};
                if (e.best_witness) {
                    save_coloring(*e.best_witness, std::filesystem::path(witness_out));
                    out["witness_file"] = witness_out;
                }
                print(out);
                return kExitBudget;
            }
        }

        if (verify_cmd->parsed()) {
            const OrderedColoring c = load_coloring(std::filesystem::path(verify_file));
            json j;
            if (verify_cert == "-") {
                std::cin >> j;
            } else {
                std::ifstream in(verify_cert);
                if (!in) throw parse_error("certificate: cannot open " + verify_cert);
                in >> j;
            }
            // accept either a bare certificate or a full extractor outcome
            if (j.contains("certificate")) j = j.at("certificate");
            const auto cert = certificate_from_json(j);
            const bool valid = std::holds_alternative<Embedding>(cert)
                                   ? validate_embedding(c, std::get<Embedding>(cert))
                                   : validate_violation(c, std::get<Violation>(cert));
            print({{"valid", valid}});
            return valid ? kExitFound : kExitNotFound;
        }

        if (count_cmd->parsed()) {
            const OrderedColoring c = load_coloring(std::filesystem::path(count_file));
            const auto [red, blue] = detect::count_mono_cliques(c, count_q);
            print({{"q", count_q}, {"red", red}, {"blue", blue}});
            return kExitFound;
        }

        if (mk_cmd->parsed()) {
            const auto result = mk_exhaustive
                                    ? search::min_mono_k4_exhaustive(mk_n)
                                    : search::min_mono_k4_heuristic(mk_n, mk_seeds, mk_iterations,
                                                                    mk_seed);
            json out = {{"n", mk_n}, {"count", result.count}, {"exact", result.exact}};
            if (!mk_witness_out.empty()) {
                save_coloring(result.witness, std::filesystem::path(mk_witness_out));
                out["witness_file"] = mk_witness_out;
            }
            print(out);
            return kExitFound;
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const verification_error& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return kExitVerifyFailed;
    } catch (const resource_error& e) {
        std::cerr << "resource error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
