#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pmd/json_io.hpp"
#include "pmd/pmd_search.hpp"

namespace {

using pmd::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;      // validation errors, failed verification
constexpr int kExitUsage = 2;        // bad command lines
constexpr int kExitContradiction = 3; // a paper theorem did not hold; loud by design

json read_json(const std::string& path) {
    json parsed;
    if (path == "-" || path.empty()) {
        std::cin >> parsed;
        return parsed;
    }
    std::ifstream in(path);
    if (!in)
        pmd::fail(pmd::Errc::parse_error, "cannot open '" + path + "'");
    in >> parsed;
    return parsed;
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-" || path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        pmd::fail(pmd::Errc::parse_error, "cannot open '" + path + "' for writing");
    out << text;
}

void write_json(const std::string& path, const json& value) {
    write_text(path, value.dump(2) + "\n");
}

unsigned long long binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    unsigned long long result = 1;
    for (int i = 1; i <= k; ++i)
        result = result * static_cast<unsigned long long>(n - k + i) /
                 static_cast<unsigned long long>(i);
    return result;
}

long long band_count_formula_3(long long n) {
    return (3 * n * n - 15 * n + 20) / 2;
}

struct GenOptions {
    std::vector<int> complete;
    std::vector<int> cycle;
    std::vector<int> random_linear;
    std::uint64_t seed = 20240801;
    std::string out = "-";
};

int run_gen(const GenOptions& opt) {
    int selected = !opt.complete.empty();
    selected += !opt.cycle.empty();
    selected += !opt.random_linear.empty();
    if (selected != 1) {
        std::cerr << "gen: choose exactly one of --complete, --loose-cycle, --random-linear\n";
        return kExitUsage;
    }
    pmd::Hypergraph h;
    if (!opt.complete.empty())
        h = pmd::complete_uniform(opt.complete[0], opt.complete[1]);
    else if (!opt.cycle.empty())
        h = pmd::loose_cycle(opt.cycle[0], opt.cycle[1]);
    else
        h = pmd::random_linear_uniform(opt.random_linear[0], opt.random_linear[1],
                                       opt.random_linear[2], opt.seed);
    write_json(opt.out, pmd::hypergraph_to_json(h));
    return kExitOk;
}

struct PositivityOptions {
    std::string in;
    std::string matching;
    bool as_json = false;
};

int run_check_positive(const PositivityOptions& opt) {
    const pmd::Hypergraph h = pmd::hypergraph_from_json(read_json(opt.in));
    const pmd::Matching m = pmd::matching_from_json(h, read_json(opt.matching));

    const auto certificate = pmd::synthesize_weights(h, m);
    const bool positive = certificate.has_value();
    if (positive && !pmd::verify_certificate(h, m, *certificate)) {
        std::cerr << "synthesized certificate failed replay\n";
        return kExitContradiction;
    }

    std::optional<pmd::WalkWitness> witness;
    bool walks_ran = false;
    if (pmd::is_linear(pmd::induced_on(h, m.vertex_span()))) {
        walks_ran = true;
        const pmd::WalkPositivity by_walks = pmd::positive_by_walks(h, m);
        if (by_walks.positive != positive) {
            std::cerr << "walk characterization disagrees with the LP oracle\n";
            return kExitContradiction;
        }
        witness = by_walks.witness;
    }

    json out;
    out["positive"] = positive;
    out["method"] = walks_ran ? "lp+walks" : "lp";
    if (certificate)
        out["certificate"] = pmd::certificate_to_json(*certificate);
    if (witness)
        out["witness"] = pmd::walk_witness_to_json(*witness);
    if (opt.as_json) {
        write_json("-", out);
        return kExitOk;
    }
    std::cout << (positive ? "positive matching" : "not a positive matching") << "\n";
    if (certificate)
        std::cout << "certificate: " << pmd::certificate_to_json(*certificate).dump() << "\n";
    if (witness)
        std::cout << "strong alternate closed walk: "
                  << pmd::walk_witness_to_json(*witness).dump() << "\n";
    return kExitOk;
}

struct WalksOptions {
    std::string in;
    std::string matching;
    bool regular = false;
    int tree_root = 0;
    std::uint64_t budget = 1u << 20;
    bool as_json = false;
};

int run_walks(const WalksOptions& opt) {
    const pmd::Hypergraph h = pmd::hypergraph_from_json(read_json(opt.in));
    const pmd::Matching m = pmd::matching_from_json(h, read_json(opt.matching));

    if (opt.tree_root > 0) {
        const auto walks = pmd::alternate_rooted_tree(h, m, opt.tree_root, opt.budget);
        json out = json::array();
        for (const pmd::AlternatingWalk& walk : walks) {
            json steps = json::array();
            for (const pmd::WalkStep& s : walk.steps)
                steps.push_back(json{{"vertex", s.entry},
                                     {"edge", s.edge},
                                     {"in_matching", s.in_matching}});
            out.push_back(json{{"walk", steps}, {"end", walk.end}});
        }
        write_json("-", json{{"root", opt.tree_root}, {"walks", out}});
        return kExitOk;
    }
    if (opt.regular) {
        const auto witness = pmd::find_regular_witness(h, m);
        if (!witness) {
            std::cout << (opt.as_json ? "null\n" : "no degree-regular witness\n");
            return kExitOk;
        }
        write_json("-", pmd::regular_witness_to_json(*witness));
        return kExitOk;
    }
    const auto witness = pmd::find_strong_closed_walk(h, m);
    if (!witness) {
        std::cout << (opt.as_json ? "null\n" : "no strong alternate closed walk\n");
        return kExitOk;
    }
    write_json("-", pmd::walk_witness_to_json(*witness));
    return kExitOk;
}

struct DecomposeOptions {
    std::vector<int> complete;
    std::string out = "-";
};

int run_decompose(const DecomposeOptions& opt) {
    const pmd::PmDecomposition d = pmd::pm_decompose_complete_r(opt.complete[0], opt.complete[1]);
    if (!pmd::verify_decomposition(d)) {
        std::cerr << "freshly built decomposition failed replay\n";
        return kExitContradiction;
    }
    write_json(opt.out, pmd::decomposition_to_json(d));
    return kExitOk;
}

struct PmdOptions {
    std::string in;
    bool exact = false;
    bool greedy = false;
    bool formula = false;
    int budget = -1;
    std::string out;
    bool as_json = false;
};

int run_pmd(const PmdOptions& opt) {
    if (static_cast<int>(opt.exact) + static_cast<int>(opt.greedy) +
            static_cast<int>(opt.formula) !=
        1) {
        std::cerr << "pmd: choose exactly one of --exact, --greedy, --formula\n";
        return kExitUsage;
    }
    const pmd::Hypergraph h = pmd::hypergraph_from_json(read_json(opt.in));

    if (opt.formula) {
        const auto result = pmd::pmd_formula(h);
        if (!result) {
            std::cerr << "no closed form applies to this hypergraph\n";
            return kExitFailure;
        }
        if (opt.as_json)
            write_json("-", json{{"pmd", result->value}, {"family", result->family}});
        else
            std::cout << result->value << "\n";
        return kExitOk;
    }

    pmd::PmDecomposition decomposition;
    int value = 0;
    if (opt.exact) {
        const int budget = opt.budget >= 0 ? opt.budget : static_cast<int>(h.edge_count());
        auto found = pmd::pmd_exact(h, budget);
        if (!found) {
            std::cerr << "no decomposition within " << budget << " parts\n";
            return kExitFailure;
        }
        value = found->first;
        decomposition = std::move(found->second);
    } else {
        decomposition = pmd::pmd_greedy(h);
        value = static_cast<int>(decomposition.size());
    }
    if (!pmd::verify_decomposition(decomposition)) {
        std::cerr << "decomposition failed replay\n";
        return kExitContradiction;
    }
    if (!opt.out.empty())
        write_json(opt.out, pmd::decomposition_to_json(decomposition));
    if (opt.as_json)
        write_json("-", json{{"pmd", value},
                             {"method", opt.exact ? "exact" : "greedy"},
                             {"parts", decomposition.size()}});
    else
        std::cout << value << "\n";
    return kExitOk;
}

struct LssOptions {
    std::string in;
    int d = 1;
    std::string dialect;
    std::string script;
    bool as_json = false;
};

int run_lss(const LssOptions& opt) {
    const pmd::Hypergraph h = pmd::hypergraph_from_json(read_json(opt.in));
    const pmd::LssPresentation presentation = pmd::lss_generators(h, opt.d);

    if (!opt.dialect.empty() || !opt.script.empty()) {
        const pmd::CasDialect dialect =
            pmd::dialect_from_name(opt.dialect.empty() ? "macaulay2" : opt.dialect);
        write_text(opt.script, pmd::export_cas_script(presentation, dialect));
        return kExitOk;
    }

    json out;
    out["presentation"] = pmd::lss_presentation_to_json(presentation);
    if (pmd::good_forest_order(h)) {
        const pmd::IdealClassification c = pmd::classify_good_forest_ideal(h, opt.d);
        out["classification"] = json{{"radical", c.radical},
                                     {"complete_intersection", c.complete_intersection},
                                     {"prime_guaranteed", c.prime_guaranteed}};
    }
    if (opt.as_json) {
        write_json("-", out);
        return kExitOk;
    }
    std::cout << presentation.generators.size() << " generators, " << presentation.d
              << " monomials each, degree " << presentation.r << "\n";
    if (out.contains("classification"))
        std::cout << "good forest: radical, "
                  << (out["classification"]["complete_intersection"].get<bool>()
                          ? "complete intersection"
                          : "not a complete intersection")
                  << ", primality "
                  << (out["classification"]["prime_guaranteed"].get<bool>() ? "guaranteed"
                                                                            : "not guaranteed")
                  << "\n";
    return kExitOk;
}

int verify_one_decomposition(const json& j) {
    const pmd::PmDecomposition d = pmd::decomposition_from_json(j);
    if (!pmd::verify_decomposition(d)) {
        std::cerr << "verification failed: a certificate does not replay or the parts do not "
                     "partition the host\n";
        return kExitFailure;
    }
    std::cout << "ok: " << d.size() << " parts replay\n";
    return kExitOk;
}

int run_verify(const std::string& path) {
    const json j = read_json(path);
    if (j.contains("parts"))
        return verify_one_decomposition(j);
    if (j.contains("checks")) {
        int failures = 0;
        for (const json& check : j["checks"]) {
            if (!check.contains("decomposition")) {
                std::cerr << "report check lacks embedded evidence\n";
                return kExitFailure;
            }
            const pmd::PmDecomposition d =
                pmd::decomposition_from_json(check["decomposition"]);
            const bool ok = pmd::verify_decomposition(d);
            std::cout << check.value("name", "check") << ": " << (ok ? "pass" : "FAIL") << "\n";
            failures += !ok;
        }
        return failures == 0 ? kExitOk : kExitFailure;
    }
    std::cerr << "input is neither a decomposition nor a report\n";
    return kExitFailure;
}

struct ConjectureOptions {
    int n_from = 4;
    int n_to = 8;
    int r = 3;
    bool as_json = false;
    std::string out;
};

int run_verify_conjecture(const ConjectureOptions& opt) {
    if (opt.n_from > opt.n_to || opt.n_from < opt.r) {
        std::cerr << "need r <= n-from <= n-to\n";
        return kExitUsage;
    }
    json checks = json::array();
    bool all_ok = true;
    for (int n = opt.n_from; n <= opt.n_to; ++n) {
        const pmd::PmDecomposition d = pmd::pm_decompose_complete_r(n, opt.r);
        const bool replayed = pmd::verify_decomposition(d);
        bool count_ok = true;
        std::string count_note;
        if (opt.r == 3) {
            const long long expected = band_count_formula_3(n);
            count_ok = static_cast<long long>(d.size()) == expected;
            count_note = "expected " + std::to_string(expected);
        } else {
            const unsigned long long bound = binomial(2 * n - 3, opt.r - 1);
            count_ok = d.size() <= bound;
            count_note = "bound " + std::to_string(bound);
        }
        const bool ok = replayed && count_ok;
        all_ok = all_ok && ok;
        std::cout << "n=" << n << ": parts=" << d.size() << " (" << count_note << "), replay "
                  << (replayed ? "ok" : "FAIL") << (ok ? "" : "  <-- FAIL") << "\n";
        if (opt.as_json || !opt.out.empty())
            checks.push_back(json{{"name", "n=" + std::to_string(n)},
                                  {"pass", ok},
                                  {"parts", d.size()},
                                  {"decomposition", pmd::decomposition_to_json(d)}});
    }
    if (opt.as_json || !opt.out.empty()) {
        json report{{"instance", "complete " + std::to_string(opt.r) + "-uniform, n=" +
                                     std::to_string(opt.n_from) + ".." +
                                     std::to_string(opt.n_to)},
                    {"checks", checks},
                    {"pass", all_ok}};
        write_json(opt.out.empty() ? "-" : opt.out, report);
    }
    return all_ok ? kExitOk : kExitFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"positive matching decompositions of uniform hypergraphs"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a hypergraph as JSON");
    gen_cmd->add_option("--complete", gen.complete, "complete r-uniform: N R")->expected(2);
    gen_cmd->add_option("--loose-cycle", gen.cycle, "loose cycle: R M")->expected(2);
    gen_cmd->add_option("--random-linear", gen.random_linear, "random linear: N R EDGES")
        ->expected(3);
    gen_cmd->add_option("--seed", gen.seed, "RNG seed for --random-linear");
    gen_cmd->add_option("--out", gen.out, "output file (default stdout)");

    PositivityOptions pos;
    auto* pos_cmd = app.add_subcommand("check-positive", "decide and certify positivity");
    pos_cmd->add_option("--in", pos.in, "hypergraph JSON")->required();
    pos_cmd->add_option("--matching", pos.matching, "matching JSON")->required();
    pos_cmd->add_flag("--json", pos.as_json, "machine-readable output");

    WalksOptions walks;
    auto* walks_cmd = app.add_subcommand("walks", "walk and subgraph witnesses");
    walks_cmd->add_option("--in", walks.in, "hypergraph JSON")->required();
    walks_cmd->add_option("--matching", walks.matching, "matching JSON")->required();
    walks_cmd->add_flag("--regular", walks.regular, "search degree-regular witness instead");
    walks_cmd->add_option("--tree-root", walks.tree_root, "enumerate the alternate rooted tree");
    walks_cmd->add_option("--budget", walks.budget, "tree node budget");
    walks_cmd->add_flag("--json", walks.as_json, "machine-readable output");

    DecomposeOptions dec;
    auto* dec_cmd = app.add_subcommand("decompose", "certified band decomposition");
    dec_cmd->add_option("--complete", dec.complete, "complete hypergraph: N R")
        ->expected(2)
        ->required();
    dec_cmd->add_option("--out", dec.out, "output file (default stdout)");

    PmdOptions pmd_opt;
    auto* pmd_cmd = app.add_subcommand("pmd", "positive matching decomposition number");
    pmd_cmd->add_option("--in", pmd_opt.in, "hypergraph JSON")->required();
    pmd_cmd->add_flag("--exact", pmd_opt.exact, "branch-and-bound minimum");
    pmd_cmd->add_flag("--greedy", pmd_opt.greedy, "greedy upper bound");
    pmd_cmd->add_flag("--formula", pmd_opt.formula, "closed form for recognized families");
    pmd_cmd->add_option("--budget", pmd_opt.budget, "part budget for --exact");
    pmd_cmd->add_option("--out", pmd_opt.out, "write the decomposition JSON here");
    pmd_cmd->add_flag("--json", pmd_opt.as_json, "machine-readable output");

    LssOptions lss;
    auto* lss_cmd = app.add_subcommand("lss", "LSS-ideal presentation and classification");
    lss_cmd->add_option("--in", lss.in, "hypergraph JSON")->required();
    lss_cmd->add_option("--d", lss.d, "number of monomials per generator")->required();
    lss_cmd->add_option("--dialect", lss.dialect, "script dialect: macaulay2 or singular");
    lss_cmd->add_option("--script", lss.script, "write a CAS script here (default stdout)");
    lss_cmd->add_flag("--json", lss.as_json, "machine-readable output");

    std::string verify_in;
    auto* verify_cmd = app.add_subcommand("verify", "replay a decomposition or report");
    verify_cmd->add_option("--in", verify_in, "decomposition or report JSON")->required();

    ConjectureOptions conj;
    auto* conj_cmd =
        app.add_subcommand("verify-conjecture", "build, replay, and count band decompositions");
    conj_cmd->add_option("--n-from", conj.n_from, "first n")->required();
    conj_cmd->add_option("--n-to", conj.n_to, "last n")->required();
    conj_cmd->add_option("--r", conj.r, "uniformity (default 3)");
    conj_cmd->add_flag("--json", conj.as_json, "emit a JSON report");
    conj_cmd->add_option("--out", conj.out, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen_cmd->parsed())
            return run_gen(gen);
        if (pos_cmd->parsed())
            return run_check_positive(pos);
        if (walks_cmd->parsed())
            return run_walks(walks);
        if (dec_cmd->parsed())
            return run_decompose(dec);
        if (pmd_cmd->parsed())
            return run_pmd(pmd_opt);
        if (lss_cmd->parsed())
            return run_lss(lss);
        if (verify_cmd->parsed())
            return run_verify(verify_in);
        if (conj_cmd->parsed())
            return run_verify_conjecture(conj);
    } catch (const pmd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        const bool contradiction = e.code() == pmd::Errc::no_admissible_t ||
                                   e.code() == pmd::Errc::certificate_unobtainable;
        return contradiction ? kExitContradiction : kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
