#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "alphaspectra/enumeration.hpp"
#include "alphaspectra/families.hpp"
#include "alphaspectra/graph.hpp"
#include "alphaspectra/spectral.hpp"
#include "alphaspectra/structure.hpp"
#include "alphaspectra/verify.hpp"

namespace as = alphaspectra;

namespace {

constexpr int kExitUsage = 3;

std::vector<double> parse_alphas(const std::string& list) {
    std::vector<double> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = std::stod(item, &used);
        if (used != item.size()) throw CLI::ValidationError("--alpha", "bad number: " + item);
        as::AlphaParam check(v);  // throws outside [0, 1)
        out.push_back(v);
    }
    if (out.empty()) throw CLI::ValidationError("--alpha", "empty grid");
    return out;
}

bool parse_range(const std::string& text, int& lo, int& hi) {
    std::size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, dots));
            hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        return false;
    }
    return lo <= hi;
}

int cmd_rho(const std::vector<std::string>& families, const std::vector<std::string>& graph6s,
            const std::string& graph6_file, const std::string& alpha_list) {
    std::vector<std::pair<std::string, as::Graph>> inputs;
    try {
        for (const auto& text : families) inputs.emplace_back(text, as::FamilySpec::parse(text).build());
        for (const auto& text : graph6s) inputs.emplace_back(text, as::graph6_decode(text));
        if (!graph6_file.empty()) {
            std::ifstream in(graph6_file);
            if (!in) {
                std::cerr << "error: cannot open " << graph6_file << "\n";
                return kExitUsage;
            }
            std::string line;
            while (std::getline(in, line))
                if (!line.empty()) inputs.emplace_back(line, as::graph6_decode(line));
        }
    } catch (const as::ParseError& e) {
        std::cerr << "error: " << e.what() << " (at byte " << e.offset << ")\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (inputs.empty()) {
        std::cerr << "error: no input graphs (use --family or --graph6)\n";
        return kExitUsage;
    }
    std::vector<double> alphas;
    try {
        alphas = parse_alphas(alpha_list);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::printf("%-28s %4s %4s %6s %-22s %-10s %s\n", "graph", "n", "m", "alpha", "rho", "residual",
                "iterations");
    for (const auto& [label, g] : inputs) {
        for (double av : alphas) {
            if (!g.is_connected()) {
                std::printf("%-28s %4d %4d %6s %-22s\n", label.c_str(), g.n(), g.m(),
                            as::format_double(av).c_str(), "disconnected: not computed");
                continue;
            }
            try {
                as::SpectralResult r = as::spectral_radius(g, as::AlphaParam(av));
                std::printf("%-28s %4d %4d %6s %-22s %-10.2e %ld\n", label.c_str(), g.n(), g.m(),
                            as::format_double(av).c_str(), as::format_double(r.rho).c_str(),
                            r.residual, r.iterations);
            } catch (const as::NonConvergenceError& e) {
                std::printf("%-28s %4d %4d %6s %-22s %-10.2e %ld (not converged)\n", label.c_str(),
                            g.n(), g.m(), as::format_double(av).c_str(),
                            as::format_double(e.best.rho).c_str(), e.best.residual,
                            e.best.iterations);
            }
        }
    }
    return 0;
}

int cmd_enum(const std::string& kind, int n, int matching, int cut_vertices, bool count_only,
             int jobs) {
    try {
        std::vector<as::Graph> graphs;
        if (kind == "trees") {
            if (cut_vertices >= 0) {
                std::cerr << "error: --cut-vertices applies to 'graphs'\n";
                return kExitUsage;
            }
            graphs = matching >= 0 ? as::trees_with_matching(n, matching) : as::all_trees(n);
        } else if (kind == "graphs") {
            if (matching >= 0) {
                std::cerr << "error: --matching applies to 'trees'\n";
                return kExitUsage;
            }
            graphs = cut_vertices >= 0
                         ? as::graphs_with_cut_vertices(n, cut_vertices, as::EnumBudget::from_env(), jobs)
                         : as::all_connected_graphs(n, as::EnumBudget::from_env(), jobs);
        } else {
            std::cerr << "error: unknown enumeration kind '" << kind << "' (trees|graphs)\n";
            return kExitUsage;
        }
        if (count_only) {
            std::cout << graphs.size() << "\n";
        } else {
            for (const as::Graph& g : graphs) std::cout << as::graph6_encode(g) << "\n";
        }
        return 0;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what()
                  << " (budget via ALPHA_SPECTRA_BUDGET, defaults: trees<=12, graphs<=7)\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_verify(const std::vector<std::string>& claim_names, as::VerifyConfig cfg,
               const std::string& n_range, const std::string& out_json,
               const std::string& out_csv) {
    std::vector<as::Claim> claims;
    std::vector<std::string> echo;
    for (const std::string& name : claim_names) {
        if (name == "all") {
            for (as::Claim c :
                 {as::Claim::Lemma1, as::Claim::Lemma2, as::Claim::SmithRadii, as::Claim::Theorem1,
                  as::Claim::Theorem2, as::Claim::Theorem3, as::Claim::TransformationA})
                claims.push_back(c);
            echo.emplace_back("all");
            continue;
        }
        auto claim = as::claim_from_name(name);
        if (!claim) {
            std::cerr << "error: unknown claim '" << name
                      << "' (lemma1, lemma2, theorem1, theorem2, theorem3, transformA, smith, all)\n";
            return kExitUsage;
        }
        claims.push_back(*claim);
        echo.emplace_back(as::claim_name(*claim));
    }

    if (!n_range.empty()) {
        int lo = 0, hi = 0;
        if (!parse_range(n_range, lo, hi)) {
            std::cerr << "error: bad --n range '" << n_range << "' (use A or A..B)\n";
            return kExitUsage;
        }
        for (as::Claim c : claims) {
            if (c == as::Claim::Theorem2 && hi > cfg.budget.max_n_graphs) {
                std::cerr << "refused: theorem2 over graph budget (n <= " << cfg.budget.max_n_graphs
                          << ", requested " << hi << "); raise ALPHA_SPECTRA_BUDGET deliberately\n";
                return kExitUsage;
            }
            if ((c == as::Claim::Theorem3 || c == as::Claim::TransformationA) &&
                hi > cfg.budget.max_n_trees) {
                std::cerr << "refused: over tree budget (n <= " << cfg.budget.max_n_trees
                          << ", requested " << hi << "); raise ALPHA_SPECTRA_BUDGET deliberately\n";
                return kExitUsage;
            }
        }
        cfg.theorem2_min_n = cfg.theorem3_min_n = cfg.transform_a_min_n = lo;
        cfg.theorem2_max_n = cfg.theorem3_max_n = cfg.transform_a_max_n = hi;
    }

    std::vector<as::VerificationOutcome> outcomes;
    for (as::Claim c : claims)
        for (auto& o : as::run_claim(c, cfg)) outcomes.push_back(std::move(o));
    as::sort_outcomes(outcomes);

    // one summary line per claim
    for (as::Claim c : claims) {
        int pass = 0, fail = 0, inconclusive = 0;
        double min_margin = as::kVacuousMargin;
        for (const auto& o : outcomes) {
            if (o.claim != c) continue;
            pass += o.status == as::Status::Pass;
            fail += o.status == as::Status::Fail;
            inconclusive += o.status == as::Status::Inconclusive;
            min_margin = std::min(min_margin, o.margin);
        }
        std::printf("%-16s pass=%-5d fail=%-3d inconclusive=%-3d min_margin=%s\n",
                    std::string(as::claim_name(c)).c_str(), pass, fail, inconclusive,
                    min_margin == as::kVacuousMargin ? "inf" : as::format_double(min_margin).c_str());
    }

    if (!out_json.empty()) {
        std::ofstream f(out_json, std::ios::binary);
        f << as::report_json(outcomes, cfg, echo);
    }
    if (!out_csv.empty()) {
        std::ofstream f(out_csv, std::ios::binary);
        f << as::report_csv(outcomes, cfg);
    }
    return as::report_exit_code(outcomes);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"A_alpha spectral machinery: radii, graph families, exhaustive verification"};
    app.set_version_flag("--version", std::string(as::kToolVersion));
    app.require_subcommand(1);

    // rho
    auto* rho = app.add_subcommand("rho", "compute rho_alpha for graphs or family instances");
    std::vector<std::string> families, graph6s;
    std::string graph6_file, alpha_list = "0,0.25,0.5,0.75,0.99";
    rho->add_option("--family", families, "family spec, e.g. gnk:7,3 or gpsq:cycle4,p=3,s=1,q=1");
    rho->add_option("--graph6", graph6s, "graph6 string");
    rho->add_option("--graph6-file", graph6_file, "file with one graph6 line per graph");
    rho->add_option("--alpha", alpha_list, "comma-separated alpha grid");

    // enum
    auto* en = app.add_subcommand("enum", "enumerate unlabeled trees or connected graphs");
    std::string enum_kind;
    int enum_n = 0, enum_matching = -1, enum_cuts = -1, enum_jobs = 0;
    bool count_only = false;
    en->add_option("kind", enum_kind, "trees|graphs")->required();
    en->add_option("--n", enum_n, "vertex count")->required();
    en->add_option("--matching", enum_matching, "filter trees by matching number");
    en->add_option("--cut-vertices", enum_cuts, "filter graphs by cut-vertex count");
    en->add_flag("--count", count_only, "print the count only");
    en->add_option("--jobs", enum_jobs, "worker threads (0 = all, 1 = serial)");

    // verify
    auto* ver = app.add_subcommand("verify", "run theorem/lemma verification suites");
    std::vector<std::string> claim_names;
    as::VerifyConfig cfg;
    std::string ver_alpha, n_range, out_json, out_csv;
    ver->add_option("claims", claim_names,
                    "lemma1 lemma2 theorem1 theorem2 theorem3 transformA smith | all")
        ->required();
    ver->add_option("--alpha", ver_alpha, "comma-separated alpha grid (default 0,0.25,0.5,0.75,0.99)");
    ver->add_option("--n", n_range, "order range A..B for theorem2/theorem3/transformA");
    ver->add_option("--trials", cfg.trials, "lemma1 valid-instance target per alpha");
    ver->add_option("--seed", cfg.seed, "lemma1 sampling seed");
    ver->add_option("--jobs", cfg.jobs, "worker threads (0 = all, 1 = serial)");
    ver->add_option("--tolerance", cfg.tolerance, "eigensolver residual tolerance");
    ver->add_flag("--timing", cfg.timing, "record elapsed milliseconds in reports");
    ver->add_option("--out", out_json, "write the JSON report here");
    ver->add_option("--csv", out_csv, "write the CSV report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (rho->parsed()) return cmd_rho(families, graph6s, graph6_file, alpha_list);
        if (en->parsed()) return cmd_enum(enum_kind, enum_n, enum_matching, enum_cuts, count_only,
                                          enum_jobs);
        if (ver->parsed()) {
            if (!ver_alpha.empty()) cfg.alpha_grid = parse_alphas(ver_alpha);
            if (cfg.tolerance <= 0) {
                std::cerr << "error: --tolerance must be positive\n";
                return kExitUsage;
            }
            return cmd_verify(claim_names, cfg, n_range, out_json, out_csv);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
