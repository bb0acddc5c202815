#include "alphaspectra/verify.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <map>
#include <set>

#include <json.hpp>

#include "alphaspectra/parallel.hpp"
#include "alphaspectra/structure.hpp"
#include "alphaspectra/transforms.hpp"

namespace alphaspectra {

std::string_view claim_name(Claim c) {
    switch (c) {
        case Claim::Lemma1: return "Lemma1";
        case Claim::Lemma2: return "Lemma2";
        case Claim::Theorem1: return "Theorem1";
        case Claim::Theorem2: return "Theorem2";
        case Claim::Theorem3: return "Theorem3";
        case Claim::TransformationA: return "TransformationA";
        case Claim::SmithRadii: return "SmithRadii";
    }
    return "?";
}

std::optional<Claim> claim_from_name(std::string_view name) {
    std::string lower(name);
    for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "lemma1") return Claim::Lemma1;
    if (lower == "lemma2") return Claim::Lemma2;
    if (lower == "theorem1") return Claim::Theorem1;
    if (lower == "theorem2") return Claim::Theorem2;
    if (lower == "theorem3") return Claim::Theorem3;
    if (lower == "transforma" || lower == "transformationa") return Claim::TransformationA;
    if (lower == "smith" || lower == "smithradii") return Claim::SmithRadii;
    return std::nullopt;
}

std::string_view status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::string format_double(double v) {
    char buf[40];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

RhoEval eval_rho(const Graph& g, AlphaParam a, double tolerance) {
    try {
        SpectralResult r = spectral_radius(g, a, {tolerance, 1'000'000});
        return {r.rho, r.residual, true};
    } catch (const NonConvergenceError& e) {
        if (g.n() <= 12) return {spectral_radius_oracle(g, a), 1e-12, true};
        return {e.best.rho, std::max(e.best.residual, e.best.cw_upper - e.best.cw_lower), false};
    }
}

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

void add_param(Params& p, std::string key, std::string value) {
    p.emplace_back(std::move(key), std::move(value));
}
void add_param(Params& p, std::string key, int value) {
    p.emplace_back(std::move(key), std::to_string(value));
}
void add_param(Params& p, std::string key, double value) {
    p.emplace_back(std::move(key), format_double(value));
}

void finish_params(Params& p) {
    std::sort(p.begin(), p.end(), [](auto& a, auto& b) { return a.first < b.first; });
}

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

Status status_from_margin(double margin, bool certified) {
    if (!certified) return Status::Inconclusive;
    if (margin > kStrictTol) return Status::Pass;
    if (margin < -kStrictTol) return Status::Fail;
    return Status::Inconclusive;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

VerificationOutcome verify_lemma2(const Graph& g, AlphaParam a) {
    Stopwatch watch;
    VerificationOutcome out;
    out.claim = Claim::Lemma2;
    add_param(out.params, "alpha", a.value);
    add_param(out.params, "n", g.n());
    finish_params(out.params);
    out.witness.push_back(graph6_encode(g));

    SpectralResult r;
    try {
        r = spectral_radius(g, a);
    } catch (const NonConvergenceError&) {
        out.status = Status::Inconclusive;
        out.note = "eigensolver did not converge";
        out.elapsed_ms = watch.ms();
        return out;
    }
    if (r.rho <= 2.0 || g.n() < 2) {
        out.status = Status::Pass;  // hypothesis rho > 2 not met: vacuous
        out.margin = kVacuousMargin;
        out.elapsed_ms = watch.ms();
        return out;
    }
    double margin = kVacuousMargin;
    for (const PendentPath& path : pendent_paths(g))
        for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i)
            margin = std::min(margin, r.perron[path.vertices[i + 1]] - r.perron[path.vertices[i]]);
    out.margin = margin;
    out.status = margin == kVacuousMargin ? Status::Pass : status_from_margin(margin, true);
    out.elapsed_ms = watch.ms();
    return out;
}

VerificationOutcome verify_theorem1(const FamilySpec& core, int p, int s, int q, AlphaParam a) {
    if (q < 1) throw std::invalid_argument("verify_theorem1: hypothesis q >= 1 fails");
    if (p - q < std::max(s + 1, 2))
        throw std::invalid_argument("verify_theorem1: hypothesis p - q >= max(s+1, 2) fails");

    Stopwatch watch;
    VerificationOutcome out;
    out.claim = Claim::Theorem1;
    add_param(out.params, "alpha", a.value);
    add_param(out.params, "core", core.str());
    add_param(out.params, "p", p);
    add_param(out.params, "q", q);
    add_param(out.params, "s", s);
    finish_params(out.params);

    PendantPathGraph lower = make_gpsq(core, p, s, q);
    PendantPathGraph upper = make_gpsq(core, p - 1, s, q + 1);
    out.witness = {graph6_encode(lower.graph), graph6_encode(upper.graph)};

    try {
        rebalance_pendent_paths(lower);  // validates against the direct construction
    } catch (const std::logic_error& e) {
        out.status = Status::Fail;
        out.note = e.what();
        out.elapsed_ms = watch.ms();
        return out;
    }

    RhoEval lo = eval_rho(lower.graph, a);
    RhoEval hi = eval_rho(upper.graph, a);
    out.margin = hi.rho - lo.rho;
    out.status = status_from_margin(out.margin, lo.certified && hi.certified);
    if (!lo.certified || !hi.certified) out.note = "uncertified evaluation (solver hit max iterations)";
    out.elapsed_ms = watch.ms();
    return out;
}

namespace {

// Shared maximizer check for Theorems 2 and 3.
VerificationOutcome verify_unique_maximizer(Claim claim, const std::vector<Graph>& family,
                                            const Graph& target, AlphaParam a, Params params,
                                            const VerifyConfig& cfg) {
    Stopwatch watch;
    VerificationOutcome out;
    out.claim = claim;
    out.params = std::move(params);

    std::string target_code = canonical_code(target).bytes;
    auto evals = parallel_map<RhoEval>(
        family.size(), [&](std::size_t i) { return eval_rho(family[i], a, cfg.tolerance); },
        cfg.jobs);

    std::size_t best = 0;
    for (std::size_t i = 1; i < evals.size(); ++i)
        if (evals[i].rho > evals[best].rho) best = i;
    bool certified = true;
    for (const RhoEval& e : evals) certified &= e.certified;

    std::string best_code = canonical_code(family[best]).bytes;
    if (best_code != target_code) {
        std::size_t target_idx = family.size();
        for (std::size_t i = 0; i < family.size(); ++i)
            if (canonical_code(family[i]).bytes == target_code) target_idx = i;
        out.status = Status::Fail;
        out.margin = target_idx < family.size() ? evals[target_idx].rho - evals[best].rho : -1.0;
        out.witness = {best_code, target_code};
        out.note = "maximizer is not isomorphic to the expected extremal graph";
        out.elapsed_ms = watch.ms();
        return out;
    }

    out.witness = {best_code};
    if (family.size() == 1) {
        out.status = certified ? Status::Pass : Status::Inconclusive;
        out.margin = kVacuousMargin;
    } else {
        double runner = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < evals.size(); ++i)
            if (i != best) runner = std::max(runner, evals[i].rho);
        out.margin = evals[best].rho - runner;
        out.status = status_from_margin(out.margin, certified);
    }
    out.elapsed_ms = watch.ms();
    return out;
}

}  // namespace

VerificationOutcome verify_theorem2(int n, int k, AlphaParam a, const VerifyConfig& cfg) {
    if (n < 2) throw std::invalid_argument("verify_theorem2: n >= 2 required");
    if (k < 0 || k > n - 2) throw std::invalid_argument("verify_theorem2: 0 <= k <= n-2 required");
    Params params;
    add_param(params, "alpha", a.value);
    add_param(params, "k", k);
    add_param(params, "n", n);
    finish_params(params);
    const std::vector<Graph> family = graphs_with_cut_vertices(n, k, cfg.budget, cfg.jobs);
    if (family.empty()) throw std::logic_error("verify_theorem2: empty class");
    return verify_unique_maximizer(Claim::Theorem2, family, make_gnk(n, k), a, std::move(params),
                                   cfg);
}

VerificationOutcome verify_theorem3(int n, int k, AlphaParam a, const VerifyConfig& cfg) {
    if (n < 4) throw std::invalid_argument("verify_theorem3: n >= 4 required");
    if (k < 1 || k > n / 2) throw std::invalid_argument("verify_theorem3: 1 <= k <= n/2 required");
    Params params;
    add_param(params, "alpha", a.value);
    add_param(params, "k", k);
    add_param(params, "n", n);
    finish_params(params);
    const std::vector<Graph> family = trees_with_matching(n, k, cfg.budget);
    if (family.empty()) throw std::logic_error("verify_theorem3: empty class");
    return verify_unique_maximizer(Claim::Theorem3, family, make_ank(n, k), a, std::move(params),
                                   cfg);
}

namespace {

struct ShiftAttempt {
    int outcome = 0;  // 0 invalid, 1 skipped (hypothesis), 2 valid
    double margin = 0.0;
    std::string witness;
};

// All attempts for one corpus graph, deterministic in (seed, graph index).
std::vector<ShiftAttempt> lemma1_attempts(const Graph& g, int attempts, AlphaParam a,
                                          std::uint64_t stream_seed) {
    std::vector<ShiftAttempt> out(attempts);
    if (g.n() < 2) return out;
    SpectralResult base;
    try {
        base = spectral_radius(g, a);
    } catch (const NonConvergenceError&) {
        return out;  // all attempts stay invalid
    }
    std::uint64_t state = stream_seed;
    for (int t = 0; t < attempts; ++t) {
        ShiftAttempt& att = out[t];
        int v = static_cast<int>(splitmix64(state) % g.n());
        int u = static_cast<int>(splitmix64(state) % g.n());
        if (u == v) continue;
        ShiftSpec spec;
        spec.v = v;
        spec.u = u;
        for (int w : g.neighbors(v))
            if (w != u && !g.has_edge(u, w) && (splitmix64(state) & 1)) spec.moved.push_back(w);
        if (spec.moved.empty()) {
            std::vector<int> allowed;
            for (int w : g.neighbors(v))
                if (w != u && !g.has_edge(u, w)) allowed.push_back(w);
            if (allowed.empty()) continue;
            spec.moved.push_back(allowed[splitmix64(state) % allowed.size()]);
        }
        if (base.perron[u] < base.perron[v] - 1e-12) {
            att.outcome = 1;  // hypothesis x_u >= x_v not satisfied
            continue;
        }
        Graph shifted;
        try {
            shifted = shift_neighbors(g, spec);
        } catch (const std::invalid_argument&) {
            continue;  // e.g. the shift would disconnect the graph
        }
        RhoEval after = eval_rho(shifted, a);
        if (!after.certified) continue;
        att.outcome = 2;
        att.margin = after.rho - base.rho;
        att.witness = graph6_encode(shifted);
    }
    return out;
}

}  // namespace

VerificationOutcome verify_lemma1_sample(std::span<const Graph> corpus, int trials, AlphaParam a,
                                         std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("verify_lemma1_sample: trials >= 1 required");
    Stopwatch watch;
    VerificationOutcome out;
    out.claim = Claim::Lemma1;

    int attempts = std::max<int>(8, static_cast<int>((4L * trials + corpus.size() - 1) /
                                                     std::max<std::size_t>(corpus.size(), 1)));
    auto per_graph = parallel_map<std::vector<ShiftAttempt>>(
        corpus.size(),
        [&](std::size_t i) {
            std::uint64_t stream = seed;
            std::uint64_t mix = splitmix64(stream) ^ (i * 0xA24BAED4963EE407ULL) ^
                                std::bit_cast<std::uint64_t>(a.value);
            return lemma1_attempts(corpus[i], attempts, a, mix);
        },
        0);

    int valid = 0, skipped = 0;
    double margin = kVacuousMargin;
    std::string worst_witness;
    for (const auto& atts : per_graph)
        for (const ShiftAttempt& att : atts) {
            if (att.outcome == 1) ++skipped;
            if (att.outcome != 2) continue;
            ++valid;
            if (att.margin < margin) {
                margin = att.margin;
                worst_witness = att.witness;
            }
        }

    add_param(out.params, "alpha", a.value);
    add_param(out.params, "graphs", static_cast<int>(corpus.size()));
    add_param(out.params, "skipped", skipped);
    add_param(out.params, "trials", trials);
    add_param(out.params, "valid", valid);
    finish_params(out.params);

    out.margin = valid == 0 ? 0.0 : margin;
    if (valid < trials) {
        out.status = Status::Inconclusive;
        out.note = "fewer valid instances than requested";
    } else {
        out.status = status_from_margin(out.margin, true);
    }
    if (out.status == Status::Fail && !worst_witness.empty()) out.witness = {worst_witness};
    out.elapsed_ms = watch.ms();
    return out;
}

VerificationOutcome verify_transformation_a(int n_min, int n_max, AlphaParam a,
                                            const VerifyConfig& cfg) {
    Stopwatch watch;
    VerificationOutcome out;
    out.claim = Claim::TransformationA;
    add_param(out.params, "alpha", a.value);
    add_param(out.params, "n_max", n_max);
    add_param(out.params, "n_min", n_min);

    struct TreeResult {
        double margin = kVacuousMargin;
        int instances = 0;
        bool matching_ok = true;
        std::string witness;
    };

    std::vector<Graph> trees;
    for (int n = n_min; n <= n_max; ++n)
        for (const Graph& t : cached_trees(n, cfg.budget)) trees.push_back(t);

    auto results = parallel_map<TreeResult>(
        trees.size(),
        [&](std::size_t i) {
            const Graph& t = trees[i];
            TreeResult res;
            auto points = split_points(t);
            if (points.empty()) return res;
            int before = matching_number(t).size;
            RhoEval base = eval_rho(t, a, cfg.tolerance);
            for (const SplitPoint& sp : points) {
                Graph split =
                    t.without_edge(sp.path[1], sp.path[2]).with_edge(sp.path[1], sp.anchor);
                ++res.instances;
                if (matching_number(split).size != before) {
                    res.matching_ok = false;
                    res.witness = graph6_encode(t) + " " + graph6_encode(split);
                    continue;
                }
                RhoEval after = eval_rho(split, a, cfg.tolerance);
                double margin = after.rho - base.rho;
                if (margin < res.margin) {
                    res.margin = margin;
                    res.witness = graph6_encode(t) + " " + graph6_encode(split);
                }
            }
            return res;
        },
        cfg.jobs);

    int instances = 0;
    double margin = kVacuousMargin;
    std::string witness;
    bool matching_ok = true;
    for (const TreeResult& r : results) {
        instances += r.instances;
        matching_ok &= r.matching_ok;
        if (!r.matching_ok) witness = r.witness;
        if (r.margin < margin) {
            margin = r.margin;
            if (matching_ok) witness = r.witness;
        }
    }

    add_param(out.params, "instances", instances);
    finish_params(out.params);
    out.margin = margin;
    if (!matching_ok) {
        out.status = Status::Fail;
        out.note = "matching number changed by a split";
    } else if (instances == 0) {
        out.status = Status::Pass;  // vacuous
    } else {
        out.status = status_from_margin(margin, true);
    }
    if (out.status == Status::Fail && !witness.empty()) {
        std::size_t space = witness.find(' ');
        out.witness = {witness.substr(0, space), witness.substr(space + 1)};
    }
    out.elapsed_ms = watch.ms();
    return out;
}

namespace {

void smith_member_codes(int n, std::set<std::string>& codes) {
    // all Smith-list members on exactly n vertices (paths and cycles included)
    if (n >= 1) codes.insert(canonical_code(make_basic(BasicKind::Path, n)).bytes);
    if (n >= 3) codes.insert(canonical_code(make_basic(BasicKind::Cycle, n)).bytes);
    if (n >= 4) codes.insert(canonical_code(make_smith(SmithId::H1, n)).bytes);
    if (n >= 5) codes.insert(canonical_code(make_smith(SmithId::H5, n)).bytes);
    for (SmithId id : {SmithId::H2, SmithId::H3, SmithId::H4, SmithId::H6, SmithId::H7, SmithId::H8}) {
        Graph g = make_smith(id);
        if (g.n() == n) codes.insert(canonical_code(g).bytes);
    }
}

}  // namespace

VerificationOutcome verify_smith(std::span<const double> alpha_grid, const VerifyConfig& cfg) {
    Stopwatch watch;
    VerificationOutcome out;
    out.claim = Claim::SmithRadii;
    constexpr int kMaxMemberSize = 12;
    int max_graph_n = std::min(7, cfg.budget.max_n_graphs);

    AlphaParam alpha0(0.0);
    double margin = kVacuousMargin;  // min strict gap across all inequalities
    double eq_defect = 0.0;          // max |rho - 2| across the "= 2" members
    std::string bad_witness;

    auto check_below = [&](const Graph& g) {
        double rho = eval_rho(g, alpha0).rho;
        if (2.0 - rho < margin) {
            margin = 2.0 - rho;
            if (margin <= kStrictTol) bad_witness = graph6_encode(g);
        }
    };
    auto check_equal = [&](const Graph& g) {
        double rho = eval_rho(g, alpha0).rho;
        if (std::abs(rho - 2.0) > eq_defect) {
            eq_defect = std::abs(rho - 2.0);
            if (eq_defect > 1e-9) bad_witness = graph6_encode(g);
        }
    };

    for (int n = 2; n <= kMaxMemberSize; ++n) check_below(make_basic(BasicKind::Path, n));
    for (int n = 4; n <= kMaxMemberSize; ++n) check_below(make_smith(SmithId::H1, n));
    for (SmithId id : {SmithId::H2, SmithId::H3, SmithId::H4}) check_below(make_smith(id));
    for (int n = 3; n <= kMaxMemberSize; ++n) check_equal(make_basic(BasicKind::Cycle, n));
    for (int n = 5; n <= kMaxMemberSize; ++n) check_equal(make_smith(SmithId::H5, n));
    for (SmithId id : {SmithId::H6, SmithId::H7, SmithId::H8}) check_equal(make_smith(id));

    // every other connected graph with n <= 7 sits strictly above 2 at every
    // grid alpha
    for (int n = 1; n <= max_graph_n; ++n) {
        std::set<std::string> members;
        smith_member_codes(n, members);
        const std::vector<Graph>& corpus = cached_connected_graphs(n, cfg.budget, cfg.jobs);
        std::vector<const Graph*> others;
        for (const Graph& g : corpus)
            if (!members.contains(canonical_code(g).bytes)) others.push_back(&g);
        for (double av : alpha_grid) {
            AlphaParam a(av);
            auto margins = parallel_map<double>(
                others.size(), [&](std::size_t i) { return eval_rho(*others[i], a).rho - 2.0; },
                cfg.jobs);
            for (std::size_t i = 0; i < margins.size(); ++i)
                if (margins[i] < margin) {
                    margin = margins[i];
                    if (margin <= kStrictTol) bad_witness = graph6_encode(*others[i]);
                }
        }
    }

    std::string alphas;
    for (double av : alpha_grid) {
        if (!alphas.empty()) alphas += ",";
        alphas += format_double(av);
    }
    add_param(out.params, "alpha_grid", alphas);
    add_param(out.params, "max_graph_n", max_graph_n);
    add_param(out.params, "max_member_size", kMaxMemberSize);
    finish_params(out.params);

    out.margin = margin;
    if (eq_defect > 1e-9) {
        out.status = Status::Fail;
        out.note = "a radius-2 family member deviates from 2 beyond 1e-9";
    } else {
        out.status = status_from_margin(margin, true);
    }
    if (out.status != Status::Pass && !bad_witness.empty()) out.witness = {bad_witness};
    out.elapsed_ms = watch.ms();
    return out;
}

// ---------------------------------------------------------------------------
// Harness

std::vector<Theorem1Cell> default_theorem1_grid() {
    std::vector<Theorem1Cell> cells;
    for (auto [kind, c] : {std::pair{BasicKind::Cycle, 3}, {BasicKind::Cycle, 4},
                           {BasicKind::Complete, 4}}) {
        FamilySpec core;
        core.kind = kind == BasicKind::Cycle ? FamilySpec::Kind::Cycle : FamilySpec::Kind::Complete;
        core.n = c;
        for (int s = 0; s <= 3; ++s)
            for (int q = 1; q <= 3; ++q)
                for (int p = q + std::max(s + 1, 2); p <= std::min(12 - s - q, q + 6); ++p) {
                    int total = c + (s >= 2 ? s - 1 : 0) + p + q;
                    if (total <= 16) cells.push_back({core, p, s, q});
                }
    }
    return cells;
}

std::vector<VerificationOutcome> run_claim(Claim claim, const VerifyConfig& cfg) {
    std::vector<VerificationOutcome> outs;
    switch (claim) {
        case Claim::Lemma1: {
            std::vector<Graph> corpus;
            for (int n = 2; n <= std::min(6, cfg.budget.max_n_graphs); ++n)
                for (const Graph& g : cached_connected_graphs(n, cfg.budget, cfg.jobs))
                    corpus.push_back(g);
            for (double av : cfg.alpha_grid)
                outs.push_back(verify_lemma1_sample(corpus, cfg.trials, AlphaParam(av), cfg.seed));
            break;
        }
        case Claim::Lemma2: {
            for (int n = 2; n <= std::min(7, cfg.budget.max_n_graphs); ++n) {
                const std::vector<Graph>& corpus = cached_connected_graphs(n, cfg.budget, cfg.jobs);
                for (double av : cfg.alpha_grid) {
                    AlphaParam a(av);
                    auto batch = parallel_map<VerificationOutcome>(
                        corpus.size(), [&](std::size_t i) { return verify_lemma2(corpus[i], a); },
                        cfg.jobs);
                    for (auto& o : batch) outs.push_back(std::move(o));
                }
            }
            break;
        }
        case Claim::Theorem1: {
            auto cells = default_theorem1_grid();
            for (double av : cfg.alpha_grid) {
                AlphaParam a(av);
                auto batch = parallel_map<VerificationOutcome>(
                    cells.size(),
                    [&](std::size_t i) {
                        const Theorem1Cell& cell = cells[i];
                        return verify_theorem1(cell.core, cell.p, cell.s, cell.q, a);
                    },
                    cfg.jobs);
                for (auto& o : batch) outs.push_back(std::move(o));
            }
            break;
        }
        case Claim::Theorem2: {
            for (int n = std::max(2, cfg.theorem2_min_n);
                 n <= std::min(cfg.theorem2_max_n, cfg.budget.max_n_graphs); ++n)
                for (int k = 0; k <= n - 2; ++k)
                    for (double av : cfg.alpha_grid)
                        outs.push_back(verify_theorem2(n, k, AlphaParam(av), cfg));
            break;
        }
        case Claim::Theorem3: {
            for (int n = std::max(4, cfg.theorem3_min_n);
                 n <= std::min(cfg.theorem3_max_n, cfg.budget.max_n_trees); ++n)
                for (int k = 1; k <= n / 2; ++k)
                    for (double av : cfg.alpha_grid)
                        outs.push_back(verify_theorem3(n, k, AlphaParam(av), cfg));
            break;
        }
        case Claim::TransformationA: {
            int lo = std::max(5, cfg.transform_a_min_n);
            int hi = std::min(cfg.transform_a_max_n, cfg.budget.max_n_trees);
            for (double av : cfg.alpha_grid)
                outs.push_back(verify_transformation_a(lo, hi, AlphaParam(av), cfg));
            break;
        }
        case Claim::SmithRadii:
            outs.push_back(verify_smith(cfg.alpha_grid, cfg));
            break;
    }
    return outs;
}

std::vector<VerificationOutcome> run_all(const VerifyConfig& cfg) {
    std::vector<VerificationOutcome> outs;
    for (Claim claim : {Claim::Lemma1, Claim::Lemma2, Claim::SmithRadii, Claim::Theorem1,
                        Claim::Theorem2, Claim::Theorem3, Claim::TransformationA})
        for (auto& o : run_claim(claim, cfg)) outs.push_back(std::move(o));
    sort_outcomes(outs);
    return outs;
}

namespace {

// Numeric-aware param value ordering so n=10 sorts after n=9.
bool value_less(const std::string& a, const std::string& b) {
    double da, db;
    auto ra = std::from_chars(a.data(), a.data() + a.size(), da);
    auto rb = std::from_chars(b.data(), b.data() + b.size(), db);
    bool na = ra.ec == std::errc{} && ra.ptr == a.data() + a.size();
    bool nb = rb.ec == std::errc{} && rb.ptr == b.data() + b.size();
    if (na && nb && da != db) return da < db;
    return a < b;
}

bool outcome_less(const VerificationOutcome& a, const VerificationOutcome& b) {
    if (a.claim != b.claim) return claim_name(a.claim) < claim_name(b.claim);
    std::size_t count = std::min(a.params.size(), b.params.size());
    for (std::size_t i = 0; i < count; ++i) {
        if (a.params[i].first != b.params[i].first) return a.params[i].first < b.params[i].first;
        if (a.params[i].second != b.params[i].second)
            return value_less(a.params[i].second, b.params[i].second);
    }
    return a.params.size() < b.params.size();
}

nlohmann::ordered_json typed_value(const std::string& s) {
    if (!s.empty()) {
        int iv;
        auto ri = std::from_chars(s.data(), s.data() + s.size(), iv);
        if (ri.ec == std::errc{} && ri.ptr == s.data() + s.size()) return iv;
        double dv;
        auto rd = std::from_chars(s.data(), s.data() + s.size(), dv);
        if (rd.ec == std::errc{} && rd.ptr == s.data() + s.size()) return dv;
    }
    return s;
}

// jobs is deliberately absent: it only selects the execution path, and
// reports must be byte-identical across job counts.
nlohmann::ordered_json config_json(const VerifyConfig& cfg, std::span<const std::string> claims) {
    nlohmann::ordered_json j;
    j["alpha_grid"] = cfg.alpha_grid;
    j["claims"] = std::vector<std::string>(claims.begin(), claims.end());
    j["max_n_graphs"] = cfg.budget.max_n_graphs;
    j["max_n_trees"] = cfg.budget.max_n_trees;
    j["seed"] = cfg.seed;
    j["timing"] = cfg.timing;
    j["tolerance"] = cfg.tolerance;
    j["trials"] = cfg.trials;
    return j;
}

}  // namespace

void sort_outcomes(std::vector<VerificationOutcome>& outcomes) {
    std::sort(outcomes.begin(), outcomes.end(), outcome_less);
}

std::string report_json(std::span<const VerificationOutcome> outcomes, const VerifyConfig& cfg,
                        std::span<const std::string> claims) {
    nlohmann::ordered_json root;
    root["version"] = kToolVersion;
    root["config"] = config_json(cfg, claims);
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const VerificationOutcome& o : outcomes) {
        nlohmann::ordered_json rec;
        rec["claim"] = claim_name(o.claim);
        nlohmann::ordered_json params;
        for (const auto& [key, value] : o.params) params[key] = typed_value(value);
        rec["params"] = params;
        rec["status"] = status_name(o.status);
        rec["margin"] = o.margin;
        rec["witness"] = o.witness;
        rec["elapsed"] = cfg.timing ? nlohmann::ordered_json(o.elapsed_ms) : nullptr;
        if (!o.note.empty()) rec["note"] = o.note;
        list.push_back(std::move(rec));
    }
    root["outcomes"] = std::move(list);
    return root.dump(2) + "\n";
}

std::string report_csv(std::span<const VerificationOutcome> outcomes, const VerifyConfig& cfg) {
    std::string out = "claim,params,status,margin,witness,elapsed\n";
    for (const VerificationOutcome& o : outcomes) {
        out += claim_name(o.claim);
        out += ',';
        for (std::size_t i = 0; i < o.params.size(); ++i) {
            if (i) out += ';';
            out += o.params[i].first + "=" + o.params[i].second;
        }
        out += ',';
        out += status_name(o.status);
        out += ',';
        out += format_double(o.margin);
        out += ',';
        for (std::size_t i = 0; i < o.witness.size(); ++i) {
            if (i) out += ' ';
            out += o.witness[i];
        }
        out += ',';
        if (cfg.timing) out += format_double(o.elapsed_ms);
        out += '\n';
    }
    return out;
}

int report_exit_code(std::span<const VerificationOutcome> outcomes) {
    bool inconclusive = false;
    for (const VerificationOutcome& o : outcomes) {
        if (o.status == Status::Fail) return 1;
        inconclusive |= o.status == Status::Inconclusive;
    }
    return inconclusive ? 2 : 0;
}

}  // namespace alphaspectra
