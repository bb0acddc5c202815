#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alphaspectra/enumeration.hpp"
#include "alphaspectra/families.hpp"
#include "alphaspectra/graph.hpp"
#include "alphaspectra/spectral.hpp"

namespace alphaspectra {

inline constexpr std::string_view kToolVersion = "alpha-spectra 0.1.0";

/// Strict-inequality acceptance threshold: a "<" claim is accepted only when
/// the computed difference exceeds this with both spectral residuals
/// certified; differences inside [-tol, tol] are inconclusive, never pass or
/// fail.
inline constexpr double kStrictTol = 1e-8;

/// Margin sentinel for vacuously true claims (no comparison performed).
inline constexpr double kVacuousMargin = std::numeric_limits<double>::max();

enum class Claim { Lemma1, Lemma2, Theorem1, Theorem2, Theorem3, TransformationA, SmithRadii };
enum class Status { Pass, Fail, Inconclusive };

std::string_view claim_name(Claim c);
std::optional<Claim> claim_from_name(std::string_view name);
std::string_view status_name(Status s);

struct VerificationOutcome {
    Claim claim = Claim::Lemma1;
    std::vector<std::pair<std::string, std::string>> params;  // sorted by key
    Status status = Status::Inconclusive;
    double margin = 0.0;
    std::vector<std::string> witness;  // graph6
    double elapsed_ms = 0.0;
    std::string note;  // free-form diagnostic, not part of the report schema
};

struct VerifyConfig {
    std::vector<double> alpha_grid{0.0, 0.25, 0.5, 0.75, 0.99};
    EnumBudget budget = EnumBudget::from_env();
    double tolerance = 1e-12;
    int jobs = 0;       // 0 = all threads, 1 = serial reference path
    std::uint64_t seed = 1;
    int trials = 600;   // lemma-1 valid-instance target per alpha
    bool timing = false;
    int theorem2_min_n = 2, theorem2_max_n = 7;
    int theorem3_min_n = 4, theorem3_max_n = 12;
    int transform_a_min_n = 5, transform_a_max_n = 10;
};

// --- single-claim operations -----------------------------------------------

/// Lemma 2: Perron entries strictly increase inward along every pendent path
/// when rho_alpha(g) > 2; vacuous (sentinel margin) otherwise.
VerificationOutcome verify_lemma2(const Graph& g, AlphaParam a);

/// Theorem 1: rho(G_{p-1,s,q+1}) > rho(G_{p,s,q}) over the given core.
/// Requires p - q >= max(s+1, 2) and q >= 1. Also cross-checks that the leaf
/// swap rebalance reproduces the directly constructed target graph.
VerificationOutcome verify_theorem1(const FamilySpec& core, int p, int s, int q, AlphaParam a);

/// Theorem 2: over all connected graphs with n vertices and k cut vertices,
/// the unique maximizer of rho_alpha is G_{n,k}.
VerificationOutcome verify_theorem2(int n, int k, AlphaParam a, const VerifyConfig& cfg = {});

/// Theorem 3: over all trees with n vertices and matching number k, the
/// unique maximizer of rho_alpha is A(n,k).
VerificationOutcome verify_theorem3(int n, int k, AlphaParam a, const VerifyConfig& cfg = {});

/// Lemma 1: sampled neighbor shifts with verified hypothesis x_u >= x_v must
/// strictly increase rho_alpha. Samples deterministic in the seed; runs until
/// `trials` valid instances are tested (or the attempt cap is hit).
VerificationOutcome verify_lemma1_sample(std::span<const Graph> corpus, int trials, AlphaParam a,
                                         std::uint64_t seed = 1);

/// Transformation A over all trees with n_min <= n <= n_max: every valid
/// split (pendent path of >= 4 vertices, anchor degree >= 2) preserves the
/// matching number and strictly increases rho_alpha.
VerificationOutcome verify_transformation_a(int n_min, int n_max, AlphaParam a,
                                            const VerifyConfig& cfg = {});

/// Smith dichotomy at alpha = 0 (members < 2 resp. = 2 up to size 12) plus
/// rho_alpha > 2 for every non-Smith connected graph with n <= 7 at each grid
/// alpha.
VerificationOutcome verify_smith(std::span<const double> alpha_grid, const VerifyConfig& cfg = {});

// --- harness ----------------------------------------------------------------

struct Theorem1Cell {
    FamilySpec core;
    int p = 0, s = 0, q = 0;
};

/// Default Theorem 1 grid: cores C3, C4, K4; s <= 3; q <= 3;
/// p in [q + max(s+1, 2), min(12 - s - q, q + 6)]; total order <= 16.
std::vector<Theorem1Cell> default_theorem1_grid();

std::vector<VerificationOutcome> run_claim(Claim claim, const VerifyConfig& cfg);
std::vector<VerificationOutcome> run_all(const VerifyConfig& cfg);

void sort_outcomes(std::vector<VerificationOutcome>& outcomes);

std::string report_json(std::span<const VerificationOutcome> outcomes, const VerifyConfig& cfg,
                        std::span<const std::string> claims);
std::string report_csv(std::span<const VerificationOutcome> outcomes, const VerifyConfig& cfg);

/// 0 all pass, 1 any fail, 2 inconclusive present (no fail).
int report_exit_code(std::span<const VerificationOutcome> outcomes);

/// Shortest round-trip decimal form of a double (used everywhere a double
/// lands in deterministic text output).
std::string format_double(double v);

// Point evaluation used by the harness: power iteration first; on
// non-convergence fall back to the dense oracle when n <= 12, else keep the
// best estimate uncertified.
struct RhoEval {
    double rho = 0.0;
    double accuracy = 0.0;
    bool certified = false;
};
RhoEval eval_rho(const Graph& g, AlphaParam a, double tolerance = 1e-12);

}  // namespace alphaspectra
