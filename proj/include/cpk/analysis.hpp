#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpk/cluster.hpp"
#include "cpk/egf.hpp"
#include "cpk/ratpoly.hpp"

namespace cpk {

// 12...m, 12...(m-2)m(m-1), and 134...m2.
Pattern monotone_pattern(int m);
Pattern tau_pattern(int m);
Pattern upsilon_pattern(int m);

// The explicit non-overlapping pattern a(a+1)...b^...(m-1)12...(a-1)mb
// with first entry a and last entry b (b^ marks the omitted value).
Pattern census_witness(int a, int b, int m);

enum class BracketMode { certified, heuristic };
enum class BracketStatus { ok, inconclusive };

// Certified interval around rho_sigma^{-1}, the smallest positive zero of
// omega_sigma. In certified mode the endpoints carry exact sign
// certificates of the bracketing partial sums.
struct GrowthBracket {
    Pattern pattern;
    Rat lo, hi;
    BracketMode mode = BracketMode::certified;
    BracketStatus status = BracketStatus::ok;
    int depth = 0;  // cluster-series depth K
    Rat tol;

    Rat width() const { return hi - lo; }
    bool ok() const { return status == BracketStatus::ok; }
    // strictly below: this interval entirely left of the other
    bool below(const GrowthBracket& o) const { return hi < o.lo; }
};

struct RootBracket {
    Rat lo, hi;
    Rat width() const { return hi - lo; }
};

// Bracket of width <= `width` around c, the smallest positive zero of
// 1 - z + z^4/24. The polynomial is strictly decreasing on the search
// interval, so plain bisection certifies the first root.
RootBracket smallest_root_of_quartic_c(const Rat& width = Rat(1, 1000000));

// Bracket for C = rho_132^{-1}, computed once and cached; its upper end is
// the rational stand-in for C in every certified window.
const GrowthBracket& constant_C_bracket();
Rat constant_C_upper();

// Exact-rational certificate that the cluster polynomials s_k(z) (or their
// derivatives) decrease in k on (0, z_top]. The general overlap-sum bound
// covers every pattern except the four length-4 classes with O = {2,3},
// which use sharper per-class window bounds; monotone patterns use the
// falling-factorial variant.
bool terms_decrease_on(const Pattern& sigma, const Rat& z_top);
bool derivative_terms_decrease_on(const Pattern& sigma, const Rat& z_top);

struct BracketOptions {
    int depth = 0;  // K; 0 picks the default (8 for m = 3, 6 otherwise)
    Rat tol = Rat(1, 1000000);
    BracketMode mode = BracketMode::certified;
    int max_poset_elements = 64;
    int threads = 1;
};

// Certified mode: consecutive partial sums of the alternating cluster
// series bracket omega on the window, their certified root intervals give
// the hull. Heuristic mode: plain bisection on one truncated series.
GrowthBracket bracket_growth_rate(const Pattern& sigma, const BracketOptions& opts = {});

enum class GrowthOrdering { sigma_more_avoided, tau_more_avoided, indistinguishable };

// sigma-more-avoided iff sigma's bracket lies strictly below tau's
// (smaller rho^{-1} means larger growth rate, asymptotically more avoiders).
GrowthOrdering compare_growth(const Pattern& sigma, const Pattern& tau,
                              const BracketOptions& opts = {});

struct EquivClass {
    Pattern representative;         // lexicographically smallest member
    std::vector<Pattern> members;   // sorted
};

struct EquivClassReport {
    int m = 0;
    int order = 0;          // N: alpha-vectors alpha_0..alpha_N
    int stabilized_at = 0;  // minimal N' with the same partition
    bool warning = false;   // known class count not reproduced
    std::vector<EquivClass> classes;

    const EquivClass* class_of(const Pattern& p) const;
};

// Groups all m! patterns by exact alpha-vector through order N
// (N = 0 picks the default for m).
EquivClassReport classify(int m, int N = 0, int threads = 1);

struct DeltaPairEntry {
    int a = 0, b = 0;
    Int d2;           // f(a, b)
    Pattern witness;  // a(a+1)...b^...(m-1)12...(a-1)mb
    bool witness_nonoverlapping = false;
    bool witness_endpoints_ok = false;
    // some non-overlapping pattern with these endpoints exists (exhaustive);
    // false only for (2,3) at m = 4, where the construction has no target
    bool endpoints_realizable = false;
    std::string extreme;  // "largest", "second-largest", "second-smallest", "smallest" or ""
};

struct CensusReport {
    int m = 0;
    Int nonoverlap_count;
    Int total;  // m!
    Rat ratio;
    bool ratio_at_least_0364 = false;
    int delta_size = 0;
    Int delta_expected;  // floor((m^2-4)/4), meaningful for m >= 5
    bool delta_size_matches = false;
    // exact d_2 = f(sigma_1, sigma_m) verified by linear extension counting
    // for every non-overlapping pattern (filled for m <= 6)
    std::optional<bool> d2_closed_form_verified;
    std::vector<DeltaPairEntry> pairs;
};

CensusReport census_nonoverlapping(int m, const ClusterConfig& cfg = {});

struct CheckLine {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::string suite;
    bool passed = true;
    std::vector<CheckLine> lines;

    void check(std::string name, bool ok, std::string detail = "");
};

// Cluster numbers r_{6,2}..r_{10,3} for 2413, 2143, 1324, 1423 via linear
// extensions and via brute-force cluster enumeration.
VerificationReport verify_table1(int threads = 1);

// Bracket orderings: monotone lowest, 12...(m-2)m(m-1) highest, 134...m2
// lowest among non-overlapping class representatives.
VerificationReport verify_theorem_orderings(int m, const BracketOptions& opts = {});

// Grid checks of the monotone upper bound, the two-sided cluster sandwich
// for every class representative, and the non-overlapping omega chain.
VerificationReport verify_inequality_suite(int m, int threads = 1);

struct DerivativeReport {
    Pattern pattern;
    GrowthBracket bracket;
    enum class Sign { negative, inconclusive } sign = Sign::inconclusive;
};

// Sign of omega' across the growth bracket (expected negative throughout).
DerivativeReport verify_derivative_negativity(const Pattern& sigma,
                                              const BracketOptions& opts = {});

VerificationReport verify_derivative_suite(int m, const BracketOptions& opts = {});

// d_2 equal but d_3 different for the pair 23567184 / 34671285.
VerificationReport verify_d_anomaly_pair(const ClusterConfig& cfg = {});

// Exhaustive two-cluster bound r_{m+l,2} <= C(2l-1, l-1) and the
// "2,3 in O forces m = 4" lemma, for all patterns up to max_m.
VerificationReport verify_lemma_bounds(int max_m = 7, int threads = 1);

// s_{k+1}/s_k < 0.97 at the C upper bound for all sigma in S_4, k <= 6.
VerificationReport verify_ratio_097();

}  // namespace cpk
