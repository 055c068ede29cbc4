#pragma once

#include <map>
#include <vector>

#include "cpk/cluster.hpp"
#include "cpk/ints.hpp"

namespace cpk {

// F(z) = sum a_n z^n/n! kept as the exact integer list (a_n).
struct EgfSeries {
    int order = 0;           // N
    std::vector<Int> coeff;  // a_0..a_N, n!-scaled

    const Int& at(int n) const { return coeff[static_cast<size_t>(n)]; }
};

// s_k(z) = sum_n r_{n,k} z^n/n!. Finite: cluster lengths lie in
// [m+(k-1) min O, m+(k-1)(m-1)], so no truncation is involved.
struct ClusterPolynomial {
    int k = 0;
    std::map<int, Int> r;  // n -> r_{n,k}, nonzero support only
};

ClusterPolynomial s_k_polynomial(ClusterEngine& engine, int k);
ClusterPolynomial s_k_polynomial(const Pattern& sigma, int k,
                                 const ClusterConfig& cfg = {});

// omega_sigma(z) = 1 - z - sum_k (-1)^k s_k(z), truncated at order N:
// w_0 = 1, w_1 = -1, w_n = sum_k (-1)^{k+1} r_{n,k} for n >= 2.
EgfSeries omega_series(ClusterEngine& engine, int N);
EgfSeries omega_series(const Pattern& sigma, int N, const ClusterConfig& cfg = {});

// Closed form for the monotone pattern 12...m: the n!-scaled coefficient
// is +1 when n = 0 (mod m), -1 when n = 1 (mod m), 0 otherwise.
EgfSeries omega_monotone(int m, int N);

// alpha_0..alpha_N from the reciprocal recurrence
// sum_j C(n,j) alpha_j w_{n-j} = [n = 0].
std::vector<Int> avoider_counts(ClusterEngine& engine, int N);
std::vector<Int> avoider_counts(const Pattern& sigma, int N,
                                const ClusterConfig& cfg = {});

// Row n of P(u,z): count[c] = #{pi in S_n : c_sigma(pi) = c}.
struct OccurrenceRow {
    int n = 0;
    std::vector<Int> count;
};

OccurrenceRow occurrence_distribution(ClusterEngine& engine, int n);
OccurrenceRow occurrence_distribution(const Pattern& sigma, int n,
                                      const ClusterConfig& cfg = {});

// Default classification truncation orders (chosen so the known class
// counts separate).
int default_series_order(int m);

}  // namespace cpk
