#include "cpk/egf.hpp"

namespace cpk {

ClusterPolynomial s_k_polynomial(ClusterEngine& engine, int k) {
    if (k < 1) throw invalid_input_error("s_k: k must be >= 1");
    ClusterPolynomial poly;
    poly.k = k;
    for (int n = engine.min_cluster_length(k); n <= engine.max_cluster_length(k); ++n) {
        const Int& r = engine.cluster_number(n, k);
        if (r != 0) poly.r[n] = r;
    }
    return poly;
}

ClusterPolynomial s_k_polynomial(const Pattern& sigma, int k, const ClusterConfig& cfg) {
    ClusterEngine engine(sigma, cfg);
    return s_k_polynomial(engine, k);
}

EgfSeries omega_series(ClusterEngine& engine, int N) {
    if (N < 0) throw invalid_input_error("omega_series: N must be >= 0");
    EgfSeries w;
    w.order = N;
    w.coeff.assign(static_cast<size_t>(N) + 1, 0);
    w.coeff[0] = 1;
    if (N >= 1) w.coeff[1] = -1;
    const int m = engine.length();
    const int p = engine.pattern().overlaps().front();
    for (int n = m; n <= N; ++n) {
        Int acc = 0;
        // k-clusters of length n need k-1 gaps of size >= p summing to n-m
        const int kmax = (n - m) / p + 1;
        for (int k = 1; k <= kmax; ++k) {
            const Int& r = engine.cluster_number(n, k);
            if (k % 2 == 1)
                acc += r;
            else
                acc -= r;
        }
        w.coeff[static_cast<size_t>(n)] = acc;
    }
    return w;
}

EgfSeries omega_series(const Pattern& sigma, int N, const ClusterConfig& cfg) {
    ClusterEngine engine(sigma, cfg);
    return omega_series(engine, N);
}

EgfSeries omega_monotone(int m, int N) {
    if (m < 2) throw invalid_input_error("omega_monotone: m must be >= 2");
    if (N < 0) throw invalid_input_error("omega_monotone: N must be >= 0");
    EgfSeries w;
    w.order = N;
    w.coeff.assign(static_cast<size_t>(N) + 1, 0);
    for (int n = 0; n <= N; ++n) {
        if (n % m == 0) w.coeff[static_cast<size_t>(n)] = 1;
        if (n % m == 1) w.coeff[static_cast<size_t>(n)] = -1;
    }
    return w;
}

namespace {

std::vector<Int> invert_series(const EgfSeries& w, int N) {
    std::vector<Int> alpha(static_cast<size_t>(N) + 1);
    alpha[0] = 1;
    for (int n = 1; n <= N; ++n) {
        Int acc = 0;
        for (int j = 0; j < n; ++j)
            acc += binomial(n, j) * alpha[static_cast<size_t>(j)] *
                   w.at(n - j);
        alpha[static_cast<size_t>(n)] = -acc;
    }
    return alpha;
}

}  // namespace

std::vector<Int> avoider_counts(ClusterEngine& engine, int N) {
    return invert_series(omega_series(engine, N), N);
}

std::vector<Int> avoider_counts(const Pattern& sigma, int N, const ClusterConfig& cfg) {
    ClusterEngine engine(sigma, cfg);
    return avoider_counts(engine, N);
}

namespace {

using UPoly = std::vector<Int>;  // coefficient of u^c at index c

void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void add_scaled(UPoly& acc, const UPoly& a, const UPoly& b, const Int& scale) {
    if (a.empty() || b.empty()) return;
    if (acc.size() < a.size() + b.size() - 1) acc.resize(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        const Int ai = a[i] * scale;
        for (size_t j = 0; j < b.size(); ++j) acc[i + j] += ai * b[j];
    }
}

}  // namespace

OccurrenceRow occurrence_distribution(ClusterEngine& engine, int n) {
    if (n < 0) throw invalid_input_error("occurrence_distribution: n must be >= 0");
    const int m = engine.length();
    const int p = engine.pattern().overlaps().front();

    // omega rows as polynomials in u: row t is -sum_k r_{t,k} (u-1)^k.
    std::vector<UPoly> omega_rows(static_cast<size_t>(n) + 1);
    omega_rows[0] = {Int(1)};
    if (n >= 1) omega_rows[1] = {Int(-1)};
    for (int t = m; t <= n; ++t) {
        UPoly row;
        const int kmax = (t - m) / p + 1;
        for (int k = 1; k <= kmax; ++k) {
            const Int& r = engine.cluster_number(t, k);
            if (r == 0) continue;
            // (u-1)^k = sum_j C(k,j) (-1)^{k-j} u^j
            if (row.size() < static_cast<size_t>(k) + 1) row.resize(static_cast<size_t>(k) + 1);
            for (int j = 0; j <= k; ++j) {
                Int term = binomial(k, j) * r;
                if ((k - j) % 2 == 1) term = -term;
                row[static_cast<size_t>(j)] -= term;
            }
        }
        trim(row);
        omega_rows[static_cast<size_t>(t)] = std::move(row);
    }

    // Triangular inversion: P_n = -sum_{j<n} C(n,j) P_j omega_{n-j}.
    std::vector<UPoly> rows(static_cast<size_t>(n) + 1);
    rows[0] = {Int(1)};
    for (int t = 1; t <= n; ++t) {
        UPoly acc;
        for (int j = 0; j < t; ++j)
            add_scaled(acc, rows[static_cast<size_t>(j)], omega_rows[static_cast<size_t>(t - j)],
                       binomial(t, j));
        for (Int& c : acc) c = -c;
        trim(acc);
        rows[static_cast<size_t>(t)] = std::move(acc);
    }

    OccurrenceRow out;
    out.n = n;
    out.count = std::move(rows[static_cast<size_t>(n)]);
    if (out.count.empty()) out.count.push_back(1);  // S_0: one empty permutation
    return out;
}

OccurrenceRow occurrence_distribution(const Pattern& sigma, int n, const ClusterConfig& cfg) {
    ClusterEngine engine(sigma, cfg);
    return occurrence_distribution(engine, n);
}

int default_series_order(int m) {
    // Chosen so classification separates the known class counts; length 6
    // needs alpha_15 before the last two class pairs split.
    if (m <= 4) return 14;
    if (m == 5) return 13;
    return 15;
}

}  // namespace cpk
