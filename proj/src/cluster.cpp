#include "cpk/cluster.hpp"

#include <algorithm>
#include <numeric>

#include "cpk/parallel.hpp"

namespace cpk {

OverlapSet overlap_set(const Pattern& sigma) {
    return OverlapSet{sigma.length(), sigma.overlaps()};
}

bool is_nonoverlapping(const Pattern& sigma) {
    const int m = sigma.length();
    return m >= 3 && sigma.overlaps().size() == 1 && sigma.overlaps()[0] == m - 1;
}

int min_overlap(const Pattern& sigma) {
    return sigma.overlaps().front();
}

namespace {

void tuples_dfs(const std::vector<int>& overlaps, int target, int parts_left,
                std::vector<int>& gaps, std::vector<ClusterIndexTuple>& out) {
    if (parts_left == 0) {
        if (target != 0) return;
        ClusterIndexTuple t;
        t.indices.resize(gaps.size() + 1);
        t.indices[0] = 1;
        for (size_t j = 0; j < gaps.size(); ++j)
            t.indices[j + 1] = t.indices[j] + gaps[j];
        out.push_back(std::move(t));
        return;
    }
    const int lo = overlaps.front(), hi = overlaps.back();
    if (target < parts_left * lo || target > parts_left * hi) return;
    for (int g : overlaps) {
        gaps.push_back(g);
        tuples_dfs(overlaps, target - g, parts_left - 1, gaps, out);
        gaps.pop_back();
    }
}

}  // namespace

std::vector<ClusterIndexTuple> index_tuples(const Pattern& sigma, int n, int k) {
    if (k < 1) throw invalid_input_error("index_tuples: k must be >= 1");
    const int m = sigma.length();
    if (n < m) return {};
    std::vector<ClusterIndexTuple> out;
    std::vector<int> gaps;
    tuples_dfs(sigma.overlaps(), n - m, k - 1, gaps, out);
    return out;
}

Poset cluster_poset(const Pattern& sigma, const ClusterIndexTuple& tuple) {
    const int m = sigma.length();
    const int n = tuple.cluster_length(m);
    const std::vector<int>& inv = sigma.inverse();
    std::vector<std::pair<int, int>> less;
    less.reserve(static_cast<size_t>(tuple.k()) * static_cast<size_t>(m - 1));
    for (int i : tuple.indices)
        for (int t = 0; t + 1 < m; ++t)
            less.emplace_back(inv[static_cast<size_t>(t)] + i - 2,
                              inv[static_cast<size_t>(t) + 1] + i - 2);
    return Poset(n, less);
}

ClusterEngine::ClusterEngine(Pattern sigma, ClusterConfig cfg)
    : sigma_(std::move(sigma)), cfg_(cfg) {}

int ClusterEngine::min_cluster_length(int k) const {
    return sigma_.length() + (k - 1) * sigma_.overlaps().front();
}

int ClusterEngine::max_cluster_length(int k) const {
    return sigma_.length() + (k - 1) * sigma_.overlaps().back();
}

const Int& ClusterEngine::cluster_number(int n, int k) {
    auto it = memo_.find({n, k});
    if (it != memo_.end()) return it->second;
    const auto tuples = index_tuples(sigma_, n, k);
    Int total = 0;
    if (cfg_.threads > 1 && tuples.size() > 1) {
        auto parts = parallel_map<Int>(
            cfg_.threads, static_cast<int>(tuples.size()), [&](int i) {
                return count_linear_extensions(
                    cluster_poset(sigma_, tuples[static_cast<size_t>(i)]), cfg_.linext);
            });
        for (const Int& p : parts) total += p;
    } else {
        for (const auto& t : tuples)
            total += count_linear_extensions(cluster_poset(sigma_, t), cfg_.linext);
    }
    return memo_.emplace(std::make_pair(n, k), std::move(total)).first->second;
}

Int cluster_number(const Pattern& sigma, int n, int k, const ClusterConfig& cfg) {
    ClusterEngine engine(sigma, cfg);
    return engine.cluster_number(n, k);
}

Int cluster_numbers_bruteforce(const Pattern& sigma, int n, int k,
                               const ClusterConfig& cfg) {
    if (n > cfg.brute_guard)
        throw resource_limit_error("cluster brute force guard exceeded: n = " +
                                   std::to_string(n));
    const auto tuples = index_tuples(sigma, n, k);
    Int total = 0;
    for (const auto& t : tuples) total += cluster_numbers_bruteforce_tuple(sigma, t, cfg);
    return total;
}

Int cluster_numbers_bruteforce_tuple(const Pattern& sigma,
                                     const ClusterIndexTuple& tuple,
                                     const ClusterConfig& cfg) {
    const int m = sigma.length();
    const int n = tuple.cluster_length(m);
    if (n > cfg.brute_guard)
        throw resource_limit_error("cluster brute force guard exceeded: n = " +
                                   std::to_string(n));
    const std::vector<int>& inv = sigma.inverse();
    std::vector<int> pi(static_cast<size_t>(n));
    std::iota(pi.begin(), pi.end(), 1);
    unsigned long long count = 0;
    do {
        bool all = true;
        for (int i : tuple.indices) {
            for (int t = 0; t + 1 < m; ++t) {
                if (pi[static_cast<size_t>(inv[static_cast<size_t>(t)] + i - 2)] >=
                    pi[static_cast<size_t>(inv[static_cast<size_t>(t) + 1] + i - 2)]) {
                    all = false;
                    break;
                }
            }
            if (!all) break;
        }
        count += all;
    } while (std::next_permutation(pi.begin(), pi.end()));
    return Int(static_cast<unsigned long>(count));
}

Int d_k(const Pattern& sigma, int k, const ClusterConfig& cfg) {
    if (!is_nonoverlapping(sigma))
        throw std::domain_error("d_k requires a non-overlapping pattern");
    if (k < 1) throw invalid_input_error("d_k: k must be >= 1");
    const int m = sigma.length();
    ClusterEngine engine(sigma, cfg);
    return engine.cluster_number(k * (m - 1) + 1, k);
}

Int f_ab(int a, int b, int m) {
    if (a < 1 || a > m || b < 1 || b > m)
        throw invalid_input_error("f_ab: endpoints must lie in [1, m]");
    return binomial(a + b - 2, a - 1) * binomial(2 * m - a - b, m - b);
}

}  // namespace cpk
