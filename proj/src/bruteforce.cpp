#include "cpk/bruteforce.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_map>

#include "cpk/parallel.hpp"

namespace cpk {

namespace {

void check_guard(int n, const BruteForceConfig& cfg) {
    if (n < 0) throw invalid_input_error("n must be >= 0");
    if (n > cfg.guard)
        throw resource_limit_error("brute force guard exceeded: n = " + std::to_string(n) +
                                   " > " + std::to_string(cfg.guard));
}

// Lexicographic rank of the reduction of w[0..m), O(m^2).
long lehmer_rank(const int* w, int m, const long* fact) {
    long rank = 0;
    for (int i = 0; i < m; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < m; ++j) smaller += w[j] < w[i];
        rank += smaller * fact[m - 1 - i];
    }
    return rank;
}

// Enumerates the block of S_n whose first entry is `first` in lexicographic
// order; visit receives the full permutation as values 1..n.
template <typename Visit>
void enumerate_block(int n, int first, Visit&& visit) {
    std::vector<int> pi(static_cast<size_t>(n));
    pi[0] = first;
    int next = 1;
    for (int v = 1; v <= n; ++v)
        if (v != first) pi[static_cast<size_t>(next++)] = v;
    do {
        visit(pi.data());
    } while (std::next_permutation(pi.begin() + 1, pi.end()));
}

template <typename Visit>
void enumerate_all(int n, Visit&& visit) {
    if (n == 0) {
        visit(static_cast<const int*>(nullptr));
        return;
    }
    for (int first = 1; first <= n; ++first) enumerate_block(n, first, visit);
}

// true iff the window starting at w reduces to sigma; inv is sigma's inverse.
inline bool window_matches(const int* w, const std::vector<int>& inv) {
    for (size_t j = 0; j + 1 < inv.size(); ++j)
        if (w[inv[j] - 1] >= w[inv[j + 1] - 1]) return false;
    return true;
}

struct RankGroup {
    int m = 0;
    std::array<long, 13> fact{};
    // pattern lex rank -> indices into the batch (-1 terminated pairs kept
    // simple with a flat multimap)
    std::unordered_map<long, std::vector<size_t>> by_rank;
};

std::vector<RankGroup> build_groups(std::span<const Pattern> patterns) {
    std::vector<RankGroup> groups;
    for (size_t i = 0; i < patterns.size(); ++i) {
        const int m = patterns[i].length();
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const RankGroup& g) { return g.m == m; });
        if (it == groups.end()) {
            RankGroup g;
            g.m = m;
            long f = 1;
            for (int k = 0; k <= 12 && k <= m; ++k) {
                g.fact[static_cast<size_t>(k)] = f;
                f *= k + 1;
            }
            groups.push_back(std::move(g));
            it = groups.end() - 1;
        }
        const long r = lehmer_rank(patterns[i].perm().entries().data(), m,
                                   it->fact.data());
        it->by_rank[r].push_back(i);
    }
    return groups;
}

}  // namespace

Int count_avoiders_bruteforce(const Pattern& sigma, int n, const BruteForceConfig& cfg) {
    check_guard(n, cfg);
    const int m = sigma.length();
    if (n < m) return factorial(n);
    const std::vector<int>& inv = sigma.inverse();

    auto block_count = [&](int job) {
        unsigned long long avoid = 0;
        enumerate_block(n, job + 1, [&](const int* pi) {
            for (int s = 0; s + m <= n; ++s)
                if (window_matches(pi + s, inv)) return;
            ++avoid;
        });
        return avoid;
    };
    auto parts = parallel_map<unsigned long long>(cfg.threads, n, block_count);
    Int total = 0;
    for (auto p : parts) total += static_cast<unsigned long>(p);
    return total;
}

std::vector<Int> count_avoiders_bruteforce_batch(std::span<const Pattern> patterns,
                                                 int n, const BruteForceConfig& cfg) {
    check_guard(n, cfg);
    const auto groups = build_groups(patterns);

    auto block_count = [&](int job) {
        std::vector<unsigned long long> contained(patterns.size(), 0);
        std::vector<size_t> hits;
        enumerate_block(n, job + 1, [&](const int* pi) {
            hits.clear();
            for (const RankGroup& g : groups) {
                if (n < g.m) continue;
                for (int s = 0; s + g.m <= n; ++s) {
                    const long r = lehmer_rank(pi + s, g.m, g.fact.data());
                    auto it = g.by_rank.find(r);
                    if (it == g.by_rank.end()) continue;
                    for (size_t idx : it->second) hits.push_back(idx);
                }
            }
            std::sort(hits.begin(), hits.end());
            hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
            for (size_t idx : hits) ++contained[idx];
        });
        return contained;
    };

    std::vector<Int> avoiders(patterns.size(), factorial(n));
    if (n == 0) return avoiders;
    auto parts = parallel_map<std::vector<unsigned long long>>(cfg.threads, n, block_count);
    for (const auto& part : parts)
        for (size_t i = 0; i < patterns.size(); ++i)
            avoiders[i] -= static_cast<unsigned long>(part[i]);
    return avoiders;
}

std::map<long, Int> occurrence_histogram_bruteforce(const Pattern& sigma, int n,
                                                    const BruteForceConfig& cfg) {
    check_guard(n, cfg);
    const int m = sigma.length();
    const std::vector<int>& inv = sigma.inverse();

    auto block_hist = [&](int job) {
        std::unordered_map<long, unsigned long long> h;
        enumerate_block(n, job + 1, [&](const int* pi) {
            long c = 0;
            for (int s = 0; s + m <= n; ++s) c += window_matches(pi + s, inv);
            ++h[c];
        });
        return h;
    };

    std::map<long, Int> hist;
    if (n == 0 || n < m) {
        hist[0] = factorial(n);
        return hist;
    }
    auto parts = parallel_map<std::unordered_map<long, unsigned long long>>(
        cfg.threads, n, block_hist);
    for (const auto& part : parts)
        for (const auto& [c, cnt] : part) hist[c] += static_cast<unsigned long>(cnt);
    return hist;
}

std::vector<Int> total_occurrences_batch(std::span<const Pattern> patterns, int n,
                                         const BruteForceConfig& cfg) {
    check_guard(n, cfg);
    const auto groups = build_groups(patterns);

    auto block_count = [&](int job) {
        std::vector<unsigned long long> total(patterns.size(), 0);
        enumerate_block(n, job + 1, [&](const int* pi) {
            for (const RankGroup& g : groups) {
                if (n < g.m) continue;
                for (int s = 0; s + g.m <= n; ++s) {
                    const long r = lehmer_rank(pi + s, g.m, g.fact.data());
                    auto it = g.by_rank.find(r);
                    if (it == g.by_rank.end()) continue;
                    for (size_t idx : it->second) ++total[idx];
                }
            }
        });
        return total;
    };

    std::vector<Int> totals(patterns.size(), 0);
    if (n == 0) return totals;
    auto parts = parallel_map<std::vector<unsigned long long>>(cfg.threads, n, block_count);
    for (const auto& part : parts)
        for (size_t i = 0; i < patterns.size(); ++i)
            totals[i] += static_cast<unsigned long>(part[i]);
    return totals;
}

}  // namespace cpk
