#pragma once

#include <map>
#include <span>
#include <vector>

#include "cpk/ints.hpp"
#include "cpk/permutation.hpp"

namespace cpk {

struct BruteForceConfig {
    int guard = 11;   // largest n enumerated exhaustively
    int threads = 1;  // S_n partitioned by first entry across workers
};

// Exhaustive count of sigma-avoiders in S_n.
Int count_avoiders_bruteforce(const Pattern& sigma, int n,
                              const BruteForceConfig& cfg = {});

// One sweep of S_n shared by many patterns; result[i] matches
// count_avoiders_bruteforce(patterns[i], n).
std::vector<Int> count_avoiders_bruteforce_batch(std::span<const Pattern> patterns,
                                                 int n,
                                                 const BruteForceConfig& cfg = {});

// c -> number of pi in S_n with exactly c occurrences of sigma.
std::map<long, Int> occurrence_histogram_bruteforce(const Pattern& sigma, int n,
                                                    const BruteForceConfig& cfg = {});

// Total occurrences of each pattern over all of S_n, one sweep.
// Equals (n-m+1) n!/m! for every pattern when n >= m.
std::vector<Int> total_occurrences_batch(std::span<const Pattern> patterns, int n,
                                         const BruteForceConfig& cfg = {});

}  // namespace cpk
