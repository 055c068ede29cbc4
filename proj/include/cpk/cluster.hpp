#pragma once

#include <map>
#include <vector>

#include "cpk/ints.hpp"
#include "cpk/permutation.hpp"
#include "cpk/poset.hpp"

namespace cpk {

// O_sigma: distances i with 1 <= i < m at which two occurrences of sigma
// can start. m-1 is always a member; 1 is a member iff sigma is monotone.
struct OverlapSet {
    int m = 0;
    std::vector<int> members;  // sorted ascending
};

OverlapSet overlap_set(const Pattern& sigma);
bool is_nonoverlapping(const Pattern& sigma);
int min_overlap(const Pattern& sigma);

// Starting positions (i_1,...,i_k) of the marked occurrences in a cluster:
// i_1 = 1, consecutive gaps in O_sigma. Cluster length is i_k + m - 1.
struct ClusterIndexTuple {
    std::vector<int> indices;

    int k() const { return static_cast<int>(indices.size()); }
    int cluster_length(int m) const { return indices.back() + m - 1; }
    bool operator==(const ClusterIndexTuple&) const = default;
};

// All tuples with i_k = n - m + 1, lexicographic order; empty when none.
std::vector<ClusterIndexTuple> index_tuples(const Pattern& sigma, int n, int k);

// The partial order on cluster entries pi_1..pi_{i_k+m-1} generated by the
// k occurrence chains pi_{inv_1+i_j-1} < ... < pi_{inv_m+i_j-1}.
// Ground element t represents pi_{t+1}.
Poset cluster_poset(const Pattern& sigma, const ClusterIndexTuple& tuple);

struct ClusterConfig {
    int brute_guard = 10;  // cluster_numbers_bruteforce cap on n
    LinextConfig linext;
    int threads = 1;  // per-tuple linear extension counts
};

// Exact cluster numbers r_{n,k} for one pattern, lazily memoized per (n,k).
// Not thread safe; use one engine per worker.
class ClusterEngine {
public:
    explicit ClusterEngine(Pattern sigma, ClusterConfig cfg = {});

    const Pattern& pattern() const { return sigma_; }
    const ClusterConfig& config() const { return cfg_; }
    int length() const { return sigma_.length(); }

    // Sum of linear extension counts over all tuples in I_{n,k}.
    const Int& cluster_number(int n, int k);

    // Smallest / largest length a k-cluster can have.
    int min_cluster_length(int k) const;
    int max_cluster_length(int k) const;

private:
    Pattern sigma_;
    ClusterConfig cfg_;
    std::map<std::pair<int, int>, Int> memo_;
};

// Convenience single-shot wrappers around a throwaway engine.
Int cluster_number(const Pattern& sigma, int n, int k, const ClusterConfig& cfg = {});

// Enumerates S_n and all tuples in I_{n,k}; counts pairs (pi; tuple) where
// every marked window reduces to sigma. Must equal cluster_number.
Int cluster_numbers_bruteforce(const Pattern& sigma, int n, int k,
                               const ClusterConfig& cfg = {});

// As above but restricted to one tuple (oracle for single-poset counts).
Int cluster_numbers_bruteforce_tuple(const Pattern& sigma,
                                     const ClusterIndexTuple& tuple,
                                     const ClusterConfig& cfg = {});

// d_k = r_{k(m-1)+1, k} for non-overlapping sigma; every k-cluster of a
// non-overlapping pattern has that length. Domain error otherwise.
Int d_k(const Pattern& sigma, int k, const ClusterConfig& cfg = {});

// f(a,b) = C(a+b-2, a-1) C(2m-a-b, m-b); equals d_2 for non-overlapping
// patterns with endpoints (a, b).
Int f_ab(int a, int b, int m);

}  // namespace cpk
