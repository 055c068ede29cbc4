#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cpk/ints.hpp"
#include "cpk/permutation.hpp"

namespace cpk {

struct invalid_poset_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A strict partial order on ground elements 0..n-1, n <= 64. Built from an
// arbitrary relation list; the transitive closure is computed once and kept
// as per-element predecessor/successor bitmasks, alongside the cover list.
class Poset {
public:
    explicit Poset(int n, const std::vector<std::pair<int, int>>& less = {});

    int size() const { return n_; }
    bool less(int a, int b) const { return (succ_[static_cast<size_t>(a)] >> b) & 1u; }
    std::uint64_t pred_mask(int v) const { return pred_[static_cast<size_t>(v)]; }
    std::uint64_t succ_mask(int v) const { return succ_[static_cast<size_t>(v)]; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    bool is_chain() const;

private:
    int n_;
    std::vector<std::uint64_t> pred_;
    std::vector<std::uint64_t> succ_;
    std::vector<std::pair<int, int>> covers_;
};

struct LinextConfig {
    // Default sized for the largest poset the stock suites need (the
    // three-chain posets on 22 elements); analysis raises it for deep
    // cluster expansions. Hard cap 64 (bitmask ground set).
    int max_elements = 26;
};

// Exact number of linear extensions, dynamic programming over order
// ideals reached from the full set by repeatedly deleting minimal
// elements. Only valid ideals are materialized.
Int count_linear_extensions(const Poset& p, const LinextConfig& cfg = {});

// true iff a < b in p implies pi assigns a a smaller value than b.
// pi assigns values 1..n to ground positions 0..n-1.
bool is_linear_extension(const Poset& p, const Permutation& pi);

}  // namespace cpk
