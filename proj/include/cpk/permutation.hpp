#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cpk/ints.hpp"

namespace cpk {

// A permutation of {1,...,n} in one-line notation, 1-based values.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> entries);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(entries_.size()); }
    // value at position i, 0-based position, 1-based value
    int at(int i) const { return entries_[static_cast<size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

    std::string str() const;

private:
    std::vector<int> entries_;
};

// Rank relabeling: smallest entry -> 1, second smallest -> 2, ...
// Entries must be distinct; duplicates raise invalid_input_error.
Permutation reduce(const std::vector<int>& word);

// A consecutive pattern: a permutation of length m >= 2 together with its
// cached inverse and overlap set. Immutable, cheap to copy.
class Pattern {
public:
    explicit Pattern(Permutation perm);
    explicit Pattern(const std::string& text) : Pattern(parse(text)) {}

    static Permutation parse(const std::string& text);

    int length() const { return perm_.size(); }
    const Permutation& perm() const { return perm_; }
    // inverse[v-1] = position (1-based) of value v
    const std::vector<int>& inverse() const { return inverse_; }
    // sorted distances i with 1 <= i < m at which two occurrences can start
    const std::vector<int>& overlaps() const { return overlaps_; }

    bool is_monotone() const;

    bool operator==(const Pattern& o) const { return perm_ == o.perm_; }
    auto operator<=>(const Pattern& o) const { return perm_ <=> o.perm_; }

    std::string str() const { return perm_.str(); }

private:
    Permutation perm_;
    std::vector<int> inverse_;
    std::vector<int> overlaps_;
};

Pattern reverse(const Pattern& sigma);
Pattern complement(const Pattern& sigma);

// All distinct images of sigma under {id, reverse, complement, both}.
std::vector<Pattern> symmetry_orbit(const Pattern& sigma);

// The lexicographically smallest orbit member satisfying
// sigma_1 < sigma_m and sigma_1 + sigma_m <= m+1.
Pattern canonical_representative(const Pattern& sigma);

// Number of windows of pi whose reduction equals sigma.
long occurrences(const Pattern& sigma, const Permutation& pi);

std::string pattern_string(const Permutation& p);

// All m! patterns of length m in lexicographic order.
std::vector<Pattern> all_patterns(int m);

}  // namespace cpk
