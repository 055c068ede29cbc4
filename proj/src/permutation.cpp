#include "cpk/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace cpk {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const int n = size();
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : entries_) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)])
            throw invalid_input_error("entries are not a permutation of {1..n}");
        seen[static_cast<size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> e(static_cast<size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    return Permutation(std::move(e));
}

std::string Permutation::str() const { return pattern_string(*this); }

std::string pattern_string(const Permutation& p) {
    std::ostringstream out;
    const bool commas = p.size() > 9;
    for (int i = 0; i < p.size(); ++i) {
        if (commas && i) out << ',';
        out << p.at(i);
    }
    return out.str();
}

Permutation reduce(const std::vector<int>& word) {
    if (word.empty()) throw invalid_input_error("reduce: empty word");
    std::vector<int> sorted = word;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw invalid_input_error("reduce: duplicate entries");
    std::vector<int> out(word.size());
    for (size_t i = 0; i < word.size(); ++i) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), word[i]);
        out[i] = static_cast<int>(it - sorted.begin()) + 1;
    }
    return Permutation(std::move(out));
}

namespace {

// i is an overlap of sigma iff the length-(m-i) suffix and prefix reduce
// to the same pattern.
std::vector<int> compute_overlaps(const Permutation& p) {
    const int m = p.size();
    std::vector<int> result;
    for (int i = 1; i < m; ++i) {
        const int len = m - i;
        std::vector<int> prefix(p.entries().begin(), p.entries().begin() + len);
        std::vector<int> suffix(p.entries().begin() + i, p.entries().end());
        if (reduce(prefix) == reduce(suffix)) result.push_back(i);
    }
    return result;
}

}  // namespace

Pattern::Pattern(Permutation perm) : perm_(std::move(perm)) {
    const int m = perm_.size();
    if (m < 2) throw invalid_input_error("pattern length must be >= 2");
    inverse_.resize(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) inverse_[static_cast<size_t>(perm_.at(i)) - 1] = i + 1;
    overlaps_ = compute_overlaps(perm_);
}

Permutation Pattern::parse(const std::string& text) {
    if (text.empty()) throw invalid_input_error("empty pattern string");
    std::vector<int> entries;
    if (text.find(',') != std::string::npos) {
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t next = text.find(',', pos);
            std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
            int v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || ptr != tok.data() + tok.size())
                throw invalid_input_error("bad pattern entry: '" + tok + "'");
            entries.push_back(v);
            if (next == std::string::npos) break;
            pos = next + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw invalid_input_error("bad pattern digit: '" + std::string(1, c) + "'");
            entries.push_back(c - '0');
        }
    }
    try {
        return Permutation(std::move(entries));
    } catch (const invalid_input_error&) {
        throw invalid_input_error("not a permutation: '" + text + "'");
    }
}

bool Pattern::is_monotone() const {
    const int m = length();
    bool up = true, down = true;
    for (int i = 0; i + 1 < m; ++i) {
        up = up && perm_.at(i) < perm_.at(i + 1);
        down = down && perm_.at(i) > perm_.at(i + 1);
    }
    return up || down;
}

Pattern reverse(const Pattern& sigma) {
    std::vector<int> e(sigma.perm().entries().rbegin(), sigma.perm().entries().rend());
    return Pattern(Permutation(std::move(e)));
}

Pattern complement(const Pattern& sigma) {
    const int m = sigma.length();
    std::vector<int> e;
    e.reserve(static_cast<size_t>(m));
    for (int v : sigma.perm().entries()) e.push_back(m + 1 - v);
    return Pattern(Permutation(std::move(e)));
}

std::vector<Pattern> symmetry_orbit(const Pattern& sigma) {
    std::vector<Pattern> orbit{sigma, reverse(sigma), complement(sigma),
                               complement(reverse(sigma))};
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

Pattern canonical_representative(const Pattern& sigma) {
    const int m = sigma.length();
    const Pattern* best = nullptr;
    std::vector<Pattern> orbit = symmetry_orbit(sigma);
    for (const Pattern& p : orbit) {
        const int first = p.perm().at(0), last = p.perm().at(m - 1);
        if (first < last && first + last <= m + 1 && (!best || p < *best)) best = &p;
    }
    // Every orbit contains a qualifying member (swap reverse/complement as
    // needed), so best is always set.
    return *best;
}

long occurrences(const Pattern& sigma, const Permutation& pi) {
    const int m = sigma.length(), n = pi.size();
    if (n < m) return 0;
    const std::vector<int>& inv = sigma.inverse();
    long count = 0;
    for (int start = 0; start + m <= n; ++start) {
        // window matches iff pi[start + inv[0]-1] < ... < pi[start + inv[m-1]-1]
        bool ok = true;
        for (int j = 0; j + 1 < m; ++j) {
            if (pi.at(start + inv[static_cast<size_t>(j)] - 1) >=
                pi.at(start + inv[static_cast<size_t>(j) + 1] - 1)) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    }
    return count;
}

std::vector<Pattern> all_patterns(int m) {
    std::vector<int> e(static_cast<size_t>(m));
    std::iota(e.begin(), e.end(), 1);
    std::vector<Pattern> out;
    do {
        out.emplace_back(Permutation(e));
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

}  // namespace cpk
