#include "cpk/poset.hpp"

namespace cpk {

Poset::Poset(int n, const std::vector<std::pair<int, int>>& less) : n_(n) {
    if (n < 0 || n > 64) throw invalid_poset_error("poset size must be in [0, 64]");
    succ_.assign(static_cast<size_t>(n), 0);
    pred_.assign(static_cast<size_t>(n), 0);
    for (auto [a, b] : less) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw invalid_poset_error("relation endpoint out of range");
        if (a != b) succ_[static_cast<size_t>(a)] |= 1ull << b;
    }
    // Warshall closure on bitmask rows.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if ((succ_[static_cast<size_t>(i)] >> k) & 1u)
                succ_[static_cast<size_t>(i)] |= succ_[static_cast<size_t>(k)];
    for (int i = 0; i < n; ++i) {
        if ((succ_[static_cast<size_t>(i)] >> i) & 1u)
            throw invalid_poset_error("relation contains a cycle");
        for (int j = 0; j < n; ++j)
            if ((succ_[static_cast<size_t>(i)] >> j) & 1u)
                pred_[static_cast<size_t>(j)] |= 1ull << i;
    }
    // a covers b iff a < b with nothing strictly between.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (this->less(a, b) && (succ_[static_cast<size_t>(a)] & pred_[static_cast<size_t>(b)]) == 0)
                covers_.emplace_back(a, b);
}

bool Poset::is_chain() const {
    for (int v = 0; v < n_; ++v) {
        const int comparable =
            __builtin_popcountll(pred_[static_cast<size_t>(v)] | succ_[static_cast<size_t>(v)]);
        if (comparable != n_ - 1) return false;
    }
    return true;
}

}  // namespace cpk
