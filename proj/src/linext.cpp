#include <unordered_map>

#include "cpk/poset.hpp"

namespace cpk {

namespace {

struct MaskHash {
    size_t operator()(std::uint64_t x) const {
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdull;
        x ^= x >> 33;
        return static_cast<size_t>(x);
    }
};

}  // namespace

Int count_linear_extensions(const Poset& p, const LinextConfig& cfg) {
    const int n = p.size();
    if (n > cfg.max_elements)
        throw resource_limit_error("poset has " + std::to_string(n) +
                                   " elements, ceiling is " + std::to_string(cfg.max_elements));
    if (n == 0) return 1;

    const std::uint64_t full = (n == 64) ? ~0ull : ((1ull << n) - 1);
    std::unordered_map<std::uint64_t, Int, MaskHash> memo;
    memo.reserve(1024);

    // rec(remaining) = linear extensions of the restriction to `remaining`.
    // Peeling minimal elements keeps every visited mask an up-set, so the
    // state space is the ideal lattice rather than all 2^n subsets.
    auto rec = [&](auto&& self, std::uint64_t remaining) -> const Int& {
        auto it = memo.find(remaining);
        if (it != memo.end()) return it->second;
        Int total = 0;
        if (remaining == 0) {
            total = 1;
        } else {
            for (std::uint64_t rest = remaining; rest;) {
                const int v = __builtin_ctzll(rest);
                rest &= rest - 1;
                if ((p.pred_mask(v) & remaining) == 0)
                    total += self(self, remaining & ~(1ull << v));
            }
        }
        return memo.emplace(remaining, std::move(total)).first->second;
    };
    return rec(rec, full);
}

bool is_linear_extension(const Poset& p, const Permutation& pi) {
    if (pi.size() != p.size())
        throw invalid_input_error("assignment length does not match poset size");
    for (auto [a, b] : p.covers())
        if (pi.at(a) >= pi.at(b)) return false;
    return true;
}

}  // namespace cpk
