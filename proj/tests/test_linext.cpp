#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cpk/analysis.hpp"
#include "cpk/cluster.hpp"
#include "cpk/poset.hpp"
#include "linext_oracle.hpp"

using namespace cpk;

namespace {

Poset chain(int n) {
    std::vector<std::pair<int, int>> less;
    for (int i = 0; i + 1 < n; ++i) less.emplace_back(i, i + 1);
    return Poset(n, less);
}

Poset random_poset(std::mt19937& rng, int n) {
    std::vector<int> label(static_cast<size_t>(n));
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);
    std::vector<std::pair<int, int>> less;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() % 10 < 3)
                less.emplace_back(label[static_cast<size_t>(i)],
                                  label[static_cast<size_t>(j)]);
    return Poset(n, less);
}

}  // namespace

TEST_CASE("chains and antichains") {
    for (int n = 0; n <= 10; ++n) CHECK(count_linear_extensions(chain(n)) == 1);
    for (int n = 0; n <= 8; ++n)
        CHECK(count_linear_extensions(Poset(n)) == factorial(n));
}

TEST_CASE("closure, cycles, covers") {
    const Poset p(3, {{0, 1}, {1, 2}});
    CHECK(p.less(0, 2));
    CHECK(!p.less(2, 0));
    CHECK(p.covers().size() == 2);  // 0<2 is implied, not a cover
    CHECK(p.is_chain());
    CHECK_THROWS_AS(Poset(3, {{0, 1}, {1, 2}, {2, 0}}), invalid_poset_error);
    CHECK_THROWS_AS(Poset(2, {{0, 5}}), invalid_poset_error);
}

TEST_CASE("element ceiling is enforced") {
    LinextConfig cfg;
    CHECK_THROWS_AS(count_linear_extensions(chain(27), cfg), resource_limit_error);
    cfg.max_elements = 40;
    CHECK(count_linear_extensions(chain(27), cfg) == 1);
}

TEST_CASE("two-chain cluster posets match the closed forms") {
    for (int m = 4; m <= 6; ++m) {
        // tau = 12...(m-2)m(m-1): d_2 = m
        const ClusterIndexTuple t{{1, m}};
        const Pattern tau = tau_pattern(m);
        CHECK(count_linear_extensions(cluster_poset(tau, t)) == m);
        // upsilon = 134...m2: d_2 = C(2m-3, m-2)
        const Pattern ups = upsilon_pattern(m);
        CHECK(count_linear_extensions(cluster_poset(ups, t)) == binomial(2 * m - 3, m - 2));
    }
}

TEST_CASE("is_linear_extension") {
    const Pattern sigma("14253");
    const ClusterIndexTuple t{{1, 3, 7}};
    const Poset q = cluster_poset(sigma, t);
    CHECK(q.size() == 11);
    CHECK(is_linear_extension(q, Permutation({1, 6, 2, 8, 3, 11, 4, 9, 5, 10, 7})));
    CHECK(!is_linear_extension(q, Permutation({11, 6, 2, 8, 3, 1, 4, 9, 5, 10, 7})));

    CHECK(!is_linear_extension(chain(3), Permutation({3, 2, 1})));
    CHECK(is_linear_extension(Poset(3), Permutation({3, 2, 1})));
    CHECK_THROWS_AS(is_linear_extension(chain(3), Permutation({2, 1})),
                    invalid_input_error);
}

TEST_CASE("counts match exhaustive enumeration on small posets") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Poset p = random_poset(rng, n);
        CHECK(count_linear_extensions(p) == count_linear_extensions_oracle(p));
        CHECK(count_linear_extensions(p) >= 1);
        CHECK(count_linear_extensions(p) <= factorial(n));
        CHECK((count_linear_extensions(p) == 1) == p.is_chain());
    }
}

TEST_CASE("counting is invariant under relabeling") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const Poset p = random_poset(rng, n);
        std::vector<int> relabel(static_cast<size_t>(n));
        std::iota(relabel.begin(), relabel.end(), 0);
        std::shuffle(relabel.begin(), relabel.end(), rng);
        std::vector<std::pair<int, int>> less;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (p.less(a, b))
                    less.emplace_back(relabel[static_cast<size_t>(a)],
                                      relabel[static_cast<size_t>(b)]);
        CHECK(count_linear_extensions(Poset(n, less)) == count_linear_extensions(p));
    }
}

TEST_CASE("Q^{14253}_{1,3,7} count matches brute force over S_11") {
    const Pattern sigma("14253");
    const ClusterIndexTuple t{{1, 3, 7}};
    const Int via_dp = count_linear_extensions(cluster_poset(sigma, t));
    ClusterConfig cfg;
    cfg.brute_guard = 11;
    CHECK(via_dp == cluster_numbers_bruteforce_tuple(sigma, t, cfg));
}
