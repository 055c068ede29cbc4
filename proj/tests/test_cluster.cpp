#include <doctest.h>

#include <algorithm>
#include <map>

#include "cpk/analysis.hpp"
#include "cpk/cluster.hpp"

using namespace cpk;

TEST_CASE("overlap sets") {
    CHECK(Pattern("14253").overlaps() == std::vector<int>{2, 4});
    CHECK(Pattern("132").overlaps() == std::vector<int>{2});
    CHECK(Pattern("1234").overlaps() == std::vector<int>{1, 2, 3});
    CHECK(Pattern("1324").overlaps() == std::vector<int>{2, 3});
    CHECK(overlap_set(Pattern("14253")).m == 5);
}

TEST_CASE("overlap set structure for every pattern up to length 7") {
    for (int m = 2; m <= 7; ++m)
        for (const Pattern& p : all_patterns(m)) {
            const auto& o = p.overlaps();
            CHECK(std::find(o.begin(), o.end(), m - 1) != o.end());
            const bool has1 = std::find(o.begin(), o.end(), 1) != o.end();
            CHECK(has1 == p.is_monotone());
        }
}

TEST_CASE("non-overlapping patterns") {
    for (const char* s : {"132", "1243", "1342", "21534", "34671285"})
        CHECK(is_nonoverlapping(Pattern(s)));
    CHECK(!is_nonoverlapping(Pattern("1234")));
    CHECK(!is_nonoverlapping(Pattern("1324")));
    CHECK(!is_nonoverlapping(Pattern("21")));  // needs m >= 3
}

TEST_CASE("min overlap") {
    CHECK(min_overlap(Pattern("2413")) == 2);
    CHECK(min_overlap(Pattern("54321")) == 1);
    CHECK(min_overlap(Pattern("1243")) == 3);
    // the length-4 patterns with p = 2, up to symmetry
    std::vector<std::string> p2;
    for (const Pattern& p : all_patterns(4))
        if (min_overlap(p) == 2 && canonical_representative(p) == p)
            p2.push_back(p.str());
    CHECK(p2 == std::vector<std::string>{"1324", "1423", "2143", "2413"});
}

TEST_CASE("index tuples") {
    CHECK(index_tuples(Pattern("132"), 5, 2) ==
          std::vector<ClusterIndexTuple>{ClusterIndexTuple{{1, 3}}});
    const auto t3 = index_tuples(Pattern("14253"), 11, 3);
    CHECK(std::find(t3.begin(), t3.end(), ClusterIndexTuple{{1, 3, 7}}) != t3.end());
    CHECK(index_tuples(Pattern("1324"), 9, 3) ==
          std::vector<ClusterIndexTuple>{ClusterIndexTuple{{1, 3, 6}},
                                         ClusterIndexTuple{{1, 4, 6}}});
    CHECK(index_tuples(Pattern("132"), 6, 2).empty());
    CHECK(index_tuples(Pattern("132"), 3, 1) ==
          std::vector<ClusterIndexTuple>{ClusterIndexTuple{{1}}});
}

TEST_CASE("cluster posets") {
    // the three chains of Q^{14253}_{1,3,7}
    const Poset q = cluster_poset(Pattern("14253"), ClusterIndexTuple{{1, 3, 7}});
    CHECK(q.size() == 11);
    CHECK(q.less(0, 2));   // pi_1 < pi_3
    CHECK(q.less(2, 4));   // pi_3 < pi_5
    CHECK(q.less(4, 1));   // pi_5 < pi_2
    CHECK(q.less(1, 3));   // pi_2 < pi_4
    CHECK(q.less(6, 10));  // pi_7 < pi_11
    CHECK(!q.less(1, 10));

    for (int m = 3; m <= 5; ++m) {
        const Pattern mono = monotone_pattern(m);
        for (int n = m; n <= m + 4; ++n)
            for (int k = 1; k <= 3; ++k)
                for (const auto& t : index_tuples(mono, n, k))
                    CHECK(cluster_poset(mono, t).is_chain());
    }

    // Q^{1243}_{1,4} is the 7-element two-chain poset with 4 extensions
    const Poset d2 = cluster_poset(Pattern("1243"), ClusterIndexTuple{{1, 4}});
    CHECK(d2.size() == 7);
    CHECK(count_linear_extensions(d2) == 4);
}

TEST_CASE("cluster numbers via linear extensions") {
    CHECK(cluster_number(Pattern("132"), 5, 2) == 3);
    CHECK(cluster_number(Pattern("2413"), 9, 3) == 108);
    CHECK(cluster_number(Pattern("1324"), 10, 3) == 1);
    for (const Pattern& p : all_patterns(4)) CHECK(cluster_number(p, 4, 1) == 1);
}

TEST_CASE("brute force cluster counts") {
    ClusterConfig cfg;
    CHECK(cluster_numbers_bruteforce(Pattern("132"), 5, 2, cfg) == 3);
    CHECK(cluster_numbers_bruteforce(Pattern("1423"), 7, 2, cfg) == 4);
    CHECK(cluster_numbers_bruteforce(Pattern("132"), 6, 2, cfg) == 0);
    cfg.brute_guard = 5;
    CHECK_THROWS_AS(cluster_numbers_bruteforce(Pattern("132"), 7, 3, cfg),
                    resource_limit_error);
}

TEST_CASE("the three 2-clusters of 132 at length 5") {
    // (13254;1,3), (14253;1,3), (15243;1,3)
    const Poset q = cluster_poset(Pattern("132"), ClusterIndexTuple{{1, 3}});
    CHECK(is_linear_extension(q, Permutation({1, 3, 2, 5, 4})));
    CHECK(is_linear_extension(q, Permutation({1, 4, 2, 5, 3})));
    CHECK(is_linear_extension(q, Permutation({1, 5, 2, 4, 3})));
    CHECK(!is_linear_extension(q, Permutation({2, 5, 1, 4, 3})));
}

TEST_CASE("linear extension route equals brute force for every length-4 pattern") {
    for (const Pattern& sigma : all_patterns(4)) {
        ClusterEngine engine(sigma);
        for (int k = 1; k <= 3; ++k)
            for (int n = engine.min_cluster_length(k);
                 n <= std::min(10, engine.max_cluster_length(k)); ++n)
                CHECK(engine.cluster_number(n, k) ==
                      cluster_numbers_bruteforce(sigma, n, k));
    }
}

TEST_CASE("cluster tables are symmetry invariant") {
    for (int m = 4; m <= 5; ++m)
        for (const Pattern& sigma : all_patterns(m)) {
            ClusterEngine a(sigma), b(reverse(sigma)), c(complement(sigma));
            for (int k = 1; k <= 3; ++k)
                for (int n = a.min_cluster_length(k);
                     n <= std::min(10, a.max_cluster_length(k)); ++n) {
                    CHECK(a.cluster_number(n, k) == b.cluster_number(n, k));
                    CHECK(a.cluster_number(n, k) == c.cluster_number(n, k));
                }
        }
}

TEST_CASE("d_k for non-overlapping patterns") {
    CHECK(d_k(Pattern("132"), 1) == 1);
    CHECK(d_k(Pattern("1243"), 2) == 4);
    CHECK(d_k(Pattern("1342"), 2) == 10);
    CHECK(d_k(Pattern("1342"), 3) == 280);
    CHECK_THROWS_AS(d_k(Pattern("1234"), 2), std::domain_error);
    CHECK_THROWS_AS(d_k(Pattern("1324"), 2), std::domain_error);
}

TEST_CASE("d_2 equals f(sigma_1, sigma_m)") {
    for (int m = 3; m <= 5; ++m)
        for (const Pattern& p : all_patterns(m))
            if (is_nonoverlapping(p))
                CHECK(d_k(p, 2) == f_ab(p.perm().at(0), p.perm().at(m - 1), m));
}

TEST_CASE("d_k depends only on the endpoints") {
    for (int m = 5; m <= 6; ++m) {
        std::map<std::pair<int, int>, std::vector<Int>> by_endpoints;
        for (const Pattern& p : all_patterns(m)) {
            if (!is_nonoverlapping(p)) continue;
            std::vector<Int> ds;
            for (int k = 1; k <= 4; ++k) ds.push_back(d_k(p, k));
            auto key = std::make_pair(p.perm().at(0), p.perm().at(m - 1));
            auto [it, inserted] = by_endpoints.try_emplace(key, ds);
            if (!inserted) CHECK(it->second == ds);
        }
    }
}

TEST_CASE("f closed form") {
    for (int m = 4; m <= 8; ++m) {
        CHECK(f_ab(1, 2, m) == binomial(2 * m - 3, m - 2));
        CHECK(f_ab(2, m - 1, m) == Int((m - 1)) * (m - 1));
        CHECK(f_ab(1, m - 2, m) == binomial(m + 1, 2));
        CHECK(f_ab(1, m - 1, m) == m);
    }
    CHECK_THROWS_AS(f_ab(0, 2, 5), invalid_input_error);
    CHECK_THROWS_AS(f_ab(1, 6, 5), invalid_input_error);
}
