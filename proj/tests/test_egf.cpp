#include <doctest.h>

#include <random>

#include "cpk/analysis.hpp"
#include "cpk/bruteforce.hpp"
#include "cpk/egf.hpp"

using namespace cpk;

TEST_CASE("s_1 is z^m/m!") {
    for (const char* s : {"132", "2413", "14253"}) {
        const Pattern p(s);
        const auto s1 = s_k_polynomial(p, 1);
        CHECK(s1.r.size() == 1);
        CHECK(s1.r.at(p.length()) == 1);
    }
}

TEST_CASE("s_2 support") {
    const auto s2_132 = s_k_polynomial(Pattern("132"), 2);
    CHECK(s2_132.r == std::map<int, Int>{{5, 3}});

    const auto s2_1324 = s_k_polynomial(Pattern("1324"), 2);
    CHECK(s2_1324.r == std::map<int, Int>{{6, 2}, {7, 1}});
}

TEST_CASE("omega coefficients") {
    ClusterEngine e(Pattern("132"));
    const EgfSeries w = omega_series(e, 5);
    CHECK(w.coeff == std::vector<Int>{1, -1, 0, 1, 0, -3});
    for (const char* s : {"12345", "25314"}) {
        ClusterEngine e5{Pattern(s)};
        const EgfSeries w5 = omega_series(e5, 4);
        CHECK(w5.at(2) == 0);
        CHECK(w5.at(3) == 0);
        CHECK(w5.at(4) == 0);
    }
}

TEST_CASE("monotone omega closed form") {
    const EgfSeries w3 = omega_monotone(3, 7);
    CHECK(w3.coeff == std::vector<Int>{1, -1, 0, 1, -1, 0, 1, -1});
    const EgfSeries w2 = omega_monotone(2, 4);
    CHECK(w2.coeff == std::vector<Int>{1, -1, 1, -1, 1});

    for (int m = 3; m <= 5; ++m) {
        ClusterEngine e(monotone_pattern(m));
        const EgfSeries from_clusters = omega_series(e, 12);
        const EgfSeries closed = omega_monotone(m, 12);
        CHECK(from_clusters.coeff == closed.coeff);
    }
}

TEST_CASE("avoider counts: small-n values") {
    for (const Pattern& p : all_patterns(4)) {
        const auto alpha = avoider_counts(p, 4);
        for (int n = 0; n < 4; ++n) CHECK(alpha[static_cast<size_t>(n)] == factorial(n));
        CHECK(alpha[4] == factorial(4) - 1);
    }
}

TEST_CASE("avoider counts match brute force for lengths 3 and 4") {
    std::vector<Pattern> patterns = all_patterns(3);
    for (const Pattern& p : all_patterns(4)) patterns.push_back(p);
    const int N = 9;
    std::vector<std::vector<Int>> brute(patterns.size(), std::vector<Int>());
    for (int n = 0; n <= N; ++n) {
        const auto counts = count_avoiders_bruteforce_batch(patterns, n);
        for (size_t i = 0; i < patterns.size(); ++i) brute[i].push_back(counts[i]);
    }
    for (size_t i = 0; i < patterns.size(); ++i)
        CHECK(avoider_counts(patterns[i], N) == brute[i]);
}

TEST_CASE("avoider counts match brute force for a few length-5 patterns") {
    for (const char* s : {"14253", "13254", "21534", "25134", "12345"}) {
        const Pattern p(s);
        const auto alpha = avoider_counts(p, 8);
        for (int n = 0; n <= 8; ++n)
            CHECK(alpha[static_cast<size_t>(n)] == count_avoiders_bruteforce(p, n));
    }
}

TEST_CASE("avoider counts are symmetry invariant") {
    for (const Pattern& p : all_patterns(5)) {
        const auto a = avoider_counts(p, 10);
        CHECK(a == avoider_counts(reverse(p), 10));
        CHECK(a == avoider_counts(complement(p), 10));
    }
}

TEST_CASE("avoider counts lie in [0, n!]") {
    for (const char* s : {"132", "4231", "14253", "34671285"}) {
        const auto alpha = avoider_counts(Pattern(s), 12);
        for (int n = 0; n <= 12; ++n) {
            CHECK(alpha[static_cast<size_t>(n)] >= 0);
            CHECK(alpha[static_cast<size_t>(n)] <= factorial(n));
        }
    }
}

TEST_CASE("occurrence distribution rows") {
    const OccurrenceRow r = occurrence_distribution(Pattern("132"), 3);
    CHECK(r.count == std::vector<Int>{5, 1});

    // descents: row sums to n!, weighted sum is (n-1) n!/2
    for (int n = 2; n <= 8; ++n) {
        const OccurrenceRow row = occurrence_distribution(Pattern("21"), n);
        Int total = 0, weighted = 0;
        for (size_t c = 0; c < row.count.size(); ++c) {
            total += row.count[c];
            weighted += Int(static_cast<long>(c)) * row.count[c];
        }
        CHECK(total == factorial(n));
        CHECK(weighted == Int(n - 1) * factorial(n) / 2);
        const auto hist = occurrence_histogram_bruteforce(Pattern("21"), n);
        for (size_t c = 0; c < row.count.size(); ++c) {
            const auto it = hist.find(static_cast<long>(c));
            CHECK((it == hist.end() ? Int(0) : it->second) == row.count[c]);
        }
    }
}

TEST_CASE("occurrence distribution matches brute force histograms") {
    for (const char* s : {"1324", "2413", "132"}) {
        const Pattern p(s);
        for (int n : {6, 7}) {
            const OccurrenceRow row = occurrence_distribution(p, n);
            const auto hist = occurrence_histogram_bruteforce(p, n);
            Int total = 0;
            for (size_t c = 0; c < row.count.size(); ++c) {
                total += row.count[c];
                const auto it = hist.find(static_cast<long>(c));
                CHECK((it == hist.end() ? Int(0) : it->second) == row.count[c]);
            }
            CHECK(total == factorial(n));
        }
    }
}

TEST_CASE("occurrence distribution marginal is pattern independent") {
    for (const char* s : {"1234", "1342", "2143"}) {
        for (int n = 4; n <= 9; ++n) {
            const OccurrenceRow row = occurrence_distribution(Pattern(s), n);
            Int weighted = 0;
            for (size_t c = 0; c < row.count.size(); ++c)
                weighted += Int(static_cast<long>(c)) * row.count[c];
            CHECK(weighted == Int(n - 4 + 1) * factorial(n) / factorial(4));
        }
    }
}

TEST_CASE("default series orders separate the known class counts") {
    CHECK(default_series_order(3) == 14);
    CHECK(default_series_order(4) == 14);
    CHECK(default_series_order(5) == 13);
    CHECK(default_series_order(6) == 15);
}
