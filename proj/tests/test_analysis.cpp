#include <doctest.h>

#include <algorithm>

#include "cpk/analysis.hpp"
#include "cpk/bruteforce.hpp"
#include "cpk/report_io.hpp"

using namespace cpk;

TEST_CASE("quartic constant c") {
    const RootBracket c = smallest_root_of_quartic_c();
    CHECK(c.width() <= Rat(1, 1000000));
    // agreement with the rounded reference value 1.051
    CHECK(c.lo > Rat(1051, 1000) - Rat(1, 2000));
    CHECK(c.hi < Rat(1051, 1000) + Rat(1, 2000));
    const RatPoly p(std::vector<Rat>{Rat(1), Rat(-1), Rat(0), Rat(0), Rat(1, 24)});
    CHECK(p(c.lo) > 0);
    CHECK(p(c.hi) < 0);
}

TEST_CASE("constant C from the 132 bracket") {
    const GrowthBracket& C = constant_C_bracket();
    CHECK(C.ok());
    CHECK(C.lo > 1);
    CHECK(C.width() <= Rat(1, 1000));
    // agreement with the rounded reference value 1.276
    CHECK(C.lo > rat(1276, 1000) - Rat(1, 2000));
    CHECK(C.hi < rat(1276, 1000) + Rat(1, 2000));
    // c sits strictly below C
    const RootBracket c = smallest_root_of_quartic_c();
    CHECK(c.hi < C.lo);
}

TEST_CASE("certified brackets stay inside the proven windows") {
    const Rat C_hi = constant_C_upper();
    const RootBracket c = smallest_root_of_quartic_c();
    // rho^-1 <= C: the bracket must start below the C upper bound, and for
    // the 132 class (whose root IS C) may exceed it only by its own slack
    for (const char* s : {"123", "132", "213"}) {
        const GrowthBracket b = bracket_growth_rate(Pattern(s));
        CHECK(b.ok());
        CHECK(b.lo > 1);
        CHECK(b.lo <= C_hi);
        CHECK(b.hi <= Rat(7, 5));
    }
    CHECK(bracket_growth_rate(Pattern("123")).hi < constant_C_bracket().lo);
    for (const char* s : {"1234", "2413", "1342", "14253", "21534"}) {
        const GrowthBracket b = bracket_growth_rate(Pattern(s));
        CHECK(b.ok());
        CHECK(b.lo > 1);
        CHECK(b.hi < c.hi);
    }
}

TEST_CASE("123 has more avoiders than 132") {
    const GrowthBracket b123 = bracket_growth_rate(Pattern("123"));
    const GrowthBracket b132 = bracket_growth_rate(Pattern("132"));
    CHECK(b123.hi < b132.lo);
    CHECK(compare_growth(Pattern("132"), Pattern("123")) ==
          GrowthOrdering::tau_more_avoided);
    CHECK(compare_growth(Pattern("123"), Pattern("132")) ==
          GrowthOrdering::sigma_more_avoided);
}

TEST_CASE("heuristic mode agrees with the certified bracket") {
    for (const char* s : {"132", "1234", "1342", "2413"}) {
        BracketOptions h;
        h.mode = BracketMode::heuristic;
        const GrowthBracket heuristic = bracket_growth_rate(Pattern(s), h);
        const GrowthBracket certified = bracket_growth_rate(Pattern(s));
        CHECK(heuristic.ok());
        CHECK(heuristic.mode == BracketMode::heuristic);
        // intervals overlap
        CHECK(heuristic.lo <= certified.hi);
        CHECK(certified.lo <= heuristic.hi);
    }
}

TEST_CASE("growth bracket rejects short patterns") {
    CHECK_THROWS_AS(bracket_growth_rate(Pattern("21")), std::domain_error);
}

TEST_CASE("compare_growth orderings") {
    CHECK(compare_growth(Pattern("1234"), Pattern("1243")) ==
          GrowthOrdering::sigma_more_avoided);
    CHECK(compare_growth(Pattern("1243"), Pattern("1342")) ==
          GrowthOrdering::tau_more_avoided);
    CHECK(compare_growth(Pattern("2413"), Pattern("2413")) ==
          GrowthOrdering::indistinguishable);
}

TEST_CASE("classification of lengths 3 and 4") {
    const EquivClassReport r3 = classify(3);
    CHECK(r3.classes.size() == 2);
    CHECK(r3.classes[0].representative.str() == "123");
    CHECK(r3.classes[1].representative.str() == "132");
    CHECK(!r3.warning);

    const EquivClassReport r4 = classify(4);
    CHECK(r4.classes.size() == 7);
    std::vector<std::string> reps;
    for (const auto& c : r4.classes) reps.push_back(c.representative.str());
    CHECK(reps == std::vector<std::string>{"1234", "1243", "1324", "1342", "1423",
                                           "2143", "2413"});
    size_t total = 0;
    for (const auto& c : r4.classes) total += c.members.size();
    CHECK(total == 24);
    // 1432 lands in the class of 1342 (same endpoints, both non-overlapping)
    const EquivClass* c1432 = r4.class_of(Pattern("1432"));
    REQUIRE(c1432 != nullptr);
    CHECK(c1432->representative.str() == "1342");
}

TEST_CASE("classification never merges when the order grows") {
    size_t previous = 0;
    for (int N = 4; N <= 10; ++N) {
        const EquivClassReport r = classify(4, N);
        CHECK(r.classes.size() >= previous);
        previous = r.classes.size();
    }
}

TEST_CASE("symmetric images share a class") {
    const EquivClassReport r = classify(4);
    for (const auto& cls : r.classes)
        for (const Pattern& p : cls.members) {
            CHECK(r.class_of(reverse(p)) == &cls);
            CHECK(r.class_of(complement(p)) == &cls);
        }
}

TEST_CASE("census at length 5") {
    const CensusReport r = census_nonoverlapping(5);
    CHECK(r.nonoverlap_count == 48);
    CHECK(r.ratio == Rat(2, 5));
    CHECK(r.ratio_at_least_0364);
    CHECK(r.delta_size == 5);
    CHECK(r.delta_expected == 5);
    CHECK(r.delta_size_matches);
    REQUIRE(r.d2_closed_form_verified.has_value());
    CHECK(*r.d2_closed_form_verified);

    for (const auto& e : r.pairs) {
        CHECK(e.witness_nonoverlapping);
        CHECK(e.witness_endpoints_ok);
    }
    auto find_pair = [&](int a, int b) {
        for (const auto& e : r.pairs)
            if (e.a == a && e.b == b) return &e;
        return static_cast<const DeltaPairEntry*>(nullptr);
    };
    CHECK(find_pair(1, 2)->extreme == "largest");
    CHECK(find_pair(1, 2)->d2 == 35);
    CHECK(find_pair(2, 3)->extreme == "second-largest");
    CHECK(find_pair(2, 3)->d2 == 30);
    CHECK(find_pair(1, 3)->extreme == "second-smallest");
    CHECK(find_pair(1, 3)->d2 == 15);
    CHECK(find_pair(1, 4)->extreme == "smallest");
    CHECK(find_pair(1, 4)->d2 == 5);
    // the extreme witnesses are the named patterns
    CHECK(find_pair(1, 2)->witness == upsilon_pattern(5));
    CHECK(find_pair(1, 4)->witness == tau_pattern(5));
}

TEST_CASE("census delta sizes and witnesses up to length 8") {
    for (int m = 5; m <= 8; ++m) {
        const CensusReport r = census_nonoverlapping(m);
        CHECK(r.delta_size_matches);
        CHECK(Int(r.delta_size) == (m * m - 4) / 4);
        for (const auto& e : r.pairs) {
            CHECK(e.endpoints_realizable);
            CHECK(e.witness_nonoverlapping);
            CHECK(e.witness_endpoints_ok);
        }
    }
    CHECK_THROWS_AS(census_nonoverlapping(9), invalid_input_error);
}

TEST_CASE("no non-overlapping length-4 pattern has endpoints (2,3)") {
    const CensusReport r = census_nonoverlapping(4);
    for (const auto& e : r.pairs) {
        if (e.a == 2 && e.b == 3) {
            CHECK(!e.endpoints_realizable);
            CHECK(!e.witness_nonoverlapping);
        } else {
            CHECK(e.endpoints_realizable);
            CHECK(e.witness_nonoverlapping);
        }
    }
}

TEST_CASE("monotone pattern is most avoided at length 3 by brute force") {
    const auto patterns = all_patterns(3);
    for (int n = 4; n <= 11; ++n) {
        BruteForceConfig cfg;
        cfg.guard = 11;
        const auto counts = count_avoiders_bruteforce_batch(patterns, n, cfg);
        const Int& mono = counts[0];  // 123 is lexicographically first
        for (size_t i = 0; i < patterns.size(); ++i) CHECK(mono >= counts[i]);
    }
}

TEST_CASE("named pattern constructors") {
    CHECK(tau_pattern(4).str() == "1243");
    CHECK(tau_pattern(5).str() == "12354");
    CHECK(upsilon_pattern(4).str() == "1342");
    CHECK(upsilon_pattern(5).str() == "13452");
    CHECK(census_witness(1, 2, 5).str() == "13452");
    CHECK(census_witness(2, 3, 5).str() == "24153");
}

TEST_CASE("verification suites pass") {
    CHECK(verify_table1().passed);
    CHECK(verify_d_anomaly_pair().passed);
    CHECK(verify_ratio_097().passed);
    CHECK(verify_lemma_bounds(6).passed);
    CHECK(verify_inequality_suite(4).passed);
    CHECK(verify_theorem_orderings(4).passed);
    CHECK(verify_derivative_suite(4).passed);
}

TEST_CASE("derivative negativity for the length-3 classes") {
    for (const char* s : {"123", "132"}) {
        const DerivativeReport d = verify_derivative_negativity(Pattern(s));
        CHECK(d.sign == DerivativeReport::Sign::negative);
    }
    const DerivativeReport d = verify_derivative_negativity(Pattern("1342"));
    CHECK(d.sign == DerivativeReport::Sign::negative);
}

TEST_CASE("report serialization") {
    const json j = to_json(bracket_growth_rate(Pattern("1342")));
    CHECK(j.at("pattern") == "1342");
    CHECK(j.at("mode") == "certified");
    CHECK(j.at("status") == "ok");

    const json jc = to_json(classify(3));
    CHECK(jc.at("count") == 2);

    CHECK(parse_rational("1e-6") == Rat(1, 1000000));
    CHECK(parse_rational("0.25") == Rat(1, 4));
    CHECK(parse_rational("3/4") == Rat(3, 4));
    CHECK(parse_rational("2.5e-3") == Rat(1, 400));
    CHECK_THROWS_AS(parse_rational("abc"), invalid_input_error);
    CHECK(decimal_string(Rat(1, 8), 4) == "0.1250");
    CHECK(decimal_string(Rat(-3, 2), 2) == "-1.50");
}
