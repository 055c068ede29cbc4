#include "cpk/report_io.hpp"

#include <cctype>

namespace cpk {

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw invalid_input_error("empty rational");
    if (text.find('/') != std::string::npos) {
        Rat r;
        if (r.set_str(text, 10) != 0) throw invalid_input_error("bad rational: " + text);
        r.canonicalize();
        if (r.get_den() == 0) throw invalid_input_error("zero denominator: " + text);
        return r;
    }
    size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    std::string digits;
    long frac_len = 0, exponent = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        digits += text[pos++];
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            digits += text[pos++];
            ++frac_len;
        }
    }
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        ++pos;
        bool exp_neg = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            exp_neg = text[pos] == '-';
            ++pos;
        }
        std::string exp_digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            exp_digits += text[pos++];
        if (exp_digits.empty()) throw invalid_input_error("bad exponent: " + text);
        exponent = std::stol(exp_digits);
        if (exp_neg) exponent = -exponent;
    }
    if (pos != text.size() || digits.empty())
        throw invalid_input_error("bad rational: " + text);

    Int num(digits, 10);
    if (negative) num = -num;
    long shift = exponent - frac_len;
    Int scale = 1;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(shift)));
    Rat r = shift >= 0 ? Rat(num * scale) : Rat(num) / Rat(scale);
    r.canonicalize();
    return r;
}

std::string decimal_string(const Rat& value, int digits) {
    Rat v = value;
    std::string sign;
    if (v < 0) {
        sign = "-";
        v = -v;
    }
    Int ipart = v.get_num() / v.get_den();
    Rat frac = v - Rat(ipart);
    std::string out = sign + ipart.get_str() + ".";
    for (int i = 0; i < digits; ++i) {
        frac *= 10;
        Int d = frac.get_num() / frac.get_den();
        out += d.get_str();
        frac -= Rat(d);
    }
    return out;
}

namespace {

json rational_json(const Rat& v) {
    return json{{"exact", fraction_string(v)}, {"decimal", decimal_string(v, 10)}};
}

}  // namespace

json to_json(const GrowthBracket& bracket) {
    return json{
        {"pattern", bracket.pattern.str()},
        {"lo", fraction_string(bracket.lo)},
        {"hi", fraction_string(bracket.hi)},
        {"lo_decimal", decimal_string(bracket.lo, 10)},
        {"hi_decimal", decimal_string(bracket.hi, 10)},
        {"width_decimal", decimal_string(bracket.width(), 10)},
        {"mode", bracket.mode == BracketMode::certified ? "certified" : "heuristic"},
        {"status", bracket.ok() ? "ok" : "inconclusive"},
        {"K", bracket.depth},
        {"tol", fraction_string(bracket.tol)},
    };
}

json to_json(const RootBracket& bracket) {
    return json{
        {"lo", fraction_string(bracket.lo)},
        {"hi", fraction_string(bracket.hi)},
        {"lo_decimal", decimal_string(bracket.lo, 10)},
        {"hi_decimal", decimal_string(bracket.hi, 10)},
        {"width_decimal", decimal_string(bracket.width(), 10)},
    };
}

json to_json(const EquivClassReport& report) {
    json classes = json::array();
    for (const EquivClass& c : report.classes) {
        json members = json::array();
        for (const Pattern& p : c.members) members.push_back(p.str());
        classes.push_back(json{{"representative", c.representative.str()},
                               {"members", std::move(members)}});
    }
    return json{
        {"m", report.m},
        {"N", report.order},
        {"stabilized_at", report.stabilized_at},
        {"warning", report.warning},
        {"count", report.classes.size()},
        {"classes", std::move(classes)},
    };
}

json to_json(const CensusReport& report) {
    json pairs = json::array();
    for (const DeltaPairEntry& e : report.pairs) {
        json entry{{"a", e.a},
                   {"b", e.b},
                   {"d2", e.d2.get_str()},
                   {"witness", e.witness.str()},
                   {"witness_nonoverlapping", e.witness_nonoverlapping},
                   {"witness_endpoints_ok", e.witness_endpoints_ok},
                   {"endpoints_realizable", e.endpoints_realizable}};
        if (!e.extreme.empty()) entry["extreme"] = e.extreme;
        pairs.push_back(std::move(entry));
    }
    json out{
        {"m", report.m},
        {"count", report.nonoverlap_count.get_str()},
        {"total", report.total.get_str()},
        {"ratio", rational_json(report.ratio)},
        {"ratio_at_least_0364", report.ratio_at_least_0364},
        {"delta_size", report.delta_size},
        {"delta_expected", report.delta_expected.get_str()},
        {"delta_size_matches", report.delta_size_matches},
        {"delta_pairs", std::move(pairs)},
    };
    if (report.d2_closed_form_verified)
        out["d2_closed_form_verified"] = *report.d2_closed_form_verified;
    return out;
}

json to_json(const VerificationReport& report) {
    json lines = json::array();
    for (const CheckLine& line : report.lines) {
        json entry{{"name", line.name}, {"passed", line.passed}};
        if (!line.detail.empty()) entry["detail"] = line.detail;
        lines.push_back(std::move(entry));
    }
    return json{{"suite", report.suite}, {"passed", report.passed},
                {"checks", std::move(lines)}};
}

}  // namespace cpk
