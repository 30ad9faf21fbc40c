#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zagreb/indices.hpp"
#include "zagreb/rational.hpp"

namespace zagreb {

/// One closed form for class_pair_term(d+a, d+b, d+c, d+e) as a function of
/// the minimum degree d, stored in factored form.  Each factor is a
/// polynomial in d given by ascending coefficients, so {3, 2} means 3 + 2d.
/// The value is the product of the numerator factors over the product of the
/// denominator factors.
struct ClosedFormRow {
    std::array<int, 4> offsets;  // (a, b, c, e) with a<=b, c<=e, (a,b)<=(c,e)
    std::vector<std::vector<std::int64_t>> num_factors;
    std::vector<std::vector<std::int64_t>> den_factors;
};

/// All 55 closed forms: one per unordered pair of degree classes with both
/// degrees in the window [d, d+3].  (10 classes, so 10 identical pairs plus
/// 45 distinct pairs.)
inline const std::vector<ClosedFormRow>& closed_form_table() {
    static const std::vector<ClosedFormRow> table = {
        {{0, 0, 0, 0}, {{0}}, {{1}}},
        {{0, 0, 0, 1}, {{1}}, {{1, 1}}},
        {{0, 0, 0, 2}, {{4}}, {{2, 1}}},
        {{0, 0, 0, 3}, {{9}}, {{3, 1}}},
        {{0, 0, 1, 1}, {{2}, {1, 2}}, {{0, 1}, {1, 1}}},
        {{0, 0, 1, 2}, {{2, 3}, {4, 3}}, {{0, 1}, {1, 1}, {2, 1}}},
        {{0, 0, 1, 3}, {{2}, {3, 4}, {3, 2}}, {{0, 1}, {1, 1}, {3, 1}}},
        {{0, 0, 2, 2}, {{16}, {1, 1}}, {{0, 1}, {2, 1}}},
        {{0, 0, 2, 3}, {{6, 5}, {12, 5}}, {{0, 1}, {2, 1}, {3, 1}}},
        {{0, 0, 3, 3}, {{18}, {3, 2}}, {{0, 1}, {3, 1}}},
        {{0, 1, 0, 1}, {{0}}, {{1}}},
        {{0, 1, 0, 2}, {{0, 1}}, {{1, 1}, {2, 1}}},
        {{0, 1, 0, 3}, {{4}, {0, 1}}, {{1, 1}, {3, 1}}},
        {{0, 1, 1, 1}, {{1}}, {{0, 1}}},
        {{0, 1, 1, 2}, {{4}, {1, 1}}, {{0, 1}, {2, 1}}},
        {{0, 1, 1, 3}, {{9}, {1, 1}}, {{0, 1}, {3, 1}}},
        {{0, 1, 2, 2}, {{2, 3}, {4, 3}}, {{0, 1}, {1, 1}, {2, 1}}},
        {{0, 1, 2, 3}, {{4}, {3, 2}, {3, 6, 2}}, {{0, 1}, {1, 1}, {2, 1}, {3, 1}}},
        {{0, 1, 3, 3}, {{3, 5}, {9, 5}}, {{0, 1}, {1, 1}, {3, 1}}},
        {{0, 2, 0, 2}, {{0}}, {{1}}},
        {{0, 2, 0, 3}, {{0, 1}}, {{2, 1}, {3, 1}}},
        {{0, 2, 1, 1}, {{2}}, {{0, 1}, {1, 1}, {2, 1}}},
        {{0, 2, 1, 2}, {{2, 1}}, {{0, 1}, {1, 1}}},
        {{0, 2, 1, 3}, {{2}, {3, 2}, {3, 3, 1}}, {{0, 1}, {1, 1}, {2, 1}, {3, 1}}},
        {{0, 2, 2, 2}, {{4}}, {{0, 1}}},
        {{0, 2, 2, 3}, {{9}, {2, 1}}, {{0, 1}, {3, 1}}},
        {{0, 2, 3, 3}, {{2}, {3, 2}, {9, 4}}, {{0, 1}, {2, 1}, {3, 1}}},
        {{0, 3, 0, 3}, {{0}}, {{1}}},
        {{0, 3, 1, 1}, {{-1, 1}, {-3, 1}}, {{0, 1}, {1, 1}, {3, 1}}},
        {{0, 3, 1, 2}, {{4}, {3, 2}}, {{0, 1}, {1, 1}, {2, 1}, {3, 1}}},
        {{0, 3, 1, 3}, {{3, 1}}, {{0, 1}, {1, 1}}},
        {{0, 3, 2, 2}, {{4, 1}, {6, 1}}, {{0, 1}, {2, 1}, {3, 1}}},
        {{0, 3, 2, 3}, {{4}, {3, 1}}, {{0, 1}, {2, 1}}},
        {{0, 3, 3, 3}, {{9}}, {{0, 1}}},
        {{1, 1, 1, 1}, {{0}}, {{1}}},
        {{1, 1, 1, 2}, {{1}}, {{2, 1}}},
        {{1, 1, 1, 3}, {{4}}, {{3, 1}}},
        {{1, 1, 2, 2}, {{2}, {3, 2}}, {{1, 1}, {2, 1}}},
        {{1, 1, 2, 3}, {{5, 3}, {7, 3}}, {{1, 1}, {2, 1}, {3, 1}}},
        {{1, 1, 3, 3}, {{16}, {2, 1}}, {{1, 1}, {3, 1}}},
        {{1, 2, 1, 2}, {{0}}, {{1}}},
        {{1, 2, 1, 3}, {{1, 1}}, {{2, 1}, {3, 1}}},
        {{1, 2, 2, 2}, {{1}}, {{1, 1}}},
        {{1, 2, 2, 3}, {{4}, {2, 1}}, {{1, 1}, {3, 1}}},
        {{1, 2, 3, 3}, {{5, 3}, {7, 3}}, {{1, 1}, {2, 1}, {3, 1}}},
        {{1, 3, 1, 3}, {{0}}, {{1}}},
        {{1, 3, 2, 2}, {{2}}, {{1, 1}, {2, 1}, {3, 1}}},
        {{1, 3, 2, 3}, {{3, 1}}, {{1, 1}, {2, 1}}},
        {{1, 3, 3, 3}, {{4}}, {{1, 1}}},
        {{2, 2, 2, 2}, {{0}}, {{1}}},
        {{2, 2, 2, 3}, {{1}}, {{3, 1}}},
        {{2, 2, 3, 3}, {{2}, {5, 2}}, {{2, 1}, {3, 1}}},
        {{2, 3, 2, 3}, {{0}}, {{1}}},
        {{2, 3, 3, 3}, {{1}}, {{2, 1}}},
        {{3, 3, 3, 3}, {{0}}, {{1}}},
    };
    return table;
}

inline int128 eval_poly(const std::vector<std::int64_t>& coeffs, int d) {
    int128 acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = checked_add(checked_mul(acc, d), static_cast<int128>(*it));
    return acc;
}

/// Evaluate one row's closed form at minimum degree d >= 1.
inline Rational closed_form_value(const ClosedFormRow& row, int d) {
    if (d < 1) throw bad_parameter_error("closed forms require minimum degree >= 1");
    int128 num = 1;
    int128 den = 1;
    for (const auto& f : row.num_factors) num = checked_mul(num, eval_poly(f, d));
    for (const auto& f : row.den_factors) den = checked_mul(den, eval_poly(f, d));
    return {num, den};
}

inline const ClosedFormRow& closed_form_row(const std::array<int, 4>& offsets) {
    for (const auto& row : closed_form_table())
        if (row.offsets == offsets) return row;
    throw bad_parameter_error("no closed form for the requested offset pattern");
}

inline Rational closed_form_value(const std::array<int, 4>& offsets, int d) {
    return closed_form_value(closed_form_row(offsets), d);
}

/// The class pair a row talks about, instantiated at minimum degree d.
inline Rational row_pair_term(const ClosedFormRow& row, int d) {
    return class_pair_term(d + row.offsets[0], d + row.offsets[1],
                           d + row.offsets[2], d + row.offsets[3]);
}

struct TableVerification {
    int delta_lo = 0;
    int delta_hi = 0;
    long long comparisons = 0;
    int mismatches = 0;
    bool offsets_complete = false;
    int row_count = 0;
    std::vector<std::string> details;  // one line per mismatch

    bool ok() const { return mismatches == 0 && offsets_complete; }
};

/// Re-derive every row from the definition across a range of minimum degrees
/// and confirm the offset patterns enumerate all class pairs exactly once.
inline TableVerification verify_closed_form_table(int delta_lo, int delta_hi) {
    if (delta_lo < 1 || delta_hi < delta_lo)
        throw bad_parameter_error("bad degree range for table verification");
    TableVerification out;
    out.delta_lo = delta_lo;
    out.delta_hi = delta_hi;
    const auto& table = closed_form_table();
    out.row_count = static_cast<int>(table.size());

    for (int d = delta_lo; d <= delta_hi; ++d) {
        for (const auto& row : table) {
            ++out.comparisons;
            Rational expect = row_pair_term(row, d);
            Rational got = closed_form_value(row, d);
            if (!(expect == got)) {
                ++out.mismatches;
                std::string line = "offsets (";
                for (int i = 0; i < 4; ++i)
                    line += std::to_string(row.offsets[i]) + (i < 3 ? "," : ")");
                line += " at d=" + std::to_string(d) + ": definition gives " + expect.str() +
                        ", closed form gives " + got.str();
                out.details.push_back(line);
            }
        }
    }

    // every unordered pair of window classes must appear exactly once
    std::vector<std::array<int, 4>> wanted;
    for (int a = 0; a <= 3; ++a)
        for (int b = a; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c)
                for (int e = c; e <= 3; ++e)
                    if (std::make_pair(a, b) <= std::make_pair(c, e))
                        wanted.push_back({a, b, c, e});
    bool complete = wanted.size() == table.size();
    for (const auto& w : wanted) {
        int hits = 0;
        for (const auto& row : table)
            if (row.offsets == w) ++hits;
        if (hits != 1) complete = false;
    }
    out.offsets_complete = complete;
    return out;
}

struct SignCensus {
    int delta = 0;
    std::vector<std::array<int, 4>> negative;
    std::vector<std::array<int, 4>> zero;
    std::vector<std::array<int, 4>> positive;
};

/// Sign of every closed form at one minimum degree.  For d != 2 nothing is
/// negative; at d = 2 exactly the pair {2,5},{3,3} (offsets 0,3,1,1) is.
inline SignCensus closed_form_sign_census(int d) {
    SignCensus out;
    out.delta = d;
    for (const auto& row : closed_form_table()) {
        Rational v = closed_form_value(row, d);
        if (v.sign() < 0)
            out.negative.push_back(row.offsets);
        else if (v.sign() == 0)
            out.zero.push_back(row.offsets);
        else
            out.positive.push_back(row.offsets);
    }
    return out;
}

} // namespace zagreb
