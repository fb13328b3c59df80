#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <string>
#include <vector>

#include "valspin/valdim.hpp"

using namespace valspin;

namespace {

HighestWeight hw3(const std::string& text) { return HighestWeight::parse(text); }

Coeff binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Coeff num = 1, den = 1;
    for (int t = 0; t < k; ++t) {
        num *= n - t;
        den *= t + 1;
    }
    return num / den;
}

// The 20-row multiplicity table of Lambda^i(O' + O) over so(7) for i = 0..7,
// in the published row order (ascending lexicographic on the weights).
struct So7Row {
    const char* weight;
    std::array<int, 8> mults;
};

constexpr std::array<So7Row, 20> kSo7Table{{
    {"0,0,0", {1, 0, 0, 1, 2, 1, 0, 4}},
    {"1/2,1/2,1/2", {0, 1, 1, 2, 3, 4, 5, 6}},
    {"1,0,0", {0, 1, 1, 1, 2, 3, 5, 3}},
    {"1,1,0", {0, 0, 2, 1, 1, 5, 6, 4}},
    {"1,1,1", {0, 0, 0, 2, 4, 3, 4, 7}},
    {"3/2,1/2,1/2", {0, 0, 1, 2, 3, 5, 6, 7}},
    {"3/2,3/2,1/2", {0, 0, 0, 1, 2, 3, 5, 5}},
    {"3/2,3/2,3/2", {0, 0, 0, 0, 1, 2, 2, 3}},
    {"2,0,0", {0, 0, 0, 1, 2, 1, 1, 3}},
    {"2,1,0", {0, 0, 0, 1, 1, 2, 3, 4}},
    {"2,1,1", {0, 0, 0, 0, 1, 3, 4, 4}},
    {"2,2,0", {0, 0, 0, 0, 1, 0, 0, 2}},
    {"2,2,1", {0, 0, 0, 0, 0, 1, 2, 1}},
    {"2,2,2", {0, 0, 0, 0, 0, 0, 0, 1}},
    {"5/2,1/2,1/2", {0, 0, 0, 0, 1, 1, 2, 2}},
    {"5/2,3/2,1/2", {0, 0, 0, 0, 0, 1, 1, 2}},
    {"5/2,3/2,3/2", {0, 0, 0, 0, 0, 0, 1, 1}},
    {"3,0,0", {0, 0, 0, 0, 0, 1, 0, 0}},
    {"3,1,0", {0, 0, 0, 0, 0, 0, 1, 0}},
    {"3,1,1", {0, 0, 0, 0, 0, 0, 0, 1}},
}};

// The published 8x8 values of b_{k,l}.
constexpr std::array<std::array<int, 8>, 8> kBkl{{
    {1, 0, 0, 1, 2, 1, 0, 4},
    {0, 2, 2, 3, 5, 7, 10, 9},
    {0, 2, 7, 7, 10, 22, 28, 24},
    {1, 3, 7, 18, 30, 39, 50, 63},
    {2, 5, 10, 30, 56, 68, 88, 116},
    {1, 7, 22, 39, 68, 116, 150, 162},
    {0, 10, 28, 50, 88, 150, 204, 210},
    {4, 9, 24, 63, 116, 162, 210, 266},
}};

// The published decompositions of Lambda^k of the so(9) spin representation
// for k = 0..8 (all multiplicities are 1).
const std::vector<std::vector<std::string>> kSpin9Summands{
    {"0,0,0,0"},
    {"1/2,1/2,1/2,1/2"},
    {"1,1,1,0", "1,1,0,0"},
    {"3/2,3/2,1/2,1/2", "3/2,1/2,1/2,1/2"},
    {"2,2,0,0", "2,1,1,1", "2,1,0,0", "2,0,0,0", "1,1,1,1"},
    {"5/2,3/2,1/2,1/2", "5/2,1/2,1/2,1/2", "3/2,3/2,3/2,3/2", "3/2,3/2,1/2,1/2",
     "3/2,1/2,1/2,1/2"},
    {"3,1,1,0", "3,1,0,0", "2,2,1,1", "2,1,1,1", "2,1,1,0", "2,1,0,0", "1,1,1,0", "1,1,0,0"},
    {"7/2,1/2,1/2,1/2", "5/2,3/2,3/2,1/2", "5/2,3/2,1/2,1/2", "5/2,1/2,1/2,1/2",
     "3/2,3/2,3/2,1/2", "3/2,3/2,1/2,1/2", "3/2,1/2,1/2,1/2", "1/2,1/2,1/2,1/2"},
    {"4,0,0,0", "3,1,1,1", "3,1,1,0", "3,0,0,0", "2,2,2,0", "2,2,1,0", "2,2,0,0", "2,1,1,1",
     "2,1,1,0", "2,0,0,0", "1,1,1,1", "1,1,1,0", "1,0,0,0", "0,0,0,0"},
};

} // namespace

TEST_CASE("b_k is 1 exactly at k = 0, 8, 16") {
    for (int k = 0; k <= 16; ++k) {
        const Coeff expected = (k == 0 || k == 8 || k == 16) ? 1 : 0;
        CHECK(compute_bk(k) == expected);
    }
    CHECK(compute_bk(-1) == 0);
    CHECK(compute_bk(17) == 0);
}

TEST_CASE("so(7) table matches the published 20 x 8 values entry for entry") {
    const auto& rows = so7_weight_rows();
    REQUIRE(rows.size() == 20);
    const auto& table = compute_so7_table();
    REQUIRE(table.size() == 16);

    for (std::size_t r = 0; r < 20; ++r) {
        const HighestWeight w = hw3(kSo7Table[r].weight);
        CHECK(rows[r] == w);  // same row order as the publication
        for (std::size_t i = 0; i < 8; ++i) {
            CHECK(table[i].multiplicity(w) == kSo7Table[r].mults[i]);
        }
    }

    // No summands beyond the 20 listed weights, in any degree.
    for (const auto& dec : table) {
        for (const auto& [lam, mult] : dec.parts()) {
            bool listed = false;
            for (const auto& row : kSo7Table) listed = listed || hw3(row.weight) == lam;
            CHECK(listed);
        }
    }
}

TEST_CASE("so(7) multiplicities mirror: n^(i) == n^(15-i)") {
    const auto& table = compute_so7_table();
    for (int i = 0; i <= 15; ++i) {
        CHECK(table[static_cast<std::size_t>(i)] == table[static_cast<std::size_t>(15 - i)]);
    }
}

TEST_CASE("b_{k,l} matches the published 8x8 table") {
    for (int k = 0; k < 8; ++k) {
        for (int l = 0; l < 8; ++l) {
            CHECK(compute_bkl(k, l) ==
                  kBkl[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)]);
        }
    }
    // Spot anchors.
    CHECK(compute_bkl(0, 0) == 1);
    CHECK(compute_bkl(2, 2) == 7);
    CHECK(compute_bkl(4, 6) == 88);
    CHECK(compute_bkl(5, 5) == 116);
    CHECK(compute_bkl(7, 7) == 266);
}

TEST_CASE("b_{k,l} symmetries hold on the full 16x16 extension") {
    for (int k = 0; k <= 15; ++k) {
        for (int l = 0; l <= 15; ++l) {
            const Coeff v = compute_bkl(k, l);
            CHECK(v >= 0);
            CHECK(v == compute_bkl(l, k));
            CHECK(v == compute_bkl(15 - k, 15 - l));
            CHECK(v == compute_bkl(k, 15 - l));
            CHECK(v == compute_bkl(15 - k, l));
        }
    }
    CHECK(compute_bkl(-1, 3) == 0);
    CHECK(compute_bkl(3, 16) == 0);
}

TEST_CASE("dimension audits: binomial coefficients on both sides") {
    const auto& chars9 = spin9_exterior_chars();
    REQUIRE(chars9.size() == 17);
    for (int k = 0; k <= 16; ++k) {
        CHECK(chars9[static_cast<std::size_t>(k)].evaluate_at_one() == binomial(16, k));
    }
    const auto& table = compute_so7_table();
    for (int i = 0; i <= 15; ++i) {
        CHECK(dimension(table[static_cast<std::size_t>(i)]) == binomial(15, i));
    }
}

TEST_CASE("spin(9) exterior decompositions match the published lists") {
    const auto& decs = spin9_exterior_decompositions();
    REQUIRE(decs.size() == 17);
    for (std::size_t k = 0; k < kSpin9Summands.size(); ++k) {
        const auto& expected = kSpin9Summands[k];
        CHECK(decs[k].summand_count() == expected.size());
        for (const auto& text : expected) {
            CHECK(decs[k].multiplicity(HighestWeight::parse(text)) == 1);
        }
    }
    // Lambda^k == Lambda^{16-k} as representations.
    for (std::size_t k = 0; k <= 16; ++k) {
        CHECK(decs[k] == decs[16 - k]);
    }
}

TEST_CASE("valuation dimensions reproduce the published row") {
    const std::array<int, 17> expected{1, 1, 2, 3, 6, 10, 15, 20, 27, 20, 15, 10, 6, 3, 2, 1, 1};
    Coeff total = 0;
    for (int k = 0; k <= 16; ++k) {
        const Coeff v = val_dimension(k);
        CHECK(v == expected[static_cast<std::size_t>(k)]);
        CHECK(v == val_dimension(16 - k));  // output symmetry, not assumed
        total += v;
    }
    CHECK(total == 143);
    CHECK_THROWS_AS(val_dimension(-1), ArgumentError);
    CHECK_THROWS_AS(val_dimension(17), ArgumentError);
}

TEST_CASE("full_report aggregates consistently with the individual queries") {
    const ValuationReport rep = full_report();
    REQUIRE(rep.dimensions.size() == 17);
    REQUIRE(rep.bk.size() == 17);
    REQUIRE(rep.bkl.size() == 16);
    REQUIRE(rep.so7_weights.size() == 20);
    REQUIRE(rep.so7_mults.size() == 20);
    REQUIRE(rep.spin9_summands.size() == 17);
    CHECK(rep.total == 143);

    for (int k = 0; k <= 16; ++k) {
        CHECK(rep.dimensions[static_cast<std::size_t>(k)] == val_dimension(k));
        CHECK(rep.bk[static_cast<std::size_t>(k)] == compute_bk(k));
    }
    for (int k = 0; k < 16; ++k) {
        for (int l = 0; l < 16; ++l) {
            CHECK(rep.bkl[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] ==
                  compute_bkl(k, l));
        }
    }
    const auto& table = compute_so7_table();
    for (std::size_t r = 0; r < 20; ++r) {
        for (std::size_t i = 0; i < 16; ++i) {
            CHECK(rep.so7_mults[r][i] == table[i].multiplicity(rep.so7_weights[r]));
        }
    }
}

TEST_CASE("decompose-recombine round trip on every pipeline character") {
    const auto& chars9 = spin9_exterior_chars();
    const auto& decs9 = spin9_exterior_decompositions();
    for (std::size_t k = 0; k < chars9.size(); ++k) {
        CHECK(recombine(decs9[k]) == chars9[k]);
    }
    const auto& chars7 = so7_exterior_chars();
    const auto& decs7 = compute_so7_table();
    for (std::size_t i = 0; i < chars7.size(); ++i) {
        CHECK(recombine(decs7[i]) == chars7[i]);
    }
}
