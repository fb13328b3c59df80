#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "valspin/laurent.hpp"
#include "valspin/lie_typeb.hpp"

using namespace valspin;

namespace {

ExponentVector ev(std::vector<int> doubled) { return ExponentVector(std::move(doubled)); }

// Random sparse polynomial with doubled exponents in [-6,6] and coefficients
// in [-9,9]; may be zero.
LaurentPolynomial random_poly(std::mt19937& gen, std::size_t rank, int max_terms) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp_dist(-6, 6);
    std::uniform_int_distribution<int> coeff_dist(-9, 9);
    LaurentPolynomial p(rank);
    const int n = nterms(gen);
    for (int t = 0; t < n; ++t) {
        ExponentVector e = ExponentVector::zero(rank);
        for (std::size_t j = 0; j < rank; ++j) e.doubled[j] = exp_dist(gen);
        p.add_term(e, coeff_dist(gen));
    }
    return p;
}

LaurentPolynomial random_nonzero_poly(std::mt19937& gen, std::size_t rank, int max_terms) {
    for (;;) {
        LaurentPolynomial p = random_poly(gen, rank, max_terms);
        if (!p.is_zero()) return p;
    }
}

} // namespace

TEST_CASE("exponent vectors order lexicographically, first coordinate most significant") {
    CHECK(ev({1, 0}) > ev({0, 5}));
    CHECK(ev({2, -3}) > ev({2, -4}));
    CHECK(ev({0, 0}) == ev({0, 0}));
    CHECK(ev({-1, 10}) < ev({0, -10}));
    CHECK(ev({1, 2}) + ev({3, -5}) == ev({4, -3}));
    CHECK(ev({1, 2}) - ev({3, -5}) == ev({-2, 7}));
}

TEST_CASE("addition: identity, cancellation, and coefficient doubling") {
    const LaurentPolynomial zero(2);
    const LaurentPolynomial x1 = LaurentPolynomial::monomial(ev({2, 0}), 1);

    CHECK(x1 + zero == x1);
    CHECK((x1 + (-x1)).is_zero());
    CHECK((x1 - x1).term_count() == 0);

    // Doubling a character doubles every weight coefficient (oracle: direct
    // term iteration).
    const LaurentPolynomial spin = base_character(4, BaseRep::spin);
    const LaurentPolynomial twice = spin + spin;
    CHECK(twice.term_count() == spin.term_count());
    for (const auto& [e, c] : spin.terms()) CHECK(twice.coefficient(e) == 2 * c);
}

TEST_CASE("multiplication: identity, half-integer exponents, dimension homomorphism") {
    const LaurentPolynomial one = LaurentPolynomial::constant(3, 1);
    const LaurentPolynomial p = LaurentPolynomial::monomial(ev({1, -2, 0}), 3);
    CHECK(p * one == p);

    const LaurentPolynomial half = LaurentPolynomial::monomial(ev({1}), 1);
    CHECK(half * half == LaurentPolynomial::monomial(ev({2}), 1));

    // Char(standard so(9))^2 has coefficient sum 81 = (dim 9)^2.
    const LaurentPolynomial st = base_character(4, BaseRep::standard);
    CHECK((st * st).evaluate_at_one() == 81);
}

TEST_CASE("adams substitution scales exponents and rejects k < 1") {
    const LaurentPolynomial half = LaurentPolynomial::monomial(ev({1}), 1);
    CHECK(half.adams_substitute(2) == LaurentPolynomial::monomial(ev({2}), 1));

    std::mt19937 gen(42);
    for (int trial = 0; trial < 20; ++trial) {
        const LaurentPolynomial p = random_poly(gen, 3, 8);
        CHECK(p.adams_substitute(1) == p);
        CHECK(p.adams_substitute(3).adams_substitute(2) == p.adams_substitute(6));
    }

    CHECK_THROWS_AS(half.adams_substitute(0), ArgumentError);
    CHECK_THROWS_AS(half.adams_substitute(-2), ArgumentError);
}

TEST_CASE("adams composition law on random inputs for 1 <= k,l <= 5") {
    std::mt19937 gen(7);
    for (int k = 1; k <= 5; ++k) {
        for (int l = 1; l <= 5; ++l) {
            const LaurentPolynomial p = random_poly(gen, 2, 10);
            CHECK(p.adams_substitute(k).adams_substitute(l) == p.adams_substitute(k * l));
        }
    }
}

TEST_CASE("leading term: constants, characters, and the zero polynomial") {
    const LaurentPolynomial five = LaurentPolynomial::constant(4, 5);
    auto lt = five.leading_term();
    REQUIRE(lt.has_value());
    CHECK(lt->exponent == ExponentVector::zero(4));
    CHECK(lt->coefficient == 5);

    CHECK_FALSE(LaurentPolynomial(4).leading_term().has_value());

    // Leading monomial of Char(Gamma_lam) is x^lam with coefficient 1.
    const HighestWeight w1100(std::vector<int>{2, 2, 0, 0});
    auto lt1 = weyl_character(4, w1100).leading_term();
    REQUIRE(lt1.has_value());
    CHECK(lt1->exponent == ev({2, 2, 0, 0}));
    CHECK(lt1->coefficient == 1);

    // Lambda^2 V of the so(9) spin rep leads with the weight [1,1,1,0].
    const LaurentPolynomial lam2 = exterior_power_char(base_character(4, BaseRep::spin), 2);
    auto lt2 = lam2.leading_term();
    REQUIRE(lt2.has_value());
    CHECK(lt2->exponent == ev({2, 2, 2, 0}));
    CHECK(lt2->coefficient == 1);
}

TEST_CASE("exact division: self-division and the difference-of-squares identity") {
    std::mt19937 gen(11);
    for (int trial = 0; trial < 10; ++trial) {
        const LaurentPolynomial p = random_nonzero_poly(gen, 2, 8);
        CHECK(exact_divide(p, p) == LaurentPolynomial::constant(2, 1));
    }

    // (x - x^{-1}) / (x^{1/2} - x^{-1/2}) = x^{1/2} + x^{-1/2}.
    LaurentPolynomial num(1);
    num.add_term(ev({2}), 1);
    num.add_term(ev({-2}), -1);
    LaurentPolynomial den(1);
    den.add_term(ev({1}), 1);
    den.add_term(ev({-1}), -1);
    LaurentPolynomial expected(1);
    expected.add_term(ev({1}), 1);
    expected.add_term(ev({-1}), 1);
    CHECK(exact_divide(num, den) == expected);
}

TEST_CASE("exact division round-trips products of random polynomials") {
    std::mt19937 gen(13);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rank = 1 + trial % 3;
        const LaurentPolynomial p = random_nonzero_poly(gen, rank, 6);
        const LaurentPolynomial q = random_nonzero_poly(gen, rank, 6);
        CHECK(exact_divide(p * q, q) == p);
    }
}

TEST_CASE("exact division rejects non-multiples and the zero denominator") {
    LaurentPolynomial num(1);
    num.add_term(ev({4}), 1);
    num.add_term(ev({0}), 1);  // x^2 + 1
    LaurentPolynomial den(1);
    den.add_term(ev({2}), 1);
    den.add_term(ev({0}), 1);  // x + 1
    CHECK_THROWS_AS(exact_divide(num, den), DivisionError);
    CHECK_THROWS_AS(exact_divide(num, LaurentPolynomial(1)), DivisionError);

    // Coefficient obstruction: 3x not divisible by 2x.
    CHECK_THROWS_AS(exact_divide(LaurentPolynomial::monomial(ev({2}), 3),
                                 LaurentPolynomial::monomial(ev({2}), 2)),
                    DivisionError);
}

TEST_CASE("evaluate_at_one sums coefficients and is a ring homomorphism") {
    CHECK(LaurentPolynomial(3).evaluate_at_one() == 0);
    CHECK(base_character(4, BaseRep::spin).evaluate_at_one() == 16);

    std::mt19937 gen(17);
    for (int trial = 0; trial < 30; ++trial) {
        const LaurentPolynomial p = random_poly(gen, 2, 8);
        const LaurentPolynomial q = random_poly(gen, 2, 8);
        CHECK((p * q).evaluate_at_one() == p.evaluate_at_one() * q.evaluate_at_one());
        CHECK((p + q).evaluate_at_one() == p.evaluate_at_one() + q.evaluate_at_one());
    }
}

TEST_CASE("ring axioms hold exactly on random sparse inputs") {
    std::mt19937 gen(19);
    const LaurentPolynomial one = LaurentPolynomial::constant(3, 1);
    const LaurentPolynomial zero(3);
    for (int trial = 0; trial < 30; ++trial) {
        const LaurentPolynomial p = random_poly(gen, 3, 6);
        const LaurentPolynomial q = random_poly(gen, 3, 6);
        const LaurentPolynomial r = random_poly(gen, 3, 6);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p + zero == p);
        CHECK(p * one == p);
    }
}

TEST_CASE("leading exponents are additive under multiplication") {
    std::mt19937 gen(23);
    for (int trial = 0; trial < 40; ++trial) {
        const LaurentPolynomial p = random_nonzero_poly(gen, 2, 6);
        const LaurentPolynomial q = random_nonzero_poly(gen, 2, 6);
        const LaurentPolynomial prod = p * q;
        // Over Z the product of non-zero polynomials is non-zero.
        REQUIRE_FALSE(prod.is_zero());
        CHECK(prod.leading_term()->exponent ==
              p.leading_term()->exponent + q.leading_term()->exponent);
    }
}

TEST_CASE("rank mismatches are structural errors") {
    const LaurentPolynomial a = LaurentPolynomial::constant(2, 1);
    const LaurentPolynomial b = LaurentPolynomial::constant(3, 1);
    CHECK_THROWS_AS(a + b, RankMismatchError);
    CHECK_THROWS_AS(a * b, RankMismatchError);
    CHECK_THROWS_AS(exact_divide(a, b), RankMismatchError);
}

TEST_CASE("canonical form drops zero coefficients eagerly") {
    LaurentPolynomial p(2);
    p.add_term(ev({2, 0}), 5);
    p.add_term(ev({2, 0}), -5);
    CHECK(p.is_zero());
    p.add_term(ev({0, 2}), 0);
    CHECK(p.is_zero());
    CHECK(LaurentPolynomial::constant(2, 0).is_zero());
}

TEST_CASE("variable substitutions: permutation, single inversion, full inversion") {
    LaurentPolynomial p(3);
    p.add_term(ev({2, 4, -1}), 3);
    p.add_term(ev({0, 1, 0}), -2);

    const LaurentPolynomial q = p.permute_variables({1, 2, 0});
    LaurentPolynomial expected(3);
    expected.add_term(ev({-1, 2, 4}), 3);
    expected.add_term(ev({0, 0, 1}), -2);
    CHECK(q == expected);

    const LaurentPolynomial inv = p.invert_variable(2);
    LaurentPolynomial expected_inv(3);
    expected_inv.add_term(ev({2, 4, 1}), 3);
    expected_inv.add_term(ev({0, 1, 0}), -2);
    CHECK(inv == expected_inv);

    CHECK(p.invert_all_variables().invert_all_variables() == p);
    CHECK_THROWS_AS(p.permute_variables({0, 0, 1}), ArgumentError);
    CHECK_THROWS_AS(p.invert_variable(3), ArgumentError);
}

TEST_CASE("coefficient division requires exactness") {
    LaurentPolynomial p(1);
    p.add_term(ev({2}), 6);
    p.add_term(ev({0}), 9);
    const LaurentPolynomial third = p.divide_coefficients(3);
    CHECK(third.coefficient(ev({2})) == 2);
    CHECK(third.coefficient(ev({0})) == 3);
    CHECK_THROWS_AS(p.divide_coefficients(4), DivisionError);
    CHECK_THROWS_AS(p.divide_coefficients(0), DivisionError);
}
