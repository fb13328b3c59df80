#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valspin/errors.hpp"

namespace valspin {

// Exact coefficient type for all character arithmetic.  Multiplicities in the
// tables reach only a few hundred, but intermediate Adams convolutions grow
// well past that, and exactness is non-negotiable for the golden-table tests.
using Coeff = boost::multiprecision::cpp_int;

// Exponent vector of a Laurent monomial in m variables.  Entries are *doubled*
// exponents: the monomial x_j^{1/2} is stored as 1, x_j^{-1} as -2.  Keeping
// everything doubled makes half-integer weights exact with plain integers.
//
// Ordering is lexicographic with the first coordinate most significant, which
// is precisely the order the decomposition algorithm peels leading monomials
// in.  std::map keyed on this order therefore keeps terms sorted for free.
struct ExponentVector {
    std::vector<int> doubled;

    ExponentVector() = default;
    explicit ExponentVector(std::vector<int> d) : doubled(std::move(d)) {}
    static ExponentVector zero(std::size_t rank) {
        return ExponentVector(std::vector<int>(rank, 0));
    }

    std::size_t rank() const { return doubled.size(); }

    friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

    ExponentVector operator+(const ExponentVector& o) const;
    ExponentVector operator-(const ExponentVector& o) const;
};

// One (exponent, coefficient) pair of a polynomial.
struct Term {
    ExponentVector exponent;
    Coeff coefficient;
};

// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
// Canonical form: no stored coefficient is zero, so structural equality of
// the term maps is polynomial equality.  Values are immutable in spirit: all
// operations return fresh polynomials and never mutate their inputs.
class LaurentPolynomial {
public:
    using TermMap = std::map<ExponentVector, Coeff>;

    explicit LaurentPolynomial(std::size_t rank) : rank_(rank) {}

    // The constant polynomial c (including 0, which has an empty term map).
    static LaurentPolynomial constant(std::size_t rank, Coeff c);
    // A single monomial c * x^e.
    static LaurentPolynomial monomial(ExponentVector e, Coeff c);

    std::size_t rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Coefficient of x^e (zero if the term is absent).
    Coeff coefficient(const ExponentVector& e) const;

    // Adds c * x^e in place, dropping the term if the result cancels.  This is
    // the one mutating primitive; everything else is built on it before the
    // value is handed out.
    void add_term(const ExponentVector& e, const Coeff& c);

    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-() const;
    LaurentPolynomial operator*(const Coeff& c) const;

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

    // Adams substitution psi^k: every exponent scaled entrywise by k
    // (x_j -> x_j^k), coefficients untouched.  Requires k >= 1.
    LaurentPolynomial adams_substitute(int k) const;

    // Lexicographically maximal term, or nullopt for the zero polynomial.
    std::optional<Term> leading_term() const;

    // Divides every coefficient by d, which must divide all of them exactly.
    LaurentPolynomial divide_coefficients(const Coeff& d) const;

    // Sum of all coefficients = evaluation at x_1 = ... = x_m = 1.
    Coeff evaluate_at_one() const;

    // Variable substitutions used by the Weyl-group invariance checks:
    // x_j -> x_{perm[j]} for a permutation of {0,...,m-1}.
    LaurentPolynomial permute_variables(const std::vector<std::size_t>& perm) const;
    // x_j -> x_j^{-1} for the single variable j.
    LaurentPolynomial invert_variable(std::size_t j) const;
    // x_j -> x_j^{-1} for every variable.
    LaurentPolynomial invert_all_variables() const;

    // Human-readable rendering like "x1^2*x2^-1/2 + 3", mainly for diagnostics
    // and the CLI; terms in descending lex order.
    std::string to_string() const;

private:
    std::size_t rank_;
    TermMap terms_;

    void check_same_rank(const LaurentPolynomial& o, const char* op) const;
};

// Exact quotient num / den by iterated leading-term elimination in lex order.
// Throws DivisionError if den is zero or the division leaves a remainder.
LaurentPolynomial exact_divide(const LaurentPolynomial& num, const LaurentPolynomial& den);

} // namespace valspin
