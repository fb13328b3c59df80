#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "valspin/laurent.hpp"

namespace valspin {

// Dominant weight [lambda_1, ..., lambda_m] of so(2m+1).  Entries are stored
// doubled (the weight 3/2 is the integer 3) and must be weakly decreasing,
// non-negative, and of uniform parity: all even (integer weights) or all odd
// (half-integer weights).  Construction validates; a HighestWeight value is
// always well-formed.
class HighestWeight {
public:
    explicit HighestWeight(std::vector<int> doubled_entries);

    // Parses "2,1,0" or "3/2,1/2,1/2" (each entry "p" or "p/2"); surrounding
    // brackets are tolerated.  Throws ArgumentError on malformed input or on
    // an entry list violating the dominance invariants.
    static HighestWeight parse(const std::string& text);

    std::size_t rank() const { return doubled_.size(); }
    const std::vector<int>& doubled_entries() const { return doubled_; }
    bool is_half_integer() const { return !doubled_.empty() && doubled_[0] % 2 != 0; }

    // Entries as exact strings: "2" or "3/2".  Half-integers never pass
    // through floating point.
    std::vector<std::string> entry_strings() const;
    // "[3/2,1/2,1/2]"
    std::string to_string() const;

    friend auto operator<=>(const HighestWeight&, const HighestWeight&) = default;

private:
    std::vector<int> doubled_;
};

// Multiset of irreducible summands: weight -> multiplicity, all multiplicities
// strictly positive.  Iteration order of parts() is ascending lexicographic on
// the weights, which is exactly the row order of the multiplicity tables.
class Decomposition {
public:
    explicit Decomposition(std::size_t rank) : rank_(rank) {}

    std::size_t rank() const { return rank_; }
    const std::map<HighestWeight, Coeff>& parts() const { return parts_; }
    std::size_t summand_count() const { return parts_.size(); }

    // Multiplicity of lam, zero if absent.
    Coeff multiplicity(const HighestWeight& lam) const;
    // Adds mult copies of lam; mult must be strictly positive.
    void add(const HighestWeight& lam, const Coeff& mult);

    friend bool operator==(const Decomposition& a, const Decomposition& b) {
        return a.rank_ == b.rank_ && a.parts_ == b.parts_;
    }

private:
    std::size_t rank_;
    std::map<HighestWeight, Coeff> parts_;
};

enum class BaseRep { standard, spin };

// Char(Gamma_lam) of so(2m+1) by Weyl's character formula: the quotient of the
// alternant determinants det(x_j^{l_i} - x_j^{-l_i}) / det(x_j^{m_i} - x_j^{-m_i})
// with l_i = lambda_i + m - i + 1/2 and m_i = m - i + 1/2.  The quotient is
// always exact; results are memoized per (m, lam) and safe to request from
// several threads.
LaurentPolynomial weyl_character(std::size_t rank, const HighestWeight& lam);

// dim Gamma_lam by the type-B product formula, in exact rational arithmetic.
Coeff weyl_dim(std::size_t rank, const HighestWeight& lam);

// Character of the standard (2m+1)-dimensional representation or of the
// 2^m-dimensional spin representation.
LaurentPolynomial base_character(std::size_t rank, BaseRep which);

// Characters of Lambda^0 V, ..., Lambda^dmax V for the representation with
// character c, via the Adams recurrence
//   d * Char(Lambda^d V) = sum_{k=1}^{d} (-1)^{k-1} psi^k(Char V) Char(Lambda^{d-k} V).
// The division by d must be exact; if it is not, c was not the character of an
// actual representation and NotCharacterError is thrown.
std::vector<LaurentPolynomial> exterior_power_chars(const LaurentPolynomial& c, int dmax);

// Char(Lambda^d V) alone (computes the lower degrees internally).
LaurentPolynomial exterior_power_char(const LaurentPolynomial& c, int d);

// Peel-off decomposition into irreducibles: repeatedly read the leading term
// n_lam * x^lam, require lam dominant and n_lam > 0, subtract
// n_lam * weyl_character(lam), stop at zero.  Throws NotCharacterError when c
// is a virtual character (or corrupted): non-dominant leading exponent or
// negative leading coefficient.
Decomposition decompose(const LaurentPolynomial& c, std::size_t rank);

// Sum of mult * weyl_character(lam) over the summands; decompose/recombine is
// an exact round trip.
LaurentPolynomial recombine(const Decomposition& d);

// Sum of mult * weyl_dim(lam) over the summands.
Coeff dimension(const Decomposition& d);

} // namespace valspin
