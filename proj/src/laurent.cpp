#include "valspin/laurent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace valspin {

namespace {

void check_equal_rank(std::size_t a, std::size_t b, const char* op) {
    if (a != b) {
        std::ostringstream msg;
        msg << "rank mismatch in " << op << ": " << a << " vs " << b;
        throw RankMismatchError(msg.str());
    }
}

// Doubled exponent -> human form: even entries are integers, odd entries
// render as halves ("3/2", "-1/2").
std::string exponent_entry_to_string(int doubled) {
    std::ostringstream out;
    if (doubled % 2 == 0) {
        out << doubled / 2;
    } else {
        out << doubled << "/2";
    }
    return out.str();
}

} // namespace

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
    check_equal_rank(rank(), o.rank(), "exponent addition");
    ExponentVector r(*this);
    for (std::size_t i = 0; i < r.doubled.size(); ++i) r.doubled[i] += o.doubled[i];
    return r;
}

ExponentVector ExponentVector::operator-(const ExponentVector& o) const {
    check_equal_rank(rank(), o.rank(), "exponent subtraction");
    ExponentVector r(*this);
    for (std::size_t i = 0; i < r.doubled.size(); ++i) r.doubled[i] -= o.doubled[i];
    return r;
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t rank, Coeff c) {
    LaurentPolynomial p(rank);
    p.add_term(ExponentVector::zero(rank), c);
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(ExponentVector e, Coeff c) {
    LaurentPolynomial p(e.rank());
    p.add_term(e, c);
    return p;
}

Coeff LaurentPolynomial::coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
}

void LaurentPolynomial::add_term(const ExponentVector& e, const Coeff& c) {
    if (c == 0) return;
    check_equal_rank(rank_, e.rank(), "add_term");
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    check_same_rank(o, "add");
    LaurentPolynomial r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    check_same_rank(o, "subtract");
    LaurentPolynomial r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    check_same_rank(o, "multiply");
    LaurentPolynomial r(rank_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            r.add_term(ea + eb, ca * cb);
        }
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r(rank_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const Coeff& c) const {
    LaurentPolynomial r(rank_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

LaurentPolynomial LaurentPolynomial::adams_substitute(int k) const {
    if (k < 1) {
        throw ArgumentError("Adams operator requires k >= 1, got " + std::to_string(k));
    }
    LaurentPolynomial r(rank_);
    for (const auto& [e, c] : terms_) {
        ExponentVector scaled = e;
        for (int& d : scaled.doubled) d *= k;
        r.terms_.emplace(std::move(scaled), c);
    }
    return r;
}

std::optional<Term> LaurentPolynomial::leading_term() const {
    if (terms_.empty()) return std::nullopt;
    auto it = std::prev(terms_.end());
    return Term{it->first, it->second};
}

LaurentPolynomial LaurentPolynomial::divide_coefficients(const Coeff& d) const {
    if (d == 0) throw DivisionError("division of coefficients by zero");
    LaurentPolynomial r(rank_);
    for (const auto& [e, c] : terms_) {
        if (c % d != 0) {
            throw DivisionError("coefficient " + c.str() + " not divisible by " + d.str());
        }
        r.terms_.emplace(e, c / d);
    }
    return r;
}

Coeff LaurentPolynomial::evaluate_at_one() const {
    Coeff s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

LaurentPolynomial LaurentPolynomial::permute_variables(const std::vector<std::size_t>& perm) const {
    if (perm.size() != rank_) {
        throw ArgumentError("permutation length does not match rank");
    }
    std::vector<bool> seen(rank_, false);
    for (std::size_t p : perm) {
        if (p >= rank_ || seen[p]) throw ArgumentError("not a permutation of the variables");
        seen[p] = true;
    }
    LaurentPolynomial r(rank_);
    for (const auto& [e, c] : terms_) {
        ExponentVector moved = ExponentVector::zero(rank_);
        for (std::size_t j = 0; j < rank_; ++j) moved.doubled[perm[j]] = e.doubled[j];
        r.terms_.emplace(std::move(moved), c);
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::invert_variable(std::size_t j) const {
    if (j >= rank_) throw ArgumentError("variable index out of range");
    LaurentPolynomial r(rank_);
    for (const auto& [e, c] : terms_) {
        ExponentVector flipped = e;
        flipped.doubled[j] = -flipped.doubled[j];
        r.terms_.emplace(std::move(flipped), c);
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::invert_all_variables() const {
    LaurentPolynomial r(rank_);
    for (const auto& [e, c] : terms_) {
        ExponentVector flipped = e;
        for (int& d : flipped.doubled) d = -d;
        r.terms_.emplace(std::move(flipped), c);
    }
    return r;
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Descending lex, to match the leading-term-first convention of the
    // decomposition algorithm.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Coeff mag = c < 0 ? Coeff(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string mono;
        for (std::size_t j = 0; j < rank_; ++j) {
            int d = e.doubled[j];
            if (d == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(j + 1);
            if (d != 2) mono += "^" + exponent_entry_to_string(d);
        }
        if (mono.empty()) {
            out << mag;
        } else {
            if (mag != 1) out << mag << "*";
            out << mono;
        }
    }
    return out.str();
}

void LaurentPolynomial::check_same_rank(const LaurentPolynomial& o, const char* op) const {
    check_equal_rank(rank_, o.rank_, op);
}

LaurentPolynomial exact_divide(const LaurentPolynomial& num, const LaurentPolynomial& den) {
    check_equal_rank(num.rank(), den.rank(), "exact_divide");
    if (den.is_zero()) throw DivisionError("division by the zero polynomial");
    const std::size_t m = num.rank();
    LaurentPolynomial quotient(m);
    if (num.is_zero()) return quotient;

    // Support box for the quotient.  The Newton polytope of a product is the
    // Minkowski sum of the factors' polytopes, and per-coordinate min/max are
    // additive under Minkowski sums, so every exponent of the true quotient
    // lies in [min_i(num) - min_i(den), max_i(num) - max_i(den)] coordinate by
    // coordinate.  A candidate term outside the box proves the division is
    // not exact, and the box also bounds the number of elimination steps:
    // successive quotient exponents strictly decrease in lex order, and only
    // finitely many lattice points fit in the box.
    std::vector<int> lo(m, std::numeric_limits<int>::max());
    std::vector<int> hi(m, std::numeric_limits<int>::min());
    std::vector<int> den_lo(m, std::numeric_limits<int>::max());
    std::vector<int> den_hi(m, std::numeric_limits<int>::min());
    for (const auto& [e, c] : num.terms()) {
        for (std::size_t i = 0; i < m; ++i) {
            lo[i] = std::min(lo[i], e.doubled[i]);
            hi[i] = std::max(hi[i], e.doubled[i]);
        }
    }
    for (const auto& [e, c] : den.terms()) {
        for (std::size_t i = 0; i < m; ++i) {
            den_lo[i] = std::min(den_lo[i], e.doubled[i]);
            den_hi[i] = std::max(den_hi[i], e.doubled[i]);
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        lo[i] -= den_lo[i];
        hi[i] -= den_hi[i];
        if (lo[i] > hi[i]) {
            throw DivisionError("numerator is not a multiple of the denominator "
                                "(empty quotient support in coordinate " + std::to_string(i + 1) + ")");
        }
    }

    const Term den_lead = *den.leading_term();
    LaurentPolynomial remainder = num;
    while (auto rem_lead = remainder.leading_term()) {
        ExponentVector q = rem_lead->exponent - den_lead.exponent;
        for (std::size_t i = 0; i < m; ++i) {
            if (q.doubled[i] < lo[i] || q.doubled[i] > hi[i]) {
                throw DivisionError("non-exact division: remainder leading term "
                                    "cannot be produced by any quotient term");
            }
        }
        if (rem_lead->coefficient % den_lead.coefficient != 0) {
            throw DivisionError("non-exact division: leading coefficient " +
                                rem_lead->coefficient.str() + " not divisible by " +
                                den_lead.coefficient.str());
        }
        Coeff qc = rem_lead->coefficient / den_lead.coefficient;
        quotient.add_term(q, qc);
        remainder = remainder - den * LaurentPolynomial::monomial(q, qc);
    }
    return quotient;
}

} // namespace valspin
