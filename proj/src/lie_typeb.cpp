#include "valspin/lie_typeb.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

namespace valspin {

namespace {

void validate_dominant(const std::vector<int>& doubled) {
    if (doubled.empty()) {
        throw ArgumentError("a highest weight needs at least one entry");
    }
    for (std::size_t i = 0; i < doubled.size(); ++i) {
        if (doubled[i] < 0) {
            throw ArgumentError("highest weight entries must be non-negative");
        }
        if (i + 1 < doubled.size() && doubled[i] < doubled[i + 1]) {
            throw ArgumentError("highest weight entries must be weakly decreasing");
        }
        if ((doubled[i] - doubled[0]) % 2 != 0) {
            throw ArgumentError("highest weight entries must be all integers or all half-integers");
        }
    }
}

int parse_weight_entry(const std::string& raw) {
    std::string s = raw;
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](unsigned char ch) { return std::isspace(ch); }),
            s.end());
    if (s.empty()) throw ArgumentError("empty weight entry");
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t used = 0;
            int v = std::stoi(s, &used);
            if (used != s.size()) throw ArgumentError("malformed weight entry '" + raw + "'");
            return 2 * v;
        }
        if (s.substr(slash + 1) != "2") {
            throw ArgumentError("weight entry '" + raw + "' must have denominator 2");
        }
        std::string numer = s.substr(0, slash);
        std::size_t used = 0;
        int v = std::stoi(numer, &used);
        if (used != numer.size()) throw ArgumentError("malformed weight entry '" + raw + "'");
        return v;
    } catch (const std::invalid_argument&) {
        throw ArgumentError("malformed weight entry '" + raw + "'");
    } catch (const std::out_of_range&) {
        throw ArgumentError("weight entry '" + raw + "' out of range");
    }
}

// det of an m x m matrix of Laurent polynomials by Leibniz expansion.  m! stays
// tiny at the ranks used here (24 permutations at rank 4).
LaurentPolynomial leibniz_determinant(const std::vector<std::vector<LaurentPolynomial>>& a,
                                      std::size_t rank) {
    const std::size_t m = a.size();
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    LaurentPolynomial det(rank);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                if (perm[i] > perm[j]) ++inversions;
        LaurentPolynomial prod = LaurentPolynomial::constant(rank, 1);
        for (std::size_t j = 0; j < m; ++j) prod = prod * a[perm[j]][j];
        det = (inversions % 2 == 0) ? det + prod : det - prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

// Alternant det(x_j^{rho_i} - x_j^{-rho_i}) for doubled exponents rho.
LaurentPolynomial alternant(const std::vector<int>& rho_doubled, std::size_t m) {
    std::vector<std::vector<LaurentPolynomial>> a(m, std::vector<LaurentPolynomial>(m, LaurentPolynomial(m)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            ExponentVector up = ExponentVector::zero(m);
            up.doubled[j] = rho_doubled[i];
            ExponentVector down = ExponentVector::zero(m);
            down.doubled[j] = -rho_doubled[i];
            LaurentPolynomial entry(m);
            entry.add_term(up, 1);
            entry.add_term(down, -1);
            a[i][j] = std::move(entry);
        }
    }
    return leibniz_determinant(a, m);
}

} // namespace

HighestWeight::HighestWeight(std::vector<int> doubled_entries)
    : doubled_(std::move(doubled_entries)) {
    validate_dominant(doubled_);
}

HighestWeight HighestWeight::parse(const std::string& text) {
    std::string body = text;
    auto strip = [](std::string& s, char open, char close) {
        if (s.size() >= 2 && s.front() == open && s.back() == close) {
            s = s.substr(1, s.size() - 2);
        }
    };
    strip(body, '[', ']');
    strip(body, '(', ')');
    std::vector<int> doubled;
    std::string entry;
    std::istringstream in(body);
    while (std::getline(in, entry, ',')) {
        doubled.push_back(parse_weight_entry(entry));
    }
    if (doubled.empty()) throw ArgumentError("empty weight string '" + text + "'");
    return HighestWeight(std::move(doubled));
}

std::vector<std::string> HighestWeight::entry_strings() const {
    std::vector<std::string> out;
    out.reserve(doubled_.size());
    for (int d : doubled_) {
        if (d % 2 == 0) {
            out.push_back(std::to_string(d / 2));
        } else {
            out.push_back(std::to_string(d) + "/2");
        }
    }
    return out;
}

std::string HighestWeight::to_string() const {
    std::string s = "[";
    const auto entries = entry_strings();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i > 0) s += ",";
        s += entries[i];
    }
    s += "]";
    return s;
}

Coeff Decomposition::multiplicity(const HighestWeight& lam) const {
    auto it = parts_.find(lam);
    return it == parts_.end() ? Coeff(0) : it->second;
}

void Decomposition::add(const HighestWeight& lam, const Coeff& mult) {
    if (lam.rank() != rank_) {
        throw RankMismatchError("summand rank does not match decomposition rank");
    }
    if (mult <= 0) {
        throw ArgumentError("decomposition multiplicities must be strictly positive");
    }
    parts_[lam] += mult;
}

LaurentPolynomial weyl_character(std::size_t rank, const HighestWeight& lam) {
    if (lam.rank() != rank) {
        throw RankMismatchError("weight rank does not match requested algebra rank");
    }

    using Key = std::pair<std::size_t, std::vector<int>>;
    static std::map<Key, LaurentPolynomial> cache;
    static std::mutex cache_mutex;
    const Key key{rank, lam.doubled_entries()};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    const std::size_t m = rank;
    // Doubled shifted exponents: l_i = lambda_i + m - i + 1/2 and
    // m_i = m - i + 1/2 (1-based i), so doubled they are
    // 2*lambda_i + 2(m-i) + 1 and 2(m-i) + 1.
    std::vector<int> l(m), rho(m);
    for (std::size_t i = 0; i < m; ++i) {
        rho[i] = 2 * static_cast<int>(m - i - 1) + 1;
        l[i] = lam.doubled_entries()[i] + rho[i];
    }
    LaurentPolynomial quotient = exact_divide(alternant(l, m), alternant(rho, m));

    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.try_emplace(key, std::move(quotient)).first->second;
}

Coeff weyl_dim(std::size_t rank, const HighestWeight& lam) {
    if (lam.rank() != rank) {
        throw RankMismatchError("weight rank does not match requested algebra rank");
    }
    using boost::multiprecision::cpp_rational;
    const std::size_t m = rank;
    std::vector<long long> l(m), rho(m);
    for (std::size_t i = 0; i < m; ++i) {
        rho[i] = 2 * static_cast<long long>(m - i - 1) + 1;
        l[i] = lam.doubled_entries()[i] + rho[i];
    }
    // The doubling cancels in every ratio, so the doubled values can be used
    // directly: (L_i^2 - L_j^2)/(M_i^2 - M_j^2) and L_i/M_i.
    cpp_rational dim = 1;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            dim *= cpp_rational(l[i] * l[i] - l[j] * l[j], rho[i] * rho[i] - rho[j] * rho[j]);
        }
        dim *= cpp_rational(l[i], rho[i]);
    }
    if (boost::multiprecision::denominator(dim) != 1) {
        throw Error("internal error: Weyl dimension formula gave a non-integer");
    }
    return boost::multiprecision::numerator(dim);
}

LaurentPolynomial base_character(std::size_t rank, BaseRep which) {
    const std::size_t m = rank;
    LaurentPolynomial c(m);
    if (which == BaseRep::standard) {
        // Weights +-L_j and 0: sum_j (x_j + x_j^{-1}) + 1.
        c.add_term(ExponentVector::zero(m), 1);
        for (std::size_t j = 0; j < m; ++j) {
            ExponentVector up = ExponentVector::zero(m);
            up.doubled[j] = 2;
            c.add_term(up, 1);
            ExponentVector down = ExponentVector::zero(m);
            down.doubled[j] = -2;
            c.add_term(down, 1);
        }
    } else {
        // Weights (+-1/2, ..., +-1/2): one term per sign pattern.
        for (std::size_t bits = 0; bits < (std::size_t{1} << m); ++bits) {
            ExponentVector e = ExponentVector::zero(m);
            for (std::size_t j = 0; j < m; ++j) {
                e.doubled[j] = (bits >> j) & 1 ? 1 : -1;
            }
            c.add_term(e, 1);
        }
    }
    return c;
}

std::vector<LaurentPolynomial> exterior_power_chars(const LaurentPolynomial& c, int dmax) {
    if (dmax < 0) throw ArgumentError("exterior power degree must be non-negative");
    const std::size_t m = c.rank();
    std::vector<LaurentPolynomial> lambda;
    lambda.reserve(static_cast<std::size_t>(dmax) + 1);
    lambda.push_back(LaurentPolynomial::constant(m, 1));
    if (dmax == 0) return lambda;

    std::vector<LaurentPolynomial> psi;
    psi.reserve(static_cast<std::size_t>(dmax) + 1);
    psi.push_back(LaurentPolynomial(m)); // unused slot for k = 0
    for (int k = 1; k <= dmax; ++k) psi.push_back(c.adams_substitute(k));

    for (int d = 1; d <= dmax; ++d) {
        LaurentPolynomial acc(m);
        for (int k = 1; k <= d; ++k) {
            LaurentPolynomial contrib = psi[static_cast<std::size_t>(k)] * lambda[static_cast<std::size_t>(d - k)];
            acc = (k % 2 == 1) ? acc + contrib : acc - contrib;
        }
        try {
            lambda.push_back(acc.divide_coefficients(d));
        } catch (const DivisionError&) {
            throw NotCharacterError("exterior power recurrence does not divide by " +
                                    std::to_string(d) +
                                    ": the input is not the character of a representation");
        }
    }
    return lambda;
}

LaurentPolynomial exterior_power_char(const LaurentPolynomial& c, int d) {
    auto all = exterior_power_chars(c, d);
    return std::move(all.back());
}

Decomposition decompose(const LaurentPolynomial& c, std::size_t rank) {
    if (c.rank() != rank) {
        throw RankMismatchError("character rank does not match requested algebra rank");
    }
    Decomposition result(rank);
    LaurentPolynomial rem = c;
    while (auto lead = rem.leading_term()) {
        if (lead->coefficient < 0) {
            throw NotCharacterError("leading coefficient " + lead->coefficient.str() +
                                    " is negative: not the character of a representation");
        }
        HighestWeight lam = [&] {
            try {
                return HighestWeight(lead->exponent.doubled);
            } catch (const ArgumentError& e) {
                throw NotCharacterError(std::string("leading exponent is not a dominant weight (") +
                                        e.what() + "): not the character of a representation");
            }
        }();
        result.add(lam, lead->coefficient);
        // Subtracting n_lam * Char(Gamma_lam) cancels the leading term, so the
        // next leading exponent is strictly lower in lex order; all peeled
        // weights stay dominant inside a fixed finite box, so the loop ends.
        rem = rem - weyl_character(rank, lam) * lead->coefficient;
    }
    return result;
}

LaurentPolynomial recombine(const Decomposition& d) {
    LaurentPolynomial sum(d.rank());
    for (const auto& [lam, mult] : d.parts()) {
        sum = sum + weyl_character(d.rank(), lam) * mult;
    }
    return sum;
}

Coeff dimension(const Decomposition& d) {
    Coeff total = 0;
    for (const auto& [lam, mult] : d.parts()) {
        total += mult * weyl_dim(d.rank(), lam);
    }
    return total;
}

} // namespace valspin
