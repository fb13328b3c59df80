#include "valspin/valdim.hpp"

#include <set>

namespace valspin {

namespace {

// All cached state of the module, built on first use.  The builds are pure and
// deterministic, so a single lazily-initialized instance (thread-safe per the
// C++ static-initialization rules) serves every query of the process.
struct Tables {
    std::vector<LaurentPolynomial> spin9_chars;     // Lambda^k, k = 0..16
    std::vector<Decomposition> spin9_decomps;
    std::vector<LaurentPolynomial> so7_chars;       // Lambda^i, i = 0..15
    std::vector<Decomposition> so7_decomps;
    std::vector<HighestWeight> so7_weights;         // union of supports, ascending
    std::vector<Coeff> bk;                          // k = 0..16
    std::vector<std::vector<Coeff>> bkl;            // 16 x 16
};

Tables build_tables() {
    Tables t;

    t.spin9_chars = exterior_power_chars(base_character(4, BaseRep::spin), 16);
    t.spin9_decomps.reserve(17);
    for (int k = 0; k <= 16; ++k) {
        t.spin9_decomps.push_back(decompose(t.spin9_chars[static_cast<std::size_t>(k)], 4));
    }

    const LaurentPolynomial o_sum =
        base_character(3, BaseRep::standard) + base_character(3, BaseRep::spin);
    t.so7_chars = exterior_power_chars(o_sum, 15);
    t.so7_decomps.reserve(16);
    for (int i = 0; i <= 15; ++i) {
        t.so7_decomps.push_back(decompose(t.so7_chars[static_cast<std::size_t>(i)], 3));
    }

    std::set<HighestWeight> weights;
    for (const auto& d : t.so7_decomps) {
        for (const auto& [lam, mult] : d.parts()) weights.insert(lam);
    }
    t.so7_weights.assign(weights.begin(), weights.end());

    const HighestWeight trivial4(std::vector<int>{0, 0, 0, 0});
    t.bk.reserve(17);
    for (int k = 0; k <= 16; ++k) {
        t.bk.push_back(t.spin9_decomps[static_cast<std::size_t>(k)].multiplicity(trivial4));
    }

    t.bkl.assign(16, std::vector<Coeff>(16, 0));
    for (int k = 0; k < 16; ++k) {
        for (int l = 0; l < 16; ++l) {
            Coeff s = 0;
            for (const auto& [lam, mult] : t.so7_decomps[static_cast<std::size_t>(k)].parts()) {
                s += mult * t.so7_decomps[static_cast<std::size_t>(l)].multiplicity(lam);
            }
            t.bkl[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] = s;
        }
    }
    return t;
}

const Tables& tables() {
    static const Tables t = build_tables();
    return t;
}

} // namespace

Coeff compute_bk(int k) {
    if (k < 0 || k > 16) return 0;
    return tables().bk[static_cast<std::size_t>(k)];
}

const std::vector<Decomposition>& compute_so7_table() {
    return tables().so7_decomps;
}

Coeff compute_bkl(int k, int l) {
    if (k < 0 || k > 15 || l < 0 || l > 15) return 0;
    return tables().bkl[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
}

Coeff val_dimension(int k) {
    if (k < 0 || k > 16) {
        throw ArgumentError("valuation degree must be between 0 and 16, got " + std::to_string(k));
    }
    constexpr int n = 16;
    Coeff sum = 0;
    for (int l = 0; l <= n - k - 1; ++l) {
        const Coeff diff = compute_bkl(k, l) - compute_bkl(k - 1, l - 1);
        sum += ((n - k - l - 1) % 2 == 0) ? diff : -diff;
    }
    const Coeff last = compute_bk(k);
    sum += ((n - k) % 2 == 0) ? last : -last;
    return sum;
}

ValuationReport full_report() {
    const Tables& t = tables();
    ValuationReport r;
    r.bk = t.bk;
    r.bkl = t.bkl;
    r.dimensions.reserve(17);
    r.total = 0;
    for (int k = 0; k <= 16; ++k) {
        r.dimensions.push_back(val_dimension(k));
        r.total += r.dimensions.back();
    }
    r.so7_weights = t.so7_weights;
    r.so7_mults.assign(t.so7_weights.size(), std::vector<Coeff>(16, 0));
    for (std::size_t row = 0; row < t.so7_weights.size(); ++row) {
        for (std::size_t i = 0; i < 16; ++i) {
            r.so7_mults[row][i] = t.so7_decomps[i].multiplicity(t.so7_weights[row]);
        }
    }
    r.spin9_summands = t.spin9_decomps;
    return r;
}

const std::vector<LaurentPolynomial>& spin9_exterior_chars() {
    return tables().spin9_chars;
}

const std::vector<Decomposition>& spin9_exterior_decompositions() {
    return tables().spin9_decomps;
}

const std::vector<LaurentPolynomial>& so7_exterior_chars() {
    return tables().so7_chars;
}

const std::vector<HighestWeight>& so7_weight_rows() {
    return tables().so7_weights;
}

} // namespace valspin
