#pragma once

#include <vector>

#include "valspin/lie_typeb.hpp"

namespace valspin {

// Everything the dimension computation produces, aggregated once: the
// invariant counts b_k (k = 0..16), the full 16x16 pairing table b_{k,l}, the
// seventeen valuation-space dimensions with their total, the so(7)
// multiplicity table (rows in ascending lexicographic weight order, columns
// i = 0..15), and the so(9) exterior-power decompositions.
struct ValuationReport {
    std::vector<Coeff> bk;                      // index k = 0..16
    std::vector<std::vector<Coeff>> bkl;        // bkl[k][l], 0 <= k,l <= 15
    std::vector<Coeff> dimensions;              // index k = 0..16
    Coeff total;                                // sum of dimensions
    std::vector<HighestWeight> so7_weights;     // the 20 weights, ascending lex
    std::vector<std::vector<Coeff>> so7_mults;  // so7_mults[row][i], i = 0..15
    std::vector<Decomposition> spin9_summands;  // index k = 0..16
};

// b_k = multiplicity of the trivial representation in Lambda^k of the
// 16-dimensional so(9) spin representation.  Out-of-range k gives 0.
Coeff compute_bk(int k);

// Decompositions over so(7) of Lambda^i(standard + spin) = Lambda^i(R^15) for
// i = 0..15, computed once per process.
const std::vector<Decomposition>& compute_so7_table();

// b_{k,l} = sum_lam n^(k)_lam * n^(l)_lam, the Schur pairing of the so(7)
// multiplicity vectors.  Out-of-range k or l gives 0.
Coeff compute_bkl(int k, int l);

// dim Val_k^{Spin(9)} for 0 <= k <= 16 via the alternating sum
//   sum_{l=0}^{n-k-1} (-1)^{n-k-l-1} (b_{k,l} - b_{k-1,l-1}) + (-1)^{n-k} b_k
// with n = 16 and every out-of-range b taken as zero.
Coeff val_dimension(int k);

// Deterministic aggregation of all of the above; total is always 143.
ValuationReport full_report();

// Cached intermediates, exposed for tests and the CLI.  All are computed once
// per process on first use.
const std::vector<LaurentPolynomial>& spin9_exterior_chars();          // k = 0..16
const std::vector<Decomposition>& spin9_exterior_decompositions();     // k = 0..16
const std::vector<LaurentPolynomial>& so7_exterior_chars();            // i = 0..15
const std::vector<HighestWeight>& so7_weight_rows();                   // 20 rows

} // namespace valspin
