#ifndef CMHOPF_COEFFICIENTS_HPP
#define CMHOPF_COEFFICIENTS_HPP

#include <vector>

#include "combinatorics.hpp"
#include "rational.hpp"

namespace cmhopf {

// A nonempty ordered list of blocks (n^1, ..., n^t); the concatenation of
// the blocks is itself a composition.
using BlockSequence = std::vector<Composition>;

// 1/(l(n^1)! ... l(n^t)!) * prod 1/(|n^i| + 1)
Rational coeff_A(BlockSequence const& blocks);

// C^{l(m^s)}_k * prod_{i<s} C^{l(m^i)}_{|m^{i+1}| + ... + |m^s| + k}
Integer coeff_B(BlockSequence const& blocks, int k);

// Alternating sum of B_k over every split of m.
Rational coeff_U(Composition const& m, int k);

// Coproduct coefficient alpha^n_m: sum_t C^t_m sum_{splits into t} A.
Rational alpha(Composition const& n, int m);

// Antipode coefficient. beta^{(n_1)} = -1; otherwise the prefix
// (n_1, ..., n_s) is split and n_{s+1} enters only as the index of U, with
// U evaluated on the block weights.
Rational beta(Composition const& n);

// prod_i (n_i + ... + n_s + 1)
Integer coeff_S(Composition const& c);

// (n_s + 1) * prod_{i>=2} (n_i + ... + n_s); (n_1 + 1) for length one.
Integer coeff_Q_closed(Composition const& c);

// Logarithm form: sum_t (-1)^{t-1}/t sum over t-tuples of words shuffling
// onto c of S^{n^1} ... S^{n^t}.
Rational coeff_Q_dual(Composition const& c);

// prod_{i=2}^{l(p)+1} (p_i + ... + p_s + k); the last factor is k.
Integer coeff_R(Composition const& p, int k);

// Table entries: n!/(n_1!...n_{s+1}!) alpha^{n_1..n_s}_{n_{s+1}} for
// length >= 2, and n!/(n_1!...n_s!) beta^{n_1..n_s}.
Rational coproduct_table_entry(Composition const& c);
Rational antipode_table_entry(Composition const& c);

}  // namespace cmhopf

#endif  // CMHOPF_COEFFICIENTS_HPP
