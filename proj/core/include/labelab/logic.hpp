#ifndef LABELAB_LOGIC_HPP
#define LABELAB_LOGIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <optional>
#include <vector>

#include "labelab/boolean_table.hpp"
#include "labelab/decoder.hpp"
#include "labelab/formula.hpp"

namespace labelab {

using BigInt = boost::multiprecision::cpp_int;

/// Per-vertex label of a logical labeling scheme: k values in [n^c]_0.
using NumLabel = std::vector<long long>;

/// Free-variable assignment: x1..xk then y1..yk.
using Assignment = std::vector<long long>;

/// Tarskian evaluation over the bounded structure with universe [n]_0:
/// addition and multiplication overflow to 0 past n, quantifiers range over
/// the universe, c0/c1/cm read 0/1/n. Assigned values must lie in [n]_0.
bool eval_bounded(const Formula& phi, const Assignment& a, long long n);

/// Quantifier-free evaluation over the naturals with exact arithmetic.
/// cm must be supplied when the formula mentions it.
bool eval_infinite(const Formula& phi, const std::vector<BigInt>& a,
                   const std::optional<BigInt>& cm = std::nullopt);
bool eval_infinite(const Formula& phi, const Assignment& a,
                   const std::optional<long long>& cm = std::nullopt);

/// Incorporates the bounded structure's overflow checks into the formula:
/// the result, read over the naturals with cm bound to the universe maximum,
/// agrees with bounded evaluation of the input on every in-universe
/// assignment. One case split per non-leaf subterm, bottom-up.
FormulaPtr guard_transform(const Formula& phi);

/// Quantifier elimination for formulas over {<,=}: the result is
/// quantifier-free over {<,+} with constants and agrees with the input on
/// every bounded structure. Unsatisfiable clauses become c0 < c0.
FormulaPtr qe_order(const Formula& phi);

/// Atoms of a quantifier-free formula, one entry per occurrence in
/// left-to-right order, plus the underlying boolean function.
struct AtomsDecomposition {
    std::vector<FormulaPtr> atoms;
    BooleanFunctionTable f;
};
AtomsDecomposition atoms_decompose(const Formula& phi);

/// Order-isomorphic relabeling of a linear atom over {<,+}: value ranks of
/// the rearranged sides. The atom holds on (old x-label, old y-label) iff
/// rank1(x) < rank2(y) (or =, for equality atoms).
class NormalizedLinearAtom {
public:
    NormalizedLinearAtom(const Formula& atom, long long n, int c);

    bool is_equality() const { return is_equality_; }
    /// Maps a k-value label to the two-number label (left rank, right rank).
    std::pair<long long, long long> transform(const NumLabel& label) const;

private:
    long long side_value(const NumLabel& label, bool left) const;

    bool is_equality_;
    int k_;
    long long bound_;
    std::vector<long long> left_coeff_, right_coeff_;
    std::vector<long long> sorted_values_; // E_n, ascending
};

/// Numeric label decoder derived from a formula; bounded semantics evaluates
/// over the universe [n^c]_0 implied by the vertex count, infinite semantics
/// over the naturals.
struct FoScheme {
    FormulaPtr phi;
    int c = 1;
    int k = 1;      // values per vertex
    bool bounded = true;

    long long universe(int n) const; // n^c
    bool accepts(int n, const NumLabel& x, const NumLabel& y) const;
};

FoScheme fo_scheme(FormulaPtr phi, int c, bool bounded = true);

/// Serialization of numeric labels into bit labels: k+1 blocks of equal
/// width, the last block promised to contain the universe bound.
BitLabel serialize_num_label(const NumLabel& values, long long bound, int block_width);
std::pair<NumLabel, long long> parse_num_label(const BitLabel& label, int k);

/// Definition-1 decoder view of a formula scheme: labels carry their own
/// universe bound in a trailing block.
DecoderPtr fo_decoder(const FoScheme& scheme);

} // namespace labelab

#endif
