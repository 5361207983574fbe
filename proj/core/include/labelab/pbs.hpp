#ifndef LABELAB_PBS_HPP
#define LABELAB_PBS_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "labelab/boolean_table.hpp"
#include "labelab/graph.hpp"
#include "labelab/polynomial.hpp"

namespace labelab {

/// Boolean function over the l*l comparison matrix. Small functions carry an
/// explicit truth table (and serialize); the built-in geometric systems need
/// arities past any materializable table and carry a programmatic form.
class PbsBoolFn {
public:
    PbsBoolFn(BooleanFunctionTable table);
    PbsBoolFn(int arity, std::function<bool(const std::vector<bool>&)> fn);

    int arity() const { return arity_; }
    bool eval(const std::vector<bool>& args) const;
    const std::optional<BooleanFunctionTable>& table() const { return table_; }

private:
    int arity_;
    std::optional<BooleanFunctionTable> table_;
    std::function<bool(const std::vector<bool>&)> fn_;
};

/// Polynomial-boolean system: l polynomials over 2k variables plus an
/// l^2-ary boolean function over their pairwise strict comparisons.
struct Pbs {
    int vars = 0; // 2k
    std::vector<Polynomial> polys;
    PbsBoolFn f;

    int k() const { return vars / 2; }
    int l() const { return static_cast<int>(polys.size()); }
    void validate() const;
};

/// Exact evaluation: all polynomials are evaluated, the comparison matrix
/// x_{i,j} = [p_i(a) < p_j(a)] is formed row-major, and f is applied.
bool pbs_eval(const Pbs& r, const std::vector<BigInt>& values);
bool pbs_eval(const Pbs& r, const std::vector<BigRat>& values);

/// Built-in systems. Vertex labels: dot product k values; disk (cx, cy, r);
/// segment (ax, ay, bx, by) endpoints.
Pbs dot_product_pbs(int k);
Pbs disk_pbs();
Pbs segment_pbs();

/// Independent geometric predicates used as oracles in tests.
bool disks_intersect(const std::vector<BigRat>& a, const std::vector<BigRat>& b);
bool segments_intersect(const std::vector<BigRat>& a, const std::vector<BigRat>& b);

/// Membership in Q_m = { s*a/b : a, b in [m], s in {-1,0,1} }.
bool in_Qm(const BigRat& value, const BigInt& m);

/// Uniform denominator clearing: each rational value a/b becomes the pair
/// (a, b) with b >= 1; every polynomial is multiplied by the same product of
/// denominator powers, so all comparisons and f are preserved.
Pbs clear_denominators(const Pbs& r);
std::vector<BigInt> clear_denominators_labels(const std::vector<BigRat>& values);

/// Splits one comparison p < q by a sign pattern over the inputs: returns
/// (p', q') over absolute values such that p(a) < q(a) iff p'(|a|) < q'(|a|)
/// whenever sign(a) matches the pattern.
std::pair<Polynomial, Polynomial> split_comparison(const Polynomial& p,
                                                   const Polynomial& q,
                                                   const std::vector<int>& signs);

/// Rational-to-non-negative transform: per original variable one absolute
/// value and one sign witness (equal to the absolute value iff negative);
/// one polynomial pair per comparison and sign pattern plus the identity
/// polynomials that decode the signs. Rejected above 6 original variables.
struct SignSplit {
    Pbs system;
    /// Encodes original rational labels into the doubled form.
    std::vector<BigRat> encode(const std::vector<BigRat>& values) const;

    int original_vars = 0;
};
SignSplit sign_split(const Pbs& r);

/// Counts distinct labeled loop-free graphs on n vertices realizable with
/// integer labels bounded by B; (B+1)^(k n) must stay within budget.
struct ProbeResult {
    std::uint64_t count = 0;
    std::uint64_t labelings = 0;
    /// Warren-style ceiling log2((c d l^2 n^2 / (k n))^(k n)) for a supplied
    /// constant; reported, never asserted.
    double warren_log2_bound(double cconst, const Pbs& r, int n) const;
};
ProbeResult sign_pattern_probe(const Pbs& r, int n, long long bound,
                               std::uint64_t budget = 10'000'000);

/// Verification of a labeling against a graph; with a size bound s the label
/// values must lie in [s]_0 (or Q_s for rationals).
bool verify_pbs_labeling(const Pbs& r, const std::vector<std::vector<BigInt>>& labels,
                         const Graph& g, bool proper_only,
                         const std::optional<BigInt>& size_bound = std::nullopt);
bool verify_pbs_labeling(const Pbs& r, const std::vector<std::vector<BigRat>>& labels,
                         const Graph& g, bool proper_only,
                         const std::optional<BigInt>& size_bound = std::nullopt);

} // namespace labelab

#endif
