#ifndef LABELAB_BOOLEAN_TABLE_HPP
#define LABELAB_BOOLEAN_TABLE_HPP

#include <functional>
#include <string>
#include <vector>

#include "labelab/graph.hpp"

namespace labelab {

/// Explicit truth table for a k-ary boolean function. Bit at index i is the
/// value on the big-endian binary expansion of i, first argument = most
/// significant bit. Arity is capped so tables stay materializable.
class BooleanFunctionTable {
public:
    static constexpr int kMaxArity = 25;

    BooleanFunctionTable(int arity, std::vector<bool> table);

    static BooleanFunctionTable from_function(
        int arity, const std::function<bool(const std::vector<bool>&)>& fn);

    static BooleanFunctionTable constant(int arity, bool value);
    static BooleanFunctionTable negation();    // arity 1
    static BooleanFunctionTable identity();    // arity 1
    static BooleanFunctionTable conjunction(); // arity 2
    static BooleanFunctionTable disjunction(); // arity 2

    int arity() const { return arity_; }
    const std::vector<bool>& table() const { return table_; }

    bool eval(const std::vector<bool>& args) const;
    /// Matrix application for k^2-ary tables: flattens A row-major
    /// ("left to right and top to bottom").
    bool eval_matrix(const std::vector<std::vector<bool>>& a) const;

    /// Arity must be a perfect square k^2; true iff the value depends only
    /// on the k diagonal positions.
    bool diagonal() const;

    std::string to_hex() const;
    static BooleanFunctionTable from_hex(int arity, const std::string& hex);

private:
    int arity_;
    std::vector<bool> table_;
};

/// Graph-level boolean application: the returned graph has edge (u,v),
/// self-pairs included, iff f on the indicator vector of (u,v)-edges of the
/// argument graphs is 1.
Graph apply_boolean(const BooleanFunctionTable& f, const std::vector<Graph>& graphs);

Graph edge_complement(const Graph& g);

} // namespace labelab

#endif
