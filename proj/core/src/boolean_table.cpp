#include "labelab/boolean_table.hpp"

#include <cmath>
#include <stdexcept>

namespace labelab {

namespace {

int square_root_arity(int arity) {
    int k = static_cast<int>(std::lround(std::sqrt(static_cast<double>(arity))));
    if (k * k != arity)
        throw std::invalid_argument("arity is not a perfect square");
    return k;
}

} // namespace

BooleanFunctionTable::BooleanFunctionTable(int arity, std::vector<bool> table)
    : arity_(arity), table_(std::move(table)) {
    if (arity < 0 || arity > kMaxArity)
        throw std::invalid_argument("boolean table arity out of range");
    if (table_.size() != (std::size_t{1} << arity))
        throw std::invalid_argument("boolean table length is not 2^arity");
}

BooleanFunctionTable BooleanFunctionTable::from_function(
    int arity, const std::function<bool(const std::vector<bool>&)>& fn) {
    if (arity < 0 || arity > kMaxArity)
        throw std::invalid_argument("boolean table arity out of range");
    std::vector<bool> table(std::size_t{1} << arity);
    std::vector<bool> args(arity);
    for (std::size_t i = 0; i < table.size(); ++i) {
        for (int j = 0; j < arity; ++j)
            args[j] = (i >> (arity - 1 - j)) & 1;
        table[i] = fn(args);
    }
    return BooleanFunctionTable(arity, std::move(table));
}

BooleanFunctionTable BooleanFunctionTable::constant(int arity, bool value) {
    return BooleanFunctionTable(arity, std::vector<bool>(std::size_t{1} << arity, value));
}

BooleanFunctionTable BooleanFunctionTable::negation() {
    return BooleanFunctionTable(1, {true, false});
}

BooleanFunctionTable BooleanFunctionTable::identity() {
    return BooleanFunctionTable(1, {false, true});
}

BooleanFunctionTable BooleanFunctionTable::conjunction() {
    return BooleanFunctionTable(2, {false, false, false, true});
}

BooleanFunctionTable BooleanFunctionTable::disjunction() {
    return BooleanFunctionTable(2, {false, true, true, true});
}

bool BooleanFunctionTable::eval(const std::vector<bool>& args) const {
    if (static_cast<int>(args.size()) != arity_)
        throw std::invalid_argument("boolean table argument count mismatch");
    std::size_t idx = 0;
    for (bool a : args)
        idx = (idx << 1) | (a ? 1u : 0u);
    return table_[idx];
}

bool BooleanFunctionTable::eval_matrix(const std::vector<std::vector<bool>>& a) const {
    int k = square_root_arity(arity_);
    if (static_cast<int>(a.size()) != k)
        throw std::invalid_argument("matrix size mismatch");
    std::vector<bool> args;
    args.reserve(arity_);
    for (const auto& row : a) {
        if (static_cast<int>(row.size()) != k)
            throw std::invalid_argument("matrix size mismatch");
        for (bool b : row)
            args.push_back(b);
    }
    return eval(args);
}

bool BooleanFunctionTable::diagonal() const {
    int k = square_root_arity(arity_);
    // f depends only on the diagonal iff zeroing every off-diagonal
    // position never changes the value.
    std::size_t diag_mask = 0;
    for (int r = 0; r < k; ++r)
        diag_mask |= std::size_t{1} << (arity_ - 1 - (r * k + r));
    for (std::size_t i = 0; i < table_.size(); ++i)
        if (table_[i] != table_[i & diag_mask])
            return false;
    return true;
}

std::string BooleanFunctionTable::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (std::size_t i = 0; i < table_.size(); i += 4) {
        int nibble = 0;
        for (std::size_t j = 0; j < 4 && i + j < table_.size(); ++j)
            if (table_[i + j])
                nibble |= 1 << (3 - j);
        out.push_back(digits[nibble]);
    }
    return out;
}

BooleanFunctionTable BooleanFunctionTable::from_hex(int arity, const std::string& hex) {
    if (arity < 0 || arity > kMaxArity)
        throw std::invalid_argument("boolean table arity out of range");
    std::size_t bits = std::size_t{1} << arity;
    std::size_t need = (bits + 3) / 4;
    if (hex.size() != need)
        throw std::invalid_argument("hex truth table length mismatch");
    std::vector<bool> table(bits, false);
    for (std::size_t i = 0; i < hex.size(); ++i) {
        char c = hex[i];
        int nibble;
        if (c >= '0' && c <= '9')
            nibble = c - '0';
        else if (c >= 'a' && c <= 'f')
            nibble = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
            nibble = c - 'A' + 10;
        else
            throw std::invalid_argument("bad hex digit in truth table");
        for (int j = 0; j < 4; ++j) {
            std::size_t pos = i * 4 + j;
            if (pos < bits)
                table[pos] = (nibble >> (3 - j)) & 1;
        }
    }
    return BooleanFunctionTable(arity, std::move(table));
}

Graph apply_boolean(const BooleanFunctionTable& f, const std::vector<Graph>& graphs) {
    if (static_cast<int>(graphs.size()) != f.arity())
        throw std::invalid_argument("apply_boolean: arity mismatch");
    if (graphs.empty())
        throw std::invalid_argument("apply_boolean: needs at least one graph");
    int n = graphs.front().order();
    bool directed = graphs.front().directed();
    for (const Graph& g : graphs)
        if (g.order() != n || g.directed() != directed)
            throw std::invalid_argument("apply_boolean: mixed vertex counts or directedness");
    Graph result(n, directed);
    std::vector<bool> args(graphs.size());
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            for (std::size_t i = 0; i < graphs.size(); ++i)
                args[i] = graphs[i].edge(u, v);
            if (f.eval(args))
                result.set_edge(u, v, true);
        }
    return result;
}

Graph edge_complement(const Graph& g) {
    return apply_boolean(BooleanFunctionTable::negation(), {g});
}

} // namespace labelab
