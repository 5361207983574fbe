#ifndef LABELAB_IO_HPP
#define LABELAB_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "labelab/dfa.hpp"
#include "labelab/graph.hpp"
#include "labelab/pbs.hpp"
#include "labelab/reductions.hpp"
#include "labelab/schemes.hpp"

namespace labelab {

// Text formats. Readers throw std::invalid_argument with a line number on
// malformed input; writers emit exactly what the readers accept.
//
//   graph <directed|undirected> <n> [loops]   then one edge "u v" per line
//   labels bits <n> <len>                     then "v: <bitstring>"
//   labels io <n> <len>                       then "v: <out-bits> <in-bits>"
//   labels num <n> <k>                        then "v: v1 v2 ..." (or a/b)
//   dfa <states> <alphabet> / start <s> / accept <s...> / "from symbol to"
//   bf <arity> <hex-truth-table>
//   pbs <2k> <l> / l lines "poly: coeff e1 ... e2k; ..." / bf <l^2> <hex>
//   intervals <n>                             then "v: lo hi"
//   sgrep k=<k> host=<graph-file> bf=<hex>    then "v: h1 h2 ... hk"
//   module tree: (leaf v) | (node (parts (..) ..) (attach v: i j .. , ..) L R)
// '#' starts a comment everywhere except inside the s-expression format.

Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

struct LabelsFile {
    enum class Kind { bits, io, num } kind = Kind::bits;
    int n = 0;
    int width = 0; // bit width, or k for numeric labels
    BitLabeling labels, out_labels, in_labels;
    std::vector<std::vector<BigRat>> num_labels;
};
LabelsFile read_labels(std::istream& in);
void write_bit_labels(std::ostream& out, const BitLabeling& labels);
void write_io_labels(std::ostream& out, const BitLabeling& out_labels,
                     const BitLabeling& in_labels);
void write_num_labels(std::ostream& out, const std::vector<std::vector<BigRat>>& labels);

Dfa read_dfa(std::istream& in);
void write_dfa(std::ostream& out, const Dfa& d);

BooleanFunctionTable read_bf(std::istream& in);
void write_bf(std::ostream& out, const BooleanFunctionTable& f);

Pbs read_pbs(std::istream& in);
void write_pbs(std::ostream& out, const Pbs& r); // table-backed functions only

IntervalModel read_intervals(std::istream& in);
void write_intervals(std::ostream& out, const IntervalModel& model);

ModuleTreePtr read_module_tree(std::istream& in);
void write_module_tree(std::ostream& out, const ModuleTreePtr& tree);

/// sgrep files name their host graph by a path resolved against base_dir.
SubgraphRepresentation read_sgrep(std::istream& in, const std::string& base_dir);
void write_sgrep(std::ostream& out, const SubgraphRepresentation& rep,
                 const std::string& host_path);

struct FoFile {
    FormulaPtr phi;
    int c = 1;
    bool bounded = true;
};
/// "fo c=<c> [semantics=bounded|infinite]" followed by the formula text.
FoFile read_fo(std::istream& in);
void write_fo(std::ostream& out, const FoFile& fo);

/// FNV-1a 64-bit digest of a byte stream, for run reports.
std::string fnv1a_hex(const std::string& bytes);

} // namespace labelab

#endif
