#ifndef LABELAB_SCHEMES_HPP
#define LABELAB_SCHEMES_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "labelab/decoder.hpp"
#include "labelab/graph.hpp"
#include "labelab/logic.hpp"

namespace labelab {

// ------------------------------------------------------------- intervals

/// Closed intervals with integer endpoints, one per vertex.
struct IntervalModel {
    std::vector<std::pair<long long, long long>> intervals;

    int size() const { return static_cast<int>(intervals.size()); }
    void validate() const;
    Graph intersection_graph() const; // undirected, loop-free
};

/// Endpoints renumbered left to right. Ties rank lo endpoints before point
/// intervals before hi endpoints, then by vertex index; coincident point
/// intervals share one rank, so a point interval is labeled (r, r).
struct IntervalEncoding {
    std::vector<std::pair<long long, long long>> rank_labels;
    BitLabeling labels;      // rank pairs in bits, scheme (interval decoder, c=4)
    Graph decoded{1, false}; // the model's intersection graph
};
IntervalEncoding interval_encode(const IntervalModel& model);

// ---------------------------------------------------------- pointer labels

struct PointerLabeling {
    enum class Mode { or_mode, and_mode };

    Mode mode = Mode::or_mode;
    bool bijective = false;
    int k = 1;
    std::vector<int> id;                 // values in [n], 1-based
    std::vector<std::vector<int>> slots; // k values in [n] per vertex

    void validate(int n) const;
};

bool pointer_adjacent(const PointerLabeling& pl, int u, int v);
Graph pointer_decode(const PointerLabeling& pl); // undirected, loop-free
bool pointer_verify(const PointerLabeling& pl, const Graph& g);

/// Min-degree elimination labeling; unused slots repeat the vertex's own id
/// (self-pairs are never queried, and ids are unique here).
PointerLabeling or_pointer_encode(const Graph& g, int c);

/// Fresh children-id labeling of a forest, k = 2, non-bijective (sibling
/// leaves share ids by construction). Unused slots repeat an existing entry.
PointerLabeling and_pointer_forest_encode(const Graph& g);

/// Twin-class labeling, valid under both or- and and-semantics.
PointerLabeling twin_encode(const Graph& g, int k, PointerLabeling::Mode mode);

// --------------------------------------------------- order/equality labels

using NumPair = std::pair<long long, long long>;

/// Out-neighborhood class labeling; decodes under x1 = y2 with c = 1.
std::vector<NumPair> dichotomic_encode(const Graph& g);

/// Nested in-neighborhood labeling; decodes under x1 < y2 with c = 1.
std::vector<NumPair> linear_neighborhood_encode(const Graph& g);

bool verify_numpair_labels(const std::vector<NumPair>& labels, const Graph& g,
                           bool equality, long long max_value);

/// Order-preserving renumbering into [n]_0 keeping all x1 < y2 verdicts.
std::vector<NumPair> compress_order_labels(const std::vector<NumPair>& labels);

/// ord-based renumbering for the x1 = y2 decoder; right components outside
/// the left value set map to 0.
std::vector<NumPair> compress_eq_labels(const std::vector<NumPair>& labels);

// ----------------------------------------------------- clique-width labels

struct ModuleTreeNode;
using ModuleTreePtr = std::shared_ptr<ModuleTreeNode>;

struct ModuleTreeNode {
    std::vector<int> vertices;               // original vertex ids, ascending
    std::vector<std::vector<int>> parts;     // partition of left->vertices
    std::map<int, std::vector<int>> attach;  // right vertex -> 1-based parts
    ModuleTreePtr left, right;

    bool leaf() const { return !left && !right; }
};

struct BalancedKModule {
    std::vector<int> module_vertices;
    std::vector<std::vector<int>> parts;
};

/// Exhaustive search for a balanced k-module: a vertex set holding between a
/// third and two thirds of the vertices whose members fall into at most k
/// outside-neighborhood classes. Returns the lexicographically least witness.
std::optional<BalancedKModule> find_balanced_kmodule(const Graph& g, int k,
                                                     int max_n = 12);

/// Recursive balanced k-module decomposition; empty when some node has none.
std::optional<ModuleTreePtr> build_module_tree(const Graph& g, int k, int max_n = 12);

void validate_module_tree(const Graph& g, const ModuleTreePtr& root, int k);

struct CwEncoding {
    int k = 0;
    std::size_t symbols_per_label = 0;
    std::vector<std::string> symbol_strings; // over {0,1,#}, unpadded
    BitLabeling labels;                      // 2-bit re-encoded, padded
};

/// Per vertex one (k+1)-bit block per tree level: side bit, then the one-hot
/// part index (left side) or the attachment subset (right side).
CwEncoding cliquewidth_encode(const Graph& g, const ModuleTreePtr& tree, int k);

} // namespace labelab

#endif
