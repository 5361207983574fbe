#ifndef LABELAB_SEARCH_HPP
#define LABELAB_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "labelab/decoder.hpp"
#include "labelab/graph.hpp"
#include "labelab/logic.hpp"
#include "labelab/schemes.hpp"

namespace labelab {

/// Exceeded budgets yield an explicit unknown outcome, never a silent wrong
/// answer.
struct SearchBudget {
    int max_n = 16;
    std::uint64_t max_nodes = 50'000'000;
    long long time_limit_ms = 600'000;
};

enum class SearchStatus { found, none, unknown };

struct BitSearchResult {
    SearchStatus status = SearchStatus::unknown;
    BitLabeling labels;                 // plain mode witness
    BitLabeling out_labels, in_labels;  // io mode witness
    std::uint64_t nodes = 0;
};

struct NumSearchResult {
    SearchStatus status = SearchStatus::unknown;
    std::vector<NumLabel> labels;
    std::vector<NumLabel> out_labels, in_labels;
    std::uint64_t nodes = 0;
};

/// Backtracking over per-vertex label assignments in vertex order with
/// forward checking; the witness is the lexicographically least one (vertex
/// order, then numeric label order). Self-pairs are checked unless io.
BitSearchResult find_labeling(const LabelingScheme& s, const Graph& g, bool io,
                              const SearchBudget& budget = {});

/// The numeric analogue: per-vertex tuples of k values in [max_value]_0.
NumSearchResult find_numeric_labeling(
    const std::function<bool(const NumLabel&, const NumLabel&)>& accepts, int k,
    long long max_value, const Graph& g, bool io, const SearchBudget& budget = {});

NumSearchResult find_fo_labeling(const FoScheme& scheme, const Graph& g, bool io,
                                 const SearchBudget& budget = {});

enum class Membership { in_class, not_in_class, unknown };

Membership class_membership(const LabelingScheme& s, const Graph& g, bool io,
                            const SearchBudget& budget = {});
Membership class_membership(const FoScheme& scheme, const Graph& g, bool io,
                            const SearchBudget& budget = {});

/// Least k admitting a pointer labeling, by incremental k and backtracking
/// over (id, slots) assignments; the first vertex's id is pinned to 1.
std::optional<int> pointer_number(const Graph& g, PointerLabeling::Mode mode,
                                  bool bijective, const SearchBudget& budget = {});

/// The admissible pairing tau(x) = (y, z) iff x = 2^(2^y 3^z 5^w): undefined
/// off powers of two and exponents with other prime factors.
std::optional<std::pair<long long, long long>> pairing_tau(const BigInt& x);
std::vector<BigInt> pairing_preimages(long long y, long long z, int count);

struct DiagonalEntry {
    long long n = 0;
    long long decoder_index = 0; // y of tau(n)
    int label_multiplier = 0;    // z of tau(n)
    SearchStatus status = SearchStatus::unknown; // found = diagonal graph exists
    std::optional<Graph> graph;
    bool every_graph_represented = false;
};

/// For each n in the prefix with defined tau(n) = (y, z) and y inside the
/// decoder list: the least graph (lexicographic order of canonical-form bit
/// strings) on n vertices not in gr((decoders[y], z)).
std::vector<DiagonalEntry> diagonal_class(const std::vector<DecoderPtr>& decoders,
                                          long long prefix, bool directed, bool loops,
                                          const SearchBudget& budget = {});

} // namespace labelab

#endif
