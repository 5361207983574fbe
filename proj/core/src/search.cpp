#include "labelab/search.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "labelab/enumerate.hpp"

namespace labelab {

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetState {
    const SearchBudget* budget;
    Clock::time_point start = Clock::now();
    std::uint64_t nodes = 0;
    bool exhausted = false;

    bool tick() {
        if (exhausted)
            return false;
        ++nodes;
        if (nodes > budget->max_nodes) {
            exhausted = true;
            return false;
        }
        if ((nodes & 0xfff) == 0) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          Clock::now() - start)
                          .count();
            if (ms > budget->time_limit_ms) {
                exhausted = true;
                return false;
            }
        }
        return true;
    }
};

// Generic backtracking over per-vertex values 0..domain-1 in vertex order,
// trying values in increasing order, so the first witness found is the
// lexicographically least one.
template <class PairCheck, class SelfCheck>
SearchStatus backtrack_assign(const Graph& g, std::uint64_t domain,
                              const PairCheck& pair_ok, const SelfCheck& self_ok,
                              bool check_self, BudgetState& bs,
                              std::vector<std::uint64_t>& assignment) {
    int n = g.order();
    assignment.assign(n, 0);
    int depth = 0;
    std::vector<std::uint64_t> cursor(n, 0);
    while (true) {
        if (cursor[depth] >= domain) {
            // backtrack
            if (depth == 0)
                return SearchStatus::none;
            cursor[depth] = 0;
            --depth;
            ++cursor[depth];
            continue;
        }
        if (!bs.tick())
            return SearchStatus::unknown;
        std::uint64_t value = cursor[depth];
        bool ok = !check_self || self_ok(depth, value);
        for (int w = 0; ok && w < depth; ++w)
            ok = pair_ok(depth, value, w, assignment[w]);
        if (!ok) {
            ++cursor[depth];
            continue;
        }
        assignment[depth] = value;
        if (depth + 1 == n)
            return SearchStatus::found;
        ++depth;
    }
}

} // namespace

BitSearchResult find_labeling(const LabelingScheme& s, const Graph& g, bool io,
                              const SearchBudget& budget) {
    BitSearchResult result;
    if (g.order() > budget.max_n)
        return result; // unknown
    int width = label_width(s.c, g.order());
    if (width > 40)
        throw std::invalid_argument("find_labeling: label width too large");
    std::uint64_t values = std::uint64_t{1} << width;
    std::vector<BitLabel> cache;
    if (values <= 4096)
        for (std::uint64_t v = 0; v < values; ++v)
            cache.push_back(BitLabel::from_value(v, width));
    auto label_of = [&](std::uint64_t v) {
        return cache.empty() ? BitLabel::from_value(v, width) : cache[v];
    };
    const Decoder& dec = *s.decoder;
    BudgetState bs{&budget};
    std::vector<std::uint64_t> assignment;
    SearchStatus status;
    if (!io) {
        auto self_ok = [&](int u, std::uint64_t v) {
            BitLabel l = label_of(v);
            return dec.accepts(l, l) == g.edge(u, u);
        };
        auto pair_ok = [&](int u, std::uint64_t uv, int w, std::uint64_t wv) {
            BitLabel lu = label_of(uv), lw = label_of(wv);
            return dec.accepts(lw, lu) == g.edge(w, u) &&
                   dec.accepts(lu, lw) == g.edge(u, w);
        };
        status = backtrack_assign(g, values, pair_ok, self_ok, true, bs, assignment);
        if (status == SearchStatus::found)
            for (std::uint64_t v : assignment)
                result.labels.push_back(label_of(v));
    } else {
        std::uint64_t domain = values * values; // (out, in) pairs, out major
        auto self_ok = [](int, std::uint64_t) { return true; };
        auto pair_ok = [&](int u, std::uint64_t uv, int w, std::uint64_t wv) {
            BitLabel ou = label_of(uv / values), iu = label_of(uv % values);
            BitLabel ow = label_of(wv / values), iw = label_of(wv % values);
            return dec.accepts(ow, iu) == g.edge(w, u) &&
                   dec.accepts(ou, iw) == g.edge(u, w);
        };
        status = backtrack_assign(g, domain, pair_ok, self_ok, false, bs, assignment);
        if (status == SearchStatus::found)
            for (std::uint64_t v : assignment) {
                result.out_labels.push_back(label_of(v / values));
                result.in_labels.push_back(label_of(v % values));
            }
    }
    result.status = status;
    result.nodes = bs.nodes;
    return result;
}

NumSearchResult find_numeric_labeling(
    const std::function<bool(const NumLabel&, const NumLabel&)>& accepts, int k,
    long long max_value, const Graph& g, bool io, const SearchBudget& budget) {
    NumSearchResult result;
    if (g.order() > budget.max_n)
        return result;
    if (k < 1 || max_value < 0)
        throw std::invalid_argument("find_numeric_labeling: bad label domain");
    double dsize = std::pow(static_cast<double>(max_value + 1), k);
    if (dsize > 1e12)
        throw std::invalid_argument("find_numeric_labeling: label domain too large");
    std::uint64_t values = 1;
    for (int i = 0; i < k; ++i)
        values *= static_cast<std::uint64_t>(max_value + 1);
    auto tuple_of = [&](std::uint64_t v) {
        NumLabel t(k);
        for (int i = k - 1; i >= 0; --i) {
            t[i] = static_cast<long long>(v % (max_value + 1));
            v /= (max_value + 1);
        }
        return t;
    };
    BudgetState bs{&budget};
    std::vector<std::uint64_t> assignment;
    SearchStatus status;
    if (!io) {
        auto self_ok = [&](int u, std::uint64_t v) {
            NumLabel l = tuple_of(v);
            return accepts(l, l) == g.edge(u, u);
        };
        auto pair_ok = [&](int u, std::uint64_t uv, int w, std::uint64_t wv) {
            NumLabel lu = tuple_of(uv), lw = tuple_of(wv);
            return accepts(lw, lu) == g.edge(w, u) && accepts(lu, lw) == g.edge(u, w);
        };
        status = backtrack_assign(g, values, pair_ok, self_ok, true, bs, assignment);
        if (status == SearchStatus::found)
            for (std::uint64_t v : assignment)
                result.labels.push_back(tuple_of(v));
    } else {
        std::uint64_t domain = values * values;
        auto self_ok = [](int, std::uint64_t) { return true; };
        auto pair_ok = [&](int u, std::uint64_t uv, int w, std::uint64_t wv) {
            NumLabel ou = tuple_of(uv / values), iu = tuple_of(uv % values);
            NumLabel ow = tuple_of(wv / values), iw = tuple_of(wv % values);
            return accepts(ow, iu) == g.edge(w, u) && accepts(ou, iw) == g.edge(u, w);
        };
        status = backtrack_assign(g, domain, pair_ok, self_ok, false, bs, assignment);
        if (status == SearchStatus::found)
            for (std::uint64_t v : assignment) {
                result.out_labels.push_back(tuple_of(v / values));
                result.in_labels.push_back(tuple_of(v % values));
            }
    }
    result.status = status;
    result.nodes = bs.nodes;
    return result;
}

NumSearchResult find_fo_labeling(const FoScheme& scheme, const Graph& g, bool io,
                                 const SearchBudget& budget) {
    int n = g.order();
    long long bound = scheme.universe(n);
    auto accepts = [&scheme, n](const NumLabel& x, const NumLabel& y) {
        return scheme.accepts(n, x, y);
    };
    return find_numeric_labeling(accepts, scheme.k, bound, g, io, budget);
}

namespace {

Membership to_membership(SearchStatus status) {
    switch (status) {
    case SearchStatus::found: return Membership::in_class;
    case SearchStatus::none: return Membership::not_in_class;
    case SearchStatus::unknown: return Membership::unknown;
    }
    return Membership::unknown;
}

} // namespace

Membership class_membership(const LabelingScheme& s, const Graph& g, bool io,
                            const SearchBudget& budget) {
    return to_membership(find_labeling(s, g, io, budget).status);
}

Membership class_membership(const FoScheme& scheme, const Graph& g, bool io,
                            const SearchBudget& budget) {
    return to_membership(find_fo_labeling(scheme, g, io, budget).status);
}

// ------------------------------------------------------------ pointer search

namespace {

// Sorted k-multisets over [n], in lexicographic order.
std::vector<std::vector<int>> slot_multisets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> current(k, 1);
    while (true) {
        out.push_back(current);
        int pos = k - 1;
        while (pos >= 0 && current[pos] == n)
            --pos;
        if (pos < 0)
            break;
        ++current[pos];
        for (int i = pos + 1; i < k; ++i)
            current[i] = current[pos];
    }
    return out;
}

bool pointer_pair_ok(PointerLabeling::Mode mode, const Graph& g, int u, int idu,
                     const std::vector<int>& slotsu, int w, int idw,
                     const std::vector<int>& slotsw) {
    bool uw = std::find(slotsw.begin(), slotsw.end(), idu) != slotsw.end();
    bool wu = std::find(slotsu.begin(), slotsu.end(), idw) != slotsu.end();
    bool adjacent = mode == PointerLabeling::Mode::or_mode ? (uw || wu) : (uw && wu);
    return adjacent == g.edge(u, w);
}

SearchStatus pointer_search(const Graph& g, PointerLabeling::Mode mode, bool bijective,
                            int k, BudgetState& bs,
                            const std::vector<int>& order) {
    int n = g.order();
    if (bijective && mode == PointerLabeling::Mode::and_mode && max_degree(g) > k)
        return SearchStatus::none; // distinct neighbor ids cannot fit k slots
    if (bijective && mode == PointerLabeling::Mode::or_mode && g.edge_count() > k * n)
        return SearchStatus::none; // each slot entry certifies at most one edge
    auto slots = slot_multisets(n, k);
    std::vector<int> ids(n, 0);
    std::vector<int> slot_index(n, 0);
    std::vector<bool> id_used(n + 1, false);
    std::vector<bool> assigned(n, false);
    // per-depth candidate cursor over (id, slot multiset) pairs
    struct Cursor {
        int id = 1;
        std::size_t slot = 0;
    };
    std::vector<Cursor> cursor(n);
    int depth = 0;
    cursor[0] = {1, 0};
    while (true) {
        if (depth < 0)
            return SearchStatus::none;
        Cursor& c = cursor[depth];
        if (c.slot >= slots.size()) {
            c.slot = 0;
            ++c.id;
        }
        bool first_fixed = depth == 0; // symmetry: pin the first id to 1
        if (c.id > (first_fixed ? 1 : n)) {
            // exhausted this depth
            --depth;
            if (depth >= 0) {
                int v = order[depth];
                id_used[ids[v]] = false;
                assigned[v] = false;
                ++cursor[depth].slot;
            }
            continue;
        }
        if (bijective && id_used[c.id]) {
            ++c.id;
            c.slot = 0;
            continue;
        }
        if (!bs.tick())
            return SearchStatus::unknown;
        int v = order[depth];
        bool ok = true;
        for (int d = 0; ok && d < depth; ++d) {
            int w = order[d];
            ok = pointer_pair_ok(mode, g, v, c.id, slots[c.slot], w, ids[w],
                                 slot_index[w] < 0 ? slots[0] : slots[slot_index[w]]);
        }
        if (ok && bijective && mode == PointerLabeling::Mode::and_mode) {
            // every not-yet-assigned neighbor takes a fresh id that must
            // already sit in v's slots
            int unassigned_neighbors = 0;
            for (int w : g.neighbors(v))
                if (!assigned[w])
                    ++unassigned_neighbors;
            int free_slot_ids = 0;
            const std::vector<int>& chosen = slots[c.slot]; // sorted multiset
            for (std::size_t i = 0; i < chosen.size(); ++i) {
                if (i > 0 && chosen[i] == chosen[i - 1])
                    continue;
                if (chosen[i] != c.id && !id_used[chosen[i]])
                    ++free_slot_ids;
            }
            ok = free_slot_ids >= unassigned_neighbors;
        }
        if (!ok) {
            ++c.slot;
            continue;
        }
        ids[v] = c.id;
        slot_index[v] = static_cast<int>(c.slot);
        id_used[c.id] = true;
        assigned[v] = true;
        if (depth + 1 == n)
            return SearchStatus::found;
        ++depth;
        cursor[depth] = {1, 0};
    }
}

} // namespace

std::optional<int> pointer_number(const Graph& g, PointerLabeling::Mode mode,
                                  bool bijective, const SearchBudget& budget) {
    if (g.directed() || g.has_self_loops())
        throw std::invalid_argument("pointer numbers apply to loop-free undirected graphs");
    if (g.order() > budget.max_n)
        return std::nullopt;
    // constructions cap the answer: neighbor slots for and-mode, elimination
    // slots for or-mode
    int cap = mode == PointerLabeling::Mode::and_mode ? max_degree(g)
                                                      : degeneracy(g).degeneracy;
    cap = std::max(cap, 1);
    std::vector<int> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&g](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        return da != db ? da > db : a < b;
    });
    for (int k = 1; k <= cap; ++k) {
        BudgetState bs{&budget};
        SearchStatus status = pointer_search(g, mode, bijective, k, bs, order);
        if (status == SearchStatus::found)
            return k;
        if (status == SearchStatus::unknown)
            return std::nullopt;
    }
    return cap; // the construction at k = cap always realizes the graph
}

// ------------------------------------------------------------- pairing, diag

std::optional<std::pair<long long, long long>> pairing_tau(const BigInt& x) {
    if (x < 2)
        return std::nullopt;
    BigInt v = x;
    if ((v & (v - 1)) != 0)
        return std::nullopt; // not a power of two
    long long e = boost::multiprecision::msb(v); // x = 2^e
    if (e < 1)
        return std::nullopt;
    long long y = 0, z = 0;
    while (e % 2 == 0) {
        e /= 2;
        ++y;
    }
    while (e % 3 == 0) {
        e /= 3;
        ++z;
    }
    while (e % 5 == 0)
        e /= 5;
    if (e != 1)
        return std::nullopt;
    return std::make_pair(y, z);
}

std::vector<BigInt> pairing_preimages(long long y, long long z, int count) {
    std::vector<BigInt> out;
    BigInt base = 1;
    for (long long i = 0; i < y; ++i)
        base *= 2;
    for (long long i = 0; i < z; ++i)
        base *= 3;
    BigInt exponent = base;
    for (int w = 0; w < count; ++w) {
        if (exponent > 4096)
            throw std::invalid_argument("pairing_preimages: value would be astronomical");
        out.push_back(BigInt(1) << static_cast<unsigned>(exponent));
        exponent *= 5;
    }
    return out;
}

std::vector<DiagonalEntry> diagonal_class(const std::vector<DecoderPtr>& decoders,
                                          long long prefix, bool directed, bool loops,
                                          const SearchBudget& budget) {
    std::vector<DiagonalEntry> out;
    for (long long n = 1; n <= prefix; ++n) {
        auto tau = pairing_tau(BigInt(n));
        if (!tau)
            continue;
        auto [y, z] = *tau;
        if (y >= static_cast<long long>(decoders.size()))
            continue;
        DiagonalEntry entry;
        entry.n = n;
        entry.decoder_index = y;
        entry.label_multiplier = static_cast<int>(z);
        if (n > budget.max_n || n > 8) {
            out.push_back(entry); // unknown: enumeration out of reach
            continue;
        }
        LabelingScheme scheme{decoders[y], static_cast<int>(z)};
        BudgetState bs{&budget};
        GraphEnumerator en(static_cast<int>(n), directed, loops);
        bool settled = false;
        bool all_represented = true;
        while (auto g = en.next()) {
            if (!bs.tick())
                break;
            if (!(*g == canonical_min(*g)))
                continue;
            Membership m = class_membership(scheme, *g, false, budget);
            if (m == Membership::not_in_class) {
                entry.status = SearchStatus::found;
                entry.graph = *g;
                settled = true;
                all_represented = false;
                break;
            }
            if (m == Membership::unknown) {
                all_represented = false;
                break;
            }
        }
        if (!settled && all_represented && !bs.exhausted) {
            entry.status = SearchStatus::none;
            entry.every_graph_represented = true;
        }
        out.push_back(entry);
    }
    return out;
}

} // namespace labelab
