#include "labelab/schemes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "labelab/dfa.hpp"

namespace labelab {

// ------------------------------------------------------------- intervals

void IntervalModel::validate() const {
    if (intervals.empty())
        throw std::invalid_argument("interval model needs at least one vertex");
    for (const auto& [lo, hi] : intervals)
        if (lo > hi)
            throw std::invalid_argument("interval endpoints must satisfy lo <= hi");
}

Graph IntervalModel::intersection_graph() const {
    validate();
    Graph g(size(), false);
    for (int u = 0; u < size(); ++u)
        for (int v = u + 1; v < size(); ++v) {
            const auto& a = intervals[u];
            const auto& b = intervals[v];
            if (!(a.second < b.first) && !(b.second < a.first))
                g.set_edge(u, v, true);
        }
    return g;
}

IntervalEncoding interval_encode(const IntervalModel& model) {
    model.validate();
    int n = model.size();
    // endpoint events: kind 0 = lo, 1 = point, 2 = hi
    struct Event {
        long long coord;
        int kind;
        int vertex;
        bool operator<(const Event& o) const {
            return std::tie(coord, kind, vertex) < std::tie(o.coord, o.kind, o.vertex);
        }
    };
    std::vector<Event> events;
    for (int v = 0; v < n; ++v) {
        auto [lo, hi] = model.intervals[v];
        if (lo == hi) {
            events.push_back({lo, 1, v});
        } else {
            events.push_back({lo, 0, v});
            events.push_back({hi, 2, v});
        }
    }
    std::sort(events.begin(), events.end());
    IntervalEncoding out;
    out.rank_labels.assign(n, {0, 0});
    long long next_rank = 0;
    long long last_point_coord = -1;
    long long last_point_rank = -1;
    for (const Event& e : events) {
        long long rank;
        if (e.kind == 1 && last_point_rank != -1 && last_point_coord == e.coord) {
            rank = last_point_rank; // coincident point intervals share a rank
        } else {
            rank = ++next_rank;
            if (e.kind == 1) {
                last_point_coord = e.coord;
                last_point_rank = rank;
            }
        }
        if (e.kind == 0)
            out.rank_labels[e.vertex].first = rank;
        else if (e.kind == 2)
            out.rank_labels[e.vertex].second = rank;
        else
            out.rank_labels[e.vertex] = {rank, rank};
    }
    out.decoded = model.intersection_graph();
    // Each endpoint gets 2*ceil(log n) bits; ranks are stored 0-based there
    // so the largest rank 2n fits for every n >= 2. A single vertex gets the
    // empty label.
    if (n == 1) {
        out.labels.push_back(BitLabel{});
        return out;
    }
    int half = label_width(2, n);
    out.labels.reserve(n);
    for (int v = 0; v < n; ++v) {
        BitLabel lo = BitLabel::from_value(
            static_cast<std::uint64_t>(out.rank_labels[v].first - 1), half);
        BitLabel hi = BitLabel::from_value(
            static_cast<std::uint64_t>(out.rank_labels[v].second - 1), half);
        std::vector<bool> bits(lo.bits);
        bits.insert(bits.end(), hi.bits.begin(), hi.bits.end());
        out.labels.push_back(BitLabel(std::move(bits)));
    }
    return out;
}

// ---------------------------------------------------------- pointer labels

void PointerLabeling::validate(int n) const {
    if (static_cast<int>(id.size()) != n || static_cast<int>(slots.size()) != n)
        throw std::invalid_argument("pointer labeling must cover every vertex");
    std::set<int> seen;
    for (int v = 0; v < n; ++v) {
        if (id[v] < 1 || id[v] > n)
            throw std::invalid_argument("pointer ids must lie in [n]");
        seen.insert(id[v]);
        if (static_cast<int>(slots[v].size()) != k)
            throw std::invalid_argument("pointer labeling needs exactly k slots");
        for (int s : slots[v])
            if (s < 1 || s > n)
                throw std::invalid_argument("pointer slots must lie in [n]");
    }
    if (bijective && static_cast<int>(seen.size()) != n)
        throw std::invalid_argument("bijective pointer labeling needs distinct ids");
}

bool pointer_adjacent(const PointerLabeling& pl, int u, int v) {
    auto contains = [](const std::vector<int>& slots, int value) {
        return std::find(slots.begin(), slots.end(), value) != slots.end();
    };
    bool uv = contains(pl.slots[v], pl.id[u]);
    bool vu = contains(pl.slots[u], pl.id[v]);
    return pl.mode == PointerLabeling::Mode::or_mode ? (uv || vu) : (uv && vu);
}

Graph pointer_decode(const PointerLabeling& pl) {
    int n = static_cast<int>(pl.id.size());
    pl.validate(n);
    Graph g(n, false);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (pointer_adjacent(pl, u, v))
                g.set_edge(u, v, true);
    return g;
}

bool pointer_verify(const PointerLabeling& pl, const Graph& g) {
    if (g.directed() || g.has_self_loops())
        throw std::invalid_argument("pointer labelings apply to loop-free undirected graphs");
    return pointer_decode(pl) == g;
}

PointerLabeling or_pointer_encode(const Graph& g, int c) {
    DegeneracyResult d = degeneracy(g);
    if (d.degeneracy > c)
        throw std::invalid_argument("or_pointer_encode: degeneracy exceeds slot count");
    int n = g.order();
    PointerLabeling pl;
    pl.mode = PointerLabeling::Mode::or_mode;
    pl.bijective = true;
    pl.k = c;
    pl.id.resize(n);
    pl.slots.assign(n, {});
    for (int v = 0; v < n; ++v)
        pl.id[v] = v + 1;
    std::vector<bool> removed(n, false);
    for (int v : d.elimination_order) {
        for (int w : g.neighbors(v))
            if (!removed[w])
                pl.slots[v].push_back(w + 1);
        while (static_cast<int>(pl.slots[v].size()) < c)
            pl.slots[v].push_back(v + 1);
        removed[v] = true;
    }
    pl.validate(n);
    return pl;
}

PointerLabeling and_pointer_forest_encode(const Graph& g) {
    if (!is_forest(g) || g.directed())
        throw std::invalid_argument("and_pointer_forest_encode: input is not a forest");
    int n = g.order();
    std::vector<int> parent(n, -1);
    std::vector<int> bfs_order;
    std::vector<bool> seen(n, false);
    for (int root = 0; root < n; ++root) {
        if (seen[root])
            continue;
        seen[root] = true;
        std::vector<int> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            bfs_order.push_back(u);
            for (int w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = true;
                    parent[w] = u;
                    queue.push_back(w);
                }
        }
    }
    int next_id = 0;
    std::vector<int> children_id(n, 0);
    std::vector<int> vid(n, 0);
    for (int u : bfs_order) {
        if (parent[u] == -1)
            vid[u] = ++next_id;
        // ids of non-roots are their parent's children-id, assigned below
        bool internal = false;
        for (int w : g.neighbors(u))
            if (parent[w] == u)
                internal = true;
        if (internal)
            children_id[u] = ++next_id;
    }
    for (int u = 0; u < n; ++u)
        if (parent[u] != -1)
            vid[u] = children_id[parent[u]];
    PointerLabeling pl;
    pl.mode = PointerLabeling::Mode::and_mode;
    pl.bijective = false;
    pl.k = 2;
    pl.id = vid;
    pl.slots.assign(n, {});
    for (int u = 0; u < n; ++u) {
        std::vector<int>& s = pl.slots[u];
        if (parent[u] != -1)
            s.push_back(vid[parent[u]]);
        if (children_id[u] != 0)
            s.push_back(children_id[u]);
        if (s.empty())
            s.push_back(vid[u]); // isolated vertex, fresh id is unique
        while (static_cast<int>(s.size()) < 2)
            s.push_back(s.front()); // repeat, keeping the slot set unchanged
    }
    pl.validate(n);
    return pl;
}

PointerLabeling twin_encode(const Graph& g, int k, PointerLabeling::Mode mode) {
    auto classes = twin_classes(g);
    int t = static_cast<int>(classes.size());
    if (t > k)
        throw std::invalid_argument("twin_encode: twin index exceeds slot count");
    int n = g.order();
    std::vector<int> cls(n);
    for (int i = 0; i < t; ++i)
        for (int v : classes[i])
            cls[v] = i;
    auto classes_adjacent = [&](int i, int j) {
        return g.edge(classes[i].front(), classes[j].front());
    };
    auto is_clique = [&](int i) {
        const auto& members = classes[i];
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                if (!g.edge(members[a], members[b]))
                    return false;
        return true;
    };
    PointerLabeling pl;
    pl.mode = mode;
    pl.bijective = false;
    pl.k = k;
    pl.id.resize(n);
    pl.slots.assign(n, {});
    for (int v = 0; v < n; ++v) {
        pl.id[v] = cls[v] + 1;
        std::vector<int>& s = pl.slots[v];
        for (int j = 0; j < t; ++j) {
            if (j == cls[v] ? is_clique(j) : classes_adjacent(cls[v], j))
                s.push_back(j + 1);
        }
        if (s.empty())
            s.push_back(t + 1 <= n ? t + 1 : 1); // t = n forces singleton cliques
        while (static_cast<int>(s.size()) < k)
            s.push_back(s.front());
    }
    pl.validate(n);
    return pl;
}

// --------------------------------------------------- order/equality labels

std::vector<NumPair> dichotomic_encode(const Graph& g) {
    if (!is_dichotomic(g))
        throw std::invalid_argument("dichotomic_encode: graph is not dichotomic");
    int n = g.order();
    // out-neighborhood classes, ordered by smallest member
    std::vector<std::vector<int>> out_sets(n);
    for (int u = 0; u < n; ++u)
        out_sets[u] = g.out_neighbors(u);
    std::vector<int> cls(n, -1);
    std::vector<int> reps;
    for (int u = 0; u < n; ++u) {
        for (std::size_t i = 0; i < reps.size(); ++i)
            if (out_sets[reps[i]] == out_sets[u]) {
                cls[u] = static_cast<int>(i);
                break;
            }
        if (cls[u] == -1) {
            cls[u] = static_cast<int>(reps.size());
            reps.push_back(u);
        }
    }
    std::vector<int> target_class(n, 0); // 0 = in-degree zero
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (int w : out_sets[reps[i]])
            target_class[w] = static_cast<int>(i) + 1;
    std::vector<NumPair> labels(n);
    for (int u = 0; u < n; ++u)
        labels[u] = {cls[u] + 1, target_class[u]};
    return labels;
}

std::vector<NumPair> linear_neighborhood_encode(const Graph& g) {
    if (!is_linear_neighborhood(g))
        throw std::invalid_argument(
            "linear_neighborhood_encode: graph is not a linear neighborhood graph");
    int n = g.order();
    std::vector<std::set<int>> in_sets(n);
    for (int u = 0; u < n; ++u) {
        auto ns = g.in_neighbors(u);
        in_sets[u] = std::set<int>(ns.begin(), ns.end());
    }
    // classes of equal nonempty in-neighborhoods, ordered by inclusion
    std::vector<std::set<int>> class_sets;
    for (int u = 0; u < n; ++u) {
        if (in_sets[u].empty())
            continue;
        if (std::find(class_sets.begin(), class_sets.end(), in_sets[u]) ==
            class_sets.end())
            class_sets.push_back(in_sets[u]);
    }
    std::sort(class_sets.begin(), class_sets.end(),
              [](const std::set<int>& a, const std::set<int>& b) {
                  return a.size() < b.size();
              });
    int k = static_cast<int>(class_sets.size());
    std::vector<NumPair> labels(n);
    for (int u = 0; u < n; ++u) {
        long long u2 = 0;
        if (!in_sets[u].empty())
            for (int i = 0; i < k; ++i)
                if (class_sets[i] == in_sets[u]) {
                    u2 = i + 1;
                    break;
                }
        long long u1 = k;
        for (int i = 0; i < k; ++i)
            if (class_sets[i].count(u)) {
                u1 = i; // minimal index i+1 containing u, minus one
                break;
            }
        labels[u] = {u1, u2};
    }
    return labels;
}

bool verify_numpair_labels(const std::vector<NumPair>& labels, const Graph& g,
                           bool equality, long long max_value) {
    if (static_cast<int>(labels.size()) != g.order())
        throw std::invalid_argument("one label pair per vertex required");
    for (const auto& [a, b] : labels)
        if (a < 0 || b < 0 || a > max_value || b > max_value)
            throw std::invalid_argument("label value outside the universe");
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v) {
            bool verdict = equality ? labels[u].first == labels[v].second
                                    : labels[u].first < labels[v].second;
            if (verdict != g.edge(u, v))
                return false;
        }
    return true;
}

std::vector<NumPair> compress_order_labels(const std::vector<NumPair>& labels) {
    std::vector<long long> seconds;
    for (const auto& [a, b] : labels)
        seconds.push_back(b);
    std::sort(seconds.begin(), seconds.end());
    seconds.erase(std::unique(seconds.begin(), seconds.end()), seconds.end());
    auto second_rank = [&seconds](long long v) {
        auto it = std::lower_bound(seconds.begin(), seconds.end(), v);
        return static_cast<long long>(it - seconds.begin()) + 1;
    };
    auto first_rank = [&seconds](long long v) {
        // number of distinct second components <= v
        auto it = std::upper_bound(seconds.begin(), seconds.end(), v);
        return static_cast<long long>(it - seconds.begin());
    };
    std::vector<NumPair> out;
    out.reserve(labels.size());
    for (const auto& [a, b] : labels)
        out.push_back({first_rank(a), second_rank(b)});
    return out;
}

std::vector<NumPair> compress_eq_labels(const std::vector<NumPair>& labels) {
    std::vector<long long> firsts;
    for (const auto& [a, b] : labels)
        firsts.push_back(a);
    std::sort(firsts.begin(), firsts.end());
    firsts.erase(std::unique(firsts.begin(), firsts.end()), firsts.end());
    auto ord = [&firsts](long long v) {
        auto it = std::lower_bound(firsts.begin(), firsts.end(), v);
        return static_cast<long long>(it - firsts.begin()) + 1;
    };
    std::vector<NumPair> out;
    out.reserve(labels.size());
    for (const auto& [a, b] : labels) {
        bool present = std::binary_search(firsts.begin(), firsts.end(), b);
        out.push_back({ord(a), present ? ord(b) : 0});
    }
    return out;
}

// ----------------------------------------------------- clique-width labels

std::optional<BalancedKModule> find_balanced_kmodule(const Graph& g, int k, int max_n) {
    int n = g.order();
    if (n > max_n)
        throw std::invalid_argument("find_balanced_kmodule: vertex count exceeds bound");
    if (k < 1)
        throw std::invalid_argument("find_balanced_kmodule: k must be positive");
    std::optional<BalancedKModule> best;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (3 * size < n || 3 * size > 2 * n)
            continue;
        std::vector<int> module_vertices;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v))
                module_vertices.push_back(v);
        // group by neighborhood signature on the outside
        std::map<std::vector<bool>, std::vector<int>> groups;
        for (int v : module_vertices) {
            std::vector<bool> signature;
            for (int w = 0; w < n; ++w)
                if (!(mask & (1u << w)))
                    signature.push_back(g.edge(v, w));
            groups[signature].push_back(v);
        }
        if (static_cast<int>(groups.size()) > k)
            continue;
        std::vector<std::vector<int>> parts;
        for (auto& [signature, members] : groups)
            parts.push_back(members);
        std::sort(parts.begin(), parts.end());
        BalancedKModule candidate{module_vertices, parts};
        if (!best || candidate.module_vertices < best->module_vertices)
            best = std::move(candidate);
    }
    return best;
}

namespace {

ModuleTreePtr build_tree_rec(const Graph& g, const std::vector<int>& vertices, int k,
                             int max_n, bool& ok) {
    auto node = std::make_shared<ModuleTreeNode>();
    node->vertices = vertices;
    if (vertices.size() == 1)
        return node;
    Graph sub = induced_subgraph(g, vertices);
    auto found = find_balanced_kmodule(sub, k, max_n);
    if (!found) {
        ok = false;
        return node;
    }
    std::vector<int> left_vertices, right_vertices;
    std::set<int> in_module(found->module_vertices.begin(),
                            found->module_vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        (in_module.count(static_cast<int>(i)) ? left_vertices : right_vertices)
            .push_back(vertices[i]);
    for (const auto& part : found->parts) {
        std::vector<int> mapped;
        for (int local : part)
            mapped.push_back(vertices[local]);
        node->parts.push_back(std::move(mapped));
    }
    for (int v : right_vertices) {
        std::vector<int> attached;
        for (std::size_t j = 0; j < node->parts.size(); ++j)
            if (g.edge(v, node->parts[j].front()))
                attached.push_back(static_cast<int>(j) + 1);
        node->attach[v] = std::move(attached);
    }
    node->left = build_tree_rec(g, left_vertices, k, max_n, ok);
    node->right = build_tree_rec(g, right_vertices, k, max_n, ok);
    return node;
}

} // namespace

std::optional<ModuleTreePtr> build_module_tree(const Graph& g, int k, int max_n) {
    std::vector<int> vertices(g.order());
    for (int v = 0; v < g.order(); ++v)
        vertices[v] = v;
    bool ok = true;
    ModuleTreePtr root = build_tree_rec(g, vertices, k, max_n, ok);
    if (!ok)
        return std::nullopt;
    return root;
}

void validate_module_tree(const Graph& g, const ModuleTreePtr& root, int k) {
    if (!root)
        throw std::invalid_argument("module tree: empty node");
    if (root->leaf()) {
        if (root->vertices.size() != 1)
            throw std::invalid_argument("module tree: leaves hold exactly one vertex");
        return;
    }
    if (!root->left || !root->right)
        throw std::invalid_argument("module tree: internal nodes need two children");
    std::size_t n = root->vertices.size();
    std::size_t left_n = root->left->vertices.size();
    if (3 * left_n < n || 3 * left_n > 2 * n)
        throw std::invalid_argument("module tree: balance condition violated");
    std::set<int> node_set(root->vertices.begin(), root->vertices.end());
    std::set<int> left_set(root->left->vertices.begin(), root->left->vertices.end());
    std::set<int> right_set(root->right->vertices.begin(), root->right->vertices.end());
    if (left_set.size() + right_set.size() != node_set.size())
        throw std::invalid_argument("module tree: children must partition the node");
    for (int v : root->left->vertices)
        if (!node_set.count(v))
            throw std::invalid_argument("module tree: child vertex outside node");
    for (int v : root->right->vertices)
        if (!node_set.count(v) || left_set.count(v))
            throw std::invalid_argument("module tree: children must partition the node");
    if (static_cast<int>(root->parts.size()) > k)
        throw std::invalid_argument("module tree: more than k parts");
    std::set<int> part_union;
    for (const auto& part : root->parts)
        for (int v : part) {
            if (!left_set.count(v) || part_union.count(v))
                throw std::invalid_argument("module tree: parts must partition the left child");
            part_union.insert(v);
        }
    if (part_union.size() != left_set.size())
        throw std::invalid_argument("module tree: parts must partition the left child");
    for (int v : root->right->vertices) {
        auto it = root->attach.find(v);
        std::set<int> attached;
        if (it != root->attach.end())
            attached = std::set<int>(it->second.begin(), it->second.end());
        for (int j : attached)
            if (j < 1 || j > static_cast<int>(root->parts.size()))
                throw std::invalid_argument("module tree: attachment index out of range");
        for (std::size_t j = 0; j < root->parts.size(); ++j) {
            bool expect = attached.count(static_cast<int>(j) + 1) > 0;
            for (int u : root->parts[j])
                if (g.edge(v, u) != expect)
                    throw std::invalid_argument(
                        "module tree: part is not a module against the outside");
        }
    }
    validate_module_tree(g, root->left, k);
    validate_module_tree(g, root->right, k);
}

CwEncoding cliquewidth_encode(const Graph& g, const ModuleTreePtr& tree, int k) {
    validate_module_tree(g, tree, k);
    int n = g.order();
    CwEncoding out;
    out.k = k;
    out.symbol_strings.assign(n, "");
    for (int v = 0; v < n; ++v) {
        std::string& s = out.symbol_strings[v];
        ModuleTreePtr node = tree;
        while (!node->leaf()) {
            bool in_left = std::find(node->left->vertices.begin(),
                                     node->left->vertices.end(),
                                     v) != node->left->vertices.end();
            if (in_left) {
                int part_index = 0;
                for (std::size_t j = 0; j < node->parts.size(); ++j)
                    if (std::find(node->parts[j].begin(), node->parts[j].end(), v) !=
                        node->parts[j].end())
                        part_index = static_cast<int>(j) + 1;
                s.push_back('0');
                for (int j = 1; j <= k; ++j)
                    s.push_back(j == part_index ? '1' : '0');
                s.push_back('#');
                node = node->left;
            } else {
                std::set<int> attached;
                auto it = node->attach.find(v);
                if (it != node->attach.end())
                    attached = std::set<int>(it->second.begin(), it->second.end());
                s.push_back('1');
                for (int j = 1; j <= k; ++j)
                    s.push_back(attached.count(j) ? '1' : '0');
                s.push_back('#');
                node = node->right;
            }
        }
    }
    for (const std::string& s : out.symbol_strings)
        out.symbols_per_label = std::max(out.symbols_per_label, s.size());
    for (const std::string& s : out.symbol_strings)
        out.labels.push_back(cw_encode_symbols(s, out.symbols_per_label));
    return out;
}

} // namespace labelab
