#include "labelab/reductions.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace labelab {

bool verify_algebraic(const Graph& g, const BooleanFunctionTable& f,
                      const std::vector<Graph>& witnesses) {
    return equiv_mod_selfloops(g, apply_boolean(f, witnesses));
}

namespace {

using Clock = std::chrono::steady_clock;

struct Ticker {
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

// pair order that completes vertices progressively: all pairs inside
// {0..j} before any pair touching j+1
struct PairPlan {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> group; // the larger endpoint
};

PairPlan progressive_pairs(int n, bool directed) {
    PairPlan plan;
    for (int hi = 1; hi < n; ++hi)
        for (int lo = 0; lo < hi; ++lo) {
            plan.pairs.push_back({lo, hi});
            plan.group.push_back(hi);
            if (directed) {
                plan.pairs.push_back({hi, lo});
                plan.group.push_back(hi);
            }
        }
    return plan;
}

} // namespace

AlgebraicSearchResult search_algebraic(const Graph& g, const BooleanFunctionTable& f,
                                       const GraphClassOracle& oracle,
                                       const SearchBudget& budget) {
    AlgebraicSearchResult result;
    int k = f.arity();
    int n = g.order();
    if (n > budget.max_n)
        return result;
    if (k < 1 || k > 20)
        throw std::invalid_argument("search_algebraic: unsupported arity");
    auto plan = progressive_pairs(n, g.directed());
    const auto& pairs = plan.pairs;
    // candidate edge vectors per desired verdict
    std::vector<std::vector<std::vector<bool>>> candidates(2);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<bool> vec(k);
        for (int i = 0; i < k; ++i)
            vec[i] = (mask >> (k - 1 - i)) & 1;
        candidates[f.eval(vec) ? 1 : 0].push_back(vec);
    }
    std::vector<Graph> witnesses(k, Graph(n, g.directed()));
    std::vector<std::size_t> cursor(pairs.size(), 0);
    Ticker ticker{&budget};
    int depth = 0;
    auto verdict_of = [&](int d) { return g.edge(pairs[d].first, pairs[d].second); };
    auto vertex_complete_after = [&](int d) {
        // vertices whose pairs are all decided once pair d is set
        return d + 1 == static_cast<int>(pairs.size()) ||
               plan.group[d + 1] != plan.group[d];
    };
    while (true) {
        if (depth < 0) {
            result.status = SearchStatus::none;
            result.nodes = ticker.nodes;
            return result;
        }
        const auto& cands = candidates[verdict_of(depth) ? 1 : 0];
        if (cursor[depth] >= cands.size()) {
            cursor[depth] = 0;
            --depth;
            if (depth >= 0)
                ++cursor[depth];
            continue;
        }
        if (!ticker.tick()) {
            result.nodes = ticker.nodes;
            return result; // unknown
        }
        const auto& vec = cands[cursor[depth]];
        auto [u, v] = pairs[depth];
        for (int i = 0; i < k; ++i)
            witnesses[i].set_edge(u, v, vec[i]);
        bool ok = true;
        if (oracle.hereditary && vertex_complete_after(depth)) {
            std::vector<int> prefix;
            for (int w = 0; w <= plan.group[depth]; ++w)
                prefix.push_back(w);
            for (int i = 0; ok && i < k; ++i)
                ok = oracle.membership(induced_subgraph(witnesses[i], prefix));
        }
        if (ok && depth + 1 == static_cast<int>(pairs.size())) {
            for (int i = 0; ok && i < k; ++i)
                ok = oracle.membership(witnesses[i]);
            if (ok) {
                result.status = SearchStatus::found;
                result.witnesses = witnesses;
                result.nodes = ticker.nodes;
                return result;
            }
        }
        if (!ok) {
            ++cursor[depth];
            continue;
        }
        ++depth;
    }
}

bool verify_subgraph(const Graph& g, const SubgraphRepresentation& rep) {
    int k = rep.k;
    if (rep.f.arity() != k * k)
        throw std::invalid_argument("verify_subgraph: boolean arity must be k^2");
    if (static_cast<int>(rep.map.size()) != g.order())
        throw std::invalid_argument("verify_subgraph: map must cover every vertex");
    for (const auto& tuple : rep.map) {
        if (static_cast<int>(tuple.size()) != k)
            throw std::invalid_argument("verify_subgraph: tuple length mismatch");
        for (int h : tuple)
            if (h < 0 || h >= rep.host.order())
                throw std::invalid_argument("verify_subgraph: tuple index outside host");
    }
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v) {
            if (u == v)
                continue;
            std::vector<std::vector<bool>> a(k, std::vector<bool>(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    a[i][j] = rep.host.edge(rep.map[u][i], rep.map[v][j]);
            if (rep.f.eval_matrix(a) != g.edge(u, v))
                return false;
        }
    return true;
}

SubgraphSearchResult search_subgraph(const Graph& g, const Graph& host, int k,
                                     const BooleanFunctionTable& f,
                                     const SearchBudget& budget) {
    SubgraphSearchResult result;
    if (g.order() > budget.max_n)
        return result;
    if (f.arity() != k * k)
        throw std::invalid_argument("search_subgraph: boolean arity must be k^2");
    double dsize = std::pow(static_cast<double>(host.order()), k);
    if (dsize > 1e12)
        throw std::invalid_argument("search_subgraph: tuple domain too large");
    std::uint64_t domain = 1;
    for (int i = 0; i < k; ++i)
        domain *= static_cast<std::uint64_t>(host.order());
    auto tuple_of = [&](std::uint64_t value) {
        std::vector<int> tuple(k);
        for (int i = k - 1; i >= 0; --i) {
            tuple[i] = static_cast<int>(value % host.order());
            value /= host.order();
        }
        return tuple;
    };
    auto pair_matches = [&](const std::vector<int>& tu, const std::vector<int>& tv,
                            bool want) {
        std::vector<std::vector<bool>> a(k, std::vector<bool>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                a[i][j] = host.edge(tu[i], tv[j]);
        return f.eval_matrix(a) == want;
    };
    int n = g.order();
    std::vector<std::uint64_t> assignment(n, 0);
    std::vector<std::uint64_t> cursor(n, 0);
    Ticker ticker{&budget};
    int depth = 0;
    while (true) {
        if (cursor[depth] >= domain) {
            cursor[depth] = 0;
            if (depth == 0) {
                result.status = SearchStatus::none;
                result.nodes = ticker.nodes;
                return result;
            }
            --depth;
            ++cursor[depth];
            continue;
        }
        if (!ticker.tick()) {
            result.nodes = ticker.nodes;
            return result;
        }
        auto tuple = tuple_of(cursor[depth]);
        bool ok = true;
        for (int w = 0; ok && w < depth; ++w) {
            auto tw = tuple_of(assignment[w]);
            ok = pair_matches(tw, tuple, g.edge(w, depth)) &&
                 pair_matches(tuple, tw, g.edge(depth, w));
        }
        if (!ok) {
            ++cursor[depth];
            continue;
        }
        assignment[depth] = cursor[depth];
        if (depth + 1 == n) {
            result.status = SearchStatus::found;
            for (std::uint64_t v : assignment)
                result.map.push_back(tuple_of(v));
            result.nodes = ticker.nodes;
            return result;
        }
        ++depth;
    }
}

BooleanFunctionTable compose_boolean(const BooleanFunctionTable& f,
                                     const BooleanFunctionTable& g) {
    auto isqrt = [](int arity) {
        int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(arity))));
        if (r * r != arity)
            throw std::invalid_argument("compose_boolean: arities must be perfect squares");
        return r;
    };
    int k = isqrt(f.arity());
    int l = isqrt(g.arity());
    int kl = k * l;
    if (kl * kl > BooleanFunctionTable::kMaxArity)
        throw std::invalid_argument("compose_boolean: composed arity too large");
    return BooleanFunctionTable::from_function(
        kl * kl, [&f, &g, k, l, kl](const std::vector<bool>& args) {
            // args is the (kl x kl) matrix row-major; block (I,J) feeds g
            std::vector<bool> outer(k * k);
            for (int bi = 0; bi < k; ++bi)
                for (int bj = 0; bj < k; ++bj) {
                    std::vector<bool> inner(l * l);
                    for (int i = 0; i < l; ++i)
                        for (int j = 0; j < l; ++j)
                            inner[i * l + j] = args[(bi * l + i) * kl + (bj * l + j)];
                    outer[bi * k + bj] = g.eval(inner);
                }
            return f.eval(outer);
        });
}

SubgraphRepresentation compose_representations(const SubgraphRepresentation& rep1,
                                               const SubgraphRepresentation& rep2) {
    SubgraphRepresentation out{rep2.host, compose_boolean(rep1.f, rep2.f),
                               rep1.k * rep2.k, {}};
    for (const auto& tuple : rep1.map) {
        std::vector<int> flat;
        for (int hv : tuple) {
            const auto& inner = rep2.map.at(hv);
            flat.insert(flat.end(), inner.begin(), inner.end());
        }
        out.map.push_back(std::move(flat));
    }
    return out;
}

SubgraphRepresentation algebraic_to_subgraph(const Graph& g,
                                             const BooleanFunctionTable& f,
                                             const std::vector<Graph>& witnesses) {
    if (static_cast<int>(witnesses.size()) != f.arity())
        throw std::invalid_argument("algebraic_to_subgraph: arity mismatch");
    int k = f.arity();
    int n = g.order();
    Graph host(n * k, g.directed());
    for (int i = 0; i < k; ++i)
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (witnesses[i].edge(u, v))
                    host.set_edge(i * n + u, i * n + v, true);
    // diagonal function: entry (i,i) is witness i's verdict
    auto diag = BooleanFunctionTable::from_function(
        k * k, [&f, k](const std::vector<bool>& args) {
            std::vector<bool> d(k);
            for (int i = 0; i < k; ++i)
                d[i] = args[i * k + i];
            return f.eval(d);
        });
    SubgraphRepresentation rep{std::move(host), std::move(diag), k, {}};
    for (int u = 0; u < n; ++u) {
        std::vector<int> tuple(k);
        for (int i = 0; i < k; ++i)
            tuple[i] = i * n + u;
        rep.map.push_back(std::move(tuple));
    }
    return rep;
}

// --------------------------- named constructive reductions -----------------

namespace {

BooleanFunctionTable entry_and(int k, int i1, int j1, int i2, int j2) {
    // f(A) = a_{i1,j1} && a_{i2,j2}, 1-based entries
    return BooleanFunctionTable::from_function(
        k * k, [=](const std::vector<bool>& a) {
            return a[(i1 - 1) * k + (j1 - 1)] && a[(i2 - 1) * k + (j2 - 1)];
        });
}

} // namespace

SubgraphRepresentation dichotomic_to_paths(const Graph& g) {
    auto labels = dichotomic_encode(g);
    long long n = g.order();
    long long host_n = n * n * n;
    SubgraphRepresentation rep{Graph::path(static_cast<int>(host_n)),
                               entry_and(4, 1, 4, 2, 3), 4, {}};
    if (n == 1) {
        rep.map.push_back({0, 0, 0, 0}); // no proper pairs to decide
        return rep;
    }
    for (const auto& [u1, u2] : labels)
        rep.map.push_back({static_cast<int>(2 * u1), static_cast<int>(2 * u1 + 1),
                           static_cast<int>(2 * u2), static_cast<int>(2 * u2 + 1)});
    return rep;
}

SubgraphRepresentation lng_to_tcpaths(const Graph& g) {
    auto labels = linear_neighborhood_encode(g);
    long long n = g.order();
    auto f = BooleanFunctionTable::from_function(
        4, [](const std::vector<bool>& a) { return a[1]; }); // a_{1,2}
    SubgraphRepresentation rep{Graph::transitive_path(static_cast<int>(n * n)),
                               std::move(f), 2, {}};
    for (const auto& [u1, u2] : labels)
        rep.map.push_back({static_cast<int>(u1), static_cast<int>(u2)});
    return rep;
}

SubgraphRepresentation tcpaths_to_interval(int n) {
    if (n < 1)
        throw std::invalid_argument("tcpaths_to_interval: n >= 1 required");
    // intervals [0,u] and [u,u] for u in [n-1]_0, padded to n^2 vertices
    // with far-away points
    IntervalModel model;
    for (int u = 0; u < n; ++u) {
        model.intervals.push_back({0, u});
        model.intervals.push_back({u, u});
    }
    for (int pad = 2 * n; pad < n * n; ++pad)
        model.intervals.push_back({10 * n + pad, 10 * n + pad});
    Graph host = model.intersection_graph();
    auto f = BooleanFunctionTable::from_function(4, [](const std::vector<bool>& a) {
        return a[2] && !a[1]; // a_{2,1} && !a_{1,2}
    });
    SubgraphRepresentation rep{std::move(host), std::move(f), 2, {}};
    for (int u = 0; u < n; ++u)
        rep.map.push_back({2 * u, 2 * u + 1});
    return rep;
}

std::pair<Graph, Graph> rectangles_to_interval_pair(
    const std::vector<std::array<long long, 4>>& boxes) {
    IntervalModel xs, ys;
    for (const auto& box : boxes) {
        if (box[0] > box[1] || box[2] > box[3])
            throw std::invalid_argument("rectangles: need x1 <= x2 and y1 <= y2");
        xs.intervals.push_back({box[0], box[1]});
        ys.intervals.push_back({box[2], box[3]});
    }
    return {xs.intersection_graph(), ys.intersection_graph()};
}

SubgraphRepresentation kinterval_to_interval(
    const std::vector<std::vector<std::pair<long long, long long>>>& model) {
    if (model.empty())
        throw std::invalid_argument("k-interval model needs at least one vertex");
    std::size_t k = model.front().size();
    for (const auto& tuple : model)
        if (tuple.size() != k || k == 0)
            throw std::invalid_argument("k-interval model needs k intervals per vertex");
    IntervalModel flat;
    for (const auto& tuple : model)
        for (const auto& interval : tuple)
            flat.intervals.push_back(interval);
    Graph host = flat.intersection_graph();
    int ki = static_cast<int>(k);
    auto f = BooleanFunctionTable::from_function(
        ki * ki, [](const std::vector<bool>& a) {
            for (bool b : a)
                if (b)
                    return true;
            return false;
        });
    SubgraphRepresentation rep{std::move(host), std::move(f), ki, {}};
    for (std::size_t u = 0; u < model.size(); ++u) {
        std::vector<int> tuple;
        for (std::size_t i = 0; i < k; ++i)
            tuple.push_back(static_cast<int>(u * k + i));
        rep.map.push_back(std::move(tuple));
    }
    return rep;
}

} // namespace labelab
