#include "labelab/pbs.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace labelab {

PbsBoolFn::PbsBoolFn(BooleanFunctionTable table)
    : arity_(table.arity()), table_(std::move(table)) {}

PbsBoolFn::PbsBoolFn(int arity, std::function<bool(const std::vector<bool>&)> fn)
    : arity_(arity), fn_(std::move(fn)) {
    if (arity < 0)
        throw std::invalid_argument("boolean function arity must be non-negative");
}

bool PbsBoolFn::eval(const std::vector<bool>& args) const {
    if (static_cast<int>(args.size()) != arity_)
        throw std::invalid_argument("boolean function argument count mismatch");
    if (table_)
        return table_->eval(args);
    return fn_(args);
}

void Pbs::validate() const {
    if (vars < 2 || vars % 2 != 0)
        throw std::invalid_argument("pbs needs an even, positive variable count");
    if (polys.empty())
        throw std::invalid_argument("pbs needs at least one polynomial");
    for (const auto& p : polys)
        if (p.vars() != vars)
            throw std::invalid_argument("pbs polynomial arity mismatch");
    if (f.arity() != l() * l())
        throw std::invalid_argument("pbs boolean function arity must be l^2");
}

namespace {

template <class Value>
bool pbs_eval_impl(const Pbs& r, const std::vector<Value>& values) {
    if (static_cast<int>(values.size()) != r.vars)
        throw std::invalid_argument("pbs evaluated with wrong value count");
    std::vector<Value> results;
    results.reserve(r.polys.size());
    for (const auto& p : r.polys)
        results.push_back(p.template eval<Value>(values));
    int l = r.l();
    std::vector<bool> matrix;
    matrix.reserve(l * l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            matrix.push_back(results[i] < results[j]);
    return r.f.eval(matrix);
}

} // namespace

bool pbs_eval(const Pbs& r, const std::vector<BigInt>& values) {
    return pbs_eval_impl(r, values);
}

bool pbs_eval(const Pbs& r, const std::vector<BigRat>& values) {
    return pbs_eval_impl(r, values);
}

Pbs dot_product_pbs(int k) {
    if (k < 1)
        throw std::invalid_argument("dot product needs k >= 1");
    int vars = 2 * k;
    Polynomial dot(vars);
    for (int i = 0; i < k; ++i) {
        std::vector<unsigned> exps(vars, 0);
        exps[i] = 1;
        exps[k + i] = 1;
        dot.add_term(exps, 1);
    }
    Polynomial one = Polynomial::constant(vars, 1);
    // accept iff dot >= 1, i.e. not (p1 < p2)
    auto f = BooleanFunctionTable::from_function(
        4, [](const std::vector<bool>& a) { return !a[1]; });
    Pbs r{vars, {dot, one}, PbsBoolFn(std::move(f))};
    r.validate();
    return r;
}

Pbs disk_pbs() {
    // labels (cx, cy, r) per vertex; intersection iff
    // (cxu-cxv)^2 + (cyu-cyv)^2 <= (ru+rv)^2, rearranged with non-negative
    // coefficients on both sides.
    int vars = 6;
    auto var = [vars](int i) { return Polynomial::variable(vars, i); };
    Polynomial lhs = var(0) * var(0) + var(3) * var(3) + var(1) * var(1) + var(4) * var(4);
    Polynomial rhs = var(2) * var(2) + var(5) * var(5) +
                     Polynomial::constant(vars, 2) * var(2) * var(5) +
                     Polynomial::constant(vars, 2) * var(0) * var(3) +
                     Polynomial::constant(vars, 2) * var(1) * var(4);
    // accept iff lhs <= rhs, i.e. not (p2 < p1)
    auto f = BooleanFunctionTable::from_function(
        4, [](const std::vector<bool>& a) { return !a[2]; });
    Pbs r{vars, {lhs, rhs}, PbsBoolFn(std::move(f))};
    r.validate();
    return r;
}

namespace {

// Positive and negative parts of the orientation
// (Qx-Px)(Ry-Py) - (Qy-Py)(Rx-Px); the PxPy terms cancel.
std::pair<Polynomial, Polynomial> orientation_parts(int vars, int px, int py, int qx,
                                                    int qy, int rx, int ry) {
    auto var = [vars](int i) { return Polynomial::variable(vars, i); };
    Polynomial pos = var(qx) * var(ry) + var(qy) * var(px) + var(py) * var(rx);
    Polynomial neg = var(qx) * var(py) + var(px) * var(ry) + var(qy) * var(rx);
    return {pos, neg};
}

} // namespace

Pbs segment_pbs() {
    // labels (ax, ay, bx, by): segment endpoints; u's vars 0..3, v's 4..7.
    int vars = 8;
    std::vector<Polynomial> polys;
    // o1 = o(A,B,C), o2 = o(A,B,D), o3 = o(C,D,A), o4 = o(C,D,B)
    auto push = [&polys](std::pair<Polynomial, Polynomial> pq) {
        polys.push_back(std::move(pq.first));
        polys.push_back(std::move(pq.second));
    };
    push(orientation_parts(vars, 0, 1, 2, 3, 4, 5));
    push(orientation_parts(vars, 0, 1, 2, 3, 6, 7));
    push(orientation_parts(vars, 4, 5, 6, 7, 0, 1));
    push(orientation_parts(vars, 4, 5, 6, 7, 2, 3));
    for (int i = 0; i < 8; ++i)
        polys.push_back(Polynomial::variable(vars, i)); // coordinate identities
    int l = static_cast<int>(polys.size()); // 16
    auto fn = [l](const std::vector<bool>& m) {
        auto lt = [&m, l](int i, int j) { return m[i * l + j]; };
        // sign of orientation i (0-based): parts at polys 2i, 2i+1
        auto sgn = [&lt](int i) {
            if (lt(2 * i, 2 * i + 1))
                return -1;
            if (lt(2 * i + 1, 2 * i))
                return 1;
            return 0;
        };
        int o1 = sgn(0), o2 = sgn(1), o3 = sgn(2), o4 = sgn(3);
        if (((o1 < 0 && o2 > 0) || (o1 > 0 && o2 < 0)) &&
            ((o3 < 0 && o4 > 0) || (o3 > 0 && o4 < 0)))
            return true;
        // coordinate c of corner i: identity polynomial 8 + index
        auto le = [&lt](int a, int b) { return !lt(8 + b, 8 + a); }; // coord a <= b
        auto between = [&le](int a, int b, int r) {
            return (le(a, r) && le(r, b)) || (le(b, r) && le(r, a));
        };
        auto on_segment = [&](int px, int py, int qx, int qy, int rx, int ry) {
            return between(px, qx, rx) && between(py, qy, ry);
        };
        if (o1 == 0 && on_segment(0, 1, 2, 3, 4, 5))
            return true;
        if (o2 == 0 && on_segment(0, 1, 2, 3, 6, 7))
            return true;
        if (o3 == 0 && on_segment(4, 5, 6, 7, 0, 1))
            return true;
        if (o4 == 0 && on_segment(4, 5, 6, 7, 2, 3))
            return true;
        return false;
    };
    Pbs r{vars, std::move(polys), PbsBoolFn(l * l, fn)};
    r.validate();
    return r;
}

bool disks_intersect(const std::vector<BigRat>& a, const std::vector<BigRat>& b) {
    if (a.size() != 3 || b.size() != 3)
        throw std::invalid_argument("disk labels carry (cx, cy, r)");
    BigRat dx = a[0] - b[0], dy = a[1] - b[1], rr = a[2] + b[2];
    return dx * dx + dy * dy <= rr * rr;
}

namespace {

BigRat orient(const BigRat& px, const BigRat& py, const BigRat& qx, const BigRat& qy,
              const BigRat& rx, const BigRat& ry) {
    return (qx - px) * (ry - py) - (qy - py) * (rx - px);
}

bool on_segment_rat(const BigRat& px, const BigRat& py, const BigRat& qx,
                    const BigRat& qy, const BigRat& rx, const BigRat& ry) {
    auto between = [](const BigRat& a, const BigRat& b, const BigRat& r) {
        return (a <= r && r <= b) || (b <= r && r <= a);
    };
    return between(px, qx, rx) && between(py, qy, ry);
}

} // namespace

bool segments_intersect(const std::vector<BigRat>& a, const std::vector<BigRat>& b) {
    if (a.size() != 4 || b.size() != 4)
        throw std::invalid_argument("segment labels carry (ax, ay, bx, by)");
    BigRat o1 = orient(a[0], a[1], a[2], a[3], b[0], b[1]);
    BigRat o2 = orient(a[0], a[1], a[2], a[3], b[2], b[3]);
    BigRat o3 = orient(b[0], b[1], b[2], b[3], a[0], a[1]);
    BigRat o4 = orient(b[0], b[1], b[2], b[3], a[2], a[3]);
    if (((o1 < 0 && o2 > 0) || (o1 > 0 && o2 < 0)) &&
        ((o3 < 0 && o4 > 0) || (o3 > 0 && o4 < 0)))
        return true;
    if (o1 == 0 && on_segment_rat(a[0], a[1], a[2], a[3], b[0], b[1]))
        return true;
    if (o2 == 0 && on_segment_rat(a[0], a[1], a[2], a[3], b[2], b[3]))
        return true;
    if (o3 == 0 && on_segment_rat(b[0], b[1], b[2], b[3], a[0], a[1]))
        return true;
    if (o4 == 0 && on_segment_rat(b[0], b[1], b[2], b[3], a[2], a[3]))
        return true;
    return false;
}

bool in_Qm(const BigRat& value, const BigInt& m) {
    if (value == 0)
        return true;
    BigInt num = boost::multiprecision::numerator(value);
    BigInt den = boost::multiprecision::denominator(value);
    if (num < 0)
        num = -num;
    return num <= m && den <= m;
}

Pbs clear_denominators(const Pbs& r) {
    r.validate();
    int vars = r.vars;
    std::vector<int> max_deg(vars, 0);
    for (const auto& p : r.polys)
        for (int t = 0; t < vars; ++t)
            max_deg[t] = std::max(max_deg[t], p.degree_in(t));
    std::vector<Polynomial> cleared;
    for (const auto& p : r.polys) {
        Polynomial q(2 * vars);
        for (const auto& [exps, coeff] : p.terms()) {
            std::vector<unsigned> ne(2 * vars, 0);
            for (int t = 0; t < vars; ++t) {
                ne[2 * t] = exps[t];
                ne[2 * t + 1] = static_cast<unsigned>(max_deg[t]) - exps[t];
            }
            q.add_term(ne, coeff);
        }
        cleared.push_back(std::move(q));
    }
    Pbs out{2 * vars, std::move(cleared), r.f};
    out.validate();
    return out;
}

std::vector<BigInt> clear_denominators_labels(const std::vector<BigRat>& values) {
    std::vector<BigInt> out;
    out.reserve(2 * values.size());
    for (const BigRat& v : values) {
        if (v < 0)
            throw std::invalid_argument("denominator clearing expects non-negative values");
        out.push_back(boost::multiprecision::numerator(v));
        out.push_back(boost::multiprecision::denominator(v));
    }
    return out;
}

std::pair<Polynomial, Polynomial> split_comparison(const Polynomial& p,
                                                   const Polynomial& q,
                                                   const std::vector<int>& signs) {
    if (static_cast<int>(signs.size()) != p.vars() || p.vars() != q.vars())
        throw std::invalid_argument("split_comparison: sign pattern arity mismatch");
    int vars = p.vars();
    Polynomial lhs(vars), rhs(vars);
    auto monomial_negative = [&signs, vars](const std::vector<unsigned>& exps) {
        bool neg = false;
        for (int t = 0; t < vars; ++t)
            if (signs[t] < 0 && exps[t] % 2 == 1)
                neg = !neg;
        return neg;
    };
    for (const auto& [exps, coeff] : p.terms()) {
        if (monomial_negative(exps))
            rhs.add_term(exps, coeff);
        else
            lhs.add_term(exps, coeff);
    }
    for (const auto& [exps, coeff] : q.terms()) {
        if (monomial_negative(exps))
            lhs.add_term(exps, coeff);
        else
            rhs.add_term(exps, coeff);
    }
    return {lhs, rhs};
}

SignSplit sign_split(const Pbs& r) {
    r.validate();
    int vars = r.vars;
    if (vars > 6)
        throw std::invalid_argument(
            "sign_split: rejected above 3 values per vertex (pattern blow-up)");
    int l = r.l();
    int patterns = 1 << vars;
    int new_vars = 2 * vars;
    // polynomial layout: identities for the 2*vars new variables first, then
    // per unordered comparison pair and sign pattern the split pair.
    std::vector<Polynomial> polys;
    for (int t = 0; t < new_vars; ++t)
        polys.push_back(Polynomial::variable(new_vars, t));
    auto remap = [new_vars, vars](const Polynomial& p) {
        Polynomial out(new_vars);
        for (const auto& [exps, coeff] : p.terms()) {
            std::vector<unsigned> ne(new_vars, 0);
            for (int t = 0; t < vars; ++t)
                ne[2 * t] = exps[t];
            out.add_term(ne, coeff);
        }
        return out;
    };
    std::vector<int> pair_rank(l * l, -1);
    int rank = 0;
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
            pair_rank[i * l + j] = rank++;
    int pair_base = new_vars;
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
            for (int s = 0; s < patterns; ++s) {
                std::vector<int> signs(vars);
                for (int t = 0; t < vars; ++t)
                    signs[t] = (s >> t) & 1 ? -1 : 1;
                auto [lhs, rhs] = split_comparison(r.polys[i], r.polys[j], signs);
                polys.push_back(remap(lhs));
                polys.push_back(remap(rhs));
            }
    int total = static_cast<int>(polys.size());
    PbsBoolFn old_f = r.f;
    auto fn = [vars, l, patterns, pair_base, pair_rank, total,
               old_f](const std::vector<bool>& m) {
        auto lt = [&m, total](int i, int j) { return m[i * total + j]; };
        // decode the sign pattern: negative iff witness equals the absolute value
        int s = 0;
        for (int t = 0; t < vars; ++t) {
            bool equal = !lt(2 * t, 2 * t + 1) && !lt(2 * t + 1, 2 * t);
            if (equal)
                s |= 1 << t;
        }
        std::vector<bool> args;
        args.reserve(l * l);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) {
                if (i == j) {
                    args.push_back(false);
                    continue;
                }
                bool swapped = i > j;
                int a = swapped ? j : i, b = swapped ? i : j;
                int idx = pair_base + (pair_rank[a * l + b] * patterns + s) * 2;
                // pair stores (p', q') for p_a < p_b; the reverse comparison
                // swaps the two polynomials.
                args.push_back(swapped ? lt(idx + 1, idx) : lt(idx, idx + 1));
            }
        return old_f.eval(args);
    };
    SignSplit out{Pbs{new_vars, std::move(polys), PbsBoolFn(total * total, fn)}, vars};
    out.system.validate();
    return out;
}

std::vector<BigRat> SignSplit::encode(const std::vector<BigRat>& values) const {
    std::vector<BigRat> out;
    out.reserve(2 * values.size());
    for (const BigRat& v : values) {
        BigRat a = v < 0 ? BigRat(-v) : v;
        out.push_back(a);
        out.push_back(v < 0 ? a : BigRat(a + 1));
    }
    return out;
}

ProbeResult sign_pattern_probe(const Pbs& r, int n, long long bound,
                               std::uint64_t budget) {
    r.validate();
    if (n < 1 || bound < 0)
        throw std::invalid_argument("probe needs n >= 1 and a non-negative bound");
    int k = r.k();
    std::uint64_t total = 1;
    for (int i = 0; i < k * n; ++i) {
        if (total > budget / static_cast<std::uint64_t>(bound + 1) + 1)
            throw std::invalid_argument("sign_pattern_probe: enumeration budget exceeded");
        total *= static_cast<std::uint64_t>(bound + 1);
    }
    if (total > budget)
        throw std::invalid_argument("sign_pattern_probe: enumeration budget exceeded");
    std::vector<long long> flat(k * n, 0);
    std::set<std::vector<bool>> seen;
    while (true) {
        std::vector<bool> adj(n * n, false);
        std::vector<BigInt> values(2 * k);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (u == v)
                    continue;
                for (int i = 0; i < k; ++i) {
                    values[i] = flat[u * k + i];
                    values[k + i] = flat[v * k + i];
                }
                adj[u * n + v] = pbs_eval(r, values);
            }
        seen.insert(std::move(adj));
        int pos = k * n - 1;
        while (pos >= 0 && flat[pos] == bound)
            flat[pos--] = 0;
        if (pos < 0)
            break;
        ++flat[pos];
    }
    ProbeResult result;
    result.count = seen.size();
    result.labelings = total;
    return result;
}

double ProbeResult::warren_log2_bound(double cconst, const Pbs& r, int n) const {
    int k = r.k();
    int l = r.l();
    int d = 1;
    for (const auto& p : r.polys)
        d = std::max(d, p.total_degree());
    double vars = static_cast<double>(k) * n;
    double m = static_cast<double>(l) * l * n * n;
    return vars * std::log2(cconst * d * m / vars);
}

namespace {

template <class Value>
bool verify_impl(const Pbs& r, const std::vector<std::vector<Value>>& labels,
                 const Graph& g, bool proper_only, const std::optional<BigInt>& size_bound,
                 bool (*bound_ok)(const Value&, const BigInt&)) {
    if (static_cast<int>(labels.size()) != g.order())
        throw std::invalid_argument("pbs verification: one label per vertex required");
    int k = r.k();
    for (const auto& label : labels) {
        if (static_cast<int>(label.size()) != k)
            throw std::invalid_argument("pbs verification: label arity mismatch");
        if (size_bound)
            for (const auto& v : label)
                if (!bound_ok(v, *size_bound))
                    throw std::invalid_argument("pbs verification: label outside size bound");
    }
    std::vector<Value> values(2 * k);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v) {
            if (u == v && proper_only)
                continue;
            for (int i = 0; i < k; ++i) {
                values[i] = labels[u][i];
                values[k + i] = labels[v][i];
            }
            if (pbs_eval(r, values) != g.edge(u, v))
                return false;
        }
    return true;
}

bool int_bound_ok(const BigInt& v, const BigInt& m) { return v >= 0 && v <= m; }
bool rat_bound_ok(const BigRat& v, const BigInt& m) { return in_Qm(v, m); }

} // namespace

bool verify_pbs_labeling(const Pbs& r, const std::vector<std::vector<BigInt>>& labels,
                         const Graph& g, bool proper_only,
                         const std::optional<BigInt>& size_bound) {
    return verify_impl(r, labels, g, proper_only, size_bound, int_bound_ok);
}

bool verify_pbs_labeling(const Pbs& r, const std::vector<std::vector<BigRat>>& labels,
                         const Graph& g, bool proper_only,
                         const std::optional<BigInt>& size_bound) {
    return verify_impl(r, labels, g, proper_only, size_bound, rat_bound_ok);
}

} // namespace labelab
