#include "labelab/logic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace labelab {

namespace {

// ---------------------------------------------------------------- bounded

struct BoundedEnv {
    const Assignment* free_vars;
    std::map<int, long long>* zvals;
    long long n;
};

long long eval_term_bounded(const Term& t, const BoundedEnv& env) {
    switch (t.kind) {
    case Term::Kind::var_x: {
        std::size_t k = env.free_vars->size() / 2;
        if (static_cast<std::size_t>(t.index) > k)
            throw std::invalid_argument("unbound variable x" + std::to_string(t.index));
        return (*env.free_vars)[t.index - 1];
    }
    case Term::Kind::var_y: {
        std::size_t k = env.free_vars->size() / 2;
        if (static_cast<std::size_t>(t.index) > k)
            throw std::invalid_argument("unbound variable y" + std::to_string(t.index));
        return (*env.free_vars)[k + t.index - 1];
    }
    case Term::Kind::var_z: {
        auto it = env.zvals->find(t.index);
        if (it == env.zvals->end())
            throw std::invalid_argument("unbound variable z" + std::to_string(t.index));
        return it->second;
    }
    case Term::Kind::const0:
        return 0;
    case Term::Kind::const1:
        return 1;
    case Term::Kind::constm:
        return env.n;
    case Term::Kind::plus: {
        long long v = eval_term_bounded(*t.lhs, env) + eval_term_bounded(*t.rhs, env);
        return v > env.n ? 0 : v;
    }
    case Term::Kind::times: {
        long long a = eval_term_bounded(*t.lhs, env);
        long long b = eval_term_bounded(*t.rhs, env);
        if (b != 0 && a > env.n / b) // a*b > n without overflowing long long
            return 0;
        long long v = a * b;
        return v > env.n ? 0 : v;
    }
    }
    throw std::logic_error("unreachable");
}

bool eval_formula_bounded(const Formula& f, const BoundedEnv& env) {
    switch (f.kind) {
    case Formula::Kind::less:
        return eval_term_bounded(*f.t1, env) < eval_term_bounded(*f.t2, env);
    case Formula::Kind::equal:
        return eval_term_bounded(*f.t1, env) == eval_term_bounded(*f.t2, env);
    case Formula::Kind::not_f:
        return !eval_formula_bounded(*f.f1, env);
    case Formula::Kind::and_f:
        return eval_formula_bounded(*f.f1, env) && eval_formula_bounded(*f.f2, env);
    case Formula::Kind::or_f:
        return eval_formula_bounded(*f.f1, env) || eval_formula_bounded(*f.f2, env);
    case Formula::Kind::exists: {
        for (long long v = 0; v <= env.n; ++v) {
            (*env.zvals)[f.zindex] = v;
            bool ok = eval_formula_bounded(*f.f1, env);
            env.zvals->erase(f.zindex);
            if (ok)
                return true;
        }
        return false;
    }
    case Formula::Kind::forall: {
        for (long long v = 0; v <= env.n; ++v) {
            (*env.zvals)[f.zindex] = v;
            bool ok = eval_formula_bounded(*f.f1, env);
            env.zvals->erase(f.zindex);
            if (!ok)
                return false;
        }
        return true;
    }
    }
    throw std::logic_error("unreachable");
}

// --------------------------------------------------------------- infinite

BigInt eval_term_infinite(const Term& t, const std::vector<BigInt>& a,
                          const std::optional<BigInt>& cm) {
    switch (t.kind) {
    case Term::Kind::var_x: {
        std::size_t k = a.size() / 2;
        if (static_cast<std::size_t>(t.index) > k)
            throw std::invalid_argument("unbound variable x" + std::to_string(t.index));
        return a[t.index - 1];
    }
    case Term::Kind::var_y: {
        std::size_t k = a.size() / 2;
        if (static_cast<std::size_t>(t.index) > k)
            throw std::invalid_argument("unbound variable y" + std::to_string(t.index));
        return a[k + t.index - 1];
    }
    case Term::Kind::var_z:
        throw std::invalid_argument("quantified variable in unbounded evaluation");
    case Term::Kind::const0:
        return 0;
    case Term::Kind::const1:
        return 1;
    case Term::Kind::constm:
        if (!cm)
            throw std::invalid_argument("formula mentions cm but no value was supplied");
        return *cm;
    case Term::Kind::plus:
        return eval_term_infinite(*t.lhs, a, cm) + eval_term_infinite(*t.rhs, a, cm);
    case Term::Kind::times:
        return eval_term_infinite(*t.lhs, a, cm) * eval_term_infinite(*t.rhs, a, cm);
    }
    throw std::logic_error("unreachable");
}

bool eval_formula_infinite(const Formula& f, const std::vector<BigInt>& a,
                           const std::optional<BigInt>& cm) {
    switch (f.kind) {
    case Formula::Kind::less:
        return eval_term_infinite(*f.t1, a, cm) < eval_term_infinite(*f.t2, a, cm);
    case Formula::Kind::equal:
        return eval_term_infinite(*f.t1, a, cm) == eval_term_infinite(*f.t2, a, cm);
    case Formula::Kind::not_f:
        return !eval_formula_infinite(*f.f1, a, cm);
    case Formula::Kind::and_f:
        return eval_formula_infinite(*f.f1, a, cm) && eval_formula_infinite(*f.f2, a, cm);
    case Formula::Kind::or_f:
        return eval_formula_infinite(*f.f1, a, cm) || eval_formula_infinite(*f.f2, a, cm);
    case Formula::Kind::exists:
    case Formula::Kind::forall:
        throw std::invalid_argument("unbounded evaluation requires a quantifier-free formula");
    }
    throw std::logic_error("unreachable");
}

} // namespace

bool eval_bounded(const Formula& phi, const Assignment& a, long long n) {
    if (n < 1)
        throw std::invalid_argument("bounded universe needs n >= 1");
    for (long long v : a)
        if (v < 0 || v > n)
            throw std::invalid_argument("assignment value outside the universe");
    std::map<int, long long> zvals;
    BoundedEnv env{&a, &zvals, n};
    return eval_formula_bounded(phi, env);
}

bool eval_infinite(const Formula& phi, const std::vector<BigInt>& a,
                   const std::optional<BigInt>& cm) {
    return eval_formula_infinite(phi, a, cm);
}

bool eval_infinite(const Formula& phi, const Assignment& a,
                   const std::optional<long long>& cm) {
    std::vector<BigInt> big(a.begin(), a.end());
    std::optional<BigInt> bigcm;
    if (cm)
        bigcm = BigInt(*cm);
    return eval_formula_infinite(phi, big, bigcm);
}

// --------------------------------------------------------- guard transform

namespace {

// Non-leaf subterms of an atom in post-order (left side first). The guarded
// formula branches on "cm < s" for each subterm s, where s is rebuilt with
// already-overflowed descendants replaced by c0.
void collect_compound(const TermPtr& t, std::vector<const Term*>& out) {
    if (t->kind != Term::Kind::plus && t->kind != Term::Kind::times)
        return;
    collect_compound(t->lhs, out);
    collect_compound(t->rhs, out);
    out.push_back(t.get());
}

TermPtr rebuild_term(const Term* t, const std::map<const Term*, bool>& overflowed) {
    auto it = overflowed.find(t);
    if (it != overflowed.end() && it->second)
        return t_c0();
    switch (t->kind) {
    case Term::Kind::plus:
        return t_plus(rebuild_term(t->lhs.get(), overflowed),
                      rebuild_term(t->rhs.get(), overflowed));
    case Term::Kind::times:
        return t_times(rebuild_term(t->lhs.get(), overflowed),
                       rebuild_term(t->rhs.get(), overflowed));
    case Term::Kind::var_x: return t_x(t->index);
    case Term::Kind::var_y: return t_y(t->index);
    case Term::Kind::var_z: return t_z(t->index);
    case Term::Kind::const0: return t_c0();
    case Term::Kind::const1: return t_c1();
    case Term::Kind::constm: return t_cm();
    }
    throw std::logic_error("unreachable");
}

FormulaPtr guard_atom_branch(const Formula& atom,
                             const std::vector<const Term*>& compounds, std::size_t i,
                             std::map<const Term*, bool>& overflowed) {
    if (i == compounds.size()) {
        TermPtr lhs = rebuild_term(atom.t1.get(), overflowed);
        TermPtr rhs = rebuild_term(atom.t2.get(), overflowed);
        return atom.kind == Formula::Kind::less ? f_less(lhs, rhs) : f_equal(lhs, rhs);
    }
    const Term* s = compounds[i];
    // The subterm as currently rebuilt; its own node is not yet overflowed.
    TermPtr current = rebuild_term(s, overflowed);
    FormulaPtr cond = f_less(t_cm(), current);
    overflowed[s] = true;
    FormulaPtr yes = guard_atom_branch(atom, compounds, i + 1, overflowed);
    overflowed[s] = false;
    FormulaPtr no = guard_atom_branch(atom, compounds, i + 1, overflowed);
    return f_and(f_implies(cond, yes), f_implies(f_not(cond), no));
}

FormulaPtr guard_atom(const Formula& atom) {
    std::vector<const Term*> compounds;
    collect_compound(atom.t1, compounds);
    collect_compound(atom.t2, compounds);
    if (compounds.empty())
        return std::make_shared<Formula>(atom);
    if (compounds.size() > 16)
        throw std::invalid_argument("guard_transform: too many compound subterms");
    std::map<const Term*, bool> overflowed;
    return guard_atom_branch(atom, compounds, 0, overflowed);
}

} // namespace

FormulaPtr guard_transform(const Formula& phi) {
    switch (phi.kind) {
    case Formula::Kind::less:
    case Formula::Kind::equal:
        return guard_atom(phi);
    case Formula::Kind::not_f:
        return f_not(guard_transform(*phi.f1));
    case Formula::Kind::and_f:
        return f_and(guard_transform(*phi.f1), guard_transform(*phi.f2));
    case Formula::Kind::or_f:
        return f_or(guard_transform(*phi.f1), guard_transform(*phi.f2));
    case Formula::Kind::exists:
    case Formula::Kind::forall:
        throw std::invalid_argument("guard_transform requires a quantifier-free formula");
    }
    throw std::logic_error("unreachable");
}

// -------------------------------------------------- quantifier elimination

namespace {

// Points of the difference-constraint view: variables plus the constants
// 0 and the universe maximum.
struct Point {
    enum class Type { c0, cm, vx, vy, vz };
    Type type;
    int index = 0;

    bool operator==(const Point& o) const { return type == o.type && index == o.index; }
    bool operator<(const Point& o) const {
        if (type != o.type)
            return type < o.type;
        return index < o.index;
    }
};

TermPtr point_term(const Point& p) {
    switch (p.type) {
    case Point::Type::c0: return t_c0();
    case Point::Type::cm: return t_cm();
    case Point::Type::vx: return t_x(p.index);
    case Point::Type::vy: return t_y(p.index);
    case Point::Type::vz: return t_z(p.index);
    }
    throw std::logic_error("unreachable");
}

struct OffsetPoint {
    Point point;
    long long offset = 0;
};

// Side of an atom as point + offset: a single variable or constant plus any
// number of added constants. Multiplication and two-variable sums fail.
std::optional<OffsetPoint> parse_offset_point(const Term& t) {
    switch (t.kind) {
    case Term::Kind::var_x: return OffsetPoint{{Point::Type::vx, t.index}, 0};
    case Term::Kind::var_y: return OffsetPoint{{Point::Type::vy, t.index}, 0};
    case Term::Kind::var_z: return OffsetPoint{{Point::Type::vz, t.index}, 0};
    case Term::Kind::const0: return OffsetPoint{{Point::Type::c0, 0}, 0};
    case Term::Kind::const1: return OffsetPoint{{Point::Type::c0, 0}, 1};
    case Term::Kind::constm: return OffsetPoint{{Point::Type::cm, 0}, 0};
    case Term::Kind::plus: {
        auto a = parse_offset_point(*t.lhs);
        auto b = parse_offset_point(*t.rhs);
        if (!a || !b)
            return std::nullopt;
        bool a_const = a->point.type == Point::Type::c0 && a->point.index == 0;
        bool b_const = b->point.type == Point::Type::c0 && b->point.index == 0;
        if (!a_const && !b_const)
            return std::nullopt;
        return OffsetPoint{a_const ? b->point : a->point, a->offset + b->offset};
    }
    case Term::Kind::times:
        return std::nullopt;
    }
    return std::nullopt;
}

// q - p >= w
struct EdgeConstraint {
    Point p, q;
    long long w;
};

bool mentions_z(const Term& t, int zindex) {
    switch (t.kind) {
    case Term::Kind::var_z:
        return t.index == zindex;
    case Term::Kind::plus:
    case Term::Kind::times:
        return mentions_z(*t.lhs, zindex) || mentions_z(*t.rhs, zindex);
    default:
        return false;
    }
}

bool mentions_z(const Formula& f, int zindex) {
    switch (f.kind) {
    case Formula::Kind::less:
    case Formula::Kind::equal:
        return mentions_z(*f.t1, zindex) || mentions_z(*f.t2, zindex);
    case Formula::Kind::not_f:
        return mentions_z(*f.f1, zindex);
    case Formula::Kind::and_f:
    case Formula::Kind::or_f:
        return mentions_z(*f.f1, zindex) || mentions_z(*f.f2, zindex);
    case Formula::Kind::exists:
    case Formula::Kind::forall:
        return f.zindex == zindex || mentions_z(*f.f1, zindex);
    }
    return false;
}

// A sub-clause produced by overflow case splits: extra edge constraints plus
// the resolved sides of the atom being processed.
struct SideBranch {
    std::vector<EdgeConstraint> constraints;
    OffsetPoint side;
};

const Point kC0{Point::Type::c0, 0};
const Point kCM{Point::Type::cm, 0};

// Overflow-aware reading of an offset-point side under bounded semantics:
// either the increment chain never wraps, or it wraps after j steps (the
// running value hits the maximum), pinning the point and restarting from 0.
void expand_side(const OffsetPoint& side, std::vector<SideBranch>& out,
                 std::vector<EdgeConstraint> pending) {
    if (side.offset <= 0) {
        out.push_back({std::move(pending), side});
        return;
    }
    long long a = side.offset;
    // no wrap: point + a <= max, i.e. cm - point >= a (+0 for cm itself)
    {
        auto constraints = pending;
        constraints.push_back({side.point, kCM, a});
        out.push_back({std::move(constraints), side});
    }
    // wrap after step j: point + (j-1) = max; value restarts at 0 and the
    // remaining a-j increments apply to the constant 0.
    for (long long j = 1; j <= a; ++j) {
        auto constraints = pending;
        constraints.push_back({side.point, kCM, j - 1});
        constraints.push_back({kCM, side.point, -(j - 1)});
        OffsetPoint rest{kC0, a - j};
        // The remainder may itself wrap for tiny universes.
        expand_side(rest, out, std::move(constraints));
    }
}

std::vector<SideBranch> side_branches(const OffsetPoint& side) {
    std::vector<SideBranch> out;
    expand_side(side, out, {});
    return out;
}

FormulaPtr canonical_false() { return f_less(t_c0(), t_c0()); }
FormulaPtr canonical_true() { return f_equal(t_c0(), t_c0()); }

bool formula_is_canonical_false(const Formula& f) {
    return f.kind == Formula::Kind::less && f.t1->kind == Term::Kind::const0 &&
           f.t2->kind == Term::Kind::const0;
}

// Guarded emission of q - p >= s for s >= 1: the chain p + (s-1)*c1 must not
// wrap, then the strict comparison holds. Matches the appended
// "x + c1 < y && x != cm" pattern for s = 2.
FormulaPtr emit_ge(const Point& q, const Point& p, long long s) {
    if (s < 1)
        throw std::logic_error("emit_ge needs s >= 1");
    TermPtr chain = point_term(p);
    FormulaPtr result = nullptr;
    for (long long j = 0; j + 1 < s; ++j) {
        FormulaPtr guard = f_not(f_equal(chain, t_cm()));
        result = result ? f_and(result, guard) : guard;
        chain = t_plus(chain, t_c1());
    }
    FormulaPtr cmp = f_less(chain, point_term(q));
    return result ? f_and(cmp, result) : cmp;
}

FormulaPtr emit_constraint(const EdgeConstraint& e) {
    if (e.p == e.q)
        return e.w <= 0 ? canonical_true() : canonical_false();
    if (e.w >= 1)
        return emit_ge(e.q, e.p, e.w);
    // q - p >= w with w <= 0 is the negation of p - q >= 1 - w.
    return f_not(emit_ge(e.p, e.q, 1 - e.w));
}

struct Clause {
    std::vector<FormulaPtr> atoms;
};

FormulaPtr to_nnf(const FormulaPtr& f, bool negate) {
    switch (f->kind) {
    case Formula::Kind::less:
        if (!negate)
            return f;
        // value-level trichotomy: !(a<b) == (a=b | b<a)
        return f_or(f_equal(f->t1, f->t2), f_less(f->t2, f->t1));
    case Formula::Kind::equal:
        if (!negate)
            return f;
        return f_or(f_less(f->t1, f->t2), f_less(f->t2, f->t1));
    case Formula::Kind::not_f:
        return to_nnf(f->f1, !negate);
    case Formula::Kind::and_f: {
        FormulaPtr a = to_nnf(f->f1, negate);
        FormulaPtr b = to_nnf(f->f2, negate);
        return negate ? f_or(a, b) : f_and(a, b);
    }
    case Formula::Kind::or_f: {
        FormulaPtr a = to_nnf(f->f1, negate);
        FormulaPtr b = to_nnf(f->f2, negate);
        return negate ? f_and(a, b) : f_or(a, b);
    }
    case Formula::Kind::exists:
    case Formula::Kind::forall:
        throw std::invalid_argument("quantifier elimination: body must be quantifier-free");
    }
    throw std::logic_error("unreachable");
}

constexpr std::size_t kMaxClauses = 1 << 14;

std::vector<Clause> to_dnf(const FormulaPtr& f) {
    switch (f->kind) {
    case Formula::Kind::less:
    case Formula::Kind::equal:
        return {Clause{{f}}};
    case Formula::Kind::or_f: {
        auto a = to_dnf(f->f1);
        auto b = to_dnf(f->f2);
        a.insert(a.end(), b.begin(), b.end());
        if (a.size() > kMaxClauses)
            throw std::invalid_argument("quantifier elimination: DNF too large");
        return a;
    }
    case Formula::Kind::and_f: {
        auto a = to_dnf(f->f1);
        auto b = to_dnf(f->f2);
        std::vector<Clause> out;
        if (a.size() * b.size() > kMaxClauses)
            throw std::invalid_argument("quantifier elimination: DNF too large");
        for (const auto& ca : a)
            for (const auto& cb : b) {
                Clause c = ca;
                c.atoms.insert(c.atoms.end(), cb.atoms.begin(), cb.atoms.end());
                out.push_back(std::move(c));
            }
        return out;
    }
    default:
        throw std::logic_error("to_dnf expects an NNF formula without negations");
    }
}

struct ParsedClause {
    std::vector<FormulaPtr> verbatim;       // z-free atoms, kept as written
    std::vector<EdgeConstraint> edges;       // from z-involving atoms
    bool contradiction = false;
};

// Splits a clause into overflow branches and converts every z-involving atom
// into edge constraints. Returns one ParsedClause per branch.
std::vector<ParsedClause> parse_clause(const Clause& clause, int zindex) {
    std::vector<ParsedClause> branches{ParsedClause{}};
    for (const FormulaPtr& atom : clause.atoms) {
        if (!mentions_z(*atom, zindex)) {
            for (auto& b : branches)
                b.verbatim.push_back(atom);
            continue;
        }
        auto lhs = parse_offset_point(*atom->t1);
        auto rhs = parse_offset_point(*atom->t2);
        if (!lhs || !rhs)
            throw std::invalid_argument(
                "quantifier elimination: unsupported atom shape involving the "
                "quantified variable");
        auto lbranches = side_branches(*lhs);
        auto rbranches = side_branches(*rhs);
        std::vector<ParsedClause> next;
        for (const auto& base : branches)
            for (const auto& lb : lbranches)
                for (const auto& rb : rbranches) {
                    ParsedClause pc = base;
                    pc.edges.insert(pc.edges.end(), lb.constraints.begin(),
                                    lb.constraints.end());
                    pc.edges.insert(pc.edges.end(), rb.constraints.begin(),
                                    rb.constraints.end());
                    // atom: (L.point + Lo) op (R.point + Ro)
                    long long lo = lb.side.offset, ro = rb.side.offset;
                    const Point &lp = lb.side.point, &rp = rb.side.point;
                    if (atom->kind == Formula::Kind::less) {
                        // R - L >= lo - ro + 1
                        pc.edges.push_back({lp, rp, lo - ro + 1});
                    } else {
                        pc.edges.push_back({lp, rp, lo - ro});
                        pc.edges.push_back({rp, lp, ro - lo});
                    }
                    next.push_back(std::move(pc));
                }
        branches = std::move(next);
        if (branches.size() > kMaxClauses)
            throw std::invalid_argument("quantifier elimination: overflow split too large");
    }
    return branches;
}

FormulaPtr eliminate_branch(ParsedClause branch, int zindex) {
    Point zpoint{Point::Type::vz, zindex};
    // z >= p + a  (lower) and q >= z + b (upper)
    std::vector<std::pair<Point, long long>> lowers, uppers;
    std::vector<EdgeConstraint> rest;
    for (const auto& e : branch.edges) {
        bool pz = e.p == zpoint, qz = e.q == zpoint;
        if (pz && qz) {
            if (e.w > 0)
                return canonical_false();
            continue;
        }
        if (pz)
            uppers.push_back({e.q, e.w}); // q - z >= w
        else if (qz)
            lowers.push_back({e.p, e.w}); // z - p >= w
        else
            rest.push_back(e);
    }
    lowers.push_back({kC0, 0}); // z >= 0
    uppers.push_back({kCM, 0}); // max >= z
    std::vector<FormulaPtr> pieces;
    auto push = [&pieces](FormulaPtr f) {
        if (formula_is_canonical_false(*f)) {
            pieces.assign(1, std::move(f));
            return false;
        }
        pieces.push_back(std::move(f));
        return true;
    };
    for (const FormulaPtr& atom : branch.verbatim)
        pieces.push_back(atom);
    for (const auto& e : rest)
        if (!push(emit_constraint(e)))
            return canonical_false();
    for (const auto& lo : lowers)
        for (const auto& up : uppers) {
            bool implicit_pair = lo.first == kC0 && lo.second == 0 &&
                                 up.first == kCM && up.second == 0;
            if (implicit_pair)
                continue; // max >= 0 holds in every universe
            if (!push(emit_constraint({lo.first, up.first, lo.second + up.second})))
                return canonical_false();
        }
    if (pieces.empty())
        return canonical_true();
    FormulaPtr result = pieces.front();
    for (std::size_t i = 1; i < pieces.size(); ++i)
        result = f_and(result, pieces[i]);
    return result;
}

FormulaPtr eliminate_exists(int zindex, const FormulaPtr& body) {
    FormulaPtr nnf = to_nnf(body, false);
    std::vector<Clause> clauses = to_dnf(nnf);
    std::vector<FormulaPtr> results;
    for (const Clause& clause : clauses) {
        bool any_z = false;
        for (const auto& atom : clause.atoms)
            if (mentions_z(*atom, zindex))
                any_z = true;
        if (!any_z) {
            FormulaPtr conj = clause.atoms.front();
            for (std::size_t i = 1; i < clause.atoms.size(); ++i)
                conj = f_and(conj, clause.atoms[i]);
            results.push_back(conj);
            continue;
        }
        for (auto& branch : parse_clause(clause, zindex)) {
            FormulaPtr r = eliminate_branch(std::move(branch), zindex);
            if (!formula_is_canonical_false(*r))
                results.push_back(r);
        }
    }
    if (results.empty())
        return canonical_false();
    FormulaPtr out = results.front();
    for (std::size_t i = 1; i < results.size(); ++i)
        out = f_or(out, results[i]);
    return out;
}

FormulaPtr qe_rec(const FormulaPtr& f) {
    switch (f->kind) {
    case Formula::Kind::less:
    case Formula::Kind::equal:
        return f;
    case Formula::Kind::not_f:
        return f_not(qe_rec(f->f1));
    case Formula::Kind::and_f:
        return f_and(qe_rec(f->f1), qe_rec(f->f2));
    case Formula::Kind::or_f:
        return f_or(qe_rec(f->f1), qe_rec(f->f2));
    case Formula::Kind::exists:
        return eliminate_exists(f->zindex, qe_rec(f->f1));
    case Formula::Kind::forall:
        return f_not(eliminate_exists(f->zindex, f_not(qe_rec(f->f1))));
    }
    throw std::logic_error("unreachable");
}

} // namespace

FormulaPtr qe_order(const Formula& phi) {
    if (uses_arithmetic(phi))
        throw std::invalid_argument("qe_order accepts formulas over {<,=} only");
    auto self = std::make_shared<Formula>(phi);
    if (is_quantifier_free(phi))
        return self;
    return qe_rec(self);
}

// --------------------------------------------------------- decomposition

namespace {

FormulaPtr eval_structure(const Formula& f, std::vector<FormulaPtr>* atoms,
                          const std::vector<bool>* verdicts, std::size_t* cursor,
                          bool* result) {
    // Two modes: collecting atoms (atoms != nullptr) or evaluating against
    // atom verdicts.
    switch (f.kind) {
    case Formula::Kind::less:
    case Formula::Kind::equal: {
        if (atoms)
            atoms->push_back(std::make_shared<Formula>(f));
        if (verdicts) {
            *result = (*verdicts)[*cursor];
            ++*cursor;
        }
        return nullptr;
    }
    case Formula::Kind::not_f: {
        bool sub = false;
        eval_structure(*f.f1, atoms, verdicts, cursor, &sub);
        if (verdicts)
            *result = !sub;
        return nullptr;
    }
    case Formula::Kind::and_f:
    case Formula::Kind::or_f: {
        bool a = false, b = false;
        eval_structure(*f.f1, atoms, verdicts, cursor, &a);
        eval_structure(*f.f2, atoms, verdicts, cursor, &b);
        if (verdicts)
            *result = f.kind == Formula::Kind::and_f ? (a && b) : (a || b);
        return nullptr;
    }
    case Formula::Kind::exists:
    case Formula::Kind::forall:
        throw std::invalid_argument("atoms_decompose requires a quantifier-free formula");
    }
    return nullptr;
}

} // namespace

AtomsDecomposition atoms_decompose(const Formula& phi) {
    std::vector<FormulaPtr> atoms;
    eval_structure(phi, &atoms, nullptr, nullptr, nullptr);
    int a = static_cast<int>(atoms.size());
    if (a > BooleanFunctionTable::kMaxArity)
        throw std::invalid_argument("atoms_decompose: too many atom occurrences");
    auto f = BooleanFunctionTable::from_function(a, [&phi](const std::vector<bool>& args) {
        std::size_t cursor = 0;
        bool result = false;
        eval_structure(phi, nullptr, &args, &cursor, &result);
        return result;
    });
    return {std::move(atoms), std::move(f)};
}

// ------------------------------------------------- linear atom normalizer

namespace {

void linear_coefficients(const Term& t, std::vector<long long>& xc,
                         std::vector<long long>& yc, long long scale) {
    switch (t.kind) {
    case Term::Kind::var_x:
        if (static_cast<std::size_t>(t.index) > xc.size())
            xc.resize(t.index, 0), yc.resize(std::max(yc.size(), xc.size()), 0);
        xc.resize(std::max<std::size_t>(xc.size(), t.index), 0);
        xc[t.index - 1] += scale;
        return;
    case Term::Kind::var_y:
        yc.resize(std::max<std::size_t>(yc.size(), t.index), 0);
        yc[t.index - 1] += scale;
        return;
    case Term::Kind::plus:
        linear_coefficients(*t.lhs, xc, yc, scale);
        linear_coefficients(*t.rhs, xc, yc, scale);
        return;
    case Term::Kind::times:
        throw std::invalid_argument("normalize_linear_atom: multiplication present");
    default:
        throw std::invalid_argument("normalize_linear_atom: atom must be linear in x/y variables");
    }
}

} // namespace

NormalizedLinearAtom::NormalizedLinearAtom(const Formula& atom, long long n, int c) {
    if (!is_atom(atom))
        throw std::invalid_argument("normalize_linear_atom: input must be atomic");
    is_equality_ = atom.kind == Formula::Kind::equal;
    std::vector<long long> lx, ly, rx, ry;
    linear_coefficients(*atom.t1, lx, ly, 1);
    linear_coefficients(*atom.t2, rx, ry, 1);
    k_ = static_cast<int>(std::max(std::max(lx.size(), ly.size()),
                                   std::max(rx.size(), ry.size())));
    if (k_ == 0)
        throw std::invalid_argument("normalize_linear_atom: no variables");
    lx.resize(k_, 0); ly.resize(k_, 0); rx.resize(k_, 0); ry.resize(k_, 0);
    // l_n uses x-coefficients of (lhs - rhs), r_n the y-coefficients of
    // (rhs - lhs); the atom becomes l_n(x) < r_n(y) (or =).
    left_coeff_.resize(k_);
    right_coeff_.resize(k_);
    for (int i = 0; i < k_; ++i) {
        left_coeff_[i] = lx[i] - rx[i];
        right_coeff_[i] = ry[i] - ly[i];
    }
    bound_ = 1;
    for (int i = 0; i < c; ++i) {
        bound_ *= n;
        if (bound_ > (1 << 20))
            throw std::invalid_argument("normalize_linear_atom: universe too large");
    }
    double tuples = std::pow(static_cast<double>(bound_ + 1), k_);
    if (tuples > 1e7)
        throw std::invalid_argument("normalize_linear_atom: value set enumeration too large");
    std::vector<long long> values;
    std::vector<long long> tuple(k_, 0);
    auto sweep = [&](const std::vector<long long>& coeff) {
        std::fill(tuple.begin(), tuple.end(), 0);
        while (true) {
            long long v = 0;
            for (int i = 0; i < k_; ++i)
                v += coeff[i] * tuple[i];
            values.push_back(v);
            int pos = k_ - 1;
            while (pos >= 0 && tuple[pos] == bound_)
                tuple[pos--] = 0;
            if (pos < 0)
                break;
            ++tuple[pos];
        }
    };
    sweep(left_coeff_);
    sweep(right_coeff_);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    sorted_values_ = std::move(values);
}

long long NormalizedLinearAtom::side_value(const NumLabel& label, bool left) const {
    if (static_cast<int>(label.size()) != k_)
        throw std::invalid_argument("normalize_linear_atom: label arity mismatch");
    const auto& coeff = left ? left_coeff_ : right_coeff_;
    long long v = 0;
    for (int i = 0; i < k_; ++i) {
        if (label[i] < 0 || label[i] > bound_)
            throw std::invalid_argument("normalize_linear_atom: label value out of range");
        v += coeff[i] * label[i];
    }
    return v;
}

std::pair<long long, long long> NormalizedLinearAtom::transform(const NumLabel& label) const {
    auto rank = [this](long long v) {
        auto it = std::lower_bound(sorted_values_.begin(), sorted_values_.end(), v);
        return static_cast<long long>(it - sorted_values_.begin()) + 1;
    };
    return {rank(side_value(label, true)), rank(side_value(label, false))};
}

// ----------------------------------------------------------- fo decoders

long long FoScheme::universe(int n) const {
    long long u = 1;
    for (int i = 0; i < c; ++i) {
        u *= n;
        if (u > (1LL << 40))
            throw std::invalid_argument("fo scheme universe too large");
    }
    return u;
}

bool FoScheme::accepts(int n, const NumLabel& x, const NumLabel& y) const {
    if (static_cast<int>(x.size()) != k || static_cast<int>(y.size()) != k)
        throw std::invalid_argument("fo scheme: label arity mismatch");
    Assignment a;
    a.reserve(2 * k);
    a.insert(a.end(), x.begin(), x.end());
    a.insert(a.end(), y.begin(), y.end());
    long long u = universe(n);
    if (bounded)
        return eval_bounded(*phi, a, u);
    return eval_infinite(*phi, a, std::optional<long long>(u));
}

FoScheme fo_scheme(FormulaPtr phi, int c, bool bounded) {
    FoScheme s;
    s.k = std::max(1, free_var_count(*phi));
    s.phi = std::move(phi);
    s.c = c;
    s.bounded = bounded;
    return s;
}

BitLabel serialize_num_label(const NumLabel& values, long long bound, int block_width) {
    if (bound >= (1LL << block_width))
        throw std::invalid_argument("serialize_num_label: bound does not fit block width");
    std::vector<bool> bits;
    bits.reserve((values.size() + 1) * block_width);
    auto push_value = [&](long long v) {
        if (v < 0 || v > bound)
            throw std::invalid_argument("serialize_num_label: value out of range");
        for (int i = block_width - 1; i >= 0; --i)
            bits.push_back((v >> i) & 1);
    };
    for (long long v : values)
        push_value(v);
    push_value(bound);
    return BitLabel(std::move(bits));
}

std::pair<NumLabel, long long> parse_num_label(const BitLabel& label, int k) {
    if (label.size() % (k + 1) != 0)
        throw std::invalid_argument("parse_num_label: length not divisible into blocks");
    std::size_t width = label.size() / (k + 1);
    if (width > 62)
        throw std::invalid_argument("parse_num_label: block too wide");
    auto block_value = [&](int block) {
        long long v = 0;
        for (std::size_t i = 0; i < width; ++i)
            v = (v << 1) | (label.bits[block * width + i] ? 1 : 0);
        return v;
    };
    NumLabel values(k);
    for (int i = 0; i < k; ++i)
        values[i] = block_value(i);
    return {values, block_value(k)};
}

namespace {

class FoBitDecoder : public Decoder {
public:
    explicit FoBitDecoder(FoScheme scheme) : scheme_(std::move(scheme)) {}

    Kind kind() const override { return Kind::formula; }

    bool accepts(const BitLabel& x, const BitLabel& y) const override {
        auto [xs, xb] = parse_num_label(x, scheme_.k);
        auto [ys, yb] = parse_num_label(y, scheme_.k);
        if (xb != yb)
            throw std::invalid_argument("fo decoder: labels promise different universes");
        Assignment a;
        a.insert(a.end(), xs.begin(), xs.end());
        a.insert(a.end(), ys.begin(), ys.end());
        if (scheme_.bounded)
            return eval_bounded(*scheme_.phi, a, xb);
        return eval_infinite(*scheme_.phi, a, std::optional<long long>(xb));
    }

private:
    FoScheme scheme_;
};

} // namespace

DecoderPtr fo_decoder(const FoScheme& scheme) {
    return std::make_shared<FoBitDecoder>(scheme);
}

} // namespace labelab
