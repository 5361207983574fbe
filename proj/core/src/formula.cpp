#include "labelab/formula.hpp"

#include <cctype>
#include <stdexcept>

namespace labelab {

namespace {

TermPtr make_term(Term::Kind kind, int index = 0, TermPtr lhs = nullptr,
                  TermPtr rhs = nullptr) {
    auto t = std::make_shared<Term>();
    t->kind = kind;
    t->index = index;
    t->lhs = std::move(lhs);
    t->rhs = std::move(rhs);
    return t;
}

FormulaPtr make_formula(Formula::Kind kind, TermPtr t1 = nullptr, TermPtr t2 = nullptr,
                        FormulaPtr f1 = nullptr, FormulaPtr f2 = nullptr, int z = 0) {
    auto f = std::make_shared<Formula>();
    f->kind = kind;
    f->t1 = std::move(t1);
    f->t2 = std::move(t2);
    f->f1 = std::move(f1);
    f->f2 = std::move(f2);
    f->zindex = z;
    return f;
}

void check_index(int index) {
    if (index < 1)
        throw std::invalid_argument("variable indices are 1-based");
}

} // namespace

TermPtr t_x(int index) { check_index(index); return make_term(Term::Kind::var_x, index); }
TermPtr t_y(int index) { check_index(index); return make_term(Term::Kind::var_y, index); }
TermPtr t_z(int index) { check_index(index); return make_term(Term::Kind::var_z, index); }
TermPtr t_c0() { return make_term(Term::Kind::const0); }
TermPtr t_c1() { return make_term(Term::Kind::const1); }
TermPtr t_cm() { return make_term(Term::Kind::constm); }
TermPtr t_plus(TermPtr a, TermPtr b) {
    return make_term(Term::Kind::plus, 0, std::move(a), std::move(b));
}
TermPtr t_times(TermPtr a, TermPtr b) {
    return make_term(Term::Kind::times, 0, std::move(a), std::move(b));
}

FormulaPtr f_less(TermPtr a, TermPtr b) {
    return make_formula(Formula::Kind::less, std::move(a), std::move(b));
}
FormulaPtr f_equal(TermPtr a, TermPtr b) {
    return make_formula(Formula::Kind::equal, std::move(a), std::move(b));
}
FormulaPtr f_not(FormulaPtr a) {
    return make_formula(Formula::Kind::not_f, nullptr, nullptr, std::move(a));
}
FormulaPtr f_and(FormulaPtr a, FormulaPtr b) {
    return make_formula(Formula::Kind::and_f, nullptr, nullptr, std::move(a), std::move(b));
}
FormulaPtr f_or(FormulaPtr a, FormulaPtr b) {
    return make_formula(Formula::Kind::or_f, nullptr, nullptr, std::move(a), std::move(b));
}
FormulaPtr f_exists(int z, FormulaPtr body) {
    check_index(z);
    return make_formula(Formula::Kind::exists, nullptr, nullptr, std::move(body), nullptr, z);
}
FormulaPtr f_forall(int z, FormulaPtr body) {
    check_index(z);
    return make_formula(Formula::Kind::forall, nullptr, nullptr, std::move(body), nullptr, z);
}
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b) {
    return f_or(f_not(std::move(a)), std::move(b));
}

bool is_atom(const Formula& f) {
    return f.kind == Formula::Kind::less || f.kind == Formula::Kind::equal;
}

bool is_quantifier_free(const Formula& f) {
    switch (f.kind) {
    case Formula::Kind::less:
    case Formula::Kind::equal:
        return true;
    case Formula::Kind::not_f:
        return is_quantifier_free(*f.f1);
    case Formula::Kind::and_f:
    case Formula::Kind::or_f:
        return is_quantifier_free(*f.f1) && is_quantifier_free(*f.f2);
    case Formula::Kind::exists:
    case Formula::Kind::forall:
        return false;
    }
    return false;
}

namespace {

int term_free_vars(const Term& t) {
    switch (t.kind) {
    case Term::Kind::var_x:
    case Term::Kind::var_y:
        return t.index;
    case Term::Kind::plus:
    case Term::Kind::times:
        return std::max(term_free_vars(*t.lhs), term_free_vars(*t.rhs));
    default:
        return 0;
    }
}

bool term_uses_arithmetic(const Term& t) {
    switch (t.kind) {
    case Term::Kind::plus:
    case Term::Kind::times:
        return true;
    default:
        return false;
    }
}

bool term_uses_constants(const Term& t) {
    switch (t.kind) {
    case Term::Kind::const0:
    case Term::Kind::const1:
    case Term::Kind::constm:
        return true;
    case Term::Kind::plus:
    case Term::Kind::times:
        return term_uses_constants(*t.lhs) || term_uses_constants(*t.rhs);
    default:
        return false;
    }
}

template <class TermFn>
bool any_term(const Formula& f, TermFn fn) {
    switch (f.kind) {
    case Formula::Kind::less:
    case Formula::Kind::equal:
        return fn(*f.t1) || fn(*f.t2);
    case Formula::Kind::not_f:
    case Formula::Kind::exists:
    case Formula::Kind::forall:
        return any_term(*f.f1, fn);
    case Formula::Kind::and_f:
    case Formula::Kind::or_f:
        return any_term(*f.f1, fn) || any_term(*f.f2, fn);
    }
    return false;
}

} // namespace

int free_var_count(const Formula& f) {
    int k = 0;
    any_term(f, [&k](const Term& t) {
        k = std::max(k, term_free_vars(t));
        return false;
    });
    return k;
}

bool uses_arithmetic(const Formula& f) {
    return any_term(f, [](const Term& t) { return term_uses_arithmetic(t); });
}

bool uses_constants(const Formula& f) {
    return any_term(f, [](const Term& t) { return term_uses_constants(t); });
}

std::string to_text(const Term& t) {
    switch (t.kind) {
    case Term::Kind::var_x: return "x" + std::to_string(t.index);
    case Term::Kind::var_y: return "y" + std::to_string(t.index);
    case Term::Kind::var_z: return "z" + std::to_string(t.index);
    case Term::Kind::const0: return "c0";
    case Term::Kind::const1: return "c1";
    case Term::Kind::constm: return "cm";
    case Term::Kind::plus: return "(" + to_text(*t.lhs) + " + " + to_text(*t.rhs) + ")";
    case Term::Kind::times: return "(" + to_text(*t.lhs) + " * " + to_text(*t.rhs) + ")";
    }
    return "?";
}

std::string to_text(const Formula& f) {
    switch (f.kind) {
    case Formula::Kind::less: return to_text(*f.t1) + " < " + to_text(*f.t2);
    case Formula::Kind::equal: return to_text(*f.t1) + " = " + to_text(*f.t2);
    case Formula::Kind::not_f: return "!" + to_text(*f.f1);
    case Formula::Kind::and_f: return "(" + to_text(*f.f1) + " & " + to_text(*f.f2) + ")";
    case Formula::Kind::or_f: return "(" + to_text(*f.f1) + " | " + to_text(*f.f2) + ")";
    case Formula::Kind::exists:
        return "E z" + std::to_string(f.zindex) + " . " + to_text(*f.f1);
    case Formula::Kind::forall:
        return "A z" + std::to_string(f.zindex) + " . " + to_text(*f.f1);
    }
    return "?";
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    FormulaPtr parse() {
        FormulaPtr f = formula();
        skip_ws();
        if (pos_ != text_.size())
            fail("trailing input");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("formula parse error at position " +
                                    std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        return text_[pos_];
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    void expect(char c) {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    int digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            fail("expected digits");
        return std::stoi(text_.substr(start, pos_ - start));
    }

    FormulaPtr formula() {
        char c = peek();
        if (c == '!') {
            ++pos_;
            return f_not(formula());
        }
        if (c == 'E' || c == 'A') {
            ++pos_;
            if (peek() != 'z')
                fail("quantifier binds a z variable");
            ++pos_;
            int idx = digits();
            expect('.');
            FormulaPtr body = formula();
            return c == 'E' ? f_exists(idx, std::move(body)) : f_forall(idx, std::move(body));
        }
        if (c == '(') {
            // Either a parenthesized connective or an atom starting with a
            // parenthesized term; detect by attempting the connective form.
            std::size_t mark = pos_;
            ++pos_;
            try {
                FormulaPtr lhs = formula();
                char op = peek();
                if (op != '&' && op != '|')
                    fail("expected connective");
                ++pos_;
                FormulaPtr rhs = formula();
                expect(')');
                return op == '&' ? f_and(std::move(lhs), std::move(rhs))
                                 : f_or(std::move(lhs), std::move(rhs));
            } catch (const std::invalid_argument&) {
                pos_ = mark;
                return atom();
            }
        }
        return atom();
    }

    FormulaPtr atom() {
        TermPtr lhs = term();
        char op = peek();
        if (op != '<' && op != '=')
            fail("expected '<' or '='");
        ++pos_;
        TermPtr rhs = term();
        return op == '<' ? f_less(std::move(lhs), std::move(rhs))
                         : f_equal(std::move(lhs), std::move(rhs));
    }

    TermPtr term() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            TermPtr lhs = term();
            char op = peek();
            if (op != '+' && op != '*')
                fail("expected '+' or '*'");
            ++pos_;
            TermPtr rhs = term();
            expect(')');
            return op == '+' ? t_plus(std::move(lhs), std::move(rhs))
                             : t_times(std::move(lhs), std::move(rhs));
        }
        if (c == 'x' || c == 'y' || c == 'z') {
            ++pos_;
            int idx = digits();
            if (c == 'x') return t_x(idx);
            if (c == 'y') return t_y(idx);
            return t_z(idx);
        }
        if (c == 'c') {
            ++pos_;
            char which = peek();
            ++pos_;
            if (which == '0') return t_c0();
            if (which == '1') return t_c1();
            if (which == 'm') return t_cm();
            fail("expected c0, c1 or cm");
        }
        fail("expected term");
        return nullptr;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

FormulaPtr parse_formula(const std::string& text) {
    return Parser(text).parse();
}

} // namespace labelab
