#ifndef LABELAB_FORMULA_HPP
#define LABELAB_FORMULA_HPP

#include <memory>
#include <string>
#include <vector>

namespace labelab {

struct Term;
struct Formula;
using TermPtr = std::shared_ptr<const Term>;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Terms over bounded or unbounded arithmetic. Variables are 1-indexed.
/// The constants are c0 = 0, c1 = 1 and cm = the maximal universe value.
struct Term {
    enum class Kind { var_x, var_y, var_z, const0, const1, constm, plus, times };

    Kind kind;
    int index = 0; // for variables
    TermPtr lhs, rhs;
};

TermPtr t_x(int index);
TermPtr t_y(int index);
TermPtr t_z(int index);
TermPtr t_c0();
TermPtr t_c1();
TermPtr t_cm();
TermPtr t_plus(TermPtr a, TermPtr b);
TermPtr t_times(TermPtr a, TermPtr b);

struct Formula {
    enum class Kind { less, equal, not_f, and_f, or_f, exists, forall };

    Kind kind;
    TermPtr t1, t2;     // atoms
    FormulaPtr f1, f2;  // connectives
    int zindex = 0;     // quantifiers
};

FormulaPtr f_less(TermPtr a, TermPtr b);
FormulaPtr f_equal(TermPtr a, TermPtr b);
FormulaPtr f_not(FormulaPtr a);
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_exists(int zindex, FormulaPtr body);
FormulaPtr f_forall(int zindex, FormulaPtr body);
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b); // !a | b

bool is_atom(const Formula& f);
bool is_quantifier_free(const Formula& f);
/// Largest x/y variable index; the free arity is 2k.
int free_var_count(const Formula& f);
bool uses_arithmetic(const Formula& f);
bool uses_constants(const Formula& f);

std::string to_text(const Term& t);
std::string to_text(const Formula& f);

/// Fully parenthesized infix grammar:
///   formula := atom | "!" formula | "(" formula ("&"|"|") formula ")"
///            | ("E"|"A") zvar "." formula
///   atom    := term ("<"|"=") term
///   term    := var | const | "(" term ("+"|"*") term ")"
///   var     := x<digits> | y<digits> | z<digits>
///   const   := c0 | c1 | cm
FormulaPtr parse_formula(const std::string& text);

} // namespace labelab

#endif
