#include "labelab/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace labelab {

Polynomial Polynomial::constant(int vars, const BigInt& c) {
    Polynomial p(vars);
    p.add_term(std::vector<unsigned>(vars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int vars, int index) {
    if (index < 0 || index >= vars)
        throw std::invalid_argument("polynomial variable index out of range");
    Polynomial p(vars);
    std::vector<unsigned> exps(vars, 0);
    exps[index] = 1;
    p.add_term(exps, 1);
    return p;
}

void Polynomial::add_term(const std::vector<unsigned>& exponents, const BigInt& coeff) {
    if (static_cast<int>(exponents.size()) != vars_)
        throw std::invalid_argument("exponent vector arity mismatch");
    if (coeff < 0)
        throw std::invalid_argument("polynomial coefficients must be non-negative");
    if (coeff == 0)
        return;
    auto it = terms_.find(exponents);
    if (it == terms_.end())
        terms_.emplace(exponents, coeff);
    else {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

int Polynomial::degree_in(int var) const {
    int best = 0;
    for (const auto& [exps, coeff] : terms_)
        best = std::max(best, static_cast<int>(exps[var]));
    return best;
}

int Polynomial::total_degree() const {
    int best = 0;
    for (const auto& [exps, coeff] : terms_) {
        int d = 0;
        for (unsigned e : exps)
            d += static_cast<int>(e);
        best = std::max(best, d);
    }
    return best;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    if (vars_ != other.vars_)
        throw std::invalid_argument("polynomial arity mismatch");
    Polynomial out = *this;
    for (const auto& [exps, coeff] : other.terms_)
        out.add_term(exps, coeff);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (vars_ != other.vars_)
        throw std::invalid_argument("polynomial arity mismatch");
    Polynomial out(vars_);
    for (const auto& [ae, ac] : terms_)
        for (const auto& [be, bc] : other.terms_) {
            std::vector<unsigned> exps(vars_);
            for (int i = 0; i < vars_; ++i)
                exps[i] = ae[i] + be[i];
            out.add_term(exps, ac * bc);
        }
    return out;
}

std::string Polynomial::to_text() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exps, coeff] : terms_) {
        if (!first)
            os << "; ";
        first = false;
        os << coeff;
        for (unsigned e : exps)
            os << ' ' << e;
    }
    return os.str();
}

} // namespace labelab
