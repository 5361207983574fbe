#ifndef LABELAB_POLYNOMIAL_HPP
#define LABELAB_POLYNOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

namespace labelab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Multivariate polynomial with non-negative integer coefficients: a finite
/// map from exponent vectors to coefficients. The zero polynomial is the
/// empty map.
class Polynomial {
public:
    explicit Polynomial(int vars) : vars_(vars) {}

    static Polynomial zero(int vars) { return Polynomial(vars); }
    static Polynomial constant(int vars, const BigInt& c);
    static Polynomial variable(int vars, int index); // 0-based

    int vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<unsigned>, BigInt>& terms() const { return terms_; }

    /// Adds c * prod(v_i^e_i); coefficients must stay non-negative.
    void add_term(const std::vector<unsigned>& exponents, const BigInt& coeff);

    int degree_in(int var) const;
    int total_degree() const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;

    template <class Value>
    Value eval(const std::vector<Value>& values) const {
        if (static_cast<int>(values.size()) != vars_)
            throw std::invalid_argument("polynomial evaluated with wrong arity");
        Value total = Value(0);
        for (const auto& [exps, coeff] : terms_) {
            Value term = Value(coeff);
            for (int i = 0; i < vars_; ++i)
                for (unsigned e = 0; e < exps[i]; ++e)
                    term *= values[i];
            total += term;
        }
        return total;
    }

    std::string to_text() const; // for diagnostics and files

private:
    int vars_;
    std::map<std::vector<unsigned>, BigInt> terms_;
};

} // namespace labelab

#endif
