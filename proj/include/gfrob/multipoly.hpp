#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gfrob/rational.hpp"

namespace gfrob {

// Sparse multivariate polynomial over Rational. Terms are keyed by exponent
// vectors of uniform width num_vars(); zero coefficients are never stored.
// The std::map key order is lexicographic, which is a monomial order, so the
// last term is the leading one.
class MultiPoly {
public:
    using Exponents = std::vector<uint32_t>;
    using TermMap = std::map<Exponents, Rational>;

    explicit MultiPoly(int num_vars = 0) : num_vars_(num_vars) {}
    static MultiPoly constant(int num_vars, const Rational& c);
    static MultiPoly variable(int num_vars, int index);

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // -1 for the zero polynomial.
    int total_degree() const;
    int degree_in(int var) const;

    // Accumulates c into the coefficient of e; erases the term if it cancels.
    void add_term(const Exponents& e, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    bool operator==(const MultiPoly& o) const = default;

    MultiPoly scaled(const Rational& c) const;

    // Exact quotient *this / divisor; throws Error if the division is not exact.
    MultiPoly divide_exact(const MultiPoly& divisor) const;

    Rational eval(const std::vector<Rational>& point) const;

    // Substitutes one variable by a constant; the variable set keeps its width.
    MultiPoly eval_partial(int var, const Rational& value) const;

    std::string to_string(const std::function<std::string(int)>& var_name = {}) const;

private:
    int num_vars_;
    TermMap terms_;
};

} // namespace gfrob
