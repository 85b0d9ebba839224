#include "gfrob/multipoly.hpp"

#include <algorithm>
#include <numeric>

#include "gfrob/errors.hpp"

namespace gfrob {

MultiPoly MultiPoly::constant(int num_vars, const Rational& c) {
    MultiPoly p(num_vars);
    if (c != 0)
        p.terms_.emplace(Exponents(num_vars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int num_vars, int index) {
    MultiPoly p(num_vars);
    Exponents e(num_vars, 0);
    e.at(index) = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

int MultiPoly::total_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) {
        int d = std::accumulate(e.begin(), e.end(), 0);
        deg = std::max(deg, d);
    }
    return deg;
}

int MultiPoly::degree_in(int var) const {
    int deg = -1;
    for (const auto& [e, c] : terms_)
        deg = std::max(deg, static_cast<int>(e[var]));
    return deg;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0)
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(num_vars_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    r -= o;
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r(num_vars_);
    Exponents e(num_vars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int v = 0; v < num_vars_; ++v)
                e[v] = ea[v] + eb[v];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly r(num_vars_);
    if (c == 0)
        return r;
    for (const auto& [e, coeff] : terms_)
        r.terms_.emplace(e, coeff * c);
    return r;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& divisor) const {
    if (divisor.is_zero())
        throw Error("division by the zero polynomial");
    MultiPoly quotient(num_vars_);
    MultiPoly rem = *this;
    const auto& [lead_e, lead_c] = *divisor.terms_.rbegin();
    Exponents e(num_vars_);
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms_.rbegin();
        for (int v = 0; v < num_vars_; ++v) {
            if (re[v] < lead_e[v])
                throw Error("polynomial division is not exact");
            e[v] = re[v] - lead_e[v];
        }
        Rational c = rc / lead_c;
        quotient.add_term(e, c);
        MultiPoly t(num_vars_);
        t.terms_.emplace(e, c);
        rem -= t * divisor;
    }
    return quotient;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != num_vars_)
        throw VariableMismatch("point has " + std::to_string(point.size()) + " coordinates, polynomial has " +
                               std::to_string(num_vars_) + " variables");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int v = 0; v < num_vars_; ++v) {
            for (uint32_t k = 0; k < e[v]; ++k)
                term *= point[v];
        }
        total += term;
    }
    return total;
}

MultiPoly MultiPoly::eval_partial(int var, const Rational& value) const {
    MultiPoly r(num_vars_);
    Exponents e(num_vars_);
    for (const auto& [exp, c] : terms_) {
        Rational coeff = c;
        for (uint32_t k = 0; k < exp[var]; ++k)
            coeff *= value;
        e = exp;
        e[var] = 0;
        r.add_term(e, coeff);
    }
    return r;
}

std::string MultiPoly::to_string(const std::function<std::string(int)>& var_name) const {
    if (is_zero())
        return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!out.empty())
            out += c > 0 ? " + " : " - ";
        else if (c < 0)
            out += "-";
        Rational a = abs(c);
        bool has_vars = std::any_of(e.begin(), e.end(), [](uint32_t x) { return x > 0; });
        bool printed = a != 1 || !has_vars;
        if (printed)
            out += rational_to_string(a);
        for (int v = 0; v < num_vars_; ++v) {
            if (e[v] == 0)
                continue;
            if (printed)
                out += "*";
            printed = true;
            out += var_name ? var_name(v) : "a" + std::to_string(v);
            if (e[v] > 1)
                out += "^" + std::to_string(e[v]);
        }
    }
    return out;
}

} // namespace gfrob
