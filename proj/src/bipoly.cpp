#include "delannoy/bipoly.hpp"

#include "delannoy/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace delannoy {

BiPoly::BiPoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{0, 0}, c);
}

BiPoly BiPoly::x() { return monomial(1, 1, 0); }
BiPoly BiPoly::r() { return monomial(1, 0, 1); }

BiPoly BiPoly::monomial(const Rational& c, unsigned deg_x, unsigned deg_r) {
    BiPoly p;
    if (!c.is_zero()) p.terms_.emplace(Monomial{deg_x, deg_r}, c);
    return p;
}

Rational BiPoly::coeff(unsigned deg_x, unsigned deg_r) const {
    auto it = terms_.find(Monomial{deg_x, deg_r});
    return it == terms_.end() ? Rational(0) : it->second;
}

bool BiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

Rational BiPoly::constant_value() const {
    if (!is_constant()) throw std::logic_error("polynomial is not constant: " + str());
    return coeff(0, 0);
}

unsigned BiPoly::degree_x() const {
    // Map order puts the highest x degree first.
    return terms_.empty() ? 0 : terms_.begin()->first.x;
}

unsigned BiPoly::degree_r() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.r);
    return d;
}

unsigned BiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.x + m.r);
    return d;
}

void BiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term(Monomial{ma.x + mb.x, ma.r + mb.r}, ca * cb);
    return out;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) { return *this = *this * o; }

BiPoly& BiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

BiPoly& BiPoly::operator/=(const Rational& c) {
    if (c.is_zero()) throw std::domain_error("polynomial division by zero");
    for (auto& [m, v] : terms_) v /= c;
    return *this;
}

BiPoly BiPoly::operator-() const {
    BiPoly out = *this;
    for (auto& [m, v] : out.terms_) v = -v;
    return out;
}

namespace {

std::string monomial_text(const Monomial& m) {
    std::string s;
    auto factor = [&s](char var, unsigned deg) {
        if (deg == 0) return;
        if (!s.empty()) s += '*';
        s += var;
        if (deg > 1) s += '^' + std::to_string(deg);
    };
    factor('x', m.x);
    factor('r', m.r);
    return s;
}

} // namespace

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool negative = c.sign() < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;

        Rational magnitude = negative ? -c : c;
        std::string mono = monomial_text(m);
        if (mono.empty())
            out += magnitude.str();
        else if (magnitude == 1)
            out += mono;
        else
            out += magnitude.str() + "*" + mono;
    }
    return out;
}

BiPoly power(const BiPoly& base, unsigned exponent) {
    BiPoly result(1);
    for (unsigned i = 0; i < exponent; ++i) result *= base;
    return result;
}

Rational poly_eval(const BiPoly& p, const EvalPoint& at) {
    std::vector<Rational> xs{1};
    std::vector<Rational> rs{1};
    for (unsigned i = 1; i <= p.degree_x(); ++i) xs.push_back(xs.back() * at.x);
    for (unsigned i = 1; i <= p.degree_r(); ++i) rs.push_back(rs.back() * at.r);
    Rational sum;
    for (const auto& [m, c] : p.terms()) sum += c * xs[m.x] * rs[m.r];
    return sum;
}

namespace {

// Expansion coefficients of (scale*v + shift)^i: row[i][m] is the
// coefficient of v^m.
std::vector<std::vector<Rational>> affine_powers(unsigned max_deg, const Rational& scale,
                                                 const Rational& shift) {
    std::vector<std::vector<Rational>> rows{{Rational(1)}};
    for (unsigned i = 1; i <= max_deg; ++i) {
        const auto& prev = rows.back();
        std::vector<Rational> next(i + 1);
        for (unsigned m = 0; m < prev.size(); ++m) {
            next[m] += prev[m] * shift;
            next[m + 1] += prev[m] * scale;
        }
        rows.push_back(std::move(next));
    }
    return rows;
}

} // namespace

BiPoly poly_subst_x(const BiPoly& p, const Rational& scale, const Rational& shift) {
    auto rows = affine_powers(p.degree_x(), scale, shift);
    BiPoly out;
    for (const auto& [m, c] : p.terms())
        for (unsigned k = 0; k <= m.x; ++k)
            out += BiPoly::monomial(c * rows[m.x][k], k, m.r);
    return out;
}

BiPoly poly_subst_r(const BiPoly& p, const Rational& scale, const Rational& shift) {
    auto rows = affine_powers(p.degree_r(), scale, shift);
    BiPoly out;
    for (const auto& [m, c] : p.terms())
        for (unsigned k = 0; k <= m.r; ++k)
            out += BiPoly::monomial(c * rows[m.r][k], m.x, k);
    return out;
}

BiPoly poly_subst_neg_x(const BiPoly& p) {
    BiPoly out;
    for (const auto& [m, c] : p.terms())
        out += BiPoly::monomial(m.x % 2 == 0 ? c : -c, m.x, m.r);
    return out;
}

BiPoly poly_subst_affine_x(const BiPoly& p, const Rational& shift, bool negate) {
    return poly_subst_x(p, negate ? -1 : 1, shift);
}

BiPoly poly_subst_affine_r(const BiPoly& p, const Rational& shift) {
    return poly_subst_r(p, 1, shift);
}

BiPoly binom_poly(const BiPoly& linear, unsigned k) {
    if (linear.total_degree() > 1)
        throw std::invalid_argument("binom_poly needs an affine top argument, got " +
                                    linear.str());
    BiPoly out(1);
    for (unsigned i = 0; i < k; ++i) out *= linear - Rational(i);
    return out / Rational(factorial(k));
}

std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.str(); }

} // namespace delannoy
