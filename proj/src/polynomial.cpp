#include "gwa/polynomial.hpp"

#include <algorithm>

namespace gwa {

RingElement RingElement::constant(int n, const GaussianRational& c) {
    RingElement p(n);
    p.add_term(Monomial(n, 0), c);
    return p;
}

RingElement RingElement::variable(int n, int i) {
    if (i < 1 || i > n) throw InvalidInput("variable index out of range");
    RingElement p(n);
    Monomial m(n, 0);
    m[i - 1] = 1;
    p.add_term(m, GaussianRational(1));
    return p;
}

int RingElement::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int total = 0;
        for (auto e : m) total += static_cast<int>(e);
        d = std::max(d, total);
    }
    return d;
}

bool RingElement::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Monomial(n_, 0));
}

GaussianRational RingElement::constant_value() const {
    if (!is_constant()) throw InvalidInput("polynomial is not constant");
    return terms_.empty() ? GaussianRational() : terms_.begin()->second;
}

void RingElement::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(m.size()) != n_) throw InvalidInput("exponent vector has wrong length");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void RingElement::check_same_ring(const RingElement& o) const {
    if (n_ != o.n_) throw InvalidInput("polynomials over different rings");
}

RingElement RingElement::operator-() const {
    RingElement r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

RingElement& RingElement::operator+=(const RingElement& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
    a.check_same_ring(b);
    RingElement r(a.n_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m(a.n_);
            for (int i = 0; i < a.n_; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

RingElement RingElement::scaled(const GaussianRational& c) const {
    RingElement r(n_);
    if (c.is_zero()) return r;
    for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
    return r;
}

namespace {

std::string monomial_str(const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "T" + std::to_string(i + 1);
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

std::string coeff_str(const GaussianRational& c) {
    std::string s = c.str();
    bool composite = s.find_first_of("+-", 1) != std::string::npos;
    return composite ? "(" + s + ")" : s;
}

}  // namespace

std::string RingElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        std::string mono = monomial_str(m);
        if (mono.empty())
            s += coeff_str(c);
        else if (c == GaussianRational(1))
            s += mono;
        else
            s += coeff_str(c) + "*" + mono;
    }
    return s;
}

UnivariateFactored::UnivariateFactored(int var, std::vector<GaussianRational> rs)
    : variable_index(var), roots(std::move(rs)) {
    if (variable_index < 1) throw InvalidInput("variable index must be positive");
    if (roots.empty()) throw InvalidInput("defining polynomial must have at least one root");
    std::sort(roots.begin(), roots.end(), canonical_less);
}

std::vector<GaussianRational> UnivariateFactored::root_set() const {
    std::vector<GaussianRational> out;
    for (const auto& z : roots)
        if (out.empty() || !(out.back() == z)) out.push_back(z);
    return out;
}

std::string UnivariateFactored::str() const {
    std::string var = "T" + std::to_string(variable_index);
    std::string s;
    for (const auto& z : roots) {
        std::string factor;
        if (z.is_zero()) {
            factor = var;
        } else {
            std::string rhs = (z.str()[0] == '-') ? (-z).str() : z.str();
            char op = (z.str()[0] == '-') ? '+' : '-';
            if (rhs.find_first_of("+-", 1) != std::string::npos) rhs = "(" + rhs + ")";
            factor = "(" + var + op + rhs + ")";
        }
        s += s.empty() ? factor : "*" + factor;
    }
    return s;
}

BigInt binomial(std::uint32_t n, std::uint32_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::uint32_t j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j;
    }
    return r;
}

RingElement shift_substitute(const RingElement& p, int i, const GaussianRational& c) {
    if (i < 1 || i > p.vars()) throw InvalidInput("direction out of range");
    if (c.is_zero()) return p;
    RingElement r(p.vars());
    for (const auto& [m, coeff] : p.terms()) {
        std::uint32_t d = m[i - 1];
        // (T_i - c)^d = sum_k C(d,k) (-c)^(d-k) T_i^k
        GaussianRational neg_c_pow(1);  // (-c)^(d-k), built from k = d downwards
        for (std::uint32_t k = d + 1; k-- > 0;) {
            Monomial mk = m;
            mk[i - 1] = k;
            r.add_term(mk, coeff * neg_c_pow * GaussianRational(Rational(binomial(d, k))));
            neg_c_pow *= -c;
        }
    }
    return r;
}

RingElement expand(const UnivariateFactored& f, int n) {
    if (f.variable_index > n) throw InvalidInput("ambient ring has too few variables");
    RingElement p = RingElement::constant(n, GaussianRational(1));
    RingElement t = RingElement::variable(n, f.variable_index);
    for (const auto& z : f.roots) p *= t - RingElement::constant(n, z);
    return p;
}

GaussianRational evaluate(const RingElement& p, const EvalPoint& x) {
    if (static_cast<int>(x.size()) != p.vars())
        throw InvalidInput("evaluation point has wrong dimension");
    GaussianRational result;
    for (const auto& [m, c] : p.terms()) {
        GaussianRational term = c;
        for (int i = 0; i < p.vars(); ++i)
            for (std::uint32_t e = 0; e < m[i]; ++e) term *= x[i];
        result += term;
    }
    return result;
}

GaussianRational evaluate(const UnivariateFactored& f, const EvalPoint& x) {
    if (f.variable_index > static_cast<int>(x.size()))
        throw InvalidInput("evaluation point has wrong dimension");
    return evaluate_at(f, x[f.variable_index - 1]);
}

GaussianRational evaluate_at(const UnivariateFactored& f, const GaussianRational& x) {
    GaussianRational result(1);
    for (const auto& z : f.roots) result *= x - z;
    return result;
}

}  // namespace gwa
