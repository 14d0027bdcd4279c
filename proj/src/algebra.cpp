#include "gwa/algebra.hpp"

#include <cstdlib>

namespace gwa {

GwaSpec::GwaSpec(int n, std::vector<GaussianRational> b, std::vector<UnivariateFactored> t)
    : n_(n), b_(std::move(b)), t_(std::move(t)) {
    if (n_ < 1) throw InvalidInput("rank must be positive");
    if (static_cast<int>(b_.size()) != n_) throw InvalidInput("expected one step b_i per direction");
    if (static_cast<int>(t_.size()) != n_)
        throw InvalidInput("expected one defining polynomial t_i per direction");
    for (int i = 1; i <= n_; ++i) {
        if (b_[i - 1].is_zero())
            throw InvalidInput("b_" + std::to_string(i) + " must be nonzero");
        if (t_[i - 1].variable_index != i)
            throw InvalidInput("t_" + std::to_string(i) + " must be a polynomial in T_" +
                               std::to_string(i));
        if (t_[i - 1].roots.empty())
            throw InvalidInput("t_" + std::to_string(i) + " must not be constant");
    }
    t_expanded_.reserve(n_);
    for (int i = 1; i <= n_; ++i) t_expanded_.push_back(expand(t_[i - 1], n_));
}

RingElement GwaSpec::sigma(const RingElement& p, int i, std::int64_t k) const {
    if (i < 1 || i > n_) throw InvalidInput("direction out of range");
    if (k == 0) return p;
    GaussianRational shift = step(i) * GaussianRational(Rational(BigInt(k)));
    return shift_substitute(p, i, shift);
}

RingElement GwaSpec::sigma(const RingElement& p, const DegreeVector& alpha) const {
    if (static_cast<int>(alpha.size()) != n_) throw InvalidInput("degree vector has wrong rank");
    RingElement r = p;
    for (int i = 1; i <= n_; ++i) r = sigma(r, i, alpha[i - 1]);
    return r;
}

GwaElement GwaElement::from_ring(RingElement r) {
    GwaElement u(r.vars());
    if (!r.is_zero()) u.components_.emplace(DegreeVector(r.vars(), 0), std::move(r));
    return u;
}

GwaElement GwaElement::raising(int n, int i) {
    DegreeVector alpha(n, 0);
    alpha.at(i - 1) = 1;
    return monomial(RingElement::constant(n, GaussianRational(1)), std::move(alpha));
}

GwaElement GwaElement::lowering(int n, int i) {
    DegreeVector alpha(n, 0);
    alpha.at(i - 1) = -1;
    return monomial(RingElement::constant(n, GaussianRational(1)), std::move(alpha));
}

GwaElement GwaElement::monomial(RingElement r, DegreeVector alpha) {
    if (static_cast<int>(alpha.size()) != r.vars())
        throw InvalidInput("degree vector has wrong rank");
    GwaElement u(r.vars());
    if (!r.is_zero()) u.components_.emplace(std::move(alpha), std::move(r));
    return u;
}

void GwaElement::add_component(const DegreeVector& alpha, const RingElement& r) {
    if (static_cast<int>(alpha.size()) != n_) throw InvalidInput("degree vector has wrong rank");
    if (r.is_zero()) return;
    auto it = components_.find(alpha);
    if (it == components_.end()) {
        components_.emplace(alpha, r);
        return;
    }
    it->second += r;
    if (it->second.is_zero()) components_.erase(it);
}

GwaElement GwaElement::operator-() const {
    GwaElement u(n_);
    for (const auto& [alpha, r] : components_) u.components_.emplace(alpha, -r);
    return u;
}

GwaElement& GwaElement::operator+=(const GwaElement& o) {
    if (n_ != o.n_) throw InvalidInput("elements of different rank");
    for (const auto& [alpha, r] : o.components_) add_component(alpha, r);
    return *this;
}

GwaElement& GwaElement::operator-=(const GwaElement& o) {
    if (n_ != o.n_) throw InvalidInput("elements of different rank");
    for (const auto& [alpha, r] : o.components_) add_component(alpha, -r);
    return *this;
}

std::string GwaElement::str() const {
    if (components_.empty()) return "0";
    std::string s;
    for (const auto& [alpha, r] : components_) {
        if (!s.empty()) s += " + ";
        std::string basis;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i] == 0) continue;
            if (!basis.empty()) basis += "*";
            basis += (alpha[i] > 0 ? "X" : "Y") + std::to_string(i + 1);
            std::int64_t p = std::abs(alpha[i]);
            if (p > 1) basis += "^" + std::to_string(p);
        }
        std::string coeff = r.str();
        if (coeff.find(" + ") != std::string::npos) coeff = "(" + coeff + ")";
        s += basis.empty() ? coeff : coeff + "*" + basis;
    }
    return s;
}

namespace {

// Normal-form coefficient of a_i^p * a_i^q = c * a_i^{p+q}, reduced one
// generator at a time via X_i Y_i = sigma_i(t_i) and Y_i X_i = t_i.
RingElement direction_reduction(const GwaSpec& spec, int i, std::int64_t p, std::int64_t q) {
    RingElement c = RingElement::constant(spec.rank(), GaussianRational(1));
    while (p > 0 && q < 0) {
        // X^p Y^{|q|} = sigma^p(t) X^{p-1} Y^{|q|-1}
        c *= spec.sigma(spec.t_poly(i), i, p);
        --p;
        ++q;
    }
    while (p < 0 && q > 0) {
        // Y^{|p|} X^q = sigma^{p+1}(t) Y^{|p|-1} X^{q-1}
        c *= spec.sigma(spec.t_poly(i), i, p + 1);
        ++p;
        --q;
    }
    return c;
}

}  // namespace

GwaElement multiply(const GwaSpec& spec, const GwaElement& u, const GwaElement& v) {
    if (u.rank() != spec.rank() || v.rank() != spec.rank())
        throw InvalidInput("element rank does not match the algebra");
    GwaElement result(spec.rank());
    for (const auto& [alpha, r] : u.components()) {
        for (const auto& [beta, s] : v.components()) {
            // (r a^alpha)(s a^beta) = r * sigma^alpha(s) * reduce(alpha, beta) * a^{alpha+beta}
            RingElement coeff = r * spec.sigma(s, alpha);
            DegreeVector gamma(spec.rank());
            for (int i = 1; i <= spec.rank(); ++i) {
                coeff *= direction_reduction(spec, i, alpha[i - 1], beta[i - 1]);
                gamma[i - 1] = alpha[i - 1] + beta[i - 1];
            }
            result.add_component(gamma, coeff);
        }
    }
    return result;
}

GwaElement homogeneous_component(const GwaElement& u, const DegreeVector& alpha) {
    auto it = u.components().find(alpha);
    if (it == u.components().end()) return GwaElement::zero(u.rank());
    return GwaElement::monomial(it->second, alpha);
}

std::optional<DegreeVector> degree(const GwaElement& u) {
    if (u.components().size() != 1) return std::nullopt;
    return u.components().begin()->first;
}

namespace {

void check_identity(RelationReport& report, const std::string& name, const GwaElement& lhs,
                    const GwaElement& rhs) {
    bool pass = lhs == rhs;
    report.checks.push_back({name, pass});
    report.all_pass = report.all_pass && pass;
}

}  // namespace

RelationReport verify_relations(const GwaSpec& spec) {
    RelationReport report;
    const int n = spec.rank();
    auto X = [&](int i) { return GwaElement::raising(n, i); };
    auto Y = [&](int i) { return GwaElement::lowering(n, i); };
    auto T = [&](int j) { return GwaElement::coordinate(n, j); };
    auto mul = [&](const GwaElement& a, const GwaElement& b) { return multiply(spec, a, b); };

    for (int i = 1; i <= n; ++i) {
        std::string si = std::to_string(i);
        check_identity(report, "X" + si + "*Y" + si + " == sigma" + si + "(t" + si + ")",
                       mul(X(i), Y(i)),
                       GwaElement::from_ring(spec.sigma(spec.t_poly(i), i, 1)));
        check_identity(report, "Y" + si + "*X" + si + " == t" + si, mul(Y(i), X(i)),
                       GwaElement::from_ring(spec.t_poly(i)));
        for (int j = 1; j <= n; ++j) {
            std::string sj = std::to_string(j);
            RingElement tj = RingElement::variable(n, j);
            check_identity(report, "X" + si + "*T" + sj + " == sigma" + si + "(T" + sj + ")*X" + si,
                           mul(X(i), T(j)),
                           GwaElement::monomial(spec.sigma(tj, i, 1), *degree(X(i))));
            check_identity(report,
                           "Y" + si + "*T" + sj + " == sigma" + si + "^-1(T" + sj + ")*Y" + si,
                           mul(Y(i), T(j)),
                           GwaElement::monomial(spec.sigma(tj, i, -1), *degree(Y(i))));
        }
        for (int j = i + 1; j <= n; ++j) {
            std::string sj = std::to_string(j);
            check_identity(report, "[X" + si + ",X" + sj + "] == 0",
                           mul(X(i), X(j)) - mul(X(j), X(i)), GwaElement::zero(n));
            check_identity(report, "[Y" + si + ",Y" + sj + "] == 0",
                           mul(Y(i), Y(j)) - mul(Y(j), Y(i)), GwaElement::zero(n));
            check_identity(report, "[X" + si + ",Y" + sj + "] == 0",
                           mul(X(i), Y(j)) - mul(Y(j), X(i)), GwaElement::zero(n));
            check_identity(report, "[X" + sj + ",Y" + si + "] == 0",
                           mul(X(j), Y(i)) - mul(Y(i), X(j)), GwaElement::zero(n));
        }
    }
    return report;
}

}  // namespace gwa
