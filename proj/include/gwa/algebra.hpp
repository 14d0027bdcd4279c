#ifndef GWA_ALGEBRA_HPP
#define GWA_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gwa/polynomial.hpp"

namespace gwa {

/// Signed Z^n degree of an algebra element; index i-1 belongs to direction i.
using DegreeVector = std::vector<std::int64_t>;

/// Defining data of the algebra: rank n, nonzero translation steps b_i, and
/// the monic one-variable polynomials t_i given by their roots. The i-th
/// translation acts on the base ring by T_i -> T_i - b_i.
class GwaSpec {
   public:
    GwaSpec(int n, std::vector<GaussianRational> b, std::vector<UnivariateFactored> t);

    int rank() const { return n_; }
    const std::vector<GaussianRational>& steps() const { return b_; }
    const GaussianRational& step(int i) const { return b_.at(i - 1); }
    const std::vector<UnivariateFactored>& defining() const { return t_; }
    const UnivariateFactored& t(int i) const { return t_.at(i - 1); }
    const RingElement& t_poly(int i) const { return t_expanded_.at(i - 1); }

    GaussianRational t_at(int i, const GaussianRational& x) const {
        return evaluate_at(t(i), x);
    }

    /// sigma_i^k: substitute T_i -> T_i - k*b_i.
    RingElement sigma(const RingElement& p, int i, std::int64_t k = 1) const;
    /// sigma^alpha = prod_i sigma_i^{alpha_i}.
    RingElement sigma(const RingElement& p, const DegreeVector& alpha) const;

    friend bool operator==(const GwaSpec& a, const GwaSpec& b) {
        return a.n_ == b.n_ && a.b_ == b.b_ && a.t_ == b.t_;
    }

   private:
    int n_;
    std::vector<GaussianRational> b_;
    std::vector<UnivariateFactored> t_;
    std::vector<RingElement> t_expanded_;
};

/// Algebra element in normal form sum_alpha r_alpha * a^alpha over the free
/// R-basis a^alpha (X powers for positive entries, Y powers for negative).
class GwaElement {
   public:
    explicit GwaElement(int n = 0) : n_(n) {}

    static GwaElement zero(int n) { return GwaElement(n); }
    static GwaElement from_ring(RingElement r);
    static GwaElement scalar(int n, const GaussianRational& c) {
        return from_ring(RingElement::constant(n, c));
    }
    static GwaElement one(int n) { return scalar(n, GaussianRational(1)); }
    /// T_i as a degree-0 element.
    static GwaElement coordinate(int n, int i) {
        return from_ring(RingElement::variable(n, i));
    }
    static GwaElement raising(int n, int i);   // X_i
    static GwaElement lowering(int n, int i);  // Y_i
    /// r * a^alpha.
    static GwaElement monomial(RingElement r, DegreeVector alpha);

    int rank() const { return n_; }
    bool is_zero() const { return components_.empty(); }
    const std::map<DegreeVector, RingElement>& components() const { return components_; }

    void add_component(const DegreeVector& alpha, const RingElement& r);

    GwaElement operator-() const;
    GwaElement& operator+=(const GwaElement& o);
    GwaElement& operator-=(const GwaElement& o);
    friend GwaElement operator+(GwaElement a, const GwaElement& b) { return a += b; }
    friend GwaElement operator-(GwaElement a, const GwaElement& b) { return a -= b; }

    friend bool operator==(const GwaElement& a, const GwaElement& b) = default;

    std::string str() const;

   private:
    int n_ = 0;
    std::map<DegreeVector, RingElement> components_;
};

/// Normal-form product in A; associative and R-bilinear.
GwaElement multiply(const GwaSpec& spec, const GwaElement& u, const GwaElement& v);

/// Component of homogeneous degree alpha.
GwaElement homogeneous_component(const GwaElement& u, const DegreeVector& alpha);

/// Z^n degree when u is homogeneous and nonzero; nullopt otherwise.
std::optional<DegreeVector> degree(const GwaElement& u);

struct RelationCheck {
    std::string name;
    bool pass = false;
};

struct RelationReport {
    std::vector<RelationCheck> checks;
    bool all_pass = true;
};

/// Evaluates every defining relation as a normal-form identity.
RelationReport verify_relations(const GwaSpec& spec);

}  // namespace gwa

#endif
