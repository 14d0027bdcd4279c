#ifndef GWA_POLYNOMIAL_HPP
#define GWA_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gwa/numbers.hpp"

namespace gwa {

/// Exponent vector in Z^n_{>=0}; index i-1 holds the power of T_i.
using Monomial = std::vector<std::uint32_t>;

/// Point of the affine space the base ring lives on.
using EvalPoint = std::vector<GaussianRational>;

/// Sparse element of the polynomial ring k[T_1,...,T_n] over Q(i).
/// Terms never store zero coefficients; the zero element has no terms.
class RingElement {
   public:
    explicit RingElement(int n = 0) : n_(n) {}

    static RingElement zero(int n) { return RingElement(n); }
    static RingElement constant(int n, const GaussianRational& c);
    /// The variable T_i (1-based).
    static RingElement variable(int n, int i);

    int vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, GaussianRational>& terms() const { return terms_; }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_constant() const;
    GaussianRational constant_value() const;

    void add_term(const Monomial& m, const GaussianRational& c);

    RingElement operator-() const;
    RingElement& operator+=(const RingElement& o);
    RingElement& operator-=(const RingElement& o);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    RingElement& operator*=(const RingElement& o) { return *this = *this * o; }
    RingElement scaled(const GaussianRational& c) const;

    friend bool operator==(const RingElement& a, const RingElement& b) = default;

    /// Readable form like "T1^2*T2 - (2+1i)*T1 + 3/2"; display only.
    std::string str() const;

   private:
    void check_same_ring(const RingElement& o) const;

    int n_ = 0;
    std::map<Monomial, GaussianRational> terms_;
};

/// One-variable monic polynomial prod (T_i - z) given by its root multiset.
/// Roots are kept in canonical (re, im)-lexicographic order.
struct UnivariateFactored {
    int variable_index = 1;  // 1-based
    std::vector<GaussianRational> roots;

    UnivariateFactored() = default;
    UnivariateFactored(int var, std::vector<GaussianRational> rs);

    int degree() const { return static_cast<int>(roots.size()); }
    /// Distinct roots, canonical order.
    std::vector<GaussianRational> root_set() const;

    friend bool operator==(const UnivariateFactored& a, const UnivariateFactored& b) = default;

    std::string str() const;
};

/// Binomial coefficient C(n, k).
BigInt binomial(std::uint32_t n, std::uint32_t k);

/// Exact substitution T_i -> T_i - c; degree-preserving.
RingElement shift_substitute(const RingElement& p, int i, const GaussianRational& c);

/// Multiply out the root factors into the ambient n-variable ring.
RingElement expand(const UnivariateFactored& f, int n);
inline RingElement expand(const UnivariateFactored& f) { return expand(f, f.variable_index); }

GaussianRational evaluate(const RingElement& p, const EvalPoint& x);
GaussianRational evaluate(const UnivariateFactored& f, const EvalPoint& x);
/// Evaluate a one-variable factored polynomial at a scalar.
GaussianRational evaluate_at(const UnivariateFactored& f, const GaussianRational& x);

}  // namespace gwa

#endif
