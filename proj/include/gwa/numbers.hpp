#ifndef GWA_NUMBERS_HPP
#define GWA_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gwa/errors.hpp"

namespace gwa {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Exact rational number, always kept in lowest terms with positive
/// denominator (the canonical zero is 0/1).
class Rational {
   public:
    Rational() = default;
    Rational(long long v) : value_(v) {}  // NOLINT: implicit on purpose
    Rational(const BigInt& v) : value_(v) {}
    Rational(const BigInt& num, const BigInt& den);

    const BigRat& raw() const { return value_; }
    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_.sign(); }

    /// The integer value, when this rational is one; nullopt otherwise.
    std::optional<std::int64_t> as_int64() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (b.value_ < a.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Canonical literal: "0", "7", "-3/2".
    std::string str() const;

   private:
    BigRat value_;  // boost keeps num/den coprime, den > 0
};

/// Element of Q(i), the working subfield of the coefficient field.
/// Equality and the canonical (display) order are componentwise; the order
/// is lexicographic on (re, im) and is never used as a field order.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational real) : re(std::move(real)) {}  // NOLINT
    GaussianRational(long long real) : re(real) {}            // NOLINT
    GaussianRational(Rational real, Rational imag)
        : re(std::move(real)), im(std::move(imag)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    GaussianRational conjugate() const { return {re, -im}; }
    /// re^2 + im^2, the rational square norm.
    Rational norm() const { return re * re + im * im; }
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

    /// Canonical literal: "0", "3/2", "1i", "-1i", "2+1i", "-1/2-3i".
    std::string str() const;
};

/// Display/canonicalization order: lexicographic on (re, im).
bool canonical_less(const GaussianRational& a, const GaussianRational& b);

GaussianRational gauss_i();

enum class ArithOp { Add, Sub, Mul, Div };

/// Field arithmetic in canonical form; Div with b == 0 is invalid input.
GaussianRational gr_arith(const GaussianRational& a, const GaussianRational& b, ArithOp op);

/// Parse a rational literal `['-'] digits ['/' digits]`.
Rational parse_rational(std::string_view text);

/// Parse a Gaussian rational literal:
///   gauss := rat | [rat] sign rat 'i' | rat 'i' | ['-'] 'i'
GaussianRational parse_gauss(std::string_view text);

/// Solves z = base + k*step for an integer k; nullopt when z is not on the
/// lattice base + Z*step. step must be nonzero.
std::optional<std::int64_t> lattice_offset(const GaussianRational& z,
                                           const GaussianRational& base,
                                           const GaussianRational& step);

}  // namespace gwa

#endif
