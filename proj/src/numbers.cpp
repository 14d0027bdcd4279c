#include "gwa/numbers.hpp"

#include <cctype>
#include <limits>

namespace gwa {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw InvalidInput("rational with zero denominator");
    value_ = BigRat(num, den);
}

std::optional<std::int64_t> Rational::as_int64() const {
    if (!is_integer()) return std::nullopt;
    BigInt n = numerator();
    if (n < std::numeric_limits<std::int64_t>::min() ||
        n > std::numeric_limits<std::int64_t>::max())
        return std::nullopt;
    return static_cast<std::int64_t>(n);
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) { value_ += o.value_; return *this; }
Rational& Rational::operator-=(const Rational& o) { value_ -= o.value_; return *this; }
Rational& Rational::operator*=(const Rational& o) { value_ *= o.value_; return *this; }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InvalidInput("division by zero");
    value_ /= o.value_;
    return *this;
}

std::string Rational::str() const {
    std::string s = numerator().str();
    if (!is_integer()) s += "/" + denominator().str();
    return s;
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw InvalidInput("division by zero");
    Rational n = norm();
    return {re / n, -im / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    return *this *= o.inverse();
}

std::string GaussianRational::str() const {
    if (im.is_zero()) return re.str();
    if (re.is_zero()) return im.str() + "i";
    std::string s = re.str();
    s += im.sign() < 0 ? "-" : "+";
    s += (im.sign() < 0 ? -im : im).str();
    s += "i";
    return s;
}

bool canonical_less(const GaussianRational& a, const GaussianRational& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
}

GaussianRational gauss_i() { return {Rational(0), Rational(1)}; }

GaussianRational gr_arith(const GaussianRational& a, const GaussianRational& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
    }
    throw InvalidInput("unknown arithmetic op");
}

namespace {

// Single-line scanner for number literals; column is 1-based.
struct Scanner {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    char take() { return text[pos++]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, 1, pos + 1);
    }

    BigInt digits() {
        if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected digits");
        BigInt v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek())))
            v = v * 10 + (take() - '0');
        return v;
    }

    // rat := ['-'] digits ['/' digits]
    Rational rational() {
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            take();
        }
        BigInt num = digits();
        BigInt den = 1;
        if (peek() == '/') {
            take();
            den = digits();
            if (den.is_zero()) fail("zero denominator");
        }
        if (neg) num = -num;
        return Rational(num, den);
    }
};

}  // namespace

Rational parse_rational(std::string_view text) {
    Scanner sc{text};
    Rational r = sc.rational();
    if (!sc.done()) sc.fail("trailing characters after rational literal");
    return r;
}

GaussianRational parse_gauss(std::string_view text) {
    Scanner sc{text};
    if (sc.done()) sc.fail("empty number literal");

    // ['-'] 'i' with no digits
    if (sc.peek() == 'i') {
        sc.take();
        if (!sc.done()) sc.fail("trailing characters after 'i'");
        return gauss_i();
    }
    if (sc.peek() == '-' && sc.pos + 1 < text.size() && text[sc.pos + 1] == 'i') {
        sc.take();
        sc.take();
        if (!sc.done()) sc.fail("trailing characters after 'i'");
        return -gauss_i();
    }

    // sign rat 'i' with the real part absent
    if (sc.peek() == '+') {
        sc.take();
        Rational im = sc.rational();
        if (sc.peek() != 'i') sc.fail("expected 'i'");
        sc.take();
        if (!sc.done()) sc.fail("trailing characters after 'i'");
        return {Rational(0), im};
    }

    Rational first = sc.rational();
    if (sc.done()) return {first};
    if (sc.peek() == 'i') {
        sc.take();
        if (!sc.done()) sc.fail("trailing characters after 'i'");
        return {Rational(0), first};
    }
    char sign = sc.peek();
    if (sign != '+' && sign != '-') sc.fail("expected '+', '-' or 'i'");
    sc.take();
    Rational second = sc.rational();
    if (sign == '-') second = -second;
    if (sc.peek() != 'i') sc.fail("expected 'i'");
    sc.take();
    if (!sc.done()) sc.fail("trailing characters after 'i'");
    return {first, second};
}

std::optional<std::int64_t> lattice_offset(const GaussianRational& z,
                                           const GaussianRational& base,
                                           const GaussianRational& step) {
    if (step.is_zero()) throw InvalidInput("lattice step must be nonzero");
    GaussianRational q = (z - base) / step;
    if (!q.im.is_zero()) return std::nullopt;
    if (!q.re.is_integer()) return std::nullopt;
    auto k = q.re.as_int64();
    if (!k) throw InvalidInput("lattice offset out of machine range");
    return k;
}

}  // namespace gwa
