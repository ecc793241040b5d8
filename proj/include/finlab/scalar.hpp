#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace finlab {

using Rational = mpq_class;

enum class Field { Real, Complex };

const char* to_string(Field field);

/// Exact scalar with rational real and imaginary parts. Real-field values
/// keep a zero imaginary part throughout.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT(google-explicit-constructor)
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Scalar fraction(long num, long den);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_real() const { return sgn(im_) == 0; }
    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_unimodular() const { return norm_squared() == 1; }

    /// |x|^2, always rational.
    Rational norm_squared() const { return re_ * re_ + im_ * im_; }

    Scalar conj() const { return {re_, -im_}; }
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(const Scalar& a) { return {-a.re_, -a.im_}; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Deterministic total order used for canonical sorting only.
    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    std::string to_string() const;

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Modulus of a scalar kept exactly as its square. For the real field the
/// square root is always rational.
class Modulus {
public:
    Modulus() = default;
    explicit Modulus(Rational squared) : squared_(std::move(squared)) {}
    static Modulus of(const Scalar& s) { return Modulus(s.norm_squared()); }

    const Rational& squared() const { return squared_; }
    /// Exact value when the square is a perfect rational square.
    std::optional<Rational> exact() const;
    double approx() const;
    bool is_zero() const { return sgn(squared_) == 0; }

    friend bool operator==(const Modulus& a, const Modulus& b) { return a.squared_ == b.squared_; }
    friend bool operator!=(const Modulus& a, const Modulus& b) { return !(a == b); }
    friend bool operator<(const Modulus& a, const Modulus& b) { return a.squared_ < b.squared_; }
    friend bool operator>(const Modulus& a, const Modulus& b) { return b < a; }
    friend bool operator<=(const Modulus& a, const Modulus& b) { return !(b < a); }
    friend bool operator>=(const Modulus& a, const Modulus& b) { return !(a < b); }

    std::string to_string() const;

private:
    Rational squared_{0};
};

/// How a geometric decision was reached. Complex-field hull tests replace
/// the unit circle with m rational unimodular points.
struct Confidence {
    enum class Kind { Exact, Discretized };
    Kind kind = Kind::Exact;
    int m = 0;

    static Confidence exact() { return {}; }
    static Confidence discretized(int m) { return {Kind::Discretized, m}; }
    bool is_exact() const { return kind == Kind::Exact; }
    std::string to_string() const;
};

/// Root-of-unity order used when the caller does not pass one. Reads
/// LAB_S_DISCRETIZATION, defaulting to 16.
int default_discretization();

/// Sign set {1, -1} for the real field; for the complex field, m exactly
/// unimodular rational points approximating the m-th roots of unity
/// (1, i, -1, -i are exact whenever 4 divides m).
std::vector<Scalar> unimodular_set(Field field, int m);

}  // namespace finlab
