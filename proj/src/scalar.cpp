#include "finlab/scalar.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "finlab/errors.hpp"

namespace finlab {

const char* to_string(Field field) {
    return field == Field::Real ? "real" : "complex";
}

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "invalid-argument";
        case ErrorCode::UnknownPoint: return "unknown-point";
        case ErrorCode::SpanMembership: return "span-membership";
        case ErrorCode::NotUnimodular: return "not-unimodular";
        case ErrorCode::UndefinedSuppmax: return "undefined-suppmax";
        case ErrorCode::EmptySet: return "empty-set";
        case ErrorCode::Normalization: return "normalization";
        case ErrorCode::FamilySize: return "family-size";
        case ErrorCode::NotIsometry: return "not-isometry";
        case ErrorCode::NotOnto: return "not-onto";
        case ErrorCode::DimensionMismatch: return "dimension-mismatch";
        case ErrorCode::Ambiguity: return "ambiguity";
        case ErrorCode::NotChoquet: return "not-choquet";
        case ErrorCode::TheoremViolation: return "theorem-violation";
        case ErrorCode::ScaleOutOfBounds: return "scale-out-of-bounds";
        case ErrorCode::UnknownSuite: return "unknown-suite";
        case ErrorCode::Parse: return "parse";
    }
    return "unknown";
}

Scalar Scalar::fraction(long num, long den) {
    if (den == 0) throw LabError(ErrorCode::InvalidArgument, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar Scalar::inverse() const {
    Rational n = norm_squared();
    if (sgn(n) == 0) throw LabError(ErrorCode::InvalidArgument, "division by zero scalar");
    return {Rational(re_ / n), Rational(-im_ / n)};
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_real()) {
        if (sgn(o.re_) == 0) throw LabError(ErrorCode::InvalidArgument, "division by zero scalar");
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string Scalar::to_string() const {
    if (is_real()) return re_.get_str();
    std::ostringstream os;
    os << re_.get_str() << (sgn(im_) < 0 ? "-" : "+") << Rational(abs(im_)).get_str() << "i";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

std::optional<Rational> Modulus::exact() const {
    const mpz_class& num = squared_.get_num();
    const mpz_class& den = squared_.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
        return std::nullopt;
    }
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

double Modulus::approx() const { return std::sqrt(squared_.get_d()); }

std::string Modulus::to_string() const {
    if (auto e = exact()) return e->get_str();
    return "sqrt(" + squared_.get_str() + ")";
}

std::string Confidence::to_string() const {
    if (is_exact()) return "exact";
    return "discretized(" + std::to_string(m) + ")";
}

int default_discretization() {
    const char* env = std::getenv("LAB_S_DISCRETIZATION");
    if (env == nullptr || *env == '\0') return 16;
    char* end = nullptr;
    long m = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || m < 4 || m > 4096) {
        throw LabError(ErrorCode::InvalidArgument,
                       std::string("LAB_S_DISCRETIZATION must be an integer in [4, 4096], got '") +
                           env + "'");
    }
    return static_cast<int>(m);
}

namespace {

// Point on the unit circle from the half-angle tangent t: exact modulus 1.
Scalar circle_point(const Rational& t) {
    Rational t2 = t * t;
    Rational den = 1 + t2;
    return {Rational((1 - t2) / den), Rational(2 * t / den)};
}

}  // namespace

std::vector<Scalar> unimodular_set(Field field, int m) {
    if (field == Field::Real) return {Scalar(1), Scalar(-1)};
    if (m < 4) throw LabError(ErrorCode::InvalidArgument, "discretization order must be at least 4");
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(m));
    constexpr long kGrid = 4096;
    for (int k = 0; k < m; ++k) {
        // Exact quarter turns.
        if ((4 * k) % m == 0) {
            switch ((4 * k) / m) {
                case 0: out.emplace_back(1); continue;
                case 1: out.emplace_back(Rational(0), Rational(1)); continue;
                case 2: out.emplace_back(-1); continue;
                case 3: out.emplace_back(Rational(0), Rational(-1)); continue;
            }
        }
        double theta = 2.0 * std::numbers::pi * k / m;
        if (theta > std::numbers::pi) theta -= 2.0 * std::numbers::pi;
        long num = std::lround(std::tan(theta / 2.0) * kGrid);
        Rational t(num, kGrid);
        t.canonicalize();
        out.push_back(circle_point(t));
    }
    return out;
}

}  // namespace finlab
