#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

namespace tms {

/// Number type for distances and times.
///
/// A Scalar is either an exact rational (default) or a double. Spaces are
/// homogeneous in one mode; mixing an exact value with a double in arithmetic
/// promotes the result to double. Equality and ordering are exact in both
/// modes -- tolerance-aware predicates live on the space that owns the
/// tolerance, not here.
class Scalar {
public:
    Scalar() : v_(mpq_class(0)) {}
    Scalar(int n) : v_(mpq_class(n)) {}
    Scalar(long n) : v_(mpq_class(static_cast<signed long>(n))) {}

    static Scalar rational(long num, long den);
    static Scalar rational(mpq_class q);
    static Scalar real(double x) { return Scalar(x, FloatTag{}); }
    /// Accepts "p", "-p" and "p/q" with arbitrary precision.
    static Scalar parse(const std::string& text);

    bool exact() const { return std::holds_alternative<mpq_class>(v_); }
    double to_double() const;
    /// Requires exact().
    const mpq_class& rat() const { return std::get<mpq_class>(v_); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// Three-way comparison: -1, 0, +1. Mixed modes compare as double.
    int compare(const Scalar& o) const;

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.compare(b) == 0; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.compare(b) != 0; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.compare(b) < 0; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return a.compare(b) <= 0; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return a.compare(b) > 0; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return a.compare(b) >= 0; }

    /// "p/q" (canonical) or "p" for integers; decimal text in float mode.
    std::string str() const;

private:
    struct FloatTag {};
    Scalar(double x, FloatTag) : v_(x) {}
    std::variant<mpq_class, double> v_;
};

Scalar abs(const Scalar& a);
Scalar max(const Scalar& a, const Scalar& b);
Scalar min(const Scalar& a, const Scalar& b);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Scalar extended with a single point at +infinity. Null distances over
/// disconnected causal graphs are genuinely infinite; the flag is explicit
/// rather than a sentinel float.
class ExtScalar {
public:
    ExtScalar() : infinite_(false), finite_() {}
    ExtScalar(Scalar s) : infinite_(false), finite_(std::move(s)) {}
    static ExtScalar infinity() {
        ExtScalar e;
        e.infinite_ = true;
        return e;
    }

    bool infinite() const { return infinite_; }
    /// Requires !infinite().
    const Scalar& finite() const { return finite_; }

    ExtScalar operator+(const ExtScalar& o) const;
    int compare(const ExtScalar& o) const;

    friend bool operator==(const ExtScalar& a, const ExtScalar& b) { return a.compare(b) == 0; }
    friend bool operator!=(const ExtScalar& a, const ExtScalar& b) { return a.compare(b) != 0; }
    friend bool operator<(const ExtScalar& a, const ExtScalar& b) { return a.compare(b) < 0; }
    friend bool operator<=(const ExtScalar& a, const ExtScalar& b) { return a.compare(b) <= 0; }
    friend bool operator>(const ExtScalar& a, const ExtScalar& b) { return a.compare(b) > 0; }
    friend bool operator>=(const ExtScalar& a, const ExtScalar& b) { return a.compare(b) >= 0; }

    std::string str() const;

private:
    bool infinite_;
    Scalar finite_;
};

std::ostream& operator<<(std::ostream& os, const ExtScalar& s);

}  // namespace tms
