#include "tms/scalar.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "tms/errors.hpp"

namespace tms {

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    Scalar s;
    s.v_ = std::move(q);
    return s;
}

Scalar Scalar::rational(mpq_class q) {
    q.canonicalize();
    Scalar s;
    s.v_ = std::move(q);
    return s;
}

Scalar Scalar::parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw ParseError("bad rational literal: '" + text + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    Scalar s;
    s.v_ = std::move(q);
    return s;
}

double Scalar::to_double() const {
    if (exact()) return rat().get_d();
    return std::get<double>(v_);
}

Scalar Scalar::operator-() const {
    Scalar r;
    if (exact()) {
        r.v_ = mpq_class(-rat());
    } else {
        r.v_ = -std::get<double>(v_);
    }
    return r;
}

namespace {

template <class Op>
void apply(std::variant<mpq_class, double>& a,
           const std::variant<mpq_class, double>& b, Op op) {
    if (std::holds_alternative<mpq_class>(a) && std::holds_alternative<mpq_class>(b)) {
        mpq_class r;
        op(r, std::get<mpq_class>(a), std::get<mpq_class>(b));
        a = std::move(r);
        return;
    }
    double x = std::holds_alternative<double>(a) ? std::get<double>(a)
                                                 : std::get<mpq_class>(a).get_d();
    double y = std::holds_alternative<double>(b) ? std::get<double>(b)
                                                 : std::get<mpq_class>(b).get_d();
    double r = 0.0;
    op(r, x, y);
    a = r;
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
    apply(v_, o.v_, [](auto& r, const auto& x, const auto& y) { r = x + y; });
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    apply(v_, o.v_, [](auto& r, const auto& x, const auto& y) { r = x - y; });
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    apply(v_, o.v_, [](auto& r, const auto& x, const auto& y) { r = x * y; });
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.exact() && o.rat() == 0) throw std::invalid_argument("division by zero");
    apply(v_, o.v_, [](auto& r, const auto& x, const auto& y) { r = x / y; });
    return *this;
}

int Scalar::compare(const Scalar& o) const {
    if (exact() && o.exact()) {
        int c = cmp(rat(), o.rat());
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    double x = to_double();
    double y = o.to_double();
    return x < y ? -1 : (x > y ? 1 : 0);
}

std::string Scalar::str() const {
    if (exact()) return rat().get_str();
    std::ostringstream os;
    os.precision(17);
    os << std::get<double>(v_);
    return os.str();
}

Scalar abs(const Scalar& a) { return a.compare(Scalar(0)) < 0 ? -a : a; }

Scalar max(const Scalar& a, const Scalar& b) { return a.compare(b) >= 0 ? a : b; }

Scalar min(const Scalar& a, const Scalar& b) { return a.compare(b) <= 0 ? a : b; }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

ExtScalar ExtScalar::operator+(const ExtScalar& o) const {
    if (infinite_ || o.infinite_) return infinity();
    return ExtScalar(finite_ + o.finite_);
}

int ExtScalar::compare(const ExtScalar& o) const {
    if (infinite_ && o.infinite_) return 0;
    if (infinite_) return 1;
    if (o.infinite_) return -1;
    return finite_.compare(o.finite_);
}

std::string ExtScalar::str() const { return infinite_ ? "inf" : finite_.str(); }

std::ostream& operator<<(std::ostream& os, const ExtScalar& s) { return os << s.str(); }

}  // namespace tms
