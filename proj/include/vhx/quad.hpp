#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace vhx {

using Rational = boost::multiprecision::cpp_rational;

/// Exact a + b*sqrt(n).  A radicand of 0 marks a plain rational that adopts
/// the radicand of whatever it meets.
class QuadScalar {
public:
    QuadScalar() = default;
    QuadScalar(long long a) : a_(a) {}
    QuadScalar(Rational a, Rational b, int n) : a_(std::move(a)), b_(std::move(b)), n_(n) { normalize(); }

    static QuadScalar sqrt_n(int n) { return QuadScalar(0, 1, n); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    int radicand() const { return n_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QuadScalar& operator+=(const QuadScalar& o) {
        adopt(o);
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    QuadScalar& operator-=(const QuadScalar& o) {
        adopt(o);
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    QuadScalar operator-() const {
        QuadScalar r = *this;
        r.a_ = -r.a_;
        r.b_ = -r.b_;
        return r;
    }
    friend QuadScalar operator+(QuadScalar x, const QuadScalar& y) { return x += y; }
    friend QuadScalar operator-(QuadScalar x, const QuadScalar& y) { return x -= y; }

    friend QuadScalar operator*(const QuadScalar& x, const QuadScalar& y) {
        int n = common(x, y);
        QuadScalar r;
        r.n_ = n;
        if (x.b_ == 0 && y.b_ == 0) {
            r.a_ = x.a_ * y.a_;
            return r;
        }
        r.a_ = x.a_ * y.a_ + x.b_ * y.b_ * n;
        r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
        return r;
    }
    QuadScalar& operator*=(const QuadScalar& o) { return *this = *this * o; }

    QuadScalar inverse() const {
        if (is_zero()) throw std::domain_error("division by zero in Q(sqrt n)");
        if (b_ == 0) return QuadScalar(1 / a_, 0, n_);
        Rational norm = a_ * a_ - b_ * b_ * n_;
        return QuadScalar(a_ / norm, -b_ / norm, n_);
    }
    friend QuadScalar operator/(const QuadScalar& x, const QuadScalar& y) { return x * y.inverse(); }

    bool operator==(const QuadScalar& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const QuadScalar& o) const { return !(*this == o); }

    double to_double() const {
        return static_cast<double>(a_) + static_cast<double>(b_) * std::sqrt(static_cast<double>(n_));
    }

    std::string str() const {
        std::ostringstream os;
        if (b_ == 0) {
            os << a_;
        } else if (a_ == 0) {
            os << b_ << "*sqrt(" << n_ << ")";
        } else {
            os << a_ << (b_ < 0 ? " - " : " + ") << abs(b_) << "*sqrt(" << n_ << ")";
        }
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const QuadScalar& x) { return os << x.str(); }

private:
    static int common(const QuadScalar& x, const QuadScalar& y) {
        if (x.n_ && y.n_ && x.n_ != y.n_) throw std::invalid_argument("mixed radicands");
        return x.n_ ? x.n_ : y.n_;
    }
    void adopt(const QuadScalar& o) { n_ = common(*this, o); }

    void normalize() {
        if (n_ <= 0 || b_ == 0) return;
        int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n_))));
        if (r * r == n_) {
            a_ += b_ * r;
            b_ = 0;
        }
    }

    Rational a_{0}, b_{0};
    int n_ = 0;
};

}  // namespace vhx
