#ifndef TORSIONLAB_RATIONAL_HPP
#define TORSIONLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

#include "torsionlab/errors.hpp"

namespace torsionlab {

/// Exact arbitrary-precision rational. Always canonical: positive
/// denominator, gcd(|num|, den) = 1, zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: implicit integers are convenient
    Rational(long n, long d);

    /// Parses "p" or "p/q". Throws UsageError on a malformed string or q = 0.
    static Rational from_string(const std::string& text);

    Rational operator-() const;
    Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const;
    Rational pow(unsigned long exponent) const;

    static Rational factorial(unsigned long n);
    static Rational binomial(unsigned long n, unsigned long k);

    /// "p/q", denominator omitted when 1.
    std::string str() const;
    std::string numerator_str() const { return v_.get_num().get_str(); }
    std::string denominator_str() const { return v_.get_den().get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    // mpq_class arithmetic keeps canonical form; only raw construction
    // sites canonicalize.
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

} // namespace torsionlab

#endif
