#include "torsionlab/rational.hpp"

#include <ostream>

namespace torsionlab {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::context_mismatch: return "context-mismatch";
    case ErrorCode::usage: return "usage";
    case ErrorCode::commutativity: return "commutativity";
    case ErrorCode::parse_syntax: return "syntax";
    case ErrorCode::parse_zero_denominator: return "zero-denominator";
    case ErrorCode::parse_unknown_variable: return "unknown-variable";
    case ErrorCode::parse_negative_exponent: return "negative-exponent";
    case ErrorCode::scene_duplicate_name: return "duplicate-name";
    case ErrorCode::scene_index_range: return "index-range";
    case ErrorCode::scene_missing_chart: return "missing-chart";
    case ErrorCode::internal: return "internal";
    }
    return "unknown";
}

Rational::Rational(long n, long d) : v_(n, d) {
    if (d == 0) {
        throw UsageError("rational with zero denominator");
    }
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0) {
        throw UsageError("malformed rational: '" + text + "'");
    }
    if (sgn(v.get_den()) == 0) {
        throw UsageError("rational with zero denominator: '" + text + "'");
    }
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-v_));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) {
        throw UsageError("division of rationals by zero");
    }
    return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::abs() const {
    return Rational(mpq_class(::abs(v_)));
}

Rational Rational::pow(unsigned long exponent) const {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), exponent);
    mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), exponent);
    // num/den coprime implies the powers are coprime; sign stays in num.
    return Rational(std::move(r));
}

Rational Rational::factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

Rational Rational::binomial(unsigned long n, unsigned long k) {
    if (k > n) {
        return Rational();
    }
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(mpq_class(b));
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
}

} // namespace torsionlab
