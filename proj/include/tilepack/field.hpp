#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "tilepack/errors.hpp"

namespace tilepack {

using Integer = mpz_class;
using Rational = mpq_class; // kept canonical: lowest terms, positive denominator

Rational rational_from_string(const std::string& text);
std::string rational_to_string(const Rational& q); // always "p/q", e.g. "1/1"

int rational_sign(const Rational& q);
Integer rational_floor(const Rational& q);
std::optional<Rational> rational_sqrt(const Rational& q);

// Element a + b*sqrt(D) of the real quadratic field Q(sqrt(D)).
// D is a squarefree integer >= 2; d() == 0 marks a plain rational (then b == 0).
// The representation is canonical, so operator== is semantic equality.
class FieldElement {
public:
    FieldElement() : d_(0) {}
    FieldElement(long v) : r_(v), d_(0) {}                           // NOLINT(google-explicit-constructor)
    FieldElement(const Integer& v) : r_(v), d_(0) {}                 // NOLINT
    FieldElement(const Rational& r) : r_(r), d_(0) {}                // NOLINT
    FieldElement(Rational r, Rational s, long d);

    static FieldElement sqrt_d(long d) { return FieldElement(0, 1, d); }

    const Rational& rat() const { return r_; }
    const Rational& coeff() const { return s_; }
    long d() const { return d_; }

    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return sgn(r_) == 0 && sgn(s_) == 0; }
    bool is_integer() const { return d_ == 0 && r_.get_den() == 1; }

    FieldElement operator-() const { return FieldElement(-r_, -s_, d_); }
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    bool operator==(const FieldElement& o) const {
        return r_ == o.r_ && s_ == o.s_ && (sgn(s_) == 0 || d_ == o.d_);
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    bool operator<(const FieldElement& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const FieldElement& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const FieldElement& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const FieldElement& o) const { return (*this - o).sign() >= 0; }

    // Exact sign of the real number a + b*sqrt(D).
    int sign() const;

    // The unique integer z with z <= x < z + 1, decided by exact sign tests.
    Integer floor() const;
    Integer nearest() const { return (*this + FieldElement(Rational(1, 2))).floor(); }

    FieldElement conjugate() const { return FieldElement(r_, -s_, d_); }
    FieldElement abs() const { return sign() < 0 ? -*this : *this; }
    FieldElement inverse() const { return FieldElement(Rational(1)) / *this; }

    double approx() const; // display/seed use only, never for decisions

    std::string str() const;

private:
    Rational r_; // rational part
    Rational s_; // coefficient of sqrt(D)
    long d_;     // 0 when s_ == 0

    static long merge_d(const FieldElement& x, const FieldElement& y);
};

// Exact square root inside Q(sqrt(d)), if one exists; the nonnegative root.
// d is the ambient field tag (the element itself may be plain rational).
std::optional<FieldElement> field_sqrt(const FieldElement& x, long d);

bool is_squarefree(long d);

using FVec = std::vector<FieldElement>;

} // namespace tilepack
