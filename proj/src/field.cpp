#include "tilepack/field.hpp"

#include <cmath>
#include <map>
#include <utility>

namespace tilepack {

Rational rational_from_string(const std::string& text) {
    std::string t = text;
    if (t.empty()) throw ParseError("empty rational literal");
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) {
            Integer num(t);
            return Rational(num);
        }
        Integer num(t.substr(0, slash));
        Integer den(t.substr(slash + 1));
        if (sgn(den) == 0) throw ParseError("zero denominator in '" + text + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational '" + text + "'");
    }
}

std::string rational_to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

int rational_sign(const Rational& q) { return sgn(q); }

Integer rational_floor(const Rational& q) {
    Integer z;
    mpz_fdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return z;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    const Integer& num = q.get_num();
    const Integer& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd); // already canonical: gcd(num,den)=1 implies gcd of roots is 1
}

bool is_squarefree(long d) {
    if (d < 1) return false;
    for (long p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

FieldElement::FieldElement(Rational r, Rational s, long d) : r_(std::move(r)), s_(std::move(s)), d_(d) {
    if (sgn(s_) == 0) {
        d_ = 0;
    } else if (d_ < 2 || !is_squarefree(d_)) {
        throw FieldError("irrational coefficient requires a squarefree field tag D >= 2");
    }
}

long FieldElement::merge_d(const FieldElement& x, const FieldElement& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || y.d_ == x.d_) return x.d_;
    throw FieldError("mismatched field tags D=" + std::to_string(x.d_) + " vs D=" + std::to_string(y.d_));
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    long d = merge_d(*this, o);
    return FieldElement(r_ + o.r_, s_ + o.s_, d);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    long d = merge_d(*this, o);
    return FieldElement(r_ - o.r_, s_ - o.s_, d);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    long d = merge_d(*this, o);
    // (a + b sqrt(D)) (a' + b' sqrt(D)) = (aa' + bb'D) + (ab' + a'b) sqrt(D)
    Rational r = r_ * o.r_;
    if (sgn(s_) != 0 && sgn(o.s_) != 0) r += s_ * o.s_ * d;
    Rational s = r_ * o.s_ + o.r_ * s_;
    return FieldElement(r, s, d);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    if (o.is_zero()) throw FieldError("division by zero");
    long d = merge_d(*this, o);
    if (sgn(o.s_) == 0) return FieldElement(r_ / o.r_, s_ / o.r_, d);
    // multiply by the conjugate; the norm a^2 - D b^2 is a nonzero rational
    Rational norm = o.r_ * o.r_ - Rational(d) * o.s_ * o.s_;
    FieldElement num = *this * o.conjugate();
    return FieldElement(num.r_ / norm, num.s_ / norm, d);
}

int FieldElement::sign() const {
    int sr = sgn(r_);
    int ss = sgn(s_);
    if (ss == 0) return sr;
    if (sr == 0) return ss;
    if (sr == ss) return sr;
    // opposite signs: compare |a| against |b| sqrt(D) via squares
    Rational n = r_ * r_ - Rational(d_) * s_ * s_;
    return sr * sgn(n); // n != 0 since sqrt(D) is irrational
}

// bracket root/2^k <= sqrt(d) < (root+1)/2^k, cached per d
static const std::pair<Rational, Rational>& sqrt_bracket(long d) {
    thread_local std::map<long, std::pair<Rational, Rational>> cache;
    auto it = cache.find(d);
    if (it == cache.end()) {
        const unsigned k = 64;
        Integer scaled = Integer(d) << (2 * k);
        Integer root;
        mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
        Integer two_k = Integer(1) << k;
        Rational lo(root, two_k), hi(root + 1, two_k);
        lo.canonicalize();
        hi.canonicalize();
        it = cache.emplace(d, std::make_pair(std::move(lo), std::move(hi))).first;
    }
    return it->second;
}

Integer FieldElement::floor() const {
    if (d_ == 0) return rational_floor(r_);
    const auto& [lo, hi] = sqrt_bracket(d_);
    Rational x_lo = r_ + s_ * (sgn(s_) > 0 ? lo : hi);
    Integer z = rational_floor(x_lo);
    while ((*this - FieldElement(Rational(z + 1))).sign() >= 0) z += 1;
    while ((*this - FieldElement(Rational(z))).sign() < 0) z -= 1;
    return z;
}

double FieldElement::approx() const {
    double v = r_.get_d();
    if (d_ != 0) v += s_.get_d() * std::sqrt(static_cast<double>(d_));
    return v;
}

std::string FieldElement::str() const {
    if (d_ == 0) return rational_to_string(r_);
    return rational_to_string(r_) + " + " + rational_to_string(s_) + "*sqrt(" + std::to_string(d_) + ")";
}

std::optional<FieldElement> field_sqrt(const FieldElement& x, long d) {
    if (x.sign() < 0) return std::nullopt;
    if (x.is_zero()) return FieldElement(0);
    if (x.d() != 0 && d != 0 && x.d() != d)
        throw FieldError("field_sqrt: element tag disagrees with ambient field");
    if (x.is_rational()) {
        if (auto r = rational_sqrt(x.rat())) return FieldElement(*r);
        if (d >= 2) {
            if (auto s = rational_sqrt(x.rat() / d)) return FieldElement(0, *s, d);
        }
        return std::nullopt;
    }
    // x = a + b sqrt(D), b != 0.  A root c + e sqrt(D) needs c^2 + D e^2 = a,
    // 2ce = b; so (c^2 - D e^2)^2 = a^2 - D b^2 must be a rational square.
    const Rational& a = x.rat();
    const Rational& b = x.coeff();
    long dd = x.d();
    Rational disc = a * a - Rational(dd) * b * b;
    auto delta = rational_sqrt(disc);
    if (!delta) return std::nullopt;
    for (int which = 0; which < 2; ++which) {
        Rational c2 = which == 0 ? Rational((a + *delta) / 2) : Rational((a - *delta) / 2);
        auto c = rational_sqrt(c2);
        if (!c || sgn(*c) == 0) continue;
        Rational e = b / (Rational(2) * *c);
        FieldElement y(*c, e, dd);
        if (y * y == x) return y.sign() >= 0 ? y : -y;
    }
    return std::nullopt;
}

} // namespace tilepack
