#include "qschur/fraction.hpp"

#include "qschur/errors.hpp"

namespace qschur {

Fraction::Fraction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw internal_error("fraction with zero denominator");
    normalize();
}

void Fraction::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(num_.num_q_vars(), 1);
        return;
    }
    Rat cn = num_.content();
    Rat cd = den_.content();
    // Joint scale: make both integral with overall content 1.
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), cn.get_num().get_mpz_t(), cd.get_num().get_mpz_t());
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), cn.get_den().get_mpz_t(), cd.get_den().get_mpz_t());
    Rat scale(l, g);
    scale.canonicalize();
    if (scale != 1) {
        num_ = num_ * scale;
        den_ = den_ * scale;
    }
    if (den_.leading_coefficient() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

bool Fraction::den_is_one() const {
    auto m = den_.as_q_monomial();
    return m && m->first == 1 && m->second == 0;
}

Fraction Fraction::operator-() const {
    Fraction f = *this;
    f.num_ = -f.num_;
    return f;
}

Fraction Fraction::operator+(const Fraction& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return Fraction(num_ + o.num_, den_);
    return Fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Fraction Fraction::operator-(const Fraction& o) const { return *this + (-o); }

Fraction Fraction::operator*(const Fraction& o) const {
    if (is_zero() || o.is_zero()) return zero(num_q_vars());
    return Fraction(num_ * o.num_, den_ * o.den_);
}

Fraction Fraction::operator/(const Fraction& o) const {
    if (o.is_zero()) throw internal_error("division by zero fraction");
    if (is_zero()) return zero(num_q_vars());
    return Fraction(num_ * o.den_, den_ * o.num_);
}

bool Fraction::operator==(const Fraction& o) const {
    if (num_.is_zero()) return o.num_.is_zero();
    if (o.num_.is_zero()) return false;
    return num_ * o.den_ == o.num_ * den_;
}

std::optional<LaurentPoly> Fraction::as_polynomial() const {
    return num_.divided_exactly_by(den_);
}

std::optional<LaurentPoly> Fraction::as_coefficient_ring_element() const {
    auto p = as_polynomial();
    if (!p || !p->has_integer_coefficients()) return std::nullopt;
    return p;
}

std::string Fraction::str() const {
    if (den_is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

} // namespace qschur
