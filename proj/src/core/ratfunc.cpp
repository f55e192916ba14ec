#include "ratfunc.hpp"

namespace sqt {

RationalFunction::RationalFunction(RatPoly num, RatPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("zero denominator polynomial");
    normalize();
}

RationalFunction RationalFunction::variable() {
    return RationalFunction(RatPoly(std::vector<Rat>{Rat(0), Rat(1)}));
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = RatPoly::constant(Rat(1));
        return;
    }
    const RatPoly g = RatPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = RatPoly::divmod(num_, g).first;
        den_ = RatPoly::divmod(den_, g).first;
    }
    const Rat lead = den_.leading();
    if (lead != 1) {
        const Rat inv = Rat(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunction operator+(const RationalFunction& x, const RationalFunction& y) {
    return RationalFunction(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

RationalFunction operator-(const RationalFunction& x, const RationalFunction& y) {
    return RationalFunction(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}

RationalFunction operator*(const RationalFunction& x, const RationalFunction& y) {
    return RationalFunction(x.num_ * y.num_, x.den_ * y.den_);
}

RationalFunction operator/(const RationalFunction& x, const RationalFunction& y) {
    if (y.is_zero()) throw DomainError("division by zero");
    return RationalFunction(x.num_ * y.den_, x.den_ * y.num_);
}

}  // namespace sqt
