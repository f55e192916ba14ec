#pragma once

#include "polynomial.hpp"

namespace sqt {

/// Quotient of two rational-coefficient polynomials in one formal variable t,
/// kept in canonical form: gcd(num, den) = 1 and den monic. This is the
/// coefficient field of the symbolic circuit solve.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(RatPoly::constant(Rat(1))) {}
    RationalFunction(const Rat& c) : num_(RatPoly::constant(c)), den_(RatPoly::constant(Rat(1))) {}
    RationalFunction(const RatPoly& p) : num_(p), den_(RatPoly::constant(Rat(1))) {}
    RationalFunction(RatPoly num, RatPoly den);

    /// The formal variable t.
    static RationalFunction variable();

    const RatPoly& num() const { return num_; }
    const RatPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& x, const RationalFunction& y);
    friend RationalFunction operator-(const RationalFunction& x, const RationalFunction& y);
    friend RationalFunction operator*(const RationalFunction& x, const RationalFunction& y);
    friend RationalFunction operator/(const RationalFunction& x, const RationalFunction& y);

    friend bool operator==(const RationalFunction& x, const RationalFunction& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const RationalFunction& x, const RationalFunction& y) {
        return !(x == y);
    }

    /// Substitutes a field value for t; DomainError when the denominator
    /// vanishes at the point.
    template <class F>
    F evaluate(const F& t) const {
        const F d = den_.evaluate(t);
        if (d == F(Rat(0))) throw DomainError("rational function pole at evaluation point");
        return num_.evaluate(t) / d;
    }

private:
    void normalize();
    RatPoly num_, den_;
};

}  // namespace sqt
