#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "numbers.hpp"

namespace sqt {

/// Dense univariate polynomial with integer coefficients, lowest degree
/// first. The zero polynomial has an empty coefficient list.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    static IntPoly constant(Int c);

    const std::vector<Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Int& leading() const;
    Int coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& p, const IntPoly& q);
    friend IntPoly operator-(const IntPoly& p, const IntPoly& q);
    friend IntPoly operator*(const IntPoly& p, const IntPoly& q);
    friend bool operator==(const IntPoly& p, const IntPoly& q) { return p.coeffs_ == q.coeffs_; }
    friend bool operator!=(const IntPoly& p, const IntPoly& q) { return !(p == q); }

    /// gcd of the coefficients (0 for the zero polynomial).
    Int content() const;

    /// Canonical associate: content 1, positive leading coefficient.
    IntPoly canonical() const;

    /// p(x) -> p(x^2).
    IntPoly compose_square() const;

    /// p(x) -> x^k * p(x).
    IntPoly times_x(std::size_t k = 1) const;

    /// p(x) -> p(-x).
    IntPoly reflected() const;

    /// Horner evaluation over any field constructible from Rat.
    template <class F>
    F evaluate(const F& x) const {
        F acc = F(Rat(0));
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + F(Rat(*it));
        return acc;
    }

    /// "3,-6,2" (lowest degree first). Round-trips through parse.
    std::string to_coeff_string() const;

    /// Human form, highest degree first: "2x^2-6x+3".
    std::string to_pretty_string() const;

    /// Parses the comma-separated coefficient form; ParseError on bad input.
    static IntPoly parse_coeff_string(std::string_view text);

private:
    void trim();
    std::vector<Int> coeffs_;
};

/// Dense univariate polynomial with rational coefficients.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);
    explicit RatPoly(const IntPoly& p);
    static RatPoly constant(Rat c);

    const std::vector<Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& leading() const;
    Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }

    RatPoly operator-() const;
    friend RatPoly operator+(const RatPoly& p, const RatPoly& q);
    friend RatPoly operator-(const RatPoly& p, const RatPoly& q);
    friend RatPoly operator*(const RatPoly& p, const RatPoly& q);
    RatPoly operator*(const Rat& c) const;
    friend bool operator==(const RatPoly& p, const RatPoly& q) { return p.coeffs_ == q.coeffs_; }
    friend bool operator!=(const RatPoly& p, const RatPoly& q) { return !(p == q); }

    /// Leading coefficient 1 (requires nonzero).
    RatPoly monic() const;

    /// Quotient and remainder of p / q, q nonzero.
    static std::pair<RatPoly, RatPoly> divmod(const RatPoly& p, const RatPoly& q);

    /// Monic gcd; gcd(0, 0) = 0.
    static RatPoly gcd(RatPoly p, RatPoly q);

    /// Clears denominators: the integer polynomial lambda * p together with
    /// the multiplier lambda (lcm of the coefficient denominators).
    std::pair<IntPoly, Int> to_integer() const;

    template <class F>
    F evaluate(const F& x) const {
        F acc = F(Rat(0));
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + F(*it);
        return acc;
    }

private:
    void trim();
    std::vector<Rat> coeffs_;
};

}  // namespace sqt
