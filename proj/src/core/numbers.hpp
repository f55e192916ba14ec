#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "errors.hpp"

namespace sqt {

using Int = mpz_class;
using Rat = mpq_class;

/// Exact sign of a rational: -1, 0 or +1.
inline int sign_of(const Rat& x) { return sgn(x); }

/// num/den in canonical form (positive denominator, reduced).
Rat make_rat(Int num, Int den);

/// Largest radicand accepted by the library. Squarefree-ness is verified by
/// trial division, which stays cheap up to this bound.
inline constexpr std::int64_t kMaxRadicand = 1'000'000'000'000;

bool is_squarefree(std::int64_t d);

/// Splits u >= 0 as s^2 * d with d squarefree (u = 0 gives {1, 0}).
std::pair<std::int64_t, std::int64_t> extract_square_part(std::int64_t u);

/// Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)).
///
/// d is a positive squarefree radicand; plain rationals carry d == 1 with
/// b == 0 and lift transparently into any Q(sqrt(d)) during arithmetic.
/// Mixing two distinct irrational radicands is a DomainError. Values are
/// immutable and canonical: b == 0 forces d == 1.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(1) {}
    QuadExt(long v) : a_(v), b_(0), d_(1) {}
    QuadExt(const Int& v) : a_(v), b_(0), d_(1) {}
    QuadExt(const Rat& a) : a_(a), b_(0), d_(1) {}

    /// a + b*sqrt(d). Requires d squarefree (and >= 2 when b != 0).
    QuadExt(Rat a, Rat b, std::int64_t d);

    /// sqrt(u) for u >= 0, with the square part of u folded into the
    /// rational coefficient (sqrt(8) becomes 2*sqrt(2)).
    static QuadExt sqrt_of(std::int64_t u);

    const Rat& rational_part() const { return a_; }
    const Rat& radical_coeff() const { return b_; }
    std::int64_t radicand() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    /// The value as a plain rational; requires is_rational().
    const Rat& as_rational() const;

    /// a - b*sqrt(d): the nontrivial automorphism of Q(sqrt(d)).
    QuadExt conjugate() const { return unchecked(a_, -b_, d_); }

    /// Exact sign of the real number a + b*sqrt(d), without floating point:
    /// when a and b agree in sign it is immediate, otherwise it is the sign
    /// of a^2 - b^2 d (resp. its negation), since (a+b√d)(a-b√d) = a^2-b^2 d.
    int sign() const;

    QuadExt operator-() const { return unchecked(-a_, -b_, d_); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y);

    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
    QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    // Order of the underlying real numbers; operands must live in a common
    // field, same as for arithmetic.
    friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadExt& x, const QuadExt& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() >= 0; }

private:
    static QuadExt unchecked(Rat a, Rat b, std::int64_t d);
    static std::int64_t common_radicand(const QuadExt& x, const QuadExt& y);

    Rat a_, b_;
    std::int64_t d_;
};

/// 1/x; DomainError when x == 0.
QuadExt inverse(const QuadExt& x);

inline QuadExt conjugate(const QuadExt& x) { return x.conjugate(); }
inline int sign(const QuadExt& x) { return x.sign(); }

/// Parses the ASCII number grammar:
///   number   := rational | rational sign term | term | sign term
///   term     := rational '*' 'sqrt(' uint ')' | 'sqrt(' uint ')'
///   rational := ['-'] uint ['/' uint]
/// Whitespace is permitted between tokens. Radicands are normalized to
/// squarefree form; radicand 0 or 1 folds into the rational part.
/// Raises ParseError with the byte offset of the problem.
QuadExt parse_number(std::string_view text);

/// Canonical shortest text form: "1-1*sqrt(2)", "3/2", "0". Round-trips
/// through parse_number.
std::string format_number(const QuadExt& x);

/// Decimal approximation with the given number of significant digits,
/// computed with 256-bit MPFR arithmetic so the output is deterministic.
std::string format_number_approx(const QuadExt& x, int significant_digits);

}  // namespace sqt
