#include "numbers.hpp"

#include <mpfr.h>

#include <cctype>
#include <cstdio>
#include <vector>

namespace sqt {

Rat make_rat(Int num, Int den) {
    if (den == 0) throw DomainError("zero denominator");
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

bool is_squarefree(std::int64_t d) {
    if (d < 1) return false;
    for (std::int64_t i = 2; i * i <= d; ++i) {
        if (d % (i * i) == 0) return false;
    }
    return true;
}

std::pair<std::int64_t, std::int64_t> extract_square_part(std::int64_t u) {
    std::int64_t s = 1;
    for (std::int64_t i = 2; i * i <= u; ++i) {
        while (u % (i * i) == 0) {
            u /= i * i;
            s *= i;
        }
    }
    return {s, u};
}

QuadExt::QuadExt(Rat a, Rat b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (b_ == 0) {
        d_ = 1;
        return;
    }
    if (d_ < 2) throw DomainError("radicand must be >= 2 for an irrational value");
    if (d_ > kMaxRadicand) throw DomainError("radicand too large");
    if (!is_squarefree(d_)) throw DomainError("radicand must be squarefree");
}

QuadExt QuadExt::sqrt_of(std::int64_t u) {
    if (u < 0) throw DomainError("negative radicand");
    if (u > kMaxRadicand) throw DomainError("radicand too large");
    auto [s, d] = extract_square_part(u);
    if (d <= 1) return QuadExt(Rat(s * d));  // u was a perfect square (or 0)
    return unchecked(Rat(0), Rat(s), d);
}

QuadExt QuadExt::unchecked(Rat a, Rat b, std::int64_t d) {
    QuadExt r;
    r.a_ = std::move(a);
    r.b_ = std::move(b);
    r.d_ = (r.b_ == 0) ? 1 : d;
    return r;
}

const Rat& QuadExt::as_rational() const {
    if (!is_rational()) throw DomainError("value is irrational");
    return a_;
}

std::int64_t QuadExt::common_radicand(const QuadExt& x, const QuadExt& y) {
    if (x.d_ == y.d_) return x.d_;
    if (x.d_ == 1) return y.d_;
    if (y.d_ == 1) return x.d_;
    throw DomainError("mismatched radicands: sqrt(" + std::to_string(x.d_) + ") vs sqrt(" +
                      std::to_string(y.d_) + ")");
}

int QuadExt::sign() const {
    const int sa = sign_of(a_);
    const int sb = sign_of(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Signs differ: compare |a| with |b|*sqrt(d) through the norm a^2 - b^2 d.
    const Rat norm = a_ * a_ - b_ * b_ * Rat(d_);
    return sa > 0 ? sign_of(norm) : -sign_of(norm);
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    const std::int64_t d = QuadExt::common_radicand(x, y);
    return QuadExt::unchecked(x.a_ + y.a_, x.b_ + y.b_, d);
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    const std::int64_t d = QuadExt::common_radicand(x, y);
    return QuadExt::unchecked(x.a_ - y.a_, x.b_ - y.b_, d);
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    const std::int64_t d = QuadExt::common_radicand(x, y);
    return QuadExt::unchecked(x.a_ * y.a_ + x.b_ * y.b_ * Rat(d), x.a_ * y.b_ + x.b_ * y.a_, d);
}

QuadExt inverse(const QuadExt& x) {
    if (x.is_zero()) throw DomainError("division by zero");
    // 1/(a+b√d) = (a-b√d)/(a^2-b^2 d); the norm is nonzero since d is not
    // a perfect square.
    const Rat norm =
        x.rational_part() * x.rational_part() -
        x.radical_coeff() * x.radical_coeff() * Rat(x.radicand());
    return QuadExt(x.rational_part() / norm, -x.radical_coeff() / norm, x.radicand());
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * inverse(y); }

namespace {

class NumberScanner {
public:
    explicit NumberScanner(std::string_view text) : text_(text) {}

    // number := rational | rational sign term | term | sign term
    QuadExt parse() {
        skip_ws();
        QuadExt value;
        if (at('+')) {
            ++pos_;
            value = parse_term();
        } else if (peek_is_sqrt_start()) {
            const bool minus = at('-');
            if (minus) {
                ++pos_;
                skip_ws();
            }
            const QuadExt v = parse_sqrt();
            value = minus ? -v : v;
        } else {
            const Rat head = parse_rational();
            skip_ws();
            if (at('*')) {
                ++pos_;
                value = head * parse_sqrt();
            } else if (at('+') || at('-')) {
                const bool minus = at('-');
                ++pos_;
                const QuadExt term = parse_term();
                value = minus ? QuadExt(head) - term : QuadExt(head) + term;
            } else {
                value = QuadExt(head);
            }
        }
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return value;
    }

private:
    // term := rational '*' 'sqrt(' uint ')' | 'sqrt(' uint ')'
    QuadExt parse_term() {
        skip_ws();
        if (starts_with("sqrt(")) return parse_sqrt();
        const Rat coeff = parse_rational();
        skip_ws();
        if (!at('*')) fail("expected '*' before sqrt");
        ++pos_;
        return coeff * parse_sqrt();
    }

    QuadExt parse_sqrt() {
        skip_ws();
        if (!consume("sqrt(")) fail("expected sqrt(");
        skip_ws();
        const std::size_t upos = pos_;
        const Int u = parse_uint();
        skip_ws();
        if (!at(')')) fail("expected ')'");
        ++pos_;
        if (u > kMaxRadicand) fail_at("radicand too large", upos);
        return QuadExt::sqrt_of(u.get_si());
    }

    Rat parse_rational() {
        skip_ws();
        bool neg = false;
        if (at('-')) {
            neg = true;
            ++pos_;
            skip_ws();
        }
        Int num = parse_uint();
        if (neg) num = -num;
        skip_ws();
        if (at('/')) {
            ++pos_;
            skip_ws();
            const std::size_t den_pos = pos_;
            const Int den = parse_uint();
            if (den == 0) fail_at("zero denominator", den_pos);
            return make_rat(num, den);
        }
        return Rat(num);
    }

    Int parse_uint() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a digit");
        return Int(std::string(text_.substr(start, pos_ - start)), 10);
    }

    bool starts_with(std::string_view token) const {
        return text_.compare(pos_, token.size(), token) == 0;
    }

    // True when the input begins with 'sqrt(' or '- sqrt(' (a bare term).
    bool peek_is_sqrt_start() const {
        std::size_t p = pos_;
        if (p < text_.size() && text_[p] == '-') {
            ++p;
            while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
        }
        return text_.compare(p, 5, "sqrt(") == 0;
    }

    bool consume(std::string_view token) {
        if (text_.compare(pos_, token.size(), token) != 0) return false;
        pos_ += token.size();
        return true;
    }

    bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }

    [[noreturn]] void fail_at(const std::string& msg, std::size_t pos) const {
        throw ParseError(msg + " at position " + std::to_string(pos), pos);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string rat_to_string(const Rat& r) { return r.get_str(); }

}  // namespace

QuadExt parse_number(std::string_view text) { return NumberScanner(text).parse(); }

std::string format_number(const QuadExt& x) {
    if (x.is_rational()) return rat_to_string(x.rational_part());
    std::string out;
    const Rat& a = x.rational_part();
    const Rat& b = x.radical_coeff();
    if (a != 0) {
        out += rat_to_string(a);
        out += sign_of(b) < 0 ? '-' : '+';
        out += rat_to_string(abs(b));
    } else {
        out += rat_to_string(b);
    }
    out += "*sqrt(" + std::to_string(x.radicand()) + ")";
    return out;
}

std::string format_number_approx(const QuadExt& x, int significant_digits) {
    mpfr_t acc, root;
    mpfr_init2(acc, 256);
    mpfr_init2(root, 256);
    mpfr_set_si(root, x.radicand(), MPFR_RNDN);
    mpfr_sqrt(root, root, MPFR_RNDN);
    mpfr_mul_q(root, root, x.radical_coeff().get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(acc, x.rational_part().get_mpq_t(), MPFR_RNDN);
    mpfr_add(acc, acc, root, MPFR_RNDN);

    char buf[128];
    mpfr_snprintf(buf, sizeof buf, "%.*Rg", significant_digits, acc);
    mpfr_clear(acc);
    mpfr_clear(root);
    return buf;
}

}  // namespace sqt
