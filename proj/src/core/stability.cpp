#include "stability.hpp"

namespace sqt {

IntPoly minimal_polynomial(const QuadExt& x) {
    if (x.is_rational()) {
        const Rat& r = x.as_rational();
        // q x - p for x = p/q canonical; gcd(p, q) = 1 and q > 0 already.
        return IntPoly(std::vector<Int>{-r.get_num(), r.get_den()});
    }
    const Rat& a = x.rational_part();
    const Rat& b = x.radical_coeff();
    const Rat prod = a * a - b * b * Rat(x.radicand());  // x * conjugate(x)
    const RatPoly quadratic(std::vector<Rat>{prod, Rat(-2) * a, Rat(1)});
    return quadratic.to_integer().first.canonical();
}

bool all_roots_positive_real_part(const IntPoly& p) {
    if (p.is_zero() || p.degree() < 1) throw DomainError("polynomial must have degree >= 1");

    // Mirror: roots of q(x) = p(-x) are the negated roots of p, so the test
    // becomes Hurwitz stability of q.
    IntPoly q = p.reflected();
    if (q.leading() < 0) q = -q;

    // Necessary condition: all coefficients present and positive.
    for (const Int& c : q.coeffs())
        if (c <= 0) return false;

    const int n = q.degree();
    if (n == 1) return true;  // positive coefficients suffice at degree 1

    // Routh array over exact rationals. Row 0 holds the coefficients of
    // x^n, x^(n-2), ...; row 1 those of x^(n-1), x^(n-3), ...
    const std::size_t width = static_cast<std::size_t>(n) / 2 + 1;
    std::vector<Rat> prev(width, Rat(0)), cur(width, Rat(0));
    for (std::size_t j = 0; j < width; ++j) {
        const int k = n - 2 * static_cast<int>(j);
        prev[j] = Rat(q.coeff(static_cast<std::size_t>(k)));
        if (k >= 1) cur[j] = Rat(q.coeff(static_cast<std::size_t>(k - 1)));
    }

    // Leading entries of the first two rows are positive by the coefficient
    // check; every later first-column entry must stay positive, and a zero
    // pivot is an immediate failure (marginal or unstable).
    for (int row = 2; row <= n; ++row) {
        std::vector<Rat> next(width, Rat(0));
        for (std::size_t j = 0; j + 1 < width; ++j)
            next[j] = (cur[0] * prev[j + 1] - prev[0] * cur[j + 1]) / cur[0];
        prev = std::move(cur);
        cur = std::move(next);
        if (sign_of(cur[0]) <= 0) return false;
    }
    return true;
}

}  // namespace sqt
