#include "tiling.hpp"

#include "stability.hpp"

namespace sqt {

namespace {

// Guard against pathological inputs whose tilings would not fit in memory.
constexpr unsigned long kMaxParts = 2'000'000;

Rat rat_of(const Int& n, const Int& d) { return make_rat(n, d); }

unsigned long checked_part_count(const Int& count) {
    if (count <= 0 || count > static_cast<long>(kMaxParts))
        throw DomainError("tiling would need " + count.get_str() + " parts");
    return count.get_ui();
}

// u x v grid of cells filling `box` (u columns, v rows), all cells equal.
void emit_grid(std::vector<Rect>& parts, const Rect& box, unsigned long cols,
               unsigned long rows) {
    const QuadExt cell_w = box.w / QuadExt(Rat(static_cast<long>(cols)));
    const QuadExt cell_h = box.h / QuadExt(Rat(static_cast<long>(rows)));
    for (unsigned long r = 0; r < rows; ++r) {
        for (unsigned long c = 0; c < cols; ++c) {
            parts.push_back(Rect{box.x + cell_w * QuadExt(Rat(static_cast<long>(c))),
                                 box.y + cell_h * QuadExt(Rat(static_cast<long>(r))), cell_w,
                                 cell_h});
        }
    }
}

}  // namespace

Dissection grid_tiling(unsigned m, unsigned n) {
    if (m == 0 || n == 0) throw DomainError("grid dimensions must be positive");
    checked_part_count(Int(m) * Int(n));
    Dissection d;
    d.target = Rect{QuadExt(0), QuadExt(0), QuadExt(1), QuadExt(1)};
    emit_grid(d.parts, d.target, n, m);
    return d;
}

TwoBlockTiling two_block_tiling(const Int& m, const Int& n, const Int& p, const Int& q,
                                bool plus_root) {
    if (m <= 0 || n <= 0 || p <= 0 || q <= 0)
        throw DomainError("two-block parameters must be positive");
    checked_part_count(m * n + p * q);

    // np R^2 - mp R + mq = 0  <=>  nR/m + q/(pR) = 1 (left and right block
    // widths summing to the square's side).
    const Int disc = m * m * p * p - Int(4) * m * n * p * q;
    if (disc < 0) throw DomainError("negative discriminant " + disc.get_str());
    if (!disc.fits_slong_p()) throw DomainError("discriminant too large");
    const auto [disc_sq, disc_free] = extract_square_part(disc.get_si());
    const QuadExt sqrt_disc = QuadExt(Rat(disc_sq)) * QuadExt::sqrt_of(disc_free);

    const QuadExt mp_term(Rat(m * p));
    const QuadExt denom(Rat(2 * n * p));
    const QuadExt ratio =
        (plus_root ? mp_term + sqrt_disc : mp_term - sqrt_disc) / denom;

    Dissection d;
    d.target = Rect{QuadExt(0), QuadExt(0), QuadExt(1), QuadExt(1)};

    // Left block: m rows x n columns of cells (R/m) x (1/m), lying along.
    const QuadExt left_width = QuadExt(rat_of(n, m)) * ratio;
    const Rect left_box{QuadExt(0), QuadExt(0), left_width, QuadExt(1)};
    emit_grid(d.parts, left_box, n.get_ui(), m.get_ui());

    // Right block: p rows x q columns of cells lying across; its width is
    // q/(pR), which equals 1 - left_width because R satisfies the equation.
    const QuadExt right_width = QuadExt(1) - left_width;
    const Rect right_box{left_width, QuadExt(0), right_width, QuadExt(1)};
    emit_grid(d.parts, right_box, q.get_ui(), p.get_ui());

    return TwoBlockTiling{ratio, std::move(d)};
}

Dissection quadratic_tiling(const QuadExt& x) {
    if (x.is_rational()) throw DomainError("quadratic tiling requires an irrational ratio");
    if (x.sign() <= 0)
        throw DomainError("ratio is nonpositive: " + format_number(x));
    const QuadExt conj = x.conjugate();
    if (conj.sign() <= 0)
        throw DomainError("conjugate is nonpositive: " + format_number(conj));

    // Canonical ax^2+bx+c with a > 0; both roots positive forces b < 0, c > 0.
    const IntPoly mp = minimal_polynomial(x);
    const Int a = mp.coeff(2);
    const Int b = mp.coeff(1);
    const Int c = mp.coeff(0);

    const Int g = gcd(a, -b);
    const Int m = -b / g;
    const Int n = a / g;
    const Int p = m * g;
    const Int q = c;

    // x is one of the two roots of np R^2 - mp R + mq = 0; pick it exactly.
    TwoBlockTiling plus = two_block_tiling(m, n, p, q, true);
    if (plus.ratio == x) return std::move(plus.dissection);
    TwoBlockTiling minus = two_block_tiling(m, n, p, q, false);
    if (minus.ratio == x) return std::move(minus.dissection);
    throw InternalError("two-block roots do not match the requested ratio");
}

QuadExt cf_tower_value(const CFExpansion& e, const QuadExt& ratio) {
    if (e.c.empty()) throw DomainError("empty continued-fraction expansion");
    for (const Rat& c : e.c)
        if (sign_of(c) <= 0) throw DomainError("continued-fraction terms must be positive");
    QuadExt tower = QuadExt(e.c.back()) * ratio;
    for (std::size_t i = e.c.size() - 1; i-- > 0;)
        tower = QuadExt(e.c[i]) * ratio + inverse(tower);
    return tower;
}

Dissection cf_tiling(const QuadExt& ratio, const CFExpansion& e) {
    if (ratio.sign() <= 0) throw DomainError("ratio must be positive");
    if (cf_tower_value(e, ratio) != QuadExt(1))
        throw DomainError("continued-fraction tower does not evaluate to 1");

    Dissection d;
    d.target = Rect{QuadExt(0), QuadExt(0), QuadExt(1), QuadExt(1)};
    Rect rest = d.target;

    for (std::size_t i = 0; i < e.c.size(); ++i) {
        const bool last = (i + 1 == e.c.size());
        const bool vertical = (i % 2 == 0);  // odd steps (1-based) cut vertically
        const Rat& c = e.c[i];
        checked_part_count(c.get_num() * c.get_den());
        const unsigned long u = c.get_num().get_ui();  // c = u/v in lowest terms
        const unsigned long v = c.get_den().get_ui();

        if (vertical) {
            // Slice of aspect w/h = cR off the left; u columns x v rows of
            // cells with w/h = R each.
            const QuadExt slice_w = QuadExt(c) * ratio * rest.h;
            const int cmp = (rest.w - slice_w).sign();
            if (last ? cmp != 0 : cmp <= 0)
                throw DomainError(last ? "tower does not consume the square exactly"
                                       : "intermediate remainder is nonpositive");
            emit_grid(d.parts, Rect{rest.x, rest.y, slice_w, rest.h}, u, v);
            rest.x += slice_w;
            rest.w -= slice_w;
        } else {
            // Slice of aspect h/w = cR off the bottom; v columns x u rows.
            const QuadExt slice_h = QuadExt(c) * ratio * rest.w;
            const int cmp = (rest.h - slice_h).sign();
            if (last ? cmp != 0 : cmp <= 0)
                throw DomainError(last ? "tower does not consume the square exactly"
                                       : "intermediate remainder is nonpositive");
            emit_grid(d.parts, Rect{rest.x, rest.y, rest.w, slice_h}, v, u);
            rest.y += slice_h;
            rest.h -= slice_h;
        }
    }
    return d;
}

CFExpansion find_cf(const QuadExt& x) {
    if (x.is_rational()) {
        const Rat& r = x.as_rational();
        if (sign_of(r) <= 0) throw DomainError("ratio is nonpositive: " + format_number(x));
        return CFExpansion{{Rat(1) / r}};
    }
    if (x.sign() <= 0) throw DomainError("ratio is nonpositive: " + format_number(x));
    if (x.conjugate().sign() <= 0)
        throw DomainError("conjugate is nonpositive: " + format_number(x.conjugate()));

    const IntPoly mp = minimal_polynomial(x);
    const Int a = mp.coeff(2);
    const Int b = mp.coeff(1);
    const Int c = mp.coeff(0);
    const Int g = gcd(a, -b);
    const Int m = -b / g;
    const Int n = a / g;
    const Int p = m * g;
    const Int q = c;
    return CFExpansion{{rat_of(n, m), rat_of(p, q)}};
}

Decision decide(const QuadExt& x) {
    if (x.is_zero()) throw DomainError("ratio must be nonzero");

    Decision out;
    if (x.sign() < 0) {
        out.verdict = Decision::Verdict::impossible;
        out.witness_value = x;
        return out;
    }

    if (x.is_rational()) {
        const Rat& r = x.as_rational();
        const unsigned long num = checked_part_count(r.get_num());
        const unsigned long den = checked_part_count(r.get_den());
        out.verdict = Decision::Verdict::possible;
        out.dissection = grid_tiling(static_cast<unsigned>(num), static_cast<unsigned>(den));
        return out;
    }

    if (x.conjugate().sign() <= 0) {
        out.verdict = Decision::Verdict::impossible;
        out.witness_value = x.conjugate();
        return out;
    }

    out.verdict = Decision::Verdict::possible;
    out.dissection = quadratic_tiling(x);
    return out;
}

Decision decide(const IntPoly& poly) {
    if (poly.is_zero() || poly.degree() < 1)
        throw DomainError("polynomial must have degree >= 1");

    Decision out;
    out.stability = all_roots_positive_real_part(poly);
    const int deg = poly.degree();

    if (deg == 1) {
        const QuadExt root(make_rat(-poly.coeff(0), poly.coeff(1)));
        if (!out.stability) {
            out.verdict = Decision::Verdict::impossible;
            out.witness_value = root;
            return out;
        }
        Decision constructed = decide(root);
        constructed.stability = true;
        return constructed;
    }

    if (deg == 2) {
        const Int a = poly.coeff(2);
        const Int b = poly.coeff(1);
        const Int c = poly.coeff(0);
        const Int disc = b * b - Int(4) * a * c;
        if (disc < 0) {
            // Complex conjugate pair with real part -b/2a.
            if (out.stability)
                throw DomainError("polynomial has no real root to designate");
            out.verdict = Decision::Verdict::impossible;
            out.witness_text = "complex-pair-re=" + rat_of(-b, Int(2) * a).get_str();
            return out;
        }
        if (!disc.fits_slong_p()) throw DomainError("discriminant too large");
        const auto [sq, free] = extract_square_part(disc.get_si());
        const QuadExt sqrt_disc = QuadExt(Rat(sq)) * QuadExt::sqrt_of(free);
        const QuadExt denom(Rat(Int(2) * a));
        const QuadExt plus_root = (QuadExt(Rat(-b)) + sqrt_disc) / denom;
        if (!out.stability) {
            const QuadExt minus_root = (QuadExt(Rat(-b)) - sqrt_disc) / denom;
            out.verdict = Decision::Verdict::impossible;
            out.witness_value = minus_root.sign() <= 0 ? minus_root : plus_root;
            return out;
        }
        Decision constructed = decide(plus_root);
        constructed.stability = true;
        return constructed;
    }

    // Degree >= 3: the stability test is decisive only in the negative.
    if (!out.stability) {
        out.verdict = Decision::Verdict::impossible;
        out.witness_text = "nonpositive-real-part-root";
        return out;
    }
    out.verdict = Decision::Verdict::undecided;
    return out;
}

std::string decision_report(const Decision& d) {
    switch (d.verdict) {
        case Decision::Verdict::possible:
            return "POSSIBLE " + std::to_string(d.dissection ? d.dissection->parts.size() : 0);
        case Decision::Verdict::impossible:
            return "IMPOSSIBLE witness=" +
                   (d.witness_value ? format_number(*d.witness_value) : d.witness_text);
        case Decision::Verdict::undecided:
            return std::string("UNDECIDED stability=") + (d.stability ? "true" : "false");
    }
    throw InternalError("unreachable");
}

}  // namespace sqt
