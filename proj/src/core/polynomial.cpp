#include "polynomial.hpp"

#include <algorithm>

namespace sqt {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(Int c) { return IntPoly(std::vector<Int>{std::move(c)}); }

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPoly::leading() const {
    if (is_zero()) throw DomainError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly operator+(const IntPoly& p, const IntPoly& q) {
    std::vector<Int> c(std::max(p.coeffs_.size(), q.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i) + q.coeff(i);
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& p, const IntPoly& q) {
    std::vector<Int> c(std::max(p.coeffs_.size(), q.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i) - q.coeff(i);
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) return IntPoly();
    std::vector<Int> c(p.coeffs_.size() + q.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return IntPoly(std::move(c));
}

Int IntPoly::content() const {
    Int g(0);
    for (const Int& c : coeffs_) g = gcd(g, c);
    return g;
}

IntPoly IntPoly::canonical() const {
    if (is_zero()) return *this;
    Int g = content();
    if (leading() < 0) g = -g;
    std::vector<Int> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] / g;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::compose_square() const {
    if (is_zero()) return *this;
    std::vector<Int> c(2 * coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[2 * i] = coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::times_x(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Int> c(coeffs_.size() + k, Int(0));
    std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + static_cast<std::ptrdiff_t>(k));
    return IntPoly(std::move(c));
}

IntPoly IntPoly::reflected() const {
    std::vector<Int> c = coeffs_;
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return IntPoly(std::move(c));
}

std::string IntPoly::to_coeff_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += coeffs_[i].get_str();
    }
    return out;
}

std::string IntPoly::to_pretty_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const bool first = out.empty();
        if (c > 0 && !first) out += '+';
        if (c < 0) out += '-';
        const Int a = abs(c);
        if (a != 1 || i == 0) out += a.get_str();
        if (i >= 1) out += 'x';
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

IntPoly IntPoly::parse_coeff_string(std::string_view text) {
    std::vector<Int> coeffs;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string token(text.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
        // trim surrounding whitespace
        const auto b = token.find_first_not_of(" \t");
        const auto e = token.find_last_not_of(" \t");
        if (b == std::string::npos) throw ParseError("empty coefficient at position " + std::to_string(pos), pos);
        token = token.substr(b, e - b + 1);
        try {
            coeffs.emplace_back(token, 10);
        } catch (const std::invalid_argument&) {
            throw ParseError("bad integer '" + token + "' at position " + std::to_string(pos), pos);
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return IntPoly(std::move(coeffs));
}

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(const IntPoly& p) {
    coeffs_.reserve(p.coeffs().size());
    for (const Int& c : p.coeffs()) coeffs_.emplace_back(c);
}

RatPoly RatPoly::constant(Rat c) { return RatPoly(std::vector<Rat>{std::move(c)}); }

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rat& RatPoly::leading() const {
    if (is_zero()) throw DomainError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

RatPoly RatPoly::operator-() const {
    std::vector<Rat> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return RatPoly(std::move(c));
}

RatPoly operator+(const RatPoly& p, const RatPoly& q) {
    std::vector<Rat> c(std::max(p.coeffs_.size(), q.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i) + q.coeff(i);
    return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& p, const RatPoly& q) {
    std::vector<Rat> c(std::max(p.coeffs_.size(), q.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i) - q.coeff(i);
    return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& p, const RatPoly& q) {
    if (p.is_zero() || q.is_zero()) return RatPoly();
    std::vector<Rat> c(p.coeffs_.size() + q.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return RatPoly(std::move(c));
}

RatPoly RatPoly::operator*(const Rat& c) const {
    if (c == 0) return RatPoly();
    std::vector<Rat> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * c;
    return RatPoly(std::move(out));
}

RatPoly RatPoly::monic() const {
    if (is_zero()) throw DomainError("cannot make the zero polynomial monic");
    return *this * (Rat(1) / leading());
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& p, const RatPoly& q) {
    if (q.is_zero()) throw DomainError("polynomial division by zero");
    if (p.degree() < q.degree()) return {RatPoly(), p};
    std::vector<Rat> rem = p.coeffs_;
    std::vector<Rat> quot(static_cast<std::size_t>(p.degree() - q.degree()) + 1, Rat(0));
    const Rat& lead = q.leading();
    for (int k = p.degree() - q.degree(); k >= 0; --k) {
        const std::size_t top = static_cast<std::size_t>(k + q.degree());
        Rat factor = rem[top] / lead;
        quot[static_cast<std::size_t>(k)] = factor;
        if (factor == 0) continue;
        for (std::size_t i = 0; i < q.coeffs_.size(); ++i)
            rem[static_cast<std::size_t>(k) + i] -= factor * q.coeffs_[i];
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::gcd(RatPoly p, RatPoly q) {
    while (!q.is_zero()) {
        RatPoly r = divmod(p, q).second;
        p = std::move(q);
        q = std::move(r);
    }
    if (p.is_zero()) return p;
    return p.monic();
}

std::pair<IntPoly, Int> RatPoly::to_integer() const {
    Int lambda(1);
    for (const Rat& c : coeffs_) lambda = lcm(lambda, c.get_den());
    std::vector<Int> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        Rat scaled = coeffs_[i] * Rat(lambda);
        scaled.canonicalize();
        out[i] = scaled.get_num();
    }
    return {IntPoly(std::move(out)), lambda};
}

}  // namespace sqt
