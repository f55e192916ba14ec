#include "geometry.hpp"

#include <cctype>
#include <sstream>

namespace sqt {

namespace {

std::optional<Violation> check_sides(const Rect& r, int index) {
    if (r.w.sign() <= 0 || r.h.sign() <= 0) {
        Violation v{Violation::Kind::nonpositive_side, index, -1, ""};
        v.message = (index < 0 ? std::string("target") : "part " + std::to_string(index)) +
                    " has a nonpositive side";
        return v;
    }
    return std::nullopt;
}

bool contains(const Rect& outer, const Rect& inner) {
    return inner.x >= outer.x && inner.y >= outer.y && inner.right() <= outer.right() &&
           inner.top() <= outer.top();
}

// Open-interior intersection test; touching boundaries do not count.
bool interiors_overlap(const Rect& a, const Rect& b) {
    return a.x < b.right() && b.x < a.right() && a.y < b.top() && b.y < a.top();
}

}  // namespace

std::optional<Violation> validate(const Dissection& d) {
    if (auto v = check_sides(d.target, -1)) return v;
    for (std::size_t i = 0; i < d.parts.size(); ++i)
        if (auto v = check_sides(d.parts[i], static_cast<int>(i))) return v;

    for (std::size_t i = 0; i < d.parts.size(); ++i) {
        if (!contains(d.target, d.parts[i])) {
            Violation v{Violation::Kind::part_outside, static_cast<int>(i), -1, ""};
            v.message = "part " + std::to_string(i) + " lies outside the target";
            return v;
        }
    }

    for (std::size_t i = 0; i < d.parts.size(); ++i) {
        for (std::size_t j = i + 1; j < d.parts.size(); ++j) {
            if (interiors_overlap(d.parts[i], d.parts[j])) {
                Violation v{Violation::Kind::overlap, static_cast<int>(i), static_cast<int>(j), ""};
                v.message = "parts " + std::to_string(i) + " and " + std::to_string(j) +
                            " have overlapping interiors";
                return v;
            }
        }
    }

    QuadExt total(0);
    for (const Rect& p : d.parts) total += p.area();
    if (total != d.target.area()) {
        Violation v{Violation::Kind::area_mismatch, -1, -1,
                    "sum of part areas differs from the target area"};
        return v;
    }
    return std::nullopt;
}

std::variant<AspectReport, SimilarityMismatch> similarity(const Dissection& d) {
    AspectReport report;
    report.orientation.reserve(d.parts.size());

    auto part_ratio = [](const Rect& r) -> std::pair<QuadExt, Orientation> {
        const int cmp = (r.w - r.h).sign();
        if (cmp == 0) return {QuadExt(1), Orientation::square};
        if (cmp > 0) return {r.w / r.h, Orientation::wide};
        return {r.h / r.w, Orientation::tall};
    };

    for (std::size_t i = 0; i < d.parts.size(); ++i) {
        auto [ratio, orient] = part_ratio(d.parts[i]);
        if (i == 0) {
            report.ratio = ratio;
        } else if (ratio != report.ratio) {
            return SimilarityMismatch{0, static_cast<int>(i)};
        }
        report.orientation.push_back(orient);
    }
    return report;
}

Dissection transpose(const Dissection& d) {
    auto flip = [](const Rect& r) { return Rect{r.y, r.x, r.h, r.w}; };
    Dissection out;
    out.target = flip(d.target);
    out.parts.reserve(d.parts.size());
    for (const Rect& p : d.parts) out.parts.push_back(flip(p));
    return out;
}

Dissection scale(const Dissection& d, const QuadExt& fx, const QuadExt& fy) {
    if (fx.sign() <= 0 || fy.sign() <= 0) throw DomainError("scale factors must be positive");
    auto map = [&](const Rect& r) { return Rect{r.x * fx, r.y * fy, r.w * fx, r.h * fy}; };
    Dissection out;
    out.target = map(d.target);
    out.parts.reserve(d.parts.size());
    for (const Rect& p : d.parts) out.parts.push_back(map(p));
    return out;
}

namespace {

// Tracks the single irrational radicand permitted per file.
struct RadicandGuard {
    std::int64_t d = 1;

    void admit(const QuadExt& v, std::size_t line) {
        if (v.is_rational()) return;
        if (d == 1) {
            d = v.radicand();
        } else if (d != v.radicand()) {
            throw ParseError("line " + std::to_string(line) + ": inconsistent radicands sqrt(" +
                                 std::to_string(d) + ") and sqrt(" + std::to_string(v.radicand()) +
                                 ")",
                             line);
        }
    }
};

Rect parse_rect_fields(const std::vector<std::string>& fields, std::size_t line,
                       RadicandGuard& guard) {
    QuadExt c[4];
    for (int i = 0; i < 4; ++i) {
        try {
            c[i] = parse_number(fields[static_cast<std::size_t>(i) + 1]);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line) + ": " + e.what(), line);
        }
        guard.admit(c[i], line);
    }
    return Rect{c[0], c[1], c[2], c[3]};
}

std::vector<std::string> split_fields(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i > start) out.emplace_back(s.substr(start, i - start));
    }
    return out;
}

}  // namespace

Dissection read_dissection(std::string_view text) {
    Dissection d;
    RadicandGuard guard;
    bool have_target = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        ++line_no;
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        const std::vector<std::string> fields = split_fields(line);
        if (fields.empty()) continue;

        if (fields[0] == "target") {
            if (have_target)
                throw ParseError("line " + std::to_string(line_no) + ": duplicate target line",
                                 line_no);
            if (fields.size() != 5)
                throw ParseError("line " + std::to_string(line_no) +
                                     ": expected 'target <x> <y> <w> <h>'",
                                 line_no);
            d.target = parse_rect_fields(fields, line_no, guard);
            have_target = true;
        } else if (fields[0] == "part") {
            if (!have_target)
                throw ParseError("line " + std::to_string(line_no) +
                                     ": 'part' before 'target'",
                                 line_no);
            if (fields.size() != 5)
                throw ParseError("line " + std::to_string(line_no) +
                                     ": expected 'part <x> <y> <w> <h>'",
                                 line_no);
            d.parts.push_back(parse_rect_fields(fields, line_no, guard));
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown directive '" +
                                 fields[0] + "'",
                             line_no);
        }
    }
    if (!have_target) throw ParseError("missing target line", line_no);
    if (d.parts.empty()) throw ParseError("dissection has no parts", line_no);
    return d;
}

std::string write_dissection(const Dissection& d) {
    std::string out;
    auto emit = [&out](const char* tag, const Rect& r) {
        out += tag;
        out += ' ';
        out += format_number(r.x) + ' ' + format_number(r.y) + ' ' + format_number(r.w) + ' ' +
               format_number(r.h);
        out += '\n';
    };
    emit("target", d.target);
    for (const Rect& p : d.parts) emit("part", p);
    return out;
}

std::string to_svg(const Dissection& d, int px) {
    if (px <= 0) throw DomainError("pixel size must be positive");
    if (validate(d)) throw DomainError("cannot render an invalid dissection");

    const QuadExt scale_factor = QuadExt(px) / d.target.w;
    const QuadExt height = d.target.h * scale_factor;

    auto num = [](const QuadExt& v) { return format_number_approx(v, 12); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px << "\" height=\""
        << num(height) << "\" viewBox=\"0 0 " << px << " " << num(height) << "\">\n";
    for (const Rect& p : d.parts) {
        // SVG's y axis points down; flip relative to the target's top edge.
        const QuadExt sx = (p.x - d.target.x) * scale_factor;
        const QuadExt sy = (d.target.top() - p.top()) * scale_factor;
        svg << "  <rect x=\"" << num(sx) << "\" y=\"" << num(sy) << "\" width=\""
            << num(p.w * scale_factor) << "\" height=\"" << num(p.h * scale_factor)
            << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace sqt
