#include "circuit.hpp"

#include <algorithm>
#include <map>

namespace sqt {

void check_network(const Network<QuadExt>& net) {
    check_network_topology(net);
    for (std::size_t i = 0; i < net.edges.size(); ++i) {
        if (net.edges[i].resistance.sign() <= 0)
            throw DomainError("edge " + std::to_string(i) + " has a nonpositive resistance");
    }
}

namespace {

struct EdgeEntry {
    QuadExt x1, x2;
    int part;  // -1 for the target
    bool top;
};

}  // namespace

SegmentNodes horizontal_segment_nodes(const Dissection& d) {
    if (auto v = validate(d)) throw DomainError("dissection is not a valid tiling: " + v->message);

    auto less = [](const QuadExt& a, const QuadExt& b) { return a < b; };
    std::map<QuadExt, std::vector<EdgeEntry>, decltype(less)> levels(less);

    auto add = [&levels](const Rect& r, int part) {
        levels[r.y].push_back({r.x, r.right(), part, false});
        levels[r.top()].push_back({r.x, r.right(), part, true});
    };
    add(d.target, -1);
    for (std::size_t i = 0; i < d.parts.size(); ++i) add(d.parts[i], static_cast<int>(i));

    SegmentNodes out;
    out.part_nodes.resize(d.parts.size(), {-1, -1});

    int next_node = 0;
    for (auto& [y, entries] : levels) {
        std::sort(entries.begin(), entries.end(), [](const EdgeEntry& a, const EdgeEntry& b) {
            const int cmp = (a.x1 - b.x1).sign();
            if (cmp != 0) return cmp < 0;
            return (a.x2 - b.x2).sign() < 0;
        });
        // Sweep left to right, merging intervals that overlap or touch into
        // one maximal segment = one electrical node.
        int node = -1;
        QuadExt segment_end;
        for (const EdgeEntry& e : entries) {
            if (node < 0 || e.x1 > segment_end) {
                node = next_node++;
                segment_end = e.x2;
            } else if (e.x2 > segment_end) {
                segment_end = e.x2;
            }
            if (e.part < 0) {
                (e.top ? out.source : out.sink) = node;
            } else {
                auto& slot = out.part_nodes[static_cast<std::size_t>(e.part)];
                (e.top ? slot.first : slot.second) = node;
            }
        }
    }
    out.node_count = next_node;
    return out;
}

Network<QuadExt> network_from_dissection(const Dissection& d) {
    const SegmentNodes nodes = horizontal_segment_nodes(d);
    Network<QuadExt> net;
    net.node_count = nodes.node_count;
    net.source = nodes.source;
    net.sink = nodes.sink;
    net.edges.reserve(d.parts.size());
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
        const Rect& p = d.parts[i];
        net.edges.push_back({nodes.part_nodes[i].first, nodes.part_nodes[i].second, p.h / p.w,
                             static_cast<int>(i)});
    }
    return net;
}

QuadExt resistance_of_dissection(const Dissection& d) {
    return solve(network_from_dissection(d)).resistance;
}

Network<QuadExt> conjugate_network(const Network<QuadExt>& net) {
    Network<QuadExt> out;
    out.node_count = net.node_count;
    out.source = net.source;
    out.sink = net.sink;
    out.edges.reserve(net.edges.size());
    for (std::size_t i = 0; i < net.edges.size(); ++i) {
        const auto& e = net.edges[i];
        if (e.resistance.sign() <= 0)
            throw DomainError("edge " + std::to_string(i) + " has nonpositive resistance " +
                              format_number(e.resistance));
        const QuadExt conj = e.resistance.conjugate();
        if (conj.sign() <= 0)
            throw DomainError("edge " + std::to_string(i) +
                              " has nonpositive conjugate resistance " + format_number(conj));
        out.edges.push_back({e.u, e.v, conj, e.part});
    }
    return out;
}

RationalFunction symbolic_resistance(const Dissection& d) {
    if (auto v = validate(d)) throw DomainError("dissection is not a valid tiling: " + v->message);
    const auto sim = similarity(d);
    if (!std::holds_alternative<AspectReport>(sim))
        throw DomainError("parts are not similar rectangles");
    const AspectReport& report = std::get<AspectReport>(sim);

    if (d.target.w != d.target.h) throw DomainError("certificate requires a square target");

    const SegmentNodes nodes = horizontal_segment_nodes(d);
    const RationalFunction t = RationalFunction::variable();
    const RationalFunction one(Rat(1));

    // Stretching the square vertically by R turns parts with h/w = R into
    // resistance R^2 and parts with h/w = 1/R into squares of resistance 1.
    // Working over Q(t) with t in place of R^2 keeps the solve rational.
    Network<RationalFunction> net;
    net.node_count = nodes.node_count;
    net.source = nodes.source;
    net.sink = nodes.sink;
    net.edges.reserve(d.parts.size());
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
        const bool is_tall = report.orientation[i] != Orientation::wide;
        net.edges.push_back({nodes.part_nodes[i].first, nodes.part_nodes[i].second,
                             is_tall ? t : one, static_cast<int>(i)});
    }
    return solve(net).resistance;
}

IntPoly certificate(const Dissection& d) {
    const RationalFunction rho = symbolic_resistance(d);

    // rho = p/q with a joint scaling so that P/Q = p/q over the integers.
    const auto [p_int, p_lambda] = rho.num().to_integer();
    const auto [q_int, q_lambda] = rho.den().to_integer();
    const IntPoly p_scaled = p_int * IntPoly::constant(q_lambda);
    const IntPoly q_scaled = q_int * IntPoly::constant(p_lambda);

    const IntPoly result =
        (q_scaled.compose_square().times_x(1) - p_scaled.compose_square()).canonical();
    if (result.is_zero()) throw InternalError("certificate polynomial vanished");

    const AspectReport report = std::get<AspectReport>(similarity(d));
    if (!result.evaluate(report.ratio).is_zero())
        throw InternalError("certificate polynomial does not vanish at the ratio");
    return result;
}

}  // namespace sqt
