#pragma once

#include <functional>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "polynomial.hpp"
#include "ratfunc.hpp"

namespace sqt {

/// Resistor between two nodes. `part` ties the edge back to the dissection
/// part it came from (-1 for hand-built networks).
template <class F>
struct NetworkEdge {
    int u;  // top node: current flows u -> v
    int v;  // bottom node
    F resistance;
    int part = -1;
};

/// Multigraph with exact edge resistances and a unit-voltage battery between
/// source and sink.
template <class F>
struct Network {
    int node_count = 0;
    std::vector<NetworkEdge<F>> edges;
    int source = 0;
    int sink = 0;
};

/// Exact solution of the Kirchhoff system with potential(source) = 1,
/// potential(sink) = 0.
template <class F>
struct CircuitSolution {
    std::vector<F> potential;
    std::vector<F> edge_current;  // (potential(u) - potential(v)) / resistance
    F battery_current;            // net current leaving the source
    F resistance;                 // 1 / battery_current
};

namespace detail {

inline bool field_is_zero(const Rat& x) { return sign_of(x) == 0; }
inline bool field_is_zero(const QuadExt& x) { return x.is_zero(); }
inline bool field_is_zero(const RationalFunction& x) { return x.is_zero(); }

}  // namespace detail

/// Structural checks shared by every field: index ranges, no self loops,
/// source != sink, nonzero resistances, connectedness.
template <class F>
void check_network_topology(const Network<F>& net) {
    if (net.node_count < 2) throw DomainError("network needs at least two nodes");
    if (net.source == net.sink) throw DomainError("source and sink must differ");
    if (net.source < 0 || net.source >= net.node_count || net.sink < 0 ||
        net.sink >= net.node_count)
        throw DomainError("source or sink out of range");
    if (net.edges.empty()) throw DomainError("network has no edges");

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(net.node_count));
    for (const auto& e : net.edges) {
        if (e.u < 0 || e.u >= net.node_count || e.v < 0 || e.v >= net.node_count)
            throw DomainError("edge endpoint out of range");
        if (e.u == e.v) throw DomainError("self loops are not allowed");
        if (detail::field_is_zero(e.resistance)) throw DomainError("zero resistance");
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }

    std::vector<char> seen(static_cast<std::size_t>(net.node_count), 0);
    std::vector<int> stack{net.source};
    seen[static_cast<std::size_t>(net.source)] = 1;
    while (!stack.empty()) {
        const int n = stack.back();
        stack.pop_back();
        for (int m : adj[static_cast<std::size_t>(n)]) {
            if (!seen[static_cast<std::size_t>(m)]) {
                seen[static_cast<std::size_t>(m)] = 1;
                stack.push_back(m);
            }
        }
    }
    for (char s : seen)
        if (!s) throw DomainError("network is not connected");
}

/// Positivity check on top of the topology checks (sign only exists for
/// QuadExt resistances; symbolic networks skip it).
void check_network(const Network<QuadExt>& net);

/// Solves A x = rhs by Gaussian elimination over an exact field, picking the
/// first row with a nonzero pivot entry. InternalError on singular systems.
template <class F>
std::vector<F> solve_linear_system(std::vector<std::vector<F>> a, std::vector<F> rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && detail::field_is_zero(a[pivot][col])) ++pivot;
        if (pivot == n) throw InternalError("singular Kirchhoff system");
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(rhs[pivot], rhs[col]);
        }
        for (std::size_t row = col + 1; row < n; ++row) {
            if (detail::field_is_zero(a[row][col])) continue;
            const F factor = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] = a[row][k] - factor * a[col][k];
            rhs[row] = rhs[row] - factor * rhs[col];
        }
    }
    std::vector<F> x(n, F(Rat(0)));
    for (std::size_t i = n; i-- > 0;) {
        F acc = rhs[i];
        for (std::size_t k = i + 1; k < n; ++k) acc = acc - a[i][k] * x[k];
        x[i] = acc / a[i][i];
    }
    return x;
}

/// Node-potential solve: pins potential(source) = 1 and potential(sink) = 0,
/// imposes current conservation at every other node, and reads the circuit
/// resistance off the battery current.
template <class F>
CircuitSolution<F> solve(const Network<F>& net) {
    check_network_topology(net);

    const F zero = F(Rat(0));
    const F one = F(Rat(1));

    // Unknowns: potentials of the internal nodes.
    std::vector<int> unknown_index(static_cast<std::size_t>(net.node_count), -1);
    int k = 0;
    for (int n = 0; n < net.node_count; ++n)
        if (n != net.source && n != net.sink) unknown_index[static_cast<std::size_t>(n)] = k++;

    std::vector<std::vector<F>> a(static_cast<std::size_t>(k),
                                  std::vector<F>(static_cast<std::size_t>(k), zero));
    std::vector<F> rhs(static_cast<std::size_t>(k), zero);

    for (const auto& e : net.edges) {
        const F conductance = one / e.resistance;
        for (const auto& [node, other] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            const int row = unknown_index[static_cast<std::size_t>(node)];
            if (row < 0) continue;
            auto& arow = a[static_cast<std::size_t>(row)];
            arow[static_cast<std::size_t>(row)] = arow[static_cast<std::size_t>(row)] + conductance;
            const int col = unknown_index[static_cast<std::size_t>(other)];
            if (col >= 0) {
                arow[static_cast<std::size_t>(col)] = arow[static_cast<std::size_t>(col)] - conductance;
            } else if (other == net.source) {
                rhs[static_cast<std::size_t>(row)] = rhs[static_cast<std::size_t>(row)] + conductance;
            }
        }
    }

    const std::vector<F> solved = solve_linear_system(std::move(a), std::move(rhs));

    CircuitSolution<F> sol;
    sol.potential.assign(static_cast<std::size_t>(net.node_count), zero);
    sol.potential[static_cast<std::size_t>(net.source)] = one;
    for (int n = 0; n < net.node_count; ++n) {
        const int idx = unknown_index[static_cast<std::size_t>(n)];
        if (idx >= 0) sol.potential[static_cast<std::size_t>(n)] = solved[static_cast<std::size_t>(idx)];
    }

    sol.edge_current.reserve(net.edges.size());
    F battery = zero;
    for (const auto& e : net.edges) {
        const F current = (sol.potential[static_cast<std::size_t>(e.u)] -
                           sol.potential[static_cast<std::size_t>(e.v)]) /
                          e.resistance;
        sol.edge_current.push_back(current);
        if (e.u == net.source) battery = battery + current;
        if (e.v == net.source) battery = battery - current;
    }
    if (detail::field_is_zero(battery)) throw InternalError("zero battery current");
    sol.battery_current = battery;
    sol.resistance = one / battery;
    return sol;
}

/// Node assignment for the dissection <-> network correspondence: one node
/// per maximal horizontal segment of the union of all horizontal part edges
/// plus the target's top and bottom edges.
struct SegmentNodes {
    int node_count = 0;
    int source = 0;                              // target top edge
    int sink = 0;                                // target bottom edge
    std::vector<std::pair<int, int>> part_nodes; // (top node, bottom node) per part
};

/// Requires validate(d) == nullopt (DomainError otherwise).
SegmentNodes horizontal_segment_nodes(const Dissection& d);

/// Resistor network of a dissection: one edge per part from its top segment
/// to its bottom segment, resistance h/w; current flows top to bottom.
Network<QuadExt> network_from_dissection(const Dissection& d);

/// Circuit resistance of the dissection's network; equals target.h/target.w.
QuadExt resistance_of_dissection(const Dissection& d);

/// Same topology with every resistance conjugated. Requires every edge
/// resistance and its conjugate to be positive; the offending edge is named
/// otherwise (this is exactly the impossibility obstruction).
Network<QuadExt> conjugate_network(const Network<QuadExt>& net);

/// Algebraic certificate: solves the network with symbolic resistances
/// (t for parts with h/w = R, 1 for parts with h/w = 1/R) to express the
/// circuit resistance as rho(t) = p(t)/q(t), and returns the canonical
/// integer polynomial proportional to q(x^2)*x - p(x^2). It is nonzero and
/// vanishes at x = R. Requires a valid similar dissection of a square.
IntPoly certificate(const Dissection& d);

/// The symbolic resistance rho(t) used by `certificate`, exposed separately
/// so its structure can be inspected.
RationalFunction symbolic_resistance(const Dissection& d);

/// Debug dump, stable across runs: "nodes N source S sink T" then one line
/// "u v <resistance>" per edge.
template <class F>
std::string dump_network(const Network<F>& net, const std::function<std::string(const F&)>& fmt) {
    std::string out = "nodes " + std::to_string(net.node_count) + " source " +
                      std::to_string(net.source) + " sink " + std::to_string(net.sink) + "\n";
    for (const auto& e : net.edges)
        out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + fmt(e.resistance) + "\n";
    return out;
}

}  // namespace sqt
