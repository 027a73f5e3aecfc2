#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gzp/errors.hpp"

namespace gzp {

/// One value per vertex; index i-1 holds the value at vertex i.
using Signal = Eigen::VectorXd;
using ComplexSignal = Eigen::VectorXcd;

/// Directed edge between 1-based vertex ids.
struct Edge {
    int from = 0;
    int to = 0;
    double weight = 1.0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// =========================================================================
// Digraph — simple weighted directed graph, immutable after construction
// =========================================================================
//
// Vertex ids are 1-based in the public interface. Duplicate edges and zero
// weights are rejected; self-loops are allowed here (a padded single-vertex
// graph closes onto itself) but not in Dag.
class Digraph {
public:
    Digraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        if (n_ < 1) throw ValidationError("vertex count must be positive");
        out_.assign(n_, {});
        in_.assign(n_, {});
        by_pair_.reserve(edges_.size());
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const Edge& e = edges_[i];
            if (e.from < 1 || e.from > n_ || e.to < 1 || e.to > n_)
                throw ValidationError("edge (" + std::to_string(e.from) + ", " +
                                      std::to_string(e.to) + ") out of range 1.." +
                                      std::to_string(n_));
            if (e.weight == 0.0) throw ZeroWeightError(e.from, e.to);
            auto [it, inserted] = by_pair_.emplace(key(e.from, e.to), i);
            if (!inserted) throw DuplicateEdgeError(e.from, e.to);
            out_[e.from - 1].push_back(e.to);
            in_[e.to - 1].push_back(e.from);
        }
        for (auto& v : out_) std::sort(v.begin(), v.end());
        for (auto& v : in_) std::sort(v.begin(), v.end());
    }

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Out-neighbours of u / in-neighbours of v, ascending.
    const std::vector<int>& successors(int u) const { return out_[u - 1]; }
    const std::vector<int>& predecessors(int v) const { return in_[v - 1]; }

    int out_degree(int u) const { return static_cast<int>(out_[u - 1].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[v - 1].size()); }

    bool has_edge(int u, int v) const { return by_pair_.count(key(u, v)) != 0; }

    /// Weight of edge (u, v); zero if the edge is absent.
    double edge_weight(int u, int v) const {
        auto it = by_pair_.find(key(u, v));
        return it == by_pair_.end() ? 0.0 : edges_[it->second].weight;
    }

    /// Adjacency matrix A with A(u, v) = weight of edge (u, v): row u lists
    /// the successors of vertex u.
    Eigen::MatrixXd adjacency_matrix() const {
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
        for (const Edge& e : edges_) a(e.from - 1, e.to - 1) = e.weight;
        return a;
    }

    /// Backward shift y = A x, evaluated edge-by-edge.
    Signal shift(const Signal& x) const {
        if (x.size() != n_) throw LengthMismatchError(n_, x.size());
        Signal y = Signal::Zero(n_);
        for (const Edge& e : edges_) y(e.from - 1) += e.weight * x(e.to - 1);
        return y;
    }

private:
    static std::uint64_t key(int u, int v) {
        return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
    }

    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    std::unordered_map<std::uint64_t, std::size_t> by_pair_;
};

// =========================================================================
// Dag — validated directed acyclic graph
// =========================================================================

class Dag : public Digraph {
public:
    Dag(int n, std::vector<Edge> edges) : Digraph(n, check_self_loops(std::move(edges))) {
        topo_ = toposort_or_throw();
    }

    /// Topological order (1-based ids), deterministic: among the vertices
    /// available at each step the lowest id goes first.
    const std::vector<int>& topological_order() const { return topo_; }

    /// Vertices with in-degree 0, ascending.
    std::vector<int> sources() const {
        std::vector<int> s;
        for (int v = 1; v <= vertex_count(); ++v)
            if (in_degree(v) == 0) s.push_back(v);
        return s;
    }

    /// Vertices with out-degree 0, ascending.
    std::vector<int> sinks() const {
        std::vector<int> s;
        for (int v = 1; v <= vertex_count(); ++v)
            if (out_degree(v) == 0) s.push_back(v);
        return s;
    }

    /// Smallest m with A^m = 0: longest directed path length + 1, by DP over
    /// the topological order. For an N-vertex path this equals N.
    int nilpotency_index() const {
        std::vector<int> longest(vertex_count(), 0); // longest path ending at v, in edges
        int best = 0;
        for (int v : topo_) {
            for (int u : predecessors(v))
                longest[v - 1] = std::max(longest[v - 1], longest[u - 1] + 1);
            best = std::max(best, longest[v - 1]);
        }
        return best + 1;
    }

    /// The unique Hamiltonian path, when one exists. A DAG has a Hamiltonian
    /// path iff its topological order is unique, i.e. Kahn's algorithm sees
    /// exactly one available vertex at every step.
    std::optional<std::vector<int>> hamiltonian_path() const {
        std::vector<int> indeg(vertex_count());
        std::priority_queue<int, std::vector<int>, std::greater<>> ready;
        for (int v = 1; v <= vertex_count(); ++v) {
            indeg[v - 1] = in_degree(v);
            if (indeg[v - 1] == 0) ready.push(v);
        }
        std::vector<int> order;
        order.reserve(vertex_count());
        while (!ready.empty()) {
            if (ready.size() > 1) return std::nullopt; // two candidates: order not total
            int v = ready.top();
            ready.pop();
            order.push_back(v);
            for (int w : successors(v))
                if (--indeg[w - 1] == 0) ready.push(w);
        }
        for (std::size_t i = 0; i + 1 < order.size(); ++i)
            if (!has_edge(order[i], order[i + 1])) return std::nullopt;
        return order;
    }

    /// True iff every vertex pair is ordered by reachability; for DAGs this
    /// is equivalent to the existence of a Hamiltonian path.
    bool is_connected() const { return hamiltonian_path().has_value(); }

private:
    static std::vector<Edge> check_self_loops(std::vector<Edge> edges) {
        for (const Edge& e : edges)
            if (e.from == e.to) throw SelfLoopError(e.from);
        return edges;
    }

    std::vector<int> toposort_or_throw() const {
        std::vector<int> indeg(vertex_count());
        std::priority_queue<int, std::vector<int>, std::greater<>> ready;
        for (int v = 1; v <= vertex_count(); ++v) {
            indeg[v - 1] = in_degree(v);
            if (indeg[v - 1] == 0) ready.push(v);
        }
        std::vector<int> order;
        order.reserve(vertex_count());
        while (!ready.empty()) {
            int v = ready.top();
            ready.pop();
            order.push_back(v);
            for (int w : successors(v))
                if (--indeg[w - 1] == 0) ready.push(w);
        }
        if (static_cast<int>(order.size()) != vertex_count()) throw CycleError(find_cycle());
        return order;
    }

    // Extracts one explicit directed cycle (smallest-id DFS) as the witness.
    std::vector<int> find_cycle() const {
        std::vector<int> state(vertex_count(), 0); // 0 new, 1 on stack, 2 done
        std::vector<int> parent(vertex_count(), 0);
        for (int start = 1; start <= vertex_count(); ++start) {
            if (state[start - 1] != 0) continue;
            std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
            state[start - 1] = 1;
            while (!stack.empty()) {
                auto& [v, next] = stack.back();
                if (next < successors(v).size()) {
                    int w = successors(v)[next++];
                    if (state[w - 1] == 0) {
                        state[w - 1] = 1;
                        parent[w - 1] = v;
                        stack.emplace_back(w, 0);
                    } else if (state[w - 1] == 1) {
                        std::vector<int> cycle{w};
                        for (int u = v; u != w; u = parent[u - 1]) cycle.push_back(u);
                        std::reverse(cycle.begin() + 1, cycle.end());
                        return cycle;
                    }
                } else {
                    state[v - 1] = 2;
                    stack.pop_back();
                }
            }
        }
        return {}; // unreachable when called on a cyclic graph
    }

    std::vector<int> topo_;
};

/// Builds a validated Dag from an explicit edge list.
inline Dag dag_from_edge_list(int n, std::vector<Edge> edges) {
    return Dag(n, std::move(edges));
}

// =========================================================================
// Renumbering
// =========================================================================

struct Renumbered {
    Dag dag;
    std::vector<int> old_to_new; // old_to_new[i-1] is the new id of old vertex i
};

/// Relabels a connected DAG by Hamiltonian-path position, making its
/// adjacency matrix upper triangular with a nonzero super-diagonal.
inline Renumbered renumber_by_hamiltonian(const Dag& dag) {
    auto path = dag.hamiltonian_path();
    if (!path) throw NotConnectedError();
    std::vector<int> old_to_new(dag.vertex_count());
    for (int pos = 0; pos < dag.vertex_count(); ++pos) old_to_new[(*path)[pos] - 1] = pos + 1;
    std::vector<Edge> edges;
    edges.reserve(dag.edges().size());
    for (const Edge& e : dag.edges())
        edges.push_back({old_to_new[e.from - 1], old_to_new[e.to - 1], e.weight});
    return {Dag(dag.vertex_count(), std::move(edges)), std::move(old_to_new)};
}

} // namespace gzp
