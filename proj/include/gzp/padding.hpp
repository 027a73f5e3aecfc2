#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "gzp/graph.hpp"

namespace gzp {

// =========================================================================
// PaddedDag — a DAG augmented with zero-signal vertices and a return path
// =========================================================================
//
// The internal graph contains exactly one directed cycle (the Hamiltonian
// cycle closed by the return path); removing the first return edge restores
// acyclicity.
struct AddedEdges {
    std::vector<Edge> connectivity;
    std::vector<Edge> return_path;
};

class PaddedDag {
public:
    PaddedDag(Digraph graph, int original_n, std::vector<int> added_vertices,
              AddedEdges added_edges, std::vector<int> original_map)
        : graph_(std::move(graph)),
          original_n_(original_n),
          added_vertices_(std::move(added_vertices)),
          added_edges_(std::move(added_edges)),
          original_map_(std::move(original_map)) {
        if (original_n_ < 1 || original_n_ > graph_.vertex_count())
            throw ValidationError("original vertex count out of range");
        if (original_n_ + static_cast<int>(added_vertices_.size()) != graph_.vertex_count())
            throw ValidationError("added vertex list inconsistent with graph size");
        if (static_cast<int>(original_map_.size()) != original_n_)
            throw ValidationError("original_map length must equal original vertex count");
        std::vector<bool> seen(graph_.vertex_count(), false);
        for (int id : original_map_) {
            if (id < 1 || id > graph_.vertex_count() || seen[id - 1])
                throw ValidationError("original_map is not an injection into the padded graph");
            seen[id - 1] = true;
        }
    }

    const Digraph& graph() const { return graph_; }
    int original_n() const { return original_n_; }
    const std::vector<int>& added_vertices() const { return added_vertices_; }
    const AddedEdges& added_edges() const { return added_edges_; }

    /// original_map()[i-1] is the padded-graph id of original vertex i.
    const std::vector<int>& original_map() const { return original_map_; }

    /// Embeds a length-original_n signal: original values at their mapped
    /// ids, zero on every added vertex.
    Signal zero_pad_signal(const Signal& x) const {
        if (x.size() != original_n_) throw LengthMismatchError(original_n_, x.size());
        Signal padded = Signal::Zero(graph_.vertex_count());
        for (int i = 0; i < original_n_; ++i) padded(original_map_[i] - 1) = x(i);
        return padded;
    }

    /// Inverse of the embedding: keeps the values at original vertices.
    Signal restrict_signal(const Signal& y) const {
        if (y.size() != graph_.vertex_count())
            throw LengthMismatchError(graph_.vertex_count(), y.size());
        Signal x(original_n_);
        for (int i = 0; i < original_n_; ++i) x(i) = y(original_map_[i] - 1);
        return x;
    }

private:
    Digraph graph_;
    int original_n_;
    std::vector<int> added_vertices_;
    AddedEdges added_edges_;
    std::vector<int> original_map_;
};

// =========================================================================
// Establishing connectivity
// =========================================================================

struct ConnectResult {
    Dag dag;                       // connected DAG containing the input
    std::vector<Edge> added_edges; // surviving connectivity edges, insertion order
    int iterations;                // main-loop iterations (== vertex count)
};

/// Connects a DAG by repeatedly chaining its current sources.
///
/// Each round lists the sources of the shrinking copy; if there are several
/// s1 < s2 < ... < sk they are linked by a path s1->s2->...->sk, after which
/// the head s1 (now the unique source) is removed. Finally the Hamiltonian
/// path h of the augmented graph is computed and every added edge not on h
/// is discarded; the surviving edges are exactly the links required for
/// connectivity.
inline ConnectResult connect_dag(const Dag& dag) {
    const int n = dag.vertex_count();
    std::vector<std::vector<int>> out(n); // successors incl. chain edges
    std::vector<int> indeg(n, 0);         // in-degree among remaining vertices
    for (int v = 1; v <= n; ++v) {
        out[v - 1] = dag.successors(v);
        indeg[v - 1] = dag.in_degree(v);
    }
    std::vector<bool> remaining(n, true);
    std::vector<Edge> chain_edges;
    int iterations = 0;
    for (int left = n; left > 0; --left) {
        ++iterations;
        std::vector<int> sources;
        for (int v = 1; v <= n; ++v)
            if (remaining[v - 1] && indeg[v - 1] == 0) sources.push_back(v);
        for (std::size_t i = 0; i + 1 < sources.size(); ++i) {
            chain_edges.push_back({sources[i], sources[i + 1], 1.0});
            out[sources[i] - 1].push_back(sources[i + 1]);
            ++indeg[sources[i + 1] - 1];
        }
        int head = sources.front();
        remaining[head - 1] = false;
        for (int w : out[head - 1])
            if (remaining[w - 1]) --indeg[w - 1];
    }

    std::vector<Edge> all_edges = dag.edges();
    all_edges.insert(all_edges.end(), chain_edges.begin(), chain_edges.end());
    Dag augmented(n, std::move(all_edges));
    auto ham = augmented.hamiltonian_path();
    if (!ham) throw Error("internal: source chaining failed to produce a Hamiltonian path");

    std::set<std::pair<int, int>> on_path;
    for (std::size_t i = 0; i + 1 < ham->size(); ++i)
        on_path.insert({(*ham)[i], (*ham)[i + 1]});
    std::vector<Edge> kept;
    for (const Edge& e : chain_edges)
        if (on_path.count({e.from, e.to})) kept.push_back(e);

    std::vector<Edge> final_edges = dag.edges();
    final_edges.insert(final_edges.end(), kept.begin(), kept.end());
    return {Dag(n, std::move(final_edges)), std::move(kept), iterations};
}

// =========================================================================
// Zero-padding
// =========================================================================

namespace detail {

/// Return path sink -> p1 -> ... -> pM -> source using fresh ids starting at
/// first_new; the first edge carries return_weight. M = 0 degenerates to the
/// single edge sink -> source.
inline std::vector<Edge> make_return_path(int sink, int source, int first_new, int m,
                                          double return_weight) {
    std::vector<Edge> path;
    if (m == 0) {
        path.push_back({sink, source, return_weight});
        return path;
    }
    path.push_back({sink, first_new, return_weight});
    for (int i = 0; i + 1 < m; ++i) path.push_back({first_new + i, first_new + i + 1, 1.0});
    path.push_back({first_new + m - 1, source, 1.0});
    return path;
}

inline std::vector<int> identity_map(int n) {
    std::vector<int> map(n);
    std::iota(map.begin(), map.end(), 1);
    return map;
}

} // namespace detail

/// Closes a connected DAG with M path vertices from its sink to its source.
/// The resulting adjacency matrix has the block form [[A, C], [D, J]]: C a
/// single entry at (sink, 1), D a single entry at (M, source), J the M x M
/// super-diagonal shift block.
inline PaddedDag zero_pad_connected(const Dag& dag, int m, double return_weight = 1.0) {
    if (m < 0) throw ValidationError("pad size must be nonnegative");
    auto ham = dag.hamiltonian_path();
    if (!ham) throw NotConnectedError();
    const int n = dag.vertex_count();
    const int source = ham->front();
    const int sink = ham->back();

    std::vector<int> added_vertices(m);
    std::iota(added_vertices.begin(), added_vertices.end(), n + 1);
    std::vector<Edge> return_path = detail::make_return_path(sink, source, n + 1, m, return_weight);

    std::vector<Edge> edges = dag.edges();
    edges.insert(edges.end(), return_path.begin(), return_path.end());
    return PaddedDag(Digraph(n + m, std::move(edges)), n, std::move(added_vertices),
                     {{}, std::move(return_path)}, detail::identity_map(n));
}

/// Sink-to-source closure without added vertices.
inline PaddedDag close_cycle(const Dag& dag, double return_weight = 1.0) {
    return zero_pad_connected(dag, 0, return_weight);
}

/// Zero-pads a general DAG: connects it, replaces each of the K surviving
/// connectivity edges by a path of M fresh vertices, then appends an M-vertex
/// return path. Vertex count grows to N + (K+1)M; connectivity paths are
/// numbered first (edge-insertion order), the return path last.
inline PaddedDag zero_pad_general(const Dag& dag, int m, double return_weight = 1.0) {
    if (m < 0) throw ValidationError("pad size must be nonnegative");
    ConnectResult connected = connect_dag(dag);
    auto ham = connected.dag.hamiltonian_path();
    const int n = dag.vertex_count();
    const int source = ham->front();
    const int sink = ham->back();

    std::vector<Edge> edges = dag.edges();
    std::vector<Edge> connectivity;
    int next_id = n + 1;
    for (const Edge& link : connected.added_edges) {
        if (m == 0) {
            connectivity.push_back(link);
        } else {
            connectivity.push_back({link.from, next_id, 1.0});
            for (int i = 0; i + 1 < m; ++i) connectivity.push_back({next_id + i, next_id + i + 1, 1.0});
            connectivity.push_back({next_id + m - 1, link.to, 1.0});
            next_id += m;
        }
    }
    std::vector<Edge> return_path = detail::make_return_path(sink, source, next_id, m, return_weight);
    next_id += m;

    const int total = next_id - 1;
    std::vector<int> added_vertices(total - n);
    std::iota(added_vertices.begin(), added_vertices.end(), n + 1);

    edges.insert(edges.end(), connectivity.begin(), connectivity.end());
    edges.insert(edges.end(), return_path.begin(), return_path.end());
    return PaddedDag(Digraph(total, std::move(edges)), n, std::move(added_vertices),
                     {std::move(connectivity), std::move(return_path)}, detail::identity_map(n));
}

} // namespace gzp
