#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "plumbing/matrix.hpp"

namespace plumbing {

/// Domain-level failure (bad input graph, non definite form, ...).
/// The CLI maps these to exit code 1.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct GraphError : DomainError {
    using DomainError::DomainError;
};
struct NotNegativeDefinite : DomainError {
    using DomainError::DomainError;
};

/// Decorated plumbing tree. Vertices carry Euler numbers; arrows are valency
/// bumps used only by the plane-curve semigroup construction.
struct PlumbingGraph {
    std::vector<std::string> ids;
    std::vector<long long> euler;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> arrows;  // vertex indices, at most one arrow per vertex

    std::map<std::string, int> index_of;
    std::vector<std::vector<int>> adj;

    int n() const { return static_cast<int>(ids.size()); }
    int valency(int v) const;  // arrows count toward valency
    int arrow_count(int v) const;
};

/// Parses either the JSON object format or the line-oriented text format.
PlumbingGraph parse_plumbing(const std::string& text);

/// Tree check (connected, |E| = |V|-1, no duplicate edges). Throws GraphError.
void validate_tree(const PlumbingGraph& g);

/// Minimality warnings: vertices with valency <= 2, no arrow and b > -2.
std::vector<std::string> minimality_warnings(const PlumbingGraph& g);

/// Unique tree path from v to w, inclusive on both ends.
std::vector<int> tree_path(const PlumbingGraph& g, int v, int w);

enum class PathKind { Closed, HalfOpenLeft, HalfOpenRight, Open };

/// Path with endpoint conventions: [v,w], (v,w], [v,w) or (v,w).
/// The degenerate open path (v,v) is reported through `open_self`.
struct PathSet {
    std::vector<int> vertices;
    bool open_self = false;  // (v,v): det convention 0
};
PathSet path(const PlumbingGraph& g, int v, int w, PathKind kind);

/// Determinant of the negation of the intersection submatrix on `vs`.
/// Empty set has determinant 1.
BigInt subgraph_det(const PlumbingGraph& g, const std::vector<int>& vs);
BigInt subgraph_det(const PlumbingGraph& g, const PathSet& p);

/// Determinant of the full graph minus the (closed) path [v,w].
BigInt det_complement_of_path(const PlumbingGraph& g, int v, int w);

/// Vertex classification: nodes, ends, chains, legs, node order and the
/// chain-connector map n_{n'}.
struct Classification {
    std::vector<int> nodes;  // canonical order (rooted at lexicographically least node id)
    std::vector<int> ends;
    std::vector<std::vector<int>> chains;  // maximal paths of non-node vertices

    std::vector<std::vector<int>> node_ends;   // E_n, indexed like `nodes`
    std::vector<std::vector<int>> node_nodes;  // N_n, values are node positions
    std::vector<int> delta_n;                  // full valency of each node
    std::vector<int> delta_nN;                 // delta_{n,N}
    std::vector<int> delta_nE;                 // delta_{n,E}
    std::vector<int> nhat;                     // node positions with delta_{n,N} >= 2

    /// Ordered node pairs (i, j) with node i < node j in the partial order,
    /// i.e. i is on the root side of the chain between them.
    struct ChainPair {
        int lo, hi;                  // node positions
        std::vector<int> between;    // open chain (lo,hi), ordered from lo to hi
        int connector;               // vertex n_{n'}: adjacent to lo, or hi itself if empty
    };
    std::vector<ChainPair> pairs;

    /// Leg of an end u: vertices of (n,u], ordered from the node.
    struct Leg {
        int node_pos;
        int end;
        std::vector<int> vertices;
    };
    std::vector<Leg> legs;  // indexed like `ends`

    int node_pos_of(int vertex) const;  // -1 if not a node
    int pair_index(int lo_pos, int hi_pos) const;

    std::vector<int> node_pos_lookup;  // vertex -> node position or -1
};

Classification classify(const PlumbingGraph& g);

}  // namespace plumbing
