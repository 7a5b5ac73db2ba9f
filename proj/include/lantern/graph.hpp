#pragma once

#include <map>
#include <string>
#include <utility>

#include "lantern/diagram.hpp"

namespace lantern {

// Undirected multigraph on vertices 1..vertex_count with edge multiplicities.
struct MultiGraph {
    int vertex_count = 0;
    std::map<std::pair<int, int>, long> edges;  // key (i, j) with i < j

    void add_edges(int u, int v, long multiplicity);
    long multiplicity(int u, int v) const;
    bool connected() const;
};

// The planar graph of a model diagram: each 0-framed circle becomes a vertex
// v_i, p_i edges join v_i and v_{i+1}, and q_i edges join v_i to the extra
// vertex v_{n+1}.
MultiGraph graph_from_model(const ModelDiagram& m);

// Exact spanning-tree count (matrix-tree theorem); 0 for disconnected graphs.
Int spanning_tree_count(const MultiGraph& g);

// Reduced weighted Laplacian with the root row/column deleted, negated so the
// form is negative definite; |det| equals the spanning-tree count.
IntMatrix goeritz_matrix(const MultiGraph& g, int root);

struct ConsistencyReport {
    Int det_linking;
    Int tree_count;
    Int det_goeritz;
    bool pass = false;
};

// |det linking_matrix| = spanning-tree count = |det Goeritz|, all exact.
ConsistencyReport consistency_check(const ModelDiagram& m);

std::string to_dot(const MultiGraph& g);

}  // namespace lantern
