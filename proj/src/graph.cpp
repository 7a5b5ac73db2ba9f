#include "lantern/graph.hpp"

#include <stdexcept>
#include <vector>

namespace lantern {

void MultiGraph::add_edges(int u, int v, long multiplicity) {
    if (u < 1 || v < 1 || u > vertex_count || v > vertex_count || u == v)
        throw std::invalid_argument("bad edge endpoints");
    if (multiplicity < 0)
        throw std::invalid_argument("edge multiplicity must be nonnegative");
    if (multiplicity == 0)
        return;
    auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
    edges[key] += multiplicity;
}

long MultiGraph::multiplicity(int u, int v) const {
    auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
    auto it = edges.find(key);
    return it == edges.end() ? 0 : it->second;
}

bool MultiGraph::connected() const {
    if (vertex_count == 0)
        return false;
    std::vector<bool> seen(vertex_count + 1, false);
    std::vector<int> stack{1};
    seen[1] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& [key, mult] : edges) {
            int other = -1;
            if (key.first == v)
                other = key.second;
            else if (key.second == v)
                other = key.first;
            if (other > 0 && !seen[other]) {
                seen[other] = true;
                ++reached;
                stack.push_back(other);
            }
        }
    }
    return reached == vertex_count;
}

MultiGraph graph_from_model(const ModelDiagram& m) {
    make_model(m.n, m.p, m.q);  // parameter range check
    MultiGraph g;
    g.vertex_count = m.n + 1;
    for (int i = 1; i < m.n; ++i)
        g.add_edges(i, i + 1, m.p[i - 1]);
    for (int i = 1; i <= m.n; ++i)
        g.add_edges(i, m.n + 1, m.q[i - 1]);
    return g;
}

static IntMatrix weighted_laplacian(const MultiGraph& g) {
    const int V = g.vertex_count;
    IntMatrix L(V, IntVector(V, 0));
    for (const auto& [key, mult] : g.edges) {
        int a = key.first - 1, b = key.second - 1;
        L[a][a] += mult;
        L[b][b] += mult;
        L[a][b] -= mult;
        L[b][a] -= mult;
    }
    return L;
}

Int spanning_tree_count(const MultiGraph& g) {
    if (g.vertex_count == 0)
        return 0;
    if (g.vertex_count == 1)
        return 1;
    if (!g.connected())
        return 0;
    IntMatrix L = weighted_laplacian(g);
    IntMatrix R(g.vertex_count - 1, IntVector(g.vertex_count - 1));
    for (int i = 0; i + 1 < g.vertex_count; ++i)
        for (int j = 0; j + 1 < g.vertex_count; ++j)
            R[i][j] = L[i][j];
    Int d = exact_det(R);
    return d >= 0 ? d : Int(-d);
}

IntMatrix goeritz_matrix(const MultiGraph& g, int root) {
    if (root < 1 || root > g.vertex_count)
        throw std::invalid_argument("goeritz root out of range");
    IntMatrix L = weighted_laplacian(g);
    IntMatrix R;
    for (int i = 0; i < g.vertex_count; ++i) {
        if (i == root - 1)
            continue;
        IntVector row;
        for (int j = 0; j < g.vertex_count; ++j)
            if (j != root - 1)
                row.push_back(-L[i][j]);
        R.push_back(std::move(row));
    }
    return R;
}

ConsistencyReport consistency_check(const ModelDiagram& m) {
    ConsistencyReport rep;
    Int dl = exact_det(linking_matrix(m).matrix);
    rep.det_linking = dl >= 0 ? dl : Int(-dl);
    MultiGraph g = graph_from_model(m);
    rep.tree_count = spanning_tree_count(g);
    Int dg = exact_det(goeritz_matrix(g, m.n + 1));
    rep.det_goeritz = dg >= 0 ? dg : Int(-dg);
    rep.pass = rep.det_linking == rep.tree_count && rep.tree_count == rep.det_goeritz;
    return rep;
}

std::string to_dot(const MultiGraph& g) {
    std::string out = "graph model {\n";
    for (int v = 1; v <= g.vertex_count; ++v)
        out += "  v" + std::to_string(v) + ";\n";
    for (const auto& [key, mult] : g.edges)
        for (long k = 0; k < mult; ++k)
            out += "  v" + std::to_string(key.first) + " -- v" +
                   std::to_string(key.second) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace lantern
