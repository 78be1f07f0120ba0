/* Quiver predicates and DOT export. */

#include "branchq/quiver.hpp"

#include <numeric>
#include <queue>
#include <stdexcept>

namespace branchq {

Quiver quiver_of(const BranchingMatrix& m) {
    Quiver q;
    q.vertices = m.row_labels;
    q.arrow_counts = m.entries;
    q.descriptor = QuiverDescriptor{m.family, m.n, m.params};
    return q;
}

namespace {

// vertices reachable from start along directed edges (transposed = false)
// or against them (transposed = true)
std::vector<char> reachable(const Quiver& q, int start, bool transposed) {
    const int n = q.vertex_count();
    std::vector<char> seen(n, 0);
    std::queue<int> work;
    seen[start] = 1;
    work.push(start);
    while (!work.empty()) {
        const int u = work.front();
        work.pop();
        for (int v = 0; v < n; ++v) {
            const Int& c = transposed ? q.arrow_counts[v][u] : q.arrow_counts[u][v];
            if (c > 0 && !seen[v]) {
                seen[v] = 1;
                work.push(v);
            }
        }
    }
    return seen;
}

} // namespace

bool is_strongly_connected(const Quiver& q) {
    const int n = q.vertex_count();
    if (n == 0) return false;
    const std::vector<char> fwd = reachable(q, 0, false);
    const std::vector<char> bwd = reachable(q, 0, true);
    for (int v = 0; v < n; ++v)
        if (!fwd[v] || !bwd[v]) return false;
    return true;
}

bool is_primitive(const Quiver& q) {
    // every directed cycle lies inside one strongly connected component;
    // within a component, gcd of cycle lengths = gcd over edges u->v of
    // dist(root,u) + 1 - dist(root,v) for any BFS distances from a root
    const int n = q.vertex_count();
    long long g = 0;
    std::vector<char> assigned(n, 0);
    for (int root = 0; root < n; ++root) {
        if (assigned[root]) continue;
        const std::vector<char> fwd = reachable(q, root, false);
        const std::vector<char> bwd = reachable(q, root, true);
        std::vector<char> comp(n, 0);
        for (int v = 0; v < n; ++v) comp[v] = fwd[v] && bwd[v];
        for (int v = 0; v < n; ++v)
            if (comp[v]) assigned[v] = 1;

        std::vector<long long> dist(n, -1);
        std::queue<int> work;
        dist[root] = 0;
        work.push(root);
        while (!work.empty()) {
            const int u = work.front();
            work.pop();
            for (int v = 0; v < n; ++v)
                if (comp[v] && q.arrow_counts[u][v] > 0 && dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    work.push(v);
                }
        }
        for (int u = 0; u < n; ++u) {
            if (!comp[u]) continue;
            for (int v = 0; v < n; ++v)
                if (comp[v] && q.arrow_counts[u][v] > 0)
                    g = std::gcd(g, dist[u] + 1 - dist[v]);
        }
    }
    return g == 1;
}

bool is_symmetric(const Quiver& q) {
    const int n = q.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (q.arrow_counts[i][j] != q.arrow_counts[j][i]) return false;
    return true;
}

SimplicityVerdict simplicity_certificate(const Quiver& q) {
    if (is_strongly_connected(q) && is_primitive(q) && is_symmetric(q))
        return SimplicityVerdict::Simple;
    return SimplicityVerdict::Inconclusive;
}

std::string to_dot(const Quiver& q) {
    std::string out = "digraph quiver {\n";
    const int n = q.vertex_count();
    for (int i = 0; i < n; ++i)
        out += "  v" + std::to_string(i) + " [label=\"" + label_text(q.vertices[i]) + "\"];\n";
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (q.arrow_counts[i][j] > 0)
                out += "  v" + std::to_string(i) + " -> v" + std::to_string(j) +
                       " [label=\"" + q.arrow_counts[i][j].str() + "\"];\n";
    out += "}\n";
    return out;
}

} // namespace branchq
