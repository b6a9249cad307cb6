#include "incdom/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "incdom/errors.hpp"
#include "incdom/hypergraph.hpp"

namespace incdom {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxGround) throw std::invalid_argument("graph order must be in [0, 64]");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) {
        if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
            throw std::invalid_argument("edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " outside [1,n]");
        if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
        adj_[e.u - 1] |= element_bit(e.v);
        adj_[e.v - 1] |= element_bit(e.u);
    }
}

Graph Graph::from_adjacency(std::vector<Mask> adj) {
    Graph g(static_cast<int>(adj.size()));
    const Mask all = ground_mask(g.n_);
    for (int v = 1; v <= g.n_; ++v) {
        const Mask nb = adj[v - 1];
        if ((nb & ~all) != 0) throw std::invalid_argument("neighbour outside [n]");
        if ((nb & element_bit(v)) != 0) throw std::invalid_argument("loop at vertex " + std::to_string(v));
        for (Mask rest = nb; rest != 0; rest &= rest - 1) {
            const int u = std::countr_zero(rest) + 1;
            if ((adj[u - 1] & element_bit(v)) == 0) throw std::invalid_argument("adjacency is not symmetric");
        }
    }
    g.adj_ = std::move(adj);
    return g;
}

Graph Graph::from_pairs(const SetFamily& pairs) {
    if (pairs.uniformity() != 2) throw std::invalid_argument("edge family must consist of 2-sets");
    Graph g(pairs.ground());
    for (Mask p : pairs.masks()) {
        const int u = std::countr_zero(p) + 1;
        const int v = max_element(p);
        g.adj_[u - 1] |= element_bit(v);
        g.adj_[v - 1] |= element_bit(u);
    }
    return g;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (Mask m : adj_) twice += static_cast<std::size_t>(cardinality(m));
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 1; u <= n_; ++u) {
        const Mask higher = adj_[u - 1] & ~ground_mask(u);
        for (Mask rest = higher; rest != 0; rest &= rest - 1) out.push_back({u, std::countr_zero(rest) + 1});
    }
    return out;
}

SetFamily Graph::edge_family() const {
    std::vector<Mask> pairs;
    for (const Edge& e : edges()) pairs.push_back(element_bit(e.u) | element_bit(e.v));
    return SetFamily(n_, 2, std::move(pairs));
}

SetFamily Graph::non_edge_family() const { return edge_family().complement(); }

Graph Graph::relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size differs from graph order");
    std::vector<Mask> adj(static_cast<std::size_t>(n_), 0);
    for (int v = 1; v <= n_; ++v) {
        Mask img = 0;
        for (Mask rest = adj_[v - 1]; rest != 0; rest &= rest - 1) img |= element_bit(perm[std::countr_zero(rest)]);
        adj[perm[v - 1] - 1] = img;
    }
    return from_adjacency(std::move(adj));
}

SetFamily triangles(const Graph& g) {
    std::vector<Mask> tri;
    const int n = g.order();
    for (int x = 1; x <= n; ++x) {
        const Mask up_x = g.neighbors(x) & ~ground_mask(x);
        for (Mask rx = up_x; rx != 0; rx &= rx - 1) {
            const int y = std::countr_zero(rx) + 1;
            const Mask common = up_x & g.neighbors(y) & ~ground_mask(y);
            for (Mask rz = common; rz != 0; rz &= rz - 1) tri.push_back(element_bit(x) | element_bit(y) | (rz & (~rz + 1)));
        }
    }
    return SetFamily::from_masks_dedup(n, 3, std::move(tri));
}

namespace {

int common_neighbors(const Graph& g, int x, int y) { return cardinality(g.neighbors(x) & g.neighbors(y)); }

}  // namespace

EdgeStats edge_stats(const Graph& g) {
    EdgeStats s;
    s.vertex_triangles.assign(static_cast<std::size_t>(g.order()), 0);
    std::vector<int> twice(static_cast<std::size_t>(g.order()), 0);
    for (const Edge& e : g.edges()) {
        const int t = common_neighbors(g, e.u, e.v);
        s.edge_triangles.emplace_back(e, t);
        twice[e.u - 1] += t;
        twice[e.v - 1] += t;
    }
    // each triangle at x is counted by both of its edges through x
    for (std::size_t i = 0; i < twice.size(); ++i) s.vertex_triangles[i] = twice[i] / 2;
    return s;
}

std::vector<Edge> uncovered_edges(const Graph& g) {
    std::vector<Edge> out;
    for (const Edge& e : g.edges())
        if (common_neighbors(g, e.u, e.v) == 0) out.push_back(e);
    return out;
}

GraphCertificate certificate(const Graph& g) {
    GraphCertificate c;
    const int n = g.order();
    c.n = n;
    const Mask all = ground_mask(n);

    std::int64_t sum_t_edges = 0;
    std::int64_t edge_term = 0;  // sum over E of (t-1)(d(x)+d(y)-2t-2)
    for (const Edge& e : g.edges()) {
        const std::int64_t t = common_neighbors(g, e.u, e.v);
        const std::int64_t dsum = g.degree(e.u) + g.degree(e.v);
        ++c.edge_count;
        sum_t_edges += t;
        edge_term += (t - 1) * (dsum - 2 * t - 2);
        if (t == 0) {
            c.uncovered_edges.push_back(e);
        } else {
            ++c.covered_edge_count;
            c.beta_times_2 += (t - 1) * (dsum - 2 * t - 2);
        }
    }
    c.triangle_count = sum_t_edges / 3;

    const SetFamily tris = triangles(g);
    for (Mask tri : tris.masks()) {
        Mask rest = tri;
        const int x = std::countr_zero(rest) + 1;
        rest &= rest - 1;
        const int y = std::countr_zero(rest) + 1;
        rest &= rest - 1;
        const int z = std::countr_zero(rest) + 1;
        const Mask nx = g.neighbors(x), ny = g.neighbors(y), nz = g.neighbors(z);
        const Mask outside = all & ~tri;
        c.alpha += cardinality(nx & ny & nz & outside) + cardinality(~(nx | ny | nz) & outside);
    }

    std::int64_t sum_d2 = 0;
    for (int x = 1; x <= n; ++x) {
        const std::int64_t d = g.degree(x);
        sum_d2 += d * d;
        const std::int64_t dev = (n + 1) - 2 * d;
        c.gamma_times_4 += dev * dev;
    }

    const std::int64_t e0 = static_cast<std::int64_t>(c.uncovered_edges.size());
    c.f_times_2 = 2 * (c.edge_count - c.triangle_count) - e0;
    c.first_step_holds = sum_d2 + edge_term == 2 * n * c.triangle_count + 2 * c.edge_count - 2 * c.alpha;

    const std::int64_t nn = n;
    const std::int64_t lhs = 8 * nn * (c.edge_count - c.triangle_count) - 4 * nn * e0;
    const std::int64_t rhs = nn * (nn + 1) * (nn + 1) - 8 * e0 - 8 * c.alpha - 4 * c.beta_times_2 - c.gamma_times_4;
    c.final_inequality_holds = lhs <= rhs;
    return c;
}

std::int64_t f_times_2(const Graph& g) {
    std::int64_t e = 0, t = 0, e0 = 0;
    for (const Edge& ed : g.edges()) {
        const int c = common_neighbors(g, ed.u, ed.v);
        ++e;
        t += c;
        if (c == 0) ++e0;
    }
    return 2 * (e - t / 3) - e0;
}

Graph graph_from_dompair(const DomPair& d) {
    if (d.l() != 3 || d.k() != 2) throw std::invalid_argument("H(D) is defined for G_{3,2} only");
    return Graph::from_pairs(shadow(d.upper()).minus(d.lower()));
}

namespace {

void require_dominating(const DomPair& d) {
    const auto r = verify_dominating(d);
    if (!r.dominating) throw PreconditionError("set is not dominating", r.witness ? r.witness->to_string() : std::string{});
}

DomPair without(const DomPair& d, bool lower_level, Mask member) {
    auto drop = [member](const SetFamily& f) {
        std::vector<Mask> rest;
        rest.reserve(f.size());
        for (Mask m : f.masks())
            if (m != member) rest.push_back(m);
        return SetFamily(f.ground(), f.uniformity(), std::move(rest));
    };
    return lower_level ? DomPair(drop(d.lower()), d.upper()) : DomPair(d.lower(), drop(d.upper()));
}

}  // namespace

bool is_minimal_dominating(const DomPair& d) {
    require_dominating(d);
    for (Mask m : d.lower().masks())
        if (verify_dominating(without(d, true, m)).dominating) return false;
    for (Mask m : d.upper().masks())
        if (verify_dominating(without(d, false, m)).dominating) return false;
    return true;
}

DomPair minimalize(const DomPair& d) {
    require_dominating(d);
    DomPair cur = d;
    for (Mask m : d.lower().masks()) {
        DomPair next = without(cur, true, m);
        if (verify_dominating(next).dominating) cur = std::move(next);
    }
    for (Mask m : d.upper().masks()) {
        DomPair next = without(cur, false, m);
        if (verify_dominating(next).dominating) cur = std::move(next);
    }
    return cur;
}

std::vector<Edge> matching_set_M(const Graph& g) {
    std::vector<Edge> out;
    for (const Edge& e : g.edges()) {
        const Mask nx = g.neighbors(e.u) & ~element_bit(e.v);
        const Mask ny = g.neighbors(e.v) & ~element_bit(e.u);
        const bool same = nx == ny;
        const bool by_count = 2 * common_neighbors(g, e.u, e.v) == g.degree(e.u) + g.degree(e.v) - 2;
        if (same != by_count) throw std::logic_error("inconsistent characterisations of M");
        if (same) out.push_back(e);
    }
    return out;
}

namespace {

struct IsoSearch {
    const Graph& a;
    const Graph& b;
    int n;
    std::vector<std::uint64_t> inv_a, inv_b;
    std::vector<int> order;      // vertices of a in assignment order
    std::vector<int> map;        // a-vertex -> b-vertex (0 = unmapped)
    Mask used_b = 0;
    Mask mapped_a = 0;

    bool extend(std::size_t depth) {
        if (depth == order.size()) return true;
        const int v = order[depth];
        Mask expected = 0;  // images of v's mapped neighbours
        for (Mask rest = a.neighbors(v) & mapped_a; rest != 0; rest &= rest - 1)
            expected |= element_bit(map[std::countr_zero(rest)]);
        for (int w = 1; w <= n; ++w) {
            if ((used_b & element_bit(w)) != 0 || inv_b[w - 1] != inv_a[v - 1]) continue;
            if ((b.neighbors(w) & used_b) != expected) continue;
            map[v - 1] = w;
            used_b |= element_bit(w);
            mapped_a |= element_bit(v);
            if (extend(depth + 1)) return true;
            used_b &= ~element_bit(w);
            mapped_a &= ~element_bit(v);
            map[v - 1] = 0;
        }
        return false;
    }
};

std::vector<std::uint64_t> vertex_invariants(const Graph& g) {
    const auto stats = edge_stats(g);
    std::vector<std::uint64_t> inv(static_cast<std::size_t>(g.order()));
    for (int v = 1; v <= g.order(); ++v) {
        // degree, triangle count, and the sum of neighbour degrees
        std::uint64_t nsum = 0;
        for (Mask rest = g.neighbors(v); rest != 0; rest &= rest - 1) nsum += static_cast<std::uint64_t>(g.degree(std::countr_zero(rest) + 1));
        inv[v - 1] = (static_cast<std::uint64_t>(g.degree(v)) << 48) | (static_cast<std::uint64_t>(stats.vertex_triangles[v - 1]) << 24) | nsum;
    }
    return inv;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g1, const Graph& g2) {
    if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return std::nullopt;
    const int n = g1.order();
    IsoSearch s{g1, g2, n, vertex_invariants(g1), vertex_invariants(g2), {}, std::vector<int>(static_cast<std::size_t>(n), 0)};
    {
        auto sa = s.inv_a, sb = s.inv_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    // Assignment order: repeatedly take the vertex with the most already
    // ordered neighbours (rarest invariant first on ties).
    Mask placed = 0;
    for (int step = 0; step < n; ++step) {
        int best = 0;
        long best_key = -1;
        for (int v = 1; v <= n; ++v) {
            if ((placed & element_bit(v)) != 0) continue;
            const long links = cardinality(g1.neighbors(v) & placed);
            const long rarity = std::count(s.inv_a.begin(), s.inv_a.end(), s.inv_a[v - 1]);
            const long key = links * 128 + (64 - rarity);
            if (key > best_key) {
                best_key = key;
                best = v;
            }
        }
        s.order.push_back(best);
        placed |= element_bit(best);
    }
    if (!s.extend(0)) return std::nullopt;
    // verify
    for (const Edge& e : g1.edges())
        if (!g2.adjacent(s.map[e.u - 1], s.map[e.v - 1])) throw std::logic_error("isomorphism search returned a non-isomorphism");
    return s.map;
}

}  // namespace incdom
