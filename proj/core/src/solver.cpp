#include "incdom/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "incdom/bounds.hpp"
#include "incdom/constructions.hpp"
#include "incdom/hypergraph.hpp"
#include "incdom/random.hpp"

namespace incdom {

const char* to_string(SolveMode m) { return m == SolveMode::Gamma ? "gamma" : "i"; }

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::UpperBoundOnly: return "upper_bound_only";
        case SolveStatus::Infeasible: return "infeasible";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

Mask permute_mask(Mask m, const std::vector<int>& perm) {
    if (perm.empty()) return m;
    Mask out = 0;
    for (Mask rest = m; rest != 0; rest &= rest - 1) out |= element_bit(perm[std::countr_zero(rest)]);
    return out;
}

// G_{l,k} with vertices indexed k-level first. Closed neighbourhoods are
// stored as rows of `words` 64-bit words.
class InclusionGraph {
public:
    InclusionGraph(int n, int l, int k, const std::vector<int>& perm) : n_(n), l_(l), k_(k) {
        const std::uint64_t nk = binomial(n, k), nl = binomial(n, l);
        lower_count_ = static_cast<int>(nk);
        count_ = static_cast<int>(nk + nl);
        words_ = (count_ + 63) / 64;
        sets_.reserve(static_cast<std::size_t>(count_));
        for (Mask m : KSubsets(n, k)) sets_.push_back(permute_mask(m, perm));
        for (Mask m : KSubsets(n, l)) sets_.push_back(permute_mask(m, perm));
        std::unordered_map<Mask, int> lower_index;
        lower_index.reserve(nk);
        for (int i = 0; i < lower_count_; ++i) lower_index.emplace(sets_[i], i);

        closed_.assign(static_cast<std::size_t>(count_) * words_, 0);
        nbrs_.assign(static_cast<std::size_t>(count_), {});
        for (int i = 0; i < count_; ++i) add(i, i);
        for (int j = lower_count_; j < count_; ++j) {
            for_each_subset_of_size(sets_[j], k, [&](Mask a) {
                const int i = lower_index.at(a);
                add(i, j);
                add(j, i);
            });
        }
        for (auto& row : nbrs_) std::sort(row.begin(), row.end());
    }

    int count() const { return count_; }
    int words() const { return words_; }
    int lower_count() const { return lower_count_; }
    Mask set(int i) const { return sets_[i]; }
    const std::uint64_t* closed(int i) const { return closed_.data() + static_cast<std::size_t>(i) * words_; }
    const std::vector<int>& closed_list(int i) const { return nbrs_[i]; }
    int n() const { return n_; }
    int l() const { return l_; }
    int k() const { return k_; }

    DomPair to_dompair(const std::vector<int>& chosen) const {
        std::vector<Mask> lo, up;
        for (int v : chosen) (v < lower_count_ ? lo : up).push_back(sets_[v]);
        return DomPair(SetFamily(n_, k_, std::move(lo)), SetFamily(n_, l_, std::move(up)));
    }

    std::vector<int> from_dompair(const DomPair& d) const {
        std::unordered_map<Mask, int> lo, up;
        for (int i = 0; i < count_; ++i) (i < lower_count_ ? lo : up).emplace(sets_[i], i);
        std::vector<int> out;
        for (Mask m : d.lower().masks()) out.push_back(lo.at(m));
        for (Mask m : d.upper().masks()) out.push_back(up.at(m));
        return out;
    }

private:
    void add(int row, int col) {
        closed_[static_cast<std::size_t>(row) * words_ + col / 64] |= std::uint64_t{1} << (col % 64);
        nbrs_[row].push_back(col);
    }

    int n_, l_, k_;
    int count_ = 0;
    int lower_count_ = 0;
    int words_ = 0;
    std::vector<Mask> sets_;
    std::vector<std::uint64_t> closed_;
    std::vector<std::vector<int>> nbrs_;
};

inline bool test_bit(const std::uint64_t* row, int i) { return ((row[i / 64] >> (i % 64)) & 1) != 0; }
inline void set_bit(std::uint64_t* row, int i) { row[i / 64] |= std::uint64_t{1} << (i % 64); }

class BranchAndBound {
public:
    BranchAndBound(const InclusionGraph& g, SolveMode mode, Clock::time_point deadline)
        : g_(g), mode_(mode), deadline_(deadline), words_(g.words()) {
        valid_.assign(static_cast<std::size_t>(words_), 0);
        for (int i = 0; i < g.count(); ++i) set_bit(valid_.data(), i);
        cover_.assign(static_cast<std::size_t>(g.count()), 0);
        used_.assign(static_cast<std::size_t>(words_), 0);
    }

    // The search never goes deeper than the incumbent size, which bounds the
    // per-depth state.
    void set_incumbent(std::vector<int> d) {
        best_ = std::move(d);
        best_size_ = best_.size();
        const std::size_t depth_cap = best_size_ + 2;
        dominated_.assign(depth_cap * words_, 0);
        forbidden_.assign(depth_cap * words_, 0);
        undominated_.assign(depth_cap * words_, 0);
    }

    /// Admissible bound on the number of further vertices needed at the root.
    std::size_t root_bound() {
        std::vector<std::uint64_t> undominated(valid_);
        std::size_t lb = 0;
        int branch = -1;
        bound(undominated.data(), forbidden_.data(), lb, branch);
        return lb;
    }

    void run() { search(0); }

    bool timed_out() const { return timed_out_; }
    std::uint64_t nodes() const { return nodes_; }
    const std::vector<int>& best() const { return best_; }

private:
    static constexpr std::size_t kInfeasible = std::numeric_limits<std::size_t>::max() / 4;

    // Combined bound: a greedy family of undominated vertices with pairwise
    // disjoint candidate sets needs one dominator each; and every chosen
    // vertex c can absorb at most one unit of sum_u 1/maxcover(u). Also picks
    // the branching vertex: fewest candidates, least index on ties.
    void bound(const std::uint64_t* undominated, const std::uint64_t* forbidden, std::size_t& lb, int& branch) {
        const int count = g_.count();
        for (int c = 0; c < count; ++c) {
            if (test_bit(forbidden, c)) {
                cover_[c] = 0;
                continue;
            }
            const std::uint64_t* row = g_.closed(c);
            int cov = 0;
            for (int w = 0; w < words_; ++w) cov += std::popcount(row[w] & undominated[w]);
            cover_[c] = cov;
        }
        std::fill(used_.begin(), used_.end(), 0);
        std::size_t packing = 0;
        double fractional = 0.0;
        int best_cands = std::numeric_limits<int>::max();
        branch = -1;
        for (int w = 0; w < words_; ++w) {
            for (std::uint64_t bits = undominated[w]; bits != 0; bits &= bits - 1) {
                const int u = w * 64 + std::countr_zero(bits);
                int cands = 0;
                int maxcov = 0;
                bool disjoint = true;
                for (int c : g_.closed_list(u)) {
                    if (test_bit(forbidden, c)) continue;
                    ++cands;
                    maxcov = std::max(maxcov, cover_[c]);
                    if (test_bit(used_.data(), c)) disjoint = false;
                }
                if (cands == 0) {
                    lb = kInfeasible;
                    return;
                }
                if (cands < best_cands) {
                    best_cands = cands;
                    branch = u;
                }
                fractional += 1.0 / maxcov;
                if (disjoint) {
                    ++packing;
                    for (int c : g_.closed_list(u))
                        if (!test_bit(forbidden, c)) set_bit(used_.data(), c);
                }
            }
        }
        lb = std::max(packing, static_cast<std::size_t>(std::ceil(fractional - 1e-9)));
    }

    void search(std::size_t depth) {
        ++nodes_;
        if ((nodes_ & 1023) == 0 && Clock::now() > deadline_) timed_out_ = true;
        if (timed_out_) return;

        std::uint64_t* dom = dominated_.data() + depth * words_;
        std::uint64_t* forb = forbidden_.data() + depth * words_;
        std::uint64_t* und = undominated_.data() + depth * words_;
        bool any = false;
        for (int w = 0; w < words_; ++w) {
            und[w] = valid_[w] & ~dom[w];
            any = any || und[w] != 0;
        }
        if (!any) {
            if (chosen_.size() < best_size_) {
                best_ = chosen_;
                best_size_ = chosen_.size();
            }
            return;
        }
        if (chosen_.size() + 1 >= best_size_) return;

        std::size_t lb = 0;
        int v = -1;
        bound(und, forb, lb, v);
        if (lb >= kInfeasible || chosen_.size() + lb >= best_size_) return;

        std::vector<std::pair<int, int>> cands;  // (-cover, index)
        for (int c : g_.closed_list(v))
            if (!test_bit(forb, c)) cands.emplace_back(-cover_[c], c);
        std::sort(cands.begin(), cands.end());

        std::uint64_t* child_dom = dom + words_;
        std::uint64_t* child_forb = forb + words_;
        for (auto [neg_cover, c] : cands) {
            if (chosen_.size() + 1 >= best_size_) break;
            const std::uint64_t* row = g_.closed(c);
            for (int w = 0; w < words_; ++w) {
                child_dom[w] = dom[w] | row[w];
                child_forb[w] = mode_ == SolveMode::Independent ? (forb[w] | row[w]) : forb[w];
            }
            set_bit(child_forb, c);
            chosen_.push_back(c);
            search(depth + 1);
            chosen_.pop_back();
            if (timed_out_) return;
            set_bit(forb, c);  // later siblings exclude c
        }
    }

    const InclusionGraph& g_;
    SolveMode mode_;
    Clock::time_point deadline_;
    int words_;
    std::vector<std::uint64_t> dominated_, forbidden_, undominated_, valid_, used_;
    std::vector<int> cover_;
    std::vector<int> chosen_, best_;
    std::size_t best_size_ = std::numeric_limits<std::size_t>::max();
    std::uint64_t nodes_ = 0;
    bool timed_out_ = false;
};

// Greedy (independent) dominating set: repeatedly take the allowed vertex
// covering the most undominated vertices.
std::vector<int> greedy_start(const InclusionGraph& g, SolveMode mode) {
    const int count = g.count();
    const int words = g.words();
    std::vector<std::uint64_t> dominated(static_cast<std::size_t>(words), 0);
    std::vector<char> blocked(static_cast<std::size_t>(count), 0);
    std::vector<int> chosen;
    int left = count;
    while (left > 0) {
        int best = -1, best_cov = 0;
        for (int c = 0; c < count; ++c) {
            if (blocked[c]) continue;
            int cov = 0;
            for (int u : g.closed_list(c)) cov += test_bit(dominated.data(), u) ? 0 : 1;
            if (cov > best_cov) {
                best_cov = cov;
                best = c;
            }
        }
        chosen.push_back(best);
        blocked[best] = 1;
        for (int u : g.closed_list(best)) {
            if (!test_bit(dominated.data(), u)) --left;
            set_bit(dominated.data(), u);
            if (mode == SolveMode::Independent) blocked[u] = 1;
        }
    }
    return chosen;
}

}  // namespace

SolveResult solve(int n, int l, int k, SolveMode mode, const SolveOptions& options) {
    if (!(1 <= k && k < l && l <= n && n <= kMaxGround)) throw std::invalid_argument("solve requires 1 <= k < l <= n <= 64");
    if (binomial(n, k) + binomial(n, l) > kSearchSpaceGuard)
        throw std::invalid_argument("instance exceeds the search-space guard of " + std::to_string(kSearchSpaceGuard) + " vertices");
    if (!options.ground_permutation.empty()) {
        auto p = options.ground_permutation;
        std::sort(p.begin(), p.end());
        for (int i = 0; i < n; ++i)
            if (static_cast<int>(p.size()) != n || p[i] != i + 1) throw std::invalid_argument("ground_permutation is not a permutation of [n]");
    }
    const auto start = Clock::now();
    const auto deadline = std::isfinite(options.budget_seconds)
                              ? start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(options.budget_seconds))
                              : Clock::time_point::max();

    const InclusionGraph g(n, l, k, options.ground_permutation);
    BranchAndBound bb(g, mode, deadline);

    std::vector<int> incumbent = greedy_start(g, mode);
    for (const DomPair& w : options.warm_starts) {
        if (w.ground() != n || w.l() != l || w.k() != k) throw std::invalid_argument("warm start is for a different instance");
        if (!verify_dominating(w).dominating) throw std::invalid_argument("warm start is not dominating");
        if (mode == SolveMode::Independent && !verify_independent(w).independent)
            throw std::invalid_argument("warm start is not independent");
        if (w.size() < incumbent.size()) incumbent = g.from_dompair(w);
    }
    bb.set_incumbent(incumbent);
    const std::size_t root_lb = bb.root_bound();
    bb.run();

    SolveResult r;
    r.witness = g.to_dompair(bb.best());
    r.size = r.witness.size();
    r.nodes_explored = bb.nodes();
    if (bb.timed_out()) {
        r.status = SolveStatus::UpperBoundOnly;
        r.lower_bound = std::min(root_lb, r.size);
    } else {
        r.status = SolveStatus::Optimal;
        r.lower_bound = r.size;
    }
    r.elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

std::vector<DomPair> enumerate_optimal_32(int n) {
    if (n < 3 || n > 6) throw std::invalid_argument("enumerate_optimal_32 covers 3 <= n <= 6; use sample_optimal_32 for larger n");
    const InclusionGraph g(n, 3, 2, {});
    const int count = g.count();  // <= 35
    std::vector<Mask> closed(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) closed[i] = g.closed(i)[0];
    const Mask all = ground_mask(count);
    const int target = static_cast<int>(bounds::gamma32(n));

    std::vector<DomPair> out;
    std::vector<int> chosen;
    for (Mask sel : KSubsets(count, target)) {
        Mask dom = 0;
        for (Mask rest = sel; rest != 0; rest &= rest - 1) dom |= closed[std::countr_zero(rest)];
        if (dom != all) continue;
        chosen.clear();
        for (Mask rest = sel; rest != 0; rest &= rest - 1) chosen.push_back(std::countr_zero(rest));
        out.push_back(g.to_dompair(chosen));
    }
    return out;
}

std::vector<NamedGraph> extremal_graphs_32(int n) {
    std::vector<NamedGraph> out;
    auto kp = [&](int s) { out.push_back({"K+_{" + std::to_string(s) + "," + std::to_string(n - s) + "}", k_plus(s, n)}); };
    switch (n % 4) {
        case 0: kp(n / 2); break;
        case 2: kp((n + 2) / 2); break;
        case 3: kp((n + 1) / 2); break;
        case 1:
            for (int two_s : {n - 1, n + 1, n + 3})
                if (two_s / 2 > 1 && two_s / 2 < n) kp(two_s / 2);
            if (n == 5) {
                out.push_back({"H5a", small_graph(SmallGraph::H5a)});
                out.push_back({"H5b", small_graph(SmallGraph::H5b)});
            }
            if (n == 9) out.push_back({"H9", small_graph(SmallGraph::H9)});
            break;
    }
    return out;
}

std::optional<std::string> classify_extremal_32(const Graph& h) {
    for (const auto& [name, g] : extremal_graphs_32(h.order()))
        if (isomorphic(h, g)) return name;
    return std::nullopt;
}

std::vector<DomPair> sample_optimal_32(int n, std::size_t count, std::uint64_t seed) {
    if (n < 3 || n > 9) throw std::invalid_argument("sample_optimal_32 covers 3 <= n <= 9");
    std::mt19937_64 rng(seed);
    const auto target = static_cast<std::size_t>(bounds::gamma32(n));
    std::set<std::pair<std::vector<Mask>, std::vector<Mask>>> seen;
    std::vector<DomPair> out;
    const std::size_t attempts = 4 * count + 8;
    for (std::size_t a = 0; a < attempts && out.size() < count; ++a) {
        SolveOptions opts;
        opts.ground_permutation = random_permutation(n, rng);
        const SolveResult r = solve(n, 3, 2, SolveMode::Gamma, opts);
        if (r.status != SolveStatus::Optimal || r.size != target) throw std::logic_error("sampled solve did not reach gamma32(n)");
        const DomPair& d = r.witness;
        auto key = std::make_pair(std::vector<Mask>(d.lower().masks().begin(), d.lower().masks().end()),
                                  std::vector<Mask>(d.upper().masks().begin(), d.upper().masks().end()));
        if (!seen.insert(std::move(key)).second) continue;
        if (!classify_extremal_32(graph_from_dompair(d))) throw std::logic_error("optimum whose graph is not in the extremal list");
        out.push_back(d);
    }
    return out;
}

ExhaustiveFResult exhaustive_graphs_f(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("exhaustive_graphs_f covers 1 <= n <= 7");
    std::vector<Edge> slots;
    for (int v = 2; v <= n; ++v)
        for (int u = 1; u < v; ++u) slots.push_back({u, v});
    const int m = static_cast<int>(slots.size());

    ExhaustiveFResult res;
    res.max_f_times_2 = std::numeric_limits<std::int64_t>::min();
    std::vector<std::vector<Mask>> best;
    std::vector<Mask> adj(static_cast<std::size_t>(n));
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code) {
        std::fill(adj.begin(), adj.end(), 0);
        for (std::uint64_t rest = code; rest != 0; rest &= rest - 1) {
            const Edge& e = slots[std::countr_zero(rest)];
            adj[e.u - 1] |= element_bit(e.v);
            adj[e.v - 1] |= element_bit(e.u);
        }
        std::int64_t edges = 0, t_sum = 0, e0 = 0;
        for (std::uint64_t rest = code; rest != 0; rest &= rest - 1) {
            const Edge& e = slots[std::countr_zero(rest)];
            const int t = cardinality(adj[e.u - 1] & adj[e.v - 1]);
            ++edges;
            t_sum += t;
            if (t == 0) ++e0;
        }
        const std::int64_t f2 = 2 * (edges - t_sum / 3) - e0;
        if (f2 > res.max_f_times_2) {
            res.max_f_times_2 = f2;
            best.clear();
            res.equality_clause_holds = true;
        }
        if (f2 == res.max_f_times_2) {
            best.push_back(adj);
            const bool clause = e0 == 0 || (n % 4 == 1 && e0 % 2 == 0);
            res.equality_clause_holds = res.equality_clause_holds && clause;
        }
    }
    res.labeled_maximizers = best.size();
    for (auto& a : best) {
        Graph g = Graph::from_adjacency(a);
        const bool fresh = std::none_of(res.maximizers.begin(), res.maximizers.end(), [&](const Graph& x) { return isomorphic(g, x); });
        if (fresh) res.maximizers.push_back(std::move(g));
    }
    return res;
}

}  // namespace incdom
