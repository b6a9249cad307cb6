#include "incdom_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "incdom/incdom.hpp"

#ifndef INCDOM_VERSION
#define INCDOM_VERSION "0.0.0"
#endif

namespace incdom::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Context {
    json inputs = json::object();
    json outputs = json::object();
    json timing = json::object();
    int exit_code = kOk;
    std::string status = "ok";
    std::string error;
};

int default_threads() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

fs::path resolve_output(const std::string& requested, const std::string& fallback) {
    fs::path p = requested.empty() ? fs::path(fallback) : fs::path(requested);
    if (p.is_relative()) {
        if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') p = fs::path(dir) / p;
    }
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    return p;
}

template <class T>
std::string write_artifact(Context& ctx, const std::string& requested, const std::string& fallback, const T& object) {
    const fs::path p = resolve_output(requested, fallback);
    std::ofstream f(p);
    if (!f) throw UsageError("cannot write '" + p.string() + "'");
    f << io::to_text(object);
    if (!f) throw UsageError("failed writing '" + p.string() + "'");
    ctx.outputs["file"] = p.string();
    return p.string();
}

json f_value(std::int64_t f_times_2) {
    if (f_times_2 % 2 == 0) return f_times_2 / 2;
    return static_cast<double>(f_times_2) / 2.0;
}

json edge_list(const std::vector<Edge>& edges) {
    json a = json::array();
    for (const Edge& e : edges) a.push_back({e.u, e.v});
    return a;
}

void graph_summary(Context& ctx, const Graph& g) {
    const GraphCertificate c = certificate(g);
    ctx.outputs["n"] = g.order();
    ctx.outputs["edges"] = c.edge_count;
    ctx.outputs["triangles"] = c.triangle_count;
    ctx.outputs["uncovered_edges"] = c.uncovered_edges.size();
    ctx.outputs["f_times_2"] = c.f_times_2;
    ctx.outputs["f"] = f_value(c.f_times_2);
    ctx.outputs["lemma2_bound"] = bounds::lemma2_rhs(std::max(1, g.order()));
    ctx.outputs["attains_bound"] = c.f_times_2 == 2 * bounds::lemma2_rhs(std::max(1, g.order()));
}

void dompair_summary(Context& ctx, const DomPair& d, int threads) {
    ctx.outputs["n"] = d.ground();
    ctx.outputs["l"] = d.l();
    ctx.outputs["k"] = d.k();
    ctx.outputs["size"] = d.size();
    ctx.outputs["lower_count"] = d.lower().size();
    ctx.outputs["upper_count"] = d.upper().size();
    ctx.outputs["dominating"] = verify_dominating(d, threads).dominating;
    ctx.outputs["independent"] = verify_independent(d).independent;
}

void wellcovered_summary(Context& ctx, const KGraph& h) {
    ctx.outputs["hypergraph_edges"] = h.edge_count();
    ctx.outputs["cliques"] = cliques(h).size();
    ctx.outputs["e_minus_c"] = e_minus_c(h);
    ctx.outputs["well_covered"] = is_well_covered(h).well_covered;
}

std::string witness_string(const std::optional<VertexSet>& w) { return w ? w->to_string() : std::string{}; }

// -- construct ---------------------------------------------------------------

struct ConstructArgs {
    int n = 0, s = 0, v = 0, m = 0, k = 0, a = 0, b = 0;
    double alpha = 0.0, p = 0.0;
    std::vector<int> parts;
    std::string packer = "default";
    std::uint64_t seed = 0;
    std::string out;
    std::string edges_out;
};

void construct_graph(Context& ctx, const ConstructArgs& args, const std::string& name, const Graph& g) {
    graph_summary(ctx, g);
    write_artifact(ctx, args.out, name + ".g", g);
}

void construct_wellcovered(Context& ctx, const ConstructArgs& args, const std::string& name, const KGraph& h, int threads) {
    wellcovered_summary(ctx, h);
    const DomPair d = dompair_from_wellcovered(h);
    dompair_summary(ctx, d, threads);
    const std::int64_t expected = static_cast<std::int64_t>(binomial(h.ground(), h.uniformity())) - e_minus_c(h);
    ctx.outputs["size_identity_holds"] = static_cast<std::int64_t>(d.size()) == expected;
    if (!args.edges_out.empty()) {
        const fs::path p = resolve_output(args.edges_out, "");
        std::ofstream f(p);
        f << io::to_text(h.edges());
        ctx.outputs["edges_file"] = p.string();
    }
    write_artifact(ctx, args.out, name + ".dp", d);
}

Packer choose_packer(const std::string& name) {
    if (name == "default") return default_packer;
    if (name == "greedy") return [](int m, int k) { return greedy_packing(m, k).family; };
    if (name == "sts") return [](int m, int k) {
        if (k != 3) throw UsageError("--packer sts requires k = 3");
        return steiner_triple_system(m);
    };
    throw UsageError("unknown packer '" + name + "'");
}

void add_construct(CLI::App& app, Context& ctx, ConstructArgs& args, const int& threads, std::function<void()>& action) {
    auto* construct = app.add_subcommand("construct", "Build an explicit object and write it to a file");
    construct->require_subcommand(1);

    auto out_opts = [&](CLI::App* sub, bool hypergraph) {
        sub->add_option("--out,-o", args.out, "Output file (relative paths honour " + std::string(kOutputDirEnv) + ")");
        if (hypergraph) sub->add_option("--edges-out", args.edges_out, "Also write the well-covered k-graph as a set family");
    };

    auto* kplus = construct->add_subcommand("kplus", "K+_{s,n-s}");
    kplus->add_option("--n", args.n, "Order")->required();
    kplus->add_option("--s", args.s, "Size of the matched side")->required();
    out_opts(kplus, false);
    kplus->final_callback([&] {
        action = [&] {
            ctx.inputs = {{"n", args.n}, {"s", args.s}};
            const Graph g = k_plus(args.s, args.n);
            construct_graph(ctx, args, "kplus_" + std::to_string(args.s) + "_" + std::to_string(args.n), g);
            ctx.outputs["matching_set_M"] = matching_set_M(g).size();
        };
    });

    for (const char* name : {"h5a", "h5b", "h9"}) {
        auto* sub = construct->add_subcommand(name, std::string("The small extremal graph ") + name);
        out_opts(sub, false);
        sub->final_callback([&, name] {
            action = [&, name] { construct_graph(ctx, args, name, small_graph(parse_small_graph(name))); };
        });
    }

    auto* star = construct->add_subcommand("star", "Star-completed minimum dominating set of G_{3,2} (n = 1 mod 4)");
    star->add_option("--n", args.n, "Order")->required();
    out_opts(star, false);
    star->final_callback([&] {
        action = [&] {
            ctx.inputs = {{"n", args.n}};
            const DomPair d = star_completed_dompair(args.n);
            dompair_summary(ctx, d, threads);
            ctx.outputs["gamma32"] = bounds::gamma32(args.n);
            const Graph h = graph_from_dompair(d);
            ctx.outputs["graph_edges"] = h.edge_count();
            ctx.outputs["graph_class"] = classify_extremal_32(h).value_or("");
            write_artifact(ctx, args.out, "star_" + std::to_string(args.n) + ".dp", d);
        };
    });

    auto* sts = construct->add_subcommand("sts", "Steiner triple system (v = 1 or 3 mod 6)");
    sts->add_option("--v", args.v, "Order")->required();
    out_opts(sts, false);
    sts->final_callback([&] {
        action = [&] {
            ctx.inputs = {{"v", args.v}};
            const SetFamily f = steiner_triple_system(args.v);
            ctx.outputs["triples"] = f.size();
            ctx.outputs["valid"] = is_steiner_triple_system(f);
            write_artifact(ctx, args.out, "sts_" + std::to_string(args.v) + ".sf", f);
        };
    });

    auto* packing = construct->add_subcommand("packing", "Greedy packing of k-subsets of [m]");
    packing->add_option("--m", args.m, "Ground set size")->required();
    packing->add_option("--k", args.k, "Uniformity")->required();
    out_opts(packing, false);
    packing->final_callback([&] {
        action = [&] {
            ctx.inputs = {{"m", args.m}, {"k", args.k}};
            const PackingResult r = greedy_packing(args.m, args.k);
            ctx.outputs["size"] = r.family.size();
            ctx.outputs["graham_target"] = r.graham_target;
            ctx.outputs["is_packing"] = is_packing(r.family);
            write_artifact(ctx, args.out, "packing_" + std::to_string(args.m) + "_" + std::to_string(args.k) + ".sf", r.family);
        };
    });

    auto* base = construct->add_subcommand("base", "Single-layer well-covered k-graph on A u B");
    base->add_option("--a", args.a, "|A|")->required();
    base->add_option("--b", args.b, "|B|")->required();
    base->add_option("--k", args.k, "Uniformity")->required();
    base->add_option("--packer", args.packer, "default | sts | greedy");
    out_opts(base, true);
    base->final_callback([&] {
        action = [&] {
            ctx.inputs = {{"a", args.a}, {"b", args.b}, {"k", args.k}, {"packer", args.packer}};
            const SetFamily packing_family = choose_packer(args.packer)(args.a, args.k);
            ctx.outputs["packing_size"] = packing_family.size();
            construct_wellcovered(ctx, args, "base", base_wellcovered(args.a, args.b, args.k, packing_family), threads);
        };
    });

    auto* layered = construct->add_subcommand("layered", "Layered well-covered k-graph");
    layered->add_option("--n", args.n, "Order");
    layered->add_option("--k", args.k, "Uniformity")->required();
    auto* alpha_opt = layered->add_option("--alpha", args.alpha, "Split ratio (default: the optimal ratio for k)");
    layered->add_option("--parts", args.parts, "Explicit part sizes, e.g. 19,7,4")->delimiter(',')->excludes(alpha_opt);
    layered->add_option("--packer", args.packer, "default | sts | greedy");
    out_opts(layered, true);
    layered->final_callback([&] {
        action = [&] {
            LayeredPlan plan;
            if (!args.parts.empty()) {
                plan = layered_plan_from_parts(args.k, args.parts);
                if (args.n != 0 && args.n != plan.n) throw UsageError("--n disagrees with the sum of --parts");
                ctx.inputs = {{"k", args.k}, {"parts", args.parts}, {"packer", args.packer}};
            } else {
                if (args.n == 0) throw UsageError("layered needs --n or --parts");
                const double a = args.alpha > 0.0 ? args.alpha : bounds::alpha_star(args.k);
                plan = layered_plan(args.n, args.k, a);
                ctx.inputs = {{"n", args.n}, {"k", args.k}, {"alpha", a}, {"packer", args.packer}};
                ctx.outputs["asymptotic_rate"] = bounds::layered_rate(args.k, a);
            }
            const LayeredResult r = layered_wellcovered(plan, choose_packer(args.packer));
            ctx.outputs["part_sizes"] = plan.part_sizes;
            json layers = json::array();
            for (const auto& l : r.layers)
                layers.push_back({{"a", l.a_size}, {"b", l.b_size}, {"packing", l.packing_size}, {"edges", l.edges}, {"cliques", l.cliques}});
            ctx.outputs["layers"] = layers;
            const double total = static_cast<double>(binomial(plan.n, plan.k));
            ctx.outputs["e_minus_c_ratio"] = static_cast<double>(e_minus_c(r.hypergraph)) / total;
            construct_wellcovered(ctx, args, "layered", r.hypergraph, threads);
        };
    });

    for (const char* name : {"fig4-left", "fig4-right"}) {
        const bool left = std::string(name) == "fig4-left";
        auto* sub = construct->add_subcommand(name, left ? "Independent dominating set of G_{4,2} on [9], size 17"
                                                         : "Minimum dominating set of G_{4,2} on [9], size 15");
        sub->add_option("--n", args.n, "Order (only 9 is available)");
        out_opts(sub, false);
        sub->final_callback([&, name] {
            action = [&, name] {
                if (args.n != 0 && args.n != 9) throw UsageError(std::string(name) + " exists only for n = 9");
                ctx.inputs = {{"n", 9}};
                const DomPair d = std::string(name) == "fig4-left" ? fig4_left_dompair() : fig4_right_dompair();
                dompair_summary(ctx, d, threads);
                ctx.outputs["minimal"] = is_minimal_dominating(d);
                write_artifact(ctx, args.out, std::string(name) + ".dp", d);
            };
        });
    }

    auto* ex1 = construct->add_subcommand("example1", "Well-covered 3-graph on 11 vertices from STS(7)");
    out_opts(ex1, true);
    ex1->final_callback([&] { action = [&] { construct_wellcovered(ctx, args, "example1", example1_hypergraph(), threads); }; });

    auto* ex2 = construct->add_subcommand("example2", "Three-layer well-covered 3-graph on 30 vertices");
    out_opts(ex2, true);
    ex2->final_callback([&] {
        action = [&] {
            const LayeredResult r = example2_layers();
            ctx.outputs["part_sizes"] = std::vector<int>{19, 7, 4};
            construct_wellcovered(ctx, args, "example2", r.hypergraph, threads);
        };
    });

    auto* rg = construct->add_subcommand("random-graph", "Erdos-Renyi graph G(n,p)");
    rg->add_option("--n", args.n, "Order")->required();
    rg->add_option("--p", args.p, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
    rg->add_option("--seed", args.seed, "RNG seed")->required();
    out_opts(rg, false);
    rg->final_callback([&] {
        action = [&] {
            ctx.inputs = {{"n", args.n}, {"p", args.p}, {"seed", args.seed}};
            if (args.n < 0 || args.n > kMaxGround) throw UsageError("--n must lie in [0, 64]");
            std::mt19937_64 rng(args.seed);
            construct_graph(ctx, args, "random_" + std::to_string(args.n) + "_" + std::to_string(args.seed), random_graph(args.n, args.p, rng));
        };
    });
}

// -- verify ------------------------------------------------------------------

struct VerifyArgs {
    std::vector<std::string> files;
};

bool has_separator(const std::string& path) {
    std::ifstream f(path);
    std::string line;
    while (std::getline(f, line))
        if (line == "---" || line == "---\r") return true;
    return false;
}

json verify_one(const std::string& kind, const std::string& path, int threads) {
    json r = {{"path", path}};
    if (kind == "wellcovered" && !has_separator(path)) {
        const KGraph h(io::set_family_from_file(path));
        const WellCoveredResult w = is_well_covered(h);
        r["pass"] = w.well_covered;
        if (!w.well_covered) r["witness"] = witness_string(w.uncovered_edge);
        return r;
    }
    const DomPair d = io::dompair_from_file(path);
    r["size"] = d.size();
    if (kind == "dominating") {
        const DominationResult res = verify_dominating(d, threads);
        r["pass"] = res.dominating;
        if (!res.dominating) r["witness"] = witness_string(res.witness);
    } else if (kind == "independent") {
        const IndependenceResult res = verify_independent(d);
        r["pass"] = res.independent;
        if (!res.independent) r["witness"] = {witness_string(res.lower_witness), witness_string(res.upper_witness)};
    } else if (kind == "minimal") {
        const DominationResult dom = verify_dominating(d, threads);
        if (!dom.dominating) {
            r["pass"] = false;
            r["reason"] = "not dominating";
            r["witness"] = witness_string(dom.witness);
        } else {
            r["pass"] = is_minimal_dominating(d);
        }
    } else {  // wellcovered, given as D(H)
        if (d.l() != d.k() + 1) throw UsageError("wellcovered needs a k-graph file or a pair with l = k + 1");
        try {
            const KGraph h = wellcovered_from_dompair(d);
            const WellCoveredResult w = is_well_covered(h);
            r["pass"] = w.well_covered && dompair_from_wellcovered(h) == d;
            if (!w.well_covered) r["witness"] = witness_string(w.uncovered_edge);
        } catch (const PreconditionError& e) {
            r["pass"] = false;
            r["reason"] = e.what();
            r["witness"] = e.witness();
        }
    }
    return r;
}

void add_verify(CLI::App& app, Context& ctx, VerifyArgs& args, const int& threads, std::function<void()>& action) {
    auto* verify = app.add_subcommand("verify", "Check files; exit 1 when any check fails");
    verify->require_subcommand(1);
    for (const char* kind : {"dominating", "independent", "wellcovered", "minimal"}) {
        auto* sub = verify->add_subcommand(kind, std::string("Check the '") + kind + "' property");
        sub->add_option("files", args.files, "Input files (.dp; wellcovered also takes .sf)")->required();
        sub->final_callback([&, kind] {
            action = [&, kind] {
                ctx.inputs = {{"kind", kind}, {"files", args.files}};
                json results = json::array();
                bool all = true;
                for (const auto& f : args.files) {
                    json r = verify_one(kind, f, threads);
                    all = all && r["pass"].get<bool>();
                    results.push_back(std::move(r));
                }
                ctx.outputs["pass"] = all;
                ctx.outputs["results"] = results;
                if (!all) {
                    ctx.exit_code = kVerifyFailed;
                    ctx.status = "verify_failed";
                }
            };
        });
    }
}

// -- analyze -----------------------------------------------------------------

void add_analyze(CLI::App& app, Context& ctx, std::string& file, std::function<void()>& action) {
    auto* analyze = app.add_subcommand("analyze", "Full edge/triangle certificate of a graph file");
    analyze->add_option("file", file, "Graph file (.g)")->required();
    analyze->final_callback([&] {
        action = [&] {
            ctx.inputs = {{"file", file}};
            const Graph g = io::graph_from_file(file);
            const GraphCertificate c = certificate(g);
            const std::int64_t bound = bounds::lemma2_rhs(std::max(1, g.order()));
            ctx.outputs["n"] = c.n;
            ctx.outputs["edges"] = c.edge_count;
            ctx.outputs["triangles"] = c.triangle_count;
            ctx.outputs["covered_edges"] = c.covered_edge_count;
            ctx.outputs["uncovered_edges"] = edge_list(c.uncovered_edges);
            ctx.outputs["uncovered_count"] = c.uncovered_edges.size();
            ctx.outputs["f_times_2"] = c.f_times_2;
            ctx.outputs["f"] = f_value(c.f_times_2);
            ctx.outputs["bound"] = bound;
            ctx.outputs["f_within_bound"] = c.f_times_2 <= 2 * bound;
            const auto m = matching_set_M(g);
            ctx.outputs["matching_set_M"] = edge_list(m);
            ctx.outputs["M_count"] = m.size();
            ctx.outputs["alpha"] = c.alpha;
            ctx.outputs["beta_times_2"] = c.beta_times_2;
            ctx.outputs["gamma_times_4"] = c.gamma_times_4;
            ctx.outputs["first_step_holds"] = c.first_step_holds;
            ctx.outputs["final_inequality_holds"] = c.final_inequality_holds;
            if (!(c.first_step_holds && c.final_inequality_holds && c.f_times_2 <= 2 * bound)) {
                ctx.exit_code = kVerifyFailed;
                ctx.status = "verify_failed";
            }
        };
    });
}

// -- solve -------------------------------------------------------------------

struct SolveArgs {
    int n = 0, l = 0, k = 0;
    std::string mode = "gamma";
    double budget = 0.0;
    std::vector<std::string> warm;
    std::string out;
};

void add_solve(CLI::App& app, Context& ctx, SolveArgs& args, std::function<void()>& action) {
    auto* solve_cmd = app.add_subcommand("solve", "Exact minimum (independent) dominating set of G_{l,k}");
    solve_cmd->add_option("--n", args.n, "Ground set size")->required();
    solve_cmd->add_option("--l", args.l, "Upper level")->required();
    solve_cmd->add_option("--k", args.k, "Lower level")->required();
    solve_cmd->add_option("--mode", args.mode, "gamma | i")->check(CLI::IsMember({"gamma", "i"}));
    solve_cmd->add_option("--budget", args.budget, "Time budget in seconds (0 or absent: unlimited)")->check(CLI::NonNegativeNumber);
    solve_cmd->add_option("--warm", args.warm, "Warm-start DomPair files");
    solve_cmd->add_option("--out,-o", args.out, "Witness file");
    solve_cmd->final_callback([&] {
        action = [&] {
            ctx.inputs = {{"n", args.n}, {"l", args.l}, {"k", args.k}, {"mode", args.mode}, {"budget", args.budget}, {"warm", args.warm}};
            SolveOptions opts;
            if (args.budget > 0.0) opts.budget_seconds = args.budget;
            for (const auto& w : args.warm) opts.warm_starts.push_back(io::dompair_from_file(w));
            const SolveMode mode = args.mode == "i" ? SolveMode::Independent : SolveMode::Gamma;
            const SolveResult r = solve(args.n, args.l, args.k, mode, opts);
            ctx.outputs["size"] = r.size;
            ctx.outputs["status"] = to_string(r.status);
            ctx.outputs["lower_bound"] = r.lower_bound;
            ctx.outputs["witness_dominating"] = verify_dominating(r.witness).dominating;
            ctx.outputs["witness_independent"] = verify_independent(r.witness).independent;
            if (args.l == 3 && args.k == 2) ctx.outputs["gamma32"] = bounds::gamma32(args.n);
            ctx.timing["nodes_explored"] = r.nodes_explored;
            ctx.timing["solver_seconds"] = r.elapsed;
            const std::string name = "solve_" + std::to_string(args.n) + "_" + std::to_string(args.l) + "_" + std::to_string(args.k) + "_" + args.mode + ".dp";
            write_artifact(ctx, args.out, name, r.witness);
            if (r.status == SolveStatus::UpperBoundOnly) {
                ctx.exit_code = kBudget;
                ctx.status = "budget";
            }
        };
    });
}

// -- bounds ------------------------------------------------------------------

struct BoundsArgs {
    std::vector<std::string> tk;
    int k = 3;
    int n = 0;
};

std::vector<std::pair<int, double>> parse_tk(const std::vector<std::string>& specs) {
    auto config = bounds::default_tk();
    for (const auto& s : specs) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw UsageError("--tk expects k=value, got '" + s + "'");
        int k = 0;
        double v = 0.0;
        try {
            std::size_t pos = 0;
            k = std::stoi(s.substr(0, eq), &pos);
            if (pos != eq) throw std::invalid_argument("k");
            const std::string rest = s.substr(eq + 1);
            v = std::stod(rest, &pos);
            if (pos != rest.size()) throw std::invalid_argument("v");
        } catch (const std::exception&) {
            throw UsageError("--tk expects k=value, got '" + s + "'");
        }
        auto it = std::find_if(config.begin(), config.end(), [k](const auto& p) { return p.first == k; });
        if (it != config.end())
            it->second = v;
        else
            config.emplace_back(k, v);
    }
    std::sort(config.begin(), config.end());
    return config;
}

std::string fixed3(double x) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << x;
    return os.str();
}

void add_bounds(CLI::App& app, Context& ctx, BoundsArgs& args, std::function<void()>& action, std::string& table_text) {
    auto* bounds_cmd = app.add_subcommand("bounds", "Asymptotic coefficients");
    bounds_cmd->require_subcommand(1);

    auto* t1 = bounds_cmd->add_subcommand("table1", "Lower, previous upper and new upper coefficients for k = 3..7");
    t1->add_option("--tk", args.tk, "Turan density override, k=value (repeatable)");
    t1->final_callback([&] {
        action = [&] {
            const auto config = parse_tk(args.tk);
            const auto defaults = bounds::default_tk();
            json tk_in = json::object();
            for (const auto& [k, v] : config) tk_in[std::to_string(k)] = v;
            ctx.inputs = {{"tk", tk_in}};
            const auto rows = bounds::table1(config);
            json out = json::array();
            std::ostringstream text;
            text << "  k      t_k    lower  prev_upper  new_upper  alpha*\n";
            for (const auto& r : rows) {
                const bool is_default = std::find(defaults.begin(), defaults.end(), std::pair{r.k, r.turan_upper_tk}) != defaults.end();
                const double lo = bounds::round_lower(r.lower), gu = bounds::round_upper(r.gerbner_upper), nu = bounds::round_upper(r.new_upper);
                out.push_back({{"k", r.k},
                               {"tk", r.turan_upper_tk},
                               {"tk_source", is_default ? "default (inverted from the published lower column)" : "user"},
                               {"lower", lo},
                               {"gerbner_upper", gu},
                               {"new_upper", nu},
                               {"alpha_star", r.alpha_star},
                               {"lower_raw", r.lower},
                               {"gerbner_upper_raw", r.gerbner_upper},
                               {"new_upper_raw", r.new_upper}});
                text << std::setw(3) << r.k << "  " << std::setw(7) << std::setprecision(4) << std::fixed << r.turan_upper_tk << "  " << fixed3(lo)
                     << "  " << std::setw(10) << fixed3(gu) << "  " << std::setw(9) << fixed3(nu) << "  " << std::setprecision(6) << r.alpha_star
                     << (is_default ? "" : "  (user t_k)") << '\n';
            }
            text << "lower bounds rounded down, upper bounds rounded up; default t_k inverted from the published lower column\n";
            ctx.outputs["rows"] = out;
            ctx.outputs["rounding"] = "lower bounds rounded down, upper bounds rounded up, 3 decimals";
            table_text = text.str();
        };
    });

    auto* t3 = bounds_cmd->add_subcommand("theorem3", "Optimal split ratio and the resulting upper coefficient");
    t3->add_option("--k", args.k, "Uniformity (>= 3)")->required();
    t3->final_callback([&] {
        action = [&] {
            ctx.inputs = {{"k", args.k}};
            const double a = bounds::alpha_star(args.k);
            ctx.outputs["alpha_star"] = a;
            ctx.outputs["new_upper"] = bounds::new_upper(args.k);
            ctx.outputs["new_upper_printed"] = bounds::round_upper(bounds::new_upper(args.k));
            ctx.outputs["layered_rate"] = bounds::layered_rate(args.k, a);
            ctx.outputs["previous_upper"] = bounds::gerbner_bounds(args.k, 0.5).upper;
        };
    });

    auto* g32 = bounds_cmd->add_subcommand("gamma32", "Closed form for the domination number of G_{3,2}");
    g32->add_option("--n", args.n, "Order")->required();
    g32->final_callback([&] {
        action = [&] {
            ctx.inputs = {{"n", args.n}};
            ctx.outputs["gamma32"] = bounds::gamma32(args.n);
            ctx.outputs["lemma2_bound"] = bounds::lemma2_rhs(args.n);
            ctx.outputs["extrapolation"] = args.n < 5;
            if (args.n < 5) ctx.outputs["note"] = "n < 5 lies outside the proven range; the formula value is reported only";
        };
    });
}

// -- exhaustive --------------------------------------------------------------

struct ExhaustiveArgs {
    int n = 0;
    std::size_t count = 25;
    std::uint64_t seed = 0;
};

void classify_all(Context& ctx, const std::vector<DomPair>& optima, int n) {
    std::map<std::string, std::size_t> counts;
    for (const auto& e : extremal_graphs_32(n)) counts[e.name] = 0;
    std::size_t unclassified = 0;
    for (const auto& d : optima) {
        if (auto name = classify_extremal_32(graph_from_dompair(d)))
            ++counts[*name];
        else
            ++unclassified;
    }
    json classes = json::object();
    bool all_realised = true;
    for (const auto& [name, c] : counts) {
        classes[name] = c;
        all_realised = all_realised && c > 0;
    }
    ctx.outputs["optima"] = optima.size();
    ctx.outputs["classes"] = classes;
    ctx.outputs["unclassified"] = unclassified;
    ctx.outputs["all_classes_realised"] = all_realised;
    if (unclassified != 0) {
        ctx.exit_code = kVerifyFailed;
        ctx.status = "verify_failed";
    }
}

void add_exhaustive(CLI::App& app, Context& ctx, ExhaustiveArgs& args, std::function<void()>& action) {
    auto* ex = app.add_subcommand("exhaustive", "Exhaustive and sampled small-case checks");
    ex->require_subcommand(1);

    auto* l2 = ex->add_subcommand("lemma2", "Maximum of f over all labelled graphs on [n] (n <= 7)");
    l2->add_option("--n", args.n, "Order")->required();
    l2->final_callback([&] {
        action = [&] {
            ctx.inputs = {{"n", args.n}};
            const ExhaustiveFResult r = exhaustive_graphs_f(args.n);
            const std::int64_t bound = bounds::lemma2_rhs(args.n);
            ctx.outputs["max_f_times_2"] = r.max_f_times_2;
            ctx.outputs["max_f"] = f_value(r.max_f_times_2);
            ctx.outputs["bound"] = bound;
            ctx.outputs["labeled_maximizers"] = r.labeled_maximizers;
            ctx.outputs["maximizer_classes"] = r.maximizers.size();
            json reps = json::array();
            for (const auto& g : r.maximizers) reps.push_back(edge_list(g.edges()));
            ctx.outputs["maximizers"] = reps;
            ctx.outputs["equality_clause_holds"] = r.equality_clause_holds;
            if (r.max_f_times_2 != 2 * bound || !r.equality_clause_holds) {
                ctx.exit_code = kVerifyFailed;
                ctx.status = "verify_failed";
            }
        };
    });

    auto* t2 = ex->add_subcommand("theorem2", "All optimal dominating sets of G_{3,2} and their graphs (n <= 6)");
    t2->add_option("--n", args.n, "Order")->required();
    t2->final_callback([&] {
        action = [&] {
            ctx.inputs = {{"n", args.n}};
            classify_all(ctx, enumerate_optimal_32(args.n), args.n);
        };
    });

    auto* sample = ex->add_subcommand("sample", "Sampled optimal dominating sets of G_{3,2} (n <= 9)");
    sample->add_option("--n", args.n, "Order")->required();
    sample->add_option("--count", args.count, "Number of distinct optima wanted");
    sample->add_option("--seed", args.seed, "RNG seed")->required();
    sample->final_callback([&] {
        action = [&] {
            ctx.inputs = {{"n", args.n}, {"count", args.count}, {"seed", args.seed}};
            std::vector<DomPair> optima;
            try {
                optima = sample_optimal_32(args.n, args.count, args.seed);
            } catch (const std::logic_error& e) {
                if (dynamic_cast<const std::invalid_argument*>(&e) != nullptr) throw;
                ctx.outputs["error"] = e.what();
                ctx.exit_code = kVerifyFailed;
                ctx.status = "verify_failed";
                return;
            }
            classify_all(ctx, optima, args.n);
        };
    });
}

void print_text(std::ostream& out, const json& outputs) {
    for (const auto& [key, value] : outputs.items()) {
        out << key << ": ";
        if (value.is_string())
            out << value.get<std::string>();
        else
            out << value.dump();
        out << '\n';
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const auto started = std::chrono::steady_clock::now();
    Context ctx;
    bool json_mode = std::find(args.begin(), args.end(), "--json") != args.end();
    int threads = default_threads();
    std::string table_text;
    std::function<void()> action;

    CLI::App app{"Dominating sets of inclusion graphs of k-subsets", "incdom"};
    app.set_version_flag("--version", std::string(INCDOM_VERSION));
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", json_mode, "Emit a JSON run report");
    app.add_option("--threads", threads, "Worker threads for verification")->check(CLI::PositiveNumber);

    ConstructArgs construct_args;
    VerifyArgs verify_args;
    std::string analyze_file;
    SolveArgs solve_args;
    BoundsArgs bounds_args;
    ExhaustiveArgs exhaustive_args;
    add_construct(app, ctx, construct_args, threads, action);
    add_verify(app, ctx, verify_args, threads, action);
    add_analyze(app, ctx, analyze_file, action);
    add_solve(app, ctx, solve_args, action);
    add_bounds(app, ctx, bounds_args, action, table_text);
    add_exhaustive(app, ctx, exhaustive_args, action);

    std::vector<std::string> argv_store{"incdom"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    auto fail = [&](int code, const std::string& status, const std::string& msg) {
        ctx.exit_code = code;
        ctx.status = status;
        ctx.error = msg;
    };

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (action) action();
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << INCDOM_VERSION << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        fail(kUsage, "usage", e.what());
    } catch (const ParseError& e) {
        fail(kParse, "parse", e.what());
    } catch (const PreconditionError& e) {
        fail(kVerifyFailed, "verify_failed", std::string(e.what()) + (e.witness().empty() ? "" : " (witness " + e.witness() + ")"));
    } catch (const std::domain_error& e) {
        fail(kDomain, "domain", e.what());
    } catch (const std::invalid_argument& e) {
        fail(kUsage, "usage", e.what());
    } catch (const std::out_of_range& e) {
        fail(kUsage, "usage", e.what());
    } catch (const std::exception& e) {
        fail(kInternal, "internal", e.what());
    }

    ctx.timing["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    if (json_mode) {
        json report;
        report["tool"] = "incdom";
        report["version"] = INCDOM_VERSION;
        report["command"] = args;
        report["inputs"] = ctx.inputs;
        report["outputs"] = ctx.outputs;
        report["status"] = ctx.status;
        report["exit_code"] = ctx.exit_code;
        if (!ctx.error.empty()) report["error"] = ctx.error;
        report["timing"] = ctx.timing;
        out << report.dump(2) << '\n';
    } else if (ctx.error.empty()) {
        if (!table_text.empty()) {
            out << table_text;
        } else {
            print_text(out, ctx.outputs);
        }
    }
    if (!ctx.error.empty()) {
        err << "incdom: " << ctx.error << '\n';
        if (ctx.exit_code == kUsage && !json_mode) err << "Run with --help for usage.\n";
    }
    return ctx.exit_code;
}

}  // namespace incdom::cli
