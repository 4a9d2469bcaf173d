// Command line entry points: solve, gen, verify, oracle, bench.
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bigcycle/instance_io.hpp"
#include "bigcycle/oracle.hpp"
#include "bigcycle/pipeline.hpp"

namespace {

using namespace bigcycle;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string report_line(const std::string& instance, const SolveReport& rep) {
    std::ostringstream os;
    bool ok = rep.cycles_within_bound && rep.edges_within_bound;
    os << "{\"instance\":\"" << instance << "\",\"n\":" << rep.n << ",\"k\":" << rep.k
       << ",\"cycles\":" << rep.cycles << ",\"edges\":" << rep.edge_count
       << ",\"bound_cycles\":\"" << rep.n << "/7";
    if (rep.k > 3) os << "+" << rep.n << "/" << 42 * (rep.k - 2);
    os << "\",\"bound_edges\":\"";
    if (rep.k == 3)
        os << "9*" << rep.n << "/7-2";
    else
        os << "(9/7+1/" << 21 * (rep.k - 2) << ")*" << rep.n << "-2";
    os << "\",\"elapsed_ms\":" << rep.elapsed_ms << ",\"ok\":" << (ok ? "true" : "false")
       << "}";
    return os.str();
}

std::string csv_line(const std::string& instance, const SolveReport& rep) {
    std::ostringstream os;
    os << instance << "," << rep.n << "," << rep.k << "," << rep.cycles << ","
       << rep.edge_count << "," << rep.elapsed_ms << ","
       << ((rep.cycles_within_bound && rep.edges_within_bound) ? 1 : 0);
    return os.str();
}

int cmd_solve(const std::string& file, int k, bool euler, const std::string& trace_path,
              bool json) {
    MultiGraph g = parse_graph(read_file(file));
    PipelineOptions opt = default_options();
    std::ofstream trace;
    if (!trace_path.empty()) {
        trace.open(trace_path);
        opt.trace = &trace;
    }
    auto [res, rep] = (k >= 4) ? solve_k_regular(g, k, opt) : bigcycle::bigcycle(g, opt);
    std::cout << report_line(file, rep) << "\n";
    if (json) {
        std::cout << "{\"multigraph\":[";
        bool first = true;
        for (EdgeId e = 0; e < (int)res.multiplicity.size(); ++e)
            for (int i = 0; i < res.multiplicity[e]; ++i) {
                std::cout << (first ? "" : ",") << "[" << g.edge_u(e) << "," << g.edge_v(e)
                          << "]";
                first = false;
            }
        std::cout << "]}\n";
    } else {
        long long lines = 0;
        for (EdgeId e = 0; e < (int)res.multiplicity.size(); ++e) lines += res.multiplicity[e];
        std::cout << "# multigraph\n" << g.num_vertices() << " " << lines << "\n";
        for (EdgeId e = 0; e < (int)res.multiplicity.size(); ++e)
            for (int i = 0; i < res.multiplicity[e]; ++i)
                std::cout << std::min(g.edge_u(e), g.edge_v(e)) << " "
                          << std::max(g.edge_u(e), g.edge_v(e)) << "\n";
    }
    if (euler) {
        auto walk = euler_circuit(g, res);
        std::cout << "# euler walk\n";
        for (size_t i = 0; i < walk.size(); ++i)
            std::cout << walk[i] << (i + 1 < walk.size() ? ' ' : '\n');
    }
    return (rep.cycles_within_bound && rep.edges_within_bound) ? 0 : 1;
}

int cmd_verify(const std::string& graph_file, const std::string& multi_file) {
    MultiGraph g = parse_graph(read_file(graph_file));
    MultiGraph m = parse_graph(read_file(multi_file));

    EulerianResult res;
    res.n = g.num_vertices();
    res.multiplicity.assign(g.edge_capacity(), 0);
    bool missing = false;
    for (EdgeId e : m.edges()) {
        auto cands = g.edges_between(m.edge_u(e), m.edge_v(e));
        bool placed = false;
        for (EdgeId ge : cands)
            if (res.multiplicity[ge] < 2) {
                ++res.multiplicity[ge];
                placed = true;
                break;
            }
        if (!placed) missing = true;
    }
    for (int8_t x : res.multiplicity) res.edge_count += x;
    res.cycles = (int)((res.edge_count - res.n) / 2 + 1);
    Violation v =
        missing ? Violation{false, "(a) multiset edge not in the graph"} : validate_eulerian(g, res);
    if ((res.edge_count - res.n) % 2 != 0) v = {false, "(d) edge_count parity"};
    if (v.ok) {
        std::cout << "ok\n";
        return 0;
    }
    std::cout << "violation: " << v.message << "\n";
    return 1;
}

int cmd_bench(const std::string& range, int count, uint64_t seed, int k,
              const std::string& csv_path) {
    int lo, hi, step = 1;
    {
        std::vector<int> parts;
        std::stringstream ss(range);
        std::string tok;
        while (std::getline(ss, tok, ':')) parts.push_back(std::stoi(tok));
        if (parts.size() < 2) {
            std::cerr << "bad --m-range, expected a:b[:step]\n";
            return 2;
        }
        lo = parts[0];
        hi = parts[1];
        if (parts.size() > 2) step = parts[2];
    }
    std::ofstream csv;
    if (!csv_path.empty()) {
        csv.open(csv_path);
        csv << "instance,n,k,cycles,edges,elapsed_ms,ok\n";
    }
    PipelineOptions opt = default_options();
    bool all_ok = true;
    long long worst_cycles_num = 0, worst_cycles_den = 1;
    long long worst_edges_num = 0, worst_edges_den = 1;
    std::vector<std::pair<long long, double>> times;
    for (int m = lo; m <= hi; m += step)
        for (int i = 0; i < count; ++i) {
            GenSpec spec;
            spec.model = (k >= 4) ? GenModel::KRegularBipartite : GenModel::CubicBipartite;
            spec.m = m;
            spec.k = k;
            spec.seed = seed + (uint64_t)m * 1000003u + i;
            MultiGraph g = generate(spec);
            auto [res, rep] = (k >= 4) ? solve_k_regular(g, k, opt) : bigcycle::bigcycle(g, opt);
            std::ostringstream name;
            name << "gen-m" << m << "-" << i;
            std::cout << report_line(name.str(), rep) << "\n";
            if (csv.is_open()) csv << csv_line(name.str(), rep) << "\n";
            all_ok = all_ok && rep.cycles_within_bound && rep.edges_within_bound;
            if (rep.cycles * worst_cycles_den > worst_cycles_num * rep.n) {
                worst_cycles_num = rep.cycles;
                worst_cycles_den = rep.n;
            }
            if (rep.edge_count * worst_edges_den > worst_edges_num * rep.n) {
                worst_edges_num = rep.edge_count;
                worst_edges_den = rep.n;
            }
            times.emplace_back(rep.n, rep.elapsed_ms);
        }
    std::cout << "# summary: max cycles/n = " << worst_cycles_num << "/" << worst_cycles_den
              << ", max edges/n = " << worst_edges_num << "/" << worst_edges_den << "\n";
    std::cout << "# runtime-vs-n:";
    for (auto [n, ms] : times) std::cout << " " << n << ":" << ms << "ms";
    std::cout << "\n";
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"BIGCYCLE solver for graphic TSP on cubic bipartite graphs"};
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "run the solver on an edge-list file");
    std::string solve_file, trace_path;
    int solve_k = 3;
    bool euler = false, json = false;
    solve->add_option("file", solve_file)->required();
    solve->add_option("--k", solve_k, "regularity (>=4 uses the k-regular pipeline)");
    solve->add_flag("--euler", euler, "print a closed Euler walk");
    solve->add_option("--trace", trace_path, "write a JSON-lines step trace");
    solve->add_flag("--json", json, "emit the multigraph as JSON");

    auto* gen = app.add_subcommand("gen", "generate a random instance");
    std::string model = "cubic", out_path;
    int gen_m = 0, gen_k = 4;
    uint64_t gen_seed = 1;
    gen->add_option("--model", model)->check(CLI::IsMember({"cubic", "kreg"}));
    gen->add_option("--m", gen_m)->required();
    gen->add_option("--k", gen_k);
    gen->add_option("--seed", gen_seed)->required();
    gen->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "validate a solution multigraph");
    std::string verify_graph, verify_multi;
    verify->add_option("graph", verify_graph)->required();
    verify->add_option("multigraph", verify_multi)->required();

    auto* oracle = app.add_subcommand("oracle", "brute-force report for small instances");
    std::string oracle_file;
    oracle->add_option("file", oracle_file)->required();

    auto* bench = app.add_subcommand("bench", "sweep random instances");
    std::string m_range, csv_path;
    int count = 1, bench_k = 3;
    uint64_t bench_seed = 1;
    bench->add_option("--m-range", m_range)->required();
    bench->add_option("--count", count)->required();
    bench->add_option("--seed", bench_seed);
    bench->add_option("--k", bench_k);
    bench->add_option("--csv", csv_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (*solve) return cmd_solve(solve_file, solve_k, euler, trace_path, json);
        if (*gen) {
            GenSpec spec;
            spec.model = model == "kreg" ? GenModel::KRegularBipartite : GenModel::CubicBipartite;
            spec.m = gen_m;
            spec.k = model == "kreg" ? gen_k : 3;
            spec.seed = gen_seed;
            std::string text = write_graph(generate(spec));
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path);
                out << text;
            }
            return 0;
        }
        if (*verify) return cmd_verify(verify_graph, verify_multi);
        if (*oracle) {
            MultiGraph g = parse_graph(read_file(oracle_file));
            OracleReport rep = min_cycles_two_factor(g);
            std::cout << "{\"n\":" << g.num_vertices()
                      << ",\"min_cycles\":" << rep.min_cycles
                      << ",\"matchings_enumerated\":" << rep.matchings_enumerated << "}\n";
            return 0;
        }
        if (*bench) return cmd_bench(m_range, count, bench_seed, bench_k, csv_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
