// Command-line front end: solve / gen / check / params / bench.
//
// Exit codes: 0 = yes (or success for non-decision commands), 1 = no
// (or a failed check), 2 = usage or input error.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <csignal>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "iib/dispatch.hpp"
#include "iib/gadgets.hpp"
#include "iib/instance_io.hpp"
#include "iib/type_partition.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

iib::Algo parse_algo(const std::string& name, const std::string& mode) {
    if (name == "oracle") return iib::Algo::Oracle;
    if (name == "kl") return mode == "rand" ? iib::Algo::KlRand : iib::Algo::KlDerand;
    if (name == "kzeta") return iib::Algo::KZeta;
    if (name == "tw") return iib::Algo::Tw;
    if (name == "nd-k") return iib::Algo::NdK;
    if (name == "nd-l") return iib::Algo::NdL;
    if (name == "auto") return iib::Algo::Auto;
    throw CLI::ValidationError("--algo", "unknown algorithm '" + name + "'");
}

int run_solve(const std::string& in_path, const std::string& out_path, const std::string& algo_name,
              const std::string& mode, const std::string& td_path, std::uint64_t seed,
              long long trials) {
    if (!mode.empty() && algo_name != "kl") {
        std::cerr << "error: --mode only applies to --algo kl\n";
        return kExitError;
    }
    if (!td_path.empty() && algo_name != "tw") {
        std::cerr << "error: --td only applies to --algo tw\n";
        return kExitError;
    }

    const iib::InstanceDocument doc = iib::parse_instance(iib::read_text_file(in_path));
    const iib::Instance& inst = doc.instance;
    if (!iib::is_preprocessed(inst.graph)) {
        std::cerr << "error: instance is not preprocessed (some node can never be influenced); "
                     "re-generate it with unreachable nodes removed before solving\n";
        return kExitError;
    }

    iib::SolveOptions opts;
    opts.algo = parse_algo(algo_name, mode.empty() ? "derand" : mode);
    opts.seed = seed;
    opts.trials = trials;
    if (!td_path.empty())
        opts.td = iib::parse_tree_decomposition(iib::read_text_file(td_path));

    const auto start = std::chrono::steady_clock::now();
    const iib::DispatchResult res = iib::run_solver(inst, opts);
    const auto stop = std::chrono::steady_clock::now();

    iib::ResultRecord rec;
    rec.verdict = res.verdict;
    if (res.solution) {
        // Re-check the witness before reporting it; a yes without a valid
        // witness is a bug, not an answer.
        const iib::Solution checked = iib::verify(inst, res.solution->influenced);
        if (res.verdict && !checked.verdict) {
            std::cerr << "error: solver returned a witness that fails verification\n";
            return kExitError;
        }
        rec.witness_x = checked.influenced;
        rec.witness_y = checked.immunized;
    }
    rec.algorithm = res.algorithm;
    rec.params = iib::measure_params(inst.graph);
    rec.certified = res.certified;
    rec.wall_time_ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(stop - start).count();
    rec.seed = seed;
    rec.trials = res.work;

    const std::string json = iib::record_to_json(rec);
    std::cout << json;
    if (!out_path.empty()) iib::write_text_file(out_path, json);
    return res.verdict ? kExitYes : kExitNo;
}

int run_gen(const std::string& reduction, const std::string& src_path, const std::string& out_path) {
    const std::string text = iib::read_text_file(src_path);
    iib::GeneratedInstance gen;
    if (reduction == "cvt") {
        gen = iib::gen_cvt(iib::parse_cvt_source(text));
    } else if (reduction == "hs") {
        gen = iib::gen_hs_zero(iib::parse_hitting_set_source(text));
    } else if (reduction == "hs3") {
        gen = iib::gen_hs_deg3(iib::parse_hitting_set_source(text));
    } else if (reduction == "mq-tw") {
        gen = iib::gen_mq_tw(iib::parse_multicolored_source(text));
    } else if (reduction == "mq-nd") {
        gen = iib::gen_mq_nd(iib::parse_multicolored_source(text));
    } else {
        std::cerr << "error: unknown reduction '" << reduction << "'\n";
        return kExitError;
    }

    iib::InstanceDocument doc;
    doc.instance = std::move(gen.instance);
    doc.expected_verdict = gen.expected_verdict;
    doc.generator = gen.generator;
    const std::string out = iib::serialize_document(doc);
    if (out_path.empty())
        std::cout << out;
    else
        iib::write_text_file(out_path, out);
    std::cerr << "generated " << doc.instance.graph.node_count() << " nodes, "
              << doc.instance.graph.edge_count() << " edges (k=" << doc.instance.k
              << ", l=" << doc.instance.l << ") from " << gen.source << "\n";
    return kExitYes;
}

int run_check(const std::string& in_path, const std::string& result_path) {
    const iib::InstanceDocument doc = iib::parse_instance(iib::read_text_file(in_path));
    const iib::ResultRecord rec = iib::record_from_json(iib::read_text_file(result_path));
    if (!rec.verdict) {
        std::cout << "verdict is no; nothing to verify\n";
        return kExitYes;
    }
    const iib::Solution sol = iib::verify(doc.instance, rec.witness_x);
    if (!sol.verdict) {
        std::cout << "witness rejected: |X|=" << sol.influenced.size()
                  << " (k=" << doc.instance.k << "), |Y|=" << sol.immunized.size()
                  << " (l=" << doc.instance.l << ")\n";
        return kExitNo;
    }
    if (sol.influenced != rec.witness_x || sol.immunized != rec.witness_y) {
        std::cout << "witness rejected: recorded sets are not the canonical (minimal X, Y(X)) pair\n";
        return kExitNo;
    }
    std::cout << "witness verified: |X|=" << sol.influenced.size()
              << ", |Y|=" << sol.immunized.size() << "\n";
    return kExitYes;
}

int run_params(const std::string& in_path) {
    const iib::InstanceDocument doc = iib::parse_instance(iib::read_text_file(in_path));
    const iib::ThresholdGraph& g = doc.instance.graph;
    const iib::Params p = iib::measure_params(g);
    const iib::TypePartition tp = iib::type_partition(g);

    nlohmann::json j;
    j["n"] = p.n;
    j["m"] = p.m;
    j["max_degree"] = p.max_degree;
    j["zeta"] = p.zeta;
    j["nd"] = p.nd;
    j["heuristic_width"] = p.heuristic_width;
    j["preprocessed"] = iib::is_preprocessed(g);
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& cls : tp.classes) {
        nlohmann::json arr = nlohmann::json::array();
        for (iib::NodeId v : cls) arr.push_back(v + 1);
        classes.push_back(arr);
    }
    j["type_classes"] = classes;
    std::cout << j.dump(2) << "\n";
    return kExitYes;
}

struct BenchCell {
    bool ran = false;
    bool timed_out = false;
    bool verdict = false;
    double ms = 0.0;
};

// Runs one (instance, algorithm) pair in a forked child so a hung or
// exploding solver only costs its own cell, never the whole table.
BenchCell bench_one(const iib::Instance& inst, iib::Algo algo, std::uint64_t seed,
                    long long timeout_ms) {
    int fds[2];
    if (pipe(fds) != 0) return {};
    const pid_t pid = fork();
    if (pid < 0) {
        close(fds[0]);
        close(fds[1]);
        return {};
    }
    if (pid == 0) {
        close(fds[0]);
        iib::SolveOptions opts;
        opts.algo = algo;
        opts.seed = seed;
        const auto start = std::chrono::steady_clock::now();
        bool verdict = false;
        try {
            verdict = iib::run_solver(inst, opts).verdict;
        } catch (...) {
            _exit(3);
        }
        const auto stop = std::chrono::steady_clock::now();
        const double ms =
            std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(stop - start)
                .count();
        char buf[64];
        const int len = std::snprintf(buf, sizeof(buf), "%d %.3f\n", verdict ? 1 : 0, ms);
        [[maybe_unused]] ssize_t wrote = write(fds[1], buf, static_cast<size_t>(len));
        close(fds[1]);
        _exit(0);
    }
    close(fds[1]);

    const auto deadline =
        std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms);
    int status = 0;
    bool finished = false;
    while (std::chrono::steady_clock::now() < deadline) {
        const pid_t r = waitpid(pid, &status, WNOHANG);
        if (r == pid) {
            finished = true;
            break;
        }
        usleep(2000);
    }
    BenchCell cell;
    if (!finished) {
        kill(pid, SIGKILL);
        waitpid(pid, &status, 0);
        close(fds[0]);
        cell.ran = true;
        cell.timed_out = true;
        return cell;
    }
    if (WIFEXITED(status) && WEXITSTATUS(status) == 0) {
        char buf[64] = {0};
        const ssize_t got = read(fds[0], buf, sizeof(buf) - 1);
        close(fds[0]);
        int v = 0;
        double ms = 0.0;
        if (got > 0 && std::sscanf(buf, "%d %lf", &v, &ms) == 2) {
            cell.ran = true;
            cell.verdict = v != 0;
            cell.ms = ms;
        }
        return cell;
    }
    close(fds[0]);
    return cell;  // crashed: ran stays false
}

int run_bench(const std::string& dir, const std::string& algos_csv, long long timeout_ms,
              std::uint64_t seed) {
    std::vector<std::string> algo_names;
    {
        std::stringstream ss(algos_csv);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) algo_names.push_back(item);
    }
    if (algo_names.empty()) {
        std::cerr << "error: --algos must name at least one algorithm\n";
        return kExitError;
    }
    std::vector<iib::Algo> algos;
    for (const auto& name : algo_names) algos.push_back(parse_algo(name, "derand"));

    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::cout << "instance";
    for (const auto& name : algo_names) std::cout << "\t" << name;
    std::cout << "\texpected\n";

    int disagreements = 0;
    int mismatches = 0;
    for (const auto& path : files) {
        iib::InstanceDocument doc;
        try {
            doc = iib::parse_instance(iib::read_text_file(path.string()));
        } catch (const std::exception&) {
            continue;  // not an instance file
        }
        // Benchmarks compare solver behavior, so unreachable nodes are
        // stripped here rather than rejecting the file outright.
        iib::PreprocessResult pre = iib::preprocess(doc.instance.graph);
        const iib::Instance inst(std::move(pre.graph), doc.instance.k, doc.instance.l);

        std::cout << path.filename().string();
        std::optional<bool> first_verdict;
        bool row_disagrees = false;
        for (iib::Algo algo : algos) {
            const BenchCell cell = bench_one(inst, algo, seed, timeout_ms);
            if (!cell.ran) {
                std::cout << "\terror";
            } else if (cell.timed_out) {
                std::cout << "\ttimeout";  // a timeout is not a wrong answer
            } else {
                std::ostringstream c;
                c << (cell.verdict ? "yes" : "no") << " " << std::fixed << cell.ms << "ms";
                std::cout << "\t" << c.str();
                if (!first_verdict)
                    first_verdict = cell.verdict;
                else if (*first_verdict != cell.verdict)
                    row_disagrees = true;
                if (doc.expected_verdict && cell.verdict != *doc.expected_verdict) ++mismatches;
            }
        }
        if (doc.expected_verdict)
            std::cout << "\t" << (*doc.expected_verdict ? "yes" : "no");
        else
            std::cout << "\t-";
        std::cout << "\n";
        if (row_disagrees) ++disagreements;
    }
    std::cout << "# solver disagreements: " << disagreements
              << ", expected-verdict mismatches: " << mismatches << "\n";
    return (disagreements == 0 && mismatches == 0) ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Influence-immunization bounding solver suite"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "decide an instance and print a result record");
    std::string in_path, out_path, algo_name = "auto", mode, td_path;
    std::uint64_t seed = 1;
    long long trials = 0;
    solve->add_option("--in", in_path, "instance file")->required();
    solve->add_option("--out", out_path, "also write the result record here");
    solve->add_option("--algo", algo_name, "oracle|kl|kzeta|tw|nd-k|nd-l|auto (default auto)")
        ->check(CLI::IsMember({"oracle", "kl", "kzeta", "tw", "nd-k", "nd-l", "auto"}));
    solve->add_option("--mode", mode, "kl only: rand|derand (default derand)")
        ->check(CLI::IsMember({"rand", "derand"}));
    solve->add_option("--td", td_path, "tw only: tree decomposition file");
    solve->add_option("--seed", seed, "random seed (default 1)");
    solve->add_option("--trials", trials, "kl rand only: trial budget (default 5*2^(k+l), capped)");

    // gen
    auto* gen = app.add_subcommand("gen", "build an instance from a source problem");
    std::string reduction, src_path, gen_out;
    gen->add_option("--reduction", reduction, "cvt|hs|hs3|mq-tw|mq-nd")
        ->required()
        ->check(CLI::IsMember({"cvt", "hs", "hs3", "mq-tw", "mq-nd"}));
    gen->add_option("--src", src_path, "source problem file")->required();
    gen->add_option("--out", gen_out, "output instance file (default stdout)");

    // check
    auto* check = app.add_subcommand("check", "verify a result record against its instance");
    std::string check_in, check_result;
    check->add_option("--in", check_in, "instance file")->required();
    check->add_option("--result", check_result, "result record (JSON)")->required();

    // params
    auto* params = app.add_subcommand("params", "measure structural parameters");
    std::string params_in;
    params->add_option("--in", params_in, "instance file")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "run algorithms across a directory of instances");
    std::string bench_dir, bench_algos = "auto";
    long long timeout_ms = 10000;
    std::uint64_t bench_seed = 1;
    bench->add_option("--dir", bench_dir, "directory of instance files")->required();
    bench->add_option("--algos", bench_algos, "comma-separated algorithm list (default auto)");
    bench->add_option("--timeout-ms", timeout_ms, "per-run timeout (default 10000)");
    bench->add_option("--seed", bench_seed, "random seed (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitYes : kExitError;
    }

    try {
        if (solve->parsed()) return run_solve(in_path, out_path, algo_name, mode, td_path, seed, trials);
        if (gen->parsed()) return run_gen(reduction, src_path, gen_out);
        if (check->parsed()) return run_check(check_in, check_result);
        if (params->parsed()) return run_params(params_in);
        if (bench->parsed()) return run_bench(bench_dir, bench_algos, timeout_ms, bench_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
