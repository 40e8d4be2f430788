#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "choose72/chooser.hpp"
#include "choose72/fuzz.hpp"
#include "choose72/json_io.hpp"
#include "choose72/oracle.hpp"

using namespace choose72;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kContractGap = 3;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph read_graph(const std::string& path) {
    std::string text = slurp(path);
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line))
        if (!line.empty()) return parse_graph6(line);
    throw std::runtime_error("no graph6 line in input");
}

Graph generate_named(const std::string& name) {
    if (name == "petersen") return generate_petersen();
    if (name == "gstar") return generate_gstar();
    if (name == "two_k4") return generate_two_k4_gadget();
    if (name.rfind("flower:", 0) == 0)
        return generate_flower_snark(std::stoi(name.substr(7)));
    if (name.rfind("cycle:", 0) == 0)
        return generate_even_cycle(std::stoi(name.substr(6)));
    throw std::runtime_error("unknown graph name: " + name);
}

uint64_t default_seed() {
    if (const char* env = std::getenv("CHOOSE_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

const char* verdict_name(OracleResult::Verdict v) {
    switch (v) {
        case OracleResult::Verdict::yes: return "yes";
        case OracleResult::Verdict::no: return "no";
        default: return "budget_exceeded";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constructive 2-set edge colorings from 7-lists on subcubic graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "emit a named graph as graph6");
    std::string gen_name;
    gen->add_option("name", gen_name,
                    "petersen | gstar | two_k4 | flower:<k> | cycle:<len>")
        ->required();

    // decompose
    auto* dec = app.add_subcommand("decompose", "search for a MED decomposition");
    std::string dec_in, dec_method = "auto";
    long long dec_budget = 0;
    bool dec_relaxed = false;
    dec->add_option("--in", dec_in, "graph6 file, or - for stdin")->required();
    dec->add_option("--method", dec_method, "long-cycle | exhaustive | auto");
    dec->add_option("--budget", dec_budget, "node budget for the exhaustive search");
    dec->add_flag("--relaxed", dec_relaxed, "relaxed subcubic mode for the exhaustive search");

    // color
    auto* col = app.add_subcommand("color", "choose a 2-set coloring from 7-lists");
    std::string col_in, col_lists, col_method = "auto", col_med, col_trace;
    col->add_option("--in", col_in)->required();
    col->add_option("--lists", col_lists, "assignment JSON")->required();
    col->add_option("--method", col_method, "auto | 3ec | med | gstar");
    col->add_option("--med", col_med, "decomposition JSON (for --method med)");
    col->add_option("--trace", col_trace, "write the decision trace JSON here");

    // verify
    auto* ver = app.add_subcommand("verify", "check a coloring against lists");
    std::string ver_in, ver_lists, ver_col;
    int ver_s = 2;
    ver->add_option("--in", ver_in)->required();
    ver->add_option("--lists", ver_lists)->required();
    ver->add_option("--coloring", ver_col)->required();
    ver->add_option("--s", ver_s, "multiplicity");

    // fuzz
    auto* fz = app.add_subcommand("fuzz", "seeded random-assignment campaigns");
    std::string fz_in, fz_method = "auto";
    long long fz_trials = 100;
    uint64_t fz_seed = default_seed();
    int fz_r = 7, fz_palette = 14;
    bool fz_parallel = false;
    fz->add_option("--in", fz_in)->required();
    fz->add_option("--trials", fz_trials);
    fz->add_option("--seed", fz_seed);
    fz->add_option("--r", fz_r, "list size");
    fz->add_option("--palette", fz_palette);
    fz->add_option("--method", fz_method, "auto | 3ec | med | gstar");
    fz->add_flag("--parallel", fz_parallel, "spread trials across threads");

    // oracle
    auto* orc = app.add_subcommand("oracle", "exact brute-force ground truth");
    std::string orc_in, orc_lists;
    int orc_r = 0, orc_s = 2;
    long long orc_budget = 0;
    bool orc_parallel = false;
    orc->add_option("--in", orc_in)->required();
    orc->add_option("--r", orc_r, "palette size {0..r-1} (ignored with --lists)");
    orc->add_option("--s", orc_s, "multiplicity");
    orc->add_option("--lists", orc_lists, "assignment JSON to decide instead");
    orc->add_option("--budget", orc_budget, "node budget");
    orc->add_flag("--parallel", orc_parallel, "split the search across threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*gen) {
            std::cout << encode_graph6(generate_named(gen_name)) << "\n";
            return kOk;
        }

        if (*dec) {
            Graph g = read_graph(dec_in);
            if (dec_method == "long-cycle" || dec_method == "auto") {
                if (auto d = find_med_by_long_cycle(g)) {
                    std::cout << med_to_json(*d) << "\n";
                    return kOk;
                }
                if (dec_method == "long-cycle") {
                    std::cout << "{\"verdict\":\"none\"}\n";
                    return kNegative;
                }
            }
            if (dec_method == "exhaustive" || dec_method == "auto") {
                auto mode = dec_relaxed ? MedSearchMode::relaxed_subcubic
                                        : MedSearchMode::strict_cubic;
                MedSearchResult sr = find_med_exhaustive(g, dec_budget, mode);
                if (sr.verdict == MedSearchResult::Verdict::found) {
                    std::cout << med_to_json(*sr.decomposition) << "\n";
                    return kOk;
                }
                if (sr.verdict == MedSearchResult::Verdict::none) {
                    std::cout << "{\"verdict\":\"none\",\"nodes\":" << sr.nodes << "}\n";
                    return kNegative;
                }
                std::cout << "{\"verdict\":\"budget_exceeded\",\"nodes\":" << sr.nodes
                          << "}\n";
                return kUsage;
            }
            std::cerr << "unknown method: " << dec_method << "\n";
            return kUsage;
        }

        if (*col) {
            Graph g = read_graph(col_in);
            ListAssignment L = assignment_from_json(g, slurp(col_lists));
            ChooseOutcome outcome;
            if (col_method == "3ec") {
                auto tec = find_proper_3ec(g);
                if (!tec) {
                    std::cerr << "no proper 3-edge-coloring exists\n";
                    return kNegative;
                }
                outcome = choose_3ec(g, *tec, L);
            } else if (col_method == "med") {
                std::optional<MedDecomposition> med;
                if (!col_med.empty())
                    med = med_from_json(g, slurp(col_med));
                else if (auto d = find_med_by_long_cycle(g))
                    med = std::move(d);
                else if (auto sr = find_med_exhaustive(g, 5000000);
                         sr.verdict == MedSearchResult::Verdict::found)
                    med = std::move(sr.decomposition);
                if (!med) {
                    std::cerr << "no MED decomposition available\n";
                    return kNegative;
                }
                outcome = choose_med(g, *med, L);
            } else if (col_method == "gstar") {
                outcome = choose_gstar(g, L);
            } else {
                Choose72Result r = choose_72(g, L);
                if (r.route == Choose72Result::Route::unsupported) {
                    std::cerr << "unsupported: " << r.note << "\n";
                    return kNegative;
                }
                outcome = std::move(r.outcome);
            }
            if (!col_trace.empty()) write_file(col_trace, trace_to_json(outcome.trace));
            if (!outcome.ok()) {
                std::cerr << "contract_gap: " << *outcome.gap << "\n";
                return kContractGap;
            }
            auto violations = verify_set_coloring(g, L, *outcome.coloring, 2);
            if (!violations.empty()) {
                std::cerr << "contract_gap: output failed verification\n";
                return kContractGap;
            }
            std::cout << coloring_to_json(*outcome.coloring) << "\n";
            return kOk;
        }

        if (*ver) {
            Graph g = read_graph(ver_in);
            ListAssignment L = assignment_from_json(g, slurp(ver_lists));
            SetColoring phi = coloring_from_json(g, slurp(ver_col));
            auto violations = verify_set_coloring(g, L, phi, ver_s);
            if (violations.empty()) {
                std::cout << "ok\n";
                return kOk;
            }
            for (const auto& v : violations)
                std::cout << "violation(edge " << v.edge
                          << (v.other >= 0 ? ", edge " + std::to_string(v.other) : "")
                          << "): " << v.detail << "\n";
            return kNegative;
        }

        if (*fz) {
            Graph g = read_graph(fz_in);
            FuzzParams params;
            params.trials = fz_trials;
            params.seed = fz_seed;
            params.list_size = fz_r;
            params.palette = fz_palette;
            if (fz_method == "3ec")
                params.method = FuzzParams::Method::three_ec;
            else if (fz_method == "med")
                params.method = FuzzParams::Method::med;
            else if (fz_method == "gstar")
                params.method = FuzzParams::Method::gstar;
            RunReport rep =
                fz_parallel ? run_fuzz_parallel(g, params) : run_fuzz_serial(g, params);
            std::cout << report_to_json(rep) << "\n";
            if (rep.contract_gaps > 0) return kContractGap;
            return rep.failures > 0 ? kNegative : kOk;
        }

        if (*orc) {
            Graph g = read_graph(orc_in);
            OracleResult res;
            if (!orc_lists.empty()) {
                ListAssignment L = assignment_from_json(g, slurp(orc_lists));
                res = brute_force_choose(g, L, orc_s, orc_budget);
            } else if (orc_parallel) {
                res = brute_force_rs_colorable_parallel(g, orc_r, orc_s, orc_budget);
            } else {
                res = brute_force_rs_colorable(g, orc_r, orc_s, orc_budget);
            }
            std::cout << "{\"verdict\":\"" << verdict_name(res.verdict)
                      << "\",\"nodes\":" << res.nodes << "}\n";
            if (res.witness) std::cout << coloring_to_json(*res.witness) << "\n";
            if (res.verdict == OracleResult::Verdict::yes) return kOk;
            if (res.verdict == OracleResult::Verdict::no) return kNegative;
            return kUsage;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
