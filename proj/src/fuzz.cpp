#include "choose72/fuzz.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "choose72/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace choose72 {

std::string graph_digest(const Graph& g) {
    std::string text = encode_graph6(g);
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

struct TrialResult {
    bool success = false;
    bool gap = false;
    std::string what;
};

void prepare(const Graph& g, FuzzParams& params) {
    switch (params.method) {
        case FuzzParams::Method::three_ec:
            if (!params.coloring) {
                auto tec = find_proper_3ec(g);
                if (!tec) throw std::invalid_argument("graph is not 3-edge-colorable");
                params.coloring = std::move(tec);
            }
            break;
        case FuzzParams::Method::med:
            if (!params.decomposition) {
                auto med = find_med_by_long_cycle(g);
                if (!med) {
                    auto sr = find_med_exhaustive(g, 5000000);
                    if (sr.verdict != MedSearchResult::Verdict::found)
                        throw std::invalid_argument("no decomposition available");
                    med = std::move(sr.decomposition);
                }
                params.decomposition = std::move(med);
            }
            break;
        default:
            break;
    }
}

TrialResult one_trial(const Graph& g, const FuzzParams& params, long long trial) {
    ListAssignment L = make_uniform_assignment(
        g, params.list_size, params.palette, mix_seed(params.seed, trial));
    ChooseOutcome outcome;
    switch (params.method) {
        case FuzzParams::Method::three_ec:
            outcome = choose_3ec(g, *params.coloring, L);
            break;
        case FuzzParams::Method::med:
            outcome = choose_med(g, *params.decomposition, L);
            break;
        case FuzzParams::Method::gstar:
            outcome = choose_gstar(g, L);
            break;
        case FuzzParams::Method::auto_route: {
            Choose72Result r = choose_72(g, L);
            if (r.route == Choose72Result::Route::unsupported)
                return {false, false, "unsupported: " + r.note};
            outcome = std::move(r.outcome);
            break;
        }
    }
    TrialResult res;
    if (!outcome.ok()) {
        res.gap = true;
        res.what = outcome.gap.value_or("unspecified gap");
        return res;
    }
    auto violations = verify_set_coloring(g, L, *outcome.coloring, 2);
    if (!violations.empty()) {
        res.what = "verification failed: " + violations.front().detail;
        return res;
    }
    res.success = true;
    return res;
}

RunReport assemble(const Graph& g, const FuzzParams& params,
                   std::vector<TrialResult> results, double wall_ms) {
    RunReport rep;
    rep.command = "fuzz";
    rep.input_digest = graph_digest(g);
    rep.trials = params.trials;
    rep.seed = params.seed;
    rep.wall_ms = wall_ms;
    for (long long t = 0; t < params.trials; ++t) {
        const TrialResult& r = results[t];
        if (r.success) {
            rep.successes++;
        } else if (r.gap) {
            rep.contract_gaps++;
            rep.failure_detail.push_back({t, r.what, true});
        } else {
            rep.failures++;
            rep.failure_detail.push_back({t, r.what, false});
        }
    }
    rep.outcome = rep.successes == rep.trials ? "ok" : "failed";
    return rep;
}

}  // namespace

RunReport run_fuzz_serial(const Graph& g, FuzzParams params) {
    prepare(g, params);
    auto t0 = std::chrono::steady_clock::now();
    std::vector<TrialResult> results(params.trials);
    for (long long t = 0; t < params.trials; ++t) results[t] = one_trial(g, params, t);
    auto t1 = std::chrono::steady_clock::now();
    return assemble(g, params, std::move(results),
                    std::chrono::duration<double, std::milli>(t1 - t0).count());
}

RunReport run_fuzz_parallel(const Graph& g, FuzzParams params) {
    prepare(g, params);
    auto t0 = std::chrono::steady_clock::now();
    std::vector<TrialResult> results(params.trials);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (long long t = 0; t < params.trials; ++t) results[t] = one_trial(g, params, t);
    auto t1 = std::chrono::steady_clock::now();
    return assemble(g, params, std::move(results),
                    std::chrono::duration<double, std::milli>(t1 - t0).count());
}

}  // namespace choose72
