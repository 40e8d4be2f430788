#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "choose72/chooser.hpp"
#include "choose72/color.hpp"
#include "choose72/decomposition.hpp"
#include "choose72/graph.hpp"

namespace choose72 {

struct FuzzParams {
    long long trials = 100;
    uint64_t seed = 0;
    int list_size = 7;
    int palette = 14;

    enum class Method { auto_route, three_ec, med, gstar };
    Method method = Method::auto_route;

    // contexts for the fixed-route methods; computed on demand when absent
    std::optional<ThreeEdgeColoring> coloring;
    std::optional<MedDecomposition> decomposition;
};

struct TrialFailure {
    long long trial;
    std::string what;
    bool contract_gap;
};

struct RunReport {
    std::string command;
    std::string input_digest;
    std::string outcome;  // "ok" or "failed"
    long long trials = 0;
    long long successes = 0;
    long long failures = 0;
    long long contract_gaps = 0;
    double wall_ms = 0;
    uint64_t seed = 0;
    std::vector<TrialFailure> failure_detail;  // sorted by trial
};

/// FNV-1a of the canonical graph6 encoding.
std::string graph_digest(const Graph& g);

/// Per-trial: a fresh seeded assignment, the configured chooser, independent
/// verification. Reports are byte-identical across the serial and parallel
/// runners except for wall_ms.
RunReport run_fuzz_serial(const Graph& g, FuzzParams params);
RunReport run_fuzz_parallel(const Graph& g, FuzzParams params);

}  // namespace choose72
