// Serial vs OpenMP throughput for the fuzz runner and the colorability
// oracle. Build and run: ./choose72_bench [trials]

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "choose72/fuzz.hpp"
#include "choose72/oracle.hpp"

using namespace choose72;
using clock_type = std::chrono::steady_clock;

namespace {

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

void bench_fuzz(const char* name, const Graph& g, FuzzParams params) {
    auto t0 = clock_type::now();
    RunReport serial = run_fuzz_serial(g, params);
    double serial_ms = ms_since(t0);

    t0 = clock_type::now();
    RunReport parallel = run_fuzz_parallel(g, params);
    double parallel_ms = ms_since(t0);

    bool same = serial.successes == parallel.successes &&
                serial.failures == parallel.failures &&
                serial.contract_gaps == parallel.contract_gaps;
    std::printf("fuzz %-12s trials=%-6lld serial %8.1f ms   omp %8.1f ms   x%.2f   %s\n",
                name, params.trials, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                same ? "reports agree" : "REPORTS DIFFER");
}

void bench_oracle(const char* name, const Graph& g, int r, int s) {
    auto t0 = clock_type::now();
    OracleResult serial = brute_force_rs_colorable(g, r, s);
    double serial_ms = ms_since(t0);

    t0 = clock_type::now();
    OracleResult parallel = brute_force_rs_colorable_parallel(g, r, s);
    double parallel_ms = ms_since(t0);

    std::printf("oracle %-10s (%d,%d)        serial %8.1f ms   omp %8.1f ms   x%.2f   %s\n",
                name, r, s, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                serial.verdict == parallel.verdict ? "verdicts agree" : "VERDICTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
    long long trials = argc > 1 ? std::stoll(argv[1]) : 2000;
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; parallel runners fall back to serial loops\n");
#endif

    {
        FuzzParams p;
        p.trials = trials;
        p.seed = 7;
        p.method = FuzzParams::Method::med;
        bench_fuzz("petersen", generate_petersen(), p);
        bench_fuzz("flower:7", generate_flower_snark(7), p);
    }
    {
        FuzzParams p;
        p.trials = trials;
        p.seed = 7;
        p.method = FuzzParams::Method::gstar;
        bench_fuzz("gstar", generate_gstar(), p);
    }
    bench_oracle("two_k4", generate_two_k4_gadget(), 6, 2);
    bench_oracle("two_k4", generate_two_k4_gadget(), 8, 2);
    return 0;
}
