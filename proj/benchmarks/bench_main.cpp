#include <benchmark/benchmark.h>

// Distro libbenchmark_main.a ships LTO bytecode only; provide main here.
BENCHMARK_MAIN();
