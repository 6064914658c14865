// Serial reference vs OpenMP scan over a replicated corpus.
#include <benchmark/benchmark.h>

#include "cryptolint/corpus/corpus.hpp"
#include "cryptolint/scan.hpp"

namespace {

using namespace cryptolint;

const frontend::ProjectModel& model(int copies) {
    static std::map<int, frontend::ProjectModel> cache;
    auto it = cache.find(copies);
    if (it != cache.end()) return it->second;
    std::vector<std::pair<std::string, std::string>> files;
    auto cases = corpus::build_corpus();
    for (int i = 0; i < copies; ++i) {
        for (const auto& c : cases) {
            for (const auto& f : c.files) files.emplace_back("copy" + std::to_string(i) + "/" + f.path, f.contents);
        }
    }
    return cache.emplace(copies, frontend::make_project("bench", std::move(files), true)).first->second;
}

void run(benchmark::State& state, Execution exec) {
    const auto& project = model(static_cast<int>(state.range(0)));
    rules::RuleConfig config;
    std::size_t n = 0;
    for (auto _ : state) {
        auto findings = scan_project(project, config, exec);
        n = findings.size();
        benchmark::DoNotOptimize(findings.data());
    }
    state.counters["files"] = static_cast<double>(project.files.size());
    state.counters["findings"] = static_cast<double>(n);
}

void BM_ScanSerial(benchmark::State& state) { run(state, Execution::Serial); }
void BM_ScanParallel(benchmark::State& state) { run(state, Execution::Parallel); }

BENCHMARK(BM_ScanSerial)->Arg(1)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(1)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
