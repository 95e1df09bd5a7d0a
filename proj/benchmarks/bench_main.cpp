#include <benchmark/benchmark.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hott/driver.hpp"
#include "hott/eval.hpp"
#include "hott/parser.hpp"
#include "hott/printer.hpp"

namespace fs = std::filesystem;
using namespace hott;

namespace {

std::vector<std::string> stdlibFiles() {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(HOTT_BENCH_STDLIB))
    if (e.path().extension() == ".hott") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

const GlobalEnv& stdlibEnv() {
  static GlobalEnv env = [] {
    GlobalEnv e;
    DriverOptions opts;
    opts.stdlibDir = HOTT_BENCH_STDLIB;
    std::ostringstream sink;
    runCheck(stdlibFiles(), opts, sink, &e);
    return e;
  }();
  return env;
}

// A left-nested application tower: (((f v) v) ... v) with f = fun x => x,
// forcing `depth` beta steps per normalization.
TermPtr betaTower(int depth) {
  TermPtr t = lam(var(0));
  for (int i = 0; i < depth; ++i) t = app(t, lam(var(0)));
  return t;
}

void BM_whnf_beta_tower(benchmark::State& state) {
  GlobalEnv env;
  TermPtr t = betaTower(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(whnf(env, t));
}
BENCHMARK(BM_whnf_beta_tower)->Arg(16)->Arg(256)->Arg(4096);

// Unfolds a chain of path compositions down to refl through the J rule.
void BM_whnf_concat_chain(benchmark::State& state) {
  const GlobalEnv& env = stdlibEnv();
  std::string text = "refl Bool true";
  for (int i = 0; i < state.range(0); ++i)
    text = "concat Bool true true true (" + text + ") (refl Bool true)";
  TermPtr t = parseTerm(text, "<bench>");
  TermPtr want = parseTerm("refl Bool true", "<bench>");
  for (auto _ : state) benchmark::DoNotOptimize(conv(env, t, want));
}
BENCHMARK(BM_whnf_concat_chain)->Arg(4)->Arg(16)->Arg(64);

void BM_conv_stdlib_types(benchmark::State& state) {
  const GlobalEnv& env = stdlibEnv();
  std::vector<TermPtr> types;
  for (const auto& d : env.declarations()) types.push_back(d.type);
  for (auto _ : state) {
    size_t hits = 0;
    for (size_t i = 0; i + 1 < types.size(); i += 7)
      hits += conv(env, types[i], types[i + 1]) ? 1 : 0;
    benchmark::DoNotOptimize(hits);
  }
}
BENCHMARK(BM_conv_stdlib_types);

void BM_parse_stdlib(benchmark::State& state) {
  std::vector<std::pair<std::string, std::string>> sources;
  for (const auto& f : stdlibFiles()) {
    std::ifstream in(f);
    std::ostringstream ss;
    ss << in.rdbuf();
    sources.emplace_back(f, ss.str());
  }
  for (auto _ : state) {
    size_t items = 0;
    for (const auto& [name, text] : sources)
      items += parseFile(text, name).items.size();
    benchmark::DoNotOptimize(items);
  }
}
BENCHMARK(BM_parse_stdlib);

void BM_check_stdlib(benchmark::State& state) {
  std::vector<std::string> files = stdlibFiles();
  for (auto _ : state) {
    DriverOptions opts;
    opts.stdlibDir = HOTT_BENCH_STDLIB;
    std::ostringstream sink;
    benchmark::DoNotOptimize(runCheck(files, opts, sink));
  }
}
BENCHMARK(BM_check_stdlib)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
