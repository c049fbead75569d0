#include <benchmark/benchmark.h>

#include <filesystem>

#include "cbas/cooccurrence.hpp"
#include "cbas/corpus.hpp"
#include "cbas/disambiguation.hpp"
#include "cbas/morphology.hpp"

namespace {

const std::filesystem::path kData = CBAS_BENCH_DATA_DIR;
const std::filesystem::path kResources = CBAS_BENCH_RESOURCE_DIR;

struct Fixture {
  cbas::Resources resources = cbas::load_resources(kResources);
  cbas::StopwordList stopwords = cbas::load_stopwords(kResources / "stopwords.txt");
  std::vector<cbas::RawDocument> raw = cbas::load_corpus(kData / "sample_corpus");
  std::vector<std::vector<std::string>> docs;
  std::string text;

  Fixture() {
    for (const auto& d : raw) {
      docs.push_back(cbas::prepare_document(d.text, stopwords));
      text += d.text + "\n";
    }
  }
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

void BM_BuildMatrix(benchmark::State& state) {
  const auto& f = fixture();
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cbas::build_matrix(f.docs, 3, threads));
}
BENCHMARK(BM_BuildMatrix)->Arg(1)->Arg(4);

void BM_GenerateCandidates(benchmark::State& state) {
  const auto& f = fixture();
  std::size_t words = 0;
  for (auto _ : state) {
    for (const auto& w : f.docs.front()) {
      benchmark::DoNotOptimize(cbas::generate_candidates(w, f.resources));
      ++words;
    }
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(words));
}
BENCHMARK(BM_GenerateCandidates);

void BM_StemText(benchmark::State& state) {
  const auto& f = fixture();
  const auto matrix = cbas::build_matrix(f.docs, 3);
  const cbas::Stemmer stemmer(f.resources, f.stopwords, matrix);
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(stemmer.stem_text(f.text, threads));
}
BENCHMARK(BM_StemText)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
