#include <benchmark/benchmark.h>

#include "lpacket/chartab.hpp"
#include "lpacket/llc.hpp"
#include "lpacket/report.hpp"

namespace {

using lpacket::sgroups::PartitionSpec;

PartitionSpec part(std::initializer_list<int> parts) {
  PartitionSpec p;
  p.parts = parts;
  return p;
}

void BM_BuildCover(benchmark::State& state) {
  PartitionSpec p = part({1, 1, 1, 1, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(lpacket::sgroups::build_s_phi_sc(p));
  }
}
BENCHMARK(BM_BuildCover);

void BM_CharacterTableOrder32(benchmark::State& state) {
  auto data = lpacket::sgroups::build_s_phi_sc(part({1, 1, 1, 1, 1}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        lpacket::chartab::CharacterTable::build(data.group()));
  }
}
BENCHMARK(BM_CharacterTableOrder32);

void BM_CharacterTableOrder64(benchmark::State& state) {
  auto data = lpacket::sgroups::build_s_phi_sc(part({1, 1, 1, 1, 1, 1}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        lpacket::chartab::CharacterTable::build(data.group()));
  }
}
BENCHMARK(BM_CharacterTableOrder64);

void BM_PacketReport(benchmark::State& state) {
  lpacket::llc::CaseSpec spec;
  spec.case_id = lpacket::llc::CaseId::kIB;
  spec.partition = part({1, 1, 1, 1, 1});
  spec.form = lpacket::llc::Form::kSp11;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lpacket::llc::packet_report(spec));
  }
}
BENCHMARK(BM_PacketReport);

void BM_ClassifyAll(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(lpacket::report::classify_all(
        lpacket::report::Format::kText, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_ClassifyAll)->Arg(1)->Arg(4);

void BM_EmbeddingSearch(benchmark::State& state) {
  auto small = lpacket::sgroups::build_s_phi_sc(part({1, 1, 1, 1}));
  auto big = lpacket::sgroups::build_s_phi_sc(part({1, 1, 1, 1, 1}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lpacket::sgroups::find_embedding(
        small.group(), big.group(), {{small.minus_one, big.minus_one}}));
  }
}
BENCHMARK(BM_EmbeddingSearch);

}  // namespace

BENCHMARK_MAIN();
