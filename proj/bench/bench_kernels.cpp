// Wall-clock comparison of the serial reference loop (jobs=1) against the
// OpenMP kernel (jobs=0) on the verification workloads, plus a consistency
// check that both produce identical residual tables.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "superint/verifier.hpp"

using namespace superint;

namespace {

double run_ms(const Model& model, const SampleSpec& spec, int jobs,
              std::vector<IntegralResult>& out) {
  const auto t0 = std::chrono::steady_clock::now();
  out = check_commutation(model, spec, jobs);
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void bench(const Model& model, int samples) {
  SampleSpec spec;
  spec.count = samples;
  std::vector<IntegralResult> serial, parallel;
  // warm-up
  {
    SampleSpec warm = spec;
    warm.count = 16;
    std::vector<IntegralResult> sink;
    run_ms(model, warm, 0, sink);
  }
  const double ts = run_ms(model, spec, 1, serial);
  const double tp = run_ms(model, spec, 0, parallel);
  bool identical = serial.size() == parallel.size();
  for (size_t i = 0; identical && i < serial.size(); ++i)
    identical = serial[i].max_residual == parallel[i].max_residual;
  std::printf("%-12s %5d pts  serial %8.1f ms  parallel %8.1f ms  speedup %.2fx  %s\n",
              model.name.c_str(), samples, ts, tp, ts / tp,
              identical ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int samples = argc > 1 ? std::atoi(argv[1]) : 2000;
  bench(model_by_name("coulomb6"), samples);
  bench(model_by_name("coulomb3"), samples);
  bench(model_by_name("oscillator4"), samples);
  bench(model_by_name("oscillator2", {{"n1", 2}, {"n2", 3}}), samples);
  return 0;
}
