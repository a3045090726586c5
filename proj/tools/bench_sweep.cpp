// Compares the serial reference sweep against the OpenMP kernels.
#include <chrono>
#include <cstdio>
#include <string>

#include "loopbv/model_io.hpp"
#include "loopbv/sweep.hpp"

using namespace loopbv;

namespace {

double run_once(const BVModel& model, const SweepOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckReport rep = run_axiom_sweep(model, opts);
  const auto t1 = std::chrono::steady_clock::now();
  if (!rep.passed()) {
    std::fprintf(stderr, "sweep failed on %s\n", model.name.c_str());
    std::exit(2);
  }
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::string spec = argc > 1 ? argv[1] : "U(2)";
  int window = argc > 2 ? std::atoi(argv[2]) : 8;
  int reps = argc > 3 ? std::atoi(argv[3]) : 3;

  ParsedModel parsed = resolve_model(spec);
  SweepOptions opts;
  opts.window.degree_bound = window;
  opts.window.free_exp_cap = 2;

  std::printf("model %s, window %d, %d reps\n", parsed.model.name.c_str(), window, reps);
  double serial = 1e300, parallel = 1e300;
  for (int r = 0; r < reps; ++r) {
    opts.parallel = false;
    serial = std::min(serial, run_once(parsed.model, opts));
    opts.parallel = true;
    parallel = std::min(parallel, run_once(parsed.model, opts));
  }
  std::printf("serial   %.3f s\n", serial);
  std::printf("parallel %.3f s\n", parallel);
  std::printf("speedup  %.2fx\n", serial / parallel);
  return 0;
}
