// Times the serial reference against the OpenMP path for the three hot
// kernels and checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <string>

#include "skc/benign.hpp"
#include "skc/junta.hpp"
#include "skc/mc.hpp"
#include "skc/parallel.hpp"

namespace {

template <class Fn>
double time_of(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

void report(const char* kernel, double serial_s, double parallel_s, bool equal) {
  std::printf("%-28s %10.3f ms %10.3f ms   x%.2f   results %s\n", kernel,
              serial_s * 1e3, parallel_s * 1e3, serial_s / parallel_s,
              equal ? "equal" : "DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t trials = 200000;
  int sweep_len = 20;
  if (argc > 1) trials = std::stoull(argv[1]);
  if (argc > 2) sweep_len = std::stoi(argv[2]);

  std::printf("workers: %d\n", skc::worker_count());
  std::printf("%-28s %13s %13s\n", "kernel", "serial", "parallel");

  {
    skc::FrequencyEstimate s, p;
    const double ts = time_of([&] {
      s = skc::estimate_event(skc::McEvent::not_nice, 3, 201, trials, 42,
                              skc::Exec::Serial);
    });
    const double tp = time_of([&] {
      p = skc::estimate_event(skc::McEvent::not_nice, 3, 201, trials, 42,
                              skc::Exec::Parallel);
    });
    report("mc not_nice m=3 n=201", ts, tp, s.successes == p.successes);
  }

  {
    const auto alg = skc::wrap_benign<std::uint64_t>(
        skc::adversarial_benign_scheme(
            [](const skc::BitString& x) {
              return static_cast<std::uint64_t>(skc::popcount(x) & 1);
            },
            sweep_len),
        0);
    skc::Rational s, p;
    const double ts = time_of(
        [&] { s = skc::maybe_fraction<std::uint64_t>(alg, sweep_len, skc::Exec::Serial); });
    const double tp = time_of(
        [&] { p = skc::maybe_fraction<std::uint64_t>(alg, sweep_len, skc::Exec::Parallel); });
    report(("maybe_fraction n=" + std::to_string(sweep_len)).c_str(), ts, tp, s == p);
  }

  {
    const skc::PiercedSet ps = skc::toy_pierced_sat();
    const auto nu = skc::junta_nu(ps);
    const auto heuristic = skc::pierced_heuristic(ps);
    skc::Rational s, p;
    const double ts = time_of([&] {
      s = skc::error_weight(heuristic, nu, ps.member, skc::kMaxJuntaLength,
                            skc::Exec::Serial);
    });
    const double tp = time_of([&] {
      p = skc::error_weight(heuristic, nu, ps.member, skc::kMaxJuntaLength,
                            skc::Exec::Parallel);
    });
    report("junta error_weight n=16", ts, tp, s == p);
  }

  return 0;
}
