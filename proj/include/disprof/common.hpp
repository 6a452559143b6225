#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace disprof {

using cd = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

// Squared-mass fraction a dilation may push off the frequency lattice before
// it is refused.
inline constexpr double alias_mass_tol = 1e-8;

class aliasing_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class admissibility_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Threading. One process-wide degree, set once at startup. Work items must
// write only to slots they own, so results do not depend on the degree.
// ---------------------------------------------------------------------------

void set_thread_count(int n);
int thread_count();

namespace detail {
void run_partitioned(std::size_t n, const std::function<void(std::size_t, std::size_t)>& chunk);
}

template <class F>
void parallel_for(std::size_t n, F&& fn) {
  detail::run_partitioned(n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) fn(i);
  });
}

// ---------------------------------------------------------------------------
// Compensated (Neumaier) summation for the tight norm tolerances.
// ---------------------------------------------------------------------------

class NeumaierSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// ---------------------------------------------------------------------------
// Deterministic RNG. Box-Muller is hand-pinned so that streams are identical
// across standard libraries (std::normal_distribution is not portable).
// ---------------------------------------------------------------------------

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // E|z|^2 = 1
  cd cnormal() { return cd(normal(), normal()) / std::sqrt(2.0); }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace disprof
