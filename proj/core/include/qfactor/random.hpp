#pragma once

#include <cstdint>
#include <random>

#include "qfactor/tensor.hpp"

namespace qfactor {

/// Root of a reproducible sample stream. Identical seeds give identical streams on every platform.
struct Seed {
  std::uint64_t value = 42;

  friend bool operator==(Seed a, Seed b) { return a.value == b.value; }
};

std::uint64_t splitmix64(std::uint64_t x);

/// Seed of trial `index` under `root`: splitmix64(root + (index + 1) * 0x9E3779B97F4A7C15).
/// Every randomized campaign derives per-trial seeds this way, so a single trial can be
/// rebuilt from (root, index) alone.
Seed derive_seed(Seed root, std::uint64_t index);

/// Standard normal deviates from mt19937_64 through Box-Muller. No std:: distributions are
/// involved, since their output is implementation-defined.
class GaussianStream {
 public:
  explicit GaussianStream(Seed seed) : engine_(seed.value) {}

  /// Uniform on (0, 1].
  double uniform();
  double normal();
  /// Real and imaginary parts independent N(0, 1/2), so E|z|^2 = 1.
  Complex complex_normal();

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

/// Ginibre matrix: iid complex_normal entries.
ComplexMatrix ginibre(int rows, int cols, GaussianStream& rng);

/// Haar-distributed unitary (QR of a Ginibre matrix with the R-diagonal phases removed).
ComplexMatrix random_unitary(int dim, Seed seed);

/// Hermitian matrix (G + G^dagger)/2 with G Ginibre, scaled by `scale`.
ComplexMatrix random_hermitian(int dim, Seed seed, double scale = 1.0);

}  // namespace qfactor
