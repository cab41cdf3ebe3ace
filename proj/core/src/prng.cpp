// ProxShift - proximal splitting with strong convexity shifting
// Copyright 2026 ProxShift Contributors
// Licensed under Apache 2.0

#include "proxshift/prng.hpp"

#include "proxshift/errors.hpp"

namespace proxshift {
namespace {

constexpr std::uint64_t kSplitmixGamma = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kChildStreamXor = 0x8E819D4D135C9CA9ULL;

std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += kSplitmixGamma;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

SeededGenerator::SeededGenerator(std::uint64_t seed) : seed_(seed) {
  std::uint64_t sm = seed;
  for (auto& word : state_) {
    word = splitmix64_next(sm);
  }
}

std::uint64_t SeededGenerator::next_u64() {
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double SeededGenerator::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

SeededGenerator SeededGenerator::child(std::uint64_t index) const {
  std::uint64_t sm = seed_ ^ kChildStreamXor;
  std::uint64_t out = 0;
  for (std::uint64_t i = 0; i <= index; ++i) {
    out = splitmix64_next(sm);
  }
  return SeededGenerator(out);
}

Eigen::MatrixXd fill_matrix(SeededGenerator& gen, Eigen::Index rows,
                            Eigen::Index cols) {
  if (rows <= 0 || cols <= 0) {
    throw DimensionError("fill_matrix: rows and cols must be positive");
  }
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = gen.uniform01();
    }
  }
  return m;
}

Eigen::VectorXd fill_vector(SeededGenerator& gen, Eigen::Index size) {
  if (size <= 0) {
    throw DimensionError("fill_vector: size must be positive");
  }
  Eigen::VectorXd v(size);
  for (Eigen::Index i = 0; i < size; ++i) {
    v(i) = gen.uniform01();
  }
  return v;
}

}  // namespace proxshift
