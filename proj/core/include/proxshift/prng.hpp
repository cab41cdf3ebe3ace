// ProxShift - proximal splitting with strong convexity shifting
// Copyright 2026 ProxShift Contributors
// Licensed under Apache 2.0

#pragma once

#include <array>
#include <cstdint>

#include <Eigen/Core>

namespace proxshift {

/// Deterministic pseudo-random generator with a bit-exact cross-platform
/// contract. Every random draw in this library flows through this class, so a
/// seed pins experiment data exactly, on any platform, forever.
///
/// Contract (normative, frozen by golden-value tests):
///  - State: xoshiro256** with four 64-bit words. One step produces
///    rotl(s1 * 5, 7) * 9, then updates the state with the xorshift schedule
///    (t = s1 << 17; s2 ^= s0; s3 ^= s1; s1 ^= s2; s0 ^= s3; s2 ^= t;
///    s3 = rotl(s3, 45)).
///  - Seeding: the four state words are the first four outputs of a
///    splitmix64 stream started at the seed. splitmix64 advances its state by
///    0x9E3779B97F4A7C15 and finalizes with the xor-multiply mix
///    (0xBF58476D1CE4E5B9, 0x94D049BB133111EB).
///  - uniform01: (next_u64() >> 11) * 2^-53, uniform on [0, 1).
///  - child(k): an independent stream for concurrent work. Its seed is the
///    (k+1)-th output of a splitmix64 stream started at
///    seed ^ 0x8E819D4D135C9CA9. The xor constant keeps child seeds disjoint
///    from the parent's own state words, which consume the stream at the
///    plain seed.
class SeededGenerator {
 public:
  explicit SeededGenerator(std::uint64_t seed);

  /// Next raw 64-bit output.
  std::uint64_t next_u64();

  /// Next double, uniform on [0, 1), with 53 random mantissa bits.
  double uniform01();

  /// Independent child stream number `index`; see class contract.
  SeededGenerator child(std::uint64_t index) const;

  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
  std::array<std::uint64_t, 4> state_;
};

/// Fills an m-by-n matrix with uniform01 draws in row-major order: all of row
/// 0 left to right, then row 1, and so on. The draw order is part of the
/// reproducibility contract.
Eigen::MatrixXd fill_matrix(SeededGenerator& gen, Eigen::Index rows,
                            Eigen::Index cols);

/// Fills a vector with uniform01 draws, index 0 first.
Eigen::VectorXd fill_vector(SeededGenerator& gen, Eigen::Index size);

}  // namespace proxshift
