#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "setalg/rational.hpp"

namespace setalg {

// Partition of the nonzero rationals into positives and negatives. Any two
// equal-length sequences drawn from single blocks have a nonzero dot product.
enum class SignBlock { negative, positive };

SignBlock block_of(const Rational& q);
std::string to_string(SignBlock block);

struct PartitionTrial {
  std::vector<Rational> alpha;
  std::vector<Rational> beta;
  Rational dot;
};

struct PartitionReport {
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::optional<PartitionTrial> first_failure;
  bool holds() const { return failures == 0; }
};

// Draws `trials` random pairs of sequences (each of length <= max_length,
// alpha from one block, beta from one block) and checks every dot product is
// nonzero. Deterministic in `seed`.
PartitionReport check_partition_property(std::size_t max_length, std::size_t trials,
                                         std::uint64_t seed);

}  // namespace setalg
