#include "setalg/sign_partition.hpp"

#include <random>

#include "setalg/errors.hpp"

namespace setalg {

SignBlock block_of(const Rational& q) {
  if (q == 0) throw Error("zero has no block");
  return q > 0 ? SignBlock::positive : SignBlock::negative;
}

std::string to_string(SignBlock block) {
  return block == SignBlock::positive ? "positive" : "negative";
}

PartitionReport check_partition_property(std::size_t max_length, std::size_t trials,
                                         std::uint64_t seed) {
  if (max_length == 0) throw Error("sequence length bound must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> length_dist(1, max_length);
  std::uniform_int_distribution<long> magnitude(1, 1000);
  std::bernoulli_distribution coin(0.5);

  auto draw = [&](SignBlock block) {
    Rational q = make_rational(magnitude(rng), magnitude(rng));
    return block == SignBlock::positive ? q : Rational(-q);
  };

  PartitionReport report;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t k = length_dist(rng);
    const SignBlock left = coin(rng) ? SignBlock::positive : SignBlock::negative;
    const SignBlock right = coin(rng) ? SignBlock::positive : SignBlock::negative;
    PartitionTrial trial;
    for (std::size_t i = 0; i < k; ++i) {
      trial.alpha.push_back(draw(left));
      trial.beta.push_back(draw(right));
      if (block_of(trial.alpha.back()) != left || block_of(trial.beta.back()) != right) {
        throw Error("sampled value left its block");
      }
      trial.dot += trial.alpha.back() * trial.beta.back();
    }
    ++report.trials;
    if (trial.dot == 0) {
      ++report.failures;
      if (!report.first_failure) report.first_failure = std::move(trial);
    }
  }
  return report;
}

}  // namespace setalg
