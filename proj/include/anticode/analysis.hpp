#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "anticode/budget.hpp"
#include "anticode/codes.hpp"
#include "anticode/rational.hpp"
#include "anticode/word.hpp"

namespace anticode {

enum class Method { exact_enum, coset, monte_carlo };

// Decoding error probabilities of a code: per-codeword values, their mean,
// and their maximum.  Exact methods carry every probability as a reduced
// rational; the Monte Carlo estimator fills the trial statistics instead.
struct ErrorReport {
  Method method = Method::exact_enum;

  std::vector<double> per_codeword;              // error rate per codeword
  std::vector<Rational> per_codeword_exact;      // set by the exact methods
  double average = 0.0;
  double maximum = 0.0;
  std::optional<Rational> average_exact;
  std::optional<Rational> maximum_exact;

  // Monte Carlo only.
  std::uint64_t trials = 0;
  double standard_error = 0.0;  // binomial SE of the average
  std::vector<std::uint64_t> per_codeword_trials;
  std::vector<std::uint64_t> per_codeword_errors;
};

// Exact error probabilities of the first-match decoder, by enumerating each
// codeword's consistency set and testing it against the earlier codewords.
// The first codeword always decodes perfectly.
ErrorReport exact_error_sequential(std::span<const Word> codewords, const Budget& budget = {});

// Exact error probabilities of the maximum-likelihood decoder: a received
// word consistent with t codewords decodes correctly with probability 1/t.
// For a linear code all per-codeword values coincide.
ErrorReport exact_error_ml(std::span<const Word> codewords, const Budget& budget = {});

// Coset route to the exact average error of a linear code: the receivable
// words are the full-weight words translated by the code, so their measure is
// alpha * 4^k where alpha counts the cosets that contain a full-weight word,
// and the average error is 1 - alpha/3^n.
struct CosetResult {
  std::uint64_t alpha = 0;
  Rational e_bar;
};
CosetResult coset_alpha(const LinearCode& code, const Budget& budget = {});

// Upper bound on the average error from a weight/distance distribution:
// (1/2) * sum_{s>=1} A_s (2/3)^s.
double bound_theorem1(const WeightDistribution& weights);

struct TheoremBound {
  double tight = 0.0;  // with coefficient M-1
  double loose = 0.0;  // with coefficient M
};

// Average-error bound from minimum distance alone:
// (M-1)/2 * (2/3)^d  <  M/2 * (2/3)^d.
TheoremBound bound_theorem2(std::uint64_t codeword_count, int min_distance);

// Maximum-error bound for the first-match decoder:
// (M-1) * (2/3)^d  <  M * (2/3)^d.
TheoremBound bound_theorem3(std::uint64_t codeword_count, int min_distance);

// All distance bounds of a code in one record, with the weight-distribution
// bound when a distribution is at hand.  By construction
// theorem1 <= theorem2_tight (the distribution has no mass below d) and
// tight < loose in both families.
struct BoundReport {
  std::optional<double> theorem1;
  double theorem2_tight = 0.0, theorem2_loose = 0.0;
  double theorem3_tight = 0.0, theorem3_loose = 0.0;
};
BoundReport bound_report(std::uint64_t codeword_count, int min_distance,
                         const std::optional<WeightDistribution>& weights = std::nullopt);

// Ordered-pair distance counts of an arbitrary word set; counts[s] / M is the
// distance distribution (counts[0] = M).
std::vector<std::uint64_t> distance_distribution_counts(std::span<const Word> codewords,
                                                        const Budget& budget = {});

// The distribution bound computed from pairwise distances, valid for
// arbitrary (not necessarily linear) codes.
double bound_theorem1_from_distance_distribution(std::span<const Word> codewords,
                                                 const Budget& budget = {});

// Threshold ratio beta solving 1 - H4(x) + x log4(2/3) = 0 (bisection on
// [0.3, 0.6] to 1e-9) and the corresponding achievable rate 1 - H4(beta).
struct GvThreshold {
  double beta = 0.0;
  double rate = 0.0;
};
GvThreshold gv_threshold();

}  // namespace anticode
