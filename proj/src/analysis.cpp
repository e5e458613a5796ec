#include "anticode/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "anticode/decode.hpp"

namespace anticode {

namespace {

struct PackedCode {
  std::size_t n = 0;
  std::uint64_t full;  // nonzero-lane mask for n symbols
  std::vector<std::uint64_t> words;
};

PackedCode pack_code(std::span<const Word> codewords, std::size_t min_size) {
  if (codewords.size() < min_size)
    throw std::invalid_argument("need at least " + std::to_string(min_size) + " codewords");
  PackedCode pc;
  pc.n = codewords[0].length();
  if (pc.n == 0 || pc.n > 32)
    throw std::invalid_argument("exact analysis supports 1 <= n <= 32");
  for (const auto& w : codewords) {
    if (w.length() != pc.n) throw std::invalid_argument("codeword lengths differ");
    pc.words.push_back(w.packed());
  }
  pc.full = packed::kLoMask & packed::symbol_mask(pc.n);
  return pc;
}

bool consistent(std::uint64_t y, std::uint64_t c, std::uint64_t full) {
  return packed::nonzero_lanes(y ^ c) == full;
}

void check_exact_budget(std::size_t n, std::size_t m, const Budget& budget) {
  const std::uint64_t sz = pow3_checked(n);
  if (sz > budget.exact_ops / (m == 0 ? 1 : m))
    throw BudgetExceeded("exact enumeration needs 3^" + std::to_string(n) + " * " +
                         std::to_string(m) + " steps, over the budget of " +
                         std::to_string(budget.exact_ops) +
                         "; the monte-carlo estimator has no such limit");
}

void finish_exact_report(ErrorReport& r) {
  r.per_codeword.reserve(r.per_codeword_exact.size());
  for (const auto& e : r.per_codeword_exact) r.per_codeword.push_back(e.value());
  r.maximum_exact = *std::max_element(r.per_codeword_exact.begin(), r.per_codeword_exact.end());
  r.average = r.average_exact->value();
  r.maximum = r.maximum_exact->value();
  if (!(r.average_exact->num() > 0))
    throw std::logic_error("average error of a code with M >= 2 must be positive");
  if (*r.average_exact > *r.maximum_exact)
    throw std::logic_error("average error above maximum error");
}

}  // namespace

ErrorReport exact_error_sequential(std::span<const Word> codewords, const Budget& budget) {
  const PackedCode pc = pack_code(codewords, 2);
  const std::size_t m = pc.words.size();
  check_exact_budget(pc.n, m, budget);
  const std::uint64_t pow3 = pow3_checked(pc.n);

  ErrorReport r;
  r.method = Method::exact_enum;
  std::uint64_t covered_total = 0;  // members of earlier consistency sets, summed over i
  for (std::size_t i = 0; i < m; ++i) {
    std::uint64_t covered = 0;
    enumerate_consistent_words(Word::from_packed(pc.words[i], pc.n), [&](std::uint64_t y) {
      for (std::size_t j = 0; j < i; ++j) {
        if (consistent(y, pc.words[j], pc.full)) {
          ++covered;
          return;
        }
      }
    });
    covered_total += covered;
    r.per_codeword_exact.emplace_back(covered, pow3);
  }
  r.average_exact = Rational(covered_total, pow3) / m;
  finish_exact_report(r);
  return r;
}

ErrorReport exact_error_ml(std::span<const Word> codewords, const Budget& budget) {
  const PackedCode pc = pack_code(codewords, 2);
  const std::size_t m = pc.words.size();
  check_exact_budget(pc.n, m, budget);
  const std::uint64_t pow3 = pow3_checked(pc.n);

  ErrorReport r;
  r.method = Method::exact_enum;
  std::uint64_t union_size = 0;  // receivable words, each counted at its first codeword
  std::vector<std::uint64_t> tally(m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    std::fill(tally.begin(), tally.end(), 0);
    enumerate_consistent_words(Word::from_packed(pc.words[i], pc.n), [&](std::uint64_t y) {
      std::size_t t = 0, first = m;
      for (std::size_t j = 0; j < m; ++j) {
        if (consistent(y, pc.words[j], pc.full)) {
          ++t;
          if (first == m) first = j;
        }
      }
      ++tally[t];
      if (first == i) ++union_size;
    });
    // Pr{wrong | c_i sent} = sum_t tally[t] * (1 - 1/t) / 3^n.
    Rational e_i;
    for (std::size_t t = 2; t <= m; ++t) {
      if (tally[t] == 0) continue;
      e_i = e_i + Rational(tally[t] * (t - 1), t);
    }
    r.per_codeword_exact.push_back(e_i / pow3);
  }

  // The mean of the per-codeword values collapses to the same union measure
  // the first-match decoder has; compute it both ways and insist they agree.
  r.average_exact = Rational(std::uint64_t(m) * pow3 - union_size, std::uint64_t(m) * pow3);
  Rational mean;
  for (const auto& e : r.per_codeword_exact) mean = mean + e;
  mean = mean / m;
  if (!(mean == *r.average_exact))
    throw std::logic_error("maximum-likelihood average disagrees with the union measure");
  finish_exact_report(r);
  return r;
}

CosetResult coset_alpha(const LinearCode& code, const Budget& budget) {
  const std::size_t n = code.length();
  const std::size_t k = code.dimension();
  if (n > 32) throw BudgetExceeded("coset enumeration supports n <= 32");
  const std::uint64_t pow3 = pow3_checked(n);
  if (pow3 > budget.coset_words)
    throw BudgetExceeded("coset enumeration needs 3^" + std::to_string(n) +
                         " steps, over the budget of " + std::to_string(budget.coset_words));

  // Coset label: the non-pivot coordinates of the canonical representative
  // (word minus the codeword matching it on the pivot columns), packed two
  // bits per symbol.
  const auto& rref = code.reduced_rows();
  const auto& pivots = code.pivot_columns();
  std::vector<bool> is_pivot(n, false);
  for (const auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  auto syndrome_of = [&](Word y) {
    for (std::size_t i = 0; i < k; ++i) {
      const F4 c = y.get(pivots[i]);
      if (!c.is_zero()) y = y.plus(rref[i].times(c));
    }
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < free_cols.size(); ++j)
      s = packed::set(s, j, y.get(free_cols[j]).value());
    return s;
  };

  // syndrome(y + delta e_p) = syndrome(y) ^ col[p][delta]; precompute columns.
  std::vector<std::array<std::uint64_t, 4>> col(n);
  for (std::size_t p = 0; p < n; ++p) {
    col[p][0] = 0;
    for (std::uint8_t t = 1; t <= 3; ++t) {
      WordBuilder b(n);
      b.set(p, F4(t));
      col[p][t] = syndrome_of(b.take());
    }
  }

  // Walk the 3^n words with no zero coordinate, updating the syndrome
  // incrementally as the odometer steps.
  std::vector<std::uint8_t> digit(n, 0);  // letter value = digit + 1
  Word first = Word::zero(n);
  {
    WordBuilder b(n);
    for (std::size_t i = 0; i < n; ++i) b.set(i, f4_one);
    first = b.take();
  }
  std::uint64_t syn = syndrome_of(first);

  // Syndromes live in [0, 4^(n-k)); mark them in a bitmap when that fits in
  // memory comfortably, in a hash set otherwise.
  const bool use_bitmap = 2 * (n - k) <= 30;
  std::vector<bool> bitmap;
  if (use_bitmap) bitmap.assign(std::size_t(pow4_checked(n - k)), false);
  std::unordered_set<std::uint64_t> seen;
  std::uint64_t alpha = 0;

  for (;;) {
    if (use_bitmap) {
      if (!bitmap[std::size_t(syn)]) {
        bitmap[std::size_t(syn)] = true;
        ++alpha;
      }
    } else if (seen.insert(syn).second) {
      ++alpha;
    }
    std::size_t pos = 0;
    while (pos < n) {
      const std::uint8_t old_letter = std::uint8_t(digit[pos] + 1);
      if (digit[pos] < 2) {
        ++digit[pos];
        syn ^= col[pos][old_letter ^ (digit[pos] + 1)];
        break;
      }
      digit[pos] = 0;
      syn ^= col[pos][old_letter ^ 1];
      ++pos;
    }
    if (pos == n) break;
  }

  CosetResult res;
  res.alpha = alpha;
  if (res.alpha == 0 || res.alpha >= pow3 + 1)
    throw std::logic_error("coset count out of range");
  res.e_bar = Rational(pow3 - res.alpha, pow3);
  if (code.codeword_count() >= 2 && res.e_bar.num() == 0)
    throw std::logic_error("average error of a code with M >= 2 must be positive");
  return res;
}

double bound_theorem1(const WeightDistribution& weights) {
  long double sum = 0.0L;
  long double pw = 1.0L;
  for (std::size_t s = 1; s < weights.counts.size(); ++s) {
    pw *= 2.0L / 3.0L;
    if (weights.counts[s]) sum += (long double)weights.counts[s] * pw;
  }
  return double(sum / 2.0L);
}

namespace {

TheoremBound distance_bound(std::uint64_t m, int d, double factor) {
  if (m < 2) throw std::invalid_argument("bound needs M >= 2");
  if (d < 1) throw std::invalid_argument("bound needs d >= 1");
  const long double r = std::pow(2.0L / 3.0L, (long double)d);
  TheoremBound b;
  b.tight = double((long double)(m - 1) * factor * r);
  b.loose = double((long double)m * factor * r);
  return b;
}

}  // namespace

TheoremBound bound_theorem2(std::uint64_t codeword_count, int min_distance) {
  return distance_bound(codeword_count, min_distance, 0.5L);
}

TheoremBound bound_theorem3(std::uint64_t codeword_count, int min_distance) {
  return distance_bound(codeword_count, min_distance, 1.0L);
}

BoundReport bound_report(std::uint64_t codeword_count, int min_distance,
                         const std::optional<WeightDistribution>& weights) {
  BoundReport r;
  const TheoremBound t2 = bound_theorem2(codeword_count, min_distance);
  const TheoremBound t3 = bound_theorem3(codeword_count, min_distance);
  r.theorem2_tight = t2.tight;
  r.theorem2_loose = t2.loose;
  r.theorem3_tight = t3.tight;
  r.theorem3_loose = t3.loose;
  if (weights) {
    if (weights->min_positive() < min_distance)
      throw std::invalid_argument("weight distribution has mass below the minimum distance");
    r.theorem1 = bound_theorem1(*weights);
    if (*r.theorem1 > r.theorem2_tight * (1.0 + 1e-12))
      throw std::logic_error("distribution bound above the distance bound");
  }
  return r;
}

std::vector<std::uint64_t> distance_distribution_counts(std::span<const Word> codewords,
                                                        const Budget& budget) {
  if (codewords.empty()) throw std::invalid_argument("empty code");
  const std::size_t m = codewords.size();
  const std::size_t n = codewords[0].length();
  if (std::uint64_t(m) * m > budget.exact_ops)
    throw BudgetExceeded("pairwise distance enumeration needs " + std::to_string(m) + "^2" +
                         " steps, over the budget of " + std::to_string(budget.exact_ops));
  std::vector<std::uint64_t> counts(n + 1, 0);
  counts[0] = m;  // the (x, x) pairs
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) counts[codewords[i].distance(codewords[j])] += 2;
  return counts;
}

double bound_theorem1_from_distance_distribution(std::span<const Word> codewords,
                                                 const Budget& budget) {
  const auto counts = distance_distribution_counts(codewords, budget);
  const long double m = (long double)codewords.size();
  long double sum = 0.0L;
  long double pw = 1.0L;
  for (std::size_t s = 1; s < counts.size(); ++s) {
    pw *= 2.0L / 3.0L;
    if (counts[s]) sum += (long double)counts[s] / m * pw;
  }
  return double(sum / 2.0L);
}

GvThreshold gv_threshold() {
  const double slope = std::log(2.0 / 3.0) / std::log(4.0);  // log4(2/3)
  auto f = [&](double x) { return 1.0 - h4(x) + x * slope; };
  double lo = 0.3, hi = 0.6;
  if (!(f(lo) > 0.0 && f(hi) < 0.0)) throw std::logic_error("bisection bracket invalid");
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  GvThreshold t;
  t.beta = 0.5 * (lo + hi);
  t.rate = gv_rate_bound(t.beta);
  return t;
}

}  // namespace anticode
