#pragma once

#include <array>
#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "anticode/budget.hpp"
#include "anticode/rng.hpp"
#include "anticode/word.hpp"

namespace anticode {

struct WeightDistribution {
  std::vector<std::uint64_t> counts;  // counts[s] = codewords of weight s, size n+1

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto c : counts) t += c;
    return t;
  }

  // Smallest positive weight with a nonzero count; -1 if none.
  int min_positive() const {
    for (std::size_t s = 1; s < counts.size(); ++s)
      if (counts[s] > 0) return int(s);
    return -1;
  }

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

// Enumerates the span of the given rows in message-index order: index i has
// base-4 digits (most significant first) as the message symbols, so index 0
// is the zero word and the digit of rows[0] varies slowest.  The callback
// may return void, or bool with false meaning stop.
template <class Fn>
void for_each_in_span(std::span<const Word> rows, Fn&& fn);

// Linear [n,k] code over F4 given by a full-rank generator matrix.  Rows are
// validated for independence at construction; the reduced form, pivot
// columns, and the codeword-to-message transform are precomputed so that
// encode/invert are cheap.  Minimum distance and the weight distribution are
// computed on first use and cached.
class LinearCode {
 public:
  explicit LinearCode(std::vector<Word> generator_rows);

  LinearCode(const LinearCode& o);
  LinearCode& operator=(const LinearCode& o);

  static LinearCode parse(std::string_view text);
  static LinearCode load(const std::string& path);
  std::string serialize() const;

  std::size_t length() const { return n_; }
  std::size_t dimension() const { return k_; }
  std::uint64_t codeword_count() const { return pow4_checked(k_); }
  const std::vector<Word>& generator() const { return rows_; }

  // Reduced row-echelon data (unit pivots); the coset analysis keys on it.
  const std::vector<Word>& reduced_rows() const { return rref_rows_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

  // message * G, message of length k.
  Word encode(const Word& message) const;

  // Message word whose base-4 digits (most significant first) spell `index`.
  Word message_word(std::uint64_t index) const;
  std::uint64_t message_index(const Word& message) const;

  // Inverse of encode; throws if the word is not a codeword.
  Word message_of_codeword(const Word& codeword) const;

  template <class Fn>
  void for_each_codeword(Fn&& fn, const Budget& budget = {}) const {
    check_codeword_budget(budget);
    for_each_in_span<Fn>(rows_, std::forward<Fn>(fn));
  }

  // All 4^k codewords in message-index order (index 0 = zero word).
  std::vector<Word> codewords(const Budget& budget = {}) const;

  const WeightDistribution& weight_distribution(const Budget& budget = {}) const;
  int minimum_distance(const Budget& budget = {}) const;

  // The [n-1, k-1] code of codewords that are zero at `position`, with that
  // coordinate removed.  Rejects positions where no generator row is nonzero
  // (the dimension would not drop).
  LinearCode shortened(std::size_t position = 0) const;

 private:
  void check_codeword_budget(const Budget& budget) const;
  void build_reduced_form();

  std::size_t n_ = 0, k_ = 0;
  std::vector<Word> rows_;
  std::vector<Word> rref_rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<F4>> to_message_;  // alpha (w.r.t. rref) -> message (w.r.t. rows)

  mutable std::mutex cache_mutex_;
  mutable std::optional<WeightDistribution> cached_weights_;
};

// Generator of the length-40 quasi-cyclic code: eight 5x5 circulant blocks
// side by side, all described by the 8 five-symbol blocks of the first row;
// row i shifts every block cyclically by i.
LinearCode quasi_cyclic_from_first_row(std::span<const Word> blocks);

// Convenience: blocks given as whitespace-separated symbol groups.
LinearCode quasi_cyclic_from_first_row(std::string_view blocks_text);

// Random linear code with verified minimum distance >= d, grown greedily one
// row at a time: a candidate row is kept iff every codeword it adds to the
// span has weight >= d (a dependent candidate always fails, since some new
// combination would be the zero word).  Dimension is the best achieved
// within max_attempts per row and the enumeration budget.
LinearCode gv_random_code(std::size_t n, int d, Rng& rng, int max_attempts = 1000,
                          const Budget& budget = {});

// x log4(3) - x log4(x) - (1-x) log4(1-x) on [0, 3/4], with 0 log 0 = 0.
double h4(double x);

// Dimension rate k/n = 1 - H4(d/n) of the random construction.
double gv_rate_bound(double d_over_n);

template <class Fn>
void for_each_in_span(std::span<const Word> rows, Fn&& fn) {
  const std::size_t k = rows.size();
  if (k == 0) return;
  const std::size_t n = rows[0].length();

  // scaled[j][t-1] = t * rows[j]
  std::vector<std::array<Word, 3>> scaled(k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::uint8_t t = 1; t <= 3; ++t) scaled[j][t - 1] = rows[j].times(F4(t));

  std::uint64_t index = 0;
  bool stop = false;
  auto emit = [&](const Word& w) {
    if constexpr (std::is_void_v<std::invoke_result_t<Fn&, std::uint64_t, const Word&>>) {
      fn(index, w);
    } else {
      if (!fn(index, w)) stop = true;
    }
    ++index;
  };

  // Depth-first over message digits, adding one scaled row per level change.
  auto rec = [&](auto&& self, std::size_t level, const Word& acc) -> void {
    if (stop) return;
    if (level == k) {
      emit(acc);
      return;
    }
    self(self, level + 1, acc);
    for (std::uint8_t t = 1; t <= 3 && !stop; ++t)
      self(self, level + 1, acc.plus(scaled[level][t - 1]));
  };
  rec(rec, 0, Word::zero(n));
}

}  // namespace anticode
