#include "anticode/codes.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace anticode {

namespace {

struct ReducedForm {
  std::vector<Word> rows;                     // reduced row-echelon, unit pivots
  std::vector<std::size_t> pivots;            // pivot column per row
  std::vector<std::vector<F4>> transform;     // rows[i] = sum_j transform[i][j] * original[j]
};

// Gauss-Jordan over F4, tracking the row operations so the reduced rows can
// be expressed in terms of the original generator.
ReducedForm reduce(std::vector<Word> rows) {
  const std::size_t k = rows.size();
  const std::size_t n = k == 0 ? 0 : rows[0].length();

  std::vector<std::vector<F4>> t(k, std::vector<F4>(k, f4_zero));
  for (std::size_t i = 0; i < k; ++i) t[i][i] = f4_one;

  auto axpy_t = [&](std::size_t dst, F4 c, std::size_t src) {
    for (std::size_t j = 0; j < k; ++j) t[dst][j] = t[dst][j] + c * t[src][j];
  };
  auto scale_t = [&](std::size_t r, F4 c) {
    for (std::size_t j = 0; j < k; ++j) t[r][j] = c * t[r][j];
  };

  ReducedForm out;
  std::size_t done = 0;  // rows already holding a pivot
  for (std::size_t col = 0; col < n && done < k; ++col) {
    std::size_t p = done;
    while (p < k && rows[p].get(col).is_zero()) ++p;
    if (p == k) continue;
    std::swap(rows[p], rows[done]);
    std::swap(t[p], t[done]);

    const F4 inv = f4_inv(rows[done].get(col));
    rows[done] = rows[done].times(inv);
    scale_t(done, inv);

    for (std::size_t r = 0; r < k; ++r) {
      if (r == done) continue;
      const F4 c = rows[r].get(col);
      if (c.is_zero()) continue;
      rows[r] = rows[r].plus(rows[done].times(c));
      axpy_t(r, c, done);
    }
    out.pivots.push_back(col);
    ++done;
  }
  rows.resize(done);
  t.resize(done);
  out.rows = std::move(rows);
  out.transform = std::move(t);
  return out;
}

}  // namespace

LinearCode::LinearCode(std::vector<Word> generator_rows) : rows_(std::move(generator_rows)) {
  if (rows_.empty()) throw std::invalid_argument("generator has no rows");
  n_ = rows_[0].length();
  if (n_ == 0) throw std::invalid_argument("generator rows are empty");
  k_ = rows_.size();
  for (const auto& r : rows_)
    if (r.length() != n_) throw std::invalid_argument("generator rows differ in length");
  if (k_ > n_) throw std::invalid_argument("dimension exceeds length");
  build_reduced_form();
}

void LinearCode::build_reduced_form() {
  ReducedForm rf = reduce(rows_);
  if (rf.rows.size() != k_)
    throw std::invalid_argument("generator rows are linearly dependent");
  rref_rows_ = std::move(rf.rows);
  pivots_ = std::move(rf.pivots);
  to_message_ = std::move(rf.transform);
}

LinearCode::LinearCode(const LinearCode& o)
    : n_(o.n_),
      k_(o.k_),
      rows_(o.rows_),
      rref_rows_(o.rref_rows_),
      pivots_(o.pivots_),
      to_message_(o.to_message_) {
  std::lock_guard lock(o.cache_mutex_);
  cached_weights_ = o.cached_weights_;
}

LinearCode& LinearCode::operator=(const LinearCode& o) {
  if (this == &o) return *this;
  LinearCode tmp(o);
  n_ = tmp.n_;
  k_ = tmp.k_;
  rows_ = std::move(tmp.rows_);
  rref_rows_ = std::move(tmp.rref_rows_);
  pivots_ = std::move(tmp.pivots_);
  to_message_ = std::move(tmp.to_message_);
  std::lock_guard lock(cache_mutex_);
  cached_weights_ = std::move(tmp.cached_weights_);
  return *this;
}

LinearCode LinearCode::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t n = 0, k = 0;
  if (!(in >> n >> k)) throw std::invalid_argument("code file: expected \"n k\" header");
  if (k == 0 || n == 0 || k > n)
    throw std::invalid_argument("code file: invalid parameters n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
  std::vector<Word> rows;
  rows.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::string row;
    if (!(in >> row))
      throw std::invalid_argument("code file: expected " + std::to_string(k) + " rows");
    Word w = Word::parse(row);
    if (w.length() != n)
      throw std::invalid_argument("code file: row " + std::to_string(i + 1) + " has length " +
                                  std::to_string(w.length()) + ", expected " +
                                  std::to_string(n));
    rows.push_back(std::move(w));
  }
  return LinearCode(std::move(rows));
}

LinearCode LinearCode::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open code file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string LinearCode::serialize() const {
  std::ostringstream out;
  out << n_ << " " << k_ << "\n";
  for (const auto& r : rows_) out << r.to_string() << "\n";
  return out.str();
}

Word LinearCode::encode(const Word& message) const {
  if (message.length() != k_)
    throw std::invalid_argument("message length " + std::to_string(message.length()) +
                                " does not match dimension " + std::to_string(k_));
  Word acc = Word::zero(n_);
  for (std::size_t j = 0; j < k_; ++j) {
    const F4 m = message.get(j);
    if (!m.is_zero()) acc = acc.plus(rows_[j].times(m));
  }
  return acc;
}

Word LinearCode::message_word(std::uint64_t index) const {
  if (index >= codeword_count()) throw std::invalid_argument("message index out of range");
  WordBuilder b(k_);
  for (std::size_t j = 0; j < k_; ++j) {
    const auto digit = std::uint8_t((index >> (2 * (k_ - 1 - j))) & 3);
    b.set(j, F4(digit));
  }
  return b.take();
}

std::uint64_t LinearCode::message_index(const Word& message) const {
  if (message.length() != k_) throw std::invalid_argument("message length mismatch");
  std::uint64_t idx = 0;
  for (std::size_t j = 0; j < k_; ++j) idx = (idx << 2) | message.get(j).value();
  return idx;
}

Word LinearCode::message_of_codeword(const Word& codeword) const {
  if (codeword.length() != n_) throw std::invalid_argument("codeword length mismatch");
  // Successive elimination against the reduced rows gives the coefficients;
  // to_message_ maps them back onto the original generator's rows.
  Word residue = codeword;
  std::vector<F4> alpha(k_, f4_zero);
  for (std::size_t i = 0; i < k_; ++i) {
    const F4 c = residue.get(pivots_[i]);
    alpha[i] = c;
    if (!c.is_zero()) residue = residue.plus(rref_rows_[i].times(c));
  }
  if (residue != Word::zero(n_))
    throw std::invalid_argument("word is not a codeword of this code");
  std::vector<F4> message(k_, f4_zero);
  for (std::size_t i = 0; i < k_; ++i) {
    if (alpha[i].is_zero()) continue;
    for (std::size_t j = 0; j < k_; ++j)
      message[j] = message[j] + alpha[i] * to_message_[i][j];
  }
  return Word(message);
}

void LinearCode::check_codeword_budget(const Budget& budget) const {
  const std::uint64_t m = codeword_count();
  if (m > budget.codewords)
    throw BudgetExceeded("enumerating 4^" + std::to_string(k_) + " = " + std::to_string(m) +
                         " codewords exceeds the codeword budget of " +
                         std::to_string(budget.codewords));
}

std::vector<Word> LinearCode::codewords(const Budget& budget) const {
  check_codeword_budget(budget);
  std::vector<Word> out;
  out.reserve(std::size_t(codeword_count()));
  for_each_codeword([&](std::uint64_t, const Word& w) { out.push_back(w); }, budget);
  return out;
}

const WeightDistribution& LinearCode::weight_distribution(const Budget& budget) const {
  {
    std::lock_guard lock(cache_mutex_);
    if (cached_weights_) return *cached_weights_;
  }
  WeightDistribution wd;
  wd.counts.assign(n_ + 1, 0);
  for_each_codeword([&](std::uint64_t, const Word& w) { ++wd.counts[w.weight()]; }, budget);
  std::lock_guard lock(cache_mutex_);
  if (!cached_weights_) cached_weights_ = std::move(wd);
  return *cached_weights_;
}

int LinearCode::minimum_distance(const Budget& budget) const {
  const int d = weight_distribution(budget).min_positive();
  if (d < 0) throw std::logic_error("code has no nonzero codeword");
  return d;
}

LinearCode LinearCode::shortened(std::size_t position) const {
  if (k_ < 2)
    throw std::invalid_argument("shortening needs dimension >= 2; the result would be empty");
  if (position >= n_) throw std::invalid_argument("shortening position out of range");

  std::vector<Word> work = rows_;
  std::size_t pivot = k_;
  for (std::size_t r = 0; r < k_; ++r) {
    if (!work[r].get(position).is_zero()) {
      pivot = r;
      break;
    }
  }
  if (pivot == k_)
    throw std::invalid_argument(
        "all generator rows are zero at position " + std::to_string(position) +
        "; shortening there would not reduce the dimension");

  const F4 inv = f4_inv(work[pivot].get(position));
  work[pivot] = work[pivot].times(inv);
  for (std::size_t r = 0; r < k_; ++r) {
    if (r == pivot) continue;
    const F4 c = work[r].get(position);
    if (!c.is_zero()) work[r] = work[r].plus(work[pivot].times(c));
  }

  std::vector<Word> rows;
  rows.reserve(k_ - 1);
  for (std::size_t r = 0; r < k_; ++r) {
    if (r == pivot) continue;
    WordBuilder b(n_ - 1);
    std::size_t out = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      if (j == position) continue;
      b.set(out++, work[r].get(j));
    }
    rows.push_back(b.take());
  }
  return LinearCode(std::move(rows));
}

LinearCode quasi_cyclic_from_first_row(std::span<const Word> blocks) {
  if (blocks.size() != 8)
    throw std::invalid_argument("expected 8 blocks, got " + std::to_string(blocks.size()));
  for (const auto& b : blocks)
    if (b.length() != 5)
      throw std::invalid_argument("each block must have 5 symbols, got " +
                                  std::to_string(b.length()));
  std::vector<Word> rows;
  rows.reserve(5);
  for (std::size_t shift = 0; shift < 5; ++shift) {
    WordBuilder b(40);
    for (std::size_t blk = 0; blk < 8; ++blk)
      for (std::size_t j = 0; j < 5; ++j)
        b.set(5 * blk + j, blocks[blk].get((j + 5 - shift) % 5));
    rows.push_back(b.take());
  }
  return LinearCode(std::move(rows));
}

LinearCode quasi_cyclic_from_first_row(std::string_view blocks_text) {
  std::istringstream in{std::string(blocks_text)};
  std::vector<Word> blocks;
  std::string tok;
  while (in >> tok) blocks.push_back(Word::parse(tok));
  return quasi_cyclic_from_first_row(std::span<const Word>(blocks));
}

LinearCode gv_random_code(std::size_t n, int d, Rng& rng, int max_attempts,
                          const Budget& budget) {
  if (n == 0) throw std::invalid_argument("length must be positive");
  if (d < 1 || std::size_t(d) > n)
    throw std::invalid_argument("target distance must satisfy 1 <= d <= n (got d=" +
                                std::to_string(d) + ", n=" + std::to_string(n) + ")");
  if (max_attempts < 1) throw std::invalid_argument("max_attempts must be positive");

  std::vector<Word> basis;
  for (;;) {
    if (basis.size() >= 31) break;
    const std::uint64_t next_span = pow4_checked(basis.size() + 1);
    if (next_span > budget.codewords) break;

    bool accepted = false;
    for (int attempt = 0; attempt < max_attempts && !accepted; ++attempt) {
      WordBuilder b(n);
      for (std::size_t i = 0; i < n; ++i) b.set(i, F4(std::uint8_t(rng.below(4))));
      const Word cand = b.take();

      // every codeword the candidate adds to the span must keep weight >= d;
      // a dependent candidate always fails (some combination is the zero word)
      bool bad = false;
      if (basis.empty()) {
        bad = cand.weight() < std::size_t(d);  // t * cand has the same support
      } else {
        for_each_in_span(std::span<const Word>(basis),
                         [&](std::uint64_t, const Word& c) -> bool {
                           for (std::uint8_t t = 1; t <= 3; ++t) {
                             if (c.plus(cand.times(F4(t))).weight() < std::size_t(d)) {
                               bad = true;
                               return false;
                             }
                           }
                           return true;
                         });
      }
      if (!bad) {
        basis.push_back(cand);
        accepted = true;
      }
    }
    if (!accepted) break;
  }

  if (basis.empty())
    throw std::runtime_error("no code of dimension >= 1 with minimum distance " +
                             std::to_string(d) + " found within " +
                             std::to_string(max_attempts) + " attempts");

  LinearCode code(std::move(basis));
  if (code.minimum_distance(budget) < d)
    throw std::logic_error("constructed code failed its distance verification");
  return code;
}

double h4(double x) {
  if (x < 0.0 || x > 0.75) throw std::domain_error("H4 is defined on [0, 3/4]");
  const double log4 = std::log(4.0);
  auto xlog4x = [&](double v) { return v <= 0.0 ? 0.0 : v * std::log(v) / log4; };
  return x * (std::log(3.0) / log4) - xlog4x(x) - xlog4x(1.0 - x);
}

double gv_rate_bound(double d_over_n) { return 1.0 - h4(d_over_n); }

}  // namespace anticode
