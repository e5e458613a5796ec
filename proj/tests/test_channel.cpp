#include <cmath>
#include <map>

#include "anticode/channel.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace anticode;

TEST_CASE("information quantities") {
  const InfoQuantities q = info_quantities();
  CHECK(q.h_y == 2.0);
  CHECK(q.h_y_given_x == doctest::Approx(std::log2(3.0)).epsilon(1e-12));
  CHECK(q.mutual_info == doctest::Approx(q.h_y - q.h_y_given_x).epsilon(1e-12));
  CHECK(q.capacity == q.mutual_info);
  CHECK(std::abs(q.capacity - 0.4150) < 5e-5);
  CHECK(q.capacity == doctest::Approx(std::log2(4.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("joint, marginal, and conditional probabilities") {
  CHECK(joint_probability(f4_zero, f4_zero) == 0.0);  // (A, A)
  CHECK(joint_probability(f4_zero, f4_one) == doctest::Approx(1.0 / 12.0));
  double total = 0.0;
  for (std::uint8_t x = 0; x < 4; ++x) {
    double row = 0.0;
    for (std::uint8_t y = 0; y < 4; ++y) {
      total += joint_probability(F4(x), F4(y));
      row += conditional_probability(F4(y), F4(x));
      if (x == y)
        CHECK(conditional_probability(F4(y), F4(x)) == 0.0);
      else
        CHECK(conditional_probability(F4(y), F4(x)) == doctest::Approx(1.0 / 3.0));
    }
    CHECK(row == doctest::Approx(1.0));
    CHECK(marginal_probability(F4(x)) == 0.25);
  }
  CHECK(total == doctest::Approx(1.0));
}

TEST_CASE("transmitted words differ from the input in every coordinate") {
  Rng rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + std::size_t(rng.below(20));
    const Word x = oracle::random_word(n, rng);
    const Word y = transmit(x, rng);
    REQUIRE(y.differs_everywhere(x));
    REQUIRE(hamming_distance(x, y) == n);
  }
}

TEST_CASE("single-letter output is uniform over the three alternatives") {
  Rng rng(22);
  const std::size_t trials = 120000;
  std::map<std::uint8_t, std::size_t> counts;
  for (std::size_t t = 0; t < trials; ++t) counts[transmit_letter(f4_zero, rng).value()]++;
  CHECK(counts.size() == 3);
  CHECK(counts.count(0) == 0);
  const double window = trials * oracle::binomial_4sigma(1.0 / 3.0, trials);
  for (const auto& [v, c] : counts) {
    (void)v;
    CHECK(std::abs(double(c) - trials / 3.0) < window);
  }
}

TEST_CASE("two-letter extension is uniform over the 9 receivable words") {
  Rng rng(23);
  const std::size_t trials = 1000000;
  const Word x = Word::parse("00");
  std::map<std::uint64_t, std::size_t> counts;
  for (std::size_t t = 0; t < trials; ++t) counts[transmit(x, rng).packed()]++;
  CHECK(counts.size() == 9);
  const double window = trials * oracle::binomial_4sigma(1.0 / 9.0, trials);
  for (const auto& [w, c] : counts) {
    REQUIRE(oracle::consistent(w, x.packed(), 2));
    CHECK(std::abs(double(c) - trials / 9.0) < window);
  }
}

TEST_CASE("three-letter extension covers its receivable set uniformly") {
  Rng rng(24);
  const std::size_t trials = 270000;
  const Word x = Word::parse("b1a");
  std::map<std::uint64_t, std::size_t> counts;
  for (std::size_t t = 0; t < trials; ++t) counts[transmit(x, rng).packed()]++;
  CHECK(counts.size() == 27);
  const double window = trials * oracle::binomial_4sigma(1.0 / 27.0, trials);
  for (const auto& [w, c] : counts) {
    REQUIRE(oracle::consistent(w, x.packed(), 3));
    CHECK(std::abs(double(c) - trials / 27.0) < window);
  }
}

TEST_CASE("identical seeds reproduce identical outputs") {
  Rng a(99), b(99);
  const Word x = Word::parse("01ab01ab");
  for (int t = 0; t < 100; ++t) REQUIRE(transmit(x, a) == transmit(x, b));
}
