#include <cmath>

#include "anticode/analysis.hpp"
#include "anticode/catalog.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace anticode;

namespace {

LinearCode repetition(std::size_t n) {
  std::vector<F4> ones(n, f4_one);
  return LinearCode(std::vector<Word>{Word(ones)});
}

LinearCode random_linear(std::size_t n, std::size_t k, Rng& rng) {
  for (;;) {
    std::vector<Word> rows;
    for (std::size_t i = 0; i < k; ++i) rows.push_back(oracle::random_word(n, rng));
    try {
      return LinearCode(std::move(rows));
    } catch (const std::invalid_argument&) {
    }
  }
}

}  // namespace

// The full one-letter code {0, 1, a, b}: walking the 3 receivable letters per
// codeword against the first-match regions by hand gives D = {1,a,b}, {0},
// {}, {} and e = (0, 2/3, 1, 1), average 2/3.
TEST_CASE("one-letter full code, all methods") {
  const LinearCode full(std::vector<Word>{Word::parse("1")});
  const auto codewords = full.codewords();

  const ErrorReport seq = exact_error_sequential(codewords);
  CHECK(seq.per_codeword_exact[0] == Rational(0, 1));
  CHECK(seq.per_codeword_exact[1] == Rational(2, 3));
  CHECK(seq.per_codeword_exact[2] == Rational(1, 1));
  CHECK(seq.per_codeword_exact[3] == Rational(1, 1));
  CHECK(*seq.average_exact == Rational(2, 3));
  CHECK(*seq.maximum_exact == Rational(1, 1));

  const ErrorReport ml = exact_error_ml(codewords);
  for (const auto& e : ml.per_codeword_exact) CHECK(e == Rational(2, 3));
  CHECK(*ml.average_exact == Rational(2, 3));

  const CosetResult cs = coset_alpha(full);
  CHECK(cs.alpha == 1);  // the whole space is a single coset
  CHECK(cs.e_bar == Rational(2, 3));
}

// The two-letter repetition code {(t,t)}: the receivable words cover all of
// F4^2, so the average error is 1 - 16/36 = 5/9, and every coset holds a
// zero-free word (alpha = 4).
TEST_CASE("two-letter repetition code, all methods") {
  const LinearCode rep2 = repetition(2);
  const auto codewords = rep2.codewords();

  const ErrorReport seq = exact_error_sequential(codewords);
  CHECK(*seq.average_exact == Rational(5, 9));
  CHECK(seq.per_codeword_exact[0] == Rational(0, 1));
  CHECK(seq.per_codeword_exact[1] == Rational(4, 9));  // one pairwise overlap of size 4
  CHECK(seq.per_codeword_exact[2] == Rational(7, 9));  // 4 + 4 - 1
  CHECK(seq.per_codeword_exact[3] == Rational(1, 1));

  CHECK(*exact_error_ml(codewords).average_exact == Rational(5, 9));

  const CosetResult cs = coset_alpha(rep2);
  CHECK(cs.alpha == 4);
  CHECK(cs.e_bar == Rational(5, 9));
}

// The ten-letter repetition code: inclusion-exclusion over the four
// consistency sets gives |union| = 4*3^10 - 6*2^10 + 4, so the average error
// is 1535/59049; the first-match per-codeword values are 0, 2^10, 2*2^10 - 1,
// and 3*2^10 - 3 over 3^10.
TEST_CASE("ten-letter repetition code, all methods agree exactly") {
  const LinearCode rep10 = repetition(10);
  const auto codewords = rep10.codewords();
  const Rational expect(1535, 59049);

  const ErrorReport seq = exact_error_sequential(codewords);
  CHECK(*seq.average_exact == expect);
  CHECK(seq.per_codeword_exact[0] == Rational(0, 1));
  CHECK(seq.per_codeword_exact[1] == Rational(1024, 59049));
  CHECK(seq.per_codeword_exact[2] == Rational(2047, 59049));
  CHECK(seq.per_codeword_exact[3] == Rational(3069, 59049));
  CHECK(*seq.maximum_exact == Rational(3069, 59049));

  const ErrorReport ml = exact_error_ml(codewords);
  CHECK(*ml.average_exact == expect);
  // linear-code symmetry: identical error probability for every codeword
  for (const auto& e : ml.per_codeword_exact) CHECK(e == expect);
  CHECK(*ml.maximum_exact == expect);

  const CosetResult cs = coset_alpha(rep10);
  CHECK(cs.alpha == 59049 - 1535);
  CHECK(cs.e_bar == expect);
}

TEST_CASE("the three exact routes agree on random small linear codes") {
  Rng rng(51);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t n = 2 + std::size_t(rng.below(7));  // up to 8
    const std::size_t k = 1 + std::size_t(rng.below(std::min<std::size_t>(n, 3)));
    const LinearCode code = random_linear(n, k, rng);
    const auto codewords = code.codewords();

    const ErrorReport seq = exact_error_sequential(codewords);
    const ErrorReport ml = exact_error_ml(codewords);
    const CosetResult cs = coset_alpha(code);

    REQUIRE(*seq.average_exact == *ml.average_exact);
    REQUIRE(*seq.average_exact == cs.e_bar);
    REQUIRE(seq.per_codeword_exact[0] == Rational(0, 1));  // first codeword never errs
    REQUIRE(seq.average_exact->num() > 0);                 // strictly positive
    for (std::size_t i = 1; i < ml.per_codeword_exact.size(); ++i)
      REQUIRE(ml.per_codeword_exact[i] == ml.per_codeword_exact[0]);  // translation symmetry
  }
}

TEST_CASE("first codeword error is zero and below the mean of the rest") {
  Rng rng(52);
  for (int trial = 0; trial < 5; ++trial) {
    const LinearCode code = random_linear(5 + std::size_t(rng.below(3)), 2, rng);
    const ErrorReport seq = exact_error_sequential(code.codewords());
    CHECK(seq.per_codeword_exact[0] == Rational(0, 1));
    double rest = 0;
    for (std::size_t i = 1; i < seq.per_codeword.size(); ++i) rest += seq.per_codeword[i];
    CHECK(0.0 <= rest / double(seq.per_codeword.size() - 1));
  }
}

TEST_CASE("degenerate inputs are rejected") {
  const std::vector<Word> one{Word::parse("0000")};
  CHECK_THROWS_AS(exact_error_ml(one), std::invalid_argument);
  CHECK_THROWS_AS(exact_error_sequential(one), std::invalid_argument);

  const LinearCode rep10 = repetition(10);
  CHECK_THROWS_AS(exact_error_sequential(rep10.codewords(), Budget::uniform(100)),
                  BudgetExceeded);
  CHECK_THROWS_AS(coset_alpha(rep10, Budget::uniform(100)), BudgetExceeded);
}

TEST_CASE("weight-distribution bound on the published codes") {
  // The stored distribution of the [28,4,20] code gives exactly
  // 693342044160 / 3^28 = 0.0303077; the published rounding of 0.03038
  // does not match the distribution it is printed next to.
  const double b1 = bound_theorem1(*catalog_find("[28,4,20]")->weights);
  CHECK(b1 == doctest::Approx(0.030307659848950709).epsilon(1e-12));
  CHECK(b1 == doctest::Approx(693342044160.0 / 22876792454961.0).epsilon(1e-12));

  const double b2 = bound_theorem1(*catalog_find("[31,4,22]")->weights);
  CHECK(b2 == doctest::Approx(0.01216).epsilon(5e-4));  // matches at 4 significant digits

  WeightDistribution trivial;
  trivial.counts = {1};
  CHECK(bound_theorem1(trivial) == 0.0);
}

TEST_CASE("distance bounds") {
  const TheoremBound e1 = bound_theorem2(256, 20);
  CHECK(e1.loose == doctest::Approx(0.03849).epsilon(5e-4));
  CHECK(bound_theorem2(1024, 28).loose == doctest::Approx(0.006008).epsilon(5e-4));
  CHECK(bound_theorem2(4, 10).tight == doctest::Approx(0.02601).epsilon(5e-4));
  CHECK(bound_theorem2(4, 10).tight == doctest::Approx(1536.0 / 59049.0).epsilon(1e-12));

  for (const auto& [m, d] : std::vector<std::pair<std::uint64_t, int>>{
           {256, 20}, {1024, 28}, {4, 10}, {4096, 33}}) {
    const TheoremBound t2 = bound_theorem2(m, d);
    const TheoremBound t3 = bound_theorem3(m, d);
    CHECK(t3.tight == doctest::Approx(2 * t2.tight).epsilon(1e-12));
    CHECK(t3.loose == doctest::Approx(2 * t2.loose).epsilon(1e-12));
    CHECK(t2.tight < t2.loose);
  }
  CHECK(bound_theorem3(4096, 33).loose ==
        doctest::Approx(4096.0 * std::pow(2.0 / 3.0, 33)).epsilon(1e-12));
  CHECK(bound_theorem3(2, 1).tight == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  CHECK_THROWS_AS(bound_theorem2(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(bound_theorem3(16, 0), std::invalid_argument);
}

TEST_CASE("distribution bound from pairwise distances") {
  // linear codes: identical to the weight-distribution bound
  const auto* qc = catalog_find("[40,5,28]");
  const auto codewords = qc->code->codewords();
  CHECK(bound_theorem1_from_distance_distribution(codewords) ==
        doctest::Approx(bound_theorem1(qc->code->weight_distribution())).epsilon(1e-12));

  // two codewords at full distance: the bound (1/2)(2/3)^n equals the exact
  // average error, since the only overlap is counted exactly once
  for (std::size_t n = 2; n <= 6; ++n) {
    std::vector<F4> ones(n, f4_one);
    const std::vector<Word> pair{Word::zero(n), Word(ones)};
    const double bound = bound_theorem1_from_distance_distribution(pair);
    CHECK(bound == doctest::Approx(0.5 * std::pow(2.0 / 3.0, double(n))).epsilon(1e-12));
    const ErrorReport seq = exact_error_sequential(pair);
    CHECK(seq.average == doctest::Approx(bound).epsilon(1e-12));
  }

  // a single codeword has no pairs at positive distance
  const std::vector<Word> single{Word::parse("01ab")};
  CHECK(bound_theorem1_from_distance_distribution(single) == 0.0);
}

TEST_CASE("bound ordering: exact <= distribution bound <= distance bounds") {
  Rng rng(53);
  std::vector<LinearCode> codes;
  codes.push_back(repetition(10));
  codes.push_back(repetition(4));
  for (int i = 0; i < 4; ++i) codes.push_back(random_linear(6 + std::size_t(rng.below(3)), 2, rng));

  for (const auto& code : codes) {
    const auto codewords = code.codewords();
    const ErrorReport seq = exact_error_sequential(codewords);
    const double t1 = bound_theorem1(code.weight_distribution());
    const TheoremBound t2 = bound_theorem2(code.codeword_count(), code.minimum_distance());
    const TheoremBound t3 = bound_theorem3(code.codeword_count(), code.minimum_distance());
    CHECK(seq.average <= t1 + 1e-12);
    CHECK(t1 <= t2.tight + 1e-12);
    CHECK(t2.tight < t2.loose);
    CHECK(seq.maximum <= t3.tight + 1e-12);  // maximum-error bound dominates
  }
}

TEST_CASE("combined bound report") {
  const auto* e = catalog_find("[28,4,20]");
  const BoundReport r = bound_report(e->codeword_count, e->d, e->weights);
  REQUIRE(r.theorem1);
  CHECK(*r.theorem1 == bound_theorem1(*e->weights));
  CHECK(*r.theorem1 <= r.theorem2_tight);
  CHECK(r.theorem2_tight < r.theorem2_loose);
  CHECK(r.theorem3_tight < r.theorem3_loose);
  CHECK(r.theorem3_tight == doctest::Approx(2 * r.theorem2_tight).epsilon(1e-12));

  const BoundReport bare = bound_report(e->codeword_count, e->d);
  CHECK_FALSE(bare.theorem1);
  CHECK(bare.theorem2_loose == r.theorem2_loose);

  // a distribution with mass below the claimed distance is rejected
  WeightDistribution w;
  w.counts.assign(29, 0);
  w.counts[0] = 1;
  w.counts[10] = 255;
  CHECK_THROWS_AS(bound_report(256, 20, w), std::invalid_argument);
}

TEST_CASE("threshold of the random construction") {
  const GvThreshold t = gv_threshold();
  CHECK(std::abs(t.beta - 0.4627) < 5e-4);
  CHECK(std::abs(t.rate - 0.1353) < 5e-4);
  const double residual = 1.0 - h4(t.beta) + t.beta * (std::log(2.0 / 3.0) / std::log(4.0));
  CHECK(std::abs(residual) < 1e-8);
}
