#include <map>
#include <set>

#include "anticode/channel.hpp"
#include "anticode/decode.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace anticode;

TEST_CASE("consistency predicate") {
  Rng rng(41);
  for (int t = 0; t < 200; ++t) {
    const Word c = oracle::random_word(1 + std::size_t(rng.below(12)), rng);
    CHECK(is_consistent(transmit(c, rng), c));  // channel output is always consistent
  }
  CHECK_FALSE(is_consistent(Word::parse("0"), Word::parse("0")));
  CHECK(is_consistent(Word::parse("ab"), Word::parse("00")));
  CHECK_FALSE(is_consistent(Word::parse("a0"), Word::parse("00")));
  CHECK_THROWS_AS(is_consistent(Word::parse("0"), Word::parse("00")), std::invalid_argument);
}

TEST_CASE("consistency set size is 3^n") {
  for (std::size_t n = 1; n <= 8; ++n) {
    Rng rng(42 + n);
    const Word c = oracle::random_word(n, rng);
    std::set<std::uint64_t> members;
    enumerate_consistent_words(c, [&](std::uint64_t y) {
      REQUIRE(oracle::consistent(y, c.packed(), n));
      members.insert(y);
    });
    CHECK(members.size() == consistency_set_size(n));
    CHECK(consistency_set_size(n) == oracle::pow_u64(3, n));
    if (n <= 6) CHECK(oracle::l_set(c.packed(), n).size() == members.size());
  }
}

TEST_CASE("pairwise intersection sizes against brute force") {
  CHECK(intersection_size(Word::parse("00"), Word::parse("11")) == 4);
  CHECK(intersection_size(Word::parse("00000"), Word::parse("01100")) == 108);  // 3^3 2^2

  Rng rng(43);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int t = 0; t < 20; ++t) {
      const Word ci = oracle::random_word(n, rng);
      Word cj = oracle::random_word(n, rng);
      if (ci == cj) continue;
      const auto li = oracle::l_set(ci.packed(), n);
      const auto lj = oracle::l_set(cj.packed(), n);
      const auto brute = oracle::intersection_count(li, lj);
      REQUIRE(intersection_size(ci, cj) == brute);
      REQUIRE(intersection_size(ci, cj) >= oracle::pow_u64(2, n));
    }
    // distance n pairs achieve the 2^n floor
    const Word zero = Word::zero(n);
    std::vector<F4> ones(n, f4_one);
    CHECK(intersection_size(zero, Word(ones)) == oracle::pow_u64(2, n));
  }

  CHECK_THROWS_AS(intersection_size(Word::parse("01"), Word::parse("01")),
                  std::invalid_argument);
  std::vector<F4> x41(41, f4_zero), y41(41, f4_zero);
  y41[0] = f4_one;
  CHECK_THROWS_AS(intersection_size(Word(x41), Word(y41)), std::overflow_error);  // 3^40 * 2
}

TEST_CASE("triple intersections are never empty") {
  Rng rng(44);
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto code = oracle::random_code(n, 4, rng);
    for (std::size_t i = 0; i < code.size(); ++i)
      for (std::size_t j = i + 1; j < code.size(); ++j)
        for (std::size_t l = j + 1; l < code.size(); ++l) {
          const auto li = oracle::l_set(code[i].packed(), n);
          const auto lj = oracle::l_set(code[j].packed(), n);
          const auto ll = oracle::l_set(code[l].packed(), n);
          std::size_t triple = 0;
          for (const auto y : li) triple += lj.count(y) && ll.count(y);
          REQUIRE(triple >= 1);
        }
  }
}

TEST_CASE("first-match decoding") {
  //            index 0     1       2
  const std::vector<Word> code{Word::parse("000"), Word::parse("111"), Word::parse("aaa")};
  // y consistent with code[1] and code[2] only -> decoded to 1 deterministically
  const Word y = Word::parse("0bb");
  REQUIRE(is_consistent(y, code[1]));
  REQUIRE(is_consistent(y, code[2]));
  REQUIRE_FALSE(is_consistent(y, code[0]));
  const DecodeOutcome out = sequential_decode(y, code);
  CHECK(out.decoded());
  CHECK(*out.index == 1);
  CHECK(out.tie_count == 1);

  // consistent with the first codeword only
  const Word y1 = Word::parse("a11");
  REQUIRE(is_consistent(y1, code[0]));
  REQUIRE_FALSE(is_consistent(y1, code[1]));
  REQUIRE_FALSE(is_consistent(y1, code[2]));
  CHECK(*sequential_decode(y1, code).index == 0);

  // no consistent codeword: "01a" shares a coordinate with each of the three
  CHECK_FALSE(sequential_decode(Word::parse("01a"), code).decoded());
}

TEST_CASE("first-match decoding agrees with materialized regions") {
  Rng rng(45);
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto code = oracle::random_code(n, 3 + std::size_t(rng.below(4)), rng);
    std::vector<std::uint64_t> packed;
    for (const auto& c : code) packed.push_back(c.packed());
    const auto regs = oracle::regions(packed, n);
    for (const auto y : oracle::all_words(n)) {
      const int expect = oracle::region_decode(regs, y);
      const DecodeOutcome got = sequential_decode(Word::from_packed(y, n), code);
      if (expect < 0) {
        REQUIRE_FALSE(got.decoded());
      } else {
        REQUIRE(got.decoded());
        REQUIRE(int(*got.index) == expect);
      }
    }
  }
}

TEST_CASE("maximum-likelihood decoding") {
  const std::vector<Word> full{Word::parse("0"), Word::parse("1"), Word::parse("a"),
                               Word::parse("b")};
  Rng rng(46);

  // exactly one consistent codeword ("1b" matches "1a" in its first letter)
  const std::vector<Word> pair{Word::parse("00"), Word::parse("1a")};
  const DecodeOutcome one = ml_decode(Word::parse("1b"), pair, rng);
  CHECK(*one.index == 0);
  CHECK(one.tie_count == 1);

  // y = 0 against the full one-letter code: uniform over the other three
  std::map<std::size_t, std::size_t> counts;
  const std::size_t trials = 120000;
  for (std::size_t t = 0; t < trials; ++t) {
    const DecodeOutcome out = ml_decode(Word::parse("0"), full, rng);
    REQUIRE(out.tie_count == 3);
    counts[*out.index]++;
  }
  CHECK(counts.size() == 3);
  CHECK(counts.count(0) == 0);
  const double window = trials * oracle::binomial_4sigma(1.0 / 3.0, trials);
  for (const auto& [idx, c] : counts) {
    (void)idx;
    CHECK(std::abs(double(c) - trials / 3.0) < window);
  }

  // genuine channel output never decodes as inconsistent
  for (int t = 0; t < 2000; ++t) {
    const std::size_t pick = std::size_t(rng.below(full.size()));
    CHECK(ml_decode(transmit(full[pick], rng), full, rng).decoded());
  }
}

TEST_CASE("region partition validator") {
  Rng rng(47);
  const auto code = oracle::random_code(3, 4, rng);
  std::vector<std::uint64_t> packed;
  for (const auto& c : code) packed.push_back(c.packed());
  const auto regs = oracle::regions(packed, 3);

  std::vector<std::vector<Word>> regions;
  for (const auto& r : regs) {
    std::vector<Word> rw;
    for (const auto y : r) rw.push_back(Word::from_packed(y, 3));
    regions.push_back(std::move(rw));
  }
  CHECK(validate_decoding_regions(regions, code));

  // a word moved into a region it is not consistent with
  auto bad1 = regions;
  bad1[0].push_back(Word::from_packed(packed[0], 3));  // the codeword itself
  CHECK_FALSE(validate_decoding_regions(bad1, code));

  // a receivable word claimed twice
  auto bad2 = regions;
  REQUIRE(!bad2[1].empty());
  Word moved = bad2[1].back();
  if (is_consistent(moved, code[0])) {
    bad2[0].push_back(moved);
    CHECK_FALSE(validate_decoding_regions(bad2, code));
  }

  // a receivable word dropped entirely
  auto bad3 = regions;
  REQUIRE(!bad3[0].empty());
  bad3[0].pop_back();
  CHECK_FALSE(validate_decoding_regions(bad3, code));

  // wrong region count
  auto bad4 = regions;
  bad4.pop_back();
  CHECK_FALSE(validate_decoding_regions(bad4, code));
}
