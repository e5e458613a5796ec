#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "anticode/analysis.hpp"
#include "anticode/codes.hpp"
#include "anticode/rng.hpp"

namespace anticode {

enum class DecoderKind { ml, sequential };

// Settings for the Monte Carlo error estimator.  The per-trial random stream
// is derived from (seed, trial index), so the estimate is identical for any
// thread count.  A fixed codeword index overrides the uniform selection.
struct MonteCarloConfig {
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  DecoderKind decoder = DecoderKind::ml;
  std::optional<std::size_t> fixed_codeword;
  unsigned threads = 1;
};

// Empirical error rates: draw a codeword, transmit, decode, count mismatches.
// Reports the binomial standard error; per-codeword tallies are attached when
// trials/M >= 100.
ErrorReport estimate_error(const LinearCode& code, const MonteCarloConfig& config,
                           const Budget& budget = {});

// Raw key material: Alice's letters uniform, Bob's the channel output,
// positions independent.
struct RawKeys {
  Word alice;
  Word bob;
};
RawKeys generate_raw_keys(std::size_t length, Rng& rng);

// One run of the one-way key generation: Alice picks random codewords and
// announces, per codeword, the positions in her raw sequence that spell it
// (left-to-right, first unused position holding the needed letter); Bob reads
// his letters at those positions and decodes.  Key bits are the base-4
// message digits of the sent/decoded words, two bits per symbol
// (0->00, 1->01, a->10, b->11).
struct ProtocolTranscript {
  Word alice_letters;
  Word bob_letters;
  std::vector<std::vector<std::uint32_t>> announcements;  // one index list per word
  std::vector<Word> sent_words;
  std::vector<Word> decoded_words;
  std::vector<std::uint8_t> key_bits_alice;
  std::vector<std::uint8_t> key_bits_bob;
  std::uint64_t letters_consumed = 0;  // announced positions, n per completed word

  std::size_t word_count() const { return sent_words.size(); }
  std::size_t word_error_count() const;

  // Line-oriented text: sections RAW-ALICE, RAW-BOB, ANNOUNCE, SENT, DECODED,
  // KEY-ALICE, KEY-BOB.
  std::string serialize() const;
};

// Runs the protocol for up to num_words codewords against a fresh raw-key
// pair of letter_budget letters; stops early when no unused position can
// supply a needed letter (and fails if that happens on the first word).
ProtocolTranscript run_protocol(const LinearCode& code, std::size_t num_words,
                                std::size_t letter_budget, Rng& rng,
                                const Budget& budget = {});

// Key bits per channel letter: log2(M)/n = 2k/n.
double efficiency(const LinearCode& code);

}  // namespace anticode
