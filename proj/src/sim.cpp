#include "anticode/sim.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <sstream>
#include <thread>

#include "anticode/channel.hpp"
#include "anticode/decode.hpp"

namespace anticode {

namespace {

struct Tally {
  std::uint64_t errors = 0;
  std::vector<std::uint64_t> sent, wrong;
};

Tally run_chunk(const std::vector<Word>& codewords, const MonteCarloConfig& cfg,
                std::uint64_t begin, std::uint64_t end) {
  const std::size_t m = codewords.size();
  Tally t;
  t.sent.assign(m, 0);
  t.wrong.assign(m, 0);
  for (std::uint64_t trial = begin; trial < end; ++trial) {
    Rng rng = Rng::derive(cfg.seed, trial);
    const std::size_t idx =
        cfg.fixed_codeword ? *cfg.fixed_codeword : std::size_t(rng.below(m));
    const Word received = transmit(codewords[idx], rng);
    const DecodeOutcome out = cfg.decoder == DecoderKind::ml
                                  ? ml_decode(received, codewords, rng)
                                  : sequential_decode(received, codewords);
    const bool wrong = !(out.decoded() && *out.index == idx);
    ++t.sent[idx];
    if (wrong) {
      ++t.errors;
      ++t.wrong[idx];
    }
  }
  return t;
}

}  // namespace

ErrorReport estimate_error(const LinearCode& code, const MonteCarloConfig& config,
                           const Budget& budget) {
  if (config.trials == 0) throw std::invalid_argument("need at least one trial");
  const std::vector<Word> codewords = code.codewords(budget);
  const std::size_t m = codewords.size();
  if (config.fixed_codeword && *config.fixed_codeword >= m)
    throw std::invalid_argument("fixed codeword index out of range");

  const unsigned workers =
      std::max(1u, std::min<unsigned>(config.threads, unsigned(config.trials)));
  std::vector<Tally> parts(workers);
  if (workers == 1) {
    parts[0] = run_chunk(codewords, config, 0, config.trials);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t step = config.trials / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = w * step;
      const std::uint64_t end = (w + 1 == workers) ? config.trials : begin + step;
      pool.emplace_back(
          [&, w, begin, end] { parts[w] = run_chunk(codewords, config, begin, end); });
    }
    for (auto& th : pool) th.join();
  }

  Tally total;
  total.sent.assign(m, 0);
  total.wrong.assign(m, 0);
  for (const auto& p : parts) {
    total.errors += p.errors;
    for (std::size_t i = 0; i < m; ++i) {
      total.sent[i] += p.sent[i];
      total.wrong[i] += p.wrong[i];
    }
  }

  ErrorReport r;
  r.method = Method::monte_carlo;
  r.trials = config.trials;
  r.average = double(total.errors) / double(config.trials);
  r.standard_error = std::sqrt(r.average * (1.0 - r.average) / double(config.trials));
  if (config.trials / m >= 100) {
    r.per_codeword_trials = total.sent;
    r.per_codeword_errors = total.wrong;
    r.per_codeword.resize(m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
      if (total.sent[i] > 0) r.per_codeword[i] = double(total.wrong[i]) / double(total.sent[i]);
    r.maximum = *std::max_element(r.per_codeword.begin(), r.per_codeword.end());
  } else {
    r.maximum = r.average;
  }
  return r;
}

RawKeys generate_raw_keys(std::size_t length, Rng& rng) {
  if (length == 0) throw std::invalid_argument("raw key length must be positive");
  WordBuilder alice(length), bob(length);
  for (std::size_t i = 0; i < length; ++i) {
    const F4 a{std::uint8_t(rng.below(4))};
    alice.set(i, a);
    bob.set(i, transmit_letter(a, rng));
  }
  return RawKeys{alice.take(), bob.take()};
}

namespace {

void append_message_bits(const Word& message, std::vector<std::uint8_t>& bits) {
  for (std::size_t j = 0; j < message.length(); ++j) {
    const auto v = message.get(j).value();
    bits.push_back(std::uint8_t((v >> 1) & 1));
    bits.push_back(std::uint8_t(v & 1));
  }
}

std::string bit_string(const std::vector<std::uint8_t>& bits) {
  std::string s(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) s[i] = char('0' + bits[i]);
  return s;
}

}  // namespace

ProtocolTranscript run_protocol(const LinearCode& code, std::size_t num_words,
                                std::size_t letter_budget, Rng& rng, const Budget& budget) {
  const std::size_t n = code.length();
  const std::uint64_t m = code.codeword_count();
  if (letter_budget < n)
    throw std::invalid_argument("letter budget " + std::to_string(letter_budget) +
                                " cannot hold even one " + std::to_string(n) + "-letter word");
  const std::vector<Word> codewords = code.codewords(budget);

  ProtocolTranscript tr;
  RawKeys keys = generate_raw_keys(letter_budget, rng);
  tr.alice_letters = std::move(keys.alice);
  tr.bob_letters = std::move(keys.bob);

  // Unused positions holding each letter, in sequence order; popping from the
  // front realizes the left-to-right first-match rule.
  std::array<std::deque<std::uint32_t>, 4> avail;
  for (std::size_t p = 0; p < letter_budget; ++p)
    avail[tr.alice_letters.get(p).value()].push_back(std::uint32_t(p));

  for (std::size_t w = 0; w < num_words; ++w) {
    const Word message = code.message_word(rng.below(m));
    const Word sent = code.encode(message);

    std::vector<std::uint32_t> positions;
    positions.reserve(n);
    bool exhausted = false;
    for (std::size_t j = 0; j < n; ++j) {
      auto& q = avail[sent.get(j).value()];
      if (q.empty()) {
        exhausted = true;
        break;
      }
      positions.push_back(q.front());
      q.pop_front();
    }
    if (exhausted) {
      if (w == 0)
        throw std::runtime_error("letter budget too small to spell even one codeword");
      for (std::size_t j = positions.size(); j-- > 0;)  // put the partial pick back
        avail[sent.get(j).value()].push_front(positions[j]);
      break;
    }

    WordBuilder received(n);
    for (std::size_t j = 0; j < n; ++j) received.set(j, tr.bob_letters.get(positions[j]));
    const Word bob_word = received.take();

    const DecodeOutcome out = ml_decode(bob_word, codewords, rng);
    if (!out.decoded()) throw std::logic_error("channel output decoded as inconsistent");
    const Word decoded = codewords[*out.index];

    tr.announcements.push_back(std::move(positions));
    tr.sent_words.push_back(sent);
    tr.decoded_words.push_back(decoded);
    append_message_bits(message, tr.key_bits_alice);
    append_message_bits(code.message_of_codeword(decoded), tr.key_bits_bob);
    tr.letters_consumed += n;
  }
  return tr;
}

std::size_t ProtocolTranscript::word_error_count() const {
  std::size_t errs = 0;
  for (std::size_t i = 0; i < sent_words.size(); ++i)
    if (!(sent_words[i] == decoded_words[i])) ++errs;
  return errs;
}

std::string ProtocolTranscript::serialize() const {
  std::ostringstream out;
  out << "RAW-ALICE\n" << alice_letters.to_string() << "\n";
  out << "RAW-BOB\n" << bob_letters.to_string() << "\n";
  out << "ANNOUNCE\n";
  for (const auto& list : announcements) {
    for (std::size_t i = 0; i < list.size(); ++i) out << (i ? " " : "") << list[i];
    out << "\n";
  }
  out << "SENT\n";
  for (const auto& w : sent_words) out << w.to_string() << "\n";
  out << "DECODED\n";
  for (const auto& w : decoded_words) out << w.to_string() << "\n";
  out << "KEY-ALICE\n" << bit_string(key_bits_alice) << "\n";
  out << "KEY-BOB\n" << bit_string(key_bits_bob) << "\n";
  return out.str();
}

double efficiency(const LinearCode& code) {
  return 2.0 * double(code.dimension()) / double(code.length());
}

}  // namespace anticode
