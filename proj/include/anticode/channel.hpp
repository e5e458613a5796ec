#pragma once

#include "anticode/gf4.hpp"
#include "anticode/rng.hpp"
#include "anticode/word.hpp"

namespace anticode {

// The symmetric four-letter channel: the received letter is never the sent
// letter, and each of the other three letters comes out with probability 1/3.
// Words pass through letter by letter, independently.

struct InfoQuantities {
  double h_y;          // output entropy, bits
  double h_y_given_x;  // conditional entropy, bits
  double mutual_info;  // I(X;Y), bits
  double capacity;     // attained by the uniform input on a symmetric channel
};

// Entropies and mutual information for a uniform input, computed from the
// distributions rather than hard-coded: H(Y) = 2, H(Y|X) = log2 3,
// I = C = log2(4/3).
InfoQuantities info_quantities();

// Pr{X=x, Y=y} for a uniform input: 0 on the diagonal, 1/12 off it.
double joint_probability(F4 x, F4 y);

// Pr{X=x} = Pr{Y=y} = 1/4.
double marginal_probability(F4 x);

// The channel law Q(y|x): 0 if y = x, 1/3 otherwise.
double conditional_probability(F4 y, F4 x);

// One letter through the channel: uniform over the three letters != x,
// using a single uniform draw mapped onto the alternatives in alphabet order.
inline F4 transmit_letter(F4 x, Rng& rng) {
  const auto r = std::uint8_t(rng.below(3));
  return F4(r < x.value() ? r : std::uint8_t(r + 1));
}

// A whole word through the channel's n-fold extension; the result differs
// from x in every coordinate and is uniform over the 3^n such words.
Word transmit(const Word& x, Rng& rng);

}  // namespace anticode
