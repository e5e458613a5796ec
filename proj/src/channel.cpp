#include "anticode/channel.hpp"

#include <cmath>

namespace anticode {

double joint_probability(F4 x, F4 y) { return x == y ? 0.0 : 1.0 / 12.0; }

double marginal_probability(F4) { return 0.25; }

double conditional_probability(F4 y, F4 x) { return x == y ? 0.0 : 1.0 / 3.0; }

InfoQuantities info_quantities() {
  InfoQuantities q{0.0, 0.0, 0.0, 0.0};
  for (std::uint8_t yv = 0; yv < 4; ++yv) {
    const F4 y{yv};
    double py = 0.0;
    for (std::uint8_t xv = 0; xv < 4; ++xv) py += joint_probability(F4{xv}, y);
    q.h_y -= py * std::log2(py);
  }
  for (std::uint8_t xv = 0; xv < 4; ++xv) {
    for (std::uint8_t yv = 0; yv < 4; ++yv) {
      const F4 x{xv}, y{yv};
      const double pxy = joint_probability(x, y);
      if (pxy == 0.0) continue;
      q.h_y_given_x -= pxy * std::log2(conditional_probability(y, x));
      q.mutual_info +=
          pxy * std::log2(pxy / (marginal_probability(x) * marginal_probability(y)));
    }
  }
  q.capacity = q.mutual_info;
  return q;
}

Word transmit(const Word& x, Rng& rng) {
  const std::size_t n = x.length();
  WordBuilder out(n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, transmit_letter(x.get(i), rng));
  return out.take();
}

}  // namespace anticode
