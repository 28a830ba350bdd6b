#include "polilab/core/rng.hpp"

#include <cmath>

namespace polilab {

double Rng::normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log1p(-u1));
  return r * std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
}

double Rng::exponential(double rate) {
  return -std::log1p(-uniform()) / rate;
}

}  // namespace polilab
