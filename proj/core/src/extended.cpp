#include "levywn/extended.hpp"

namespace levywn {

Extended operator+(const Extended& a, const Extended& b) {
  if (!a.is_finite()) return a;
  if (!b.is_finite()) return b;
  return Extended::finite(a.value + b.value);
}

Extended operator*(double scale, const Extended& a) {
  if (!a.is_finite()) {
    if (scale == 0.0) return Extended::finite(0.0);
    return a;
  }
  return Extended::finite(scale * a.value);
}

}  // namespace levywn
