#include "qpbraid/sl2.hpp"

namespace qpbraid {

IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

IntMatrix2 operator-(const IntMatrix2& x) { return {-x.a, -x.b, -x.c, -x.d}; }

namespace {

// D -> [[0,1],[-1,0]], which has order 4.
IntMatrix2 delta_power_image(const Integer& n) {
  Integer r = n % 4;
  if (r < 0) r += 4;
  switch (r.convert_to<int>()) {
    case 0: return IntMatrix2::identity();
    case 1: return {0, 1, -1, 0};
    case 2: return {-1, 0, 0, -1};
    default: return {0, -1, 1, 0};
  }
}

IntMatrix2 run_image(const Run& r) {
  switch (r.generator) {
    case Generator::Sigma1: return {1, r.exponent, 0, 1};
    case Generator::Sigma2: return {1, 0, -r.exponent, 1};
    case Generator::Delta: return delta_power_image(r.exponent);
  }
  return {};
}

}  // namespace

IntMatrix2 sl2_image(const BraidWord& w) {
  IntMatrix2 m;
  for (const auto& r : w.runs()) m = m * run_image(r);
  return m;
}

std::string render(const IntMatrix2& m) {
  return "[[" + m.a.str() + "," + m.b.str() + "],[" + m.c.str() + "," + m.d.str() + "]]";
}

}  // namespace qpbraid
