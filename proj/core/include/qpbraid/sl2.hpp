#pragma once

#include <string>

#include "qpbraid/integer.hpp"
#include "qpbraid/word.hpp"

namespace qpbraid {

// [[a, b], [c, d]] with ad - bc = 1.
struct IntMatrix2 {
  Integer a = 1, b = 0, c = 0, d = 1;

  static IntMatrix2 identity() { return {}; }
  Integer determinant() const { return a * d - b * c; }
  bool operator==(const IntMatrix2&) const = default;
};

IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y);
IntMatrix2 operator-(const IntMatrix2& x);

// s1 -> [[1,1],[0,1]], s2 -> [[1,0],[-1,1]]. Kernel is generated by D^4, so
// together with the exponent sum this separates elements of B3.
IntMatrix2 sl2_image(const BraidWord& w);

std::string render(const IntMatrix2& m);

}  // namespace qpbraid
