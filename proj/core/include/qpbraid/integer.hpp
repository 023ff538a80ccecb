#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qpbraid {

// Exponents, Delta powers and matrix entries are unbounded.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& x) { return x.str(); }

inline bool is_odd(const Integer& x) { return bit_test(x, 0); }

// Largest word the library will materialize letter by letter
// (Delta expansion, negative runs in the Garside pass, group repetition).
inline constexpr std::int64_t kMaterializeLimit = 10'000'000;

// Converts to a machine count, throwing ResourceLimitError above `limit`.
std::int64_t checked_count(const Integer& x, std::int64_t limit = kMaterializeLimit);

std::size_t hash_integer(const Integer& x) noexcept;

}  // namespace qpbraid
