#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace kintree {

using BigInt = boost::multiprecision::cpp_int;

/// Largest power-of-two exponent the library will materialize (bits of a single value).
inline constexpr std::uint64_t kMaxMaterializedBits = std::uint64_t{1} << 26;

/// 2^e. Throws ResourceError when e exceeds kMaxMaterializedBits.
BigInt pow2(std::uint64_t e);

/// Narrow a non-negative BigInt; throws ResourceError if it does not fit below `limit`.
std::uint64_t to_u64(const BigInt& value, std::uint64_t limit = kMaxMaterializedBits);

/// Parses a run of decimal digits starting at `offset` in `text`; advances offset.
/// Throws ParseError if no digit is present.
BigInt parse_natural(std::string_view text, std::size_t& offset);

inline std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace kintree
