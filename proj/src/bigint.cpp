#include "kintree/bigint.hpp"

#include "kintree/error.hpp"

namespace kintree {

BigInt pow2(std::uint64_t e) {
  if (e > kMaxMaterializedBits) {
    throw ResourceError("power of two 2^" + std::to_string(e) + " exceeds the materialization bound");
  }
  BigInt result = 1;
  result <<= static_cast<unsigned>(e);
  return result;
}

std::uint64_t to_u64(const BigInt& value, std::uint64_t limit) {
  if (value < 0) throw DomainError("expected a non-negative integer, got " + value.str());
  if (value > limit) {
    throw ResourceError("value " + value.str() + " exceeds the bound " + std::to_string(limit));
  }
  return value.convert_to<std::uint64_t>();
}

BigInt parse_natural(std::string_view text, std::size_t& offset) {
  const std::size_t start = offset;
  while (offset < text.size() && text[offset] >= '0' && text[offset] <= '9') ++offset;
  if (offset == start) throw ParseError("expected a decimal digit", start);
  return BigInt(std::string(text.substr(start, offset - start)));
}

}  // namespace kintree
