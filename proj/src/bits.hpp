#pragma once

// Word-level helpers shared by the GF(2) routines. Indices here are 0-based.

#include <bit>
#include <cstddef>
#include <span>

#include "icode/gf2.hpp"

namespace icode::bits {

inline bool test(std::span<const Word> w, std::size_t i) {
  return (w[i / kWordBits] >> (i % kWordBits)) & 1U;
}

inline void set(std::span<Word> w, std::size_t i) {
  w[i / kWordBits] |= Word{1} << (i % kWordBits);
}

inline void clear(std::span<Word> w, std::size_t i) {
  w[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
}

inline void flip(std::span<Word> w, std::size_t i) {
  w[i / kWordBits] ^= Word{1} << (i % kWordBits);
}

inline void xor_into(std::span<Word> dst, std::span<const Word> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

inline bool none(std::span<const Word> w) {
  for (Word x : w)
    if (x != 0) return false;
  return true;
}

inline std::size_t popcount(std::span<const Word> w) {
  std::size_t n = 0;
  for (Word x : w) n += static_cast<std::size_t>(std::popcount(x));
  return n;
}

/// Lowest set bit, or `npos` when all zero.
inline constexpr std::size_t npos = static_cast<std::size_t>(-1);
inline std::size_t lowest(std::span<const Word> w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(w[i]));
  return npos;
}

/// True when the ascending index list of `a` precedes that of `b`. Both sets
/// must have the same cardinality: the smallest element of the symmetric
/// difference decides.
inline bool lex_less_same_size(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    Word d = a[i] ^ b[i];
    if (d != 0) return (a[i] & (d & (~d + 1))) != 0;
  }
  return false;
}

}  // namespace icode::bits
