#pragma once

// Arithmetic over GF(4) = {0, 1, w, w^2} with w^2 = w + 1, stored through the
// bit-pair map x = a + w*b. Vectors keep the two halves as separate masks, so
// codeword addition is two XORs and the Hamming weight is popcount(a | b).

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gf4lc/error.hpp"

namespace gf4lc {

inline constexpr int kMaxLength = 20;

class Gf4Element {
 public:
  constexpr Gf4Element() = default;
  constexpr Gf4Element(bool a, bool b) : value_(static_cast<std::uint8_t>(a | (b << 1))) {}

  static constexpr Gf4Element zero() { return {false, false}; }
  static constexpr Gf4Element one() { return {true, false}; }
  static constexpr Gf4Element omega() { return {false, true}; }
  static constexpr Gf4Element omega2() { return {true, true}; }

  constexpr bool a() const { return value_ & 1; }
  constexpr bool b() const { return (value_ >> 1) & 1; }
  /// 0, 1, 2, 3 for 0, 1, w, w^2.
  constexpr int index() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr Gf4Element operator+(Gf4Element x, Gf4Element y) {
    return from_index(x.value_ ^ y.value_);
  }
  friend constexpr Gf4Element operator*(Gf4Element x, Gf4Element y) {
    constexpr std::uint8_t kMul[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    return from_index(kMul[x.value_][y.value_]);
  }
  friend constexpr bool operator==(Gf4Element, Gf4Element) = default;

  /// x^2; swaps w and w^2.
  constexpr Gf4Element conjugate() const { return {static_cast<bool>(a() ^ b()), b()}; }
  /// Tr(x) = x + x^2, which is the b bit.
  constexpr bool trace() const { return b(); }

  /// One of "0", "1", "w", "W".
  char symbol() const { return "01wW"[value_]; }
  static Gf4Element from_symbol(char c);

  static constexpr Gf4Element from_index(int i) { return {static_cast<bool>(i & 1), static_cast<bool>(i & 2)}; }

 private:
  std::uint8_t value_ = 0;
};

/// Fixed-length bit vector (length <= 64), bit i is coordinate i.
struct BitVector {
  int length = 0;
  std::uint64_t bits = 0;

  bool operator[](int i) const { return (bits >> i) & 1; }
  friend bool operator==(const BitVector&, const BitVector&) = default;
};

/// Symplectic form <(a|b),(a'|b')> = a.b' + b.a' on even-length vectors.
bool symplectic(const BitVector& p, const BitVector& q);

class Gf4Vector {
 public:
  Gf4Vector() = default;
  explicit Gf4Vector(int n);
  Gf4Vector(int n, std::uint32_t a, std::uint32_t b);
  Gf4Vector(std::initializer_list<Gf4Element> elements);

  int size() const { return n_; }
  std::uint32_t a() const { return a_; }
  std::uint32_t b() const { return b_; }
  std::uint32_t support() const { return a_ | b_; }

  Gf4Element operator[](int i) const { return {static_cast<bool>((a_ >> i) & 1), static_cast<bool>((b_ >> i) & 1)}; }
  void set(int i, Gf4Element x);

  int weight() const { return std::popcount(support()); }
  bool is_zero() const { return support() == 0; }

  Gf4Vector& operator+=(const Gf4Vector& other);
  friend Gf4Vector operator+(Gf4Vector lhs, const Gf4Vector& rhs) { return lhs += rhs; }
  friend bool operator==(const Gf4Vector&, const Gf4Vector&) = default;

  std::string to_string() const;

 private:
  std::uint8_t n_ = 0;
  std::uint32_t a_ = 0;
  std::uint32_t b_ = 0;
};

/// phi(v) = (a|b): a in bits 0..n-1, b in bits n..2n-1.
BitVector phi(const Gf4Vector& v);
/// phi^-1(a|b) = a + w*b. Throws LengthError for odd lengths.
Gf4Vector phi_inv(const BitVector& ab);

/// Hermitian trace inner product Tr(u . conj(v)).
bool htip(const Gf4Vector& u, const Gf4Vector& v);

/// Parses the row-per-line matrix format (symbols 0 1 w W, single spaces).
std::vector<Gf4Vector> parse_matrix(std::string_view text);
std::string format_matrix(std::span<const Gf4Vector> rows);

}  // namespace gf4lc
