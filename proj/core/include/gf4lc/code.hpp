#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gf4lc/gf4.hpp"
#include "gf4lc/graph.hpp"

namespace gf4lc {

enum class CodeType { TypeI, TypeII };

std::string to_string(CodeType t);

/// Weight distribution (A_0, ..., A_n) of a code of length n.
class WeightEnumerator {
 public:
  WeightEnumerator() = default;
  explicit WeightEnumerator(std::vector<std::uint64_t> coeffs) : coeffs_(std::move(coeffs)) {}

  int length() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
  std::uint64_t operator[](int i) const { return coeffs_[i]; }

  /// Smallest nonzero weight, or 0 when only the zero word exists.
  int min_distance() const;
  CodeType type() const;
  std::uint64_t total() const;

  /// Coefficient vector of the product W1(x,y) * W2(x,y).
  friend WeightEnumerator operator*(const WeightEnumerator& x, const WeightEnumerator& y);
  friend auto operator<=>(const WeightEnumerator&, const WeightEnumerator&) = default;
  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;

  /// Comma-separated coefficients, e.g. "1,0,3".
  std::string to_string() const;
  /// e.g. "x^6 + 45x^2y^4 + 18y^6".
  std::string polynomial() const;

 private:
  std::vector<std::uint64_t> coeffs_;
};

/// A self-dual additive (n, 2^n) code, held as the reduced row echelon form of
/// its binary image with column order a_1..a_n b_1..b_n. Two values compare
/// equal exactly when the codes are equal as sets.
class AdditiveCode {
 public:
  AdditiveCode() = default;

  int length() const { return n_; }
  const std::vector<Gf4Vector>& basis() const { return basis_; }

  /// Visits all 2^n codewords in Gray-code order, starting with zero.
  template <class Fn>
  void for_each_codeword(Fn&& fn) const {
    Gf4Vector word(n_);
    fn(word);
    const std::uint64_t count = 1ull << basis_.size();
    for (std::uint64_t k = 1; k < count; ++k) {
      word += basis_[std::countr_zero(k)];
      fn(word);
    }
  }

  bool contains(const Gf4Vector& v) const;

  friend bool operator==(const AdditiveCode&, const AdditiveCode&) = default;
  friend auto operator<=>(const AdditiveCode& x, const AdditiveCode& y) {
    if (auto c = x.n_ <=> y.n_; c != 0) return c;
    return x.packed_ <=> y.packed_;
  }
  std::size_t hash() const;

  friend AdditiveCode code_from_generators(std::span<const Gf4Vector> rows);

 private:
  int n_ = 0;
  std::vector<Gf4Vector> basis_;
  std::vector<std::uint64_t> packed_;
};

struct AdditiveCodeHash {
  std::size_t operator()(const AdditiveCode& c) const { return c.hash(); }
};

/// Canonical basis of the span of `rows`. Throws RankDeficient unless the span
/// has dimension n, NotSelfOrthogonal if some pair has htip 1.
AdditiveCode code_from_generators(std::span<const Gf4Vector> rows);

int min_distance(const AdditiveCode& code);
WeightEnumerator weight_enumerator(const AdditiveCode& code);
CodeType type_of(const AdditiveCode& code);

/// Weight distribution of the code generated by Gamma + wI, by exhaustion.
WeightEnumerator graph_weight_enumerator(const Graph& g);

/// (A_0, ..., A_j) of the graph code, from combinations of at most j rows.
std::vector<std::uint64_t> partial_weight_distribution(const Graph& g, int j);

AdditiveCode direct_sum(const AdditiveCode& x, const AdditiveCode& y);

/// Upper bound on d for a self-dual code of the given length and type.
/// Throws LengthError for Type II with odd n.
int distance_bound(int n, CodeType type);
bool is_extremal(int n, int d, CodeType type);
bool is_extremal(const AdditiveCode& code);

}  // namespace gf4lc
