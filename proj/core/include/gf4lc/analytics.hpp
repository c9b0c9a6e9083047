#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gf4lc/code.hpp"
#include "gf4lc/graph.hpp"

namespace gf4lc {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);
/// 6^n n!, the number of coordinate maps preserving self-duality.
BigInt map_count(int n);
/// prod_{i=1..n} (2^i + 1): total number of distinct self-dual codes.
BigInt total_codes(int n);
/// prod_{i=0..n-1} (2^i + 1): total number of distinct Type II codes.
BigInt total_codes_type2(int n);

/// t_n >= ceil(T_n / (6^n n!)).
BigInt lower_bound_classes(int n);

/// Euler transform: from counts of indecomposable classes i_1..i_N to counts
/// of all classes t_1..t_N. Throws Error if a division is inexact.
std::vector<BigInt> euler_transform(std::span<const BigInt> indecomposable);
std::vector<BigInt> euler_transform(std::span<const std::uint64_t> indecomposable);

/// Smallest diagonal mask A (bit i = a_i) with Gamma^2 + A Gamma + Gamma A +
/// Gamma + I = 0 over GF(2), or nullopt when none exists. A solution means
/// the graph code is equivalent to a linear code.
std::optional<std::uint32_t> linearity_test(const Graph& g);

/// Binary [3n, n] image under 0->000, 1->011, w->101, w^2->110.
std::vector<BitVector> beta_image(const AdditiveCode& code);
/// Binary length-2n image under 0->00, 1->11, w->01, w^2->10.
std::vector<BitVector> isodual_image(const AdditiveCode& code);
/// 2 Gamma + I over Z4, rows of entries in {0,1,2,3}.
std::vector<std::vector<int>> z4_image(const Graph& g);
/// Symbol-Hamming weight distribution of the 2^n sums of subsets of rows.
WeightEnumerator z4_weight_distribution(std::span<const std::vector<int>> rows);

/// Row-per-line text, entries separated by single spaces.
std::string format_binary_matrix(std::span<const BitVector> rows);
std::string format_z4_matrix(std::span<const std::vector<int>> rows);

/// GF(2) rank of a set of bit vectors.
int binary_rank(std::span<const BitVector> rows);

}  // namespace gf4lc
