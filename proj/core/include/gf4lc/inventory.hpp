#pragma once

// Every equivalence class of a given length, decomposable ones included, built
// from the indecomposable classes of all shorter lengths.

#include <cstdint>
#include <utility>
#include <vector>

#include "gf4lc/analytics.hpp"
#include "gf4lc/orbit.hpp"

namespace gf4lc {

struct ClassSummary {
  int n = 0;
  /// Indecomposable components as (length, index into that length's records),
  /// non-increasing.
  std::vector<std::pair<int, int>> components;
  WeightEnumerator wd;
  int d = 0;
  CodeType type = CodeType::TypeI;
  BigInt aut;

  bool indecomposable() const { return components.size() == 1; }
};

/// All classes of length n as multisets of indecomposable classes.
/// by_length[k] holds the indecomposable records of length k+1 and must cover
/// lengths 1..n. The automorphism group of a sum with multiplicities m_i of
/// pairwise inequivalent components has order prod |Aut_i|^m_i m_i!.
std::vector<ClassSummary> all_classes(int n, const std::vector<std::vector<OrbitRecord>>& by_length);

struct ClassInventory {
  int n = 0;
  /// (|Aut|, multiplicity) over all classes and over the Type II classes.
  std::vector<std::pair<BigInt, std::uint64_t>> all;
  std::vector<std::pair<BigInt, std::uint64_t>> type2;

  std::uint64_t count() const;
  std::uint64_t count_type2() const;
};

ClassInventory make_inventory(int n, const std::vector<ClassSummary>& classes);

struct MassCheck {
  BigInt lhs;
  BigInt rhs;
  bool ok = false;
};

/// lhs = prod (2^i + 1), rhs = sum 6^n n! / |Aut|.
MassCheck mass_check(const ClassInventory& inv);
/// The same identity restricted to Type II classes; requires even n.
MassCheck mass_check_type2(const ClassInventory& inv);

}  // namespace gf4lc
