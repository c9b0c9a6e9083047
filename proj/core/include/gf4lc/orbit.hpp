#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "gf4lc/canonical.hpp"
#include "gf4lc/code.hpp"
#include "gf4lc/graph.hpp"

namespace gf4lc {

inline constexpr std::uint64_t kDefaultOrbitBudget = 10'000'000;

/// All unlabeled graphs reachable from a graph by local complementation.
struct Orbit {
  /// Canonical forms of the members, ascending.
  std::vector<CanonicalForm> members;
  /// Canonical graph of the least member.
  Graph representative;
  /// Number of labeled graphs in the orbit: sum of n!/|Aut(member)|.
  std::uint64_t labeled_count = 0;
  /// Smallest vertex degree over all members.
  int min_degree = 0;
  bool all_anti_eulerian = true;
};

/// Breadth-first LC closure deduplicated by canonical form. Throws
/// BudgetExceeded when the orbit has more than `budget` members.
Orbit lc_orbit(const Graph& g, std::uint64_t budget = kDefaultOrbitBudget);

/// One equivalence class of self-dual codes.
struct OrbitRecord {
  Graph representative;
  std::uint64_t orbit_size = 0;
  std::uint64_t labeled = 0;
  int d = 0;
  CodeType type = CodeType::TypeI;
  WeightEnumerator wd;
  std::uint64_t aut = 0;
  bool extremal = false;
  bool linear = false;

  int n() const { return representative.size(); }
  CanonicalForm key() const { return pack_labeled(representative); }
  friend bool operator==(const OrbitRecord&, const OrbitRecord&) = default;
};

/// Builds the record for an enumerated orbit (weights, type, S(G), Aut).
OrbitRecord make_record(const Orbit& orbit);

/// Number of scalings s in {1, w, w^2}^n of Gamma + wI that leave the B half
/// invertible. Requires n <= 14.
std::uint64_t scaling_count(const Graph& g);

/// n! * S / l, which must divide exactly.
std::uint64_t aut_size(int n, std::uint64_t scalings, std::uint64_t labeled);
std::uint64_t aut_size(const Orbit& orbit);

/// Number of distinct codes equivalent to `code`, by closing it under
/// adjacent transpositions, w-scalings and conjugations of single coordinates.
std::uint64_t brute_force_class_size(const AdditiveCode& code, std::uint64_t budget = 5'000'000);

struct ClassifyOptions {
  /// Prefix length of the partial weight distribution; < 0 selects min(n-2, 6).
  int j = -1;
  /// Worker threads used across partitions.
  int jobs = 1;
  std::uint64_t budget = kDefaultOrbitBudget;
  /// Diagnostic messages; never part of the result.
  std::function<void(std::string_view)> progress;
};

int default_partition_depth(int n);

/// Indecomposable classes of length n from a complete set of representatives
/// of length n-1 (ignored for n = 1). Sorted by representative key.
std::vector<OrbitRecord> classify(int n, const std::vector<Graph>& previous, const ClassifyOptions& options = {});

/// Indecomposable Type II classes of even length n, from the representatives
/// of length n-2 (ignored for n = 2).
std::vector<OrbitRecord> classify_type2(int n, const std::vector<Graph>& previous, const ClassifyOptions& options = {});

/// classify() for every length 1..max_n; element k holds length k+1.
std::vector<std::vector<OrbitRecord>> classify_up_to(int max_n, const ClassifyOptions& options = {});

std::vector<Graph> representatives(const std::vector<OrbitRecord>& records);

}  // namespace gf4lc
