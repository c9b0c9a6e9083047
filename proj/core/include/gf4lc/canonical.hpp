#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include "gf4lc/graph.hpp"

namespace gf4lc {

/// Isomorphism-class key. Holds the upper triangle of the canonically
/// relabeled adjacency matrix, most significant bit first, so comparing keys
/// compares the `<n>:<bits>` strings of the canonical graphs.
struct CanonicalForm {
  std::uint8_t n = 0;
  std::array<std::uint64_t, 3> words{};

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

  /// The canonical graph itself.
  Graph graph() const;
  /// Big-endian byte serialization; same order as operator<=>.
  std::string bytes() const;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& k) const noexcept {
    std::uint64_t h = k.n * 0x9e3779b97f4a7c15ull;
    for (auto w : k.words) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// labeling[p] is the input vertex placed at canonical position p.
  std::array<std::uint8_t, kMaxVertices> labeling{};
  /// |Aut(G)|; exact, fits in 64 bits for n <= 20.
  std::uint64_t automorphisms = 1;
  /// One bit per Aut(G) vertex orbit: its least vertex (input labels).
  std::uint32_t orbit_representatives = 0;
};

/// Exact canonical labeling by equitable refinement and backtracking with
/// automorphism pruning.
CanonicalLabeling canonical_labeling(const Graph& g);

CanonicalForm canonical_form(const Graph& g);
bool is_isomorphic(const Graph& g, const Graph& h);
std::uint64_t automorphism_count(const Graph& g);

/// Packs a graph's own labeling into a key, without canonicalizing.
CanonicalForm pack_labeled(const Graph& g);

}  // namespace gf4lc
