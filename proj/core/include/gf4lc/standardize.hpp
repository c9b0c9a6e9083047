#pragma once

// Moving between generator matrices and graphs. Every transformation that
// changes the code is recorded as a column operation, so a standardization
// can be replayed and checked instead of trusted.

#include <span>
#include <string>
#include <vector>

#include "gf4lc/code.hpp"
#include "gf4lc/graph.hpp"

namespace gf4lc {

struct TranscriptOp {
  enum class Kind {
    RowAdd,       ///< row j += row i (code unchanged)
    ColSwapAB,    ///< swap a_i and b_i: scale by w^2, then conjugate
    Conj,         ///< conjugate coordinate i
    ScaleOmega2,  ///< multiply coordinate i by w^2
  };
  Kind kind;
  int i = 0;
  int j = 0;

  friend bool operator==(const TranscriptOp&, const TranscriptOp&) = default;
  std::string to_string() const;
};

using Transcript = std::vector<TranscriptOp>;

/// Applies the operations in order to a generator matrix.
std::vector<Gf4Vector> replay(std::span<const Gf4Vector> rows, const Transcript& ops);
void apply(std::vector<Gf4Vector>& rows, const TranscriptOp& op);

/// Rows of Gamma + wI.
std::vector<Gf4Vector> graph_generator_matrix(const Graph& g);
AdditiveCode graph_to_code(const Graph& g);

struct Standardization {
  Graph graph;
  /// The matrix the transcript acts on: the input rows when they form a
  /// basis, otherwise the canonical basis of their span.
  std::vector<Gf4Vector> start;
  Transcript transcript;
};

/// Reduces a self-dual code to an equivalent graph code. Throws NotSelfDual
/// (RankDeficient or NotSelfOrthogonal) for invalid input.
Standardization code_to_graph(std::span<const Gf4Vector> generators);
Standardization code_to_graph(const AdditiveCode& code);

/// Row additions, w-scaling plus conjugation of column v, then conjugation of
/// the columns in N_v; turns Gamma + wI into Gamma^v + wI.
Transcript lc_transcript(const Graph& g, Vertex v);
AdditiveCode lc_on_code(const Graph& g, Vertex v);

}  // namespace gf4lc
