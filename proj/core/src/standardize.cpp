#include "gf4lc/standardize.hpp"

namespace gf4lc {

namespace {

// Column maps on the bit pair (a, b) of one coordinate.
Gf4Vector map_column(const Gf4Vector& row, int i, TranscriptOp::Kind kind) {
  const std::uint32_t bit = 1u << i;
  const bool a = row.a() & bit, b = row.b() & bit;
  bool na = a, nb = b;
  switch (kind) {
    case TranscriptOp::Kind::ColSwapAB: na = b; nb = a; break;
    case TranscriptOp::Kind::Conj: na = a ^ b; break;
    case TranscriptOp::Kind::ScaleOmega2: na = a ^ b; nb = a; break;
    case TranscriptOp::Kind::RowAdd: break;
  }
  return Gf4Vector(row.size(), (row.a() & ~bit) | (na ? bit : 0), (row.b() & ~bit) | (nb ? bit : 0));
}

class Recorder {
 public:
  explicit Recorder(std::vector<Gf4Vector> rows) : rows_(std::move(rows)) {}

  void op(TranscriptOp::Kind kind, int i, int j = 0) {
    TranscriptOp o{kind, i, j};
    apply(rows_, o);
    ops_.push_back(o);
  }
  void add_row(int from, int to) { op(TranscriptOp::Kind::RowAdd, from, to); }
  void swap_rows(int r, int s) {
    if (r == s) return;
    add_row(s, r);
    add_row(r, s);
    add_row(s, r);
  }

  const std::vector<Gf4Vector>& rows() const { return rows_; }
  Transcript take() { return std::move(ops_); }

 private:
  std::vector<Gf4Vector> rows_;
  Transcript ops_;
};

}  // namespace

std::string TranscriptOp::to_string() const {
  switch (kind) {
    case Kind::RowAdd: return "RowAdd(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Kind::ColSwapAB: return "ColSwapAB(" + std::to_string(i) + ")";
    case Kind::Conj: return "Conj(" + std::to_string(i) + ")";
    case Kind::ScaleOmega2: return "ScaleW2(" + std::to_string(i) + ")";
  }
  return {};
}

void apply(std::vector<Gf4Vector>& rows, const TranscriptOp& op) {
  if (op.kind == TranscriptOp::Kind::RowAdd) {
    rows.at(op.j) += rows.at(op.i);
    return;
  }
  for (auto& r : rows) {
    if (op.i < 0 || op.i >= r.size()) throw LengthError("transcript column out of range");
    r = map_column(r, op.i, op.kind);
  }
}

std::vector<Gf4Vector> replay(std::span<const Gf4Vector> rows, const Transcript& ops) {
  std::vector<Gf4Vector> out(rows.begin(), rows.end());
  for (const auto& op : ops) apply(out, op);
  return out;
}

std::vector<Gf4Vector> graph_generator_matrix(const Graph& g) {
  std::vector<Gf4Vector> rows;
  rows.reserve(g.size());
  for (int i = 0; i < g.size(); ++i) rows.emplace_back(g.size(), g.row(i), 1u << i);
  return rows;
}

AdditiveCode graph_to_code(const Graph& g) { return code_from_generators(graph_generator_matrix(g)); }

Standardization code_to_graph(std::span<const Gf4Vector> generators) {
  const AdditiveCode code = code_from_generators(generators);
  const int n = code.length();
  std::vector<Gf4Vector> start(generators.begin(), generators.end());
  if (start.size() != static_cast<std::size_t>(n)) start = code.basis();

  Recorder rec(start);
  auto b_bit = [&rec](int r, int c) { return (rec.rows()[r].b() >> c) & 1; };
  auto a_bit = [&rec](int r, int c) { return (rec.rows()[r].a() >> c) & 1; };

  // Reduced echelon form on the B half, leftmost pivots first.
  std::uint32_t pivots = 0;
  int rank = 0;
  for (int c = 0; c < n && rank < n; ++c) {
    int r = rank;
    while (r < n && !b_bit(r, c)) ++r;
    if (r == n) continue;
    rec.swap_rows(r, rank);
    for (int i = 0; i < n; ++i)
      if (i != rank && b_bit(i, c)) rec.add_row(rank, i);
    pivots |= 1u << c;
    ++rank;
  }

  // The non-pivot columns carry an invertible block of A; swapping them into
  // B makes B invertible.
  for (int c = 0; c < n; ++c)
    if (!((pivots >> c) & 1)) rec.op(TranscriptOp::Kind::ColSwapAB, c);

  // B^-1 (A|B) = (Gamma|I).
  for (int c = 0; c < n; ++c) {
    int r = c;
    while (r < n && !b_bit(r, c)) ++r;
    if (r == n) throw Error("standardization: B is singular after column swaps");
    rec.swap_rows(r, c);
    for (int i = 0; i < n; ++i)
      if (i != c && b_bit(i, c)) rec.add_row(c, i);
  }

  for (int c = 0; c < n; ++c)
    if (a_bit(c, c)) rec.op(TranscriptOp::Kind::Conj, c);

  std::vector<std::uint32_t> adj(n);
  for (int i = 0; i < n; ++i) adj[i] = rec.rows()[i].a();
  Standardization out{Graph(n, adj), std::move(start), rec.take()};
  return out;
}

Standardization code_to_graph(const AdditiveCode& code) { return code_to_graph(code.basis()); }

Transcript lc_transcript(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.size()) throw LengthError("vertex out of range");
  Transcript ops;
  const std::uint32_t nv = g.neighbours(v);
  for (std::uint32_t m = nv; m; m &= m - 1) ops.push_back({TranscriptOp::Kind::RowAdd, v, std::countr_zero(m)});
  // Scaling by w is scaling by w^2 twice.
  ops.push_back({TranscriptOp::Kind::ScaleOmega2, v});
  ops.push_back({TranscriptOp::Kind::ScaleOmega2, v});
  ops.push_back({TranscriptOp::Kind::Conj, v});
  for (std::uint32_t m = nv; m; m &= m - 1) ops.push_back({TranscriptOp::Kind::Conj, std::countr_zero(m)});
  return ops;
}

AdditiveCode lc_on_code(const Graph& g, Vertex v) {
  return code_from_generators(replay(graph_generator_matrix(g), lc_transcript(g, v)));
}

}  // namespace gf4lc
