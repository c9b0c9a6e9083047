#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>

#include "gf4lc/canonical.hpp"
#include "gf4lc/orbit.hpp"
#include "gf4lc/standardize.hpp"
#include "support.hpp"

using namespace gf4lc;

namespace {

const Gf4Element k0 = Gf4Element::zero(), k1 = Gf4Element::one(), kw = Gf4Element::omega(),
                 kW = Gf4Element::omega2();

using Kind = TranscriptOp::Kind;

// A code equivalent to the graph code of g, disguised by random column maps,
// a coordinate permutation and row mixing.
std::vector<Gf4Vector> disguise(const Graph& g, std::mt19937_64& rng) {
  auto rows = fixtures::graph_rows(g);
  const int n = g.size();
  for (int t = 0; t < 3 * n; ++t) {
    const Kind k = std::array{Kind::Conj, Kind::ScaleOmega2, Kind::ColSwapAB}[rng() % 3];
    apply(rows, {k, static_cast<int>(rng() % n)});
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& r : rows) {
    Gf4Vector s(n);
    for (int i = 0; i < n; ++i) s.set(i, r[perm[i]]);
    r = s;
  }
  for (int t = 0; t < 2 * n; ++t) {
    const int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
    if (i != j) rows[j] += rows[i];
  }
  return rows;
}

bool in_orbit(const Graph& h, const Orbit& orbit) {
  return std::binary_search(orbit.members.begin(), orbit.members.end(), canonical_form(h));
}

}  // namespace

TEST_CASE("graph codes") {
  const AdditiveCode k2 = graph_to_code(Graph::complete(2));
  std::vector<Gf4Vector> words;
  k2.for_each_codeword([&](const Gf4Vector& w) { words.push_back(w); });
  std::sort(words.begin(), words.end(), [](const Gf4Vector& x, const Gf4Vector& y) { return x.to_string() < y.to_string(); });
  REQUIRE(words.size() == 4);
  CHECK(words[0].to_string() == "0 0");
  CHECK(words[1].to_string() == "1 w");
  CHECK(words[2].to_string() == "W W");
  CHECK(words[3].to_string() == "w 1");
  CHECK(graph_generator_matrix(Graph::complete(2))[0] == Gf4Vector{kw, k1});

  const AdditiveCode single = graph_to_code(Graph(1));
  CHECK(single.contains(Gf4Vector{kw}));
  CHECK_FALSE(single.contains(Gf4Vector{k1}));

  CHECK(graph_to_code(fixtures::wheel()) == code_from_generators(fixtures::graph_rows(fixtures::wheel())));
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : fixtures::all_labeled(n)) CHECK(graph_to_code(g) == code_from_generators(fixtures::graph_rows(g)));
}

TEST_CASE("column operations on one coordinate") {
  for (int i = 0; i < 4; ++i) {
    const Gf4Element x = Gf4Element::from_index(i);
    // Conjugation then w-scaling equals w^2-scaling then conjugation.
    CHECK(x.conjugate() * kw == (kW * x).conjugate());
    auto apply_one = [x](std::initializer_list<Kind> kinds) {
      std::vector<Gf4Vector> rows{Gf4Vector{x}};
      for (auto k : kinds) apply(rows, {k, 0});
      return rows[0][0];
    };
    CHECK(apply_one({Kind::Conj}) == x.conjugate());
    CHECK(apply_one({Kind::ScaleOmega2}) == kW * x);
    CHECK(apply_one({Kind::ColSwapAB}) == apply_one({Kind::ScaleOmega2, Kind::Conj}));
    CHECK(apply_one({Kind::Conj, Kind::ScaleOmega2, Kind::ScaleOmega2}) == apply_one({Kind::ScaleOmega2, Kind::Conj}));
  }
  // The same identity on the three length-1 codes.
  for (const Gf4Element g : {k1, kw, kW}) {
    std::vector<Gf4Vector> a{Gf4Vector{g}}, b{Gf4Vector{g}};
    apply(a, {Kind::Conj, 0});
    apply(a, {Kind::ScaleOmega2, 0});
    apply(a, {Kind::ScaleOmega2, 0});
    apply(b, {Kind::ScaleOmega2, 0});
    apply(b, {Kind::Conj, 0});
    CHECK(code_from_generators(a) == code_from_generators(b));
  }
  std::vector<Gf4Vector> rows{Gf4Vector{kw}};
  CHECK_THROWS_AS(apply(rows, {Kind::Conj, 1}), LengthError);
  CHECK(TranscriptOp{Kind::RowAdd, 2, 3}.to_string() == "RowAdd(2,3)");
}

TEST_CASE("Hexacode standardizes to the wheel") {
  const auto c = parse_matrix(fixtures::kHexacode);
  // Feed the binary image (A|B) back as rows, so the input is not in graph form.
  std::vector<Gf4Vector> ab;
  for (const auto& r : c) ab.push_back(phi_inv(phi(r)));
  const Standardization s = code_to_graph(ab);
  CHECK(is_isomorphic(s.graph, fixtures::wheel()));
  CHECK(code_from_generators(replay(s.start, s.transcript)) == graph_to_code(s.graph));
  CHECK(s.start == ab);
}

TEST_CASE("graph-form input is returned unchanged") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : fixtures::all_labeled(n)) {
      const Standardization s = code_to_graph(fixtures::graph_rows(g));
      if (!(s.graph == g)) FAIL("graph form not preserved for " << graph_format(g));
    }
}

TEST_CASE("decomposable input gives a disconnected graph") {
  const AdditiveCode one = graph_to_code(Graph(1));
  const Standardization s = code_to_graph(direct_sum(one, one));
  CHECK(s.graph == Graph(2));
  const AdditiveCode hk = direct_sum(graph_to_code(fixtures::wheel()), graph_to_code(Graph::complete(2)));
  CHECK_FALSE(is_connected(code_to_graph(hk).graph));
}

TEST_CASE("invalid input is rejected") {
  CHECK_THROWS_AS(code_to_graph(std::vector<Gf4Vector>{Gf4Vector{k1}, Gf4Vector{kw}}), NotSelfOrthogonal);
  CHECK_THROWS_AS(code_to_graph(std::vector<Gf4Vector>{Gf4Vector{kw, k0}}), RankDeficient);
  CHECK_THROWS_AS(code_to_graph(std::vector<Gf4Vector>{Gf4Vector{kw, k0}, Gf4Vector{k1, k0}}), NotSelfDual);
}

TEST_CASE("round trip lands in the LC orbit, connected graphs n <= 7") {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 7; ++n) {
    const auto graphs = n <= 6 ? fixtures::connected_unlabeled(n) : std::vector<Graph>{};
    std::vector<Graph> reps = graphs;
    if (n == 7) {
      // One labeled copy per class via canonical forms.
      std::set<CanonicalForm> seen;
      for (const auto& g : fixtures::all_connected_labeled(7))
        if (seen.insert(canonical_form(g)).second) reps.push_back(g);
      REQUIRE(reps.size() == 853);
    }
    for (const auto& g : reps) {
      const Orbit orbit = lc_orbit(g);
      const AdditiveCode c = graph_to_code(g);
      const Standardization s = code_to_graph(c);
      if (!in_orbit(s.graph, orbit)) FAIL("standardized graph left the orbit of " << graph_format(g));
      if (!(code_from_generators(replay(s.start, s.transcript)) == graph_to_code(s.graph)))
        FAIL("transcript replay mismatch for " << graph_format(g));

      const auto rows = disguise(g, rng);
      const Standardization t = code_to_graph(rows);
      if (!in_orbit(t.graph, orbit)) FAIL("disguised code standardized outside the orbit of " << graph_format(g));
      if (!(code_from_generators(replay(t.start, t.transcript)) == graph_to_code(t.graph)))
        FAIL("transcript replay mismatch on disguised " << graph_format(g));
      const AdditiveCode dc = code_from_generators(rows);
      const AdditiveCode gc = graph_to_code(t.graph);
      if (!(weight_enumerator(dc) == weight_enumerator(gc)) || min_distance(dc) != min_distance(gc) ||
          type_of(dc) != type_of(gc))
        FAIL("equivalence invariants changed for " << graph_format(g));
    }
  }
}

TEST_CASE("LC on generator matrices commutes with LC on graphs") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : fixtures::all_labeled(n))
      for (int v = 0; v < n; ++v)
        if (!(lc_on_code(g, v) == graph_to_code(local_complement(g, v))))
          FAIL("commuting square fails for " << graph_format(g) << " at " << v);

  const Graph f = fixtures::fig2();
  CHECK(lc_on_code(f, 0) == graph_to_code(fixtures::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {2, 3}})));
  CHECK(lc_on_code(Graph::complete(2), 0) == graph_to_code(Graph::complete(2)));
  const Graph w = fixtures::wheel();
  const Graph fig1a = local_complement(w, 0);
  for (int rim = 0; rim < 5; ++rim) {
    CHECK(lc_on_code(w, rim) == graph_to_code(local_complement(w, rim)));
    CHECK(is_isomorphic(local_complement(w, rim), fig1a));
  }
  CHECK_FALSE(is_isomorphic(fig1a, w));
  CHECK(is_isomorphic(local_complement(w, 5), w));
  CHECK_THROWS_AS(lc_transcript(w, 6), LengthError);
}
