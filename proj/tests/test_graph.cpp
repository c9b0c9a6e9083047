#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <unordered_set>

#include "gf4lc/canonical.hpp"
#include "gf4lc/graph.hpp"
#include "support.hpp"

using namespace gf4lc;

TEST_CASE("graph text format") {
  const Graph k2 = graph_parse("2:1");
  CHECK(k2 == Graph::complete(2));
  const Graph p3 = graph_parse("3:101");
  CHECK(p3.adjacent(0, 1));
  CHECK(p3.adjacent(1, 2));
  CHECK_FALSE(p3.adjacent(0, 2));
  CHECK(graph_format(graph_parse("1:")) == "1:");
  const Graph w = fixtures::wheel();
  CHECK(graph_parse(graph_format(w)) == w);

  CHECK_THROWS_AS(graph_parse("3:10"), ParseError);
  CHECK_THROWS_AS(graph_parse("3:1011"), ParseError);
  CHECK_THROWS_AS(graph_parse("3:1x1"), ParseError);
  CHECK_THROWS_AS(graph_parse("x:1"), ParseError);
  CHECK_THROWS_AS(graph_parse("21:"), ParseError);
  CHECK_THROWS_AS(graph_parse("0:"), ParseError);
  CHECK_THROWS_AS(graph_parse("2-1"), ParseError);

  for (int n = 1; n <= 5; ++n)
    for (const auto& g : fixtures::all_labeled(n)) CHECK(graph_parse(graph_format(g)) == g);
}

TEST_CASE("construction validates rows") {
  const std::uint32_t asym[] = {0b10, 0b00};
  CHECK_THROWS_AS(Graph(2, asym), Error);
  const std::uint32_t loop[] = {0b01};
  CHECK_THROWS_AS(Graph(1, loop), Error);
  CHECK_THROWS_AS(Graph(0), LengthError);
  CHECK_THROWS_AS(Graph(21), LengthError);
  Graph g(3);
  CHECK_THROWS(g.add_edge(1, 1));
  CHECK_THROWS(g.add_edge(0, 3));
}

TEST_CASE("local complementation") {
  const Graph f = fixtures::fig2();
  const Graph h = local_complement(f, 0);
  CHECK(h == fixtures::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {2, 3}}));
  CHECK(local_complement(Graph::complete(2), 0) == Graph::complete(2));
  CHECK(local_complement(Graph::complete(2), 1) == Graph::complete(2));
  CHECK(local_complement(Graph::star(5), 0) == Graph::complete(5));
  CHECK_THROWS_AS(local_complement(f, 4), LengthError);

  for (int n = 1; n <= 7; ++n) {
    const auto graphs = n <= 6 ? fixtures::all_labeled(n) : fixtures::all_connected_labeled(n);
    for (const auto& g : graphs)
      for (int v = 0; v < n; ++v) {
        const Graph x = local_complement(g, v);
        if (!(local_complement(x, v) == g)) FAIL("LC is not an involution on " << graph_format(g));
        // Edges touching v are unchanged, edges inside N_v are toggled.
        for (int a = 0; a < n; ++a) {
          if (x.adjacent(a, a) || x.adjacent(a, v) != g.adjacent(a, v)) FAIL("bad LC on " << graph_format(g));
          for (int b = a + 1; b < n; ++b) {
            const bool inside = a != v && b != v && g.adjacent(a, v) && g.adjacent(b, v);
            if (x.adjacent(a, b) != (g.adjacent(a, b) ^ inside) || x.adjacent(a, b) != x.adjacent(b, a))
              FAIL("bad LC on " << graph_format(g));
          }
        }
      }
  }
}

TEST_CASE("degrees, connectivity and anti-Eulerian graphs") {
  const Graph w = fixtures::wheel();
  CHECK(degrees(w) == std::vector<int>{3, 3, 3, 3, 3, 5});
  CHECK(is_anti_eulerian(w));
  CHECK(is_connected(w));
  const Graph p3 = Graph::path(3);
  CHECK(degrees(p3) == std::vector<int>{1, 2, 1});
  CHECK_FALSE(is_anti_eulerian(p3));
  CHECK(is_anti_eulerian(Graph::complete(2)));
  CHECK(min_degree(p3) == 1);
  CHECK_FALSE(is_connected(Graph(2)));
  CHECK(is_connected(Graph(1)));
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : fixtures::all_labeled(n)) CHECK(is_connected(g) == fixtures::connected_by_dfs(g));
}

TEST_CASE("extensions") {
  const auto e1 = extensions(Graph(1));
  REQUIRE(e1.size() == 1);
  CHECK(e1[0] == Graph::complete(2));
  CHECK(extensions(Graph::path(4)).size() == 15);
  for (const auto& g : extensions(Graph::path(4))) {
    CHECK(g.size() == 5);
    CHECK(is_connected(g));
  }
  CHECK(extend(Graph::path(3), 0b100) == Graph::path(4));
  CHECK_THROWS_AS(extensions(Graph(20)), LengthError);
}

TEST_CASE("anti-Eulerian closure") {
  const auto k2 = anti_eulerian_closure(Graph(1));
  REQUIRE(k2);
  CHECK(*k2 == Graph::complete(2));
  const auto p = anti_eulerian_closure(Graph::path(3));
  REQUIRE(p);
  CHECK(degrees(*p) == std::vector<int>{1, 3, 1, 1});
  CHECK(is_connected(*p));
  CHECK_FALSE(anti_eulerian_closure(Graph::complete(2)));

  for (int n = 1; n <= 6; ++n)
    for (const auto& g : fixtures::all_labeled(n))
      if (const auto c = anti_eulerian_closure(g)) {
        CHECK(is_anti_eulerian(*c));
        CHECK(is_connected(*c));
        CHECK(c->size() % 2 == 0);
        CHECK(c->degree(n) % 2 == 1);
      }
}

TEST_CASE("canonical forms on small examples") {
  const Graph p = Graph::path(3);
  const std::uint8_t perm[] = {1, 0, 2};
  CHECK(canonical_form(p) == canonical_form(p.relabeled(perm)));
  CHECK(canonical_form(p) != canonical_form(Graph::complete(3)));
  CHECK(is_isomorphic(p, p.relabeled(perm)));
  CHECK(automorphism_count(Graph::complete(3)) == 6);
  CHECK(automorphism_count(p) == 2);
  CHECK(automorphism_count(fixtures::wheel()) == 10);
  CHECK(fixtures::brute_automorphisms(fixtures::wheel()) == 10);
  CHECK(automorphism_count(Graph(20)) == 2432902008176640000ull);
  CHECK(canonical_form(p).graph().size() == 3);
}

TEST_CASE("canonical form agrees with brute-force isomorphism, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    // Both maps must induce the same partition of all labeled graphs.
    std::map<CanonicalForm, std::string> form_to_brute;
    std::map<std::string, CanonicalForm> brute_to_form;
    for (const auto& g : fixtures::all_labeled(n)) {
      const CanonicalLabeling lab = canonical_labeling(g);
      const std::string brute = fixtures::brute_canonical(g);
      const auto [it, fresh] = form_to_brute.emplace(lab.form, brute);
      if (it->second != brute) FAIL("two non-isomorphic graphs share a key at n = " << n);
      const auto [jt, fresh2] = brute_to_form.emplace(brute, lab.form);
      if (!(jt->second == lab.form)) FAIL("isomorphic graphs got different keys: " << graph_format(g));
      // The labeling maps g onto its canonical graph.
      if (!(g.relabeled(std::span(lab.labeling.data(), n)) == lab.form.graph()))
        FAIL("labeling does not produce the canonical graph for " << graph_format(g));
      if (lab.automorphisms != fixtures::brute_automorphisms(g)) FAIL("automorphism count wrong for " << graph_format(g));
      (void)fresh;
      (void)fresh2;
    }
    CHECK(form_to_brute.size() == brute_to_form.size());
  }
}

TEST_CASE("orbit representatives cover each automorphism orbit once") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : fixtures::all_labeled(n)) {
      const std::uint32_t reps = canonical_labeling(g).orbit_representatives;
      // Brute-force orbits: u ~ v if some automorphism maps u to v.
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      std::vector<std::uint32_t> orbit(n);
      for (int v = 0; v < n; ++v) orbit[v] = 1u << v;
      const std::string self = fixtures::permuted_bits(g, p);
      do
        if (fixtures::permuted_bits(g, p) == self)
          for (int v = 0; v < n; ++v) orbit[v] |= 1u << p[v];
      while (std::next_permutation(p.begin(), p.end()));
      std::uint32_t expected = 0;
      for (int v = 0; v < n; ++v) expected |= 1u << std::countr_zero(orbit[v]);
      if (reps != expected) FAIL("orbit representatives wrong for " << graph_format(g));
    }
}

TEST_CASE("connected unlabeled graph counts") {
  const std::uint64_t expected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    std::unordered_set<CanonicalForm, CanonicalFormHash> keys;
    for (const auto& g : fixtures::all_labeled(n))
      if (is_connected(g)) keys.insert(canonical_form(g));
    CHECK(keys.size() == expected[n - 1]);
  }
}

TEST_CASE("canonical form is invariant under random relabeling, larger n") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const int n = 8 + static_cast<int>(rng() % 13);
    Graph g(n);
    const double density = 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (static_cast<double>(rng() % 1000) / 1000.0 < density) g.add_edge(i, j);
    std::vector<std::uint8_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = g.relabeled(perm);
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(automorphism_count(g) == automorphism_count(h));
  }
  // Highly symmetric cases stress the automorphism pruning.
  CHECK(automorphism_count(Graph::cycle(20)) == 40);
  CHECK(automorphism_count(Graph::complete(12)) == 479001600ull);
  CHECK(automorphism_count(Graph::star(10)) == 362880ull);
  CHECK(automorphism_count(disjoint_union(Graph::cycle(5), Graph::cycle(5))) == 200);
}
