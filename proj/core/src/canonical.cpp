#include "gf4lc/canonical.hpp"

#include <vector>

namespace gf4lc {

namespace {

using Labels = std::array<std::uint8_t, kMaxVertices>;

// Ordered partition of the vertex set: lab lists vertices by position, bit p
// of `starts` marks the first position of a cell.
struct Partition {
  Labels lab{};
  std::uint32_t starts = 1;
};

int cell_end(std::uint32_t starts, int s, int n) {
  const std::uint32_t later = s + 1 < 32 ? starts >> (s + 1) : 0;
  return later ? s + 1 + std::countr_zero(later) : n;
}

CanonicalForm pack(const Graph& g, const Labels& lab) {
  const int n = g.size();
  Labels pos{};
  for (int p = 0; p < n; ++p) pos[lab[p]] = static_cast<std::uint8_t>(p);
  CanonicalForm key;
  key.n = static_cast<std::uint8_t>(n);
  int t = 0;
  for (int p = 0; p < n; ++p) {
    std::uint32_t permuted = 0;
    for (std::uint32_t r = g.row(lab[p]); r; r &= r - 1) permuted |= 1u << pos[std::countr_zero(r)];
    for (int q = p + 1; q < n; ++q, ++t)
      if ((permuted >> q) & 1) key.words[t >> 6] |= 1ull << (63 - (t & 63));
  }
  return key;
}

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.size()) {
    for (int v = 0; v < n_; ++v) parent_[v] = static_cast<std::uint8_t>(v);
  }

  CanonicalLabeling run() {
    Partition root;
    for (int v = 0; v < n_; ++v) root.lab[v] = static_cast<std::uint8_t>(v);
    refine(root, 1u);
    visit(root, 0, true);

    CanonicalLabeling out;
    out.form = best_key_;
    out.labeling = best_lab_;
    out.automorphisms = aut_;
    std::uint32_t seen_roots = 0;
    for (int v = 0; v < n_; ++v) {
      const int r = find(v);
      if (!((seen_roots >> r) & 1)) {
        seen_roots |= 1u << r;
        out.orbit_representatives |= 1u << v;
      }
    }
    return out;
  }

 private:
  bool discrete(const Partition& p) const { return p.starts == g_.vertex_mask(); }

  // Refines to the coarsest equitable partition reachable from the cells
  // flagged in `active`.
  void refine(Partition& p, std::uint32_t active) const {
    const std::uint32_t all = g_.vertex_mask();
    while (active && p.starts != all) {
      const int s = std::countr_zero(active);
      active &= active - 1;
      const int e = cell_end(p.starts, s, n_);
      std::uint32_t splitter = 0;
      for (int q = s; q < e; ++q) splitter |= 1u << p.lab[q];

      for (std::uint32_t st = p.starts; st;) {
        const int cs = std::countr_zero(st);
        st &= st - 1;
        const int ce = st ? std::countr_zero(st) : n_;
        if (ce - cs <= 1) continue;

        std::uint8_t count[kMaxVertices];
        bool split = false;
        for (int q = cs; q < ce; ++q) {
          count[q] = static_cast<std::uint8_t>(std::popcount(g_.row(p.lab[q]) & splitter));
          split |= count[q] != count[cs];
        }
        if (!split) continue;

        // Insertion sort of the cell by count, ascending.
        for (int q = cs + 1; q < ce; ++q) {
          const std::uint8_t c = count[q], v = p.lab[q];
          int r = q - 1;
          while (r >= cs && count[r] > c) {
            count[r + 1] = count[r];
            p.lab[r + 1] = p.lab[r];
            --r;
          }
          count[r + 1] = c;
          p.lab[r + 1] = v;
        }
        active |= 1u << cs;
        for (int q = cs + 1; q < ce; ++q) {
          if (count[q] != count[q - 1]) {
            p.starts |= 1u << q;
            active |= 1u << q;
          }
        }
      }
    }
  }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (x < y) parent_[y] = static_cast<std::uint8_t>(x);
    else parent_[x] = static_cast<std::uint8_t>(y);
  }

  void add_generator(const Labels& from, const Labels& to) {
    Labels gamma{};
    for (int q = 0; q < n_; ++q) gamma[from[q]] = to[q];
    generators_.push_back(gamma);
    for (int v = 0; v < n_; ++v) unite(v, gamma[v]);
  }

  static int common_prefix(const Labels& x, const Labels& y, int depth) {
    int k = 0;
    while (k < depth && x[k] == y[k]) ++k;
    return k;
  }

  void leaf(const Partition& p, int depth) {
    const CanonicalForm key = pack(g_, p.lab);
    if (!have_first_) {
      have_first_ = true;
      first_key_ = best_key_ = key;
      first_lab_ = best_lab_ = p.lab;
      first_path_ = best_path_ = path_;
      return;
    }
    if (key == first_key_) {
      add_generator(first_lab_, p.lab);
      backjump_ = common_prefix(path_, first_path_, depth);
      return;
    }
    if (key < best_key_) {
      best_key_ = key;
      best_lab_ = p.lab;
      best_path_ = path_;
    } else if (key == best_key_) {
      add_generator(best_lab_, p.lab);
      backjump_ = common_prefix(path_, best_path_, depth);
    }
  }

  // Orbits of the subgroup generated by the generators fixing path_[0..depth).
  void stabilizer_orbits(int depth, Labels& root) const {
    for (int v = 0; v < n_; ++v) root[v] = static_cast<std::uint8_t>(v);
    auto find_local = [&root](int v) {
      while (root[v] != v) v = root[v];
      return v;
    };
    for (const auto& gamma : generators_) {
      bool fixes = true;
      for (int k = 0; k < depth && fixes; ++k) fixes = gamma[path_[k]] == path_[k];
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int x = find_local(v), y = find_local(gamma[v]);
        if (x != y) root[std::max(x, y)] = static_cast<std::uint8_t>(std::min(x, y));
      }
    }
    for (int v = 0; v < n_; ++v) root[v] = static_cast<std::uint8_t>(find_local(v));
  }

  void visit(const Partition& p, int depth, bool first_path) {
    if (discrete(p)) {
      leaf(p, depth);
      return;
    }
    // Target: first smallest non-singleton cell.
    int s = -1, size = n_ + 1;
    for (std::uint32_t st = p.starts; st;) {
      const int cs = std::countr_zero(st);
      st &= st - 1;
      const int ce = st ? std::countr_zero(st) : n_;
      if (ce - cs > 1 && ce - cs < size) {
        s = cs;
        size = ce - cs;
      }
    }
    Labels cell{};
    for (int i = 0; i < size; ++i) cell[i] = p.lab[s + i];

    std::uint32_t explored = 0;
    Labels local_root{};
    std::size_t local_generators = static_cast<std::size_t>(-1);
    for (int i = 0; i < size; ++i) {
      const int w = cell[i];
      if (explored) {
        bool equivalent = false;
        if (first_path) {
          for (std::uint32_t x = explored; x && !equivalent; x &= x - 1)
            equivalent = find(std::countr_zero(x)) == find(w);
        } else if (!generators_.empty()) {
          if (local_generators != generators_.size()) {
            stabilizer_orbits(depth, local_root);
            local_generators = generators_.size();
          }
          for (std::uint32_t x = explored; x && !equivalent; x &= x - 1)
            equivalent = local_root[std::countr_zero(x)] == local_root[w];
        }
        if (equivalent) continue;
      }
      explored |= 1u << w;

      Partition child = p;
      int q = s;
      while (child.lab[q] != w) ++q;
      std::swap(child.lab[q], child.lab[s]);
      child.starts |= 1u << (s + 1);
      refine(child, 1u << s);
      path_[depth] = static_cast<std::uint8_t>(w);
      visit(child, depth + 1, first_path && i == 0);

      if (backjump_ >= 0) {
        if (backjump_ < depth) return;
        backjump_ = -1;
      }
    }
    if (first_path) {
      const int r = find(cell[0]);
      std::uint64_t orbit = 0;
      for (int i = 0; i < size; ++i) orbit += find(cell[i]) == r;
      aut_ *= orbit;
    }
  }

  const Graph& g_;
  int n_;
  Labels parent_{};
  Labels path_{};
  Labels first_path_{}, best_path_{};
  Labels first_lab_{}, best_lab_{};
  CanonicalForm first_key_, best_key_;
  bool have_first_ = false;
  std::vector<Labels> generators_;
  int backjump_ = -1;
  std::uint64_t aut_ = 1;
};

}  // namespace

Graph CanonicalForm::graph() const {
  Graph g(n);
  int t = 0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q, ++t)
      if ((words[t >> 6] >> (63 - (t & 63))) & 1) g.add_edge(p, q);
  return g;
}

std::string CanonicalForm::bytes() const {
  std::string out(1 + 8 * words.size(), '\0');
  out[0] = static_cast<char>(n);
  for (std::size_t w = 0; w < words.size(); ++w)
    for (int b = 0; b < 8; ++b) out[1 + 8 * w + b] = static_cast<char>((words[w] >> (56 - 8 * b)) & 0xff);
  return out;
}

CanonicalLabeling canonical_labeling(const Graph& g) { return Search(g).run(); }

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

bool is_isomorphic(const Graph& g, const Graph& h) {
  return g.size() == h.size() && g.edge_count() == h.edge_count() && canonical_form(g) == canonical_form(h);
}

std::uint64_t automorphism_count(const Graph& g) { return canonical_labeling(g).automorphisms; }

CanonicalForm pack_labeled(const Graph& g) {
  Labels identity{};
  for (int v = 0; v < g.size(); ++v) identity[v] = static_cast<std::uint8_t>(v);
  return pack(g, identity);
}

}  // namespace gf4lc
