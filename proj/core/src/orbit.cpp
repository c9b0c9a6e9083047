#include "gf4lc/orbit.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "gf4lc/analytics.hpp"
#include "gf4lc/standardize.hpp"

namespace gf4lc {

namespace {

std::uint64_t factorial64(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

struct Pending {
  Graph graph;
  std::uint32_t orbit_reps;
};

}  // namespace

Orbit lc_orbit(const Graph& g, std::uint64_t budget) {
  const int n = g.size();
  const std::uint64_t nfact = factorial64(n);
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  std::deque<Pending> queue;
  Orbit orbit;
  orbit.min_degree = n;

  auto discover = [&](const Graph& h) {
    const CanonicalLabeling lab = canonical_labeling(h);
    if (!seen.insert(lab.form).second) return;
    if (seen.size() > budget)
      throw BudgetExceeded("LC orbit exceeds budget of " + std::to_string(budget) + " graphs");
    orbit.labeled_count += nfact / lab.automorphisms;
    orbit.min_degree = std::min(orbit.min_degree, min_degree(h));
    orbit.all_anti_eulerian = orbit.all_anti_eulerian && is_anti_eulerian(h);
    queue.push_back({h, lab.orbit_representatives});
  };

  discover(g);
  while (!queue.empty()) {
    const Pending p = std::move(queue.front());
    queue.pop_front();
    // Isomorphic vertices give isomorphic LC results; LC at degree <= 1 is trivial.
    for (std::uint32_t m = p.orbit_reps; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      if (p.graph.degree(v) > 1) discover(local_complement(p.graph, v));
    }
  }

  orbit.members.assign(seen.begin(), seen.end());
  std::sort(orbit.members.begin(), orbit.members.end());
  orbit.representative = orbit.members.front().graph();
  return orbit;
}

std::uint64_t scaling_count(const Graph& g) {
  const int n = g.size();
  if (n > 14) throw LengthError("scaling_count supports n <= 14");
  std::uint64_t count = 0;
  // basis[b] holds the reduced vector whose highest set bit is b.
  auto dfs = [&](auto&& self, int i, std::array<std::uint32_t, 14> basis) -> void {
    if (i == n) {
      ++count;
      return;
    }
    const std::uint32_t e = 1u << i, col = g.row(i);
    for (std::uint32_t v : {e, col | e, col}) {
      std::uint32_t x = v;
      while (x) {
        const int top = 31 - std::countl_zero(x);
        if (!basis[top]) break;
        x ^= basis[top];
      }
      if (!x) continue;
      auto next = basis;
      next[31 - std::countl_zero(x)] = x;
      self(self, i + 1, next);
    }
  };
  dfs(dfs, 0, {});
  return count;
}

std::uint64_t aut_size(int n, std::uint64_t scalings, std::uint64_t labeled) {
  if (labeled == 0) throw NonIntegerAutSize("aut_size: empty orbit");
  const BigInt num = BigInt(factorial64(n)) * scalings;
  if (num % labeled != 0)
    throw NonIntegerAutSize("n! S / l is not an integer (n = " + std::to_string(n) + ", S = " +
                            std::to_string(scalings) + ", l = " + std::to_string(labeled) + ")");
  const BigInt q = num / labeled;
  if (q > std::numeric_limits<std::uint64_t>::max()) throw NonIntegerAutSize("aut_size overflows 64 bits");
  return static_cast<std::uint64_t>(q);
}

std::uint64_t aut_size(const Orbit& orbit) {
  return aut_size(orbit.representative.size(), scaling_count(orbit.representative), orbit.labeled_count);
}

OrbitRecord make_record(const Orbit& orbit) {
  OrbitRecord r;
  r.representative = orbit.representative;
  r.orbit_size = orbit.members.size();
  r.labeled = orbit.labeled_count;
  r.wd = graph_weight_enumerator(orbit.representative);
  r.d = r.wd.min_distance();
  r.type = r.wd.type();
  // Zero marks an aut size that was not computed (n > 14).
  r.aut = orbit.representative.size() <= 14 ? aut_size(orbit) : 0;
  r.extremal = is_extremal(r.n(), r.d, r.type);
  r.linear = linearity_test(orbit.representative).has_value();
  return r;
}

std::uint64_t brute_force_class_size(const AdditiveCode& code, std::uint64_t budget) {
  const int n = code.length();
  std::unordered_set<AdditiveCode, AdditiveCodeHash> seen{code};
  std::deque<AdditiveCode> queue{code};
  auto visit = [&](std::vector<Gf4Vector> rows) {
    AdditiveCode c = code_from_generators(rows);
    if (seen.insert(c).second) {
      if (seen.size() > budget)
        throw BudgetExceeded("class closure exceeds budget of " + std::to_string(budget) + " codes");
      queue.push_back(std::move(c));
    }
  };
  while (!queue.empty()) {
    const AdditiveCode c = std::move(queue.front());
    queue.pop_front();
    const auto& basis = c.basis();
    for (int i = 0; i < n; ++i) {
      // w-scaling is two w^2-scalings.
      auto scaled = basis;
      apply(scaled, {TranscriptOp::Kind::ScaleOmega2, i});
      apply(scaled, {TranscriptOp::Kind::ScaleOmega2, i});
      visit(std::move(scaled));
      auto conj = basis;
      apply(conj, {TranscriptOp::Kind::Conj, i});
      visit(std::move(conj));
      if (i + 1 < n) {
        std::vector<Gf4Vector> swapped;
        for (const auto& row : basis) {
          Gf4Vector s = row;
          s.set(i, row[i + 1]);
          s.set(i + 1, row[i]);
          swapped.push_back(s);
        }
        visit(std::move(swapped));
      }
    }
  }
  return seen.size();
}

int default_partition_depth(int n) { return std::max(0, std::min(n - 2, 6)); }

namespace {

void report(const ClassifyOptions& options, std::mutex& mu, const std::string& msg) {
  if (!options.progress) return;
  std::lock_guard lock(mu);
  options.progress(msg);
}

std::vector<OrbitRecord> single_vertex() { return {make_record(lc_orbit(Graph(1)))}; }

// Orbit generation over a deduplicated candidate set that meets every class.
std::vector<OrbitRecord> classify_candidates(int n, const std::vector<Graph>& candidates, const ClassifyOptions& options,
                                             bool require_type2) {
  std::mutex mu;
  const int j = options.j < 0 ? default_partition_depth(n) : std::min(options.j, n);

  std::unordered_map<CanonicalForm, std::uint32_t, CanonicalFormHash> index;
  std::vector<Graph> graphs;
  for (const auto& g : candidates) {
    const CanonicalForm f = canonical_form(g);
    if (index.try_emplace(f, static_cast<std::uint32_t>(graphs.size())).second) graphs.push_back(f.graph());
  }

  std::map<std::vector<std::uint64_t>, std::vector<std::uint32_t>> by_prefix;
  for (std::uint32_t i = 0; i < graphs.size(); ++i) by_prefix[partial_weight_distribution(graphs[i], j)].push_back(i);
  std::vector<std::vector<std::uint32_t>> partitions;
  std::vector<std::uint32_t> partition_of(graphs.size());
  for (auto& [key, members] : by_prefix) {
    for (auto i : members) partition_of[i] = static_cast<std::uint32_t>(partitions.size());
    partitions.push_back(std::move(members));
  }
  report(options, mu,
         "n=" + std::to_string(n) + ": " + std::to_string(graphs.size()) + " candidates in " +
             std::to_string(partitions.size()) + " partitions (j=" + std::to_string(j) + ")");

  std::vector<std::vector<OrbitRecord>> results(partitions.size());
  std::atomic<std::size_t> next{0}, done{0};
  std::exception_ptr failure;

  auto worker = [&] {
    while (true) {
      const std::size_t p = next.fetch_add(1);
      if (p >= partitions.size()) return;
      try {
        std::vector<bool> covered(partitions[p].size(), false);
        std::unordered_map<std::uint32_t, std::size_t> slot;
        for (std::size_t k = 0; k < partitions[p].size(); ++k) slot[partitions[p][k]] = k;
        for (std::size_t k = 0; k < partitions[p].size(); ++k) {
          if (covered[k]) continue;
          const Orbit orbit = lc_orbit(graphs[partitions[p][k]], options.budget);
          for (const auto& f : orbit.members) {
            const auto it = index.find(f);
            if (it == index.end()) continue;
            if (partition_of[it->second] != p)
              throw Error("partition soundness violated: an LC orbit spans two partial weight distributions");
            covered[slot.at(it->second)] = true;
          }
          if (require_type2 && !orbit.all_anti_eulerian)
            throw Error("Type II orbit contains a graph that is not anti-Eulerian");
          OrbitRecord rec = make_record(orbit);
          if (require_type2 && rec.type != CodeType::TypeII) throw Error("Type II candidate gave a Type I class");
          results[p].push_back(std::move(rec));
        }
        const std::size_t finished = done.fetch_add(1) + 1;
        if (finished % 64 == 0 || finished == partitions.size())
          report(options, mu,
                 "n=" + std::to_string(n) + ": " + std::to_string(finished) + "/" +
                     std::to_string(partitions.size()) + " partitions");
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        next.store(partitions.size());
        return;
      }
    }
  };

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<OrbitRecord> out;
  for (auto& r : results)
    for (auto& rec : r) out.push_back(std::move(rec));
  std::sort(out.begin(), out.end(), [](const OrbitRecord& x, const OrbitRecord& y) { return x.key() < y.key(); });
  return out;
}

}  // namespace

std::vector<OrbitRecord> classify(int n, const std::vector<Graph>& previous, const ClassifyOptions& options) {
  if (n < 1 || n > kMaxVertices) throw LengthError("classify: n must be in 1.." + std::to_string(kMaxVertices));
  if (n == 1) return single_vertex();
  std::vector<Graph> candidates;
  for (const auto& g : previous) {
    if (g.size() != n - 1) throw LengthError("classify: previous representatives must have n-1 vertices");
    for (std::uint32_t mask = 1; mask < (1u << g.size()); ++mask) candidates.push_back(extend(g, mask));
  }
  return classify_candidates(n, candidates, options, false);
}

std::vector<OrbitRecord> classify_type2(int n, const std::vector<Graph>& previous, const ClassifyOptions& options) {
  if (n < 2 || n > kMaxVertices || n % 2) throw LengthError("classify_type2: n must be even and in 2..20");
  std::vector<Graph> candidates;
  if (n == 2) {
    candidates.push_back(*anti_eulerian_closure(Graph(1)));
  } else {
    for (const auto& g : previous) {
      if (g.size() != n - 2) throw LengthError("classify_type2: previous representatives must have n-2 vertices");
      for (std::uint32_t mask = 1; mask < (1u << g.size()); ++mask)
        if (auto c = anti_eulerian_closure(extend(g, mask))) candidates.push_back(*c);
    }
  }
  return classify_candidates(n, candidates, options, true);
}

std::vector<std::vector<OrbitRecord>> classify_up_to(int max_n, const ClassifyOptions& options) {
  std::vector<std::vector<OrbitRecord>> out;
  std::vector<Graph> reps;
  for (int n = 1; n <= max_n; ++n) {
    out.push_back(classify(n, reps, options));
    reps = representatives(out.back());
  }
  return out;
}

std::vector<Graph> representatives(const std::vector<OrbitRecord>& records) {
  std::vector<Graph> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.representative);
  return out;
}

}  // namespace gf4lc
