#include "gf4lc/inventory.hpp"

#include <map>
#include <string>

namespace gf4lc {

namespace {

struct Part {
  int length;
  int index;
  const OrbitRecord* record;
};

BigInt rhs_sum(int n, const std::vector<std::pair<BigInt, std::uint64_t>>& list) {
  const BigInt maps = map_count(n);
  BigInt sum = 0;
  for (const auto& [aut, mult] : list) {
    if (aut == 0 || maps % aut != 0) throw NonIntegerAutSize("mass formula: |Aut| does not divide 6^n n!");
    sum += (maps / aut) * mult;
  }
  return sum;
}

}  // namespace

std::vector<ClassSummary> all_classes(int n, const std::vector<std::vector<OrbitRecord>>& by_length) {
  if (n < 1) throw LengthError("all_classes: n must be positive");
  if (static_cast<int>(by_length.size()) < n) throw LengthError("all_classes: missing indecomposable classes");
  std::vector<Part> parts;
  for (int len = 1; len <= n; ++len) {
    const auto& recs = by_length[len - 1];
    for (int i = 0; i < static_cast<int>(recs.size()); ++i) {
      if (recs[i].n() != len) throw LengthError("all_classes: record of length " + std::to_string(recs[i].n()) +
                                                " listed under length " + std::to_string(len));
      parts.push_back({len, i, &recs[i]});
    }
  }

  std::vector<ClassSummary> out;
  std::vector<int> chosen;
  // Multisets as non-increasing sequences of positions in `parts`.
  auto rec = [&](auto&& self, int remaining, int max_pos) -> void {
    if (remaining == 0) {
      ClassSummary s;
      s.n = n;
      s.wd = WeightEnumerator({1});
      s.aut = 1;
      bool type2 = true;
      s.d = n + 1;
      std::map<int, int> multiplicity;
      for (int pos : chosen) {
        const Part& p = parts[pos];
        s.components.emplace_back(p.length, p.index);
        s.wd = s.wd * p.record->wd;
        s.d = std::min(s.d, p.record->d);
        type2 = type2 && p.record->type == CodeType::TypeII;
        if (p.record->aut == 0) throw LengthError("all_classes: component without a computed |Aut|");
        s.aut *= p.record->aut;
        ++multiplicity[pos];
      }
      for (const auto& [pos, m] : multiplicity) s.aut *= factorial(m);
      s.type = type2 ? CodeType::TypeII : CodeType::TypeI;
      out.push_back(std::move(s));
      return;
    }
    for (int pos = max_pos; pos >= 0; --pos) {
      if (parts[pos].length > remaining) continue;
      chosen.push_back(pos);
      self(self, remaining - parts[pos].length, pos);
      chosen.pop_back();
    }
  };
  rec(rec, n, static_cast<int>(parts.size()) - 1);
  return out;
}

std::uint64_t ClassInventory::count() const {
  std::uint64_t c = 0;
  for (const auto& e : all) c += e.second;
  return c;
}

std::uint64_t ClassInventory::count_type2() const {
  std::uint64_t c = 0;
  for (const auto& e : type2) c += e.second;
  return c;
}

ClassInventory make_inventory(int n, const std::vector<ClassSummary>& classes) {
  std::map<BigInt, std::uint64_t> all, type2;
  for (const auto& c : classes) {
    if (c.n != n) throw LengthError("make_inventory: class length differs from n");
    ++all[c.aut];
    if (c.type == CodeType::TypeII) ++type2[c.aut];
  }
  ClassInventory inv;
  inv.n = n;
  inv.all.assign(all.begin(), all.end());
  inv.type2.assign(type2.begin(), type2.end());
  return inv;
}

MassCheck mass_check(const ClassInventory& inv) {
  MassCheck m{total_codes(inv.n), rhs_sum(inv.n, inv.all), false};
  m.ok = m.lhs == m.rhs;
  return m;
}

MassCheck mass_check_type2(const ClassInventory& inv) {
  if (inv.n % 2) throw LengthError("Type II mass formula needs even n");
  MassCheck m{total_codes_type2(inv.n), rhs_sum(inv.n, inv.type2), false};
  m.ok = m.lhs == m.rhs;
  return m;
}

}  // namespace gf4lc
