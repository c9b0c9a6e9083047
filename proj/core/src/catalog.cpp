#include "gf4lc/catalog.hpp"

#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "gf4lc/analytics.hpp"
#include "gf4lc/inventory.hpp"

namespace gf4lc {

namespace {

constexpr std::string_view kMagic = "#gf4lc-catalog";

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::string_view field(std::string_view token, std::string_view key) {
  if (token.size() <= key.size() || token.substr(0, key.size()) != key || token[key.size()] != '=')
    throw ParseError("expected field '" + std::string(key) + "=', got '" + std::string(token) + "'");
  return token.substr(key.size() + 1);
}

std::uint64_t number(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

bool flag(std::string_view s, std::string_view what) {
  if (s == "0") return false;
  if (s == "1") return true;
  throw ParseError("bad " + std::string(what) + " '" + std::string(s) + "', expected 0 or 1");
}

std::string scope_name(CatalogScope s) { return s == CatalogScope::TypeII ? "type2" : "all"; }

// A grid of cells rendered with tabs.
class Table {
 public:
  explicit Table(std::string title) : title_(std::move(title)) {}
  void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }
  std::string render() const {
    std::string out = title_ + '\n';
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) out += '\t';
        out += r[i];
      }
      out += '\n';
    }
    return out;
  }

 private:
  std::string title_;
  std::vector<std::vector<std::string>> rows_;
};

template <class T>
std::string cell(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string blank_if_zero(std::uint64_t v) { return v ? std::to_string(v) : std::string(); }

// counts[n][d] for n in columns.
Table by_distance(std::string title, const std::vector<int>& columns,
                  const std::map<int, std::map<int, std::uint64_t>>& counts, std::string total_label) {
  Table t(std::move(title));
  std::set<int> distances;
  for (int n : columns)
    if (auto it = counts.find(n); it != counts.end())
      for (const auto& [d, c] : it->second)
        if (c) distances.insert(d);
  std::vector<std::string> head{"d\\n"};
  for (int n : columns) head.push_back(std::to_string(n));
  t.row(head);
  auto at = [&counts](int n, int d) -> std::uint64_t {
    auto it = counts.find(n);
    if (it == counts.end()) return 0;
    auto jt = it->second.find(d);
    return jt == it->second.end() ? 0 : jt->second;
  };
  for (int d : distances) {
    std::vector<std::string> r{std::to_string(d)};
    for (int n : columns) r.push_back(blank_if_zero(at(n, d)));
    t.row(r);
  }
  std::vector<std::string> all{std::move(total_label)};
  for (int n : columns) {
    std::uint64_t s = 0;
    for (int d : distances) s += at(n, d);
    all.push_back(std::to_string(s));
  }
  t.row(all);
  return t;
}

}  // namespace

std::string format_record(const OrbitRecord& r) {
  std::string s;
  s += "graph=" + graph_format(r.representative);
  s += "\td=" + std::to_string(r.d);
  s += "\ttype=" + to_string(r.type);
  s += "\torbit=" + std::to_string(r.orbit_size);
  s += "\tl=" + std::to_string(r.labeled);
  s += "\taut=" + std::to_string(r.aut);
  s += "\twd=" + r.wd.to_string();
  s += std::string("\textremal=") + (r.extremal ? "1" : "0");
  s += std::string("\tlinear=") + (r.linear ? "1" : "0");
  return s;
}

std::string catalog_write(const Catalog& catalog) {
  std::string out = std::string(kMagic) + "\tversion=" + std::to_string(kCatalogVersion) +
                    "\tn=" + std::to_string(catalog.n) + "\tscope=" + scope_name(catalog.scope) + '\n';
  for (const auto& r : catalog.records) {
    if (r.n() != catalog.n) throw LengthError("catalog_write: record length differs from catalog length");
    out += format_record(r) + '\n';
  }
  return out;
}

OrbitRecord parse_record(std::string_view line) {
  const auto tok = split(line, '\t');
  if (tok.size() != 9) throw ParseError("expected 9 tab-separated fields, got " + std::to_string(tok.size()));
  OrbitRecord r;
  r.representative = graph_parse(field(tok[0], "graph"));
  const int n = r.representative.size();
  r.d = static_cast<int>(number(field(tok[1], "d"), "d"));
  const auto type = field(tok[2], "type");
  if (type == "I")
    r.type = CodeType::TypeI;
  else if (type == "II")
    r.type = CodeType::TypeII;
  else
    throw ParseError("bad type '" + std::string(type) + "'");
  r.orbit_size = number(field(tok[3], "orbit"), "orbit size");
  r.labeled = number(field(tok[4], "l"), "labeled count");
  r.aut = number(field(tok[5], "aut"), "aut size");
  std::vector<std::uint64_t> coeffs;
  for (auto c : split(field(tok[6], "wd"), ',')) coeffs.push_back(number(c, "weight coefficient"));
  if (static_cast<int>(coeffs.size()) != n + 1)
    throw ParseError("weight distribution needs " + std::to_string(n + 1) + " coefficients");
  r.wd = WeightEnumerator(std::move(coeffs));
  r.extremal = flag(field(tok[7], "extremal"), "extremal flag");
  r.linear = flag(field(tok[8], "linear"), "linear flag");
  return r;
}

Catalog catalog_read(std::string_view text) {
  auto lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("line 1: missing catalog header");

  Catalog c;
  const auto head = split(lines[0], '\t');
  if (head.size() != 4 || head[0] != kMagic) throw ParseError("line 1: not a catalog header");
  try {
    const auto version = number(field(head[1], "version"), "version");
    if (version != static_cast<std::uint64_t>(kCatalogVersion))
      throw VersionMismatch("catalog version " + std::to_string(version) + " is not supported (expected " +
                            std::to_string(kCatalogVersion) + ")");
    c.n = static_cast<int>(number(field(head[2], "n"), "length"));
    const auto scope = field(head[3], "scope");
    if (scope == "all")
      c.scope = CatalogScope::All;
    else if (scope == "type2")
      c.scope = CatalogScope::TypeII;
    else
      throw ParseError("bad scope '" + std::string(scope) + "'");
  } catch (const ParseError& e) {
    throw ParseError(std::string("line 1: ") + e.what());
  }

  for (std::size_t i = 1; i < lines.size(); ++i) {
    try {
      OrbitRecord r = parse_record(lines[i]);
      if (r.n() != c.n) throw ParseError("record has length " + std::to_string(r.n()) + ", header says " +
                                         std::to_string(c.n));
      if (!c.records.empty() && !(c.records.back().key() < r.key())) throw ParseError("records out of order");
      c.records.push_back(std::move(r));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(i + 1) + ": " + e.what());
    } catch (const LengthError& e) {
      throw ParseError("line " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return c;
}

std::string emit_tables(const std::vector<std::vector<OrbitRecord>>& by_length) {
  const int max_n = static_cast<int>(by_length.size());
  if (max_n == 0) throw Error("emit_tables: no catalogs");
  for (int n = 1; n <= max_n; ++n) {
    if (by_length[n - 1].empty()) throw Error("emit_tables: missing catalog for n = " + std::to_string(n));
    for (const auto& r : by_length[n - 1])
      if (r.n() != n) throw LengthError("emit_tables: catalog for n = " + std::to_string(n) + " has other lengths");
  }

  std::vector<std::vector<ClassSummary>> every(max_n);
  for (int n = 1; n <= max_n; ++n) every[n - 1] = all_classes(n, by_length);

  std::vector<int> lengths, even_lengths;
  for (int n = 1; n <= max_n; ++n) {
    lengths.push_back(n);
    if (n % 2 == 0) even_lengths.push_back(n);
  }

  std::string out;
  auto section = [&out](const Table& t) {
    if (!out.empty()) out += '\n';
    out += t.render();
  };

  // Counts by length.
  std::vector<std::uint64_t> i_n, i2;
  for (int n = 1; n <= max_n; ++n) {
    i_n.push_back(by_length[n - 1].size());
    if (n % 2 == 0) {
      std::uint64_t c = 0;
      for (const auto& r : by_length[n - 1]) c += r.type == CodeType::TypeII;
      i2.push_back(c);
    }
  }
  const auto t_n = euler_transform(std::span<const std::uint64_t>(i_n));
  const auto t2 = euler_transform(std::span<const std::uint64_t>(i2));
  {
    std::vector<std::string> head{"n"}, ri{"i_n"}, ri2{"i_n^II"}, rt{"t_n"}, rt2{"t_n^II"};
    for (int n = 1; n <= max_n; ++n) {
      head.push_back(std::to_string(n));
      ri.push_back(std::to_string(i_n[n - 1]));
      rt.push_back(cell(t_n[n - 1]));
      ri2.push_back(n % 2 ? "" : std::to_string(i2[n / 2 - 1]));
      rt2.push_back(n % 2 ? "" : cell(t2[n / 2 - 1]));
    }
    Table a("indecomposable classes by length");
    a.row(head);
    a.row(ri);
    a.row(ri2);
    section(a);
    Table b("all classes by length");
    b.row(head);
    b.row(rt);
    b.row(rt2);
    section(b);
  }

  std::map<int, std::map<int, std::uint64_t>> ind, all, ind2, all2, enumerators;
  std::vector<std::map<int, std::set<WeightEnumerator>>> distinct(max_n + 1);
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& r : by_length[n - 1]) {
      ++ind[n][r.d];
      if (r.type == CodeType::TypeII) ++ind2[n][r.d];
    }
    for (const auto& c : every[n - 1]) {
      ++all[n][c.d];
      if (c.type == CodeType::TypeII) ++all2[n][c.d];
      distinct[n][c.d].insert(c.wd);
    }
    for (const auto& [d, set] : distinct[n]) enumerators[n][d] = set.size();
  }
  std::vector<int> from_two(lengths.begin() + (max_n > 1 ? 1 : 0), lengths.end());
  section(by_distance("indecomposable classes by minimum distance", from_two, ind, "All"));
  section(by_distance("all classes by minimum distance", lengths, all, "All"));
  if (!even_lengths.empty()) {
    section(by_distance("indecomposable Type II classes by minimum distance", even_lengths, ind2, "Total"));
    section(by_distance("all Type II classes by minimum distance", even_lengths, all2, "Total"));
  }
  {
    // The All row counts distinct enumerators, not the sum over distances.
    Table fixed("distinct weight enumerators by minimum distance");
    std::set<int> ds;
    for (const auto& [n, m] : enumerators)
      for (const auto& [d, c] : m) ds.insert(d);
    std::vector<std::string> head{"d\\n"};
    for (int n : lengths) head.push_back(std::to_string(n));
    fixed.row(head);
    for (int d : ds) {
      std::vector<std::string> r{std::to_string(d)};
      for (int n : lengths) r.push_back(blank_if_zero(enumerators[n][d]));
      fixed.row(r);
    }
    std::vector<std::string> total{"All"};
    for (int n : lengths) {
      std::set<WeightEnumerator> u;
      for (const auto& [d, set] : distinct[n]) u.insert(set.begin(), set.end());
      total.push_back(std::to_string(u.size()));
    }
    fixed.row(total);
    section(fixed);
  }

  {
    // Classes with trivial automorphism group, Type I (Type II); lengths up
    // to 8 share one column.
    std::vector<std::pair<std::string, std::vector<int>>> columns;
    std::vector<int> low;
    for (int n = 1; n <= std::min(max_n, 8); ++n) low.push_back(n);
    columns.emplace_back("<=" + std::to_string(std::min(max_n, 8)), low);
    for (int n = 9; n <= max_n; ++n) columns.emplace_back(std::to_string(n), std::vector<int>{n});
    std::map<int, std::vector<std::pair<std::uint64_t, std::uint64_t>>> rows;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> totals(columns.size());
    for (std::size_t k = 0; k < columns.size(); ++k)
      for (int n : columns[k].second)
        for (const auto& c : every[n - 1]) {
          if (c.aut != 1) continue;
          auto& row = rows[c.d];
          row.resize(columns.size());
          auto& slot = c.type == CodeType::TypeII ? row[k].second : row[k].first;
          auto& tot = c.type == CodeType::TypeII ? totals[k].second : totals[k].first;
          ++slot;
          ++tot;
        }
    auto pair_cell = [](std::pair<std::uint64_t, std::uint64_t> p) {
      return std::to_string(p.first) + " (" + std::to_string(p.second) + ")";
    };
    Table t("classes with trivial automorphism group by minimum distance, Type I (Type II)");
    std::vector<std::string> head{"d\\n"};
    for (const auto& c : columns) head.push_back(c.first);
    t.row(head);
    for (auto& [d, row] : rows) {
      std::vector<std::string> r{std::to_string(d)};
      for (const auto& p : row) r.push_back(p.first || p.second ? pair_cell(p) : "");
      t.row(r);
    }
    std::vector<std::string> all_row{"All"};
    for (const auto& p : totals) all_row.push_back(pair_cell(p));
    t.row(all_row);
    section(t);
  }

  for (int n = 10; n <= max_n; ++n) {
    // Extremal Type I classes by weight enumerator and automorphism group size.
    std::map<WeightEnumerator, int> column;
    std::map<BigInt, std::map<int, std::uint64_t>> grid;
    for (const auto& c : every[n - 1])
      if (c.type == CodeType::TypeI && is_extremal(n, c.d, c.type)) column.emplace(c.wd, 0);
    if (column.empty()) continue;
    int k = 0;
    for (auto& [wd, idx] : column) idx = k++;
    std::vector<std::uint64_t> col_total(column.size());
    for (const auto& c : every[n - 1])
      if (c.type == CodeType::TypeI && is_extremal(n, c.d, c.type)) {
        const int idx = column.at(c.wd);
        ++grid[c.aut][idx];
        ++col_total[idx];
      }
    const std::string name = "W" + std::to_string(n) + ",";
    Table t("extremal Type I classes of length " + std::to_string(n) +
            " by weight enumerator w and automorphism group size a");
    std::vector<std::string> head{"a\\w"};
    for (int i = 1; i <= k; ++i) head.push_back(name + std::to_string(i));
    head.push_back("All");
    t.row(head);
    for (const auto& [aut, counts] : grid) {
      std::vector<std::string> r{cell(aut)};
      std::uint64_t s = 0;
      for (int i = 0; i < k; ++i) {
        const auto it = counts.find(i);
        const std::uint64_t v = it == counts.end() ? 0 : it->second;
        s += v;
        r.push_back(blank_if_zero(v));
      }
      r.push_back(std::to_string(s));
      t.row(r);
    }
    std::vector<std::string> tot{"All"};
    std::uint64_t s = 0;
    for (auto v : col_total) {
      tot.push_back(std::to_string(v));
      s += v;
    }
    tot.push_back(std::to_string(s));
    t.row(tot);
    for (const auto& [wd, idx] : column) t.row({name + std::to_string(idx + 1), wd.polynomial()});
    section(t);
  }
  return out;
}

}  // namespace gf4lc
