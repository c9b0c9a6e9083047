#include "gf4lc/code.hpp"

#include <algorithm>

namespace gf4lc {

namespace {

std::uint32_t reverse_bits(std::uint32_t x, int n) {
  std::uint32_t out = 0;
  for (int i = 0; i < n; ++i)
    if ((x >> i) & 1) out |= 1u << (n - 1 - i);
  return out;
}

// Column c of (a|b) sits at bit 2n-1-c, so pivots scan from the top bit down.
std::uint64_t pack_row(const Gf4Vector& v) {
  const int n = v.size();
  return (static_cast<std::uint64_t>(reverse_bits(v.a(), n)) << n) | reverse_bits(v.b(), n);
}

Gf4Vector unpack_row(std::uint64_t w, int n) {
  const std::uint32_t low = (1u << n) - 1;
  return Gf4Vector(n, reverse_bits(static_cast<std::uint32_t>(w >> n) & low, n), reverse_bits(static_cast<std::uint32_t>(w) & low, n));
}

}  // namespace

std::string to_string(CodeType t) { return t == CodeType::TypeII ? "II" : "I"; }

int WeightEnumerator::min_distance() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i]) return static_cast<int>(i);
  return 0;
}

CodeType WeightEnumerator::type() const {
  for (std::size_t i = 1; i < coeffs_.size(); i += 2)
    if (coeffs_[i]) return CodeType::TypeI;
  return CodeType::TypeII;
}

std::uint64_t WeightEnumerator::total() const {
  std::uint64_t s = 0;
  for (auto c : coeffs_) s += c;
  return s;
}

WeightEnumerator operator*(const WeightEnumerator& x, const WeightEnumerator& y) {
  std::vector<std::uint64_t> out(x.coeffs_.size() + y.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) out[i + j] += x.coeffs_[i] * y.coeffs_[j];
  return WeightEnumerator(std::move(out));
}

std::string WeightEnumerator::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coeffs_[i]);
  }
  return out;
}

std::string WeightEnumerator::polynomial() const {
  const int n = length();
  std::string out;
  auto power = [](char var, int e) -> std::string {
    if (e == 0) return "";
    if (e == 1) return std::string(1, var);
    return std::string(1, var) + "^" + std::to_string(e);
  };
  for (int i = 0; i <= n; ++i) {
    if (!coeffs_[i]) continue;
    if (!out.empty()) out += " + ";
    std::string mono = power('x', n - i) + power('y', i);
    if (coeffs_[i] != 1 || mono.empty()) out += std::to_string(coeffs_[i]);
    out += mono;
  }
  return out;
}

AdditiveCode code_from_generators(std::span<const Gf4Vector> rows) {
  if (rows.empty()) throw RankDeficient("code needs at least one generator");
  const int n = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != n) throw LengthError("generator rows differ in length");

  std::vector<std::uint64_t> w;
  w.reserve(rows.size());
  for (const auto& r : rows) w.push_back(pack_row(r));
  std::size_t rank = 0;
  for (int bit = 2 * n - 1; bit >= 0 && rank < w.size(); --bit) {
    const std::uint64_t m = 1ull << bit;
    std::size_t r = rank;
    while (r < w.size() && !(w[r] & m)) ++r;
    if (r == w.size()) continue;
    std::swap(w[r], w[rank]);
    for (std::size_t i = 0; i < w.size(); ++i)
      if (i != rank && (w[i] & m)) w[i] ^= w[rank];
    ++rank;
  }
  w.resize(rank);

  AdditiveCode code;
  code.n_ = n;
  code.packed_ = w;
  for (auto x : w) code.basis_.push_back(unpack_row(x, n));
  for (std::size_t i = 0; i < code.basis_.size(); ++i)
    for (std::size_t j = i + 1; j < code.basis_.size(); ++j)
      if (htip(code.basis_[i], code.basis_[j]))
        throw NotSelfOrthogonal("generator rows are not orthogonal under the trace inner product");
  if (rank != static_cast<std::size_t>(n))
    throw RankDeficient("generators span dimension " + std::to_string(rank) + ", expected " + std::to_string(n));
  return code;
}

bool AdditiveCode::contains(const Gf4Vector& v) const {
  if (v.size() != n_) return false;
  std::uint64_t x = pack_row(v);
  for (auto row : packed_) {
    const std::uint64_t lead = std::bit_floor(row);
    if (x & lead) x ^= row;
  }
  return x == 0;
}

std::size_t AdditiveCode::hash() const {
  std::uint64_t h = static_cast<std::uint64_t>(n_) * 0x9e3779b97f4a7c15ull;
  for (auto w : packed_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
  }
  return static_cast<std::size_t>(h ^ (h >> 31));
}

WeightEnumerator weight_enumerator(const AdditiveCode& code) {
  std::vector<std::uint64_t> a(code.length() + 1, 0);
  code.for_each_codeword([&a](const Gf4Vector& v) { ++a[v.weight()]; });
  return WeightEnumerator(std::move(a));
}

int min_distance(const AdditiveCode& code) {
  int best = code.length() + 1;
  code.for_each_codeword([&best](const Gf4Vector& v) {
    if (!v.is_zero()) best = std::min(best, v.weight());
  });
  return best;
}

CodeType type_of(const AdditiveCode& code) { return weight_enumerator(code).type(); }

WeightEnumerator graph_weight_enumerator(const Graph& g) {
  const int n = g.size();
  std::vector<std::uint64_t> a(n + 1, 0);
  std::uint32_t x = 0, gx = 0;
  a[0] = 1;
  const std::uint64_t count = 1ull << n;
  for (std::uint64_t k = 1; k < count; ++k) {
    const int i = std::countr_zero(k);
    x ^= 1u << i;
    gx ^= g.row(i);
    ++a[std::popcount(x | gx)];
  }
  return WeightEnumerator(std::move(a));
}

namespace {

void partial_walk(const Graph& g, int j, int start, int depth, std::uint32_t x, std::uint32_t gx, std::vector<std::uint64_t>& a) {
  for (int r = start; r < g.size(); ++r) {
    const std::uint32_t nx = x | (1u << r), ngx = gx ^ g.row(r);
    const int w = std::popcount(nx | ngx);
    if (w <= j) ++a[w];
    if (depth + 1 < j) partial_walk(g, j, r + 1, depth + 1, nx, ngx, a);
  }
}

}  // namespace

std::vector<std::uint64_t> partial_weight_distribution(const Graph& g, int j) {
  if (j < 0 || j > g.size()) throw LengthError("partial weight distribution: j outside [0, n]");
  std::vector<std::uint64_t> a(j + 1, 0);
  a[0] = 1;
  if (j > 0) partial_walk(g, j, 0, 0, 0, 0, a);
  return a;
}

AdditiveCode direct_sum(const AdditiveCode& x, const AdditiveCode& y) {
  const int n = x.length() + y.length();
  if (n > kMaxLength) throw LengthError("direct sum longer than 20");
  std::vector<Gf4Vector> rows;
  for (const auto& r : x.basis()) rows.emplace_back(n, r.a(), r.b());
  for (const auto& r : y.basis()) rows.emplace_back(n, r.a() << x.length(), r.b() << x.length());
  return code_from_generators(rows);
}

int distance_bound(int n, CodeType type) {
  if (n < 1) throw LengthError("distance bound needs n >= 1");
  if (type == CodeType::TypeII) {
    if (n % 2) throw LengthError("Type II codes have even length");
    return 2 * (n / 6) + 2;
  }
  switch (n % 6) {
    case 0: return 2 * (n / 6) + 1;
    case 5: return 2 * (n / 6) + 3;
    default: return 2 * (n / 6) + 2;
  }
}

bool is_extremal(int n, int d, CodeType type) { return d == distance_bound(n, type); }

bool is_extremal(const AdditiveCode& code) {
  const auto w = weight_enumerator(code);
  return is_extremal(code.length(), w.min_distance(), w.type());
}

}  // namespace gf4lc
