#include "gf4lc/analytics.hpp"

namespace gf4lc {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt map_count(int n) {
  BigInt six_n = 1;
  for (int i = 0; i < n; ++i) six_n *= 6;
  return six_n * factorial(n);
}

BigInt total_codes(int n) {
  BigInt t = 1;
  for (int i = 1; i <= n; ++i) t *= (BigInt(1) << i) + 1;
  return t;
}

BigInt total_codes_type2(int n) {
  BigInt t = 1;
  for (int i = 0; i < n; ++i) t *= (BigInt(1) << i) + 1;
  return t;
}

BigInt lower_bound_classes(int n) {
  if (n < 1) throw LengthError("lower bound needs n >= 1");
  const BigInt num = total_codes(n), den = map_count(n);
  BigInt q = num / den;
  if (q * den != num) q += 1;
  return q;
}

std::vector<BigInt> euler_transform(std::span<const BigInt> indecomposable) {
  const int size = static_cast<int>(indecomposable.size());
  std::vector<BigInt> c(size + 1, 0), t(size + 1, 0);
  for (int n = 1; n <= size; ++n)
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) c[n] += d * indecomposable[d - 1];
  for (int n = 1; n <= size; ++n) {
    BigInt sum = c[n];
    for (int k = 1; k < n; ++k) sum += c[k] * t[n - k];
    if (sum % n != 0) throw Error("euler transform: inexact division at n = " + std::to_string(n));
    t[n] = sum / n;
  }
  return {t.begin() + 1, t.end()};
}

std::vector<BigInt> euler_transform(std::span<const std::uint64_t> indecomposable) {
  std::vector<BigInt> big(indecomposable.begin(), indecomposable.end());
  return euler_transform(std::span<const BigInt>(big));
}

std::optional<std::uint32_t> linearity_test(const Graph& g) {
  const int n = g.size();
  // Diagonal entries reduce to deg(i) + 1 = 0.
  for (int i = 0; i < n; ++i)
    if (g.degree(i) % 2 == 0) return std::nullopt;
  auto common_parity = [&g](int i, int j) { return std::popcount(g.row(i) & g.row(j)) & 1; };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j) && common_parity(i, j)) return std::nullopt;

  // On edges a_i + a_j = (Gamma^2)_ij + 1. Fixing the highest vertex of each
  // component to 0 gives the numerically least mask.
  std::uint32_t assigned = 0, value = 0;
  for (int root = n - 1; root >= 0; --root) {
    if ((assigned >> root) & 1) continue;
    assigned |= 1u << root;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (std::uint32_t m = g.row(u); m; m &= m - 1) {
        const int w = std::countr_zero(m);
        const std::uint32_t want = ((value >> u) & 1) ^ (common_parity(u, w) ^ 1);
        if ((assigned >> w) & 1) {
          if (((value >> w) & 1) != want) return std::nullopt;
          continue;
        }
        assigned |= 1u << w;
        value |= want << w;
        stack.push_back(w);
      }
    }
  }
  return value;
}

std::vector<BitVector> beta_image(const AdditiveCode& code) {
  const int n = code.length();
  std::vector<BitVector> out;
  for (const auto& row : code.basis()) {
    BitVector v{3 * n, 0};
    for (int j = 0; j < n; ++j) {
      const std::uint64_t a = (row.a() >> j) & 1, b = (row.b() >> j) & 1;
      v.bits |= (b << (3 * j)) | (a << (3 * j + 1)) | ((a ^ b) << (3 * j + 2));
    }
    out.push_back(v);
  }
  return out;
}

std::vector<BitVector> isodual_image(const AdditiveCode& code) {
  const int n = code.length();
  std::vector<BitVector> out;
  for (const auto& row : code.basis()) {
    BitVector v{2 * n, 0};
    for (int j = 0; j < n; ++j) {
      const std::uint64_t a = (row.a() >> j) & 1, b = (row.b() >> j) & 1;
      v.bits |= (a << (2 * j)) | ((a ^ b) << (2 * j + 1));
    }
    out.push_back(v);
  }
  return out;
}

std::vector<std::vector<int>> z4_image(const Graph& g) {
  const int n = g.size();
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = i == j ? 1 : (g.adjacent(i, j) ? 2 : 0);
  return rows;
}

WeightEnumerator z4_weight_distribution(std::span<const std::vector<int>> rows) {
  const int k = static_cast<int>(rows.size());
  const int n = k ? static_cast<int>(rows.front().size()) : 0;
  if (k > kMaxLength) throw LengthError("z4 weight distribution: too many rows");
  std::vector<std::uint64_t> a(n + 1, 0);
  std::vector<int> word(n, 0);
  ++a[0];
  for (std::uint64_t m = 1; m < (1ull << k); ++m) {
    // Gray code: toggle row r in or out of the sum.
    const int r = std::countr_zero(m);
    const bool in = ((m ^ (m >> 1)) >> r) & 1;
    for (int j = 0; j < n; ++j) word[j] = (word[j] + (in ? rows[r][j] : 4 - rows[r][j])) % 4;
    int w = 0;
    for (int j = 0; j < n; ++j) w += word[j] != 0;
    ++a[w];
  }
  return WeightEnumerator(std::move(a));
}

std::string format_binary_matrix(std::span<const BitVector> rows) {
  std::string out;
  for (const auto& r : rows) {
    for (int j = 0; j < r.length; ++j) {
      if (j) out += ' ';
      out += r[j] ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

std::string format_z4_matrix(std::span<const std::vector<int>> rows) {
  std::string out;
  for (const auto& r : rows) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j) out += ' ';
      out += static_cast<char>('0' + r[j]);
    }
    out += '\n';
  }
  return out;
}

int binary_rank(std::span<const BitVector> rows) {
  std::vector<std::uint64_t> w;
  for (const auto& r : rows) w.push_back(r.bits);
  int rank = 0;
  for (int bit = 63; bit >= 0; --bit) {
    const std::uint64_t m = 1ull << bit;
    std::size_t r = rank;
    while (r < w.size() && !(w[r] & m)) ++r;
    if (r == w.size()) continue;
    std::swap(w[r], w[rank]);
    for (std::size_t i = 0; i < w.size(); ++i)
      if (i != static_cast<std::size_t>(rank) && (w[i] & m)) w[i] ^= w[rank];
    ++rank;
  }
  return rank;
}

}  // namespace gf4lc
