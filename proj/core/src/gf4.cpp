#include "gf4lc/gf4.hpp"

#include <sstream>

namespace gf4lc {

Gf4Element Gf4Element::from_symbol(char c) {
  switch (c) {
    case '0': return zero();
    case '1': return one();
    case 'w': return omega();
    case 'W': return omega2();
    default: throw ParseError(std::string("illegal GF(4) symbol '") + c + "'");
  }
}

bool symplectic(const BitVector& p, const BitVector& q) {
  if (p.length != q.length) throw LengthError("symplectic: length mismatch");
  if (p.length % 2 != 0) throw LengthError("symplectic: odd length");
  const int n = p.length / 2;
  const std::uint64_t low = (n == 64 ? ~0ull : (1ull << n) - 1);
  const std::uint64_t pa = p.bits & low, pb = p.bits >> n;
  const std::uint64_t qa = q.bits & low, qb = q.bits >> n;
  return std::popcount((pa & qb) ^ (pb & qa)) & 1;
}

Gf4Vector::Gf4Vector(int n) : Gf4Vector(n, 0, 0) {}

Gf4Vector::Gf4Vector(int n, std::uint32_t a, std::uint32_t b) {
  if (n < 0 || n > kMaxLength) throw LengthError("vector length " + std::to_string(n) + " outside [0, 20]");
  const std::uint32_t mask = (1u << n) - 1;
  if ((a | b) & ~mask) throw LengthError("vector bits beyond length " + std::to_string(n));
  n_ = static_cast<std::uint8_t>(n);
  a_ = a;
  b_ = b;
}

Gf4Vector::Gf4Vector(std::initializer_list<Gf4Element> elements) : Gf4Vector(static_cast<int>(elements.size())) {
  int i = 0;
  for (auto x : elements) set(i++, x);
}

void Gf4Vector::set(int i, Gf4Element x) {
  if (i < 0 || i >= n_) throw LengthError("coordinate out of range");
  const std::uint32_t bit = 1u << i;
  a_ = x.a() ? (a_ | bit) : (a_ & ~bit);
  b_ = x.b() ? (b_ | bit) : (b_ & ~bit);
}

Gf4Vector& Gf4Vector::operator+=(const Gf4Vector& other) {
  if (other.n_ != n_) throw LengthError("vector addition: length mismatch");
  a_ ^= other.a_;
  b_ ^= other.b_;
  return *this;
}

std::string Gf4Vector::to_string() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    if (i) out += ' ';
    out += (*this)[i].symbol();
  }
  return out;
}

BitVector phi(const Gf4Vector& v) {
  return {2 * v.size(), static_cast<std::uint64_t>(v.a()) | (static_cast<std::uint64_t>(v.b()) << v.size())};
}

Gf4Vector phi_inv(const BitVector& ab) {
  if (ab.length % 2 != 0) throw LengthError("phi_inv: halves of unequal length");
  const int n = ab.length / 2;
  const std::uint64_t low = (1ull << n) - 1;
  return Gf4Vector(n, static_cast<std::uint32_t>(ab.bits & low), static_cast<std::uint32_t>((ab.bits >> n) & low));
}

bool htip(const Gf4Vector& u, const Gf4Vector& v) {
  if (u.size() != v.size()) throw LengthError("htip: length mismatch");
  // Positions where both entries are nonzero and different.
  const std::uint32_t both = u.support() & v.support();
  const std::uint32_t differ = (u.a() ^ v.a()) | (u.b() ^ v.b());
  return std::popcount(both & differ) & 1;
}

std::vector<Gf4Vector> parse_matrix(std::string_view text) {
  std::vector<Gf4Vector> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<Gf4Element> symbols;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i % 2 == 1) {
        if (line[i] != ' ') throw ParseError("line " + std::to_string(line_no) + ": symbols must be separated by single spaces");
        continue;
      }
      try {
        symbols.push_back(Gf4Element::from_symbol(line[i]));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (line.size() % 2 == 0) throw ParseError("line " + std::to_string(line_no) + ": trailing separator");
    if (symbols.size() > static_cast<std::size_t>(kMaxLength))
      throw LengthError("line " + std::to_string(line_no) + ": row longer than 20");
    Gf4Vector row(static_cast<int>(symbols.size()));
    for (std::size_t i = 0; i < symbols.size(); ++i) row.set(static_cast<int>(i), symbols[i]);
    if (!rows.empty() && rows.front().size() != row.size())
      throw LengthError("line " + std::to_string(line_no) + ": row length differs from first row");
    rows.push_back(row);
  }
  return rows;
}

std::string format_matrix(std::span<const Gf4Vector> rows) {
  std::string out;
  for (const auto& r : rows) {
    out += r.to_string();
    out += '\n';
  }
  return out;
}

}  // namespace gf4lc
