#include "loopcomm/loop.hpp"

#include <charconv>
#include <sstream>

#include "loopcomm/error.hpp"

namespace loopcomm {

LoopTable LoopTable::from_table(std::size_t order, std::vector<Elem> table) {
  if (order == 0) throw Error(ErrorKind::Malformed, "order must be positive");
  if (order > kMaxLoopOrder)
    throw Error(ErrorKind::CapExceeded, "order " + std::to_string(order) + " exceeds 512");
  if (table.size() != order * order) throw Error(ErrorKind::Malformed, "table size is not n*n");

  LoopTable q;
  q.n_ = order;
  q.ldiv_.assign(order * order, 0);
  q.rdiv_.assign(order * order, 0);
  std::vector<std::uint32_t> seen_row(order * order, 0), seen_col(order * order, 0);
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      Elem z = table[x * order + y];
      if (z >= order)
        throw Error(ErrorKind::Malformed, "entry " + std::to_string(z) + " out of range");
      if (seen_row[x * order + z]++)
        throw Error(ErrorKind::NotLatin, "row " + std::to_string(x) + " repeats " +
                                             std::to_string(z));
      if (seen_col[y * order + z]++)
        throw Error(ErrorKind::NotLatin, "column " + std::to_string(y) + " repeats " +
                                             std::to_string(z));
      q.ldiv_[x * order + z] = static_cast<Elem>(y);
      q.rdiv_[z * order + y] = static_cast<Elem>(x);
    }
  }
  q.mul_ = std::move(table);

  for (std::size_t e = 0; e < order; ++e) {
    bool neutral = true;
    for (std::size_t x = 0; x < order && neutral; ++x)
      neutral = q.mul_[e * order + x] == x && q.mul_[x * order + e] == x;
    if (neutral) {
      q.neutral_ = static_cast<Elem>(e);
      return q;
    }
  }
  throw Error(ErrorKind::NoNeutral, "no two-sided neutral element");
}

namespace {

std::vector<Elem> parse_row(std::string_view line, std::size_t n, std::size_t lineno) {
  std::vector<Elem> row;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    unsigned long v = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, v);
    if (ec != std::errc() || ptr != line.data() + end)
      throw Error(ErrorKind::Malformed, "bad token on line " + std::to_string(lineno));
    row.push_back(static_cast<Elem>(v));
    if (v >= n) throw Error(ErrorKind::Malformed, "entry out of range on line " + std::to_string(lineno));
    pos = end;
  }
  if (row.size() != n)
    throw Error(ErrorKind::Malformed, "line " + std::to_string(lineno) + " has " +
                                          std::to_string(row.size()) + " entries, expected " +
                                          std::to_string(n));
  return row;
}

}  // namespace

LoopTable parse_table(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t lineno = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') lines.emplace_back(lineno, line);
    if (end == text.size()) break;
    start = end + 1;
  }
  if (lines.empty()) throw Error(ErrorKind::Malformed, "empty table file");

  unsigned long n = 0;
  {
    std::string_view h = lines[0].second;
    std::size_t b = h.find_first_not_of(" \t\r");
    std::size_t e = h.find_last_not_of(" \t\r") + 1;
    auto [ptr, ec] = std::from_chars(h.data() + b, h.data() + e, n);
    if (ec != std::errc() || ptr != h.data() + e || n == 0)
      throw Error(ErrorKind::Malformed, "first line must be the order");
  }
  if (n > kMaxLoopOrder)
    throw Error(ErrorKind::CapExceeded, "order " + std::to_string(n) + " exceeds 512");
  if (lines.size() != n + 1)
    throw Error(ErrorKind::Malformed, "expected " + std::to_string(n) + " table rows, found " +
                                          std::to_string(lines.size() - 1));
  std::vector<Elem> table;
  table.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    auto row = parse_row(lines[r + 1].second, n, lines[r + 1].first);
    table.insert(table.end(), row.begin(), row.end());
  }
  return LoopTable::from_table(n, std::move(table));
}

std::string format_table(const LoopTable& q) {
  std::string out = std::to_string(q.order()) + "\n";
  for (Elem x = 0; x < q.order(); ++x) {
    for (Elem y = 0; y < q.order(); ++y) {
      if (y) out += ' ';
      out += std::to_string(q.mul(x, y));
    }
    out += '\n';
  }
  return out;
}

Elem ops(const LoopTable& q, Op kind, Elem x, Elem y) {
  switch (kind) {
    case Op::Mul: return q.mul(x, y);
    case Op::LDiv: return q.ldiv(x, y);
    case Op::RDiv: return q.rdiv(x, y);
  }
  return 0;
}

Permutation translation(const LoopTable& q, TranslationKind kind, Elem x) {
  std::vector<Point> img(q.order());
  for (Elem y = 0; y < q.order(); ++y) {
    switch (kind) {
      case TranslationKind::L: img[y] = q.mul(x, y); break;
      case TranslationKind::R: img[y] = q.mul(y, x); break;
      case TranslationKind::M: img[y] = q.ldiv(y, x); break;
    }
  }
  return Permutation::from_images_unchecked(std::move(img));
}

Elem commutator_elt(const LoopTable& q, Elem y, Elem x) {
  return q.rdiv(q.rdiv(q.mul(y, x), y), x);
}

Elem associator_elt(const LoopTable& q, Elem x, Elem y, Elem z) {
  return q.rdiv(q.rdiv(q.mul(q.mul(x, y), z), q.mul(y, z)), x);
}

bool is_commutative(const LoopTable& q) {
  for (Elem x = 0; x < q.order(); ++x)
    for (Elem y = x + 1; y < q.order(); ++y)
      if (q.mul(x, y) != q.mul(y, x)) return false;
  return true;
}

bool is_associative(const LoopTable& q) {
  for (Elem x = 0; x < q.order(); ++x)
    for (Elem y = 0; y < q.order(); ++y) {
      Elem xy = q.mul(x, y);
      for (Elem z = 0; z < q.order(); ++z)
        if (q.mul(xy, z) != q.mul(x, q.mul(y, z))) return false;
    }
  return true;
}

bool is_abelian_group(const LoopTable& q) { return is_commutative(q) && is_associative(q); }

LoopTable direct_product(const LoopTable& q1, const LoopTable& q2) {
  const std::size_t n1 = q1.order(), n2 = q2.order(), n = n1 * n2;
  if (n > kMaxLoopOrder) throw Error(ErrorKind::CapExceeded, "product order exceeds 512");
  std::vector<Elem> t(n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      Elem a = q1.mul(u % n1, v % n1);
      Elem b = q2.mul(u / n1, v / n1);
      t[u * n + v] = static_cast<Elem>(a + n1 * b);
    }
  return LoopTable::from_table(n, std::move(t));
}

LoopTable g_oplus(const LoopTable& g, std::span<const Elem> oplus) {
  if (!is_abelian_group(g)) throw Error(ErrorKind::NotAbelianGroup, "G must be an abelian group");
  const std::size_t m = g.order(), n = 2 * m;
  if (oplus.size() != m * m) throw Error(ErrorKind::Malformed, "oplus table has the wrong size");
  {
    // Latin check for the quasigroup; no neutral element is required.
    std::vector<std::uint8_t> r(m * m, 0), c(m * m, 0);
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) {
        Elem z = oplus[x * m + y];
        if (z >= m || r[x * m + z]++ || c[y * m + z]++)
          throw Error(ErrorKind::NotLatin, "oplus is not a Latin square");
      }
  }
  std::vector<Elem> t(n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      Elem x = u % m, a = u / m, y = v % m, b = v / m;
      Elem z, c;
      if (a == 0 || b == 0) {
        z = g.mul(x, y);
        c = a ^ b;
      } else {
        z = oplus[x * m + y];
        c = 0;
      }
      t[u * n + v] = static_cast<Elem>(z + m * c);
    }
  return LoopTable::from_table(n, std::move(t));
}

LoopTable cyclic_group(std::size_t n) {
  std::vector<Elem> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x * n + y] = static_cast<Elem>((x + y) % n);
  return LoopTable::from_table(n, std::move(t));
}

LoopTable trivial_loop() { return cyclic_group(1); }

LoopTable relabel(const LoopTable& q, std::span<const Elem> labels) {
  const std::size_t n = q.order();
  if (labels.size() != n) throw Error(ErrorKind::Malformed, "relabeling has the wrong size");
  std::vector<Elem> t(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) t[labels[x] * n + labels[y]] = labels[q.mul(x, y)];
  return LoopTable::from_table(n, std::move(t));
}

bool is_homomorphism(const LoopTable& from, const LoopTable& to, std::span<const Elem> f) {
  if (f.size() != from.order()) return false;
  for (Elem x = 0; x < from.order(); ++x)
    for (Elem y = 0; y < from.order(); ++y)
      if (f[from.mul(x, y)] != to.mul(f[x], f[y])) return false;
  return true;
}

}  // namespace loopcomm
