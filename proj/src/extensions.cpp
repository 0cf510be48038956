#include "loopcomm/extensions.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "loopcomm/commutator.hpp"
#include "loopcomm/error.hpp"

namespace loopcomm {

AbelianGroupTable::AbelianGroupTable(LoopTable table) : table_(std::move(table)) {
  if (!is_abelian_group(table_))
    throw Error(ErrorKind::NotAbelianGroup, "table is not a commutative group");
  neg_.resize(table_.order());
  for (Elem a = 0; a < table_.order(); ++a) neg_[a] = table_.ldiv(a, table_.neutral());
}

AbelianGroupTable abelian_group(std::initializer_list<std::size_t> cyclic_factors) {
  LoopTable t = trivial_loop();
  for (std::size_t n : cyclic_factors) t = direct_product(t, cyclic_group(n));
  return AbelianGroupTable(std::move(t));
}

bool is_automorphism(const AbelianGroupTable& a, const Permutation& p) {
  if (p.degree() != a.size()) return false;
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y)
      if (p(a.add(x, y)) != a.add(p(x), p(y))) return false;
  return true;
}

namespace {

void automorphism_search(const AbelianGroupTable& a, std::vector<Elem>& img,
                         std::vector<bool>& used, Elem next,
                         std::vector<Permutation>& out) {
  const std::size_t m = a.size();
  constexpr Elem kUnset = ~Elem{0};
  while (next < m && img[next] != kUnset) ++next;
  if (next == m) {
    out.push_back(Permutation::from_images_unchecked(img));
    return;
  }
  for (Elem c = 0; c < m; ++c) {
    if (used[c]) continue;
    img[next] = c;
    used[c] = true;
    bool ok = true;
    for (Elem p = 0; p < m && ok; ++p) {
      if (img[p] == kUnset) continue;
      for (Elem s : {a.add(p, next), a.add(next, p)}) {
        if (img[s] != kUnset && img[s] != a.add(img[p], img[next])) ok = false;
      }
    }
    if (ok) automorphism_search(a, img, used, next + 1, out);
    img[next] = kUnset;
    used[c] = false;
  }
}

}  // namespace

std::vector<Permutation> automorphisms(const AbelianGroupTable& a) {
  if (a.size() > kAutomorphismOrderCap)
    throw Error(ErrorKind::CapExceeded, "automorphism enumeration is limited to |A| <= 10");
  std::vector<Elem> img(a.size(), ~Elem{0});
  std::vector<bool> used(a.size(), false);
  img[a.zero()] = a.zero();
  used[a.zero()] = true;
  std::vector<Permutation> out;
  automorphism_search(a, img, used, 0, out);
  return out;
}

Cocycle trivial_cocycle(const AbelianGroupTable& a, const LoopTable& f) {
  const std::size_t cells = f.order() * f.order();
  return Cocycle{a, f, std::vector<Permutation>(cells, Permutation::identity(a.size())),
                 std::vector<Permutation>(cells, Permutation::identity(a.size())),
                 std::vector<Elem>(cells, a.zero())};
}

std::string Diagnostic::to_string() const {
  return condition + " at (" + std::to_string(x) + ", " + std::to_string(y) + ")";
}

std::vector<Diagnostic> validate_cocycle(const Cocycle& g) {
  std::vector<Diagnostic> out;
  const std::size_t m = g.f.order(), cells = m * m;
  if (g.phi.size() != cells || g.psi.size() != cells || g.theta.size() != cells) {
    out.push_back({"shape", 0, 0});
    return out;
  }
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y) {
      if (!is_automorphism(g.a, g.phi_at(x, y))) out.push_back({"phi automorphism", x, y});
      if (!is_automorphism(g.a, g.psi_at(x, y))) out.push_back({"psi automorphism", x, y});
      if (g.theta_at(x, y) >= g.a.size()) out.push_back({"theta range", x, y});
    }
  const Elem one = g.f.neutral();
  for (Elem y = 0; y < m; ++y) {
    if (!g.phi_at(y, one).is_identity()) out.push_back({"phi border", y, one});
    if (!g.psi_at(one, y).is_identity()) out.push_back({"psi border", one, y});
    if (g.theta_at(one, y) != g.a.zero()) out.push_back({"theta border", one, y});
    if (y != one && g.theta_at(y, one) != g.a.zero()) out.push_back({"theta border", y, one});
  }
  return out;
}

std::vector<Elem> extension_product_table(const Cocycle& g) {
  const std::size_t na = g.a.size(), nf = g.f.order(), n = na * nf;
  std::vector<Elem> t(n * n);
  for (Elem x = 0; x < nf; ++x)
    for (Elem y = 0; y < nf; ++y) {
      const Permutation& phi = g.phi_at(x, y);
      const Permutation& psi = g.psi_at(x, y);
      const Elem th = g.theta_at(x, y), xy = g.f.mul(x, y);
      for (Elem a = 0; a < na; ++a)
        for (Elem b = 0; b < na; ++b)
          t[g.pair_index(a, x) * n + g.pair_index(b, y)] =
              g.pair_index(g.a.add(g.a.add(phi(a), psi(b)), th), xy);
    }
  return t;
}

LoopTable build_extension(const Cocycle& g) {
  auto diags = validate_cocycle(g);
  if (!diags.empty()) {
    std::string msg = "not a loop cocycle:";
    for (const auto& d : diags) msg += " " + d.to_string() + ";";
    throw Error(ErrorKind::CocycleInvalid, msg);
  }
  const std::size_t n = g.a.size() * g.f.order();
  if (n > kMaxLoopOrder) throw Error(ErrorKind::CapExceeded, "extension order exceeds 512");
  return LoopTable::from_table(n, extension_product_table(g));
}

Subloop extension_fiber(const Cocycle& g) {
  std::vector<Elem> fiber;
  for (Elem a = 0; a < g.a.size(); ++a) fiber.push_back(g.pair_index(a, g.f.neutral()));
  return Subloop(g.a.size() * g.f.order(), std::move(fiber));
}

std::optional<std::pair<Elem, Elem>> analyze_neutral(const Cocycle& g) {
  const std::size_t m = g.f.order();
  const Elem one = g.f.neutral();
  std::optional<std::pair<Elem, Elem>> analysis;
  {
    bool ok = true;
    Elem a = g.phi_at(one, one).inverse()(g.a.neg(g.theta_at(one, one)));
    for (Elem y = 0; y < m && ok; ++y) {
      ok = g.phi_at(y, one).is_identity() && g.psi_at(one, y).is_identity() &&
           g.a.add(g.phi_at(one, y)(a), g.theta_at(one, y)) == g.a.zero() &&
           g.a.add(g.psi_at(y, one)(a), g.theta_at(y, one)) == g.a.zero();
    }
    if (ok) analysis = std::pair{a, one};
  }

  // Independent route: look for a two-sided identity in the product table.
  const auto t = extension_product_table(g);
  const std::size_t n = g.a.size() * m;
  std::optional<std::pair<Elem, Elem>> scanned;
  for (Elem e = 0; e < n && !scanned; ++e) {
    bool neutral = true;
    for (Elem u = 0; u < n && neutral; ++u) neutral = t[e * n + u] == u && t[u * n + e] == u;
    if (neutral) scanned = std::pair{g.fiber_part(e), g.base_part(e)};
  }
  if (analysis != scanned)
    throw std::logic_error("neutral-element conditions disagree with the table scan");
  return analysis;
}

Cocycle normalize_cocycle(const Cocycle& g, Elem a) {
  auto neutral = analyze_neutral(g);
  if (!neutral || neutral->first != a || neutral->second != g.f.neutral())
    throw Error(ErrorKind::NotNeutralAt,
                "(" + std::to_string(a) + ", 1) is not the neutral element of the extension");
  Cocycle out = g;
  for (std::size_t c = 0; c < g.theta.size(); ++c) {
    Elem v = g.a.add(g.theta[c], g.a.add(g.phi[c](a), g.psi[c](a)));
    out.theta[c] = g.a.sub(v, a);
  }
  return out;
}

std::optional<Decomposition> extract_extension(const LoopTable& q, const Subloop& a) {
  if (!is_normal(q, a)) return std::nullopt;
  SubloopTable at = as_loop(q, a);
  if (!is_abelian_group(at.table)) return std::nullopt;
  AbelianGroupTable group(at.table);

  Quotient quot = quotient(q, a);
  const std::size_t na = a.size(), nf = quot.table.order();
  std::vector<Elem> transversal = quot.representatives;
  transversal[quot.projection[q.neutral()]] = q.neutral();

  std::vector<Elem> local(q.order(), ~Elem{0});
  for (Elem i = 0; i < na; ++i) local[at.embedding[i]] = i;

  // Restriction of a map to A, as a permutation of local indices, if it is
  // an automorphism of A.
  auto restrict = [&](auto&& map) -> std::optional<Permutation> {
    std::vector<Point> img(na);
    std::vector<bool> hit(na, false);
    for (Elem i = 0; i < na; ++i) {
      Elem v = map(at.embedding[i]);
      if (!a.contains(v) || hit[local[v]]) return std::nullopt;
      hit[local[v]] = true;
      img[i] = local[v];
    }
    Permutation p = Permutation::from_images_unchecked(std::move(img));
    if (!is_automorphism(group, p)) return std::nullopt;
    return p;
  };

  Cocycle g = trivial_cocycle(group, quot.table);
  for (Elem x = 0; x < nf; ++x)
    for (Elem y = 0; y < nf; ++y) {
      const Elem tx = transversal[x], ty = transversal[y];
      const Elem txy = q.mul(tx, ty);
      // R_{y,x}(z) = ((zx)y)/(xy)
      auto phi = restrict([&](Elem z) { return q.rdiv(q.mul(q.mul(z, tx), ty), txy); });
      // (R_{xy}^-1 L_x R_y)(z) = (x(zy))/(xy)
      auto psi = restrict([&](Elem z) { return q.rdiv(q.mul(tx, q.mul(z, ty)), txy); });
      if (!phi || !psi) return std::nullopt;
      Elem th = q.rdiv(txy, transversal[quot.table.mul(x, y)]);
      if (!a.contains(th)) return std::nullopt;
      g.phi[g.cell(x, y)] = std::move(*phi);
      g.psi[g.cell(x, y)] = std::move(*psi);
      g.theta[g.cell(x, y)] = local[th];
    }
  if (!validate_cocycle(g).empty()) return std::nullopt;

  LoopTable rebuilt = build_extension(g);
  std::vector<Elem> pair_map(rebuilt.order());
  std::vector<bool> hit(q.order(), false);
  for (Elem x = 0; x < nf; ++x)
    for (Elem i = 0; i < na; ++i) {
      Elem v = q.mul(at.embedding[i], transversal[x]);
      if (hit[v]) return std::nullopt;
      hit[v] = true;
      pair_map[g.pair_index(i, x)] = v;
    }
  if (!is_homomorphism(rebuilt, q, pair_map)) return std::nullopt;
  return Decomposition{std::move(g), std::move(transversal), std::move(at.embedding),
                       std::move(pair_map)};
}

Decomposition decompose_extension(const LoopTable& q, const Subloop& a) {
  if (!is_normal(q, a)) throw Error(ErrorKind::NotNormal, "fiber is not a normal subloop");
  if (!is_abelian_in_A3(q, a))
    throw Error(ErrorKind::NotAbelianIn, "fiber is not abelian in the loop");
  auto d = extract_extension(q, a);
  if (!d) throw std::logic_error("cocycle extraction failed although the fiber is abelian in Q");
  return std::move(*d);
}

std::optional<MltForm> mlt_element_form(const Cocycle& g, const Permutation& gamma) {
  const std::size_t na = g.a.size(), nf = g.f.order();
  if (gamma.degree() != na * nf) return std::nullopt;
  MltForm form;
  std::vector<Point> base(nf);
  form.gamma_hat_identity = true;
  for (Elem x = 0; x < nf; ++x) {
    Elem origin = gamma(g.pair_index(g.a.zero(), x));
    base[x] = g.base_part(origin);
    Elem cx = g.fiber_part(origin);
    std::vector<Point> img(na);
    std::vector<bool> hit(na, false);
    for (Elem a = 0; a < na; ++a) {
      Elem v = gamma(g.pair_index(a, x));
      if (g.base_part(v) != base[x]) return std::nullopt;
      img[a] = g.a.sub(g.fiber_part(v), cx);
      if (hit[img[a]]) return std::nullopt;
      hit[img[a]] = true;
    }
    Permutation gh = Permutation::from_images_unchecked(std::move(img));
    if (!is_automorphism(g.a, gh)) return std::nullopt;
    if (!gh.is_identity()) form.gamma_hat_identity = false;
    form.c.push_back(cx);
    form.gamma_hat.push_back(std::move(gh));
  }
  form.base_map = Permutation(std::move(base));
  const Elem one = g.f.neutral();
  const Elem neutral = g.pair_index(g.a.zero(), one);
  form.fixes_neutral = gamma(neutral) == neutral;
  form.predicts_inner = form.c[one] == g.a.zero() && form.base_map(one) == one;
  return form;
}

namespace {

void write_grid(std::ostringstream& os, std::size_t m, auto&& value) {
  for (Elem x = 0; x < m; ++x) {
    for (Elem y = 0; y < m; ++y) os << (y ? " " : "") << value(x, y);
    os << '\n';
  }
}

std::vector<Elem> parse_numbers(std::string_view line) {
  std::vector<Elem> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    Elem v = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
    if (ec != std::errc() || ptr == line.data() + i)
      throw Error(ErrorKind::Malformed, "bad number in cocycle file: " + std::string(line));
    out.push_back(v);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

std::string format_cocycle(const Cocycle& g) {
  const auto auts = automorphisms(g.a);
  auto index_of = [&](const Permutation& p) {
    for (std::size_t i = 0; i < auts.size(); ++i)
      if (auts[i] == p) return i;
    throw Error(ErrorKind::CocycleInvalid, "cocycle component is not an automorphism of A");
  };
  const std::size_t m = g.f.order();
  std::ostringstream os;
  os << "A\n" << format_table(g.a.table()) << "F\n" << format_table(g.f) << "PHI\n";
  write_grid(os, m, [&](Elem x, Elem y) { return index_of(g.phi_at(x, y)); });
  os << "PSI\n";
  write_grid(os, m, [&](Elem x, Elem y) { return index_of(g.psi_at(x, y)); });
  os << "THETA\n";
  write_grid(os, m, [&](Elem x, Elem y) { return g.theta_at(x, y); });
  return os.str();
}

Cocycle parse_cocycle(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    lines.push_back(line);
  }
  std::size_t pos = 0;
  auto expect_header = [&](std::string_view name) {
    if (pos >= lines.size() || lines[pos] != name)
      throw Error(ErrorKind::Malformed, "expected section " + std::string(name));
    ++pos;
  };
  auto read_table = [&]() {
    if (pos >= lines.size()) throw Error(ErrorKind::Malformed, "missing table");
    auto head = parse_numbers(lines[pos]);
    if (head.size() != 1) throw Error(ErrorKind::Malformed, "bad table order line");
    if (head[0] > kMaxLoopOrder) throw Error(ErrorKind::CapExceeded, "table order exceeds 512");
    std::string chunk;
    for (std::size_t i = 0; i <= head[0]; ++i) {
      if (pos >= lines.size()) throw Error(ErrorKind::Malformed, "truncated table");
      chunk.append(lines[pos++]).push_back('\n');
    }
    return parse_table(chunk);
  };
  auto read_grid = [&](std::size_t m, std::size_t bound) {
    std::vector<Elem> out;
    for (std::size_t i = 0; i < m; ++i) {
      if (pos >= lines.size()) throw Error(ErrorKind::Malformed, "truncated grid");
      auto row = parse_numbers(lines[pos++]);
      if (row.size() != m) throw Error(ErrorKind::Malformed, "grid row has wrong length");
      for (Elem v : row)
        if (v >= bound) throw Error(ErrorKind::Malformed, "grid entry out of range");
      out.insert(out.end(), row.begin(), row.end());
    }
    return out;
  };

  expect_header("A");
  AbelianGroupTable a(read_table());
  expect_header("F");
  LoopTable f = read_table();
  const auto auts = automorphisms(a);
  const std::size_t m = f.order();
  Cocycle g = trivial_cocycle(a, f);
  expect_header("PHI");
  auto phi = read_grid(m, auts.size());
  expect_header("PSI");
  auto psi = read_grid(m, auts.size());
  expect_header("THETA");
  auto theta = read_grid(m, a.size());
  if (pos != lines.size()) throw Error(ErrorKind::Malformed, "trailing content in cocycle file");
  for (std::size_t c = 0; c < m * m; ++c) {
    g.phi[c] = auts[phi[c]];
    g.psi[c] = auts[psi[c]];
    g.theta[c] = theta[c];
  }
  return g;
}

}  // namespace loopcomm
