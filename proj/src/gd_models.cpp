#include "opgb/gd_models.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "opgb/errors.hpp"
#include "opgb/linear_algebra.hpp"

namespace opgb {

namespace {

Vec zero_vec(int n) { return Vec(n, Rational(0)); }

Vec add(const Vec& a, const Vec& b, const Rational& c = 1) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += c * b[i];
  return r;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Vec bilinear(const std::vector<std::vector<Vec>>& table, const Vec& a, const Vec& b) {
  const int n = static_cast<int>(a.size());
  Vec r = zero_vec(n);
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      if (b[j] != 0) r = add(r, table[i][j], a[i] * b[j]);
  }
  return r;
}

// Solves sum_k x_k cols[k] = target; nullopt when inconsistent or singular.
std::optional<Vec> solve(const std::vector<Vec>& cols, const Vec& target) {
  const int rows = static_cast<int>(target.size());
  const int n = static_cast<int>(cols.size());
  std::vector<Vec> m(rows, zero_vec(n + 1));
  for (int r = 0; r < rows; ++r) {
    for (int k = 0; k < n; ++k) m[r][k] = cols[k][r];
    m[r][n] = target[r];
  }
  int row = 0;
  std::vector<int> pivots;
  for (int c = 0; c < n && row < rows; ++c) {
    int p = row;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) return std::nullopt;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (int r = 0; r < rows; ++r)
      if (r != row && m[r][c] != 0) m[r] = add(m[r], m[row], -m[r][c]);
    pivots.push_back(c);
    ++row;
  }
  if (row < n) return std::nullopt;
  for (int r = row; r < rows; ++r)
    if (m[r][n] != 0) return std::nullopt;
  Vec x = zero_vec(n);
  for (int r = 0; r < n; ++r) x[pivots[r]] = m[r][n];
  return x;
}

GDTable change_basis(const GDTable& t, const std::vector<Vec>& basis, std::vector<std::string> names) {
  GDTable out(t.dim);
  out.names = std::move(names);
  for (int i = 0; i < t.dim; ++i)
    for (int j = 0; j < t.dim; ++j) {
      auto c = solve(basis, t.circ_of(basis[i], basis[j]));
      auto b = solve(basis, t.bracket_of(basis[i], basis[j]));
      if (!c || !b) throw std::invalid_argument("not a basis");
      out.circ[i][j] = *c;
      out.bracket[i][j] = *b;
    }
  return out;
}

std::string vec_text(const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + opgb::to_string(v[i]);
  return s;
}

}  // namespace

// ------------------------------------------------------------------ tables

GDTable::GDTable(int d) : dim(d), circ(d, std::vector<Vec>(d, zero_vec(d))), bracket(circ) {
  for (int i = 1; i <= d; ++i) names.push_back("e" + std::to_string(i));
}

Vec GDTable::circ_of(const Vec& a, const Vec& b) const { return bilinear(circ, a, b); }
Vec GDTable::bracket_of(const Vec& a, const Vec& b) const { return bilinear(bracket, a, b); }

Vec GDTable::basis(int i) const {
  Vec v = zero_vec(dim);
  v.at(i) = 1;
  return v;
}

GDTable GDTable::parse(std::string_view text) {
  GDTable t;
  bool have_dim = false;
  std::set<std::pair<int, int>> explicit_bracket;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::vector<std::pair<std::string, int>> tok;
    for (std::size_t i = 0; i < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      tok.emplace_back(line.substr(i, j - i), static_cast<int>(i) + 1);
      i = j;
    }
    if (tok.empty()) continue;
    auto fail = [&](const std::string& msg, int col) { throw ParseError(msg, lineno, col); };
    const auto& kw = tok[0].first;
    if (kw == "dim") {
      if (have_dim) fail("dim given twice", tok[0].second);
      if (tok.size() != 2) fail("expected 'dim N'", tok[0].second);
      int d = 0;
      try {
        d = std::stoi(tok[1].first);
      } catch (const std::exception&) {
        fail("bad dimension", tok[1].second);
      }
      if (d < 1 || d > 16) fail("dimension out of range", tok[1].second);
      t = GDTable(d);
      have_dim = true;
      continue;
    }
    if (!have_dim) fail("expected 'dim N' first", tok[0].second);
    if (kw == "basis") {
      if (static_cast<int>(tok.size()) != t.dim + 1) fail("basis needs one name per dimension", tok[0].second);
      for (int i = 0; i < t.dim; ++i) t.names[i] = tok[i + 1].first;
      continue;
    }
    if (kw != "circ" && kw != "bracket") fail("unknown keyword '" + kw + "'", tok[0].second);
    if (static_cast<int>(tok.size()) != 4 + t.dim || tok[3].first != "=")
      fail("expected '" + kw + " i j = c1 .. c" + std::to_string(t.dim) + "'", tok[0].second);
    auto index = [&](const std::pair<std::string, int>& tk) {
      for (int i = 0; i < t.dim; ++i)
        if (t.names[i] == tk.first) return i;
      try {
        std::size_t used = 0;
        int i = std::stoi(tk.first, &used);
        if (used == tk.first.size() && i >= 1 && i <= t.dim) return i - 1;
      } catch (const std::exception&) {
      }
      fail("unknown basis element '" + tk.first + "'", tk.second);
      return 0;
    };
    int i = index(tok[1]), j = index(tok[2]);
    Vec v = zero_vec(t.dim);
    for (int k = 0; k < t.dim; ++k) {
      try {
        v[k] = parse_rational(tok[4 + k].first);
      } catch (const std::invalid_argument&) {
        fail("bad coefficient", tok[4 + k].second);
      }
    }
    if (kw == "circ") {
      t.circ[i][j] = v;
      continue;
    }
    if (i == j && !is_zero(v)) fail("bracket of an element with itself must vanish", tok[0].second);
    t.bracket[i][j] = v;
    explicit_bracket.insert({i, j});
  }
  if (!have_dim) throw ParseError("missing 'dim N'", lineno, 1);
  for (const auto& [i, j] : explicit_bracket) {
    if (explicit_bracket.count({j, i})) {
      if (!is_zero(add(t.bracket[i][j], t.bracket[j][i])))
        throw ParseError("bracket is not antisymmetric at " + t.names[i] + " " + t.names[j], 0, 0);
      continue;
    }
    Vec neg = t.bracket[i][j];
    for (auto& x : neg) x = -x;
    t.bracket[j][i] = neg;
  }
  return t;
}

std::string GDTable::to_string() const {
  std::string s = "dim " + std::to_string(dim) + "\nbasis";
  for (const auto& n : names) s += " " + n;
  s += "\n";
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if (!is_zero(bracket[i][j])) s += "bracket " + names[i] + " " + names[j] + " = " + vec_text(bracket[i][j]) + "\n";
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (!is_zero(circ[i][j])) s += "circ " + names[i] + " " + names[j] + " = " + vec_text(circ[i][j]) + "\n";
  return s;
}

// ------------------------------------------------------------------ axioms

bool AxiomReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

std::string AxiomReport::to_string(const GDTable& t) const {
  std::string s;
  for (const auto& c : checks) {
    s += c.axiom + ": " + (c.pass ? "pass" : "FAIL");
    if (!c.pass) {
      s += " at (";
      for (int k = 0; k < 3; ++k) s += (k ? ", " : "") + t.names[c.witness[k] - 1];
      s += ")";
    }
    s += "\n";
  }
  return s;
}

AxiomReport check_gd_axioms(const GDTable& t) {
  AxiomReport r;
  const int n = t.dim;
  using Law = std::function<Vec(const Vec&, const Vec&, const Vec&)>;
  auto o = [&](const Vec& a, const Vec& b) { return t.circ_of(a, b); };
  auto br = [&](const Vec& a, const Vec& b) { return t.bracket_of(a, b); };
  std::vector<std::pair<std::string, Law>> laws{
      {"left-symmetry",
       [&](const Vec& a, const Vec& b, const Vec& c) {
         Vec v = add(o(o(a, b), c), o(a, o(b, c)), -1);
         return add(add(v, o(o(b, a), c), -1), o(b, o(a, c)));
       }},
      {"right-commutativity", [&](const Vec& a, const Vec& b, const Vec& c) { return add(o(o(a, b), c), o(o(a, c), b), -1); }},
      {"antisymmetry", [&](const Vec& a, const Vec& b, const Vec&) { return add(br(a, b), br(b, a)); }},
      {"jacobi",
       [&](const Vec& a, const Vec& b, const Vec& c) { return add(add(br(br(a, b), c), br(br(b, c), a)), br(br(c, a), b)); }},
      {"gd1",
       [&](const Vec& a, const Vec& b, const Vec& c) {
         // b∘[a,c] - [a,b∘c] + [c,b∘a] - [b,a]∘c + [b,c]∘a
         Vec v = add(o(b, br(a, c)), br(a, o(b, c)), -1);
         v = add(v, br(c, o(b, a)));
         v = add(v, o(br(b, a), c), -1);
         return add(v, o(br(b, c), a));
       }},
  };
  for (const auto& [name, law] : laws) {
    AxiomCheck c{name, true, {}};
    for (int i = 0; i < n && c.pass; ++i)
      for (int j = 0; j < n && c.pass; ++j)
        for (int k = 0; k < n && c.pass; ++k)
          if (!is_zero(law(t.basis(i), t.basis(j), t.basis(k)))) c = {name, false, {i + 1, j + 1, k + 1}};
    r.checks.push_back(c);
  }
  return r;
}

// ---------------------------------------------------------- classification

std::string Classification::label() const {
  auto s = [](const Rational& q) { return opgb::to_string(q); };
  switch (kind) {
    case GDCase::Novikov:
      return "novikov";
    case GDCase::Case1:
      return "case1 alpha=" + s(alpha) + " gamma=" + s(gamma) + " delta=" + s(delta);
    case GDCase::Case2:
      return "case2 alpha=" + s(alpha);
    case GDCase::Case3:
      return "case3 delta=1";
    case GDCase::LieOnly:
      return "lie-only";
  }
  return {};
}

Classification classify_2dim(const GDTable& t) {
  if (t.dim != 2) throw std::invalid_argument("classification needs a 2-dimensional table");
  auto report = check_gd_axioms(t);
  if (!report.all_pass()) throw std::invalid_argument("not a GD table:\n" + report.to_string(t));
  Classification c;
  Vec w = t.bracket_of(t.basis(0), t.basis(1));
  if (is_zero(w)) {
    c.normalized = t;
    return c;
  }
  // [x,w] = f(x) w on the derived algebra span(w)
  Vec u;
  for (int k = 0; k < 2 && u.empty(); ++k) {
    Vec xw = t.bracket_of(t.basis(k), w);
    if (is_zero(xw)) continue;
    auto f = solve({w}, xw);
    if (!f) throw std::logic_error("derived algebra is not one-dimensional");
    u = t.basis(k);
    for (auto& x : u) x /= (*f)[0];
  }
  if (u.empty()) throw std::logic_error("nilpotent 2-dimensional bracket");
  const Vec& v = w;
  auto table = change_basis(t, {u, v}, {"u", "v"});
  const Vec& uu = table.circ[0][0];
  const Vec& uv = table.circ[0][1];
  const Vec& vu = table.circ[1][0];
  const Vec& vv = table.circ[1][1];
  c.alpha = uu[0];
  c.delta = uu[1];
  c.gamma = uv[1];
  if (uv[0] != 0 || vu[0] != 0 || vu[1] != c.alpha || !is_zero(vv))
    throw std::logic_error("unexpected multiplication table shape");
  if (c.alpha != c.gamma) {
    c.kind = GDCase::Case1;
    c.basis = {u, v};
    c.normalized = table;
  } else if (c.alpha != 0) {
    c.kind = GDCase::Case2;
    Vec u2 = add(u, v, -c.delta / c.alpha);
    for (auto& x : u2) x /= c.alpha;
    c.basis = {u2, v};
    c.normalized = change_basis(t, c.basis, {"u", "v"});
  } else if (c.delta != 0) {
    c.kind = GDCase::Case3;
    Vec v2 = v;
    for (auto& x : v2) x *= c.delta;
    c.basis = {u, v2};
    c.normalized = change_basis(t, c.basis, {"u", "v"});
  } else {
    c.kind = GDCase::LieOnly;
    c.basis = {u, v};
    c.normalized = table;
  }
  return c;
}

// --------------------------------------------------------------- envelopes

CPoly EnvelopeSpec::generator_bracket(int i, int j) const {
  if (i == j) return CPoly(nvars());
  auto it = bracket.find({std::min(i, j), std::max(i, j)});
  if (it == bracket.end()) return CPoly(nvars());
  return i < j ? it->second : -it->second;
}

CPoly EnvelopeSpec::bracket_of(const CPoly& f, const CPoly& g) const {
  CPoly out(nvars());
  for (int a = 0; a < nvars(); ++a) {
    CPoly fa = f.partial(a);
    if (fa.is_zero()) continue;
    for (int b = 0; b < nvars(); ++b) {
      if (a == b) continue;
      CPoly gb = g.partial(b);
      if (gb.is_zero()) continue;
      CPoly ab = generator_bracket(a, b);
      if (!ab.is_zero()) out = out + fa * gb * ab;
    }
  }
  return out;
}

CPoly EnvelopeSpec::d(const CPoly& f) const {
  CPoly out(nvars());
  for (int a = 0; a < nvars(); ++a) {
    CPoly fa = f.partial(a);
    if (!fa.is_zero()) out = out + fa * derivation[a];
  }
  return out;
}

std::string EmbeddingReport::to_string() const {
  if (ok) return "embedding: verified (" + std::to_string(pairs_checked) + " monomial pairs)\n";
  std::string s = "embedding: FAILED\n";
  for (const auto& f : failures) s += "  " + f + "\n";
  return s;
}

namespace {

CPoly image(const EnvelopeSpec& e, const Vec& coords) {
  CPoly p(e.nvars());
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (coords[k] != 0) p = p + e.embedding[k].scaled(coords[k]);
  return p;
}

std::optional<Vec> coordinates(const std::vector<CPoly>& images, const CPoly& target) {
  std::map<Exponents, int, DegLexGreater> cols;
  for (const auto& p : images)
    for (const auto& [m, c] : p.terms()) cols.emplace(m, 0);
  for (const auto& [m, c] : target.terms()) cols.emplace(m, 0);
  int n = 0;
  for (auto& [m, i] : cols) i = n++;
  std::vector<Vec> vecs;
  for (const auto& p : images) {
    Vec v = zero_vec(n);
    for (const auto& [m, c] : p.terms()) v[cols[m]] = c;
    vecs.push_back(v);
  }
  Vec t = zero_vec(n);
  for (const auto& [m, c] : target.terms()) t[cols[m]] = c;
  return solve(vecs, t);
}

std::string exps_text(const Exponents& e, const std::vector<std::string>& names) {
  return CPoly::term(e, 1).to_string(names);
}

}  // namespace

EmbeddingReport verify_embedding(const GDTable& t, const EnvelopeSpec& e, int truncation) {
  const int n = e.nvars();
  if (static_cast<int>(e.embedding.size()) != t.dim || static_cast<int>(e.derivation.size()) != n)
    throw std::invalid_argument("envelope sizes do not match the table");
  if (!is_groebner(e.relations)) throw std::invalid_argument("relations are not a Groebner basis");
  EmbeddingReport r;
  auto fail = [&](const std::string& what) {
    r.ok = false;
    r.failures.push_back(what);
  };
  const auto& names = e.vars;
  auto nf = [&](const CPoly& p) { return e.normal_form(p); };

  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        CPoly x = e.var(a), y = e.var(b), z = e.var(c);
        CPoly j = e.bracket_of(x, e.bracket_of(y, z)) + e.bracket_of(y, e.bracket_of(z, x)) +
                  e.bracket_of(z, e.bracket_of(x, y));
        if (!nf(j).is_zero()) fail("jacobi at (" + names[a] + ", " + names[b] + ", " + names[c] + ")");
      }
  for (int a = 0; a < n; ++a)
    for (const auto& rel : e.relations)
      if (!nf(e.bracket_of(e.var(a), rel)).is_zero())
        fail("ideal not closed: {" + names[a] + ", " + rel.to_string(names) + "}");
  for (const auto& rel : e.relations)
    if (!nf(e.d(rel)).is_zero()) fail("ideal not closed under d: " + rel.to_string(names));

  auto basis = standard_monomials(e.relations, n, truncation);
  for (const auto& fm : basis)
    for (const auto& gm : basis) {
      CPoly f = CPoly::term(fm, 1), g = CPoly::term(gm, 1);
      CPoly lhs = e.d(e.bracket_of(f, g));
      CPoly rhs = e.bracket_of(e.d(f), g) + e.bracket_of(f, e.d(g));
      ++r.pairs_checked;
      if (!nf(lhs - rhs).is_zero())
        fail("d is not a derivation of the bracket at (" + exps_text(fm, names) + ", " + exps_text(gm, names) + ")");
    }

  for (int i = 0; i < t.dim; ++i)
    for (int j = 0; j < t.dim; ++j) {
      const auto& x = e.embedding[i];
      const auto& y = e.embedding[j];
      if (nf(x * e.d(y)) != nf(image(e, t.circ[i][j])))
        fail("product not preserved at (" + t.names[i] + ", " + t.names[j] + ")");
      if (nf(e.bracket_of(x, y)) != nf(image(e, t.bracket[i][j])))
        fail("bracket not preserved at (" + t.names[i] + ", " + t.names[j] + ")");
    }

  std::vector<CPoly> images;
  for (const auto& p : e.embedding) images.push_back(nf(p));
  std::map<Exponents, int, DegLexGreater> cols;
  RowEchelon ech;
  for (const auto& p : images) {
    SparseVector row;
    for (const auto& [m, c] : p.terms()) row.emplace_back(cols.emplace(m, static_cast<int>(cols.size())).first->second, c);
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    ech.insert(row);
  }
  if (static_cast<int>(ech.rank()) != t.dim) fail("images are linearly dependent");
  return r;
}

std::optional<GDTable> recover_table(const EnvelopeSpec& e) {
  const int dim = static_cast<int>(e.embedding.size());
  std::vector<CPoly> images;
  for (const auto& p : e.embedding) images.push_back(e.normal_form(p));
  GDTable t(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      auto c = coordinates(images, e.normal_form(e.embedding[i] * e.d(e.embedding[j])));
      auto b = coordinates(images, e.normal_form(e.bracket_of(e.embedding[i], e.embedding[j])));
      if (!c || !b) return std::nullopt;
      t.circ[i][j] = *c;
      t.bracket[i][j] = *b;
    }
  return t;
}

GDTable case2_table(const Rational& alpha) {
  if (alpha == 0) throw std::invalid_argument("case 2 needs alpha != 0");
  GDTable t(2);
  t.names = {"u", "v"};
  t.bracket[0][1] = {0, 1 / alpha};
  t.bracket[1][0] = {0, -1 / alpha};
  t.circ[0][0] = {1, 0};
  t.circ[0][1] = {0, 1};
  t.circ[1][0] = {0, 1};
  return t;
}

GDTable case3_table() {
  GDTable t(2);
  t.names = {"u", "v"};
  t.bracket[0][1] = {0, 1};
  t.bracket[1][0] = {0, -1};
  t.circ[0][0] = {0, 1};
  return t;
}

EnvelopeSpec case2_envelope(const Rational& alpha) {
  if (alpha == 0) throw std::invalid_argument("case 2 needs alpha != 0");
  EnvelopeSpec e;
  e.vars = {"x", "e"};
  auto x = e.var(0), ee = e.var(1);
  e.relations = {ee * ee};
  e.bracket[{0, 1}] = ee.scaled(1 / alpha);
  e.derivation = {CPoly::constant(2, 1), CPoly(2)};
  e.embedding = {x, ee * x};
  return e;
}

EnvelopeSpec case2_envelope_displayed(const Rational& alpha) {
  auto e = case2_envelope(alpha);
  e.derivation[1] = e.var(1).scaled(1 / alpha);
  return e;
}

EnvelopeSpec case3_envelope() {
  EnvelopeSpec e;
  e.vars = {"u", "v", "u'", "v'"};
  auto u = e.var(0), v = e.var(1), u1 = e.var(2), v1 = e.var(3);
  e.relations = {u * u1 - v, u * v1, v * u1, v * v1, v * v, u1 * u1 - v1, u1 * v1, v1 * v1};
  e.bracket[{0, 1}] = v;
  e.bracket[{0, 2}] = u1;
  e.bracket[{0, 3}] = v1.scaled(2);
  e.bracket[{1, 2}] = v1;
  e.derivation = {u1, v1, CPoly(4), CPoly(4)};
  e.embedding = {u, v};
  return e;
}

// ------------------------------------------------------------------ case 1

CPoly bracket1(const Rational& alpha, const Rational& gamma, int nvars, int x, int m, int y, int n) {
  if (alpha == gamma) throw std::invalid_argument("bracket1 needs alpha != gamma");
  auto var = [&](int letter, int order) { return CPoly::variable(nvars, 2 * order + letter); };
  Rational c = 1 / (gamma - alpha);
  return (var(x, m + 1) * var(y, n)).scaled(c * (n - 1)) - (var(x, m) * var(y, n + 1)).scaled(c * (m - 1));
}

bool bracket1_check(const Rational& alpha, const Rational& gamma, int max_order, std::string* witness) {
  if (alpha == gamma) throw std::invalid_argument("bracket1 needs alpha != gamma");
  if (max_order < 0) throw std::invalid_argument("max_order must be non-negative");
  const int orders = max_order + 4;
  const int nv = 2 * orders;
  std::map<std::pair<int, int>, CPoly> cache;
  auto gen = [&](int a, int b) -> const CPoly& {
    auto it = cache.find({a, b});
    if (it != cache.end()) return it->second;
    if (a / 2 + 1 >= orders || b / 2 + 1 >= orders) throw std::logic_error("bracket1_check ran out of orders");
    return cache.emplace(std::make_pair(a, b), bracket1(alpha, gamma, nv, a % 2, a / 2, b % 2, b / 2)).first->second;
  };
  auto br = [&](const CPoly& f, const CPoly& g) {
    CPoly out(nv);
    for (int a = 0; a < nv; ++a) {
      CPoly fa = f.partial(a);
      if (fa.is_zero()) continue;
      for (int b = 0; b < nv; ++b) {
        CPoly gb = g.partial(b);
        if (gb.is_zero()) continue;
        out = out + fa * gb * gen(a, b);
      }
    }
    return out;
  };
  auto d = [&](const CPoly& f) {
    CPoly out(nv);
    for (int a = 0; a + 2 < nv; ++a) {
      CPoly fa = f.partial(a);
      if (!fa.is_zero()) out = out + fa * CPoly::variable(nv, a + 2);
    }
    return out;
  };
  auto name = [](int a) { return std::string(a % 2 ? "v" : "u") + "^(" + std::to_string(a / 2) + ")"; };
  const int letters = 2 * (max_order + 1);
  for (int a = 0; a < letters; ++a)
    for (int b = 0; b < letters; ++b) {
      CPoly x = CPoly::variable(nv, a), y = CPoly::variable(nv, b);
      if (!(gen(a, b) + gen(b, a)).is_zero()) {
        if (witness) *witness = "antisymmetry at (" + name(a) + ", " + name(b) + ")";
        return false;
      }
      if (!(d(br(x, y)) - br(d(x), y) - br(x, d(y))).is_zero()) {
        if (witness) *witness = "derivation at (" + name(a) + ", " + name(b) + ")";
        return false;
      }
      for (int c = 0; c < letters; ++c) {
        CPoly z = CPoly::variable(nv, c);
        CPoly j = br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y));
        if (!j.is_zero()) {
          if (witness) *witness = "jacobi at (" + name(a) + ", " + name(b) + ", " + name(c) + ")";
          return false;
        }
      }
    }
  return true;
}

bool case1_bracket_consistent(const Classification& c) {
  if (c.kind != GDCase::Case1) throw std::invalid_argument("not a case 1 table");
  const int nv = 4;  // u, v, u', v'
  const auto& t = c.normalized;
  auto lin = [&](const Vec& coords) {
    CPoly p(nv);
    for (int k = 0; k < 2; ++k)
      if (coords[k] != 0) p = p + CPoly::variable(nv, k, coords[k]);
    return p;
  };
  std::vector<CPoly> rels;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) rels.push_back(CPoly::variable(nv, x) * CPoly::variable(nv, 2 + y) - lin(t.circ[x][y]));
  CPoly diff = bracket1(c.alpha, c.gamma, nv, 0, 0, 1, 0) - lin(t.bracket[0][1]);
  return coordinates(rels, diff).has_value() || diff.is_zero();
}

}  // namespace opgb
