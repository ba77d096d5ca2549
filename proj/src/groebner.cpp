#include "opgb/groebner.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "opgb/errors.hpp"

namespace opgb {

std::vector<const RewriteRule*> GroebnerBasis::rules_of_arity(int n) const {
  std::vector<const RewriteRule*> out;
  for (const auto& r : rules)
    if (r.lead.arity() == n) out.push_back(&r);
  return out;
}

// ------------------------------------------------------------------ Reducer

Reducer::Reducer(const GroebnerBasis& basis) : owned_(std::make_unique<GroebnerBasis>(basis)) {
  basis_ = owned_.get();
  index_rules();
}

void Reducer::index_rules() {
  lead_index_.clear();
  lead_arities_.assign(TreeMonomial::kMaxNodes + 1, 0);
  for (std::size_t i = 0; i < basis_->rules.size(); ++i) {
    const auto& lead = basis_->rules[i].lead;
    lead_index_.emplace(lead, static_cast<int>(i));
    lead_arities_[lead.arity()] = 1;
  }
}

void Reducer::add_rules(std::vector<RewriteRule> rules) {
  for (auto& r : rules) owned_->rules.push_back(std::move(r));
  index_rules();
  clear_cache();
}

void Reducer::clear_cache() { nf_cache_.clear(); }

namespace {

int mask_arity(const TreeMonomial& host, std::uint64_t mask) {
  int a = 1;
  for (int i = 0; i < host.node_count(); ++i)
    if (mask >> i & 1) a += host.node(i).value - 1;
  return a;
}

}  // namespace

std::optional<Reducer::Site> Reducer::first_site(const TreeMonomial& m) const {
  for (int root = 0; root < m.node_count(); ++root) {
    if (m.node(root).is_leaf()) continue;
    int best = -1;
    Occurrence best_occ;
    for (auto mask : connected_vertex_sets(m, root)) {
      int a = mask_arity(m, mask);
      if (a >= static_cast<int>(lead_arities_.size()) || !lead_arities_[a]) continue;
      auto [pattern, occ] = divisor_at(m, root, mask);
      auto it = lead_index_.find(pattern);
      if (it == lead_index_.end()) continue;
      if (best < 0 || it->second < best) {
        best = it->second;
        best_occ = std::move(occ);
      }
    }
    if (best >= 0) return Site{best, std::move(best_occ)};
  }
  return std::nullopt;
}

const std::vector<OperadElement::Term>& Reducer::monomial_normal_form(const TreeMonomial& m) {
  if (auto it = nf_cache_.find(m); it != nf_cache_.end()) return it->second;
  std::unordered_map<TreeMonomial, std::vector<OperadElement::Term>> pending;
  std::vector<TreeMonomial> stack{m};
  while (!stack.empty()) {
    TreeMonomial u = stack.back();
    if (nf_cache_.count(u)) {
      stack.pop_back();
      continue;
    }
    auto p = pending.find(u);
    if (p == pending.end()) {
      auto site = first_site(u);
      if (!site) {
        nf_cache_.emplace(u, std::vector<OperadElement::Term>{{u, Rational(1)}});
        stack.pop_back();
        continue;
      }
      const auto& tail = basis_->rules[site->rule].tail;
      std::vector<OperadElement::Term> step;
      step.reserve(tail.size());
      for (const auto& [t, c] : tail.terms()) step.emplace_back(graft_monomial(u, site->occurrence, t), c);
      p = pending.emplace(u, std::move(step)).first;
    }
    bool ready = true;
    for (const auto& [t, c] : p->second)
      if (!nf_cache_.count(t)) {
        stack.push_back(t);
        ready = false;
      }
    if (!ready) continue;
    std::unordered_map<TreeMonomial, Rational> acc;
    for (const auto& [t, c] : p->second)
      for (const auto& [s, d] : nf_cache_.at(t)) acc[s] += c * d;
    std::vector<OperadElement::Term> nf;
    for (auto& [s, c] : acc)
      if (c != 0) nf.emplace_back(s, std::move(c));
    std::sort(nf.begin(), nf.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    nf_cache_.emplace(u, std::move(nf));
    pending.erase(p);
    stack.pop_back();
  }
  return nf_cache_.at(m);
}

OperadElement Reducer::reduce(const OperadElement& f) {
  if (f.is_zero()) return f;
  if (f.arity() > basis_->max_arity)
    throw ArityError("arity " + std::to_string(f.arity()) + " exceeds the completed range " +
                     std::to_string(basis_->max_arity));
  std::unordered_map<TreeMonomial, Rational> acc;
  for (const auto& [t, c] : f.terms())
    for (const auto& [s, d] : monomial_normal_form(t)) acc[s] += c * d;
  std::vector<OperadElement::Term> terms(acc.begin(), acc.end());
  return OperadElement::from_terms(std::move(terms));
}

OperadElement Reducer::reduce(const OperadElement& f, std::string_view order_id) {
  if (order_id != basis_->order_id)
    throw std::invalid_argument("basis was computed under order '" + basis_->order_id + "', request uses '" +
                                std::string(order_id) + "'");
  return reduce(f);
}

OperadElement Reducer::reduce_randomized(const OperadElement& f, std::mt19937_64& rng) const {
  if (f.is_zero()) return f;
  if (f.arity() > basis_->max_arity) throw ArityError("arity exceeds the completed range");
  OperadElement g = f;
  for (;;) {
    std::vector<std::pair<const OperadElement::Term*, std::vector<Site>>> reducible;
    for (const auto& term : g.terms()) {
      std::vector<Site> sites;
      const auto& m = term.first;
      for (int root = 0; root < m.node_count(); ++root) {
        if (m.node(root).is_leaf()) continue;
        for (auto mask : connected_vertex_sets(m, root)) {
          int a = mask_arity(m, mask);
          if (a >= static_cast<int>(lead_arities_.size()) || !lead_arities_[a]) continue;
          auto [pattern, occ] = divisor_at(m, root, mask);
          auto it = lead_index_.find(pattern);
          if (it != lead_index_.end()) sites.push_back({it->second, std::move(occ)});
        }
      }
      if (!sites.empty()) reducible.emplace_back(&term, std::move(sites));
    }
    if (reducible.empty()) return g;
    auto& [term, sites] = reducible[rng() % reducible.size()];
    const auto& site = sites[rng() % sites.size()];
    const auto& rule = basis_->rules[site.rule];
    OperadElement step = graft_at(term->first, site.occurrence, rule.tail) * term->second;
    OperadElement remove(term->first, term->second);
    g = g - remove + step;
  }
}

// ------------------------------------------------------------ S-polynomials

std::vector<OperadElement> s_polynomials(const RewriteRule& r1, const RewriteRule& r2, int max_arity) {
  std::vector<OperadElement> out;
  for (const auto& cm : common_multiples(r1.lead, r2.lead, max_arity))
    out.push_back(graft_at(cm.monomial, cm.first, r1.tail) - graft_at(cm.monomial, cm.second, r2.tail));
  return out;
}

// --------------------------------------------------------------- Buchberger

namespace {

// Fully reduced echelon form, pivots ascending.
std::map<int, SparseVector> back_substitute(const RowEchelon& ech) {
  std::map<int, SparseVector> done;
  const auto& rows = ech.rows();
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    std::map<int, Rational> work(it->second.begin(), it->second.end());
    for (auto w = std::next(work.begin()); w != work.end();) {
      auto other = done.find(w->first);
      if (other == done.end() || w->second == 0) {
        if (w->second == 0)
          w = work.erase(w);
        else
          ++w;
        continue;
      }
      Rational c = w->second;
      int col = w->first;
      for (const auto& [j, a] : other->second) work[j] -= c * a;
      w = work.upper_bound(col);
      work.erase(col);
    }
    SparseVector row;
    for (auto& [j, a] : work)
      if (a != 0) row.emplace_back(j, a);
    done.emplace(it->first, std::move(row));
  }
  return done;
}

}  // namespace

GroebnerBasis buchberger(const Presentation& p, const BuchbergerOptions& options) {
  if (options.max_arity < 1) throw ArityError("max arity must be at least 1");
  if (options.max_arity > 12) throw BudgetExceeded("arity above 12 is not supported");
  for (const auto& r : p.relations)
    if (r.arity() > options.max_arity)
      throw ArityError("relation of arity " + std::to_string(r.arity()) + " above the requested maximum");
  std::uint64_t monomials = count_monomials(p.signature, options.max_arity);
  if (monomials > options.monomial_budget)
    throw BudgetExceeded("arity " + std::to_string(options.max_arity) + " has " + std::to_string(monomials) +
                         " monomials, above the budget of " + std::to_string(options.monomial_budget));
  const MonomialOrder order = MonomialOrder::by_id(options.order_id);

  GroebnerBasis gb;
  gb.signature = p.signature;
  gb.max_arity = options.max_arity;
  gb.presentation_name = p.name;
  gb.order_id = order.id();
  Reducer red(gb);

  for (int n = 2; n <= options.max_arity; ++n) {
    auto start = std::chrono::steady_clock::now();
    // normal monomials modulo the lower-arity rules, greatest first
    std::vector<std::pair<std::string, TreeMonomial>> space;
    for (auto& t : enumerate_monomials(p.signature, n))
      if (red.is_normal(t)) space.emplace_back(order.key(t), t);
    std::sort(space.begin(), space.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    std::unordered_map<TreeMonomial, int> position;
    position.reserve(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) position.emplace(space[i].second, static_cast<int>(i));

    RowEchelon ech;
    std::size_t candidates = 0;
    auto absorb = [&](const OperadElement& f) {
      ++candidates;
      OperadElement nf = red.reduce(f);
      if (nf.is_zero()) return;
      SparseVector v;
      v.reserve(nf.size());
      for (const auto& [t, c] : nf.terms()) v.emplace_back(position.at(t), c);
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      ech.insert(v);
    };

    for (const auto& r : p.relations)
      if (r.arity() == n) absorb(r);

    const auto& rules = red.basis().rules;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      int a = rules[i].lead.arity();
      for (std::size_t j = i; j < rules.size(); ++j) {
        int b = rules[j].lead.arity();
        if (a + b - 2 < n || std::max(a, b) >= n) continue;
        for (const auto& cm : common_multiples(rules[i].lead, rules[j].lead, n, n))
          absorb(graft_at(cm.monomial, cm.first, rules[i].tail) - graft_at(cm.monomial, cm.second, rules[j].tail));
      }
    }

    std::vector<RewriteRule> fresh;
    for (const auto& [pivot, row] : back_substitute(ech)) {
      std::vector<OperadElement::Term> tail;
      for (std::size_t k = 1; k < row.size(); ++k) tail.emplace_back(space[row[k].first].second, -row[k].second);
      fresh.push_back({space[pivot].second, OperadElement::from_terms(std::move(tail))});
    }
    // ascending leads
    std::reverse(fresh.begin(), fresh.end());
    std::size_t added = fresh.size();
    red.add_rules(std::move(fresh));
    if (options.on_progress) {
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      options.on_progress({n, candidates, added, red.basis().rules.size(), secs});
    }
  }
  gb.rules = red.basis().rules;
  return gb;
}

// ------------------------------------------------------------- validation

std::string validate_basis(const GroebnerBasis& basis) {
  MonomialOrder order;
  try {
    order = MonomialOrder::by_id(basis.order_id);
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
  std::unordered_map<TreeMonomial, std::size_t> leads;
  for (std::size_t i = 0; i < basis.rules.size(); ++i) {
    const auto& r = basis.rules[i];
    if (r.lead.is_leaf()) return "rule " + std::to_string(i + 1) + " has a leaf as lead";
    if (r.lead.arity() > basis.max_arity) return "rule " + std::to_string(i + 1) + " exceeds max-arity";
    if (!leads.emplace(r.lead, i).second) return "duplicate lead " + r.lead.to_string(basis.signature);
    if (!r.tail.is_zero() && r.tail.arity() != r.lead.arity())
      return "rule " + std::to_string(i + 1) + " mixes arities";
    for (const auto& [t, c] : r.tail.terms())
      if (!order.less(t, r.lead))
        return "tail of rule " + std::to_string(i + 1) + " is not below its lead in " + basis.order_id;
  }
  for (std::size_t i = 0; i < basis.rules.size(); ++i) {
    const auto& r = basis.rules[i];
    std::string problem;
    for_each_divisor(r.lead, [&](const TreeMonomial& pattern, const Occurrence&) {
      auto it = leads.find(pattern);
      if (problem.empty() && it != leads.end() && it->second != i)
        problem = "lead " + r.lead.to_string(basis.signature) + " is divisible by lead " +
                  pattern.to_string(basis.signature);
    });
    for (const auto& [t, c] : r.tail.terms())
      for_each_divisor(t, [&](const TreeMonomial& pattern, const Occurrence&) {
        if (problem.empty() && leads.count(pattern))
          problem = "tail monomial " + t.to_string(basis.signature) + " of rule " + std::to_string(i + 1) +
                    " is reducible";
      });
    if (!problem.empty()) return problem;
  }
  return {};
}

// -------------------------------------------------------------- persistence

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) out[i] = digits[v & 15];
  return out;
}

std::string rule_line(const RewriteRule& r, const Signature& sig, const MonomialOrder& order) {
  return r.lead.to_string(sig) + " => " + r.tail.to_string(sig, order);
}

}  // namespace

void save_basis(const GroebnerBasis& basis, std::ostream& out) {
  auto order = basis.order();
  std::string body;
  for (const auto& r : basis.rules) body += rule_line(r, basis.signature, order) + "\n";
  out << "opgb-basis v1\n";
  out << "presentation " << basis.presentation_name << "\n";
  out << "order " << basis.order_id << "\n";
  out << "max-arity " << basis.max_arity << "\n";
  out << "generators " << basis.signature.to_string() << "\n";
  out << "rules " << basis.rules.size() << "\n";
  out << "checksum " << hex64(fnv1a(body)) << "\n";
  out << body;
}

GroebnerBasis load_basis(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next = [&](const std::string& what) {
    if (!std::getline(in, line)) throw ParseError("unexpected end of file, expected " + what, line_no + 1, 1);
    ++line_no;
    return line;
  };
  auto field = [&](const std::string& key) {
    std::string l = next(key);
    if (l.rfind(key + " ", 0) != 0) throw ParseError("expected '" + key + "'", line_no, 1);
    return l.substr(key.size() + 1);
  };
  if (next("header") != "opgb-basis v1") throw ParseError("not an opgb-basis v1 file", 1, 1);
  GroebnerBasis gb;
  gb.presentation_name = field("presentation");
  gb.order_id = field("order");
  try {
    MonomialOrder::by_id(gb.order_id);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), line_no, 7);
  }
  std::string arity_text = field("max-arity");
  std::size_t count = 0;
  try {
    gb.max_arity = std::stoi(arity_text);
    std::string gens = field("generators");
    std::vector<GeneratorSymbol> syms;
    std::istringstream words(gens);
    std::string w;
    while (words >> w) {
      auto slash = w.find('/');
      if (slash == std::string::npos) throw ParseError("bad generator '" + w + "'", line_no, 12);
      syms.push_back({w.substr(0, slash), std::stoi(w.substr(slash + 1))});
    }
    gb.signature = Signature(syms);
    count = std::stoul(field("rules"));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad header: ") + e.what(), line_no, 1);
  }
  std::string checksum = field("checksum");
  std::string body;
  for (std::size_t i = 0; i < count; ++i) {
    std::string l = next("rule");
    auto arrow = l.find(" => ");
    if (arrow == std::string::npos) throw ParseError("expected '<lead> => <tail>'", line_no, 1);
    RewriteRule r;
    try {
      r.lead = TreeMonomial::parse(l.substr(0, arrow), gb.signature);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no, e.column());
    }
    r.tail = OperadElement::parse(std::string_view(l).substr(arrow + 4), gb.signature, line_no);
    body += l + "\n";
    gb.rules.push_back(std::move(r));
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string::npos) throw ParseError("trailing content", line_no, 1);
  }
  if (hex64(fnv1a(body)) != checksum) throw ParseError("checksum mismatch", 7, 10);
  if (auto problem = validate_basis(gb); !problem.empty()) throw ParseError("invalid basis: " + problem, 0, 0);
  return gb;
}

}  // namespace opgb
