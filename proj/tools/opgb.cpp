#include <filesystem>
#include <fstream>
#include <iostream>
#include <new>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "opgb/diff_poisson.hpp"
#include "opgb/errors.hpp"
#include "opgb/gd_models.hpp"
#include "opgb/groebner.hpp"
#include "opgb/hilbert.hpp"
#include "opgb/linear_algebra.hpp"

using namespace opgb;
using json = nlohmann::ordered_json;

namespace {

// exit codes
constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kResource = 2;
constexpr int kNonzero = 3;

struct Source {
  std::string preset;
  std::string input;
  std::string basis;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Presentation presentation_of(const Source& s) {
  if (!s.preset.empty() && !s.input.empty()) throw std::invalid_argument("give either --preset or --input");
  if (!s.input.empty()) return parse_presentation(slurp(s.input));
  if (s.preset.empty()) throw std::invalid_argument("need --preset or --input");
  return builtin_presentation(s.preset);
}

GroebnerBasis complete(const Presentation& p, int max_arity, const std::string& order, bool extended) {
  if (max_arity > 5 && !extended) throw BudgetExceeded("arity above 5 needs --extended");
  BuchbergerOptions o;
  o.max_arity = max_arity;
  o.order_id = order;
  o.on_progress = [](const BuchbergerProgress& pr) {
    std::cerr << "arity " << pr.arity << ": " << pr.new_rules << " new rules, " << pr.total_rules << " total ("
              << pr.seconds << " s)\n";
  };
  return buchberger(p, o);
}

GroebnerBasis basis_of(const Source& s, int max_arity, const std::string& order, bool extended) {
  if (!s.basis.empty()) {
    std::ifstream in(s.basis);
    if (!in) throw ParseError("cannot read " + s.basis);
    return load_basis(in);
  }
  return complete(presentation_of(s), max_arity, order, extended);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

// Runs a command body and maps exceptions onto exit codes.
int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kResource;
  } catch (const std::bad_alloc&) {
    std::cerr << "out of memory\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}

int cmd_gb(const Source& src, int max_arity, const std::string& order, const std::string& out, bool extended) {
  auto p = presentation_of(src);
  if (max_arity < p.max_relation_arity())
    throw ArityError("--max-arity is below the largest relation arity " + std::to_string(p.max_relation_arity()));
  auto b = complete(p, max_arity, order, extended);
  std::cout << "basis " << b.presentation_name << " order " << b.order_id << " max-arity " << b.max_arity << "\n";
  for (int n = 1; n <= b.max_arity; ++n) {
    auto rules = b.rules_of_arity(n);
    if (!rules.empty()) std::cout << "  arity " << n << ": " << rules.size() << " rules\n";
  }
  std::cout << "  total: " << b.rules.size() << " rules\n";
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    save_basis(b, f);
  }
  return kOk;
}

int cmd_dims(const Source& src, int max_arity, const std::string& order, const std::string& out, bool extended) {
  auto b = basis_of(src, max_arity, order, extended);
  auto t = dimension_table(b);
  std::cout << t.to_text();
  if (!out.empty()) write_file(out, t.to_csv());
  return kOk;
}

std::vector<std::pair<std::string, OperadElement>> elements_of(const std::string& path, const std::string& expr,
                                                               const std::string& identity, bool orbit,
                                                               const Signature& sig) {
  std::vector<std::pair<std::string, OperadElement>> out;
  if (!identity.empty()) {
    auto it = named_identities().find(identity);
    if (it == named_identities().end()) throw std::invalid_argument("unknown identity " + identity);
    if (orbit) {
      int k = 0;
      for (const auto& f : symmetric_to_shuffle(it->second, sig))
        out.emplace_back(identity + "#" + std::to_string(++k), f);
    } else {
      out.emplace_back(identity, shuffle_image(it->second, sig));
    }
  }
  if (!expr.empty()) out.emplace_back(expr, OperadElement::parse(expr, sig));
  if (!path.empty()) {
    std::istringstream in(slurp(path));
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      const std::string tag = "symmetric:";
      if (auto p = line.find(tag); p != std::string::npos) {
        auto rel = SymmetricRelation::parse(line.substr(p + tag.size()));
        out.emplace_back(line, shuffle_image(rel, sig));
      } else {
        out.emplace_back(line, OperadElement::parse(line, sig, lineno));
      }
    }
  }
  if (out.empty()) throw std::invalid_argument("nothing to reduce: give --element, --expr or --identity");
  return out;
}

int cmd_reduce(const Source& src, int max_arity, const std::string& order, const std::string& element,
               const std::string& expr, const std::string& identity, bool orbit) {
  auto b = basis_of(src, max_arity, order, false);
  Reducer r(b);
  auto items = elements_of(element, expr, identity, orbit, b.signature);
  bool all_zero = true;
  for (const auto& [label, f] : items) {
    auto nf = r.reduce(f);
    all_zero &= nf.is_zero();
    std::cout << label << " => " << nf.to_string(b.signature, b.order()) << "\n";
  }
  return all_zero ? kOk : kNonzero;
}

// Smallest set of named special identities whose reduced orbits span the residues.
std::vector<std::string> explaining_identities(const std::vector<OperadElement>& residues, int degree, Reducer& r) {
  std::vector<std::string> names;
  for (const auto& [name, rel] : named_identities())
    if (name.rfind("spec", 0) == 0 && rel.arity == degree) names.push_back(name);
  const std::size_t rank = span_rank(residues);
  if (rank == 0) return {};
  std::vector<std::vector<OperadElement>> orbits;
  for (const auto& n : names) {
    std::vector<OperadElement> o;
    for (const auto& f : symmetric_to_shuffle(named_identities().at(n), gd_signature())) o.push_back(r.reduce(f));
    orbits.push_back(std::move(o));
  }
  std::vector<std::string> best;
  bool found = false;
  for (unsigned mask = 1; mask < (1u << names.size()); ++mask) {
    std::vector<OperadElement> span;
    std::vector<std::string> picked;
    for (std::size_t i = 0; i < names.size(); ++i)
      if (mask >> i & 1) {
        span.insert(span.end(), orbits[i].begin(), orbits[i].end());
        picked.push_back(names[i]);
      }
    if (!same_span(span, residues)) continue;
    if (!found || picked.size() < best.size()) best = picked;
    found = true;
  }
  if (!found) return {"<none>"};
  return best;
}

int cmd_ambiguities(int degree, const Source& src, const std::string& modulo, bool trace, bool as_json,
                    const std::string& out) {
  Source s = src;
  if (s.basis.empty() && s.input.empty() && s.preset.empty()) s.preset = modulo;
  int arity = degree;
  if (s.basis.empty()) arity = std::max(degree, presentation_of(s).max_relation_arity());
  auto b = basis_of(s, arity, "pathlex", false);
  Reducer r(b);
  auto ambiguities = dp::enumerate_ambiguities(degree);
  std::map<std::string, std::pair<int, int>> families;
  std::vector<OperadElement> residues;
  json items = json::array();
  std::ostringstream text;
  for (const auto& a : ambiguities) {
    auto res = dp::resolve(a, r, trace);
    auto& f = families[a.family];
    ++f.first;
    if (!res.reduced.is_zero()) {
      ++f.second;
      residues.push_back(res.reduced);
    }
    if (trace) {
      json item{{"family", a.family},
                {"monomial", a.monomial.to_string()},
                {"first", a.first.describe(a.monomial)},
                {"second", a.second.describe(a.monomial)},
                {"residue", res.residue.to_string(b.signature, b.order())},
                {"reduced", res.reduced.to_string(b.signature, b.order())}};
      json lt = json::array(), rt = json::array();
      for (const auto& st : res.left_trace) lt.push_back(st.to_string());
      for (const auto& st : res.right_trace) rt.push_back(st.to_string());
      item["first_trace"] = lt;
      item["second_trace"] = rt;
      items.push_back(item);
      text << "[" << a.family << "] " << a.monomial.to_string() << "\n  1: " << a.first.describe(a.monomial)
           << "\n  2: " << a.second.describe(a.monomial) << "\n";
      for (const auto& st : res.left_trace) text << "    1> " << st.to_string() << "\n";
      for (const auto& st : res.right_trace) text << "    2> " << st.to_string() << "\n";
      text << "  residue mod " << b.presentation_name << ": " << res.reduced.to_string(b.signature, b.order())
           << "\n";
    }
  }
  const std::size_t rank = span_rank(residues);
  auto generators = explaining_identities(residues, degree, r);

  json report{{"degree", degree}, {"modulo", b.presentation_name}, {"ambiguities", ambiguities.size()}};
  json fam = json::object();
  for (const auto& [name, c] : families) fam[name] = {{"pairs", c.first}, {"nonzero", c.second}};
  report["families"] = fam;
  report["residue_rank"] = rank;
  report["generated_by"] = generators;
  if (trace) report["items"] = items;

  std::ostringstream human;
  human << text.str();
  human << "degree " << degree << " modulo " << b.presentation_name << ": " << ambiguities.size() << " ambiguities, "
        << families.size() << " families\n";
  for (const auto& [name, c] : families)
    human << "  " << name << ": " << c.first << " pairs, " << c.second << " nonzero residues\n";
  human << "residue rank " << rank << "\n";
  human << "generated by:";
  if (generators.empty()) human << " (nothing: all residues vanish)";
  for (const auto& g : generators) human << " " << g;
  human << "\n";

  std::string output = as_json ? report.dump(2) + "\n" : human.str();
  std::cout << output;
  if (!out.empty()) write_file(out, output);
  return kOk;
}

int cmd_check_gd(const std::string& path, int truncation, int max_order) {
  auto t = GDTable::parse(slurp(path));
  auto report = check_gd_axioms(t);
  std::cout << report.to_string(t);
  if (!report.all_pass()) {
    std::cout << "not a GD table\n";
    return kNonzero;
  }
  if (t.dim != 2) {
    std::cout << "classification: only for dimension 2\n";
    return kOk;
  }
  auto c = classify_2dim(t);
  std::cout << "classification: " << c.label() << "\n";
  bool ok = true;
  switch (c.kind) {
    case GDCase::Case1: {
      std::string w;
      bool b1 = bracket1_check(c.alpha, c.gamma, max_order, &w);
      bool cons = case1_bracket_consistent(c);
      std::cout << "bracket1 up to order " << max_order << ": " << (b1 ? "jacobi and d-compatibility hold" : w) << "\n";
      std::cout << "bracket matches x y' - x∘y: " << (cons ? "yes" : "no") << "\n";
      ok = b1 && cons;
      break;
    }
    case GDCase::Case2: {
      auto r = verify_embedding(c.normalized, case2_envelope(c.alpha), truncation);
      std::cout << r.to_string();
      ok = r.ok;
      break;
    }
    case GDCase::Case3: {
      auto r = verify_embedding(c.normalized, case3_envelope(), truncation);
      std::cout << r.to_string();
      ok = r.ok;
      break;
    }
    case GDCase::Novikov:
    case GDCase::LieOnly:
      std::cout << "embedding: not constructed for this case\n";
      break;
  }
  return ok ? kOk : kNonzero;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Operadic Groebner bases for Gelfand-Dorfman algebras"};
  app.require_subcommand(1);

  Source src;
  int max_arity = 5, degree = 4, truncation = 6, max_order = 3;
  std::string order = "pathlex", out, modulo = "gd", element, expr, identity;
  bool extended = false, trace = false, as_json = false, orbit = false;

  auto add_source = [&](CLI::App* c, bool with_basis) {
    c->add_option("--preset", src.preset, "builtin presentation: lie, novikov, gd, wsgd");
    c->add_option("--input", src.input, "presentation file");
    if (with_basis) c->add_option("--basis", src.basis, "saved basis file");
    c->add_option("--max-arity", max_arity, "completion range")->check(CLI::Range(2, 8));
    c->add_option("--order", order, "monomial order id");
    c->add_flag("--extended", extended, "allow arity 6");
  };

  auto* gb = app.add_subcommand("gb", "complete a presentation and save the basis");
  add_source(gb, false);
  gb->add_option("-o", out, "basis output file");

  auto* dims = app.add_subcommand("dims", "dimension table of the quotient");
  add_source(dims, true);
  dims->add_option("basis_file", src.basis, "saved basis file");
  dims->add_option("-o", out, "csv output file");

  auto* reduce = app.add_subcommand("reduce", "normal forms; exit 0 when every element reduces to zero");
  add_source(reduce, true);
  reduce->add_option("--element", element, "file with one element per line (or 'symmetric: <identity>')");
  reduce->add_option("--expr", expr, "element text");
  reduce->add_option("--identity", identity, "named identity: gd1 lsymm rcomm jacobi spec1..spec5");
  reduce->add_flag("--orbit", orbit, "reduce the whole orbit of --identity");

  auto* amb = app.add_subcommand("ambiguities", "critical pairs of the differential Poisson rewriting system");
  amb->add_option("--degree", degree, "number of letters")->check(CLI::Range(3, 5));
  amb->add_option("--modulo", modulo, "preset to reduce residues against");
  amb->add_option("--basis", src.basis, "saved basis to reduce residues against");
  amb->add_flag("--emit-trace", trace, "print every rewriting step");
  amb->add_flag("--json", as_json, "machine-readable report");
  amb->add_option("-o", out, "report output file");

  std::string table_path;
  auto* check = app.add_subcommand("check-gd", "GD axioms, 2-dim classification and envelope checks");
  check->add_option("table", table_path, "table file")->required();
  check->add_option("--truncation", truncation, "degree bound for envelope checks");
  check->add_option("--max-order", max_order, "derivative order bound for the case 1 bracket");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  if (*gb) return guarded([&] { return cmd_gb(src, max_arity, order, out, extended); });
  if (*dims) return guarded([&] { return cmd_dims(src, max_arity, order, out, extended); });
  if (*reduce) return guarded([&] { return cmd_reduce(src, max_arity, order, element, expr, identity, orbit); });
  if (*amb) return guarded([&] { return cmd_ambiguities(degree, src, modulo, trace, as_json, out); });
  if (*check) return guarded([&] { return cmd_check_gd(table_path, truncation, max_order); });
  return kInputError;
}
