#include "tlrc/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "tlrc/braidrep.hpp"
#include "tlrc/errors.hpp"
#include "tlrc/network.hpp"
#include "tlrc/recoupling.hpp"
#include "tlrc/scalar.hpp"
#include "tlrc/serialize.hpp"
#include "tlrc/tl.hpp"

namespace tlrc {

BraidWord parse_braid_word(std::string_view text) {
  BraidWord word;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) return word;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view item = trim(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (item.empty()) throw ParseError("empty item in braid word \"" + std::string(text) + "\"");
    if (item.front() == '+') item.remove_prefix(1);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw ParseError("braid letter \"" + std::string(item) + "\" is not an integer");
    }
    if (v == 0) throw ParseError("braid letter 0 is not a generator");
    word.letters.push_back(v);
    word.strands = std::max(word.strands, std::abs(v) + 1);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return word;
}

namespace {

struct Options {
  std::optional<int> r;
  bool generic = false;
  std::optional<double> tol;
  bool json = false;
  bool csv = false;
  std::optional<std::string> word;
  std::optional<int> strands;
  std::optional<int> max_label;
  std::optional<int> max_strands;
  bool inject_sign_bug = false;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string quote(const std::string& s) { return "\"" + s + "\""; }

std::string join(const std::vector<int>& v, char sep) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? std::string(1, sep) : "") + std::to_string(v[k]);
  return s;
}

// Emits one document as JSON or CSV.
class Emitter {
 public:
  Emitter(std::ostream& out, bool csv) : out_(out), csv_(csv) {}
  [[nodiscard]] bool csv() const { return csv_; }
  void json(const Json& doc) { out_ << doc.dump(2) << '\n'; }
  void line(const std::string& s) { out_ << s << '\n'; }

  void poly_csv(const LaurentPoly& p, const std::string& part = "") {
    for (const auto& [e, c] : p.terms()) line((part.empty() ? "" : part + ",") + std::to_string(e) + "," + c.get_str());
  }
  void exact_csv(const RationalFunction& f) {
    if (f.is_polynomial()) {
      line("exponent,coefficient");
      poly_csv(f.numerator());
    } else {
      line("part,exponent,coefficient");
      poly_csv(f.numerator(), "num");
      poly_csv(f.denominator(), "den");
    }
  }

 private:
  std::ostream& out_;
  bool csv_;
};

RootParams root(const Options& o) { return RootParams(*o.r, o.tol.value_or(RootParams::kDefaultTol)); }

Json scalar_header(const std::string& quantity, const std::vector<int>& labels, const Options& o) {
  return Json{{"quantity", quantity}, {"labels", labels}, {"r", o.r ? Json(*o.r) : Json(nullptr)}};
}

void emit_exact(Emitter& em, const std::string& quantity, const std::vector<int>& labels, const Options& o,
                const RationalFunction& v) {
  if (em.csv()) return em.exact_csv(v);
  Json doc = scalar_header(quantity, labels, o);
  doc["value"] = exact_value_json(v);
  em.json(doc);
}

void emit_numeric(Emitter& em, const std::string& quantity, const std::vector<int>& labels, const Options& o,
                  std::complex<double> v) {
  if (em.csv()) {
    em.line("re,im");
    em.line(num(v.real()) + "," + num(v.imag()));
    return;
  }
  Json doc = scalar_header(quantity, labels, o);
  doc["value"] = to_json(v);
  em.json(doc);
}

// Scalar command with an exact and a numeric evaluator.
void scalar_command(Emitter& em, const Options& o, const std::string& quantity, const std::vector<int>& labels,
                    const std::function<RationalFunction()>& exact,
                    const std::function<std::complex<double>(const RootParams&)>& numeric) {
  if (o.generic) {
    emit_exact(em, quantity, labels, o, exact());
  } else {
    emit_numeric(em, quantity, labels, o, numeric(root(o)));
  }
}

void require_numeric(const Options& o, const std::string& cmd) {
  if (!o.r) throw InputError(cmd + " needs --r");
}

void emit_fmatrix(Emitter& em, const RecouplingMatrix& m) {
  if (!em.csv()) return em.json(to_json(m));
  std::string header = "i\\j";
  for (int j : m.cols) header += "," + std::to_string(j);
  em.line(header);
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    std::string row = std::to_string(m.rows[i]);
    for (std::size_t j = 0; j < m.cols.size(); ++j)
      row += "," + num(m.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
    em.line(row);
  }
}

void emit_rphase(Emitter& em, const Options& o, int a, int b) {
  Json doc{{"a", a}, {"b", b}, {"r", o.r ? Json(*o.r) : Json(nullptr)}};
  if (o.generic) {
    const RMatrixExact rm = rmatrix_exact(a, b);
    if (em.csv()) {
      em.line("c,exponent,coefficient");
      for (std::size_t k = 0; k < rm.labels.size(); ++k) em.poly_csv(rm.diagonal[k], std::to_string(rm.labels[k]));
      return;
    }
    Json phases = Json::array();
    for (const auto& p : rm.diagonal) phases.push_back(to_json(p));
    doc["labels"] = rm.labels;
    doc["phases"] = phases;
  } else {
    const RMatrix rm = rmatrix(a, b, root(o));
    if (em.csv()) {
      em.line("c,re,im");
      for (std::size_t k = 0; k < rm.labels.size(); ++k) {
        const auto z = rm.entries(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
        em.line(std::to_string(rm.labels[k]) + "," + num(z.real()) + "," + num(z.imag()));
      }
      return;
    }
    Json phases = Json::array();
    for (Eigen::Index k = 0; k < rm.entries.rows(); ++k) phases.push_back(to_json(rm.entries(k, k)));
    doc["labels"] = rm.labels;
    doc["phases"] = phases;
  }
  em.json(doc);
}

FusionBasis make_basis(const Options& o, int n, int ell, int t) {
  if (n < 1) throw InputError("strand count must be at least 1");
  return o.generic ? enumerate_basis_generic(n, ell, t) : enumerate_basis(n, ell, t, root(o));
}

void emit_basis(Emitter& em, const FusionBasis& basis) {
  if (em.csv()) {
    std::string header;
    for (int k = 1; k < basis.n; ++k) header += (k > 1 ? ",x" : "x") + std::to_string(k);
    em.line(header);
    for (const auto& p : basis.paths) em.line(join(p, ','));
    return;
  }
  Json doc = to_json(basis, Eigen::MatrixXcd());
  doc.erase("matrix");
  doc["dimension"] = basis.size();
  em.json(doc);
}

BraidWord word_from(const Options& o) {
  if (!o.word) throw InputError("--word is required");
  BraidWord w = parse_braid_word(*o.word);
  if (o.strands) {
    if (*o.strands < 1) throw InputError("--strands must be at least 1");
    w.strands = *o.strands;
  } else if (w.letters.empty()) {
    throw InputError("the empty word needs --strands");
  }
  w.validate();
  return w;
}

void emit_compile(Emitter& em, const Options& o, int n, int ell, int t) {
  if (!o.word) throw InputError("--word is required");
  if (o.strands && *o.strands != n) throw InputError("--strands disagrees with the strand count argument");
  BraidWord w = parse_braid_word(*o.word);
  w.strands = n;
  w.validate();
  const FusionBasis basis = make_basis(o, n, ell, t);
  if (o.generic) {
    const ExactMatrix u = compile_braid_exact(basis, w);
    if (!em.csv()) return em.json(to_json(basis, u));
    em.line("row,col,num,den");
    for (int i = 0; i < u.rows(); ++i)
      for (int j = 0; j < u.cols(); ++j)
        em.line(std::to_string(i) + "," + std::to_string(j) + "," + quote(u(i, j).numerator().to_string()) + "," +
                quote(u(i, j).denominator().to_string()));
    return;
  }
  const Eigen::MatrixXcd u = compile_braid(basis, w);
  if (!em.csv()) return em.json(to_json(basis, u));
  em.line("row,col,re,im");
  for (Eigen::Index i = 0; i < u.rows(); ++i)
    for (Eigen::Index j = 0; j < u.cols(); ++j)
      em.line(std::to_string(i) + "," + std::to_string(j) + "," + num(u(i, j).real()) + "," + num(u(i, j).imag()));
}

void emit_bracket(Emitter& em, const Options& o) {
  const BraidWord w = word_from(o);
  const BracketValue v = braid_closure_bracket(w);
  if (o.generic) {
    if (em.csv()) {
      em.line("quantity,exponent,coefficient");
      for (const auto& [name, f] : {std::pair{"raw", &v.raw}, std::pair{"normalized", &v.normalized}}) {
        if (!f->is_polynomial()) throw InputError("bracket value is not a Laurent polynomial");
        em.poly_csv(f->numerator(), name);
      }
      return;
    }
    em.json(Json{{"word", w.to_string()},
                 {"strands", w.strands},
                 {"r", nullptr},
                 {"raw", exact_value_json(v.raw)},
                 {"normalized", exact_value_json(v.normalized)}});
    return;
  }
  const RootParams p = root(o);
  const auto raw = eval_at_root(v.raw, p);
  const auto normalized = eval_at_root(v.normalized, p);
  if (em.csv()) {
    em.line("quantity,re,im");
    em.line("raw," + num(raw.real()) + "," + num(raw.imag()));
    em.line("normalized," + num(normalized.real()) + "," + num(normalized.imag()));
    return;
  }
  em.json(Json{{"word", w.to_string()},
               {"strands", w.strands},
               {"r", p.r()},
               {"raw", to_json(raw)},
               {"normalized", to_json(normalized)}});
}

FMatrixProvider sign_bug_provider() {
  return [](int a, int b, int c, int d, const RootParams& p) {
    RecouplingMatrix m = fmatrix(a, b, c, d, p);
    if (m.entries.rows() >= 2 && m.entries.cols() >= 2) m.entries(0, 1) = -m.entries(0, 1);
    return m;
  };
}

CheckReport oracle_suite(int max_label, int max_strands) {
  CheckReport rep;
  const int sum_cap = 2 * (max_label + 1);
  for (int a = 0; a <= sum_cap; ++a)
    for (int b = 0; a + b <= sum_cap; ++b)
      for (int c = 0; a + b + c <= sum_cap; ++c) {
        if (!is_admissible(a, b, c)) continue;
        rep.entries.push_back({"oracle-theta", {a, b, c}, theta_closed(a, b, c) == theta_oracle(a, b, c) ? 0.0 : 1.0});
      }
  const int L = max_label;
  for (int a = 0; a <= L; ++a)
    for (int b = 0; b <= L; ++b)
      for (int i = 0; i <= L; ++i)
        for (int c = 0; c <= L; ++c)
          for (int d = 0; d <= L; ++d)
            for (int j = 0; j <= L; ++j) {
              if (!is_admissible(a, c, i) || !is_admissible(b, d, i) || !is_admissible(a, b, j) ||
                  !is_admissible(c, d, j))
                continue;
              const bool same = tet_closed(a, b, i, c, d, j) == tet_oracle(a, b, i, c, d, j);
              rep.entries.push_back({"oracle-tet", {a, b, i, c, d, j}, same ? 0.0 : 1.0});
            }
  for (int n = 0; n <= max_strands; ++n) {
    const bool same = trace_closure(jones_wenzl(n)) == RationalFunction(delta_n(n));
    rep.entries.push_back({"oracle-delta", {n}, same ? 0.0 : 1.0});
  }
  return rep;
}

int run_check(Emitter& em, const Options& o, const std::string& suite) {
  const double threshold = o.tol.value_or(1e-9);
  const FMatrixProvider provider = o.inject_sign_bug ? sign_bug_provider() : default_fmatrix_provider();
  CheckReport rep;
  if (suite == "oracle") {
    if (!o.generic) throw InputError("check oracle runs at generic A; pass --generic");
    rep = oracle_suite(o.max_label.value_or(3), o.max_strands.value_or(6));
  } else {
    std::vector<int> roots;
    if (o.r) {
      roots = {*o.r};
    } else if (suite == "orthogonality") {
      roots = {3, 4, 5, 6, 7, 8};
    } else if (suite == "braid") {
      roots = {4, 5, 7};
    } else {
      roots = {4, 5, 6};
    }
    for (int r : roots) {
      const RootParams p(r, RootParams::kDefaultTol);
      if (suite == "orthogonality") {
        rep.append(orthogonality_check(p, o.max_label, provider));
        rep.append(inverse_check(p, o.max_label, provider));
      } else if (suite == "braid") {
        rep.append(braid_sweep(p, o.max_strands.value_or(5), o.max_label.value_or(2), provider));
      } else if (suite == "pentagon") {
        rep.append(pentagon_check(p, o.max_label, provider));
      } else {
        rep.append(hexagon_check(p, o.max_label, provider));
      }
    }
  }

  // One summary per (check, r), then every violating configuration.
  std::vector<CheckEntry> summary;
  std::map<std::pair<std::string, int>, std::size_t> slot;
  const bool keyed_by_root = suite != "oracle";
  for (const auto& e : rep.entries) {
    const int r = keyed_by_root ? e.labels.front() : 0;
    auto [it, fresh] = slot.try_emplace({e.check, r}, summary.size());
    if (fresh) summary.push_back({e.check, keyed_by_root ? std::vector<int>{r} : std::vector<int>{}, 0.0});
    auto& s = summary[it->second];
    s.deviation = std::max(s.deviation, e.deviation);
  }
  const auto bad = rep.violations(threshold);
  std::vector<CheckEntry> all = summary;
  all.insert(all.end(), bad.begin(), bad.end());
  if (em.csv()) {
    em.line("check,labels,deviation");
    for (const auto& e : all) em.line(e.check + "," + quote(join(e.labels, ';')) + "," + num(e.deviation));
  } else {
    em.json(to_json(all));
  }
  return bad.empty() ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Temperley-Lieb recoupling calculator: bracket evaluations, recoupling matrices, braid unitaries."};
  app.name("tlrc");
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  auto* r_opt = app.add_option("--r", o.r, "Evaluate at A = exp(i pi / 2r), r >= 3");
  auto* g_opt = app.add_flag("--generic", o.generic, "Exact arithmetic in Z[A, A^-1]");
  r_opt->excludes(g_opt);
  app.add_option("--tol", o.tol, "Vanishing tolerance at a root (default 1e-10); check threshold (default 1e-9)");
  auto* json_opt = app.add_flag("--json", o.json, "JSON output (default)");
  auto* csv_opt = app.add_flag("--csv", o.csv, "CSV output");
  json_opt->excludes(csv_opt);
  app.add_option("--word", o.word, "Braid word, comma-separated signed generators, first letter applied first");
  app.add_option("--strands", o.strands, "Strand count for --word (default max|letter| + 1)");
  app.add_option("--max-label", o.max_label, "Label budget for check sweeps");
  app.add_option("--max-strands", o.max_strands, "Strand budget for check sweeps");
  app.add_flag("--inject-sign-bug", o.inject_sign_bug, "Flip one recoupling entry (checker calibration)")
      ->group("");

  std::map<std::string, std::vector<int>> ints;
  auto sub = [&](const std::string& name, const std::string& help, const std::vector<std::string>& names) {
    auto* s = app.add_subcommand(name, help);
    auto& slots = ints[name];
    slots.resize(names.size());
    for (std::size_t k = 0; k < names.size(); ++k) s->add_option(names[k], slots[k], names[k])->required();
    return s;
  };
  auto* qint = sub("qint", "Quantum integer [n]", {"n"});
  auto* delta = sub("delta", "Loop value of the n-strand projector", {"n"});
  auto* theta = sub("theta", "Theta net", {"a", "b", "c"});
  auto* tet = sub("tet", "Tetrahedral net with vertices (a,c,i) (b,d,i) (a,b,j) (c,d,j)", {"a", "b", "i", "c", "d", "j"});
  auto* sixj_cmd = sub("sixj", "Unnormalized recoupling coefficient", {"a", "b", "i", "c", "d", "k"});
  auto* fmat = sub("fmatrix", "Orthogonal recoupling matrix M[a,b,c,d] (needs --r)", {"a", "b", "c", "d"});
  auto* rphase = sub("rphase", "Braiding phases lambda_c^{ab} over admissible c", {"a", "b"});
  auto* basis = sub("basis", "Left-comb fusion basis", {"n", "ell", "t"});
  auto* compile = sub("compile", "Braid word to matrix on the fusion basis (needs --word)", {"n", "ell", "t"});
  auto* bracket = app.add_subcommand("bracket", "Bracket of the braid closure (needs --word)");
  std::string suite;
  auto* check = app.add_subcommand("check", "Verification suite");
  check->add_option("suite", suite, "orthogonality|braid|pentagon|hexagon|oracle")
      ->required()
      ->check(CLI::IsMember({"orthogonality", "braid", "pentagon", "hexagon", "oracle"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  Emitter em(out, o.csv);
  try {
    if (o.r.has_value() == o.generic) throw InputError("pass exactly one of --r <int> or --generic");
    if (o.r) (void)root(o);  // validates r and tol
    auto v = [&](const std::string& name) -> const std::vector<int>& { return ints[name]; };
    if (qint->parsed()) {
      const int n = v("qint")[0];
      scalar_command(em, o, "qint", {n}, [&] { return RationalFunction(quantum_int(n)); },
                     [&](const RootParams& p) { return std::complex<double>(quantum_int_at(n, p), 0.0); });
    } else if (delta->parsed()) {
      const int n = v("delta")[0];
      if (n < 0) throw InputError("delta needs n >= 0");
      scalar_command(em, o, "delta", {n}, [&] { return RationalFunction(delta_n(n)); },
                     [&](const RootParams& p) { return std::complex<double>(delta_n_at(n, p), 0.0); });
    } else if (theta->parsed()) {
      const auto& l = v("theta");
      scalar_command(em, o, "theta", l, [&] { return theta_closed(l[0], l[1], l[2]); },
                     [&](const RootParams& p) { return theta_at(l[0], l[1], l[2], p); });
    } else if (tet->parsed()) {
      const auto& l = v("tet");
      scalar_command(em, o, "tet", l, [&] { return tet_closed(l[0], l[1], l[2], l[3], l[4], l[5]); },
                     [&](const RootParams& p) { return tet_at(l[0], l[1], l[2], l[3], l[4], l[5], p); });
    } else if (sixj_cmd->parsed()) {
      const auto& l = v("sixj");
      scalar_command(em, o, "sixj", l, [&] { return sixj(l[0], l[1], l[2], l[3], l[4], l[5]); },
                     [&](const RootParams& p) { return sixj_at(l[0], l[1], l[2], l[3], l[4], l[5], p); });
    } else if (fmat->parsed()) {
      require_numeric(o, "fmatrix");
      const auto& l = v("fmatrix");
      emit_fmatrix(em, fmatrix(l[0], l[1], l[2], l[3], root(o)));
    } else if (rphase->parsed()) {
      const auto& l = v("rphase");
      emit_rphase(em, o, l[0], l[1]);
    } else if (basis->parsed()) {
      const auto& l = v("basis");
      emit_basis(em, make_basis(o, l[0], l[1], l[2]));
    } else if (compile->parsed()) {
      const auto& l = v("compile");
      emit_compile(em, o, l[0], l[1], l[2]);
    } else if (bracket->parsed()) {
      emit_bracket(em, o);
    } else if (check->parsed()) {
      return run_check(em, o, suite);
    }
  } catch (const InputError& e) {
    err << "tlrc: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "tlrc: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "tlrc: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace tlrc
