#include "ncrs/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ncrs/automata.hpp"
#include "ncrs/enumeration.hpp"
#include "ncrs/expr.hpp"
#include "ncrs/json_io.hpp"
#include "ncrs/magnus.hpp"

namespace ncrs {

namespace {

struct Usage : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Where a command reads its series from: an expression or a JSON file.
struct Source {
  std::string expr;
  std::string json;
};

struct Context {
  std::string field = "q";
  std::string vars = "X,Y";
  std::istream* in;
  std::ostream* out;
  std::ostream* err;

  Field f() const { return Field::from_flag(field); }
  Alphabet a() const { return Alphabet::parse(vars); }

  std::string read_all(std::istream& s) const {
    std::ostringstream b;
    b << s.rdbuf();
    return b.str();
  }

  LinearPresentation load(const Source& src) const {
    if (!src.json.empty()) {
      if (src.json == "-") return presentation_from_json(read_all(*in));
      std::ifstream file(src.json);
      if (!file) throw Usage("cannot open '" + src.json + "'");
      return presentation_from_json(read_all(file));
    }
    if (src.expr.empty()) throw Usage("an expression (-e) or a JSON file (--json) is required");
    std::string text = src.expr == "-" ? read_all(*in) : src.expr;
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    try {
      return eval(text, a(), f());
    } catch (const SyntaxError& e) {
      throw Usage(std::string(e.what()) + "\n  " + text + "\n  " + std::string(e.offset(), ' ') + "^");
    }
  }
};

void add_source(CLI::App* sub, Source& s, const std::string& suffix = "") {
  auto names = suffix.empty() ? std::string("-e,--expr") : "--expr" + suffix;
  auto* e = sub->add_option(names, s.expr, "rational expression ('-' reads stdin)");
  auto* j = sub->add_option("--json" + suffix, s.json, "presentation in JSON ('-' reads stdin)");
  e->excludes(j);
}

std::string to_text(const LinearPresentation& A) {
  std::ostringstream o;
  o << "field " << A.field().flag() << "\ndim " << A.dim() << "\ninitial (" << to_string(A.initial()) << ")\nfinal ("
    << to_string(A.final()) << ")\n";
  for (std::size_t x = 0; x < A.letters(); ++x) {
    o << "M(" << A.alphabet().name(x) << ") = [";
    for (std::size_t r = 0; r < A.dim(); ++r) o << (r ? ", [" : "[") << to_string(A.matrix(x).row(r)) << "]";
    o << "]\n";
  }
  return o.str();
}

std::string automaton_text(const FiniteAutomaton& G, const Alphabet& a) {
  std::ostringstream o;
  o << "states " << G.states() << "\ninitial " << G.initial << "\n";
  for (std::size_t s = 0; s < G.states(); ++s) {
    o << s;
    if (s < G.labels.size()) o << " " << G.labels[s];
    o << " output " << G.output[s].to_string() << ":";
    for (std::size_t x = 0; x < G.letters; ++x) o << " " << a.name(x) << "->" << G.delta[s][x];
    o << "\n";
  }
  return o.str();
}

QPoly family_poly(const std::string& family, std::size_t k, std::size_t n) {
  if (family == "E") return k == 2 ? fast_E(n) : E_n_generic(k, n);
  if (family == "F") return k == 2 ? fast_F(n) : F_n_generic(k, n);
  if (k != 2) throw Usage("family " + family + " is only available for k = 2");
  if (family == "Etilde") return fast_Etilde(n);
  throw Usage("unknown family '" + family + "'");
}

int dispatch(const std::vector<std::string>& args, Context& ctx) {
  CLI::App app{"Rational series in non-commuting variables over Q or F_p", "ncrs"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("-f,--field", ctx.field, "q (rationals) or f<p>")->capture_default_str();
  app.add_option("-v,--vars", ctx.vars, "comma separated letters")->capture_default_str();

  std::ostream& out = *ctx.out;
  std::function<void()> action;

  Source src, src2;
  std::size_t jet_n = 3;
  std::string word_text, format = "json";

  auto* c_eval = app.add_subcommand("eval", "print the jet of an expression");
  add_source(c_eval, src);
  c_eval->add_option("--jet", jet_n, "maximal degree")->capture_default_str();
  c_eval->callback([&] {
    action = [&] {
      auto A = ctx.load(src);
      out << jet(A, jet_n).to_string(A.alphabet()) << "\n";
    };
  });

  auto* c_coeff = app.add_subcommand("coeff", "coefficient of one word");
  add_source(c_coeff, src);
  c_coeff->add_option("--word", word_text, "word, e.g. XYX")->required();
  c_coeff->callback([&] {
    action = [&] {
      auto A = ctx.load(src);
      out << coeff(A, Word::parse(word_text, A.alphabet())).to_string() << "\n";
    };
  });

  auto* c_cx = app.add_subcommand("complexity", "dimension of the recursive closure");
  add_source(c_cx, src);
  c_cx->callback([&] { action = [&] { out << complexity(ctx.load(src)) << "\n"; }; });

  auto* c_norm = app.add_subcommand("norm", "norm of a series");
  add_source(c_norm, src);
  c_norm->callback([&] { action = [&] { out << norm(ctx.load(src)) << "\n"; }; });

  auto* c_sat = app.add_subcommand("satlevel", "saturation level");
  add_source(c_sat, src);
  c_sat->callback([&] { action = [&] { out << saturation_level(ctx.load(src)) << "\n"; }; });

  auto* c_eq = app.add_subcommand("eq", "equality of two series");
  add_source(c_eq, src);
  add_source(c_eq, src2, "2");
  c_eq->callback([&] { action = [&] { out << (equals(ctx.load(src), ctx.load(src2)) ? "true" : "false") << "\n"; }; });

  auto* c_shift = app.add_subcommand("shift", "right shift by a word");
  add_source(c_shift, src);
  c_shift->add_option("--word", word_text, "word")->required();
  c_shift->add_option("--jet", jet_n, "maximal degree")->capture_default_str();
  std::string shift_format = "jet";
  c_shift->add_option("--format", shift_format, "jet or json")->check(CLI::IsMember({"jet", "json"}))->capture_default_str();
  c_shift->callback([&] {
    action = [&] {
      auto A = ctx.load(src);
      auto S = minimize(shift(A, Word::parse(word_text, A.alphabet())));
      out << (shift_format == "json" ? to_json(S) : jet(S, jet_n).to_string(S.alphabet())) << "\n";
    };
  });

  auto* c_show = app.add_subcommand("show", "print a presentation");
  add_source(c_show, src);
  c_show->add_option("--format", format, "json, normal or text")
      ->check(CLI::IsMember({"json", "normal", "text"}))
      ->capture_default_str();
  c_show->callback([&] {
    action = [&] {
      auto A = ctx.load(src);
      if (format == "json") out << to_json(A) << "\n";
      else if (format == "normal") out << to_json(normalize(A)) << "\n";
      else out << to_text(A);
    };
  });

  std::string family;
  std::size_t k = 2, n = 0;
  long long at = 0;
  auto* c_enum = app.add_subcommand("enum", "counting polynomials");
  c_enum->add_option("--family", family, "E, F, Etilde or P")->required()->check(CLI::IsMember({"E", "F", "Etilde", "P"}));
  c_enum->add_option("--k", k, "number of letters")->capture_default_str();
  c_enum->add_option("--n", n, "complexity or norm")->required();
  auto* at_opt = c_enum->add_option("--at", at, "evaluate at q");
  c_enum->callback([&] {
    action = [&] {
      if (family == "P") {
        if (k != 2) throw Usage("family P is only available for k = 2");
        auto P = P_n(n);
        out << (*at_opt ? P.at_q(mpz_class(std::to_string(at))).to_string("s") : P.to_string()) << "\n";
        return;
      }
      auto p = family_poly(family, k, n);
      out << (*at_opt ? p.evaluate(mpz_class(std::to_string(at))).get_str() : p.to_string()) << "\n";
    };
  });

  std::uint32_t q = 2;
  bool units = false;
  int jobs = 0;
  auto* c_census = app.add_subcommand("census", "brute-force count over F_q");
  c_census->add_option("--q", q, "prime")->capture_default_str();
  c_census->add_option("--k", k, "number of letters")->capture_default_str();
  c_census->add_option("--n", n, "maximal complexity or norm")->required();
  c_census->add_flag("--units", units, "count special units by norm");
  c_census->add_option("--jobs", jobs, "threads (1 = serial)");
  c_census->callback([&] {
    action = [&] {
      Field::prime(q);  // validates
#ifdef _OPENMP
      if (jobs > 1) omp_set_num_threads(jobs);
#endif
      auto r = jobs == 1 ? census_serial(q, k, n, units) : census(q, k, n, units);
      out << (units ? "norm count F_n(q)" : "complexity count E_n(q)") << "\n";
      for (std::size_t i = 0; i <= n; ++i) {
        auto it = r.counts.find(i);
        auto poly = family_poly(units ? "F" : "E", k, i);
        out << i << " " << (it == r.counts.end() ? 0 : it->second) << " " << poly.evaluate(mpz_class(q)).get_str() << "\n";
      }
    };
  });

  std::string gword;
  std::size_t lengths = 0;
  auto* c_magnus = app.add_subcommand("magnus", "Magnus representation of free-group words");
  auto* w_opt = c_magnus->add_option("--word", gword, "e.g. g1*g2^-1*g1^3");
  auto* l_opt = c_magnus->add_option("--lengths", lengths, "print the number of words of each norm up to L");
  c_magnus->add_option("--k", k, "rank of the free group")->capture_default_str();
  w_opt->excludes(l_opt);
  c_magnus->callback([&] {
    action = [&] {
      if (*l_opt) {
        auto s = length_series(k, lengths);
        for (std::size_t l = 0; l < s.size(); ++l) out << l << " " << s[l].get_str() << "\n";
        return;
      }
      if (!*w_opt) throw Usage("magnus needs --word or --lengths");
      auto g = FreeGroupWord::parse(gword);
      std::size_t rank = k;
      for (const auto& [gen, e] : g.syllables()) rank = std::max(rank, gen);
      auto A = mu(g, ctx.f(), rank);
      out << "word " << g.to_string() << "\nnorm " << norm(A) << "\nformula " << magnus_norm_formula(g) << "\n";
    };
  });

  bool support = false, monoid = false;
  std::size_t cap = 100000;
  auto* c_auto = app.add_subcommand("automaton", "orbit, support or shift-monoid automaton");
  add_source(c_auto, src);
  std::string aformat = "text";
  c_auto->add_option("--format", aformat, "text or dot")->check(CLI::IsMember({"text", "dot"}))->capture_default_str();
  auto* s_flag = c_auto->add_flag("--support", support, "accept the support");
  auto* m_flag = c_auto->add_flag("--monoid", monoid, "Cayley graph of the shift monoid");
  s_flag->excludes(m_flag);
  c_auto->add_option("--cap", cap, "maximal number of states")->capture_default_str();
  c_auto->callback([&] {
    action = [&] {
      auto A = ctx.load(src);
      FiniteAutomaton G = support ? support_automaton(A, cap)
                          : monoid ? shift_monoid(minimize(A), cap).automaton(minimize(A))
                                   : automaton_for_sequence(A, cap);
      out << (aformat == "dot" ? G.to_dot(A.alphabet()) : automaton_text(G, A.alphabet()));
    };
  });

  std::size_t terms = 16;
  bool pointed = false;
  auto* c_seq = app.add_subcommand("autoseq", "first terms of s(n) = coeff(A, word of n in base k)");
  add_source(c_seq, src);
  c_seq->add_option("--n", terms, "number of terms")->capture_default_str();
  c_seq->add_flag("--pointed", pointed, "base-k digits 0..k-1 instead of bijective 1..k");
  c_seq->callback([&] {
    action = [&] {
      auto A = ctx.load(src);
      for (std::size_t i = 0; i < terms; ++i)
        out << (i ? " " : "") << autoseq_sample(A, i, pointed ? Numeration::Pointed : Numeration::Bijective).to_string();
      out << "\n";
    };
  });

  // CLI11 only takes one-letter short options; "-e2" is spelled --expr2.
  std::vector<std::string> rev;
  for (auto it = args.rbegin(); it != args.rend(); ++it) rev.push_back(*it == "-e2" ? "--expr2" : *it);
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, *ctx.err);
    return code == 0 ? 0 : 1;
  }
  if (action) action();
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Context ctx;
  ctx.in = &in;
  ctx.out = &out;
  ctx.err = &err;
  try {
    return dispatch(args, ctx);
  } catch (const MathError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace ncrs
