#include "qfarey/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>

#include "qfarey/error.hpp"
#include "qfarey/farey.hpp"
#include "qfarey/io.hpp"
#include "qfarey/knots.hpp"
#include "qfarey/qcore.hpp"
#include "qfarey/quadirr.hpp"
#include "qfarey/spherical.hpp"
#include "qfarey/verify.hpp"

namespace qfarey {

namespace {

struct Options {
  std::string fraction;
  std::string flavor = "flat";
  std::string format = "json";
  std::string form = "surd";
  std::string period;
  std::string alpha;
  std::string suite;
  std::string out_file;
  int depth = 3;
  int order = 12;
  int max_periods = 64;
  bool abs = false;
};

// A malformed fraction or list is a usage error, not a domain error.
struct UsageError {
  std::string message;
};

Rational parse_fraction(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw UsageError{e.what()};
    throw;
  }
}

std::vector<std::int64_t> parse_period(const std::string& text) {
  try {
    return parse_int_list(text);
  } catch (const Error& e) {
    throw UsageError{e.what()};
  }
}

Flavor flavor_of(const Options& o) { return o.flavor == "sharp" ? Flavor::Sharp : Flavor::Flat; }

Json int_list(std::span<const std::int64_t> c) { return Json(std::vector<std::int64_t>(c.begin(), c.end())); }

Json coefficient_list(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.dense()) out.push_back(c.get_str());
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string cmd_cf(const Options& o) {
  const Rational x = parse_fraction(o.fraction);
  return dump(Json{{"regular", int_list(to_regular_even(x).terms())}, {"negative", int_list(to_negative(x).terms())}});
}

std::string cmd_qrat(const Options& o) { return dump(to_json(qrat(parse_fraction(o.fraction), flavor_of(o)))); }

std::string cmd_farey(const Options& o) {
  const Rational x = parse_fraction(o.fraction);
  const NegativeCF alpha = to_negative(x);
  const FareyDecomposition d = parents(alpha);
  const Flavor f = flavor_of(o);
  const QRatFunc sum = f == Flavor::Sharp
                           ? qfarey_sum_sharp(qrat_sharp(d.beta), qrat_sharp(d.gamma), d.last_entry)
                           : qfarey_sum_flat(qrat_flat(d.beta), qrat_flat(d.gamma), d.run_exponent);
  const QRatFunc direct = qrat(alpha, f);
  Json j{{"alpha", x.to_string()}, {"negative", int_list(alpha.terms())}};
  j["beta"] = Json{{"value", evaluate(d.beta).to_string()}, {"negative", int_list(d.beta.terms())}};
  j["gamma"] = Json{{"value", evaluate(d.gamma).to_string()}, {"negative", int_list(d.gamma.terms())}};
  j["run_exponent"] = d.run_exponent;
  j["last_entry"] = d.last_entry;
  j["flavor"] = o.flavor;
  j["sum"] = to_json(sum);
  j["agrees"] = sum == direct;
  return dump(j);
}

std::string cmd_tess(const Options& o) {
  std::vector<WeightedTriangle> triangles;
  Json j;
  if (!o.alpha.empty()) {
    const Rational a = parse_fraction(o.alpha);
    triangles = triangulation(a, flavor_of(o));
    j["alpha"] = a.to_string();
  } else {
    triangles = tessellation(o.depth, flavor_of(o));
    j["depth"] = o.depth;
  }
  if (o.format == "svg") return render_svg(triangles);
  j["flavor"] = o.flavor;
  j["triangles"] = to_json(triangles);
  return dump(j);
}

std::string cmd_jones(const Options& o) {
  const Rational x = parse_fraction(o.fraction);
  const NegativeCF alpha = to_negative(x);
  const JonesPoly jp = jones_closed(alpha);
  const LaurentPoly p = o.abs ? jones_abs(alpha) : jp.poly;
  return dump(Json{{"alpha", x.to_string()},
                   {"negative", int_list(alpha.terms())},
                   {"abs", o.abs},
                   {"poly", to_json(p)},
                   {"coefficients", coefficient_list(p)},
                   {"degree", jp.degree}});
}

std::string cmd_occ_hom(const Options& o) {
  const NegativeCF alpha = to_negative(parse_fraction(o.fraction));
  const TwistWord w = twist_word_negative(alpha);
  return dump(Json{{"occ", to_json(occ(alpha))}, {"hom", to_json(hom(alpha))}, {"word", to_json(w)}});
}

std::string cmd_quad(const Options& o) {
  const PeriodicNegCF p(parse_period(o.period));
  if (o.form == "series") return dump(to_json(quad_series(p, o.order)));
  if (o.form == "occ") return dump(to_json(quad_occ_form(p)));
  if (o.form == "hom") return dump(to_json(quad_hom_form(p)));
  return dump(to_json(quad_surd(p)));
}

std::string cmd_series(const Options& o) {
  if (o.fraction.empty() == o.period.empty()) throw UsageError{"series takes either <r>/<s> or --period"};
  if (!o.period.empty()) {
    return dump(to_json(convergent_series(PeriodicNegCF(parse_period(o.period)), o.order, o.max_periods)));
  }
  return dump(to_json(series_expand(qrat(parse_fraction(o.fraction), flavor_of(o)), o.order)));
}

std::pair<std::string, bool> cmd_verify(const Options& o) {
  const std::vector<SuiteReport> reports = run_suite(o.suite);
  const bool passed = std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.passed; });
  if (reports.size() == 1) return {dump(reports.front().to_json()), passed};
  Json j{{"passed", passed}, {"suites", Json::array()}};
  for (const auto& r : reports) j["suites"].push_back(r.to_json());
  return {dump(j), passed};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact q-deformed rationals, Farey sums, Jones polynomials and quadratic irrationals", "qfarey"};
  app.require_subcommand(1, 1);
  app.add_option("--out", o.out_file, "write the result to FILE instead of stdout");
  app.fallthrough();

  const CLI::IsMember flavors({"sharp", "flat"});

  auto* cf = app.add_subcommand("cf", "regular and negative continued fractions");
  cf->add_option("fraction", o.fraction, "<r>/<s>")->required();

  auto* qr = app.add_subcommand("qrat", "q-rational");
  qr->add_option("fraction", o.fraction, "<r>/<s>")->required();
  qr->add_option("--flavor", o.flavor)->check(flavors);

  auto* fa = app.add_subcommand("farey", "Farey parents and the q-deformed Farey sum");
  fa->add_option("fraction", o.fraction, "<r>/<s>")->required();
  fa->add_option("--flavor", o.flavor)->check(flavors);

  auto* te = app.add_subcommand("tess", "weighted tessellation or triangulation");
  auto* depth = te->add_option("--depth", o.depth)->check(CLI::Range(0, 20));
  te->add_option("--alpha", o.alpha, "triangulation of <r>/<s> instead of a tessellation")->excludes(depth);
  te->add_option("--flavor", o.flavor)->check(flavors);
  te->add_option("--format", o.format)->check(CLI::IsMember({"json", "svg"}));

  auto* jo = app.add_subcommand("jones", "Jones polynomial of a rational knot");
  jo->add_option("fraction", o.fraction, "<r>/<s>")->required();
  jo->add_flag("--abs", o.abs, "print |V| = R_flat instead of J");

  auto* oh = app.add_subcommand("occ-hom", "occ_q and hom_q of X_alpha");
  oh->add_option("fraction", o.fraction, "<r>/<s>")->required();

  auto* qu = app.add_subcommand("quad", "q-deformed quadratic irrational");
  qu->add_option("--period", o.period, "c1,c2,...")->required();
  qu->add_option("--order", o.order)->check(CLI::Range(0, 100000));
  qu->add_option("--form", o.form)->check(CLI::IsMember({"surd", "occ", "hom", "series"}));

  auto* se = app.add_subcommand("series", "power series at q = 0");
  se->add_option("fraction", o.fraction, "<r>/<s>");
  se->add_option("--period", o.period, "c1,c2,...");
  se->add_option("--flavor", o.flavor)->check(flavors);
  se->add_option("--order", o.order)->check(CLI::Range(0, 100000));
  se->add_option("--max-periods", o.max_periods)->check(CLI::Range(2, 100000));

  auto* ve = app.add_subcommand("verify", "run a verification suite");
  ve->add_option("suite", o.suite)
      ->required()
      ->check(CLI::IsMember({"thm2_5", "farey_sums", "jones", "corollary5_4", "quad", "all"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help() << kGrammar;
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << kGrammar;
    return 2;
  }

  std::string text;
  int status = 0;
  try {
    if (cf->parsed()) text = cmd_cf(o);
    if (qr->parsed()) text = cmd_qrat(o);
    if (fa->parsed()) text = cmd_farey(o);
    if (te->parsed()) text = cmd_tess(o);
    if (jo->parsed()) text = cmd_jones(o);
    if (oh->parsed()) text = cmd_occ_hom(o);
    if (qu->parsed()) text = cmd_quad(o);
    if (se->parsed()) text = cmd_series(o);
    if (ve->parsed()) {
      bool passed = false;
      std::tie(text, passed) = cmd_verify(o);
      status = passed ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n" << kGrammar;
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  }

  if (o.out_file.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out_file, std::ios::binary);
    f << text;
    if (!f) {
      err << "error: cannot write " << o.out_file << "\n";
      return 1;
    }
  }
  return status;
}

}  // namespace qfarey
