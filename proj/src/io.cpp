#include "qfarey/io.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "qfarey/error.hpp"

namespace qfarey {

namespace {

std::string weight_label(std::int64_t w) {
  if (w == 0) return "1";
  if (w == 1) return "q";
  return "q^" + std::to_string(w);
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

[[noreturn]] void bad_json(const std::string& what) { throw Error(ErrorKind::ParseError, "malformed JSON: " + what); }

}  // namespace

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, c.get_str()}));
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_array()) bad_json("expected a term list");
  std::vector<std::pair<std::int64_t, BigInt>> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_string()) bad_json("bad term");
    BigInt c;
    if (c.set_str(t[1].get<std::string>(), 10) != 0) bad_json("bad coefficient");
    terms.emplace_back(t[0].get<std::int64_t>(), std::move(c));
  }
  return LaurentPoly::from_terms(terms);
}

Json to_json(const QRatFunc& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

QRatFunc qrat_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) bad_json("expected {num, den}");
  return QRatFunc(laurent_from_json(j["num"]), laurent_from_json(j["den"]));
}

Json to_json(const Surd& s) { return Json{{"R", to_json(s.r)}, {"P", to_json(s.p)}, {"S", to_json(s.s)}}; }

Surd surd_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("R") || !j.contains("P") || !j.contains("S")) bad_json("expected {R, P, S}");
  return {laurent_from_json(j["R"]), laurent_from_json(j["P"]), laurent_from_json(j["S"])};
}

Json to_json(const PowerSeries& s) {
  Json out = Json::array();
  for (const auto& c : s.coeffs) out.push_back(c.get_str());
  return out;
}

Json to_json(const FunctionalPair& f) { return Json{{"P1", to_json(f.at_p1)}, {"P2", to_json(f.at_p2)}}; }

Json to_json(const TwistWord& w) {
  Json out = Json::array();
  for (const auto& [t, e] : w.letters) out.push_back(Json::array({t == Twist::Sigma1 ? "sigma1" : "sigma2", e}));
  return out;
}

Json to_json(const WeightedTriangle& t) {
  return Json{{"level", t.level},
              {"alpha", t.alpha.to_string()},
              {"beta", t.beta.to_string()},
              {"gamma", t.gamma.to_string()},
              {"weights",
               {{"beta_alpha", t.w_beta_alpha}, {"gamma_alpha", t.w_gamma_alpha}, {"beta_gamma", t.w_beta_gamma}}}};
}

Json to_json(const std::vector<WeightedTriangle>& triangles) {
  Json out = Json::array();
  for (const auto& t : triangles) out.push_back(to_json(t));
  return out;
}

std::string render_svg(const std::vector<WeightedTriangle>& triangles) {
  constexpr double kMargin = 40.0;
  constexpr double kSpan = 880.0;
  constexpr double kBaseline = kMargin + kSpan / 2 + 20.0;
  constexpr double kWidth = kSpan + 2 * kMargin;
  constexpr double kHeight = kBaseline + 40.0;

  // Positions in [0, 1] along the baseline, keyed by "r/s".
  std::map<std::string, double> pos;
  std::vector<std::string> vertex_order;
  auto place = [&](const Rational& v, double x) {
    if (pos.emplace(v.to_string(), x).second) vertex_order.push_back(v.to_string());
  };

  struct Edge {
    std::string a, b;
    std::int64_t w;
  };
  std::vector<Edge> edges;
  std::map<std::pair<std::string, std::string>, std::size_t> seen;
  auto add_edge = [&](const Rational& x, const Rational& y, std::int64_t w) {
    std::string a = x.to_string();
    std::string b = y.to_string();
    if (pos.at(b) < pos.at(a)) std::swap(a, b);
    if (seen.emplace(std::make_pair(a, b), edges.size()).second) edges.push_back({a, b, w});
  };

  for (const auto& t : triangles) {
    if (t.level == 0) {
      place(t.beta, 0.0);
      place(t.gamma, 1.0);
    }
    place(t.alpha, (pos.at(t.beta.to_string()) + pos.at(t.gamma.to_string())) / 2);
    add_edge(t.beta, t.gamma, t.w_beta_gamma);
    add_edge(t.beta, t.alpha, t.w_beta_alpha);
    add_edge(t.gamma, t.alpha, t.w_gamma_alpha);
  }

  auto px = [&](const std::string& v) { return kMargin + pos.at(v) * kSpan; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed(kWidth) << "\" height=\""
     << fixed(kHeight) << "\" viewBox=\"0 0 " << fixed(kWidth) << " " << fixed(kHeight) << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<line x1=\"" << fixed(kMargin) << "\" y1=\"" << fixed(kBaseline) << "\" x2=\"" << fixed(kMargin + kSpan)
     << "\" y2=\"" << fixed(kBaseline) << "\" stroke=\"black\" stroke-width=\"1\"/>\n"
     << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1\">\n";
  for (const auto& e : edges) {
    const double x1 = px(e.a);
    const double x2 = px(e.b);
    const double r = (x2 - x1) / 2;
    os << "<path d=\"M " << fixed(x1) << " " << fixed(kBaseline) << " A " << fixed(r) << " " << fixed(r) << " 0 0 1 "
       << fixed(x2) << " " << fixed(kBaseline) << "\"/>\n";
  }
  os << "</g>\n<g font-family=\"serif\" text-anchor=\"middle\" fill=\"black\">\n";
  for (const auto& e : edges) {
    const double x1 = px(e.a);
    const double x2 = px(e.b);
    const double r = (x2 - x1) / 2;
    const double size = std::clamp(r / 3, 6.0, 14.0);
    os << "<text x=\"" << fixed((x1 + x2) / 2) << "\" y=\"" << fixed(kBaseline - r - 2) << "\" font-size=\""
       << fixed(size) << "\">" << weight_label(e.w) << "</text>\n";
  }
  for (const auto& v : vertex_order) {
    os << "<text x=\"" << fixed(px(v)) << "\" y=\"" << fixed(kBaseline + 16) << "\" font-size=\"10.00\">" << v
       << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace qfarey
