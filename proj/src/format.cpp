#include "qmat/format.hpp"

#include <regex>
#include <sstream>
#include <stdexcept>

namespace qmat {

namespace {

std::string half_integer(int k) {
  // k / 2 as "p" or "p/2"
  if (k % 2 == 0) return std::to_string(k / 2);
  return std::to_string(k) + "/2";
}

// Scalar n * v^k without sign: "", "2", "q^-1", "3q^{1/2}".
std::string scalar_text(const BigInt& magnitude, int k, bool latex) {
  std::string out = magnitude == 1 ? "" : magnitude.str();
  out += latex ? q_power_latex(k) : q_power_text(k);
  return out;
}

std::string laurent_text(const QCoeff& x, bool latex) {
  if (x.is_zero()) return "0";
  std::string out;
  const auto terms = x.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [k, c] = *it;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string s = scalar_text(abs(c), k, latex);
    out += s.empty() ? "1" : s;
  }
  return out;
}

std::string element_text(const Element& x, bool latex) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : x.terms()) {
    const std::string mono = latex ? monomial_latex(m) : monomial_text(m);
    bool negative = false;
    std::string scalar;
    if (c.is_monomial()) {
      const auto& [k, n] = c.terms().front();
      negative = n < 0;
      scalar = scalar_text(abs(n), k, latex);
    } else {
      scalar = latex ? "\\left(" + laurent_text(c, true) + "\\right)" : "(" + laurent_text(c, false) + ")";
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (scalar.empty() && mono.empty()) {
      out += "1";
    } else if (scalar.empty() || mono.empty()) {
      out += scalar + mono;
    } else {
      out += scalar + (latex ? "" : " ") + mono;
    }
  }
  return out;
}

std::string fpoly_text(const FPoly& p, bool latex) {
  if (p.is_zero()) return "0";
  auto power = [latex](char var, int e) {
    if (e == 0) return std::string();
    std::string s(1, var);
    if (e != 1) s += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
    return s;
  };
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const BigInt mag = abs(c);
    const std::string xs = power('x', e.first);
    const std::string ys = power('y', e.second);
    std::string term = (mag != 1 || (xs.empty() && ys.empty())) ? mag.str() : "";
    term += xs;
    if (!xs.empty() && !ys.empty() && !latex) term += " ";
    term += ys;
    out += term;
  }
  return out;
}

BigInt parse_integer(const Json& j) {
  static const std::regex kInteger("-?[0-9]+");
  if (!j.is_string()) throw std::invalid_argument("coefficient must be a decimal string");
  const auto& s = j.get_ref<const std::string&>();
  if (!std::regex_match(s, kInteger)) throw std::invalid_argument("malformed integer \"" + s + "\"");
  return BigInt(s);
}

int parse_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw std::invalid_argument(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

std::string q_power_text(int k) {
  if (k == 0) return "";
  if (k == 2) return "q";
  if (k % 2 == 0) return "q^" + std::to_string(k / 2);
  return "q^{" + half_integer(k) + "}";
}

std::string q_power_latex(int k) {
  if (k == 0) return "";
  if (k == 2) return "q";
  if (k % 2 == 0) return "q^{" + std::to_string(k / 2) + "}";
  const int mag = k < 0 ? -k : k;
  return std::string("q^{") + (k < 0 ? "-" : "") + "\\frac{" + std::to_string(mag) + "}{2}}";
}

std::string to_text_q(const QCoeff& x) { return laurent_text(x, false); }
std::string to_latex(const QCoeff& x) { return laurent_text(x, true); }

std::string monomial_text(const Monomial& m) {
  // a powered factor is followed by a space so "a^2 bc" stays unambiguous
  std::string out;
  bool after_power = false;
  for (int g = 0; g < 4; ++g) {
    const int e = m.exp[g];
    if (e == 0) continue;
    if (after_power) out += ' ';
    out += gen_name(static_cast<Gen>(g));
    after_power = e != 1;
    if (after_power) out += "^" + std::to_string(e);
  }
  return out;
}

std::string monomial_latex(const Monomial& m) {
  std::string out;
  for (int g = 0; g < 4; ++g) {
    const int e = m.exp[g];
    if (e == 0) continue;
    out += gen_name(static_cast<Gen>(g));
    if (e != 1) out += "^{" + std::to_string(e) + "}";
  }
  return out;
}

std::string to_text(const Element& x) { return element_text(x, false); }
std::string to_latex(const Element& x) { return element_text(x, true); }

std::string to_text(const FPoly& p) { return fpoly_text(p, false); }
std::string to_latex(const FPoly& p) { return fpoly_text(p, true); }

std::string to_text(const CheckReport& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS " : "FAIL ") << r.name << "(";
  for (std::size_t i = 0; i < r.params.size(); ++i) os << (i ? "," : "") << r.params[i];
  os << ")";
  if (r.witness) {
    const auto& m = r.witness->monomial.exp;
    os << " [" << r.witness->relation << " | monomial (" << m[0] << "," << m[1] << "," << m[2] << "," << m[3]
       << ") | difference " << r.witness->difference << "]";
  }
  if (!r.note.empty()) os << "  # " << r.note;
  return os.str();
}

Json to_json(const QCoeff& x) {
  Json out = Json::array();
  const auto terms = x.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) out.push_back(Json::array({it->first, it->second.str()}));
  return out;
}

Json to_json(const Element& x) {
  Json terms = Json::array();
  for (const auto& [m, c] : x.terms()) {
    terms.push_back({{"m", m.exp}, {"c", to_json(c)}});
  }
  return {{"terms", std::move(terms)}};
}

Json to_json(const QMatrix2& x) {
  return {{"e11", to_json(x.e11)}, {"e12", to_json(x.e12)}, {"e21", to_json(x.e21)}, {"e22", to_json(x.e22)}};
}

Json to_json(const FPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e.first, e.second, c.str()}));
  return {{"terms", std::move(terms)}};
}

Json to_json(const Witness& w) {
  return {{"relation", w.relation}, {"monomial", w.monomial.exp}, {"difference", w.difference}};
}

Json to_json(const CheckReport& r) {
  return {{"name", r.name},
          {"params", r.params},
          {"passed", r.passed},
          {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)},
          {"note", r.note}};
}

Json to_json(const std::vector<CheckReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

QCoeff qcoeff_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("QCoeff JSON must be an array of [exponent, \"coefficient\"]");
  QCoeff out;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw std::invalid_argument("QCoeff term must be a pair");
    out += QCoeff::v_power(parse_int(term[0], "v-exponent"), parse_integer(term[1]));
  }
  return out;
}

Element element_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw std::invalid_argument("element JSON must be an object with a \"terms\" array");
  }
  std::vector<Element::Term> terms;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("m") || !t.contains("c")) {
      throw std::invalid_argument("element term must have \"m\" and \"c\"");
    }
    const Json& mj = t["m"];
    if (!mj.is_array() || mj.size() != 4) throw std::invalid_argument("monomial must be [i,j,k,l]");
    Monomial m;
    for (int g = 0; g < 4; ++g) {
      m.exp[g] = parse_int(mj[g], "monomial exponent");
      if (m.exp[g] < 0) throw std::invalid_argument("monomial exponents must be non-negative");
    }
    terms.emplace_back(m, qcoeff_from_json(t["c"]));
  }
  return Element::from_terms(std::move(terms));
}

QMatrix2 matrix_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("matrix JSON must be an object");
  for (const char* key : {"e11", "e12", "e21", "e22"}) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("matrix JSON missing \"") + key + "\"");
  }
  return {element_from_json(j["e11"]), element_from_json(j["e12"]), element_from_json(j["e21"]),
          element_from_json(j["e22"])};
}

}  // namespace qmat
