// Copyright 2026 The fglog Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fglog/io.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "fglog/errors.hpp"
#include "json.hpp"

namespace fglog {
namespace {

using nlohmann::json;

std::string slots_text(const HopfAlgebra &alg, int arity, std::uint64_t key) {
  std::string out;
  for (int s = 0; s < arity; ++s) {
    if (s > 0) out += "⊗";
    out += alg.monomial_name(detail::key_slot(key, arity, s));
  }
  return out;
}

// Text of one term with a non-negative coefficient.
std::string term_text(const HopfAlgebra &alg, int arity, std::uint64_t key, const Rational &a) {
  if (arity == 1) {
    if (key == 0) return a.str();
    const std::string m = alg.monomial_name(static_cast<int>(key));
    if (a.is_one()) return m;
    if (a.is_integer()) return a.str() + m;
    return a.str() + "·" + m;
  }
  const std::string body = slots_text(alg, arity, key);
  if (a.is_one()) return body;
  if (a.is_integer()) return a.str() + "(" + body + ")";
  return a.str() + "·(" + body + ")";
}

void append_signed(std::string &out, bool first, bool negative, const std::string &body) {
  if (first) {
    out += negative ? "-" + body : body;
  } else {
    out += negative ? " - " : " + ";
    out += body;
  }
}

std::string variable_monomial(const std::array<int, 3> &e, int nvars,
                              const std::vector<std::string> &names) {
  std::string out;
  for (int v = 0; v < nvars; ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += "·";
    out += names[v];
    if (e[v] > 1) out += "^" + std::to_string(e[v]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Inline element parser.

class ElementParser {
 public:
  ElementParser(const AlgebraPtr &alg, std::string_view text) : alg_(alg), s_(text) {}

  TensorElement run(int arity) {
    Val v = sum();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected input");
    if (v.elem) {
      if (arity != 0 && v.elem->arity() != arity) {
        throw ParseError("expected an element of arity " + std::to_string(arity) + ", got " +
                         std::to_string(v.elem->arity()));
      }
      return *v.elem;
    }
    return TensorElement::scalar(alg_, arity == 0 ? 1 : arity, v.scalar);
  }

 private:
  struct Val {
    Rational scalar;
    std::optional<TensorElement> elem;
  };

  [[noreturn]] void fail(const std::string &what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) +
                     "\"");
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool starts(std::string_view tok) {
    skip_space();
    return s_.substr(pos_, tok.size()) == tok;
  }
  bool eat(std::string_view tok) {
    if (!starts(tok)) return false;
    pos_ += tok.size();
    return true;
  }
  bool eat_tensor() { return eat("⊗") || eat("(x)"); }
  bool eat_minus() { return eat("-") || eat("−"); }
  bool eat_mul() { return eat("*") || eat("·"); }
  bool at_factor() {
    skip_space();
    if (pos_ >= s_.size()) return false;
    if (starts("(x)")) return false;
    const unsigned char c = static_cast<unsigned char>(s_[pos_]);
    return std::isdigit(c) || std::isalpha(c) || c == '_' || c == '(';
  }

  TensorElement as_elem(const Val &v, int arity) {
    if (v.elem) return *v.elem;
    return TensorElement::scalar(alg_, arity, v.scalar);
  }

  Val add(const Val &a, const Val &b, bool subtract) {
    if (!a.elem && !b.elem) return {subtract ? a.scalar - b.scalar : a.scalar + b.scalar, {}};
    const int arity = a.elem ? a.elem->arity() : b.elem->arity();
    TensorElement x = as_elem(a, arity);
    TensorElement y = as_elem(b, arity);
    if (x.arity() != y.arity()) fail("adding elements of different arity");
    return {Rational(0), subtract ? x - y : x + y};
  }

  Val multiply(const Val &a, const Val &b) {
    if (!a.elem && !b.elem) return {a.scalar * b.scalar, {}};
    if (!a.elem) return {Rational(0), a.scalar * *b.elem};
    if (!b.elem) return {Rational(0), b.scalar * *a.elem};
    if (a.elem->arity() != b.elem->arity()) fail("multiplying elements of different arity");
    return {Rational(0), *a.elem * *b.elem};
  }

  Val tensor(const Val &a, const Val &b) {
    const TensorElement x = as_elem(a, 1);
    const TensorElement y = as_elem(b, 1);
    const int p = x.arity();
    const int q = y.arity();
    if (p + q > 3) fail("tensor arity above 3");
    std::vector<int> left(p), right(q);
    for (int i = 0; i < p; ++i) left[i] = i;
    for (int i = 0; i < q; ++i) right[i] = p + i;
    return {Rational(0), embed(x, p + q, left) * embed(y, p + q, right)};
  }

  Val sum() {
    bool negative = eat_minus();
    if (!negative) eat("+");
    Val acc = tens();
    if (negative) acc = add({Rational(0), {}}, acc, true);
    for (;;) {
      if (eat("+")) {
        acc = add(acc, tens(), false);
      } else if (eat_minus()) {
        acc = add(acc, tens(), true);
      } else {
        return acc;
      }
    }
  }

  Val tens() {
    Val acc = prod();
    while (eat_tensor()) acc = tensor(acc, prod());
    return acc;
  }

  Val prod() {
    Val acc = power();
    for (;;) {
      if (eat_mul()) {
        acc = multiply(acc, power());
      } else if (at_factor()) {
        acc = multiply(acc, power());
      } else {
        return acc;
      }
    }
  }

  int exponent() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an exponent");
    if (pos_ - start > 6) fail("exponent too large");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  Val power() {
    skip_space();
    if (pos_ < s_.size() &&
        (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(s_.substr(start, pos_ - start));
      const auto g = alg_->generator_index(name);
      if (!g) fail("unknown generator '" + name + "'");
      int k = 1;
      if (eat("^")) k = exponent();
      Monomial m{std::vector<int>(alg_->generators().size(), 0)};
      m.exponents[*g] = k;
      return {Rational(0), TensorElement::from_monomials(alg_, 1, {{{m}, Rational(1)}})};
    }
    Val base = atom();
    if (eat("^")) {
      const int k = exponent();
      Val acc{Rational(1), {}};
      for (int i = 0; i < k; ++i) acc = multiply(acc, base);
      return acc;
    }
    return base;
  }

  Val atom() {
    skip_space();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (eat("(")) {
      Val v = sum();
      if (!eat(")")) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ + 1 < s_.size() && s_[pos_] == '/' &&
          std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      return {Rational::parse(s_.substr(start, pos_ - start)), {}};
    }
    fail("unexpected character");
  }

  AlgebraPtr alg_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// JSON helpers.

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Rational rational_from_json(const json &j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

// Generator names with optional "^k"; "1" is the unit.
Monomial monomial_from_json(const std::vector<Generator> &gens, const json &j) {
  Monomial m{std::vector<int>(gens.size(), 0)};
  if (!j.is_array()) throw ParseError("a monomial is a list, got " + j.dump());
  const bool numeric = !j.empty() && std::all_of(j.begin(), j.end(), [](const json &x) {
    return x.is_number_integer();
  });
  if (numeric) {
    if (j.size() != gens.size()) {
      throw ParseError("exponent vector " + j.dump() + " needs " + std::to_string(gens.size()) +
                       " entries");
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int e = j[i].get<int>();
      if (e < 0) throw ParseError("negative exponent in " + j.dump());
      m.exponents[i] = e;
    }
    return m;
  }
  for (const json &x : j) {
    if (!x.is_string()) throw ParseError("monomial entries are names, got " + x.dump());
    std::string name = x.get<std::string>();
    if (name == "1") continue;
    int k = 1;
    if (const auto caret = name.find('^'); caret != std::string::npos) {
      try {
        k = std::stoi(name.substr(caret + 1));
      } catch (const std::exception &) {
        throw ParseError("bad exponent in '" + name + "'");
      }
      if (k < 0) throw ParseError("negative exponent in '" + name + "'");
      name.resize(caret);
    }
    std::size_t g = 0;
    while (g < gens.size() && gens[g].name != name) ++g;
    if (g == gens.size()) throw ParseError("unknown generator '" + name + "'");
    m.exponents[g] += k;
  }
  return m;
}

json monomial_to_json(const std::vector<Generator> &gens, const Monomial &m) {
  json out = json::array();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (int k = 0; k < m.exponents[g]; ++k) out.push_back(gens[g].name);
  }
  if (out.empty()) out.push_back("1");
  return out;
}

TensorElement element_from(const AlgebraPtr &alg, const json &j, int arity) {
  if (j.is_string()) return parse_element(alg, j.get<std::string>(), arity);
  if (!j.is_array()) throw ParseError("an element is a list of terms, got " + j.dump());
  if (arity == 0) arity = j.empty() ? 1 : static_cast<int>(j[0].size()) - 1;
  if (arity < 1 || arity > 3) throw ParseError("element arity must be 1-3");
  std::vector<std::pair<std::vector<Monomial>, Rational>> terms;
  for (const json &t : j) {
    if (!t.is_array() || static_cast<int>(t.size()) != arity + 1) {
      throw ParseError("term " + t.dump() + " needs " + std::to_string(arity) +
                       " monomials and a coefficient");
    }
    std::vector<Monomial> slots;
    for (int s = 0; s < arity; ++s) slots.push_back(monomial_from_json(alg->generators(), t[s]));
    terms.emplace_back(std::move(slots), rational_from_json(t[arity]));
  }
  return TensorElement::from_monomials(alg, arity, terms);
}

json element_json(const TensorElement &e) {
  const HopfAlgebra &alg = *e.algebra();
  json out = json::array();
  for (const auto &t : e.terms()) {
    json term = json::array();
    for (int s = 0; s < e.arity(); ++s) {
      term.push_back(monomial_to_json(alg.generators(), alg.basis(e.slot(t, s))));
    }
    term.push_back(t.coef.fraction_str());
    out.push_back(std::move(term));
  }
  return out;
}

json series_json(const Series &s) {
  json out;
  out["variables"] = default_variable_names(s.nvars());
  out["order"] = s.order();
  out["arity"] = s.arity();
  out["polynomial"] = s.is_polynomial();
  auto profile = [&](const char *key, const std::vector<int> &prof) {
    if (std::none_of(prof.begin(), prof.end(), [](int e) { return e < kExact; })) return;
    json p = json::array();
    for (int e : prof) p.push_back(e >= kExact ? json("exact") : json(e));
    out[key] = std::move(p);
  };
  profile("exact_degrees", s.exact_profile());
  profile("stable_degrees", s.stable_profile());
  if (s.tail_exact() != kExact && s.tail_exact() != kUnknown) {
    out["tail_degree"] = s.tail_exact();
  }
  json terms = json::array();
  const SeriesLayout &L = s.layout();
  for (int i = 0; i < L.size(); ++i) {
    if (s.terms_at(i).empty()) continue;
    json e = json::array();
    for (int v = 0; v < s.nvars(); ++v) e.push_back(L.exps[i][v]);
    terms.push_back({{"exp", std::move(e)}, {"coeff", element_json(s.coefficient_at(i))}});
  }
  out["terms"] = std::move(terms);
  return out;
}

Series series_from(const AlgebraPtr &alg, const json &j) {
  if (!j.is_object()) throw ParseError("a series is a JSON object");
  if (!j.contains("order") || !j["order"].is_number_integer()) {
    throw ParseError("series needs an integer \"order\"");
  }
  const int order = j["order"].get<int>();
  if (order < 0) throw ParseError("series order must be non-negative");
  int nvars = 0;
  if (j.contains("variables")) {
    if (!j["variables"].is_array()) throw ParseError("\"variables\" must be a list");
    nvars = static_cast<int>(j["variables"].size());
  }
  const json terms = j.value("terms", json::array());
  if (!terms.is_array()) throw ParseError("\"terms\" must be a list");
  if (nvars == 0 && !terms.empty()) nvars = static_cast<int>(terms[0].value("exp", json::array()).size());
  if (nvars < 1 || nvars > 3) throw ParseError("a series has 1-3 variables");
  int arity = j.value("arity", 0);
  if (arity == 0) {
    for (const json &t : terms) {
      const json &c = t.at("coeff");
      if (c.is_array() && !c.empty()) {
        arity = static_cast<int>(c[0].size()) - 1;
        break;
      }
    }
  }
  if (arity == 0) arity = 1;
  if (arity < 1 || arity > 3) throw ParseError("series arity must be 1-3");
  Series s(alg, arity, nvars, order);
  for (const json &t : terms) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("coeff")) {
      throw ParseError("series term needs \"exp\" and \"coeff\"");
    }
    const json &e = t["exp"];
    if (!e.is_array() || static_cast<int>(e.size()) != nvars) {
      throw ParseError("exponent " + e.dump() + " needs " + std::to_string(nvars) + " entries");
    }
    std::vector<int> exps;
    int total = 0;
    for (const json &x : e) {
      if (!x.is_number_integer() || x.get<int>() < 0) {
        throw ParseError("bad exponent " + e.dump());
      }
      exps.push_back(x.get<int>());
      total += exps.back();
    }
    if (total > order) throw ParseError("term " + e.dump() + " exceeds the series order");
    TensorElement c = element_from(alg, t["coeff"], arity);
    c += s.coefficient(exps);
    s.set_coefficient(exps, c);
  }
  if (j.value("polynomial", false)) s.set_polynomial();
  if (j.contains("tail_degree")) s.set_tail_exact(j["tail_degree"].get<int>());
  for (const bool stable : {false, true}) {
    const char *key = stable ? "stable_degrees" : "exact_degrees";
    if (!j.contains(key)) continue;
    const json &p = j[key];
    if (!p.is_array() || static_cast<int>(p.size()) != order + 1) {
      throw ParseError(std::string("\"") + key + "\" needs order + 1 entries");
    }
    for (int k = 0; k <= order; ++k) {
      if (p[k].is_string() && p[k].get<std::string>() == "exact") continue;
      if (!p[k].is_number_integer()) throw ParseError("bad profile degree " + p[k].dump());
      if (stable) {
        s.restrict_stability(k, p[k].get<int>());
      } else {
        s.restrict_exactness(k, p[k].get<int>());
      }
    }
  }
  return s;
}

template <typename F>
auto guarded(F &&f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception &e) {
    throw ParseError(std::string("malformed JSON document: ") + e.what());
  }
}

}  // namespace

std::string format_element(const TensorElement &e) {
  if (e.is_zero()) return "0";
  const HopfAlgebra &alg = *e.algebra();
  std::string out;
  bool first = true;
  for (const auto &t : e.terms()) {
    const bool negative = t.coef.sign() < 0;
    append_signed(out, first, negative,
                  term_text(alg, e.arity(), t.key, negative ? -t.coef : t.coef));
    first = false;
  }
  return out;
}

std::vector<std::string> default_variable_names(int nvars) {
  if (nvars == 1) return {"x"};
  if (nvars == 2) return {"X", "Y"};
  return {"X", "Y", "Z"};
}

std::string format_series(const Series &s) {
  return format_series(s, default_variable_names(s.nvars()));
}

std::string format_series(const Series &s, const std::vector<std::string> &names) {
  if (static_cast<int>(names.size()) != s.nvars()) {
    throw ShapeMismatch("need one name per variable");
  }
  const SeriesLayout &L = s.layout();
  std::string out;
  bool first = true;
  for (int i = 0; i < L.size(); ++i) {
    const auto &terms = s.terms_at(i);
    if (terms.empty()) continue;
    const TensorElement c = s.coefficient_at(i);
    if (i == 0) {
      out += format_element(c);
      first = false;
      continue;
    }
    const std::string var = variable_monomial(L.exps[i], s.nvars(), names);
    if (terms.size() == 1) {
      const auto &t = terms.front();
      const bool negative = t.coef.sign() < 0;
      const Rational a = negative ? -t.coef : t.coef;
      std::string body;
      if (t.key == 0) {
        body = a.is_one() ? var : a.str() + "·" + var;
      } else if (s.arity() > 1 && a.is_one()) {
        body = "(" + slots_text(*s.algebra(), s.arity(), t.key) + ")·" + var;
      } else {
        body = term_text(*s.algebra(), s.arity(), t.key, a) + "·" + var;
      }
      append_signed(out, first, negative, body);
    } else {
      append_signed(out, first, false, "(" + format_element(c) + ")·" + var);
    }
    first = false;
  }
  return first ? "0" : out;
}

TensorElement parse_element(const AlgebraPtr &alg, std::string_view text, int arity) {
  if (arity < 0 || arity > 3) throw ParseError("element arity must be 0-3");
  return ElementParser(alg, text).run(arity);
}

AlgebraSpec algebra_spec_from_json(std::string_view text) {
  const json j = parse_json(text);
  return guarded([&] {
    if (!j.is_object()) throw ParseError("an algebra description is a JSON object");
    AlgebraSpec spec;
    for (const json &g : j.value("generators", json::array())) {
      Generator gen;
      gen.name = g.at("name").get<std::string>();
      gen.degree = g.at("degree").get<int>();
      spec.generators.push_back(std::move(gen));
    }
    if (!j.contains("degree_bound")) throw ParseError("algebra needs \"degree_bound\"");
    spec.degree_bound = j["degree_bound"].get<int>();
    if (j.contains("coproduct")) {
      for (const auto &[name, terms] : j["coproduct"].items()) {
        if (terms.is_string()) {
          if (terms.get<std::string>() != "primitive") {
            throw ParseError("unknown coproduct shorthand for '" + name + "'");
          }
          continue;
        }
        std::vector<CoproductTerm> list;
        for (const json &t : terms) {
          if (!t.is_array() || t.size() != 3) {
            throw ParseError("coproduct term " + t.dump() + " is [left, right, coefficient]");
          }
          list.push_back({monomial_from_json(spec.generators, t[0]),
                          monomial_from_json(spec.generators, t[1]), rational_from_json(t[2])});
        }
        spec.coproduct[name] = std::move(list);
      }
    }
    return spec;
  });
}

std::string algebra_spec_to_json(const AlgebraSpec &spec) {
  json out;
  json gens = json::array();
  for (const auto &g : spec.generators) gens.push_back({{"name", g.name}, {"degree", g.degree}});
  out["generators"] = std::move(gens);
  out["degree_bound"] = spec.degree_bound;
  json cop = json::object();
  for (const auto &g : spec.generators) {
    const auto it = spec.coproduct.find(g.name);
    if (it == spec.coproduct.end()) {
      cop[g.name] = "primitive";
      continue;
    }
    json terms = json::array();
    for (const auto &t : it->second) {
      terms.push_back({monomial_to_json(spec.generators, t.left),
                       monomial_to_json(spec.generators, t.right), t.coef.fraction_str()});
    }
    cop[g.name] = std::move(terms);
  }
  out["coproduct"] = std::move(cop);
  return out.dump(2);
}

TensorElement element_from_json(const AlgebraPtr &alg, std::string_view text, int arity) {
  const json j = parse_json(text);
  return guarded([&] { return element_from(alg, j, arity); });
}

std::string element_to_json(const TensorElement &e) { return element_json(e).dump(2); }

Series series_from_json(const AlgebraPtr &alg, std::string_view text) {
  const json j = parse_json(text);
  return guarded([&] { return series_from(alg, j); });
}

std::string series_to_json(const Series &s) { return series_json(s).dump(2); }

GroupDocument group_document_from_json(std::string_view text) {
  const json j = parse_json(text);
  return guarded([&] {
    if (!j.is_object()) throw ParseError("a group document is a JSON object");
    if (!j.contains("hopf")) throw ParseError("group document needs \"hopf\"");
    if (!j.contains("series")) throw ParseError("group document needs \"series\"");
    GroupDocument doc;
    doc.hopf = j["hopf"].dump();
    doc.series = j["series"].dump();
    doc.order = j.contains("order") ? j["order"].get<int>() : j["series"].at("order").get<int>();
    return doc;
  });
}

std::string group_to_json(const std::string &hopf_json, const Series &f) {
  json out;
  out["hopf"] = parse_json(hopf_json);
  out["order"] = f.order();
  out["series"] = series_json(f);
  return out.dump(2);
}

std::string report_to_json(const Report &r) {
  json out;
  out["pass"] = r.pass;
  if (r.certified_order < kExact) out["certified_order"] = r.certified_order;
  json v = json::array();
  for (const auto &x : r.violations) {
    v.push_back({{"axiom", x.axiom}, {"defect", series_json(x.defect)}});
  }
  out["violations"] = std::move(v);
  return out.dump(2);
}

Report report_from_json(const AlgebraPtr &alg, std::string_view text) {
  const json j = parse_json(text);
  return guarded([&] {
    Report r;
    r.pass = j.at("pass").get<bool>();
    r.certified_order = j.value("certified_order", kExact);
    for (const json &v : j.at("violations")) {
      r.violations.push_back({v.at("axiom").get<std::string>(), series_from(alg, v.at("defect"))});
    }
    return r;
  });
}

}  // namespace fglog
