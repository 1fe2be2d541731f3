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

#include "fglog_cli/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "CLI11.hpp"
#include "fglog/errors.hpp"
#include "fglog/formal_group.hpp"
#include "fglog/hopf_axioms.hpp"
#include "fglog/io.hpp"
#include "json.hpp"

namespace fglog::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

// Anything wrong with the inputs themselves; exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::string hopf;
  std::string group;
  std::string cocycle;
  std::string element;
  std::string log;
  int order = kDefaultOrder;
  bool order_set = false;
  int hdeg = kDefaultHdeg;
  bool hdeg_set = false;
  std::string format = "pretty";
  bool strict_grading = false;
  std::optional<int> x_degree;
};

struct LoadedAlgebra {
  AlgebraPtr alg;
  std::string spec_json;
  std::string label;
};

struct LoadedGroup {
  LoadedAlgebra algebra;
  FormalGroupLaw law;
};

template <typename F>
auto as_input(F &&f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError &) {
    throw;
  } catch (const std::exception &e) {
    throw InputError(e.what());
  }
}

std::string read_stream(std::istream &in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string read_file(const fs::path &path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open " + path.string());
  return read_stream(f);
}

fs::path resolve(const fs::path &base, const std::string &ref) {
  const fs::path p(ref);
  return p.is_absolute() || base.empty() ? p : base / p;
}

LoadedAlgebra build_algebra(AlgebraSpec spec, const Options &o, std::string label) {
  if (o.hdeg_set) spec.degree_bound = o.hdeg;
  LoadedAlgebra la;
  la.alg = HopfAlgebra::build(spec);
  la.spec_json = algebra_spec_to_json(spec);
  la.label = std::move(label);
  return la;
}

LoadedAlgebra load_algebra_ref(const std::string &ref, const fs::path &base, const Options &o) {
  return as_input([&] {
    if (auto spec = builtin::lookup(ref, o.hdeg)) return build_algebra(*spec, o, ref);
    const fs::path path = resolve(base, ref);
    return build_algebra(algebra_spec_from_json(read_file(path)), o, path.string());
  });
}

// The "hopf" member of a group document: a builtin name or file path, an
// object {"file": path}, or an inline algebra description.
LoadedAlgebra load_algebra_member(const std::string &raw, const fs::path &base,
                                  const Options &o) {
  return as_input([&] {
    const json j = json::parse(raw);
    if (j.is_string()) return load_algebra_ref(j.get<std::string>(), base, o);
    if (j.is_object() && j.contains("file")) {
      return load_algebra_ref(j["file"].get<std::string>(), base, o);
    }
    return build_algebra(algebra_spec_from_json(raw), o, "inline");
  });
}

LoadedGroup load_group(const Options &o, std::istream &in) {
  if (o.group.empty()) throw InputError("--group is required");
  return as_input([&] {
    fs::path base;
    std::string text;
    if (o.group == "-") {
      text = read_stream(in);
    } else {
      text = read_file(o.group);
      base = fs::path(o.group).parent_path();
    }
    const GroupDocument doc = group_document_from_json(text);
    LoadedAlgebra la = load_algebra_member(doc.hopf, base, o);
    const int n = o.order_set ? o.order : doc.order;
    if (n < 1) throw InputError("group order must be at least 1");
    Series s = series_from_json(la.alg, doc.series);
    if (s.order() != n) s = s.with_order(n);
    return LoadedGroup{std::move(la), FormalGroupLaw(std::move(s))};
  });
}

LoadedAlgebra load_hopf_option(const Options &o) {
  if (o.hopf.empty()) throw InputError("--hopf is required");
  return load_algebra_ref(o.hopf, fs::path(), o);
}

// A JSON file, or else an inline expression.
TensorElement load_element(const AlgebraPtr &alg, const std::string &ref, int arity) {
  return as_input([&] {
    std::error_code ec;
    if (fs::is_regular_file(ref, ec)) return element_from_json(alg, read_file(ref), arity);
    return parse_element(alg, ref, arity);
  });
}

// Terms of F whose H-degree differs from deg x · (1 - i - j).
Series grading_defect(const FormalGroupLaw &F, int xdeg) {
  const Series &f = F.series();
  const SeriesLayout &L = f.layout();
  Series d(f.algebra(), f.arity(), f.nvars(), f.order());
  d.set_polynomial();
  for (int i = 0; i < L.size(); ++i) {
    const int want = xdeg * (1 - L.total[i]);
    std::vector<Series::Term> bad;
    for (const auto &t : f.terms_at(i)) {
      if (detail::key_slot(t.key, 2, 0) < 0) continue;
      const TensorElement one = TensorElement::from_sorted_terms(f.algebra(), 2, {t});
      if (one.min_total_degree() != want) bad.push_back(t);
    }
    d.mutable_terms_at(i) = std::move(bad);
  }
  return d;
}

class Output {
 public:
  Output(const Options &o, std::ostream &out) : json_(o.format == "json"), out_(out) {
    doc_["command"] = o.command;
  }

  void header(int order, int hdeg, const std::string &algebra) {
    doc_["order"] = order;
    doc_["hdeg"] = hdeg;
    if (!algebra.empty()) doc_["hopf"] = algebra;
    text_ << "# fglog " << doc_["command"].get<std::string>() << ": order N = " << order
          << ", hdeg D = " << hdeg;
    if (!algebra.empty()) text_ << ", hopf " << algebra;
    text_ << "\n";
  }

  void line(const std::string &s) { text_ << s << "\n"; }
  void set(const std::string &key, json value) { doc_[key] = std::move(value); }
  json &doc() { return doc_; }

  void report(const Report &r, const std::string &key = "report") {
    doc_[key] = json::parse(report_to_json(r));
    text_ << "result: " << (r.pass ? "pass" : "fail") << "\n";
    for (const auto &v : r.violations) {
      text_ << v.axiom << ": " << format_series(v.defect) << "\n";
    }
  }

  void error(const std::string &msg, int code) {
    doc_["error"] = msg;
    doc_["exit"] = code;
  }

  void flush() {
    if (json_) {
      out_ << doc_.dump(2) << "\n";
    } else {
      out_ << text_.str();
    }
  }

 private:
  bool json_;
  std::ostream &out_;
  json doc_;
  std::ostringstream text_;
};

int exit_for(const Report &r) { return r.pass ? kExitPass : kExitViolation; }

// Axioms must hold before any pipeline runs on F.
bool require_axioms(const FormalGroupLaw &F, Output &out) {
  const Report r = check_axioms(F);
  if (!r.pass) {
    out.line("group axioms fail; stopping");
    out.report(r, "axioms");
    return false;
  }
  return true;
}

int cmd_check_hopf(const Options &o, Output &out) {
  const LoadedAlgebra la = load_hopf_option(o);
  out.header(o.order, la.alg->degree_bound(), la.label);
  const HopfAxiomReport r = verify_hopf_axioms(la.alg);
  out.set("pass", r.pass);
  out.line(std::string("result: ") + (r.pass ? "pass" : "fail"));
  if (!r.pass) {
    out.set("axiom", r.axiom);
    out.set("monomial", r.monomial);
    out.set("detail", r.detail);
    out.line(r.axiom + " at " + r.monomial + ": " + r.detail);
  }
  return r.pass ? kExitPass : kExitViolation;
}

// check_axioms plus, under --strict-grading, homogeneity for deg x = w.
Report checked_axioms(const Options &o, const LoadedGroup &g) {
  Report r = check_axioms(g.law);
  if (o.strict_grading) {
    const int w = o.x_degree.value_or(-g.algebra.alg->min_generator_degree());
    Series d = grading_defect(g.law, w);
    if (!d.is_zero()) {
      r.pass = false;
      r.violations.push_back({"grading", std::move(d)});
    }
  }
  return r;
}

int cmd_verify(const Options &o, std::istream &in, Output &out) {
  const LoadedGroup g = load_group(o, in);
  out.header(g.law.order(), g.algebra.alg->degree_bound(), g.algebra.label);
  const Report r = checked_axioms(o, g);
  out.report(r);
  return exit_for(r);
}

int cmd_log(const Options &o, std::istream &in, Output &out) {
  const LoadedGroup g = load_group(o, in);
  out.header(g.law.order(), g.algebra.alg->degree_bound(), g.algebra.label);
  if (!require_axioms(g.law, out)) return kExitViolation;
  const Logarithm lg = logarithm(g.law);
  out.set("logarithm", json::parse(series_to_json(lg.series())));
  out.line(format_series(lg.series()));
  return kExitPass;
}

int cmd_cocycle(const Options &o, std::istream &in, Output &out) {
  const LoadedGroup g = load_group(o, in);
  out.header(g.law.order(), g.algebra.alg->degree_bound(), g.algebra.label);
  if (!require_axioms(g.law, out)) return kExitViolation;
  const Cocycle c = extract_cocycle(g.law, logarithm(g.law));
  out.set("cocycle", json::parse(element_to_json(c.element())));
  out.line(format_element(c.element()));
  return kExitPass;
}

int cmd_check_cocycle(const Options &o, Output &out) {
  const LoadedAlgebra la = load_hopf_option(o);
  if (o.cocycle.empty()) throw InputError("--cocycle is required");
  const TensorElement c = load_element(la.alg, o.cocycle, 2);
  out.header(o.order, la.alg->degree_bound(), la.label);
  const Report r = check_cocycle(c);
  out.report(r);
  return exit_for(r);
}

int cmd_coboundary(const Options &o, Output &out) {
  const LoadedAlgebra la = load_hopf_option(o);
  if (o.element.empty()) throw InputError("--element is required");
  const TensorElement h = load_element(la.alg, o.element, 1);
  out.header(o.order, la.alg->degree_bound(), la.label);
  const Cocycle c = as_input([&] { return coboundary(h); });
  out.set("cocycle", json::parse(element_to_json(c.element())));
  out.line(format_element(c.element()));
  return kExitPass;
}

int cmd_inverse(const Options &o, std::istream &in, Output &out) {
  const LoadedGroup g = load_group(o, in);
  out.header(g.law.order(), g.algebra.alg->degree_bound(), g.algebra.label);
  if (!require_axioms(g.law, out)) return kExitViolation;
  const Series theta = inverse_series(g.law);
  out.set("additive_cocycle_form", is_additive_cocycle_form(g.law));
  out.set("inverse", json::parse(series_to_json(theta)));
  out.line(format_series(theta));
  return kExitPass;
}

int cmd_reconstruct(const Options &o, Output &out) {
  const LoadedAlgebra la = load_hopf_option(o);
  if (o.log.empty()) throw InputError("--log is required");
  Series gs = as_input([&] { return series_from_json(la.alg, read_file(o.log)); });
  if (o.order_set && gs.order() != o.order) gs = gs.with_order(o.order);
  const Logarithm lg = as_input([&] { return Logarithm(gs); });
  const TensorElement c =
      o.cocycle.empty() ? TensorElement(la.alg, 2) : load_element(la.alg, o.cocycle, 2);
  out.header(gs.order(), la.alg->degree_bound(), la.label);
  const FormalGroupLaw F = reconstruct(lg, Cocycle(c));
  out.set("group", json::parse(group_to_json(la.spec_json, F.series())));
  out.line(format_series(F.series()));
  return kExitPass;
}

int cmd_specialize(const Options &o, std::istream &in, Output &out) {
  const LoadedGroup g = load_group(o, in);
  out.header(g.law.order(), g.algebra.alg->degree_bound(), g.algebra.label);
  if (!require_axioms(g.law, out)) return kExitViolation;
  const ClassicalSpecialization sc = specialize_classical(g.law, logarithm(g.law));
  out.set("law", json::parse(series_to_json(sc.law)));
  out.set("logarithm", json::parse(series_to_json(sc.logarithm)));
  out.line("law: " + format_series(sc.law, {"x", "y"}));
  out.line("logarithm: " + format_series(sc.logarithm));
  out.report(sc.identity);
  return exit_for(sc.identity);
}

int cmd_roundtrip(const Options &o, std::istream &in, Output &out) {
  const LoadedGroup g = load_group(o, in);
  out.header(g.law.order(), g.algebra.alg->degree_bound(), g.algebra.label);
  json stages = json::array();
  auto stage = [&](const std::string &name, bool pass, const std::string &detail) {
    stages.push_back({{"stage", name}, {"pass", pass}, {"detail", detail}});
    out.line(name + ": " + (pass ? "pass" : "fail") + (detail.empty() ? "" : "  " + detail));
    out.set("stages", stages);
    return pass;
  };
  auto failed_report = [&](const Report &r) {
    return r.violations.empty() ? std::string()
                                : r.violations.front().axiom + " defect " +
                                      format_series(r.violations.front().defect);
  };

  const Report axioms = checked_axioms(o, g);
  if (!stage("axioms", axioms.pass, failed_report(axioms))) return kExitViolation;
  const Logarithm lg = logarithm(g.law);
  stage("logarithm", true, format_series(lg.series()));
  Cocycle c(TensorElement(g.algebra.alg, 2));
  try {
    c = extract_cocycle(g.law, lg);
  } catch (const ResidualNonConstant &e) {
    stage("cocycle", false, e.what());
    return kExitViolation;
  } catch (const CocycleViolation &e) {
    stage("cocycle", false, e.what());
    return kExitViolation;
  }
  stage("cocycle", true, format_element(c.element()));
  const Report cc = check_cocycle(c.element());
  if (!stage("check-cocycle", cc.pass, failed_report(cc))) return kExitViolation;
  const Report le = verify_log_equation(g.law, lg, c);
  if (!stage("log-equation", le.pass, failed_report(le))) return kExitViolation;
  std::optional<FormalGroupLaw> rec;
  try {
    rec.emplace(reconstruct(lg, c));
  } catch (const AxiomViolation &e) {
    stage("reconstruct", false, e.what());
    return kExitViolation;
  }
  stage("reconstruct", true, "");
  const Series diff = g.law.series() - rec->series();
  const bool same = diff.is_zero();
  stage("compare", same,
        same ? "identical through order " + std::to_string(diff.exact_order())
             : "differs by " + format_series(diff));
  return same ? kExitPass : kExitViolation;
}

int dispatch(const Options &o, std::istream &in, Output &out) {
  if (o.command == "check-hopf") return cmd_check_hopf(o, out);
  if (o.command == "verify") return cmd_verify(o, in, out);
  if (o.command == "log") return cmd_log(o, in, out);
  if (o.command == "cocycle") return cmd_cocycle(o, in, out);
  if (o.command == "check-cocycle") return cmd_check_cocycle(o, out);
  if (o.command == "coboundary") return cmd_coboundary(o, out);
  if (o.command == "inverse") return cmd_inverse(o, in, out);
  if (o.command == "reconstruct") return cmd_reconstruct(o, out);
  if (o.command == "specialize") return cmd_specialize(o, in, out);
  if (o.command == "roundtrip") return cmd_roundtrip(o, in, out);
  throw InputError("unknown command " + o.command);
}

}  // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err) {
  Options o;
  CLI::App app{"Formal group laws over graded connected Hopf algebras", "fglog"};
  app.require_subcommand(1);
  struct Sub {
    const char *name;
    const char *help;
    bool hopf, group, cocycle, element, log;
  };
  const Sub subs[] = {
      {"check-hopf", "Verify the Hopf algebra axioms", true, false, false, false, false},
      {"verify", "Check the formal group law axioms", false, true, false, false, false},
      {"log", "Print the logarithm", false, true, false, false, false},
      {"cocycle", "Extract the 2-cocycle", false, true, false, false, false},
      {"check-cocycle", "Check the 2-cocycle conditions", true, false, true, false, false},
      {"coboundary", "Print dh = Δh - h⊗1 - 1⊗h", true, false, false, true, false},
      {"inverse", "Print the inverse series", false, true, false, false, false},
      {"reconstruct", "Rebuild a group law from a logarithm and a cocycle", true, false, true,
       false, true},
      {"specialize", "Apply ε⊗ε and check the classical logarithm", false, true, false, false,
       false},
      {"roundtrip", "Run the full logarithm/cocycle/reconstruct pipeline", false, true, false,
       false, false},
  };
  std::vector<std::pair<CLI::App *, std::string>> commands;
  std::vector<CLI::Option *> order_opts, hdeg_opts, xdeg_opts;
  int xdeg = 0;
  for (const Sub &s : subs) {
    CLI::App *sub = app.add_subcommand(s.name, s.help);
    commands.emplace_back(sub, s.name);
    if (s.hopf) sub->add_option("--hopf", o.hopf, "Builtin name or algebra JSON file");
    if (s.group) sub->add_option("--group", o.group, "Group JSON file, or - for stdin");
    if (s.cocycle) sub->add_option("--cocycle", o.cocycle, "Cocycle JSON file or expression");
    if (s.element) sub->add_option("--element", o.element, "Element JSON file or expression");
    if (s.log) sub->add_option("--log", o.log, "Logarithm series JSON file");
    order_opts.push_back(
        sub->add_option("--order", o.order, "Series order N (default 8 or from file)")
            ->check(CLI::PositiveNumber));
    hdeg_opts.push_back(
        sub->add_option("--hdeg", o.hdeg, "Hopf degree bound D (default 8 or from file)")
            ->check(CLI::PositiveNumber));
    sub->add_option("--format", o.format, "pretty or json")
        ->check(CLI::IsMember({"pretty", "json"}));
    if (std::string_view(s.name) == "verify" || std::string_view(s.name) == "roundtrip") {
      sub->add_flag("--strict-grading", o.strict_grading,
                    "Also require F to be homogeneous for a fixed deg x");
      xdeg_opts.push_back(sub->add_option(
          "--x-degree", xdeg, "deg x under --strict-grading (default: minus the least "
                              "generator degree)"));
    }
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInput;
  }
  for (const auto &[sub, name] : commands) {
    if (sub->parsed()) o.command = name;
  }
  for (auto *opt : order_opts) o.order_set = o.order_set || opt->count() > 0;
  for (auto *opt : hdeg_opts) o.hdeg_set = o.hdeg_set || opt->count() > 0;
  for (auto *opt : xdeg_opts) {
    if (opt->count() > 0) o.x_degree = xdeg;
  }

  Output output(o, out);
  int code = kExitPass;
  std::string message;
  try {
    code = dispatch(o, in, output);
  } catch (const InputError &e) {
    code = kExitInput;
    message = e.what();
  } catch (const TruncationInsufficient &e) {
    code = kExitTruncation;
    message = e.what();
  } catch (const Error &e) {
    code = kExitViolation;
    message = e.what();
  } catch (const std::exception &e) {
    code = kExitInput;
    message = e.what();
  }
  if (!message.empty()) {
    output.error(message, code);
    err << "fglog: " << message << "\n";
  }
  output.flush();
  return code;
}

}  // namespace fglog::cli
