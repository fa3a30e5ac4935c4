#pragma once

/**
 * @file cli.hpp
 * @brief The command-line surface: subcommands over workspace files and the
 * bundled corpus.
 *
 * Exit status: 0 when every check passes, 1 when a check fails (the report
 * carries the witness), 2 on usage or parse errors.
 */

#include "corpus.hpp"
#include "io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace zinbiel::cli {

enum Exit : int { ok = 0, failed = 1, usage = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// What a subcommand produced: reports, free-form lines, and an optional
/// serialized workspace.
struct Outcome {
  std::vector<Report> reports;
  std::vector<std::string> lines;
  std::string documents;
  bool failed = false;

  void add(Report r) {
    if (!r.passed()) failed = true;
    reports.push_back(std::move(r));
  }
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Input files of a subcommand: a workspace file, and/or a separate algebra
/// file plus a tensor file whose header may be omitted.
struct Inputs {
  std::string file, algebra_file, tensor_file, name;
};

inline Workspace load(const Inputs& in, const std::optional<FieldSpec>& field, bool verify_flavor = true) {
  if (in.file.empty() && in.algebra_file.empty()) throw UsageError("no input file given");
  ParseOptions opt;
  opt.verify_flavor = verify_flavor;
  opt.field_override = field;
  std::string text;
  if (!in.algebra_file.empty()) text += read_file(in.algebra_file) + "\n";
  if (!in.file.empty()) text += read_file(in.file);
  auto w = parse_workspace(text, opt);
  if (!in.tensor_file.empty()) {
    auto as = w.all<AlgebraDoc>();
    if (in.name.empty() && as.size() != 1) throw UsageError("--tensor needs exactly one algebra or --name");
    const auto& a = in.name.empty() ? as.front()->algebra : w.algebra(in.name);
    w.add(TensorDoc{"r", a.field(), parse_tensor(read_file(in.tensor_file), a)});
  }
  return w;
}

/// The algebra named `name`, or the only algebra of dimension `dim` in the file.
inline const AlgebraDoc& resolve(const Workspace& w, const std::string& name, int dim) {
  const AlgebraDoc* found = nullptr;
  for (const auto* d : w.all<AlgebraDoc>()) {
    if (!name.empty()) {
      if (d->algebra.name() == name) return *d;
      continue;
    }
    if (d->algebra.dim() != dim) continue;
    if (found) throw UsageError("several algebras of dimension " + std::to_string(dim) + "; pick one with --algebra");
    found = d;
  }
  if (!found) throw UsageError(name.empty() ? "no algebra of dimension " + std::to_string(dim) : "no algebra named '" + name + "'");
  return *found;
}

inline std::string witness_names(const Clause& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.witness.size(); ++i) out += (i ? ", " : "") + std::string("e") + std::to_string(c.witness[i] + 1);
  return out + ")";
}

inline Report compare(std::string name, const Algebra& got, const Algebra& want) {
  Report rep(std::move(name));
  rep.check("structure constants identical", same_structure(got, want), "got\n" + serialize_algebra(got) + "want\n" + serialize_algebra(want));
  return rep;
}

}  // namespace detail

// --- subcommands ------------------------------------------------------------------------------

inline Outcome validate(const std::string& kind, const Workspace& w, const std::string& algebra) {
  static const std::vector<std::string> kinds{"algebra", "tensor2", "form", "rep", "matched-pair", "bialgebra", "rb-operator", "all"};
  if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) throw UsageError("unknown kind '" + kind + "'");
  auto want = [&](const char* k) { return kind == k || kind == "all"; };
  Outcome out;
  std::size_t matched = 0;
  if (want("algebra"))
    for (const auto* d : w.all<AlgebraDoc>()) {
      ++matched;
      const auto& a = d->algebra;
      if (d->declared == Flavor::commutative_associative) {
        out.add(check_commutative_associative(a));
        continue;
      }
      auto rep = check_zinbiel(a);
      if (const auto* c = rep.first_failure()) {
        out.lines.push_back("witness " + detail::witness_names(*c) + " in " + a.name());
        out.lines.push_back("replay: x∘(y∘z) − (x∘y + y∘x)∘z = " +
                            to_string(zinbiel_defect(a, a.basis(c->witness[0]), a.basis(c->witness[1]), a.basis(c->witness[2]))));
      } else {
        rep.merge(check_left_commutativity(a));
      }
      out.add(std::move(rep));
    }
  if (want("tensor2"))
    for (const auto* d : w.all<TensorDoc>()) {
      ++matched;
      const auto& a = detail::resolve(w, algebra, d->tensor.dim()).algebra;
      out.add(check_coboundary_bialgebra(a, d->tensor).report);
    }
  if (want("form"))
    for (const auto* d : w.all<FormDoc>()) {
      ++matched;
      const auto& ad = detail::resolve(w, algebra, d->form.dim());
      if (ad.declared == Flavor::commutative_associative)
        out.add(check_connes(ConnesCommutative{ad.algebra, d->form, std::nullopt}));
      else
        out.add(check_quadratic(QuadraticAlgebra{ad.algebra, d->form}));
    }
  if (want("rep"))
    for (const auto* d : w.all<RepDoc>()) {
      ++matched;
      out.add(check_representation(d->rep));
    }
  if (want("matched-pair"))
    for (const auto* d : w.all<MatchedPairDoc>()) {
      ++matched;
      out.add(check_matched_pair(d->pair));
    }
  if (want("bialgebra"))
    for (const auto* d : w.all<BialgebraDoc>()) {
      ++matched;
      out.add(check_bialgebra(d->bialgebra));
    }
  if (want("rb-operator"))
    for (const auto* d : w.all<RBDoc>()) {
      ++matched;
      out.add(check_rb(d->op));
    }
  if (!matched) throw UsageError("no '" + kind + "' blocks in the file");
  return out;
}

inline Outcome classify_r(const Workspace& w, const std::string& algebra) {
  Outcome out;
  auto ts = w.all<TensorDoc>();
  if (ts.empty()) throw UsageError("no tensor2 blocks in the file");
  for (const auto* d : ts) {
    const auto& a = detail::resolve(w, algebra, d->tensor.dim()).algebra;
    auto cb = check_coboundary_bialgebra(a, d->tensor);
    if (!cb.report.passed()) {
      out.lines.push_back(d->name + ": not a coboundary bialgebra");
      out.add(cb.report);
      continue;
    }
    RMatrix R(a, d->tensor);
    out.lines.push_back(d->name + ": " + to_string(classify(R)));
    out.lines.push_back("  ⟦r,r⟧ support: " + std::to_string(R.bracket().support()) + " entries");
    out.lines.push_back(std::string("  skew part invariant: ") + (check_LLR_invariance(a, R.skew()).passed() ? "yes" : "no"));
    out.lines.push_back(std::string("  I = r₊ − r₋ invertible: ") + (R.I_invertible() ? "yes" : "no"));
  }
  return out;
}

inline Outcome build_double(const Workspace& w) {
  Outcome out;
  auto bs = w.all<BialgebraDoc>();
  if (bs.empty()) throw UsageError("no bialgebra blocks in the file");
  Workspace result;
  for (const auto* d : bs) {
    auto rep = check_bialgebra(d->bialgebra);
    if (!rep.passed()) {
      out.add(rep);
      continue;
    }
    auto D = zinbiel_double(d->bialgebra);
    auto name = token_name("D(" + d->name + ")");
    auto alg = D.algebra.with_name(name);
    out.add(verify_double_factorizable(D));
    out.lines.push_back(name + ": " + to_string(classify(RMatrix(D.algebra, D.canonical_r))));
    result.add(AlgebraDoc{alg, Flavor::zinbiel});
    result.add(TensorDoc{"r_" + name, alg.field(), D.canonical_r});
  }
  out.documents = serialize_workspace(result);
  return out;
}

inline Outcome rb_roundtrip(const Workspace& w, const std::string& algebra, const Scalar& lambda) {
  Outcome out;
  if (lambda.is_zero()) throw UsageError("--lambda must be nonzero");
  auto ts = w.all<TensorDoc>();
  if (ts.empty()) throw UsageError("no tensor2 blocks in the file");
  Workspace result;
  for (const auto* d : ts) {
    const auto& a = detail::resolve(w, algebra, d->tensor.dim()).algebra;
    Scalar l = a.field().coerce(lambda);
    RMatrix R(a, d->tensor);
    auto cb = check_coboundary_bialgebra(a, d->tensor);
    if (!cb.report.passed() || classify(R) != RClass::factorizable) {
      Report rep("Rota-Baxter roundtrip for " + d->name);
      rep.check("r is factorizable", false, cb.report.passed() ? "classified " + to_string(classify(R)) : "coboundary conditions fail");
      out.add(rep);
      continue;
    }
    auto q = rb_from_factorizable(R, l);
    auto back = factorizable_from_rb(q, l);
    auto q2 = rb_from_factorizable(back, l);
    Report rep("Rota-Baxter roundtrip for " + d->name);
    rep.merge(check_quadratic_rb(q));
    rep.check("r → (P, ω) → r is the identity", back.r().matrix() == R.r().matrix(), "recovered " + back.r().to_string());
    rep.check("(P, ω) → r → (P, ω) is the identity", q2.P.P == q.P.P && q2.quadratic.omega == q.quadratic.omega);
    out.add(rep);
    result.add(RBDoc{"P_" + d->name, token_name(a.name()), q.P});
    result.add(FormDoc{"omega_" + d->name, a.field(), q.quadratic.omega, true, true});
  }
  out.documents = serialize_workspace(result);
  return out;
}

inline Outcome connes_roundtrip(const Workspace& w, const std::string& algebra) {
  Outcome out;
  auto fs = w.all<FormDoc>();
  if (fs.empty()) throw UsageError("no form blocks in the file");
  for (const auto* d : fs) {
    const auto& ad = detail::resolve(w, algebra, d->form.dim());
    std::optional<RBOperator> P;
    for (const auto* rb : w.all<RBDoc>())
      if (rb->base == ad.algebra.name()) P = rb->op;
    Report rep("Connes roundtrip for " + d->name + " on " + ad.algebra.name());
    if (ad.declared == Flavor::commutative_associative) {
      auto pre = check_connes(ConnesCommutative{ad.algebra, d->form, P});
      if (!pre.passed()) {
        out.add(pre);
        continue;
      }
      auto z = zinbiel_from_connes(ConnesCommutative{ad.algebra, d->form, P});
      auto c = connes_from_zinbiel(z, P);
      rep.merge(check_quadratic(z));
      rep.merge(detail::compare("commutative side", c.algebra, ad.algebra));
      rep.check("form preserved", c.omega == d->form);
    } else {
      QuadraticAlgebra q{ad.algebra, d->form};
      auto pre = check_quadratic(q);
      if (P) pre.merge(check_quadratic_rb(QuadraticRB{q, *P}));
      if (!pre.passed()) {
        out.add(pre);
        continue;
      }
      auto c = connes_from_zinbiel(q, P);
      rep.merge(check_connes(c));
      auto z = zinbiel_from_connes(c);
      rep.merge(detail::compare("Zinbiel side", z.algebra, ad.algebra));
      rep.check("form preserved", z.omega == d->form);
    }
    out.add(rep);
  }
  return out;
}

inline Outcome search(const Workspace& w, const std::string& algebra, bool symmetric, int limit, long max_candidates) {
  Outcome out;
  std::vector<const Algebra*> targets;
  for (const auto* d : w.all<AlgebraDoc>())
    if (algebra.empty() || d->algebra.name() == algebra) targets.push_back(&d->algebra);
  if (targets.empty()) throw UsageError("no algebra to search over");
  Workspace result;
  for (const auto* a : targets) {
    if (a->field().is_rational()) throw UsageError("search-zybe needs a prime field (use --field Fp:p)");
    auto s = search_zybe(*a, symmetric, limit, max_candidates);
    out.lines.push_back(a->name() + ": " + std::to_string(s.solutions.size()) + " solutions among " + std::to_string(s.examined) +
                        " candidates" + (s.exhausted ? " (exhaustive)" : ""));
    int k = 0;
    for (const auto& c : s.solutions) {
      std::string name = token_name(a->name()) + "_r" + std::to_string(++k);
      out.lines.push_back("  " + name + " " + c.r.to_string() + " " +
                          (c.classification ? to_string(*c.classification) : std::string(c.skew_condition ? "fails H(x)⟦r,r⟧ = 0" : "fails skew-part condition")));
      result.add(TensorDoc{name, a->field(), c.r});
    }
  }
  out.documents = serialize_workspace(result);
  return out;
}

/// Soundness sweep over the bundled fixtures.
inline Outcome corpus_check() {
  Outcome out;
  for (const auto& a : corpus::algebras()) {
    Report rep("corpus algebra " + a.name());
    rep.merge(check_zinbiel(a));
    rep.merge(check_left_commutativity(a));
    rep.merge(check_commutative_associative(sub_adjacent(a)), "sub-adjacent");
    out.add(rep);
  }
  for (const auto& b : corpus::bialgebras()) {
    Report rep("corpus bialgebra " + b.name());
    rep.merge(check_bialgebra(b));
    rep.merge(check_matched_pair(bialgebra_to_matched_pair(b)));
    rep.merge(check_manin_triple(bialgebra_to_manin(b)));
    out.add(rep);
  }
  for (const auto& R : corpus::factorizable()) {
    Report rep("corpus factorizable r on " + R.base().name());
    rep.check("classified factorizable", classify(R) == RClass::factorizable);
    out.add(rep);
  }
  for (const auto& s : corpus::frozen_solutions()) {
    Report rep("frozen solution on " + s.algebra.name());
    rep.check("⟦r,r⟧ = 0", zybe_bracket(s.algebra, s.r).is_zero());
    rep.merge(check_coboundary_bialgebra(s.algebra, s.r).report);
    out.add(rep);
  }
  for (const auto& q : corpus::quadratic()) out.add(check_quadratic(q));
  out.lines.push_back("corpus: " + std::to_string(out.reports.size()) + " fixtures checked");
  return out;
}

// --- dispatch -------------------------------------------------------------------------------

inline int emit(const Outcome& o, bool json, const std::string& out_path, std::ostream& os) {
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw UsageError("cannot write '" + out_path + "'");
    f << o.documents;
  }
  int code = o.failed ? Exit::failed : Exit::ok;
  if (json) {
    nlohmann::json j;
    j["verdict"] = o.failed ? "fail" : "pass";
    j["reports"] = nlohmann::json::array();
    for (const auto& r : o.reports) j["reports"].push_back(r.to_json());
    j["messages"] = o.lines;
    if (out_path.empty() && !o.documents.empty()) j["documents"] = o.documents;
    os << j.dump(2) << "\n";
    return code;
  }
  for (const auto& r : o.reports)
    if (!r.passed()) os << r.to_text();
  for (const auto& l : o.lines) os << l << "\n";
  if (out_path.empty() && !o.documents.empty()) os << o.documents;
  os << (o.failed ? "FAIL" : "PASS") << "\n";
  return code;
}

inline int run_command(std::vector<std::string> args, std::ostream& os = std::cout, std::ostream& es = std::cerr) {
  CLI::App app{"Exact-arithmetic workbench for Zinbiel algebras", "zinbiel"};
  app.require_subcommand(1);
  std::string field_text, out_path;
  detail::Inputs in;
  std::string& algebra = in.name;
  bool json = false;
  app.add_option("--field", field_text, "override every field: Q or Fp:p");
  app.add_option("--out", out_path, "write produced documents to this file");
  app.add_flag("--json", json, "machine-readable report");

  std::string kind, lambda_text = "1";
  int limit = 50;
  long max_candidates = -1;
  bool symmetric = false;

  auto* v = app.add_subcommand("validate", "check the axioms of every block of a kind");
  v->add_option("kind", kind, "algebra | tensor2 | form | rep | matched-pair | bialgebra | rb-operator | all")->required();
  v->add_option("file", in.file, "workspace file");
  v->add_option("--name", algebra, "algebra to use for tensors and forms");
  v->add_option("--algebra", in.algebra_file, "file with the algebra");
  auto* c = app.add_subcommand("classify-r", "classify each tensor2 as an r-matrix");
  c->add_option("file", in.file, "workspace file");
  c->add_option("--name", algebra, "algebra to use for tensors and forms");
  c->add_option("--algebra", in.algebra_file, "file with the algebra");
  c->add_option("--tensor", in.tensor_file, "file with r (header optional)");
  auto* d = app.add_subcommand("build-double", "double of each bialgebra with its canonical r");
  d->add_option("file", in.file, "workspace file");
  auto* rb = app.add_subcommand("rb-roundtrip", "factorizable r ↔ quadratic Rota-Baxter structure");
  rb->add_option("file", in.file, "workspace file");
  rb->add_option("--name", algebra, "algebra to use for tensors and forms");
  rb->add_option("--algebra", in.algebra_file, "file with the algebra");
  rb->add_option("--tensor", in.tensor_file, "file with r (header optional)");
  rb->add_option("--lambda", lambda_text, "nonzero weight");
  auto* cn = app.add_subcommand("connes-roundtrip", "quadratic Zinbiel ↔ Connes cocycle");
  cn->add_option("file", in.file, "workspace file");
  cn->add_option("--name", algebra, "algebra to use for tensors and forms");
  cn->add_option("--algebra", in.algebra_file, "file with the algebra");
  auto* s = app.add_subcommand("search-zybe", "enumerate Yang-Baxter solutions over F_p");
  s->add_option("file", in.file, "workspace file");
  s->add_option("--name", algebra, "algebra to use for tensors and forms");
  s->add_option("--algebra", in.algebra_file, "file with the algebra");
  s->add_option("--limit", limit, "stop after this many solutions");
  s->add_option("--max-candidates", max_candidates, "stop after this many candidates");
  s->add_flag("--symmetric", symmetric, "symmetric tensors only");
  auto* cc = app.add_subcommand("corpus-check", "verify the bundled fixtures");
  for (auto* sub : {v, c, d, rb, cn, s, cc}) sub->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    os << app.help();
    return Exit::ok;
  } catch (const CLI::ParseError& e) {
    es << "usage error: " << e.what() << "\n" << app.help();
    return Exit::usage;
  }

  try {
    std::optional<FieldSpec> field;
    if (!field_text.empty()) field = FieldSpec::parse(field_text);
    Outcome o;
    if (v->parsed()) {
      o = validate(kind, detail::load(in, field, false), algebra);
    } else if (c->parsed()) {
      o = classify_r(detail::load(in, field), algebra);
    } else if (d->parsed()) {
      o = build_double(detail::load(in, field));
    } else if (rb->parsed()) {
      o = rb_roundtrip(detail::load(in, field), algebra, FieldSpec::rationals().parse_scalar(lambda_text));
    } else if (cn->parsed()) {
      o = connes_roundtrip(detail::load(in, field), algebra);
    } else if (s->parsed()) {
      o = search(detail::load(in, field), algebra, symmetric, limit, max_candidates);
    } else {
      o = corpus_check();
    }
    return emit(o, json, out_path, os);
  } catch (const ParseError& e) {
    es << "parse error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    es << "usage error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    es << "error: " << e.what() << "\n";
  }
  return Exit::usage;
}

inline int run_command(int argc, char** argv, std::ostream& os = std::cout, std::ostream& es = std::cerr) {
  return run_command(std::vector<std::string>(argv + 1, argv + argc), os, es);
}

}  // namespace zinbiel::cli
