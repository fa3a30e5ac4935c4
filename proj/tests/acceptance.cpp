// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <zinbiel.hpp>
#include <zinbiel/corpus.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sys/wait.h>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace zinbiel;

namespace {

struct Verdict {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(0xacce0000u + salt); }

bool same(const Algebra& a, const Algebra& b) {
  if (a.dim() != b.dim()) return false;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (!(a.basis_product(i, j) == b.basis_product(i, j))) return false;
  return true;
}

/// x∘(y∘z) = (x∘y + y∘x)∘z on basis triples of the semidirect product, built by hand.
bool semidirect_is_zinbiel(const Representation& v) {
  const auto& a = v.base();
  int n = a.dim(), m = v.space_dim(), N = n + m;
  ProductTable t;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Vector out(static_cast<std::size_t>(N), a.field().make(0));
      for (int k = 0; k < N; ++k) {
        if (i < n && j < n && k < n) out[static_cast<std::size_t>(k)] = a.constant(i, j, k);
        if (i < n && j >= n && k >= n) out[static_cast<std::size_t>(k)] = v.rho_basis(i)(k - n, j - n);
        if (i >= n && j < n && k >= n) out[static_cast<std::size_t>(k)] = v.mu_basis(j)(k - n, i - n);
      }
      t[{i, j}] = out;
    }
  Algebra s("S", N, a.field(), t);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) {
        auto x = s.basis(i), y = s.basis(j), z = s.basis(k);
        if (!(s.product(x, s.product(y, z)) == s.product(s.product(x, y) + s.product(y, x), z))) return false;
      }
  return true;
}

Verdict corpus_soundness() {
  Verdict v;
  for (const auto& a : corpus::algebras()) {
    if (!check_zinbiel(a).passed()) v.fail(a.name() + " is not Zinbiel");
    if (!check_commutative_associative(sub_adjacent(a)).passed()) v.fail(a.name() + " sub-adjacent fails");
    if (!check_left_commutativity(a).passed()) v.fail(a.name() + " not left-commutative");
  }
  return v;
}

Verdict duals_and_mutations() {
  Verdict v;
  auto g = rng(2);
  std::vector<Algebra> algs;
  for (const auto& a : corpus::base_algebras())
    if (a.dim() <= 3) algs.push_back(a);
  for (int t = 0; t < 200; ++t) {
    const auto& a = algs[static_cast<std::size_t>(t) % algs.size()];
    auto rep = corpus::random_representation(a, 3, g);
    if (!check_representation(dual_representation(rep)).passed()) v.fail("dual of a representation of " + a.name() + " fails");
  }
  int kept = 0, skipped = 0;
  for (int t = 0; kept < 200; ++t) {
    const auto& a = algs[static_cast<std::size_t>(t) % algs.size()];
    auto rep = corpus::random_representation(a, 3, g);
    int m = rep.space_dim();
    auto pick = [&](int hi) { return std::uniform_int_distribution<int>(0, hi - 1)(g); };
    int i = pick(a.dim()), r = pick(m), c = pick(m);
    bool on_rho = pick(2) == 0;
    Matrix mat = on_rho ? rep.rho_basis(i) : rep.mu_basis(i);
    mat(r, c) = mat(r, c) + a.field().make(1 + pick(3));
    auto w = on_rho ? rep.with_rho(i, mat) : rep.with_mu(i, mat);
    if (check_representation(w).passed()) {
      ++skipped;
      if (!semidirect_is_zinbiel(w)) v.fail("checker accepted a mutation that breaks the semidirect product");
      continue;
    }
    ++kept;
    if (semidirect_is_zinbiel(w)) v.fail("rejected mutation still gives a Zinbiel semidirect product");
  }
  v.note += (v.note.empty() ? "" : "; ") + std::to_string(skipped) + " mutations stayed valid and were skipped";
  return v;
}

Verdict bialgebra_equivalences() {
  Verdict v;
  for (const auto& b : corpus::bialgebras()) {
    if (!check_bialgebra(b).passed()) v.fail(b.name() + ": bialgebra check");
    if (!check_matched_pair(bialgebra_to_matched_pair(b)).passed()) v.fail(b.name() + ": coregular matched pair");
    auto m = bialgebra_to_manin(b);
    if (!check_manin_triple(m).passed()) v.fail(b.name() + ": Manin triple");
    auto back = manin_to_bialgebra(m);
    if (!same(back.primal(), b.primal()) || !same(back.dual(), b.dual())) v.fail(b.name() + ": roundtrip differs");
  }
  return v;
}

Verdict bracket_pin() {
  Verdict v;
  auto g = rng(4);
  for (const auto& a : corpus::algebras())
    for (int t = 0; t < 100; ++t) {
      auto r = corpus::random_tensor(a.dim(), a.field(), g);
      auto J = J_alpha(coboundary_alpha(a, r));
      auto br = zybe_bracket(a, r);
      for (int x = 0; x < a.dim(); ++x)
        if (!(J[static_cast<std::size_t>(x)] == apply_H(a, a.basis(x), br) - zybe_correction(a, a.basis(x), r))) {
          v.fail("identity fails on " + a.name());
          return v;
        }
    }
  return v;
}

Verdict coboundary_conditions() {
  Verdict v;
  int both = 0, obstructed = 0;
  auto visit = [&](const Algebra& a, const Tensor2& r) {
    auto cb = check_coboundary_bialgebra(a, r);
    if (cb.report.passed()) {
      ++both;
      if (!check_bialgebra(*cb.bialgebra).passed()) v.fail("coboundary r on " + a.name() + " gives no bialgebra");
    } else if (cb.report.find(kSkewPartClause)->passed && !a.field().is_rational()) {
      ++obstructed;
      if (check_bialgebra(Bialgebra(a, product_r(a, r))).passed()) v.fail("r failing H(x)⟦r,r⟧ = 0 on " + a.name() + " still gives a bialgebra");
    }
  };
  auto n2 = corpus::n2(corpus::f7());
  enumerate_tensors(n2, false, -1, [&](const Tensor2& r) { return visit(n2, r), true; });
  // all of F_7^{2×2} on N2, a seeded sample on N3(2,1)
  auto n3 = corpus::n3(2, 1, corpus::f7());
  auto g = rng(5);
  for (int t = 0; t < 3000; ++t) {
    auto r = corpus::random_tensor(3, n3.field(), g);
    visit(n3, t % 2 ? sym_part(r) : r);
  }
  for (const auto& s : corpus::frozen_solutions()) visit(s.algebra, s.r);
  for (const auto& R : corpus::quasi_triangular()) visit(R.base(), R.r());
  for (const auto& s : corpus::bracket_obstructed()) visit(s.algebra, s.r);
  if (!both || !obstructed) v.fail("no instances");
  v.note += (v.note.empty() ? "" : "; ") + std::to_string(both) + " coboundary, " + std::to_string(obstructed) + " obstructed";
  return v;
}

Verdict homomorphisms() {
  Verdict v;
  for (const auto& R : corpus::quasi_triangular()) {
    auto dual = product_r(R.base(), R.r());
    if (!homomorphism_clause("r+", R.r_plus(), dual, R.base()).passed) v.fail("r₊ on " + R.base().name());
    if (!homomorphism_clause("r-", R.r_minus(), dual, R.base()).passed) v.fail("r₋ on " + R.base().name());
  }
  auto D = zinbiel_double(trivial_bialgebra(corpus::n3(2, 1)));
  auto r = D.canonical_r;
  r(0, 1) = r(0, 1) + 1;
  RMatrix R(D.algebra, r);
  auto dual = product_r(D.algebra, r);
  auto c = homomorphism_clause("r+", R.r_plus(), dual, D.algebra);
  if (R.solves_zybe() || c.passed || c.witness.size() != 2) {
    v.fail("mutated r gives no witness");
  } else {
    auto xi = unit_vector(D.algebra.dim(), c.witness[0]), eta = unit_vector(D.algebra.dim(), c.witness[1]);
    if (is_zero(R.r_plus().apply(dual.product(xi, eta)) - D.algebra.product(R.r_plus().apply(xi), R.r_plus().apply(eta))))
      v.fail("witness does not replay");
  }
  return v;
}

Verdict plus_product_and_relative_rb() {
  Verdict v;
  for (const auto& R : corpus::quasi_triangular()) {
    auto plus = product_plus(R.base(), R.I());
    if (!check_zinbiel(plus).passed()) v.fail("(A*,·₊) on " + R.base().name());
    auto act = coregular_action(R.base(), plus);
    if (!check_action(act).passed() || !check_relative_rb(R.r_plus(), act, Scalar(-1)).passed()) v.fail("relative RB on " + R.base().name());
  }
  return v;
}

Verdict doubles() {
  Verdict v;
  for (const auto& b : corpus::bialgebras())
    if (!verify_double_factorizable(zinbiel_double(b)).passed()) v.fail("double of " + b.name());
  return v;
}

Verdict factorization() {
  Verdict v;
  auto g = rng(9);
  for (const auto& R : corpus::factorizable())
    for (int t = 0; t < 100; ++t) {
      auto x = corpus::random_vector(R.base().dim(), R.base().field(), g);
      auto [xp, xm] = factorize(R, x);
      if (!(xp - xm == x) || !in_factorization_image(R, xp, xm)) v.fail("factorization on " + R.base().name());
    }
  return v;
}

Verdict rb_bijection() {
  Verdict v;
  for (const auto& R : corpus::factorizable())
    for (int l : {1, 2, -3}) {
      auto lambda = R.base().field().make(l);
      auto q = rb_from_factorizable(R, lambda);
      if (!check_quadratic_rb(q).passed()) v.fail("quadratic RB check on " + R.base().name());
      auto back = factorizable_from_rb(q, lambda);
      if (!(back.r() == R.r())) v.fail("r → P → r on " + R.base().name());
      auto q2 = rb_from_factorizable(back, lambda);
      if (!(q2.P.P == q.P.P) || !(q2.quadratic.omega == q.quadratic.omega)) v.fail("P → r → P on " + R.base().name());
    }
  for (const auto& d : corpus::doubles()) {
    RMatrix R(d.algebra, d.canonical_r);
    int n = d.source.dim();
    for (int l : {1, 2, -3}) {
      auto lambda = d.algebra.field().make(l);
      auto q = rb_from_factorizable(R, lambda);
      Matrix expected(2 * n, 2 * n);
      for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j) expected(i, j) = d.algebra.field().make(0);
      for (int i = 0; i < n; ++i) expected(i, i) = -lambda;
      if (!(q.P.P == expected)) v.fail("P(x,ξ) = −λ(x,0) on " + d.algebra.name());
      if (!(q.quadratic.omega.matrix() == standard_form(n).matrix())) v.fail("ω_I on " + d.algebra.name());
    }
  }
  return v;
}

Verdict connes_roundtrips() {
  Verdict v;
  for (const auto& q : corpus::quadratic()) {
    auto c = connes_from_zinbiel(q);
    if (!check_connes(c).passed()) v.fail("Connes check on " + q.algebra.name());
    auto back = zinbiel_from_connes(c);
    if (!same(back.algebra, q.algebra) || !(back.omega == q.omega)) v.fail("roundtrip on " + q.algebra.name());
  }
  for (int l : {1, 2, -3})
    for (const auto& q : corpus::quadratic_rb(Scalar(l))) {
      auto c = connes_from_zinbiel(q.quadratic, q.P);
      if (!check_connes(c).passed()) v.fail("Connes check with P on " + q.P.base.name());
      auto back = zinbiel_from_connes(c);
      QuadraticRB again{back, RBOperator{back.algebra, c.P->P, c.P->weight}};
      if (!same(back.algebra, q.quadratic.algebra) || !check_quadratic_rb(again).passed()) v.fail("roundtrip with P on " + q.P.base.name());
    }
  return v;
}

std::pair<int, std::string> shell(const std::string& cmd) {
  std::string out;
  FILE* p = popen((cmd + " 2>&1").c_str(), "r");
  if (!p) return {-1, ""};
  std::array<char, 512> buf{};
  while (fgets(buf.data(), static_cast<int>(buf.size()), p)) out += buf.data();
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Verdict cli() {
  Verdict v;
  std::string bin = ZINBIEL_CLI, data = ZINBIEL_DATA_DIR;
  auto [cc, cout_] = shell("'" + bin + "' corpus-check");
  if (cc != 0) v.fail("corpus-check exited " + std::to_string(cc));
  auto [vc, vout] = shell("'" + bin + "' validate algebra '" + data + "/idempotent.zb'");
  if (vc != 1) v.fail("validate on the idempotent algebra exited " + std::to_string(vc));
  if (vout.find("witness (e1, e1, e1)") == std::string::npos || vout.find("replay:") == std::string::npos)
    v.fail("witness or replay missing");
  // the replay line is the defect e∘(e∘e) − (2 e∘e)∘e = −e
  auto e = corpus::idempotent();
  if (!(zinbiel_defect(e, e.basis(0), e.basis(0), e.basis(0)) == Vector{Scalar(-1)})) v.fail("defect is not −e");
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"corpus algebras are Zinbiel, left-commutative, with commutative associative sub-adjacent", corpus_soundness},
      {"dual representations valid; screened mutations break the semidirect product", duals_and_mutations},
      {"bialgebra, coregular matched pair and Manin triple agree; roundtrip exact", bialgebra_equivalences},
      {"J_α identity pins the Yang-Baxter bracket", bracket_pin},
      {"coboundary conditions give bialgebras; bracket obstruction breaks them over F_7", coboundary_conditions},
      {"r₊, r₋ are homomorphisms; ⟦r,r⟧ ≠ 0 gives a witness", homomorphisms},
      {"(A*,·₊) is Zinbiel and r₊ is a relative Rota-Baxter operator of weight −1", plus_product_and_relative_rb},
      {"doubles of corpus bialgebras are factorizable quasi-triangular", doubles},
      {"x = x₊ − x₋ with (x₊, x₋) in the image", factorization},
      {"factorizable r ↔ quadratic Rota-Baxter for λ ∈ {1, 2, −3}, closed forms on doubles", rb_bijection},
      {"Connes cocycle ↔ quadratic Zinbiel roundtrips, with and without P", connes_roundtrips},
      {"CLI: corpus-check passes, idempotent algebra fails at (e,e,e)", cli},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    failures += !v.ok;
    std::cout << (v.ok ? "[PASS] " : "[FAIL] ") << i + 1 << " " << criteria[i].first;
    if (!v.note.empty()) std::cout << " (" << v.note << ")";
    std::cout << " [" << ms << " ms]\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed\n";
  return failures ? 1 : 0;
}
