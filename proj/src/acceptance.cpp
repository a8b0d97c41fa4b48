#include "multlab/acceptance.hpp"

#include <sstream>

#include "multlab/classify.hpp"
#include "multlab/corpus.hpp"
#include "multlab/errors.hpp"
#include "multlab/extalg.hpp"
#include "multlab/generators.hpp"
#include "multlab/lindef.hpp"
#include "multlab/resolve.hpp"
#include "multlab/series.hpp"

namespace multlab {

namespace {

constexpr int kCut = 8;

struct Checker {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
  CriterionResult result(int id, std::string title) const {
    std::ostringstream d;
    if (failures.empty()) {
      for (std::size_t i = 0; i < notes.size(); ++i) d << (i ? "; " : "") << notes[i];
    } else {
      d << failures.size() << " failure(s): ";
      for (std::size_t i = 0; i < failures.size() && i < 4; ++i) d << (i ? "; " : "") << failures[i];
    }
    return CriterionResult{id, std::move(title), failures.empty(), d.str()};
  }
};

struct Loaded {
  std::string name;
  RingPresentation P;
  FiniteLocalAlgebra R;
};

Loaded load(const std::string& name) {
  RingSpec s = corpus_ring(name).spec();
  RingPresentation P = s.presentation();
  FiniteLocalAlgebra R = build_finite_algebra(P, s.cap);
  return Loaded{name, P, std::move(R)};
}

const std::vector<std::string> kKoszulRings = {"hyp2", "ci22", "msq2", "gor5", "fiber",
                                               "ci_alt", "ci222", "msq3", "x2y2z2xy"};

std::string bits(std::initializer_list<bool> b) {
  std::string s;
  for (bool x : b) s += x ? '1' : '0';
  return s;
}

std::int64_t binom(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Subspace symmetric_pair(const PrimeField& F, std::size_t n, std::size_t a, std::size_t b) {
  Vec v(n * n, 0);
  v[a * n + b] = 1;
  v[b * n + a] = 1;
  return Subspace::span(F, n * n, {v});
}

CriterionResult c1() {
  Checker c;
  {
    Loaded L = load("hyp2");
    auto S = sjodin_presentation(L.P, L.R);
    c.expect(S.relation_space.dim() == 0, "k[x]/(x^2) has a degree-2 Ext relation");
  }
  {
    Loaded L = load("ci22");
    auto S = sjodin_presentation(L.P, L.R);
    c.expect(S.relation_space == symmetric_pair(L.R.field(), 2, 0, 1), "k[y,z]/(y^2,z^2) relation is not yz+zy");
  }
  {
    Loaded L = load("fiber");
    auto S = sjodin_presentation(L.P, L.R);
    c.expect(S.relation_space == symmetric_pair(L.R.field(), 3, 1, 2), "fiber product relation is not yz+zy");
  }
  c.note("relation spaces: 0, <y'z'+z'y'>, <y'z'+z'y'> in 3 generators");
  return c.result(1, "Ext-algebra presentations of the three displayed rings");
}

CriterionResult c2() {
  Checker c;
  for (const char* name : {"hyp2", "ci22", "ci_alt", "ci222"}) {
    Loaded L = load(name);
    const int n = static_cast<int>(L.R.nvars());
    TruncSeries P = poincare_series(resolve_residue_field(L.R, kCut));
    TruncSeries closed = ci_poincare(n, n, kCut).series;
    TruncSeries expanded(kCut);
    for (int i = 0; i <= kCut; ++i) expanded[i] = binom(i + n - 1, n - 1);
    c.expect(P == closed && closed == expanded, std::string(name) + ": beta " + P.to_string());
  }
  c.note("4 complete intersections match 1/(1-t)^n through degree 8");
  return c.result(2, "Complete-intersection Poincare series");
}

CriterionResult c3() {
  Checker c;
  int count = 0;
  for (const auto& ring : corpus()) {
    Loaded L = load(ring.name);
    if (L.R.nvars() < 2) continue;
    Theorem1Report r = theorem1_check(L.P, L.R, kCut);
    ++count;
    c.expect(r.consistent(), ring.name + " inconsistent " + bits({r.stmt1, r.stmt2, r.stmt3}));
    if (ring.name == "fiber") c.expect(!r.stmt1 && !r.stmt2 && !r.stmt3, "fiber product not all-false");
    if (ring.name == "gor5") c.expect(r.stmt1 && r.stmt2 && r.stmt3, "gor5 not all-true");
  }
  c.expect(count >= 10, "fewer than 10 rings");
  c.note(std::to_string(count) + " rings consistent");
  return c.result(3, "Theorem 1 statements agree");
}

CriterionResult c4() {
  Checker c;
  int count = 0;
  for (const auto& ring : corpus()) {
    Loaded L = load(ring.name);
    Theorem2Report r = theorem2_check(L.P, L.R, kCut);
    ++count;
    const std::string b = bits({r.stmt1, r.stmt2, r.stmt2p, r.stmt3, r.stmt3p});
    c.expect(r.consistent(), ring.name + " inconsistent " + b);
    if (ring.name == "ci22") c.expect(b == "11111", "k[x,y]/(x^2,y^2) not all-true");
    if (ring.name == "hyp3") c.expect(b == "00000", "k[x]/(x^3) not all-false");
  }
  c.note(std::to_string(count) + " rings consistent");
  return c.result(4, "Theorem 2 statements agree");
}

CriterionResult c5() {
  Checker c;
  int ci = 0, golod = 0;
  for (const auto& ring : corpus()) {
    Loaded L = load(ring.name);
    Theorem3Report r;
    try {
      r = theorem3_check(L.R, kCut);
    } catch (const Inapplicable&) {
      continue;
    }
    (r.which == Theorem3Case::CompleteIntersection ? ci : golod)++;
    const std::string b = bits({r.stmt1, r.stmt2, r.stmt3, r.stmt4});
    c.expect(r.consistent(), ring.name + " inconsistent " + b);
    if (ring.name == "msq2")
      c.expect(b == "1111" && r.which == Theorem3Case::CMGolod, "k[x,y]/(x^2,xy,y^2) not all-true Golod");
    if (ring.name == "ci22")
      c.expect(b == "1111" && r.which == Theorem3Case::CompleteIntersection, "k[x,y]/(x^2,y^2) not all-true CI");
    if (ring.name == "hyp3") c.expect(b == "0000", "k[x]/(x^3) not all-false");
  }
  c.expect(ci > 0 && golod > 0, "both cases must occur");
  c.note(std::to_string(ci) + " CI and " + std::to_string(golod) + " CM+Golod rings consistent");
  return c.result(5, "Theorem 3 statements agree");
}

CriterionResult c6() {
  Checker c;
  Rng rng(20240601);
  int yes = 0, no = 0;
  const int draws = 24;
  for (int t = 0; t < draws; ++t) {
    RingSpec s = random_monomial_ring(rng, 3, 4);
    GradedAlgebra A = associated_graded(s.build());
    const bool socle_one = frobenius_check(A).is_frobenius;
    const bool pairing = frobenius_pairing_check(A);
    const bool ext = gorenstein_ext_check(A, 3);
    c.expect(socle_one == pairing && pairing == ext, "disagreement on " + s.to_text());
    (socle_one ? yes : no)++;
  }
  c.expect(yes > 0 && no > 0, "generator produced only one outcome");
  c.note(std::to_string(draws) + " algebras, " + std::to_string(yes) + " Frobenius");
  return c.result(6, "Frobenius, socle and Gorenstein routes agree");
}

CriterionResult c7() {
  Checker c;
  Rng rng(1729);
  PrimeField F(101);
  int maximal = 0, deficient = 0;
  const int draws = 12;
  for (int t = 0; t < draws; ++t) {
    const std::size_t m = 2 + t % 3;
    const std::size_t r = (t % 2 == 0 || m == 2) ? m : 2 + rng() % (m - 2);
    QuadraticPresentation Q = random_single_relation(rng, F, m, r);
    GradedAlgebra A = quadratic_algebra(Q, 6);
    ResolutionTrunc T = resolve_residue_field_window(A, 4, 6);
    std::vector<std::size_t> want{1, m, 1, 0, 0};
    c.expect(T.ranks == want, "ranks wrong for m=" + std::to_string(m) + " rank " + std::to_string(r));
    QuadRank q = relation_rank(Q.relation_tensors()[0]);
    c.expect(q.rank == r, "rank mismatch");
    c.expect(left_resolution_shape(Q, 6).is_resolution() == q.maximal, "left shape disagrees with rank");
    (q.maximal ? maximal : deficient)++;
  }
  c.expect(maximal > 0 && deficient > 0, "both rank cases must occur");
  c.note(std::to_string(draws) + " relations, " + std::to_string(maximal) + " of maximal rank");
  return c.result(7, "Single-relation algebras: ranks (1,m,1) and left shape");
}

CriterionResult c8() {
  Checker c;
  int involutions = 0, identities = 0;
  for (const auto& ring : corpus()) {
    Loaded L = load(ring.name);
    QuadraticPresentation A = quadratic_part(associated_graded(L.R));
    c.expect(quadratic_dual(quadratic_dual(A)).relations == A.relations, ring.name + ": (A!)! != A");
    ++involutions;
  }
  for (const auto& name : kKoszulRings) {
    Loaded L = load(name);
    QuadraticPresentation A = quadratic_part(associated_graded(L.R));
    for (const auto& B : {A, quadratic_dual(A)}) {
      KoszulNumericCertificate k = koszul_numeric_check(B, kCut);
      c.expect(k.series_identity_ok && k.diagonal_betti_ok, name + ": Koszul identity fails");
      ++identities;
    }
  }
  Rng rng(99);
  PrimeField F(101);
  int probes = 0, failing = 0;
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + t % 2;
    QuadraticPresentation Q = random_quadratic(rng, F, n, 1 + rng() % (n * n - 1), 3);
    c.expect(quadratic_dual(quadratic_dual(Q)).relations == Q.relations, "random (A!)! != A");
    ++involutions;
    KoszulNumericCertificate k = koszul_numeric_check(Q, 6);
    ++probes;
    if (!k.series_identity_ok) {
      ++failing;
      c.expect(!k.diagonal_betti_ok, "identity fails while Betti table is diagonal");
    }
  }
  c.expect(failing > 0, "search found no non-Koszul probe");
  c.note(std::to_string(involutions) + " involutions, " + std::to_string(identities) + " Koszul identities, " +
         std::to_string(failing) + "/" + std::to_string(probes) + " probes fail both checks");
  return c.result(8, "Quadratic duality and the Koszul series identity");
}

CriterionResult c9() {
  Checker c;
  Loaded L = load("msq2");
  GolodData g = koszul_homology_dims(L.R);
  c.expect(g.a == std::vector<std::size_t>{3, 2}, "Koszul homology is not (3,2)");
  TruncSeries P = poincare_series(resolve_residue_field(L.R, kCut));
  TruncSeries G = golod_poincare(g, kCut).series;
  TruncSeries two(kCut);
  for (int i = 0; i <= kCut; ++i) two[i] = std::int64_t{1} << i;
  c.expect(P == G && G == two, "series " + G.to_string() + " vs beta " + P.to_string());
  c.note("a = (3,2), P = 1/(1-2t) through degree 8");
  return c.result(9, "Golod arithmetic for k[x,y]/(x^2,xy,y^2)");
}

CriterionResult c10() {
  Checker c;
  for (const auto& name : kKoszulRings) {
    Loaded L = load(name);
    LinDefReport r = linearity_defect_residue(L.R, kCut);
    c.expect(r.verdict == LdVerdict::Zero, name + ": ld k not certified 0");
  }
  {
    Loaded L = load("hyp3");
    int prev = -1;
    for (int s : {4, 6, 8}) {
      LinDefReport r = linearity_defect_residue(L.R, s);
      c.expect(r.verdict == LdVerdict::LowerBound && r.value == s - 1, "k[x]/(x^3) bound at s=" + std::to_string(s));
      c.expect(r.value > prev, "lower bound not increasing");
      prev = r.value;
    }
  }
  for (const auto& ring : corpus()) {
    Loaded L = load(ring.name);
    c.expect(sega_monotonicity_check(L.R, 3, 6), ring.name + ": ld m^j exceeds ld k");
  }
  c.note(std::to_string(kKoszulRings.size()) + " Koszul rings with ld 0; k[x]/(x^3) bounds 3,5,7");
  return c.result(10, "Linearity defect");
}

CriterionResult c11() {
  Checker c;
  for (const auto& name : kKoszulRings) c.expect(froberg_check(load(name).R, kCut), name + ": Froberg fails");
  c.expect(!froberg_check(load("hyp3").R, kCut), "k[x]/(x^3) satisfies Froberg");
  int checks = 0;
  for (const auto& ring : corpus()) {
    Loaded L = load(ring.name);
    for (int m = sega_bound(L.R); m <= L.R.top_degree() + 1; ++m) {
      c.expect(levin_check(L.R, m, kCut).holds(), ring.name + ": Levin fails at m=" + std::to_string(m));
      ++checks;
    }
  }
  c.expect(levin_check(load("ci22").R, 2, kCut).holds(), "ci22 m=2");
  c.expect(levin_check(load("hyp3").R, 3, kCut).zero_module, "hyp3 m=3 not the zero module");
  c.expect(levin_check(load("msq2").R, 1, kCut).holds(), "msq2 m=1");
  c.note(std::to_string(checks) + " Levin identities past the threshold");
  return c.result(11, "Froberg and Levin relations");
}

CriterionResult c12() {
  Checker c;
  int applied = 0;
  for (const auto& ring : corpus()) {
    Loaded L = load(ring.name);
    Lemma33Report r;
    try {
      r = lemma33_check_d0(L.R, kCut);
    } catch (const NoCandidateD&) {
      continue;
    }
    c.expect(r.holds(), ring.name + ": factorization fails");
    if (r.ld_zero) ++applied;
    if (ring.name == "ci22") c.expect(r.d == IntPoly{1, 0, -2, 0, 1} && r.g_at_minus_one == 4, "ci22 D or g(-1)");
    if (ring.name == "msq2") c.expect(r.d == IntPoly{1, 0, -3, -2} && r.g_at_minus_one == 3, "msq2 D or g(-1)");
    if (ring.name == "hyp2") c.expect(r.d == IntPoly{1, 0, -1} && r.g_at_minus_one == 2, "hyp2 D or g(-1)");
  }
  c.expect(applied >= 5, "too few rings satisfy the hypothesis");
  c.note(std::to_string(applied) + " CI/Golod rings with D = (1+t)^n g, g(-1) = e");
  return c.result(12, "Multiplicity from D(t) at dimension 0");
}

}  // namespace

CriterionResult run_criterion(int id) {
  static const std::vector<CriterionResult (*)()> table = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12};
  if (id < 1 || id > kCriterionCount) throw Error("no criterion " + std::to_string(id));
  try {
    return table[id - 1]();
  } catch (const std::exception& e) {
    return CriterionResult{id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()};
  }
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (int i = 1; i <= kCriterionCount; ++i) out.push_back(run_criterion(i));
  return out;
}

}  // namespace multlab
