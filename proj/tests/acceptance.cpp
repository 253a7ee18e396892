// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every comparison is exact rational equality; the only
// numeric limits are the wall-clock budgets below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cmhopf/cm_fdb.hpp"
#include "cmhopf/coefficients.hpp"
#include "cmhopf/render.hpp"
#include "cmhopf/shuffle.hpp"

using namespace cmhopf;

namespace {

constexpr double kTableSeconds     = 5.0;
constexpr double kOracleSeconds    = 60.0;
constexpr double kAxiomSeconds     = 120.0;
constexpr double kDefaultSeconds   = 120.0;
constexpr int    kOracleDegree     = 10;
constexpr int    kOraclePairs      = 25;
constexpr int    kPbwDegree        = 8;
constexpr int    kAxiomDegree      = 8;
constexpr int    kWordDegree       = 8;
constexpr int    kRMaxK            = 5;
constexpr int    kConjugacyTrials  = 10;
constexpr int    kConjugacyOrder   = 10;
constexpr int    kSymmetralWeight  = 6;
constexpr std::uint64_t kSeed      = 20240601;

struct Entry {
  Composition sequence;
  Rational    value;
};

Rational q(long p, long d = 1) { return make_rational(p, d); }

// Published coproduct coefficients, in the published reading order.
std::vector<Entry> const& published_coproduct() {
  static std::vector<Entry> const rows{
      {{1, 1}, q(1)},
      {{1, 2}, q(3)},        {{2, 1}, q(1)},        {{1, 1, 1}, q(1)},
      {{1, 3}, q(6)},        {{2, 2}, q(4)},        {{3, 1}, q(1)},
      {{1, 1, 2}, q(7)},     {{1, 2, 1}, q(3, 2)},  {{2, 1, 1}, q(3, 2)},
      {{1, 1, 1, 1}, q(1)},
      {{1, 4}, q(10)},       {{2, 3}, q(10)},       {{3, 2}, q(5)},
      {{4, 1}, q(1)},        {{1, 1, 3}, q(25)},    {{1, 3, 1}, q(2)},
      {{3, 1, 1}, q(2)},     {{1, 2, 2}, q(25, 2)}, {{2, 1, 2}, q(25, 2)},
      {{2, 2, 1}, q(3)},     {{1, 1, 1, 2}, q(15)}, {{1, 1, 2, 1}, q(2)},
      {{1, 2, 1, 1}, q(2)},  {{2, 1, 1, 1}, q(2)},  {{1, 1, 1, 1, 1}, q(1)},
  };
  return rows;
}

std::vector<Entry> const& published_antipode() {
  static std::vector<Entry> const rows{
      {{1}, q(-1)},
      {{2}, q(-1)},             {{1, 1}, q(1)},
      {{3}, q(-1)},             {{1, 2}, q(3)},          {{2, 1}, q(1)},
      {{1, 1, 1}, q(-2)},
      {{4}, q(-1)},             {{1, 3}, q(6)},          {{2, 2}, q(4)},
      {{3, 1}, q(1)},           {{1, 1, 2}, q(-11)},     {{1, 2, 1}, q(-9, 2)},
      {{2, 1, 1}, q(-5, 2)},    {{1, 1, 1, 1}, q(6)},
      {{5}, q(-1)},             {{1, 4}, q(10)},         {{2, 3}, q(10)},
      {{3, 2}, q(5)},           {{4, 1}, q(1)},          {{1, 1, 3}, q(-35)},
      {{1, 3, 1}, q(-8)},       {{3, 1, 1}, q(-3)},      {{1, 2, 2}, q(-55, 2)},
      {{2, 1, 2}, q(-35, 2)},   {{2, 2, 1}, q(-7)},      {{1, 1, 1, 2}, q(50)},
      {{1, 1, 2, 1}, q(22)},    {{1, 2, 1, 1}, q(29, 2)}, {{2, 1, 1, 1}, q(19, 2)},
      {{1, 1, 1, 1, 1}, q(-24)},
  };
  return rows;
}

struct TensorTerm {
  long     coeff;
  Monomial left;
  Monomial right;
};

struct PolyTerm {
  long     coeff;
  Monomial monomial;
};

// Reduced coproducts of Gamma_1..Gamma_5 after commutative collection.
std::vector<std::vector<TensorTerm>> const& published_reduced_coproducts() {
  static std::vector<std::vector<TensorTerm>> const displays{
      {},
      {{1, {1}, {1}}},
      {{1, {2}, {1}}, {1, {1, 1}, {1}}, {3, {1}, {2}}},
      {{1, {3}, {1}}, {3, {1, 2}, {1}}, {1, {1, 1, 1}, {1}}, {4, {2}, {2}}, {7, {1, 1}, {2}},
       {6, {1}, {3}}},
      {{1, {4}, {1}}, {4, {1, 3}, {1}}, {3, {2, 2}, {1}}, {6, {1, 1, 2}, {1}},
       {1, {1, 1, 1, 1}, {1}}, {5, {3}, {2}}, {25, {1, 2}, {2}}, {15, {1, 1, 1}, {2}},
       {10, {2}, {3}}, {25, {1, 1}, {3}}, {10, {1}, {4}}},
  };
  return displays;
}

std::vector<std::vector<PolyTerm>> const& published_antipodes() {
  static std::vector<std::vector<PolyTerm>> const displays{
      {{-1, {1}}},
      {{-1, {2}}, {1, {1, 1}}},
      {{-1, {3}}, {4, {1, 2}}, {-2, {1, 1, 1}}},
      {{-1, {4}}, {7, {1, 3}}, {4, {2, 2}}, {-18, {1, 1, 2}}, {6, {1, 1, 1, 1}}},
      {{-1, {5}}, {11, {1, 4}}, {15, {2, 3}}, {-46, {1, 1, 3}}, {-52, {1, 2, 2}},
       {96, {1, 1, 1, 2}}, {-24, {1, 1, 1, 1, 1}}},
  };
  return displays;
}

struct Outcome {
  bool        passed = true;
  std::string detail;

  void fail(std::string what) {
    if (passed) {
      detail = std::move(what);
    }
    passed = false;
  }
};

// Compares a computed table with the published rows of the given weights,
// in order.
void compare_table(std::vector<Entry> const&                      expected,
                   int                                            first_weight,
                   int                                            last_weight,
                   std::function<std::vector<TableRow>(int)> const& compute,
                   Outcome&                                       out) {
  std::vector<TableRow> computed;
  for (int n = first_weight; n <= last_weight; ++n) {
    auto rows = compute(n);
    computed.insert(computed.end(), rows.begin(), rows.end());
  }
  if (computed.size() != expected.size()) {
    out.fail(std::to_string(computed.size()) + " rows computed, " + std::to_string(expected.size())
             + " published");
    return;
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (!(computed[i].sequence == expected[i].sequence)) {
      out.fail("row " + std::to_string(i + 1) + " is " + computed[i].sequence.to_string() + ", published "
               + expected[i].sequence.to_string());
      return;
    }
    if (computed[i].value != expected[i].value) {
      out.fail(render_row(computed[i]) + ", published " + expected[i].value.get_str());
      return;
    }
  }
  out.detail = std::to_string(expected.size()) + " entries";
}

Outcome ac1() {
  Outcome out;
  compare_table(published_coproduct(), 2, 5, [](int n) { return coproduct_table(n); }, out);
  return out;
}

Outcome ac2() {
  Outcome out;
  compare_table(published_antipode(), 1, 5, [](int n) { return antipode_table(n); }, out);
  return out;
}

Outcome ac3() {
  Outcome out;
  for (int n = 1; n <= 5; ++n) {
    TensorElement expected(Family::gamma);
    for (auto const& t : published_reduced_coproducts()[static_cast<std::size_t>(n - 1)]) {
      expected.add_term(t.left, t.right, t.coeff);
    }
    TensorElement reduced = coproduct_delta(n, Family::gamma);
    reduced.add_term(Monomial::generator(n), Monomial{}, -1);
    reduced.add_term(Monomial{}, Monomial::generator(n), -1);
    if (!(reduced == expected)) {
      out.fail(reduced_coproduct_display(n));
    }

    AlgebraElement expected_s(Family::gamma);
    for (auto const& t : published_antipodes()[static_cast<std::size_t>(n - 1)]) {
      expected_s.add_term(t.monomial, t.coeff);
    }
    if (!(antipode_delta(n, Family::gamma) == expected_s)) {
      out.fail(antipode_display(n));
    }
  }
  if (out.passed) {
    out.detail = "10 displays";
  }
  return out;
}

Outcome ac4() {
  Outcome         out;
  std::mt19937_64 rng(kSeed);
  for (int t = 0; t < kOraclePairs; ++t) {
    Diffeo const f = random_diffeo(rng, kOracleDegree);
    Diffeo const g = random_diffeo(rng, kOracleDegree);
    for (int n = 1; n <= kOracleDegree; ++n) {
      if (!oracle_coproduct_eval(n, f, g).agree()) {
        out.fail("pair " + std::to_string(t) + ", n = " + std::to_string(n));
      }
    }
  }
  if (out.passed) {
    out.detail = std::to_string(kOraclePairs) + " pairs, n <= " + std::to_string(kOracleDegree);
  }
  return out;
}

Outcome ac5() {
  Outcome         out;
  std::mt19937_64 rng(kSeed + 1);
  for (int t = 0; t < kOraclePairs; ++t) {
    Diffeo const f = random_diffeo(rng, kOracleDegree);
    for (int n = 1; n <= kOracleDegree; ++n) {
      if (!oracle_antipode_eval(n, f).agree()) {
        out.fail("diffeo " + std::to_string(t) + ", n = " + std::to_string(n));
      }
    }
  }
  if (out.passed) {
    out.detail = std::to_string(kOraclePairs) + " diffeos, n <= " + std::to_string(kOracleDegree);
  }
  return out;
}

Outcome ac6() {
  Outcome out;
  for (int n = 1; n <= kPbwDegree; ++n) {
    auto const r = recursive_coproduct_delta(n);
    if (!r.clean()) {
      out.fail("n = " + std::to_string(n) + ": X/Y letters survive");
    } else if (!(r.coproduct == coproduct_delta(n))) {
      out.fail("n = " + std::to_string(n) + ": recursion differs from the closed form");
    }
  }
  if (out.passed) {
    out.detail = "n <= " + std::to_string(kPbwDegree) + ", no residual letters";
  }
  return out;
}

Outcome ac7() {
  Outcome         out;
  std::mt19937_64 rng(kSeed + 2);
  for (int t = 0; t < kOraclePairs; ++t) {
    Diffeo const f = random_diffeo(rng, kOracleDegree);
    Diffeo const g = random_diffeo(rng, kOracleDegree);
    for (int n = 1; n <= kOracleDegree; ++n) {
      if (!oracle_coproduct_a_eval(n, f, g).agree()) {
        out.fail("coproduct, pair " + std::to_string(t) + ", n = " + std::to_string(n));
      }
      if (!oracle_antipode_a_eval(n, f).agree()) {
        out.fail("antipode, diffeo " + std::to_string(t) + ", n = " + std::to_string(n));
      }
    }
  }
  if (out.passed) {
    out.detail = std::to_string(kOraclePairs) + " pairs, n <= " + std::to_string(kOracleDegree);
  }
  return out;
}

Outcome ac8() {
  Outcome    out;
  auto const report = check_hopf_axioms(delta_coproduct_images(kAxiomDegree),
                                        delta_antipode_images(kAxiomDegree), {}, kAxiomDegree);
  if (report.generators_checked != kAxiomDegree) {
    out.fail(std::to_string(report.generators_checked) + " generators checked");
  }
  for (auto const& f : report.failures) {
    out.fail("generator " + std::to_string(f.generator) + ", " + f.axiom + ": " + f.residual);
  }
  if (out.passed) {
    out.detail = "degree <= " + std::to_string(kAxiomDegree);
  }
  return out;
}

Outcome ac9() {
  Outcome out;
  for (int n = 1; n <= kWordDegree; ++n) {
    if (!verify_gamma_coproduct(n).ok) {
      out.fail("word coproduct of Gamma_" + std::to_string(n));
    }
    if (!verify_gamma_antipode(n).ok) {
      out.fail("word antipode of Gamma_" + std::to_string(n));
    }
  }
  int compositions = 0;
  for (int w = 1; w <= kWordDegree; ++w) {
    for (auto const& c : enumerate_compositions(w)) {
      ++compositions;
      if (coeff_Q_dual(c) != Rational(coeff_Q_closed(c))) {
        out.fail("Q differs at " + c.to_string());
      }
      for (int k = 1; k <= kRMaxK; ++k) {
        Integer const expected =
            c.length() == 1 ? Integer(k) : Integer(c.suffix_sum(1) + k) * coeff_R(c.slice(1, c.length()), k);
        if (coeff_R(c, k) != expected) {
          out.fail("R recursion fails at " + c.to_string() + ", k = " + std::to_string(k));
        }
      }
    }
  }
  if (out.passed) {
    out.detail = "Gamma_n for n <= " + std::to_string(kWordDegree) + ", " + std::to_string(compositions)
                 + " compositions";
  }
  return out;
}

Outcome ac10() {
  Outcome         out;
  std::mt19937_64 rng(kSeed + 3);
  for (int t = 0; t < kConjugacyTrials; ++t) {
    std::vector<Rational> u;
    for (int i = 0; i < kConjugacyOrder; ++i) {
      u.push_back(random_rational(rng));
    }
    Diffeo const      phi      = conjugacy_phi(u, kConjugacyOrder);
    PowerSeries const residual = conjugacy_residual(u, phi);
    if (residual.order() < kConjugacyOrder + 1 || !residual.is_zero()) {
      out.fail("trial " + std::to_string(t) + ": residual " + to_text(residual));
    }
    auto const sym = symmetrality_check(conjugacy_mould(u, kSymmetralWeight), kSymmetralWeight);
    if (!sym.passed()) {
      out.fail("trial " + std::to_string(t) + ": mould is not symmetral");
    }
  }
  if (out.passed) {
    out.detail = std::to_string(kConjugacyTrials) + " series, order " + std::to_string(kConjugacyOrder);
  }
  return out;
}

struct Criterion {
  char const*             id;
  char const*             title;
  double                  limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {"AC1", "coproduct table", kTableSeconds, ac1},
      {"AC2", "antipode table", kTableSeconds, ac2},
      {"AC3", "collected Gamma displays", kDefaultSeconds, ac3},
      {"AC4", "coproduct vs composition", kOracleSeconds, ac4},
      {"AC5", "antipode vs inversion", kOracleSeconds, ac5},
      {"AC6", "closed coproduct vs PBW recursion", kDefaultSeconds, ac6},
      {"AC7", "Faa di Bruno coordinates vs series", kDefaultSeconds, ac7},
      {"AC8", "Hopf axioms", kAxiomSeconds, ac8},
      {"AC9", "word algebra, Q and R", kDefaultSeconds, ac9},
      {"AC10", "conjugacy", kDefaultSeconds, ac10},
  };

  bool all = true;
  for (auto const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    out;
    try {
      out = c.run();
    } catch (std::exception const& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    double const seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= c.limit_seconds) {
      out.fail("took " + std::to_string(seconds) + " s");
    }
    all = all && out.passed;
    std::printf("%s %s %s: %s [%.2f s, limit %.0f s]\n", out.passed ? "PASS" : "FAIL", c.id, c.title,
                out.detail.c_str(), seconds, c.limit_seconds);
  }
  return all ? 0 : 1;
}
