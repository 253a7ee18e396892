#include "cmhopf/verify.hpp"

#include <random>
#include <stdexcept>

#include "cmhopf/cm_fdb.hpp"
#include "cmhopf/coefficients.hpp"
#include "cmhopf/shuffle.hpp"

namespace cmhopf {

namespace {

  CheckResult from_axioms(std::string name, HopfAxiomReport const& r) {
    CheckResult out{std::move(name), true, {}};
    if (!r.passed()) {
      auto const& f = r.failures.front();
      out.passed    = false;
      out.detail    = "degree " + std::to_string(f.generator) + ", " + f.axiom + ": " + f.residual;
    }
    return out;
  }

  CoproductImages a_coproduct_images(int max_degree) {
    CoproductImages images;
    for (int n = 1; n <= max_degree; ++n) {
      images.emplace(n, coproduct_a(n));
    }
    return images;
  }

  AntipodeImages a_antipode_images(int max_degree) {
    AntipodeImages images;
    for (int n = 1; n <= max_degree; ++n) {
      images.emplace(n, antipode_a(n));
    }
    return images;
  }

  CheckResult check_pbw(int degree) {
    CheckResult out{"closed coproduct vs PBW recursion", true, {}};
    for (int n = 1; n <= degree && out.passed; ++n) {
      RecursiveCoproduct const r = recursive_coproduct_delta(n);
      if (!r.clean()) {
        out.passed = false;
        out.detail = "degree " + std::to_string(n) + ": leftover letters";
      } else if (TensorElement const diff = r.coproduct - coproduct_delta(n); !diff.is_zero()) {
        out.passed = false;
        out.detail = "degree " + std::to_string(n) + ": " + to_text(diff);
      }
    }
    return out;
  }

  std::string oracle_detail(int n, int trial, OracleValues const& v) {
    return "degree " + std::to_string(n) + ", trial " + std::to_string(trial) + ": "
           + to_string(v.lhs) + " != " + to_string(v.rhs);
  }

  std::vector<CheckResult> check_oracles(VerifyOptions const& o) {
    CheckResult coproduct{"series oracle, delta coproduct", true, {}};
    CheckResult antipode{"series oracle, delta antipode", true, {}};
    CheckResult coproduct_a_check{"series oracle, a coproduct", true, {}};
    CheckResult antipode_a_check{"series oracle, a antipode", true, {}};
    auto record = [](CheckResult& r, int n, int t, OracleValues const& v) {
      if (r.passed && !v.agree()) {
        r.passed = false;
        r.detail = oracle_detail(n, t, v);
      }
    };

    std::mt19937_64 rng(o.seed);
    for (int t = 0; t < o.trials; ++t) {
      Diffeo const f = random_diffeo(rng, o.degree);
      Diffeo const g = random_diffeo(rng, o.degree);
      for (int n = 1; n <= o.degree; ++n) {
        record(coproduct, n, t, oracle_coproduct_eval(n, f, g));
        record(antipode, n, t, oracle_antipode_eval(n, f));
        record(coproduct_a_check, n, t, oracle_coproduct_a_eval(n, f, g));
        record(antipode_a_check, n, t, oracle_antipode_a_eval(n, f));
      }
    }
    return {coproduct, antipode, coproduct_a_check, antipode_a_check};
  }

  CheckResult check_q(int degree) {
    CheckResult out{"Q closed form vs alternating sum", true, {}};
    for (int n = 1; n <= degree && out.passed; ++n) {
      for (auto const& c : enumerate_compositions(n)) {
        Rational const closed(coeff_Q_closed(c));
        Rational const dual = coeff_Q_dual(c);
        if (closed != dual) {
          out.passed = false;
          out.detail = c.to_string() + ": " + to_string(closed) + " != " + to_string(dual);
          break;
        }
      }
    }
    return out;
  }

  CheckResult check_gamma(std::string name, int degree, GammaCheck (*check)(int)) {
    CheckResult out{std::move(name), true, {}};
    for (int n = 1; n <= degree; ++n) {
      GammaCheck const g = check(n);
      if (!g.ok) {
        out.passed = false;
        out.detail = "degree " + std::to_string(n) + ": " + g.residual;
        break;
      }
    }
    return out;
  }

  CheckResult check_words(int degree) {
    CheckResult           out{"word algebra Hopf axioms", true, {}};
    WordAxiomReport const r = check_word_hopf_axioms(degree);
    if (!r.passed()) {
      out.passed = false;
      out.detail = r.failures.front();
    }
    return out;
  }

  std::vector<CheckResult> check_conjugacy(VerifyOptions const& o) {
    CheckResult     symmetral{"conjugacy mould symmetrality", true, {}};
    CheckResult     ode{"conjugacy equation residual", true, {}};
    std::mt19937_64 rng(o.seed ^ 0x9e3779b97f4a7c15ULL);
    for (int t = 0; t < o.trials; ++t) {
      std::vector<Rational> u;
      for (int n = 1; n <= o.degree; ++n) {
        u.push_back(random_rational(rng));
      }
      if (symmetral.passed) {
        SymmetralityReport const r = symmetrality_check(conjugacy_mould(u, o.degree), o.degree);
        if (!r.passed()) {
          auto const& v    = r.violations.front();
          symmetral.passed = false;
          symmetral.detail = "trial " + std::to_string(t) + ": " + to_string(v.lhs)
                             + " != " + to_string(v.rhs);
        }
      }
      if (ode.passed) {
        PowerSeries const r = conjugacy_residual(u, conjugacy_phi(u, o.degree));
        if (!r.is_zero()) {
          ode.passed = false;
          ode.detail = "trial " + std::to_string(t) + ": nonzero residual";
        }
      }
    }
    return {symmetral, ode};
  }

}  // namespace

bool VerifyReport::passed() const noexcept {
  for (auto const& c : checks) {
    if (!c.passed) {
      return false;
    }
  }
  return true;
}

VerifyReport run_verification(VerifyOptions const& o) {
  if (o.degree < 1) {
    throw std::invalid_argument("degree must be at least 1");
  }
  if (o.trials < 1) {
    throw std::invalid_argument("trials must be at least 1");
  }
  VerifyReport report;
  auto         add = [&](CheckResult r) { report.checks.push_back(std::move(r)); };

  CoproductImages coproducts = delta_coproduct_images(o.degree);
  if (o.inject_fault && o.degree >= 2) {
    coproducts.at(2).add_term(Monomial{1}, Monomial{1}, -1);
  }
  add(from_axioms("Hopf axioms, delta coordinates",
                  check_hopf_axioms(coproducts, delta_antipode_images(o.degree), {}, o.degree)));
  add(from_axioms("Hopf axioms, a coordinates",
                  check_hopf_axioms(a_coproduct_images(o.degree), a_antipode_images(o.degree), {},
                                    o.degree)));
  add(check_pbw(o.degree));
  for (auto& r : check_oracles(o)) {
    add(std::move(r));
  }
  add(check_q(o.degree));
  add(check_gamma("Gamma coproduct image", o.degree, verify_gamma_coproduct));
  add(check_gamma("Gamma antipode image", o.degree, verify_gamma_antipode));
  add(check_words(o.degree));
  for (auto& r : check_conjugacy(o)) {
    add(std::move(r));
  }
  return report;
}

std::string render_report(VerifyReport const& report) {
  std::string s;
  for (auto const& c : report.checks) {
    s += c.passed ? "PASS " + c.name : "FAIL " + c.name + ": " + c.detail;
    s += '\n';
  }
  return s;
}

}  // namespace cmhopf
