#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include "cmhopf/cmhopf.h"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage        = 2;

// Work grows like 2^n; these keep every command interactive.
constexpr int kMaxElementDegree = 14;
constexpr int kMaxSweepDegree   = 10;

struct Config {
  int           degree        = 1;
  int           tables_degree = 5;
  int           verify_degree = 6;
  cmh_coords    coords = CMH_COORDS_DELTA;
  cmh_format    format = CMH_FORMAT_TEXT;
  std::uint64_t seed   = 42;
  int           trials = 10;
  int           order  = 6;
  std::string   u;
  std::string   out;
  bool          inject_fault = false;
};

struct CString {
  char* p = nullptr;
  ~CString() { cmh_string_free(p); }
};

struct ElementDeleter {
  void operator()(cmh_element* e) const { cmh_element_free(e); }
};
struct ReportDeleter {
  void operator()(cmh_report* r) const { cmh_report_free(r); }
};

int report_error(cmh_status status) {
  std::cerr << "error: " << cmh_last_error() << '\n';
  return status == CMH_ERR_INVALID_ARGUMENT || status == CMH_ERR_PARSE
                 || status == CMH_ERR_UNSUPPORTED
             ? kExitUsage
             : kExitVerifyFailed;
}

bool emit(Config const& cfg, std::string const& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return static_cast<bool>(std::cout.flush());
  }
  std::ofstream file(cfg.out, std::ios::binary);
  file << text;
  if (!file.flush()) {
    std::cerr << "error: cannot write " << cfg.out << '\n';
    return false;
  }
  return true;
}

int run_element(Config const& cfg, bool coproduct) {
  cmh_element*     raw    = nullptr;
  cmh_status const status = coproduct ? cmh_coproduct(cfg.degree, cfg.coords, &raw)
                                      : cmh_antipode(cfg.degree, cfg.coords, &raw);
  if (status != CMH_OK) {
    return report_error(status);
  }
  std::unique_ptr<cmh_element, ElementDeleter> element(raw);
  CString                                      text;
  if (cmh_status const s = cmh_element_render(element.get(), cfg.format, &text.p); s != CMH_OK) {
    return report_error(s);
  }
  return emit(cfg, text.p) ? 0 : kExitVerifyFailed;
}

int run_tables(Config const& cfg) {
  CString text;
  if (cmh_status const s = cmh_tables(cfg.tables_degree, &text.p); s != CMH_OK) {
    return report_error(s);
  }
  return emit(cfg, text.p) ? 0 : kExitVerifyFailed;
}

int run_verify(Config const& cfg) {
  cmh_verify_options const options{cfg.verify_degree, cfg.seed, cfg.trials, cfg.inject_fault ? 1 : 0};
  cmh_report*              raw = nullptr;
  if (cmh_status const s = cmh_verify(&options, &raw); s != CMH_OK) {
    return report_error(s);
  }
  std::unique_ptr<cmh_report, ReportDeleter> report(raw);
  CString                                    text;
  if (cmh_status const s = cmh_report_render(report.get(), &text.p); s != CMH_OK) {
    return report_error(s);
  }
  int passed = 0;
  cmh_report_passed(report.get(), &passed);
  std::string body = text.p;
  body += passed != 0 ? "all checks passed\n" : "verification failed\n";
  if (!emit(cfg, body)) {
    return kExitVerifyFailed;
  }
  return passed != 0 ? 0 : kExitVerifyFailed;
}

int run_conjugate(Config const& cfg) {
  CString text;
  int     zero = 0;
  if (cmh_status const s = cmh_conjugate(cfg.u.c_str(), cfg.order, &text.p, &zero); s != CMH_OK) {
    return report_error(s);
  }
  if (!emit(cfg, text.p)) {
    return kExitVerifyFailed;
  }
  return zero != 0 ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coproducts, antipodes and checks for the Connes–Moscovici and Faà di Bruno Hopf algebras"};
  app.require_subcommand(1);
  Config cfg;

  std::map<std::string, cmh_coords> const coords{
      {"delta", CMH_COORDS_DELTA}, {"a", CMH_COORDS_A}, {"gamma", CMH_COORDS_GAMMA}};
  std::map<std::string, cmh_format> const formats{
      {"table", CMH_FORMAT_TABLE}, {"json", CMH_FORMAT_JSON}, {"text", CMH_FORMAT_TEXT}};

  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", cfg.out, "Write output to this file instead of stdout");
  };
  auto add_element = [&](char const* name, char const* help) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->add_option("--degree", cfg.degree, "Generator index n")
        ->required()
        ->check(CLI::Range(1, kMaxElementDegree));
    cmd->add_option("--coords", cfg.coords, "delta, a or gamma")
        ->transform(CLI::CheckedTransformer(coords, CLI::ignore_case));
    cmd->add_option("--format", cfg.format, "table, json or text")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    add_out(cmd);
    return cmd;
  };

  CLI::App* coproduct = add_element("coproduct", "Coproduct of one generator");
  CLI::App* antipode  = add_element("antipode", "Antipode of one generator");

  CLI::App* tables = app.add_subcommand("tables", "Coefficient tables and collected displays");
  tables->add_option("--degree", cfg.tables_degree, "Largest weight")
      ->default_val(5)
      ->check(CLI::Range(1, kMaxSweepDegree));
  add_out(tables);

  CLI::App* verify = app.add_subcommand("verify", "Run every cross-check up to a degree");
  verify->add_option("--degree", cfg.verify_degree, "Largest degree")
      ->default_val(6)
      ->check(CLI::Range(1, kMaxSweepDegree));
  verify->add_option("--seed", cfg.seed, "Seed for random diffeomorphisms")->default_val(42);
  verify->add_option("--trials", cfg.trials, "Random samples per check")
      ->default_val(10)
      ->check(CLI::PositiveNumber);
  verify->add_flag("--inject-fault", cfg.inject_fault)->group("");
  add_out(verify);

  CLI::App* conjugate = app.add_subcommand("conjugate", "Linearize x' = u(x)");
  conjugate->add_option("--u", cfg.u, "Comma-separated u_1, u_2, ... of u = x + sum u_n x^(n+1)");
  conjugate->add_option("--order", cfg.order, "Number of coefficients of phi")
      ->default_val(6)
      ->check(CLI::PositiveNumber);
  add_out(conjugate);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  if (coproduct->parsed()) {
    return run_element(cfg, true);
  }
  if (antipode->parsed()) {
    return run_element(cfg, false);
  }
  if (tables->parsed()) {
    return run_tables(cfg);
  }
  if (verify->parsed()) {
    return run_verify(cfg);
  }
  return run_conjugate(cfg);
}
