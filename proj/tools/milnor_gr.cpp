// milnor-gr: command-line driver for the graded-quotient engine and the q = 1 oracle.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "milnor/graded.hpp"
#include "milnor/oracle.hpp"
#include "milnor/properties.hpp"
#include "milnor/report.hpp"
#include "milnor/text.hpp"

namespace {

using namespace milnor;
using report::Format;
using report::Report;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct ParamFlags {
  std::uint32_t p = 0;
  int f = 1, r = 0, e = 0, n = 0, q = 1;
  std::string a;
  std::vector<std::uint32_t> modulus;
};

struct Common {
  std::string format = "text";
  std::int64_t window = 2;
  std::size_t cap = QuotientOptions{}.slice_cap;
};

void add_param_flags(CLI::App* cmd, ParamFlags& P) {
  cmd->add_option("--p", P.p, "residue characteristic")->required();
  cmd->add_option("--f", P.f, "residue field F_{p^f}")->capture_default_str();
  cmd->add_option("--r", P.r, "number of p-basis variables t_1..t_r")->capture_default_str();
  cmd->add_option("--e", P.e, "absolute ramification index")->required();
  cmd->add_option("--n", P.n, "work modulo p^n")->required();
  cmd->add_option("--q", P.q, "Milnor degree")->capture_default_str();
  cmd->add_option("--a", P.a, "residue class of p/pi^e, as a k-element")->required();
  cmd->add_option("--modulus", P.modulus, "irreducible modulus c_0,...,c_f for f > 1")->delimiter(',');
}

void add_common_flags(CLI::App* cmd, Common& C, bool with_window) {
  cmd->add_option("--format", C.format, "text or machine")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();
  if (with_window) {
    cmd->add_option("--window", C.window, "exponent window |alpha_i| <= W for per-slice tables")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_option("--cap", C.cap, "maximum number of degree slices in a solving window")->capture_default_str();
  }
}

Format format_of(const Common& C) { return C.format == "machine" ? Format::Machine : Format::Text; }

CDVFParams build_params(const ParamFlags& P) {
  auto ctx = P.modulus.empty() ? ResidueField::make(P.p, P.f, P.r) : ResidueField::make(P.p, P.f, P.r, P.modulus);
  return CDVFParams(ctx, P.e, P.n, P.q, parse_element(ctx, P.a));
}

int emit(const Report& rep, const Common& C, int code = 0) {
  std::cout << rep.render(format_of(C));
  return code;
}

int cmd_gr(const ParamFlags& PF, std::int64_t m, const Common& C) {
  const auto P = build_params(PF);
  GradedQuotient Q(P, m, QuotientOptions{C.cap});
  Report rep("gr");
  report::add_params(rep, P);
  report::add_descriptor(rep, P, Q.descriptor());
  report::add_size(rep, Q.size(C.window), C.window);
  return emit(rep, C);
}

int cmd_reduce(const ParamFlags& PF, std::int64_t m, const std::string& first, const std::string& second,
               const Common& C) {
  const auto P = build_params(PF);
  GradedQuotient Q(P, m, QuotientOptions{C.cap});
  const GrElement el{parse_form(P.context(), first, P.q() - 1), parse_form(P.context(), second, P.q() - 2)};
  const auto red = Q.reduce(el);
  Report rep("reduce");
  report::add_params(rep, P);
  report::add_descriptor(rep, P, Q.descriptor());
  report::add_element(rep, "input", el);
  report::add_element(rep, "reduced", red);
  rep.add("is_zero", red.is_zero() ? "yes" : "no");
  return emit(rep, C);
}

int cmd_symbol(const ParamFlags& PF, std::optional<std::int64_t> m, const std::string& text, const Common& C) {
  const auto P = build_params(PF);
  const auto sym = parse_symbol(P.context(), text);
  if (m && *m != sym.m)
    fail(Errc::MalformedSymbol, "symbol level " + std::to_string(sym.m) + " differs from --m " + std::to_string(*m));
  GradedQuotient Q(P, sym.m, QuotientOptions{C.cap});
  const auto img = rho_eval(P, sym);
  const auto red = Q.reduce(img);
  Report rep("symbol");
  report::add_params(rep, P);
  report::add_descriptor(rep, P, Q.descriptor());
  rep.add("symbol", print_symbol(sym));
  report::add_element(rep, "preimage", img);
  report::add_element(rep, "reduced", red);
  rep.add("is_zero", red.is_zero() ? "yes" : "no");
  return emit(rep, C);
}

int cmd_lemma1(const ParamFlags& PF, std::int64_t m, const std::vector<std::string>& probes, const Common& C) {
  const auto P = build_params(PF);
  std::vector<GrElement> els;
  for (const auto& text : probes)
    els.push_back({parse_form(P.context(), text, P.q() - 1), DiffForm(P.context(), P.q() - 2)});
  const auto L = lemma1_consistency(P, m, els, C.window, QuotientOptions{C.cap});
  Report rep("lemma1");
  report::add_params(rep, P);
  report::add_lemma1(rep, L);
  return emit(rep, C, L.consistent() ? 0 : kExitMismatch);
}

struct VerifyFlags {
  std::string fixture;
  std::optional<int> n;
  std::optional<int> N;
  std::string route = "auto";
  std::uint64_t cap = oracle::UnitGroupOptions{}.enumeration_cap;
  std::uint64_t seed = 7;
};

int cmd_verify_q1(const VerifyFlags& V, const Common& C) {
  using namespace oracle;
  const auto poly = EisensteinPoly::load(V.fixture);
  const int n = V.n ? *V.n : poly.n.value_or(0);
  if (n < 1) fail(Errc::InvalidParams, "level n not given and the fixture has no 'n'");
  const int e = poly.e();
  const int cn = n * e + e / static_cast<int>(poly.p - 1);
  const int N = V.N.value_or(cn + 5);
  if (N <= cn)
    fail(Errc::PreconditionViolated, "cutoff N = " + std::to_string(N) + " must exceed c_n = " + std::to_string(cn));
  UnitGroupOptions opts;
  opts.route = V.route == "enumeration" ? Route::Enumerate : V.route == "presentation" ? Route::Present : Route::Auto;
  opts.enumeration_cap = V.cap;
  opts.seed = V.seed;

  const LocalField K(poly, N);
  const auto params = params_for(K, n);
  const auto cmp = compare(K, params, opts);

  Report rep("verify-q1");
  rep.add("fixture", poly.name.empty() ? V.fixture : poly.name);
  report::add_params(rep, params);
  rep.add("c_n", std::to_string(cn));
  report::add_comparison(rep, cmp);

  // Vanishing window: both sides trivial for c_n < m <= c_n + 4.
  bool vanishing = true;
  for (const auto& row : cmp.rows)
    if (row.m > cn && row.m <= cn + 4)
      vanishing = vanishing && row.oracle_log == 0 && row.kase.kind == GradedCase::Kind::III;
  rep.add("vanishing_beyond_c_n", vanishing ? "yes" : "no");

  // Stabilization between N = c_n + 1 and N = c_n + 3.
  const auto lo = gr_orders(unit_group(LocalField(poly, cn + 1), n, opts));
  const auto hi = gr_orders(unit_group(LocalField(poly, cn + 3), n, opts));
  bool stable = lo.total_log == hi.total_log;
  for (int m = 0; m < hi.N; ++m) {
    const int a = m < lo.N ? lo.gr_log[m] : 0;
    stable = stable && a == hi.gr_log[m];
  }
  report::add_oracle(rep, "stabilization.low", lo);
  report::add_oracle(rep, "stabilization.high", hi);
  rep.add("stabilization", stable ? "yes" : "no");

  // Multiplication by p: gr^{m-e} at level n-1 against gr^m at level n.
  if (n > 1) {
    const auto lower = gr_orders(unit_group(K, n - 1, opts));
    bool bijective = true;
    std::string rows;
    for (int m = e + e / static_cast<int>(poly.p - 1) + 1; m <= cn; ++m) {
      const int up = cmp.oracle.gr_log[m], down = lower.gr_log[m - e];
      bijective = bijective && up == down;
      rows += (rows.empty() ? "" : " ") + std::to_string(m) + ":" + std::to_string(up) + "/" + std::to_string(down);
    }
    rep.add("shift_by_p.log_p", rows);
    rep.add("shift_by_p.bijective", bijective ? "yes" : "no");
  }
  const bool ok = cmp.all_match && stable && vanishing;
  rep.add("verdict", ok ? "pass" : "fail");
  return emit(rep, C, ok ? 0 : kExitMismatch);
}

int cmd_selftest(std::uint64_t seed, std::size_t forms_cases, std::size_t graded_cases, const Common& C) {
  auto props = props::forms_properties(forms_cases);
  for (auto& p : props::graded_properties(graded_cases)) props.push_back(std::move(p));
  const auto results = props::run(props, seed);
  Report rep("selftest");
  rep.add("seed", std::to_string(seed));
  report::add_properties(rep, results);
  bool ok = true;
  for (const auto& r : results) {
    if (!r.passed() && ok) std::cerr << "first failing property: " << r.suite << "." << r.name << "\n";
    ok = ok && r.passed();
  }
  return emit(rep, C, ok ? 0 : kExitMismatch);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded quotients gr^m of Milnor K-groups mod p^n, with a q = 1 brute-force oracle"};
  app.require_subcommand(1);

  ParamFlags pf;
  Common common;
  std::int64_t m = 0;
  std::optional<std::int64_t> m_opt;

  auto* gr = app.add_subcommand("gr", "classify m and print the quotient presentation and its size");
  add_param_flags(gr, pf);
  gr->add_option("--m", m, "filtration level")->required();
  add_common_flags(gr, common, true);

  std::string first = "0", second = "0";
  auto* red = app.add_subcommand("reduce", "canonical representative of (w1, w2) in gr^m");
  add_param_flags(red, pf);
  red->add_option("--m", m, "filtration level")->required();
  red->add_option("form", first, "first slot, a form of degree q-1")->capture_default_str();
  red->add_option("--second", second, "second slot, a form of degree q-2")->capture_default_str();
  add_common_flags(red, common, true);

  std::string symbol_text;
  auto* sym = app.add_subcommand("symbol", "evaluate the preimage of a symbol {1+pi^m*(u); y_1; ...}");
  add_param_flags(sym, pf);
  sym->add_option("--m", m_opt, "filtration level (must match the symbol)");
  sym->add_option("symbol", symbol_text, "symbol text")->required();
  add_common_flags(sym, common, true);

  std::vector<std::string> probes;
  auto* lem = app.add_subcommand("lemma1", "compare gr^m at level n with gr^{m-e} at level n-1");
  add_param_flags(lem, pf);
  lem->add_option("--m", m, "filtration level")->required();
  lem->add_option("--probe", probes, "first-slot probe forms checked in both presentations");
  add_common_flags(lem, common, true);

  VerifyFlags vf;
  auto* ver = app.add_subcommand("verify-q1", "compare the q = 1 engine with the brute-force oracle on a fixture");
  ver->add_option("fixture", vf.fixture, "Eisenstein polynomial fixture file")->required();
  ver->add_option("--n", vf.n, "level n (default: the fixture's n)");
  ver->add_option("--N", vf.N, "cutoff N > c_n (default c_n + 5)");
  ver->add_option("--route", vf.route, "auto, enumeration or presentation")
      ->check(CLI::IsMember({"auto", "enumeration", "presentation"}))
      ->capture_default_str();
  ver->add_option("--enum-cap", vf.cap, "largest |H| enumerated")->capture_default_str();
  ver->add_option("--seed", vf.seed, "seed for the non-1-unit sample check")->capture_default_str();
  add_common_flags(ver, common, false);

  std::uint64_t seed = 7;
  std::size_t forms_cases = 500, graded_cases = 200;
  auto* self = app.add_subcommand("selftest", "run the forms and graded invariant suites");
  self->add_option("--seed", seed, "random seed")->capture_default_str();
  self->add_option("--forms-cases", forms_cases, "cases per forms property")->capture_default_str();
  self->add_option("--graded-cases", graded_cases, "cases per graded property")->capture_default_str();
  add_common_flags(self, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gr) return cmd_gr(pf, m, common);
    if (*red) return cmd_reduce(pf, m, first, second, common);
    if (*sym) return cmd_symbol(pf, m_opt, symbol_text, common);
    if (*lem) return cmd_lemma1(pf, m, probes, common);
    if (*ver) return cmd_verify_q1(vf, common);
    if (*self) return cmd_selftest(seed, forms_cases, graded_cases, common);
  } catch (const MathError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
