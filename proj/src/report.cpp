#include "milnor/report.hpp"

#include <algorithm>

#include "milnor/text.hpp"

namespace milnor::report {

Report::Report(std::string command) { add("command", std::move(command)); }

void Report::add(std::string key, std::string value) { entries_.emplace_back(std::move(key), std::move(value)); }

std::string Report::get(const std::string& key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return v;
  return {};
}

std::string Report::render(Format fmt) const {
  std::string out;
  if (fmt == Format::Machine) {
    out = std::string(kHeader) + "\n";
    for (const auto& [k, v] : entries_) out += k + ": " + v + "\n";
    return out;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : entries_) width = std::max(width, k.size());
  for (const auto& [k, v] : entries_) out += k + std::string(width + 2 - k.size(), ' ') + v + "\n";
  return out;
}

std::string power_string(std::uint32_t p, int log_p) {
  const GroupOrder g{p, log_p};
  if (auto v = g.value()) return std::to_string(*v);
  return std::to_string(p) + "^" + std::to_string(log_p);
}

namespace {

std::string omega(int q) { return "Omega^" + std::to_string(q); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_ints(const std::vector<int>& v, std::size_t from = 0) {
  std::string out;
  for (std::size_t k = from; k < v.size(); ++k) {
    if (k > from) out += ",";
    out += std::to_string(v[k]);
  }
  return out;
}

}  // namespace

void add_params(Report& rep, const CDVFParams& P) {
  rep.add("p", std::to_string(P.p()));
  rep.add("f", std::to_string(P.f()));
  rep.add("r", std::to_string(P.r()));
  rep.add("e", std::to_string(P.e()));
  rep.add("n", std::to_string(P.n()));
  rep.add("q", std::to_string(P.q()));
  rep.add("a", print_element(P.a()));
  rep.add("e0", std::to_string(P.e0()));
  std::string th;
  for (int i = 0; i <= P.n(); ++i) {
    if (i) th += " ";
    th += "c_" + std::to_string(i) + "=" + std::to_string(P.threshold(i));
  }
  rep.add("thresholds", th);
}

void add_descriptor(Report& rep, const CDVFParams& P, const GrDescriptor& D) {
  const int q = P.q();
  rep.add("m", std::to_string(D.m));
  rep.add("case", to_string(D.kase.kind));
  rep.add("case.i", D.kase.kind == GradedCase::Kind::III ? "-" : std::to_string(D.kase.i));
  rep.add("case.s", std::to_string(D.kase.s));
  rep.add("shape", to_string(D.shape));
  const std::string t = std::to_string(D.tower_level);
  std::string pres;
  switch (D.shape) {
    case GrDescriptor::Shape::CokerTheta:
      pres = "coker(" + omega(q - 2) + " -> " + omega(q - 1) + "/B_" + t + " + " + omega(q - 2) + "/B_" + t +
             "), w -> (C^-" + t + " dw, " + std::to_string(D.theta_coeff) + " C^-" + t + " w)";
      break;
    case GrDescriptor::Shape::ModZ:
      pres = omega(q - 1) + "/Z_" + t + " + " + omega(q - 2) + "/Z_" + t;
      break;
    case GrDescriptor::Shape::OnePlusAC:
      pres = omega(q - 1) + "/(1+aC)Z_" + t + " + " + omega(q - 2) + "/(1+aC)Z_" + t;
      break;
    case GrDescriptor::Shape::Zero: pres = "0"; break;
  }
  rep.add("presentation", pres);
  rep.add("tower_level", D.shape == GrDescriptor::Shape::Zero ? "-" : t);
  rep.add("theta_coeff", D.shape == GrDescriptor::Shape::CokerTheta ? std::to_string(D.theta_coeff) : "-");
}

void add_size(Report& rep, const GradedSize& S, std::int64_t window) {
  if (S.order) {
    rep.add("order", power_string(S.order->p, S.order->log_p));
    rep.add("order.log_p", std::to_string(S.order->log_p));
  } else {
    rep.add("order", "per-slice");
  }
  if (S.core_log_p) {
    rep.add("core.radius", std::to_string(S.core_radius));
    rep.add("core.log_p", std::to_string(*S.core_log_p));
  }
  if (!S.slice_log_p.empty()) {
    rep.add("window", std::to_string(window));
    for (const auto& [g, v] : S.slice_log_p) rep.add("slice" + print_exponent(g) + ".log_p", std::to_string(v));
  }
}

void add_element(Report& rep, const std::string& prefix, const GrElement& el) {
  rep.add(prefix + ".first", print_form(el.first));
  rep.add(prefix + ".second", print_form(el.second));
}

void add_lemma1(Report& rep, const Lemma1Report& L) {
  auto desc = [](const GrDescriptor& d) {
    return to_string(d.kase.kind) + " i=" + std::to_string(d.kase.i) + " s=" + std::to_string(d.kase.s) + " " +
           to_string(d.shape) + " level=" + std::to_string(d.tower_level) + " theta=" + std::to_string(d.theta_coeff);
  };
  rep.add("lemma1.m", std::to_string(L.m));
  rep.add("lemma1.upper", "n=" + std::to_string(L.n) + " m=" + std::to_string(L.upper.m) + " " + desc(L.upper));
  rep.add("lemma1.lower", "n=" + std::to_string(L.n - 1) + " m=" + std::to_string(L.lower.m) + " " + desc(L.lower));
  rep.add("lemma1.case_shift", yes_no(L.case_shift_ok));
  if (L.orders_equal) {
    rep.add("lemma1.orders", power_string(L.upper_order->p, L.upper_order->log_p) + " vs " +
                                 power_string(L.lower_order->p, L.lower_order->log_p));
    rep.add("lemma1.orders_equal", yes_no(*L.orders_equal));
  }
  if (L.slices_equal) {
    rep.add("lemma1.slices_equal", yes_no(*L.slices_equal));
    for (const auto& g : L.slice_mismatches) rep.add("lemma1.slice_mismatch", print_exponent(g));
  }
  if (L.core_equal) rep.add("lemma1.core_equal", yes_no(*L.core_equal));
  for (auto k : L.probe_mismatches) rep.add("lemma1.probe_mismatch", std::to_string(k));
  rep.add("lemma1.consistent", yes_no(L.consistent()));
}

void add_oracle(Report& rep, const std::string& prefix, const oracle::GradedOrdersReport& O) {
  rep.add(prefix + ".N", std::to_string(O.N));
  rep.add(prefix + ".route", oracle::to_string(O.route));
  rep.add(prefix + ".gr0.log_p", std::to_string(O.gr_log[0]) + " (pi " + std::to_string(O.gr0_pi_log) +
                                     ", teichmueller " + std::to_string(O.gr0_teichmuller_log) + ")");
  rep.add(prefix + ".gr.log_p", join_ints(O.gr_log, 1));
  rep.add(prefix + ".total", power_string(O.p, O.total_log));
}

void add_comparison(Report& rep, const oracle::ComparisonReport& C) {
  add_oracle(rep, "oracle", C.oracle);
  for (const auto& row : C.rows)
    rep.add("row.m=" + std::to_string(row.m),
            "oracle=" + power_string(C.oracle.p, row.oracle_log) + " engine=" + power_string(C.oracle.p, row.engine_log) +
                " case=" + to_string(row.kase.kind) + " " + (row.match ? "match" : "MISMATCH"));
  rep.add("all_match", yes_no(C.all_match));
}

void add_properties(Report& rep, const std::vector<props::PropertyResult>& results) {
  std::size_t failed = 0;
  for (const auto& r : results) {
    std::string v = std::string(r.passed() ? "pass" : "FAIL") + " cases=" + std::to_string(r.cases);
    if (!r.passed()) v += " failures=" + std::to_string(r.failures) + " first: " + r.first_failure;
    rep.add("property." + r.suite + "." + r.name, v);
    failed += r.passed() ? 0 : 1;
  }
  rep.add("properties.total", std::to_string(results.size()));
  rep.add("properties.failed", std::to_string(failed));
}

}  // namespace milnor::report
