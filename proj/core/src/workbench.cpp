#include "lsw/workbench.hpp"

#include <chrono>
#include <set>

#include <json.hpp>

#include "lsw/cone.hpp"
#include "lsw/deform.hpp"
#include "lsw/gallery.hpp"
#include "lsw/ideal_ops.hpp"
#include "lsw/localalg.hpp"
#include "lsw/normalform.hpp"
#include "lsw/poly_io.hpp"

namespace lsw {

using nlohmann::json;

const char* tool_version() { return "lsw 0.1.0"; }

namespace {

struct Deadline {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double cap_seconds;
  explicit Deadline(double cap) : cap_seconds(cap) {}
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  void check(const char* stage) const {
    if (elapsed() > cap_seconds)
      throw cap_exceeded(std::string("time cap exceeded during ") + stage);
  }
};

const std::set<std::string> kTasks = {"verify-hamiltonian", "check-legendrian", "tangent-cone",
                                      "classify",           "torsion",          "normal-form",
                                      "deform",             "gallery"};

std::vector<Poly> parse_all(const std::vector<std::string>& ss, const VarTable& v) {
  std::vector<Poly> ps;
  for (const auto& s : ss) ps.push_back(parse_poly(s, v));
  return ps;
}

std::vector<std::string> print_all(const std::vector<Poly>& ps, const VarTable& v) {
  std::vector<std::string> ss;
  for (const Poly& p : ps) ss.push_back(to_string(p, v));
  return ss;
}

json reducedness_json(const ReducednessResult& r, const VarTable& v) {
  json j;
  j["verdict"] = to_string(r.verdict);
  j["tier"] = r.tier;
  if (r.witness) j["witness"] = to_string(*r.witness, v);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json input_echo(const JobSpec& s) {
  json j;
  j["task"] = s.task;
  j["m"] = s.m;
  if (!s.ideal.empty()) j["ideal"] = s.ideal;
  if (!s.param.empty()) j["param"] = s.param;
  if (!s.certificate_param.empty()) j["certificate-param"] = s.certificate_param;
  if (!s.f.empty()) j["f"] = s.f;
  if (!s.h.empty()) j["h"] = s.h;
  if (!s.gallery_name.empty()) j["name"] = s.gallery_name;
  if (!s.quadric.empty()) j["quadric"] = s.quadric;
  j["order"] = s.order;
  j["degree"] = s.degree;
  j["degree-cap"] = s.degree_cap;
  j["x-degree-cap"] = s.x_degree_cap;
  return j;
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

JobSpec JobSpec::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad job JSON: ") + e.what());
  }
  require(j.is_object(), "job must be a JSON object");
  static const std::set<std::string> known = {
      "task",   "m",       "ideal",      "param",      "certificate-param", "f",
      "h",      "name",    "quadric",    "order",      "degree",            "degree-cap",
      "x-degree-cap", "time-cap-seconds", "timings"};
  for (const auto& [key, value] : j.items())
    require(known.count(key) > 0, "unknown job field: " + key);

  JobSpec s;
  require(j.contains("task") && j["task"].is_string(), "job needs a task string");
  s.task = j["task"];
  require(kTasks.count(s.task) > 0, "unknown task: " + s.task);
  auto get_int = [&](const char* key, int dflt) {
    if (!j.contains(key)) return dflt;
    require(j[key].is_number_integer(), std::string(key) + " must be an integer");
    return j[key].get<int>();
  };
  auto get_strings = [&](const char* key) {
    std::vector<std::string> out;
    if (!j.contains(key)) return out;
    require(j[key].is_array(), std::string(key) + " must be an array of strings");
    for (const auto& e : j[key]) {
      require(e.is_string(), std::string(key) + " must be an array of strings");
      out.push_back(e);
    }
    return out;
  };
  auto get_string = [&](const char* key) -> std::string {
    if (!j.contains(key)) return "";
    require(j[key].is_string(), std::string(key) + " must be a string");
    return j[key];
  };
  s.m = get_int("m", 1);
  require(s.m >= 1, "m must be >= 1");
  s.ideal = get_strings("ideal");
  s.param = get_strings("param");
  s.certificate_param = get_strings("certificate-param");
  s.f = get_string("f");
  s.h = get_string("h");
  s.gallery_name = get_string("name");
  s.quadric = get_string("quadric");
  s.order = get_int("order", 8);
  s.degree = get_int("degree", 2);
  s.degree_cap = get_int("degree-cap", kDefaultDegreeCap);
  s.x_degree_cap = get_int("x-degree-cap", 16);
  if (j.contains("time-cap-seconds")) {
    require(j["time-cap-seconds"].is_number(), "time-cap-seconds must be a number");
    s.time_cap_seconds = j["time-cap-seconds"].get<double>();
  }
  if (j.contains("timings")) {
    require(j["timings"].is_boolean(), "timings must be a boolean");
    s.emit_timings = j["timings"].get<bool>();
  }
  return s;
}

std::string JobSpec::to_json_text() const {
  json j = input_echo(*this);
  j["time-cap-seconds"] = time_cap_seconds;
  if (emit_timings) j["timings"] = true;
  return j.dump(2);
}

namespace {

struct TaskOutcome {
  std::string verdict;
  json certificates;
  std::string text;
};

TaskOutcome task_verify_hamiltonian(const JobSpec& s, const Deadline&) {
  require(!s.f.empty(), "verify-hamiltonian needs f");
  const ContactChart chart(s.m);
  const Poly f = parse_poly(s.f, VarTable::x(chart.nvars()));
  const VfIdentityReport rep = verify_vf_identities(f, chart);
  TaskOutcome out;
  out.verdict = rep.all() ? "all-identities-pass" : "identity-failure";
  out.certificates["theta-of-vf"] = rep.theta_of_vf;
  out.certificates["vf-of-f"] = rep.vf_of_f;
  out.certificates["lie-theta"] = rep.lie_theta;
  out.certificates["dtheta-pairing"] = rep.dtheta_pairing;
  out.text = "identities (i),(ii),(v),(vi-proof): " + std::string(rep.all() ? "pass" : "FAIL");
  return out;
}

TaskOutcome task_check_legendrian(const JobSpec& s, const Deadline& deadline) {
  const ContactChart chart(s.m);
  const int n = chart.nvars();
  require(s.ideal.empty() != s.param.empty(),
          "check-legendrian needs exactly one of ideal or param");
  TaskOutcome out;
  if (!s.param.empty()) {
    require(static_cast<int>(s.param.size()) == n, "param needs 2m+1 components");
    const LegendrianParam phi(s.m, parse_all(s.param, VarTable::u(s.m)));
    const DiffForm pb = pullback(standard_theta(s.m, n), phi.components());
    const bool ok = pb.is_zero();
    out.verdict = ok ? "legendrian" : "not-legendrian";
    json coeffs = json::array();
    for (int j = 0; j < s.m; ++j)
      coeffs.push_back(to_string(pb.coeff(std::vector<int>{j}), VarTable::u(s.m)));
    out.certificates["pullback-du"] = coeffs;
  } else {
    const Ideal I(parse_all(s.ideal, VarTable::x(n)), n);
    deadline.check("implicit legendrian test");
    const LegendrianVerdict v = legendrian_implicit(I, chart);
    out.verdict = to_string(v);
    if (v != LegendrianVerdict::NoSmoothWitness) out.certificates["dimension"] = dimension(I);
  }
  out.text = "legendrian check: " + out.verdict;
  return out;
}

TaskOutcome task_tangent_cone(const JobSpec& s, const Deadline& deadline) {
  require(!s.ideal.empty(), "tangent-cone needs ideal generators");
  const int n = 2 * s.m + 1;
  const VarTable x = VarTable::x(n);
  const Ideal I(parse_all(s.ideal, x), n);
  const HomIdeal tc = tangent_cone(I, s.degree_cap);
  deadline.check("tangent cone");
  std::vector<Poly> cert;
  if (!s.certificate_param.empty()) cert = parse_all(s.certificate_param, VarTable::u(s.m));
  const ReducednessResult red = reducedness(tc, cert.empty() ? nullptr : &cert);
  TaskOutcome out;
  out.verdict = to_string(red.verdict);
  out.certificates["generators"] = print_all(tc.ideal().gens(), x);
  out.certificates["reducedness"] = reducedness_json(red, x);
  out.text = "tangent cone reducedness: " + out.verdict;
  return out;
}

TaskOutcome task_classify(const JobSpec& s, const Deadline& deadline) {
  require(!s.ideal.empty(), "classify needs ideal generators");
  const ContactChart chart(s.m);
  const int n = chart.nvars();
  const VarTable x = VarTable::x(n);
  const Ideal I(parse_all(s.ideal, x), n);
  std::vector<Poly> cert;
  if (!s.certificate_param.empty()) cert = parse_all(s.certificate_param, VarTable::u(s.m));
  deadline.check("classify input");
  const ClassifyResult res = classify_singularity(I, chart, cert.empty() ? nullptr : &cert);
  TaskOutcome out;
  out.verdict = to_string(res.verdict);
  out.certificates["legendrian"] = "legendrian";
  out.certificates["tangent-cone"] = print_all(res.tc->ideal().gens(), x);
  out.certificates["reducedness"] = reducedness_json(res.red, x);
  if (res.red.verdict == Reducedness::Reduced) {
    out.certificates["tc-in-D0"] = res.tc_in_D0;
    out.certificates["tc-lagrangian"] = res.tc_lagrangian;
  }
  if (!res.note.empty()) out.certificates["note"] = res.note;
  out.text = "classification: " + out.verdict;
  return out;
}

TaskOutcome task_torsion(const JobSpec& s, const Deadline& deadline) {
  require(!s.ideal.empty(), "torsion needs ideal generators");
  const ContactChart chart(s.m);
  const int n = chart.nvars();
  const VarTable x = VarTable::x(n);
  const Ideal I(parse_all(s.ideal, x), n);
  const TorsionVerdict v = torsion_theta_class(I, chart, s.order);
  deadline.check("torsion module");
  const WeightObstructionResult w = weight_obstruction(I, chart);
  const bool smooth = smooth_at_origin(I);
  TaskOutcome out;
  out.verdict = (v.nonzero ? "nonzero-at-order(" : "zero-up-to-order(") +
                std::to_string(v.order) + ")";
  if (v.nonzero) {
    json entries = json::array();
    for (const TorsionWitnessEntry& e : v.functional) {
      json entry;
      entry["dx"] = e.var + 1;
      entry["monomial"] = to_string(Poly::monomial(e.mono, 1), x);
      entry["value"] = to_string(e.value);
      entries.push_back(entry);
    }
    out.certificates["witness-functional"] = entries;
    out.certificates["witness-verified"] = v.witness_verified;
    out.certificates["witness-pairing"] = to_string(v.witness_pairing);
  }
  json wj;
  wj["obstructed"] = w.obstructed;
  wj["theta-weight"] = w.theta_weight;
  wj["generator-weights"] = w.generator_weights;
  out.certificates["weight-obstruction"] = wj;
  out.certificates["jacobian-smooth-at-origin"] = smooth;
  if (!v.nonzero)
    out.certificates["note"] =
        smooth ? "zero class consistent with the independently certified smooth point"
               : "no smoothness claim: the zero verdict is truncation evidence only";
  out.text = "torsion class: " + out.verdict + (smooth ? " (smooth at 0)" : "");
  return out;
}

TaskOutcome task_normal_form(const JobSpec& s, const Deadline& deadline) {
  require(!s.h.empty(), "normal-form needs h");
  const ContactChart chart(s.m);
  const VarTable z = VarTable::x(2 * s.m);
  const Poly h = parse_poly(s.h, z);
  const HyperplaneNormalization nf = hyperplane_normalize(h, chart, s.order);
  deadline.check("hyperplane normalization");
  TaskOutcome out;
  out.verdict = nf.ok() ? "normalized-at-order(" + std::to_string(s.order) + ")"
                        : "residual-at-order(" + std::to_string(nf.residual_order) + ")";
  out.certificates["phi"] = print_all(nf.phi.components(), z);
  out.certificates["g"] = to_string(nf.g, z);
  out.certificates["exact"] = nf.exact;
  if (!nf.exact) out.certificates["residual-order"] = nf.residual_order;
  out.text = "hyperplane normalization: " + out.verdict;
  return out;
}

TaskOutcome task_deform(const JobSpec& s, const Deadline& deadline) {
  const int n = 2 * s.m + 1;
  require(static_cast<int>(s.param.size()) == n, "deform needs 2m+1 family components");
  const VarTable ut = VarTable::ut(s.m);
  const VarTable xt = VarTable::xt(n);
  const FamilyParam F(s.m, parse_all(s.param, ut));
  TaskOutcome out;
  if (!family_check(F)) {
    out.verdict = "not-a-legendrian-family";
    out.text = "family check failed";
    return out;
  }
  out.certificates["deformation-function"] = to_string(deformation_function(F), ut);
  deadline.check("deformation function");
  const auto lift = hamiltonian_lift(F, s.degree);
  if (!lift)
    throw cap_exceeded("hamiltonian lift infeasible at x-degree " + std::to_string(s.degree) +
                       "; raise --degree");
  out.certificates["lift-b"] = to_string(lift->b, xt);
  const bool tangent = verify_lift_tangency(F, *lift);
  out.certificates["lift-tangency"] = tangent;
  if (!tangent) {
    out.verdict = "lift-tangency-failed";
    out.text = "lift found but tangency failed";
    return out;
  }
  deadline.check("lift");
  const TrivializationResult tr = trivialize_jet(F, *lift, s.order, s.x_degree_cap);
  out.certificates["flow"] = print_all(tr.flow, xt);
  out.certificates["contact-factor"] = to_string(tr.contact_factor, xt);
  out.certificates["sigma"] = print_all(tr.sigma, ut);
  out.certificates["flow-ok"] = tr.flow_ok;
  out.certificates["contact-ok"] = tr.contact_ok;
  out.certificates["reparam-ok"] = tr.reparam_ok;
  if (tr.x_cap_hit) out.certificates["x-cap-hit"] = true;
  if (tr.obstructed_order >= 0) out.certificates["obstructed-order"] = tr.obstructed_order;
  const bool ok = tr.flow_ok && tr.contact_ok && tr.reparam_ok;
  out.verdict = ok ? "trivialized-at-t-order(" + std::to_string(s.order) + ")"
                   : (tr.obstructed_order >= 0
                          ? "obstructed-at-t-order(" + std::to_string(tr.obstructed_order) + ")"
                          : "trivialization-check-failed");
  out.text = "deformation trivialization: " + out.verdict;
  return out;
}

TaskOutcome task_gallery(const JobSpec& s, const Deadline&) {
  require(!s.gallery_name.empty(), "gallery needs a name");
  GalleryItem item;
  if (s.gallery_name == "quadric-flow-family" && !s.quadric.empty()) {
    item = gallery_quadric_flow(parse_poly(s.quadric, VarTable::x(4)));
  } else {
    item = gallery(s.gallery_name);
  }
  const int n = 2 * item.m + 1;
  TaskOutcome out;
  out.verdict = "instance";
  json inst;
  inst["name"] = item.name;
  inst["m"] = item.m;
  if (!item.ideal_gens.empty()) inst["ideal"] = print_all(item.ideal_gens, VarTable::x(n));
  const VarTable pt = item.is_family ? VarTable::ut(item.m) : VarTable::u(item.m);
  if (!item.parametrization.empty()) inst["param"] = print_all(item.parametrization, pt);
  inst["family"] = item.is_family;
  if (item.quadric) inst["quadric"] = to_string(*item.quadric, VarTable::x(2 * item.m));
  json expected;
  if (!item.expected_classification.empty())
    expected["classification"] = item.expected_classification;
  expected["smooth-at-origin"] = item.expected_smooth_at_origin;
  expected["torsion-nonzero"] = item.expected_torsion_nonzero;
  expected["weight-obstructed"] = item.expected_weight_obstructed;
  inst["expected"] = expected;
  out.certificates = inst;
  out.text = "gallery item: " + item.name;
  return out;
}

}  // namespace

Report run_job(const JobSpec& spec) {
  Report report;
  json j;
  j["tool"] = tool_version();
  j["schema"] = "lsw-report/1";
  j["task"] = spec.task;
  j["input"] = input_echo(spec);
  j["seeds"]["slice-base"] = "0x51edce";
  const Deadline deadline(spec.time_cap_seconds);
  try {
    require(kTasks.count(spec.task) > 0, "unknown task: " + spec.task);
    TaskOutcome out;
    if (spec.task == "verify-hamiltonian") out = task_verify_hamiltonian(spec, deadline);
    else if (spec.task == "check-legendrian") out = task_check_legendrian(spec, deadline);
    else if (spec.task == "tangent-cone") out = task_tangent_cone(spec, deadline);
    else if (spec.task == "classify") out = task_classify(spec, deadline);
    else if (spec.task == "torsion") out = task_torsion(spec, deadline);
    else if (spec.task == "normal-form") out = task_normal_form(spec, deadline);
    else if (spec.task == "deform") out = task_deform(spec, deadline);
    else out = task_gallery(spec, deadline);
    report.verdict = out.verdict;
    report.text = out.text;
    j["verdict"] = out.verdict;
    j["certificates"] = out.certificates;
    report.exit_code = 0;
  } catch (const classify_rejected& e) {
    report.exit_code = 1;
    report.verdict = std::string("rejected: ") + to_string(e.verdict);
    report.text = e.what();
    j["verdict"] = report.verdict;
    j["error"] = e.what();
  } catch (const cap_exceeded& e) {
    report.exit_code = 2;
    report.verdict = "cap-exceeded";
    report.text = e.what();
    j["verdict"] = report.verdict;
    j["error"] = e.what();
  } catch (const parse_error& e) {
    report.exit_code = 1;
    report.verdict = "invalid-input";
    report.text = e.what();
    j["verdict"] = report.verdict;
    j["error"] = e.what();
  } catch (const std::invalid_argument& e) {
    report.exit_code = 1;
    report.verdict = "invalid-input";
    report.text = e.what();
    j["verdict"] = report.verdict;
    j["error"] = e.what();
  }
  if (spec.emit_timings) j["timings"]["total-ms"] = deadline.elapsed() * 1000.0;
  report.json_text = j.dump(2) + "\n";
  return report;
}

}  // namespace lsw
