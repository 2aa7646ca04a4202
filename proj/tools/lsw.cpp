// Batch workbench CLI: one subcommand per task, or --job file.json.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lsw/workbench.hpp"

namespace {

struct CommonOpts {
  std::string job_file;
  std::string emit = "json";
  std::string out_file;
  bool timings = false;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--job", c.job_file, "load the job from a JSON file instead of inline flags");
  cmd->add_option("--emit", c.emit, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  cmd->add_option("--out", c.out_file, "write the report to a file instead of stdout");
  cmd->add_flag("--timings", c.timings, "include timings in the report (breaks byte-identical output)");
}

int finish(const lsw::Report& report, const CommonOpts& c) {
  const std::string& payload =
      c.emit == "json" ? report.json_text : report.text + "\nverdict: " + report.verdict + "\n";
  if (c.out_file.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(c.out_file);
    if (!out) {
      std::cerr << "cannot write " << c.out_file << "\n";
      return 1;
    }
    out << payload;
  }
  return report.exit_code;
}

lsw::JobSpec load_job(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read job file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return lsw::JobSpec::from_json_text(ss.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for holomorphic Legendrian singularities"};
  app.set_version_flag("--version", lsw::tool_version());
  app.require_subcommand(0, 1);

  CommonOpts common;
  lsw::JobSpec spec;
  std::string job_at_top;
  app.add_option("--job", job_at_top, "run a job file directly");

  struct Sub {
    CLI::App* cmd;
    CommonOpts opts;
  };
  std::vector<std::pair<std::string, Sub>> subs;
  auto make = [&](const std::string& task, const std::string& desc) {
    CLI::App* cmd = app.add_subcommand(task, desc);
    subs.push_back({task, Sub{cmd, {}}});
    Sub& sub = subs.back().second;
    add_common(cmd, sub.opts);
    return cmd;
  };

  int m = 1, order = 8, degree = 2, degree_cap = 24, x_degree_cap = 16;
  double time_cap = 300.0;
  std::vector<std::string> ideal, param, cert_param;
  std::string f, h, name, quadric;

  auto add_m = [&](CLI::App* cmd) { cmd->add_option("--m", m, "chart size: the ambient dimension is 2m+1"); };
  auto add_caps = [&](CLI::App* cmd) {
    cmd->add_option("--degree-cap", degree_cap, "degree guard for basis computations");
    cmd->add_option("--x-degree-cap", x_degree_cap, "x-degree cap for flow jets");
    cmd->add_option("--time-cap", time_cap, "wall-clock cap in seconds");
  };

  CLI::App* c1 = make("verify-hamiltonian", "check the contact Hamiltonian identities for f");
  add_m(c1);
  add_caps(c1);
  c1->add_option("--f", f, "polynomial in x1..x_{2m+1}");

  CLI::App* c2 = make("check-legendrian", "parametric or implicit Legendrian test");
  add_m(c2);
  add_caps(c2);
  c2->add_option("--ideal", ideal, "ideal generators (repeatable)");
  c2->add_option("--param", param, "parametrization components in u1..um (repeatable)");

  CLI::App* c3 = make("tangent-cone", "tangent cone with reducedness certification");
  add_m(c3);
  add_caps(c3);
  c3->add_option("--ideal", ideal, "ideal generators (repeatable)");
  c3->add_option("--cert-param", cert_param, "parametrization backing the reducedness certificate");

  CLI::App* c4 = make("classify", "Lagrangian-cone classification of a Legendrian singularity");
  add_m(c4);
  add_caps(c4);
  c4->add_option("--ideal", ideal, "ideal generators (repeatable)");
  c4->add_option("--cert-param", cert_param, "parametrization backing the reducedness certificate");

  CLI::App* c5 = make("torsion", "torsion differential test with weight fast path");
  add_m(c5);
  add_caps(c5);
  c5->add_option("--ideal", ideal, "ideal generators (repeatable)");
  c5->add_option("--order", order, "truncation order N");

  CLI::App* c6 = make("normal-form", "hyperplane normalization of x_{2m+1} = h at jet level");
  add_m(c6);
  add_caps(c6);
  c6->add_option("--h", h, "graph function in x1..x_{2m}, no terms below degree 3");
  c6->add_option("--order", order, "jet order");

  CLI::App* c7 = make("deform", "family lift and jet trivialization");
  add_m(c7);
  add_caps(c7);
  c7->add_option("--param", param, "family components in (u1..um, t) (repeatable)");
  c7->add_option("--degree", degree, "x-degree bound for the Hamiltonian lift");
  c7->add_option("--order", order, "t-jet order of the trivialization");

  CLI::App* c8 = make("gallery", "emit a worked example with expected verdicts");
  c8->add_option("--name", name, "gallery item name");
  c8->add_option("--quadric", quadric, "custom generator for quadric-flow-family");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.get_subcommands().empty()) {
      if (job_at_top.empty()) {
        std::cerr << app.help();
        return 1;
      }
      lsw::JobSpec s = load_job(job_at_top);
      return finish(lsw::run_job(s), common);
    }
    CLI::App* active = app.get_subcommands()[0];
    Sub* sub = nullptr;
    std::string task;
    for (auto& [tname, ssub] : subs)
      if (ssub.cmd == active) {
        sub = &ssub;
        task = tname;
      }
    lsw::JobSpec s;
    if (!sub->opts.job_file.empty()) {
      s = load_job(sub->opts.job_file);
      if (s.task != task)
        throw std::invalid_argument("job file task '" + s.task + "' does not match subcommand '" +
                                    task + "'");
    } else {
      s.task = task;
      s.m = m;
      s.ideal = ideal;
      s.param = param;
      s.certificate_param = cert_param;
      s.f = f;
      s.h = h;
      s.gallery_name = name;
      s.quadric = quadric;
      s.order = order;
      s.degree = degree;
      s.degree_cap = degree_cap;
      s.x_degree_cap = x_degree_cap;
      s.time_cap_seconds = time_cap;
    }
    s.emit_timings = sub->opts.timings;
    return finish(lsw::run_job(s), sub->opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
