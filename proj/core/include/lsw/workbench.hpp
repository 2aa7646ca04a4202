#pragma once

#include <string>
#include <vector>

namespace lsw {

// One batch job for the workbench. Polynomials are carried as strings in the
// ring grammar; payloads are validated against the task before computation.
struct JobSpec {
  std::string task;  // verify-hamiltonian | check-legendrian | tangent-cone |
                     // classify | torsion | normal-form | deform | gallery
  int m = 1;
  std::vector<std::string> ideal;
  std::vector<std::string> param;
  std::vector<std::string> certificate_param;  // classify reducedness certificate
  std::string f;             // verify-hamiltonian
  std::string h;             // normal-form
  std::string gallery_name;  // gallery
  std::string quadric;       // custom quadric-flow generator
  int order = 8;
  int degree = 2;
  int degree_cap = 24;
  int x_degree_cap = 16;
  double time_cap_seconds = 300.0;
  bool emit_timings = false;  // timings break byte-identical reports; off by default

  static JobSpec from_json_text(const std::string& text);
  std::string to_json_text() const;
};

struct Report {
  // 0: verdict computed (negative verdicts included); 1: invalid input;
  // 2: resource cap exceeded
  int exit_code = 0;
  std::string verdict;
  std::string json_text;  // full report; byte-identical across runs unless timings are on
  std::string text;       // human-readable summary
};

Report run_job(const JobSpec& spec);

const char* tool_version();

}  // namespace lsw
