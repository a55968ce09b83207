#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ktypes::cli {

struct ContextArgs {
  std::string theory;
  std::string params = "empty";
  int vars = 1;
  std::string type = "true";
};

struct AuditArgs {
  std::string theory;
  std::size_t bound = 2;
  std::size_t d2_slack = 2;
  int tuple_vars = 1;
};

struct DecomposeArgs {
  std::string mode;  // prime, maximal or lksihn
  ContextArgs ctx;
  std::string indep;
};

struct VerifyArgs {
  ContextArgs ctx;
  std::size_t param_bound = 2;
  std::size_t lattice_cap = 4096;
};

struct AmalgamateArgs {
  std::string theory, a, m, n;
  std::size_t slack = 0;
};

struct EntailsArgs {
  ContextArgs ctx;
  std::string premises;
  std::string conclusion;
};

struct ProbeArgs {
  ContextArgs ctx;
  std::string formula;
  std::size_t max_size = 5;
};

struct ProjectArgs {
  ContextArgs ctx;
  std::string keep;
};

struct PolyArgs {
  std::string op;
  std::vector<std::string> operands;
  int nvars = -1;
};

// Each returns an exit code; engine errors propagate as exceptions.
int cmd_audit(const AuditArgs& a, bool json, std::ostream& out);
int cmd_primes(const ContextArgs& a, bool json, std::ostream& out);
int cmd_classify(const ContextArgs& a, bool json, std::ostream& out);
int cmd_decompose(const DecomposeArgs& a, bool json, std::ostream& out);
int cmd_dim(const ContextArgs& a, bool json, std::ostream& out);
int cmd_verify(const VerifyArgs& a, bool json, std::ostream& out);
int cmd_amalgamate(const AmalgamateArgs& a, bool json, std::ostream& out);
int cmd_entails(const EntailsArgs& a, bool json, std::ostream& out);
int cmd_probe(const ProbeArgs& a, bool json, std::ostream& out);
int cmd_project(const ProjectArgs& a, bool json, std::ostream& out);
int cmd_poly(const PolyArgs& a, bool json, std::ostream& out);

}  // namespace ktypes::cli
