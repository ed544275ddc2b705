// Command-line front end.
//
// Exit codes: 0 ok, 1 bound mismatch found by the oracle, 2 usage or input
// error, 3 a construction failed its own postconditions, 4 enumeration cap hit.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "tropdet/tropdet.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace tropical;

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUsage = 2,
  kPostcondition = 3,
  kCap = 4,
};

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::CapExceeded: return kCap;
    case Errc::PostconditionFailed: return kPostcondition;
    default: return kUsage;
  }
}

struct ParamArgs {
  Int k = 0, l = 0, m = 0, n = 0;
};

void add_param_args(CLI::App* cmd, ParamArgs& args) {
  cmd->add_option("k", args.k, "row scale factor")->required();
  cmd->add_option("l", args.l, "column scale factor (gcd(k, l) = 1, k <= l)")->required();
  cmd->add_option("m", args.m, "margin multiplier")->required();
  cmd->add_option("n", args.n, "block count")->required();
}

IntMatrix load_matrix(const std::string& path) {
  if (path == "-") return parse_matrix(std::cin);
  return read_matrix_file(path);
}

json cells_json(const Transversal& t) {
  json cells = json::array();
  for (const Cell& c : t.cells) cells.push_back({c.row, c.col});
  return cells;
}

json matrix_json(const IntMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (Entry e : a.row(i)) row.push_back(e);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string describe(const ProblemParams& p) {
  std::ostringstream out;
  out << "D^{" << p.k << "," << p.l << "}(" << p.m << "," << p.n << ")";
  return out.str();
}

int cmd_bound(const ParamArgs& args, bool as_json) {
  const ProblemParams p = derive_params(args.k, args.l, args.m, args.n);
  const BoundReport b = analyze_bounds(p);
  if (as_json) {
    json out = {{"k", p.k},
                {"l", p.l},
                {"m", p.m},
                {"n", p.n},
                {"q", p.q},
                {"r", p.r},
                {"x", b.xy.x},
                {"y", b.xy.y},
                {"L", b.lower},
                {"U", b.upper},
                {"lower_regime", to_string(b.lower_regime)},
                {"upper_regime", to_string(b.upper_regime)}};
    std::cout << out.dump() << '\n';
    return kOk;
  }
  std::cout << describe(p) << ": " << p.rows << "x" << p.cols
            << " matrices, row sum " << p.row_sum << ", column sum "
            << p.col_sum << '\n'
            << "q=" << p.q << " r=" << p.r << '\n'
            << "x=" << b.xy.x << " y=" << b.xy.y << " x+y=" << b.xy.sum << '\n'
            << "L=" << b.lower << " (" << to_string(b.lower_regime) << ")\n"
            << "U=" << b.upper << " (" << to_string(b.upper_regime) << ")\n";
  return kOk;
}

int cmd_construct(const ParamArgs& args, const std::string& target,
                  const std::string& out_path) {
  const ProblemParams p = derive_params(args.k, args.l, args.m, args.n);
  const bool lower = target == "lower";
  const IntMatrix a = lower ? construct_lower(p) : construct_upper(p);

  const MembershipReport member = validate_membership(a, p);
  const Int value = lower ? tdet(a).value : tropdet(a).value;
  const Int bound = lower ? lower_bound(p) : upper_bound(p);

  if (out_path.empty()) {
    write_matrix(std::cout, a);
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kUsage;
    }
    write_matrix(out, a);
  }

  std::cerr << (member.is_member ? "member of " : "NOT a member of ")
            << describe(p) << '\n'
            << (lower ? "tdet=" : "tropdet=") << value << " ("
            << (lower ? "L=" : "U=") << bound << ")\n";
  if (!member.is_member || value != bound) {
    std::cerr << "error: construction does not attain the bound\n";
    return kPostcondition;
  }
  return kOk;
}

int cmd_tdet(const std::string& path, bool minimize, bool witness) {
  const IntMatrix a = load_matrix(path);
  const Transversal t = minimize ? tropdet(a) : tdet(a);
  std::cout << t.value << '\n';
  if (witness) {
    for (std::size_t i = 0; i < t.cells.size(); ++i) {
      std::cout << (i ? " " : "") << '(' << t.cells[i].row << ','
                << t.cells[i].col << ')';
    }
    std::cout << '\n';
  }
  return kOk;
}

int cmd_moves(const std::string& path) {
  const IntMatrix a = load_matrix(path);
  const SortingPlan plan = sorting_plan(a);
  std::cout << plan.moves << '\n';
  for (const Cell& c : plan.assignment.cells) {
    std::cout << "color " << c.row << " -> pail " << c.col << '\n';
  }
  return kOk;
}

int cmd_verify(const ParamArgs& args, std::uint64_t cap, bool as_json) {
  const ProblemParams p = derive_params(args.k, args.l, args.m, args.n);
  const VerificationReport v = verify_bounds(p, cap);
  const bool ok = v.lower_match && v.upper_match;
  if (as_json) {
    json out = {{"k", p.k},
                {"l", p.l},
                {"m", p.m},
                {"n", p.n},
                {"points_enumerated", v.points_enumerated},
                {"oracle_min_tdet", v.oracle_min_tdet},
                {"oracle_max_tropdet", v.oracle_max_tropdet},
                {"L", v.formula_lower},
                {"U", v.formula_upper},
                {"lower_match", v.lower_match},
                {"upper_match", v.upper_match},
                {"argmin_example", matrix_json(*v.argmin_example)},
                {"argmax_example", matrix_json(*v.argmax_example)}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << describe(p) << ": " << v.points_enumerated << " points\n"
              << "min tdet=" << v.oracle_min_tdet << " L=" << v.formula_lower
              << (v.lower_match ? " match" : " MISMATCH") << '\n'
              << "max tropdet=" << v.oracle_max_tropdet
              << " U=" << v.formula_upper
              << (v.upper_match ? " match" : " MISMATCH") << '\n'
              << "argmin:\n"
              << format_matrix(*v.argmin_example) << "argmax:\n"
              << format_matrix(*v.argmax_example);
  }
  return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical determinant bounds on integer transportation polytopes"};
  app.require_subcommand(1);

  ParamArgs bound_args;
  bool bound_json = false;
  auto* bound = app.add_subcommand("bound", "closed-form lower and upper bounds");
  add_param_args(bound, bound_args);
  bound->add_flag("--json", bound_json, "emit a JSON object");

  ParamArgs construct_args;
  std::string target = "lower";
  std::string out_path;
  auto* construct = app.add_subcommand("construct", "build an extremal matrix");
  add_param_args(construct, construct_args);
  construct->add_option("--target", target, "lower (min tdet) or upper (max tropdet)")
      ->check(CLI::IsMember({"lower", "upper"}));
  construct->add_option("--out", out_path, "write the matrix here instead of stdout");

  std::string tdet_path;
  bool minimize = false;
  bool witness = false;
  auto* tdet_cmd = app.add_subcommand("tdet", "tropical determinant of a matrix file");
  tdet_cmd->add_option("file", tdet_path, "matrix file, '-' for stdin")->required();
  tdet_cmd->add_flag("--min", minimize, "minimum transversal (tropdet) instead");
  tdet_cmd->add_flag("--witness", witness, "print an optimal transversal");

  std::string moves_path;
  auto* moves = app.add_subcommand("moves", "fewest ball moves to sort colors into pails");
  moves->add_option("file", moves_path, "color x pail matrix file, '-' for stdin")->required();

  ParamArgs verify_args;
  std::uint64_t cap = kDefaultPointCap;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "check the bounds against full enumeration");
  add_param_args(verify, verify_args);
  verify->add_option("--cap", cap, "refuse polytopes with more integer points");
  verify->add_flag("--json", verify_json, "emit a JSON object");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*bound) return cmd_bound(bound_args, bound_json);
    if (*construct) return cmd_construct(construct_args, target, out_path);
    if (*tdet_cmd) return cmd_tdet(tdet_path, minimize, witness);
    if (*moves) return cmd_moves(moves_path);
    if (*verify) return cmd_verify(verify_args, cap, verify_json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kUsage;
}
