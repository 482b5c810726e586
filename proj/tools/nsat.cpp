// nsat -- command-line front end for the nestedsat solver library.
//
// Exit codes: 0 success (non-solve commands), 1 usage or parse error,
// 2 instance not nested, 10 satisfiable, 20 unsatisfiable.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nestedsat.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotNested = 2;
constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;

void print_usage(std::ostream& os) {
  os << "usage: nsat <command> [options]\n"
        "\n"
        "commands:\n"
        "  solve <file.cnf> [--witness] [--no-sort]\n"
        "      decide satisfiability; prints 's SATISFIABLE' or 's UNSATISFIABLE'\n"
        "      --witness  also print a satisfying assignment as 'v <lits> 0'\n"
        "      --no-sort  require the input clause order to be straddle-respecting\n"
        "  check <file.cnf>\n"
        "      report whether the instance is nested and whether the clause order\n"
        "      is straddle-respecting; prints an overlapping pair when not nested\n"
        "  sort <file.cnf>\n"
        "      emit the instance in straddle-respecting order as DIMACS\n"
        "  gen --vars N --clauses M --seed S [--width W]\n"
        "      emit a random nested instance as DIMACS\n"
        "  fuzz --count C --max-vars V --seed S [--csv]\n"
        "      differential-test the solver against a brute-force oracle\n"
        "  bench --seed S [--sizes LIST] [--csv]\n"
        "      time the solver on generated instances; LIST entries are either\n"
        "      M (vars = 2M) or N:M, comma separated (default 100000,1000000)\n"
        "\n"
        "a file argument of '-' reads standard input\n"
        "exit codes: 0 ok, 1 usage/parse error, 2 not nested, 10 SAT, 20 UNSAT\n";
}

int usage_error(const std::string& msg) {
  std::cerr << "nsat: " << msg << "\n\n";
  print_usage(std::cerr);
  return kExitUsage;
}

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    out = ss.str();
    return true;
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) return false;
  std::ostringstream ss;
  ss << file.rdbuf();
  out = ss.str();
  return true;
}

bool parse_i64(const std::string& s, int64_t& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  errno = 0;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (errno != 0 || end != s.c_str() + s.size()) return false;
  out = v;
  return true;
}

struct InstanceGuard {
  nsat_instance* inst = nullptr;
  ~InstanceGuard() { nsat_instance_free(inst); }
};

// Parses the instance file, printing diagnostics. Returns false on failure.
bool load_instance(const std::string& path, InstanceGuard& guard) {
  std::string text;
  if (!read_input(path, text)) {
    std::cerr << "nsat: cannot read '" << path << "'\n";
    return false;
  }
  if (nsat_instance_parse_dimacs(text.c_str(), &guard.inst) != NSAT_OK) {
    std::cerr << "nsat: parse error in '" << path << "': " << nsat_last_error() << '\n';
    return false;
  }
  const char* warnings = nsat_instance_warnings(guard.inst);
  if (warnings && *warnings) std::cerr << "nsat: warning: " << warnings << '\n';
  return true;
}

int cmd_solve(const std::vector<std::string>& args) {
  std::string path;
  bool witness = false;
  bool no_sort = false;
  for (const std::string& a : args) {
    if (a == "--witness") {
      witness = true;
    } else if (a == "--no-sort") {
      no_sort = true;
    } else if (!a.empty() && a[0] == '-' && a != "-") {
      return usage_error("unknown solve option '" + a + "'");
    } else if (path.empty()) {
      path = a;
    } else {
      return usage_error("solve takes one input file");
    }
  }
  if (path.empty()) return usage_error("solve needs an input file");

  InstanceGuard guard;
  if (!load_instance(path, guard)) return kExitUsage;
  const uint32_t flags = no_sort ? NSAT_SOLVE_NO_SORT : 0;
  const int32_t n = nsat_instance_var_count(guard.inst);

  int verdict = 0;
  nsat_status status;
  std::vector<uint8_t> values(static_cast<size_t>(n), 0);
  if (witness) {
    status = nsat_instance_solve_witness(guard.inst, flags, &verdict, values.data());
  } else {
    status = nsat_instance_solve(guard.inst, flags, &verdict, nullptr);
  }
  if (status == NSAT_ERR_NOT_NESTED || status == NSAT_ERR_NOT_ORDERED) {
    std::cerr << "nsat: " << nsat_last_error() << '\n';
    return kExitNotNested;
  }
  if (status != NSAT_OK) {
    std::cerr << "nsat: " << nsat_last_error() << '\n';
    return kExitUsage;
  }

  if (verdict == NSAT_SATISFIABLE) {
    std::cout << "s SATISFIABLE\n";
    if (witness) {
      std::cout << 'v';
      for (int32_t v = 1; v <= n; ++v) std::cout << ' ' << (values[v - 1] ? v : -v);
      std::cout << " 0\n";
    }
    return kExitSat;
  }
  std::cout << "s UNSATISFIABLE\n";
  return kExitUnsat;
}

int cmd_check(const std::vector<std::string>& args) {
  if (args.size() != 1) return usage_error("check needs exactly one input file");
  InstanceGuard guard;
  if (!load_instance(args[0], guard)) return kExitUsage;

  int nested = 0;
  int ordered = 0;
  int32_t pair[2] = {0, 0};
  int32_t vars[2] = {0, 0};
  if (nsat_instance_check(guard.inst, &nested, &ordered, pair, vars) != NSAT_OK) {
    std::cerr << "nsat: " << nsat_last_error() << '\n';
    return kExitUsage;
  }
  if (nested) {
    std::cout << "nested: yes\n";
  } else {
    std::cout << "not nested: clauses " << pair[0] << " and " << pair[1]
              << " overlap (straddling variables " << vars[0] << " and " << vars[1]
              << ")\n";
  }
  std::cout << "ordered: " << (ordered ? "yes" : "no") << '\n';
  return nested ? kExitOk : kExitNotNested;
}

int cmd_sort(const std::vector<std::string>& args) {
  if (args.size() != 1) return usage_error("sort needs exactly one input file");
  InstanceGuard guard;
  if (!load_instance(args[0], guard)) return kExitUsage;

  nsat_instance* sorted = nullptr;
  const nsat_status status = nsat_instance_sort(guard.inst, &sorted);
  if (status == NSAT_ERR_NOT_NESTED) {
    std::cerr << "nsat: " << nsat_last_error() << '\n';
    return kExitNotNested;
  }
  if (status != NSAT_OK) {
    std::cerr << "nsat: " << nsat_last_error() << '\n';
    return kExitUsage;
  }
  InstanceGuard sorted_guard;
  sorted_guard.inst = sorted;
  char* text = nullptr;
  if (nsat_instance_emit_dimacs(sorted, &text) != NSAT_OK) {
    std::cerr << "nsat: " << nsat_last_error() << '\n';
    return kExitUsage;
  }
  std::cout << text;
  nsat_string_free(text);
  return kExitOk;
}

int cmd_gen(const std::vector<std::string>& args) {
  int64_t vars = -1, clauses = -1, seed = 0, width = 8;
  bool seed_seen = false;
  for (size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    const auto value = [&](int64_t& out) {
      return ++i < args.size() && parse_i64(args[i], out);
    };
    if (a == "--vars") {
      if (!value(vars)) return usage_error("--vars needs an integer");
    } else if (a == "--clauses") {
      if (!value(clauses)) return usage_error("--clauses needs an integer");
    } else if (a == "--seed") {
      if (!value(seed)) return usage_error("--seed needs an integer");
      seed_seen = true;
    } else if (a == "--width") {
      if (!value(width)) return usage_error("--width needs an integer");
    } else {
      return usage_error("unknown gen option '" + a + "'");
    }
  }
  if (vars < 0 || clauses < 0 || !seed_seen) {
    return usage_error("gen needs --vars, --clauses and --seed");
  }

  nsat_instance* inst = nullptr;
  if (nsat_generate(static_cast<int32_t>(vars), static_cast<int32_t>(clauses),
                    static_cast<int32_t>(width), 0.5, 0.5,
                    static_cast<uint64_t>(seed), &inst) != NSAT_OK) {
    std::cerr << "nsat: " << nsat_last_error() << '\n';
    return kExitUsage;
  }
  InstanceGuard guard;
  guard.inst = inst;
  if (nsat_instance_clause_count(inst) < clauses) {
    std::cerr << "nsat: generated " << nsat_instance_clause_count(inst)
              << " clauses; target " << clauses << " unreachable for " << vars
              << " variables\n";
  }
  char* text = nullptr;
  if (nsat_instance_emit_dimacs(inst, &text) != NSAT_OK) {
    std::cerr << "nsat: " << nsat_last_error() << '\n';
    return kExitUsage;
  }
  std::cout << text;
  nsat_string_free(text);
  return kExitOk;
}

int cmd_fuzz(const std::vector<std::string>& args) {
  int64_t count = -1, max_vars = -1, seed = 0;
  bool seed_seen = false;
  bool csv = false;
  for (size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    const auto value = [&](int64_t& out) {
      return ++i < args.size() && parse_i64(args[i], out);
    };
    if (a == "--count") {
      if (!value(count)) return usage_error("--count needs an integer");
    } else if (a == "--max-vars") {
      if (!value(max_vars)) return usage_error("--max-vars needs an integer");
    } else if (a == "--seed") {
      if (!value(seed)) return usage_error("--seed needs an integer");
      seed_seen = true;
    } else if (a == "--csv") {
      csv = true;
    } else {
      return usage_error("unknown fuzz option '" + a + "'");
    }
  }
  if (count < 0 || max_vars < 0 || !seed_seen) {
    return usage_error("fuzz needs --count, --max-vars and --seed");
  }

  uint64_t disagreements = 0;
  char* report = nullptr;
  if (nsat_fuzz(static_cast<uint64_t>(count), static_cast<int32_t>(max_vars),
                static_cast<uint64_t>(seed), csv ? 1 : 0, &disagreements,
                &report) != NSAT_OK) {
    std::cerr << "nsat: " << nsat_last_error() << '\n';
    return kExitUsage;
  }
  std::cout << report;
  nsat_string_free(report);
  if (disagreements > 0) {
    std::cerr << "nsat: fuzzing found " << disagreements << " disagreement(s)\n";
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_bench(const std::vector<std::string>& args) {
  int64_t seed = 0;
  bool seed_seen = false;
  bool csv = false;
  std::string sizes = "100000,1000000";
  for (size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--seed") {
      int64_t v;
      if (++i >= args.size() || !parse_i64(args[i], v)) {
        return usage_error("--seed needs an integer");
      }
      seed = v;
      seed_seen = true;
    } else if (a == "--sizes") {
      if (++i >= args.size()) return usage_error("--sizes needs a list");
      sizes = args[i];
    } else if (a == "--csv") {
      csv = true;
    } else {
      return usage_error("unknown bench option '" + a + "'");
    }
  }
  if (!seed_seen) return usage_error("bench needs --seed");

  // Entries M (vars = 2M) or N:M.
  std::vector<int32_t> ns, ms;
  std::stringstream ss(sizes);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    int64_t n = 0, m = 0;
    const size_t colon = token.find(':');
    if (colon == std::string::npos) {
      if (!parse_i64(token, m)) return usage_error("bad size '" + token + "'");
      n = 2 * m;
    } else {
      if (!parse_i64(token.substr(0, colon), n) ||
          !parse_i64(token.substr(colon + 1), m)) {
        return usage_error("bad size '" + token + "'");
      }
    }
    ns.push_back(static_cast<int32_t>(n));
    ms.push_back(static_cast<int32_t>(m));
  }
  if (ns.empty()) return usage_error("no benchmark sizes given");

  char* report = nullptr;
  if (nsat_bench(ns.data(), ms.data(), static_cast<int32_t>(ns.size()),
                 static_cast<uint64_t>(seed), csv ? 1 : 0, &report) != NSAT_OK) {
    std::cerr << "nsat: " << nsat_last_error() << '\n';
    return kExitUsage;
  }
  std::cout << report;
  nsat_string_free(report);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
    print_usage(args.empty() ? std::cerr : std::cout);
    return args.empty() ? kExitUsage : kExitOk;
  }
  const std::string cmd = args[0];
  args.erase(args.begin());
  if (cmd == "solve") return cmd_solve(args);
  if (cmd == "check") return cmd_check(args);
  if (cmd == "sort") return cmd_sort(args);
  if (cmd == "gen") return cmd_gen(args);
  if (cmd == "fuzz") return cmd_fuzz(args);
  if (cmd == "bench") return cmd_bench(args);
  return usage_error("unknown command '" + cmd + "'");
}
