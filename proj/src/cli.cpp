#include "qmat/cli.hpp"

#include "qmat/chebyshev.hpp"
#include "qmat/closed_form.hpp"
#include "qmat/format.hpp"
#include "qmat/identities.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

namespace qmat {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kFormats = {"text", "json", "latex"};

void print_matrix(std::ostream& out, const QMatrix2& m, int n, const std::string& format) {
  if (format == "json") {
    out << to_json(m).dump() << "\n";
    return;
  }
  const std::pair<const char*, const Element*> entries[] = {
      {"a", &m.e11}, {"b", &m.e12}, {"c", &m.e21}, {"d", &m.e22}};
  for (const auto& [name, e] : entries) {
    if (format == "latex") {
      out << name << "_{" << n << "} = " << to_latex(*e) << "\n";
    } else {
      out << name << "_" << n << " = " << to_text(*e) << "\n";
    }
  }
}

int cmd_power(std::ostream& out, int n, const std::string& method, const std::string& format, bool compare) {
  if (n < 0) throw UsageError("power: --n must be >= 0");
  if ((method != "brute" || compare) && n == 0) {
    throw UsageError("power: the closed formulas ch1/ch2 need --n >= 1");
  }
  if (compare) {
    const QMatrix2 brute = mat_pow(generator_matrix(), n);
    const bool ch1 = power_ch1(generator_matrix(), n) == brute;
    const bool ch2 = power_ch2(generator_matrix(), n) == brute;
    if (format == "json") {
      out << Json{{"n", n}, {"ch1_equals_brute", ch1}, {"ch2_equals_brute", ch2}, {"ok", ch1 && ch2}}.dump()
          << "\n";
    } else {
      out << "ch1 == ch2 == brute: " << (ch1 && ch2 ? "OK" : "MISMATCH") << "\n";
    }
    return ch1 && ch2 ? kExitOk : kExitIdentityFailure;
  }
  QMatrix2 result;
  if (method == "brute") {
    result = mat_pow(generator_matrix(), n);
  } else if (method == "ch1") {
    result = power_ch1(generator_matrix(), n);
  } else {
    result = power_ch2(generator_matrix(), n);
  }
  print_matrix(out, result, n, format);
  return kExitOk;
}

int cmd_fpoly(std::ostream& out, int n, const std::string& format, bool check) {
  if (n < -1) throw UsageError("fpoly: --n must be >= -1");
  const FPoly p = f_sum(n);
  const bool agrees = !check || p == f_rec(n);
  if (format == "json") {
    Json j = to_json(p);
    j["n"] = n;
    if (check) j["sum_equals_recurrence"] = agrees;
    out << j.dump() << "\n";
  } else {
    out << (format == "latex" ? to_latex(p) : to_text(p)) << "\n";
    if (check) out << "f_sum == f_rec: " << (agrees ? "OK" : "MISMATCH") << "\n";
  }
  return agrees ? kExitOk : kExitIdentityFailure;
}

int cmd_verify(std::ostream& out, int max_n, const std::string& format) {
  if (max_n < 1) throw UsageError("verify: --max must be >= 1");
  const auto reports = run_suite(max_n, std::max(1u, std::thread::hardware_concurrency()));
  const auto failed = std::count_if(reports.begin(), reports.end(), [](const CheckReport& r) { return !r.passed; });
  if (format == "json") {
    out << to_json(reports).dump() << "\n";
  } else {
    for (const auto& r : reports) out << to_text(r) << "\n";
    out << reports.size() << " checks, " << failed << " failed\n";
  }
  return failed == 0 ? kExitOk : kExitIdentityFailure;
}

int cmd_vzw(std::ostream& out, int m, int n, const std::string& format) {
  if (m < 0 || n < 0) throw UsageError("vzw: --m and --n must be >= 0");
  const PowerTable table(std::max(m, n));
  const auto families = check_vzw_families(m, n, table);
  const bool passed = std::all_of(families.begin(), families.end(), [](const CheckReport& r) { return r.passed; });
  const std::string branch = m < n ? "m<n" : "m>=n";
  if (format == "json") {
    out << Json{{"m", m}, {"n", n}, {"branch", branch}, {"passed", passed}, {"families", to_json(families)}}.dump()
        << "\n";
  } else {
    out << "branch " << branch << "\n";
    for (const auto& r : families) out << to_text(r) << "\n";
    out << (passed ? "PASS" : "FAIL") << " vzw(" << m << "," << n << ")\n";
  }
  return passed ? kExitOk : kExitIdentityFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the 2x2 quantum matrix algebra", "qmat"};
  app.require_subcommand(1);

  int n = 0;
  int m = 0;
  int max_n = 8;
  std::string method = "brute";
  std::string format = "text";
  bool compare = false;
  bool check = false;

  auto* power = app.add_subcommand("power", "Entries of A^n");
  power->add_option("--n", n, "exponent (>= 0)")->required();
  power->add_option("--method", method, "brute | ch1 | ch2")->check(CLI::IsMember({"brute", "ch1", "ch2"}));
  power->add_option("--format", format, "text | json | latex")->check(CLI::IsMember(kFormats));
  power->add_flag("--compare", compare, "compare brute force with both closed formulas");

  auto* fpoly = app.add_subcommand("fpoly", "The Chebyshev-type polynomial f_n(x, y)");
  fpoly->add_option("--n", n, "index (>= -1)")->required();
  fpoly->add_option("--format", format, "text | json | latex")->check(CLI::IsMember(kFormats));
  fpoly->add_flag("--check", check, "cross-check the defining sum against the recurrence");

  auto* verify = app.add_subcommand("verify", "Run the identity suite");
  verify->add_option("--max", max_n, "largest power checked (>= 1)");
  verify->add_option("--format", format, "text | json")->check(CLI::IsMember(kFormats));

  auto* vzw = app.add_subcommand("vzw", "Commutation relations between entries of A^m-hat and A^n");
  vzw->add_option("--m", m, "adjoint power (>= 0)")->required();
  vzw->add_option("--n", n, "power (>= 0)")->required();
  vzw->add_option("--format", format, "text | json")->check(CLI::IsMember(kFormats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qmat: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*power) return cmd_power(out, n, method, format, compare);
    if (*fpoly) return cmd_fpoly(out, n, format, check);
    if (*verify) return cmd_verify(out, max_n, format);
    return cmd_vzw(out, m, n, format);
  } catch (const UsageError& e) {
    err << "qmat: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    // only reachable when the algebra itself misbehaves
    err << "qmat: " << e.what() << "\n";
    return kExitIdentityFailure;
  }
}

}  // namespace qmat
