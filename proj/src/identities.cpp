#include "qmat/identities.hpp"

#include "qmat/chebyshev.hpp"

#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>

namespace qmat {

namespace {

QCoeff q(int p) { return QCoeff::q_power(p); }
QCoeff v(int k) { return QCoeff::v_power(k); }

// Collects comparisons into one report, keeping the first failure.
class Checker {
 public:
  Checker(std::string name, std::vector<int> params) {
    report_.name = std::move(name);
    report_.params = std::move(params);
  }

  void expect(const std::string& relation, const Element& lhs, const Element& rhs) {
    if (!report_.passed) return;
    if (auto w = compare(relation, lhs, rhs)) fail(std::move(*w));
  }

  void expect_zero(const std::string& relation, const Element& lhs) { expect(relation, lhs, {}); }

  void expect(const std::string& relation, const QMatrix2& lhs, const QMatrix2& rhs) {
    expect(relation + " [1,1]", lhs.e11, rhs.e11);
    expect(relation + " [1,2]", lhs.e12, rhs.e12);
    expect(relation + " [2,1]", lhs.e21, rhs.e21);
    expect(relation + " [2,2]", lhs.e22, rhs.e22);
  }

  void expect(const std::string& relation, const Rational& lhs, const Rational& rhs) {
    if (!report_.passed || lhs == rhs) return;
    fail({relation, Monomial::unit(), Rational(lhs - rhs).str()});
  }

  void fail(Witness w) {
    report_.passed = false;
    report_.witness = std::move(w);
  }

  void note(std::string text) { report_.note = std::move(text); }
  bool passed() const { return report_.passed; }
  CheckReport take() { return std::move(report_); }

 private:
  CheckReport report_;
};

const QMatrix2& adjoint_generator_matrix() {
  static const QMatrix2 hat = qadjoint(generator_matrix());
  return hat;
}

const Element& delta() {
  static const Element value = qdet(generator_matrix());
  return value;
}

}  // namespace

std::optional<Witness> compare(const std::string& relation, const Element& lhs, const Element& rhs) {
  const Element diff = lhs - rhs;
  if (diff.is_zero()) return std::nullopt;
  const auto& [m, c] = diff.terms().front();
  return Witness{relation, m, c.to_string()};
}

PowerTable::PowerTable(int max_power) {
  if (max_power < 0) throw std::invalid_argument("PowerTable: negative size");
  const QMatrix2& a = generator_matrix();
  const QMatrix2& hat = adjoint_generator_matrix();
  powers_.push_back(identity_matrix());
  adjoint_powers_.push_back(identity_matrix());
  delta_powers_.push_back(embed(1));
  for (int n = 1; n <= max_power; ++n) {
    powers_.push_back(a * powers_.back());
    adjoint_powers_.push_back(hat * adjoint_powers_.back());
    delta_powers_.push_back(delta() * delta_powers_.back());
  }
}

const QMatrix2& PowerTable::power(int n) const { return powers_.at(static_cast<std::size_t>(n)); }

const QMatrix2& PowerTable::adjoint_power(int m) const {
  return adjoint_powers_.at(static_cast<std::size_t>(m));
}

const Element& PowerTable::delta_power(int n) const { return delta_powers_.at(static_cast<std::size_t>(n)); }

CheckReport check_rq(const QMatrix2& m, int p) {
  Checker check("rq", {p});
  const Element& a = m.e11;
  const Element& b = m.e12;
  const Element& c = m.e21;
  const Element& d = m.e22;
  check.expect("ab = Q ba", a * b, q(p) * (b * a));
  check.expect("ac = Q ca", a * c, q(p) * (c * a));
  check.expect("ad - da = (Q - Q^-1) bc", a * d - d * a, (q(p) - q(-p)) * (b * c));
  check.expect("bc = cb", b * c, c * b);
  check.expect("bd = Q db", b * d, q(p) * (d * b));
  check.expect("cd = Q dc", c * d, q(p) * (d * c));
  return check.take();
}

std::vector<CheckReport> check_vzw_families(int m, int n, const PowerTable& table) {
  if (m < 0 || n < 0) throw std::invalid_argument("check_vzw: m and n must be non-negative");
  const QMatrix2& pn = table.power(n);
  const QMatrix2& pm = table.power(m);
  const Element &an = pn.e11, &bn = pn.e12, &cn = pn.e21, &dn = pn.e22;
  const Element &am = pm.e11, &bm = pm.e12, &cm = pm.e21, &dm = pm.e22;
  const bool lower = m < n;
  const std::string branch = lower ? "branch m<n" : "branch m>=n";
  const QMatrix2& rest = table.power(lower ? n - m : m - n);
  const Element& dpow = table.delta_power(lower ? m : n);

  // Entries of A^-m A^n and A^n A^-m from the brute-force adjoint power.
  const QMatrix2 hat_first = table.adjoint_power(m) * pn;
  const QMatrix2 hat_last = pn * table.adjoint_power(m);

  std::vector<CheckReport> out;
  auto family = [&](const char* name, const Element& form1, const Element& form2, const Element& rhs,
                    const Element& product1, const Element& product2) {
    Checker check(name, {m, n});
    check.note(branch);
    check.expect(std::string(name) + " first form", form1, rhs);
    check.expect(std::string(name) + " second form", form2, rhs);
    check.expect(std::string(name) + " first form vs adjoint product", product1, form1);
    check.expect(std::string(name) + " second form vs adjoint product", product2, form2);
    out.push_back(check.take());
  };

  family("vzw.rel1", dm * an - q(-m) * (bm * cn), an * dm - q(m) * (bn * cm),
         lower ? dpow * rest.e11 : dpow * rest.e22, hat_first.e11, hat_last.e11);
  family("vzw.rel2", dm * bn - q(-m) * (bm * dn), -(q(-m) * (an * bm)) + bn * am,
         lower ? dpow * rest.e12 : -(q(n - m) * (dpow * rest.e12)), hat_first.e12, hat_last.e12);
  // For m >= n the (2,1) entry of delta^n A^-(m-n) is -q^{m-n} delta^n c_{m-n}.
  family("vzw.rel3", -(q(m) * (cm * an)) + am * cn, cn * dm - q(m) * (dn * cm),
         lower ? dpow * rest.e21 : -(q(m - n) * (dpow * rest.e21)), hat_first.e21, hat_last.e21);
  family("vzw.rel4", -(q(m) * (cm * bn)) + am * dn, -(q(-m) * (cn * bm)) + dn * am,
         lower ? dpow * rest.e22 : dpow * rest.e11, hat_first.e22, hat_last.e22);

  Checker rel5("vzw.rel5", {m, n});
  rel5.note(branch);
  rel5.expect_zero("vzw.rel5 b_n c_m - q^{n-m} c_n b_m", bn * cm - q(n - m) * (cn * bm));
  out.push_back(rel5.take());
  return out;
}

CheckReport check_vzw(int m, int n, const PowerTable& table) {
  Checker check("vzw", {m, n});
  check.note(m < n ? "branch m<n" : "branch m>=n");
  for (auto& r : check_vzw_families(m, n, table)) {
    if (!r.passed) {
      check.fail(std::move(*r.witness));
      break;
    }
  }
  return check.take();
}

CheckReport check_vzw(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("check_vzw: m and n must be non-negative");
  return check_vzw(m, n, PowerTable(std::max(m, n)));
}

CheckReport check_qch(const QMatrix2& m) {
  Checker check("qch", {});
  const Element t = tau(m);
  const Element tp = tau_prime(m);
  const Element det = qdet(m);
  const QMatrix2 square = m * m;
  check.expect("A^2 = A C^-1 tau - C^-2 delta", square, m * c_matrix(-1) * t - c_matrix(-2) * det);
  check.expect("A^2 = tau' C A - delta C^2", square, tp * c_matrix(1) * m - det * c_matrix(2));
  return check.take();
}

CheckReport check_central(const Element& x, const std::string& label) {
  Checker check("central", {});
  check.note(label);
  for (Gen g : {Gen::a, Gen::b, Gen::c, Gen::d}) {
    const Element y = gen(g);
    check.expect(label + " " + gen_name(g) + " = " + gen_name(g) + " " + label, x * y, y * x);
  }
  return check.take();
}

CheckReport check_central_delta() {
  Checker check("central_delta", {});
  const Element& det = delta();
  check.expect("ad - q bc = da - q^-1 bc", det, qdet_reversed(generator_matrix()));
  if (auto r = check_central(det, "delta"); check.passed() && !r.passed) check.fail(std::move(*r.witness));
  const Element t = tau(generator_matrix());
  check.expect("tau delta = delta tau", t * det, det * t);
  return check.take();
}

CheckReport check_a_hat_a() {
  Checker check("a_hat_a", {});
  const QMatrix2& a = generator_matrix();
  const QMatrix2& hat = adjoint_generator_matrix();
  const QMatrix2 delta_e = delta() * identity_matrix();
  check.expect("A A^ = delta E", a * hat, delta_e);
  check.expect("A^ A = delta E", hat * a, delta_e);
  return check.take();
}

CheckReport check_hat_invariants() {
  Checker check("hat_invariants", {});
  const QMatrix2& a = generator_matrix();
  const QMatrix2& hat = adjoint_generator_matrix();
  check.expect("q^-1/2 a^ + q^1/2 d^ = tau", v(-1) * hat.e11 + v(1) * hat.e22, tau(a));
  check.expect("q^1/2 a^ + q^-1/2 d^ = tau'", v(1) * hat.e11 + v(-1) * hat.e22, tau_prime(a));
  check.expect("a^ d^ - q^-1 b^ c^ = delta", hat.e11 * hat.e22 - q(-1) * (hat.e12 * hat.e21), delta());
  return check.take();
}

CheckReport check_qdet_power(int n, const PowerTable& table) {
  if (n < 0) throw std::invalid_argument("check_qdet_power: n must be >= 0");
  Checker check("qdet_power", {n});
  const QMatrix2& p = table.power(n);
  const Element bc = p.e12 * p.e21;
  const Element& target = table.delta_power(n);
  check.expect("a_n d_n - q^n b_n c_n = delta^n", p.e11 * p.e22 - q(n) * bc, target);
  check.expect("d_n a_n - q^-n b_n c_n = delta^n", p.e22 * p.e11 - q(-n) * bc, target);
  return check.take();
}

CheckReport check_qdet_power(int n) {
  if (n < 0) throw std::invalid_argument("check_qdet_power: n must be >= 0");
  return check_qdet_power(n, PowerTable(n));
}

namespace {

// tr(A^k C^k) and tr(C^-k A^k); tau_0 = tau'_0 = 2.
Element twisted_trace(int k, const PowerTable& table) {
  const QMatrix2& p = table.power(k);
  return v(k) * p.e11 + v(-k) * p.e22;
}

Element twisted_trace_prime(int k, const PowerTable& table) {
  const QMatrix2& p = table.power(k);
  return v(-k) * p.e11 + v(k) * p.e22;
}

}  // namespace

CheckReport check_tau_trace(int n, const PowerTable& table) {
  if (n < 1) throw std::invalid_argument("check_tau_trace: n must be >= 1");
  Checker check("tau_trace", {n});
  check.note("tau_n = tr(A^n C^n) = q^{n/2} a_n + q^{-n/2} d_n with tau_0 = 2; equals f_n(tau) only for n = 1");
  const Element t = tau(generator_matrix());
  const Element tp = tau_prime(generator_matrix());
  check.expect("tau_{n+1} = tau_n tau - tau_{n-1} delta", twisted_trace(n + 1, table),
               twisted_trace(n, table) * t - twisted_trace(n - 1, table) * delta());
  check.expect("tau'_{n+1} = tau'_n tau' - tau'_{n-1} delta", twisted_trace_prime(n + 1, table),
               twisted_trace_prime(n, table) * tp - twisted_trace_prime(n - 1, table) * delta());
  check.expect("tau_n = f_n(tau) - delta f_{n-2}(tau)", twisted_trace(n, table),
               f_eval(n, t, delta()) - delta() * f_eval(n - 2, t, delta()));
  check.expect("tau'_n = f_n(tau') - delta f_{n-2}(tau')", twisted_trace_prime(n, table),
               f_eval(n, tp, delta()) - delta() * f_eval(n - 2, tp, delta()));
  return check.take();
}

CheckReport check_tau_trace(int n) {
  if (n < 1) throw std::invalid_argument("check_tau_trace: n must be >= 1");
  return check_tau_trace(n, PowerTable(n + 1));
}

CheckReport check_tau_chebyshev_claim(int n, const PowerTable& table) {
  if (n < 1) throw std::invalid_argument("check_tau_chebyshev_claim: n must be >= 1");
  Checker check("tau_chebyshev_claim", {n});
  const Element t = tau(generator_matrix());
  const Element tp = tau_prime(generator_matrix());
  check.expect("q^{n/2} a_n + q^{-n/2} d_n = f_n(tau)", twisted_trace(n, table), f_eval(n, t, delta()));
  check.expect("q^{-n/2} a_n + q^{n/2} d_n = f_n(tau')", twisted_trace_prime(n, table), f_eval(n, tp, delta()));
  return check.take();
}

CheckReport check_classical_limit(int n, const std::array<Rational, 4>& assignment, const PowerTable& table) {
  if (n < 1) throw std::invalid_argument("check_classical_limit: n must be >= 1");
  Checker check("classical_limit", {n});
  std::string values;
  for (const auto& x : assignment) values += (values.empty() ? "" : ",") + x.str();
  check.note("(a,b,c,d) = (" + values + ")");

  const QMatrix2& p = table.power(n);
  const std::array<Rational, 4> symbolic = {evaluate_classical(p.e11, assignment),
                                            evaluate_classical(p.e12, assignment),
                                            evaluate_classical(p.e21, assignment),
                                            evaluate_classical(p.e22, assignment)};

  const auto& [a, b, c, d] = assignment;
  std::array<Rational, 4> numeric = {1, 0, 0, 1};
  for (int k = 0; k < n; ++k) {
    const auto [x11, x12, x21, x22] = numeric;
    numeric = {a * x11 + b * x21, a * x12 + b * x22, c * x11 + d * x21, c * x12 + d * x22};
  }

  const Rational trace = a + d;
  const Rational det = a * d - b * c;
  const Rational f1 = f_sum(n - 1).evaluate(trace, det);
  const Rational f2 = f_sum(n - 2).evaluate(trace, det);
  const std::array<Rational, 4> classical = {a * f1 - det * f2, b * f1, c * f1, d * f1 - det * f2};

  static const char* const kEntry[] = {"[1,1]", "[1,2]", "[2,1]", "[2,2]"};
  for (int i = 0; i < 4; ++i) {
    check.expect(std::string("v=1 power vs numeric power ") + kEntry[i], symbolic[i], numeric[i]);
    check.expect(std::string("v=1 power vs classical formula ") + kEntry[i], symbolic[i], classical[i]);
  }
  return check.take();
}

CheckReport check_classical_limit(int n, const std::array<Rational, 4>& assignment) {
  if (n < 1) throw std::invalid_argument("check_classical_limit: n must be >= 1");
  return check_classical_limit(n, assignment, PowerTable(n));
}

CheckReport check_power_formulas(int n, const PowerTable& table) {
  Checker check("power_formulas", {n});
  const QMatrix2& brute = table.power(n);
  check.expect("A^n = A C^{1-n} f_{n-1}(tau) - C^-n delta f_{n-2}(tau)", power_ch1(generator_matrix(), n), brute);
  check.expect("A^n = f_{n-1}(tau') C^{n-1} A - f_{n-2}(tau') delta C^n", power_ch2(generator_matrix(), n),
               brute);
  return check.take();
}

CheckReport check_entry_formulas(int n, const PowerTable& table) {
  Checker check("entry_formulas", {n});
  const QMatrix2& p = table.power(n);
  for (Variant variant : {Variant::kLeft, Variant::kRight}) {
    const std::string side = variant == Variant::kLeft ? " (tau form)" : " (tau' form)";
    const Entries e = entries_closed(n, variant);
    check.expect("a_n" + side, e.a, p.e11);
    check.expect("b_n" + side, e.b, p.e12);
    check.expect("c_n" + side, e.c, p.e21);
    check.expect("d_n" + side, e.d, p.e22);
  }
  return check.take();
}

CheckReport check_alt_entry_formulas(int n, const PowerTable& table) {
  Checker check("alt_entry_formulas", {n});
  const QMatrix2& p = table.power(n);
  for (Variant variant : {Variant::kLeft, Variant::kRight}) {
    const std::string side = variant == Variant::kLeft ? " (tau form)" : " (tau' form)";
    const DiagonalEntries e = entries_alt(n, variant);
    check.expect("a_n" + side, e.a, p.e11);
    check.expect("d_n" + side, e.d, p.e22);
  }
  return check.take();
}

CheckReport check_adjoint_power(int m, const PowerTable& table) {
  Checker check("adjoint_power", {m});
  const QMatrix2& hat = table.adjoint_power(m);
  if (m >= 1) {
    check.expect("closed adjoint power (tau form)", adjoint_power_closed(m, Variant::kLeft), hat);
    check.expect("closed adjoint power (tau' form)", adjoint_power_closed(m, Variant::kRight), hat);
  }
  const QMatrix2& p = table.power(m);
  check.expect("a^_m = d_m", hat.e11, p.e22);
  check.expect("b^_m = -q^-m b_m", hat.e12, -(q(-m) * p.e12));
  check.expect("c^_m = -q^m c_m", hat.e21, -(q(m) * p.e21));
  check.expect("d^_m = a_m", hat.e22, p.e11);
  return check.take();
}

CheckReport check_chebyshev(int n) {
  Checker check("chebyshev", {n});
  const FPoly by_sum = f_sum(n);
  if (by_sum != f_rec(n)) {
    check.fail({"f_sum = f_rec", Monomial::unit(), "polynomials differ"});
  } else if (!by_sum.is_weighted_homogeneous(n)) {
    check.fail({"weighted homogeneity", Monomial::unit(), "term off weight " + std::to_string(n)});
  }
  const Element t = tau(generator_matrix());
  const Element evaluated = f_eval(n, t, delta());
  check.expect("f_eval = direct substitution", evaluated, substitute(by_sum, t, delta()));
  if (n >= 1) {
    check.expect("f_{n+1}(tau) = tau f_n(tau) - delta f_{n-1}(tau)", f_eval(n + 1, t, delta()),
                 t * evaluated - delta() * f_eval(n - 1, t, delta()));
  }
  return check.take();
}

std::vector<std::array<Rational, 4>> classical_assignments() {
  return {
      {1, 0, 0, 1},
      {1, 1, 0, 1},
      {2, 1, 1, 1},
      {Rational(1, 2), -3, Rational(2, 3), 5},
      {-1, 2, Rational(7, 3), Rational(-4, 5)},
  };
}

std::vector<CheckReport> run_suite(int max_n, unsigned workers) {
  if (max_n < 1) throw std::invalid_argument("run_suite: max_n must be >= 1");
  const PowerTable table(max_n + 1);

  struct Task {
    std::string name;
    std::vector<int> params;
    std::function<CheckReport()> run;
  };
  std::vector<Task> tasks;
  auto add = [&tasks](std::string name, std::vector<int> params, std::function<CheckReport()> run) {
    tasks.push_back({std::move(name), std::move(params), std::move(run)});
  };

  add("rq", {1}, [] { return check_rq(generator_matrix(), 1); });
  add("rq_adjoint", {-1}, [] {
    CheckReport r = check_rq(adjoint_generator_matrix(), -1);
    r.name = "rq_adjoint";
    return r;
  });
  add("central_delta", {}, [] { return check_central_delta(); });
  add("a_hat_a", {}, [] { return check_a_hat_a(); });
  add("hat_invariants", {}, [] { return check_hat_invariants(); });
  add("qch", {}, [] { return check_qch(generator_matrix()); });
  for (int n = -1; n <= max_n; ++n) add("chebyshev", {n}, [n] { return check_chebyshev(n); });
  for (int n = 1; n <= max_n; ++n) {
    add("power_formulas", {n}, [n, &table] { return check_power_formulas(n, table); });
  }
  for (int n = 1; n <= max_n; ++n) {
    add("entry_formulas", {n}, [n, &table] { return check_entry_formulas(n, table); });
  }
  for (int n = 0; n <= max_n; ++n) {
    add("alt_entry_formulas", {n}, [n, &table] { return check_alt_entry_formulas(n, table); });
  }
  for (int m = 0; m <= max_n; ++m) {
    add("adjoint_power", {m}, [m, &table] { return check_adjoint_power(m, table); });
  }
  for (int n = 0; n <= max_n; ++n) {
    add("rq_power", {n}, [n, &table] {
      CheckReport r = check_rq(table.power(n), n);
      r.name = "rq_power";
      return r;
    });
  }
  for (int n = 0; n <= max_n; ++n) add("qdet_power", {n}, [n, &table] { return check_qdet_power(n, table); });
  for (int n = 1; n <= max_n; ++n) add("tau_trace", {n}, [n, &table] { return check_tau_trace(n, table); });
  for (int m = 0; m <= max_n; ++m) {
    for (int n = 0; n <= max_n; ++n) add("vzw", {m, n}, [m, n, &table] { return check_vzw(m, n, table); });
  }
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& values : classical_assignments()) {
      add("classical_limit", {n}, [n, values, &table] { return check_classical_limit(n, values, table); });
    }
  }

  // A check that throws (e.g. a precondition broken by a bad algebra) fails.
  auto execute = [](const Task& task) {
    try {
      return task.run();
    } catch (const std::exception& e) {
      CheckReport r{task.name, task.params, false, Witness{"exception", Monomial::unit(), e.what()}, ""};
      return r;
    }
  };

  std::vector<CheckReport> reports(tasks.size());
  const unsigned threads = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(tasks.size())));
  if (threads == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) reports[i] = execute(tasks[i]);
    return reports;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < tasks.size(); i = next++) reports[i] = execute(tasks[i]);
    });
  }
  pool.clear();  // joins
  return reports;
}

}  // namespace qmat
