// Acceptance run: one PASS/FAIL line per criterion. Dimensions are compared
// exactly; each criterion also has a wall-clock budget in seconds.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "superhom/cli.hpp"
#include "superhom/closedform.hpp"
#include "superhom/cocycle.hpp"
#include "superhom/homology.hpp"
#include "superhom/lie.hpp"
#include "superhom/spec_io.hpp"

using namespace superhom;

namespace {

constexpr double budget_s[9] = {0, 600, 60, 300, 120, 300, 300, 120, 600};

struct Result {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " FAILED[" << what << "]";
    }
  }
  void expect(const CheckReport& rep, const std::string& what) {
    expect(rep.passed(), what + ": " + rep.first_failure());
  }
};

std::string dims(const HomologyReport& h) {
  return "ce=" + std::to_string(h.ce_dim.value_or(0)) + " closed=" + std::to_string(h.closed_dim);
}

void homology_instance(Result& res, const char* name, std::size_t m, std::size_t expected) {
  HomologyReport h = compare_h2(builtin_by_name(name), m);
  res.detail << " " << name << "/m=" << m << ": " << dims(h) << ";";
  res.expect(h.ce_dim == expected && h.closed_dim == expected, std::string(name) + " expected " + std::to_string(expected));
}

void c1(Result& r) { homology_instance(r, "rationals", 5, 0); }
void c2(Result& r) { homology_instance(r, "rationals", 4, 1); }
void c3(Result& r) { homology_instance(r, "grassmann1", 4, 2); }
void c4(Result& r) {
  homology_instance(r, "gf3", 3, 3);
  homology_instance(r, "rationals", 3, 0);
}

void c5(Result& r) {
  const SuperAlgebra q = builtin_by_name("rationals").algebra;
  r.expect(iso_p_double_sl(q, 3), "iso_p_double_sl(Q, 3)");
  const std::size_t sl = h2(build_sl(q, 3).lie).dim, hc = hc1(q).dim();
  r.detail << " H2(sl_3|3(Q))=" << sl << " HC1(Q)=" << hc << ";";
  r.expect(sl == 0 && hc == 0, "H2(sl) = HC1(Q) = 0");
  for (const char* name : {"rationals", "grassmann1", "dual"}) {
    const SuperAlgebra s = builtin_by_name(name).algebra;
    const std::size_t hd = hd1_plus(compose_with_rho(double_with_exchange(s))).dim(), c = hc1(s).dim();
    r.detail << " " << name << ": HD=" << hd << " HC1=" << c << ";";
    r.expect(hd == c, std::string("HD of the double vs HC1 for ") + name);
  }
}

void c6(Result& r) {
  AlphaCocycle alpha = alpha_cocycle(build_p(builtin_by_name("z2"), 3));
  r.expect(verify_cocycle(alpha.gl), "alpha on gl_3|3(Q[Z2])");
  for (const char* name : {"rationals", "grassmann1"}) {
    TwoCocycle b = beta4_cocycle(build_p(builtin_by_name(name), 4));
    r.expect(verify_cocycle(b), std::string("beta4 on p_4 ") + name);
    if (std::string(name) == "rationals") {
      const bool trivial = is_coboundary(b).has_value();
      r.detail << " beta4(Q) coboundary=" << (trivial ? "yes" : "no") << ";";
      r.expect(!trivial, "beta4 on p_4(Q) is not a coboundary");
    }
  }
  TwoCocycle b3 = beta3_cocycle(build_p(builtin_by_name("gf3"), 3));
  r.expect(verify_cocycle(b3), "beta3 on p_3(GF3)");
  const std::size_t rank = class_rank(b3);
  r.detail << " beta3(GF3) class rank=" << rank << ";";
  r.expect(rank == 3, "beta3 classes independent");
}

void c7(Result& r) {
  PConstruction pc = build_p(builtin_by_name("z2"), 3);
  AlphaCocycle a = alpha_cocycle(pc);
  CentralExtension e = central_extension(a.p);
  r.expect(verify_extension(e), "extension");
  CheckReport rep = lambda_mu_suite(pc, a, e);
  r.detail << " " << rep.checks.size() << " identities;";
  r.expect(rep, "lambda/mu");
}

void c8(Result& r) {
  std::size_t checks = 0, failures = 0;
  for (const char* name : {"rationals", "gf3", "grassmann1", "z2", "double_rationals", "double_grassmann1"})
    for (std::size_t m = 3; m <= 5; ++m) {
      CheckReport rep = structural_suite(builtin_by_name(name), m);
      checks += rep.checks.size();
      for (const auto& c : rep.checks)
        if (!c.passed) ++failures;
      r.expect(rep, std::string(name) + " m=" + std::to_string(m));
    }
  r.detail << " " << checks << " checks, " << failures << " failures;";
}

}  // namespace

int main() {
  const std::function<void(Result&)> criteria[] = {c1, c2, c3, c4, c5, c6, c7, c8};
  const char* titles[] = {"H2(p_5(Q)) = 0",
                          "H2(p_4(Q)) = 1",
                          "H2(p_4(grassmann, rho)) = 2",
                          "H2(p_3(GF3)) = 3, H2(p_3(Q)) = 0",
                          "sl correspondence",
                          "cocycle suite",
                          "lambda/mu identities",
                          "structural suites"};
  int failed = 0;
  for (int k = 0; k < 8; ++k) {
    Result res;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k](res);
    } catch (const std::exception& e) {
      res.ok = false;
      res.detail << " exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > budget_s[k + 1]) {
      res.ok = false;
      res.detail << " over budget " << budget_s[k + 1] << "s";
    }
    if (!res.ok) ++failed;
    std::cout << (res.ok ? "PASS" : "FAIL") << " criterion " << k + 1 << " (" << titles[k] << "):" << res.detail.str()
              << " [" << std::fixed << std::setprecision(2) << secs << "s]" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
