// Acceptance suite: one PASS/FAIL line per criterion, with wall time against
// its budget. Exits nonzero if anything fails or runs over.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "stirling/cli.hpp"
#include "stirling/congruences.hpp"
#include "stirling/parity.hpp"
#include "stirling/stirling_numbers.hpp"
#include "stirling/stirling_poly.hpp"

#ifndef STIRLING_GOLDEN_DIR
#define STIRLING_GOLDEN_DIR "tests/golden"
#endif

using namespace stirling;

namespace {

// Collects the first failing check so the report line can say what broke.
struct Checker {
  std::string first_failure;
  void expect(bool ok, const std::string& what) {
    if (!ok && first_failure.empty()) first_failure = what;
  }
  bool passed() const { return first_failure.empty(); }
};

std::string tag(std::int64_t m, std::int64_t n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

void oracle_equivalence(Checker& c) {
  for (int m = 1; m <= 60; ++m) {
    for (int n = 1; n <= m; ++n) c.expect(stirling2(m, n) == stirling2_by_sum(m, n), "S" + tag(m, n));
  }
}

void nonpositive_d(Checker& c) {
  const std::vector<Rational> points{Rational(-3), Rational::parse("-1/2"), Rational(0), Rational::parse("2/3"),
                                     Rational::parse("17/4")};
  for (int n = 1; n <= 20; ++n) {
    for (int m = 1; m <= n; ++m) {
      const IntPolynomial s = stirling_function_poly(m, n);
      c.expect(s == IntPolynomial::constant(stirling2(m, n)), "constant " + tag(m, n));
      for (const Rational& z : points) c.expect(eval_definition(m, n, z) == Rational(stirling2(m, n)), "eval " + tag(m, n));
    }
  }
}

void roots_of_p(Checker& c) {
  for (int n = 1; n <= 8; ++n) {
    for (int d = 1; d <= 8; ++d) {
      const int m = n + d;
      const IntPolynomial p = p_polynomial(m, n);
      const IntPolynomial dp = p.derivative();
      const Integer slope = Integer(m) * stirling2(m - 1, n);
      c.expect(p.evaluate(Rational(0)).is_zero(), "P(0) " + tag(m, n));
      c.expect(p.evaluate(Rational(n)).is_zero() == (d % 2 == 0), "P(n) " + tag(m, n));
      c.expect(dp.evaluate(Rational(0)) == Rational(-slope), "P'(0) " + tag(m, n));
      if (d % 2 == 0) c.expect(dp.evaluate(Rational(n)) == Rational(slope), "P'(n) " + tag(m, n));
    }
  }
}

void polynomial_identities(Checker& c) {
  const IntPolynomial z({Integer(0), Integer(1)});
  for (int n = 1; n <= 8; ++n) {
    for (int d = 1; d <= 8; ++d) {
      const int m = n + d;
      const IntPolynomial s = stirling_function_poly(m, n);
      for (int k = 1; k <= d; ++k) {
        const IntPolynomial dk = kth_derivative(m, n, k).poly;
        Integer factor = falling_factorial(m, k);
        if (k % 2) factor = -factor;
        c.expect(dk == factor * stirling_function_poly(m - k, n), "derivative " + tag(m, n));
        IntPolynomial mirrored = dk.compose_affine(Integer(-1), Integer(n));
        if ((d - k) % 2) mirrored *= Integer(-1);
        c.expect(dk == mirrored, "symmetry " + tag(m, n));
      }
      if (n >= 2) {
        const IntPolynomial rhs =
            stirling_function_poly(m - 1, n - 1).compose_affine(Integer(1), Integer(-1)) - z * stirling_function_poly(m - 1, n);
        c.expect(s == rhs, "shift recurrence " + tag(m, n));
      }
      for (int j = 1; j <= d; ++j) {
        const auto [l, r] = convolution_check(m, n, j);
        c.expect(l == r, "convolution " + tag(m, n));
      }
      for (const char* q : {"-5/2", "0", "1/3", "7", "29/5"}) {
        const auto [l, r] = gould_sides(m, n, Rational::parse(q));
        c.expect(l == r, "Gould " + tag(m, n));
      }
    }
  }
}

void recentred_positivity(Checker& c) {
  for (int n = 1; n <= 10; ++n) {
    for (int d = 1; d <= 12; ++d) {
      const auto t = recenter_at_half_n(n + d, n);
      c.expect(static_cast<int>(t.size()) == d + 1, "length " + tag(n + d, n));
      for (std::size_t j = 0; j < t.size(); ++j) {
        if (d % 2 == 0) {
          c.expect(j % 2 ? t[j].is_zero() : t[j].sign() > 0, "even d coefficient " + tag(n + d, n));
        } else if (j % 2 == 0) {
          c.expect(t[j].is_zero(), "odd d coefficient " + tag(n + d, n));
        }
      }
      if (d % 2 == 0) c.expect(has_positive_even_expansion(t), "criterion " + tag(n + d, n));
    }
  }
}

void root_classification(Checker& c) {
  for (int n = 1; n <= 10; ++n) {
    for (int m = 1; m <= n + 10; ++m) {
      const int d = m - n;
      const RootClassification r = real_roots(m, n);
      const RootKind want = d <= 0 ? RootKind::AllReals : d % 2 ? RootKind::ZeroOnly : RootKind::ZeroAndN;
      c.expect(r.kind == want, "kind " + tag(m, n));
      if (d > 0) c.expect(r.simple_certified, "certified " + tag(m, n));
      if (d > 2) c.expect(d >= static_cast<int>(r.roots.size()) + 1, "degree gap " + tag(m, n));
    }
  }
}

void v_reconstruction(Checker& c) {
  c.expect(v_number(4, 2) == Rational(1), "v(4,2)");
  c.expect(reconstruct_from_v(4, 2) == Integer(7), "reconstruct (4,2)");
  for (int n = 1; n <= 10; ++n) {
    for (int d = 1; d <= 12; ++d) {
      const int m = n + d;
      if (n % 2 == 0) c.expect(v_number(m, n).is_integer(), "integral v " + tag(m, n));
      c.expect(reconstruct_from_v(m, n) == stirling2(m, n), "reconstruct " + tag(m, n));
    }
  }
}

void valuations_and_primality(Checker& c) {
  for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
    for (int n = 1; n <= 30; ++n) {
      for (int d = 1; d <= 21; d += 2) {
        const ValuationBound v = valuation_bound(p, n + d, n);
        c.expect(v.actual >= v.bound, "valuation p=" + std::to_string(p) + " " + tag(n + d, n));
      }
    }
  }
  std::vector<std::pair<int, int>> primes;
  for (int n = 1; n <= 30; ++n) {
    for (int d = 1; d <= 21; d += 2) {
      c.expect(half_even_divides(n + d, n), "e(n)/2 " + tag(n + d, n));
      if (is_prime(stirling2(n + d, n))) primes.emplace_back(n + d, n);
      const bool flagged = classify_primality_odd_d(n + d, n).kind == OddDClass::PrimeExceptional;
      c.expect(flagged == (n + d == 3 && n == 2), "classification " + tag(n + d, n));
    }
  }
  c.expect(primes == std::vector<std::pair<int, int>>{{3, 2}}, "primality scan");
}

const char* const kOrderFourTapestry =
    "1 1 1 1 1\n"
    "1 0 1 0 1\n"
    "1 1 0 0 1\n"
    "1 0 0 0 1\n"
    "1 1 1 1 0\n";

void parity_suite(Checker& c) {
  for (int n = 1; n <= 40; ++n) {
    for (int d = 0; d <= 40; d += 2) {
      c.expect(parity_even_d(n + d, n) == (stirling2(n + d, n).is_odd() ? 1 : 0), "parity " + tag(n + d, n));
    }
  }

  std::ostringstream rendered;
  const ParityMatrix p4 = build_tapestry(4);
  for (std::size_t i = 0; i < p4.size(); ++i) {
    for (std::size_t j = 0; j < p4.size(); ++j) rendered << p4.at(i, j) << (j + 1 < p4.size() ? " " : "\n");
  }
  c.expect(rendered.str() == kOrderFourTapestry, "order 4 matrix");

  for (std::uint64_t i = 1; i <= 32; ++i) {
    std::vector<int> row;
    for (std::uint64_t j = 0; j < 256; ++j) row.push_back((i & j) == 0 ? 1 : 0);
    const std::uint64_t expected = std::uint64_t{2} << msb_position(Integer(static_cast<std::int64_t>(i)));
    c.expect(oracle::minimal_period(row) == expected && row_period(i) == expected, "period " + std::to_string(i));
  }

  std::vector<ParityFrequency> freqs;
  for (std::uint64_t i = 0; i <= 64; ++i) freqs.push_back(parity_frequency(i));
  for (std::size_t a = 0; a < freqs.size(); ++a) {
    for (std::size_t b = a + 1; b < freqs.size(); ++b) c.expect(!same_frequency(freqs[a], freqs[b]), "frequencies");
  }

  for (std::size_t n = 0; n <= 64; ++n) c.expect(det_mod2(build_tapestry(n)) == 1, "det " + std::to_string(n));

  std::ifstream golden(STIRLING_GOLDEN_DIR "/gasket_100.pbm", std::ios::binary);
  c.expect(static_cast<bool>(golden), "golden file missing");
  std::stringstream want;
  want << golden.rdbuf();
  std::ostringstream out, err;
  const int code = cli::run({"gasket", "100"}, out, err);
  c.expect(code == cli::kOk && out.str() == want.str(), "gasket 100 differs from golden");
}

void wilson_suite(Checker& c) {
  for (std::int64_t p = 2; p <= 31; ++p) {
    if (!oracle::is_prime_trial(p)) continue;
    for (std::int64_t n = 1; n <= 4; ++n) c.expect(wilson_check(p, n), "necessity " + tag(p, n));
  }
  for (std::int64_t p = 2; p <= 200; ++p) {
    c.expect(is_prime_wilson(p, 2).all_passed == oracle::is_prime_trial(p), "sufficiency " + std::to_string(p));
  }
  for (std::int64_t p : {3, 5, 7, 11}) {
    for (std::int64_t n = 1; n <= 3; ++n) {
      for (std::int64_t k = 1; k <= p - 2; ++k) {
        const auto r = wilson_factorial_residue(p, n, k);
        const std::uint64_t expected = factorial(static_cast<std::uint64_t>(k - 1)).mod(static_cast<std::uint64_t>(p));
        c.expect(r.residue == expected && r.expected == expected, "residue " + tag(p, n));
        c.expect(stirling2(n * (p - 1), p - k).mod(static_cast<std::uint64_t>(p)) == expected, "exact residue " + tag(p, n));
      }
      for (std::int64_t k = 2; k < p; ++k) c.expect(shifted_row_vanishes(p, n, k), "shifted row " + tag(p, n));
    }
  }
}

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<void(Checker&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"explicit sum equals recurrence", 5, oracle_equivalence},
      {"d <= 0 collapses to S(m,n)", 1, nonpositive_d},
      {"roots of P at 0 and n", 1, roots_of_p},
      {"polynomial identities", 2, polynomial_identities},
      {"recentred positivity", 2, recentred_positivity},
      {"real root classification", 1, root_classification},
      {"v numbers and reconstruction", 2, v_reconstruction},
      {"valuation bounds and primality scan", 10, valuations_and_primality},
      {"parity suite", 10, parity_suite},
      {"Wilson suite", 30, wilson_suite},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& crit = criteria[i];
    Checker checker;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.body(checker);
    } catch (const std::exception& e) {
      checker.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = elapsed < crit.budget_seconds;
    const bool ok = checker.passed() && in_time;
    if (!ok) ++failures;
    std::printf("%s  %2zu  %-38s %8.3fs / %.0fs", ok ? "PASS" : "FAIL", i + 1, crit.name, elapsed, crit.budget_seconds);
    if (!checker.passed()) std::printf("  [%s]", checker.first_failure.c_str());
    if (!in_time) std::printf("  [over budget]");
    std::printf("\n");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
