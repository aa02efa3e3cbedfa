#include "stirling/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "stirling/congruences.hpp"
#include "stirling/numeric.hpp"
#include "stirling/parity.hpp"
#include "stirling/stirling_numbers.hpp"
#include "stirling/stirling_poly.hpp"

namespace stirling::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kMaxGasket = std::size_t{1} << 14;

std::string join(const std::vector<Integer>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += values[i].to_string();
  }
  return out;
}

std::string render_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "none";
  if (value.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (i) out += ',';
      out += render_text(value[i]);
    }
    return out;
  }
  return value.dump();
}

// A lone field prints as its bare value; several print as key=value lines.
void emit(std::ostream& out, const Json& doc, bool as_json) {
  if (as_json) {
    out << doc.dump() << '\n';
    return;
  }
  if (doc.size() == 1) {
    out << render_text(doc.begin().value()) << '\n';
    return;
  }
  for (const auto& [key, value] : doc.items()) out << key << '=' << render_text(value) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Stirling numbers, Stirling functions, parity and Wilson-type congruences", "stirling"};
  app.require_subcommand(1, 1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Wrap output in a JSON object");

  std::int64_t a = 0, b = 0, c = 0;
  std::string z_text, out_path, method;
  std::int64_t nmax = 1;
  std::optional<std::int64_t> row_index, col_index;
  std::size_t gasket_n = 0;

  std::function<Json()> action;

  auto add_pair = [&](const std::string& name, const std::string& help, const char* first, const char* second) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option(first, a)->required();
    sub->add_option(second, b)->required();
    return sub;
  };

  add_pair("stirling", "Stirling number of the second kind S(m,n)", "m", "n")->callback([&] {
    action = [&] { return Json{{"value", stirling2(a, b).to_string()}}; };
  });
  add_pair("stirling1", "Signed Stirling number of the first kind s(n,k)", "n", "k")->callback([&] {
    action = [&] { return Json{{"value", stirling1_signed(a, b).to_string()}}; };
  });
  add_pair("poly", "Coefficients of P_(m,n)(z) and S(m,n,z), ascending", "m", "n")->callback([&] {
    action = [&] {
      return Json{{"p", p_polynomial(a, b).to_string()}, {"s", stirling_function_poly(a, b).to_string()}};
    };
  });
  {
    CLI::App* sub = app.add_subcommand("eval", "Exact value of S(m,n,z) at rational z");
    sub->add_option("m", a)->required();
    sub->add_option("n", b)->required();
    sub->add_option("z", z_text, "integer or a/b")->required();
    sub->callback([&] {
      action = [&] {
        const Rational z = Rational::parse(z_text);
        const Rational value = stirling_function_poly(a, b).evaluate(z);
        if (value != eval_definition(a, b, z)) throw InvariantViolation("polynomial and definition disagree");
        return Json{{"value", value.to_string()}};
      };
    });
  }
  add_pair("roots", "Real roots of P_(m,n) with simplicity certificate", "m", "n")->callback([&] {
    action = [&] {
      const RootClassification r = real_roots(a, b);
      return Json{{"kind", std::string(to_string(r.kind))},
                  {"roots", join(r.roots)},
                  {"simple_certified", r.simple_certified}};
    };
  });
  add_pair("v", "Minimum of |S(m,n,z)| over real z", "m", "n")->callback([&] {
    action = [&] { return Json{{"value", v_number(a, b).to_string()}}; };
  });
  {
    CLI::App* sub = add_pair("parity", "Parity of S(m,n)", "m", "n");
    sub->add_option("--method", method, "kummer (even d only) or table")
        ->check(CLI::IsMember({"kummer", "table"}));
    sub->callback([&] {
      action = [&] {
        const std::int64_t d = a - b;
        const bool even_d = d >= 0 && d % 2 == 0 && b >= 1;
        std::string tag = method.empty() ? (even_d ? "kummer" : "table") : method;
        int parity = 0;
        if (tag == "kummer") {
          parity = parity_even_d(a, b);
        } else {
          parity = stirling2(a, b).is_odd() ? 1 : 0;
        }
        return Json{{"parity", parity}, {"method", tag}};
      };
    });
  }
  {
    CLI::App* sub = app.add_subcommand("period", "Minimal period of a tapestry row or column");
    auto* row = sub->add_option("--row", row_index, "row index i");
    auto* col = sub->add_option("--col", col_index, "column index j");
    row->excludes(col);
    sub->require_option(1);
    sub->callback([&] {
      action = [&] {
        const std::int64_t index = row_index ? *row_index : *col_index;
        if (index < 0) throw std::invalid_argument("index must be non-negative");
        const auto u = static_cast<std::uint64_t>(index);
        return Json{{"value", row_index ? row_period(u) : column_period(u)}};
      };
    });
  }
  {
    CLI::App* sub = app.add_subcommand("gasket", "Write the parity tapestry P_N as a plain PBM image");
    sub->add_option("N", gasket_n)->required();
    sub->add_option("--out", out_path, "output file (stdout when omitted)");
    sub->callback([&] {
      action = [&]() -> Json {
        if (gasket_n > kMaxGasket) throw std::invalid_argument("N must not exceed " + std::to_string(kMaxGasket));
        const ParityMatrix matrix = build_tapestry_kummer(gasket_n);
        if (out_path.empty()) {
          write_pbm(out, matrix);
          return Json::object();
        }
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open " + out_path);
        write_pbm(file, matrix);
        return Json{{"path", out_path}, {"width", matrix.size()}, {"height", matrix.size()}};
      };
    });
  }
  {
    CLI::App* sub = app.add_subcommand("valuation", "Lower bound and actual p-adic valuation of S(m,n), d odd");
    sub->add_option("p", c)->required();
    sub->add_option("m", a)->required();
    sub->add_option("n", b)->required();
    sub->callback([&] {
      action = [&] {
        const ValuationBound v = valuation_bound(c, a, b);
        return Json{{"p", v.p}, {"bound", v.bound}, {"actual", v.actual}};
      };
    });
  }
  {
    CLI::App* sub = app.add_subcommand("wilson", "Generalized Wilson test B(n(p-1),p-1) == -1 mod p");
    sub->add_option("p", c)->required();
    sub->add_option("--nmax", nmax, "check n = 1..K")->capture_default_str();
    sub->callback([&] {
      action = [&] {
        const WilsonReport r = is_prime_wilson(c, nmax);
        Json first = r.first_failure ? Json(*r.first_failure) : Json(nullptr);
        return Json{{"p", r.p}, {"checked_n", r.checked_n}, {"all_passed", r.all_passed}, {"first_failure", first}};
      };
    });
  }
  {
    CLI::App* sub = app.add_subcommand("residue", "S(n(p-1),p-k) mod p against (k-1)! mod p");
    sub->add_option("p", c)->required();
    sub->add_option("n", a)->required();
    sub->add_option("k", b)->required();
    sub->callback([&] {
      action = [&] {
        const FactorialResidue r = wilson_factorial_residue(c, a, b);
        return Json{{"residue", r.residue}, {"expected", r.expected}};
      };
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    const Json doc = action();
    if (!doc.empty()) emit(out, doc, as_json);
    return kOk;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return kInvariantViolation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace stirling::cli
