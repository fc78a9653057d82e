#include "selftest.hpp"

#include "wsv/jack.hpp"
#include "wsv/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

using namespace wsv;
using json = nlohmann::ordered_json;

namespace {

enum class Format { text, json, latex };

struct JobConfig {
  std::string command;
  int n = 3;
  std::string r;
  std::string s;
  std::string t = "symbolic";
  std::string sign = "+";
  std::string spec_text;
  std::string partition;
  std::string inner;
  int u = 0;
  int v = 0;
  int count = 5;
  int cache_degree = 6;
  bool oracle = false;
  bool verify = false;
  Format format = Format::text;
  std::string cache;
  unsigned threads = 1;
  unsigned precision = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<mpq_class> parse_t(const std::string& text) {
  if (text == "symbolic") return std::nullopt;
  mpq_class q;
  if (q.set_str(text, 10) != 0 || sgn(q.get_den()) == 0) throw UsageError("malformed parameter t = '" + text + "'");
  q.canonicalize();
  require_admissible_parameter(q);
  return q;
}

ScreeningSpec spec_from(const JobConfig& c) {
  if (!c.spec_text.empty()) return ScreeningSpec::parse(c.spec_text);
  if (c.r.empty() || c.s.empty()) throw UsageError("--r and --s are required (or --spec)");
  return ScreeningSpec::parse("N=" + std::to_string(c.n) + " r=" + c.r + " s=" + c.s + " t=" + c.t + " sign=" + c.sign);
}

std::string bits_to_digits(const BigReal& x, unsigned bits) {
  const auto digits = static_cast<std::streamsize>(bits * 30103UL / 100000UL + 1);
  return x.str(digits, std::ios_base::scientific);
}

json scalar_json(const Scalar& x, const JobConfig& c) {
  json j{{"value", x.to_string()}};
  if (c.precision > 0 && x.point()) {
    const SpecializedValue sv = x.specialize(*x.point(), 1, c.precision);
    j["numeric"] = sv.exact ? sv.exact->get_str() : bits_to_digits(sv.value, c.precision);
  }
  return j;
}

std::string partitions_text(const Monomial& m) {
  std::string s;
  for (std::size_t k = 0; k < m.size(); ++k) s += (k ? " " : "") + m[k].to_string();
  return s;
}

json weight_json(const Weight& w) {
  json labels = json::array();
  for (const auto& l : w.labels()) labels.push_back(l.to_string());
  return labels;
}

json fock_json(const FockVector& v, const JobConfig& c) {
  json terms = json::array();
  for (const auto& [m, x] : v.terms()) {
    json term{{"monomial", partitions_text(m)}, {"grade", grade(m)}};
    term.update(scalar_json(x, c));
    terms.push_back(std::move(term));
  }
  return {{"weight", weight_json(v.weight())}, {"vector", v.to_string()}, {"terms", std::move(terms)}};
}

std::string symfunc_latex(const SymFunc& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [lambda, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += "\\left(" + c.to_latex() + "\\right) p_{" + lambda.to_string() + "}";
  }
  return out;
}

json symfunc_json(const SymFunc& f, const JobConfig& c) {
  json terms = json::array();
  for (const auto& [lambda, x] : f.terms()) {
    json term{{"p", lambda.to_string()}};
    term.update(scalar_json(x, c));
    terms.push_back(std::move(term));
  }
  return {{"function", f.to_string()}, {"terms", std::move(terms)}};
}

int emit_symfunc(const SymFunc& f, const json& header, const JobConfig& c) {
  switch (c.format) {
    case Format::text:
      std::cout << f.to_string() << "\n";
      break;
    case Format::latex:
      std::cout << symfunc_latex(f) << "\n";
      break;
    case Format::json: {
      json j = header;
      j.update(symfunc_json(f, c));
      std::cout << j.dump(2) << "\n";
      break;
    }
  }
  return 0;
}

SymFunc maybe_pinned(const SymFunc& f, const std::optional<mpq_class>& t) { return t ? f.pinned(*t) : f; }

int run_jack(const JobConfig& c) {
  const Partition lambda = Partition::parse(c.partition);
  const auto t = parse_t(c.t);
  return emit_symfunc(maybe_pinned(jack(lambda), t), {{"partition", lambda.to_string()}, {"t", c.t}}, c);
}

int run_skew(const JobConfig& c) {
  const Partition lambda = Partition::parse(c.partition);
  const Partition mu = Partition::parse(c.inner);
  const auto t = parse_t(c.t);
  return emit_symfunc(maybe_pinned(skew_jack(lambda, mu), t),
                      {{"partition", lambda.to_string()}, {"inner", mu.to_string()}, {"t", c.t}}, c);
}

json spec_json(const ScreeningSpec& spec) {
  return {{"spec", spec.to_string()},
          {"grade", spec.grade()},
          {"source", weight_json(spec.source())},
          {"target", weight_json(spec.target())}};
}

int run_singular(const JobConfig& c) {
  const ScreeningSpec spec = spec_from(c);
  const FockVector v = singular_vector(spec, {c.threads});
  switch (c.format) {
    case Format::text:
      std::cout << v.to_string() << "\n";
      break;
    case Format::latex:
      std::cout << v.to_latex() << "\n";
      break;
    case Format::json: {
      json j = spec_json(spec);
      j.update(fock_json(v, c));
      std::cout << j.dump(2) << "\n";
      break;
    }
  }
  return 0;
}

void print_report(const VerificationReport& report, const JobConfig& c) {
  if (c.format == Format::json) {
    std::cout << report.to_json() << "\n";
    return;
  }
  std::cout << report.spec.to_string() << "  grade " << report.grade << "\n";
  if (report.error) std::cout << "error: " << *report.error << "\n";
  for (const auto& check : report.checks) {
    std::cout << "  " << (check.passed ? "ok   " : "FAIL ") << check.label;
    if (!check.passed) std::cout << "  residual " << check.residual.to_string();
    std::cout << "\n";
  }
  if (report.oracle_dimension) {
    std::cout << "  kernel dimension " << *report.oracle_dimension << ", contains vector: "
              << (*report.oracle_match ? "yes" : "no") << "\n";
  }
  std::cout << (report.passed() ? "verified" : "NOT verified") << "\n";
}

int run_verify(const JobConfig& c) {
  const ScreeningSpec spec = spec_from(c);
  const VerificationReport report = check_singular(singular_vector(spec, {c.threads}), spec, {c.oracle});
  print_report(report, c);
  return report.passed() ? 0 : 1;
}

int run_oracle(const JobConfig& c) {
  const ScreeningSpec spec = spec_from(c);
  const FockVector v = singular_vector(spec, {c.threads});
  const auto kernel = brute_force_kernel(spec.target(), spec.grade(), default_generators(spec.n));
  const auto cert = span_certificate(kernel, v);
  switch (c.format) {
    case Format::text:
      std::cout << spec.to_string() << "  grade " << spec.grade() << "\n";
      std::cout << "kernel dimension " << kernel.size() << "\n";
      for (std::size_t i = 0; i < kernel.size(); ++i) {
        std::cout << "basis vector " << i + 1 << ":\n";
        std::istringstream lines(kernel[i].to_string());
        for (std::string line; std::getline(lines, line);) std::cout << "  " << line << "\n";
      }
      std::cout << "contains singular vector: " << (cert ? "yes" : "no") << "\n";
      if (cert) {
        for (const auto& x : *cert) std::cout << "  coefficient " << x.to_string() << "\n";
      }
      break;
    case Format::latex:
      for (const auto& k : kernel) std::cout << k.to_latex() << "\n";
      break;
    case Format::json: {
      json j = spec_json(spec);
      j["kernel_dimension"] = kernel.size();
      j["kernel"] = json::array();
      for (const auto& k : kernel) j["kernel"].push_back(k.to_string());
      j["contains"] = cert.has_value();
      j["certificate"] = json::array();
      if (cert) {
        for (const auto& x : *cert) j["certificate"].push_back(x.to_string());
      }
      std::cout << j.dump(2) << "\n";
      break;
    }
  }
  return cert ? 0 : 1;
}

int run_example3(const JobConfig& c) {
  if (c.u <= 0 || c.v <= 0) throw UsageError("--u and --v are required positive integers");
  const auto specs = example3_enumerate(c.u, c.v, c.count);
  bool all = true;
  json arr = json::array();
  for (const auto& e : specs) {
    std::optional<bool> ok;
    if (c.verify) {
      ok = check_singular(singular_vector(e.spec, {c.threads}), e.spec).passed();
      all = all && *ok;
    }
    if (c.format == Format::json) {
      json j{{"m", e.m}, {"n", e.n}, {"spec", e.spec.to_string()}, {"grade", e.spec.grade()}};
      if (ok) j["verified"] = *ok;
      arr.push_back(std::move(j));
    } else {
      std::cout << "m=" << e.m << " n=" << e.n << "  " << e.spec.to_string() << "  grade " << e.spec.grade();
      if (ok) std::cout << (*ok ? "  verified" : "  NOT verified");
      std::cout << "\n";
    }
  }
  if (c.format == Format::json) std::cout << arr.dump(2) << "\n";
  return all ? 0 : 1;
}

int run_selftest_command(const JobConfig& c) {
  const auto rows = cli::run_selftest(c.threads);
  bool all = true;
  json arr = json::array();
  for (const auto& row : rows) {
    all = all && row.passed;
    if (c.format == Format::json) {
      arr.push_back({{"check", row.name}, {"passed", row.passed}});
    } else {
      std::cout << (row.passed ? "PASS  " : "FAIL  ") << row.name << "\n";
    }
  }
  if (c.format == Format::json) {
    std::cout << arr.dump(2) << "\n";
  } else {
    std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return all ? 0 : 1;
}

int run_cache(const JobConfig& c) {
  if (c.cache.empty()) throw UsageError("cache needs --cache PATH or WSV_JACK_CACHE");
  write_jack_cache(c.cache, c.cache_degree);
  std::cout << "wrote Jack functions up to degree " << c.cache_degree << " to " << c.cache << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  JobConfig c;
  if (const char* env = std::getenv("WSV_JACK_CACHE")) c.cache = env;

  CLI::App app{"Singular vectors of W_N Fock modules from screening operators and Jack functions"};
  app.require_subcommand(1);
  app.fallthrough();
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"latex", Format::latex}};
  app.add_option("--format", c.format, "text, json or latex")->transform(CLI::CheckedTransformer(formats))->
      capture_default_str();
  app.add_option("--cache", c.cache, "Jack cache file (default: $WSV_JACK_CACHE)");
  app.add_option("--threads", c.threads, "parallel summand evaluation")->check(CLI::Range(1U, 256U));
  app.add_option("--precision", c.precision, "bits for numeric values of specialised coefficients (json)");

  auto spec_options = [&](CLI::App* sub) {
    sub->add_option("--n", c.n, "rank N")->capture_default_str();
    sub->add_option("--r", c.r, "comma separated r_1..r_{N-1}");
    sub->add_option("--s", c.s, "comma separated s_1..s_{N-1}");
    sub->add_option("--t", c.t, "p/q or symbolic")->capture_default_str();
    sub->add_option("--sign", c.sign, "+ or -")->check(CLI::IsMember({"+", "-"}))->capture_default_str();
    sub->add_option("--spec", c.spec_text, "full spec, e.g. 'N=3 r=1,1 s=-1,-1 t=4/5 sign=+'");
  };

  auto* jack_cmd = app.add_subcommand("jack", "J_lambda in power sums");
  jack_cmd->add_option("--partition", c.partition, "e.g. 2,1")->required();
  jack_cmd->add_option("--t", c.t, "p/q or symbolic")->capture_default_str();

  auto* skew_cmd = app.add_subcommand("skew", "J_{lambda/mu} in power sums");
  skew_cmd->add_option("--partition", c.partition, "outer partition lambda")->required();
  skew_cmd->add_option("--inner", c.inner, "inner partition mu")->required();
  skew_cmd->add_option("--t", c.t, "p/q or symbolic")->capture_default_str();

  auto* singular_cmd = app.add_subcommand("singular", "singular vector from the screening formula");
  spec_options(singular_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "compute and certify a singular vector");
  spec_options(verify_cmd);
  verify_cmd->add_flag("--oracle", c.oracle, "also run the brute-force kernel oracle");

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force kernel and span certificate");
  spec_options(oracle_cmd);

  auto* ex3_cmd = app.add_subcommand("example3", "singular vectors over theta = 0 at t = u/v");
  ex3_cmd->add_option("--u", c.u)->required();
  ex3_cmd->add_option("--v", c.v)->required();
  ex3_cmd->add_option("--count", c.count)->capture_default_str();
  ex3_cmd->add_flag("--verify", c.verify, "verify each vector");

  app.add_subcommand("selftest", "golden examples and bounded property checks");

  auto* cache_cmd = app.add_subcommand("cache", "write the Jack cache file");
  cache_cmd->add_option("--degree", c.cache_degree, "largest |lambda|")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  c.command = app.get_subcommands().front()->get_name();
  if (c.command != "cache" && !c.cache.empty()) set_jack_cache_file(c.cache);

  try {
    if (c.command == "jack") return run_jack(c);
    if (c.command == "skew") return run_skew(c);
    if (c.command == "singular") return run_singular(c);
    if (c.command == "verify") return run_verify(c);
    if (c.command == "oracle") return run_oracle(c);
    if (c.command == "example3") return run_example3(c);
    if (c.command == "selftest") return run_selftest_command(c);
    if (c.command == "cache") return run_cache(c);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ScalarError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
