#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "radpi/approx.hpp"
#include "radpi/formula_io.hpp"
#include "radpi/machin.hpp"
#include "radpi/series.hpp"

namespace radpi::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

const std::map<std::string, Format> kFormats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::usage, message);
}

// Integer part and point on the first line, then 50 digits per line.
void write_digits(std::ostream& out, const FixedReal& value) {
  const std::string s = value.to_string();
  const auto dot = s.find('.');
  if (dot == std::string::npos) {
    out << s << '\n';
    return;
  }
  out << s.substr(0, dot + 1) << '\n';
  for (std::size_t i = dot + 1; i < s.size(); i += 50) out << s.substr(i, 50) << '\n';
}

// Value cut back to its correct digits.
FixedReal correct_part(const FixedReal& value, int digits) {
  return value.rescaled(std::min(value.scale(), std::max(digits, 0)));
}

std::int64_t ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
}

void emit_report(std::ostream& out, Format format, const std::string& method, const FixedReal& value, int digits,
                 const ConvergenceReport& report) {
  switch (format) {
    case Format::text:
      if (method == "cubic") {
        out << "iteration digits\n";
        for (const auto& r : report.rows) out << r.iteration << ' ' << r.digits << '\n';
      }
      write_digits(out, correct_part(value, digits));
      out << digits << " digits correct\n";
      break;
    case Format::csv:
      out << report.to_csv();
      break;
    case Format::json: {
      ordered_json doc;
      doc["method"] = method;
      doc["digits"] = digits;
      doc["value"] = correct_part(value, digits).to_string();
      ordered_json rows = ordered_json::array();
      for (const auto& r : report.rows) {
        rows.push_back({{"iteration", r.iteration}, {"digits", r.digits}, {"work", r.work}, {"wall_ms", r.wall_ms}});
      }
      doc["report"] = std::move(rows);
      out << doc.dump(2) << '\n';
      break;
    }
  }
}

void apply_guard_digits_env() {
  const char* env = std::getenv("GUARD_DIGITS");
  if (env == nullptr || *env == '\0') return;
  char* end = nullptr;
  const long g = std::strtol(env, &end, 10);
  if (*end != '\0' || g < 0 || g > 1000) throw Error(ErrorKind::usage, "GUARD_DIGITS must be an integer in 0..1000");
  set_guard_digits(static_cast<int>(g));
}

}  // namespace

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::usage:
    case ErrorKind::malformed: return 2;
    case ErrorKind::validation: return 3;
    case ErrorKind::domain:
    case ErrorKind::division_by_zero:
    case ErrorKind::precision_exhausted:
    case ErrorKind::divergence: return 4;
    case ErrorKind::inconsistency: return 5;
  }
  return 1;
}

void run_generate(const GenerateOptions& opt, std::ostream& out) {
  require(opt.k >= 2, "k must be at least 2");
  require(opt.M >= 0, "M must be non-negative");
  require(opt.format != Format::csv, "generate supports text and json output");
  const MachinFormula f = opt.M == 0 ? two_term_formula(opt.k) : expand_template(opt.k, opt.M);
  if (opt.format == Format::json) {
    out << formula_to_json(f);
  } else {
    out << render_text(f) << '\n';
  }
}

bool run_validate(const std::string& path, Format format, std::ostream& out) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), "cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  const MachinFormula f = formula_from_json(text.str());
  const ValidationReport r = validate(f);
  const auto mu = document_lehmer(f);
  switch (format) {
    case Format::text:
      out << (r.valid ? "true" : "false") << '\n';
      out << "re: " << r.product_re.to_string() << '\n';
      out << "im: " << r.product_im.to_string() << '\n';
      out << "lehmer: " << (mu ? mu->to_string() : "null") << '\n';
      if (!r.valid) out << "failure: " << r.failure << '\n';
      break;
    case Format::json: {
      ordered_json doc;
      doc["valid"] = r.valid;
      doc["relation_holds"] = r.relation_holds;
      doc["numeric_ok"] = r.numeric_ok;
      doc["product_re"] = r.product_re.to_string();
      doc["product_im"] = r.product_im.to_string();
      doc["lehmer"] = mu ? ordered_json(mu->to_string()) : ordered_json(nullptr);
      doc["failure"] = r.valid ? ordered_json(nullptr) : ordered_json(r.failure);
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "valid,product_re,product_im,lehmer\n";
      out << (r.valid ? "true" : "false") << ',' << r.product_re.to_string() << ',' << r.product_im.to_string() << ','
          << (mu ? mu->to_string() : "") << '\n';
      break;
  }
  return r.valid;
}

void run_pi(const PiOptions& opt, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  ConvergenceReport report;
  FixedReal value;
  int digits = 0;
  long work = opt.digits;
  if (opt.method == "series") {
    require(opt.digits >= 1, "digits must be positive");
    const auto engine = parse_engine(opt.engine);
    require(engine.has_value(), "unknown engine " + opt.engine);
    const MachinFormula f = opt.k == 0 ? machin_formula() : two_term_formula(opt.k);
    value = eval_pi(f, opt.digits, *engine);
    digits = pi_agree_digits(value, opt.digits);
  } else if (opt.method == "two-term") {
    const PiApprox r = pi_two_term(opt.k == 0 ? 50 : opt.k, opt.digits);
    value = r.value;
    digits = r.digits;
  } else if (opt.method == "rational-single" || opt.method == "rational-double") {
    const int k = opt.k == 0 ? 3000 : opt.k;
    const PiApprox r = opt.method == "rational-single" ? pi_rational_single(k) : pi_rational_double(k);
    value = r.value;
    digits = r.digits;
    work = value.scale();
  } else if (opt.method == "cubic") {
    report = pi_cubic(opt.iterations, FixedReal::parse(opt.seed), opt.schedule_factor);
    value = report.value;
    digits = report.rows.back().digits;
  } else {
    throw Error(ErrorKind::usage, "unknown method " + opt.method);
  }
  if (report.rows.empty()) report.rows.push_back({1, digits, work, ms_since(start)});
  emit_report(out, opt.format, opt.method, value, digits, report);
}

void run_radical(const RadicalOptions& opt, std::ostream& out) {
  const int n = opt.sqrt2 ? 1 : opt.n;
  require(n >= 1 && opt.k > n, "need k > n >= 1");
  require(!opt.sqrt2 || opt.n == 1 || opt.n == 3, "--sqrt2 uses n = 1");
  const RadicalApprox r = opt.sqrt2 ? sqrt2_via_v(opt.k, opt.digits) : nested_radical_via_v(opt.k, n, opt.digits);
  const char* what = opt.sqrt2 ? "square root of 2" : "nested radical";
  switch (opt.format) {
    case Format::text:
      write_digits(out, correct_part(r.value, r.digits));
      out << r.digits << " computed digits of " << what << '\n';
      break;
    case Format::json: {
      ordered_json doc;
      doc["kind"] = opt.sqrt2 ? "sqrt2" : "nested_radical";
      doc["k"] = opt.k;
      doc["n"] = n;
      doc["digits"] = r.digits;
      doc["value"] = r.value.to_string();
      doc["reference"] = r.reference.to_string();
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "kind,k,n,digits\n" << (opt.sqrt2 ? "sqrt2" : "nested_radical") << ',' << opt.k << ',' << n << ','
          << r.digits << '\n';
      break;
  }
}

void run_bench(const BenchOptions& opt, std::ostream& out) {
  require(opt.digits >= 1, "digits must be positive");
  const BigRational x = BigRational::parse(opt.x);
  if (x.is_zero()) throw Error(ErrorKind::domain, "bench: x must be nonzero");
  if (x.abs() > BigRational(1)) throw Error(ErrorKind::domain, "bench: |x| must be at most 1");
  std::vector<EngineKind> engines;
  for (const auto& name : opt.series) {
    const auto kind = parse_engine(name);
    require(kind.has_value(), "unknown engine " + name);
    if (std::find(engines.begin(), engines.end(), *kind) == engines.end()) engines.push_back(*kind);
  }
  require(!engines.empty(), "no engines selected");
  std::sort(engines.begin(), engines.end(),
            [](EngineKind a, EngineKind b) { return engine_name(a) < engine_name(b); });

  const FixedReal reference = arctan_euler(x, opt.digits + 20).value;
  struct Row {
    std::string engine;
    std::size_t terms;
    std::int64_t ms;
    int digits;
  };
  std::vector<Row> rows;
  for (EngineKind kind : engines) {
    const auto start = std::chrono::steady_clock::now();
    const ArctanResult r = arctan_with(kind, x, opt.digits);
    const std::int64_t ms = ms_since(start);
    rows.push_back({std::string(engine_name(kind)), r.terms_used, ms, fx_agree_digits(r.value, reference)});
  }
  if (opt.format == Format::json) {
    ordered_json doc = ordered_json::array();
    for (const auto& r : rows) {
      doc.push_back({{"engine", r.engine}, {"terms_used", r.terms}, {"wall_ms", r.ms}, {"digits_achieved", r.digits}});
    }
    out << doc.dump(2) << '\n';
  } else {
    out << "engine,terms_used,wall_ms,digits_achieved\n";
    for (const auto& r : rows) out << r.engine << ',' << r.terms << ',' << r.ms << ',' << r.digits << '\n';
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Machin-like formulas and nested radicals of 2"};
  app.name("radpi");
  app.require_subcommand(1);
  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  };

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "two-term formula, optionally expanded M times");
  generate->add_option("--k", gen.k, "index k >= 2")->required();
  generate->add_option("--m", gen.M, "expansion steps");
  add_format(generate);

  auto* expand = app.add_subcommand("expand", "template expansion to integer arguments");
  expand->add_option("--k", gen.k, "index k >= 2")->required();
  expand->add_option("--m", gen.M, "expansion steps")->required();
  add_format(expand);

  std::string path;
  auto* validate_cmd = app.add_subcommand("validate", "check a Formula JSON document");
  validate_cmd->add_option("path", path, "formula file")->required();
  add_format(validate_cmd);

  PiOptions pi;
  auto* pi_cmd = app.add_subcommand("pi", "digits of pi");
  pi_cmd->add_option("--method", pi.method)
      ->check(CLI::IsMember({"series", "two-term", "cubic", "rational-single", "rational-double"}));
  pi_cmd->add_option("--digits", pi.digits);
  pi_cmd->add_option("--k", pi.k);
  pi_cmd->add_option("--iterations", pi.iterations);
  pi_cmd->add_option("--engine", pi.engine)->check(CLI::IsMember({"mse", "ese", "ase"}));
  pi_cmd->add_option("--seed", pi.seed);
  pi_cmd->add_option("--schedule-factor", pi.schedule_factor);
  add_format(pi_cmd);

  RadicalOptions rad;
  auto* radical = app.add_subcommand("radical", "nested radicals from the v-iteration");
  radical->add_option("--k", rad.k)->required();
  auto* n_opt = radical->add_option("--n", rad.n);
  radical->add_option("--digits", rad.digits);
  radical->add_flag("--sqrt2", rad.sqrt2);
  add_format(radical);

  BenchOptions bench;
  std::string series = "mse,ese,ase";
  auto* bench_cmd = app.add_subcommand("bench", "compare the arctangent series");
  bench_cmd->add_option("--series", series);
  bench_cmd->add_option("--x", bench.x);
  bench_cmd->add_option("--digits", bench.digits);
  add_format(bench_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "radpi: " << e.what() << '\n';
    return 2;
  }

  try {
    apply_guard_digits_env();
    const Format fmt = kFormats.at(format);
    if (*generate || *expand) {
      gen.format = fmt;
      run_generate(gen, out);
    } else if (*validate_cmd) {
      return run_validate(path, fmt, out) ? 0 : 3;
    } else if (*pi_cmd) {
      pi.format = fmt;
      run_pi(pi, out);
    } else if (*radical) {
      rad.format = fmt;
      if (rad.sqrt2 && n_opt->count() == 0) rad.n = 1;
      run_radical(rad, out);
    } else if (*bench_cmd) {
      bench.format = format == "json" ? Format::json : Format::csv;
      bench.series.clear();
      std::stringstream list(series);
      for (std::string item; std::getline(list, item, ',');) {
        if (!item.empty()) bench.series.push_back(item);
      }
      run_bench(bench, out);
    }
  } catch (const Error& e) {
    err << "radpi: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "radpi: internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace radpi::cli
