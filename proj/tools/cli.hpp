#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "radpi/error.hpp"

namespace radpi::cli {

enum class Format { text, json, csv };

/// Process exit code for a failure category.
int exit_code(ErrorKind kind);

/// Runs one command line (args excludes the program name) and returns the
/// exit code. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct GenerateOptions {
  int k = 0;
  int M = 0;
  Format format = Format::text;
};
void run_generate(const GenerateOptions& opt, std::ostream& out);

/// Prints the report; returns whether the formula is valid.
bool run_validate(const std::string& path, Format format, std::ostream& out);

struct PiOptions {
  std::string method = "series";
  int digits = 1000;
  int k = 0;  ///< 0 = method default
  int iterations = 8;
  std::string engine = "ase";
  std::string seed = "1.572963";
  int schedule_factor = 5;
  Format format = Format::text;
};
void run_pi(const PiOptions& opt, std::ostream& out);

struct RadicalOptions {
  int k = 0;
  int n = 3;
  int digits = 0;  ///< 0 = sized from gamma_k
  bool sqrt2 = false;
  Format format = Format::text;
};
void run_radical(const RadicalOptions& opt, std::ostream& out);

struct BenchOptions {
  std::vector<std::string> series{"mse", "ese", "ase"};
  std::string x = "1/5";
  int digits = 1000;
  Format format = Format::csv;
};
void run_bench(const BenchOptions& opt, std::ostream& out);

}  // namespace radpi::cli
