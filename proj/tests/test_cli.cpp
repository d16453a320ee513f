#include "support.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include "cli.hpp"
#include "radpi/formula_io.hpp"

using namespace radpi;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = "radpi_cli_test_" + name;
  std::ofstream(path) << content;
  return path;
}

std::string machin_json(const char* second) {
  return std::string(R"({"target":"pi/4","k":3,"M":0,"terms":[{"coeff":"4","arg_num":"1","arg_den":"5"},)") +
         R"({"coeff":"-1","arg_num":"1","arg_den":")" + second + R"("}],"validated":false,"lehmer":null})";
}

std::string strip_wall_ms(const std::string& s) {
  return std::regex_replace(s, std::regex(R"("wall_ms": [0-9]+)"), "\"wall_ms\": _");
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("exit codes") {
    CHECK(cli::exit_code(ErrorKind::usage) == 2);
    CHECK(cli::exit_code(ErrorKind::malformed) == 2);
    CHECK(cli::exit_code(ErrorKind::validation) == 3);
    CHECK(cli::exit_code(ErrorKind::domain) == 4);
    CHECK(cli::exit_code(ErrorKind::precision_exhausted) == 4);
    CHECK(cli::exit_code(ErrorKind::divergence) == 4);
    CHECK(cli::exit_code(ErrorKind::inconsistency) == 5);
  }

  TEST_CASE("generate") {
    const Outcome hermann = run({"generate", "--k", "2", "--m", "0"});
    CHECK(hermann.code == 0);
    CHECK(hermann.out == "π/4 = 2·atan(1/2) − atan(1/7)\n");

    const Outcome json = run({"generate", "--k", "4", "--m", "5", "--format", "json"});
    CHECK(json.code == 0);
    const MachinFormula f = formula_from_json(json.out);
    CHECK(f.terms.size() == 7);
    CHECK(f.terms[5].arg.den() == BigInt("197967899896401851763240424238758988350338"));
    CHECK(f.validated);

    CHECK(run({"generate", "--k", "1"}).code == 2);
    CHECK(run({"generate"}).code == 2);
    CHECK(run({"generate", "--k", "4", "--format", "csv"}).code == 2);
    CHECK(run({"generate", "--k", "4", "--format", "yaml"}).code == 2);
    CHECK(run({"expand", "--k", "4"}).code == 2);
    CHECK(run({"expand", "--k", "4", "--m", "1"}).out.find("atan(1/84)") != std::string::npos);
  }

  TEST_CASE("emitted documents round-trip through validate") {
    for (const char* m : {"0", "2", "5"}) {
      const Outcome gen = run({"generate", "--k", "4", "--m", m, "--format", "json"});
      REQUIRE(gen.code == 0);
      const std::string path = temp_file(std::string("roundtrip") + m + ".json", gen.out);
      const Outcome v = run({"validate", path});
      CHECK(v.code == 0);
      CHECK(v.out.rfind("true\n", 0) == 0);
      std::remove(path.c_str());
    }
  }

  TEST_CASE("validate") {
    const std::string good = temp_file("machin.json", machin_json("239"));
    const Outcome ok = run({"validate", good});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("true\nre: 2\nim: 2\nlehmer: 1.85112") == 0);

    const Outcome ok_json = run({"validate", good, "--format", "json"});
    CHECK(ok_json.out.find("\"product_re\": \"2\"") != std::string::npos);

    const std::string bad = temp_file("m259.json", machin_json("259"));
    const Outcome misprint = run({"validate", bad});
    CHECK(misprint.code == 3);
    CHECK(misprint.out.rfind("false\n", 0) == 0);

    const std::string empty = temp_file("empty.json", R"({"target":"pi/4","k":0,"M":0,"terms":[]})");
    const Outcome none = run({"validate", empty});
    CHECK(none.code == 2);
    CHECK(none.err.find("no terms") != std::string::npos);

    const std::string broken = temp_file("broken.json", "{\n  \"terms\": [\n    {\"coeff\": }\n  ]\n}");
    const Outcome syntax = run({"validate", broken});
    CHECK(syntax.code == 2);
    CHECK(syntax.err.find("line 3, column") != std::string::npos);

    CHECK(run({"validate", "radpi_cli_test_missing.json"}).code == 2);
    for (const auto& p : {good, bad, empty, broken}) std::remove(p.c_str());
  }

  TEST_CASE("pi digits") {
    const Outcome series = run({"pi", "--method", "series", "--digits", "120"});
    CHECK(series.code == 0);
    CHECK(series.out.rfind("3.\n14159265358979323846264338327950288419716939937510\n", 0) == 0);
    CHECK(series.out.find("digits correct\n") != std::string::npos);

    const Outcome mse = run({"pi", "--method", "series", "--engine", "mse", "--k", "4", "--digits", "60"});
    CHECK(mse.code == 0);

    const Outcome two = run({"pi", "--method", "two-term", "--k", "10", "--digits", "300", "--format", "csv"});
    CHECK(two.code == 0);
    CHECK(two.out.rfind("iteration,digits,work,wall_ms\n1,", 0) == 0);

    const Outcome single = run({"pi", "--method", "rational-single", "--k", "100"});
    CHECK(single.code == 0);
    CHECK(run({"pi", "--method", "rational-double", "--k", "100", "--format", "json"}).code == 0);

    CHECK(run({"pi", "--method", "spigot"}).code == 2);
    CHECK(run({"pi", "--method", "series", "--engine", "xyz"}).code == 2);
    CHECK(run({"pi", "--method", "two-term", "--digits", "50"}).code == 2);
    CHECK(run({"pi", "--method", "cubic", "--seed", "-2", "--iterations", "6"}).code == 4);
  }

  TEST_CASE("cubic report") {
    const Outcome csv = run({"pi", "--method", "cubic", "--iterations", "4", "--format", "csv"});
    CHECK(csv.code == 0);
    std::istringstream lines(csv.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "iteration,digits,work,wall_ms");
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line.substr(0, line.rfind(',')));
    CHECK(rows == std::vector<std::string>{"1,8,10", "2,26,50", "3,81,250", "4,246,1250"});

    const Outcome text = run({"pi", "--method", "cubic", "--iterations", "3"});
    CHECK(text.out.find("iteration digits\n1 8\n2 26\n3 81\n") == 0);
    CHECK(text.out.find("81 digits correct") != std::string::npos);
  }

  TEST_CASE("json output is reproducible apart from timings") {
    const std::vector<std::string> args{"pi", "--method", "cubic", "--iterations", "4", "--format", "json"};
    CHECK(strip_wall_ms(run(args).out) == strip_wall_ms(run(args).out));
    const std::vector<std::string> gen{"generate", "--k", "5", "--m", "3", "--format", "json"};
    CHECK(run(gen).out == run(gen).out);
  }

  TEST_CASE("radical") {
    const Outcome nested = run({"radical", "--k", "200", "--n", "3"});
    CHECK(nested.code == 0);
    CHECK(nested.out.find("computed digits of nested radical") != std::string::npos);
    const Outcome sqrt2 = run({"radical", "--k", "200", "--n", "1", "--sqrt2"});
    CHECK(sqrt2.code == 0);
    CHECK(sqrt2.out.rfind("1.\n41421356237309504880", 0) == 0);
    CHECK(sqrt2.out.find("computed digits of square root of 2") != std::string::npos);
    CHECK(run({"radical", "--k", "200", "--sqrt2", "--format", "json"}).out.find("\"kind\": \"sqrt2\"") !=
          std::string::npos);
    CHECK(run({"radical", "--k", "3", "--n", "5"}).code == 2);
  }

  TEST_CASE("bench") {
    const Outcome all = run({"bench", "--series", "mse,ese,ase", "--x", "1/5", "--digits", "1000"});
    CHECK(all.code == 0);
    std::istringstream lines(all.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "engine,terms_used,wall_ms,digits_achieved");
    std::map<std::string, long> terms;
    std::string row;
    while (std::getline(lines, row)) {
      std::istringstream cells(row);
      std::string engine, used, ms, digits;
      std::getline(cells, engine, ',');
      std::getline(cells, used, ',');
      std::getline(cells, ms, ',');
      std::getline(cells, digits, ',');
      terms[engine] = std::stol(used);
      CHECK(std::stoi(digits) >= 998);
    }
    REQUIRE(terms.size() == 3);
    CHECK(terms["ase"] < terms["ese"]);
    CHECK(terms["ese"] < terms["mse"]);
    CHECK(all.out.find("ase") < all.out.find("ese"));

    CHECK(run({"bench", "--x", "0"}).code == 4);
    CHECK(run({"bench", "--x", "3/2"}).code == 4);
    CHECK(run({"bench", "--x", "abc"}).code == 2);
    const Outcome one = run({"bench", "--series", "ese", "--x", "1", "--digits", "100"});
    CHECK(one.code == 0);
    CHECK(std::count(one.out.begin(), one.out.end(), '\n') == 2);
    CHECK(run({"bench", "--series", "mse", "--x", "1", "--digits", "100"}).code == 4);
  }

  TEST_CASE("GUARD_DIGITS override") {
    const int saved = guard_digits();
    setenv("GUARD_DIGITS", "14", 1);
    CHECK(run({"pi", "--digits", "50"}).code == 0);
    CHECK(guard_digits() == 14);
    setenv("GUARD_DIGITS", "lots", 1);
    CHECK(run({"pi", "--digits", "50"}).code == 2);
    unsetenv("GUARD_DIGITS");
    set_guard_digits(saved);
  }

  TEST_CASE("help and subcommand errors") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
  }
}
