// Copyright 2026 The dill Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_dir() {
  static std::string dir = [] {
    char tmpl[] = "/tmp/dill_cli_XXXXXX";
    const char* d = mkdtemp(tmpl);
    REQUIRE(d != nullptr);
    return std::string(d);
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  std::string path = temp_dir() + "/" + name;
  std::ofstream(path) << text;
  return path;
}

Run dill(const std::string& args) {
  std::string out = temp_dir() + "/out.txt", err = temp_dir() + "/err.txt";
  std::string cmd = std::string(DILL_BIN) + " " + args + " >" + out + " 2>" + err;
  int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

}  // namespace

TEST_CASE("reduce a weakening cut") {
  std::string f = write_file("wcut.net", "(; <w:?a | cw:!a>)\n");
  Run r = dill("reduce --in " + f);
  CHECK(r.code == 0);
  CHECK(r.out == "(;)\n");
  Run t = dill("reduce --trace --in " + f);
  CHECK(t.out == "#1 w-cw @c0 : <w:?a | cw:!a>\n(;)\n");
}

TEST_CASE("fundamental theorem suite") {
  Run r = dill("check-laws --suite ftc --web 1 --degree 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.rfind("# suite ftc", 0) == 0);
}

TEST_CASE("negative coefficients fail in the relational model") {
  Run r = dill("eval --model rel --expr '-1 * ([x, ~x] ;)'");
  CHECK(r.code == 1);
  CHECK(r.err.find("NegativeCoefficient") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(dill("parse --expr '([x tens y'").code == 2);
  CHECK(dill("frobnicate").code == 2);
  CHECK(dill("check-laws --suite nope").code == 2);
  CHECK(dill("reduce --kind dterm --expr '(\\x. (x) x) (\\x. (x) x)' --fuel 20").code == 3);
  CHECK(dill("typecheck --expr '([x, ~x] ;)' --types 'a, a'").code == 1);
  CHECK(dill("derive --expr '(; <x | ~x>)'").code == 1);
  CHECK(dill("antiderive --expr '<x>[h]'").code == 1);
}

TEST_CASE("fuel default from the environment") {
  std::string cmd = "DILL_FUEL_DEFAULT=1 " + std::string(DILL_BIN) +
                    " reduce --expr '(; <c(w, w) | cc(cw, cw)>)' >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 3);
}

TEST_CASE("subcommand outputs") {
  CHECK(dill("parse --expr '2/3 * ([w] ;) + 1/3 * ([cw] ;)'").out ==
        "2/3 * ([w] ;) + 1/3 * ([cw] ;)\n");
  CHECK(dill("parse --kind type --expr '!(a tens ~b)'").code == 0);
  CHECK(dill("typecheck --expr '([x, ~x] ;)' --types 'a, ~a'").out == "ok: a, ~a\n");
  Run d = dill("derive --expr '([x, ~x] ;)' --types 'a, ~a'");
  CHECK(d.code == 0);
  CHECK(d.out == "# conclusions: a, ~a\n1 (ax x \"a\")\n");
  CHECK(dill("taylor --expr '(M) R' --multiplicity 2").out ==
        "<M>[] + <M>[R] + 1/2 * <M>[R, R]\n");
  CHECK(dill("antiderive --expr '<x>[h] + <h>[x]'").out == "<x>[x]\n");
  CHECK(dill("reduce --kind rterm --expr '<\\x. <x>[x]>[u, v]'").out == "<u>[v] + <v>[u]\n");
}

TEST_CASE("semantic values are JSON") {
  Run r = dill("eval --model wrel --expr '([x, ~x] ;)' --degree 1 --types 'a, ~a' --valuation " +
               write_file("v.json", R"({"atoms": {"a": ["p", "q"]}})"));
  REQUIRE(r.code == 0);
  std::string body = r.out.substr(r.out.find('['));
  auto j = nlohmann::json::parse(body);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["tuple"] == nlohmann::json::array({"p", "p"}));
  CHECK(j[0]["val"] == "1");
  Run w = dill("antiderive --model wrel --web 1 --degree 1");
  REQUIRE(w.code == 0);
  auto m = nlohmann::json::parse(w.out);
  CHECK(m[1]["row"] == "[a]");
  CHECK(m[1]["val"] == "1/2");
}

TEST_CASE("runs are deterministic") {
  std::string args = "reduce --strategy random --seed 9 --expr '(; <c(w, d(s)) | cc(cw, cd(t))>)'";
  Run a = dill(args), b = dill(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("# seed 9\n", 0) == 0);
  Run l = dill("check-laws --suite taylor --web 1 --degree 2 --seed 5 --samples 3");
  CHECK(l.out.find("seed 5") != std::string::npos);
  CHECK(l.out == dill("check-laws --suite taylor --web 1 --degree 2 --seed 5 --samples 3").out);
}

TEST_CASE("bundled corpus is invariant") {
  std::string data = DILL_DATA;
  Run r = dill("check-invariance --in " + data + "/corpus.net --valuation " + data +
               "/valuation.json --steps");
  CHECK(r.code == 0);
  CHECK(r.out.find("200/200 nets invariant") != std::string::npos);
}

TEST_CASE("corpus generation is reproducible") {
  std::string data = DILL_DATA;
  Run r = dill("gen-corpus --seed 1 --count 200");
  CHECK(r.code == 0);
  CHECK(r.out == slurp(data + "/corpus.net"));
}
