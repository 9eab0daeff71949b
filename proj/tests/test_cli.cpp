/*
 *   Copyright 2026 The Gradix Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
};

Result cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" GRADIX_CLI "\" " + args + " 2>&1";
  FILE* p = ::popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int status = ::pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch() {
  auto d = fs::temp_directory_path() / ("gradix_cli_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("check subcommand") {
  auto r = cli("check --suite T1 --lattice chain:5 --seed 3 --n 30");
  CHECK(r.code == 0);
  CHECK(r.out.find("THEOREM T1 instances=30") != std::string::npos);
  CHECK(r.out.find("status=PASS") != std::string::npos);
  CHECK(cli("check --suite T1 --lattice chain:5 --seed 3 --n 30").out == r.out);
  CHECK(cli("check --suite T-bogus").code == 3);
  CHECK(cli("check --suite T1 --lattice nope").code == 1);
  CHECK(cli("check --suite T1 --n 10", "GRADIX_SEED=3").out == cli("check --suite T1 --n 10 --seed 3").out);
}

TEST_CASE("eval subcommand") {
  const auto dir = scratch();
  std::ofstream(dir / "sp.csv") << "P,S\np1,s1\np2,s1\np1,s2\n";
  std::ofstream(dir / "parts.csv") << "P\np1\np2\n";
  std::ofstream(dir / "q.gx") << "LOAD SP FROM \"sp.csv\"\nLOAD PT FROM \"parts.csv\"\n"
                                  "EVAL DIV(SP BY PT OVER PROJECT[S](SP))\n";
  std::ofstream(dir / "bad.gx") << "EVAL DIV(SP BY PT)\n";
  auto r = cli("eval --lattice boolean --script " + (dir / "q.gx").string());
  CHECK(r.code == 0);
  CHECK(r.out == "S,rank\ns1,1\n\n");
  auto o = cli("eval --lattice boolean --script " + (dir / "q.gx").string() + " --out " + (dir / "res").string());
  CHECK(o.code == 0);
  CHECK(fs::exists(dir / "res" / "result_1.csv"));
  CHECK(cli("eval --script " + (dir / "bad.gx").string()).code == 1);
  CHECK(cli("eval --script " + (dir / "missing.gx").string()).code == 2);
  CHECK(cli("eval").code == 1);
  fs::remove_all(dir);
}

TEST_CASE("search subcommand") {
  auto r = cli("search --max-size 4");
  CHECK(r.code == 0);
  CHECK(r.out.find("10 residuated lattices with at most 4 elements") != std::string::npos);
  CHECK(cli("search --max-size 9").code == 1);
}
