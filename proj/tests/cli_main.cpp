// Copyright 2026 The pauliprop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end checks of the installed command line: exit codes and artifact
// files, exercised through the real binary.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
  std::string command = std::string(PAULIPROP_CLI_PATH) + " " + args +
                        " > /dev/null 2> /dev/null";
  int status = std::system(command.c_str());
  return WEXITSTATUS(status);
}

fs::path temp_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("pauliprop_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("preset run produces a ledger") {
  fs::path dir = temp_dir("run");
  int code = run_cli("--preset kicked-ising-eagle127 --theta-x 0.9pi "
                     "--layers 2 --workers 2 --epsilon0 0 --out " +
                     (dir / "out").string());
  CHECK(code == 0);
  CHECK(fs::exists(dir / "out" / "ledger.csv"));
  CHECK(fs::exists(dir / "out" / "run_meta.json"));

  std::ifstream csv(dir / "out" / "ledger.csv");
  std::string header, row1;
  std::getline(csv, header);
  std::getline(csv, row1);
  CHECK(header ==
        "t,observable,term_count,global_max,removed,wall_ms_per_gate,"
        "batches_sent,records_sent");
  CHECK(row1.substr(0, 2) == "1,");
  CHECK(row1.find("-0.95105651629") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("missing geometry file exits with the config code") {
  CHECK(run_cli("--preset kicked-ising-eagle127 --geometry /nope.txt") == 2);
}

TEST_CASE("config file plus overrides") {
  fs::path dir = temp_dir("config");
  {
    std::ofstream config(dir / "run.cfg");
    config << "preset = kicked-ising-eagle127\n"
           << "theta_x = 0.5pi\n"
           << "layers = 3\n"
           << "out = " << (dir / "out_a").string() << "\n";
  }
  CHECK(run_cli("--config " + (dir / "run.cfg").string()) == 0);
  // Clifford regime: one string for every layer.
  std::ifstream csv(dir / "out_a" / "ledger.csv");
  std::string line;
  std::getline(csv, line);
  int rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    CHECK(line.find(",1,") != std::string::npos);
  }
  CHECK(rows == 3);

  CHECK(run_cli("--config " + (dir / "run.cfg").string() +
                " --layers 0") == 2);
  fs::remove_all(dir);
}

TEST_CASE("term budget exits with the resource code") {
  fs::path dir = temp_dir("budget");
  int code = run_cli("--preset kicked-ising-eagle127 --theta-x 0.25pi "
                     "--layers 8 --max-terms 500 --out " + dir.string());
  CHECK(code == 4);
  fs::remove_all(dir);
}

TEST_CASE("oracle check on a small circuit") {
  fs::path dir = temp_dir("oracle");
  {
    std::ofstream circuit(dir / "c.txt");
    circuit << "X0 0.4\nZ1 Z0 0.9\n\nX1 1.2\n";
  }
  int code = run_cli("--circuit " + (dir / "c.txt").string() +
                     " --qubits 2 --observable Z1 --oracle-check --out " +
                     dir.string());
  CHECK(code == 0);
  fs::remove_all(dir);
}

TEST_CASE("bench sweep writes bench.csv") {
  fs::path dir = temp_dir("bench");
  int code = run_cli("--preset kicked-ising-eagle127 --theta-x 0.3 "
                     "--epsilon0 1e-3 --layers 2 --bench 1,2 --out " +
                     dir.string());
  CHECK(code == 0);
  CHECK(fs::exists(dir / "bench.csv"));
  fs::remove_all(dir);
}

TEST_CASE("bad flag value exits with the config code") {
  CHECK(run_cli("--preset kicked-ising-eagle127 --theta-x nonsense") == 2);
}
