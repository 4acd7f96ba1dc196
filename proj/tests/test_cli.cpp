#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int status;
  std::string out;  // stdout followed by stderr
};

Run run(std::string const& args, std::string const& env = "", bool with_stderr = true) {
  std::string cmd = env + (env.empty() ? "" : " ") + STID_BIN + std::string(" ") + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int const raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string data(std::string const& rel) { return std::string(STID_DATA) + "/" + rel; }

std::string slurp(std::string const& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_file(std::string const& name, std::string const& text) {
  auto path = std::filesystem::temp_directory_path() / ("stid_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

bool contains(std::string const& hay, std::string const& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("verify exit codes") {
  CHECK(run("verify " + data("identities/comm.id") + " --n 1").status == 0);
  CHECK(run("verify " + data("identities/comm.id") + " --n 2").status == 1);
  auto bad = temp_file("bad.id", "u: ab\nv: bxa\n");
  auto r = run("verify " + bad + " --n 1");
  CHECK(r.status == 3);
  CHECK(contains(r.out, "line 2, column 5"));
  CHECK(run("verify " + temp_file("triv.id", "u: ab\nv: ab\n") + " --n 1").status == 2);
  CHECK(run("verify").status == 3);
  CHECK(run("verify /nonexistent/file.id --n 1").status == 3);
}

TEST_CASE("verify output matches the stored certificate") {
  auto r = run("verify " + data("identities/comm.id") + " --n 1", "", false);
  CHECK(r.out == slurp(std::string(STID_GOLDEN) + "/verify_comm_n1.json"));
}

TEST_CASE("repeated runs are byte-identical") {
  auto args = "verify " + data("identities/comm.id") + " --n 2";
  CHECK(run(args).out == run(args).out);
  auto fuzz = "fuzz " + data("identities/comm.id") + " --n 2 --trials 50 --seed 7";
  CHECK(run(fuzz).out == run(fuzz).out);
}

TEST_CASE("configuration set limit from the environment") {
  auto r = run("verify " + data("identities/mat2.id") + " --n 2", "STID_MAX_SET=1");
  CHECK(r.status == 4);
  CHECK(contains(r.out, "limit"));
  // the flag wins over the environment
  CHECK(run("verify " + data("identities/comm.id") + " --n 1 --max-set 1000", "STID_MAX_SET=1").status == 0);
}

TEST_CASE("compose with and without certificates") {
  auto plain = run("compose " + data("identities/comm.id") + " " + data("identities/comm.id"));
  CHECK(plain.status == 0);
  CHECK(contains(plain.out, "u: abba\nv: baab\n"));
  CHECK(contains(plain.out, "candidate only"));

  auto strict = run("compose " + data("identities/comm.id") + " " + data("identities/comm.id") + " --require-cert");
  CHECK(strict.status == 5);

  auto cert = temp_file("c1.json", "");
  REQUIRE(run("verify " + data("identities/comm.id") + " --n 1 --out " + cert).status == 0);
  auto ok = run("compose " + data("identities/comm.id") + " " + data("identities/comm.id") + " --require-cert --cert " + cert);
  CHECK(ok.status == 0);
  CHECK(contains(ok.out, "sha256"));
  CHECK(contains(ok.out, "identity of 1x1 supertropical matrices"));

  auto refuted = temp_file("c2.json", "");
  REQUIRE(run("verify " + data("identities/comm.id") + " --n 2 --out " + refuted).status == 1);
  CHECK(run("compose " + data("identities/comm.id") + " " + data("identities/comm.id") + " --require-cert --cert " +
            refuted)
            .status == 5);

  auto trivial = temp_file("triv.id", "u: ab\nv: ab\n");
  CHECK(run("compose " + data("identities/comm.id") + " " + trivial).status == 2);
}

TEST_CASE("fuzz") {
  auto zero = run("fuzz " + data("identities/comm.id") + " --n 1 --trials 0");
  CHECK(zero.status == 0);
  CHECK(contains(zero.out, "vacuous"));
  CHECK(run("fuzz " + data("identities/comm.id") + " --n 1 --trials 200").status == 0);
  auto fail = run("fuzz " + data("identities/comm.id") + " --n 2 --trials 200 --kind trop");
  CHECK(fail.status == 1);
  CHECK(contains(fail.out, "\"result\": \"COUNTEREXAMPLE\""));
  CHECK(run("fuzz " + data("identities/comm.id") + " --n 1 --check nu-pair --pair-mode hat --trials 200").status == 0);
  // the nu checks need a tropical identity that holds
  CHECK(run("fuzz " + data("identities/comm.id") + " --n 2 --check nu-equiv --trials 10").status == 5);
  CHECK(run("fuzz " + data("identities/comm.id") + " --n 1 --kind bogus").status == 3);
}

TEST_CASE("walks") {
  auto one = run("walks " + data("digraphs/two_node.json") + " ab --list-max", "", false);
  CHECK(one.status == 0);
  CHECK(one.out == slurp(std::string(STID_GOLDEN) + "/walks_two_node_ab.txt"));
  auto loop = run("walks " + data("digraphs/loop.json") + " aab");
  CHECK(loop.status == 0);
  CHECK(contains(loop.out, "entry 1 1: max 3, walks at max 1"));
  // ab and ba do not agree on this graph
  auto two = run("walks " + data("digraphs/two_node.json") + " ab ba");
  CHECK(two.status == 1);
  CHECK(contains(two.out, "violations: 3"));
  CHECK(run("walks " + data("digraphs/loop.json") + " ab ba").status == 0);
  CHECK(run("walks " + temp_file("g.json", "{\"n\": 2}") + " ab").status == 3);
}

TEST_CASE("hull") {
  auto r = run("hull ab --n 2", "", false);
  CHECK(r.status == 0);
  CHECK(r.out == slurp(std::string(STID_GOLDEN) + "/hull_ab_n2.txt"));
  auto single = run("hull ab --n 1");
  CHECK(contains(single.out, "entry 1 1: points 1, vertices 1, quasi 0\n  vertex 1 1\n"));

  // pruning changes the kept points but not the vertex lines
  auto vertex_lines = [](std::string const& text) {
    std::string out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
      if (contains(line, "vertex ")) out += line + "\n";
    return out;
  };
  for (char const* w : {"aabba", "abbab", "babaab"}) {
    auto p = run(std::string("hull ") + w + " --n 2");
    auto u = run(std::string("hull ") + w + " --n 2 --no-prune");
    REQUIRE(p.status == 0);
    CHECK(vertex_lines(p.out) == vertex_lines(u.out));
    CHECK(contains(u.out, "prune: off"));
  }
}

TEST_CASE("search") {
  auto r = run("search --n 1 --max-len 2");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "found: u=ab v=ba"));
  CHECK(run("search --n 2 --max-len 3").status == 1);
  CHECK(run("search --n 2 --max-len 30").status == 3);
}
