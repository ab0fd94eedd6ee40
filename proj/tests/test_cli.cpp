#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using Json = nlohmann::json;

namespace {

namespace fs = std::filesystem;

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + "'" LINKLESS_CLI "' " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string file(const std::string& name, const std::string& content) {
  fs::path dir = fs::temp_directory_path() / "linkless_cli_test";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream(p, std::ios::binary) << content;
  return p.string();
}

std::string k_n(int n) {
  std::string s;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s += std::to_string(i) + " " + std::to_string(j) + "\n";
  return s;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("decide") {
  Run k6 = run("decide " + file("k6.g6", "E~~w\n"));
  CHECK(k6.status == 0);
  Json doc = Json::parse(k6.out);
  CHECK(doc["embeddable"] == false);
  CHECK(doc["family_member"] == 1);

  Run c4 = run("decide " + file("c4.txt", "0 1\n1 2\n2 3\n3 0\n"));
  CHECK(c4.status == 0);
  CHECK(Json::parse(c4.out)["embeddable"] == true);

  Run text = run("--output text decide " + file("k6.g6", "E~~w\n"));
  CHECK(text.out.rfind("embeddable: no\n", 0) == 0);
}

TEST_CASE("family") {
  Run r = run("--output text family");
  CHECK(r.status == 0);
  int lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 7);
  CHECK(r.out.rfind("E~~w\n", 0) == 0);
  // Every line is a member that decide recognises.
  std::istringstream in(r.out);
  std::string line;
  int index = 0;
  while (std::getline(in, line)) {
    ++index;
    Run d = run("--format graph6 decide " + file("member.g6", line + "\n"));
    CHECK(Json::parse(d.out)["family_member"] == index);
  }
  Run j = run("family");
  CHECK(Json::parse(j.out)["members"].size() == 7);
}

TEST_CASE("invariant") {
  Run r = run("invariant --over-rule random --seed 0 " + file("k6.g6", "E~~w\n"));
  CHECK(r.status == 0);
  CHECK(Json::parse(r.out)["conway_gordon_sum"] == 1);
  Run again = run("invariant --over-rule random --seed 0 " + file("k6.g6", "E~~w\n"));
  CHECK(again.out == r.out);
  Run env = run("invariant " + file("k6.g6", "E~~w\n"), "LINKLESS_OVER_RULE=random LINKLESS_SEED=0");
  CHECK(env.out == r.out);
  Run ordered = run("--order 0,2,4,1,3,5 invariant " + file("k6.g6", "E~~w\n"));
  CHECK(Json::parse(ordered.out)["diagram"]["order"] == Json::array({0, 2, 4, 1, 3, 5}));

  std::string assignment = file("assignment.json", Json::parse(r.out)["diagram"].dump());
  Run fixed = run("invariant --assignment " + assignment + " " + file("k6.g6", "E~~w\n"));
  CHECK(Json::parse(fixed.out)["diagram"] == Json::parse(r.out)["diagram"]);
}

TEST_CASE("web, minor and cycles") {
  std::string dot = (fs::temp_directory_path() / "linkless_cli_test" / "web.dot").string();
  Run w = run("web --dot " + dot + " " + file("k6.g6", "E~~w\n"));
  CHECK(w.status == 0);
  CHECK(Json::parse(w.out)["node_count"] == 76);
  CHECK(fs::exists(dot));
  Run m = run("minor " + file("k6.g6", "E~~w\n") + " " + file("k4.txt", k_n(4)));
  CHECK(Json::parse(m.out)["is_minor"] == true);
  Run c = run("--output text cycles " + file("c4.txt", "0 1\n1 2\n2 3\n3 0\n"));
  CHECK(c.out == "0 1 2 3\n");
}

TEST_CASE("exit codes") {
  CHECK(run("decide " + file("bad.txt", "0 1\n1 z\n")).status == 2);
  CHECK(run("--format graph6 decide " + file("bad.g6", "E~~\n")).status == 2);
  CHECK(run("decide " + file("k17.txt", k_n(17))).status == 3);
  CHECK(run("--cap-vertices 17 decide " + file("k17.txt", k_n(17))).status == 0);
  CHECK(run("web " + file("k11.txt", k_n(11))).status == 3);
  CHECK(run("decide /nonexistent/graph").status == 1);
  CHECK(run("nosuchcommand").status == 1);
  CHECK(run("").status == 1);
}

}  // TEST_SUITE
