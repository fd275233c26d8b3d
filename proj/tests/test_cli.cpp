#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "tricover/cli.hpp"
#include "tricover/spec_file.hpp"

using namespace tricover;

namespace {

const std::filesystem::path kFixtures = TRICOVER_FIXTURES;

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return (kFixtures / name).string(); }

}  // namespace

TEST_CASE("spec files round trip") {
  for (const auto& entry : std::filesystem::directory_iterator(kFixtures)) {
    if (entry.path().extension() != ".cover") continue;
    auto cover = load_cover(entry.path());
    auto text = print_cover_spec(cover);
    CHECK(parse_cover_spec(text) == cover);
    CHECK(print_cover_spec(parse_cover_spec(text)) == text);
  }
}

TEST_CASE("spec file errors report line numbers") {
  auto line_of = [](const char* text) {
    try {
      parse_cover_spec(text);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
      return e.position().value_or(0);
    }
    FAIL("accepted spec");
    return std::size_t{0};
  };
  CHECK(line_of("field = Q\nvars = s\nfoo = 1\n") == 3);
  CHECK(line_of("field = Q\nvars = s\na = s\na = 1\n") == 4);
  CHECK(line_of("field = Q\nvars = s\na = s +\nb = 1\nc = 1\nd = 1\n") == 3);
  CHECK(line_of("field = Q\nvars = s\na = s\n") == 3);
  CHECK(line_of("field = Q\nno equals sign\n") == 2);
  CHECK_THROWS_AS(parse_cover_spec("field = Fp:3\nvars =\na = 0\nb = 0\nc = 0\nd = 0\n"), Error);
  CHECK_THROWS_AS(load_cover("/nonexistent.cover"), Error);
}

TEST_CASE("every command is reachable") {
  CHECK(cli::command_names() ==
        std::vector<std::string>{"verify", "classify", "fibers", "resolve", "psi", "sigma", "reduce", "print", "demo"});
  CHECK(run({"verify", fixture("universal.cover")}).code == 0);
  CHECK(run({"classify", fixture("plane.cover"), "--point", "s=1,t=2"}).code == 0);
  CHECK(run({"fibers", fixture("plane.cover"), "--all"}).code == 0);
  CHECK(run({"resolve", fixture("double.cover"), "--dir", "0:1"}).code == 0);
  CHECK(run({"psi", fixture("cube_roots.cover"), "--fiber", "2,4"}).code == 0);
  CHECK(run({"sigma", fixture("universal.cover")}).code == 0);
  CHECK(run({"reduce", fixture("universal.cover"), "--expr", "z*w"}).code == 0);
  CHECK(run({"print", fixture("rational.cover")}).code == 0);
  CHECK(run({"demo", "quadric-cone", "--p", "5"}).code == 0);
}

TEST_CASE("command output") {
  auto r = run({"fibers", fixture("cube_roots.cover"), "--all"});
  CHECK(r.out.find("X={(1,1),(2,4),(4,2)}") != std::string::npos);
  CHECK(r.out.find("Z={[1:1],[1:2],[1:4]}") != std::string::npos);

  r = run({"sigma", fixture("universal.cover")});
  CHECK(r.out.find("lambda: -1/6") != std::string::npos);

  r = run({"reduce", fixture("universal.cover"), "--expr", "z^2"});
  CHECK(r.out.find("coordinates: (2*A^2 - 2*B*D, A, B)") != std::string::npos);
  CHECK(r.out.find("trace: 6*A^2 - 6*B*D") != std::string::npos);

  r = run({"classify", fixture("double.cover")});
  CHECK(r.out.find("class: SimpleDouble") != std::string::npos);

  r = run({"print", fixture("plane.cover")});
  CHECK(r.out == "field = Fp:7\nvars = s, t\na = s^2\nb = s*t\nc = t\nd = s\n");
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "/nonexistent.cover"}).code == 2);
  CHECK(run({"classify", fixture("plane.cover"), "--point", "s=1,x=2"}).code == 2);
  CHECK(run({"classify", fixture("plane.cover"), "--point", "s=1"}).code == 2);
  CHECK(run({"fibers", fixture("plane.cover")}).code == 2);
  CHECK(run({"fibers", fixture("universal.cover"), "--all"}).code == 2);
  CHECK(run({"resolve", fixture("cube_roots.cover"), "--dir", "0:1"}).code == 2);
  CHECK(run({"psi", fixture("cube_roots.cover"), "--fiber", "0,0"}).code == 2);
  CHECK(run({"demo", "cusp", "--p", "5"}).code == 2);
  CHECK(run({"demo", "quadric-cone", "--p", "4"}).code == 2);
  auto r = run({"reduce", fixture("plane.cover"), "--expr", "s +"});
  CHECK(r.code == 2);
  CHECK(r.err.find("SyntaxError") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}
