#include <filesystem>
#include <fstream>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "cli.hpp"
#include "rsg/corpus.hpp"
#include "rsg/io.hpp"

using namespace rsg;

namespace {

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int const          code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string write_temp(std::string const& name, std::string const& text) {
    auto const path = std::filesystem::temp_directory_path() / ("rsg_test_" + name);
    std::ofstream(path) << text;
    return path.string();
  }

}  // namespace

TEST_CASE("cli analyze and check") {
  std::string const b = write_temp("b.json", to_json(monoid_b()));
  Run const         a = run({"analyze", b});
  CHECK(a.code == cli::exit_ok);
  CHECK(a.out.find("is_perfect = true") != std::string::npos);
  CHECK(run({"check", b}).code == cli::exit_ok);

  RSemigroup const  broken({{0, 0}, {0, 1}}, {1, 0}, {0, 1});
  std::string const bad = write_temp("broken.json", to_json(broken));
  Run const         c   = run({"check", bad});
  CHECK(c.code == cli::exit_false);
  CHECK(c.out.find("x+x = x") != std::string::npos);

  Run const j = run({"analyze", "--json", b});
  CHECK(j.code == cli::exit_ok);
  CHECK(j.out.find("\"is_perfect\": true") != std::string::npos);
}

TEST_CASE("cli structures") {
  std::string const w = write_temp("w.json", to_json(named("W(C2,V3)")));
  CHECK(run({"munn", w}).code == cli::exit_ok);
  CHECK(run({"munn", "--ideal-isos", w}).code == cli::exit_ok);
  CHECK(run({"cset", w}).code == cli::exit_ok);
  CHECK(run({"reconstruct", w}).code == cli::exit_ok);
  std::string const i = write_temp("i2.json", to_json(i2()));
  CHECK(run({"reconstruct", i}).code == cli::exit_false);
  std::string const act = write_temp("act.json", to_json(swap_action()));
  Run const         wp  = run({"w-product", "--action", act});
  CHECK(wp.code == cli::exit_ok);
  CHECK(wp.out.find("(g,1)") != std::string::npos);

  RSemigroup const  b  = monoid_b();
  std::string const sb = write_temp("sb.json", to_json(b));
  std::string const tb = write_temp("tb.json", to_json(Monoid::of(b)));
  std::string const mb = write_temp("mb.json", map_to_json({0, 1}));
  CHECK(run({"cover", "--semigroup", sb, "--monoid", tb, "--map", mb,
             "--via", "unit"})
            .code
        == cli::exit_ok);
}

TEST_CASE("cli exit codes") {
  CHECK(run({"analyze", "/nonexistent/file.json"}).code == cli::exit_input);
  CHECK(run({"frobnicate"}).code == cli::exit_input);
  CHECK(run({"enumerate", "--kind", "semilattice", "--max-size", "9"}).code
        == cli::exit_resource);
  CHECK(run({"enumerate", "--kind", "cube", "--max-size", "2"}).code
        == cli::exit_input);
  Run const e = run({"enumerate", "--kind", "rsemigroup", "--max-size", "2"});
  CHECK(e.code == cli::exit_ok);
  CHECK(std::count(e.out.begin(), e.out.end(), '\n') == 4);
  Run const v = run({"verify", "--suite", "axioms", "--max-rsemigroup", "2",
                     "--max-semilattice", "3", "--max-monoid", "2"});
  CHECK(v.code == cli::exit_ok);
  CHECK(v.out.find("PASS [1]") != std::string::npos);
}
