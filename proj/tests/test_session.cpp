#include "doctest.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "gmdual/report.hpp"
#include "gmdual/session.hpp"

using namespace gmdual;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Report run_text(const std::string& text, ReportOptions opts = {}) {
  SessionAST ast = parse_session(text);
  return run_session(ast, build_environment(ast), opts);
}

}  // namespace

TEST_CASE("parsing declarations and commands") {
  SessionAST ast = parse_session("ring A = poly(x:3, y:2) / (x^2 - y^3)\nserre A window=-15..15 tmax=12\n");
  REQUIRE(ast.nodes.size() == 2);
  const auto& ring = std::get<RingDecl>(ast.nodes[0]);
  CHECK(ring.name == "A");
  CHECK(ring.vars == std::vector<std::pair<std::string, int>>{{"x", 3}, {"y", 2}});
  REQUIRE(ring.ideal.size() == 1);
  CHECK(ring.ideal[0].terms.size() == 2);
  const auto& cmd = std::get<Command>(ast.nodes[1]);
  CHECK(cmd.verb == "serre");
  CHECK(cmd.target == "A");
  CHECK(cmd.arg("window") == "-15..15");
  CHECK(cmd.arg("tmax") == "12");
  CHECK(cmd.loc.line == 2);
}

TEST_CASE("polynomial syntax") {
  SessionAST ast = parse_session("ring R = poly(x:1, y:1) / (3/2x*y - y^2, -x^2 + 2 x*y)\n");
  const auto& ideal = std::get<RingDecl>(ast.nodes[0]).ideal;
  CHECK(ideal[0].terms[0].coef == Scalar(3, 2));
  CHECK(ideal[0].terms[0].factors.size() == 2);
  CHECK(ideal[1].terms[0].coef == -1);
  CHECK(ideal[1].terms[1].coef == 2);
  CHECK_THROWS_AS(parse_session("ring R = poly(x:1) / (x y)\n"), SessionError);
}

TEST_CASE("round trip through the printer") {
  const char* texts[] = {
      "ring A = poly(x:3, y:2) / (x^2 - y^3)\n",
      "ring C = poly(x:1,y:1,z:1)/(x*y-z^2)  # cone\nmodule M over C = coker [0, 0] [[x, z], [z, y]]\n"
      "module K over C = quot (x, -1/2z^2 + y*y)\nmodule F over C = free [0, -2, 3]\n"
      "verifyB M window=-4..4 tmax=10\next M target=K i=0..2\ndepth F\n",
      "",
      "# only a comment\n\n",
  };
  for (const char* t : texts) {
    SessionAST a = parse_session(t);
    std::string printed = print_session(a);
    SessionAST b = parse_session(printed);
    CHECK(a == b);
    CHECK(print_session(b) == printed);
  }
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_session("ring A = poly(x:1)\nmodule M over A = frob [0]\n");
    FAIL("no error");
  } catch (const SessionError& e) {
    CHECK(e.loc().line == 2);
    CHECK(e.loc().column == 19);
    CHECK(std::string(e.what()).find("'free', 'coker' or 'quot'") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_session("bogus A\n"), SessionError);
  CHECK_THROWS_AS(parse_session("ring A = poly(x:1) $\n"), SessionError);
}

TEST_CASE("semantic errors") {
  auto fails = [](const char* text, const char* fragment) {
    try {
      build_environment(parse_session(text));
      return false;
    } catch (const SessionError& e) {
      return std::string(e.what()).find(fragment) != std::string::npos;
    }
  };
  CHECK(fails("ring B = poly(x:0)\n", "non-positive weight"));
  CHECK(fails("ring B = poly(x:1, y:1) / (x + y^2)\n", "non-homogeneous"));
  CHECK(fails("ring B = poly(x:1)\nmodule M over B = coker [0] [[x], [x]]\n", "arity mismatch"));
  CHECK(fails("hilbert Z\n", "unknown name"));
  CHECK(fails("module M over Q = free [0]\n", "unknown ring"));
  CHECK(fails("ring B = poly(x:1)\nring B = poly(y:1)\n", "duplicate"));
  CHECK(fails("ring B = poly(x:1)\nmodule M over B = quot (y)\n", "unknown variable"));
}

TEST_CASE("reports") {
  Report empty = run_text("");
  CHECK(empty.blocks.empty());
  CHECK(exit_code(empty) == 0);
  auto j = nlohmann::json::parse(emit_json(empty));
  CHECK(j["format"] == "gmdual-report");
  CHECK(j["blocks"].empty());

  Report one = run_text("ring A = poly(x:1)\nhilbert A window=-2..3\n");
  REQUIRE(one.blocks.size() == 1);
  REQUIRE(one.blocks[0].tables.size() == 1);
  CHECK(one.blocks[0].tables[0].table.total() == 4);
  CHECK(emit_table(one).find("hilbert A window=-2..3") != std::string::npos);
}

TEST_CASE("command examples") {
  Report lc = run_text("ring A = poly(x:1)\nlocalcoh A i=1 window=-10..0\n");
  const HilbertTable& h = lc.blocks.at(0).tables.at(0).table;
  for (int d = -10; d <= 0; ++d) CHECK(h.at(d) == (d <= -1 ? 1 : 0));

  Report dep = run_text("ring A = poly(x:1, y:1)\nmodule M over A = quot (x, y)\ndepth M\n");
  CHECK(dep.blocks.at(0).values["depth"] == 0);

  Report va = run_text("ring A = poly(x:3, y:2) / (x^2 - y^3)\nverifyA A range=-8..8 window=-15..15 tmax=12\n");
  CHECK(va.blocks.at(0).passed());
  CHECK(exit_code(va) == 0);
}

TEST_CASE("exit codes") {
  CHECK(exit_code(run_text("ring A = poly(x:1)\nhilbert A nonsense=1\n")) == 2);
  CHECK(exit_code(run_text("ring A = poly(x:1, y:1)\nlocalcoh A i=2 window=-30..0 tmax=2\n")) == 3);
  CHECK(exit_code(run_text("ring A = poly(x:1)\nlocalcoh A i=1 window=-5..5 oracle=cech\n")) == 0);
}

TEST_CASE("JSON reports are deterministic and match the golden file") {
  const std::string dir = std::string(GMDUAL_SOURCE_DIR) + "/tests/golden/";
  const std::string text = slurp(dir + "basic_session.txt");
  ReportOptions opts;
  opts.window = Window(-6, 6);
  opts.t_max = 16;
  SessionAST ast = parse_session(text);
  Environment env = build_environment(ast);
  const std::string a = emit_json(run_session(ast, env, opts, "basic_session.txt"));
  const std::string b = emit_json(run_session(ast, env, opts, "basic_session.txt"));
  CHECK(a == b);
  opts.concurrent = true;
  CHECK(emit_json(run_session(ast, env, opts, "basic_session.txt")).size() == a.size());
  CHECK(a == slurp(dir + "basic_session.json"));
}

TEST_CASE("reports validate against the shipped schema keys") {
  auto schema = nlohmann::json::parse(slurp(std::string(GMDUAL_DATA_DIR) + "/report.schema.json"));
  auto j = nlohmann::json::parse(emit_json(run_text("ring A = poly(x:1)\nhilbert A window=0..2\n")));
  for (const auto& key : schema["required"]) CHECK(j.contains(key.get<std::string>()));
  for (const auto& key : schema["properties"]["blocks"]["items"]["required"])
    CHECK(j["blocks"][0].contains(key.get<std::string>()));
}
