#include <doctest.h>

#include "metriq/parse.hpp"

using namespace metriq;

TEST_CASE("domain literals render back to their canonical form") {
  for (const char* lit :
       {"halfspace:n=2", "ball:n=2", "ball:n=3",
        "sector:theta=1.5707963267948966",
        "polygon:(-1,0);(1,0);(1,1);(-1,1)", "punctured:(0,0);(1,0)"})
    CHECK(render_domain(parse_domain(lit)) == lit);
}

TEST_CASE("domain literal errors") {
  CHECK_THROWS_AS(parse_domain("ball"), std::invalid_argument);
  CHECK_THROWS_AS(parse_domain("ball:n=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_domain("ball:m=2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_domain("sector:theta=7.0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_domain("sector:theta=abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_domain("pyramid:n=2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_domain("polygon:(0,0);(1,0)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_domain("punctured:(0,0);(0,0)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_domain("polygon:(0,0);(1,0);(1,1"), std::invalid_argument);
}

TEST_CASE("point literals") {
  const Point p = parse_point("0.5,0");
  CHECK(p.dim() == 2);
  CHECK(p[0] == 0.5);
  CHECK(p[1] == 0.0);
  CHECK(render_point(p) == "0.5,0");
  const Point q = parse_point("-0.1,0.25,3");
  CHECK(q.dim() == 3);
  CHECK(render_point(parse_point(render_point(q))) == render_point(q));
  CHECK_THROWS_AS(parse_point("a,b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_point("1.0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_point("1.0,"), std::invalid_argument);
}

TEST_CASE("double rendering") {
  CHECK(render_double(0.6) == "0.6");
  CHECK(render_double(-1.0) == "-1");
  CHECK(render_double(1.5707963267948966) == "1.5707963267948966");
  CHECK(parse_double(render_double(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(render_double(0.4472135954999579, 9) == "0.447213595");
}

TEST_CASE("run config round-trips through its rendered form") {
  RunConfig c;
  c.command = "verify";
  c.domain = "ball:n=2";
  c.chain = "C48";
  c.seed = 7;
  c.n_samples = 100000;
  c.tol = 1e-9;
  c.out = "report.json";
  CHECK(parse_config(render_config(c)) == c);

  RunConfig e;
  e.command = "eval";
  e.domain = "sector:theta=1.5707963267948966";
  e.metrics = {"pp", "jstar"};
  e.x = "0.3,0.1";
  e.y = "0.5,0.2";
  e.strategy = "oracle";
  e.format = OutputFormat::csv;
  CHECK(parse_config(render_config(e)) == e);
}
