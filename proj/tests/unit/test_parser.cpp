#include <doctest.h>

#include <random>

#include "bicoh/parser.hpp"
#include "gen.hpp"

using namespace bicoh;

TEST_CASE("object grammar") {
  CHECK(obj_to_text(parse_obj("I")) == "I");
  CHECK(obj_to_text(parse_obj("x")) == "x");
  CHECK(obj_to_text(parse_obj("(x*y)")) == "(x*y)");
  CHECK(obj_to_text(parse_obj(" ( x * ( y * I ) ) ")) == "(x*(y*I))");
  CHECK(obj_to_text(parse_obj("x*y*z")) == "((x*y)*z)");  // relaxed chain, left-assoc
  CHECK_THROWS_AS(parse_obj("(x*y"), ParseError);
  CHECK_THROWS_AS(parse_obj("x)"), ParseError);
  CHECK_THROWS_AS(parse_obj(""), ParseError);
}

TEST_CASE("cell grammar") {
  CHECK(cell_to_text(parse_cell("id[x]")) == "id[x]");
  CHECK(cell_to_text(parse_cell("a[x,y,z]")) == "a[x,y,z]");
  CHECK(cell_to_text(parse_cell("a'[x,y,z]")) == "a'[x,y,z]");
  CHECK(cell_to_text(parse_cell("l[x]")) == "l[x]");
  CHECK(cell_to_text(parse_cell("r'[x]")) == "r'[x]");
  CHECK(cell_to_text(parse_cell("R[x,y]")) == "R[x,y]");
  CHECK(cell_to_text(parse_cell("R'[x,y]")) == "R'[x,y]");
  CHECK(cell_to_text(parse_cell("(R[x,y]*id[z])")) == "(R[x,y]*id[z])");
  CHECK_THROWS_AS(parse_cell("q[x]"), ParseError);
  CHECK_THROWS_AS(parse_cell("R[x]"), ParseError);
}

TEST_CASE("composition reads in diagram order") {
  CellPtr c = parse_cell("(R[x,y];R[y,x])");
  // R[x,y] runs first
  CHECK(obj_equal(src_obj(c), parse_obj("(x*y)")));
  CHECK(obj_equal(tgt_obj(c), parse_obj("(x*y)")));
  CHECK(cell_to_text(c) == "(R[x,y];R[y,x])");
}

TEST_CASE("parse after print is the identity on random terms") {
  bicoh_tests::TermGen gen(0x5eed, GenSet::of({"x", "y", "z"}));
  for (int trial = 0; trial < 200; ++trial) {
    ObjPtr obj = gen.random_obj(3);
    CellPtr c = gen.random_cell(obj, 4);
    CHECK(cell_equal(parse_cell(cell_to_text(c)), c));
    CHECK(obj_equal(parse_obj(obj_to_text(obj)), obj));
  }
}

TEST_CASE("generator inference") {
  GenSet g = infer_gens(parse_cell("(R[x,y]*id[w])"));
  CHECK(g.names == std::vector<std::string>{"x", "y", "w"});
}
