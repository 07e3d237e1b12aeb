#include <doctest.h>

#include "bicoh/coherence.hpp"
#include "bicoh/functor.hpp"
#include "bicoh/movie.hpp"
#include "bicoh/parser.hpp"
#include "gen.hpp"

using namespace bicoh;

namespace {

const ObjPtr X = gen_obj("x");
const ObjPtr Y = gen_obj("y");

Movie side_movie(const MovePattern& p, int strands) { return Movie{strands, p.frames, p.changes}; }

}  // namespace

TEST_CASE("elementary changes") {
  BraidWord w = make_word(3, {1, 2});
  Change ins{ChangeKind::PairInsert, 2, +1, 1, BraidRelVariant::SameSign};
  BraidWord v = apply_change(w, ins);
  CHECK(v == make_word(3, {1, 2, -2, 2}));
  CHECK(apply_change(v, invert_change(ins)) == w);

  Change fcm{ChangeKind::FarCommute, 0, +1, 0, BraidRelVariant::SameSign};
  CHECK_FALSE(try_change(w, fcm).has_value());  // |1-2| = 1 is not far
  CHECK(apply_change(make_word(4, {1, 3}), fcm) == make_word(4, {3, 1}));

  Change brs{ChangeKind::BraidRelation, 0, +1, 0, BraidRelVariant::SameSign};
  CHECK(apply_change(make_word(3, {1, 2, 1}), brs) == make_word(3, {2, 1, 2}));
  Change brf{ChangeKind::BraidRelation, 0, +1, 0, BraidRelVariant::MixedFwd};
  CHECK(apply_change(make_word(3, {1, 2, -1}), brf) == make_word(3, {-2, 1, 2}));
  Change brb{ChangeKind::BraidRelation, 0, +1, 0, BraidRelVariant::MixedBwd};
  CHECK(apply_change(make_word(3, {-2, 1, 2}), brb) == make_word(3, {1, 2, -1}));
}

TEST_CASE("movie validation") {
  Movie m;
  m.strands = 3;
  m.frames = {make_word(3, {}), make_word(3, {1, -1}), make_word(3, {})};
  m.changes = {Change{ChangeKind::PairInsert, 1, +1, 0, BraidRelVariant::SameSign},
               Change{ChangeKind::PairDelete, 1, +1, 0, BraidRelVariant::SameSign}};
  CHECK(validate_movie(m).ok);

  Movie bad = m;
  bad.frames[1] = make_word(3, {1});
  CHECK_FALSE(validate_movie(bad).ok);

  Movie relation;
  relation.strands = 3;
  relation.frames = {make_word(3, {1, 2, 1}), make_word(3, {2, 1, 2})};
  relation.changes = {Change{ChangeKind::BraidRelation, 0, +1, 0, BraidRelVariant::SameSign}};
  CHECK(validate_movie(relation).ok);

  // a single-letter insertion is not an elementary change of a movie
  CHECK_THROWS_AS(infer_changes(3, {make_word(3, {}), make_word(3, {1})}), MoveError);
  for (ChangeKind k : {ChangeKind::Equal, ChangeKind::PairInsert, ChangeKind::PairDelete,
                       ChangeKind::FarCommute, ChangeKind::BraidRelation}) {
    Movie one_letter;
    one_letter.strands = 3;
    one_letter.frames = {make_word(3, {}), make_word(3, {1})};
    one_letter.changes = {Change{k, 1, +1, 0, BraidRelVariant::SameSign}};
    CHECK_FALSE(validate_movie(one_letter).ok);
  }
}

TEST_CASE("frame constancy: every valid movie has are_equal frames") {
  Movie m = infer_changes(3, {make_word(3, {1, 2, 1}), make_word(3, {2, 1, 2}),
                              make_word(3, {2, 1, 2, -2, 2}), make_word(3, {2, 1, 2})});
  CHECK(validate_movie(m).ok);
  for (const BraidWord& f : m.frames) {
    CHECK(are_equal(f, m.frames.front()));
    CHECK(exponent_sum(f) == exponent_sum(m.frames.front()));
    CHECK(perm_of(f) == perm_of(m.frames.front()));
  }
}

TEST_CASE("the ten C-I moves instantiate to valid movies with shared endpoints") {
  struct Case {
    MoveId id;
    int i, j, k, n;
  };
  const Case cases[] = {
      {MoveId::CIR1, 1, 3, 0, 4}, {MoveId::CIR1p, 1, 0, 0, 2}, {MoveId::CIR2, 1, 3, 0, 4},
      {MoveId::CIR3, 1, 3, 5, 6}, {MoveId::CIR4, 1, 2, 4, 5},  {MoveId::CIM1, 1, 0, 0, 2},
      {MoveId::CIM2, 1, 0, 0, 2}, {MoveId::CIM3, 1, 2, 0, 3},  {MoveId::CIM4, 1, 2, 3, 4},
      {MoveId::CIM5, 1, 2, 0, 3},
  };
  for (const Case& c : cases) {
    CAPTURE(move_name(c.id));
    auto sides = instantiate_move(c.id, c.i, c.j, c.k, c.n, false, false, false);
    REQUIRE(sides.has_value());
    Movie left = side_movie(sides->first, c.n);
    Movie right = side_movie(sides->second, c.n);
    CHECK(validate_movie(left).ok);
    CHECK(validate_movie(right).ok);
    CHECK(left.frames.front() == right.frames.front());
    CHECK(left.frames.back() == right.frames.back());
    // transformed variants stay valid
    for (bool inv : {false, true})
      for (bool pal : {false, true})
        for (bool rev : {false, true}) {
          auto tr = instantiate_move(c.id, c.i, c.j, c.k, c.n, inv, pal, rev);
          REQUIRE(tr.has_value());
          CHECK(validate_movie(side_movie(tr->first, c.n)).ok);
          CHECK(validate_movie(side_movie(tr->second, c.n)).ok);
        }
    // applying the move in either direction keeps the movie valid and the
    // endpoints fixed
    for (bool forward : {true, false}) {
      Movie from = forward ? left : right;
      MoveStep step;
      step.move = c.id;
      step.forward = forward;
      step.i = c.i;
      step.j = c.j;
      step.k = c.k;
      step.frame = 0;
      Movie out = apply_move(from, step, /*enable_cim4=*/true);
      CHECK(validate_movie(out).ok);
      CHECK(out.frames.front() == from.frames.front());
      CHECK(out.frames.back() == from.frames.back());
      for (const BraidWord& f : out.frames) CHECK(are_equal(f, out.frames.front()));
    }
  }
}

TEST_CASE("move side conditions reject bad indices") {
  CHECK_FALSE(instantiate_move(MoveId::CIR1, 1, 2, 0, 4, false, false, false).has_value());
  CHECK_FALSE(instantiate_move(MoveId::CIM3, 1, 3, 0, 4, false, false, false).has_value());
  CHECK_FALSE(instantiate_move(MoveId::CIR1, 1, 3, 0, 3, false, false, false).has_value());
  CHECK_FALSE(instantiate_move(MoveId::CIM4, 1, 2, 4, 5, false, false, false).has_value());
}

TEST_CASE("applying a move rewrites the matched segment") {
  auto sides = instantiate_move(MoveId::CIM3, 1, 2, 0, 3, false, false, false);
  REQUIRE(sides);
  Movie left = side_movie(sides->first, 3);
  MoveStep step;
  step.move = MoveId::CIM3;
  step.i = 1;
  step.j = 2;
  step.frame = 0;
  Movie rewritten = apply_move(left, step);
  CHECK(rewritten.frames == sides->second.frames);
  CHECK(validate_movie(rewritten).ok);
  step.frame = 1;
  CHECK_THROWS_AS(apply_move(left, step), MoveError);
}

TEST_CASE("CI-M4 is gated") {
  auto sides = instantiate_move(MoveId::CIM4, 1, 2, 3, 4, false, false, false);
  REQUIRE(sides);
  Movie left = side_movie(sides->first, 4);
  MoveStep step;
  step.move = MoveId::CIM4;
  step.i = 1;
  step.j = 2;
  step.k = 3;
  step.frame = 0;
  CHECK_THROWS_AS(apply_move(left, step), MoveError);
  Movie rewritten = apply_move(left, step, /*enable_cim4=*/true);
  CHECK(rewritten.frames == sides->second.frames);
}

TEST_CASE("the gated CI-M4 certifies its own sides when enabled") {
  auto sides = instantiate_move(MoveId::CIM4, 1, 2, 3, 4, false, false, false);
  REQUIRE(sides);
  Movie left = side_movie(sides->first, 4);
  Movie right = side_movie(sides->second, 4);
  SearchOptions gated;
  gated.budget = 8;
  auto none = movie_equivalent(left, right, gated);
  CHECK_FALSE(none.has_value());  // unreachable while the move is gated
  SearchOptions enabled = gated;
  enabled.enable_cim4 = true;
  auto cert = movie_equivalent(left, right, enabled);
  REQUIRE(cert.has_value());
  CHECK(cert->steps.size() == 1);
  CHECK(cert->steps[0].move == MoveId::CIM4);
  CHECK(check_certificate(left, right, *cert, /*enable_cim4=*/true));
  CHECK_FALSE(check_certificate(left, right, *cert, /*enable_cim4=*/false));
}

TEST_CASE("locality change swaps independent elementary changes") {
  // two far-commutes acting on disjoint word factors
  Movie m = infer_changes(
      6, {make_word(6, {1, 3, 5, 1}), make_word(6, {3, 1, 5, 1}), make_word(6, {3, 1, 1, 5})});
  REQUIRE(validate_movie(m).ok);
  MoveStep step;
  step.move = MoveId::Locality;
  step.frame = 0;
  Movie swapped = apply_move(m, step);
  CHECK(validate_movie(swapped).ok);
  CHECK(swapped.frames.front() == m.frames.front());
  CHECK(swapped.frames.back() == m.frames.back());
  CHECK(swapped.frames[1] == make_word(6, {1, 3, 1, 5}));
  // dependent changes are rejected
  Movie dep = infer_changes(
      4, {make_word(4, {1, 3, 1}), make_word(4, {3, 1, 1}), make_word(4, {3, 1, 1, -1, 1})});
  MoveStep bad;
  bad.move = MoveId::Locality;
  bad.frame = 0;
  CHECK_NOTHROW(apply_move(dep, bad));  // insertion at the tail is independent
  Movie dep2 = infer_changes(4, {make_word(4, {1, 3}), make_word(4, {3, 1}),
                                 make_word(4, {1, 3})});
  MoveStep bad2;
  bad2.move = MoveId::Locality;
  bad2.frame = 0;
  CHECK_THROWS_AS(apply_move(dep2, bad2), MoveError);
}

TEST_CASE("segment alterations") {
  Movie m = infer_changes(2, {make_word(2, {}), make_word(2, {1, -1}), make_word(2, {})});
  MoveStep inv;
  inv.move = MoveId::InvertLetters;
  inv.frame = 0;
  inv.len = 3;
  Movie flipped = apply_move(m, inv);
  CHECK(validate_movie(flipped).ok);
  CHECK(flipped.frames[1] == make_word(2, {-1, 1}));

  MoveStep rev;
  rev.move = MoveId::ReverseSegment;
  rev.frame = 0;
  rev.len = 3;
  Movie reversed = apply_move(m, rev);
  CHECK(validate_movie(reversed).ok);
  CHECK(reversed.frames == m.frames);

  Movie asym = infer_changes(3, {make_word(3, {1, 2}), make_word(3, {1, 2, -2, 2})});
  MoveStep pal;
  pal.move = MoveId::Palindrome;
  pal.frame = 0;
  pal.len = 2;
  CHECK_THROWS_AS(apply_move(asym, pal), MoveError);  // boundary frames not palindromic
}

TEST_CASE("certificate search finds one-step certificates for move instances") {
  auto sides = instantiate_move(MoveId::CIM1, 1, 0, 0, 2, false, false, false);
  REQUIRE(sides);
  Movie left = side_movie(sides->first, 2);
  Movie right = side_movie(sides->second, 2);
  SearchOptions opts;
  opts.budget = 8;
  auto cert = movie_equivalent(left, right, opts);
  REQUIRE(cert.has_value());
  CHECK(cert->steps.size() == 1);
  CHECK(check_certificate(left, right, *cert));
  // the empty certificate certifies a movie against itself
  auto self_cert = movie_equivalent(left, left, opts);
  REQUIRE(self_cert.has_value());
  CHECK(self_cert->steps.empty());
  // corrupted certificates fail the replay check
  Certificate corrupt = *cert;
  corrupt.steps[0].frame += 1;
  CHECK_FALSE(check_certificate(left, right, corrupt));
}

TEST_CASE("search finds multi-step certificates") {
  // stack two expansions onto the one-frame movie [s1 s2 s1]
  Movie base = constant_movie(make_word(3, {1, 2, 1}));
  MoveStep expand;
  expand.move = MoveId::CIM3;
  expand.forward = false;  // match the single-frame side, insert the detour
  expand.i = 1;
  expand.j = 2;
  expand.frame = 0;
  Movie once = apply_move(base, expand);
  expand.frame = 2;
  Movie twice = apply_move(once, expand);
  REQUIRE(validate_movie(twice).ok);
  CHECK(twice.frames.size() == 5);
  SearchOptions opts;
  opts.budget = 3;
  auto cert = movie_equivalent(twice, base, opts);
  REQUIRE(cert.has_value());
  CHECK(cert->steps.size() == 2);
  CHECK(check_certificate(twice, base, *cert));
  auto there = movie_equivalent(base, twice, opts);
  REQUIRE(there.has_value());
  CHECK(check_certificate(base, twice, *there));
  // multi-step searches are thread-count independent too
  SearchOptions fanned = opts;
  fanned.threads = 4;
  auto cert4 = movie_equivalent(twice, base, fanned);
  REQUIRE(cert4.has_value());
  CHECK(cert4->steps == cert->steps);
}

TEST_CASE("the braiding triangle identity compiles to the CI-R1' word sequence") {
  // R => R.R'.R => R, built from the unit and counit of the braiding
  CellPtr r = braid(X, Y);
  TwoPtr stretch = hcomp(id2(r), eta_b(X, Y));
  TwoPtr contract = hcomp(eps_b(X, Y), id2(r));
  TwoPtr triangle = vcomp(contract, stretch);
  CHECK(well_formed(triangle, GenSet::of({"x", "y"})).ok);
  Movie m = compile_two_cell(triangle);
  REQUIRE(validate_movie(m).ok);
  CHECK(m.frames ==
        std::vector<BraidWord>{make_word(2, {1}), make_word(2, {1, -1, 1}), make_word(2, {1})});
  // exactly the left word sequence of CI-R1'; one move certifies it away
  SearchOptions opts;
  opts.budget = 8;
  auto cert = movie_equivalent(m, constant_movie(make_word(2, {1})), opts);
  REQUIRE(cert.has_value());
  CHECK(cert->steps.size() == 1);
  CHECK(cert->steps[0].move == MoveId::CIR1p);
  // the decision layer agrees: the triangle composite equals the identity
  DecisionReport rep =
      two_cells_equal(triangle, id2(r), GenSet::of({"x", "y"}));
  CHECK(rep.verdict);
}

TEST_CASE("compiled movies have are_equal frames") {
  ObjPtr xx = tensor_obj(X, X);
  TwoPtr cells[] = {eta_b(xx, xx), eps_b(X, Y), interchange(braid(X, Y), braid(X, Y))};
  for (const TwoPtr& a : cells) {
    Movie m = compile_two_cell(a);
    for (const BraidWord& f : m.frames) CHECK(are_equal(f, m.frames.front()));
  }
}

TEST_CASE("search rejects mismatched endpoints") {
  Movie a = constant_movie(make_word(2, {1}));
  Movie b = constant_movie(make_word(2, {-1}));
  CHECK_THROWS_AS(movie_equivalent(a, b, SearchOptions{}), MoveError);
}

TEST_CASE("parallel search matches the serial result") {
  auto sides = instantiate_move(MoveId::CIM5, 1, 2, 0, 3, false, false, false);
  REQUIRE(sides);
  Movie left = side_movie(sides->first, 3);
  Movie right = side_movie(sides->second, 3);
  SearchOptions serial;
  serial.budget = 4;
  SearchOptions parallel = serial;
  parallel.threads = 4;
  auto c1 = movie_equivalent(left, right, serial);
  auto c2 = movie_equivalent(left, right, parallel);
  REQUIRE(c1.has_value());
  REQUIRE(c2.has_value());
  CHECK(c1->steps == c2->steps);
}

TEST_CASE("compile: identity and braiding units") {
  Movie m = compile_two_cell(id2(braid(X, Y)));
  CHECK(m.frames.size() == 1);
  CHECK(m.frames[0] == make_word(2, {1}));

  Movie eta = compile_two_cell(eta_b(X, Y));
  CHECK(validate_movie(eta).ok);
  CHECK(eta.frames.front() == make_word(2, {}));
  CHECK(eta.frames.back() == make_word(2, {1, -1}));
  CHECK(eta.changes.size() == 1);
  CHECK(eta.changes[0].kind == ChangeKind::PairInsert);

  Movie eps = compile_two_cell(eps_b(X, Y));
  CHECK(validate_movie(eps).ok);
  CHECK(eps.frames.front() == make_word(2, {-1, 1}));
  CHECK(eps.frames.back() == make_word(2, {}));

  // compound blocks insert one pair per crossing
  ObjPtr xx = tensor_obj(X, X);
  Movie eta2 = compile_two_cell(eta_b(xx, xx));
  CHECK(validate_movie(eta2).ok);
  CHECK(eta2.frames.size() == 5);
  CHECK(is_trivial(eta2.frames.back()));
}

TEST_CASE("compile: whiskering embeds movies") {
  TwoPtr whiskered = whisker_after(braid(X, Y), eta_b(X, Y));
  Movie m = compile_two_cell(whiskered);
  CHECK(validate_movie(m).ok);
  CHECK(m.frames.front() == make_word(2, {1}));
  CHECK(m.frames.back() == make_word(2, {1, -1, 1}));

  TwoPtr tensored = tensor2(id2(braid(X, Y)), eta_b(X, Y));
  Movie t = compile_two_cell(tensored);
  CHECK(validate_movie(t).ok);
  CHECK(t.frames.front() == make_word(4, {1}));
  CHECK(t.frames.back() == make_word(4, {1, 3, -3}));
}

TEST_CASE("compile: interchange is a far-commute ladder") {
  TwoPtr cell = interchange(braid(X, Y), braid(X, Y));
  Movie m = compile_two_cell(cell);
  CHECK(validate_movie(m).ok);
  CHECK(m.frames.front() == make_word(4, {3, 1}));
  CHECK(m.frames.back() == make_word(4, {1, 3}));
  CHECK(m.changes.size() == 1);
  CHECK(m.changes[0].kind == ChangeKind::FarCommute);
}

TEST_CASE("compile: hexagonators at generators are constant") {
  ObjPtr Z = gen_obj("z");
  Movie hl = compile_two_cell(hex_l(X, Y, Z));
  CHECK(hl.frames.size() == 1);
  CHECK(hl.frames[0] == make_word(3, {1, 2}));
  Movie hr = compile_two_cell(hex_r(X, Y, Z));
  CHECK(hr.frames.size() == 1);
  CHECK(hr.frames[0] == make_word(3, {2, 1}));
  // at compound objects the boundary words differ letterwise
  CHECK_THROWS_AS(compile_two_cell(hex_l(tensor_obj(X, X), Y, Z)), UnsupportedCell);
}

TEST_CASE("compile endpoints equal the boundary evaluations") {
  TwoPtr cells[] = {eta_b(X, Y),
                    eps_b(X, Y),
                    inv2(eta_b(X, Y)),
                    mu_cell(X, Y),
                    interchange(braid(X, Y), braid(Y, X)),
                    funct2(braid(X, Y), braid(Y, X), braid(X, Y), braid(Y, X)),
                    nat_b(id_cell(X), braid(X, X)),
                    vcomp(inv2(eta_b(X, Y)), eta_b(X, Y))};
  for (const TwoPtr& a : cells) {
    CAPTURE(two_to_text(a));
    Movie m = compile_two_cell(a);
    CHECK(validate_movie(m).ok);
    auto [s, t] = boundary2(a);
    CHECK(m.frames.front() == eval_one_cell(s).word);
    CHECK(m.frames.back() == eval_one_cell(t).word);
  }
}

TEST_CASE("random supported 2-cells compile to valid movies with matching endpoints") {
  bicoh_tests::TermGen gen(0x2ce11, GenSet::of({"x", "y"}));
  // random 2-cell from the supported table whose boundary source starts at
  // the given object
  auto atom = [&](auto&& self, const ObjPtr& obj, int depth) -> TwoPtr {
    int roll = gen.pick(depth <= 0 ? 2 : 8);
    if (obj->kind == ObjKind::Tensor) {
      switch (roll) {
        case 2: return eta_b(obj->left, obj->right);
        case 3: return eps_b(obj->right, obj->left);
        case 4: return mu_cell(obj->left, obj->right);
        case 5:
          return interchange(gen.random_cell(obj->left, 2), gen.random_cell(obj->right, 2));
        case 6: return tensor2(self(self, obj->left, depth - 1), self(self, obj->right, depth - 1));
        default: break;
      }
    }
    if (roll == 7) {
      TwoPtr first = self(self, obj, depth - 1);
      TwoPtr second = self(self, tgt_obj(boundary2(first).first), depth - 1);
      return hcomp(second, first);
    }
    if (roll == 1) {
      TwoPtr inner = self(self, obj, depth - 1);
      return vcomp(inv2(inner), inner);
    }
    return id2(gen.random_cell(obj, 2));
  };
  GenSet gs = GenSet::of({"x", "y"});
  for (int trial = 0; trial < 400; ++trial) {
    ObjPtr obj = gen.random_obj(2);
    TwoPtr cell = atom(atom, obj, 3);
    REQUIRE(well_formed(cell, gs).ok);
    Movie m = compile_two_cell(cell);
    CAPTURE(two_to_text(cell));
    CHECK(validate_movie(m).ok);
    auto [s, t] = boundary2(cell);
    CHECK(m.frames.front() == eval_one_cell(s).word);
    CHECK(m.frames.back() == eval_one_cell(t).word);
    for (const BraidWord& f : m.frames) CHECK(are_equal(f, m.frames.front()));
  }
}

TEST_CASE("movie text round trip") {
  Movie m = infer_changes(3, {make_word(3, {1, 2, 1}), make_word(3, {2, 1, 2}),
                              make_word(3, {2, 1, 2, -1, 1})});
  std::string text = movie_to_text(m);
  Movie back = movie_from_text(text);
  CHECK(back == m);
  // annotations may be omitted; changes are then inferred
  Movie inferred = movie_from_text("n=3\nn=3 s1 s2 s1\nn=3 s2 s1 s2\n");
  CHECK(validate_movie(inferred).ok);
  CHECK(inferred.changes[0].kind == ChangeKind::BraidRelation);
  // format problems are parse errors, unrelatable frames are movie errors
  CHECK_THROWS_AS(movie_from_text("n=3\nn=2 s1\n"), ParseError);
  CHECK_THROWS_AS(movie_from_text("s1 s2\n"), ParseError);
  CHECK_THROWS_AS(movie_from_text("n=3\nn=3\nn=3 s1\n"), MoveError);
}

TEST_CASE("certificate text round trip") {
  Certificate cert;
  MoveStep s1;
  s1.move = MoveId::CIM3;
  s1.i = 1;
  s1.j = 2;
  s1.frame = 4;
  MoveStep s2;
  s2.move = MoveId::Locality;
  s2.frame = 2;
  MoveStep s3;
  s3.move = MoveId::CIR1;
  s3.forward = false;
  s3.inverted = true;
  s3.i = 1;
  s3.j = 3;
  s3.frame = 0;
  cert.steps = {s1, s2, s3};
  Certificate back = certificate_from_text(certificate_to_text(cert));
  CHECK(back.steps == cert.steps);
}
