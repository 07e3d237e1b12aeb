#include "bicoh/coherence.hpp"

#include <stdexcept>

namespace bicoh {

std::string reason_name(DecisionReason r) {
  switch (r) {
    case DecisionReason::ObjectMismatch: return "ObjectMismatch";
    case DecisionReason::LabelMismatch: return "LabelMismatch";
    case DecisionReason::BraidDiffer: return "BraidDiffer";
    case DecisionReason::Isomorphic: return "Isomorphic";
    case DecisionReason::ParallelEqual: return "ParallelEqual";
  }
  return "?";
}

DecisionReport iso_exists(const CellPtr& f, const CellPtr& g, const GenSet& gens) {
  if (auto r = well_formed(f, gens); !r) throw std::invalid_argument("left term: " + r.message);
  if (auto r = well_formed(g, gens); !r) throw std::invalid_argument("right term: " + r.message);
  DecisionReport rep;
  rep.left_braid = eval_one_cell(f);
  rep.right_braid = eval_one_cell(g);
  if (!obj_equal(src_obj(f), src_obj(g)) || !obj_equal(tgt_obj(f), tgt_obj(g))) {
    rep.reason = DecisionReason::ObjectMismatch;
    rep.detail = "the 1-cells are not parallel: " + obj_to_text(src_obj(f)) + " -> " +
                 obj_to_text(tgt_obj(f)) + " vs " + obj_to_text(src_obj(g)) + " -> " +
                 obj_to_text(tgt_obj(g));
    return rep;
  }
  if (rep.left_braid.source_labels != rep.right_braid.source_labels) {
    rep.reason = DecisionReason::LabelMismatch;
    return rep;
  }
  if (!are_equal(rep.left_braid.word, rep.right_braid.word)) {
    rep.reason = DecisionReason::BraidDiffer;
    rep.detail = "braids differ: " + word_to_text(rep.left_braid.word) + " vs " +
                 word_to_text(rep.right_braid.word);
    return rep;
  }
  rep.verdict = true;
  rep.reason = DecisionReason::Isomorphic;
  return rep;
}

DecisionReport two_cells_equal(const TwoPtr& a, const TwoPtr& b, const GenSet& gens) {
  if (auto r = well_formed(a, gens); !r) throw std::invalid_argument("left 2-cell: " + r.message);
  if (auto r = well_formed(b, gens); !r) throw std::invalid_argument("right 2-cell: " + r.message);
  auto [sa, ta] = boundary2(a);
  auto [sb, tb] = boundary2(b);
  DecisionReport rep;
  rep.left_braid = eval_one_cell(sa);
  rep.right_braid = eval_one_cell(sb);
  bool objects_match = obj_equal(src_obj(sa), src_obj(sb)) && obj_equal(tgt_obj(sa), tgt_obj(sb)) &&
                       obj_equal(src_obj(ta), src_obj(tb)) && obj_equal(tgt_obj(ta), tgt_obj(tb));
  if (!objects_match) {
    rep.reason = DecisionReason::ObjectMismatch;
    rep.detail = "boundary objects differ";
    return rep;
  }
  if (!cell_equal(sa, sb) || !cell_equal(ta, tb)) {
    rep.reason = DecisionReason::BraidDiffer;
    rep.detail = "the 2-cells are not parallel: boundaries " + cell_to_text(sa) + " => " +
                 cell_to_text(ta) + " vs " + cell_to_text(sb) + " => " + cell_to_text(tb);
    return rep;
  }
  rep.verdict = true;
  rep.reason = DecisionReason::ParallelEqual;
  return rep;
}

LabeledBraid gr_braiding(const StringObject& x, const StringObject& y) {
  LabeledBraid out;
  out.source_labels = x;
  out.source_labels.insert(out.source_labels.end(), y.begin(), y.end());
  if (x.empty() || y.empty()) {
    out.word = BraidWord{static_cast<int>(out.source_labels.size()), {}};
    return out;
  }
  out.word = block_braid(static_cast<int>(x.size()), static_cast<int>(y.size()), +1);
  return out;
}

namespace {

// Boundary words of the hexagonator instances in the strict string model,
// by block sizes.
std::pair<BraidWord, BraidWord> gr_hex_l_words(int x, int y, int z) {
  int n = x + y + z;
  BraidWord lhs = shift_word(block_braid(x, y, +1), 0, n);
  lhs = concat(lhs, shift_word(block_braid(x, z, +1), y, n));
  BraidWord rhs = shift_word(block_braid(x, y + z, +1), 0, n);
  return {lhs, rhs};
}

std::pair<BraidWord, BraidWord> gr_hex_r_words(int x, int y, int z) {
  int n = x + y + z;
  BraidWord lhs = shift_word(block_braid(y, z, +1), x, n);
  lhs = concat(lhs, shift_word(block_braid(x, z, +1), 0, n));
  BraidWord rhs = shift_word(block_braid(x + y, z, +1), 0, n);
  return {lhs, rhs};
}

std::vector<StringObject> strings_up_to(const GenSet& gens, int max_len) {
  std::vector<StringObject> out{{}};
  std::size_t start = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = start; i < end; ++i)
      for (const std::string& g : gens.names) {
        StringObject s = out[i];
        s.push_back(g);
        out.push_back(std::move(s));
      }
    start = end;
  }
  return out;
}

}  // namespace

CransReport crans_unit_checks(const GenSet& gens, int max_len) {
  CransReport rep;
  rep.conditions = {"R[empty,B] is the identity", "R[A,empty] is the identity",
                    "R_(A|B,I) boundaries coincide", "R_(A|I,B) boundaries coincide",
                    "R_(I|A,B) boundaries are empty", "R_(A,I|B) boundaries coincide",
                    "R_(I,A|B) boundaries coincide", "R_(A,B|I) boundaries are empty"};
  auto record = [&](bool pass, const std::string& cond, const std::string& detail) {
    ++rep.instances;
    if (!pass) {
      rep.ok = false;
      rep.failures.push_back({cond, false, detail});
    }
  };
  std::vector<StringObject> strings = strings_up_to(gens, max_len);
  for (const StringObject& a : strings) {
    record(gr_braiding({}, a).word.letters.empty(), rep.conditions[0], "B=" + std::to_string(a.size()));
    record(gr_braiding(a, {}).word.letters.empty(), rep.conditions[1], "A=" + std::to_string(a.size()));
  }
  for (const StringObject& a : strings)
    for (const StringObject& b : strings) {
      int la = static_cast<int>(a.size());
      int lb = static_cast<int>(b.size());
      std::string at = " at |A|=" + std::to_string(la) + ", |B|=" + std::to_string(lb);
      {
        auto [lhs, rhs] = gr_hex_l_words(la, lb, 0);
        record(lhs == rhs, rep.conditions[2], "words differ" + at);
      }
      {
        auto [lhs, rhs] = gr_hex_l_words(la, 0, lb);
        record(lhs == rhs, rep.conditions[3], "words differ" + at);
      }
      {
        auto [lhs, rhs] = gr_hex_l_words(0, la, lb);
        record(lhs == rhs && lhs.letters.empty(), rep.conditions[4], "words not empty" + at);
      }
      {
        auto [lhs, rhs] = gr_hex_r_words(la, 0, lb);
        record(lhs == rhs, rep.conditions[5], "words differ" + at);
      }
      {
        auto [lhs, rhs] = gr_hex_r_words(0, la, lb);
        record(lhs == rhs, rep.conditions[6], "words differ" + at);
      }
      {
        auto [lhs, rhs] = gr_hex_r_words(la, lb, 0);
        record(lhs == rhs && lhs.letters.empty(), rep.conditions[7], "words not empty" + at);
      }
    }
  return rep;
}

FourthAxiomPastings fourth_axiom_pastings(const ObjPtr& a, const ObjPtr& b, const ObjPtr& c) {
  // Step-by-step path: (AB)C -> (BA)C -> B(AC) -> B(CA) -> (BC)A -> (CB)A.
  CellPtr t1 = tensor_cell(braid(a, b), id_cell(c));
  CellPtr t2 = assoc(b, a, c);
  CellPtr t3 = tensor_cell(id_cell(b), braid(a, c));
  CellPtr t4 = assoc_inv(b, c, a);
  CellPtr t5 = tensor_cell(braid(b, c), id_cell(a));
  CellPtr top = compose_chain({t1, t2, t3, t4, t5});

  // (AB)C -> A(BC) -> A(CB) -> (AC)B -> (CA)B -> C(AB) -> C(BA) -> (CB)A.
  CellPtr b1 = assoc(a, b, c);
  CellPtr b2 = tensor_cell(id_cell(a), braid(b, c));
  CellPtr b3 = assoc_inv(a, c, b);
  CellPtr b4 = tensor_cell(braid(a, c), id_cell(b));
  CellPtr b5 = assoc(c, a, b);
  CellPtr b6 = tensor_cell(id_cell(c), braid(a, b));
  CellPtr b7 = assoc_inv(c, b, a);
  CellPtr bottom = compose_chain({b1, b2, b3, b4, b5, b6, b7});

  ObjPtr bc = tensor_obj(b, c);
  ObjPtr cb = tensor_obj(c, b);
  ObjPtr ab = tensor_obj(a, b);

  // Route through R_{A,BC}: hexagonator on the first three factors, the
  // naturality square of the braiding against R_{B,C}, then the inverse
  // hexagonator, with unit/counit cells managing the associator pairs.
  TwoPtr l1 = whisker_after(compose_chain({t4, t5}), hex_l(a, b, c));
  TwoPtr l2 = hcomp(id2(t5), hcomp(inv2(eta_a(b, c, a)), id2(compose_chain({b1, braid(a, bc)}))));
  TwoPtr l3 = hcomp(inv2(nat_b(id_cell(a), braid(b, c))), id2(b1));
  TwoPtr l4 = hcomp(id2(braid(a, cb)), hcomp(inv2(eps_a(a, c, b)), id2(compose_chain({b1, b2}))));
  TwoPtr l5 = hcomp(eta_a(c, b, a), id2(compose_chain({b1, b2, b3, assoc(a, c, b), braid(a, cb)})));
  TwoPtr l6 = hcomp(id2(b7), hcomp(inv2(hex_l(a, c, b)), id2(compose_chain({b1, b2, b3}))));
  TwoPtr lhs = vcomp(l6, vcomp(l5, vcomp(l4, vcomp(l3, vcomp(l2, l1)))));

  // Route through R_{AB,C}: the mirror-image pasting.
  TwoPtr r1 = hcomp(hex_r(b, a, c), id2(compose_chain({t1, t2})));
  TwoPtr r2 =
      hcomp(id2(compose_chain({braid(tensor_obj(b, a), c), b7})), hcomp(inv2(eta_a(b, a, c)), id2(t1)));
  TwoPtr r3 = hcomp(id2(b7), nat_b(braid(a, b), id_cell(c)));
  TwoPtr r4 = hcomp(id2(compose_chain({braid(ab, c), b6, b7})), eta_a(a, b, c));
  TwoPtr r5 = hcomp(id2(compose_chain({b6, b7})),
                    hcomp(inv2(eps_a(c, a, b)), id2(compose_chain({b1, assoc_inv(a, b, c), braid(ab, c)}))));
  TwoPtr r6 = hcomp(id2(compose_chain({b5, b6, b7})), hcomp(inv2(hex_r(a, b, c)), id2(b1)));
  TwoPtr rhs = vcomp(r6, vcomp(r5, vcomp(r4, vcomp(r3, vcomp(r2, r1)))));

  return FourthAxiomPastings{top, bottom, lhs, rhs};
}

}  // namespace bicoh
