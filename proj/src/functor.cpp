#include "bicoh/functor.hpp"

#include <stdexcept>

namespace bicoh {

BraidWord block_braid(int p, int q, int sign) {
  if (p < 0 || q < 0) throw std::invalid_argument("block_braid: negative block size");
  if (sign != 1 && sign != -1) throw std::invalid_argument("block_braid: sign must be +-1");
  BraidWord w{p + q, {}};
  for (int k = p; k >= 1; --k)
    for (int m = 0; m < q; ++m) w.letters.push_back({k + m, +1});
  if (sign < 0) w = inverse_word(w);
  return w;
}

namespace {

BraidWord eval_word(const CellPtr& c) {
  switch (c->kind) {
    case CellKind::Id:
    case CellKind::Assoc:
    case CellKind::AssocInv:
    case CellKind::LUnit:
    case CellKind::LUnitInv:
    case CellKind::RUnit:
    case CellKind::RUnitInv: return BraidWord{strand_count(src_obj(c)), {}};
    case CellKind::Braid:
      return block_braid(strand_count(c->objs[0]), strand_count(c->objs[1]), +1);
    case CellKind::BraidInv:
      return block_braid(strand_count(c->objs[0]), strand_count(c->objs[1]), -1);
    case CellKind::Compose: {
      BraidWord f = eval_word(c->fst);
      BraidWord g = eval_word(c->snd);
      if (f.strands != g.strands) throw std::invalid_argument("eval: ill-formed composition");
      return concat(f, g);
    }
    case CellKind::Tensor: {
      BraidWord l = eval_word(c->snd);
      BraidWord r = eval_word(c->fst);
      int nl = strand_count(src_obj(c->snd));
      int nr = strand_count(src_obj(c->fst));
      BraidWord out{nl + nr, {}};
      for (const BraidLetter& x : l.letters) out.letters.push_back(x);
      for (const BraidLetter& x : r.letters) out.letters.push_back({x.index + nl, x.sign});
      check_word(out);
      return out;
    }
  }
  throw std::logic_error("eval_word: bad kind");
}

bool left_nested_unit_free(const ObjPtr& x) {
  switch (x->kind) {
    case ObjKind::Unit: return false;
    case ObjKind::Gen: return true;
    case ObjKind::Tensor:
      return x->right->kind == ObjKind::Gen && left_nested_unit_free(x->left);
  }
  return false;
}

// Folds an arbitrary right factor into an already left-nested left factor.
CellPtr merge_left(const ObjPtr& lhs, const ObjPtr& rhs) {
  if (lhs->kind == ObjKind::Unit) return compose(to_left_nested(rhs), lunit(rhs));
  switch (rhs->kind) {
    case ObjKind::Gen: return id_cell(tensor_obj(lhs, rhs));
    case ObjKind::Unit: return runit(lhs);
    case ObjKind::Tensor: {
      CellPtr step1 = assoc_inv(lhs, rhs->left, rhs->right);
      CellPtr inner = merge_left(lhs, rhs->left);
      ObjPtr mid = tgt_obj(inner);
      CellPtr step2 = tensor_cell(inner, id_cell(rhs->right));
      CellPtr step3 = merge_left(mid, rhs->right);
      return compose(step3, compose(step2, step1));
    }
  }
  throw std::logic_error("merge_left: bad kind");
}

}  // namespace

LabeledBraid eval_one_cell(const CellPtr& c) {
  LabeledBraid out;
  out.source_labels = obj_flatten(src_obj(c));
  out.word = eval_word(c);
  return out;
}

CellPtr to_left_nested(const ObjPtr& x) {
  if (left_nested_unit_free(x) || x->kind == ObjKind::Unit) return id_cell(x);
  if (x->kind == ObjKind::Tensor) {
    CellPtr left_fix = to_left_nested(x->left);
    CellPtr step1 = tensor_cell(left_fix, id_cell(x->right));
    CellPtr step2 = merge_left(tgt_obj(left_fix), x->right);
    return compose(step2, step1);
  }
  return id_cell(x);
}

CellPtr rebracket(const ObjPtr& from, const ObjPtr& to) {
  if (obj_flatten(from) != obj_flatten(to))
    throw std::invalid_argument("rebracket: objects flatten differently (" + obj_to_text(from) +
                                " vs " + obj_to_text(to) + ")");
  return compose(invert_cell(to_left_nested(to)), to_left_nested(from));
}

CellPtr sigma_composite(int k, int i, const ObjPtr& g) {
  if (k < 2 || i < 1 || i > k - 1)
    throw std::invalid_argument("sigma_composite: need 1 <= i <= k-1, k >= 2");
  std::vector<ObjPtr> parts;
  std::vector<CellPtr> strands;
  for (int m = 1; m <= k; ++m) {
    if (m == i) {
      parts.push_back(tensor_obj(g, g));
      strands.push_back(braid(g, g));
      ++m;  // the pair consumed positions i and i+1
    } else {
      parts.push_back(g);
      strands.push_back(id_cell(g));
    }
  }
  ObjPtr shaped = tensor_chain(parts);
  CellPtr whisker = strands[0];
  for (std::size_t j = 1; j < strands.size(); ++j) whisker = tensor_cell(whisker, strands[j]);

  std::vector<ObjPtr> flat(static_cast<std::size_t>(k), g);
  ObjPtr canonical = tensor_chain(flat);
  CellPtr in = rebracket(canonical, shaped);
  return compose(invert_cell(in), compose(whisker, in));
}

bool is_coherence_only(const CellPtr& c) {
  switch (c->kind) {
    case CellKind::Braid:
    case CellKind::BraidInv: return false;
    case CellKind::Tensor:
    case CellKind::Compose: return is_coherence_only(c->snd) && is_coherence_only(c->fst);
    default: return true;
  }
}

}  // namespace bicoh
