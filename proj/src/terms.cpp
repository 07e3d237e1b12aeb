#include "bicoh/terms.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace bicoh {

namespace {

ObjPtr make_obj(Obj o) { return std::make_shared<const Obj>(std::move(o)); }
CellPtr make_cell(Cell c) { return std::make_shared<const Cell>(std::move(c)); }
TwoPtr make_two(Two t) { return std::make_shared<const Two>(std::move(t)); }

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

bool GenSet::contains(const std::string& name) const {
  return std::find(names.begin(), names.end(), name) != names.end();
}

GenSet GenSet::of(std::initializer_list<std::string> names) {
  return of(std::vector<std::string>(names));
}

GenSet GenSet::of(std::vector<std::string> names) {
  std::unordered_set<std::string> seen;
  for (const std::string& n : names) {
    if (n.empty()) throw std::invalid_argument("empty generator name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate generator name: " + n);
  }
  return GenSet{std::move(names)};
}

ObjPtr unit_obj() {
  static const ObjPtr u = make_obj({ObjKind::Unit, "", nullptr, nullptr});
  return u;
}

ObjPtr gen_obj(std::string name) {
  require(!name.empty(), "generator name must be non-empty");
  return make_obj({ObjKind::Gen, std::move(name), nullptr, nullptr});
}

ObjPtr tensor_obj(ObjPtr left, ObjPtr right) {
  require(left && right, "tensor_obj: null operand");
  return make_obj({ObjKind::Tensor, "", std::move(left), std::move(right)});
}

ObjPtr tensor_chain(const std::vector<ObjPtr>& parts) {
  if (parts.empty()) return unit_obj();
  ObjPtr acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) acc = tensor_obj(acc, parts[i]);
  return acc;
}

bool obj_equal(const ObjPtr& a, const ObjPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ObjKind::Unit: return true;
    case ObjKind::Gen: return a->name == b->name;
    case ObjKind::Tensor: return obj_equal(a->left, b->left) && obj_equal(a->right, b->right);
  }
  return false;
}

static void flatten_into(const ObjPtr& x, std::vector<std::string>& out) {
  switch (x->kind) {
    case ObjKind::Unit: return;
    case ObjKind::Gen: out.push_back(x->name); return;
    case ObjKind::Tensor:
      flatten_into(x->left, out);
      flatten_into(x->right, out);
      return;
  }
}

std::vector<std::string> obj_flatten(const ObjPtr& x) {
  std::vector<std::string> out;
  flatten_into(x, out);
  return out;
}

int strand_count(const ObjPtr& x) {
  switch (x->kind) {
    case ObjKind::Unit: return 0;
    case ObjKind::Gen: return 1;
    case ObjKind::Tensor: return strand_count(x->left) + strand_count(x->right);
  }
  return 0;
}

std::string obj_to_text(const ObjPtr& x) {
  switch (x->kind) {
    case ObjKind::Unit: return "I";
    case ObjKind::Gen: return x->name;
    case ObjKind::Tensor: return "(" + obj_to_text(x->left) + "*" + obj_to_text(x->right) + ")";
  }
  return "?";
}

// ── 1-cells ─────────────────────────────────────────────────────────────────

CellPtr id_cell(ObjPtr x) { return make_cell({CellKind::Id, {std::move(x)}, nullptr, nullptr}); }

CellPtr assoc(ObjPtr x, ObjPtr y, ObjPtr z) {
  return make_cell({CellKind::Assoc, {std::move(x), std::move(y), std::move(z)}, nullptr, nullptr});
}

CellPtr assoc_inv(ObjPtr x, ObjPtr y, ObjPtr z) {
  return make_cell(
      {CellKind::AssocInv, {std::move(x), std::move(y), std::move(z)}, nullptr, nullptr});
}

CellPtr lunit(ObjPtr x) { return make_cell({CellKind::LUnit, {std::move(x)}, nullptr, nullptr}); }
CellPtr lunit_inv(ObjPtr x) {
  return make_cell({CellKind::LUnitInv, {std::move(x)}, nullptr, nullptr});
}
CellPtr runit(ObjPtr x) { return make_cell({CellKind::RUnit, {std::move(x)}, nullptr, nullptr}); }
CellPtr runit_inv(ObjPtr x) {
  return make_cell({CellKind::RUnitInv, {std::move(x)}, nullptr, nullptr});
}

CellPtr braid(ObjPtr x, ObjPtr y) {
  return make_cell({CellKind::Braid, {std::move(x), std::move(y)}, nullptr, nullptr});
}
CellPtr braid_inv(ObjPtr x, ObjPtr y) {
  return make_cell({CellKind::BraidInv, {std::move(x), std::move(y)}, nullptr, nullptr});
}

CellPtr tensor_cell(CellPtr left, CellPtr right) {
  require(left && right, "tensor_cell: null operand");
  return make_cell({CellKind::Tensor, {}, std::move(left), std::move(right)});
}

CellPtr compose(CellPtr g, CellPtr f) {
  require(g && f, "compose: null operand");
  if (!obj_equal(tgt_obj(f), src_obj(g)))
    return make_cell({CellKind::Compose, {}, std::move(g), std::move(f)});
  if (f->kind == CellKind::Id) return g;
  if (g->kind == CellKind::Id) return f;
  if (g->kind == CellKind::Compose) return compose(g->snd, compose(g->fst, std::move(f)));
  return make_cell({CellKind::Compose, {}, std::move(g), std::move(f)});
}

CellPtr compose_chain(const std::vector<CellPtr>& diagram_order) {
  require(!diagram_order.empty(), "compose_chain: empty chain");
  CellPtr acc = diagram_order.front();
  for (std::size_t i = 1; i < diagram_order.size(); ++i) acc = compose(diagram_order[i], acc);
  return acc;
}

CellPtr invert_cell(const CellPtr& c) {
  switch (c->kind) {
    case CellKind::Id: return c;
    case CellKind::Assoc: return assoc_inv(c->objs[0], c->objs[1], c->objs[2]);
    case CellKind::AssocInv: return assoc(c->objs[0], c->objs[1], c->objs[2]);
    case CellKind::LUnit: return lunit_inv(c->objs[0]);
    case CellKind::LUnitInv: return lunit(c->objs[0]);
    case CellKind::RUnit: return runit_inv(c->objs[0]);
    case CellKind::RUnitInv: return runit(c->objs[0]);
    case CellKind::Braid: return braid_inv(c->objs[0], c->objs[1]);
    case CellKind::BraidInv: return braid(c->objs[0], c->objs[1]);
    case CellKind::Tensor: return tensor_cell(invert_cell(c->snd), invert_cell(c->fst));
    case CellKind::Compose: return compose(invert_cell(c->fst), invert_cell(c->snd));
  }
  throw std::logic_error("invert_cell: bad kind");
}

ObjPtr src_obj(const CellPtr& c) {
  switch (c->kind) {
    case CellKind::Id: return c->objs[0];
    case CellKind::Assoc: return tensor_obj(tensor_obj(c->objs[0], c->objs[1]), c->objs[2]);
    case CellKind::AssocInv: return tensor_obj(c->objs[0], tensor_obj(c->objs[1], c->objs[2]));
    case CellKind::LUnit: return tensor_obj(unit_obj(), c->objs[0]);
    case CellKind::LUnitInv: return c->objs[0];
    case CellKind::RUnit: return tensor_obj(c->objs[0], unit_obj());
    case CellKind::RUnitInv: return c->objs[0];
    case CellKind::Braid: return tensor_obj(c->objs[0], c->objs[1]);
    case CellKind::BraidInv: return tensor_obj(c->objs[1], c->objs[0]);
    case CellKind::Tensor: return tensor_obj(src_obj(c->snd), src_obj(c->fst));
    case CellKind::Compose: return src_obj(c->fst);
  }
  throw std::logic_error("src_obj: bad kind");
}

ObjPtr tgt_obj(const CellPtr& c) {
  switch (c->kind) {
    case CellKind::Id: return c->objs[0];
    case CellKind::Assoc: return tensor_obj(c->objs[0], tensor_obj(c->objs[1], c->objs[2]));
    case CellKind::AssocInv: return tensor_obj(tensor_obj(c->objs[0], c->objs[1]), c->objs[2]);
    case CellKind::LUnit: return c->objs[0];
    case CellKind::LUnitInv: return tensor_obj(unit_obj(), c->objs[0]);
    case CellKind::RUnit: return c->objs[0];
    case CellKind::RUnitInv: return tensor_obj(c->objs[0], unit_obj());
    case CellKind::Braid: return tensor_obj(c->objs[1], c->objs[0]);
    case CellKind::BraidInv: return tensor_obj(c->objs[0], c->objs[1]);
    case CellKind::Tensor: return tensor_obj(tgt_obj(c->snd), tgt_obj(c->fst));
    case CellKind::Compose: return tgt_obj(c->snd);
  }
  throw std::logic_error("tgt_obj: bad kind");
}

bool cell_equal(const CellPtr& a, const CellPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  if (a->objs.size() != b->objs.size()) return false;
  for (std::size_t i = 0; i < a->objs.size(); ++i)
    if (!obj_equal(a->objs[i], b->objs[i])) return false;
  if ((a->snd == nullptr) != (b->snd == nullptr)) return false;
  if (a->snd && !cell_equal(a->snd, b->snd)) return false;
  if ((a->fst == nullptr) != (b->fst == nullptr)) return false;
  if (a->fst && !cell_equal(a->fst, b->fst)) return false;
  return true;
}

std::string cell_to_text(const CellPtr& c) {
  auto args = [&](std::size_t k) {
    std::string s = "[";
    for (std::size_t i = 0; i < k; ++i) {
      if (i) s += ",";
      s += obj_to_text(c->objs[i]);
    }
    return s + "]";
  };
  switch (c->kind) {
    case CellKind::Id: return "id" + args(1);
    case CellKind::Assoc: return "a" + args(3);
    case CellKind::AssocInv: return "a'" + args(3);
    case CellKind::LUnit: return "l" + args(1);
    case CellKind::LUnitInv: return "l'" + args(1);
    case CellKind::RUnit: return "r" + args(1);
    case CellKind::RUnitInv: return "r'" + args(1);
    case CellKind::Braid: return "R" + args(2);
    case CellKind::BraidInv: return "R'" + args(2);
    case CellKind::Tensor: return "(" + cell_to_text(c->snd) + "*" + cell_to_text(c->fst) + ")";
    case CellKind::Compose: return "(" + cell_to_text(c->fst) + ";" + cell_to_text(c->snd) + ")";
  }
  return "?";
}

// ── 2-cells ─────────────────────────────────────────────────────────────────

namespace {

TwoPtr gen2_obj(TwoKind k, std::vector<ObjPtr> objs) {
  return make_two({k, std::move(objs), {}, nullptr, nullptr});
}

TwoPtr gen2_cells(TwoKind k, std::vector<CellPtr> cells) {
  return make_two({k, {}, std::move(cells), nullptr, nullptr});
}

}  // namespace

TwoPtr id2(CellPtr f) { return gen2_cells(TwoKind::Id2, {std::move(f)}); }
TwoPtr eta_a(ObjPtr x, ObjPtr y, ObjPtr z) {
  return gen2_obj(TwoKind::EtaA, {std::move(x), std::move(y), std::move(z)});
}
TwoPtr eps_a(ObjPtr x, ObjPtr y, ObjPtr z) {
  return gen2_obj(TwoKind::EpsA, {std::move(x), std::move(y), std::move(z)});
}
TwoPtr eta_l(ObjPtr x) { return gen2_obj(TwoKind::EtaL, {std::move(x)}); }
TwoPtr eps_l(ObjPtr x) { return gen2_obj(TwoKind::EpsL, {std::move(x)}); }
TwoPtr eta_ru(ObjPtr x) { return gen2_obj(TwoKind::EtaRu, {std::move(x)}); }
TwoPtr eps_ru(ObjPtr x) { return gen2_obj(TwoKind::EpsRu, {std::move(x)}); }
TwoPtr eta_b(ObjPtr x, ObjPtr y) { return gen2_obj(TwoKind::EtaB, {std::move(x), std::move(y)}); }
TwoPtr eps_b(ObjPtr x, ObjPtr y) { return gen2_obj(TwoKind::EpsB, {std::move(x), std::move(y)}); }
TwoPtr pi_cell(ObjPtr w, ObjPtr x, ObjPtr y, ObjPtr z) {
  return gen2_obj(TwoKind::Pi, {std::move(w), std::move(x), std::move(y), std::move(z)});
}
TwoPtr mu_cell(ObjPtr x, ObjPtr y) { return gen2_obj(TwoKind::Mu, {std::move(x), std::move(y)}); }
TwoPtr lambda_cell(ObjPtr x, ObjPtr y) {
  return gen2_obj(TwoKind::Lambda, {std::move(x), std::move(y)});
}
TwoPtr rho_cell(ObjPtr x, ObjPtr y) { return gen2_obj(TwoKind::Rho, {std::move(x), std::move(y)}); }
TwoPtr hex_l(ObjPtr x, ObjPtr y, ObjPtr z) {
  return gen2_obj(TwoKind::HexL, {std::move(x), std::move(y), std::move(z)});
}
TwoPtr hex_r(ObjPtr x, ObjPtr y, ObjPtr z) {
  return gen2_obj(TwoKind::HexR, {std::move(x), std::move(y), std::move(z)});
}
TwoPtr nat_a(CellPtr f, CellPtr g, CellPtr h) {
  return gen2_cells(TwoKind::NatA, {std::move(f), std::move(g), std::move(h)});
}
TwoPtr nat_l(CellPtr f) { return gen2_cells(TwoKind::NatL, {std::move(f)}); }
TwoPtr nat_ru(CellPtr f) { return gen2_cells(TwoKind::NatRu, {std::move(f)}); }
TwoPtr nat_b(CellPtr f, CellPtr g) {
  return gen2_cells(TwoKind::NatB, {std::move(f), std::move(g)});
}
TwoPtr interchange(CellPtr f, CellPtr g) {
  return gen2_cells(TwoKind::Interchange, {std::move(f), std::move(g)});
}
TwoPtr funct2(CellPtr f, CellPtr f2, CellPtr g, CellPtr g2) {
  return gen2_cells(TwoKind::Funct2, {std::move(f), std::move(f2), std::move(g), std::move(g2)});
}
TwoPtr funct0(ObjPtr x, ObjPtr y) {
  return gen2_obj(TwoKind::Funct0, {std::move(x), std::move(y)});
}
TwoPtr inv2(TwoPtr a) { return make_two({TwoKind::Inv, {}, {}, nullptr, std::move(a)}); }
TwoPtr vcomp(TwoPtr second, TwoPtr first) {
  return make_two({TwoKind::VComp, {}, {}, std::move(second), std::move(first)});
}
TwoPtr hcomp(TwoPtr second, TwoPtr first) {
  return make_two({TwoKind::HComp, {}, {}, std::move(second), std::move(first)});
}
TwoPtr whisker_after(CellPtr g, TwoPtr a) { return hcomp(id2(std::move(g)), std::move(a)); }
TwoPtr whisker_before(TwoPtr a, CellPtr f) { return hcomp(std::move(a), id2(std::move(f))); }
TwoPtr tensor2(TwoPtr left, TwoPtr right) {
  return make_two({TwoKind::Tensor2, {}, {}, std::move(left), std::move(right)});
}

std::pair<CellPtr, CellPtr> boundary2(const TwoPtr& a) {
  const auto& o = a->objs;
  const auto& c = a->cells;
  switch (a->kind) {
    case TwoKind::Id2: return {c[0], c[0]};
    case TwoKind::EtaA:
      return {id_cell(tensor_obj(tensor_obj(o[0], o[1]), o[2])),
              compose(assoc_inv(o[0], o[1], o[2]), assoc(o[0], o[1], o[2]))};
    case TwoKind::EpsA:
      return {compose(assoc(o[0], o[1], o[2]), assoc_inv(o[0], o[1], o[2])),
              id_cell(tensor_obj(o[0], tensor_obj(o[1], o[2])))};
    case TwoKind::EtaL:
      return {id_cell(tensor_obj(unit_obj(), o[0])), compose(lunit_inv(o[0]), lunit(o[0]))};
    case TwoKind::EpsL: return {compose(lunit(o[0]), lunit_inv(o[0])), id_cell(o[0])};
    case TwoKind::EtaRu:
      return {id_cell(tensor_obj(o[0], unit_obj())), compose(runit_inv(o[0]), runit(o[0]))};
    case TwoKind::EpsRu: return {compose(runit(o[0]), runit_inv(o[0])), id_cell(o[0])};
    case TwoKind::EtaB:
      return {id_cell(tensor_obj(o[0], o[1])), compose(braid_inv(o[0], o[1]), braid(o[0], o[1]))};
    case TwoKind::EpsB:
      return {compose(braid(o[0], o[1]), braid_inv(o[0], o[1])), id_cell(tensor_obj(o[1], o[0]))};
    case TwoKind::Pi:
      return {compose_chain({tensor_cell(assoc(o[0], o[1], o[2]), id_cell(o[3])),
                             assoc(o[0], tensor_obj(o[1], o[2]), o[3]),
                             tensor_cell(id_cell(o[0]), assoc(o[1], o[2], o[3]))}),
              compose_chain({assoc(tensor_obj(o[0], o[1]), o[2], o[3]),
                             assoc(o[0], o[1], tensor_obj(o[2], o[3]))})};
    case TwoKind::Mu:
      return {compose_chain({tensor_cell(runit_inv(o[0]), id_cell(o[1])),
                             assoc(o[0], unit_obj(), o[1]),
                             tensor_cell(id_cell(o[0]), lunit(o[1]))}),
              id_cell(tensor_obj(o[0], o[1]))};
    case TwoKind::Lambda:
      return {tensor_cell(lunit(o[0]), id_cell(o[1])),
              compose(lunit(tensor_obj(o[0], o[1])), assoc(unit_obj(), o[0], o[1]))};
    case TwoKind::Rho:
      return {tensor_cell(id_cell(o[0]), runit_inv(o[1])),
              compose(assoc(o[0], o[1], unit_obj()), runit_inv(tensor_obj(o[0], o[1])))};
    case TwoKind::HexL:
      return {compose_chain({tensor_cell(braid(o[0], o[1]), id_cell(o[2])), assoc(o[1], o[0], o[2]),
                             tensor_cell(id_cell(o[1]), braid(o[0], o[2]))}),
              compose_chain({assoc(o[0], o[1], o[2]), braid(o[0], tensor_obj(o[1], o[2])),
                             assoc(o[1], o[2], o[0])})};
    case TwoKind::HexR:
      return {compose_chain({tensor_cell(id_cell(o[0]), braid(o[1], o[2])),
                             assoc_inv(o[0], o[2], o[1]),
                             tensor_cell(braid(o[0], o[2]), id_cell(o[1]))}),
              compose_chain({assoc_inv(o[0], o[1], o[2]), braid(tensor_obj(o[0], o[1]), o[2]),
                             assoc_inv(o[2], o[0], o[1])})};
    case TwoKind::NatA: {
      ObjPtr x = src_obj(c[0]), y = src_obj(c[1]), z = src_obj(c[2]);
      ObjPtr x2 = tgt_obj(c[0]), y2 = tgt_obj(c[1]), z2 = tgt_obj(c[2]);
      return {compose(assoc(x2, y2, z2), tensor_cell(tensor_cell(c[0], c[1]), c[2])),
              compose(tensor_cell(c[0], tensor_cell(c[1], c[2])), assoc(x, y, z))};
    }
    case TwoKind::NatL: {
      ObjPtr x = src_obj(c[0]), x2 = tgt_obj(c[0]);
      return {compose(lunit(x2), tensor_cell(id_cell(unit_obj()), c[0])), compose(c[0], lunit(x))};
    }
    case TwoKind::NatRu: {
      ObjPtr x = src_obj(c[0]), x2 = tgt_obj(c[0]);
      return {compose(runit(x2), tensor_cell(c[0], id_cell(unit_obj()))), compose(c[0], runit(x))};
    }
    case TwoKind::NatB: {
      ObjPtr x = src_obj(c[0]), y = src_obj(c[1]);
      ObjPtr x2 = tgt_obj(c[0]), y2 = tgt_obj(c[1]);
      return {compose(braid(x2, y2), tensor_cell(c[0], c[1])),
              compose(tensor_cell(c[1], c[0]), braid(x, y))};
    }
    case TwoKind::Interchange:
      return {compose(tensor_cell(c[0], id_cell(tgt_obj(c[1]))),
                      tensor_cell(id_cell(src_obj(c[0])), c[1])),
              compose(tensor_cell(id_cell(tgt_obj(c[0])), c[1]),
                      tensor_cell(c[0], id_cell(src_obj(c[1]))))};
    case TwoKind::Funct2:
      return {tensor_cell(compose(c[1], c[0]), compose(c[3], c[2])),
              compose(tensor_cell(c[1], c[3]), tensor_cell(c[0], c[2]))};
    case TwoKind::Funct0:
      return {tensor_cell(id_cell(o[0]), id_cell(o[1])), id_cell(tensor_obj(o[0], o[1]))};
    case TwoKind::Inv: {
      auto [s, t] = boundary2(a->fst);
      return {t, s};
    }
    case TwoKind::VComp: return {boundary2(a->fst).first, boundary2(a->snd).second};
    case TwoKind::HComp: {
      auto [sf, tf] = boundary2(a->fst);
      auto [ss, ts] = boundary2(a->snd);
      return {compose(ss, sf), compose(ts, tf)};
    }
    case TwoKind::Tensor2: {
      auto [sl, tl] = boundary2(a->snd);
      auto [sr, tr] = boundary2(a->fst);
      return {tensor_cell(sl, sr), tensor_cell(tl, tr)};
    }
  }
  throw std::logic_error("boundary2: bad kind");
}

bool two_equal(const TwoPtr& a, const TwoPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  if (a->objs.size() != b->objs.size() || a->cells.size() != b->cells.size()) return false;
  for (std::size_t i = 0; i < a->objs.size(); ++i)
    if (!obj_equal(a->objs[i], b->objs[i])) return false;
  for (std::size_t i = 0; i < a->cells.size(); ++i)
    if (!cell_equal(a->cells[i], b->cells[i])) return false;
  if ((a->snd == nullptr) != (b->snd == nullptr)) return false;
  if (a->snd && !two_equal(a->snd, b->snd)) return false;
  if ((a->fst == nullptr) != (b->fst == nullptr)) return false;
  if (a->fst && !two_equal(a->fst, b->fst)) return false;
  return true;
}

std::string two_to_text(const TwoPtr& a) {
  auto objs = [&] {
    std::string s = "[";
    for (std::size_t i = 0; i < a->objs.size(); ++i) {
      if (i) s += ",";
      s += obj_to_text(a->objs[i]);
    }
    return s + "]";
  };
  auto cells = [&] {
    std::string s = "[";
    for (std::size_t i = 0; i < a->cells.size(); ++i) {
      if (i) s += ",";
      s += cell_to_text(a->cells[i]);
    }
    return s + "]";
  };
  switch (a->kind) {
    case TwoKind::Id2: return "id2" + cells();
    case TwoKind::EtaA: return "eta_a" + objs();
    case TwoKind::EpsA: return "eps_a" + objs();
    case TwoKind::EtaL: return "eta_l" + objs();
    case TwoKind::EpsL: return "eps_l" + objs();
    case TwoKind::EtaRu: return "eta_r" + objs();
    case TwoKind::EpsRu: return "eps_r" + objs();
    case TwoKind::EtaB: return "eta_R" + objs();
    case TwoKind::EpsB: return "eps_R" + objs();
    case TwoKind::Pi: return "pi" + objs();
    case TwoKind::Mu: return "mu" + objs();
    case TwoKind::Lambda: return "lambda" + objs();
    case TwoKind::Rho: return "rho" + objs();
    case TwoKind::HexL: return "hexl" + objs();
    case TwoKind::HexR: return "hexr" + objs();
    case TwoKind::NatA: return "nat_a" + cells();
    case TwoKind::NatL: return "nat_l" + cells();
    case TwoKind::NatRu: return "nat_r" + cells();
    case TwoKind::NatB: return "nat_R" + cells();
    case TwoKind::Interchange: return "interchange" + cells();
    case TwoKind::Funct2: return "funct2" + cells();
    case TwoKind::Funct0: return "funct0" + objs();
    case TwoKind::Inv: return "inv(" + two_to_text(a->fst) + ")";
    case TwoKind::VComp: return "(" + two_to_text(a->fst) + " . " + two_to_text(a->snd) + ")";
    case TwoKind::HComp: return "(" + two_to_text(a->snd) + " o " + two_to_text(a->fst) + ")";
    case TwoKind::Tensor2: return "(" + two_to_text(a->snd) + " x " + two_to_text(a->fst) + ")";
  }
  return "?";
}

// ── Well-formedness ─────────────────────────────────────────────────────────

ValidationResult well_formed(const ObjPtr& x, const GenSet& gens) {
  switch (x->kind) {
    case ObjKind::Unit: return ValidationResult::pass();
    case ObjKind::Gen:
      if (!gens.contains(x->name))
        return ValidationResult::fail("unknown generator '" + x->name + "'");
      return ValidationResult::pass();
    case ObjKind::Tensor: {
      if (auto r = well_formed(x->left, gens); !r) return r;
      return well_formed(x->right, gens);
    }
  }
  return ValidationResult::fail("bad object kind");
}

ValidationResult well_formed(const CellPtr& c, const GenSet& gens) {
  for (const ObjPtr& o : c->objs)
    if (auto r = well_formed(o, gens); !r) return r;
  if (c->kind == CellKind::Tensor || c->kind == CellKind::Compose) {
    if (auto r = well_formed(c->snd, gens); !r) return r;
    if (auto r = well_formed(c->fst, gens); !r) return r;
  }
  if (c->kind == CellKind::Compose) {
    ObjPtr t = tgt_obj(c->fst);
    ObjPtr s = src_obj(c->snd);
    if (!obj_equal(t, s))
      return ValidationResult::fail("composition boundary mismatch in " + cell_to_text(c) +
                                    ": tgt " + cell_to_text(c->fst) + " = " + obj_to_text(t) +
                                    " but src " + cell_to_text(c->snd) + " = " + obj_to_text(s));
  }
  return ValidationResult::pass();
}

ValidationResult well_formed(const TwoPtr& a, const GenSet& gens) {
  for (const ObjPtr& o : a->objs)
    if (auto r = well_formed(o, gens); !r) return r;
  for (const CellPtr& c : a->cells)
    if (auto r = well_formed(c, gens); !r) return r;
  if (a->fst)
    if (auto r = well_formed(a->fst, gens); !r) return r;
  if (a->snd)
    if (auto r = well_formed(a->snd, gens); !r) return r;
  if (a->kind == TwoKind::VComp) {
    CellPtr t = boundary2(a->fst).second;
    CellPtr s = boundary2(a->snd).first;
    if (!cell_equal(t, s))
      return ValidationResult::fail("vertical composition mismatch in " + two_to_text(a) +
                                    ": target 1-cell " + cell_to_text(t) + " != source 1-cell " +
                                    cell_to_text(s));
  }
  if (a->kind == TwoKind::HComp) {
    ObjPtr t = tgt_obj(boundary2(a->fst).first);
    ObjPtr s = src_obj(boundary2(a->snd).first);
    if (!obj_equal(t, s))
      return ValidationResult::fail("horizontal composition mismatch in " + two_to_text(a) +
                                    ": boundary objects " + obj_to_text(t) + " != " +
                                    obj_to_text(s));
  }
  return ValidationResult::pass();
}

}  // namespace bicoh
