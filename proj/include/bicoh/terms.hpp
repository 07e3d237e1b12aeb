#ifndef BICOH_TERMS_HPP
#define BICOH_TERMS_HPP

// Term grammars for the cells of a free braided monoidal structure on a
// finite generator set.
//
//   Obj     : Unit | Gen(name) | Tensor(Obj, Obj)
//   OneCell : identities, the associativity / unit / braiding generators and
//             their pseudoinverses, closed under tensor and composition
//   TwoCell : the generating invertible 2-cells (adjunction units/counits,
//             pi/mu/lambda/rho, the two hexagonators, naturality and
//             functoriality cells), closed under inverse, vertical and
//             horizontal composition, and tensor
//
// Terms are immutable shared trees.  Object equality is syntactic.
// Composition of 1-cells is kept in a normal form: right-nested with
// identity factors absorbed (hom-composition carries no coherence data of
// its own, so nothing is lost).  Tensor is never normalized.

#include <initializer_list>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace bicoh {

struct GenSet {
  std::vector<std::string> names;

  bool contains(const std::string& name) const;
  // Throws std::invalid_argument on duplicates.
  static GenSet of(std::initializer_list<std::string> names);
  static GenSet of(std::vector<std::string> names);
};

enum class ObjKind { Unit, Gen, Tensor };

struct Obj;
using ObjPtr = std::shared_ptr<const Obj>;

struct Obj {
  ObjKind kind;
  std::string name;       // Gen
  ObjPtr left, right;     // Tensor
};

ObjPtr unit_obj();
ObjPtr gen_obj(std::string name);
ObjPtr tensor_obj(ObjPtr left, ObjPtr right);
ObjPtr tensor_chain(const std::vector<ObjPtr>& parts);  // left-nested; empty -> unit

bool obj_equal(const ObjPtr& a, const ObjPtr& b);
std::vector<std::string> obj_flatten(const ObjPtr& x);
int strand_count(const ObjPtr& x);
std::string obj_to_text(const ObjPtr& x);

enum class CellKind {
  Id,
  Assoc,
  AssocInv,
  LUnit,
  LUnitInv,
  RUnit,
  RUnitInv,
  Braid,
  BraidInv,
  Tensor,
  Compose
};

struct Cell;
using CellPtr = std::shared_ptr<const Cell>;

struct Cell {
  CellKind kind;
  std::vector<ObjPtr> objs;  // object parameters of a generator
  CellPtr snd, fst;          // Tensor(snd=left, fst=right); Compose(snd after fst)
};

CellPtr id_cell(ObjPtr x);
CellPtr assoc(ObjPtr x, ObjPtr y, ObjPtr z);
CellPtr assoc_inv(ObjPtr x, ObjPtr y, ObjPtr z);
CellPtr lunit(ObjPtr x);
CellPtr lunit_inv(ObjPtr x);
CellPtr runit(ObjPtr x);
CellPtr runit_inv(ObjPtr x);
CellPtr braid(ObjPtr x, ObjPtr y);
CellPtr braid_inv(ObjPtr x, ObjPtr y);
CellPtr tensor_cell(CellPtr left, CellPtr right);
// g after f.  When the boundary matches, identity factors are absorbed and
// the tree is right-nested; otherwise the raw node is kept for well_formed
// to diagnose.
CellPtr compose(CellPtr g, CellPtr f);
// f_1 ; f_2 ; ... ; f_k in diagram order (f_1 first).  Must be non-empty.
CellPtr compose_chain(const std::vector<CellPtr>& diagram_order);
// Structural inverse: swaps each generator with its pseudoinverse.
CellPtr invert_cell(const CellPtr& c);

ObjPtr src_obj(const CellPtr& c);
ObjPtr tgt_obj(const CellPtr& c);
bool cell_equal(const CellPtr& a, const CellPtr& b);
std::string cell_to_text(const CellPtr& c);

enum class TwoKind {
  Id2,
  EtaA,
  EpsA,
  EtaL,
  EpsL,
  EtaRu,
  EpsRu,
  EtaB,
  EpsB,
  Pi,
  Mu,
  Lambda,
  Rho,
  HexL,
  HexR,
  NatA,
  NatL,
  NatRu,
  NatB,
  Interchange,
  Funct2,
  Funct0,
  Inv,
  VComp,
  HComp,
  Tensor2
};

struct Two;
using TwoPtr = std::shared_ptr<const Two>;

struct Two {
  TwoKind kind;
  std::vector<ObjPtr> objs;
  std::vector<CellPtr> cells;
  TwoPtr snd, fst;
};

TwoPtr id2(CellPtr f);
TwoPtr eta_a(ObjPtr x, ObjPtr y, ObjPtr z);
TwoPtr eps_a(ObjPtr x, ObjPtr y, ObjPtr z);
TwoPtr eta_l(ObjPtr x);
TwoPtr eps_l(ObjPtr x);
TwoPtr eta_ru(ObjPtr x);
TwoPtr eps_ru(ObjPtr x);
TwoPtr eta_b(ObjPtr x, ObjPtr y);
TwoPtr eps_b(ObjPtr x, ObjPtr y);
TwoPtr pi_cell(ObjPtr w, ObjPtr x, ObjPtr y, ObjPtr z);
TwoPtr mu_cell(ObjPtr x, ObjPtr y);
TwoPtr lambda_cell(ObjPtr x, ObjPtr y);
TwoPtr rho_cell(ObjPtr x, ObjPtr y);
TwoPtr hex_l(ObjPtr x, ObjPtr y, ObjPtr z);
TwoPtr hex_r(ObjPtr x, ObjPtr y, ObjPtr z);
TwoPtr nat_a(CellPtr f, CellPtr g, CellPtr h);
TwoPtr nat_l(CellPtr f);
TwoPtr nat_ru(CellPtr f);
TwoPtr nat_b(CellPtr f, CellPtr g);
TwoPtr interchange(CellPtr f, CellPtr g);
TwoPtr funct2(CellPtr f, CellPtr f2, CellPtr g, CellPtr g2);
TwoPtr funct0(ObjPtr x, ObjPtr y);
TwoPtr inv2(TwoPtr a);
TwoPtr vcomp(TwoPtr second, TwoPtr first);
TwoPtr hcomp(TwoPtr second, TwoPtr first);
// Whiskering shorthands: hcomp with an identity 2-cell.
TwoPtr whisker_after(CellPtr g, TwoPtr a);   // g . a
TwoPtr whisker_before(TwoPtr a, CellPtr f);  // a . f
TwoPtr tensor2(TwoPtr left, TwoPtr right);

// (source 1-cell, target 1-cell)
std::pair<CellPtr, CellPtr> boundary2(const TwoPtr& a);
bool two_equal(const TwoPtr& a, const TwoPtr& b);
std::string two_to_text(const TwoPtr& a);

struct ValidationResult {
  bool ok = true;
  std::string message;  // first violation: subterm and rule

  static ValidationResult pass() { return {}; }
  static ValidationResult fail(std::string msg) { return {false, std::move(msg)}; }
  explicit operator bool() const { return ok; }
};

ValidationResult well_formed(const ObjPtr& x, const GenSet& gens);
ValidationResult well_formed(const CellPtr& c, const GenSet& gens);
ValidationResult well_formed(const TwoPtr& a, const GenSet& gens);

}  // namespace bicoh

#endif
