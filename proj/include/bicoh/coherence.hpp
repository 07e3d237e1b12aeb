#ifndef BICOH_COHERENCE_HPP
#define BICOH_COHERENCE_HPP

// Decision procedures backed by the braid semantics: isomorphism of parallel
// 1-cells, equality of parallel 2-cells, the string-model braiding of the
// strictification, and its unit-condition checks.

#include <string>
#include <vector>

#include "bicoh/braid.hpp"
#include "bicoh/functor.hpp"
#include "bicoh/terms.hpp"

namespace bicoh {

enum class DecisionReason { ObjectMismatch, LabelMismatch, BraidDiffer, Isomorphic, ParallelEqual };

std::string reason_name(DecisionReason r);

struct DecisionReport {
  bool verdict = false;
  LabeledBraid left_braid;
  LabeledBraid right_braid;
  DecisionReason reason = DecisionReason::ObjectMismatch;
  std::string detail;
};

// Parallel 1-cells are isomorphic iff their labeled braids agree, and then
// uniquely so.  Throws std::invalid_argument on malformed terms.
DecisionReport iso_exists(const CellPtr& f, const CellPtr& g, const GenSet& gens);

// Parallel 2-cells in the free structure coincide; the decision reduces to
// componentwise syntactic equality of the boundary 1-cells.
DecisionReport two_cells_equal(const TwoPtr& a, const TwoPtr& b, const GenSet& gens);

// String objects of the strictification: plain label words.
using StringObject = std::vector<std::string>;

// Braiding of the string model: a block crossing, the empty word when either
// string is empty.
LabeledBraid gr_braiding(const StringObject& x, const StringObject& y);

struct CransReport {
  struct Item {
    std::string condition;
    bool pass = false;
    std::string detail;
  };
  bool ok = true;
  int instances = 0;
  std::vector<Item> failures;
  std::vector<std::string> conditions;  // the eight condition names checked
};

// Checks the eight unit conditions of the braided string model over the
// given generators for string lengths up to max_len: the braiding against
// the empty string is the empty word (two conditions), and the six
// hexagonator instances with a unit slot have letter-identical boundary
// words (forcing the connecting 2-cell to be the identity).
CransReport crans_unit_checks(const GenSet& gens, int max_len = 3);

struct FourthAxiomPastings {
  CellPtr top;     // step-by-step braiding composite, one crossing at a time
  CellPtr bottom;  // the other bracketing of the same three crossings
  TwoPtr lhs;      // pasting routed through the braiding of the last factor
  TwoPtr rhs;      // pasting routed through the braiding of the first block
};

// The two pastings of the strict fourth braiding axiom, transcribed into
// the weak term grammar with canonical associators.  Both are 2-cells
// top => bottom with syntactically equal boundaries.
FourthAxiomPastings fourth_axiom_pastings(const ObjPtr& a, const ObjPtr& b, const ObjPtr& c);

}  // namespace bicoh

#endif
