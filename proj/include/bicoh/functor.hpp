#ifndef BICOH_FUNCTOR_HPP
#define BICOH_FUNCTOR_HPP

#include "bicoh/braid.hpp"
#include "bicoh/terms.hpp"

namespace bicoh {

// Positive word moving the first p strands past the last q as a block
// (length p*q); sign=-1 gives the inverse word read at the permuted source.
BraidWord block_braid(int p, int q, int sign);

// Compiles a 1-cell to its labeled braid: coherence generators map to the
// empty word, braidings to block crossings, tensor to an index-shifted
// juxtaposition and composition to concatenation.
LabeledBraid eval_one_cell(const CellPtr& c);

// Coherence 1-cell from x to the left-nested bracketing of its flattening
// (unit factors removed).  Built from a, l, r generators only.
CellPtr to_left_nested(const ObjPtr& x);

// Coherence 1-cell between two bracketings of the same generator list.
// Throws when the flattenings differ.
CellPtr rebracket(const ObjPtr& from, const ObjPtr& to);

// Canonical term on the left-nested k-fold power of `g` whose braid is
// exactly [sigma_i]: coherence in, one whiskered braiding, coherence out.
CellPtr sigma_composite(int k, int i, const ObjPtr& g);

bool is_coherence_only(const CellPtr& c);

}  // namespace bicoh

#endif
