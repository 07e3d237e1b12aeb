#ifndef BICOH_MOVIE_HPP
#define BICOH_MOVIE_HPP

// Branch-free braid movies and their rewriting calculus: elementary braid
// changes, the ten C-I moves plus locality changes as data-driven rewrites,
// bounded certificate search, and compilation of 2-cell terms to movies.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bicoh/braid.hpp"
#include "bicoh/terms.hpp"

namespace bicoh {

enum class ChangeKind { Equal, PairInsert, PairDelete, FarCommute, BraidRelation };

// Braid-relation flavors, matched against the letters in place:
//   SameSign : b^e a^e b^e      ->  a^e b^e a^e          (|a-b| = 1)
//   MixedFwd : b^e a^e b^-e     ->  a^-e b^e a^e
//   MixedBwd : a^-e b^e a^e     ->  b^e a^e b^-e
enum class BraidRelVariant { SameSign = 0, MixedFwd = 1, MixedBwd = 2 };

struct Change {
  ChangeKind kind = ChangeKind::Equal;
  int index = 0;  // generator index for pair insert/delete
  int sign = +1;  // sign of the first letter of the inserted/deleted pair
  int pos = 0;    // 0-based letter position
  BraidRelVariant variant = BraidRelVariant::SameSign;

  friend bool operator==(const Change&, const Change&) = default;
};

// Applies the change, or nullopt when the pattern does not match.
std::optional<BraidWord> try_change(const BraidWord& w, const Change& c);
// Throwing variant.
BraidWord apply_change(const BraidWord& w, const Change& c);
Change invert_change(const Change& c);

struct Movie {
  int strands = 1;
  std::vector<BraidWord> frames;   // non-empty
  std::vector<Change> changes;     // frames.size() - 1 entries

  friend bool operator==(const Movie&, const Movie&) = default;
};

Movie constant_movie(const BraidWord& w);
ValidationResult validate_movie(const Movie& m);
// Deduces a change for each consecutive frame pair (first match in the
// canonical order Equal, PairDelete, PairInsert, FarCommute, BraidRelation,
// positions ascending).  Throws when a transition admits none.
Movie infer_changes(int strands, std::vector<BraidWord> frames);
Movie reverse_movie(const Movie& m);

enum class MoveId {
  CIR1,
  CIR1p,
  CIR2,
  CIR3,
  CIR4,
  CIM1,
  CIM2,
  CIM3,
  CIM4,
  CIM5,
  Locality,
  ReverseSegment,
  Palindrome,
  InvertLetters
};

std::string move_name(MoveId id);
MoveId move_from_name(const std::string& name);

struct MoveStep {
  MoveId move = MoveId::CIM1;
  bool forward = true;    // match the left side, substitute the right
  bool inverted = false;  // all letter signs flipped
  bool mirrored = false;  // every frame word reversed (palindrome form)
  bool reversed = false;  // both sides run backwards in time
  int i = 0, j = 0, k = 0;
  int frame = 0;  // anchor frame; join index for Locality; segment start otherwise
  int len = 0;    // segment length for the whole-segment alterations

  friend bool operator==(const MoveStep&, const MoveStep&) = default;
};

struct Certificate {
  std::vector<MoveStep> steps;
};

struct MovePattern {
  std::vector<BraidWord> frames;
  std::vector<Change> changes;
};

// Both sides of a C-I move for the given indices and strand count, after the
// requested symmetry transforms; nullopt when a side condition fails.
std::optional<std::pair<MovePattern, MovePattern>> instantiate_move(MoveId id, int i, int j, int k,
                                                                    int strands, bool inverted,
                                                                    bool mirrored, bool reversed);

struct MoveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rewrites the movie by one step; first and last frames of the whole movie
// are never changed by C-I moves or locality steps.  Throws MoveError on a
// pattern mismatch or side-condition violation.  CI-M4 is rejected unless
// enable_cim4 is set: the printed source for its second word sequence is
// defective and the encoded correction is gated until verified.
Movie apply_move(const Movie& m, const MoveStep& step, bool enable_cim4 = false);

struct SearchOptions {
  int budget = 64;
  bool enable_cim4 = false;
  bool include_inverted = true;  // sign-flipped move forms in the catalog
  int threads = 1;               // result is independent of the thread count
};

// Bounded iterative-deepening search for a certificate turning `a` into `b`
// frame-for-frame.  Deterministic under the canonical move ordering.  A
// nullopt result is not a proof of inequivalence.  Throws MoveError when the
// endpoints differ (movie moves fix the boundary braids).
std::optional<Certificate> movie_equivalent(const Movie& a, const Movie& b,
                                            const SearchOptions& opts = {});

// Independent replay verifier.
bool check_certificate(const Movie& a, const Movie& b, const Certificate& cert,
                       bool enable_cim4 = false);

struct UnsupportedCell : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Compiles a 2-cell term to a movie whose first and last frames are the
// braids of its boundary 1-cells.  Supported structural table: identity and
// coherence cells (constant movies), eta/eps of the braiding (pair ladders),
// interchange and tensor functoriality (far-commute ladders), braiding
// naturality at braid-relation instances, and closure under Inv, VComp,
// HComp and Tensor2.  Throws UnsupportedCell outside the table.
Movie compile_two_cell(const TwoPtr& a);

// Text formats.  Movie: header line "n=<int>", one frame per line in braid
// word format, with "#change: ..." annotation lines between frames.
// Certificate: one step per line, "<move_id> <key=value...> @<frame_index>".
std::string movie_to_text(const Movie& m);
Movie movie_from_text(const std::string& text);
std::string certificate_to_text(const Certificate& c);
Certificate certificate_from_text(const std::string& text);
std::string step_to_text(const MoveStep& s);

}  // namespace bicoh

#endif
