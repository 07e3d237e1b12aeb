#ifndef BICOH_BRAID_HPP
#define BICOH_BRAID_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace bicoh {

// One letter of a braid word: sigma_index^sign with 1 <= index <= strands-1.
struct BraidLetter {
  int index = 1;
  int sign = +1;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

// A word in the generators of the braid group B_n.  The empty word is the
// identity braid.  Words are read left to right in time order.
struct BraidWord {
  int strands = 1;
  std::vector<BraidLetter> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// A braid whose strands carry generator labels at the source.
struct LabeledBraid {
  std::vector<std::string> source_labels;
  BraidWord word;

  friend bool operator==(const LabeledBraid&, const LabeledBraid&) = default;
};

// Position permutation: perm[i] is the position where the strand entering at
// position i leaves (0-based).  Letters act in word order, as a left action.
using Permutation = std::vector<int>;

BraidWord make_word(int strands, std::initializer_list<int> signed_indices);

// Throws std::invalid_argument when an index is out of range.
void check_word(const BraidWord& w);

// Deletes adjacent cancelling pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

BraidWord inverse_word(const BraidWord& w);

// Concatenation; strand counts must agree.
BraidWord concat(const BraidWord& a, const BraidWord& b);

// Letters of `w` with indices shifted by `offset` on `strands` total strands.
BraidWord shift_word(const BraidWord& w, int offset, int strands);

Permutation perm_of(const BraidWord& w);

int exponent_sum(const BraidWord& w);

// Exact decision of equality in B_n via the left-greedy (Garside) normal
// form over permutation braids.  Throws on strand-count mismatch.
bool are_equal(const BraidWord& a, const BraidWord& b);

bool is_trivial(const BraidWord& w);

// Stable fingerprint of the normal form, usable as a hash/equality key:
// equal words map to equal keys and vice versa (for fixed strand count).
std::string normal_form_key(const BraidWord& w);

bool labeled_equal(const LabeledBraid& a, const LabeledBraid& b);

// Labels at the target end: target_labels[perm[i]] = source_labels[i].
std::vector<std::string> target_labels(const LabeledBraid& b);

// Text format: header "n=<int>", then whitespace-separated letters,
// "s<k>" for a positive letter and "S<k>" for a negative one.
std::string word_to_text(const BraidWord& w);
BraidWord word_from_text(const std::string& text);

std::ostream& operator<<(std::ostream& os, const BraidWord& w);

}  // namespace bicoh

#endif
