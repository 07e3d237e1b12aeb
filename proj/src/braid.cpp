#include "bicoh/braid.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bicoh {

namespace {

using Perm = std::vector<int>;

Perm identity_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Perm half_twist(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
  return p;
}

bool is_identity(const Perm& p) {
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[i] != i) return false;
  return true;
}

bool is_half_twist(const Perm& p) {
  int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i)
    if (p[i] != n - 1 - i) return false;
  return true;
}

Perm invert(const Perm& p) {
  Perm q(p.size());
  for (int i = 0; i < static_cast<int>(p.size()); ++i) q[p[i]] = i;
  return q;
}

// tau(A) = delta^-1 A delta; an involution on permutation braids.
Perm tau(const Perm& p) {
  int n = static_cast<int>(p.size());
  Perm q(n);
  for (int i = 0; i < n; ++i) q[i] = n - 1 - p[n - 1 - i];
  return q;
}

// Starting set: A admits the word sigma_{p+1} as a prefix iff the strands
// entering at positions p, p+1 cross, i.e. the images are out of order.
bool in_starting_set(const Perm& a, int p) { return a[p] > a[p + 1]; }

// Finishing set, same criterion on the inverse permutation.
bool in_finishing_set(const Perm& a, const Perm& a_inv, int p) {
  (void)a;
  return a_inv[p] > a_inv[p + 1];
}

struct NormalForm {
  int delta = 0;
  std::vector<Perm> simples;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// Slides the maximal head of `b` into `a` so the pair becomes left-weighted:
// every generator starting b already finishes a.
bool left_weight_pair(Perm& a, Perm& b) {
  int n = static_cast<int>(a.size());
  bool changed = false;
  bool progress = true;
  while (progress) {
    progress = false;
    Perm a_inv = invert(a);
    for (int p = 0; p + 1 < n; ++p) {
      if (in_starting_set(b, p) && !in_finishing_set(a, a_inv, p)) {
        std::swap(b[p], b[p + 1]);  // remove leading crossing from b
        for (int i = 0; i < n; ++i) {
          if (a[i] == p)
            a[i] = p + 1;
          else if (a[i] == p + 1)
            a[i] = p;  // append the crossing to a
        }
        progress = true;
        changed = true;
        break;
      }
    }
  }
  return changed;
}

NormalForm normal_form(const BraidWord& w) {
  check_word(w);
  const int n = w.strands;
  NormalForm nf;
  const Perm w0 = half_twist(n);
  for (const BraidLetter& l : w.letters) {
    int p = l.index - 1;
    if (l.sign > 0) {
      Perm s = identity_perm(n);
      std::swap(s[p], s[p + 1]);
      nf.simples.push_back(std::move(s));
    } else {
      // sigma_p^-1 = delta^-1 (delta sigma_p^-1); push delta^-1 to the front.
      nf.delta -= 1;
      for (Perm& a : nf.simples) a = tau(a);
      Perm x(n);
      for (int i = 0; i < n; ++i) {
        int v = n - 1 - i;
        if (v == p)
          v = p + 1;
        else if (v == p + 1)
          v = p;
        x[i] = v;
      }
      nf.simples.push_back(std::move(x));
    }
  }

  bool dirty = true;
  while (dirty) {
    dirty = false;
    // Drop identities, absorb full twists into the delta power.
    std::vector<Perm> kept;
    kept.reserve(nf.simples.size());
    for (Perm& a : nf.simples) {
      if (is_identity(a)) continue;
      if (is_half_twist(a)) {
        nf.delta += 1;
        for (Perm& k : kept) k = tau(k);
        dirty = true;
        continue;
      }
      kept.push_back(std::move(a));
    }
    nf.simples = std::move(kept);
    for (std::size_t j = 0; j + 1 < nf.simples.size(); ++j) {
      if (left_weight_pair(nf.simples[j], nf.simples[j + 1])) dirty = true;
    }
  }
  return nf;
}

}  // namespace

BraidWord make_word(int strands, std::initializer_list<int> signed_indices) {
  BraidWord w;
  w.strands = strands;
  for (int k : signed_indices) {
    if (k == 0) throw std::invalid_argument("braid letter index 0");
    w.letters.push_back({k > 0 ? k : -k, k > 0 ? +1 : -1});
  }
  check_word(w);
  return w;
}

void check_word(const BraidWord& w) {
  if (w.strands < 0) throw std::invalid_argument("braid word has negative strand count");
  for (const BraidLetter& l : w.letters) {
    if (l.index < 1 || l.index > w.strands - 1)
      throw std::invalid_argument("braid letter index out of range: s" + std::to_string(l.index) +
                                  " on n=" + std::to_string(w.strands));
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("braid letter sign must be +-1");
  }
}

BraidWord free_reduce(const BraidWord& w) {
  check_word(w);
  BraidWord out;
  out.strands = w.strands;
  for (const BraidLetter& l : w.letters) {
    if (!out.letters.empty() && out.letters.back().index == l.index &&
        out.letters.back().sign == -l.sign) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

BraidWord inverse_word(const BraidWord& w) {
  BraidWord out;
  out.strands = w.strands;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back({it->index, -it->sign});
  return out;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw std::invalid_argument("concat: strand count mismatch");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord shift_word(const BraidWord& w, int offset, int strands) {
  BraidWord out;
  out.strands = strands;
  out.letters.reserve(w.letters.size());
  for (const BraidLetter& l : w.letters) out.letters.push_back({l.index + offset, l.sign});
  check_word(out);
  return out;
}

Permutation perm_of(const BraidWord& w) {
  check_word(w);
  Permutation p = identity_perm(w.strands);
  // p[i] = current position of the strand that entered at i.
  for (const BraidLetter& l : w.letters) {
    int a = l.index - 1;
    for (int& pos : p) {
      if (pos == a)
        pos = a + 1;
      else if (pos == a + 1)
        pos = a;
    }
  }
  return p;
}

int exponent_sum(const BraidWord& w) {
  int s = 0;
  for (const BraidLetter& l : w.letters) s += l.sign;
  return s;
}

bool are_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands)
    throw std::invalid_argument("are_equal: strand count mismatch (" + std::to_string(a.strands) +
                                " vs " + std::to_string(b.strands) + ")");
  return normal_form(a) == normal_form(b);
}

bool is_trivial(const BraidWord& w) {
  NormalForm nf = normal_form(w);
  return nf.delta == 0 && nf.simples.empty();
}

std::string normal_form_key(const BraidWord& w) {
  NormalForm nf = normal_form(w);
  std::string key = std::to_string(nf.delta);
  for (const Perm& s : nf.simples) {
    key.push_back('|');
    for (int v : s) {
      key.push_back(static_cast<char>('0' + v / 10));
      key.push_back(static_cast<char>('0' + v % 10));
    }
  }
  return key;
}

bool labeled_equal(const LabeledBraid& a, const LabeledBraid& b) {
  if (a.word.strands != b.word.strands) return false;
  if (static_cast<int>(a.source_labels.size()) != a.word.strands) return false;
  if (static_cast<int>(b.source_labels.size()) != b.word.strands) return false;
  if (a.source_labels != b.source_labels) return false;
  return are_equal(a.word, b.word);
}

std::vector<std::string> target_labels(const LabeledBraid& b) {
  Permutation p = perm_of(b.word);
  std::vector<std::string> out(b.source_labels.size());
  for (std::size_t i = 0; i < b.source_labels.size(); ++i) out[p[i]] = b.source_labels[i];
  return out;
}

std::string word_to_text(const BraidWord& w) {
  std::string out = "n=" + std::to_string(w.strands);
  for (const BraidLetter& l : w.letters) {
    out.push_back(' ');
    out.push_back(l.sign > 0 ? 's' : 'S');
    out += std::to_string(l.index);
  }
  return out;
}

BraidWord word_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  if (!(in >> tok) || tok.rfind("n=", 0) != 0)
    throw std::invalid_argument("braid word text must start with n=<int>");
  BraidWord w;
  try {
    std::size_t used = 0;
    w.strands = std::stoi(tok.substr(2), &used);
    if (used != tok.size() - 2) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("bad strand count in '" + tok + "'");
  }
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S'))
      throw std::invalid_argument("bad braid letter '" + tok + "'");
    int idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoi(tok.substr(1), &used);
      if (used != tok.size() - 1) throw std::invalid_argument("");
    } catch (...) {
      throw std::invalid_argument("bad braid letter '" + tok + "'");
    }
    w.letters.push_back({idx, tok[0] == 's' ? +1 : -1});
  }
  check_word(w);
  return w;
}

std::ostream& operator<<(std::ostream& os, const BraidWord& w) { return os << word_to_text(w); }

}  // namespace bicoh
