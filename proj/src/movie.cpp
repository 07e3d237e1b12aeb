#include "bicoh/movie.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <unordered_map>

#include "bicoh/functor.hpp"
#include "bicoh/parser.hpp"

namespace bicoh {

namespace {

bool far(int a, int b) { return std::abs(a - b) > 1; }
bool adjacent(int a, int b) { return std::abs(a - b) == 1; }

}  // namespace

std::optional<BraidWord> try_change(const BraidWord& w, const Change& c) {
  const auto& ls = w.letters;
  const int len = static_cast<int>(ls.size());
  switch (c.kind) {
    case ChangeKind::Equal: return w;
    case ChangeKind::PairInsert: {
      if (c.pos < 0 || c.pos > len) return std::nullopt;
      if (c.index < 1 || c.index > w.strands - 1) return std::nullopt;
      BraidWord out = w;
      out.letters.insert(out.letters.begin() + c.pos,
                         {BraidLetter{c.index, c.sign}, BraidLetter{c.index, -c.sign}});
      return out;
    }
    case ChangeKind::PairDelete: {
      if (c.pos < 0 || c.pos + 1 >= len) return std::nullopt;
      if (ls[c.pos].index != c.index || ls[c.pos].sign != c.sign) return std::nullopt;
      if (ls[c.pos + 1].index != c.index || ls[c.pos + 1].sign != -c.sign) return std::nullopt;
      BraidWord out = w;
      out.letters.erase(out.letters.begin() + c.pos, out.letters.begin() + c.pos + 2);
      return out;
    }
    case ChangeKind::FarCommute: {
      if (c.pos < 0 || c.pos + 1 >= len) return std::nullopt;
      if (!far(ls[c.pos].index, ls[c.pos + 1].index)) return std::nullopt;
      BraidWord out = w;
      std::swap(out.letters[c.pos], out.letters[c.pos + 1]);
      return out;
    }
    case ChangeKind::BraidRelation: {
      if (c.pos < 0 || c.pos + 2 >= len) return std::nullopt;
      BraidLetter a = ls[c.pos], b = ls[c.pos + 1], d = ls[c.pos + 2];
      if (a.index != d.index || !adjacent(a.index, b.index)) return std::nullopt;
      BraidWord out = w;
      auto put = [&](BraidLetter x, BraidLetter y, BraidLetter z) {
        out.letters[c.pos] = x;
        out.letters[c.pos + 1] = y;
        out.letters[c.pos + 2] = z;
      };
      switch (c.variant) {
        case BraidRelVariant::SameSign:
          if (a.sign != b.sign || b.sign != d.sign) return std::nullopt;
          put({b.index, a.sign}, {a.index, a.sign}, {b.index, a.sign});
          return out;
        case BraidRelVariant::MixedFwd:
          // b^e a^e b^-e -> a^-e b^e a^e
          if (a.sign != b.sign || d.sign != -a.sign) return std::nullopt;
          put({b.index, -a.sign}, {a.index, a.sign}, {b.index, a.sign});
          return out;
        case BraidRelVariant::MixedBwd:
          // a^-e b^e a^e -> b^e a^e b^-e
          if (a.sign != -b.sign || d.sign != b.sign) return std::nullopt;
          put({b.index, b.sign}, {a.index, b.sign}, {b.index, -b.sign});
          return out;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

BraidWord apply_change(const BraidWord& w, const Change& c) {
  auto out = try_change(w, c);
  if (!out) throw MoveError("elementary change does not apply");
  return *out;
}

Change invert_change(const Change& c) {
  Change out = c;
  switch (c.kind) {
    case ChangeKind::Equal:
    case ChangeKind::FarCommute: return out;
    case ChangeKind::PairInsert: out.kind = ChangeKind::PairDelete; return out;
    case ChangeKind::PairDelete: out.kind = ChangeKind::PairInsert; return out;
    case ChangeKind::BraidRelation:
      if (c.variant == BraidRelVariant::MixedFwd)
        out.variant = BraidRelVariant::MixedBwd;
      else if (c.variant == BraidRelVariant::MixedBwd)
        out.variant = BraidRelVariant::MixedFwd;
      return out;
  }
  return out;
}

Movie constant_movie(const BraidWord& w) { return Movie{w.strands, {w}, {}}; }

ValidationResult validate_movie(const Movie& m) {
  if (m.frames.empty()) return ValidationResult::fail("movie has no frames");
  if (m.changes.size() + 1 != m.frames.size())
    return ValidationResult::fail("movie needs exactly frames-1 changes");
  for (std::size_t i = 0; i < m.frames.size(); ++i) {
    if (m.frames[i].strands != m.strands)
      return ValidationResult::fail("frame " + std::to_string(i) + " strand count differs");
    try {
      check_word(m.frames[i]);
    } catch (const std::exception& e) {
      return ValidationResult::fail("frame " + std::to_string(i) + ": " + e.what());
    }
  }
  for (std::size_t i = 0; i < m.changes.size(); ++i) {
    auto next = try_change(m.frames[i], m.changes[i]);
    if (!next || !(*next == m.frames[i + 1]))
      return ValidationResult::fail("transition " + std::to_string(i) +
                                    " is not produced by its declared change");
  }
  return ValidationResult::pass();
}

namespace {

std::optional<Change> deduce_change(const BraidWord& a, const BraidWord& b) {
  const int la = static_cast<int>(a.letters.size());
  const int lb = static_cast<int>(b.letters.size());
  auto matches = [&](const Change& c) {
    auto r = try_change(a, c);
    return r && *r == b;
  };
  if (a == b) return Change{ChangeKind::Equal, 0, +1, 0, BraidRelVariant::SameSign};
  if (lb == la - 2) {
    for (int p = 0; p + 1 < la; ++p) {
      Change c{ChangeKind::PairDelete, a.letters[p].index, a.letters[p].sign, p,
               BraidRelVariant::SameSign};
      if (matches(c)) return c;
    }
  }
  if (lb == la + 2) {
    for (int p = 0; p + 1 < lb; ++p) {
      Change c{ChangeKind::PairInsert, b.letters[p].index, b.letters[p].sign, p,
               BraidRelVariant::SameSign};
      if (matches(c)) return c;
    }
  }
  if (la == lb) {
    for (int p = 0; p + 1 < la; ++p) {
      Change c{ChangeKind::FarCommute, 0, +1, p, BraidRelVariant::SameSign};
      if (matches(c)) return c;
    }
    for (int p = 0; p + 2 < la; ++p)
      for (auto v : {BraidRelVariant::SameSign, BraidRelVariant::MixedFwd,
                     BraidRelVariant::MixedBwd}) {
        Change c{ChangeKind::BraidRelation, 0, +1, p, v};
        if (matches(c)) return c;
      }
  }
  return std::nullopt;
}

}  // namespace

Movie infer_changes(int strands, std::vector<BraidWord> frames) {
  Movie m;
  m.strands = strands;
  m.frames = std::move(frames);
  if (m.frames.empty()) throw MoveError("movie has no frames");
  for (std::size_t i = 0; i + 1 < m.frames.size(); ++i) {
    auto c = deduce_change(m.frames[i], m.frames[i + 1]);
    if (!c)
      throw MoveError("no elementary change relates frames " + std::to_string(i) + " and " +
                      std::to_string(i + 1));
    m.changes.push_back(*c);
  }
  return m;
}

Movie reverse_movie(const Movie& m) {
  Movie out;
  out.strands = m.strands;
  out.frames.assign(m.frames.rbegin(), m.frames.rend());
  for (auto it = m.changes.rbegin(); it != m.changes.rend(); ++it)
    out.changes.push_back(invert_change(*it));
  return out;
}

// ── Move catalog ────────────────────────────────────────────────────────────

std::string move_name(MoveId id) {
  switch (id) {
    case MoveId::CIR1: return "CI-R1";
    case MoveId::CIR1p: return "CI-R1'";
    case MoveId::CIR2: return "CI-R2";
    case MoveId::CIR3: return "CI-R3";
    case MoveId::CIR4: return "CI-R4";
    case MoveId::CIM1: return "CI-M1";
    case MoveId::CIM2: return "CI-M2";
    case MoveId::CIM3: return "CI-M3";
    case MoveId::CIM4: return "CI-M4";
    case MoveId::CIM5: return "CI-M5";
    case MoveId::Locality: return "Locality";
    case MoveId::ReverseSegment: return "ReverseSegment";
    case MoveId::Palindrome: return "Palindrome";
    case MoveId::InvertLetters: return "InvertLetters";
  }
  return "?";
}

MoveId move_from_name(const std::string& name) {
  for (MoveId id :
       {MoveId::CIR1, MoveId::CIR1p, MoveId::CIR2, MoveId::CIR3, MoveId::CIR4, MoveId::CIM1,
        MoveId::CIM2, MoveId::CIM3, MoveId::CIM4, MoveId::CIM5, MoveId::Locality,
        MoveId::ReverseSegment, MoveId::Palindrome, MoveId::InvertLetters})
    if (move_name(id) == name) return id;
  throw MoveError("unknown move id '" + name + "'");
}

namespace {

Change fc(int pos) { return Change{ChangeKind::FarCommute, 0, +1, pos, BraidRelVariant::SameSign}; }
Change br(int pos, BraidRelVariant v = BraidRelVariant::SameSign) {
  return Change{ChangeKind::BraidRelation, 0, +1, pos, v};
}
Change pins(int j, int sign, int pos) {
  return Change{ChangeKind::PairInsert, j, sign, pos, BraidRelVariant::SameSign};
}
Change pdel(int j, int sign, int pos) {
  return Change{ChangeKind::PairDelete, j, sign, pos, BraidRelVariant::SameSign};
}

struct RawSides {
  std::vector<std::vector<int>> lf, rf;  // frames as signed index lists
  std::vector<Change> lc, rc;
};

// The two word sequences of each C-I move, as printed in the underlying
// move catalog.  CI-R4's second sequence is missing one comma in print; the
// split below is forced by the frame lengths.  CI-M4's second sequence is
// defective in print (a repeated word and a seven-letter word in a
// six-letter movie); the reconstruction below is the unique one whose
// transitions are elementary, and stays gated behind enable_cim4.
std::optional<RawSides> raw_sides(MoveId id, int i, int j, int k) {
  RawSides s;
  switch (id) {
    case MoveId::CIR1:
      if (!far(i, j)) return std::nullopt;
      s.lf = {{i}, {i, j, -j}, {j, i, -j}};
      s.lc = {pins(j, +1, 1), fc(0)};
      s.rf = {{i}, {j, -j, i}, {j, i, -j}};
      s.rc = {pins(j, +1, 0), fc(1)};
      return s;
    case MoveId::CIR1p:
      s.lf = {{i}, {i, -i, i}, {i}};
      s.lc = {pins(i, +1, 0), pdel(i, +1, 0)};
      s.rf = {{i}};
      return s;
    case MoveId::CIR2:
      if (!far(i, j)) return std::nullopt;
      s.lf = {{i, j}, {j, i}, {i, j}};
      s.lc = {fc(0), fc(0)};
      s.rf = {{i, j}};
      return s;
    case MoveId::CIR3:
      if (!far(i, j) || !far(j, k) || !far(k, i)) return std::nullopt;
      s.lf = {{i, k, j}, {k, i, j}, {k, j, i}, {j, k, i}};
      s.lc = {fc(0), fc(1), fc(0)};
      s.rf = {{i, k, j}, {i, j, k}, {j, i, k}, {j, k, i}};
      s.rc = {fc(1), fc(0), fc(1)};
      return s;
    case MoveId::CIR4:
      if (!adjacent(i, j) || !far(i, k) || !far(j, k)) return std::nullopt;
      s.lf = {{k, i, j, i}, {i, k, j, i}, {i, j, k, i}, {i, j, i, k}, {j, i, j, k}};
      s.lc = {fc(0), fc(1), fc(2), br(0)};
      s.rf = {{k, i, j, i}, {k, j, i, j}, {j, k, i, j}, {j, i, k, j}, {j, i, j, k}};
      s.rc = {br(1), fc(0), fc(1), fc(2)};
      return s;
    case MoveId::CIM1:
      s.lf = {{}};
      s.rf = {{}, {i, -i}, {}};
      s.rc = {pins(i, +1, 0), pdel(i, +1, 0)};
      return s;
    case MoveId::CIM2:
      s.lf = {{i, -i}, {}, {i, -i}};
      s.lc = {pdel(i, +1, 0), pins(i, +1, 0)};
      s.rf = {{i, -i}};
      return s;
    case MoveId::CIM3:
      if (!adjacent(i, j)) return std::nullopt;
      s.lf = {{i, j, i}, {j, i, j}, {i, j, i}};
      s.lc = {br(0), br(0)};
      s.rf = {{i, j, i}};
      return s;
    case MoveId::CIM4:
      if (!((k == j + 1 && j == i + 1) || (k == j - 1 && j == i - 1))) return std::nullopt;
      s.lf = {{i, j, k, i, j, i}, {i, j, i, k, j, i}, {j, i, j, k, j, i}, {j, i, k, j, k, i},
              {j, k, i, j, k, i}, {j, k, i, j, i, k}, {j, k, j, i, j, k}, {k, j, k, i, j, k}};
      s.lc = {fc(2), br(0), br(2), fc(1), fc(4), br(2), br(0)};
      s.rf = {{i, j, k, i, j, i}, {i, j, k, j, i, j}, {i, k, j, k, i, j}, {k, i, j, k, i, j},
              {k, i, j, i, k, j}, {k, j, i, j, k, j}, {k, j, i, k, j, k}, {k, j, k, i, j, k}};
      s.rc = {br(3), br(1), fc(0), fc(3), br(1), br(3), fc(2)};
      return s;
    case MoveId::CIM5:
      if (!adjacent(i, j)) return std::nullopt;
      s.lf = {{j, i}, {-i, i, j, i}, {-i, j, i, j}};
      s.lc = {pins(i, -1, 0), br(1)};
      s.rf = {{j, i}, {j, i, -j, j}, {-i, j, i, j}};
      s.rc = {pins(j, -1, 2), br(0, BraidRelVariant::MixedFwd)};
      return s;
    default: return std::nullopt;
  }
}

MovePattern to_pattern(int strands, const std::vector<std::vector<int>>& frames,
                       const std::vector<Change>& changes) {
  MovePattern p;
  for (const auto& f : frames) {
    BraidWord w{strands, {}};
    for (int v : f) w.letters.push_back({v > 0 ? v : -v, v > 0 ? +1 : -1});
    check_word(w);
    p.frames.push_back(std::move(w));
  }
  p.changes = changes;
  return p;
}

BraidWord invert_signs(const BraidWord& w) {
  BraidWord out = w;
  for (auto& l : out.letters) l.sign = -l.sign;
  return out;
}

Change invert_signs(const Change& c) {
  Change out = c;
  if (c.kind == ChangeKind::PairInsert || c.kind == ChangeKind::PairDelete) out.sign = -c.sign;
  return out;
}

BraidWord mirror_word(const BraidWord& w) {
  BraidWord out{w.strands, {}};
  out.letters.assign(w.letters.rbegin(), w.letters.rend());
  return out;
}

// Image of a valid transition under frame-word reversal.
Change mirror_change(const Change& c, int src_len) {
  Change out = c;
  switch (c.kind) {
    case ChangeKind::Equal: return out;
    case ChangeKind::PairInsert:
      out.sign = -c.sign;
      out.pos = src_len - c.pos;
      return out;
    case ChangeKind::PairDelete:
      out.sign = -c.sign;
      out.pos = src_len - 2 - c.pos;
      return out;
    case ChangeKind::FarCommute: out.pos = src_len - 2 - c.pos; return out;
    case ChangeKind::BraidRelation:
      out.pos = src_len - 3 - c.pos;
      if (c.variant == BraidRelVariant::MixedFwd)
        out.variant = BraidRelVariant::MixedBwd;
      else if (c.variant == BraidRelVariant::MixedBwd)
        out.variant = BraidRelVariant::MixedFwd;
      return out;
  }
  return out;
}

MovePattern transform_pattern(MovePattern p, bool inverted, bool mirrored, bool reversed) {
  if (inverted) {
    for (auto& f : p.frames) f = invert_signs(f);
    for (auto& c : p.changes) c = invert_signs(c);
  }
  if (mirrored) {
    for (std::size_t t = 0; t < p.changes.size(); ++t)
      p.changes[t] = mirror_change(p.changes[t], static_cast<int>(p.frames[t].letters.size()));
    for (auto& f : p.frames) f = mirror_word(f);
  }
  if (reversed) {
    std::reverse(p.frames.begin(), p.frames.end());
    std::reverse(p.changes.begin(), p.changes.end());
    for (auto& c : p.changes) c = invert_change(c);
  }
  return p;
}

int max_index_used(const RawSides& s) {
  int m = 0;
  for (const auto& side : {s.lf, s.rf})
    for (const auto& f : side)
      for (int v : f) m = std::max(m, std::abs(v));
  return m;
}

int move_param_count(MoveId id) {
  switch (id) {
    case MoveId::CIR1p:
    case MoveId::CIM1:
    case MoveId::CIM2: return 1;
    case MoveId::CIR1:
    case MoveId::CIR2:
    case MoveId::CIM3:
    case MoveId::CIM5: return 2;
    case MoveId::CIR3:
    case MoveId::CIR4:
    case MoveId::CIM4: return 3;
    default: return 0;
  }
}

}  // namespace

std::optional<std::pair<MovePattern, MovePattern>> instantiate_move(MoveId id, int i, int j, int k,
                                                                    int strands, bool inverted,
                                                                    bool mirrored, bool reversed) {
  const int need = move_param_count(id);
  if (need == 0) return std::nullopt;
  if (i < 1 || (need >= 2 && j < 1) || (need >= 3 && k < 1)) return std::nullopt;
  auto raw = raw_sides(id, i, j, k);
  if (!raw) return std::nullopt;
  if (max_index_used(*raw) > strands - 1) return std::nullopt;
  MovePattern left = to_pattern(strands, raw->lf, raw->lc);
  MovePattern right = to_pattern(strands, raw->rf, raw->rc);
  return std::make_pair(transform_pattern(std::move(left), inverted, mirrored, reversed),
                        transform_pattern(std::move(right), inverted, mirrored, reversed));
}

// ── Move application ────────────────────────────────────────────────────────

namespace {

struct Support {
  int lo = 0, hi = 0, delta = 0;
};

Support change_support(const Change& c) {
  switch (c.kind) {
    case ChangeKind::Equal: return {0, 0, 0};
    case ChangeKind::PairInsert: return {c.pos, c.pos, +2};
    case ChangeKind::PairDelete: return {c.pos, c.pos + 2, -2};
    case ChangeKind::FarCommute: return {c.pos, c.pos + 2, 0};
    case ChangeKind::BraidRelation: return {c.pos, c.pos + 3, 0};
  }
  return {0, 0, 0};
}

Change shifted(Change c, int by) {
  if (c.kind != ChangeKind::Equal) c.pos += by;
  return c;
}

Movie apply_locality(const Movie& m, int join) {
  if (join < 0 || join + 1 >= static_cast<int>(m.changes.size()))
    throw MoveError("locality join index out of range");
  const Change c1 = m.changes[join];
  const Change c2 = m.changes[join + 1];
  const Support s1 = change_support(c1);
  const Support s2 = change_support(c2);
  Change first, second;  // applied to frame[join] in the reordered movie
  if (c1.kind == ChangeKind::Equal || s2.lo >= s1.hi + s1.delta) {
    first = shifted(c2, -s1.delta);
    second = c1;
  } else if (c2.kind == ChangeKind::Equal || s2.hi <= s1.lo) {
    first = c2;
    second = shifted(c1, s2.delta);
  } else {
    throw MoveError("locality change: the two changes do not act on independent factors");
  }
  auto mid = try_change(m.frames[join], first);
  if (!mid) throw MoveError("locality change: reordered first change does not apply");
  auto end = try_change(*mid, second);
  if (!end || !(*end == m.frames[join + 2]))
    throw MoveError("locality change: reordered changes do not restore the endpoint");
  Movie out = m;
  out.frames[join + 1] = *mid;
  out.changes[join] = first;
  out.changes[join + 1] = second;
  return out;
}

Movie apply_segment_alteration(const Movie& m, const MoveStep& step) {
  const int f = step.frame;
  const int len = step.len;
  const int nframes = static_cast<int>(m.frames.size());
  if (len < 1 || f < 0 || f + len > nframes) throw MoveError("segment out of range");
  Movie out = m;
  switch (step.move) {
    case MoveId::InvertLetters: {
      if (!m.frames[f].letters.empty() || !m.frames[f + len - 1].letters.empty())
        throw MoveError("InvertLetters needs empty boundary frames on the segment");
      for (int t = f; t < f + len; ++t) out.frames[t] = invert_signs(m.frames[t]);
      for (int t = f; t < f + len - 1; ++t) out.changes[t] = invert_signs(m.changes[t]);
      return out;
    }
    case MoveId::Palindrome: {
      if (!(mirror_word(m.frames[f]) == m.frames[f]) ||
          !(mirror_word(m.frames[f + len - 1]) == m.frames[f + len - 1]))
        throw MoveError("Palindrome needs palindromic boundary frames on the segment");
      for (int t = f; t < f + len - 1; ++t)
        out.changes[t] =
            mirror_change(m.changes[t], static_cast<int>(m.frames[t].letters.size()));
      for (int t = f; t < f + len; ++t) out.frames[t] = mirror_word(m.frames[t]);
      return out;
    }
    case MoveId::ReverseSegment: {
      if (!(m.frames[f] == m.frames[f + len - 1]))
        throw MoveError("ReverseSegment needs equal boundary frames on the segment");
      std::reverse(out.frames.begin() + f, out.frames.begin() + f + len);
      std::vector<Change> seg(m.changes.begin() + f, m.changes.begin() + f + len - 1);
      std::reverse(seg.begin(), seg.end());
      for (auto& c : seg) c = invert_change(c);
      std::copy(seg.begin(), seg.end(), out.changes.begin() + f);
      return out;
    }
    default: throw MoveError("not a segment alteration");
  }
}

}  // namespace

Movie apply_move(const Movie& m, const MoveStep& step, bool enable_cim4) {
  if (step.move == MoveId::Locality) return apply_locality(m, step.frame);
  if (step.move == MoveId::InvertLetters || step.move == MoveId::Palindrome ||
      step.move == MoveId::ReverseSegment)
    return apply_segment_alteration(m, step);
  if (step.move == MoveId::CIM4 && !enable_cim4)
    throw MoveError("CI-M4 is gated; enable it explicitly to use the reconstructed sequence");
  auto sides =
      instantiate_move(step.move, step.i, step.j, step.k, m.strands, step.inverted, step.mirrored,
                       step.reversed);
  if (!sides) throw MoveError("move side conditions fail for " + step_to_text(step));
  const MovePattern& from = step.forward ? sides->first : sides->second;
  const MovePattern& to = step.forward ? sides->second : sides->first;
  const int f = step.frame;
  const int flen = static_cast<int>(from.frames.size());
  if (f < 0 || f + flen > static_cast<int>(m.frames.size()))
    throw MoveError("move anchor out of range");
  for (int t = 0; t < flen; ++t)
    if (!(m.frames[f + t] == from.frames[t]))
      throw MoveError("move pattern does not match movie frames at " + std::to_string(f + t));
  Movie out;
  out.strands = m.strands;
  out.frames.assign(m.frames.begin(), m.frames.begin() + f);
  out.frames.insert(out.frames.end(), to.frames.begin(), to.frames.end());
  out.frames.insert(out.frames.end(), m.frames.begin() + f + flen, m.frames.end());
  out.changes.assign(m.changes.begin(), m.changes.begin() + f);
  out.changes.insert(out.changes.end(), to.changes.begin(), to.changes.end());
  out.changes.insert(out.changes.end(), m.changes.begin() + f + flen - 1, m.changes.end());
  return out;
}

// ── Certificate search ──────────────────────────────────────────────────────

namespace {

std::string movie_key(const Movie& m) {
  std::string key;
  for (const BraidWord& f : m.frames) {
    for (const BraidLetter& l : f.letters) {
      key.push_back(l.sign > 0 ? '+' : '-');
      key += std::to_string(l.index);
    }
    key.push_back('/');
  }
  return key;
}

struct Searcher {
  const Movie& goal;
  SearchOptions opts;
  std::vector<MoveId> catalog = {MoveId::CIR1, MoveId::CIR1p, MoveId::CIR2, MoveId::CIR3,
                                 MoveId::CIR4, MoveId::CIM1,  MoveId::CIM2, MoveId::CIM3,
                                 MoveId::CIM4, MoveId::CIM5};

  Searcher(const Movie& g, const SearchOptions& o) : goal(g), opts(o) {}

  static int params_needed(MoveId id) { return move_param_count(id); }

  // Canonical order: move id, direction, sign form, indices, anchor frame.
  std::vector<std::pair<MoveStep, Movie>> candidates(const Movie& m) const {
    std::vector<std::pair<MoveStep, Movie>> out;
    const int n = m.strands;
    for (MoveId id : catalog) {
      if (id == MoveId::CIM4 && !opts.enable_cim4) continue;
      const int np = params_needed(id);
      for (bool forward : {true, false})
        for (int invd = 0; invd <= (opts.include_inverted ? 1 : 0); ++invd)
          for (int i = 1; i <= n - 1; ++i)
            for (int j = (np >= 2 ? 1 : 0); j <= (np >= 2 ? n - 1 : 0); ++j)
              for (int k = (np >= 3 ? 1 : 0); k <= (np >= 3 ? n - 1 : 0); ++k) {
                auto sides = instantiate_move(id, i, j, k, n, invd != 0, false, false);
                if (!sides) continue;
                const MovePattern& from = forward ? sides->first : sides->second;
                const int flen = static_cast<int>(from.frames.size());
                for (int f = 0; f + flen <= static_cast<int>(m.frames.size()); ++f) {
                  bool ok = true;
                  for (int t = 0; t < flen && ok; ++t) ok = m.frames[f + t] == from.frames[t];
                  if (!ok) continue;
                  MoveStep step;
                  step.move = id;
                  step.forward = forward;
                  step.inverted = invd != 0;
                  step.i = i;
                  step.j = j;
                  step.k = k;
                  step.frame = f;
                  out.emplace_back(step, apply_move(m, step, opts.enable_cim4));
                }
              }
    }
    for (int join = 0; join + 1 < static_cast<int>(m.changes.size()); ++join) {
      MoveStep step;
      step.move = MoveId::Locality;
      step.frame = join;
      try {
        Movie next = apply_locality(m, join);
        out.emplace_back(step, std::move(next));
      } catch (const MoveError&) {
      }
    }
    return out;
  }

  mutable std::unordered_map<std::string, int> visited;

  bool dfs(const Movie& m, int remaining, std::vector<MoveStep>& path) const {
    if (m.frames == goal.frames) return true;
    if (remaining == 0) return false;
    auto key = movie_key(m);
    auto it = visited.find(key);
    if (it != visited.end() && it->second >= remaining) return false;
    visited[key] = remaining;
    for (auto& [step, next] : candidates(m)) {
      path.push_back(step);
      if (dfs(next, remaining - 1, path)) return true;
      path.pop_back();
    }
    return false;
  }

  std::optional<Certificate> run_serial(const Movie& start) const {
    if (start.frames == goal.frames) return Certificate{};
    for (int depth = 1; depth <= opts.budget; ++depth) {
      visited.clear();
      std::vector<MoveStep> path;
      if (dfs(start, depth, path)) return Certificate{path};
    }
    return std::nullopt;
  }

  // Fans the first-move choice out over opts.threads workers; each worker
  // scans its chunk in enumeration order, and the earliest successful branch
  // wins, matching the serial result.
  std::optional<Certificate> run_parallel(const Movie& start) const {
    if (start.frames == goal.frames) return Certificate{};
    for (int depth = 1; depth <= opts.budget; ++depth) {
      auto first = candidates(start);
      const std::size_t workers =
          std::min<std::size_t>(static_cast<std::size_t>(opts.threads), first.size());
      if (workers == 0) continue;
      using Hit = std::pair<std::size_t, std::vector<MoveStep>>;
      std::vector<std::future<std::optional<Hit>>> futs;
      for (std::size_t w = 0; w < workers; ++w) {
        futs.push_back(std::async(std::launch::async, [this, depth, w, workers, &first] {
          for (std::size_t idx = w; idx < first.size(); idx += workers) {
            Searcher sub(goal, opts);
            sub.opts.threads = 1;
            std::vector<MoveStep> path{first[idx].first};
            if (sub.dfs(first[idx].second, depth - 1, path))
              return std::optional<Hit>({idx, std::move(path)});
          }
          return std::optional<Hit>();
        }));
      }
      std::optional<Hit> best;
      for (auto& fut : futs) {
        auto r = fut.get();
        if (r && (!best || r->first < best->first)) best = std::move(r);
      }
      if (best) return Certificate{std::move(best->second)};
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<Certificate> movie_equivalent(const Movie& a, const Movie& b,
                                            const SearchOptions& opts) {
  if (auto r = validate_movie(a); !r) throw MoveError("first movie invalid: " + r.message);
  if (auto r = validate_movie(b); !r) throw MoveError("second movie invalid: " + r.message);
  if (a.strands != b.strands) throw MoveError("strand count mismatch");
  if (!(a.frames.front() == b.frames.front()) || !(a.frames.back() == b.frames.back()))
    throw MoveError("endpoint mismatch: movie moves fix the boundary braids");
  Searcher s{b, opts};
  if (opts.threads > 1) return s.run_parallel(a);
  return s.run_serial(a);
}

bool check_certificate(const Movie& a, const Movie& b, const Certificate& cert,
                       bool enable_cim4) {
  Movie cur = a;
  try {
    for (const MoveStep& step : cert.steps) cur = apply_move(cur, step, enable_cim4);
  } catch (const MoveError&) {
    return false;
  }
  return cur.frames == b.frames;
}

// ── Compilation of 2-cells ──────────────────────────────────────────────────

namespace {

Movie glue(Movie a, const Movie& b) {
  if (a.strands != b.strands || !(a.frames.back() == b.frames.front()))
    throw std::logic_error("glue: movies do not share the middle frame");
  a.frames.insert(a.frames.end(), b.frames.begin() + 1, b.frames.end());
  a.changes.insert(a.changes.end(), b.changes.begin(), b.changes.end());
  return a;
}

Movie append_word(Movie m, const BraidWord& w) {
  for (BraidWord& f : m.frames)
    f.letters.insert(f.letters.end(), w.letters.begin(), w.letters.end());
  return m;
}

Movie prepend_word(Movie m, const BraidWord& w) {
  const int by = static_cast<int>(w.letters.size());
  for (BraidWord& f : m.frames)
    f.letters.insert(f.letters.begin(), w.letters.begin(), w.letters.end());
  for (Change& c : m.changes) c = shifted(c, by);
  return m;
}

// Far-commute ladder moving the block at [from, from+len) to position `to`
// (to < from), one letter at a time, first letter first.
Movie commute_block_left(const BraidWord& start, int from, int len, int to) {
  Movie m = constant_movie(start);
  BraidWord cur = start;
  for (int t = 0; t < len; ++t) {
    int src = from + t;
    int dst = to + t;
    for (int p = src - 1; p >= dst; --p) {
      Change c = fc(p);
      cur = apply_change(cur, c);
      m.frames.push_back(cur);
      m.changes.push_back(c);
    }
  }
  return m;
}

// Pair-insertion ladder from the empty word to w . w^-1.
Movie eta_braiding_movie(int p, int q) {
  BraidWord w = block_braid(p, q, +1);
  BraidWord winv = block_braid(p, q, -1);
  const int mlen = static_cast<int>(w.letters.size());
  Movie out;
  out.strands = p + q;
  BraidWord cur{p + q, {}};
  out.frames.push_back(cur);
  for (int t = 0; t < mlen; ++t) {
    Change c = pins(w.letters[t].index, w.letters[t].sign, t);
    cur = apply_change(cur, c);
    out.frames.push_back(cur);
    out.changes.push_back(c);
  }
  if (!(cur == concat(w, winv))) throw std::logic_error("eta ladder endpoint mismatch");
  return out;
}

// Pair-deletion ladder from w^-1 . w to the empty word, innermost pair first.
Movie eps_braiding_movie(int p, int q) {
  BraidWord w = block_braid(p, q, +1);
  BraidWord winv = block_braid(p, q, -1);
  const int mlen = static_cast<int>(w.letters.size());
  Movie out;
  out.strands = p + q;
  BraidWord cur = concat(winv, w);
  out.frames.push_back(cur);
  for (int t = 0; t < mlen; ++t) {
    const BraidLetter& l = w.letters[t];
    Change c = pdel(l.index, -l.sign, mlen - t - 1);
    cur = apply_change(cur, c);
    out.frames.push_back(cur);
    out.changes.push_back(c);
  }
  if (!cur.letters.empty()) throw std::logic_error("eps ladder endpoint mismatch");
  return out;
}

}  // namespace

Movie compile_two_cell(const TwoPtr& a) {
  auto [src1, tgt1] = boundary2(a);
  const BraidWord ws = eval_one_cell(src1).word;
  const BraidWord wt = eval_one_cell(tgt1).word;
  auto constant_ok = [&]() -> std::optional<Movie> {
    if (ws == wt) return constant_movie(ws);
    return std::nullopt;
  };
  switch (a->kind) {
    case TwoKind::Id2: return constant_movie(ws);
    case TwoKind::EtaA:
    case TwoKind::EpsA:
    case TwoKind::EtaL:
    case TwoKind::EpsL:
    case TwoKind::EtaRu:
    case TwoKind::EpsRu:
    case TwoKind::Pi:
    case TwoKind::Mu:
    case TwoKind::Lambda:
    case TwoKind::Rho:
    case TwoKind::Funct0:
    case TwoKind::NatA:
    case TwoKind::NatL:
    case TwoKind::NatRu: {
      if (auto m = constant_ok()) return *m;
      throw UnsupportedCell("coherence cell with differing boundary words: " + two_to_text(a));
    }
    case TwoKind::HexL:
    case TwoKind::HexR: {
      if (auto m = constant_ok()) return *m;
      throw UnsupportedCell("hexagonator at compound objects is outside the structural table: " +
                            two_to_text(a));
    }
    case TwoKind::NatB: {
      if (auto m = constant_ok()) return *m;
      if (ws.letters.size() == wt.letters.size()) {
        for (int p = 0; p + 2 < static_cast<int>(ws.letters.size()); ++p)
          for (auto v :
               {BraidRelVariant::SameSign, BraidRelVariant::MixedFwd, BraidRelVariant::MixedBwd}) {
            Change c = br(p, v);
            auto r = try_change(ws, c);
            if (r && *r == wt) {
              Movie m;
              m.strands = ws.strands;
              m.frames = {ws, wt};
              m.changes = {c};
              return m;
            }
          }
      }
      throw UnsupportedCell("braiding naturality instance outside the structural table: " +
                            two_to_text(a));
    }
    case TwoKind::EtaB: {
      int p = strand_count(a->objs[0]);
      int q = strand_count(a->objs[1]);
      return eta_braiding_movie(p, q);
    }
    case TwoKind::EpsB: {
      int p = strand_count(a->objs[0]);
      int q = strand_count(a->objs[1]);
      return eps_braiding_movie(p, q);
    }
    case TwoKind::Interchange: {
      // shift(w_g) ++ w_f  ->  w_f ++ shift(w_g)
      const CellPtr& f = a->cells[0];
      const CellPtr& g = a->cells[1];
      int lg = static_cast<int>(eval_one_cell(g).word.letters.size());
      int lf = static_cast<int>(eval_one_cell(f).word.letters.size());
      Movie m = commute_block_left(ws, lg, lf, 0);
      if (!(m.frames.back() == wt)) throw std::logic_error("interchange ladder endpoint mismatch");
      return m;
    }
    case TwoKind::Funct2: {
      // w_f w_f' shift(w_g w_g')  ->  w_f shift(w_g) w_f' shift(w_g')
      int lf = static_cast<int>(eval_one_cell(a->cells[0]).word.letters.size());
      int lf2 = static_cast<int>(eval_one_cell(a->cells[1]).word.letters.size());
      int lg = static_cast<int>(eval_one_cell(a->cells[2]).word.letters.size());
      Movie m = commute_block_left(ws, lf + lf2, lg, lf);
      if (!(m.frames.back() == wt)) throw std::logic_error("funct2 ladder endpoint mismatch");
      return m;
    }
    case TwoKind::Inv: return reverse_movie(compile_two_cell(a->fst));
    case TwoKind::VComp: return glue(compile_two_cell(a->fst), compile_two_cell(a->snd));
    case TwoKind::HComp: {
      auto [sf, tf] = boundary2(a->fst);
      auto [ss, ts] = boundary2(a->snd);
      (void)ts;
      Movie phase1 = append_word(compile_two_cell(a->fst), eval_one_cell(ss).word);
      Movie phase2 = prepend_word(compile_two_cell(a->snd), eval_one_cell(tf).word);
      return glue(std::move(phase1), phase2);
    }
    case TwoKind::Tensor2: {
      auto [sl, tl] = boundary2(a->snd);
      auto [sr, tr] = boundary2(a->fst);
      (void)tr;
      int nl = strand_count(src_obj(sl));
      int nr = strand_count(src_obj(sr));
      Movie left = compile_two_cell(a->snd);
      Movie right = compile_two_cell(a->fst);
      BraidWord wsr = shift_word(eval_one_cell(sr).word, nl, nl + nr);
      BraidWord wtl = eval_one_cell(tl).word;
      Movie phase1;
      phase1.strands = nl + nr;
      for (const BraidWord& f : left.frames) {
        BraidWord nf = shift_word(f, 0, nl + nr);
        nf.letters.insert(nf.letters.end(), wsr.letters.begin(), wsr.letters.end());
        phase1.frames.push_back(std::move(nf));
      }
      phase1.changes = left.changes;
      Movie phase2;
      phase2.strands = nl + nr;
      const int poff = static_cast<int>(wtl.letters.size());
      for (const BraidWord& f : right.frames) {
        BraidWord nf = wtl;
        nf.strands = nl + nr;
        BraidWord sh = shift_word(f, nl, nl + nr);
        nf.letters.insert(nf.letters.end(), sh.letters.begin(), sh.letters.end());
        phase2.frames.push_back(std::move(nf));
      }
      for (Change c : right.changes) {
        if (c.kind == ChangeKind::PairInsert || c.kind == ChangeKind::PairDelete) c.index += nl;
        phase2.changes.push_back(shifted(c, poff));
      }
      return glue(std::move(phase1), phase2);
    }
    default: break;
  }
  throw UnsupportedCell("cell kind outside the structural table: " + two_to_text(a));
}

// ── Text formats ────────────────────────────────────────────────────────────

namespace {

std::string change_to_text(const Change& c) {
  switch (c.kind) {
    case ChangeKind::Equal: return "equal";
    case ChangeKind::PairInsert:
      return "pair-insert j=" + std::to_string(c.index) + " sign=" +
             (c.sign > 0 ? std::string("+") : std::string("-")) + " pos=" + std::to_string(c.pos);
    case ChangeKind::PairDelete:
      return "pair-delete j=" + std::to_string(c.index) + " sign=" +
             (c.sign > 0 ? std::string("+") : std::string("-")) + " pos=" + std::to_string(c.pos);
    case ChangeKind::FarCommute: return "far-commute pos=" + std::to_string(c.pos);
    case ChangeKind::BraidRelation: {
      const char* v = c.variant == BraidRelVariant::SameSign
                          ? "same"
                          : (c.variant == BraidRelVariant::MixedFwd ? "mixed-fwd" : "mixed-bwd");
      return "braid-rel pos=" + std::to_string(c.pos) + " variant=" + v;
    }
  }
  return "?";
}

std::unordered_map<std::string, std::string> parse_kv(std::istringstream& in) {
  std::unordered_map<std::string, std::string> kv;
  std::string tok;
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value, got '" + tok + "'");
    kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return kv;
}

int kv_int(const std::unordered_map<std::string, std::string>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw ParseError("missing parameter '" + key + "'");
  return std::stoi(it->second);
}

Change change_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string head;
  if (!(in >> head)) throw ParseError("empty change annotation");
  Change c;
  if (head == "equal") {
    c.kind = ChangeKind::Equal;
    return c;
  }
  auto kv = parse_kv(in);
  if (head == "pair-insert" || head == "pair-delete") {
    c.kind = head == "pair-insert" ? ChangeKind::PairInsert : ChangeKind::PairDelete;
    c.index = kv_int(kv, "j");
    auto s = kv.find("sign");
    if (s == kv.end() || (s->second != "+" && s->second != "-"))
      throw ParseError("pair change needs sign=+ or sign=-");
    c.sign = s->second == "+" ? +1 : -1;
    c.pos = kv_int(kv, "pos");
    return c;
  }
  if (head == "far-commute") {
    c.kind = ChangeKind::FarCommute;
    c.pos = kv_int(kv, "pos");
    return c;
  }
  if (head == "braid-rel") {
    c.kind = ChangeKind::BraidRelation;
    c.pos = kv_int(kv, "pos");
    auto v = kv.find("variant");
    if (v == kv.end()) throw ParseError("braid-rel needs variant=");
    if (v->second == "same")
      c.variant = BraidRelVariant::SameSign;
    else if (v->second == "mixed-fwd")
      c.variant = BraidRelVariant::MixedFwd;
    else if (v->second == "mixed-bwd")
      c.variant = BraidRelVariant::MixedBwd;
    else
      throw ParseError("unknown braid-rel variant '" + v->second + "'");
    return c;
  }
  throw ParseError("unknown change kind '" + head + "'");
}

}  // namespace

std::string movie_to_text(const Movie& m) {
  std::string out = "n=" + std::to_string(m.strands) + "\n";
  for (std::size_t i = 0; i < m.frames.size(); ++i) {
    if (i > 0) out += "#change: " + change_to_text(m.changes[i - 1]) + "\n";
    out += word_to_text(m.frames[i]) + "\n";
  }
  return out;
}

Movie movie_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Movie m;
  bool have_header = false;
  std::vector<std::optional<Change>> declared;
  std::optional<Change> pending;
  while (std::getline(in, line)) {
    std::string trimmed = line;
    auto first = trimmed.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    trimmed = trimmed.substr(first);
    while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' ')) trimmed.pop_back();
    if (trimmed.rfind("#change:", 0) == 0) {
      if (!have_header || m.frames.empty()) throw ParseError("change annotation before any frame");
      if (pending) throw ParseError("two change annotations for one transition");
      pending = change_from_text(trimmed.substr(8));
      continue;
    }
    if (trimmed[0] == '#') continue;
    if (!have_header) {
      if (trimmed.rfind("n=", 0) != 0) throw ParseError("movie must start with n=<int>");
      m.strands = std::stoi(trimmed.substr(2));
      have_header = true;
      continue;
    }
    BraidWord w;
    try {
      w = word_from_text(trimmed);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    if (w.strands != m.strands)
      throw ParseError("frame strand count " + std::to_string(w.strands) +
                       " differs from movie header " + std::to_string(m.strands));
    if (!m.frames.empty()) declared.push_back(pending);
    pending.reset();
    m.frames.push_back(std::move(w));
  }
  if (!have_header) throw ParseError("movie must start with n=<int>");
  if (m.frames.empty()) throw ParseError("movie has no frames");
  if (pending) throw ParseError("trailing change annotation without a following frame");
  for (std::size_t i = 0; i + 1 < m.frames.size(); ++i) {
    if (declared[i]) {
      m.changes.push_back(*declared[i]);
    } else {
      auto c = deduce_change(m.frames[i], m.frames[i + 1]);
      if (!c)
        throw MoveError("no elementary change relates frames " + std::to_string(i) + " and " +
                        std::to_string(i + 1));
      m.changes.push_back(*c);
    }
  }
  if (auto r = validate_movie(m); !r) throw MoveError("invalid movie: " + r.message);
  return m;
}

std::string step_to_text(const MoveStep& s) {
  std::string out = move_name(s.move);
  if (s.move == MoveId::Locality) return out + " @" + std::to_string(s.frame);
  if (s.move == MoveId::ReverseSegment || s.move == MoveId::Palindrome ||
      s.move == MoveId::InvertLetters)
    return out + " len=" + std::to_string(s.len) + " @" + std::to_string(s.frame);
  out += std::string(" dir=") + (s.forward ? "F" : "B");
  int np = 1;
  switch (s.move) {
    case MoveId::CIR1:
    case MoveId::CIR2:
    case MoveId::CIM3:
    case MoveId::CIM5: np = 2; break;
    case MoveId::CIR3:
    case MoveId::CIR4:
    case MoveId::CIM4: np = 3; break;
    default: np = 1; break;
  }
  out += " i=" + std::to_string(s.i);
  if (np >= 2) out += " j=" + std::to_string(s.j);
  if (np >= 3) out += " k=" + std::to_string(s.k);
  if (s.inverted) out += " inv=1";
  if (s.mirrored) out += " pal=1";
  if (s.reversed) out += " rev=1";
  return out + " @" + std::to_string(s.frame);
}

std::string certificate_to_text(const Certificate& c) {
  std::string out;
  for (const MoveStep& s : c.steps) out += step_to_text(s) + "\n";
  return out;
}

Certificate certificate_from_text(const std::string& text) {
  Certificate cert;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line[0] == '#') continue;
    std::istringstream ls(line);
    std::string name;
    ls >> name;
    MoveStep step;
    try {
      step.move = move_from_name(name);
    } catch (const MoveError& e) {
      throw ParseError(e.what());
    }
    std::string tok;
    bool have_frame = false;
    while (ls >> tok) {
      if (tok[0] == '@') {
        step.frame = std::stoi(tok.substr(1));
        have_frame = true;
        continue;
      }
      auto eq = tok.find('=');
      if (eq == std::string::npos) throw ParseError("expected key=value, got '" + tok + "'");
      std::string key = tok.substr(0, eq);
      std::string val = tok.substr(eq + 1);
      if (key == "dir")
        step.forward = val == "F";
      else if (key == "i")
        step.i = std::stoi(val);
      else if (key == "j")
        step.j = std::stoi(val);
      else if (key == "k")
        step.k = std::stoi(val);
      else if (key == "inv")
        step.inverted = val != "0";
      else if (key == "pal")
        step.mirrored = val != "0";
      else if (key == "rev")
        step.reversed = val != "0";
      else if (key == "len")
        step.len = std::stoi(val);
      else
        throw ParseError("unknown certificate parameter '" + key + "'");
    }
    if (!have_frame) throw ParseError("certificate step needs @<frame_index>");
    cert.steps.push_back(step);
  }
  return cert;
}

}  // namespace bicoh
