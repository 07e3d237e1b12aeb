#include "bicoh/cubes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace bicoh {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSampleMargin = 1e-9;
constexpr double kHexSide = 1.0 / 50.0;

}  // namespace

LittleCube cube1(double x0, double x1) { return LittleCube{1, {x0, 0}, {x1, 1}}; }

LittleCube cube2(double x0, double x1, double y0, double y1) {
  return LittleCube{2, {x0, y0}, {x1, y1}};
}

LittleCube square_at(double cx, double cy, double side) {
  double h = side / 2;
  return cube2(cx - h, cx + h, cy - h, cy + h);
}

bool disjoint(const LittleCube& a, const LittleCube& b) { return separation(a, b) >= 0.0; }

double separation(const LittleCube& a, const LittleCube& b) {
  if (a.dim != b.dim) throw std::invalid_argument("separation: dimension mismatch");
  double best = -1e300;
  for (int ax = 0; ax < a.dim; ++ax) {
    double gap = std::max(b.lo[ax] - a.hi[ax], a.lo[ax] - b.hi[ax]);
    best = std::max(best, gap);
  }
  return best;
}

bool config_valid(const CubeConfig& c, double margin) {
  for (std::size_t i = 0; i < c.cubes.size(); ++i)
    for (std::size_t j = i + 1; j < c.cubes.size(); ++j)
      if (separation(c.cubes[i], c.cubes[j]) < margin) return false;
  return true;
}

void check_config(const CubeConfig& c) {
  if (c.dim != 1 && c.dim != 2) throw std::invalid_argument("config dimension must be 1 or 2");
  for (const LittleCube& q : c.cubes) {
    if (q.dim != c.dim) throw std::invalid_argument("cube dimension differs from config");
    for (int ax = 0; ax < c.dim; ++ax)
      if (!(0.0 <= q.lo[ax] && q.lo[ax] < q.hi[ax] && q.hi[ax] <= 1.0))
        throw std::invalid_argument("cube interval must satisfy 0 <= lo < hi <= 1");
  }
}

CubeConfig identity_config(int dim) {
  CubeConfig c{dim, {}};
  c.cubes.push_back(dim == 1 ? cube1(0, 1) : cube2(0, 1, 0, 1));
  return c;
}

CubeConfig tensor_config(int dim) {
  CubeConfig c{dim, {}};
  if (dim == 1) {
    c.cubes = {cube1(0.2, 0.4), cube1(0.6, 0.8)};
  } else {
    c.cubes = {cube2(0.2, 0.4, 0.4, 0.6), cube2(0.6, 0.8, 0.4, 0.6)};
  }
  return c;
}

CubeConfig operad_compose(const CubeConfig& outer, const std::vector<CubeConfig>& inners) {
  check_config(outer);
  if (inners.size() != outer.cubes.size())
    throw std::invalid_argument("operad_compose: arity mismatch (" +
                                std::to_string(inners.size()) + " inner configurations for " +
                                std::to_string(outer.cubes.size()) + " cubes)");
  CubeConfig out{outer.dim, {}};
  for (std::size_t i = 0; i < inners.size(); ++i) {
    check_config(inners[i]);
    if (inners[i].dim != outer.dim)
      throw std::invalid_argument("operad_compose: dimension mismatch");
    const LittleCube& host = outer.cubes[i];
    for (const LittleCube& c : inners[i].cubes) {
      LittleCube placed;
      placed.dim = outer.dim;
      for (int ax = 0; ax < outer.dim; ++ax) {
        double len = host.hi[ax] - host.lo[ax];
        placed.lo[ax] = host.lo[ax] + len * c.lo[ax];
        placed.hi[ax] = host.lo[ax] + len * c.hi[ax];
      }
      out.cubes.push_back(placed);
    }
  }
  check_config(out);
  if (!config_valid(out))
    throw std::invalid_argument("operad_compose: result cubes are not pairwise disjoint");
  return out;
}

PathSpec PathSpec::piecewise(std::vector<CubeConfig> keyframes) {
  if (keyframes.empty()) throw std::invalid_argument("piecewise path needs keyframes");
  int dim = keyframes.front().dim;
  std::size_t k = keyframes.front().cubes.size();
  for (const CubeConfig& c : keyframes) {
    check_config(c);
    if (c.dim != dim || c.cubes.size() != k)
      throw std::invalid_argument("piecewise keyframes must agree in dimension and arity");
  }
  return PathSpec{std::nullopt, dim, std::move(keyframes)};
}

double path_domain_end(const PathSpec& p) {
  if (!p.named) return 1.0;
  switch (*p.named) {
    case NamedPath::Assoc:
    case NamedPath::Braid: return 1.0;
    default: return 3.0;
  }
}

namespace {

using Pt = std::array<double, 2>;

Pt circle(double cx, double cy, double r, double angle) {
  return {cx + r * std::cos(angle), cy + r * std::sin(angle)};
}

CubeConfig assoc_path_at(double t) {
  CubeConfig c{2, {}};
  c.cubes = {square_at((13 + 2 * t) / 50, 0.5, (1 + 4 * t) / 25),
             square_at((17 + 16 * t) / 50, 0.5, 1.0 / 25),
             square_at((35 + 2 * t) / 50, 0.5, (5 - 4 * t) / 25)};
  return c;
}

CubeConfig braid_path_at(double t) {
  CubeConfig c{2, {}};
  Pt b1 = circle(0.5, 0.5, 0.2, kPi + kPi * t);
  Pt b2 = circle(0.5, 0.5, 0.2, kPi * t);
  c.cubes = {square_at(b1[0], b1[1], 0.2), square_at(b2[0], b2[1], 0.2)};
  return c;
}

// The hexagonator paths run for three time units, one per generating
// 1-cell; each piece below uses its local parameter s = t - piece.
std::array<Pt, 3> hex_source_centers(double t) {
  int piece = std::min(2, static_cast<int>(std::floor(t)));
  double s = t - piece;
  Pt c1, c2, c3;
  switch (piece) {
    case 0:
      c1 = circle(0.3, 0.5, 1.0 / 25, kPi + kPi * s);
      c2 = circle(0.3, 0.5, 1.0 / 25, kPi * s);
      c3 = {0.7, 0.5};
      break;
    case 1:
      c1 = {(17 + 16 * s) / 50, 0.5};
      c2 = {(13 + 2 * s) / 50, 0.5};
      c3 = {(35 + 2 * s) / 50, 0.5};
      break;
    default:
      c1 = circle(0.7, 0.5, 1.0 / 25, kPi + kPi * s);
      c2 = {0.3, 0.5};
      c3 = circle(0.7, 0.5, 1.0 / 25, kPi * s);
      break;
  }
  return {c1, c2, c3};
}

std::array<Pt, 3> hex_target_centers(double t) {
  int piece = std::min(2, static_cast<int>(std::floor(t)));
  double s = t - piece;
  Pt c1, c2, c3;
  switch (piece) {
    case 0:
      c1 = {(13 + 2 * s) / 50, 0.5};
      c2 = {(17 + 16 * s) / 50, 0.5};
      c3 = {(35 + 2 * s) / 50, 0.5};
      break;
    case 1:
      c1 = circle(0.5, 0.5, 0.2, kPi + kPi * s);
      c2 = circle(23.0 / 50, 0.5, 0.2, kPi * s);
      c3 = circle(27.0 / 50, 0.5, 0.2, kPi * s);
      break;
    default:
      c1 = {(35 + 2 * s) / 50, 0.5};
      c2 = {(13 + 2 * s) / 50, 0.5};
      c3 = {(17 + 16 * s) / 50, 0.5};
      break;
  }
  return {c1, c2, c3};
}

std::array<Pt, 3> hex_delta_centers(double t) {
  return {circle(0.5, 0.5, 6.0 / 25, kPi + kPi * t / 3), circle(0.3, 0.5, 2.0 / 25, kPi * t / 3),
          circle(17.0 / 25, 0.5, 1.0 / 50, kPi * t / 3)};
}

CubeConfig centers_to_config(const std::array<Pt, 3>& centers) {
  CubeConfig c{2, {}};
  for (const Pt& p : centers) c.cubes.push_back(square_at(p[0], p[1], kHexSide));
  return c;
}

CubeConfig piecewise_at(const PathSpec& p, double t) {
  const auto& keys = p.keyframes;
  if (keys.size() == 1) return keys.front();
  double clamped = std::clamp(t, 0.0, 1.0);
  double x = clamped * static_cast<double>(keys.size() - 1);
  std::size_t seg = std::min(keys.size() - 2, static_cast<std::size_t>(std::floor(x)));
  double s = x - static_cast<double>(seg);
  CubeConfig out{p.dim, {}};
  for (std::size_t i = 0; i < keys[seg].cubes.size(); ++i) {
    const LittleCube& a = keys[seg].cubes[i];
    const LittleCube& b = keys[seg + 1].cubes[i];
    LittleCube c;
    c.dim = p.dim;
    for (int ax = 0; ax < p.dim; ++ax) {
      c.lo[ax] = (1 - s) * a.lo[ax] + s * b.lo[ax];
      c.hi[ax] = (1 - s) * a.hi[ax] + s * b.hi[ax];
    }
    out.cubes.push_back(c);
  }
  return out;
}

}  // namespace

CubeConfig path_at(const PathSpec& p, double t) {
  if (!p.named) return piecewise_at(p, t);
  switch (*p.named) {
    case NamedPath::Assoc: return assoc_path_at(t);
    case NamedPath::Braid: return braid_path_at(t);
    case NamedPath::HexSource: return centers_to_config(hex_source_centers(t));
    case NamedPath::HexTarget: return centers_to_config(hex_target_centers(t));
    case NamedPath::HexDelta: return centers_to_config(hex_delta_centers(t));
  }
  throw std::logic_error("path_at: bad spec");
}

std::vector<CubeConfig> sample_path(const PathSpec& p, int steps) {
  if (steps < 2) throw std::invalid_argument("sample_path needs steps >= 2");
  double end = path_domain_end(p);
  std::vector<CubeConfig> out;
  out.reserve(steps);
  for (int k = 0; k < steps; ++k) {
    double t = end * static_cast<double>(k) / static_cast<double>(steps - 1);
    CubeConfig c = path_at(p, t);
    check_config(c);
    if (!config_valid(c, kSampleMargin))
      throw SampleError("sampled configuration is not disjoint at t=" + std::to_string(t), t);
    out.push_back(std::move(c));
  }
  return out;
}

PointConfigPath centers_of(const std::vector<CubeConfig>& configs) {
  PointConfigPath path;
  for (const CubeConfig& c : configs) {
    std::vector<Pt> pts;
    for (const LittleCube& q : c.cubes)
      pts.push_back({q.center(0), c.dim == 2 ? q.center(1) : 0.0});
    path.frames.push_back(std::move(pts));
  }
  return path;
}

BraidWord extract_braid(const PointConfigPath& path) {
  if (path.frames.empty()) throw ExtractError("empty path");
  const int n = static_cast<int>(path.frames.front().size());
  auto order_of = [&](const std::vector<Pt>& pts) {
    std::vector<int> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return pts[a][0] < pts[b][0]; });
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
      if (std::abs(pts[order[i]][0] - pts[order[i + 1]][0]) < 1e-12)
        throw ExtractError("tied x-coordinates: frame is not generic");
    return order;
  };

  BraidWord w{n, {}};
  std::vector<int> prev = order_of(path.frames.front());
  for (std::size_t f = 1; f < path.frames.size(); ++f) {
    if (static_cast<int>(path.frames[f].size()) != n)
      throw ExtractError("frames have differing point counts");
    std::vector<int> cur = order_of(path.frames[f]);
    std::vector<int> diffs;
    for (int p = 0; p < n; ++p)
      if (prev[p] != cur[p]) diffs.push_back(p);
    if (diffs.empty()) {
      prev = std::move(cur);
      continue;
    }
    if (diffs.size() != 2 || diffs[1] != diffs[0] + 1 || prev[diffs[0]] != cur[diffs[1]] ||
        prev[diffs[1]] != cur[diffs[0]])
      throw ExtractError("transition is not a single adjacent swap: resample finer");
    int p = diffs[0];
    int left = prev[p], right = prev[p + 1];
    double y_left = 0.5 * (path.frames[f - 1][left][1] + path.frames[f][left][1]);
    double y_right = 0.5 * (path.frames[f - 1][right][1] + path.frames[f][right][1]);
    if (std::abs(y_left - y_right) < 1e-12)
      throw ExtractError("crossing strands share height: frame is not generic");
    w.letters.push_back({p + 1, y_left < y_right ? +1 : -1});
    prev = std::move(cur);
  }
  return w;
}

BraidWord extract_braid_sampled(const PathSpec& p, int steps, int max_attempts) {
  const int jitter[] = {0, 1, 3, 7, 17, 0, 0, 0};
  int base = steps;
  std::string last_error = "extraction failed";
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    int s = attempt < 5 ? base + jitter[attempt] : base * (attempt - 3) + 1;
    try {
      return extract_braid(centers_of(sample_path(p, s)));
    } catch (const ExtractError& e) {
      last_error = e.what();
    }
  }
  throw ExtractError(last_error + " (after resampling)");
}

HexCheckReport hex_paths_check(int samples, int grid_n) {
  HexCheckReport rep;
  rep.source_word = extract_braid_sampled(PathSpec::of(NamedPath::HexSource), samples);
  rep.target_word = extract_braid_sampled(PathSpec::of(NamedPath::HexTarget), samples);
  rep.delta_word = extract_braid_sampled(PathSpec::of(NamedPath::HexDelta), samples);
  rep.words_agree = are_equal(rep.source_word, rep.delta_word) &&
                    are_equal(rep.delta_word, rep.target_word);
  if (!rep.words_agree) rep.detail = "extracted words disagree";

  double min_dist = 1e300;
  double bad_u = 0, bad_t = 0;
  auto scan = [&](NamedPath from, NamedPath to) {
    for (int gu = 0; gu < grid_n; ++gu) {
      double u = static_cast<double>(gu) / (grid_n - 1);
      for (int gt = 0; gt < grid_n; ++gt) {
        double t = 3.0 * static_cast<double>(gt) / (grid_n - 1);
        CubeConfig a = path_at(PathSpec::of(from), t);
        CubeConfig b = path_at(PathSpec::of(to), t);
        Pt pts[3];
        for (int i = 0; i < 3; ++i)
          pts[i] = {(1 - u) * a.cubes[i].center(0) + u * b.cubes[i].center(0),
                    (1 - u) * a.cubes[i].center(1) + u * b.cubes[i].center(1)};
        for (int i = 0; i < 3; ++i)
          for (int j = i + 1; j < 3; ++j) {
            double d = std::hypot(pts[i][0] - pts[j][0], pts[i][1] - pts[j][1]);
            if (d < min_dist) {
              min_dist = d;
              bad_u = u;
              bad_t = t;
            }
          }
      }
    }
  };
  scan(NamedPath::HexSource, NamedPath::HexDelta);
  scan(NamedPath::HexDelta, NamedPath::HexTarget);
  rep.min_interpolation_distance = min_dist;
  rep.interpolation_distinct = min_dist > 1e-6;
  if (!rep.interpolation_distinct)
    rep.detail += std::string(rep.detail.empty() ? "" : "; ") +
                  "interpolated centers collide near (s=" + std::to_string(bad_u) +
                  ", t=" + std::to_string(bad_t) + ")";
  rep.ok = rep.words_agree && rep.interpolation_distinct;
  return rep;
}

std::string path_to_csv(const PathSpec& p, int steps) {
  std::vector<CubeConfig> configs = sample_path(p, steps);
  double end = path_domain_end(p);
  std::string out = p.dim == 2 ? "t,cube_index,center_x,center_y,half_width,half_height\n"
                               : "t,cube_index,center_x,half_width\n";
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  for (int k = 0; k < steps; ++k) {
    double t = end * static_cast<double>(k) / static_cast<double>(steps - 1);
    const CubeConfig& c = configs[k];
    for (std::size_t i = 0; i < c.cubes.size(); ++i) {
      const LittleCube& q = c.cubes[i];
      out += num(t) + "," + std::to_string(i) + "," + num(q.center(0));
      if (p.dim == 2) out += "," + num(q.center(1));
      out += "," + num(q.length(0) / 2);
      if (p.dim == 2) out += "," + num(q.length(1) / 2);
      out += "\n";
    }
  }
  return out;
}

}  // namespace bicoh
