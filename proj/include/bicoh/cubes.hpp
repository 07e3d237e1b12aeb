#ifndef BICOH_CUBES_HPP
#define BICOH_CUBES_HPP

// Numeric model of the little 1- and 2-cubes operads: axis-aligned cube
// configurations, substitution composition, the named parametric paths of
// the braided structure, path sampling with disjointness margins, and braid
// extraction from point-configuration paths.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bicoh/braid.hpp"

namespace bicoh {

struct LittleCube {
  int dim = 1;                    // 1 or 2
  std::array<double, 2> lo{0, 0};  // per-axis interval start
  std::array<double, 2> hi{1, 1};  // per-axis interval end

  double center(int axis) const { return 0.5 * (lo[axis] + hi[axis]); }
  double length(int axis) const { return hi[axis] - lo[axis]; }
};

LittleCube cube1(double x0, double x1);
LittleCube cube2(double x0, double x1, double y0, double y1);
LittleCube square_at(double cx, double cy, double side);

struct CubeConfig {
  int dim = 1;
  std::vector<LittleCube> cubes;
};

// Open-box disjointness; cubes that merely touch are disjoint.
bool disjoint(const LittleCube& a, const LittleCube& b);
// Largest axis gap between the two boxes (negative when they overlap).
double separation(const LittleCube& a, const LittleCube& b);
bool config_valid(const CubeConfig& c, double margin = 0.0);
// Throws std::invalid_argument when a cube interval leaves [0,1] or is empty.
void check_config(const CubeConfig& c);

CubeConfig identity_config(int dim);
// The binary tensor configuration: intervals (1/5,2/5) and (3/5,4/5), with
// y-interval (2/5,3/5) in dimension 2.
CubeConfig tensor_config(int dim);

// Substitution of each inner configuration into the corresponding outer
// cube.  Throws on arity or dimension mismatch, or an invalid result.
CubeConfig operad_compose(const CubeConfig& outer, const std::vector<CubeConfig>& inners);

enum class NamedPath { Assoc, Braid, HexSource, HexTarget, HexDelta };

struct PathSpec {
  // Exactly one of `named` or `keyframes` is used.
  std::optional<NamedPath> named;
  int dim = 2;
  std::vector<CubeConfig> keyframes;  // piecewise-linear user path

  static PathSpec of(NamedPath p) { return PathSpec{p, 2, {}}; }
  static PathSpec piecewise(std::vector<CubeConfig> keyframes);
};

// Natural parameter domain: [0,1] for Assoc/Braid and piecewise-linear
// paths, [0,3] for the hexagonator paths (one unit per generating 1-cell).
double path_domain_end(const PathSpec& p);
CubeConfig path_at(const PathSpec& p, double t);

struct SampleError : std::runtime_error {
  double t;
  SampleError(const std::string& msg, double t_) : std::runtime_error(msg), t(t_) {}
};

// Uniform samples over the domain; every frame must be config_valid with
// margin 1e-9, else SampleError reports the offending t.
std::vector<CubeConfig> sample_path(const PathSpec& p, int steps);

struct PointConfigPath {
  std::vector<std::vector<std::array<double, 2>>> frames;
};

PointConfigPath centers_of(const std::vector<CubeConfig>& configs);

struct ExtractError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reads a braid word off a path of planar point configurations: strands are
// ordered by x-coordinate per frame and each adjacent transposition between
// consecutive frames emits one letter.  The sign convention is calibrated so
// that the braiding path extracts to the positive generator: at a crossing
// the strand arriving from the left passes on the lower y side.  Throws
// ExtractError on non-generic input (tied x-coordinates, or a transition
// that is not a single adjacent swap).
BraidWord extract_braid(const PointConfigPath& path);

// Samples and extracts, retrying with perturbed sample counts when a frame
// is non-generic.
BraidWord extract_braid_sampled(const PathSpec& p, int steps, int max_attempts = 8);

struct HexCheckReport {
  bool ok = false;
  BraidWord source_word{3, {}};
  BraidWord target_word{3, {}};
  BraidWord delta_word{3, {}};
  bool words_agree = false;
  bool interpolation_distinct = false;
  double min_interpolation_distance = 0.0;
  std::string detail;
};

// Extracts the hexagonator source, target and delta paths, checks the three
// words agree as braids, and checks the straight-line interpolations
// source->delta and delta->target keep sampled centers pairwise distinct
// (distance > 1e-6 on a grid_n x grid_n parameter grid).
HexCheckReport hex_paths_check(int samples = 400, int grid_n = 100);

// CSV rows: t, cube_index, center_x[, center_y], half_width[, half_height],
// 17 significant digits.
std::string path_to_csv(const PathSpec& p, int steps);

}  // namespace bicoh

#endif
