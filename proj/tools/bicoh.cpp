// bicoh: decisions about cells of free braided monoidal structures, braid
// movie rewriting with certificates, and the little-cubes path demos.
//
// Exit codes: 0 verdict-true/valid, 1 verdict-false/invalid/not-found,
// 2 usage or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bicoh/braid.hpp"
#include "bicoh/coherence.hpp"
#include "bicoh/cubes.hpp"
#include "bicoh/functor.hpp"
#include "bicoh/movie.hpp"
#include "bicoh/parser.hpp"
#include "bicoh/terms.hpp"

using nlohmann::json;

namespace {

struct Options {
  bool json_out = false;
};

std::string word_letters(const bicoh::BraidWord& w) {
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out += " ";
    out += (l.sign > 0 ? "s" : "S") + std::to_string(l.index);
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

bicoh::GenSet gens_for(const std::string& flag, const bicoh::CellPtr& term) {
  if (flag.empty()) return bicoh::infer_gens(term);
  std::vector<std::string> names;
  std::stringstream ss(flag);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) names.push_back(item);
  }
  return bicoh::GenSet::of(std::move(names));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.json_out)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

json braid_json(const bicoh::LabeledBraid& b) {
  return json{{"n", b.word.strands}, {"labels", b.source_labels}, {"word", word_letters(b.word)}};
}

int default_budget() {
  if (const char* env = std::getenv("BICOH_BUDGET")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (...) {
    }
  }
  return 64;
}

// ── subcommand bodies ───────────────────────────────────────────────────────

int run_parse(const Options& opt, const std::string& term, const std::string& gens_flag,
              bool as_obj) {
  if (as_obj) {
    bicoh::ObjPtr x = bicoh::parse_obj(term);
    bicoh::GenSet gens = gens_flag.empty() ? bicoh::infer_gens(x) : gens_for(gens_flag, bicoh::id_cell(x));
    auto v = bicoh::well_formed(x, gens);
    json j{{"command", "parse"},
           {"kind", "object"},
           {"ok", v.ok},
           {"printed", bicoh::obj_to_text(x)},
           {"strands", bicoh::strand_count(x)},
           {"labels", bicoh::obj_flatten(x)}};
    if (!v.ok) j["error"] = v.message;
    std::string text = "object " + bicoh::obj_to_text(x) + "\nstrands=" +
                       std::to_string(bicoh::strand_count(x)) + "\n" +
                       (v.ok ? "well-formed\n" : "ill-formed: " + v.message + "\n");
    emit(opt, j, text);
    return v.ok ? 0 : 1;
  }
  bicoh::CellPtr c = bicoh::parse_cell(term);
  bicoh::GenSet gens = gens_for(gens_flag, c);
  auto v = bicoh::well_formed(c, gens);
  json j{{"command", "parse"},
         {"kind", "cell"},
         {"ok", v.ok},
         {"printed", bicoh::cell_to_text(c)},
         {"src", bicoh::obj_to_text(bicoh::src_obj(c))},
         {"tgt", bicoh::obj_to_text(bicoh::tgt_obj(c))}};
  if (!v.ok) j["error"] = v.message;
  std::string text = "cell " + bicoh::cell_to_text(c) + "\nsrc=" +
                     bicoh::obj_to_text(bicoh::src_obj(c)) + "\ntgt=" +
                     bicoh::obj_to_text(bicoh::tgt_obj(c)) + "\n" +
                     (v.ok ? "well-formed\n" : "ill-formed: " + v.message + "\n");
  emit(opt, j, text);
  return v.ok ? 0 : 1;
}

int run_eval(const Options& opt, const std::string& term, const std::string& gens_flag) {
  bicoh::CellPtr c = bicoh::parse_cell(term);
  bicoh::GenSet gens = gens_for(gens_flag, c);
  if (auto v = bicoh::well_formed(c, gens); !v) {
    std::cerr << "ill-formed: " << v.message << "\n";
    return 1;
  }
  bicoh::LabeledBraid b = bicoh::eval_one_cell(c);
  json j = braid_json(b);
  j["command"] = "eval";
  emit(opt, j,
       "n=" + std::to_string(b.word.strands) + " labels=" + join(b.source_labels, ",") +
           " word=" + word_letters(b.word) + "\n");
  return 0;
}

int report_out(const Options& opt, const char* command, const bicoh::DecisionReport& rep) {
  json j{{"command", command},
         {"verdict", rep.verdict},
         {"reason", bicoh::reason_name(rep.reason)},
         {"left", braid_json(rep.left_braid)},
         {"right", braid_json(rep.right_braid)}};
  if (!rep.detail.empty()) j["detail"] = rep.detail;
  std::string text = std::string("verdict=") + (rep.verdict ? "true" : "false") +
                     " reason=" + bicoh::reason_name(rep.reason) + "\n";
  if (!rep.detail.empty()) text += rep.detail + "\n";
  emit(opt, j, text);
  return rep.verdict ? 0 : 1;
}

int run_iso(const Options& opt, const std::string& t1, const std::string& t2,
            const std::string& gens_flag) {
  bicoh::CellPtr f = bicoh::parse_cell(t1);
  bicoh::CellPtr g = bicoh::parse_cell(t2);
  bicoh::GenSet gens = gens_flag.empty()
                           ? bicoh::infer_gens(bicoh::tensor_cell(f, g))
                           : gens_for(gens_flag, f);
  return report_out(opt, "iso", bicoh::iso_exists(f, g, gens));
}

int run_eq2(const Options& opt, const std::string& s1, const std::string& t1,
            const std::string& s2, const std::string& t2, const std::string& gens_flag) {
  bicoh::CellPtr fs = bicoh::parse_cell(s1);
  bicoh::CellPtr ft = bicoh::parse_cell(t1);
  bicoh::CellPtr gs = bicoh::parse_cell(s2);
  bicoh::CellPtr gt = bicoh::parse_cell(t2);
  bicoh::GenSet gens =
      gens_flag.empty()
          ? bicoh::infer_gens(bicoh::tensor_cell(bicoh::tensor_cell(fs, ft), bicoh::tensor_cell(gs, gt)))
          : gens_for(gens_flag, fs);
  // A 2-cell src => tgt exists in the free structure iff the boundary
  // 1-cells are isomorphic; it is then unique, so equality of the two
  // 2-cells reduces to equality of their boundary pairs.
  bicoh::DecisionReport exist1 = bicoh::iso_exists(fs, ft, gens);
  bicoh::DecisionReport exist2 = bicoh::iso_exists(gs, gt, gens);
  if (!exist1.verdict || !exist2.verdict) {
    bicoh::DecisionReport rep = exist1.verdict ? exist2 : exist1;
    rep.detail = "no 2-cell with these boundaries exists: " +
                 (rep.detail.empty() ? bicoh::reason_name(rep.reason) : rep.detail);
    return report_out(opt, "eq2", rep);
  }
  bicoh::DecisionReport rep;
  rep.left_braid = exist1.left_braid;
  rep.right_braid = exist2.left_braid;
  bool equal = bicoh::cell_equal(fs, gs) && bicoh::cell_equal(ft, gt);
  rep.verdict = equal;
  rep.reason = equal ? bicoh::DecisionReason::ParallelEqual : bicoh::DecisionReason::BraidDiffer;
  if (!equal) rep.detail = "the 2-cells are not parallel";
  return report_out(opt, "eq2", rep);
}

int run_movie_check(const Options& opt, const std::string& path, const std::string& cert_path,
                    const std::string& target_path, bool enable_cim4) {
  bicoh::Movie m = bicoh::movie_from_text(read_file(path));
  auto v = bicoh::validate_movie(m);
  json j{{"command", "movie-check"}, {"valid", v.ok}, {"frames", m.frames.size()}};
  if (!v.ok) j["error"] = v.message;
  std::string text = v.ok ? "valid movie with " + std::to_string(m.frames.size()) + " frames\n"
                          : "invalid movie: " + v.message + "\n";
  if (!cert_path.empty()) {
    if (target_path.empty()) throw std::runtime_error("--cert needs --target");
    bicoh::Movie b = bicoh::movie_from_text(read_file(target_path));
    bicoh::Certificate cert = bicoh::certificate_from_text(read_file(cert_path));
    bool ok = bicoh::check_certificate(m, b, cert, enable_cim4);
    j["certificate_ok"] = ok;
    text += ok ? "certificate replays to the target\n" : "certificate does not replay\n";
    emit(opt, j, text);
    return v.ok && ok ? 0 : 1;
  }
  emit(opt, j, text);
  return v.ok ? 0 : 1;
}

int run_movie_search(const Options& opt, const std::string& path_a, const std::string& path_b,
                     int budget, int threads, bool enable_cim4, const std::string& out_path) {
  bicoh::Movie a = bicoh::movie_from_text(read_file(path_a));
  bicoh::Movie b = bicoh::movie_from_text(read_file(path_b));
  bicoh::SearchOptions sopts;
  sopts.budget = budget;
  sopts.threads = threads;
  sopts.enable_cim4 = enable_cim4;
  auto cert = bicoh::movie_equivalent(a, b, sopts);
  json j{{"command", "movie-search"}, {"found", cert.has_value()}, {"budget", budget}};
  std::string text;
  if (cert) {
    j["steps"] = json::array();
    for (const auto& s : cert->steps) j["steps"].push_back(bicoh::step_to_text(s));
    text = "certificate with " + std::to_string(cert->steps.size()) + " steps\n" +
           bicoh::certificate_to_text(*cert);
    if (!out_path.empty()) write_file(out_path, bicoh::certificate_to_text(*cert));
    bool ok = bicoh::check_certificate(a, b, *cert, enable_cim4);
    j["replay_ok"] = ok;
    if (!ok) text += "WARNING: replay check failed\n";
  } else {
    text = "no certificate within budget " + std::to_string(budget) + "\n";
  }
  emit(opt, j, text);
  return cert ? 0 : 1;
}

int run_axioms_fourth(const Options& opt, const std::string& object, int budget, bool enable_cim4,
                      json& jout, std::string& text) {
  bicoh::ObjPtr obj = bicoh::parse_obj(object);
  std::vector<bicoh::ObjPtr> factors;
  auto collect = [&](auto&& self, const bicoh::ObjPtr& node) -> void {
    if (node->kind == bicoh::ObjKind::Tensor) {
      self(self, node->left);
      self(self, node->right);
    } else {
      factors.push_back(node);
    }
  };
  collect(collect, obj);
  if (factors.size() != 3)
    throw std::runtime_error("the fourth axiom needs an object with three generator factors");
  auto pastings = bicoh::fourth_axiom_pastings(factors[0], factors[1], factors[2]);
  bicoh::GenSet gens = bicoh::infer_gens(obj);
  auto rep = bicoh::two_cells_equal(pastings.lhs, pastings.rhs, gens);
  bicoh::Movie ml = bicoh::compile_two_cell(pastings.lhs);
  bicoh::Movie mr = bicoh::compile_two_cell(pastings.rhs);
  bool valid = bicoh::validate_movie(ml).ok && bicoh::validate_movie(mr).ok;
  bicoh::SearchOptions sopts;
  sopts.budget = budget;
  sopts.enable_cim4 = enable_cim4;
  auto cert = bicoh::movie_equivalent(ml, mr, sopts);
  bool cert_ok = cert && bicoh::check_certificate(ml, mr, *cert);
  bool pass = rep.verdict && valid && cert.has_value() && cert_ok;
  jout = json{{"axiom", "fourth"},
              {"object", bicoh::obj_to_text(obj)},
              {"parallel_equal", rep.verdict},
              {"movies_valid", valid},
              {"source_word", word_letters(ml.frames.front())},
              {"target_word", word_letters(ml.frames.back())},
              {"certificate_found", cert.has_value()},
              {"certificate_steps", cert ? cert->steps.size() : 0},
              {"pass", pass}};
  text += std::string("fourth axiom on ") + bicoh::obj_to_text(obj) + ": " +
          (pass ? "verdict true" : "verdict FALSE") + "\n";
  text += "  endpoints " + word_letters(ml.frames.front()) + " -> " +
          word_letters(ml.frames.back()) + "\n";
  if (cert) {
    text += "  certificate (" + std::to_string(cert->steps.size()) + " steps)";
    if (!cert->steps.empty()) {
      text += ":\n";
      for (const auto& s : cert->steps) text += "    " + bicoh::step_to_text(s) + "\n";
    } else {
      text += ": (empty; compiled movies already coincide)\n";
    }
  }
  return pass ? 0 : 1;
}

int run_axioms_units(const Options&, json& jout, std::string& text) {
  bicoh::CransReport rep = bicoh::crans_unit_checks(bicoh::GenSet::of({"x", "y"}), 3);
  jout = json{{"axiom", "units"},
              {"instances", rep.instances},
              {"failures", rep.failures.size()},
              {"pass", rep.ok}};
  text += "unit conditions: " + std::to_string(rep.instances) + " instances, " +
          (rep.ok ? "all pass" : std::to_string(rep.failures.size()) + " failures") + "\n";
  for (const auto& f : rep.failures) text += "  FAIL " + f.condition + ": " + f.detail + "\n";
  return rep.ok ? 0 : 1;
}

struct MoveCase {
  bicoh::MoveId id;
  int i, j, k, strands;
};

int run_axioms_moves(const Options&, bool enable_cim4, json& jout, std::string& text) {
  using bicoh::MoveId;
  // Smallest admissible indices per side condition.
  const MoveCase cases[] = {
      {MoveId::CIR1, 1, 3, 0, 4},  {MoveId::CIR1p, 1, 0, 0, 2}, {MoveId::CIR2, 1, 3, 0, 4},
      {MoveId::CIR3, 1, 3, 5, 6},  {MoveId::CIR4, 1, 2, 4, 5},  {MoveId::CIM1, 1, 0, 0, 2},
      {MoveId::CIM2, 1, 0, 0, 2},  {MoveId::CIM3, 1, 2, 0, 3},  {MoveId::CIM4, 1, 2, 3, 4},
      {MoveId::CIM5, 1, 2, 0, 3},
  };
  jout = json{{"axiom", "moves"}, {"results", json::array()}};
  bool all_pass = true;
  for (const MoveCase& mc : cases) {
    std::string name = bicoh::move_name(mc.id);
    if (mc.id == MoveId::CIM4 && !enable_cim4) {
      jout["results"].push_back(json{{"move", name}, {"status", "gated"}});
      text += "  " + name + ": GATED (reconstructed sequence; enable with --enable-cim4)\n";
      continue;
    }
    auto sides = bicoh::instantiate_move(mc.id, mc.i, mc.j, mc.k, mc.strands, false, false, false);
    bool pass = false;
    std::string detail;
    if (!sides) {
      detail = "side conditions rejected the smallest instance";
    } else {
      bicoh::Movie left{mc.strands, sides->first.frames, sides->first.changes};
      bicoh::Movie right{mc.strands, sides->second.frames, sides->second.changes};
      bool valid = bicoh::validate_movie(left).ok && bicoh::validate_movie(right).ok;
      bool endpoints = left.frames.front() == right.frames.front() &&
                       left.frames.back() == right.frames.back();
      bicoh::SearchOptions sopts;
      sopts.budget = 8;
      sopts.enable_cim4 = enable_cim4;
      auto cert = bicoh::movie_equivalent(left, right, sopts);
      bool one_step = cert && cert->steps.size() <= 1;
      bool replay = cert && bicoh::check_certificate(left, right, *cert, enable_cim4);
      pass = valid && endpoints && one_step && replay;
      if (!valid) detail = "sides are not valid movies";
      else if (!endpoints) detail = "sides do not share endpoints";
      else if (!cert) detail = "no certificate within budget 8";
      else if (!one_step) detail = "certificate has " + std::to_string(cert->steps.size()) + " steps";
      else if (!replay) detail = "certificate replay failed";
    }
    all_pass = all_pass && pass;
    jout["results"].push_back(json{{"move", name}, {"status", pass ? "pass" : "fail"}});
    text += "  " + name + ": " + (pass ? "pass" : "FAIL " + detail) + "\n";
  }
  jout["pass"] = all_pass;
  return all_pass ? 0 : 1;
}

int run_axioms(const Options& opt, const std::string& which, const std::string& object, int budget,
               bool enable_cim4) {
  json j{{"command", "axioms"}, {"which", which}};
  std::string text;
  int rc = 0;
  if (which == "4" || which == "all") {
    json jx;
    rc |= run_axioms_fourth(opt, object, budget, enable_cim4, jx, text);
    j["fourth"] = jx;
  }
  if (which == "units" || which == "all") {
    json jx;
    text += "unit-condition suite:\n";
    rc |= run_axioms_units(opt, jx, text);
    j["units"] = jx;
  }
  if (which == "moves" || which == "all") {
    json jx;
    text += "movie-move suite:\n";
    rc |= run_axioms_moves(opt, enable_cim4, jx, text);
    j["moves"] = jx;
  }
  emit(opt, j, text);
  return rc;
}

int run_cubes(const Options& opt, const std::string& path, const std::string& variant, int samples,
              const std::string& csv_path) {
  bicoh::PathSpec spec = bicoh::PathSpec::of(bicoh::NamedPath::Braid);
  if (path == "assoc") spec = bicoh::PathSpec::of(bicoh::NamedPath::Assoc);
  else if (path == "braid") spec = bicoh::PathSpec::of(bicoh::NamedPath::Braid);
  else if (path == "hex") {
    if (variant == "target") spec = bicoh::PathSpec::of(bicoh::NamedPath::HexTarget);
    else if (variant == "delta") spec = bicoh::PathSpec::of(bicoh::NamedPath::HexDelta);
    else spec = bicoh::PathSpec::of(bicoh::NamedPath::HexSource);
  } else {
    throw CLI::ValidationError("--path must be assoc, braid or hex");
  }

  json j{{"command", "cubes"}, {"path", path}, {"samples", samples}};
  std::string text;
  int rc = 0;
  bicoh::BraidWord word = bicoh::extract_braid_sampled(spec, samples);
  std::string shown = word.letters.empty() ? "(empty)" : word_letters(word);
  j["extracted"] = word_letters(word);
  text += "extracted: " + shown + "\n";
  if (path == "hex") {
    bicoh::HexCheckReport rep = bicoh::hex_paths_check(samples);
    j["hex_check"] = json{{"ok", rep.ok},
                          {"source", word_letters(rep.source_word)},
                          {"target", word_letters(rep.target_word)},
                          {"delta", word_letters(rep.delta_word)},
                          {"min_interpolation_distance", rep.min_interpolation_distance}};
    text += std::string("hex check: ") + (rep.ok ? "pass" : "FAIL " + rep.detail) + "\n";
    text += "  source=" + word_letters(rep.source_word) + " target=" +
            word_letters(rep.target_word) + " delta=" + word_letters(rep.delta_word) + "\n";
    if (!rep.ok) rc = 1;
  }
  if (!csv_path.empty()) {
    write_file(csv_path, bicoh::path_to_csv(spec, samples));
    text += "csv written to " + csv_path + "\n";
  }
  emit(opt, j, text);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coherence computations for braided monoidal structures"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json_out, "emit a machine-readable JSON report");

  std::string term, term2, term3, term4, gens_flag, obj_flag = "(x*x)*x";
  bool as_obj = false;
  std::string file_a, file_b, cert_path, target_path, out_path, which = "all", variant = "source";
  std::string cube_path = "braid", csv_path;
  int budget = default_budget();
  int threads = 1;
  int samples = 200;
  bool enable_cim4 = false;

  CLI::App* parse_cmd = app.add_subcommand("parse", "parse a term and check well-formedness");
  parse_cmd->add_option("term", term)->required();
  parse_cmd->add_option("--gens", gens_flag, "comma-separated generator set (default: inferred)");
  parse_cmd->add_flag("--obj", as_obj, "parse an object instead of a 1-cell");

  CLI::App* eval_cmd = app.add_subcommand("eval", "compile a 1-cell to its labeled braid");
  eval_cmd->add_option("term", term)->required();
  eval_cmd->add_option("--gens", gens_flag);

  CLI::App* iso_cmd = app.add_subcommand("iso", "decide isomorphism of two parallel 1-cells");
  iso_cmd->add_option("left", term)->required();
  iso_cmd->add_option("right", term2)->required();
  iso_cmd->add_option("--gens", gens_flag);

  CLI::App* eq2_cmd =
      app.add_subcommand("eq2", "decide equality of the 2-cells src1=>tgt1 and src2=>tgt2");
  eq2_cmd->add_option("src1", term)->required();
  eq2_cmd->add_option("tgt1", term2)->required();
  eq2_cmd->add_option("src2", term3)->required();
  eq2_cmd->add_option("tgt2", term4)->required();
  eq2_cmd->add_option("--gens", gens_flag);

  CLI::App* mc_cmd = app.add_subcommand("movie-check", "validate a movie file");
  mc_cmd->add_option("movie", file_a)->required();
  mc_cmd->add_option("--cert", cert_path, "replay this certificate");
  mc_cmd->add_option("--target", target_path, "movie the certificate should reach");
  mc_cmd->add_flag("--enable-cim4", enable_cim4);

  CLI::App* ms_cmd = app.add_subcommand("movie-search", "search a certificate between two movies");
  ms_cmd->add_option("movie_a", file_a)->required();
  ms_cmd->add_option("movie_b", file_b)->required();
  ms_cmd->add_option("--budget", budget, "maximum certificate length");
  ms_cmd->add_option("--threads", threads, "fan out the search (same result for any value)");
  ms_cmd->add_option("-o,--out", out_path, "write the certificate to a file");
  ms_cmd->add_flag("--enable-cim4", enable_cim4);

  CLI::App* ax_cmd = app.add_subcommand("axioms", "run axiom verification suites");
  ax_cmd->add_option("--which", which, "4 | units | moves | all")
      ->check(CLI::IsMember({"4", "units", "moves", "all"}));
  ax_cmd->add_option("--object", obj_flag, "three-factor object for the fourth axiom");
  ax_cmd->add_option("--budget", budget);
  ax_cmd->add_flag("--enable-cim4", enable_cim4);

  CLI::App* cu_cmd = app.add_subcommand("cubes", "sample a named path and extract its braid");
  cu_cmd->add_option("--path", cube_path, "assoc | braid | hex")->required();
  cu_cmd->add_option("--variant", variant, "hex path variant: source | target | delta");
  cu_cmd->add_option("--samples", samples, "number of samples (>= 2)");
  cu_cmd->add_option("--emit-csv", csv_path, "dump sampled cube data as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*parse_cmd) return run_parse(opt, term, gens_flag, as_obj);
    if (*eval_cmd) return run_eval(opt, term, gens_flag);
    if (*iso_cmd) return run_iso(opt, term, term2, gens_flag);
    if (*eq2_cmd) return run_eq2(opt, term, term2, term3, term4, gens_flag);
    if (*mc_cmd) return run_movie_check(opt, file_a, cert_path, target_path, enable_cim4);
    if (*ms_cmd) return run_movie_search(opt, file_a, file_b, budget, threads, enable_cim4, out_path);
    if (*ax_cmd) return run_axioms(opt, which, obj_flag, budget, enable_cim4);
    if (*cu_cmd) {
      if (samples < 2) {
        std::cerr << "usage error: --samples must be at least 2\n";
        return 2;
      }
      return run_cubes(opt, cube_path, variant, samples, csv_path);
    }
  } catch (const bicoh::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const bicoh::SampleError& e) {
    std::cerr << "sampling error: " << e.what() << "\n";
    return 1;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
