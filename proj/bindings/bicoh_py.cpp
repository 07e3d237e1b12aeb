// Python bindings for the main operations: term parsing and evaluation,
// braid equality, decisions, movie rewriting, and the cube-path demos.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bicoh/braid.hpp"
#include "bicoh/coherence.hpp"
#include "bicoh/cubes.hpp"
#include "bicoh/functor.hpp"
#include "bicoh/movie.hpp"
#include "bicoh/parser.hpp"
#include "bicoh/terms.hpp"

namespace py = pybind11;

namespace {

bicoh::GenSet gens_or_infer(const bicoh::CellPtr& c, const std::vector<std::string>& gens) {
  if (gens.empty()) return bicoh::infer_gens(c);
  return bicoh::GenSet::of(gens);
}

py::dict report_dict(const bicoh::DecisionReport& rep) {
  py::dict d;
  d["verdict"] = rep.verdict;
  d["reason"] = bicoh::reason_name(rep.reason);
  d["left_labels"] = rep.left_braid.source_labels;
  d["left_word"] = bicoh::word_to_text(rep.left_braid.word);
  d["right_labels"] = rep.right_braid.source_labels;
  d["right_word"] = bicoh::word_to_text(rep.right_braid.word);
  d["detail"] = rep.detail;
  return d;
}

}  // namespace

PYBIND11_MODULE(_bicoh, m) {
  m.doc() = "coherence computations for braided monoidal structures";

  m.def("parse_obj", [](const std::string& text) { return bicoh::obj_to_text(bicoh::parse_obj(text)); },
        py::arg("text"), "Parse an object term; returns its canonical printing.");

  m.def("parse_cell",
        [](const std::string& text) { return bicoh::cell_to_text(bicoh::parse_cell(text)); },
        py::arg("text"), "Parse a 1-cell term; returns its canonical printing.");

  m.def("well_formed",
        [](const std::string& term, const std::vector<std::string>& gens) {
          bicoh::CellPtr c = bicoh::parse_cell(term);
          auto v = bicoh::well_formed(c, gens_or_infer(c, gens));
          return py::make_tuple(v.ok, v.message);
        },
        py::arg("term"), py::arg("gens") = std::vector<std::string>{});

  m.def("cell_boundary",
        [](const std::string& term) {
          bicoh::CellPtr c = bicoh::parse_cell(term);
          return py::make_tuple(bicoh::obj_to_text(bicoh::src_obj(c)),
                                bicoh::obj_to_text(bicoh::tgt_obj(c)));
        },
        py::arg("term"));

  m.def("eval_cell",
        [](const std::string& term) {
          bicoh::LabeledBraid b = bicoh::eval_one_cell(bicoh::parse_cell(term));
          return py::make_tuple(b.source_labels, bicoh::word_to_text(b.word));
        },
        py::arg("term"), "Compile a 1-cell to (source labels, braid word text).");

  m.def("obj_flatten",
        [](const std::string& text) { return bicoh::obj_flatten(bicoh::parse_obj(text)); },
        py::arg("text"));

  m.def("braids_equal",
        [](const std::string& w1, const std::string& w2) {
          return bicoh::are_equal(bicoh::word_from_text(w1), bicoh::word_from_text(w2));
        },
        py::arg("word1"), py::arg("word2"),
        "Exact equality in the braid group; words in 'n=<k> s1 S2 ...' format.");

  m.def("free_reduce",
        [](const std::string& w) { return bicoh::word_to_text(bicoh::free_reduce(bicoh::word_from_text(w))); },
        py::arg("word"));

  m.def("perm_of",
        [](const std::string& w) { return bicoh::perm_of(bicoh::word_from_text(w)); },
        py::arg("word"));

  m.def("exponent_sum",
        [](const std::string& w) { return bicoh::exponent_sum(bicoh::word_from_text(w)); },
        py::arg("word"));

  m.def("block_braid",
        [](int p, int q, int sign) { return bicoh::word_to_text(bicoh::block_braid(p, q, sign)); },
        py::arg("p"), py::arg("q"), py::arg("sign") = 1);

  m.def("sigma_composite",
        [](int k, int i) {
          return bicoh::cell_to_text(bicoh::sigma_composite(k, i, bicoh::gen_obj("x")));
        },
        py::arg("k"), py::arg("i"));

  m.def("iso",
        [](const std::string& f, const std::string& g, const std::vector<std::string>& gens) {
          bicoh::CellPtr cf = bicoh::parse_cell(f);
          bicoh::CellPtr cg = bicoh::parse_cell(g);
          bicoh::GenSet gs = gens.empty() ? bicoh::infer_gens(bicoh::tensor_cell(cf, cg))
                                          : bicoh::GenSet::of(gens);
          return report_dict(bicoh::iso_exists(cf, cg, gs));
        },
        py::arg("f"), py::arg("g"), py::arg("gens") = std::vector<std::string>{});

  m.def("gr_braiding",
        [](const std::vector<std::string>& x, const std::vector<std::string>& y) {
          bicoh::LabeledBraid b = bicoh::gr_braiding(x, y);
          return py::make_tuple(b.source_labels, bicoh::word_to_text(b.word));
        },
        py::arg("x"), py::arg("y"));

  m.def("crans_unit_checks", [](int max_len) {
    auto rep = bicoh::crans_unit_checks(bicoh::GenSet::of({"x", "y"}), max_len);
    py::dict d;
    d["ok"] = rep.ok;
    d["instances"] = rep.instances;
    d["conditions"] = rep.conditions;
    return d;
  }, py::arg("max_len") = 3);

  m.def("validate_movie", [](const std::string& text) {
    auto v = bicoh::validate_movie(bicoh::movie_from_text(text));
    return py::make_tuple(v.ok, v.message);
  }, py::arg("movie_text"));

  m.def("movie_search",
        [](const std::string& a, const std::string& b, int budget) -> py::object {
          bicoh::SearchOptions opts;
          opts.budget = budget;
          auto cert = bicoh::movie_equivalent(bicoh::movie_from_text(a), bicoh::movie_from_text(b),
                                              opts);
          if (!cert) return py::none();
          return py::str(bicoh::certificate_to_text(*cert));
        },
        py::arg("movie_a"), py::arg("movie_b"), py::arg("budget") = 64);

  m.def("check_certificate",
        [](const std::string& a, const std::string& b, const std::string& cert) {
          return bicoh::check_certificate(bicoh::movie_from_text(a), bicoh::movie_from_text(b),
                                          bicoh::certificate_from_text(cert));
        },
        py::arg("movie_a"), py::arg("movie_b"), py::arg("certificate"));

  m.def("fourth_axiom_check", [](int budget) {
    bicoh::ObjPtr x = bicoh::gen_obj("x");
    auto p = bicoh::fourth_axiom_pastings(x, x, x);
    auto rep = bicoh::two_cells_equal(p.lhs, p.rhs, bicoh::GenSet::of({"x"}));
    bicoh::Movie ml = bicoh::compile_two_cell(p.lhs);
    bicoh::Movie mr = bicoh::compile_two_cell(p.rhs);
    bicoh::SearchOptions opts;
    opts.budget = budget;
    auto cert = bicoh::movie_equivalent(ml, mr, opts);
    py::dict d;
    d["parallel_equal"] = rep.verdict;
    d["source_word"] = bicoh::word_to_text(ml.frames.front());
    d["target_word"] = bicoh::word_to_text(ml.frames.back());
    d["certificate_found"] = cert.has_value();
    return d;
  }, py::arg("budget") = 64);

  m.def("extract_braid",
        [](const std::string& path, int samples) {
          bicoh::PathSpec spec = bicoh::PathSpec::of(bicoh::NamedPath::Braid);
          if (path == "assoc") spec = bicoh::PathSpec::of(bicoh::NamedPath::Assoc);
          else if (path == "braid") spec = bicoh::PathSpec::of(bicoh::NamedPath::Braid);
          else if (path == "hex-source") spec = bicoh::PathSpec::of(bicoh::NamedPath::HexSource);
          else if (path == "hex-target") spec = bicoh::PathSpec::of(bicoh::NamedPath::HexTarget);
          else if (path == "hex-delta") spec = bicoh::PathSpec::of(bicoh::NamedPath::HexDelta);
          else throw std::invalid_argument("unknown path name: " + path);
          return bicoh::word_to_text(bicoh::extract_braid_sampled(spec, samples));
        },
        py::arg("path"), py::arg("samples") = 200,
        "Extract the braid of a named path: assoc, braid, hex-source, hex-target, hex-delta.");

  m.def("hex_paths_check", [](int samples) {
    auto rep = bicoh::hex_paths_check(samples);
    py::dict d;
    d["ok"] = rep.ok;
    d["source"] = bicoh::word_to_text(rep.source_word);
    d["target"] = bicoh::word_to_text(rep.target_word);
    d["delta"] = bicoh::word_to_text(rep.delta_word);
    d["min_interpolation_distance"] = rep.min_interpolation_distance;
    return d;
  }, py::arg("samples") = 400);

  m.def("operad_compose_demo", [](bool left) {
    bicoh::CubeConfig m2 = bicoh::tensor_config(1);
    bicoh::CubeConfig id = bicoh::identity_config(1);
    bicoh::CubeConfig out = left ? bicoh::operad_compose(m2, {m2, id})
                                 : bicoh::operad_compose(m2, {id, m2});
    std::vector<std::pair<double, double>> data;
    for (const auto& c : out.cubes) data.emplace_back(c.center(0), c.length(0));
    return data;
  }, py::arg("left") = true, "Centers and lengths of m(m,1) or m(1,m) in dimension 1.");
}
