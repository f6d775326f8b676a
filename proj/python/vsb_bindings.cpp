#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vsb/cyclotomic.hpp"
#include "vsb/equivalence.hpp"
#include "vsb/morphisms.hpp"
#include "vsb/presentations.hpp"
#include "vsb/representation.hpp"
#include "vsb/schreier.hpp"
#include "vsb/words.hpp"

namespace py = pybind11;
using namespace vsb;

namespace {

py::int_ to_py(Integer const& v) {
  return py::int_(py::module_::import("builtins").attr("int")(v.str()));
}

py::list coeffs(CycInt const& c) {
  py::list out;
  for (auto const& x : c.coefficients()) out.append(to_py(x));
  return out;
}

py::dict params_dict(RelationParams const& params) {
  py::dict d;
  for (auto const& [k, v] : params) d[py::str(k)] = v;
  return d;
}

py::dict relation_dict(Relation const& r) {
  py::dict d;
  d["family"] = r.family;
  d["params"] = params_dict(r.params);
  d["lhs"] = format_word(r.lhs);
  d["rhs"] = format_word(r.rhs);
  d["derived"] = r.derived;
  return d;
}

py::dict witness_dict(Witness const& w) {
  py::dict d;
  d["state"] = w.state.k;
  d["lhs"] = py::make_tuple(coeffs(w.lhs.scalar), w.lhs.state.k);
  d["rhs"] = py::make_tuple(coeffs(w.rhs.scalar), w.rhs.state.k);
  return d;
}

}  // namespace

PYBIND11_MODULE(vsbraid, m) {
  m.doc() = "Virtual singular braid words, presentations and their cyclotomic representation";

  py::register_exception<NotPureError>(m, "NotPureError", PyExc_ValueError);

  m.def("normalize", [](std::string const& w, int n) { return format_word(parse_word(w, n)); },
        py::arg("word"), py::arg("n"));
  m.def("free_reduce", [](std::string const& w, int n) { return format_word(free_reduce(parse_word(w, n))); },
        py::arg("word"), py::arg("n"));
  m.def(
      "permutation",
      [](std::string const& w, int n) {
        auto const p = permutation_of(expand_generalized(parse_word(w, n)));
        return std::vector<int>(p.images().begin(), p.images().end());
      },
      py::arg("word"), py::arg("n"), "images [pi(1), ..., pi(n)]");
  m.def(
      "cycle_notation",
      [](std::string const& w, int n) { return permutation_of(expand_generalized(parse_word(w, n))).cycle_notation(); },
      py::arg("word"), py::arg("n"));
  m.def(
      "translate",
      [](std::string const& w, int n, std::string const& to) {
        return format_word(normalize_to(parse_word(w, n), alphabet_from_name(to)));
      },
      py::arg("word"), py::arg("n"), py::arg("to"));
  m.def(
      "decompose",
      [](std::string const& w, int n) {
        auto const d = decompose(parse_word(w, n));
        return py::make_tuple(format_word(d.pure), format_word(d.representative));
      },
      py::arg("word"), py::arg("n"), "(pure part, coset representative)");
  m.def("rewrite_pure", [](std::string const& w, int n) { return format_word(rewrite_pure(parse_word(w, n))); },
        py::arg("word"), py::arg("n"));
  m.def(
      "rep_equal",
      [](std::string const& a, std::string const& b, int n, int p) {
        return rep_equal(parse_word(a, n), parse_word(b, n), p);
      },
      py::arg("w1"), py::arg("w2"), py::arg("n"), py::arg("p") = 3);
  m.def(
      "first_difference",
      [](std::string const& a, std::string const& b, int n, int p) -> py::object {
        auto const d = first_difference(parse_word(a, n), parse_word(b, n), p);
        if (!d) return py::none();
        return witness_dict(*d);
      },
      py::arg("w1"), py::arg("w2"), py::arg("n"), py::arg("p") = 3);
  m.def(
      "fingerprint",
      [](std::string const& w, int n, int p) {
        py::list out;
        auto const states = basis_states(n, p);
        auto const images = fingerprint(parse_word(w, n), p);
        for (std::size_t i = 0; i < states.size(); ++i) {
          out.append(py::make_tuple(states[i].k, coeffs(images[i].scalar), images[i].state.k));
        }
        return out;
      },
      py::arg("word"), py::arg("n"), py::arg("p") = 3, "list of (state, scalar coefficients, image state)");
  m.def(
      "relations",
      [](std::string const& catalog, int n) {
        py::list out;
        for (auto const& r : instantiate_relations(catalog_from_name(catalog), n)) out.append(relation_dict(r));
        return out;
      },
      py::arg("catalog"), py::arg("n"));
  m.def(
      "verify",
      [](std::string const& catalog, int n, int p, unsigned threads) {
        VerificationReport report;
        {
          py::gil_scoped_release release;
          report = verify_relations(catalog_from_name(catalog), n, p, threads);
        }
        py::list families;
        for (auto const& f : report.families) {
          py::dict d;
          d["family"] = f.family;
          d["derived"] = f.derived;
          d["instances"] = f.instances;
          d["passed"] = f.passed;
          if (f.first_failure) d["witness"] = witness_dict(f.first_failure->witness);
          families.append(d);
        }
        py::dict out;
        out["ok"] = report.ok();
        out["families"] = families;
        return out;
      },
      py::arg("catalog"), py::arg("n"), py::arg("p") = 3, py::arg("threads") = 1);
  m.def("verify_ops", [](int p) { return verify_operator_conditions(p).ok(); }, py::arg("p"));
  m.def(
      "equal",
      [](std::string const& a, std::string const& b, int n, std::string const& catalog, std::size_t depth,
         std::size_t max_states) {
        SearchBudget budget;
        budget.max_depth = depth;
        budget.max_states = max_states;
        Verdict v;
        {
          py::gil_scoped_release release;
          v = search_equivalent(parse_word(a, n), parse_word(b, n), catalog_from_name(catalog), budget);
        }
        py::list trace;
        for (auto const& s : v.trace) {
          trace.append(py::make_tuple(s.relation.family, s.position,
                                      s.direction == Direction::Forward ? "forward" : "backward"));
        }
        py::dict out;
        out["equivalent"] = v.outcome == Outcome::Equivalent;
        out["steps"] = v.relation_steps;
        out["states"] = v.stats.states;
        out["trace"] = trace;
        return out;
      },
      py::arg("w1"), py::arg("w2"), py::arg("n"), py::arg("catalog") = "standard", py::arg("depth") = 8,
      py::arg("max_states") = 200000);
}
