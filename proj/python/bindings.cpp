#include "postimp/classify.hpp"
#include "postimp/decide.hpp"
#include "postimp/error.hpp"
#include "postimp/gf2.hpp"
#include "postimp/io.hpp"
#include "postimp/reductions.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>

namespace py = pybind11;
using namespace postimp;

namespace {

py::dict verdict(const ImpComplexity& v) {
  py::dict d;
  d["class"] = std::string(to_string(v.complexity));
  d["fragment"] = std::string(to_string(v.fragment));
  d["witness"] = v.witness;
  return d;
}

py::dict decision(const Instance& inst, const Decision& d) {
  py::dict out;
  out["implies"] = d.implies;
  out["fragment_used"] = std::string(to_string(d.fragment_used));
  out["detail"] = d.detail;
  if (d.counterexample) {
    py::dict sigma;
    for (std::size_t i = 0; i < inst.num_variables(); ++i)
      sigma[py::str(inst.variables()[i])] = static_cast<int>((*d.counterexample)[i]);
    out["counterexample"] = sigma;
  } else {
    out["counterexample"] = py::none();
  }
  return out;
}

std::optional<Fragment> fragment_named(const std::optional<std::string>& name) {
  if (!name)
    return std::nullopt;
  static const std::map<std::string, Fragment> names{{"general", Fragment::General},
                                                     {"linear", Fragment::Linear},
                                                     {"or", Fragment::Or},
                                                     {"and", Fragment::And},
                                                     {"unary", Fragment::Unary}};
  const auto it = names.find(*name);
  if (it == names.end())
    throw py::value_error("unknown fragment '" + *name + "'");
  return it->second;
}

// Terms as lists of signed 1-based indices: 3 is x3, -3 is not x3.
Dnf dnf_from(const std::vector<std::vector<long>>& terms) {
  Dnf dnf;
  for (const auto& t : terms) {
    std::vector<Literal> term;
    for (long l : t) {
      if (l == 0)
        throw py::value_error("literal 0 is not allowed; use 1-based indices");
      const auto v = static_cast<std::size_t>(l < 0 ? -l : l);
      term.push_back({v - 1, l > 0});
      dnf.num_variables = std::max(dnf.num_variables, v);
    }
    dnf.terms.push_back(std::move(term));
  }
  return dnf;
}

gf2::System system_from(const std::vector<std::vector<int>>& rows, const std::vector<int>& rhs, std::size_t n) {
  if (rows.size() != rhs.size())
    throw py::value_error("rows and rhs differ in length");
  gf2::System s(n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<bool> row;
    for (int c : rows[r])
      row.push_back(c != 0);
    s.add(row, rhs[r] != 0);
  }
  return s;
}

std::size_t width(const std::vector<std::vector<int>>& rows, std::optional<std::size_t> n) {
  if (n)
    return *n;
  if (rows.empty())
    throw py::value_error("give the number of unknowns for an empty system");
  return rows.front().size();
}

} // namespace

PYBIND11_MODULE(postimp, m) {
  m.doc() = "Implication problems over Post's lattice";

  // Translators run newest first, so the base class goes in first.
  auto& error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<ArityError>(m, "ArityError", error.ptr());
  py::register_exception<FragmentError>(m, "FragmentError", error.ptr());
  py::register_exception<VariableCapError>(m, "VariableCapError", error.ptr());

  py::class_<BooleanFunction>(m, "BooleanFunction")
      .def(py::init([](const std::string& name, const std::string& bits) { return BooleanFunction::from_bits(name, bits); }),
           py::arg("name"), py::arg("bits"))
      .def_property_readonly("name", &BooleanFunction::name)
      .def_property_readonly("arity", &BooleanFunction::arity)
      .def_property_readonly("bits", &BooleanFunction::bits)
      .def("__call__",
           [](const BooleanFunction& f, const std::vector<bool>& args) { return evaluate(f, args); })
      .def("is_monotone", [](const BooleanFunction& f) { return is_monotone(f); })
      .def("is_self_dual", [](const BooleanFunction& f) { return is_self_dual(f); })
      .def("is_linear", [](const BooleanFunction& f) { return is_linear(f); })
      .def("is_reproducing", [](const BooleanFunction& f, bool c) { return is_reproducing(f, c); }, py::arg("c"))
      .def("is_separating", [](const BooleanFunction& f, bool c) { return is_separating(f, c); }, py::arg("c"))
      .def("relevant_variables", [](const BooleanFunction& f) { return relevant_variables(f); })
      .def("__eq__", [](const BooleanFunction& a, const BooleanFunction& b) { return a == b; })
      .def("__repr__", [](const BooleanFunction& f) {
        return "BooleanFunction('" + f.name() + "', '" + f.bits() + "')";
      });

  py::class_<Base, std::shared_ptr<Base>>(m, "Base")
      .def(py::init([](const std::vector<BooleanFunction>& fs) { return std::make_shared<Base>(fs); }))
      .def("__len__", &Base::size)
      .def("__getitem__", [](const Base& b, std::size_t i) {
        if (i >= b.size())
          throw py::index_error();
        return b[i];
      })
      .def("__str__", [](const Base& b) { return io::format_base(b); });

  py::class_<Instance>(m, "Instance")
      .def(py::init([](const std::shared_ptr<Base>& base, const std::vector<std::string>& premises,
                       const std::string& conclusion) {
             return parse_instance(base, premises, conclusion);
           }),
           py::arg("base"), py::arg("premises"), py::arg("conclusion"))
      .def_property_readonly("variables", &Instance::variables)
      .def_property_readonly("base", [](const Instance& i) { return std::const_pointer_cast<Base>(i.base_ptr()); })
      .def_property_readonly("premises",
                             [](const Instance& i) {
                               std::vector<std::string> out;
                               for (const auto& p : i.premises())
                                 out.push_back(to_string(p));
                               return out;
                             })
      .def_property_readonly("conclusion", [](const Instance& i) { return to_string(i.conclusion()); })
      .def("__str__", [](const Instance& i) { return io::format_instance(i, std::nullopt); });

  m.def("parse_base", [](const std::string& text) { return std::const_pointer_cast<Base>(io::parse_base(text)); },
        py::arg("text"));
  m.def("standard_bases", [] {
    py::dict out;
    for (const auto& [clone, base] : standard_bases())
      out[py::str(clone)] = std::const_pointer_cast<Base>(base);
    return out;
  });
  m.def(
      "classify",
      [](const Base& base, bool single) {
        return verdict(single ? classify_base_single_premise(base) : classify_base(base));
      },
      py::arg("base"), py::arg("single_premise") = false);
  m.def(
      "closure",
      [](const Base& base, unsigned arity) {
        std::vector<std::string> out;
        for (const auto& f : closure_fixed_arity(base, arity))
          out.push_back(f.bits());
        return out;
      },
      py::arg("base"), py::arg("arity"));
  m.def(
      "contains_generator", [](const Base& base, const BooleanFunction& g) { return contains_generator(base, g); },
      py::arg("base"), py::arg("g"));

  m.def(
      "decide",
      [](const Instance& inst, bool single, std::optional<std::string> force, std::size_t max_vars,
         unsigned threads) {
        const auto d = dispatch(inst, single ? PremiseMode::Single : PremiseMode::Set, fragment_named(force),
                                OracleOptions{max_vars, threads});
        return decision(inst, d);
      },
      py::arg("instance"), py::arg("single_premise") = false, py::arg("force") = py::none(),
      py::arg("max_vars") = 24, py::arg("threads") = 1);
  m.def(
      "decide_oracle",
      [](const Instance& inst, std::size_t max_vars, unsigned threads) {
        return decision(inst, decide_oracle(inst, OracleOptions{max_vars, threads}));
      },
      py::arg("instance"), py::arg("max_vars") = 24, py::arg("threads") = 1);

  m.def(
      "gf2_is_consistent",
      [](const std::vector<std::vector<int>>& rows, const std::vector<int>& rhs, std::optional<std::size_t> n) {
        return gf2::is_consistent(system_from(rows, rhs, width(rows, n)));
      },
      py::arg("rows"), py::arg("rhs"), py::arg("n") = py::none());
  m.def(
      "gf2_solve",
      [](const std::vector<std::vector<int>>& rows, const std::vector<int>& rhs,
         std::optional<std::size_t> n) -> std::optional<std::vector<int>> {
        const auto x = gf2::solve(system_from(rows, rhs, width(rows, n)));
        if (!x)
          return std::nullopt;
        return std::vector<int>(x->begin(), x->end());
      },
      py::arg("rows"), py::arg("rhs"), py::arg("n") = py::none());

  m.def(
      "reduce_tautdnf_monotone", [](const std::vector<std::vector<long>>& t) { return reduce_tautdnf_monotone(dnf_from(t)); },
      py::arg("terms"));
  m.def(
      "reduce_tautdnf_d2", [](const std::vector<std::vector<long>>& t) { return reduce_tautdnf_d2(dnf_from(t)); },
      py::arg("terms"));
  m.def(
      "reduce_linsys",
      [](const std::vector<std::vector<int>>& rows, const std::vector<int>& rhs, std::optional<std::size_t> n) {
        return reduce_linsys_to_imp(system_from(rows, rhs, width(rows, n))).instance;
      },
      py::arg("rows"), py::arg("rhs"), py::arg("n") = py::none());
  m.def("reduce_mod2_unary", [](const std::string& w) { return reduce_mod2_unary(w); }, py::arg("w"));
  m.def("reduce_mod2_single_linear", [](const std::string& w) { return reduce_mod2_single_linear(w); }, py::arg("w"));
}
