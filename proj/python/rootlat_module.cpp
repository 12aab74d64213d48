// Python bindings for the main operations: describe / pairing / verify
// mirror the CLI records as plain dicts, snf works on lists of ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rootlat/error.hpp"
#include "rootlat/normal_form.hpp"
#include "rootlat/report.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const nlohmann::ordered_json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default: return py::none();
  }
}

py::object big_int(const rootlat::Int& v) {
  // through the decimal string, so values beyond 64 bits survive
  return py::module_::import("builtins").attr("int")(v.str());
}

py::list int_matrix_py(const rootlat::IntMatrix& m) {
  py::list rows;
  for (int i = 0; i < m.rows(); ++i) {
    py::list row;
    for (int j = 0; j < m.cols(); ++j) row.append(big_int(m(i, j)));
    rows.append(row);
  }
  return rows;
}

rootlat::IntMatrix matrix_from_py(const std::vector<std::vector<py::object>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  rootlat::IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
      throw rootlat::DimensionMismatch("ragged input matrix");
    for (int j = 0; j < c; ++j) {
      std::string digits =
          py::str(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      m(i, j) = rootlat::Int(digits);
    }
  }
  return m;
}

}  // namespace

PYBIND11_MODULE(_rootlat, m) {
  m.doc() = "exact root-system lattice toolkit";

  py::register_exception<rootlat::InvalidLabel>(m, "InvalidLabel", PyExc_ValueError);

  m.def(
      "describe",
      [](const std::string& label, int rank_ceiling) {
        return json_to_py(
            rootlat::to_json(rootlat::describe(rootlat::TypeLabel::parse(label), rank_ceiling)));
      },
      py::arg("label"), py::arg("rank_ceiling") = rootlat::kDefaultRankCeiling,
      "Full record for one type: Cartan matrix, root count, both centers, rho, the induced "
      "pairing, and the type-A partition.");

  m.def(
      "pairing",
      [](const std::string& label, int rank_ceiling) {
        return json_to_py(rootlat::pairing_json(
            rootlat::describe(rootlat::TypeLabel::parse(label), rank_ceiling)));
      },
      py::arg("label"), py::arg("rank_ceiling") = rootlat::kDefaultRankCeiling,
      "Induced center pairing with its generator names; fractions are strings.");

  m.def(
      "verify",
      [](const std::string& scope, int max_rank) {
        auto parsed = rootlat::parse_scope(scope);
        if (!parsed) throw py::value_error("unknown scope '" + scope + "'");
        return json_to_py(rootlat::to_json(rootlat::run_verify(*parsed, max_rank)));
      },
      py::arg("scope") = "all", py::arg("max_rank") = rootlat::kDefaultVerifyMaxRank,
      "Run the invariant suites; returns the full report with an overall 'pass' flag.");

  m.def(
      "snf",
      [](const std::vector<std::vector<py::object>>& rows) {
        rootlat::SnfDecomposition dec = rootlat::snf(matrix_from_py(rows));
        return py::make_tuple(int_matrix_py(dec.s), int_matrix_py(dec.u), int_matrix_py(dec.v));
      },
      py::arg("matrix"),
      "Smith normal form of an integer matrix; returns (S, U, V) with U*M*V = S.");

  m.def(
      "hnf",
      [](const std::vector<std::vector<py::object>>& rows) {
        rootlat::HnfDecomposition dec = rootlat::hnf(matrix_from_py(rows));
        return py::make_tuple(int_matrix_py(dec.h), int_matrix_py(dec.u));
      },
      py::arg("matrix"), "Row Hermite form; returns (H, U) with U*M = H.");
}
