#pragma once

#include <string>

#include <json.hpp>

#include "normpar/classify.hpp"
#include "normpar/norms.hpp"
#include "normpar/numeric.hpp"

namespace normpar {

using OrderedJson = nlohmann::ordered_json;

/// Wire conventions: real entries are plain numbers, complex entries
/// two-element [re, im] arrays; the field tag must be consistent with
/// the entry shapes. Scalars reported in verdicts (mu, beta) are always
/// [re, im].

namespace json_detail {

inline Cx parse_entry(const nlohmann::json& j, Field f) {
  if (f == Field::Real) {
    if (!j.is_number()) throw std::invalid_argument("real entries must be plain numbers");
    return Cx(j.get<double>(), 0.0);
  }
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument("complex entries must be [re, im] arrays");
  return Cx(j[0].get<double>(), j[1].get<double>());
}

inline OrderedJson dump_entry(Cx z, Field f) {
  if (f == Field::Real) return OrderedJson(z.real());
  return OrderedJson::array({z.real(), z.imag()});
}

inline Field parse_field(const nlohmann::json& doc) {
  const std::string f = doc.at("field").get<std::string>();
  if (f == "real") return Field::Real;
  if (f == "complex") return Field::Complex;
  throw std::invalid_argument("field must be \"real\" or \"complex\"");
}

}  // namespace json_detail

inline const char* field_name(Field f) { return f == Field::Real ? "real" : "complex"; }

inline Matrix parse_matrix_document(const nlohmann::json& doc) {
  const Field f = json_detail::parse_field(doc);
  const auto& rows = doc.at("rows");
  if (!rows.is_array() || rows.empty())
    throw std::invalid_argument("rows must be a nonempty array of arrays");
  const std::size_t n = rows.size();
  std::vector<Cx> data;
  data.reserve(n * n);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n)
      throw std::invalid_argument("matrix must be square");
    for (const auto& e : row) data.push_back(json_detail::parse_entry(e, f));
  }
  return Matrix(std::move(data), n, f);
}

inline Vector parse_vector_document(const nlohmann::json& doc) {
  const Field f = json_detail::parse_field(doc);
  const auto& entries = doc.at("entries");
  if (!entries.is_array() || entries.empty())
    throw std::invalid_argument("entries must be a nonempty array");
  std::vector<Cx> e;
  e.reserve(entries.size());
  for (const auto& v : entries) e.push_back(json_detail::parse_entry(v, f));
  return Vector(std::move(e), f);
}

inline OrderedJson matrix_document(const Matrix& m) {
  OrderedJson doc;
  doc["field"] = field_name(m.field());
  OrderedJson rows = OrderedJson::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    OrderedJson row = OrderedJson::array();
    for (std::size_t j = 0; j < m.dim(); ++j)
      row.push_back(json_detail::dump_entry(m(i, j), m.field()));
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

inline OrderedJson vector_entries(const Vector& v) {
  OrderedJson a = OrderedJson::array();
  for (std::size_t k = 0; k < v.dim(); ++k)
    a.push_back(json_detail::dump_entry(v[k], v.field()));
  return a;
}

inline OrderedJson scalar_pair(Cx z) { return OrderedJson::array({z.real(), z.imag()}); }

inline OrderedJson tolerance_document(const Tolerance& tol) {
  OrderedJson t;
  t["eps_eq"] = tol.eps_eq;
  t["eps_peak"] = tol.eps_peak;
  t["eps_rank"] = tol.eps_rank;
  return t;
}

inline OrderedJson structure_class_document(const StructureClass& cls) {
  OrderedJson c;
  c["name"] = structure_kind_name(cls.kind);
  if (cls.gen_perm) {
    c["gamma"] = cls.gen_perm->gamma;
    c["q"] = matrix_document(cls.gen_perm->q)["rows"];
  }
  if (cls.rank_one) {
    c["u"] = vector_entries(cls.rank_one->u);
    c["v"] = vector_entries(cls.rank_one->v);
  }
  if (cls.c_form) {
    c["gamma"] = cls.c_form->gamma;
    c["beta"] = scalar_pair(cls.c_form->beta.value());
    c["q"] = matrix_document(cls.c_form->q)["rows"];
  }
  return c;
}

}  // namespace normpar
