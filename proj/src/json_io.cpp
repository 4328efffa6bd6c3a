#include "peircelab/json_io.hpp"

#include <fstream>
#include <sstream>

namespace peircelab {

namespace {

Index positive_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<long long>() < 1) {
    throw Error(ErrorCode::kInvalidInput, std::string("field '") + key + "' must be a positive integer");
  }
  return static_cast<Index>(j.at(key).get<long long>());
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& a) {
  Json data = Json::array();
  for (Index r = 0; r < a.rows(); ++r)
    for (Index c = 0; c < a.cols(); ++c) data.push_back({a(r, c).real(), a(r, c).imag()});
  return Json{{"rows", a.rows()}, {"cols", a.cols()}, {"data", std::move(data)}};
}

namespace {

Complex entry_from_json(const Json& z) {
  if (z.is_number()) return Complex(z.get<double>(), 0.0);
  if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
    throw Error(ErrorCode::kInvalidInput, "matrix entries must be numbers or [re, im] pairs");
  }
  return Complex(z[0].get<double>(), z[1].get<double>());
}

// [[a, b], [c, d]] with real or [re, im] entries.
ComplexMatrix nested_from_json(const Json& j) {
  if (j.empty() || !j[0].is_array() || j[0].empty()) {
    throw Error(ErrorCode::kInvalidInput, "nested matrix needs non-empty rows");
  }
  const auto rows = static_cast<Index>(j.size());
  const auto cols = static_cast<Index>(j[0].size());
  ComplexMatrix a(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw Error(ErrorCode::kShapeMismatch, "nested matrix rows differ in length");
    }
    for (Index c = 0; c < cols; ++c) a(r, c) = entry_from_json(row[static_cast<std::size_t>(c)]);
  }
  require_finite(a, "matrix");
  return a;
}

}  // namespace

ComplexMatrix matrix_from_json(const Json& j) {
  if (j.is_array()) return nested_from_json(j);
  if (!j.is_object()) throw Error(ErrorCode::kInvalidInput, "matrix must be a JSON object or nested array");
  const Index rows = positive_int(j, "rows");
  const Index cols = positive_int(j, "cols");
  if (!j.contains("data") || !j.at("data").is_array()) {
    throw Error(ErrorCode::kInvalidInput, "matrix needs a 'data' array");
  }
  const Json& data = j.at("data");
  if (static_cast<Index>(data.size()) != rows * cols) {
    throw Error(ErrorCode::kShapeMismatch, "matrix data has " + std::to_string(data.size()) +
                                               " entries, expected " + std::to_string(rows * cols));
  }
  ComplexMatrix a(rows, cols);
  for (Index k = 0; k < rows * cols; ++k) {
    a(k / cols, k % cols) = entry_from_json(data.at(static_cast<std::size_t>(k)));
  }
  require_finite(a, "matrix");
  return a;
}

Json model_to_json(const TripleModel& model) {
  return Json{{"kind", kind_name(model.kind)}, {"m", model.m}, {"n", model.n}};
}

TripleModel model_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw Error(ErrorCode::kInvalidInput, "model descriptor needs a 'kind' string");
  }
  const ModelKind kind = parse_kind(j.at("kind").get<std::string>());
  const Index m = positive_int(j, "m");
  const Index n = positive_int(j, "n");
  if (kind == ModelKind::kRect) return TripleModel::rect(m, n);
  if (m != n) throw Error(ErrorCode::kShapeMismatch, "square model needs m == n");
  return kind == ModelKind::kCStar ? TripleModel::cstar(n) : TripleModel::jbstar(n);
}

Json subspace_to_json(const Subspace& s) {
  Json out = Json::array();
  for (const auto& e : s.elements()) out.push_back(matrix_to_json(e));
  return out;
}

Subspace subspace_from_json(const Json& j, Shape shape) {
  if (!j.is_array()) throw Error(ErrorCode::kInvalidInput, "subspace must be a list of matrices");
  std::vector<ComplexMatrix> elems;
  for (const auto& m : j) elems.push_back(matrix_from_json(m));
  return Subspace::from_orthonormal(shape, elems);
}

Json witness_to_json(const WitnessReport& r) {
  Json residuals = Json::object();
  for (const auto& [name, value] : r.residuals) residuals[name] = value;
  return Json{{"witness", matrix_to_json(r.witness)},
              {"residuals", std::move(residuals)},
              {"positivity_margin", r.positivity_margin},
              {"verified", r.verified},
              {"seed", r.seed}};
}

Json combo_to_json(const ProjectionCombo& c) {
  Json out = Json::array();
  for (const auto& t : c.terms) {
    out.push_back(Json{{"coeff", t.coeff}, {"projection", matrix_to_json(t.projection)}});
  }
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kInvalidInput, e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

}  // namespace peircelab
