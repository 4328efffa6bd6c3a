#include "peircelab/triple_model.hpp"

namespace peircelab {

TripleModel TripleModel::rect(Index m, Index n) {
  if (m < 1 || n < 1) throw Error(ErrorCode::kInvalidInput, "model dimensions must be positive");
  return {ModelKind::kRect, m, n};
}

TripleModel TripleModel::cstar(Index n) {
  if (n < 1) throw Error(ErrorCode::kInvalidInput, "model dimension must be positive");
  return {ModelKind::kCStar, n, n};
}

TripleModel TripleModel::jbstar(Index n) {
  if (n < 1) throw Error(ErrorCode::kInvalidInput, "model dimension must be positive");
  return {ModelKind::kJBStar, n, n};
}

std::string TripleModel::name() const {
  return std::string(kind_name(kind)) + "(" + std::to_string(m) + "x" + std::to_string(n) + ")";
}

std::string_view kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::kRect: return "rect";
    case ModelKind::kCStar: return "cstar";
    case ModelKind::kJBStar: return "jbstar";
  }
  return "unknown";
}

ModelKind parse_kind(std::string_view name) {
  if (name == "rect") return ModelKind::kRect;
  if (name == "cstar") return ModelKind::kCStar;
  if (name == "jbstar") return ModelKind::kJBStar;
  throw Error(ErrorCode::kInvalidInput, "unknown model kind '" + std::string(name) + "'");
}

void require_element(const TripleModel& model, const ComplexMatrix& a, std::string_view what) {
  require_shape(a, model.shape(), what);
}

void require_square_model(const TripleModel& model, std::string_view op) {
  if (!model.square()) {
    throw Error(ErrorCode::kUnsupportedModel,
                std::string(op) + " needs a square model, got " + model.name());
  }
}

ComplexMatrix jordan_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return 0.5 * (a * b + b * a);
}

ComplexMatrix jordan_u(const ComplexMatrix& a, const ComplexMatrix& b) {
  return 2.0 * jordan_product(jordan_product(a, b), a) - jordan_product(a * a, b);
}

ComplexMatrix jordan_u2(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& x) {
  return jordan_product(jordan_product(a, x), b) + jordan_product(jordan_product(b, x), a) -
         jordan_product(jordan_product(a, b), x);
}

ComplexMatrix triple_product(const TripleModel& model, const ComplexMatrix& a,
                             const ComplexMatrix& b, const ComplexMatrix& c) {
  require_element(model, a, "a");
  require_element(model, b, "b");
  require_element(model, c, "c");
  if (model.kind == ModelKind::kJBStar) {
    const ComplexMatrix bs = b.adjoint();
    return jordan_product(jordan_product(a, bs), c) + jordan_product(jordan_product(c, bs), a) -
           jordan_product(jordan_product(a, c), bs);
  }
  const ComplexMatrix bs = b.adjoint();
  return 0.5 * (a * bs * c + c * bs * a);
}

ComplexMatrix quadratic(const TripleModel& model, const ComplexMatrix& a, const ComplexMatrix& x) {
  return triple_product(model, a, x, a);
}

JordanOps jordan_ops(const TripleModel& model, const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square_model(model, "jordan_ops");
  require_element(model, a, "a");
  require_element(model, b, "b");
  const ComplexMatrix p = jordan_product(a, b);
  return {p, jordan_u(a, b), p};
}

RealifiedMap materialize_L(const TripleModel& model, const ComplexMatrix& a,
                           const ComplexMatrix& b) {
  require_element(model, a, "a");
  require_element(model, b, "b");
  const Shape s = model.shape();
  return RealifiedMap::materialize(
      s, s, [&](const ComplexMatrix& z) { return triple_product(model, a, b, z); });
}

RealifiedMap materialize_Q(const TripleModel& model, const ComplexMatrix& a) {
  require_element(model, a, "a");
  const Shape s = model.shape();
  return RealifiedMap::materialize(
      s, s, [&](const ComplexMatrix& x) { return triple_product(model, a, x, a); });
}

RealifiedMap materialize_U(const TripleModel& model, const ComplexMatrix& a) {
  require_square_model(model, "materialize_U");
  require_element(model, a, "a");
  const Shape s = model.shape();
  return RealifiedMap::materialize(s, s, [&](const ComplexMatrix& x) { return jordan_u(a, x); });
}

RealifiedMap materialize_T(const TripleModel& model, const ComplexMatrix& a) {
  require_square_model(model, "materialize_T");
  require_element(model, a, "a");
  const Shape s = model.shape();
  return RealifiedMap::materialize(s, s,
                                   [&](const ComplexMatrix& x) { return jordan_product(a, x); });
}

}  // namespace peircelab
