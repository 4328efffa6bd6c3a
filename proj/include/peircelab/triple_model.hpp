#pragma once

#include <string>

#include "peircelab/linalg.hpp"

namespace peircelab {

enum class ModelKind { kRect, kCStar, kJBStar };

// A finite-dimensional JB*-triple realized on m x n complex matrices.
//   kRect:   M_{m,n} with {a,b,c} = (ab*c + cb*a) / 2
//   kCStar:  M_n with the same product
//   kJBStar: M_n as a Jordan algebra, a o b = (ab + ba) / 2, with
//            {a,b,c} = (a o b*) o c + (c o b*) o a - (a o c) o b*
struct TripleModel {
  ModelKind kind = ModelKind::kCStar;
  Index m = 1;
  Index n = 1;

  static TripleModel rect(Index m, Index n);
  static TripleModel cstar(Index n);
  static TripleModel jbstar(Index n);

  Shape shape() const { return {m, n}; }
  bool square() const { return kind != ModelKind::kRect; }
  std::string name() const;
  bool operator==(const TripleModel&) const = default;
};

std::string_view kind_name(ModelKind kind);
ModelKind parse_kind(std::string_view name);

void require_element(const TripleModel& model, const ComplexMatrix& a, std::string_view what);
// Throws UnsupportedModel for the rectangular model.
void require_square_model(const TripleModel& model, std::string_view op);

ComplexMatrix triple_product(const TripleModel& model, const ComplexMatrix& a,
                             const ComplexMatrix& b, const ComplexMatrix& c);

// Q(a) x = {a, x, a}; conjugate linear in x.
ComplexMatrix quadratic(const TripleModel& model, const ComplexMatrix& a, const ComplexMatrix& x);

// Jordan structure of M_n. These act on any square matrices; the model
// argument of jordan_ops only selects and checks the shape.
ComplexMatrix jordan_product(const ComplexMatrix& a, const ComplexMatrix& b);
// U_a(b) = 2 (a o b) o a - a^2 o b
ComplexMatrix jordan_u(const ComplexMatrix& a, const ComplexMatrix& b);
// U_{a,b}(x) = (a o x) o b + (b o x) o a - (a o b) o x
ComplexMatrix jordan_u2(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& x);

struct JordanOps {
  ComplexMatrix product;
  ComplexMatrix u_map;
  ComplexMatrix t_map;
};

JordanOps jordan_ops(const TripleModel& model, const ComplexMatrix& a, const ComplexMatrix& b);

// L(a,b) z = {a, b, z}
RealifiedMap materialize_L(const TripleModel& model, const ComplexMatrix& a,
                           const ComplexMatrix& b);
RealifiedMap materialize_Q(const TripleModel& model, const ComplexMatrix& a);
// x -> U_a(x) and x -> a o x on a square model.
RealifiedMap materialize_U(const TripleModel& model, const ComplexMatrix& a);
RealifiedMap materialize_T(const TripleModel& model, const ComplexMatrix& a);

}  // namespace peircelab
