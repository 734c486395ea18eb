#pragma once

#include <string>
#include <vector>

#include "cohom/lie/types.hpp"
#include "cohom/rational.hpp"

namespace cohom::catalog {

/// A distinguished central element, given as a point of the maximal
/// torus: it acts on a weight w by exp(2 pi i <w, exponent>).
struct CentralElement {
  std::string name;
  std::vector<Rational> exponent;
  std::string action;
};

/// A compact group: Lie algebra plus the global data the algebra does not
/// see (cover, finite extensions, central elements).
struct CompactGroupSpec {
  std::string name;
  lie::ReductiveAlgebra algebra;
  /// "linear", "spin", "central-quotient", "product" ... joined with '+'.
  std::string cover_tag = "linear";
  bool connected = true;
  std::vector<CentralElement> center_data;

  int dimension() const { return algebra.dimension(); }
  int rank() const { return algebra.rank(); }
};

/// Parses names like "SO(5)", "Spin(9)", "Sp(1)xSp(2)", "Sp(1)·Sp(n)",
/// "S(U(1)xU(2))", "T^2xSU(3)", "Sp(1)^3", "F4". Low-rank coincidences
/// come out in canonical form (Sp(2) and Spin(5) give B2, SU(4) and
/// Spin(6) give A3, Spin(4) gives A1+A1). Throws cohom::Error.
CompactGroupSpec parse_group(const std::string& text);

/// Lie algebra of SO(n) / Spin(n), canonical form.
lie::ReductiveAlgebra orthogonal_algebra(int n);
/// Lie algebra of Sp(n), canonical form.
lie::ReductiveAlgebra symplectic_algebra(int n);
/// Lie algebra of SU(n).
lie::ReductiveAlgebra special_unitary_algebra(int n);

/// Direct sum of algebras, simple blocks concatenated in order.
lie::ReductiveAlgebra sum(const lie::ReductiveAlgebra& a, const lie::ReductiveAlgebra& b);

}  // namespace cohom::catalog
