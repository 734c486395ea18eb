#include <algorithm>

#include "cohom/catalog/classical.hpp"
#include "cohom/catalog/group_spec.hpp"
#include "cohom/error.hpp"
#include "cohom/wallach/wallach.hpp"

namespace cohom::wallach {

using lie::Family;

std::string WallachRow::label() const {
  auto s = "row " + std::to_string(index);
  if (n > 0) s += " (n=" + std::to_string(n) + ")";
  return s;
}

std::vector<WallachRow> wallach_rows(int n_max, const catalog::Catalog& cat) {
  std::vector<WallachRow> out;
  for (const auto& rec : cat.wallach()) {
    const int lo = rec.parametrised() ? rec.n_min : 0;
    const int hi = rec.parametrised() ? n_max : 0;
    for (int n = lo; n <= hi; ++n) {
      WallachRow r;
      r.index = rec.index;
      r.n = n;
      r.g1 = catalog::parse_group(rec.g1(n));
      r.h1 = catalog::parse_group(rec.h1(n));
      r.dim = rec.dim(n);
      if (r.dim != r.g1.dimension() - r.h1.dimension())
        throw Error(r.label() + ": stored dimension " + std::to_string(r.dim) + " disagrees with the groups");
      out.push_back(std::move(r));
    }
  }
  return out;
}

bool has_su_or_sp_ideal(const ReductiveAlgebra& h) {
  return std::any_of(h.simples.begin(), h.simples.end(), [](const lie::SimpleType& s) {
    return s.family == Family::A || s.family == Family::C || (s.family == Family::B && s.rank == 2);
  });
}

std::vector<WallachRow> wallach_filter(int n_max, const catalog::Catalog& cat) {
  auto rows = wallach_rows(n_max, cat);
  for (auto& r : rows) {
    if (!has_su_or_sp_ideal(r.h1.algebra)) {
      r.active = false;
      r.rule = "ideal-test";
      r.reason = r.h1.name + " has no ideal su(m) or sp(m) for the slice to act through";
      continue;
    }
    if (r.index == 4 && r.n == 2) {
      r.active = false;
      r.rule = "same-space";
      r.reason = "Sp(2)/Sp(1)xSp(1) is Spin(5)/Spin(4), row 3 (n=2)";
      r.asserted = true;
      continue;
    }
    // G2/SU(3) and Spin(5)/Spin(4): no admissible h' once h' must be non-semisimple
    // and, at maximal rank, have a slice wider than B.
    if (r.index == 9 || (r.index == 3 && r.n == 2)) {
      r.active = false;
      r.rule = "second-orbit-search";
      r.reason = "no admissible second singular isotropy algebra (non-semisimple h', Frankel bound)";
      r.asserted = true;
    }
  }
  return rows;
}

CenterReport center_dimension_check(const CompactGroupSpec& g, const homogeneous::HomogeneousSpace& b) {
  CenterReport r;
  r.center_dim = g.algebra.torus_rank;
  if (g.algebra.semisimple()) {
    r.detail = g.name + " is semisimple";
    return r;
  }
  if (!homogeneous::euler_positive(b)) {
    r.detail = b.name + " does not have positive Euler characteristic";
    return r;
  }
  r.precondition_ok = true;
  r.center_in_h = true;  // H has maximal rank, so it contains the identity component of the centre.
  r.orbit_verdict = triple::criterion_kernel(b);
  r.pass = r.center_dim == 1;
  r.detail = r.pass ? "dim Z(G) = 1"
                    : "dim Z(G) = " + std::to_string(r.center_dim) +
                          ": the centre acts trivially on B and through at most a circle on the slice, "
                          "so almost effectiveness needs dim Z(G) = 1";
  return r;
}

GoNonzeroReport g_o_nonzero_branch(const ReductiveAlgebra& g_o) {
  GoNonzeroReport r;
  const auto c = g_o.canonical();
  if (c.simples.size() != 1 || c.torus_rank != 0) {
    r.detail = g_o.name() + " is not simple; contradicts the slice being injective on g_o + R";
    return r;
  }
  const auto& s = c.simples[0];
  using catalog::Classical;
  std::optional<catalog::ClassicalGroup> k_o;
  if (s.family == Family::A && s.rank == 1) {
    r.ok = true;
    r.su2_location = "g_o";
    r.fixed_codim = 4;
    r.detail = "g_o = su(2) acts on the 4-dimensional slice and fixes B";
    return r;
  }
  if (s.family == Family::A) k_o = catalog::ClassicalGroup{Classical::SU, s.rank};
  if (s.family == Family::C || (s.family == Family::B && s.rank == 2))
    k_o = catalog::ClassicalGroup{Classical::Sp, s.rank - 1};
  if (!k_o) {
    r.detail = g_o.name() + " is not of type su or sp; contradicts the slice being injective on g_o + R";
    return r;
  }
  // su(2) inside k_o on the first two (resp. one) coordinates; its fixed set
  // in the irreducible part of p is the complement of those coordinates.
  catalog::BlockEmbedding e;
  e.name = "su(2) in " + k_o->name();
  e.ambient = *k_o;
  const bool unitary = k_o->kind == Classical::SU;
  e.factors = {unitary ? catalog::ClassicalGroup{Classical::SU, 2} : catalog::ClassicalGroup{Classical::Sp, 1}};
  e.slots.resize(k_o->eps_count());
  e.slots[0] = {{0, 0}};
  if (unitary) e.slots[1] = {{0, 1}};
  const auto hw = catalog::defining_weight(*k_o);
  const auto rep = catalog::make_rep("p1", catalog::parse_group(k_o->name()), {hw},
                                     lie::irreducible_reality(k_o->algebra(), hw));
  const auto fixed = lie::trivial_multiplicity(e.branching().restrict(rep.complexified()));
  r.fixed_codim = rep.real_dim() - static_cast<int>(fixed);
  r.ok = r.fixed_codim == 4;
  r.su2_location = "k_o";
  r.detail = "su(2) in k_o = " + k_o->algebra().name() + " fixes a subspace of codimension " +
             std::to_string(r.fixed_codim) + " in p";
  return r;
}

}  // namespace cohom::wallach
