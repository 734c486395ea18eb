#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace cohom::lie {

enum class Family { A, B, C, D, E, F, G };

/// A compact simple Lie algebra by Cartan type. E covers E6, E7, E8;
/// F and G only exist in rank 4 and 2.
struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  /// Validates the rank range (A>=1, B>=2, C>=2, D>=3, E in {6,7,8},
  /// F4, G2) and throws cohom::Error otherwise.
  static SimpleType make(Family family, int rank);
  /// Parses "A3", "B4", "F4", ...
  static SimpleType parse(const std::string& text);

  std::string name() const;
  int dimension() const;

  auto operator<=>(const SimpleType&) const = default;
};

/// A reductive algebra: ordered simple ideals plus a central torus.
/// Weight coordinates are laid out block by block (fundamental-weight
/// coordinates of each simple ideal) followed by one charge per torus
/// generator.
struct ReductiveAlgebra {
  std::vector<SimpleType> simples;
  int torus_rank = 0;

  static ReductiveAlgebra simple(SimpleType s) { return {{s}, 0}; }
  static ReductiveAlgebra torus(int r) { return {{}, r}; }

  int rank() const;
  int dimension() const;
  bool semisimple() const { return torus_rank == 0; }
  /// First coordinate of simple block i (torus charges start at offset(simples.size())).
  int offset(std::size_t block) const;
  std::string name() const;

  /// Isomorphism-class representative: C2 -> B2 and D3 -> A3, blocks
  /// sorted. Only the labels change, so weights are not transported.
  ReductiveAlgebra canonical() const;

  auto operator<=>(const ReductiveAlgebra&) const = default;
};

/// Integer weight: fundamental-weight coordinates per simple block, then
/// torus charges.
struct Weight {
  std::vector<int> c;

  Weight() = default;
  explicit Weight(std::vector<int> coords) : c(std::move(coords)) {}
  Weight(std::initializer_list<int> coords) : c(coords) {}

  std::size_t size() const { return c.size(); }
  int operator[](std::size_t i) const { return c[i]; }
  int& operator[](std::size_t i) { return c[i]; }
  bool is_zero() const;
  Weight operator+(const Weight& o) const;
  Weight operator-() const;
  std::string str() const;

  auto operator<=>(const Weight&) const = default;
};

}  // namespace cohom::lie
