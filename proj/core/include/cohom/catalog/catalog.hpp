#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cohom/catalog/classical.hpp"
#include "cohom/catalog/group_spec.hpp"
#include "cohom/error.hpp"
#include "cohom/lie/character.hpp"
#include "cohom/lie/restriction.hpp"

namespace cohom::catalog {

/// A representation with a name. `character` is the complex character;
/// for real and quaternionic type the underlying real space has dimension
/// dim resp. 2*dim, for complex type 2*dim.
struct NamedRep {
  std::string name;
  CompactGroupSpec group;
  lie::Character character{lie::ReductiveAlgebra{}};
  lie::Reality reality = lie::Reality::Real;

  int real_dim() const;
  /// Complexification of the underlying real representation.
  lie::Character complexified() const;
};

/// Sum of irreducibles with the given highest weights. Throws when a
/// single irreducible disagrees with the stated reality type.
NamedRep make_rep(std::string name, CompactGroupSpec group, const std::vector<lie::Weight>& highest_weights,
                  lie::Reality reality);

struct SphereTransitivePair {
  CompactGroupSpec group;
  NamedRep rep;
  int sphere_dim = 0;
  CompactGroupSpec stabilizer;
  /// Image group in O(V), i.e. the effective quotient acting on the sphere.
  std::string effective_quotient;
  std::string notes;
  /// "text", "classical" or "inferred-from-context".
  std::string anchor;
};

/// A sphere-transitive pair pulled back to a given group through a
/// projection onto some of its ideals (and, for circles and unitary
/// groups, a covering twist).
struct SliceCandidate {
  SphereTransitivePair pair;
  NamedRep lifted;
  std::string factor_map;
  /// Circle covering degree or determinant twist; 0 when not twisted.
  int twist = 0;
};

struct EmbeddingTag {
  std::string name;
  CompactGroupSpec ambient;
  CompactGroupSpec sub;
  std::string descriptor;
  std::map<std::string, int> fixed_space_dims;
  std::optional<lie::Branching> rule;
  std::map<std::string, NamedRep> ambient_reps;
  std::string notes;
};

/// Real dimension of the subspace fixed by the subgroup in the named
/// ambient representation: derived through the restriction rule when one
/// is present, otherwise the stored value, otherwise nullopt.
std::optional<int> fixed_space_dim(const EmbeddingTag& e, const std::string& rep_name);
/// Same, from the restriction rule only.
std::optional<int> derived_fixed_space_dim(const EmbeddingTag& e, const std::string& rep_name);

struct WallachRecord {
  int index = 0;
  std::string g1_template;
  std::string h1_template;
  std::string dim_text;
  int dim_n_coeff = 0;
  int dim_const = 0;
  /// Smallest parameter value; 0 for rows without a parameter.
  int n_min = 0;

  bool parametrised() const { return n_min > 0; }
  std::string g1(int n) const;
  std::string h1(int n) const;
  int dim(int n) const { return dim_n_coeff * n + dim_const; }
};

/// Raised for malformed catalog files; `record` names the first offending
/// record (e.g. "sphere_transitive[3]").
class SchemaError : public Error {
 public:
  SchemaError(std::string record, const std::string& what)
      : Error(record + ": " + what), record_(std::move(record)) {}
  const std::string& record() const { return record_; }

 private:
  std::string record_;
};

/// Checksum of the record layouts this build understands.
std::string schema_checksum();

class Catalog {
 public:
  static constexpr int kDefaultTwistWindow = 6;

  /// Loads and validates a catalog file; throws SchemaError.
  static Catalog load(const std::string& path);
  static Catalog parse(const std::string& json_text);
  /// Path from COHOM_CATALOG, else the installed data directory.
  static std::string default_path();
  /// Catalog at default_path(), loaded once.
  static const Catalog& builtin();

  const std::vector<SphereTransitivePair>& sphere_transitive() const { return pairs_; }
  const std::vector<EmbeddingTag>& embeddings() const { return embeddings_; }
  const std::vector<WallachRecord>& wallach() const { return wallach_; }
  const EmbeddingTag* embedding(const std::string& name) const;

  /// Every catalog pair whose group is a quotient of h by some of its
  /// ideals, pulled back to h; circles get covering degrees 1..window and
  /// unitary groups determinant twists in [-window, window]. Pairs equal
  /// as real representations are listed once. When nothing matches,
  /// `note` receives "not in catalog".
  std::vector<SliceCandidate> sphere_transitive_candidates(const CompactGroupSpec& h, std::string* note = nullptr,
                                                           int twist_window = kDefaultTwistWindow) const;

 private:
  std::vector<SphereTransitivePair> pairs_;
  std::vector<EmbeddingTag> embeddings_;
  std::vector<WallachRecord> wallach_;
};

}  // namespace cohom::catalog
