#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "brauer/group.hpp"

namespace brauer {

inline constexpr int kSpecSchemaVersion = 1;

/// Description of a group, parsed from a JSON document.
///
/// Accepted documents (an optional "schema_version" and "name" may accompany
/// any of them):
///   {"permutation": {"degree": 3, "generators": [[1,2,0], [1,0,2]]}}
///   {"permutation": {"degree": 3, "cycles": [[[0,1,2]], [[0,1]]]}}
///   {"cayley": [[0,1],[1,0]]}
///   {"family": "cyclic", "n": 6}
///   {"family": "elementary_abelian", "l": 2, "d": 2}
///   {"family": "semidirect", "base": {"l": 7, "d": 1}, "actor": {"cyclic": 3},
///    "action": [[2]], "require": ["faithful", "irreducible"]}
///   {"family": "direct_product", "factors": [spec, spec, ...]}
///   {"family": "symmetric" | "alternating" | "dihedral", "n": 4}
///   {"family": "quaternion8"}
/// A semidirect base is {"l": l, "d": d} (elementary abelian, l prime) or
/// {"cyclic": m}. The action lists one d x d matrix per actor generator; a
/// 1 x 1 matrix may be written [a].
struct GroupSpec {
  enum class Kind {
    Permutation,
    Cayley,
    Cyclic,
    ElementaryAbelian,
    Semidirect,
    DirectProduct,
    Symmetric,
    Alternating,
    Dihedral,
    Quaternion8,
  };

  Kind kind = Kind::Cyclic;
  std::string name;

  std::size_t degree = 0;          // permutation
  std::vector<Perm> generators;    // permutation
  std::vector<std::vector<std::size_t>> table;  // cayley
  std::size_t n = 1;               // cyclic, symmetric, alternating, dihedral
  std::uint64_t l = 2;             // elementary abelian; semidirect base modulus
  std::size_t d = 1;               // elementary abelian; semidirect base rank
  bool cyclic_base = false;        // semidirect base {"cyclic": m}, modulus in l
  std::shared_ptr<GroupSpec> actor;                      // semidirect
  std::vector<std::vector<std::vector<long>>> action;    // semidirect
  bool require_faithful = false;
  bool require_irreducible = false;
  std::vector<GroupSpec> factors;  // direct product

  /// Order implied by the description; nullopt for permutation generators.
  std::optional<std::size_t> predicted_order() const;
};

/// Throws ParseError (with line and column) or ValidationError.
GroupSpec parse_group_spec(std::string_view text);
/// Throws ValidationError.
GroupSpec parse_group_spec(const nlohmann::json& doc);
nlohmann::json to_json(const GroupSpec& spec);
/// Canonical text with sorted keys.
std::string serialize(const GroupSpec& spec);

struct ActionCertificate {
  bool faithful = false;
  bool irreducible = false;
};

struct BuiltGroup {
  GroupPtr group;
  std::optional<ActionCertificate> certificate;  // semidirect products only
};

/// Throws ValidationError, NotFaithful, NotIrreducible, OrderBoundExceeded.
BuiltGroup build(const GroupSpec& spec, std::size_t bound = kDefaultOrderBound);

struct CatalogEntry {
  std::string name;
  GroupSpec spec;
  std::uint64_t p = 2;
};

std::vector<CatalogEntry> verification_catalog();

}  // namespace brauer
