#include "brauer/catalog.hpp"

#include <algorithm>
#include <numeric>

#include "brauer/errors.hpp"
#include "brauer/numtheory.hpp"

namespace brauer {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------- parsing

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
  throw ValidationError((where.empty() ? std::string("/") : where) + ": " + what);
}

const json& field(const json& doc, const char* key, const std::string& where) {
  if (!doc.is_object() || !doc.contains(key)) invalid(where, std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::size_t as_size(const json& v, const std::string& where, std::size_t min = 0) {
  if (!v.is_number_integer()) invalid(where, "expected an integer");
  long long x = v.get<long long>();
  if (x < static_cast<long long>(min)) invalid(where, "integer below " + std::to_string(min));
  return static_cast<std::size_t>(x);
}

std::size_t size_field(const json& doc, const char* key, const std::string& where,
                       std::size_t min = 0) {
  return as_size(field(doc, key, where), where + "/" + key, min);
}

std::vector<std::vector<long>> parse_matrix(const json& m, std::size_t d, const std::string& where) {
  if (!m.is_array()) invalid(where, "expected a matrix");
  // [a] is shorthand for the 1 x 1 matrix [[a]].
  if (d == 1 && m.size() == 1 && m[0].is_number_integer()) return {{m[0].get<long>()}};
  if (m.size() != d) invalid(where, "matrix must have " + std::to_string(d) + " rows");
  std::vector<std::vector<long>> out;
  for (std::size_t r = 0; r < d; ++r) {
    const json& row = m[r];
    if (!row.is_array() || row.size() != d) invalid(where, "matrix rows must have length " + std::to_string(d));
    std::vector<long> vals;
    for (const auto& x : row) {
      if (!x.is_number_integer()) invalid(where, "matrix entries must be integers");
      vals.push_back(x.get<long>());
    }
    out.push_back(std::move(vals));
  }
  return out;
}

GroupSpec parse_at(const json& doc, const std::string& where);

GroupSpec parse_actor(const json& doc, const std::string& where) {
  if (doc.is_object() && doc.size() == 1 && doc.contains("cyclic")) {
    GroupSpec s;
    s.kind = GroupSpec::Kind::Cyclic;
    s.n = size_field(doc, "cyclic", where, 1);
    return s;
  }
  return parse_at(doc, where);
}

GroupSpec parse_at(const json& doc, const std::string& where) {
  if (!doc.is_object()) invalid(where, "expected an object");
  GroupSpec s;
  if (doc.contains("schema_version")) {
    const json& v = doc.at("schema_version");
    if (!v.is_number_integer() || v.get<int>() != kSpecSchemaVersion)
      invalid(where + "/schema_version", "unsupported schema version");
  }
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) invalid(where + "/name", "expected a string");
    s.name = doc.at("name").get<std::string>();
  }

  if (doc.contains("permutation")) {
    const std::string at = where + "/permutation";
    const json& p = doc.at("permutation");
    s.kind = GroupSpec::Kind::Permutation;
    s.degree = size_field(p, "degree", at, 1);
    try {
      if (p.contains("generators")) {
        const json& gens = p.at("generators");
        if (!gens.is_array()) invalid(at + "/generators", "expected a list");
        for (const auto& g : gens) {
          auto images = g.get<std::vector<Point>>();
          if (images.size() != s.degree) invalid(at + "/generators", "generator length differs from degree");
          s.generators.emplace_back(std::move(images));
        }
      }
      if (p.contains("cycles")) {
        const json& gens = p.at("cycles");
        if (!gens.is_array()) invalid(at + "/cycles", "expected a list");
        for (const auto& g : gens)
          s.generators.push_back(
              Perm::from_cycles(s.degree, g.get<std::vector<std::vector<Point>>>()));
      }
    } catch (const json::exception& e) {
      invalid(at, std::string("malformed generator: ") + e.what());
    } catch (const InvalidPermutation& e) {
      invalid(at, e.what());
    }
    return s;
  }

  if (doc.contains("cayley")) {
    const json& t = doc.at("cayley");
    s.kind = GroupSpec::Kind::Cayley;
    if (!t.is_array() || t.empty()) invalid(where + "/cayley", "expected a non-empty table");
    try {
      s.table = t.get<std::vector<std::vector<std::size_t>>>();
    } catch (const json::exception&) {
      invalid(where + "/cayley", "table entries must be non-negative integers");
    }
    const std::size_t n = s.table.size();
    for (const auto& row : s.table) {
      if (row.size() != n) invalid(where + "/cayley", "table is not square");
      std::vector<bool> seen(n, false);
      for (std::size_t x : row) {
        if (x >= n || seen[x]) invalid(where + "/cayley", "row is not a permutation of 0..n-1");
        seen[x] = true;
      }
    }
    return s;
  }

  const json& fam = field(doc, "family", where);
  if (!fam.is_string()) invalid(where + "/family", "expected a string");
  const std::string f = fam.get<std::string>();
  if (f == "cyclic") {
    s.kind = GroupSpec::Kind::Cyclic;
    s.n = size_field(doc, "n", where, 1);
  } else if (f == "elementary_abelian") {
    s.kind = GroupSpec::Kind::ElementaryAbelian;
    s.l = size_field(doc, "l", where, 2);
    s.d = size_field(doc, "d", where, 0);
    if (!is_prime(s.l)) invalid(where + "/l", "l must be prime");
  } else if (f == "symmetric" || f == "alternating") {
    s.kind = f == "symmetric" ? GroupSpec::Kind::Symmetric : GroupSpec::Kind::Alternating;
    s.n = size_field(doc, "n", where, 1);
    if (s.n > 5) invalid(where + "/n", "only n <= 5 is supported");
  } else if (f == "dihedral") {
    s.kind = GroupSpec::Kind::Dihedral;
    s.n = size_field(doc, "n", where, 3);
  } else if (f == "quaternion8") {
    s.kind = GroupSpec::Kind::Quaternion8;
  } else if (f == "direct_product") {
    s.kind = GroupSpec::Kind::DirectProduct;
    const json& fs = field(doc, "factors", where);
    if (!fs.is_array() || fs.empty()) invalid(where + "/factors", "expected a non-empty list");
    for (std::size_t i = 0; i < fs.size(); ++i)
      s.factors.push_back(parse_at(fs[i], where + "/factors/" + std::to_string(i)));
  } else if (f == "semidirect") {
    s.kind = GroupSpec::Kind::Semidirect;
    const json& base = field(doc, "base", where);
    if (base.is_object() && base.contains("cyclic")) {
      s.cyclic_base = true;
      s.l = size_field(base, "cyclic", where + "/base", 1);
      s.d = 1;
    } else {
      s.l = size_field(base, "l", where + "/base", 2);
      s.d = size_field(base, "d", where + "/base", 1);
      if (!is_prime(s.l)) invalid(where + "/base/l", "l must be prime");
    }
    s.actor = std::make_shared<GroupSpec>(parse_actor(field(doc, "actor", where), where + "/actor"));
    const json& act = field(doc, "action", where);
    if (!act.is_array()) invalid(where + "/action", "expected a list of matrices");
    for (std::size_t i = 0; i < act.size(); ++i)
      s.action.push_back(parse_matrix(act[i], s.d, where + "/action/" + std::to_string(i)));
    if (doc.contains("require")) {
      const json& req = doc.at("require");
      if (!req.is_array()) invalid(where + "/require", "expected a list");
      for (const auto& r : req) {
        std::string x = r.is_string() ? r.get<std::string>() : "";
        if (x == "faithful") s.require_faithful = true;
        else if (x == "irreducible") s.require_irreducible = true;
        else invalid(where + "/require", "unknown requirement");
      }
    }
  } else {
    invalid(where + "/family", "unknown family '" + f + "'");
  }
  return s;
}

// ---------------------------------------------------------------- building

GroupPtr from_cayley(const std::vector<std::vector<std::size_t>>& t, std::size_t bound) {
  const std::size_t n = t.size();
  if (n > bound) throw OrderBoundExceeded("Cayley table exceeds the order bound");
  std::size_t e = n;
  for (std::size_t x = 0; x < n && e == n; ++x) {
    bool ok = true;
    for (std::size_t y = 0; y < n && ok; ++y) ok = t[x][y] == y && t[y][x] == y;
    if (ok) e = x;
  }
  if (e == n) throw ValidationError("/cayley: no identity element");
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<bool> seen(n, false);
    for (std::size_t y = 0; y < n; ++y) {
      if (seen[t[y][x]]) throw ValidationError("/cayley: columns are not permutations");
      seen[t[y][x]] = true;
    }
  }

  // Generators whose right multiples reach every element from e.
  std::vector<std::size_t> gens;
  std::vector<bool> reached(n, false);
  reached[e] = true;
  std::vector<std::size_t> frontier{e};
  for (std::size_t x = 0; x < n; ++x) {
    if (reached[x]) continue;
    gens.push_back(x);
    std::vector<std::size_t> all;
    for (std::size_t y = 0; y < n; ++y)
      if (reached[y]) all.push_back(y);
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t s : gens) {
        std::size_t z = t[all[i]][s];
        if (!reached[z]) {
          reached[z] = true;
          all.push_back(z);
        }
      }
  }
  // Light's associativity test on the generators.
  for (std::size_t s : gens)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (t[t[x][s]][y] != t[x][t[s][y]]) throw ValidationError("/cayley: table is not associative");

  std::vector<Perm> perms;
  for (std::size_t s : gens) {
    std::vector<Point> images(n);
    for (std::size_t x = 0; x < n; ++x) images[x] = static_cast<Point>(t[s][x]);
    perms.emplace_back(std::move(images));
  }
  if (perms.empty()) perms.emplace_back(n);
  GroupPtr g = close_group(perms, bound);
  if (g->order() != n) throw ValidationError("/cayley: table does not define a group");
  return g;
}

std::vector<std::vector<std::size_t>> quaternion_table() {
  // Units 1, i, j, k as 0..3; element 2u + s with s = 1 for the negative.
  const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int u = unit[a / 2][b / 2];
      int s = (a % 2) ^ (b % 2) ^ sign[a / 2][b / 2];
      t[a][b] = static_cast<std::size_t>(2 * u + s);
    }
  return t;
}

long mod(long a, long m) { return ((a % m) + m) % m; }

// Rank of a list of vectors over F_l.
std::size_t rank_mod(std::vector<std::vector<long>> rows, long l) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && mod(rows[piv][c], l) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    long inv = 1;
    while (mod(rows[r][c] * inv, l) != 1) ++inv;
    for (auto& x : rows[r]) x = mod(x * inv, l);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      long f = mod(rows[i][c], l);
      if (f == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] = mod(rows[i][k] - f * rows[r][k], l);
    }
    ++r;
  }
  return r;
}

struct Base {
  long modulus;
  std::size_t d;
  std::size_t size;

  std::vector<long> decode(std::size_t x) const {
    std::vector<long> v(d);
    for (std::size_t i = 0; i < d; ++i) {
      v[i] = static_cast<long>(x % modulus);
      x /= modulus;
    }
    return v;
  }
  std::size_t encode(const std::vector<long>& v) const {
    std::size_t x = 0;
    for (std::size_t i = d; i-- > 0;) x = x * modulus + static_cast<std::size_t>(mod(v[i], modulus));
    return x;
  }
  std::vector<long> apply(const std::vector<std::vector<long>>& m, const std::vector<long>& v) const {
    std::vector<long> out(d, 0);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) out[r] = mod(out[r] + m[r][c] * v[c], modulus);
    return out;
  }
};

BuiltGroup build_semidirect(const GroupSpec& s, std::size_t bound) {
  BuiltGroup actor = build(*s.actor, bound);
  const Group& a = *actor.group;
  Base base{static_cast<long>(s.l), s.d, 1};
  for (std::size_t i = 0; i < s.d; ++i) {
    base.size *= s.l;
    if (base.size > bound) throw OrderBoundExceeded("semidirect base exceeds the order bound");
  }
  if (s.action.size() != a.generators().size())
    throw ValidationError("/action: need one matrix per actor generator (" +
                          std::to_string(a.generators().size()) + ")");
  for (const auto& m : s.action) {
    if (s.cyclic_base) {
      if (gcd_u64(static_cast<std::uint64_t>(mod(m[0][0], base.modulus)), s.l) != 1 && s.l > 1)
        throw ValidationError("/action: multiplier is not a unit modulo the base order");
    } else if (rank_mod(m, base.modulus) != s.d) {
      throw ValidationError("/action: matrix is not invertible modulo l");
    }
  }

  const std::size_t deg = base.size + a.degree();
  auto base_perm = [&](auto&& f, const Perm& on_actor) {
    std::vector<Point> images(deg);
    for (std::size_t x = 0; x < base.size; ++x) images[x] = static_cast<Point>(base.encode(f(base.decode(x))));
    for (std::size_t x = 0; x < a.degree(); ++x)
      images[base.size + x] = static_cast<Point>(base.size + on_actor[static_cast<Point>(x)]);
    return Perm(std::move(images));
  };
  std::vector<Perm> gens;
  const Perm id_actor(a.degree());
  for (std::size_t i = 0; i < s.d && base.size > 1; ++i)
    gens.push_back(base_perm(
        [&](std::vector<long> v) {
          v[i] += 1;
          return v;
        },
        id_actor));
  for (std::size_t k = 0; k < s.action.size(); ++k)
    gens.push_back(base_perm([&](const std::vector<long>& v) { return base.apply(s.action[k], v); },
                             a.generators()[k]));
  if (gens.empty()) gens.emplace_back(deg);
  GroupPtr g = close_group(gens, bound);
  if (g->order() != base.size * a.order())
    throw ValidationError("/action: matrices do not define a homomorphism from the actor");

  ActionCertificate cert;
  std::size_t fixing_base = 0;
  for (Elem x = 0; x < g->order(); ++x) {
    const Perm& p = g->element(x);
    bool fixes = true;
    for (Point y = 0; y < base.size && fixes; ++y) fixes = p[y] == y;
    if (fixes) ++fixing_base;
  }
  cert.faithful = fixing_base == 1;
  if (s.cyclic_base) {
    cert.irreducible = is_prime(s.l);
  } else {
    cert.irreducible = true;
    for (std::size_t x = 1; x < base.size && cert.irreducible; ++x) {
      std::vector<bool> seen(base.size, false);
      std::vector<std::size_t> orbit{x};
      seen[x] = true;
      for (std::size_t i = 0; i < orbit.size(); ++i)
        for (const auto& m : s.action) {
          std::size_t y = base.encode(base.apply(m, base.decode(orbit[i])));
          if (!seen[y]) {
            seen[y] = true;
            orbit.push_back(y);
          }
        }
      std::vector<std::vector<long>> rows;
      for (std::size_t y : orbit) rows.push_back(base.decode(y));
      if (rank_mod(rows, base.modulus) < s.d) cert.irreducible = false;
    }
  }
  if (s.require_faithful && !cert.faithful) throw NotFaithful("the action is not faithful");
  if (s.require_irreducible && !cert.irreducible) throw NotIrreducible("the action is reducible");
  return BuiltGroup{g, cert};
}

GroupPtr build_direct_product(const GroupSpec& s, std::size_t bound) {
  std::vector<GroupPtr> parts;
  std::size_t deg = 0, order = 1;
  for (const auto& f : s.factors) {
    parts.push_back(build(f, bound).group);
    deg += parts.back()->degree();
    order *= parts.back()->order();
    if (order > bound) throw OrderBoundExceeded("direct product exceeds the order bound");
  }
  std::vector<Perm> gens;
  std::size_t offset = 0;
  for (const auto& part : parts) {
    for (const auto& g : part->generators()) {
      std::vector<Point> images(deg);
      std::iota(images.begin(), images.end(), Point{0});
      for (Point x = 0; x < part->degree(); ++x) images[offset + x] = static_cast<Point>(offset + g[x]);
      gens.emplace_back(std::move(images));
    }
    offset += part->degree();
  }
  if (gens.empty()) gens.emplace_back(deg);
  return close_group(gens, bound);
}

std::vector<Perm> symmetric_generators(std::size_t n, bool alternating) {
  std::vector<Perm> gens;
  if (alternating) {
    for (Point i = 2; i < n; ++i) gens.push_back(Perm::from_cycles(n, {{0, 1, i}}));
  } else if (n >= 2) {
    std::vector<Point> cycle(n);
    std::iota(cycle.begin(), cycle.end(), Point{0});
    gens.push_back(Perm::from_cycles(n, {cycle}));
    gens.push_back(Perm::from_cycles(n, {{0, 1}}));
  }
  if (gens.empty()) gens.emplace_back(n);
  return gens;
}

}  // namespace

std::optional<std::size_t> GroupSpec::predicted_order() const {
  auto factorial = [](std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 2; i <= k; ++i) r *= i;
    return r;
  };
  switch (kind) {
    case Kind::Permutation: return std::nullopt;
    case Kind::Cayley: return table.size();
    case Kind::Cyclic: return n;
    case Kind::ElementaryAbelian: {
      std::size_t r = 1;
      for (std::size_t i = 0; i < d; ++i) r *= l;
      return r;
    }
    case Kind::Semidirect: {
      auto a = actor->predicted_order();
      if (!a) return std::nullopt;
      std::size_t r = *a;
      for (std::size_t i = 0; i < d; ++i) r *= l;
      return r;
    }
    case Kind::DirectProduct: {
      std::size_t r = 1;
      for (const auto& f : factors) {
        auto o = f.predicted_order();
        if (!o) return std::nullopt;
        r *= *o;
      }
      return r;
    }
    case Kind::Symmetric: return factorial(n);
    case Kind::Alternating: return n < 2 ? 1 : factorial(n) / 2;
    case Kind::Dihedral: return 2 * n;
    case Kind::Quaternion8: return 8;
  }
  return std::nullopt;
}

GroupSpec parse_group_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                     e.what());
  }
  return parse_group_spec(doc);
}

GroupSpec parse_group_spec(const json& doc) { return parse_at(doc, ""); }

json to_json(const GroupSpec& s) {
  json j;
  switch (s.kind) {
    case GroupSpec::Kind::Permutation: {
      json gens = json::array();
      for (const auto& g : s.generators)
        gens.push_back(std::vector<Point>(g.images().begin(), g.images().end()));
      j["permutation"] = {{"degree", s.degree}, {"generators", gens}};
      break;
    }
    case GroupSpec::Kind::Cayley: j["cayley"] = s.table; break;
    case GroupSpec::Kind::Cyclic: j = {{"family", "cyclic"}, {"n", s.n}}; break;
    case GroupSpec::Kind::ElementaryAbelian:
      j = {{"family", "elementary_abelian"}, {"l", s.l}, {"d", s.d}};
      break;
    case GroupSpec::Kind::Semidirect: {
      j["family"] = "semidirect";
      j["base"] = s.cyclic_base ? json{{"cyclic", s.l}} : json{{"l", s.l}, {"d", s.d}};
      j["actor"] = to_json(*s.actor);
      j["action"] = s.action;
      json req = json::array();
      if (s.require_faithful) req.push_back("faithful");
      if (s.require_irreducible) req.push_back("irreducible");
      if (!req.empty()) j["require"] = req;
      break;
    }
    case GroupSpec::Kind::DirectProduct: {
      json fs = json::array();
      for (const auto& f : s.factors) fs.push_back(to_json(f));
      j = {{"family", "direct_product"}, {"factors", fs}};
      break;
    }
    case GroupSpec::Kind::Symmetric: j = {{"family", "symmetric"}, {"n", s.n}}; break;
    case GroupSpec::Kind::Alternating: j = {{"family", "alternating"}, {"n", s.n}}; break;
    case GroupSpec::Kind::Dihedral: j = {{"family", "dihedral"}, {"n", s.n}}; break;
    case GroupSpec::Kind::Quaternion8: j = {{"family", "quaternion8"}}; break;
  }
  if (!s.name.empty()) j["name"] = s.name;
  j["schema_version"] = kSpecSchemaVersion;
  return j;
}

std::string serialize(const GroupSpec& s) { return to_json(s).dump(); }

BuiltGroup build(const GroupSpec& s, std::size_t bound) {
  switch (s.kind) {
    case GroupSpec::Kind::Permutation: {
      std::vector<Perm> gens = s.generators;
      if (gens.empty()) gens.emplace_back(s.degree);
      return {close_group(gens, bound), std::nullopt};
    }
    case GroupSpec::Kind::Cayley: return {from_cayley(s.table, bound), std::nullopt};
    case GroupSpec::Kind::Cyclic: {
      std::vector<Point> cycle(s.n);
      std::iota(cycle.begin(), cycle.end(), Point{0});
      return {close_group({Perm::from_cycles(s.n, {cycle})}, bound), std::nullopt};
    }
    case GroupSpec::Kind::ElementaryAbelian: {
      const std::size_t deg = std::max<std::size_t>(1, s.l * s.d);
      std::vector<Perm> gens;
      for (std::size_t i = 0; i < s.d; ++i) {
        std::vector<Point> cycle(s.l);
        std::iota(cycle.begin(), cycle.end(), static_cast<Point>(i * s.l));
        gens.push_back(Perm::from_cycles(deg, {cycle}));
      }
      if (gens.empty()) gens.emplace_back(deg);
      return {close_group(gens, bound), std::nullopt};
    }
    case GroupSpec::Kind::Semidirect: return build_semidirect(s, bound);
    case GroupSpec::Kind::DirectProduct: return {build_direct_product(s, bound), std::nullopt};
    case GroupSpec::Kind::Symmetric:
      return {close_group(symmetric_generators(s.n, false), bound), std::nullopt};
    case GroupSpec::Kind::Alternating:
      return {close_group(symmetric_generators(s.n, true), bound), std::nullopt};
    case GroupSpec::Kind::Dihedral: {
      std::vector<Point> rot(s.n), refl(s.n);
      for (Point x = 0; x < s.n; ++x) {
        rot[x] = static_cast<Point>((x + 1) % s.n);
        refl[x] = static_cast<Point>((s.n - x) % s.n);
      }
      return {close_group({Perm(rot), Perm(refl)}, bound), std::nullopt};
    }
    case GroupSpec::Kind::Quaternion8: return {from_cayley(quaternion_table(), bound), std::nullopt};
  }
  throw ValidationError("unknown group kind");
}

std::vector<CatalogEntry> verification_catalog() {
  auto spec = [](const char* text) { return parse_group_spec(std::string_view(text)); };
  auto named = [](GroupSpec s, std::string name) {
    s.name = std::move(name);
    return s;
  };
  std::vector<CatalogEntry> out;
  for (std::size_t n = 2; n <= 12; ++n) {
    GroupSpec c;
    c.kind = GroupSpec::Kind::Cyclic;
    c.n = n;
    c.name = "C_" + std::to_string(n);
    for (std::uint64_t p : {2, 3, 5}) out.push_back({c.name, c, p});
  }
  const GroupSpec v4 = named(spec(R"({"family":"elementary_abelian","l":2,"d":2})"), "C_2xC_2");
  const GroupSpec d4 = named(spec(R"({"family":"dihedral","n":4})"), "D_4");
  const GroupSpec q8 = named(spec(R"({"family":"quaternion8"})"), "Q_8");
  const GroupSpec s3 = named(spec(R"({"family":"symmetric","n":3})"), "S_3");
  const GroupSpec c7c3 = named(spec(R"({"family":"semidirect","base":{"l":7,"d":1},
      "actor":{"cyclic":3},"action":[[2]],"require":["faithful","irreducible"]})"), "C_7:C_3");
  const GroupSpec c5c4 = named(spec(R"({"family":"semidirect","base":{"l":5,"d":1},
      "actor":{"cyclic":4},"action":[[2]],"require":["faithful","irreducible"]})"), "C_5:C_4");
  const GroupSpec a4 = named(spec(R"({"family":"alternating","n":4})"), "A_4");
  const GroupSpec s3s3 = named(spec(R"({"family":"direct_product","factors":[
      {"family":"symmetric","n":3},{"family":"symmetric","n":3}]})"), "S_3xS_3");
  const GroupSpec a5 = named(spec(R"({"family":"alternating","n":5})"), "A_5");
  const GroupSpec s4 = named(spec(R"({"family":"symmetric","n":4})"), "S_4");
  const GroupSpec d5 = named(spec(R"({"family":"dihedral","n":5})"), "D_5");
  const GroupSpec dic3 = named(spec(R"({"family":"semidirect","base":{"cyclic":3},
      "actor":{"cyclic":4},"action":[[2]]})"), "C_3:C_4");
  const GroupSpec c3sq_c4 = named(spec(R"({"family":"semidirect","base":{"l":3,"d":2},
      "actor":{"cyclic":4},"action":[[[0,2],[1,0]]],"require":["faithful","irreducible"]})"),
      "C_3^2:C_4");

  for (const auto* g : {&v4, &d4, &q8}) out.push_back({g->name, *g, 2});
  for (std::uint64_t p : {2, 3, 5}) out.push_back({s3.name, s3, p});
  out.push_back({c7c3.name, c7c3, 3});
  out.push_back({c7c3.name, c7c3, 7});
  out.push_back({c5c4.name, c5c4, 5});
  out.push_back({a4.name, a4, 2});
  out.push_back({a4.name, a4, 3});
  out.push_back({s4.name, s4, 2});
  out.push_back({s4.name, s4, 3});
  out.push_back({d5.name, d5, 2});
  out.push_back({d5.name, d5, 5});
  out.push_back({dic3.name, dic3, 2});
  out.push_back({dic3.name, dic3, 3});
  out.push_back({s3s3.name, s3s3, 2});
  out.push_back({s3s3.name, s3s3, 3});
  out.push_back({c3sq_c4.name, c3sq_c4, 2});
  out.push_back({c3sq_c4.name, c3sq_c4, 3});
  for (std::uint64_t p : {2, 3, 5}) out.push_back({a5.name, a5, p});
  return out;
}

}  // namespace brauer
