#include "cohom/catalog/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace cohom::catalog {

using json = nlohmann::json;
using lie::Character;
using lie::ReductiveAlgebra;
using lie::Reality;
using lie::Weight;

int NamedRep::real_dim() const {
  const auto d = static_cast<int>(character.dim());
  return reality == Reality::Real ? d : 2 * d;
}

lie::Character NamedRep::complexified() const { return lie::complexification(character, reality); }

NamedRep make_rep(std::string name, CompactGroupSpec group, const std::vector<Weight>& hws, Reality reality) {
  Character c(group.algebra);
  for (const auto& hw : hws) c = lie::direct_sum(c, lie::irreducible_character(group.algebra, hw));
  if (hws.size() == 1) {
    const Reality actual = lie::irreducible_reality(group.algebra, hws[0]);
    if (actual != reality)
      throw Error(name + " on " + group.name + ": stated " + lie::to_string(reality) + " but the irreducible is " +
                  lie::to_string(actual));
  }
  return NamedRep{std::move(name), std::move(group), std::move(c), reality};
}

std::optional<int> derived_fixed_space_dim(const EmbeddingTag& e, const std::string& rep_name) {
  auto it = e.ambient_reps.find(rep_name);
  if (!e.rule || it == e.ambient_reps.end()) return std::nullopt;
  const auto restricted = e.rule->restrict(it->second.character);
  return static_cast<int>(lie::trivial_multiplicity(lie::complexification(restricted, it->second.reality)));
}

std::optional<int> fixed_space_dim(const EmbeddingTag& e, const std::string& rep_name) {
  if (auto d = derived_fixed_space_dim(e, rep_name)) return d;
  auto it = e.fixed_space_dims.find(rep_name);
  if (it != e.fixed_space_dims.end()) return it->second;
  return std::nullopt;
}

namespace {

// Substitutes "{2n+1}"-style linear expressions in n.
std::string instantiate(const std::string& tmpl, int n) {
  std::string out;
  for (std::size_t i = 0; i < tmpl.size(); ++i) {
    if (tmpl[i] != '{') {
      out += tmpl[i];
      continue;
    }
    const auto close = tmpl.find('}', i);
    if (close == std::string::npos) throw Error("unterminated template in '" + tmpl + "'");
    const std::string expr = tmpl.substr(i + 1, close - i - 1);
    std::size_t p = 0;
    int coeff = 1;
    if (p < expr.size() && std::isdigit(static_cast<unsigned char>(expr[p]))) {
      coeff = 0;
      while (p < expr.size() && std::isdigit(static_cast<unsigned char>(expr[p]))) coeff = coeff * 10 + (expr[p++] - '0');
    }
    if (p >= expr.size() || expr[p] != 'n') throw Error("bad template expression '" + expr + "'");
    ++p;
    int constant = 0;
    if (p < expr.size()) {
      const int sign = expr[p] == '-' ? -1 : 1;
      if (expr[p] != '-' && expr[p] != '+') throw Error("bad template expression '" + expr + "'");
      constant = sign * std::stoi(expr.substr(p + 1));
    }
    out += std::to_string(coeff * n + constant);
    i = close;
  }
  return out;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

const std::vector<std::pair<std::string, std::vector<std::string>>>& layouts() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> l = {
      {"sphere_transitive",
       {"anchor", "group", "highest_weights", "image", "notes", "reality", "rep_name", "sphere_dim", "stabilizer"}},
      {"embeddings", {"ambient", "ambient_reps", "block", "descriptor", "fixed_space_dims", "name", "notes", "sub"}},
      {"wallach", {"dim", "g1", "h1", "index", "n_min"}},
  };
  return l;
}

void require_fields(const json& rec, const std::string& where, const std::vector<std::string>& fields) {
  if (!rec.is_object()) throw SchemaError(where, "record is not an object");
  for (const auto& f : fields)
    if (!rec.contains(f)) throw SchemaError(where, "missing field '" + f + "'");
  for (auto it = rec.begin(); it != rec.end(); ++it) {
    bool known = false;
    for (const auto& f : fields) known = known || f == it.key();
    if (!known) throw SchemaError(where, "unknown field '" + it.key() + "'");
  }
}

template <class F>
auto guarded(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception& e) {
    throw SchemaError(where, e.what());
  }
}

std::vector<Weight> weights_from(const json& arr) {
  std::vector<Weight> out;
  for (const auto& w : arr) out.emplace_back(w.get<std::vector<int>>());
  return out;
}

ClassicalGroup classical_from(const json& j) {
  const auto kind = j.at(0).get<std::string>();
  const int n = j.at(1).get<int>();
  if (kind == "SU") return {Classical::SU, n};
  if (kind == "U") return {Classical::U, n};
  if (kind == "Sp") return {Classical::Sp, n};
  if (kind == "SO") return {Classical::SO, n};
  throw Error("unknown classical group kind '" + kind + "'");
}

SphereTransitivePair pair_from(const json& r) {
  SphereTransitivePair p;
  p.group = parse_group(r.at("group").get<std::string>());
  const Reality re = lie::reality_from_string(r.at("reality").get<std::string>());
  p.rep = make_rep(r.at("rep_name").get<std::string>(), p.group, weights_from(r.at("highest_weights")), re);
  p.sphere_dim = r.at("sphere_dim").get<int>();
  p.stabilizer = parse_group(r.at("stabilizer").get<std::string>());
  p.effective_quotient = r.at("image").get<std::string>();
  p.notes = r.at("notes").get<std::string>();
  p.anchor = r.at("anchor").get<std::string>();
  if (p.anchor != "text" && p.anchor != "classical" && p.anchor != "inferred-from-context")
    throw Error("anchor must be text, classical or inferred-from-context");
  if (p.rep.real_dim() - 1 != p.sphere_dim)
    throw Error("sphere_dim " + std::to_string(p.sphere_dim) + " but the representation has real dimension " +
                std::to_string(p.rep.real_dim()));
  if (p.group.dimension() - p.stabilizer.dimension() != p.sphere_dim)
    throw Error("dim " + p.group.name + " - dim " + p.stabilizer.name + " != sphere_dim");
  return p;
}

EmbeddingTag embedding_from(const json& r) {
  EmbeddingTag e;
  e.name = r.at("name").get<std::string>();
  e.ambient = parse_group(r.at("ambient").get<std::string>());
  e.sub = parse_group(r.at("sub").get<std::string>());
  e.descriptor = r.at("descriptor").get<std::string>();
  e.notes = r.at("notes").get<std::string>();
  for (auto it = r.at("fixed_space_dims").begin(); it != r.at("fixed_space_dims").end(); ++it)
    e.fixed_space_dims[it.key()] = it.value().get<int>();
  for (auto it = r.at("ambient_reps").begin(); it != r.at("ambient_reps").end(); ++it) {
    const auto& v = it.value();
    e.ambient_reps.emplace(it.key(), make_rep(it.key(), e.ambient, weights_from(v.at("highest_weights")),
                                              lie::reality_from_string(v.at("reality").get<std::string>())));
  }
  const auto& b = r.at("block");
  if (!b.is_null()) {
    if (e.descriptor != "block") throw Error("block data given for descriptor '" + e.descriptor + "'");
    BlockEmbedding be;
    be.name = e.name;
    be.ambient = classical_from(b.at("ambient"));
    for (const auto& f : b.at("factors")) be.factors.push_back(classical_from(f));
    for (const auto& slot : b.at("slots")) {
      std::vector<SlotTarget> targets;
      for (const auto& t : slot) targets.push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()});
      be.slots.push_back(targets);
    }
    auto br = be.branching();
    if (!(br.ambient.canonical() == e.ambient.algebra.canonical()))
      throw Error("block ambient " + br.ambient.name() + " does not match " + e.ambient.name);
    if (!(br.sub.canonical() == e.sub.algebra.canonical()))
      throw Error("block subgroup " + br.sub.name() + " does not match " + e.sub.name);
    e.rule = std::move(br);
  }
  return e;
}

WallachRecord wallach_from(const json& r) {
  WallachRecord w;
  w.index = r.at("index").get<int>();
  w.g1_template = r.at("g1").get<std::string>();
  w.h1_template = r.at("h1").get<std::string>();
  const auto& d = r.at("dim");
  w.dim_text = d.at("text").get<std::string>();
  w.dim_n_coeff = d.at("n_coeff").get<int>();
  w.dim_const = d.at("const").get<int>();
  w.n_min = r.at("n_min").get<int>();
  const int lo = w.parametrised() ? w.n_min : 0;
  const int hi = w.parametrised() ? w.n_min + 6 : 0;
  for (int n = lo; n <= hi; ++n) {
    const int expect = parse_group(w.g1(n)).dimension() - parse_group(w.h1(n)).dimension();
    if (expect != w.dim(n))
      throw Error("row " + std::to_string(w.index) + " at n=" + std::to_string(n) + ": dim formula " + w.dim_text +
                  " disagrees with dim G1 - dim H1 = " + std::to_string(expect));
  }
  return w;
}

}  // namespace

std::string WallachRecord::g1(int n) const { return instantiate(g1_template, n); }
std::string WallachRecord::h1(int n) const { return instantiate(h1_template, n); }

std::string schema_checksum() {
  std::string desc = "cohomone-catalog/1";
  for (const auto& [section, fields] : layouts()) {
    desc += "|" + section + ":";
    for (const auto& f : fields) desc += f + ",";
  }
  std::ostringstream os;
  os << std::hex << fnv1a(desc);
  return os.str();
}

Catalog Catalog::parse(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("document", e.what());
  }
  if (!doc.is_object() || !doc.contains("schema")) throw SchemaError("document", "missing schema header");
  const auto& schema = doc["schema"];
  if (schema.value("name", "") != "cohomone-catalog" || schema.value("version", 0) != 1)
    throw SchemaError("schema", "unsupported catalog name or version");
  if (schema.value("checksum", "") != schema_checksum())
    throw SchemaError("schema", "checksum " + schema.value("checksum", std::string("<none>")) +
                                    " does not match this build (" + schema_checksum() + ")");
  Catalog cat;
  for (const auto& [section, fields] : layouts()) {
    if (!doc.contains(section) || !doc[section].is_array()) throw SchemaError(section, "missing array");
    const auto& arr = doc[section];
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string where = section + "[" + std::to_string(i) + "]";
      require_fields(arr[i], where, fields);
      guarded(where, [&] {
        if (section == "sphere_transitive") cat.pairs_.push_back(pair_from(arr[i]));
        if (section == "embeddings") cat.embeddings_.push_back(embedding_from(arr[i]));
        if (section == "wallach") cat.wallach_.push_back(wallach_from(arr[i]));
        return 0;
      });
    }
  }
  return cat;
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("document", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string Catalog::default_path() {
  if (const char* env = std::getenv("COHOM_CATALOG"); env && *env) return env;
  return std::string(COHOM_DEFAULT_DATA_DIR) + "/catalog.json";
}

const Catalog& Catalog::builtin() {
  static const Catalog cat = load(default_path());
  return cat;
}

const EmbeddingTag* Catalog::embedding(const std::string& name) const {
  for (const auto& e : embeddings_)
    if (e.name == name) return &e;
  return nullptr;
}

namespace {

struct Assignment {
  std::vector<std::size_t> blocks;  // pair block i -> h block
  std::vector<int> torus;           // pair torus i -> h torus coordinate
};

void assignments(const ReductiveAlgebra& pa, const ReductiveAlgebra& h, Assignment& cur, std::vector<bool>& used,
                 std::vector<Assignment>& out) {
  if (cur.blocks.size() < pa.simples.size()) {
    const auto& want = pa.simples[cur.blocks.size()];
    for (std::size_t j = 0; j < h.simples.size(); ++j) {
      if (used[j] || !(h.simples[j] == want)) continue;
      used[j] = true;
      cur.blocks.push_back(j);
      assignments(pa, h, cur, used, out);
      cur.blocks.pop_back();
      used[j] = false;
    }
    return;
  }
  if (static_cast<int>(cur.torus.size()) < pa.torus_rank) {
    for (int t = 0; t < h.torus_rank; ++t) {
      bool taken = false;
      for (int u : cur.torus) taken = taken || u == t;
      if (taken) continue;
      cur.torus.push_back(t);
      assignments(pa, h, cur, used, out);
      cur.torus.pop_back();
    }
    return;
  }
  out.push_back(cur);
}

Character pull_back(const Character& c, const ReductiveAlgebra& h, const Assignment& a, int charge_scale,
                    int charge_shift) {
  const auto& pa = c.algebra();
  Character::Map out;
  for (const auto& [w, m] : c.weights()) {
    Weight lifted(std::vector<int>(h.rank(), 0));
    for (std::size_t i = 0; i < a.blocks.size(); ++i)
      for (int k = 0; k < pa.simples[i].rank; ++k) lifted[h.offset(a.blocks[i]) + k] = w[pa.offset(i) + k];
    const int pt = pa.offset(pa.simples.size());
    const int ht = h.offset(h.simples.size());
    for (std::size_t i = 0; i < a.torus.size(); ++i)
      lifted[ht + a.torus[i]] = w[pt + static_cast<int>(i)] * charge_scale + charge_shift;
    out[lifted] += m;
  }
  return Character(h, std::move(out));
}

std::string describe(const ReductiveAlgebra& h, const ReductiveAlgebra& pa, const Assignment& a) {
  std::string s = h.name() + " -> " + pa.name() + " via";
  for (auto b : a.blocks) s += " block" + std::to_string(b);
  for (int t : a.torus) s += " torus" + std::to_string(t);
  if (a.blocks.empty() && a.torus.empty()) s += " nothing";
  return s;
}

}  // namespace

std::vector<SliceCandidate> Catalog::sphere_transitive_candidates(const CompactGroupSpec& h, std::string* note,
                                                                  int window) const {
  std::vector<SliceCandidate> out;
  std::set<Character::Map> seen;
  auto push = [&](const SphereTransitivePair& p, const Assignment& a, int scale, int shift, int twist,
                  const std::string& name) {
    Character c = pull_back(p.rep.character, h.algebra, a, scale, shift);
    NamedRep lifted{name, h, c, twist != 0 && p.rep.character.algebra().torus_rank > 0 ? Reality::Complex : p.rep.reality};
    const auto key = lifted.complexified().weights();
    if (!seen.insert(key).second) return;
    std::string map = describe(h.algebra, p.group.algebra, a);
    if (twist != 0) map += ", twist " + std::to_string(twist);
    out.push_back({p, std::move(lifted), std::move(map), twist});
  };

  for (const auto& p : pairs_) {
    const auto& pa = p.group.algebra;
    if (pa.rank() == 0) continue;
    std::vector<Assignment> as;
    Assignment cur;
    std::vector<bool> used(h.algebra.simples.size(), false);
    assignments(pa, h.algebra, cur, used, as);
    for (const auto& a : as) {
      const bool circle = pa.simples.empty() && pa.torus_rank == 1;
      const bool unitary = pa.simples.size() == 1 && pa.torus_rank == 1 && p.group.name.rfind("U(", 0) == 0;
      if (circle && h.algebra.simples.empty()) {
        for (int d = 1; d <= window; ++d)
          push(p, a, d, 0, d == 1 ? 0 : d, d == 1 ? p.rep.name : "covering(" + std::to_string(d) + ")");
      } else if (unitary) {
        const int n = pa.simples[0].rank + 1;
        push(p, a, 1, 0, 0, p.rep.name);
        for (int k = -window; k <= window; ++k)
          if (k != 0) push(p, a, 1, n * k, k, "det_twist(" + std::to_string(k) + ")");
      } else {
        push(p, a, 1, 0, 0, p.rep.name);
      }
    }
  }
  if (note) *note = out.empty() ? "not in catalog" : "";
  return out;
}

}  // namespace cohom::catalog
