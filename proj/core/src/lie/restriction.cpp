#include "cohom/lie/restriction.hpp"

#include "cohom/error.hpp"

namespace cohom::lie {
namespace {

bool classical(SimpleType t) {
  return t.family == Family::A || t.family == Family::B || t.family == Family::C ||
         t.family == Family::D;
}

int halve(int v) {
  if (v % 2 != 0) throw Error("restriction produced a non-integral weight");
  return v / 2;
}

int in_block_length(SimpleType t) { return classical(t) ? eps_length(t) : t.rank; }

}  // namespace

int eps_length(SimpleType type) {
  if (!classical(type)) throw Error("no epsilon coordinates for " + type.name());
  return type.family == Family::A ? type.rank + 1 : type.rank;
}

std::vector<int> to_doubled_eps(SimpleType t, const Weight& w) {
  const int r = t.rank;
  std::vector<int> e(eps_length(t), 0);
  switch (t.family) {
    case Family::A:
    case Family::C:
      for (int j = 0; j < r; ++j)
        for (int i = j; i < r; ++i) e[j] += 2 * w[i];
      break;
    case Family::B:
      for (int j = 0; j < r; ++j) {
        for (int i = j; i < r - 1; ++i) e[j] += 2 * w[i];
        e[j] += w[r - 1];
      }
      break;
    case Family::D:
      for (int j = 0; j < r - 1; ++j) {
        for (int i = j; i < r - 2; ++i) e[j] += 2 * w[i];
        e[j] += w[r - 2] + w[r - 1];
      }
      e[r - 1] = w[r - 1] - w[r - 2];
      break;
    default: throw Error("no epsilon coordinates for " + t.name());
  }
  return e;
}

Weight from_doubled_eps(SimpleType t, const std::vector<int>& e) {
  const int r = t.rank;
  if (static_cast<int>(e.size()) != eps_length(t)) throw Error("epsilon vector length mismatch");
  Weight w(std::vector<int>(r, 0));
  switch (t.family) {
    case Family::A:
      for (int i = 0; i < r; ++i) w[i] = halve(e[i] - e[i + 1]);
      break;
    case Family::B:
      for (int i = 0; i < r - 1; ++i) w[i] = halve(e[i] - e[i + 1]);
      w[r - 1] = e[r - 1];
      break;
    case Family::C:
      for (int i = 0; i < r - 1; ++i) w[i] = halve(e[i] - e[i + 1]);
      w[r - 1] = halve(e[r - 1]);
      break;
    case Family::D:
      for (int i = 0; i < r - 1; ++i) w[i] = halve(e[i] - e[i + 1]);
      w[r - 1] = halve(e[r - 2] + e[r - 1]);
      break;
    default: throw Error("no epsilon coordinates for " + t.name());
  }
  return w;
}

int Restriction::input_length() const {
  int n = ambient.torus_rank;
  for (const auto& s : ambient.simples) n += in_block_length(s);
  return n;
}

int Restriction::output_length() const {
  int n = sub.torus_rank;
  for (std::size_t b = 0; b < sub.simples.size(); ++b)
    n += sub_eps_mode[b] ? eps_length(sub.simples[b]) : sub.simples[b].rank;
  return n;
}

void Restriction::validate() const {
  if (sub_eps_mode.size() != sub.simples.size()) throw Error(name + ": mode list length mismatch");
  if (static_cast<int>(matrix.size()) != output_length()) throw Error(name + ": wrong row count");
  for (const auto& row : matrix)
    if (static_cast<int>(row.size()) != input_length()) throw Error(name + ": wrong column count");
  if (denominator <= 0) throw Error(name + ": bad denominator");
}

Weight Restriction::apply(const Weight& w) const {
  if (static_cast<int>(w.size()) != ambient.rank()) throw Error(name + ": weight length mismatch");
  std::vector<int> in;
  in.reserve(input_length());
  for (std::size_t b = 0; b < ambient.simples.size(); ++b) {
    const auto t = ambient.simples[b];
    Weight local(std::vector<int>(w.c.begin() + ambient.offset(b), w.c.begin() + ambient.offset(b) + t.rank));
    if (classical(t)) {
      auto e = to_doubled_eps(t, local);
      in.insert(in.end(), e.begin(), e.end());
    } else {
      for (int x : local.c) in.push_back(2 * x);
    }
  }
  for (int i = ambient.offset(ambient.simples.size()); i < ambient.rank(); ++i) in.push_back(2 * w[i]);

  std::vector<int> out(matrix.size(), 0);
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    long long acc = 0;
    for (std::size_t j = 0; j < in.size(); ++j) acc += static_cast<long long>(matrix[i][j]) * in[j];
    if (acc % denominator != 0) throw Error(name + ": non-integral image");
    out[i] = static_cast<int>(acc / denominator);
  }

  Weight res;
  std::size_t pos = 0;
  for (std::size_t b = 0; b < sub.simples.size(); ++b) {
    const auto t = sub.simples[b];
    if (sub_eps_mode[b]) {
      const int len = eps_length(t);
      std::vector<int> e(out.begin() + pos, out.begin() + pos + len);
      auto local = from_doubled_eps(t, e);
      res.c.insert(res.c.end(), local.c.begin(), local.c.end());
      pos += len;
    } else {
      for (int k = 0; k < t.rank; ++k) res.c.push_back(halve(out[pos++]));
    }
  }
  for (int k = 0; k < sub.torus_rank; ++k) res.c.push_back(halve(out[pos++]));
  return res;
}

Character Restriction::restrict(const Character& c) const {
  if (!(c.algebra() == ambient)) throw Error(name + ": character is not over the ambient algebra");
  Character::Map out;
  for (const auto& [w, m] : c.weights()) out[apply(w)] += m;
  return Character(sub, std::move(out));
}

RestrictionBuilder::RestrictionBuilder(std::string name, ReductiveAlgebra ambient, ReductiveAlgebra sub,
                                       std::vector<bool> sub_eps_mode, int denominator) {
  r_.name = std::move(name);
  r_.ambient = std::move(ambient);
  r_.sub = std::move(sub);
  r_.sub_eps_mode = std::move(sub_eps_mode);
  r_.denominator = denominator;
  r_.matrix.assign(r_.output_length(), std::vector<int>(r_.input_length(), 0));
}

RestrictionBuilder& RestrictionBuilder::set(int row, int col, int value) {
  r_.matrix.at(row).at(col) = value;
  return *this;
}

int RestrictionBuilder::in(std::size_t b, int k) const {
  int idx = 0;
  for (std::size_t i = 0; i < b && i < r_.ambient.simples.size(); ++i) idx += in_block_length(r_.ambient.simples[i]);
  return idx + k;
}

int RestrictionBuilder::out(std::size_t b, int k) const {
  int idx = 0;
  for (std::size_t i = 0; i < b && i < r_.sub.simples.size(); ++i)
    idx += r_.sub_eps_mode[i] ? eps_length(r_.sub.simples[i]) : r_.sub.simples[i].rank;
  return idx + k;
}

Restriction RestrictionBuilder::build() const {
  r_.validate();
  return r_;
}

Branching::Branching(std::string n, ReductiveAlgebra a, ReductiveAlgebra s,
                     std::function<Weight(const Weight&)> m)
    : name(std::move(n)), ambient(std::move(a)), sub(std::move(s)), map(std::move(m)) {}

Branching::Branching(Restriction r) : name(r.name), ambient(r.ambient), sub(r.sub) {
  r.validate();
  map = [r = std::move(r)](const Weight& w) { return r.apply(w); };
}

Character Branching::restrict(const Character& c) const {
  if (!(c.algebra() == ambient)) throw Error(name + ": character is not over " + ambient.name());
  Character::Map out;
  for (const auto& [w, m] : c.weights()) {
    Weight img = map(w);
    if (static_cast<int>(img.size()) != sub.rank()) throw Error(name + ": image has wrong length");
    out[img] += m;
  }
  return Character(sub, std::move(out));
}

Branching compose(const Branching& first, const Branching& second) {
  if (!(first.sub == second.ambient)) throw Error("cannot compose " + first.name + " with " + second.name);
  auto f = first.map;
  auto g = second.map;
  return Branching(first.name + " > " + second.name, first.ambient, second.sub,
                   [f, g](const Weight& w) { return g(f(w)); });
}

Branching ideal_inclusion(const ReductiveAlgebra& ambient, const std::vector<std::size_t>& blocks,
                          const std::vector<int>& torus_coords) {
  ReductiveAlgebra sub;
  std::vector<std::pair<int, int>> ranges;
  for (auto b : blocks) {
    if (b >= ambient.simples.size()) throw Error("ideal_inclusion: block out of range");
    sub.simples.push_back(ambient.simples[b]);
    ranges.emplace_back(ambient.offset(b), ambient.simples[b].rank);
  }
  const int t0 = ambient.offset(ambient.simples.size());
  for (int t : torus_coords) {
    if (t < 0 || t >= ambient.torus_rank) throw Error("ideal_inclusion: torus coordinate out of range");
    ranges.emplace_back(t0 + t, 1);
  }
  sub.torus_rank = static_cast<int>(torus_coords.size());
  return Branching("project " + ambient.name() + " -> " + sub.name(), ambient, sub,
                   [ranges](const Weight& w) {
                     Weight out;
                     for (auto [start, len] : ranges)
                       for (int i = 0; i < len; ++i) out.c.push_back(w[start + i]);
                     return out;
                   });
}

}  // namespace cohom::lie
