#include "cohom/lie/types.hpp"

#include <algorithm>
#include <sstream>

#include "cohom/error.hpp"

namespace cohom::lie {

SimpleType SimpleType::make(Family family, int rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) {
    throw Error("invalid rank " + std::to_string(rank) + " for simple type family");
  }
  return SimpleType{family, rank};
}

SimpleType SimpleType::parse(const std::string& text) {
  if (text.size() < 2) throw Error("cannot parse simple type '" + text + "'");
  Family f;
  switch (text[0]) {
    case 'A': f = Family::A; break;
    case 'B': f = Family::B; break;
    case 'C': f = Family::C; break;
    case 'D': f = Family::D; break;
    case 'E': f = Family::E; break;
    case 'F': f = Family::F; break;
    case 'G': f = Family::G; break;
    default: throw Error("cannot parse simple type '" + text + "'");
  }
  int r = 0;
  try {
    r = std::stoi(text.substr(1));
  } catch (const std::exception&) {
    throw Error("cannot parse simple type '" + text + "'");
  }
  return make(f, r);
}

std::string SimpleType::name() const {
  static const char letters[] = {'A', 'B', 'C', 'D', 'E', 'F', 'G'};
  return std::string(1, letters[static_cast<int>(family)]) + std::to_string(rank);
}

int SimpleType::dimension() const {
  const int n = rank;
  switch (family) {
    case Family::A: return n * (n + 2);
    case Family::B:
    case Family::C: return n * (2 * n + 1);
    case Family::D: return n * (2 * n - 1);
    case Family::E: return n == 6 ? 78 : n == 7 ? 133 : 248;
    case Family::F: return 52;
    case Family::G: return 14;
  }
  return 0;
}

int ReductiveAlgebra::rank() const {
  int r = torus_rank;
  for (const auto& s : simples) r += s.rank;
  return r;
}

int ReductiveAlgebra::dimension() const {
  int d = torus_rank;
  for (const auto& s : simples) d += s.dimension();
  return d;
}

int ReductiveAlgebra::offset(std::size_t block) const {
  int off = 0;
  for (std::size_t i = 0; i < block && i < simples.size(); ++i) off += simples[i].rank;
  return off;
}

std::string ReductiveAlgebra::name() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& s : simples) {
    if (!first) os << "+";
    os << s.name();
    first = false;
  }
  if (torus_rank > 0) {
    if (!first) os << "+";
    os << "T" << torus_rank;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

ReductiveAlgebra ReductiveAlgebra::canonical() const {
  ReductiveAlgebra out = *this;
  for (auto& s : out.simples) {
    if (s.family == Family::C && s.rank == 2) s = SimpleType{Family::B, 2};
    if (s.family == Family::D && s.rank == 3) s = SimpleType{Family::A, 3};
  }
  std::sort(out.simples.begin(), out.simples.end());
  return out;
}

bool Weight::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

Weight Weight::operator+(const Weight& o) const {
  if (o.c.size() != c.size()) throw Error("weight length mismatch");
  Weight out = *this;
  for (std::size_t i = 0; i < c.size(); ++i) out.c[i] += o.c[i];
  return out;
}

Weight Weight::operator-() const {
  Weight out = *this;
  for (auto& x : out.c) x = -x;
  return out;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ",";
    os << c[i];
  }
  os << "]";
  return os.str();
}

}  // namespace cohom::lie
