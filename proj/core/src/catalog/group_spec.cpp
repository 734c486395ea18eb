#include "cohom/catalog/group_spec.hpp"

#include <cctype>
#include <set>

#include "cohom/error.hpp"

namespace cohom::catalog {

using lie::Family;
using lie::ReductiveAlgebra;
using lie::SimpleType;

ReductiveAlgebra sum(const ReductiveAlgebra& a, const ReductiveAlgebra& b) {
  ReductiveAlgebra out = a;
  out.simples.insert(out.simples.end(), b.simples.begin(), b.simples.end());
  out.torus_rank += b.torus_rank;
  return out;
}

ReductiveAlgebra orthogonal_algebra(int n) {
  if (n < 1) throw Error("SO(n) needs n >= 1");
  switch (n) {
    case 1: return {};
    case 2: return ReductiveAlgebra::torus(1);
    case 3: return ReductiveAlgebra::simple(SimpleType::make(Family::A, 1));
    case 4: return {{SimpleType::make(Family::A, 1), SimpleType::make(Family::A, 1)}, 0};
    case 6: return ReductiveAlgebra::simple(SimpleType::make(Family::A, 3));
    default:
      return ReductiveAlgebra::simple(SimpleType::make(n % 2 ? Family::B : Family::D, n / 2));
  }
}

ReductiveAlgebra symplectic_algebra(int n) {
  if (n < 1) throw Error("Sp(n) needs n >= 1");
  if (n == 1) return ReductiveAlgebra::simple(SimpleType::make(Family::A, 1));
  if (n == 2) return ReductiveAlgebra::simple(SimpleType::make(Family::B, 2));
  return ReductiveAlgebra::simple(SimpleType::make(Family::C, n));
}

ReductiveAlgebra special_unitary_algebra(int n) {
  if (n < 1) throw Error("SU(n) needs n >= 1");
  if (n == 1) return {};
  return ReductiveAlgebra::simple(SimpleType::make(Family::A, n - 1));
}

namespace {

struct Parsed {
  ReductiveAlgebra algebra;
  std::set<std::string> tags;
  bool connected = true;
};

class Parser {
 public:
  explicit Parser(std::string text) : s_(std::move(text)) {}

  Parsed run() {
    Parsed p = product();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  std::string s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error("cannot parse group '" + s_ + "' at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(const std::string& tok) {
    skip_ws();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  int integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stoi(s_.substr(start, pos_ - start));
  }
  int paren_int() {
    if (!eat("(")) fail("expected '('");
    int n = integer();
    if (!eat(")")) fail("expected ')'");
    return n;
  }

  Parsed product() {
    Parsed p = power();
    for (;;) {
      if (eat("x") || eat("\xC3\x97") || eat("*")) {
        p = combine(p, power());
        p.tags.insert("product");
      } else if (eat(".") || eat("\xC2\xB7")) {
        p = combine(p, power());
        p.tags.insert("central-quotient");
      } else {
        return p;
      }
    }
  }

  static Parsed combine(const Parsed& a, const Parsed& b) {
    Parsed out;
    out.algebra = sum(a.algebra, b.algebra);
    out.tags = a.tags;
    out.tags.insert(b.tags.begin(), b.tags.end());
    out.connected = a.connected && b.connected;
    return out;
  }

  Parsed power() {
    Parsed base = atom();
    if (eat("^")) {
      int k = integer();
      if (k < 1) fail("exponent must be positive");
      Parsed out = base;
      for (int i = 1; i < k; ++i) out = combine(out, base);
      if (k > 1) out.tags.insert("product");
      return out;
    }
    return base;
  }

  Parsed atom() {
    Parsed p;
    if (eat("Spin")) {
      p.algebra = orthogonal_algebra(paren_int());
      p.tags.insert("spin");
    } else if (eat("SO")) {
      p.algebra = orthogonal_algebra(paren_int());
    } else if (eat("SU")) {
      p.algebra = special_unitary_algebra(paren_int());
    } else if (eat("Sp")) {
      p.algebra = symplectic_algebra(paren_int());
    } else if (eat("S(")) {
      Parsed inner = product();
      if (!eat(")")) fail("expected ')'");
      p = inner;
      // S(U(a)xU(b)x...) drops one circle; S(O(a)xO(b)) only loses components.
      if (p.algebra.torus_rank > 0 && p.tags.count("unitary")) {
        --p.algebra.torus_rank;
      }
      p.tags.erase("unitary");
    } else if (eat("U")) {
      int n = paren_int();
      p.algebra = sum(special_unitary_algebra(n), ReductiveAlgebra::torus(1));
      p.tags.insert("unitary");
    } else if (eat("O")) {
      p.algebra = orthogonal_algebra(paren_int());
      p.connected = false;
    } else if (eat("T")) {
      eat("^");
      p.algebra = ReductiveAlgebra::torus(integer());
    } else if (eat("1")) {
      // trivial group
    } else if (eat("G2")) {
      p.algebra = ReductiveAlgebra::simple(SimpleType::make(Family::G, 2));
    } else if (eat("F4")) {
      p.algebra = ReductiveAlgebra::simple(SimpleType::make(Family::F, 4));
    } else if (eat("E")) {
      p.algebra = ReductiveAlgebra::simple(SimpleType::make(Family::E, integer()));
    } else {
      fail("unknown factor");
    }
    return p;
  }
};

}  // namespace

CompactGroupSpec parse_group(const std::string& text) {
  Parsed p = Parser(text).run();
  CompactGroupSpec g;
  g.name = text;
  g.algebra = p.algebra;
  g.connected = p.connected;
  p.tags.erase("unitary");
  std::string tag;
  for (const auto& t : p.tags) tag += (tag.empty() ? "" : "+") + t;
  g.cover_tag = tag.empty() ? "linear" : tag;
  return g;
}

}  // namespace cohom::catalog
