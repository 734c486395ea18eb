#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

namespace cohom::triple {

enum class Verdict { TotallyGeodesic, NotTotallyGeodesic, Inconclusive };

const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// A verdict plus the rule that produced it. `rule` is a stable
/// identifier ("dimension-bound", "kernel-ideal", ...); `detail` carries
/// the numbers behind it.
struct Finding {
  Verdict verdict = Verdict::Inconclusive;
  std::string rule;
  std::string detail;

  static Finding inconclusive(std::string rule, std::string detail) {
    return {Verdict::Inconclusive, std::move(rule), std::move(detail)};
  }
  bool decided() const { return verdict != Verdict::Inconclusive; }
};

/// Join in the three-valued lattice: inconclusive is the bottom, the two
/// definite verdicts are incomparable. Joining them throws cohom::Error.
/// Among equal verdicts the rule names are merged in sorted order so the
/// operation is commutative and associative.
Finding merge(const Finding& a, const Finding& b);

void to_json(nlohmann::json& j, const Finding& f);
void from_json(const nlohmann::json& j, Finding& f);

}  // namespace cohom::triple
