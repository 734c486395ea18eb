#include "cohom/triple/verdict.hpp"

#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "cohom/error.hpp"

namespace cohom::triple {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::TotallyGeodesic: return "totally_geodesic";
    case Verdict::NotTotallyGeodesic: return "not_totally_geodesic";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

Verdict verdict_from_string(const std::string& s) {
  for (auto v : {Verdict::TotallyGeodesic, Verdict::NotTotallyGeodesic, Verdict::Inconclusive})
    if (s == to_string(v)) return v;
  throw Error("unknown verdict '" + s + "'");
}

namespace {

std::set<std::string> split(const std::string& s) {
  std::set<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ';'))
    if (!part.empty()) out.insert(part);
  return out;
}

std::string join(const std::set<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ";") + p;
  return out;
}

}  // namespace

Finding merge(const Finding& a, const Finding& b) {
  if (!a.decided() && b.decided()) return b;
  if (a.decided() && !b.decided()) return a;
  if (a.verdict != b.verdict)
    throw Error("conflicting verdicts from " + a.rule + " and " + b.rule);
  auto rules = split(a.rule);
  rules.merge(split(b.rule));
  auto details = split(a.detail);
  details.merge(split(b.detail));
  return {a.verdict, join(rules), join(details)};
}

void to_json(nlohmann::json& j, const Finding& f) {
  j = {{"verdict", to_string(f.verdict)}, {"rule", f.rule}, {"detail", f.detail}};
}

void from_json(const nlohmann::json& j, Finding& f) {
  f.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  f.rule = j.at("rule").get<std::string>();
  f.detail = j.value("detail", "");
}

}  // namespace cohom::triple
