#include "render.hpp"

#include <sstream>

namespace cohom::cli {

std::string md_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    os << "|";
    for (const auto& c : cells) os << " " << c << " |";
    os << "\n";
  };
  line(header);
  os << "|";
  for (std::size_t i = 0; i < header.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& r : rows) line(r);
  return os.str();
}

std::string plain(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    std::ostringstream os;
    os.precision(6);
    os << v.get<double>();
    return os.str();
  }
  return v.dump();
}

std::string md_fields(const nlohmann::json& obj) {
  std::ostringstream os;
  for (const auto& [k, v] : obj.items()) os << "- " << k << ": " << plain(v) << "\n";
  return os.str();
}

}  // namespace cohom::cli
