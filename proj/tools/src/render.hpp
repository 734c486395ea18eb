#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace cohom::cli {

std::string md_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);
/// Scalar JSON value as plain text; containers are dumped compactly.
std::string plain(const nlohmann::json& v);
/// Object fields as a bullet list, in key order.
std::string md_fields(const nlohmann::json& obj);

}  // namespace cohom::cli
