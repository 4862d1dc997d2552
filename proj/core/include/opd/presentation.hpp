#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "opd/element.hpp"

namespace opd {

struct Presentation {
  std::string name = "anonymous";
  Signature sig;
  std::vector<Element> relations;  // homogeneous by arity
  OrderSpec order;
};

void validate_presentation(const Presentation& p);

nlohmann::json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const nlohmann::json& j);

Presentation load_presentation_file(const std::string& path);
void save_presentation_file(const Presentation& p, const std::string& path);

nlohmann::json order_to_json(const OrderSpec& spec);
OrderSpec order_from_json(const Signature& sig, const nlohmann::json& j);

}  // namespace opd
