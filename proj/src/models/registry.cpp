#include <stdexcept>
#include <string>

#include "asearch/models.hpp"

namespace asearch {

std::vector<std::string> model_names() {
  return {"magic-square", "all-interval", "partition", "costas"};
}

bool is_registered_model(std::string_view name) {
  for (const auto& known : model_names()) {
    if (known == name) return true;
  }
  return false;
}

std::unique_ptr<ProblemModel> make_model(std::string_view name, int size) {
  if (name == "magic-square") return std::make_unique<MagicSquareModel>(size);
  if (name == "all-interval") return std::make_unique<AllIntervalModel>(size);
  if (name == "partition") return std::make_unique<PartitionModel>(size);
  if (name == "costas") return std::make_unique<CostasModel>(size);
  throw std::invalid_argument("unknown problem '" + std::string(name) +
                              "' (expected magic-square, all-interval, partition or costas)");
}

}  // namespace asearch
