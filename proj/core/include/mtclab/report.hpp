#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mtclab/classifier.hpp"
#include "mtclab/fusion_ring.hpp"
#include "mtclab/modular_data.hpp"

namespace mtclab {

enum class Format { Text, Machine };
/// "text" or "machine"; InputError otherwise.
[[nodiscard]] Format parse_format(std::string_view s);

struct Section {
  std::string name;
  std::vector<std::pair<std::string, std::string>> items;
};

struct Document {
  std::string kind;
  std::vector<Section> sections;
  bool violations = false;  ///< drives the exit status of checking commands
};

/// Text: "[section]" headers with indented "key: value" lines. Machine: JSON,
/// keys in document order.
[[nodiscard]] std::string render(const Document& doc, Format format);

[[nodiscard]] Document validation_document(const FusionRing& ring);
[[nodiscard]] Document analysis_document(const FusionRing& ring);
[[nodiscard]] Document modular_document(const ModularData& md);
[[nodiscard]] Document classification_document(const Classification& c);
[[nodiscard]] Document oracle_document(int rank, int bound, const std::vector<std::vector<std::int64_t>>& sols);

}  // namespace mtclab
