#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "mtclab/fusion_ring.hpp"
#include "mtclab/modular_data.hpp"

namespace mtclab {

/// {"rank": r, "dual": [...], "coeffs": [[i,j,k,n], ...]}; errors are
/// InputError prefixed with the source name.
[[nodiscard]] FusionRing parse_fusion_ring(std::string_view text, const std::string& source = "<input>");
[[nodiscard]] FusionRing read_fusion_ring(const std::filesystem::path& path);
/// Canonical form: sorted coefficients, one quadruple per line, trailing newline.
[[nodiscard]] std::string write_fusion_ring(const FusionRing& ring);

/// {"ring": <object or path relative to base_dir>, "conductor": n,
///  "twists": [...], "S": [[["p/q", ...], ...], ...]}.
[[nodiscard]] ModularData parse_modular_data(std::string_view text, const std::filesystem::path& base_dir = ".",
                                             const std::string& source = "<input>");
[[nodiscard]] ModularData read_modular_data(const std::filesystem::path& path);
/// Canonical form with the ring inline.
[[nodiscard]] std::string write_modular_data(const ModularData& md);

[[nodiscard]] std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace mtclab
