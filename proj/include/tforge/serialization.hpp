#ifndef TFORGE_SERIALIZATION_HPP
#define TFORGE_SERIALIZATION_HPP

// Text and JSON rendering shared by the CLI: triangles (plain right-
// justified columns, csv, json), sequences, and verification reports.

#include "tforge/constructions.hpp"
#include "tforge/verification.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tforge {

enum class OutputFormat { Plain, Csv, Json };

std::optional<OutputFormat> output_format_from_name(std::string_view name);

std::string entry_text(const Rational& value);
std::string entry_text(const Polynomial& value);

// {"name": ..., "ring": "rational"|"polynomial", "rows": [[entry, ...], ...]}
// with rationals as canonical strings and polynomials as degree-ascending
// coefficient arrays of canonical strings.
nlohmann::json triangle_json(std::string_view name, const AnyTriangle& triangle);

std::string render_triangle(std::string_view name, const AnyTriangle& triangle,
                            OutputFormat format);

std::string render_sequence(std::string_view name, int first_index,
                            const std::vector<Rational>& terms, OutputFormat format);

nlohmann::json report_json(const VerifyReport& report);

std::string render_report(const VerifyReport& report, OutputFormat format);

}  // namespace tforge

#endif
