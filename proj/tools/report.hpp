#ifndef FRAMEKIT_TOOLS_REPORT_HPP
#define FRAMEKIT_TOOLS_REPORT_HPP

#include <json.hpp>

#include <string>
#include <string_view>

namespace framekit::cli {

inline constexpr std::string_view kSchema = "framekit/1";

/// Serializes a report with every floating-point number written to 17
/// significant digits. Floats always carry a '.' or exponent so they
/// re-parse as floats. Throws on non-finite numbers.
std::string dump_report(const nlohmann::json& report);

/// Lowercase hex SHA-256 of `bytes`.
std::string sha256_hex(std::string_view bytes);

} // namespace framekit::cli

#endif
