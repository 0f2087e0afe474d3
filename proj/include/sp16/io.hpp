#pragma once

// Versioned plain-text formats: element sets, bound reports, search
// records and search configs.
//
// Set file:
//   # comment
//   sp16-set 1
//   level 4
//   flags all_niner single_privileged_orthant      (optional)
//   element 1 0 3/2 ...                             (2^level coordinates)
//   end
//
// Coordinates must be written in lowest terms ("num/den", or "num" for
// integers). Declared flags are re-checked on load.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "sp16/bound_pipeline.hpp"
#include "sp16/search.hpp"

namespace sp16 {

inline constexpr int kSetFormatVersion = 1;
inline constexpr int kReportFormatVersion = 1;

struct SetFile {
  int format_version = kSetFormatVersion;
  ElementSet set;
  SetFlags declared;  // true entries were declared in the file
};

/// Throws ValidationError with the line number and reason.
SetFile parse_set_file(std::istream& in);
SetFile load_set_file(const std::filesystem::path& path);

/// Writes the set with the flags from `declared` that are set.
void write_set_file(std::ostream& out, const SetFile& file);
void save_set_file(const std::filesystem::path& path, const SetFile& file);

/// Builds a SetFile declaring every flag the set satisfies.
SetFile make_set_file(const ElementSet& set);

std::string render_report(const BoundReport& report);
std::string render_search_record(const SearchRecord& record);
/// Plain whitespace-separated table: iteration move applied accepted candidate current best.
std::string render_history_table(const SearchRecord& record);

/// JSON search config. Unknown keys, wrong types and bad values raise
/// ValidationError naming the field. Missing keys keep their defaults.
SearchConfig parse_search_config(std::string_view json_text);
SearchConfig load_search_config(const std::filesystem::path& path);
std::string render_search_config(const SearchConfig& config);

}  // namespace sp16
