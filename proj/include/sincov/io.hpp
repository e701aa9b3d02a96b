#pragma once

// CSV and JSON readers/writers for instances and potential families.
//
// CSV: the first row is an empty corner cell followed by the column labels;
// each following row is a row label and n values. Fields may be double-quoted.
// JSON: {"labels": [...], "mode": "multiplicative"|"additive", "matrix": [[...]]}.
// Families use "members" (a list of value rows) instead of "matrix"; in CSV
// each row after the header is one member, its first cell a free-form name.
//
// Values may be decimals or "p/q" strings. Exact readers take decimals at face
// value ("0.1" is 1/10); JSON numbers are first rendered in their shortest
// round-trip form. Malformed input raises InputError prefixed with
// "source:line:column:".

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "sincov/instance.hpp"
#include "sincov/representation.hpp"

namespace sincov {

using Json = nlohmann::ordered_json;

enum class Format { csv, json };

std::string_view to_string(Format f);
Format parse_format(std::string_view text);
/// By extension; anything other than ".json" / ".csv" gives `fallback`.
Format format_from_path(std::string_view path, Format fallback = Format::csv);

struct ReadOptions {
  std::optional<Mode> mode;  // overrides whatever the file says
  Mode csv_mode = Mode::multiplicative;
  std::string source = "<input>";
};

template <class T>
BasicInstance<T> parse_instance(std::string_view text, Format format, const ReadOptions& opts = {});

template <class T>
std::string format_instance(const BasicInstance<T>& inst, Format format);

template <class T>
BasicPotentialFamily<T> parse_family(std::string_view text, Format format,
                                     const ReadOptions& opts = {});

template <class T>
std::string format_family(const BasicPotentialFamily<T>& family, Format format);

template <class T>
Json instance_json(const BasicInstance<T>& inst);

template <class T>
Json family_json(const BasicPotentialFamily<T>& family);

/// Scalar as JSON: a number for double, a "p/q" string for Rational.
Json scalar_json(double v);
Json scalar_json(const Rational& v);

/// Whole-file helpers; failures are InputError.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace sincov
