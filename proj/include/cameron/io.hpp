#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cameron/rational.hpp"
#include "cameron/sequence.hpp"

namespace cameron {

enum class Format { json, csv, bfile };

/// json, csv, bfile (also b-file). Throws std::invalid_argument.
Format parse_format(std::string_view name);

struct IndexedValue {
    std::size_t index;
    Rational value;

    friend bool operator==(const IndexedValue&, const IndexedValue&) = default;
};

/// "1,1,-2/3" -> {1, 1, -2/3}. Blanks around entries are ignored; an empty
/// string gives an empty list. Throws std::invalid_argument on a bad entry.
std::vector<Rational> parse_rational_list(std::string_view text);

/// "a..b" or a single "n". Throws std::invalid_argument.
std::pair<std::size_t, std::size_t> parse_index_range(std::string_view text);

/// Contents of a seed file.
///   ["1", "1"]                     restricted seed x_1, x_2, ...
///   {"m": 3, "values": ["2", ...]} associated seed x_3, x_4, ...
/// Entries may be JSON strings ("p/q") or integers.
struct SeedFile {
    std::optional<unsigned> m;  // set for the object form
    std::vector<Rational> values;
};

SeedFile parse_seed_json(std::string_view text);
SeedFile read_seed_file(const std::string& path);

/// A transformed sequence z_0, z_1, ... from a JSON array (z_0 first) or a
/// b-file. Throws std::invalid_argument unless z_0 = 1 and indices start at 0.
CoefficientSequence read_transform_file(const std::string& path);

/// JSON: an array of "p/q" strings. CSV: header "n,value" then one row per
/// index. b-file: "n value" lines; throws std::invalid_argument if a value is
/// not an integer.
void write_values(std::ostream& out, std::span<const IndexedValue> rows, Format format);

/// Reads "n value" lines, skipping blanks and '#' comments. Indices must be
/// ascending and contiguous and values integers (std::invalid_argument otherwise).
std::vector<IndexedValue> parse_bfile(std::istream& in);

}  // namespace cameron
