#include "cameron/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cameron {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::size_t parse_index(std::string_view text) {
    text = trim(text);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument("not an index: '" + std::string(text) + "'");
    }
    return value;
}

Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::invalid_argument("seed entries must be strings \"p/q\" or integers, got " + j.dump());
}

std::vector<Rational> rationals_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a JSON array of rationals");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(rational_from_json(e));
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

Format parse_format(std::string_view name) {
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "bfile" || name == "b-file") return Format::bfile;
    throw std::invalid_argument("unknown format '" + std::string(name) + "' (json, csv, bfile)");
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    if (trim(text).empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(Rational::parse(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::pair<std::size_t, std::size_t> parse_index_range(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const std::size_t n = parse_index(text);
        return {n, n};
    }
    const std::size_t lo = parse_index(text.substr(0, dots));
    const std::size_t hi = parse_index(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty range '" + std::string(text) + "'");
    return {lo, hi};
}

SeedFile parse_seed_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("seed file is not JSON: ") + e.what());
    }
    if (j.is_array()) return {std::nullopt, rationals_from_json(j)};
    if (j.is_object()) {
        if (!j.contains("m") || !j["m"].is_number_unsigned() || j["m"].get<unsigned>() == 0) {
            throw std::invalid_argument("associated seed needs a positive integer \"m\"");
        }
        if (!j.contains("values")) throw std::invalid_argument("associated seed needs \"values\"");
        return {j["m"].get<unsigned>(), rationals_from_json(j["values"])};
    }
    throw std::invalid_argument("seed file must hold an array or an {\"m\", \"values\"} object");
}

SeedFile read_seed_file(const std::string& path) { return parse_seed_json(slurp(path)); }

CoefficientSequence read_transform_file(const std::string& path) {
    const std::string text = slurp(path);
    const std::string_view body = trim(text);
    std::vector<Rational> z;
    if (!body.empty() && body.front() == '[') {
        z = parse_seed_json(body).values;
    } else {
        std::istringstream in(text);
        const auto rows = parse_bfile(in);
        if (!rows.empty() && rows.front().index != 0) {
            throw std::invalid_argument("transform b-file must start at index 0");
        }
        for (const auto& r : rows) z.push_back(r.value);
    }
    if (z.empty() || z.front() != Rational(1)) {
        throw std::invalid_argument("not a transform: z_0 must be 1");
    }
    return {0, std::move(z)};
}

void write_values(std::ostream& out, std::span<const IndexedValue> rows, Format format) {
    switch (format) {
        case Format::json: {
            json arr = json::array();
            for (const auto& r : rows) arr.push_back(r.value.to_string());
            out << arr.dump() << '\n';
            break;
        }
        case Format::csv:
            out << "n,value\n";
            for (const auto& r : rows) out << r.index << ',' << r.value.to_string() << '\n';
            break;
        case Format::bfile:
            for (const auto& r : rows) {
                if (!r.value.is_integer()) {
                    throw std::invalid_argument("b-file needs integers but a(" + std::to_string(r.index) +
                                                ") = " + r.value.to_string() + "; use --format json");
                }
            }
            for (const auto& r : rows) out << r.index << ' ' << r.value.to_string() << '\n';
            break;
    }
}

std::vector<IndexedValue> parse_bfile(std::istream& in) {
    std::vector<IndexedValue> rows;
    std::string line;
    while (std::getline(in, line)) {
        const std::string_view s = trim(line);
        if (s.empty() || s.front() == '#') continue;
        const auto gap = s.find_first_of(" \t");
        if (gap == std::string_view::npos) throw std::invalid_argument("bad b-file line: '" + line + "'");
        const std::size_t n = parse_index(s.substr(0, gap));
        const Rational v = Rational::parse(s.substr(gap + 1));
        if (!v.is_integer()) throw std::invalid_argument("b-file value is not an integer: '" + line + "'");
        if (!rows.empty() && n != rows.back().index + 1) {
            throw std::invalid_argument("b-file indices must be contiguous and ascending at '" + line + "'");
        }
        rows.push_back({n, v});
    }
    return rows;
}

}  // namespace cameron
