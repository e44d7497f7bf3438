#pragma once

/**
 * @file catalog_file.hpp
 * @brief Reader for arithmetic-only fact sheets.
 *
 * Format: one section per group, started by its `name` line.
 *
 *     # comment
 *     name = O7_3
 *     order = 2^9 * 3^9 * 5 * 7 * 13
 *     spectrum = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 14, 15, 18, 20]
 *
 * Blank lines and `#` comments are ignored. Every diagnostic carries the
 * 1-based line number it refers to.
 */

#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "catalog.hpp"

namespace cgt {

class CatalogParseError : public InvalidInput {
public:
  CatalogParseError(std::size_t line, const std::string& message)
      : InvalidInput("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::uint64_t parse_uint(std::string_view s, std::size_t line, const char* what) {
  s = trim(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw CatalogParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" +
                                      std::string(s) + "'");
  return v;
}

inline Factorization parse_factorization(std::string_view text, std::size_t line) {
  Factorization f;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t star = text.find('*', start);
    std::string_view term = trim(text.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start));
    if (term.empty()) throw CatalogParseError(line, "empty factor in order");
    std::size_t caret = term.find('^');
    PrimePower pp;
    pp.prime = parse_uint(term.substr(0, caret), line, "a prime");
    pp.exponent = caret == std::string_view::npos ? 1u
                                                  : static_cast<unsigned>(parse_uint(term.substr(caret + 1), line, "an exponent"));
    f.push_back(pp);
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  try {
    validate_factorization(f);
  } catch (const InvalidInput& e) {
    throw CatalogParseError(line, e.what());
  }
  return f;
}

inline Spectrum parse_spectrum(std::string_view text, std::size_t line) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw CatalogParseError(line, "spectrum must be a bracketed list like [1, 2, 3]");
  text = trim(text.substr(1, text.size() - 2));
  Spectrum s;
  if (text.empty()) return s;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    s.push_back(parse_uint(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start),
                           line, "a spectrum entry"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return s;
}

}  // namespace detail

/// Parses every section; throws CatalogParseError on the first problem.
inline std::vector<GroupFactSheet> parse_catalog(std::istream& in) {
  struct Pending {
    GroupFactSheet sheet;
    std::size_t name_line = 0, order_line = 0, spectrum_line = 0;
  };
  std::vector<GroupFactSheet> out;
  std::optional<Pending> cur;

  auto finish = [&] {
    if (!cur) return;
    if (!cur->order_line) throw CatalogParseError(cur->name_line, "section '" + cur->sheet.name + "' has no order");
    if (!cur->spectrum_line)
      throw CatalogParseError(cur->name_line, "section '" + cur->sheet.name + "' has no spectrum");
    const Spectrum& s = cur->sheet.spectrum;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i] <= s[i - 1]) throw CatalogParseError(cur->spectrum_line, "spectrum must be strictly increasing");
    }
    if (!divisor_closed(s)) throw CatalogParseError(cur->spectrum_line, "spectrum is not divisor-closed (must contain 1 and every divisor of each member)");
    const Integer n = cur->sheet.order_value();
    for (auto k : s) {
      if (k == 0 || n % k != 0)
        throw CatalogParseError(cur->spectrum_line, "spectrum entry " + std::to_string(k) + " does not divide the order");
    }
    for (const auto& done : out) {
      if (done.name == cur->sheet.name) throw CatalogParseError(cur->name_line, "duplicate section '" + cur->sheet.name + "'");
    }
    out.push_back(std::move(cur->sheet));
    cur.reset();
  };

  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw CatalogParseError(lineno, "expected 'key = value'");
    std::string_view key = detail::trim(line.substr(0, eq));
    std::string_view value = detail::trim(line.substr(eq + 1));
    if (key == "name") {
      finish();
      if (value.empty()) throw CatalogParseError(lineno, "name must not be empty");
      cur.emplace();
      cur->sheet.name = std::string(value);
      cur->sheet.source = SheetSource::paper_data;
      cur->name_line = lineno;
    } else if (key == "order" || key == "spectrum") {
      if (!cur) throw CatalogParseError(lineno, "'" + std::string(key) + "' before any 'name'");
      if (key == "order") {
        if (cur->order_line) throw CatalogParseError(lineno, "order given twice");
        cur->sheet.order = detail::parse_factorization(value, lineno);
        cur->order_line = lineno;
      } else {
        if (cur->spectrum_line) throw CatalogParseError(lineno, "spectrum given twice");
        cur->sheet.spectrum = detail::parse_spectrum(value, lineno);
        cur->spectrum_line = lineno;
      }
    } else {
      throw CatalogParseError(lineno, "unknown key '" + std::string(key) + "'");
    }
  }
  finish();
  return out;
}

inline std::vector<GroupFactSheet> parse_catalog_text(const std::string& text) {
  std::istringstream in(text);
  return parse_catalog(in);
}

inline std::vector<GroupFactSheet> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open catalog file " + path);
  return parse_catalog(in);
}

inline std::string render_catalog(const std::vector<GroupFactSheet>& sheets) {
  std::ostringstream os;
  for (std::size_t i = 0; i < sheets.size(); ++i) {
    if (i) os << '\n';
    os << "name = " << sheets[i].name << '\n';
    os << "order = " << to_string(sheets[i].order) << '\n';
    os << "spectrum = [" << join(sheets[i].spectrum) << "]\n";
  }
  return os.str();
}

}  // namespace cgt
