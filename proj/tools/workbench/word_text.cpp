#include "word_text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>
#include <utility>

namespace fibrekit::workbench {

const char* to_string(ParseErrorCode code) {
  switch (code) {
    case ParseErrorCode::UnknownToken:
      return "unknown_token";
    case ParseErrorCode::IndexOutOfRange:
      return "index_out_of_range";
    case ParseErrorCode::MalformedExponent:
      return "malformed_exponent";
    case ParseErrorCode::VectorLengthMismatch:
      return "vector_length_mismatch";
  }
  return "unknown_token";
}

namespace {

bool is_space(char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; }

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
}

bool parse_signed(std::string_view s, std::int64_t& out) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!is_digits(digits)) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

// Splits text into tokens; bracketed vectors may contain whitespace.
std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    std::string token;
    int depth = 0;
    while (i < text.size() && (depth > 0 || !is_space(text[i]))) {
      if (text[i] == '[') ++depth;
      if (text[i] == ']') --depth;
      if (!(depth > 0 && is_space(text[i]))) token.push_back(text[i]);
      ++i;
    }
    tokens.push_back(std::move(token));
  }
  return tokens;
}

HomologyClass parse_curve(std::string_view token, const SurfaceSignature& surface) {
  const std::string shown(token);
  if (token.empty()) throw ParseError(ParseErrorCode::UnknownToken, "empty curve token");

  if (token.front() == '[') {
    if (token.back() != ']') throw ParseError(ParseErrorCode::UnknownToken, "unterminated vector '" + shown + "'");
    std::string_view body = token.substr(1, token.size() - 2);
    IntVector coords;
    if (!body.empty()) {
      std::size_t start = 0;
      while (true) {
        const auto comma = body.find(',', start);
        const auto entry = body.substr(start, comma == std::string_view::npos ? body.npos : comma - start);
        std::string_view digits = entry;
        if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
        if (!is_digits(digits)) {
          throw ParseError(ParseErrorCode::UnknownToken, "bad vector entry in '" + shown + "'");
        }
        coords.emplace_back(std::string(entry));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    }
    if (coords.size() != surface.rank()) {
      throw ParseError(ParseErrorCode::VectorLengthMismatch,
                       "vector '" + shown + "' has " + std::to_string(coords.size()) +
                           " entries, surface has b1 = " + std::to_string(surface.b1()));
    }
    return HomologyClass(surface, std::move(coords));
  }

  const char kind = token.front();
  const auto index_text = token.substr(1);
  if ((kind != 'a' && kind != 'b' && kind != 'd') || !is_digits(index_text)) {
    throw ParseError(ParseErrorCode::UnknownToken, "unknown curve token '" + shown + "'");
  }
  int index = 0;
  const auto [ptr, ec] = std::from_chars(index_text.data(), index_text.data() + index_text.size(), index);
  const int limit = kind == 'd' ? surface.boundary_classes() : surface.genus();
  if (ec != std::errc() || ptr != index_text.data() + index_text.size() || index < 1 || index > limit) {
    throw ParseError(ParseErrorCode::IndexOutOfRange,
                     "'" + shown + "' is outside the basis of the genus-" + std::to_string(surface.genus()) +
                         ", " + std::to_string(surface.boundary()) + "-boundary surface");
  }
  if (kind == 'a') return HomologyClass::a(surface, index);
  if (kind == 'b') return HomologyClass::b(surface, index);
  return HomologyClass::d(surface, index);
}

std::pair<std::string_view, std::string_view> split_exponent(std::string_view token) {
  const auto caret = token.rfind('^');
  if (caret == std::string_view::npos || token.find(']', caret) != std::string_view::npos) {
    return {token, {}};
  }
  return {token.substr(0, caret), token.substr(caret)};
}

}  // namespace

TwistWord parse_word(std::string_view text, const SurfaceSignature& surface) {
  std::vector<TwistLetter> letters;
  for (const auto& token : tokenize(text)) {
    const auto [curve_text, exponent_text] = split_exponent(token);
    std::int64_t exponent = 1;
    if (!exponent_text.empty()) {
      if (!parse_signed(exponent_text.substr(1), exponent) || exponent == 0) {
        throw ParseError(ParseErrorCode::MalformedExponent, "malformed exponent in '" + token + "'");
      }
    }
    letters.emplace_back(parse_curve(curve_text, surface), exponent);
  }
  return TwistWord(surface, std::move(letters));
}

std::vector<HomologyClass> parse_classes(std::string_view text, const SurfaceSignature& surface) {
  std::string stripped;
  std::istringstream lines{std::string(text)};
  for (std::string line; std::getline(lines, line);) {
    stripped += line.substr(0, line.find('#'));
    stripped += '\n';
  }
  std::vector<HomologyClass> classes;
  for (const auto& token : tokenize(stripped)) {
    if (split_exponent(token).second.size() > 0) {
      throw ParseError(ParseErrorCode::MalformedExponent, "class list entries take no exponent: '" + token + "'");
    }
    classes.push_back(parse_curve(token, surface));
  }
  return classes;
}

std::string format_class(const HomologyClass& c) {
  const auto& s = c.surface();
  const auto& v = c.coords();
  std::size_t ones = 0;
  std::size_t at = 0;
  bool unit = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 1) {
      ++ones;
      at = i;
    } else if (v[i] != 0) {
      unit = false;
    }
  }
  if (unit && ones == 1) {
    const auto g2 = static_cast<std::size_t>(2 * s.genus());
    if (at < g2) return (at % 2 == 0 ? "a" : "b") + std::to_string(at / 2 + 1);
    return "d" + std::to_string(at - g2 + 1);
  }
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += v[i].get_str();
  }
  return out + "]";
}

std::string format_word(const TwistWord& word) {
  std::string out;
  for (const auto& letter : word.letters()) {
    if (!out.empty()) out += ' ';
    out += format_class(letter.curve());
    if (letter.exponent() != 1) out += "^" + std::to_string(letter.exponent());
  }
  return out;
}

std::int64_t parse_int64(std::string_view text) {
  std::int64_t value = 0;
  if (!parse_signed(text, value)) throw UsageError("expected an integer, got '" + std::string(text) + "'");
  return value;
}

SurfaceSignature parse_surface(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw UsageError("--surface expects g,b");
  const auto genus = parse_int64(text.substr(0, comma));
  const auto boundary = parse_int64(text.substr(comma + 1));
  constexpr std::int64_t kMax = 1 << 20;
  if (genus < 0 || boundary < 0 || genus > kMax || boundary > kMax) {
    throw UsageError("--surface values must lie in [0, " + std::to_string(kMax) + "]");
  }
  return SurfaceSignature(static_cast<int>(genus), static_cast<int>(boundary));
}

std::vector<std::int64_t> IntRange::values() const {
  std::vector<std::int64_t> out;
  for (std::int64_t v = first; v <= last; v += step) {
    out.push_back(v);
    if (last - v < step) break;
  }
  return out;
}

IntRange parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const auto v = parse_int64(text);
    return {v, v, 1};
  }
  const auto first = parse_int64(text.substr(0, dots));
  auto rest = text.substr(dots + 2);
  std::int64_t step = 1;
  if (const auto colon = rest.find(':'); colon != std::string_view::npos) {
    step = parse_int64(rest.substr(colon + 1));
    rest = rest.substr(0, colon);
  }
  const auto last = parse_int64(rest);
  if (step <= 0) throw UsageError("range step must be positive");
  if (last < first) throw UsageError("range end precedes its start");
  return {first, last, step};
}

}  // namespace fibrekit::workbench
