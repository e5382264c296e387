#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fibrekit/surface.hpp"
#include "fibrekit/twist.hpp"

namespace fibrekit::workbench {

using fibrekit::to_string;

enum class ParseErrorCode { UnknownToken, IndexOutOfRange, MalformedExponent, VectorLengthMismatch };

const char* to_string(ParseErrorCode code);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ParseErrorCode code() const { return code_; }

 private:
  ParseErrorCode code_;
};

/// Malformed command-line values other than twist words.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses whitespace-separated letters. A curve is `a<i>`, `b<i>`, `d<j>`
/// or an explicit vector `[v1,...,vm]`; it may be followed by `^<int>`.
TwistWord parse_word(std::string_view text, const SurfaceSignature& surface);

/// Curve tokens without exponents, separated by whitespace. Text after
/// `#` on a line is ignored.
std::vector<HomologyClass> parse_classes(std::string_view text, const SurfaceSignature& surface);

/// Basis vectors print by name, everything else as `[v1,...,vm]`.
std::string format_class(const HomologyClass& c);

/// Canonical text: letters joined by one space, `^e` omitted when e = 1.
std::string format_word(const TwistWord& word);

/// "g,b"
SurfaceSignature parse_surface(std::string_view text);

std::int64_t parse_int64(std::string_view text);

struct IntRange {
  std::int64_t first;
  std::int64_t last;
  std::int64_t step;

  std::vector<std::int64_t> values() const;
};

/// "n", "a..b" or "a..b:step", inclusive.
IntRange parse_range(std::string_view text);

}  // namespace fibrekit::workbench
