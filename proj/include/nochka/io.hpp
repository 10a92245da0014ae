#pragma once

#include <stdexcept>
#include <string>

#include "nochka/weights.hpp"

namespace nochka {

/// Malformed input file; the message carries the offending location.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arrangement files: {"k": .., "n": .., "hyperplanes": [["a", "a/b", ...], ...]}.
/// Rational entries are "a" or "a/b" strings (plain JSON integers are also
/// accepted); emission always writes exact strings.
Arrangement parse_arrangement_json(const std::string& text);
Arrangement load_arrangement(const std::string& path);
std::string emit_arrangement(const Arrangement& arr);

/// Certificate files: weights, tau, sigma, hull, representatives (1-based
/// index sets) and named verdicts with exact slack strings. parse ∘ emit is
/// the identity on canonical files.
WeightCertificate parse_certificate_json(const std::string& text);
WeightCertificate load_certificate(const std::string& path);
std::string emit_certificate(const WeightCertificate& cert);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace nochka
