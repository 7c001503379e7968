#include "polyspace/parse.hpp"

#include <algorithm>
#include <vector>

namespace polyspace {

namespace {

std::string trimmed(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Exact value of an unsigned decimal token.
mpq_class parse_decimal(const std::string& token) {
  std::string digits;
  int exponent = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (char c : token) {
    if (c == '.') {
      if (seen_point) throw input_error("bad length \"" + token + "\"");
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) ++exponent;
    } else {
      throw input_error("bad length \"" + token + "\"");
    }
  }
  if (!seen_digit) throw input_error("bad length \"" + token + "\"");
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(exponent));
  // Base must be explicit: the default-base constructor reads "025" as octal.
  mpq_class value(BigInt(digits, 10), den);
  value.canonicalize();
  return value;
}

}  // namespace

LengthVector parse_lengths(const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      tokens.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  tokens.push_back(current);

  std::vector<mpq_class> values;
  for (const std::string& raw : tokens) {
    const std::string token = trimmed(raw);
    if (token.empty()) throw input_error("bad length \"" + raw + "\"");
    mpq_class value = parse_decimal(token);
    if (value == 0) throw input_error("length \"" + token + "\" must be positive");
    values.push_back(std::move(value));
  }
  if (values.size() < 3)
    throw input_error("need at least 3 lengths, got " + std::to_string(values.size()));

  // Clear denominators exactly: multiply through by their least common
  // multiple so the trichotomy is decided on integers.
  BigInt common_den = 1;
  for (const mpq_class& v : values)
    mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<BigInt> lengths;
  lengths.reserve(values.size());
  for (const mpq_class& v : values)
    lengths.push_back(v.get_num() * (common_den / v.get_den()));
  return LengthVector(std::move(lengths));
}

}  // namespace polyspace
