#include "trophull/rational.hpp"

#include <cctype>

#include "trophull/errors.hpp"

namespace trop {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

Rat parse_rat(const std::string& text) {
  const std::string body = strip(text);
  const size_t slash = body.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(body)) {
      throw InputError("not a rational number: '" + text + "'");
    }
    return Rat(BigInt(body));
  }
  const std::string num = strip(body.substr(0, slash));
  const std::string den = strip(body.substr(slash + 1));
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw InputError("not a rational number: '" + text + "'");
  }
  const BigInt d(den);
  if (d == 0) {
    throw InputError("zero denominator in '" + text + "'");
  }
  // Division canonicalizes (reduces and fixes the sign of the denominator).
  return Rat(BigInt(num)) / Rat(d);
}

std::string rat_to_string(const Rat& q) {
  const BigInt num = numerator(q);
  const BigInt den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt lcm_denominators(const std::vector<Rat>& values) {
  BigInt l = 1;
  for (const Rat& q : values) {
    l = lcm(l, denominator(q));
  }
  return l;
}

BigInt factorial_big(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial_big(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt b = 1;
  for (unsigned i = 1; i <= k; ++i) {
    b = b * (n - k + i) / i;
  }
  return b;
}

}  // namespace trop
