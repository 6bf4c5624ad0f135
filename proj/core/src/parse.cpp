#include <cctype>
#include <charconv>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rumor/distribution.hpp"
#include "rumor/error.hpp"
#include "rumor/rational.hpp"

namespace rumor {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

double parse_real(std::string_view s) {
  s = trim(s);
  if (s.find('/') != std::string_view::npos) {
    if (auto q = parse_rational(s)) return to_double(*q);
  }
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InvalidArgument("not a number: '" + std::string(s) + "'");
  }
  return v;
}

std::vector<double> parse_list(std::string_view s) {
  std::vector<double> out;
  for (auto tok : split(s, ',')) {
    if (tok.empty()) throw InvalidArgument("empty entry in list '" + std::string(s) + "'");
    out.push_back(parse_real(tok));
  }
  return out;
}

std::map<std::string, double> parse_params(std::string_view s, std::string_view ctx) {
  std::map<std::string, double> out;
  if (trim(s).empty()) return out;
  for (auto tok : split(s, ',')) {
    auto eq = tok.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidArgument(std::string(ctx) + ": expected key=value, got '" + std::string(tok) + "'");
    }
    std::string key(trim(tok.substr(0, eq)));
    if (!out.emplace(key, parse_real(tok.substr(eq + 1))).second) {
      throw InvalidArgument(std::string(ctx) + ": duplicate parameter '" + key + "'");
    }
  }
  return out;
}

// Splits "head;rest" at the first ';' that is not nested in parentheses.
std::pair<std::string_view, std::string_view> split_transform_args(std::string_view body) {
  int depth = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '(') ++depth;
    if (body[i] == ')') --depth;
    if (body[i] == ';' && depth == 0) return {trim(body.substr(0, i)), trim(body.substr(i + 1))};
  }
  throw InvalidArgument("transform needs '<arg>;<base>', got '" + std::string(body) + "'");
}

CountLaw parse_count_law(std::string_view s) {
  auto colon = s.find(':');
  std::string_view head = trim(s.substr(0, colon));
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : s.substr(colon + 1);
  if (head == "one") return CountLaw::one();
  if (head == "geom1") {
    auto p = parse_params(rest, "geom1");
    if (p.size() != 1 || !p.count("p")) throw InvalidArgument("geom1: expected p=<prob>");
    return CountLaw::geometric(p.at("p"));
  }
  if (head == "counts") return CountLaw::from_pmf(parse_list(rest));
  throw InvalidArgument("unknown count law '" + std::string(s) + "'");
}

SusceptibilitySeq parse_seq(std::string_view s) {
  auto colon = s.find(':');
  std::string_view head = trim(s.substr(0, colon));
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : s.substr(colon + 1);
  if (head == "const") return SusceptibilitySeq::constant(parse_real(rest));
  if (head == "recip") return SusceptibilitySeq::reciprocal();
  if (head == "list") return SusceptibilitySeq::from_values(parse_list(rest));
  throw InvalidArgument("unknown susceptibility sequence '" + std::string(s) + "'");
}

RadiusDistribution parse_finite(std::string_view rest) {
  std::vector<Rational> exact;
  bool all_exact = true;
  for (auto tok : split(rest, ',')) {
    if (tok.empty()) throw InvalidArgument("finite: empty pmf entry");
    auto q = parse_rational(tok);
    if (!q) {
      all_exact = false;
      break;
    }
    exact.push_back(*q);
  }
  if (all_exact) return RadiusDistribution::finite(std::move(exact));
  return RadiusDistribution::finite(parse_list(rest));
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) return std::nullopt;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = parse_rational(s.substr(0, slash));
    auto den = parse_rational(s.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return *num / *den;
  }
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  long exponent = 0;
  bool seen_dot = false;
  bool seen_digit = false;
  std::size_t i = 0;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      seen_digit = true;
      if (seen_dot) --exponent;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!seen_digit) return std::nullopt;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') return std::nullopt;
    std::string_view ex = s.substr(i + 1);
    if (!ex.empty() && ex.front() == '+') ex.remove_prefix(1);
    long e = 0;
    auto [ptr, ec] = std::from_chars(ex.data(), ex.data() + ex.size(), e);
    if (ec != std::errc{} || ptr != ex.data() + ex.size() || e > 4000 || e < -4000) {
      return std::nullopt;
    }
    exponent += e;
  }
  // cpp_int reads a leading 0 as an octal prefix.
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  boost::multiprecision::cpp_int num(digits);
  boost::multiprecision::cpp_int scale = boost::multiprecision::pow(
      boost::multiprecision::cpp_int(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  Rational value = exponent < 0 ? Rational(num, scale) : Rational(num * scale);
  return negative ? -value : value;
}

double to_double(const Rational& value) {
  using boost::multiprecision::cpp_int;
  cpp_int num = boost::multiprecision::numerator(value);
  const cpp_int den = boost::multiprecision::denominator(value);
  const bool negative = num < 0;
  if (negative) num = -num;
  if (num == 0) return 0.0;
  // 30 significant decimal digits, then a single correctly rounded parse.
  int shift = 0;
  cpp_int q = num / den;
  while (q < cpp_int("1000000000000000000000000000000")) {
    num *= 10;
    ++shift;
    q = num / den;
  }
  std::string text = q.str() + "e-" + std::to_string(shift);
  double v = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), v);
  return negative ? -v : v;
}

std::string to_string(const Rational& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

RadiusDistribution parse_distribution(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw InvalidArgument("empty distribution spec");

  const auto paren = s.find('(');
  const auto colon = s.find(':');
  if (paren != std::string_view::npos && (colon == std::string_view::npos || paren < colon)) {
    if (s.back() != ')') throw InvalidArgument("unbalanced parentheses in '" + std::string(s) + "'");
    std::string_view name = trim(s.substr(0, paren));
    auto [arg, base_text] = split_transform_args(s.substr(paren + 1, s.size() - paren - 2));
    RadiusDistribution base = parse_distribution(base_text);
    if (name == "sparse") {
      auto p = parse_params(arg, "sparse");
      if (p.size() != 1 || !p.count("eps")) throw InvalidArgument("sparse: expected eps=<prob>");
      return transform_sparse(base, p.at("eps"));
    }
    if (name == "pgf") return transform_pgf(base, parse_count_law(arg));
    if (name == "suscept") return transform_susceptible(base, parse_seq(arg));
    throw InvalidArgument("unknown transform '" + std::string(name) + "'");
  }

  std::string_view head = trim(s.substr(0, colon));
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : s.substr(colon + 1);
  if (head == "finite") return parse_finite(rest);
  return make_family(head, parse_params(rest, head));
}

}  // namespace rumor
