#include "dgog/error.hpp"
#include "dgog/integer.hpp"

#include <cctype>

namespace dgog {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::NotComposable: return "not-composable";
    case ErrorKind::SourceMismatch: return "source-mismatch";
    case ErrorKind::DomainViolation: return "domain-violation";
    case ErrorKind::NotInDomain: return "not-in-domain";
    case ErrorKind::InfiniteIndex: return "infinite-index";
    case ErrorKind::InfiniteDegree: return "infinite-degree";
    case ErrorKind::BallTooShallow: return "ball-too-shallow";
    case ErrorKind::NonCyclicInfinite: return "non-cyclic-infinite";
    case ErrorKind::SingularMatrix: return "singular-matrix";
    case ErrorKind::ZeroPatternMismatch: return "zero-pattern-mismatch";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, std::string const& message)
    : std::runtime_error(message), kind_(kind) {}

Integer floor_mod(Integer const& a, Integer const& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer gcd(Integer const& a, Integer const& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

Integer mod_inverse(Integer const& a, Integer const& m) {
  Integer old_r = floor_mod(a, m), r = m;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    Integer q = old_r / r;
    Integer t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::invalid_argument("mod_inverse: not a unit");
  return floor_mod(old_s, m);
}

Integer abs(Integer const& a) { return a < 0 ? Integer(-a) : a; }

std::string to_string(Integer const& a) { return a.str(); }

Integer parse_integer(std::string const& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw Error(ErrorKind::Parse, "expected an integer, got '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw Error(ErrorKind::Parse, "expected an integer, got '" + text + "'");
  }
  // Strip leading zeros: the backend would read them as an octal prefix.
  std::size_t first = text.find_first_not_of('0', i);
  Integer value = first == std::string::npos ? Integer(0) : Integer(text.substr(first));
  return text[0] == '-' ? Integer(-value) : value;
}

}  // namespace dgog
