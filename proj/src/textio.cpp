#include "cyclotomic/textio.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

namespace cyclo {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_u64(std::string_view s, const char* who) {
  s = strip(s);
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument(std::string(who) + ": malformed integer '" + std::string(s) + "'");
  return out;
}

}  // namespace

std::string format_polynomial(const IntPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out += ',';
    out += f.coeffs()[i].str();
  }
  return out;
}

IntPolynomial parse_polynomial(std::string_view text) {
  text = strip(text);
  if (text.empty()) throw std::invalid_argument("parse_polynomial: empty input");
  std::vector<BigInt> coeffs;
  std::size_t start = 0;
  const std::string owned(text);
  while (start <= owned.size()) {
    std::size_t comma = owned.find(',', start);
    if (comma == std::string::npos) comma = owned.size();
    const std::string item(strip(std::string_view(owned).substr(start, comma - start)));
    if (item.empty()) throw std::invalid_argument("parse_polynomial: empty coefficient");
    try {
      coeffs.emplace_back(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_polynomial: malformed coefficient '" + item + "'");
    }
    start = comma + 1;
    if (comma == owned.size()) break;
  }
  return IntPolynomial(std::move(coeffs));
}

std::string format_rational(const BigRat& q) { return q.str(); }

std::string format_element(const CycloElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < a.coords().size(); ++i) {
    const BigRat& c = a.coords()[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigRat mag = negative ? BigRat(-c) : c;
    std::string term;
    if (i == 0) {
      term = mag.str();
    } else {
      if (mag != 1) term = mag.str() + "*";
      term += "z" + std::to_string(a.modulus()) + "^" + std::to_string(i);
    }
    if (first) {
      out = (negative ? "-" : "") + term;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out;
}

std::string format_root(const RootOfUnity& r) {
  return std::to_string(r.order) + "/" + std::to_string(r.exponent);
}

RootOfUnity parse_root(std::string_view text) {
  text = strip(text);
  const std::size_t slash = text.find('/');
  std::uint64_t order, exponent = 1;
  if (slash == std::string_view::npos) {
    order = parse_u64(text, "parse_root");
  } else {
    order = parse_u64(text.substr(0, slash), "parse_root");
    exponent = parse_u64(text.substr(slash + 1), "parse_root");
  }
  return RootOfUnity::make(order, exponent);
}

std::string format_sign_magnitude(const SignMagnitudeForm& form) {
  std::string out = form.sign < 0 ? "-" : "";
  std::string mag;
  switch (form.kind) {
    case SignMagnitudeForm::Kind::integer:
      if (form.integer_magnitude != 1) mag = form.integer_magnitude.str();
      break;
    case SignMagnitudeForm::Kind::gamma_power:
      mag = "|g" + std::to_string(form.root.order) + "|^" + std::to_string(form.gamma_exponent);
      break;
    case SignMagnitudeForm::Kind::numeric: {
      char buf[48];
      std::snprintf(buf, sizeof(buf), "%.15g", form.magnitude.convert_to<double>());
      mag = buf;
      break;
    }
  }
  std::string twist;
  if (form.twist.order > 1)
    twist = "z" + std::to_string(form.twist.order) + "^" + std::to_string(form.twist.exponent);
  if (!mag.empty() && !twist.empty()) return out + mag + "*" + twist;
  if (!mag.empty()) return out + mag;
  if (!twist.empty()) return out + twist;
  return out + "1";
}

std::string format_complex(const std::complex<double>& z) {
  char buf[80];
  std::snprintf(buf, sizeof(buf), "%.15g%+.15gi", z.real(), z.imag());
  return buf;
}

}  // namespace cyclo
