#include "polyiso/rational.hpp"

#include <cctype>

#include "polyiso/errors.hpp"
#include "text_reader.hpp"

namespace polyiso {

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational rational_token(const detail::LineReader& in, const detail::Token& tok) {
  try {
    return parse_rational(tok.text);
  } catch (const Error& e) {
    in.fail(tok.column, e.what());
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || (den.front() == '-' || den.front() == '+'))
    throw Error("invalid rational '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  Rational r = value;
  r.canonicalize();  // (6, 8) built directly is left as 6/8
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

RationalPointSet parse_vrep(std::string_view text) {
  detail::LineReader in(text);
  auto [count, dim] = in.header2("VREP");
  RationalPointSet v;
  v.dim = dim;
  for (std::uint64_t k = 0; k < count; ++k) {
    if (!in.next(true)) throw ParseError(in.line() + 1, 0, "expected " + std::to_string(count) + " points");
    const auto& t = in.tokens();
    if (t.size() != dim) in.fail(0, "expected " + std::to_string(dim) + " coordinates, found " + std::to_string(t.size()));
    RationalVector p;
    p.reserve(dim);
    for (const auto& tok : t) p.push_back(rational_token(in, tok));
    v.points.push_back(std::move(p));
  }
  if (!in.only_trailing_blank()) in.fail(0, "more than " + std::to_string(count) + " points");
  return v;
}

RationalPointSet read_vrep_file(const std::string& path) { return parse_vrep(detail::read_file(path)); }

std::string serialize_vrep(const RationalPointSet& v) {
  std::string out = "VREP " + std::to_string(v.points.size()) + " " + std::to_string(v.dim) + "\n";
  for (const auto& p : v.points) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k) out += ' ';
      out += to_string(p[k]);
    }
    out += '\n';
  }
  return out;
}

HDescription parse_hrep(std::string_view text) {
  detail::LineReader in(text);
  auto [rows, dim] = in.header2("HREP");
  HDescription h;
  h.dim = dim;
  for (std::uint64_t k = 0; k < rows; ++k) {
    if (!in.next(true)) throw ParseError(in.line() + 1, 0, "expected " + std::to_string(rows) + " rows");
    const auto& t = in.tokens();
    if (t.size() != dim + 2) in.fail(0, "row must have " + std::to_string(dim) + " coefficients, a relation and a bound");
    LinearRow row;
    for (std::size_t c = 0; c < dim; ++c) row.a.push_back(rational_token(in, t[c]));
    row.b = rational_token(in, t[dim + 1]);
    if (t[dim].text == "<=")
      h.inequalities.push_back(std::move(row));
    else if (t[dim].text == "=")
      h.equalities.push_back(std::move(row));
    else
      in.fail(t[dim].column, "expected '<=' or '='");
  }
  if (!in.only_trailing_blank()) in.fail(0, "more than " + std::to_string(rows) + " rows");
  return h;
}

std::string serialize_hrep(const HDescription& h) {
  std::string out = "HREP " + std::to_string(h.inequalities.size() + h.equalities.size()) + " " + std::to_string(h.dim) + "\n";
  auto write = [&](const LinearRow& r, const char* rel) {
    for (const auto& a : r.a) out += to_string(a) + " ";
    out += rel;
    out += " " + to_string(r.b) + "\n";
  };
  for (const auto& r : h.inequalities) write(r, "<=");
  for (const auto& r : h.equalities) write(r, "=");
  return out;
}

}  // namespace polyiso
