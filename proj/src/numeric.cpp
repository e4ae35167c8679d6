#include "trop/numeric.hpp"

#include <cctype>

namespace trop {

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool integer_literal(const std::string& t) {
  if (t.empty()) return false;
  size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  return true;
}

Int parse_int(const std::string& t) {
  return Int(t[0] == '+' ? t.substr(1) : t);
}

}  // namespace

Rat parse_rat(const std::string& s0) {
  std::string s = trim(s0);
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!integer_literal(s)) throw input_error("bad rational literal '" + s0 + "'");
    return Rat(parse_int(s));
  }
  std::string ns = trim(s.substr(0, slash)), ds = trim(s.substr(slash + 1));
  if (!integer_literal(ns) || !integer_literal(ds))
    throw input_error("bad rational literal '" + s0 + "'");
  Int d = parse_int(ds);
  if (d == 0) throw input_error("zero denominator in '" + s0 + "'");
  return Rat(parse_int(ns)) / Rat(d);
}

std::string format_rat(const Rat& r) {
  Int n = num(r), d = den(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

IntVec primitive(const RatVec& v) {
  Int l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) l = bmp::lcm(l, den(v(i)));
  IntVec w(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) w(i) = num(v(i)) * (l / den(v(i)));
  return primitive(w);
}

IntVec primitive(const IntVec& v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = bmp::gcd(g, v(i));
  if (g == 0 || g == 1) return v;
  IntVec w(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) w(i) = v(i) / g;
  return w;
}

Int fdiv(const Int& a, const Int& b) {
  Int q = a / b;  // truncated
  if (q * b != a && ((a < 0) != (b < 0))) --q;
  return q;
}

bool lex_less(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return false;
}

bool lex_less(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return false;
}

std::vector<long> to_longs(const IntVec& v) {
  std::vector<long> out(static_cast<size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out[static_cast<size_t>(i)] = v(i).convert_to<long>();
  return out;
}

}  // namespace trop
