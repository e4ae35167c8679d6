#pragma once

// Exact scalar types and Eigen matrix aliases used across the library.
// Everything is integer or rational arithmetic over GMP; no floating point.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace trop {

namespace bmp = boost::multiprecision;
using Int = bmp::number<bmp::gmp_int, bmp::et_off>;
using Rat = bmp::number<bmp::gmp_rational, bmp::et_off>;

using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

// Malformed user input (files, CLI arguments, polynomial strings).
struct input_error : std::runtime_error {
  explicit input_error(const std::string& m) : std::runtime_error(m) {}
};

// Well-formed input that fails a mathematical requirement.
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& m) : std::runtime_error(m) {}
};

inline Int num(const Rat& r) { return bmp::numerator(r); }
inline Int den(const Rat& r) { return bmp::denominator(r); }

Rat parse_rat(const std::string& s);  // "p", "-p", or "p/q"
std::string format_rat(const Rat& r);

inline RatMat to_rat(const IntMat& m) {
  RatMat out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) out(i, j) = Rat(m(i, j));
  return out;
}

inline RatVec to_rat(const IntVec& v) {
  RatVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Rat(v(i));
  return out;
}

inline bool is_zero(const RatVec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

inline bool is_zero(const IntVec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

inline bool is_zero(const RatMat& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

inline bool is_zero(const IntMat& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

// Scale a rational direction to a primitive integer vector (same ray).
IntVec primitive(const RatVec& v);
IntVec primitive(const IntVec& v);

// Floor division (quotient rounded toward -infinity).
Int fdiv(const Int& a, const Int& b);

bool lex_less(const IntVec& a, const IntVec& b);
bool lex_less(const RatVec& a, const RatVec& b);

std::vector<long> to_longs(const IntVec& v);

}  // namespace trop
