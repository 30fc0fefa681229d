#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arr/numbers.hpp"

namespace arr {

// Graded-lex order, leading term first.
struct GrlexGreater {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da > db;
    return a > b;
  }
};

// Sparse multivariate polynomial over Q.  No zero coefficients are stored;
// every exponent vector has length nvars().
class MultiPoly {
 public:
  using Expo = std::vector<int>;
  using TermMap = std::map<Expo, Rational, GrlexGreater>;

  explicit MultiPoly(int nvars) : nvars_(nvars) {}
  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, int i);
  // A linear form c0*x0 + ... from a coefficient vector.
  static MultiPoly linear_form(const std::vector<Rational>& coeffs);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly scaled(const Rational& c) const;
  MultiPoly pow(int e) const;
  MultiPoly derivative(int var) const;

  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  Rational eval(const std::vector<Rational>& point) const;
  // Substitute args[i] for variable i; result lives in the args' ring.
  MultiPoly substitute(const std::vector<MultiPoly>& args) const;

  // Quotient if divisor divides exactly, else nullopt.
  static std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b);

  // True iff the two polynomials differ by a nonzero scalar.
  static bool proportional(const MultiPoly& a, const MultiPoly& b);

  std::string to_string(const std::vector<std::string>& names) const;

  void set_term(Expo e, const Rational& c);

 private:
  void add_term(const Expo& e, const Rational& c);
  int nvars_;
  TermMap terms_;
};

// A nonzero rational vector c with sum c_j * polys[j] = 0, or nullopt if the
// polynomials are linearly independent.  Throws DomainError on empty input.
// The result is verified by exact expansion before being returned.
std::optional<std::vector<Rational>> poly_linear_dependence(const std::vector<MultiPoly>& polys);

// Dimension of the span of the given polynomials as vectors of coefficients.
std::size_t poly_span_dimension(const std::vector<MultiPoly>& polys);

// Rank over the fraction field Q(x1..xn), by fraction-free (Bareiss)
// elimination; entries are destroyed.
std::size_t poly_matrix_rank(std::vector<std::vector<MultiPoly>> m);

}  // namespace arr
