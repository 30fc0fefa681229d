#include "arr/multipoly.hpp"

#include <algorithm>
#include <cassert>

#include "arr/errors.hpp"
#include "arr/matrix.hpp"

namespace arr {

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  if (c != 0) p.terms_[Expo(nvars, 0)] = c;
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  assert(i >= 0 && i < nvars);
  MultiPoly p(nvars);
  Expo e(nvars, 0);
  e[i] = 1;
  p.terms_[e] = 1;
  return p;
}

MultiPoly MultiPoly::linear_form(const std::vector<Rational>& coeffs) {
  MultiPoly p(static_cast<int>(coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Expo e(coeffs.size(), 0);
    e[i] = 1;
    p.terms_[e] = coeffs[i];
  }
  return p;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (int e : terms_.begin()->first) d += e;  // leading term has max degree
  return d;
}

void MultiPoly::add_term(const Expo& e, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::set_term(Expo e, const Rational& c) {
  assert(static_cast<int>(e.size()) == nvars_);
  if (c == 0)
    terms_.erase(e);
  else
    terms_[std::move(e)] = c;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  assert(nvars_ == o.nvars_);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  assert(nvars_ == o.nvars_);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  assert(nvars_ == o.nvars_);
  MultiPoly r(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Expo e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::pow(int e) const {
  assert(e >= 0);
  MultiPoly r = constant(nvars_, 1);
  for (int i = 0; i < e; ++i) r = r * (*this);
  return r;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Expo d = e;
    d[var] -= 1;
    r.add_term(d, c * e[var]);
  }
  return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  assert(static_cast<int>(point.size()) == nvars_);
  Rational r = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    r += t;
  }
  return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& args) const {
  assert(static_cast<int>(args.size()) == nvars_);
  int m = args.empty() ? 0 : args[0].nvars();
  MultiPoly r(m);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = MultiPoly::constant(m, c);
    for (int i = 0; i < nvars_; ++i)
      if (e[i] > 0) t = t * args[i].pow(e[i]);
    r = r + t;
  }
  return r;
}

std::optional<MultiPoly> MultiPoly::exact_divide(const MultiPoly& a, const MultiPoly& b) {
  assert(a.nvars_ == b.nvars_);
  if (b.is_zero()) return std::nullopt;
  MultiPoly rem = a, quot(a.nvars_);
  const auto& [lb, cb] = *b.terms_.begin();
  while (!rem.is_zero()) {
    const auto& [la, ca] = *rem.terms_.begin();
    Expo q(a.nvars_);
    for (int i = 0; i < a.nvars_; ++i) {
      q[i] = la[i] - lb[i];
      if (q[i] < 0) return std::nullopt;
    }
    MultiPoly t(a.nvars_);
    t.terms_.emplace(q, ca / cb);
    quot = quot + t;
    rem = rem - t * b;
  }
  return quot;
}

bool MultiPoly::proportional(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  Rational ratio = 0;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return false;
    Rational r = ia->second / ib->second;
    if (ratio == 0)
      ratio = r;
    else if (r != ratio)
      return false;
  }
  return true;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  assert(static_cast<int>(names.size()) == nvars_);
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    bool neg = c < 0;
    Rational ab = neg ? Rational(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      out += arr::to_string(ab);
    else if (ab == 1)
      out += mono;
    else
      out += arr::to_string(ab) + "*" + mono;
  }
  return out;
}

std::optional<std::vector<Rational>> poly_linear_dependence(const std::vector<MultiPoly>& polys) {
  if (polys.empty()) throw DomainError("poly_linear_dependence: empty input list");
  int nv = polys[0].nvars();
  std::map<MultiPoly::Expo, std::size_t> row_of;
  for (const auto& p : polys) {
    if (p.nvars() != nv) throw DomainError("poly_linear_dependence: mixed variable lists");
    for (const auto& [e, c] : p.terms())
      row_of.emplace(e, row_of.size());
  }
  QField q;
  Matrix<QField> m(q, row_of.size(), polys.size());
  for (std::size_t j = 0; j < polys.size(); ++j)
    for (const auto& [e, c] : polys[j].terms()) m(row_of[e], j) = c;
  auto basis = m.nullspace();
  if (basis.empty()) return std::nullopt;
  std::vector<Rational> c = primitive_vector(basis[0]);
  // verify by exact expansion
  MultiPoly sum(nv);
  for (std::size_t j = 0; j < polys.size(); ++j) sum = sum + polys[j].scaled(c[j]);
  if (!sum.is_zero()) throw DomainError("poly_linear_dependence: internal verification failed");
  return c;
}

std::size_t poly_span_dimension(const std::vector<MultiPoly>& polys) {
  if (polys.empty()) return 0;
  std::map<MultiPoly::Expo, std::size_t> row_of;
  for (const auto& p : polys)
    for (const auto& [e, c] : p.terms()) row_of.emplace(e, row_of.size());
  QField q;
  Matrix<QField> m(q, polys.size(), row_of.size());
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (const auto& [e, c] : polys[i].terms()) m(i, row_of[e]) = c;
  return m.rank();
}

std::size_t poly_matrix_rank(std::vector<std::vector<MultiPoly>> m) {
  if (m.empty() || m[0].empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  int nv = m[0][0].nvars();
  MultiPoly prev = MultiPoly::constant(nv, 1);
  std::size_t rank = 0;
  for (std::size_t step = 0; rank < rows && step < cols; ++step) {
    // pivot search in column block [rank.., step]
    std::size_t pr = rows, pc = cols;
    for (std::size_t c = rank; c < cols && pr == rows; ++c)
      for (std::size_t r = rank; r < rows; ++r)
        if (!m[r][c].is_zero()) {
          pr = r;
          pc = c;
          break;
        }
    if (pr == rows) break;
    std::swap(m[pr], m[rank]);
    if (pc != rank)
      for (auto& row : m) std::swap(row[pc], row[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = rank + 1; c < cols; ++c) {
        MultiPoly t = m[rank][rank] * m[r][c] - m[r][rank] * m[rank][c];
        auto q = MultiPoly::exact_divide(t, prev);
        if (!q) throw DomainError("poly_matrix_rank: Bareiss division failed");
        m[r][c] = std::move(*q);
      }
      m[r][rank] = MultiPoly(nv);
    }
    prev = m[rank][rank];
    ++rank;
  }
  return rank;
}

}  // namespace arr
