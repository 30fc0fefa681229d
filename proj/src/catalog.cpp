#include <algorithm>
#include <cctype>

#include "arr/arrangement.hpp"
#include "arr/errors.hpp"

namespace arr {

namespace {

Arrangement braid(long ell) {
  if (ell < 2) throw DomainError("braid(l) needs l >= 2");
  std::vector<std::vector<Rational>> normals;
  std::vector<std::string> labels;
  for (int i = 1; i <= ell; ++i)
    for (int j = i + 1; j <= ell; ++j) {
      std::vector<Rational> v(ell, Rational(0));
      v[i - 1] = 1;
      v[j - 1] = -1;
      normals.push_back(std::move(v));
      labels.push_back("z" + std::to_string(i) + "-z" + std::to_string(j));
    }
  return Arrangement::realized(static_cast<int>(ell), std::move(normals), {}, std::move(labels));
}

Arrangement boolean_arr(long n) {
  if (n < 1) throw DomainError("boolean(n) needs n >= 1");
  std::vector<std::vector<Rational>> normals;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> v(n, Rational(0));
    v[i] = 1;
    normals.push_back(std::move(v));
    labels.push_back("x" + std::to_string(i + 1));
  }
  return Arrangement::realized(static_cast<int>(n), std::move(normals), {}, std::move(labels));
}

Arrangement generic(long n, long ell) {
  if (n < 1 || ell < 1) throw DomainError("generic(n, l) needs n, l >= 1");
  // moment-curve normals: every subset of size <= l is independent
  std::vector<std::vector<Rational>> normals;
  for (long i = 1; i <= n; ++i) {
    std::vector<Rational> v;
    Rational t = 1;
    for (long k = 0; k < ell; ++k) {
      v.push_back(t);
      t *= i;
    }
    normals.push_back(std::move(v));
  }
  return Arrangement::realized(static_cast<int>(ell), std::move(normals));
}

// Symmetry planes of the cube with vertices (+-1,+-1,+-1): the three
// coordinate planes (multiplicity two) and the six diagonal planes.  Signs
// are chosen so the three class products are x^2(y^2-z^2), y^2(z^2-x^2),
// z^2(x^2-y^2).
Arrangement cube_symmetry() {
  std::vector<std::vector<Rational>> normals = {
      {1, 0, 0}, {0, 1, 0}, {0, 0, 1},                            // x, y, z
      {0, 1, -1}, {0, 1, 1},                                      // y-z, y+z
      {-1, 0, 1}, {1, 0, 1},                                      // z-x, z+x
      {1, -1, 0}, {1, 1, 0}};                                     // x-y, x+y
  std::vector<std::string> labels = {"x", "y", "z", "y-z", "y+z", "z-x", "z+x", "x-y", "x+y"};
  std::vector<int> mult = {2, 2, 2, 1, 1, 1, 1, 1, 1};
  return Arrangement::realized(3, std::move(normals), std::move(mult), std::move(labels));
}

// Essential model of braid(4): the reflection arrangement x+-y, y+-z, z+-x
// with signs matching the conic pencil a(x^2-y^2)+b(y^2-z^2)+c(z^2-x^2).
Arrangement braid4_essential() {
  std::vector<std::vector<Rational>> normals = {{1, -1, 0}, {1, 1, 0},  {0, 1, -1},
                                                {0, 1, 1},  {-1, 0, 1}, {1, 0, 1}};
  std::vector<std::string> labels = {"x-y", "x+y", "y-z", "y+z", "z-x", "z+x"};
  return Arrangement::realized(3, std::move(normals), {}, std::move(labels));
}

// The 12 lines through the 9 inflection points of a smooth cubic.  No
// rational realization exists (it needs a cube root of unity), so the matroid
// is stored abstractly: elements are the affine lines of F_3^2, and each of
// the 9 points gives a quadruple flat.  The four parallel classes are the
// classes of the 4-net.
Arrangement hessian() {
  // element index: 3*class + c, where c identifies the line within its class
  auto line_through = [&](int cls, int a, int b) {
    switch (cls) {
      case 0: return b;                // lines y = c
      case 1: return a;                // lines x = c
      case 2: return (b - a + 3) % 3;  // lines y - x = c
      default: return (b + a) % 3;     // lines y - 2x = c
    }
  };
  std::vector<std::vector<int>> lines;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      std::vector<int> flat;
      for (int cls = 0; cls < 4; ++cls) flat.push_back(3 * cls + line_through(cls, a, b));
      lines.push_back(std::move(flat));
    }
  std::vector<std::string> labels;
  for (int cls = 0; cls < 4; ++cls)
    for (int c = 0; c < 3; ++c)
      labels.push_back("T" + std::to_string(cls + 1) + std::string(1, char('a' + c)));
  return Arrangement::matroid(12, std::move(lines), std::move(labels));
}

// Extended Ceva family: x^n = y^n, y^n = z^n, x^n = z^n together with the
// coordinate triangle, 3n+3 lines.  Rational for n <= 2 (ceva(2) is the
// cube-symmetry matroid); abstract for n >= 3.
Arrangement ceva(long n) {
  if (n < 1) throw DomainError("ceva(n) needs n >= 1");
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) labels.push_back("x-w" + std::to_string(a) + "y");
  for (int b = 0; b < n; ++b) labels.push_back("y-w" + std::to_string(b) + "z");
  for (int c = 0; c < n; ++c) labels.push_back("x-w" + std::to_string(c) + "z");
  labels.insert(labels.end(), {"x", "y", "z"});
  if (n <= 2) {
    std::vector<std::vector<Rational>> normals;
    for (int a = 0; a < n; ++a)
      normals.push_back({1, n == 1 ? Rational(-1) : Rational(a == 0 ? -1 : 1), 0});
    for (int b = 0; b < n; ++b)
      normals.push_back({0, 1, n == 1 ? Rational(-1) : Rational(b == 0 ? -1 : 1)});
    for (int c = 0; c < n; ++c)
      normals.push_back({1, 0, n == 1 ? Rational(-1) : Rational(c == 0 ? -1 : 1)});
    normals.push_back({1, 0, 0});
    normals.push_back({0, 1, 0});
    normals.push_back({0, 0, 1});
    return Arrangement::realized(3, std::move(normals), {}, std::move(labels));
  }
  int nn = static_cast<int>(n);
  std::vector<std::vector<int>> flats;
  for (int a = 0; a < nn; ++a)
    for (int b = 0; b < nn; ++b)
      flats.push_back({a, nn + b, 2 * nn + (a + b) % nn});  // Fermat triple points
  std::vector<int> v1 = {3 * nn + 1, 3 * nn + 2};  // (1:0:0): y, z, all y-w^b z
  for (int b = 0; b < nn; ++b) v1.push_back(nn + b);
  std::vector<int> v2 = {3 * nn, 3 * nn + 2};  // (0:1:0): x, z, all x-w^c z
  for (int c = 0; c < nn; ++c) v2.push_back(2 * nn + c);
  std::vector<int> v3 = {3 * nn, 3 * nn + 1};  // (0:0:1): x, y, all x-w^a y
  for (int a = 0; a < nn; ++a) v3.push_back(a);
  flats.push_back(v1);
  flats.push_back(v2);
  flats.push_back(v3);
  return Arrangement::matroid(3 * nn + 3, std::move(flats), std::move(labels));
}

}  // namespace

Arrangement catalog(const std::string& name, const std::vector<long>& params) {
  auto want = [&](std::size_t k) {
    if (params.size() != k)
      throw DomainError("catalog " + name + ": expected " + std::to_string(k) + " parameter(s)");
  };
  if (name == "braid") {
    want(1);
    return braid(params[0]);
  }
  if (name == "boolean") {
    want(1);
    return boolean_arr(params[0]);
  }
  if (name == "generic") {
    want(2);
    return generic(params[0], params[1]);
  }
  if (name == "cube_symmetry") {
    want(0);
    return cube_symmetry();
  }
  if (name == "braid4_essential") {
    want(0);
    return braid4_essential();
  }
  if (name == "hessian") {
    want(0);
    return hessian();
  }
  if (name == "ceva") {
    want(1);
    return ceva(params[0]);
  }
  throw DomainError("unknown catalog name: " + name);
}

Arrangement catalog_by_name(const std::string& spec) {
  // split trailing digits / digit groups separated by '_'
  std::size_t i = spec.size();
  while (i > 0 && (std::isdigit(static_cast<unsigned char>(spec[i - 1])) || spec[i - 1] == '_'))
    --i;
  std::string base = spec.substr(0, i);
  if (!base.empty() && base.back() == '_') base.pop_back();
  std::vector<long> params;
  std::string rest = spec.substr(i);
  std::string cur;
  for (char c : rest + "_") {
    if (c == '_') {
      if (!cur.empty()) params.push_back(std::stol(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return catalog(base, params);
}

std::vector<std::string> catalog_names() {
  return {"braid<l>",        "boolean<n>", "generic<n>_<l>", "cube_symmetry",
          "braid4_essential", "ceva<n>",    "hessian"};
}

}  // namespace arr
