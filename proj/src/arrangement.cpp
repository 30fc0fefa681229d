#include "arr/arrangement.hpp"

#include <algorithm>
#include <set>

#include "arr/errors.hpp"

namespace arr {

namespace {

bool proportional(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational ratio = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] == 0) != (b[i] == 0)) return false;
    if (a[i] == 0) continue;
    Rational r = a[i] / b[i];
    if (ratio == 0)
      ratio = r;
    else if (r != ratio)
      return false;
  }
  return true;
}

}  // namespace

Arrangement Arrangement::realized(int ambient_dim, std::vector<std::vector<Rational>> normals,
                                  std::vector<int> multiplicities,
                                  std::vector<std::string> labels) {
  if (ambient_dim < 1) throw DomainError("ambient dimension must be >= 1");
  int n = static_cast<int>(normals.size());
  if (n > 31) throw DomainError("at most 31 hyperplanes supported");
  for (const auto& v : normals) {
    if (static_cast<int>(v.size()) != ambient_dim)
      throw DomainError("normal vector length does not match ambient dimension");
    if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; }))
      throw DomainError("zero normal vector");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (proportional(normals[i], normals[j]))
        throw DomainError("proportional normals: hyperplanes " + std::to_string(i + 1) + " and " +
                          std::to_string(j + 1) +
                          " coincide; use multiplicities for repetition");
  if (multiplicities.empty()) multiplicities.assign(n, 1);
  if (static_cast<int>(multiplicities.size()) != n)
    throw DomainError("multiplicity list length mismatch");
  for (int m : multiplicities)
    if (m < 1) throw DomainError("multiplicities must be >= 1");
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back("H" + std::to_string(i + 1));
  if (static_cast<int>(labels.size()) != n) throw DomainError("label list length mismatch");

  Arrangement a;
  a.n_ = n;
  a.ambient_ = ambient_dim;
  a.normals_ = std::move(normals);
  a.mult_ = std::move(multiplicities);
  a.labels_ = std::move(labels);
  return a;
}

Arrangement Arrangement::matroid(int n, std::vector<std::vector<int>> lines,
                                 std::vector<std::string> labels) {
  if (n < 1 || n > 31) throw DomainError("matroid size out of range");
  std::set<int> seen_elems;
  for (auto& L : lines) {
    std::sort(L.begin(), L.end());
    if (L.size() < 3) throw DomainError("matroid lines must have >= 3 elements");
    if (std::adjacent_find(L.begin(), L.end()) != L.end())
      throw DomainError("repeated element in matroid line");
    for (int e : L)
      if (e < 0 || e >= n) throw DomainError("matroid line element out of range");
  }
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      std::vector<int> common;
      std::set_intersection(lines[i].begin(), lines[i].end(), lines[j].begin(), lines[j].end(),
                            std::back_inserter(common));
      if (common.size() >= 2) throw DomainError("matroid lines share two elements");
    }
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back("H" + std::to_string(i + 1));
  if (static_cast<int>(labels.size()) != n) throw DomainError("label list length mismatch");

  Arrangement a;
  a.n_ = n;
  a.ambient_ = 3;  // abstract matroids are rank-3 line arrangements
  a.lines_ = std::move(lines);
  a.mult_.assign(n, 1);
  a.labels_ = std::move(labels);
  return a;
}

Arrangement Arrangement::with_multiplicities(std::vector<int> mult) const {
  Arrangement a = *this;
  if (static_cast<int>(mult.size()) != n_) throw DomainError("multiplicity list length mismatch");
  for (int m : mult)
    if (m < 1) throw DomainError("multiplicities must be >= 1");
  a.mult_ = std::move(mult);
  return a;
}

int Arrangement::index_of(const std::string& label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  return -1;
}

Arrangement graphic_arrangement(int vertices, const std::vector<std::pair<int, int>>& edges) {
  if (vertices < 2) throw DomainError("graph needs at least 2 vertices");
  std::set<std::pair<int, int>> seen;
  std::vector<std::vector<Rational>> normals;
  std::vector<std::string> labels;
  for (auto [i, j] : edges) {
    if (i == j) throw DomainError("loops are not allowed");
    if (i > j) std::swap(i, j);
    if (i < 1 || j > vertices) throw DomainError("edge endpoint out of range");
    if (!seen.insert({i, j}).second)
      throw DomainError("duplicate edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
    std::vector<Rational> v(vertices, Rational(0));
    v[i - 1] = 1;
    v[j - 1] = -1;
    normals.push_back(std::move(v));
    labels.push_back("z" + std::to_string(i) + "-z" + std::to_string(j));
  }
  return Arrangement::realized(vertices, std::move(normals), {}, std::move(labels));
}

}  // namespace arr
