#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "arr/numbers.hpp"

namespace arr {

// A central arrangement of n hyperplanes, given either by rational normal
// vectors in C^l or, when no rational realization exists, as an abstract
// rank-3 simple matroid listing its rank-2 flats with >= 3 elements.
// Multiplicities record multi-arrangement structure; the hyperplane list
// itself never contains proportional rows.
class Arrangement {
 public:
  static Arrangement realized(int ambient_dim, std::vector<std::vector<Rational>> normals,
                              std::vector<int> multiplicities = {},
                              std::vector<std::string> labels = {});
  static Arrangement matroid(int n, std::vector<std::vector<int>> lines,
                             std::vector<std::string> labels = {});

  bool is_realized() const { return !normals_.empty() || n_ == 0; }
  int n() const { return n_; }
  int ambient_dim() const { return ambient_; }
  const std::vector<std::vector<Rational>>& normals() const { return normals_; }
  const std::vector<std::vector<int>>& matroid_lines() const { return lines_; }
  const std::vector<int>& multiplicities() const { return mult_; }
  const std::vector<std::string>& labels() const { return labels_; }

  Arrangement with_multiplicities(std::vector<int> mult) const;

  // Index of the label, or -1.
  int index_of(const std::string& label) const;

 private:
  Arrangement() = default;
  int n_ = 0;
  int ambient_ = 0;
  std::vector<std::vector<Rational>> normals_;
  std::vector<std::vector<int>> lines_;
  std::vector<int> mult_;
  std::vector<std::string> labels_;
};

// One hyperplane z_i - z_j per edge {i,j}; vertices are 1-based.
Arrangement graphic_arrangement(int vertices, const std::vector<std::pair<int, int>>& edges);

// Named arrangements: braid(l), boolean(n), generic(n, l), cube_symmetry,
// ceva(n), hessian, braid4_essential.
Arrangement catalog(const std::string& name, const std::vector<long>& params = {});
// Convenience for CLI spellings like "braid4", "generic4_3".
Arrangement catalog_by_name(const std::string& spec);
std::vector<std::string> catalog_names();

// Text format round-trip (see README for the grammar).
Arrangement parse_arrangement(std::istream& in);
std::string serialize_arrangement(const Arrangement& a);

}  // namespace arr
