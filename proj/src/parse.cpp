#include <cctype>
#include <istream>
#include <sstream>

#include "arr/arrangement.hpp"
#include "arr/errors.hpp"

namespace arr {

namespace {

// Splits a line into tokens, tracking the column of each for error reports.
std::vector<std::pair<std::string, int>> tokenize(const std::string& line) {
  std::vector<std::pair<std::string, int>> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size() || line[i] == '#') break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.emplace_back(line.substr(start, i - start), static_cast<int>(start + 1));
  }
  return out;
}

}  // namespace

Arrangement parse_arrangement(std::istream& in) {
  std::string line;
  int lineno = 0;
  std::vector<std::pair<std::string, int>> header;
  while (std::getline(in, line)) {
    ++lineno;
    header = tokenize(line);
    if (!header.empty()) break;
  }
  if (header.empty()) throw ParseError("empty arrangement file", lineno, 1);

  if (header[0].first == "dim") {
    if (header.size() != 2) throw ParseError("expected `dim <l>`", lineno, header[0].second);
    int ell = 0;
    try {
      ell = std::stoi(header[1].first);
    } catch (...) {
      throw ParseError("bad dimension", lineno, header[1].second);
    }
    std::vector<std::vector<Rational>> normals;
    std::vector<int> mults;
    std::vector<std::string> labels;
    while (std::getline(in, line)) {
      ++lineno;
      auto tok = tokenize(line);
      if (tok.empty()) continue;
      if (static_cast<int>(tok.size()) != ell + 1 && static_cast<int>(tok.size()) != ell + 2)
        throw ParseError("expected `label c1 .. c" + std::to_string(ell) + " [mult]`", lineno,
                         tok[0].second);
      labels.push_back(tok[0].first);
      std::vector<Rational> v;
      for (int k = 1; k <= ell; ++k) {
        auto q = parse_rational(tok[k].first);
        if (!q) throw ParseError("bad rational `" + tok[k].first + "`", lineno, tok[k].second);
        v.push_back(*q);
      }
      normals.push_back(std::move(v));
      int m = 1;
      if (static_cast<int>(tok.size()) == ell + 2) {
        try {
          m = std::stoi(tok[ell + 1].first);
        } catch (...) {
          throw ParseError("bad multiplicity", lineno, tok[ell + 1].second);
        }
        if (m < 1) throw ParseError("multiplicity must be >= 1", lineno, tok[ell + 1].second);
      }
      mults.push_back(m);
    }
    try {
      return Arrangement::realized(ell, std::move(normals), std::move(mults), std::move(labels));
    } catch (const DomainError& e) {
      throw ParseError(e.what(), lineno, 1);
    }
  }

  if (header[0].first == "matroid") {
    if (header.size() != 2) throw ParseError("expected `matroid <n>`", lineno, header[0].second);
    int n = 0;
    try {
      n = std::stoi(header[1].first);
    } catch (...) {
      throw ParseError("bad matroid size", lineno, header[1].second);
    }
    std::vector<std::vector<int>> flats;
    while (std::getline(in, line)) {
      ++lineno;
      auto tok = tokenize(line);
      if (tok.empty()) continue;
      std::vector<int> flat;
      for (auto& [t, col] : tok) {
        int e = 0;
        try {
          e = std::stoi(t);
        } catch (...) {
          throw ParseError("bad element index `" + t + "`", lineno, col);
        }
        if (e < 1 || e > n) throw ParseError("element index out of range", lineno, col);
        flat.push_back(e - 1);
      }
      flats.push_back(std::move(flat));
    }
    try {
      return Arrangement::matroid(n, std::move(flats));
    } catch (const DomainError& e) {
      throw ParseError(e.what(), lineno, 1);
    }
  }

  throw ParseError("expected `dim <l>` or `matroid <n>` header", lineno, header[0].second);
}

std::string serialize_arrangement(const Arrangement& a) {
  std::ostringstream out;
  if (a.is_realized()) {
    out << "dim " << a.ambient_dim() << "\n";
    for (int i = 0; i < a.n(); ++i) {
      out << a.labels()[i];
      for (const Rational& c : a.normals()[i]) out << "  " << to_string(c);
      if (a.multiplicities()[i] != 1) out << "  " << a.multiplicities()[i];
      out << "\n";
    }
  } else {
    out << "matroid " << a.n() << "\n";
    for (const auto& L : a.matroid_lines()) {
      bool first = true;
      for (int e : L) {
        out << (first ? "" : " ") << e + 1;
        first = false;
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace arr
