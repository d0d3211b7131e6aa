#pragma once

// The built-in 7-dimensional example and the JSON spec file format.
//
// Spec file:
//   {"dimension": n,
//    "brackets": [{"i":1,"j":2,"k":7,"value":"2"}, ...],   // c(i,j,k), 1-based
//    "metric": [[...], ...],
//    "structures": [{"alpha":1,"epsilon":1,"phi":[[...]],"xi":[...],"eta":[...]}, x3]}
// Scalars are strings "p/q" or "p", or JSON integers. phi is row-major, so
// column j holds φ e_j. Bracket entries are stored exactly as given.

#include <array>
#include <cstddef>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>

#include <nlohmann/json.hpp>

#include "hn3/errors.hpp"
#include "hn3/lie.hpp"
#include "hn3/matrix.hpp"
#include "hn3/scalar.hpp"
#include "hn3/structures.hpp"

namespace hn3 {

/// The left-invariant structure on the 7-dimensional Lie group with
/// [e1,e2] = [e3,e4] = λ e7 and g = diag(1,1,-1,-1,-1,1,1).
inline HN3Manifold builtin_example(const Scalar& lambda) {
  if (is_zero(lambda)) throw PreconditionError("builtin_example: lambda must be nonzero");
  constexpr std::size_t n = 7;
  LieAlgebra l(n);
  l.set_bracket(0, 1, 6, lambda);
  l.set_bracket(2, 3, 6, lambda);
  const Matrix g = Matrix::diagonal({Scalar(1), Scalar(1), Scalar(-1), Scalar(-1), Scalar(-1), Scalar(1), Scalar(1)});

  // φ e_from = sign · e_to, 1-based
  using Image = std::tuple<int, int, int>;
  auto make_phi = [&](std::initializer_list<Image> images) {
    Matrix phi(n, n);
    for (auto [from, to, sign] : images) phi(to - 1, from - 1) = sign;
    return phi;
  };
  const Matrix phi1 = make_phi({{1, 2, 1}, {2, 1, -1}, {3, 4, 1}, {4, 3, -1}, {6, 7, 1}, {7, 6, -1}});
  const Matrix phi2 = make_phi({{1, 3, 1}, {2, 4, -1}, {3, 1, -1}, {4, 2, 1}, {5, 7, -1}, {7, 5, 1}});
  const Matrix phi3 = make_phi({{1, 4, 1}, {2, 3, 1}, {3, 2, -1}, {4, 1, -1}, {5, 6, 1}, {6, 5, -1}});

  std::array<AlmostContactStructure, 3> s{{
      {phi1, basis_vector(n, 4), basis_vector(n, 4), epsilon(1)},
      {phi2, basis_vector(n, 5), basis_vector(n, 5), epsilon(2)},
      {phi3, basis_vector(n, 6), basis_vector(n, 6), epsilon(3)},
  }};
  return HN3Manifold(MetricLieAlgebra(std::move(l), g), std::move(s));
}

namespace detail {

using nlohmann::json;

inline Scalar scalar_at(const json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return parse_scalar(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(path, e.what());
    }
  }
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  throw ParseError(path, "expected a rational string \"p/q\" or an integer");
}

inline const json& member(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path + "/" + key, "missing member");
  return *it;
}

inline long long integer_at(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
  return j.get<long long>();
}

inline Vector vector_at(const json& j, std::size_t n, const std::string& path) {
  if (!j.is_array() || j.size() != n) throw ParseError(path, "expected an array of " + std::to_string(n) + " scalars");
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = scalar_at(j[i], path + "/" + std::to_string(i));
  return v;
}

inline Matrix matrix_at(const json& j, std::size_t n, const std::string& path) {
  if (!j.is_array() || j.size() != n) throw ParseError(path, "expected " + std::to_string(n) + " rows");
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const Vector row = vector_at(j[r], n, path + "/" + std::to_string(r));
    for (std::size_t c = 0; c < n; ++c) m(r, c) = row[c];
  }
  return m;
}

inline json scalars_to_json(const Vector& v) {
  auto arr = json::array();
  for (const auto& s : v) arr.push_back(to_string(s));
  return arr;
}

inline json matrix_to_json(const Matrix& m) {
  auto arr = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) arr.push_back(scalars_to_json(m.row(r)));
  return arr;
}

}  // namespace detail

/// Parses a spec document. Schema problems raise ParseError carrying a JSON
/// pointer; the axioms themselves are left to the validators.
inline HN3Manifold spec_from_json(const nlohmann::json& doc) {
  using detail::member;
  const long long dim = detail::integer_at(member(doc, "dimension", ""), "/dimension");
  if (dim < 1) throw ParseError("/dimension", "dimension must be positive");
  const auto n = static_cast<std::size_t>(dim);

  LieAlgebra l(n);
  const auto& brackets = member(doc, "brackets", "");
  if (!brackets.is_array()) throw ParseError("/brackets", "expected an array");
  std::map<std::array<std::size_t, 3>, std::size_t> seen;
  for (std::size_t e = 0; e < brackets.size(); ++e) {
    const std::string path = "/brackets/" + std::to_string(e);
    std::array<std::size_t, 3> idx{};
    const char* keys[] = {"i", "j", "k"};
    for (std::size_t s = 0; s < 3; ++s) {
      const long long v = detail::integer_at(member(brackets[e], keys[s], path), path + "/" + keys[s]);
      if (v < 1 || v > dim) throw ParseError(path + "/" + keys[s], "index out of range 1.." + std::to_string(dim));
      idx[s] = static_cast<std::size_t>(v - 1);
    }
    const Scalar value = detail::scalar_at(member(brackets[e], "value", path), path + "/value");
    auto [it, inserted] = seen.emplace(idx, e);
    if (!inserted && l.constant(idx[0], idx[1], idx[2]) != value)
      throw ParseError(path, "conflicts with /brackets/" + std::to_string(it->second));
    l.constant(idx[0], idx[1], idx[2]) = value;
  }

  const Matrix g = detail::matrix_at(member(doc, "metric", ""), n, "/metric");

  const auto& structures = member(doc, "structures", "");
  if (!structures.is_array() || structures.size() != 3)
    throw ParseError("/structures", "expected exactly three structures");
  std::array<AlmostContactStructure, 3> s;
  std::array<bool, 3> present{};
  for (std::size_t e = 0; e < 3; ++e) {
    const std::string path = "/structures/" + std::to_string(e);
    const auto& entry = structures[e];
    const long long a = detail::integer_at(member(entry, "alpha", path), path + "/alpha");
    if (a < 1 || a > 3) throw ParseError(path + "/alpha", "alpha must be 1, 2 or 3");
    const auto slot = static_cast<std::size_t>(a - 1);
    if (present[slot]) throw ParseError(path + "/alpha", "structure " + std::to_string(a) + " given twice");
    present[slot] = true;
    const long long eps = detail::integer_at(member(entry, "epsilon", path), path + "/epsilon");
    if (eps != epsilon(static_cast<Alpha>(a)))
      throw ParseError(path + "/epsilon", "epsilon of structure " + std::to_string(a) + " must be " +
                                              std::to_string(epsilon(static_cast<Alpha>(a))));
    s[slot] = {detail::matrix_at(member(entry, "phi", path), n, path + "/phi"),
               detail::vector_at(member(entry, "xi", path), n, path + "/xi"),
               detail::vector_at(member(entry, "eta", path), n, path + "/eta"), static_cast<int>(eps)};
  }
  return HN3Manifold(MetricLieAlgebra(std::move(l), g), std::move(s));
}

inline nlohmann::json spec_to_json(const HN3Manifold& h) {
  nlohmann::json doc;
  doc["dimension"] = h.dim();
  auto brackets = nlohmann::json::array();
  for (const auto& [idx, value] : h.algebra().structure().nonzero())
    brackets.push_back({{"i", idx[0] + 1}, {"j", idx[1] + 1}, {"k", idx[2] + 1}, {"value", to_string(value)}});
  doc["brackets"] = std::move(brackets);
  doc["metric"] = detail::matrix_to_json(h.metric());
  auto structures = nlohmann::json::array();
  for (Alpha a = 1; a <= 3; ++a) {
    const auto& s = h.structure(a);
    structures.push_back({{"alpha", a},
                          {"epsilon", s.epsilon},
                          {"phi", detail::matrix_to_json(s.phi)},
                          {"xi", detail::scalars_to_json(s.xi)},
                          {"eta", detail::scalars_to_json(s.eta)}});
  }
  doc["structures"] = std::move(structures);
  return doc;
}

/// Reads and parses a spec file. IoError when unreadable, ParseError on
/// malformed JSON or schema violations.
inline HN3Manifold parse_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("", std::string("invalid JSON: ") + e.what());
  }
  return spec_from_json(doc);
}

inline void write_spec(const HN3Manifold& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << spec_to_json(h).dump(2) << "\n";
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace hn3
