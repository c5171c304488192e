#include "quadraform/io.hpp"

#include <cstdint>

#include "quadraform/constructions.hpp"
#include "quadraform/errors.hpp"

namespace quadraform {

namespace {

std::pair<std::size_t, std::size_t> parse_index_pair(const std::string& key, std::size_t dim) {
  auto comma = key.find(',');
  if (comma == std::string::npos)
    throw Error(ErrorCode::ParseError, "bad index pair key '" + key + "'");
  std::size_t i, j;
  try {
    i = std::stoul(key.substr(0, comma));
    j = std::stoul(key.substr(comma + 1));
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad index pair key '" + key + "'");
  }
  if (i >= dim || j >= dim)
    throw Error(ErrorCode::ParseError, "index out of range in key '" + key + "'");
  return {i, j};
}

Vec sparse_value(const Json& entry, std::size_t dim, const std::string& key) {
  Vec v(dim, Rational(0));
  for (const auto& [k, val] : entry.items()) {
    std::size_t idx;
    try {
      idx = std::stoul(k);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad component index '" + k + "' under '" + key + "'");
    }
    if (idx >= dim)
      throw Error(ErrorCode::ParseError, "component index out of range under '" + key + "'");
    v[idx] = rational_from_string(val.get<std::string>());
  }
  return v;
}

std::vector<std::string> names_from_json(const Json& j, std::size_t dim) {
  std::vector<std::string> names;
  if (j.contains("basis_names")) {
    for (const auto& nm : j.at("basis_names")) names.push_back(nm.get<std::string>());
    if (names.size() != dim)
      throw Error(ErrorCode::ParseError, "basis_names length does not match dim");
  }
  return names;
}

LieAlgebra lie_from_json(const Json& j) {
  std::size_t dim = j.at("dim").get<std::size_t>();
  LieAlgebra g(dim, names_from_json(j, dim));
  if (j.contains("brackets")) {
    for (const auto& [key, value] : j.at("brackets").items()) {
      auto [i, jj] = parse_index_pair(key, dim);
      if (i >= jj)
        throw Error(ErrorCode::ParseError,
                    "lie brackets are stored one-sided: key '" + key + "' needs i < j");
      g.set_bracket(i, jj, sparse_value(value, dim, key));
    }
  }
  return g;
}

AssocAlgebra assoc_from_json(const Json& j) {
  std::size_t dim = j.at("dim").get<std::size_t>();
  Vec unit = vec_from_json(j.at("unit"));
  if (unit.size() != dim) throw Error(ErrorCode::ParseError, "unit length does not match dim");
  AssocAlgebra S(dim, names_from_json(j, dim), unit);
  if (j.contains("products")) {
    for (const auto& [key, value] : j.at("products").items()) {
      auto [a, b] = parse_index_pair(key, dim);
      if (a > b)
        throw Error(ErrorCode::ParseError,
                    "assoc products are stored one-sided: key '" + key + "' needs a <= b");
      S.set_product(a, b, sparse_value(value, dim, key));
    }
  }
  return S;
}

}  // namespace

Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "matrix must be an array of arrays");
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw Error(ErrorCode::ParseError, "matrix row must be an array");
    std::vector<std::string> r;
    for (const auto& cell : row) r.push_back(cell.get<std::string>());
    rows.push_back(std::move(r));
  }
  return RationalMatrix::from_strings(rows);
}

Json vec_to_json(const Vec& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(rational_to_string(x));
  return arr;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "vector must be an array");
  Vec v;
  for (const auto& cell : j) v.push_back(rational_from_string(cell.get<std::string>()));
  return v;
}

Json lie_to_json(const LieAlgebra& g) {
  Json j;
  j["dim"] = g.dim();
  j["basis_names"] = g.basis_names();
  Json brackets = Json::object();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t jj = i + 1; jj < g.dim(); ++jj) {
      Json entry = Json::object();
      for (std::size_t k = 0; k < g.dim(); ++k) {
        if (g.c(i, jj, k) != 0) entry[std::to_string(k)] = rational_to_string(g.c(i, jj, k));
      }
      if (!entry.empty()) brackets[std::to_string(i) + "," + std::to_string(jj)] = entry;
    }
  j["brackets"] = std::move(brackets);
  return j;
}

Json assoc_to_json(const AssocAlgebra& S) {
  Json j;
  j["dim"] = S.dim();
  j["basis_names"] = S.basis_names();
  Json products = Json::object();
  for (std::size_t a = 0; a < S.dim(); ++a)
    for (std::size_t b = a; b < S.dim(); ++b) {
      Json entry = Json::object();
      for (std::size_t c = 0; c < S.dim(); ++c) {
        if (S.mu(a, b, c) != 0) entry[std::to_string(c)] = rational_to_string(S.mu(a, b, c));
      }
      if (!entry.empty()) products[std::to_string(a) + "," + std::to_string(b)] = entry;
    }
  j["products"] = std::move(products);
  j["unit"] = vec_to_json(S.unit());
  return j;
}

Json builtin_document(const std::string& spec) {
  std::string name = spec;
  std::optional<std::size_t> param;
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    name = spec.substr(0, colon);
    try {
      param = std::stoul(spec.substr(colon + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad builtin parameter in '" + spec + "'");
    }
  }
  Json doc;
  if (name == "sl2") {
    doc["builtin"] = Json{{"sl2", true}};
  } else if (name == "heisenberg" || name == "heisenberg_extended" || name == "truncated_poly") {
    if (!param) throw Error(ErrorCode::ParseError, "builtin '" + name + "' needs a parameter");
    doc["builtin"] = Json{{name, *param}};
  } else {
    throw Error(ErrorCode::ParseError, "unknown builtin '" + name + "'");
  }
  return doc;
}

AlgebraFile parse_algebra_file(const Json& doc) {
  AlgebraFile file;
  if (doc.contains("builtin")) {
    const Json& b = doc.at("builtin");
    if (b.contains("sl2")) {
      file.lie = sl2();
    } else if (b.contains("heisenberg")) {
      file.lie = heisenberg(b.at("heisenberg").get<std::size_t>());
    } else if (b.contains("heisenberg_extended")) {
      ExtendedHeisenberg ext = heisenberg_extended(b.at("heisenberg_extended").get<std::size_t>());
      file.lie = std::move(ext.algebra);
      file.form = std::move(ext.metric);
    } else if (b.contains("truncated_poly")) {
      file.assoc = truncated_polynomial_algebra(b.at("truncated_poly").get<std::size_t>());
    } else {
      throw Error(ErrorCode::ParseError, "unknown builtin block");
    }
  }
  if (doc.contains("lie")) file.lie = lie_from_json(doc.at("lie"));
  if (doc.contains("assoc")) file.assoc = assoc_from_json(doc.at("assoc"));
  if (doc.contains("form")) file.form = BilinearForm(matrix_from_json(doc.at("form")));
  if (doc.contains("current_form"))
    file.current_form = BilinearForm(matrix_from_json(doc.at("current_form")));
  if (doc.contains("D")) file.derivation = matrix_from_json(doc.at("D"));
  if (doc.contains("c")) file.center_vector = vec_from_json(doc.at("c"));
  return file;
}

std::string digest(const std::string& bytes) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
  return std::string(buffer);
}

}  // namespace quadraform
