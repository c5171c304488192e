#ifndef QUADRAFORM_IO_HPP
#define QUADRAFORM_IO_HPP

#include <json.hpp>
#include <optional>
#include <string>

#include "quadraform/assoc.hpp"
#include "quadraform/current.hpp"
#include "quadraform/lie.hpp"

namespace quadraform {

using Json = nlohmann::ordered_json;

/// Parsed algebra definition file. Parts are optional; commands require the
/// ones they need.
struct AlgebraFile {
  std::optional<LieAlgebra> lie;
  std::optional<AssocAlgebra> assoc;
  std::optional<BilinearForm> form;          // form on the lie part
  std::optional<BilinearForm> current_form;  // form on lie (x) assoc
  std::optional<RationalMatrix> derivation;  // "D"
  std::optional<Vec> center_vector;          // "c"
};

Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);
Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);

Json lie_to_json(const LieAlgebra& g);
Json assoc_to_json(const AssocAlgebra& S);

/// Expands {"builtin": ...} shortcuts and parses explicit parts. Sparse
/// bracket keys must have i < j (lie) and a <= b (assoc); anything else is a
/// ParseError, as are out-of-range indices and malformed rationals.
AlgebraFile parse_algebra_file(const Json& doc);

/// Builtin spec "name" or "name:param", e.g. "sl2", "heisenberg_extended:1".
Json builtin_document(const std::string& spec);

/// FNV-1a 64-bit digest, hex encoded; used for certificate input digests.
std::string digest(const std::string& bytes);

}  // namespace quadraform

#endif
