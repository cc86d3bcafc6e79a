#ifndef JJRB_INSTANCE_IO_HPP
#define JJRB_INSTANCE_IO_HPP

#include <optional>
#include <string>

#include "jjrb/jj_algebra.hpp"
#include "jjrb/matrix.hpp"
#include "jjrb/rational.hpp"
#include "jjrb/representation.hpp"

namespace jjrb {

/// Parsed on-disk instance document. Indices are 1-based in files and 0-based
/// here; matrices use the column-as-image convention of the library.
struct InstanceFile {
  JJAlgebra algebra{0};
  std::optional<Rational> weight;
  std::optional<Matrix> rb_operator;
  std::optional<Representation> representation;
  std::optional<Matrix> t_operator;
};

/// Parses the JSON document. Unlisted products default to zero and the (j,i)
/// mirror of a listed (i,j) is implied; with strict = true a product listed
/// without its explicit equal mirror is rejected instead. Structural problems
/// raise ParseError with a location.
InstanceFile parse_instance(const std::string& json_text, bool strict = false);

/// Reads and parses a file (ParseError when unreadable).
InstanceFile load_instance(const std::string& path, bool strict = false);

/// Canonical serialization: fixed key order, products listed for i <= j with
/// nonzero results only, canonical rational strings, two-space indent, final
/// newline. parse -> emit is byte-stable.
std::string emit_instance(const InstanceFile& f);

}  // namespace jjrb

#endif
