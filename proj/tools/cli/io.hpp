#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mrb/constructions.hpp"
#include "mrb/operators.hpp"

namespace mrb::cli {

inline constexpr const char* kAlgebraSchema = "mrb3.algebra/1";

//! Parsed algebra description. Indices are 0-based in memory and 1-based on disk.
struct AlgebraFile {
  struct Entry {
    std::vector<int> indices;
    Vec target;
  };
  struct ActionEntry {
    int a = 0, b = 0;
    Matrix matrix;
  };

  //! "3lie", "lie", "prelie", "commassoc" or "relative".
  std::string kind;
  //! Discriminant of Q(sqrt d) when coefficients use sqrt(d).
  std::optional<long> field;
  int dim = 0;
  std::vector<std::string> basis;
  std::vector<Entry> entries;
  std::optional<Matrix> derivation;
  std::optional<Vec> functional;
  std::optional<Matrix> op;
  std::optional<Scalar> weight;

  //! Relative files: components = {g, h}; rho is an action of g on h, zeta of h on g.
  std::vector<AlgebraFile> components;
  std::vector<ActionEntry> rho, zeta;
};

//! Structural parse; scalars are read in the field named by the document (a QuadraticSession
//! must already be open for it, see peek_field). Throws InputError with line/column for syntax
//! errors and with a JSON pointer for invalid content.
AlgebraFile parse_algebra(const std::string& text);
AlgebraFile read_algebra_file(const std::string& path);
//! The "field" member without parsing the rest; nullopt for rational files.
std::optional<long> peek_field(const std::string& text);
std::string read_text(const std::string& path);

//! Canonical form: fixed key order, entries sorted by indices, zero coefficients dropped.
std::string serialize(const AlgebraFile& f);

ThreeLieAlgebra to_three_lie(const AlgebraFile& f);
LieAlgebra to_lie(const AlgebraFile& f);
PreLieAlgebra to_prelie(const AlgebraFile& f);
CommAssocWithDerivation to_commassoc(const AlgebraFile& f);
RelativeMRBDatum to_relative(const AlgebraFile& f);

AlgebraFile from_three_lie(const ThreeLieAlgebra& A);

//! "a,b;c,d" (rows separated by ';').
Matrix parse_matrix_arg(const std::string& text);
//! "a,b,c".
Vec parse_vector_arg(const std::string& text);
std::vector<Scalar> parse_values_arg(const std::string& text);

}  // namespace mrb::cli
