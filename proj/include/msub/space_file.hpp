#ifndef MSUB_SPACE_FILE_HPP
#define MSUB_SPACE_FILE_HPP

// Plain-text matrix space files:
//
//   # comment
//   field = 5          (a prime, or Q)
//   n = 2
//   name = H           (optional)
//   [matrix]
//   1 0
//   0 -1
//   [matrix]
//   ...
//
// Entries are integers or fractions a/b and are kept unreduced, so one file
// can be read over several fields.

#include "msub/matrix_subspace.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace msub {

class SpaceFileError : public std::runtime_error {
 public:
  SpaceFileError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct SpaceFile {
  /// 0 for Q, otherwise a prime.
  std::uint32_t characteristic = 0;
  std::size_t n = 0;
  std::optional<std::string> name;
  /// Row-major n x n entries of each spanning matrix.
  std::vector<std::vector<mpq_class>> matrices;

  Field field() const;
  /// The spanned subspace, read over `over` when given.
  MatrixSubspace subspace(std::optional<Field> over = std::nullopt) const;

  friend bool operator==(const SpaceFile&, const SpaceFile&) = default;
};

SpaceFile parse_space_file(const std::string& text);
/// Canonical text; parse_space_file(write_space_file(s)) == s.
std::string write_space_file(const SpaceFile& s);

SpaceFile read_space_file(const std::string& path);

/// A file whose matrices are the canonical basis of m.
SpaceFile space_file_from(const MatrixSubspace& m, std::optional<std::string> name = std::nullopt);

/// "Q" or the decimal prime.
Field parse_field(const std::string& spec);

}  // namespace msub

#endif  // MSUB_SPACE_FILE_HPP
