#ifndef BCINV_MTX_IO_HPP
#define BCINV_MTX_IO_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "bcinv/types.hpp"

namespace bcinv {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(Errc::parse_error,
              "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Matrix Market array reader. Accepts fields "complex" and "real"
/// (real files promote with zero imaginary parts), symmetry "general" only.
/// Entries are column-major, one per line: "re im" or "re".
CMatrix read_matrix(std::istream& in);
CMatrix read_matrix(const std::filesystem::path& path);

/// Writer; always emits field "complex" with 17 significant digits, so a
/// read-write cycle reproduces its own files byte for byte.
void write_matrix(std::ostream& out, const CMatrix& m);
void write_matrix(const std::filesystem::path& path, const CMatrix& m);

}  // namespace bcinv

#endif
