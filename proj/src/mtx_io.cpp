#include "bcinv/mtx_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace bcinv {

namespace {

std::string lowercased(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream stream(line);
  std::vector<std::string> toks;
  std::string tok;
  while (stream >> tok) toks.push_back(tok);
  return toks;
}

bool blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

double parse_entry(const std::string& tok, std::size_t line_no) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line_no, "invalid numeric entry '" + tok + "'");
  }
  if (used != tok.size())
    throw ParseError(line_no, "invalid numeric entry '" + tok + "'");
  if (!std::isfinite(value))
    throw ParseError(line_no, "non-finite entry '" + tok + "'");
  return value;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

CMatrix read_matrix(std::istream& in) {
  std::size_t line_no = 0;
  std::string line;

  if (!std::getline(in, line)) throw ParseError(1, "empty file");
  ++line_no;
  const auto banner = tokens_of(line);
  if (banner.size() != 5 || lowercased(banner[0]) != "%%matrixmarket")
    throw ParseError(line_no, "missing MatrixMarket banner");
  if (lowercased(banner[1]) != "matrix" || lowercased(banner[2]) != "array")
    throw ParseError(line_no, "only dense 'matrix array' files are supported");
  const std::string field = lowercased(banner[3]);
  if (field != "complex" && field != "real")
    throw ParseError(line_no, "field must be 'complex' or 'real'");
  if (lowercased(banner[4]) != "general")
    throw ParseError(line_no, "symmetry must be 'general'");
  const bool is_complex = field == "complex";

  Index rows = -1, cols = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == '%') continue;
    if (blank(line)) continue;
    const auto dims = tokens_of(line);
    if (dims.size() != 2)
      throw ParseError(line_no, "dimension line must hold exactly 'rows cols'");
    try {
      rows = std::stoll(dims[0]);
      cols = std::stoll(dims[1]);
    } catch (const std::exception&) {
      throw ParseError(line_no, "invalid dimensions");
    }
    if (rows < 0 || cols < 0) throw ParseError(line_no, "invalid dimensions");
    break;
  }
  if (rows < 0) throw ParseError(line_no + 1, "missing dimension line");

  CMatrix m(rows, cols);
  const std::size_t expected = static_cast<std::size_t>(rows) *
                               static_cast<std::size_t>(cols);
  std::size_t count = 0;
  while (count < expected) {
    if (!std::getline(in, line))
      throw ParseError(line_no + 1,
                       "unexpected end of file: " + std::to_string(count) +
                           " of " + std::to_string(expected) + " entries read");
    ++line_no;
    if (!line.empty() && line[0] == '%') continue;
    if (blank(line)) throw ParseError(line_no, "blank line inside entry block");
    const auto entry = tokens_of(line);
    const std::size_t want = is_complex ? 2 : 1;
    if (entry.size() != want)
      throw ParseError(line_no, "expected " + std::to_string(want) +
                                    " value(s) per entry line");
    const double re = parse_entry(entry[0], line_no);
    const double im = is_complex ? parse_entry(entry[1], line_no) : 0.0;
    const Index col = static_cast<Index>(count) / rows;
    const Index row = static_cast<Index>(count) % rows;
    m(row, col) = Complex(re, im);
    ++count;
  }
  while (std::getline(in, line)) {
    ++line_no;
    if ((!line.empty() && line[0] == '%') || blank(line)) continue;
    throw ParseError(line_no, "trailing content after the last entry");
  }
  return m;
}

CMatrix read_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(Errc::io_error, "cannot open '" + path.string() + "'");
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const CMatrix& m) {
  require_finite(m, "matrix to write");
  out << "%%MatrixMarket matrix array complex general\n";
  out << m.rows() << " " << m.cols() << "\n";
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      out << format_double(m(i, j).real()) << " "
          << format_double(m(i, j).imag()) << "\n";
}

void write_matrix(const std::filesystem::path& path, const CMatrix& m) {
  std::ofstream out(path);
  if (!out)
    throw Error(Errc::io_error, "cannot open '" + path.string() + "' for writing");
  write_matrix(out, m);
  if (!out) throw Error(Errc::io_error, "write to '" + path.string() + "' failed");
}

}  // namespace bcinv
