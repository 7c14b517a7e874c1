#include <doctest.h>

#include <sstream>

#include "bcinv/mtx_io.hpp"
#include "support.hpp"

using namespace bcinv;
using testsupport::random_complex;

namespace {

std::string dump(const CMatrix& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

CMatrix parse(const std::string& text) {
  std::istringstream in(text);
  return read_matrix(in);
}

}  // namespace

TEST_CASE("written files re-emit byte for byte") {
  std::mt19937_64 rng(91);
  CMatrix m = random_complex(3, 2, rng);
  m(0, 0) = Complex(1.0, 0.0);
  m(1, 0) = Complex(-2.25e-17, 3.0);
  const std::string first = dump(m);
  const std::string second = dump(parse(first));
  CHECK(first == second);
  CHECK((parse(first) - m).norm() == 0.0);
}

TEST_CASE("identity file round trip") {
  const std::string text = dump(CMatrix::Identity(2, 2));
  CHECK(text ==
        "%%MatrixMarket matrix array complex general\n"
        "2 2\n"
        "1 0\n0 0\n0 0\n1 0\n");
  CHECK(dump(parse(text)) == text);
}

TEST_CASE("real files promote with exactly zero imaginary parts") {
  const CMatrix m = parse(
      "%%MatrixMarket matrix array real general\n"
      "2 2\n"
      "1.5\n-2\n0.25\n4\n");
  CHECK(m(0, 0) == Complex(1.5, 0.0));
  CHECK(m(1, 0) == Complex(-2.0, 0.0));
  CHECK(m(0, 1) == Complex(0.25, 0.0));
  CHECK(m(1, 1).imag() == 0.0);
}

TEST_CASE("column-major entry order") {
  const CMatrix m = parse(
      "%%MatrixMarket matrix array real general\n"
      "2 2\n"
      "1\n2\n3\n4\n");
  CHECK(m(0, 0).real() == 1.0);
  CHECK(m(1, 0).real() == 2.0);
  CHECK(m(0, 1).real() == 3.0);
  CHECK(m(1, 1).real() == 4.0);
}

TEST_CASE("comments and blank lines before the dimensions are fine") {
  const CMatrix m = parse(
      "%%MatrixMarket matrix array real general\n"
      "% produced by hand\n"
      "\n"
      "1 1\n"
      "7\n");
  CHECK(m(0, 0).real() == 7.0);
}

TEST_CASE("zero-column matrices survive a round trip") {
  const CMatrix empty(3, 0);
  const std::string text = dump(empty);
  const CMatrix back = parse(text);
  CHECK(back.rows() == 3);
  CHECK(back.cols() == 0);
}

TEST_CASE("malformed headers carry line numbers") {
  CHECK_THROWS_AS(parse(""), ParseError);

  try {
    parse("%%MatrixMarket matrix coordinate complex general\n1 1\n1 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& err) {
    CHECK(err.line() == 1);
  }

  CHECK_THROWS_AS(
      parse("%%MatrixMarket matrix array integer general\n1 1\n1\n"),
      ParseError);
  CHECK_THROWS_AS(
      parse("%%MatrixMarket matrix array complex symmetric\n1 1\n1 0\n"),
      ParseError);
}

TEST_CASE("entry-count mismatches point at the offending line") {
  try {
    parse(
        "%%MatrixMarket matrix array complex general\n"
        "2 2\n"
        "1 0\n2 0\n3 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& err) {
    CHECK(err.line() == 6);  // end of file while an entry is still missing
  }

  try {
    parse(
        "%%MatrixMarket matrix array complex general\n"
        "1 1\n"
        "1 0\n"
        "9 9\n");
    FAIL("expected a parse error");
  } catch (const ParseError& err) {
    CHECK(err.line() == 4);
  }
}

TEST_CASE("malformed entries are rejected with their line") {
  try {
    parse(
        "%%MatrixMarket matrix array complex general\n"
        "2 1\n"
        "1 0\n"
        "2 zebra\n");
    FAIL("expected a parse error");
  } catch (const ParseError& err) {
    CHECK(err.line() == 4);
  }

  // A real-file entry line with two numbers is malformed.
  CHECK_THROWS_AS(parse("%%MatrixMarket matrix array real general\n"
                        "1 1\n"
                        "1 0\n"),
                  ParseError);

  // Non-finite values never enter a matrix.
  CHECK_THROWS_AS(parse("%%MatrixMarket matrix array real general\n"
                        "1 1\n"
                        "nan\n"),
                  ParseError);

  CHECK_THROWS_AS(parse("%%MatrixMarket matrix array real general\n"
                        "1 x\n"
                        "1\n"),
                  ParseError);
}

TEST_CASE("missing files raise io errors") {
  CHECK_THROWS_AS(read_matrix(std::filesystem::path("/nonexistent/m.mtx")),
                  Error);
}
