#pragma once
// Text formats for codes and matrices.
//
//   Z2Z4 v1 alpha=A beta=B gamma=G delta=D   one word per line: A chars of
//                                            {01}, a space, B chars of
//                                            {0123}; an empty part and its
//                                            separator are omitted
//   BIN v1 n=N                               one word per line, N chars {01}
//   BIN-MATRIX v1 n=N                        rows in order, N chars {01}
//
// Blank lines are ignored.  Readers throw ParseError with the 1-based line
// number of the offending line.

#include "construct.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace z2z4had {

struct ParseError : std::runtime_error {
  std::size_t line;
  ParseError(std::size_t line_, const std::string& msg);
};

void write_additive(std::ostream& os, const AdditiveCode& c);
AdditiveCode read_additive(std::istream& is);

void write_binary_code(std::ostream& os, const BinaryCode& c);
BinaryCode read_binary_code(std::istream& is);

void write_matrix(std::ostream& os, const std::vector<BinaryWord>& rows, std::size_t n);
std::vector<BinaryWord> read_matrix(std::istream& is);  // keeps row order and repeats

// Either format, by header.  An additive code is returned together with its
// binary Gray image (alpha bits kept, quaternary symbols expanded in place).
struct LoadedCode {
  bool additive = false;
  CodeType type;       // meaningful when additive
  AdditiveCode add;    // empty unless additive
  BinaryCode bin;      // the words themselves, or the Gray image
};
LoadedCode read_code(std::istream& is);
LoadedCode load_code_file(const std::string& path);  // runtime_error when unreadable

}  // namespace z2z4had
