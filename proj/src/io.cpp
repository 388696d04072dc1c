#include "z2z4had/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace z2z4had {

ParseError::ParseError(std::size_t line_, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}

namespace {

struct LineReader {
  std::istream& is;
  std::size_t lineno = 0;
  // next non-blank line with trailing CR stripped; false at end of input
  bool next(std::string& out) {
    while (std::getline(is, out)) {
      ++lineno;
      if (!out.empty() && out.back() == '\r') out.pop_back();
      if (!out.empty()) return true;
    }
    return false;
  }
};

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream iss(s);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

std::size_t parse_field(const std::string& tok, const std::string& key, std::size_t lineno) {
  std::string prefix = key + "=";
  if (tok.rfind(prefix, 0) != 0)
    throw ParseError(lineno, "expected " + prefix + "<count>, got '" + tok + "'");
  const std::string digits = tok.substr(prefix.size());
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(lineno, "bad count in '" + tok + "'");
  return static_cast<std::size_t>(std::stoull(digits));
}

BinaryWord parse_bits(const std::string& s, std::size_t want, std::size_t lineno) {
  if (s.size() != want)
    throw ParseError(lineno, "expected " + std::to_string(want) + " binary symbols");
  BinaryWord w(want);
  for (std::size_t i = 0; i < want; ++i) {
    if (s[i] != '0' && s[i] != '1') throw ParseError(lineno, "binary symbol out of range");
    w[i] = static_cast<Bit>(s[i] - '0');
  }
  return w;
}

QuatWord parse_quats(const std::string& s, std::size_t want, std::size_t lineno) {
  if (s.size() != want)
    throw ParseError(lineno, "expected " + std::to_string(want) + " quaternary symbols");
  QuatWord w(want);
  for (std::size_t i = 0; i < want; ++i) {
    if (s[i] < '0' || s[i] > '3') throw ParseError(lineno, "quaternary symbol out of range");
    w[i] = static_cast<Quat>(s[i] - '0');
  }
  return w;
}

std::vector<BinaryWord> read_binary_body(LineReader& lr, std::size_t n) {
  std::vector<BinaryWord> rows;
  std::string line;
  while (lr.next(line)) rows.push_back(parse_bits(line, n, lr.lineno));
  if (rows.empty()) throw ParseError(lr.lineno + 1, "no rows");
  return rows;
}

LoadedCode read_code_impl(LineReader& lr) {
  std::string line;
  if (!lr.next(line)) throw ParseError(1, "empty input");
  std::vector<std::string> tok = split_ws(line);
  if (tok.size() >= 2 && tok[1] != "v1")
    throw ParseError(lr.lineno, "unsupported version '" + tok[1] + "'");

  LoadedCode lc;
  if (tok.size() == 6 && tok[0] == "Z2Z4") {
    CodeType t;
    t.alpha = parse_field(tok[2], "alpha", lr.lineno);
    t.beta = parse_field(tok[3], "beta", lr.lineno);
    t.gamma = parse_field(tok[4], "gamma", lr.lineno);
    t.delta = parse_field(tok[5], "delta", lr.lineno);
    if (t.alpha + t.beta == 0) throw ParseError(lr.lineno, "alpha and beta are both zero");
    std::vector<MixedWord> words;
    while (lr.next(line)) {
      std::vector<std::string> parts = split_ws(line);
      std::size_t want = (t.alpha > 0 ? 1 : 0) + (t.beta > 0 ? 1 : 0);
      if (parts.size() != want)
        throw ParseError(lr.lineno, "expected " + std::to_string(want) + " symbol groups");
      MixedWord w = mixed_zero(t.alpha, t.beta);
      std::size_t at = 0;
      if (t.alpha > 0) w.bits = parse_bits(parts[at++], t.alpha, lr.lineno);
      if (t.beta > 0) w.quats = parse_quats(parts[at], t.beta, lr.lineno);
      words.push_back(std::move(w));
    }
    if (words.empty()) throw ParseError(lr.lineno + 1, "no words");
    lc.additive = true;
    lc.type = t;
    lc.add = make_additive_code(t, std::move(words));
    std::vector<BinaryWord> image;
    image.reserve(lc.add.words.size());
    for (const MixedWord& w : lc.add.words) image.push_back(phi_ext(w));
    lc.bin = make_binary_code(t.length(), std::move(image));
    return lc;
  }
  if (tok.size() == 3 && tok[0] == "BIN") {
    std::size_t n = parse_field(tok[2], "n", lr.lineno);
    if (n == 0) throw ParseError(lr.lineno, "n is zero");
    lc.bin = make_binary_code(n, read_binary_body(lr, n));
    return lc;
  }
  throw ParseError(lr.lineno, "expected a 'Z2Z4 v1 ...' or 'BIN v1 ...' header");
}

}  // namespace

void write_additive(std::ostream& os, const AdditiveCode& c) {
  const CodeType& t = c.type;
  os << "Z2Z4 v1 alpha=" << t.alpha << " beta=" << t.beta << " gamma=" << t.gamma
     << " delta=" << t.delta << "\n";
  for (const MixedWord& w : c.words) {
    for (Bit b : w.bits) os << char('0' + b);
    if (t.alpha > 0 && t.beta > 0) os << ' ';
    for (Quat q : w.quats) os << char('0' + q);
    os << "\n";
  }
}

AdditiveCode read_additive(std::istream& is) {
  LineReader lr{is};
  LoadedCode lc = read_code_impl(lr);
  if (!lc.additive) throw ParseError(1, "expected a Z2Z4 header");
  return lc.add;
}

void write_binary_code(std::ostream& os, const BinaryCode& c) {
  os << "BIN v1 n=" << c.n << "\n";
  for (const BinaryWord& w : c.words) {
    for (Bit b : w) os << char('0' + b);
    os << "\n";
  }
}

BinaryCode read_binary_code(std::istream& is) {
  LineReader lr{is};
  LoadedCode lc = read_code_impl(lr);
  if (lc.additive) throw ParseError(1, "expected a BIN header");
  return lc.bin;
}

void write_matrix(std::ostream& os, const std::vector<BinaryWord>& rows, std::size_t n) {
  os << "BIN-MATRIX v1 n=" << n << "\n";
  for (const BinaryWord& w : rows) {
    for (Bit b : w) os << char('0' + b);
    os << "\n";
  }
}

std::vector<BinaryWord> read_matrix(std::istream& is) {
  LineReader lr{is};
  std::string line;
  if (!lr.next(line)) throw ParseError(1, "empty input");
  std::vector<std::string> tok = split_ws(line);
  if (tok.size() != 3 || tok[0] != "BIN-MATRIX" || tok[1] != "v1")
    throw ParseError(lr.lineno, "expected a 'BIN-MATRIX v1 n=<n>' header");
  std::size_t n = parse_field(tok[2], "n", lr.lineno);
  if (n == 0) throw ParseError(lr.lineno, "n is zero");
  return read_binary_body(lr, n);
}

LoadedCode read_code(std::istream& is) {
  LineReader lr{is};
  return read_code_impl(lr);
}

LoadedCode load_code_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return read_code(f);
}

}  // namespace z2z4had
