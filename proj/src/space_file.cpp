#include "msub/space_file.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace msub {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

mpq_class parse_entry(const std::string& tok, std::size_t line) {
  static const std::regex number(R"(-?[0-9]+(/[0-9]+)?)");
  if (!std::regex_match(tok, number)) throw SpaceFileError(line, "malformed entry '" + tok + "'");
  const auto slash = tok.find('/');
  mpq_class q;
  if (slash == std::string::npos) {
    q = mpq_class(mpz_class(tok));
  } else {
    const mpz_class den(tok.substr(slash + 1));
    if (den == 0) throw SpaceFileError(line, "zero denominator in '" + tok + "'");
    q = mpq_class(mpz_class(tok.substr(0, slash)), den);
    q.canonicalize();
  }
  return q;
}

mpq_class to_rational(const Scalar& s) {
  if (s.field().is_prime_field()) return mpq_class(s.residue());
  return s.rational();
}

}  // namespace

Field parse_field(const std::string& spec) {
  const std::string s = trim(spec);
  if (s == "Q" || s == "q") return Field::rationals();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 10)
    throw std::invalid_argument("field must be Q or a prime, got '" + s + "'");
  const unsigned long long p = std::stoull(s);
  if (p > 0xFFFFFFFFull) throw std::invalid_argument("prime too large: " + s);
  return Field::prime(static_cast<std::uint32_t>(p));
}

Field SpaceFile::field() const {
  return characteristic == 0 ? Field::rationals() : Field::prime(characteristic);
}

MatrixSubspace SpaceFile::subspace(std::optional<Field> over) const {
  const Field f = over.value_or(field());
  std::vector<DenseMatrix> gens;
  for (const auto& m : matrices) {
    std::vector<Scalar> entries;
    entries.reserve(m.size());
    for (const auto& q : m) entries.emplace_back(f, q.get_num(), q.get_den());
    gens.emplace_back(f, n, n, std::move(entries));
  }
  return MatrixSubspace::span(f, n, gens);
}

SpaceFile parse_space_file(const std::string& text) {
  SpaceFile out;
  bool have_field = false, have_n = false;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  std::vector<mpq_class>* current = nullptr;
  std::size_t rows_read = 0;
  std::size_t block_line = 0;

  auto close_block = [&](std::size_t at) {
    if (current && rows_read != out.n)
      throw SpaceFileError(block_line, "matrix block has " + std::to_string(rows_read) + " rows, expected " +
                                           std::to_string(out.n));
    (void)at;
    current = nullptr;
  };

  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw;
    if (const auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
    s = trim(s);
    if (s.empty()) continue;

    if (s == "[matrix]") {
      close_block(line);
      if (!have_field || !have_n) throw SpaceFileError(line, "matrix block before field and n are set");
      out.matrices.emplace_back();
      current = &out.matrices.back();
      current->reserve(out.n * out.n);
      rows_read = 0;
      block_line = line;
      continue;
    }

    if (const auto eq = s.find('='); eq != std::string::npos && !current) {
      const std::string key = trim(s.substr(0, eq));
      const std::string value = trim(s.substr(eq + 1));
      if (key == "field") {
        if (have_field) throw SpaceFileError(line, "duplicate key 'field'");
        try {
          out.characteristic = parse_field(value).characteristic();
        } catch (const std::invalid_argument& e) {
          throw SpaceFileError(line, e.what());
        }
        have_field = true;
      } else if (key == "n") {
        if (have_n) throw SpaceFileError(line, "duplicate key 'n'");
        if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos || value.size() > 4)
          throw SpaceFileError(line, "n must be a positive integer");
        out.n = std::stoul(value);
        if (out.n == 0) throw SpaceFileError(line, "n must be a positive integer");
        have_n = true;
      } else if (key == "name") {
        if (out.name) throw SpaceFileError(line, "duplicate key 'name'");
        out.name = value;
      } else {
        throw SpaceFileError(line, "unknown key '" + key + "'");
      }
      continue;
    }

    if (!current) throw SpaceFileError(line, "expected 'key = value' or '[matrix]'");
    if (rows_read == out.n) throw SpaceFileError(line, "too many rows in matrix block");
    std::istringstream row(s);
    std::string tok;
    std::size_t cols = 0;
    while (row >> tok) {
      current->push_back(parse_entry(tok, line));
      ++cols;
    }
    if (cols != out.n)
      throw SpaceFileError(line, "row has " + std::to_string(cols) + " entries, expected " + std::to_string(out.n));
    ++rows_read;
  }
  close_block(line);
  if (!have_field) throw SpaceFileError(line, "missing key 'field'");
  if (!have_n) throw SpaceFileError(line, "missing key 'n'");
  return out;
}

std::string write_space_file(const SpaceFile& s) {
  std::ostringstream os;
  os << "field = " << (s.characteristic == 0 ? std::string("Q") : std::to_string(s.characteristic)) << '\n';
  os << "n = " << s.n << '\n';
  if (s.name) os << "name = " << *s.name << '\n';
  for (const auto& m : s.matrices) {
    os << "[matrix]\n";
    for (std::size_t i = 0; i < s.n; ++i) {
      for (std::size_t j = 0; j < s.n; ++j) os << (j ? " " : "") << m[i * s.n + j].get_str();
      os << '\n';
    }
  }
  return os.str();
}

SpaceFile read_space_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_space_file(buf.str());
}

SpaceFile space_file_from(const MatrixSubspace& m, std::optional<std::string> name) {
  SpaceFile s;
  s.characteristic = m.field().characteristic();
  s.n = m.n();
  s.name = std::move(name);
  for (const auto& b : m.basis()) {
    std::vector<mpq_class> entries;
    for (const auto& e : b.entries()) entries.push_back(to_rational(e));
    s.matrices.push_back(std::move(entries));
  }
  return s;
}

}  // namespace msub
