#include "report.hpp"

#include <cstdio>
#include <sstream>

namespace msub::cli {

void to_json(json& j, const Report& r) {
  j = json{{"command", r.command}, {"digest", r.digest}, {"ok", r.ok},
           {"payload", r.payload}, {"moves", r.moves},   {"wall_seconds", r.wall_seconds}};
}

void from_json(const json& j, Report& r) {
  j.at("command").get_to(r.command);
  j.at("digest").get_to(r.digest);
  j.at("ok").get_to(r.ok);
  r.payload = j.at("payload");
  r.moves = j.at("moves");
  j.at("wall_seconds").get_to(r.wall_seconds);
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex_digest(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
  return buf;
}

json matrix_json(const DenseMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json subspace_json(const MatrixSubspace& s) {
  json basis = json::array();
  for (const auto& b : s.basis()) basis.push_back(matrix_json(b));
  return json{{"field", s.field().name()},
              {"n", s.n()},
              {"dim", s.dim()},
              {"contains_identity", s.contains_identity()},
              {"basis", basis}};
}

json moves_json(const std::vector<Move>& log) {
  json out = json::array();
  for (const auto& m : log)
    out.push_back(json{{"kind", to_string(m.kind)}, {"level", m.level}, {"t", matrix_json(m.t)}});
  return out;
}

json profile_json(const BinaryProfile& p) {
  return json{{"n", p.n}, {"B", p.B}, {"b", p.b}, {"col_dims", p.col_dims}, {"d", p.d}};
}

json verdict_json(const MathieuVerdict& v) {
  json j{{"type", to_string(v.type)}, {"holds", v.holds}};
  if (v.witness) {
    json w{{"a", matrix_json(v.witness->a)}, {"exponent", v.witness->exponent}};
    if (v.witness->b) w["b"] = matrix_json(*v.witness->b);
    if (v.witness->c) w["c"] = matrix_json(*v.witness->c);
    j["witness"] = std::move(w);
  }
  return j;
}

namespace {

void render(std::ostream& os, const std::string& key, const json& v) {
  if (v.is_object()) {
    for (const auto& [k, sub] : v.items()) render(os, key.empty() ? k : key + "." + k, sub);
  } else {
    os << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "command: " << r.command << '\n' << "digest: " << r.digest << '\n' << "ok: " << (r.ok ? "true" : "false")
     << '\n';
  render(os, "", r.payload);
  for (const auto& m : r.moves) os << "move: " << m.at("kind").get<std::string>() << " level " << m.at("level") << '\n';
  os << "wall_seconds: " << r.wall_seconds << '\n';
  return os.str();
}

}  // namespace msub::cli
