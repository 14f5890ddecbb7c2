#ifndef MSUB_TOOLS_REPORT_HPP
#define MSUB_TOOLS_REPORT_HPP

#include "msub/mathieu.hpp"
#include "msub/normalize.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>

namespace msub::cli {

using nlohmann::json;

struct Report {
  std::string command;
  std::string digest;  // FNV-1a 64 of the inputs, hex
  json payload = json::object();
  json moves = json::array();
  double wall_seconds = 0.0;
  bool ok = true;

  friend bool operator==(const Report&, const Report&) = default;
};

void to_json(json& j, const Report& r);
void from_json(const json& j, Report& r);

std::uint64_t fnv1a(std::string_view bytes);
std::string hex_digest(std::string_view bytes);

json matrix_json(const DenseMatrix& m);
json subspace_json(const MatrixSubspace& s);
json moves_json(const std::vector<Move>& log);
json profile_json(const BinaryProfile& p);
json verdict_json(const MathieuVerdict& v);

/// Plain-text rendering of a report, one key per line.
std::string render_text(const Report& r);

}  // namespace msub::cli

#endif  // MSUB_TOOLS_REPORT_HPP
