#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "congruent/ellipse.hpp"
#include "congruent/excircle.hpp"
#include "congruent/rational.hpp"
#include "congruent/squarefree.hpp"
#include "congruent/tau_curve.hpp"

namespace congruent {

enum class Family { Tau, Ellipse, Circumcircle, Excircle };

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view text);

// One generated triangle. Serialized as a single JSON object per line:
//   {"family":"tau","parameters":{"tau":"1","x":"2","y":"3"},
//    "sides":["4","3","5"],"area":"6","class":6,"verified":true}
// Excircle records add "kind". Degenerate tau points carry
// "degenerate":true and no sides, area or class.
struct OutputRecord {
  Family family = Family::Tau;
  std::vector<std::pair<std::string, Rat>> parameters;
  std::optional<ExcircleKind> kind;
  std::optional<std::array<Rat, 3>> sides;
  std::optional<Rat> area;
  std::optional<BigInt> cls;
  bool degenerate = false;
  bool verified = false;

  const Rat* parameter(std::string_view name) const;
};

// Builders. Each fills every field and sets `verified` from check_record.
OutputRecord tau_record(const XTauPoint& p, const FactorLimits& limits = {});
OutputRecord ellipse_record(const Rat& axis, const Rat& t, const FactorLimits& limits = {});
OutputRecord consecutive_record(const BigInt& t, const FactorLimits& limits = {});
OutputRecord circumcircle_record(const Rat& radius, const Rat& t, const FactorLimits& limits = {});
OutputRecord excircle_record(ExcircleKind kind, const Rat& x, const FactorLimits& limits = {});

// Re-derives every exact invariant of the record's family from its own
// fields. Returns one message per failed check; empty means the record holds.
// The `verified` field is not consulted.
std::vector<std::string> check_record(const OutputRecord& r, const FactorLimits& limits = {});

std::string to_json_line(const OutputRecord& r);
// Throws ParseError with a description of the first problem found.
OutputRecord parse_record(std::string_view line);

// Single human-readable line.
std::string to_text_line(const OutputRecord& r);

}  // namespace congruent
