#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hilbkit/picard.hpp"

namespace hilbkit {

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus status);

struct CheckRecord {
  std::string id;         // "<criterion>.<detail>", unique
  std::string criterion;  // one of criteria()
  std::string what;
  std::string expected;
  std::string computed;
  CheckStatus status = CheckStatus::Skipped;
  std::string note;       // e.g. a disagreement that is reported, not asserted
  double runtime_ms = 0;
};

struct VerifyOptions {
  int n_min = 3;
  int n_max = 5;
  std::uint64_t seed = 1;
  // Replaces the built-in pairing table of that space (fault injection).
  std::optional<PairingTable> pairing_override;
};

struct VerifyReport {
  std::vector<CheckRecord> checks;  // sorted by id
  std::size_t count(CheckStatus status) const;
  bool all_pass() const { return count(CheckStatus::Fail) == 0; }
};

// Criterion names in battery order.
const std::vector<std::string>& criteria();

// Each criterion runs on its own n range intersected with [n_min, n_max]:
// hilbert and chambers up to 8, tangent up to 6, the rest up to 5.
// Failing checks and thrown errors are recorded, never propagated.
// Throws DomainError only for an invalid range.
VerifyReport verify(const VerifyOptions& options);

// {"schema": 1, "seed", "n_min", "n_max", "summary", "checks": [...]};
// runtime_ms appears only with timings.
nlohmann::json to_json(const VerifyReport& report, const VerifyOptions& options, bool timings = false);
std::string to_text(const VerifyReport& report, bool timings = false);

PairingTable pairing_table_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PairingTable& table);

}  // namespace hilbkit
