#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sbpi/pomdp.hpp"

namespace sbpi {

struct ParseDiagnostic {
    enum class Severity { Error, Warning };
    int line = 1;
    std::string message;
    Severity severity = Severity::Error;
};

/// Outcome of parsing a POMDP file: a model when no error-severity
/// diagnostic was produced, plus all diagnostics (warnings included).
struct ParseResult {
    std::optional<Pomdp> pomdp;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const { return pomdp.has_value(); }
    std::string message() const;
};

/// Parses the plain-text POMDP format (discount:, values:, states:,
/// actions:, observations:, start:, T:, O:, R: directives; `uniform`,
/// `identity` and `*` wildcards; matrix, row, and single-entry forms;
/// named or numeric identifiers; `#` comments). Never throws on malformed
/// input; every failure becomes a diagnostic with a line number.
ParseResult parse_pomdp(std::string_view text);

/// Reads and parses a POMDP file from disk.
ParseResult load_pomdp_file(const std::string& path);

/// Serializes a model back to the text format. Parsing the output yields
/// tables identical to the input within 1e-12.
std::string to_pomdp_format(const Pomdp& pomdp);

/// Deterministic random model: transition and observation rows drawn from
/// a flat Dirichlet, rewards uniform in [-1, 1]. Identical seeds yield
/// identical models on every platform.
Pomdp generate_random_pomdp(int num_states, int num_actions, int num_observations,
                            double discount, std::uint64_t seed);

}  // namespace sbpi
