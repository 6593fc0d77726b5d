#pragma once

// Machine-readable verdicts. One report per verifier, serialized as a
// single JSON object per line.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace delannoy {

enum class Mode { SymbolicPoly, ClearedDenominator, InterpolationGrid, PointGrid };

struct CheckOptions {
    /// Evaluate at sampled rational points instead of the verifier's native
    /// symbolic mode.
    bool point_grid = false;
    /// Fault injection: add 1 to the constant coefficient of every
    /// right-hand side the verifier compares.
    bool perturb_rhs = false;
    unsigned samples = 24;
    std::uint64_t seed = 0x5eed;
};

std::string_view mode_name(Mode mode);

struct Counterexample {
    std::string identity;    ///< sub-identity that failed
    std::string parameters;  ///< n, m, k, r, x, a, ... as text
    std::string lhs;
    std::string rhs;
};

struct SkippedPoint {
    std::string point;
    std::string reason;

    friend bool operator==(const SkippedPoint&, const SkippedPoint&) = default;
};

class VerifyReport {
public:
    VerifyReport(std::string id, Mode mode, std::string range)
        : identity_id(std::move(id)), mode(mode), range(std::move(range)) {}

    std::string identity_id;
    Mode mode;
    std::string range;
    std::vector<std::string> identities;
    std::vector<SkippedPoint> skipped_points;
    unsigned checks = 0;
    /// InterpolationGrid only: the degree bound D and the number of
    /// sample points used (at least D + 1).
    std::optional<unsigned> degree_bound;
    std::optional<unsigned> samples;

    bool passed() const { return !counterexample_.has_value(); }
    const std::optional<Counterexample>& counterexample() const { return counterexample_; }

    /// Records the first failure; later failures are ignored.
    void fail(Counterexample cx) {
        if (!counterexample_) counterexample_ = std::move(cx);
    }

    /// Adds a skip unless an identical one is already recorded.
    void skip(std::string point, std::string reason);

    void cover(std::string_view identity);

private:
    std::optional<Counterexample> counterexample_;
};

nlohmann::ordered_json to_json(const VerifyReport& report);
std::string to_json_line(const VerifyReport& report);
/// One human-readable line: "PASS <id> [mode] range (checks)".
std::string to_text_line(const VerifyReport& report);

} // namespace delannoy
