#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brcover/branched_cover.hpp"

namespace brcover {

enum class Command { example2, kodaira_thurston, tower7, catalog, kollar, snf };
enum class OutputFormat { table, json };

/// Process exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs refuse parameter sets that would install more spheres than this.
inline constexpr long kMaxInstalledSpheres = 200000;

struct RunConfig {
    Command command = Command::example2;
    long g1 = 1;
    long g2 = 1;
    long m1 = 1;
    long m2 = 1;
    long d = 2;
    Rational area1 = 1;
    Rational area2 = 1;
    bool kaehler = false;
    OutputFormat format = OutputFormat::table;
    std::optional<std::string> out;
    // kollar
    bool omega_pullback = false;
    bool target_pi2_trivial = false;
    // snf
    std::string matrix_path;
    /// Test hook: replaces the H1 relators of the Kodaira–Thurston cover.
    std::optional<std::vector<std::vector<long>>> test_relators;

    SurfaceConfig surface() const;
};

CoverReport cmd_example2(const RunConfig& cfg);
CoverReport cmd_kodaira_thurston(const RunConfig& cfg);
Tower cmd_tower7(long d);

enum class Pairing { zero, nonzero };

struct IndependenceEntry {
    std::string name;
    Pairing omega_on_pi = Pairing::zero;
    Pairing c1_on_pi = Pairing::zero;
    std::string witness;
    /// Recomputed by this run, as opposed to a cited catalog fact.
    bool live = false;
    bool pass = true;
    std::string evidence;
};

struct Catalog {
    long d = 2;
    std::vector<IndependenceEntry> entries;
    std::vector<Check> checks;

    bool all_pass() const;
};

/// The four (zero/nonzero)² combinations of [ω]|Π and c1|Π; the tower witness uses degree d.
Catalog cmd_catalog(long d = 2);

struct KollarVerdict {
    bool omega_pullback = false;
    bool target_pi2_trivial = false;
    bool concluded = false;
    std::string conclusion;
    std::vector<std::string> failed_hypotheses;
};

/// [ω] = f*Ω for some f: X -> Y with π2(Y) = 0 forces [ω] to vanish on Π(X).
KollarVerdict cmd_kollar(bool omega_pullback, bool target_pi2_trivial);

struct RunResult {
    int exit_code = kExitPass;
    /// Rendered in the requested format; on usage errors, the message.
    std::string output;
    std::string error;
};

/// Executes one run. Parameter errors become kExitUsage, failed verdicts kExitVerificationFailure.
RunResult run(const RunConfig& cfg);

/// Independent runs evaluated concurrently; results keep input order.
std::vector<RunResult> run_batch(const std::vector<RunConfig>& configs);

/// Combined exit code of a batch: usage error dominates, then failure.
int batch_exit_code(const std::vector<RunResult>& results);

}  // namespace brcover
