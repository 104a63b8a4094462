#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "quotient/analysis.hpp"
#include "quotient/bounds.hpp"
#include "quotient/witnesses.hpp"

namespace quotient {

struct BoundCheck {
	BoundReport report;
	/// measured <= value; false when the bound is not applicable.
	bool satisfied = false;
	/// measured == value; false when the bound is not applicable.
	bool tight = false;

	/// An applicable bound that fails: exceeded, or not met when it is an equality.
	bool violated() const noexcept { return report.applicable && (!satisfied || (report.equality && !tight)); }
};

struct VerifyReport {
	std::vector<std::string> operands;
	std::string alphabet;
	Operation operation = Operation::Union;
	std::size_t measured_kappa = 0;
	std::vector<ComplexityProfile> operand_profiles;
	/// Profile of the operated language.
	ComplexityProfile result_profile;
	std::vector<BoundCheck> bounds;
	/// κ from the derivative path when every operand is a regex.
	std::optional<std::size_t> derivative_kappa;
	std::vector<std::string> notes;

	bool paths_agree() const noexcept { return !derivative_kappa || *derivative_kappa == measured_kappa; }
	std::size_t violations() const noexcept;
	bool ok() const noexcept { return violations() == 0 && paths_agree(); }
};

/// Builds the operated language, measures its complexity and checks every
/// bound of `op` against it. `right` is required for binary operations.
VerifyReport verify_operation(const Language& left, const Language* right, Operation op, const Alphabet& alphabet,
                              const ExplorationConfig& cfg = {});

/// Verifies a witness case and compares against its expected values.
struct WitnessCheck {
	WitnessCase witness;
	std::vector<std::size_t> operand_kappas;
	VerifyReport report;

	bool operands_match() const;
	bool tight() const { return static_cast<Count>(report.measured_kappa) == witness.expected_result_kappa; }
	bool ok() const { return operands_match() && tight() && report.ok(); }
};
WitnessCheck check_witness(const WitnessCase& w, const ExplorationConfig& cfg = {});

/// Syntactic reversal of an extended regex; denotes the reversed language.
Regex reverse_regex(const Regex& r);

/// K_w L  |  K^e L_w  |  the union of K_u^e L_v over w = uv with u, v non-empty.
/// For the empty word this is KL.
Regex product_derivative_rhs(const Regex& k, const Regex& l, std::string_view w);

/// (union over w = uv of (L*)_u^e L_v) L*, for a non-empty w.
Regex star_derivative_rhs(const Regex& l, std::string_view w);

/// Normal-form regex with at most `size` operator nodes. Node kinds before
/// normalization are drawn with weights: letter 40, union 20, concatenation
/// 20, star 10, complement/intersection/difference/symmetric difference
/// 2.5 each, except that the root is always an operator node.
Regex random_regex(std::mt19937_64& rng, std::size_t size, const Alphabet& alphabet);

/// Random complete DFA with at most `max_states` states, all reachable.
/// States are biased towards sinks and towards states that fall into a sink
/// so that special quotients occur often; the initial state is never a sink.
Dfa random_dfa(std::mt19937_64& rng, std::size_t max_states, const Alphabet& alphabet);

/// Generator for sample `index` of a run seeded with `seed`.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);

struct CampaignConfig {
	std::uint64_t seed = 1;
	std::size_t samples = 100;
	std::size_t max_regex_size = 5;
	Alphabet alphabet{"ab"};
	ExplorationConfig cap;
	/// Longest word for the derivative identity checks.
	std::size_t identity_word_length = 3;
	/// Deliberately reports a failure on the first sample.
	bool inject_failure = false;
};

struct BoundTally {
	std::size_t applicable = 0;
	std::size_t satisfied = 0;
	std::size_t tight = 0;
};

struct CampaignFailure {
	std::uint64_t seed = 0;
	std::size_t sample = 0;
	std::string check;
	std::vector<std::string> inputs;
	std::string detail;
};

struct CampaignSummary {
	std::uint64_t seed = 0;
	std::size_t samples_requested = 0;
	std::size_t samples_run = 0;
	std::size_t max_regex_size = 0;
	std::string alphabet;
	std::size_t operations_verified = 0;
	std::size_t path_agreements = 0;
	std::size_t identity_checks = 0;
	std::size_t star_equality_checks = 0;
	std::size_t complement_checks = 0;
	std::size_t violations = 0;
	std::map<std::string, BoundTally> bounds;
	std::optional<CampaignFailure> failure;

	bool ok() const noexcept { return !failure && violations == 0; }
};

/// Runs the randomized property campaign. Stops at the first failure.
CampaignSummary campaign(const CampaignConfig& cfg);

struct ReversalConfig {
	std::uint64_t seed = 1;
	std::size_t samples = 200;
	std::size_t max_kappa = 6;
	std::size_t max_regex_size = 6;
	Alphabet alphabet{"ab"};
	ExplorationConfig cap;
};

struct ReversalSummary {
	std::size_t samples_run = 0;
	std::size_t from_regex = 0;
	std::size_t from_dfa = 0;
	std::map<std::string, BoundTally> bounds;
	std::optional<CampaignFailure> failure;

	bool ok() const noexcept { return !failure; }
};

/// Checks the reversal bounds on samples alternating between random regexes
/// (kept when κ <= max_kappa) and random DFAs with at most max_kappa states.
ReversalSummary reversal_campaign(const ReversalConfig& cfg);

} // namespace quotient
