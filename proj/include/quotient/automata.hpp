#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "quotient/alphabet.hpp"
#include "quotient/regex.hpp"

namespace quotient {

using State = std::uint32_t;

/// Safety cap for any construction that enumerates states.
struct ExplorationConfig {
	std::size_t max_states = 1'000'000;
};

/// Complete deterministic automaton. Every state is reachable from the
/// initial state; transitions are stored row-major (state, letter index).
class Dfa {
public:
	/// Throws FormatError unless the transition table is total, targets are in
	/// range and every state is reachable. `labels` is empty or one per state.
	Dfa(Alphabet alphabet, State initial, std::vector<State> transitions, std::vector<bool> accepting,
	    std::vector<Regex> labels = {});

	const Alphabet& alphabet() const noexcept { return alphabet_; }
	std::size_t state_count() const noexcept { return accepting_.size(); }
	State initial() const noexcept { return initial_; }
	bool accepting(State q) const { return accepting_[q]; }
	std::size_t accepting_count() const noexcept;

	State next(State q, std::size_t letter_index) const {
		return transitions_[q * alphabet_.size() + letter_index];
	}
	std::span<const State> row(State q) const {
		return std::span<const State>(transitions_).subspan(q * alphabet_.size(), alphabet_.size());
	}
	/// State reached from q by `word`; throws AlphabetError on a foreign letter.
	State run(State q, std::string_view word) const;
	bool accepts(std::string_view word) const { return accepting(run(initial_, word)); }

	bool has_labels() const noexcept { return !labels_.empty(); }
	/// Derivative that produced each state (build_dfa), or a representative after minimize.
	const std::vector<Regex>& labels() const noexcept { return labels_; }

	/// Structural identity, ignoring labels.
	friend bool operator==(const Dfa& a, const Dfa& b) noexcept {
		return a.alphabet_ == b.alphabet_ && a.initial_ == b.initial_ && a.transitions_ == b.transitions_ &&
		       a.accepting_ == b.accepting_;
	}

private:
	Alphabet alphabet_;
	State initial_;
	std::vector<State> transitions_;
	std::vector<bool> accepting_;
	std::vector<Regex> labels_;
};

enum class BoolOp { Union, Intersection, Difference, SymDiff };

std::string_view to_string(BoolOp op) noexcept;
bool apply(BoolOp op, bool left, bool right) noexcept;
/// Normal-form regex node combining two operands.
Regex combine(BoolOp op, Regex left, Regex right);

/// Quotient automaton by breadth-first closure of normal-form derivatives.
/// States are dissimilar derivatives, numbered in discovery order (letters in
/// alphabet order); the result may be non-minimal. Throws CapExceeded.
Dfa build_dfa(const Regex& r, const Alphabet& alphabet, const ExplorationConfig& cfg = {});

/// Minimal DFA, states renumbered breadth-first from the initial state.
Dfa minimize(const Dfa& d);

/// Number of distinct quotients of the language of r.
std::size_t kappa(const Regex& r, const Alphabet& alphabet, const ExplorationConfig& cfg = {});

/// Reachable pair construction for a boolean connective.
Dfa product_dfa(const Dfa& left, const Dfa& right, BoolOp op);

Dfa complement_dfa(const Dfa& d);

/// Subset constructions for catenation and star; results are minimized.
Dfa concat_dfa(const Dfa& left, const Dfa& right, const ExplorationConfig& cfg = {});
Dfa star_dfa(const Dfa& d, const ExplorationConfig& cfg = {});

/// Minimal DFA of the reversed language: transitions reversed, accepting
/// states as the initial subset, subset construction, minimization.
Dfa reverse(const Dfa& d, const ExplorationConfig& cfg = {});

/// Language equality by pair exploration. Throws AlphabetError on mismatched alphabets.
bool equivalent(const Dfa& a, const Dfa& b);

/// Text format:
///   dfa <state_count> <letters>
///   initial <id>
///   accepting <id>...
///   <id>: <target per letter>...
Dfa parse_dfa(std::string_view text);
std::string to_text(const Dfa& d);

/// An operand given either as an expression or as an automaton.
using Language = std::variant<Regex, Dfa>;

/// Minimal DFA of a language over `alphabet`. Throws AlphabetError if a regex
/// uses a foreign letter or a DFA is over a different alphabet.
Dfa dfa_of(const Language& lang, const Alphabet& alphabet, const ExplorationConfig& cfg = {});

} // namespace quotient
