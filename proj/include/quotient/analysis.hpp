#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "quotient/automata.hpp"

namespace quotient {

/// Map from a uniquely reachable state to the only word reaching it.
using UrTree = std::map<State, std::string>;

struct SpecialQuotients {
	bool empty = false;      // the quotient @
	bool universal = false;  // Sigma*
	bool epsilon = false;    // {_}
	bool sigma_plus = false; // Sigma+
};

/// Structural measurements of a language, taken on its minimal DFA.
struct ComplexityProfile {
	std::size_t kappa = 0;
	std::size_t accepting_count = 0;
	bool initial_accepting = false;
	bool has_empty_quotient = false;
	bool has_universal_quotient = false;
	bool has_epsilon_quotient = false;
	bool has_sigma_plus_quotient = false;
	UrTree ur_tree;
	std::size_t ur_accepting_count = 0; // t
	std::size_t ur_rejecting_count = 0; // s
	bool is_suffix_free = false;
	bool is_finite = false;
	bool is_empty_language = false;

	SpecialQuotients special() const noexcept {
		return {has_empty_quotient, has_universal_quotient, has_epsilon_quotient, has_sigma_plus_quotient};
	}
};

struct PairProfile {
	/// Words w for which both quotients by w are uniquely reachable.
	std::size_t r = 0;
};

/// `d` must be minimal.
ComplexityProfile profile(const Dfa& d);

/// In-degree tree: the initial state qualifies iff nothing enters it; any
/// other state iff exactly one transition enters it and that transition
/// leaves a qualifying state.
UrTree unique_reachable(const Dfa& d);

PairProfile shared_ur_count(const UrTree& left, const UrTree& right);

/// Exact on a minimal complete DFA.
SpecialQuotients special_quotients(const Dfa& d);

/// True iff no word of the language is a proper suffix of another; vacuously
/// true for the empty language.
bool is_suffix_free(const Dfa& d);

/// True iff the states that can reach acceptance induce an acyclic graph.
bool is_finite(const Dfa& d);

} // namespace quotient
