#include <algorithm>
#include <deque>

#include "quotient/error.hpp"
#include "quotient/verify.hpp"

namespace quotient {

namespace {

std::size_t below(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

Regex random_letter(std::mt19937_64& rng, const Alphabet& alphabet) {
	return Regex::letter(alphabet[below(rng, alphabet.size())]);
}

// Weights out of 200: letter 80, union 40, concatenation 40, star 20, and 5
// for each of complement, intersection, difference, symmetric difference.
// The root is never a letter unless the budget is zero.
Regex grow(std::mt19937_64& rng, std::size_t budget, const Alphabet& alphabet, bool root = false) {
	if (budget == 0)
		return random_letter(rng, alphabet);
	const std::size_t pick = root ? 80 + below(rng, 120) : below(rng, 200);
	if (pick < 80)
		return random_letter(rng, alphabet);
	if (pick >= 160 && pick < 180)
		return Regex::raw(Kind::Star, {grow(rng, budget - 1, alphabet)});
	if (pick >= 180 && pick < 185)
		return Regex::raw(Kind::Complement, {grow(rng, budget - 1, alphabet)});

	const std::size_t left_budget = below(rng, budget);
	Regex left = grow(rng, left_budget, alphabet);
	Regex right = grow(rng, budget - 1 - left_budget, alphabet);
	Kind kind;
	if (pick < 120)
		kind = Kind::Union;
	else if (pick < 160)
		kind = Kind::Concat;
	else if (pick < 190)
		kind = Kind::Intersect;
	else if (pick < 195)
		kind = Kind::Diff;
	else
		kind = Kind::SymDiff;
	return Regex::raw(kind, {std::move(left), std::move(right)});
}

} // namespace

Regex random_regex(std::mt19937_64& rng, std::size_t size, const Alphabet& alphabet) {
	if (size == 0)
		throw RangeError("regex size must be at least 1");
	return normalize(grow(rng, size, alphabet, true));
}

Dfa random_dfa(std::mt19937_64& rng, std::size_t max_states, const Alphabet& alphabet) {
	if (max_states == 0)
		throw RangeError("a DFA needs at least one state");
	const std::size_t n = 1 + below(rng, max_states);
	const std::size_t k = alphabet.size();
	std::vector<State> transitions(n * k);
	std::vector<bool> accepting(n);
	for (State q = 0; q < n; ++q) {
		const std::size_t shape = q == 0 ? 2 + below(rng, 6) : below(rng, 8);
		if (shape < 2) {
			// sink: the empty or the universal quotient
			for (std::size_t a = 0; a < k; ++a)
				transitions[q * k + a] = q;
			accepting[q] = shape == 1;
			continue;
		}
		const State funnel = static_cast<State>(below(rng, n));
		for (std::size_t a = 0; a < k; ++a)
			transitions[q * k + a] = shape == 2 ? funnel : static_cast<State>(below(rng, n));
		accepting[q] = below(rng, 2) == 1;
	}

	// Hang each state below an earlier non-sink state on a free transition.
	std::vector<bool> tree_edge(n * k, false);
	for (State q = 1; q < n; ++q) {
		std::vector<std::size_t> slots;
		for (State p = 0; p < q; ++p) {
			const bool sink = std::all_of(transitions.begin() + p * k, transitions.begin() + (p + 1) * k,
			                              [&](State t) { return t == p; });
			for (std::size_t a = 0; a < k && !sink; ++a)
				if (!tree_edge[p * k + a])
					slots.push_back(p * k + a);
		}
		if (slots.empty())
			continue;
		const std::size_t slot = slots[below(rng, slots.size())];
		transitions[slot] = q;
		tree_edge[slot] = true;
	}

	// Keep the part reachable from state 0, numbered in discovery order.
	std::vector<State> id(n, static_cast<State>(n));
	std::vector<State> order{0};
	id[0] = 0;
	for (std::size_t i = 0; i < order.size(); ++i)
		for (std::size_t a = 0; a < k; ++a) {
			const State t = transitions[order[i] * k + a];
			if (id[t] == n) {
				id[t] = static_cast<State>(order.size());
				order.push_back(t);
			}
		}
	std::vector<State> kept_transitions;
	std::vector<bool> kept_accepting;
	for (State q : order) {
		for (std::size_t a = 0; a < k; ++a)
			kept_transitions.push_back(id[transitions[q * k + a]]);
		kept_accepting.push_back(accepting[q]);
	}
	return Dfa(alphabet, 0, std::move(kept_transitions), std::move(kept_accepting));
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
	std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
	                  static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
	return std::mt19937_64(seq);
}

} // namespace quotient
