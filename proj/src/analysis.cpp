#include "quotient/analysis.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace quotient {

UrTree unique_reachable(const Dfa& d) {
	const std::size_t n = d.state_count();
	const std::size_t k = d.alphabet().size();
	std::vector<std::size_t> indegree(n, 0);
	for (State p = 0; p < n; ++p)
		for (State t : d.row(p))
			++indegree[t];

	UrTree tree;
	if (indegree[d.initial()] != 0)
		return tree;
	tree.emplace(d.initial(), std::string{});
	std::deque<State> queue{d.initial()};
	while (!queue.empty()) {
		const State p = queue.front();
		queue.pop_front();
		const std::string& word = tree.at(p);
		for (std::size_t a = 0; a < k; ++a) {
			const State q = d.next(p, a);
			// the single incoming transition of q is (p, a)
			if (indegree[q] == 1 && !tree.contains(q)) {
				tree.emplace(q, word + d.alphabet()[a]);
				queue.push_back(q);
			}
		}
	}
	return tree;
}

PairProfile shared_ur_count(const UrTree& left, const UrTree& right) {
	std::set<std::string> words;
	for (const auto& [q, w] : left)
		words.insert(w);
	PairProfile out;
	for (const auto& [q, w] : right)
		out.r += words.contains(w);
	return out;
}

namespace {

bool all_to(const Dfa& d, State q, State target) {
	auto row = d.row(q);
	return std::all_of(row.begin(), row.end(), [&](State t) { return t == target; });
}

} // namespace

SpecialQuotients special_quotients(const Dfa& d) {
	SpecialQuotients s;
	std::vector<State> empties, universals;
	for (State q = 0; q < d.state_count(); ++q) {
		if (!all_to(d, q, q))
			continue;
		(d.accepting(q) ? universals : empties).push_back(q);
	}
	s.empty = !empties.empty();
	s.universal = !universals.empty();
	for (State q = 0; q < d.state_count(); ++q) {
		if (d.accepting(q)) {
			for (State e : empties)
				s.epsilon = s.epsilon || all_to(d, q, e);
		} else {
			for (State u : universals)
				s.sigma_plus = s.sigma_plus || all_to(d, q, u);
		}
	}
	return s;
}

bool is_suffix_free(const Dfa& d) {
	const std::size_t n = d.state_count();
	const std::size_t k = d.alphabet().size();
	std::vector<bool> after_letter(n, false);
	for (State p = 0; p < n; ++p)
		for (State t : d.row(p))
			after_letter[t] = true;

	// Some x lies in both L(q) and L, for q reached by a non-empty word, iff a
	// pair of accepting states is reachable from one of the pairs (q, initial).
	std::vector<bool> seen(n * n, false);
	std::deque<std::pair<State, State>> queue;
	for (State q = 0; q < n; ++q)
		if (after_letter[q]) {
			seen[q * n + d.initial()] = true;
			queue.emplace_back(q, d.initial());
		}
	while (!queue.empty()) {
		auto [x, y] = queue.front();
		queue.pop_front();
		if (d.accepting(x) && d.accepting(y))
			return false;
		for (std::size_t a = 0; a < k; ++a) {
			const State x2 = d.next(x, a), y2 = d.next(y, a);
			if (!seen[x2 * n + y2]) {
				seen[x2 * n + y2] = true;
				queue.emplace_back(x2, y2);
			}
		}
	}
	return true;
}

bool is_finite(const Dfa& d) {
	const std::size_t n = d.state_count();
	// Co-reachability of acceptance.
	std::vector<std::vector<State>> preds(n);
	for (State p = 0; p < n; ++p)
		for (State t : d.row(p))
			preds[t].push_back(p);
	std::vector<bool> useful(n, false);
	std::deque<State> queue;
	for (State q = 0; q < n; ++q)
		if (d.accepting(q)) {
			useful[q] = true;
			queue.push_back(q);
		}
	while (!queue.empty()) {
		const State q = queue.front();
		queue.pop_front();
		for (State p : preds[q])
			if (!useful[p]) {
				useful[p] = true;
				queue.push_back(p);
			}
	}

	// Kahn's algorithm on the useful subgraph.
	std::vector<std::size_t> indegree(n, 0);
	std::size_t total = 0;
	for (State p = 0; p < n; ++p) {
		if (!useful[p])
			continue;
		++total;
		for (State t : d.row(p))
			if (useful[t])
				++indegree[t];
	}
	for (State q = 0; q < n; ++q)
		if (useful[q] && indegree[q] == 0)
			queue.push_back(q);
	std::size_t removed = 0;
	while (!queue.empty()) {
		const State q = queue.front();
		queue.pop_front();
		++removed;
		for (State t : d.row(q))
			if (useful[t] && --indegree[t] == 0)
				queue.push_back(t);
	}
	return removed == total;
}

ComplexityProfile profile(const Dfa& d) {
	ComplexityProfile p;
	p.kappa = d.state_count();
	p.accepting_count = d.accepting_count();
	p.initial_accepting = d.accepting(d.initial());
	const SpecialQuotients s = special_quotients(d);
	p.has_empty_quotient = s.empty;
	p.has_universal_quotient = s.universal;
	p.has_epsilon_quotient = s.epsilon;
	p.has_sigma_plus_quotient = s.sigma_plus;
	p.ur_tree = unique_reachable(d);
	for (const auto& [q, w] : p.ur_tree)
		(d.accepting(q) ? p.ur_accepting_count : p.ur_rejecting_count) += 1;
	p.is_suffix_free = is_suffix_free(d);
	p.is_finite = is_finite(d);
	p.is_empty_language = p.accepting_count == 0;
	return p;
}

} // namespace quotient
