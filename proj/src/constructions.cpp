#include <algorithm>
#include <deque>
#include <map>

#include "quotient/automata.hpp"
#include "quotient/error.hpp"

namespace quotient {

namespace {

void require_same_alphabet(const Dfa& a, const Dfa& b) {
	if (!(a.alphabet() == b.alphabet()))
		throw AlphabetError("automata over different alphabets {" + a.alphabet().letters() + "} and {" +
		                    b.alphabet().letters() + "}");
}

using Subset = std::vector<State>;

void normalize_subset(Subset& s) {
	std::sort(s.begin(), s.end());
	s.erase(std::unique(s.begin(), s.end()), s.end());
}

bool meets_accepting(const Dfa& d, const Subset& s) {
	return std::any_of(s.begin(), s.end(), [&](State q) { return d.accepting(q); });
}

// Generic breadth-first determinization over hashable keys; `step` maps a key
// and letter index to the successor key, `accept` decides acceptance.
template <typename Key, typename Step, typename Accept>
Dfa explore(const Alphabet& alphabet, Key start, Step step, Accept accept, const ExplorationConfig& cfg,
            const char* what) {
	const std::size_t k = alphabet.size();
	std::map<Key, State> ids;
	std::vector<const Key*> keys;
	std::vector<State> transitions;
	auto intern = [&](Key key) -> State {
		auto [it, inserted] = ids.try_emplace(std::move(key), static_cast<State>(keys.size()));
		if (inserted) {
			if (keys.size() >= cfg.max_states)
				throw CapExceeded(std::string(what) + " exceeded " + std::to_string(cfg.max_states) + " states");
			keys.push_back(&it->first);
		}
		return it->second;
	};
	intern(std::move(start));
	for (std::size_t q = 0; q < keys.size(); ++q) {
		transitions.resize((q + 1) * k);
		for (std::size_t a = 0; a < k; ++a)
			transitions[q * k + a] = intern(step(*keys[q], a));
	}
	std::vector<bool> accepting(keys.size());
	for (std::size_t q = 0; q < keys.size(); ++q)
		accepting[q] = accept(*keys[q]);
	return Dfa(alphabet, 0, std::move(transitions), std::move(accepting));
}

} // namespace

Dfa product_dfa(const Dfa& left, const Dfa& right, BoolOp op) {
	require_same_alphabet(left, right);
	using Pair = std::pair<State, State>;
	ExplorationConfig unlimited{left.state_count() * right.state_count()};
	return explore(
		left.alphabet(), Pair{left.initial(), right.initial()},
		[&](const Pair& p, std::size_t a) { return Pair{left.next(p.first, a), right.next(p.second, a)}; },
		[&](const Pair& p) { return apply(op, left.accepting(p.first), right.accepting(p.second)); }, unlimited,
		"product construction");
}

Dfa complement_dfa(const Dfa& d) {
	std::vector<State> transitions;
	transitions.reserve(d.state_count() * d.alphabet().size());
	std::vector<bool> accepting(d.state_count());
	for (State q = 0; q < d.state_count(); ++q) {
		auto row = d.row(q);
		transitions.insert(transitions.end(), row.begin(), row.end());
		accepting[q] = !d.accepting(q);
	}
	return Dfa(d.alphabet(), d.initial(), std::move(transitions), std::move(accepting), d.labels());
}

Dfa concat_dfa(const Dfa& left, const Dfa& right, const ExplorationConfig& cfg) {
	require_same_alphabet(left, right);
	// (state of left, set of right states started after a left-accepted prefix)
	using Key = std::pair<State, Subset>;
	Key start{left.initial(), {}};
	if (left.accepting(left.initial()))
		start.second.push_back(right.initial());
	Dfa d = explore(
		left.alphabet(), std::move(start),
		[&](const Key& key, std::size_t a) {
			Key out{left.next(key.first, a), {}};
			for (State q : key.second)
				out.second.push_back(right.next(q, a));
			if (left.accepting(out.first))
				out.second.push_back(right.initial());
			normalize_subset(out.second);
			return out;
		},
		[&](const Key& key) { return meets_accepting(right, key.second); }, cfg, "catenation construction");
	return minimize(d);
}

Dfa star_dfa(const Dfa& d, const ExplorationConfig& cfg) {
	// The flag marks the fresh initial state, which accepts the empty word.
	using Key = std::pair<bool, Subset>;
	Dfa out = explore(
		d.alphabet(), Key{true, {d.initial()}},
		[&](const Key& key, std::size_t a) {
			Key next{false, {}};
			for (State q : key.second)
				next.second.push_back(d.next(q, a));
			if (meets_accepting(d, next.second))
				next.second.push_back(d.initial());
			normalize_subset(next.second);
			return next;
		},
		[&](const Key& key) { return key.first || meets_accepting(d, key.second); }, cfg, "star construction");
	return minimize(out);
}

Dfa reverse(const Dfa& d, const ExplorationConfig& cfg) {
	const std::size_t n = d.state_count();
	const std::size_t k = d.alphabet().size();
	std::vector<std::vector<State>> predecessors(n * k);
	for (State p = 0; p < n; ++p)
		for (std::size_t a = 0; a < k; ++a)
			predecessors[d.next(p, a) * k + a].push_back(p);

	Subset start;
	for (State q = 0; q < n; ++q)
		if (d.accepting(q))
			start.push_back(q);
	Dfa out = explore(
		d.alphabet(), std::move(start),
		[&](const Subset& s, std::size_t a) {
			Subset next;
			for (State q : s) {
				const auto& pre = predecessors[q * k + a];
				next.insert(next.end(), pre.begin(), pre.end());
			}
			normalize_subset(next);
			return next;
		},
		[&](const Subset& s) { return std::binary_search(s.begin(), s.end(), d.initial()); }, cfg,
		"reversal subset construction");
	return minimize(out);
}

bool equivalent(const Dfa& a, const Dfa& b) {
	require_same_alphabet(a, b);
	const std::size_t k = a.alphabet().size();
	std::vector<bool> seen(a.state_count() * b.state_count(), false);
	std::deque<std::pair<State, State>> queue{{a.initial(), b.initial()}};
	seen[a.initial() * b.state_count() + b.initial()] = true;
	while (!queue.empty()) {
		auto [p, q] = queue.front();
		queue.pop_front();
		if (a.accepting(p) != b.accepting(q))
			return false;
		for (std::size_t i = 0; i < k; ++i) {
			const State p2 = a.next(p, i), q2 = b.next(q, i);
			const std::size_t key = p2 * b.state_count() + q2;
			if (!seen[key]) {
				seen[key] = true;
				queue.emplace_back(p2, q2);
			}
		}
	}
	return true;
}

} // namespace quotient
