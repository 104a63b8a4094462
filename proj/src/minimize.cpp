#include <deque>
#include <map>

#include "quotient/automata.hpp"

namespace quotient {

// Moore-style partition refinement: states start split by acceptance and a
// block is split whenever its members disagree on the blocks of their
// successors. Stops when a round creates no new block.
Dfa minimize(const Dfa& d) {
	const std::size_t n = d.state_count();
	const std::size_t k = d.alphabet().size();

	std::vector<State> block(n);
	std::size_t blocks = 0;
	{
		State acc_id = 0, rej_id = 0;
		bool has_acc = false, has_rej = false;
		for (State q = 0; q < n; ++q) {
			if (d.accepting(q)) {
				if (!has_acc) {
					acc_id = static_cast<State>(blocks++);
					has_acc = true;
				}
				block[q] = acc_id;
			} else {
				if (!has_rej) {
					rej_id = static_cast<State>(blocks++);
					has_rej = true;
				}
				block[q] = rej_id;
			}
		}
	}

	std::vector<State> signature(k + 1);
	std::vector<State> refined(n);
	while (true) {
		std::map<std::vector<State>, State> ids;
		for (State q = 0; q < n; ++q) {
			signature[0] = block[q];
			for (std::size_t a = 0; a < k; ++a)
				signature[a + 1] = block[d.next(q, a)];
			auto [it, inserted] = ids.try_emplace(signature, static_cast<State>(ids.size()));
			refined[q] = it->second;
		}
		const std::size_t count = ids.size();
		block.swap(refined);
		if (count == blocks)
			break;
		blocks = count;
	}

	// Canonical numbering: breadth-first from the initial block, letters in order.
	std::vector<State> representative(blocks, static_cast<State>(n));
	for (State q = 0; q < n; ++q)
		if (representative[block[q]] == n)
			representative[block[q]] = q;

	constexpr State unset = ~State{0};
	std::vector<State> order(blocks, unset);
	std::vector<State> by_order;
	std::deque<State> queue{block[d.initial()]};
	order[block[d.initial()]] = 0;
	by_order.push_back(block[d.initial()]);
	while (!queue.empty()) {
		const State b = queue.front();
		queue.pop_front();
		for (std::size_t a = 0; a < k; ++a) {
			const State t = block[d.next(representative[b], a)];
			if (order[t] == unset) {
				order[t] = static_cast<State>(by_order.size());
				by_order.push_back(t);
				queue.push_back(t);
			}
		}
	}

	const std::size_t m = by_order.size();
	std::vector<State> transitions(m * k);
	std::vector<bool> accepting(m);
	std::vector<Regex> labels;
	for (State i = 0; i < m; ++i) {
		const State rep = representative[by_order[i]];
		for (std::size_t a = 0; a < k; ++a)
			transitions[i * k + a] = order[block[d.next(rep, a)]];
		accepting[i] = d.accepting(rep);
		if (d.has_labels())
			labels.push_back(d.labels()[rep]);
	}
	return Dfa(d.alphabet(), 0, std::move(transitions), std::move(accepting), std::move(labels));
}

} // namespace quotient
