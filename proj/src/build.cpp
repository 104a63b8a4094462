#include <deque>
#include <unordered_map>

#include "quotient/automata.hpp"
#include "quotient/error.hpp"

namespace quotient {

Dfa build_dfa(const Regex& r, const Alphabet& alphabet, const ExplorationConfig& cfg) {
	for (char c : letters_of(r))
		if (!alphabet.contains(c))
			throw AlphabetError(std::string("letter '") + c + "' is not in alphabet {" + alphabet.letters() + "}");

	const std::size_t k = alphabet.size();
	std::unordered_map<Regex, State, RegexHash> ids;
	std::vector<Regex> labels;
	std::vector<State> transitions;

	auto intern = [&](Regex d) -> State {
		auto [it, inserted] = ids.try_emplace(d, static_cast<State>(labels.size()));
		if (inserted) {
			if (labels.size() >= cfg.max_states)
				throw CapExceeded("derivative exploration exceeded " + std::to_string(cfg.max_states) + " states");
			labels.push_back(std::move(d));
		}
		return it->second;
	};

	intern(normalize(r));
	// labels doubles as the BFS queue: state q is expanded when the cursor reaches it.
	for (std::size_t q = 0; q < labels.size(); ++q) {
		transitions.resize((q + 1) * k);
		for (std::size_t a = 0; a < k; ++a) {
			const Regex d = derive(labels[q], alphabet[a]);
			transitions[q * k + a] = intern(d);
		}
	}

	std::vector<bool> accepting(labels.size());
	for (std::size_t q = 0; q < labels.size(); ++q)
		accepting[q] = labels[q].nullable();
	return Dfa(alphabet, 0, std::move(transitions), std::move(accepting), std::move(labels));
}

std::size_t kappa(const Regex& r, const Alphabet& alphabet, const ExplorationConfig& cfg) {
	return minimize(build_dfa(r, alphabet, cfg)).state_count();
}

Dfa dfa_of(const Language& lang, const Alphabet& alphabet, const ExplorationConfig& cfg) {
	if (const auto* r = std::get_if<Regex>(&lang))
		return minimize(build_dfa(*r, alphabet, cfg));
	const Dfa& d = std::get<Dfa>(lang);
	if (!(d.alphabet() == alphabet))
		throw AlphabetError("automaton alphabet {" + d.alphabet().letters() + "} differs from {" +
		                    alphabet.letters() + "}");
	return minimize(d);
}

} // namespace quotient
