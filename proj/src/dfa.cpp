#include <charconv>
#include <deque>
#include <sstream>

#include "quotient/automata.hpp"
#include "quotient/error.hpp"

namespace quotient {

Dfa::Dfa(Alphabet alphabet, State initial, std::vector<State> transitions, std::vector<bool> accepting,
         std::vector<Regex> labels)
	: alphabet_(std::move(alphabet)), initial_(initial), transitions_(std::move(transitions)),
	  accepting_(std::move(accepting)), labels_(std::move(labels)) {
	const std::size_t n = accepting_.size();
	if (n == 0)
		throw FormatError("automaton needs at least one state");
	if (initial_ >= n)
		throw FormatError("initial state out of range");
	if (transitions_.size() != n * alphabet_.size())
		throw FormatError("transition table is not total");
	if (!labels_.empty() && labels_.size() != n)
		throw FormatError("one label per state expected");
	for (State t : transitions_)
		if (t >= n)
			throw FormatError("transition target " + std::to_string(t) + " out of range");

	std::vector<bool> seen(n, false);
	std::deque<State> queue{initial_};
	seen[initial_] = true;
	std::size_t reached = 1;
	while (!queue.empty()) {
		const State q = queue.front();
		queue.pop_front();
		for (State t : row(q))
			if (!seen[t]) {
				seen[t] = true;
				++reached;
				queue.push_back(t);
			}
	}
	if (reached != n) {
		for (State q = 0; q < n; ++q)
			if (!seen[q])
				throw FormatError("state " + std::to_string(q) + " is unreachable");
	}
}

std::size_t Dfa::accepting_count() const noexcept {
	std::size_t k = 0;
	for (bool f : accepting_)
		k += f;
	return k;
}

State Dfa::run(State q, std::string_view word) const {
	for (char c : word) {
		const auto i = alphabet_.index_of(c);
		if (!i)
			throw AlphabetError(std::string("letter '") + c + "' is not in alphabet {" + alphabet_.letters() + "}");
		q = next(q, *i);
	}
	return q;
}

std::string_view to_string(BoolOp op) noexcept {
	switch (op) {
	case BoolOp::Union: return "union";
	case BoolOp::Intersection: return "intersection";
	case BoolOp::Difference: return "difference";
	case BoolOp::SymDiff: return "symdiff";
	}
	return "?";
}

bool apply(BoolOp op, bool left, bool right) noexcept {
	switch (op) {
	case BoolOp::Union: return left || right;
	case BoolOp::Intersection: return left && right;
	case BoolOp::Difference: return left && !right;
	case BoolOp::SymDiff: return left != right;
	}
	return false;
}

Regex combine(BoolOp op, Regex left, Regex right) {
	switch (op) {
	case BoolOp::Union: return union_of({std::move(left), std::move(right)});
	case BoolOp::Intersection: return intersect_of({std::move(left), std::move(right)});
	case BoolOp::Difference: return diff_of(std::move(left), std::move(right));
	case BoolOp::SymDiff: return symdiff_of({std::move(left), std::move(right)});
	}
	return Regex::empty();
}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
	std::vector<std::string_view> out;
	std::size_t i = 0;
	while (i < line.size()) {
		while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
			++i;
		std::size_t j = i;
		while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
			++j;
		if (j > i)
			out.push_back(line.substr(i, j - i));
		i = j;
	}
	return out;
}

std::size_t parse_number(std::string_view s, std::size_t line_no) {
	std::size_t v = 0;
	auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
	if (ec != std::errc() || ptr != s.data() + s.size())
		throw FormatError("line " + std::to_string(line_no) + ": expected a number, got '" + std::string(s) + "'");
	return v;
}

} // namespace

Dfa parse_dfa(std::string_view text) {
	std::vector<std::pair<std::size_t, std::vector<std::string_view>>> lines;
	std::size_t line_no = 0;
	for (std::size_t start = 0; start <= text.size();) {
		std::size_t end = text.find('\n', start);
		if (end == std::string_view::npos)
			end = text.size();
		++line_no;
		auto words = split_words(text.substr(start, end - start));
		if (!words.empty())
			lines.emplace_back(line_no, std::move(words));
		start = end + 1;
	}
	if (lines.size() < 3)
		throw FormatError("expected header, initial and accepting lines");

	const auto& header = lines[0].second;
	if (header.size() != 3 || header[0] != "dfa")
		throw FormatError("line 1: expected 'dfa <state_count> <letters>'");
	const std::size_t n = parse_number(header[1], lines[0].first);
	if (n == 0)
		throw FormatError("line 1: state count must be positive");
	Alphabet alphabet{header[2]};

	const auto& init = lines[1].second;
	if (init.size() != 2 || init[0] != "initial")
		throw FormatError("line " + std::to_string(lines[1].first) + ": expected 'initial <id>'");
	const std::size_t initial = parse_number(init[1], lines[1].first);

	const auto& acc = lines[2].second;
	if (acc[0] != "accepting")
		throw FormatError("line " + std::to_string(lines[2].first) + ": expected 'accepting <ids>'");
	std::vector<bool> accepting(n, false);
	for (std::size_t i = 1; i < acc.size(); ++i) {
		const std::size_t q = parse_number(acc[i], lines[2].first);
		if (q >= n)
			throw FormatError("accepting state " + std::to_string(q) + " out of range");
		accepting[q] = true;
	}

	const std::size_t k = alphabet.size();
	std::vector<State> transitions(n * k, 0);
	std::vector<bool> defined(n, false);
	for (std::size_t li = 3; li < lines.size(); ++li) {
		const auto& [no, words] = lines[li];
		std::string_view id = words[0];
		if (id.empty() || id.back() != ':')
			throw FormatError("line " + std::to_string(no) + ": expected '<id>: <targets>'");
		const std::size_t q = parse_number(id.substr(0, id.size() - 1), no);
		if (q >= n)
			throw FormatError("line " + std::to_string(no) + ": state out of range");
		if (defined[q])
			throw FormatError("line " + std::to_string(no) + ": state " + std::to_string(q) + " defined twice");
		if (words.size() != k + 1)
			throw FormatError("line " + std::to_string(no) + ": expected " + std::to_string(k) + " targets");
		for (std::size_t a = 0; a < k; ++a) {
			const std::size_t t = parse_number(words[a + 1], no);
			if (t >= n)
				throw FormatError("line " + std::to_string(no) + ": target out of range");
			transitions[q * k + a] = static_cast<State>(t);
		}
		defined[q] = true;
	}
	for (std::size_t q = 0; q < n; ++q)
		if (!defined[q])
			throw FormatError("no transitions given for state " + std::to_string(q));
	return Dfa(std::move(alphabet), static_cast<State>(initial), std::move(transitions), std::move(accepting));
}

std::string to_text(const Dfa& d) {
	std::ostringstream out;
	out << "dfa " << d.state_count() << ' ' << d.alphabet().letters() << '\n';
	out << "initial " << d.initial() << '\n';
	out << "accepting";
	for (State q = 0; q < d.state_count(); ++q)
		if (d.accepting(q))
			out << ' ' << q;
	out << '\n';
	for (State q = 0; q < d.state_count(); ++q) {
		out << q << ':';
		for (State t : d.row(q))
			out << ' ' << t;
		out << '\n';
	}
	return out.str();
}

} // namespace quotient
