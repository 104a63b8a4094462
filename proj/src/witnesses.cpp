#include "quotient/witnesses.hpp"

#include <functional>
#include <map>
#include <numeric>

#include "quotient/error.hpp"

namespace quotient {

namespace {

std::string power(const std::string& base, Count k) {
	if (k == 0)
		return "_";
	std::string out;
	for (Count i = 0; i < k; ++i)
		out += "(" + base + ")";
	return out;
}

void require(bool condition, const std::string& family, const char* range) {
	if (!condition)
		throw RangeError("family '" + family + "' requires " + range);
}

std::string counting_text(char letter, Count residue, Count modulus) {
	return "|w|_" + std::string(1, letter) + " = " + std::to_string(residue) + " (mod " + std::to_string(modulus) +
	       ")";
}

struct Family {
	std::size_t arity;
	std::function<void(WitnessCase&)> fill;
};

void add_regex(WitnessCase& c, const std::string& text, Count kappa) {
	c.operands.emplace_back(parse(text, c.alphabet));
	c.operand_text.push_back(text);
	c.expected_operand_kappas.push_back(kappa);
}

void add_counter(WitnessCase& c, char letter, Count residue, Count modulus) {
	c.operands.emplace_back(modular_counting_dfa(letter, residue, modulus, c.alphabet));
	c.operand_text.push_back(counting_text(letter, residue, modulus));
	c.expected_operand_kappas.push_back(modulus);
}

const std::map<std::string, Family>& families() {
	static const std::map<std::string, Family> table = {
		{"union.binary",
		 {2,
		  [](WitnessCase& c) {
			  const Count m = c.params[0], n = c.params[1];
			  require(m >= 2 && n >= 2, c.family, "m, n >= 2");
			  add_counter(c, 'a', m - 1, m);
			  add_counter(c, 'b', n - 1, n);
			  c.operation = Operation::Union;
			  c.expected_result_kappa = bound_boolean(m, n);
		  }}},
		{"intersection.binary",
		 {2,
		  [](WitnessCase& c) {
			  const Count m = c.params[0], n = c.params[1];
			  require(m >= 2 && n >= 2, c.family, "m, n >= 2");
			  add_counter(c, 'a', 0, m);
			  add_counter(c, 'b', 0, n);
			  c.operation = Operation::Intersection;
			  c.expected_result_kappa = bound_boolean(m, n);
		  }}},
		{"difference.binary",
		 {2,
		  [](WitnessCase& c) {
			  const Count m = c.params[0], n = c.params[1];
			  require(m >= 2 && n >= 2, c.family, "m, n >= 2");
			  add_counter(c, 'a', 0, m);
			  c.operands.emplace_back(complement_dfa(modular_counting_dfa('b', 0, n, c.alphabet)));
			  c.operand_text.push_back("not " + counting_text('b', 0, n));
			  c.expected_operand_kappas.push_back(n);
			  c.operation = Operation::Difference;
			  c.expected_result_kappa = bound_boolean(m, n);
		  }}},
		{"symdiff.binary",
		 {2,
		  [](WitnessCase& c) {
			  const Count m = c.params[0], n = c.params[1];
			  require(m >= 1 && n >= 1, c.family, "m, n >= 1");
			  add_regex(c, power("b*a", m - 1) + "(a|b)*", m);
			  add_regex(c, power("a*b", n - 1) + "(a|b)*", n);
			  c.operation = Operation::SymDiff;
			  c.expected_result_kappa = bound_boolean(m, n);
		  }}},
		{"union.unary",
		 {2,
		  [](WitnessCase& c) {
			  const Count m = c.params[0], n = c.params[1];
			  require(m >= 2 && n >= 2 && std::gcd(m, n) == 1, c.family, "coprime m, n >= 2");
			  c.alphabet = Alphabet("a");
			  add_regex(c, "(" + power("a", m) + ")*", m);
			  add_regex(c, "(" + power("a", n) + ")*", n);
			  c.operation = Operation::Union;
			  c.expected_result_kappa = bound_boolean(m, n);
		  }}},
		{"product.unary",
		 {2,
		  [](WitnessCase& c) {
			  const Count m = c.params[0], n = c.params[1];
			  require(m >= 2 && n >= 2 && std::gcd(m, n) == 1, c.family, "coprime m, n >= 2");
			  c.alphabet = Alphabet("a");
			  add_regex(c, "(" + power("a", m) + ")*" + power("a", m - 1), m);
			  add_regex(c, "(" + power("a", n) + ")*" + power("a", n - 1), n);
			  c.operation = Operation::Product;
			  c.expected_result_kappa = bound_boolean(m, n);
		  }}},
		{"product.binary",
		 {2,
		  [](WitnessCase& c) {
			  const Count m = c.params[0], n = c.params[1];
			  require(m >= 2 && n >= 2, c.family, "m, n >= 2");
			  add_counter(c, 'a', m - 1, m);
			  add_regex(c, power("a*b", n - 2) + "(a|b)(b|a(a|b))*", n);
			  c.operation = Operation::Product;
			  c.expected_result_kappa = bound_product(m, n, 1, 1);
		  }}},
		{"star.binary",
		 {1,
		  [](WitnessCase& c) {
			  const Count n = c.params[0];
			  require(n >= 3, c.family, "n >= 3");
			  add_regex(c, "(b|a" + power("a|b", n - 1) + ")*a" + power("a|b", n - 2), n);
			  c.operation = Operation::Star;
			  c.expected_result_kappa = bound_star(n, 1, false);
		  }}},
		{"star.binary.n2",
		 {0,
		  [](WitnessCase& c) {
			  add_counter(c, 'a', 1, 2);
			  c.operation = Operation::Star;
			  c.expected_result_kappa = 3;
		  }}},
		{"star.unary",
		 {1,
		  [](WitnessCase& c) {
			  const Count n = c.params[0];
			  require(n >= 2, c.family, "n >= 2");
			  c.alphabet = Alphabet("a");
			  add_regex(c, "(" + power("a", n) + ")*" + power("a", n - 1), n);
			  c.operation = Operation::Star;
			  c.expected_result_kappa = n * n - 2 * n + 2;
		  }}},
		{"suffixfree.union.binary",
		 {2,
		  [](WitnessCase& c) {
			  const Count m = c.params[0], n = c.params[1];
			  require(m >= 4 && n >= 4, c.family, "m, n >= 4");
			  add_regex(c, "a(" + power("ba*", m - 3) + "b)*" + power("ba*", m - 3), m);
			  add_regex(c, "a(" + power("a|b", n - 3) + "b)*" + power("a|b", n - 3), n);
			  c.operation = Operation::Union;
			  c.expected_result_kappa = bound_suffixfree_or_finite_boolean(m, n);
		  }}},
		{"suffixfree.intersection.marked",
		 {2,
		  [](WitnessCase& c) {
			  const Count m = c.params[0], n = c.params[1];
			  require(m >= 3 && n >= 3, c.family, "m, n >= 3");
			  c.alphabet = Alphabet("abc");
			  const Alphabet body("ab");
			  add_regex(c, "c(" + to_string(modular_counting_regex('a', 0, m - 2, body)) + ")", m);
			  add_regex(c, "c(" + to_string(modular_counting_regex('b', 0, n - 2, body)) + ")", n);
			  c.operation = Operation::Intersection;
			  c.expected_result_kappa = bound_suffixfree_intersection(m, n);
		  }}},
	};
	return table;
}

const Family& find_family(const std::string& family) {
	auto it = families().find(family);
	if (it == families().end())
		throw RangeError("unknown witness family '" + family + "'");
	return it->second;
}

} // namespace

std::vector<std::string> witness_families() {
	return {"union.binary",   "intersection.binary", "difference.binary", "symdiff.binary",
	        "union.unary",    "product.unary",       "product.binary",    "star.binary",
	        "star.binary.n2", "star.unary",          "suffixfree.union.binary", "suffixfree.intersection.marked"};
}

std::size_t witness_arity(const std::string& family) { return find_family(family).arity; }

WitnessCase witness(const std::string& family, const std::vector<Count>& params) {
	const Family& f = find_family(family);
	if (params.size() != f.arity)
		throw RangeError("family '" + family + "' takes " + std::to_string(f.arity) + " parameter(s), got " +
		                 std::to_string(params.size()));
	for (Count p : params)
		if (p > 4096)
			throw RangeError("parameter " + std::to_string(p) + " too large");
	WitnessCase c;
	c.family = family;
	c.params = params;
	f.fill(c);
	return c;
}

Dfa modular_counting_dfa(char letter, Count residue, Count modulus, const Alphabet& alphabet) {
	if (modulus < 1 || residue < 0 || residue >= modulus)
		throw RangeError("residue must lie in [0, modulus) with modulus >= 1");
	const auto index = alphabet.index_of(letter);
	if (!index)
		throw AlphabetError(std::string("letter '") + letter + "' is not in the alphabet");
	const std::size_t k = alphabet.size();
	std::vector<State> transitions(static_cast<std::size_t>(modulus) * k);
	std::vector<bool> accepting(static_cast<std::size_t>(modulus), false);
	for (State q = 0; q < modulus; ++q) {
		for (std::size_t a = 0; a < k; ++a)
			transitions[q * k + a] = a == *index ? static_cast<State>((q + 1) % modulus) : q;
		accepting[q] = q == residue;
	}
	return Dfa(alphabet, 0, std::move(transitions), std::move(accepting));
}

Regex modular_counting_regex(char letter, Count residue, Count modulus, const Alphabet& alphabet) {
	if (modulus < 1 || residue < 0 || residue >= modulus)
		throw RangeError("residue must lie in [0, modulus) with modulus >= 1");
	if (!alphabet.contains(letter))
		throw AlphabetError(std::string("letter '") + letter + "' is not in the alphabet");
	std::string others;
	for (char c : alphabet)
		if (c != letter)
			others += others.empty() ? std::string(1, c) : std::string("|") + c;
	const std::string filler = others.empty() ? "_" : "(" + others + ")*";
	const std::string step = filler + letter;
	return parse("(" + power(step, modulus) + ")*" + power(step, residue) + filler, alphabet);
}

} // namespace quotient
