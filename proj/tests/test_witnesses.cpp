#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"
#include "quotient/error.hpp"
#include "quotient/verify.hpp"

using namespace quotient;

namespace {

const Alphabet ab("ab");

std::size_t operand_kappa(const WitnessCase& w, std::size_t i) { return dfa_of(w.operands[i], w.alphabet).state_count(); }

} // namespace

TEST_CASE("modular counting automata") {
	const Dfa parity = modular_counting_dfa('a', 1, 2, ab);
	CHECK(parity.state_count() == 2);
	CHECK(parity.accepts("bab"));
	CHECK_FALSE(parity.accepts("aa"));

	const Dfa three = modular_counting_dfa('a', 2, 3, ab);
	CHECK(three.state_count() == 3);
	for (State q = 0; q < 3; ++q) {
		CHECK(three.next(q, 0) == (q + 1) % 3);
		CHECK(three.next(q, 1) == q);
		CHECK(three.accepting(q) == (q == 2));
	}
	CHECK(minimize(modular_counting_dfa('b', 0, 4, ab)).state_count() == 4);

	CHECK_THROWS_AS(modular_counting_dfa('a', 3, 3, ab), RangeError);
	CHECK_THROWS_AS(modular_counting_dfa('a', 0, 0, ab), RangeError);
	CHECK_THROWS_AS(modular_counting_dfa('c', 0, 2, ab), AlphabetError);
}

TEST_CASE("modular counting regexes match the automata and the definition") {
	for (const std::string letters : {"a", "ab", "abc"}) {
		const Alphabet alphabet(letters);
		for (Count modulus = 1; modulus <= 5; ++modulus)
			for (Count residue = 0; residue < modulus; ++residue) {
				const Regex r = modular_counting_regex('a', residue, modulus, alphabet);
				const Dfa d = modular_counting_dfa('a', residue, modulus, alphabet);
				INFO(letters, " ", residue, " mod ", modulus, ": ", to_string(r));
				CHECK(equivalent(build_dfa(r, alphabet), d));
				oracle::Membership member(r);
				for (const std::string& w : oracle::words(letters, 5)) {
					const auto count = static_cast<Count>(std::count(w.begin(), w.end(), 'a'));
					REQUIRE(member(w) == (count % modulus == residue));
				}
			}
	}
}

TEST_CASE("witness examples") {
	const WitnessCase u = witness("union.binary", {3, 3});
	CHECK(u.expected_operand_kappas == std::vector<Count>{3, 3});
	CHECK(u.expected_result_kappa == 9);
	CHECK(u.operation == Operation::Union);
	CHECK(operand_kappa(u, 0) == 3);
	CHECK(operand_kappa(u, 1) == 3);

	CHECK(witness("star.binary", {3}).expected_result_kappa == 6);
	CHECK(witness("star.unary", {4}).expected_result_kappa == 10);
	CHECK(witness("star.binary.n2", {}).expected_result_kappa == 3);
	CHECK(witness("product.binary", {3, 3}).expected_result_kappa == 20);
	CHECK(witness("suffixfree.union.binary", {4, 4}).expected_result_kappa == 10);
	CHECK(witness("suffixfree.intersection.marked", {4, 4}).expected_result_kappa == 6);
	CHECK(witness("suffixfree.intersection.marked", {4, 4}).alphabet.letters() == "abc");
}

TEST_CASE("witness parameter ranges") {
	CHECK_THROWS_AS(witness("union.binary", {1, 3}), RangeError);
	CHECK_THROWS_AS(witness("union.binary", {3}), RangeError);
	CHECK_THROWS_AS(witness("union.unary", {2, 4}), RangeError);
	CHECK_THROWS_AS(witness("star.binary", {2}), RangeError);
	CHECK_THROWS_AS(witness("suffixfree.union.binary", {3, 4}), RangeError);
	CHECK_THROWS_AS(witness("no.such.family", {}), RangeError);
	CHECK(witness_arity("star.binary.n2") == 0);
	for (const std::string& family : witness_families())
		CHECK_NOTHROW(witness_arity(family));
}

TEST_CASE("printed operands parse to the generated operands") {
	const std::vector<std::pair<std::string, std::vector<Count>>> cases = {
		{"symdiff.binary", {3, 2}},         {"union.unary", {3, 4}},
		{"product.unary", {2, 5}},          {"star.binary", {4}},
		{"star.unary", {3}},                {"suffixfree.union.binary", {5, 4}},
		{"suffixfree.intersection.marked", {3, 5}},
	};
	for (const auto& [family, params] : cases) {
		const WitnessCase w = witness(family, params);
		for (std::size_t i = 0; i < w.operands.size(); ++i)
			CHECK(std::get<Regex>(w.operands[i]) == parse(w.operand_text[i], w.alphabet));
	}
}

TEST_CASE("operand complexities match the expected values") {
	for (const std::string& family : witness_families()) {
		const std::size_t arity = witness_arity(family);
		for (Count m = 2; m <= 5; ++m)
			for (Count n = 2; n <= (arity == 2 ? 5 : 2); ++n) {
				std::vector<Count> params;
				if (arity >= 1)
					params.push_back(arity == 2 ? m : m + 1);
				if (arity == 2)
					params.push_back(n);
				WitnessCase w;
				try {
					w = witness(family, params);
				} catch (const RangeError&) {
					continue;
				}
				for (std::size_t i = 0; i < w.operands.size(); ++i) {
					INFO(family, " operand ", i);
					CHECK(static_cast<Count>(operand_kappa(w, i)) == w.expected_operand_kappas[i]);
				}
			}
	}
}

TEST_CASE("structural claims") {
	for (Count n = 3; n <= 6; ++n) {
		const WitnessCase w = witness("star.binary", {n});
		CHECK(dfa_of(w.operands[0], w.alphabet).accepting_count() == 1);
	}
	for (Count m = 4; m <= 5; ++m)
		for (Count n = 4; n <= 5; ++n) {
			const WitnessCase w = witness("suffixfree.union.binary", {m, n});
			CHECK(is_suffix_free(dfa_of(w.operands[0], w.alphabet)));
			CHECK(is_suffix_free(dfa_of(w.operands[1], w.alphabet)));
		}
	for (Count m = 3; m <= 5; ++m) {
		const WitnessCase w = witness("suffixfree.intersection.marked", {m, 3});
		const Dfa k = dfa_of(w.operands[0], w.alphabet);
		CHECK(is_suffix_free(k));
		CHECK(static_cast<Count>(k.state_count()) == m);
		// {cw : |w|_a = 0 mod m-2}, checked on words directly
		oracle::Membership member(std::get<Regex>(w.operands[0]));
		for (const std::string& x : oracle::words("abc", 5)) {
			const bool expected = !x.empty() && x[0] == 'c' && x.find('c', 1) == std::string::npos &&
			                      std::count(x.begin(), x.end(), 'a') % (m - 2) == 0;
			REQUIRE(member(x) == expected);
		}
	}
}

TEST_CASE("difference witness uses the complement of the second counter") {
	const WitnessCase w = witness("difference.binary", {3, 4});
	const Dfa l = dfa_of(w.operands[1], w.alphabet);
	CHECK(l.accepts("b"));
	CHECK_FALSE(l.accepts("bbbb"));
}
