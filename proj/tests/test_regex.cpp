#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"
#include "quotient/error.hpp"
#include "quotient/verify.hpp"

using namespace quotient;

namespace {

const Alphabet ab("ab");

Regex p(std::string_view text) { return parse(text, ab); }

Regex a() { return Regex::letter('a'); }
Regex b() { return Regex::letter('b'); }

std::vector<Regex> sample_regexes(std::uint64_t seed, std::size_t count, std::size_t size) {
	std::vector<Regex> out;
	for (std::size_t i = 0; i < count; ++i) {
		auto rng = sample_rng(seed, i);
		out.push_back(random_regex(rng, size, ab));
	}
	return out;
}

} // namespace

TEST_CASE("alphabet") {
	CHECK(ab.size() == 2);
	CHECK(ab.index_of('b') == 1u);
	CHECK_FALSE(ab.contains('c'));
	CHECK(Alphabet("ba")[0] == 'b');
	CHECK_THROWS_AS(Alphabet(""), AlphabetError);
	CHECK_THROWS_AS(Alphabet("aa"), AlphabetError);
	CHECK_THROWS_AS(Alphabet("aB"), AlphabetError);
	CHECK_THROWS_AS(ab.check_word("abc"), AlphabetError);
}

TEST_CASE("parse builds the expected trees") {
	const Regex r = p("a|b*");
	REQUIRE(r.kind() == Kind::Union);
	CHECK(r.operand(0) == a());
	CHECK(r.operand(1) == star_of(b()));

	CHECK(p("@").kind() == Kind::Empty);
	CHECK(p("_").kind() == Kind::Epsilon);

	const Regex c = p("!(a&b)");
	REQUIRE(c.kind() == Kind::Complement);
	CHECK(c.operand().kind() == Kind::Intersect);

	// postfix star binds tighter than prefix complement
	CHECK(p("!a*") == complement_of(star_of(a())));
	// precedence: & over - over ^ over |
	CHECK(p("a|b^a-b&a").kind() == Kind::Union);
	CHECK(p("a^b-a").kind() == Kind::SymDiff);
	CHECK(p("a-b&a").kind() == Kind::Diff);
	CHECK(p("a - b - a") == diff_of(diff_of(a(), b()), a()));
	CHECK(p(" a b ") == concat_of({a(), b()}));
}

TEST_CASE("parse errors carry positions") {
	auto position_of = [](std::string_view text) -> std::size_t {
		try {
			parse(text, ab);
		} catch (const ParseError& e) {
			return e.position();
		}
		return static_cast<std::size_t>(-1);
	};
	CHECK(position_of("a)") == 1);
	CHECK(position_of("(ab") == 0);
	CHECK(position_of("a||b") == 2);
	CHECK(position_of("") == 0);
	CHECK(position_of("*a") == 0);
	CHECK_THROWS_AS(parse("ac", ab), AlphabetError);
	CHECK_NOTHROW(parse("ac"));
}

TEST_CASE("printing") {
	CHECK(to_string(union_of({a(), star_of(b())})) == "a|b*");
	CHECK(to_string(Regex::empty()) == "@");
	CHECK(to_string(concat_of({a(), b()})) == "ab");
	CHECK(to_string(p("(a|b)*a")) == "(a|b)*a");
	CHECK(to_string(p("!(ab)")) == "!(ab)");
	CHECK(to_string(p("(!a)*")) == "(!a)*");
	CHECK(to_string(p("a-(b-a)")) == "a-(b-a)");
	CHECK(to_string(p("(a-b)-a")) == "a-b-a");
	CHECK(to_string(p("(a^b)|(a&b)")) == "a&b|a^b");
}

TEST_CASE("similarity rules") {
	CHECK(union_of({b(), a(), a()}) == union_of({a(), b()}));
	CHECK(concat_of({Regex::epsilon(), a()}) == a());
	CHECK(concat_of({a(), Regex::empty()}) == Regex::empty());
	CHECK(union_of({a(), Regex::empty()}) == a());
	CHECK(union_of({union_of({a(), b()}), a()}) == union_of({a(), b()}));
	CHECK(intersect_of({b(), a(), b()}) == intersect_of({a(), b()}));
	CHECK(symdiff_of({a(), b(), a()}) == b());
	CHECK(symdiff_of({a(), a()}) == Regex::empty());
	CHECK(p("a**") == star_of(star_of(a())));
	CHECK(p("!!a").kind() == Kind::Complement);
	CHECK(normalize(Regex::raw(Kind::Union, {b(), a(), b()})) == union_of({a(), b()}));
	CHECK(is_normal(p("a|b")));
	CHECK_FALSE(is_normal(Regex::raw(Kind::Union, {b(), a()})));
}

TEST_CASE("canonical order ranks kinds, then letters, then operands") {
	CHECK(Regex::empty() < Regex::epsilon());
	CHECK(Regex::epsilon() < a());
	CHECK(a() < b());
	CHECK(b() < star_of(a()));
	CHECK(star_of(a()) < complement_of(a()));
	CHECK(complement_of(b()) < concat_of({a(), a()}));
	CHECK(concat_of({a(), a()}) < concat_of({a(), b()}));
	CHECK(concat_of({a(), b()}) < union_of({a(), b()}));
}

TEST_CASE("nullable") {
	CHECK(star_of(a()).nullable());
	CHECK_FALSE(concat_of({a(), b()}).nullable());
	CHECK(complement_of(Regex::empty()).nullable());
	CHECK(p("_|a").nullable());
	CHECK_FALSE(p("a*&b").nullable());
	CHECK(p("a*-b").nullable());
	CHECK_FALSE(p("a*^b*").nullable());
	CHECK(p("a*^b*^_").nullable());
}

TEST_CASE("derivatives") {
	CHECK(derive(p("ab"), 'a') == b());
	CHECK(derive(p("a*"), 'a') == p("a*"));
	CHECK(derive(p("(a|b)*a"), 'b') == p("(a|b)*a"));
	CHECK(derive(p("ab"), "") == p("ab"));
	CHECK(derive(p("ab"), "ab") == Regex::epsilon());
	CHECK(derive(p("a*b"), "aab") == Regex::epsilon());
	CHECK(derive(p("ab"), "b") == Regex::empty());
	CHECK(derive(p("!a"), 'a') == complement_of(Regex::epsilon()));
}

TEST_CASE("derivative agrees with the membership oracle") {
	const auto suffixes = oracle::words("ab", 4);
	for (const Regex& r : sample_regexes(11, 150, 6)) {
		oracle::Membership member(r);
		for (char c : std::string("ab")) {
			oracle::Membership derived(derive(r, c));
			for (const std::string& x : suffixes) {
				INFO(to_string(r), " by ", c, " on ", x);
				REQUIRE(derived(x) == member(std::string(1, c) + x));
			}
		}
		REQUIRE(r.nullable() == member(""));
	}
}

TEST_CASE("normalization preserves the language and round-trips through text") {
	const auto ws = oracle::words("ab", 5);
	for (std::size_t i = 0; i < 150; ++i) {
		auto rng = sample_rng(23, i);
		const Regex r = random_regex(rng, 7, ab);
		CHECK(is_normal(r));
		CHECK(normalize(r) == r);
		CHECK(r.operator_count() <= 7);
		const std::string text = to_string(r);
		CHECK(parse(text, ab) == r);
		CHECK(to_string(parse(text, ab)) == text);
		const Regex reversed_twice = reverse_regex(reverse_regex(r));
		oracle::Membership m1(r), m2(reversed_twice);
		for (const std::string& w : ws)
			REQUIRE(m1(w) == m2(w));
	}
}

TEST_CASE("raw trees and their normal forms denote the same language") {
	const Regex raw = Regex::raw(
		Kind::Concat, {Regex::raw(Kind::Union, {b(), Regex::empty(), a(), b()}),
	                   Regex::raw(Kind::Concat, {Regex::epsilon(), Regex::raw(Kind::Star, {a()})})});
	const Regex normal = normalize(raw);
	CHECK(is_normal(normal));
	oracle::Membership m1(raw), m2(normal);
	for (const std::string& w : oracle::words("ab", 5))
		CHECK(m1(w) == m2(w));
	CHECK_THROWS(Regex::raw(Kind::Star, {a(), b()}));
	CHECK_THROWS(Regex::raw(Kind::Letter, {}));
}

TEST_CASE("letters and complement detection") {
	CHECK(letters_of(p("a(b|a)*")) == std::set<char>{'a', 'b'});
	CHECK(contains_complement(p("a|!b")));
	CHECK_FALSE(contains_complement(p("a|b")));
}
