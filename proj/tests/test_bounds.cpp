#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "quotient/error.hpp"
#include "quotient/verify.hpp"

using namespace quotient;

namespace {

const BoundReport* find(const std::vector<BoundReport>& reports, const std::string& name) {
	auto it = std::find_if(reports.begin(), reports.end(), [&](const BoundReport& r) { return r.bound_name == name; });
	return it == reports.end() ? nullptr : &*it;
}

ComplexityProfile profile_of(std::string_view text, const Alphabet& alphabet = Alphabet("ab")) {
	return profile(minimize(build_dfa(parse(text, alphabet), alphabet)));
}

} // namespace

TEST_CASE("boolean and product bounds") {
	CHECK(bound_boolean(2, 3) == 6);
	CHECK(bound_boolean(1, 1) == 1);
	CHECK(bound_boolean(7, 5) == 35);

	CHECK(bound_product(3, 3, 1, 1) == 20);
	CHECK(bound_product(5, 1, 2, 1) == 4);
	CHECK(bound_product(4, 3, 0, 2) == 1);
	CHECK(bound_product(4, 3, 2, 0) == 1);
	CHECK_THROWS_AS(bound_product(3, 3, 4, 1), RangeError);
}

TEST_CASE("star bounds") {
	CHECK(bound_star(1, 0, false) == 2);
	CHECK(bound_star(4, 1, false) == 12);
	CHECK(bound_star(5, 0, true) == 5);
	CHECK(bound_star(3, 2, false) == 5);
	CHECK(bound_star_epsilon(4, 1) == 7);
	CHECK(bound_star_epsilon(3, 1) == 4);
	CHECK(bound_star_epsilon(5, 2) == 9);
	CHECK_THROWS_AS(bound_star_epsilon(2, 1), RangeError);
}

TEST_CASE("uniquely reachable bounds") {
	CHECK(bound_urbool(7, 5, 4, 3, 2) == 11);
	CHECK(bound_urbool(6, 4, 0, 0, 0) == 24);
	CHECK(bound_urbool(7, 101, 4, 0, 0) == 307);
	CHECK(bound_urproduct(7, 5, 2, 3, 1) == 84);
	CHECK(bound_urproduct(5, 4, 2, 0, 0) == bound_product(5, 4, 2, 1));
	CHECK(bound_urproduct(3, 2, 1, 1, 0) == 7);
}

TEST_CASE("the worked example decomposes into its reductions") {
	// alpha = r(m+n) - r(r+1), beta = (m_u-r)(n-(r+1)), gamma = (n_u-r)(m-m_u-1)
	const Count m = 7, n = 5, mu = 4, nu = 3, r = 2;
	const Count alpha = r * (m + n) - r * (r + 1);
	const Count beta = (mu - r) * (n - (r + 1));
	const Count gamma = (nu - r) * (m - mu - 1);
	CHECK(alpha == 18);
	CHECK(beta == 4);
	CHECK(gamma == 2);
	CHECK(bound_urbool(m, n, mu, nu, r) == m * n - 24);
	// product: 7*32 - 2*16 = 192, reduced by 3*31 + 1*15 = 108
	CHECK(bound_product(7, 5, 2, 1) - bound_urproduct(7, 5, 2, 3, 1) == 108);
}

TEST_CASE("suffix-free and finite bounds") {
	CHECK(bound_suffixfree_or_finite_boolean(4, 4) == 10);
	CHECK(bound_suffixfree_or_finite_boolean(2, 2) == 2);
	CHECK(bound_suffixfree_or_finite_boolean(4, 5) == 13);
	CHECK_THROWS_AS(bound_suffixfree_or_finite_boolean(1, 4), RangeError);
	CHECK(bound_suffixfree_intersection(4, 4) == 6);
	CHECK(bound_suffixfree_intersection(4, 5) == 8);
	CHECK(bound_suffixfree_intersection(3, 3) == 3);
}

TEST_CASE("special quotient bounds") {
	CHECK(special_boolean_value(SpecialKind::Epsilon, BoolOp::Union, 4, 5, 1, 1) == 18);
	CHECK(special_boolean_value(SpecialKind::Universal, BoolOp::Union, 4, 5, 1, 1) == 13);
	CHECK(special_boolean_value(SpecialKind::Empty, BoolOp::Difference, 4, 5, 1, 1) == 16);
	CHECK(special_boolean_value(SpecialKind::Epsilon, BoolOp::Difference, 4, 5, 2, 1) == 20 - (4 + 10 - 2 - 3));
	CHECK(special_boolean_value(SpecialKind::SigmaPlus, BoolOp::Difference, 4, 5, 1, 2) == 20 - (8 + 2 - 3));
	CHECK_FALSE(special_boolean_value(SpecialKind::Empty, BoolOp::Union, 4, 5, 1, 1));
	CHECK_FALSE(special_boolean_value(SpecialKind::Universal, BoolOp::Intersection, 4, 5, 1, 1));

	auto reversal = [](Count n, SpecialQuotients flags) { return bound_special_reversal(n, flags); };
	SpecialQuotients eps;
	eps.epsilon = true;
	CHECK(find(reversal(5, eps), "thm4.reversal.epsilon")->value == 9);
	SpecialQuotients empty;
	empty.empty = true;
	CHECK(find(reversal(5, empty), "thm4.reversal.empty")->value == 16);
	CHECK_FALSE(find(reversal(5, empty), "thm4.reversal.epsilon")->applicable);
	SpecialQuotients empty_plus;
	empty_plus.empty = empty_plus.sigma_plus = true;
	CHECK(find(reversal(5, empty_plus), "thm4.reversal.empty+sigma_plus")->value == 5);
	SpecialQuotients empty_all;
	empty_all.empty = empty_all.universal = true;
	CHECK(find(reversal(5, empty_all), "thm4.reversal.empty+universal")->value == 8);
	// exponent would be negative
	CHECK_FALSE(find(reversal(2, empty_plus), "thm4.reversal.empty+sigma_plus")->applicable);
}

TEST_CASE("evaluate_bound by name") {
	CHECK(evaluate_bound("thm3.boolean", {{"m", 7}, {"n", 5}, {"mu", 4}, {"nu", 3}, {"r", 2}}) == 11);
	CHECK(evaluate_bound("thm3.product", {{"m", 7}, {"n", 5}, {"k", 2}, {"s", 3}, {"t", 1}}) == 84);
	CHECK(evaluate_bound("thm3.boolean", {{"m", 7}, {"n", 101}, {"mu", 4}, {"nu", 0}, {"r", 0}}) == 307);
	CHECK(evaluate_bound("thm2.product.c", {{"m", 3}, {"n", 3}, {"k", 1}}) == 20);
	CHECK(evaluate_bound("prop5.star", {{"n", 4}, {"l", 1}}) == 7);
	CHECK(evaluate_bound("thm4.universal.union", {{"m", 4}, {"n", 5}}) == 13);
	CHECK(evaluate_bound("thm4.reversal.empty", {{"n", 5}}) == 16);
	CHECK(evaluate_bound("thm2.star.b", {{"n", 5}}) == 5);
	CHECK_THROWS_AS(evaluate_bound("thm9.none", {}), RangeError);
	CHECK_THROWS_AS(evaluate_bound("thm2.boolean", {{"m", 3}}), RangeError);
	CHECK_THROWS_AS(evaluate_bound("thm2.product.c", {{"m", 3}, {"n", 1}, {"k", 1}}), RangeError);

	for (const std::string& name : bound_names()) {
		const std::map<std::string, Count> args{{"m", 6}, {"n", 6}, {"k", 2}, {"l", 2}, {"mu", 2},
		                                        {"nu", 2}, {"r", 1},  {"s", 1}, {"t", 1}};
		INFO(name);
		CHECK_NOTHROW(evaluate_bound(name, args));
	}
}

TEST_CASE("overflow is reported") {
	CHECK_THROWS_AS(bound_product(5, 80, 1, 1), RangeError);
	CHECK_THROWS_AS(bound_boolean(Count{1} << 40, Count{1} << 40), RangeError);
	CHECK(bound_product(2, 61, 1, 1) == (Count{1} << 62) - (Count{1} << 60));
}

TEST_CASE("bounds_for selects by preconditions") {
	const ComplexityProfile k = profile_of("ab"), l = profile_of("ba");
	const auto reports = bounds_for(Operation::Intersection, k, &l);
	REQUIRE(find(reports, "thm2.boolean"));
	CHECK(find(reports, "thm2.boolean")->value == 16);
	CHECK(find(reports, "cor1.boolean")->applicable);
	CHECK(find(reports, "cor2.intersection")->applicable);
	CHECK(find(reports, "thm4.epsilon.intersection")->applicable);
	CHECK(find(reports, "thm4.empty.intersection")->applicable);
	CHECK_FALSE(find(reports, "thm4.universal.union"));

	const ComplexityProfile star = profile_of("a*");
	const auto star_reports = bounds_for(Operation::Star, star, nullptr);
	CHECK(find(star_reports, "thm2.star.b")->applicable);
	CHECK(find(star_reports, "thm2.star.b")->equality);
	CHECK_FALSE(find(star_reports, "thm2.star.c")->applicable);

	const auto complement = bounds_for(Operation::Complement, k, nullptr);
	CHECK(complement.front().value == 4);
	CHECK(complement.front().equality);

	CHECK_THROWS_AS(bounds_for(Operation::Union, k, nullptr), RangeError);
}

TEST_CASE("profile inputs are consistent") {
	for (std::size_t i = 0; i < 100; ++i) {
		auto rng = sample_rng(3, i);
		const Alphabet ab("ab");
		const ComplexityProfile k = profile(minimize(random_dfa(rng, 6, ab)));
		const ComplexityProfile l = profile(minimize(random_dfa(rng, 6, ab)));
		const BoundInputs in = BoundInputs::from_profiles(k, l);
		CHECK(in.consistent());
		CHECK(in.s + in.t == in.m_u);
	}
}

TEST_CASE("operation names") {
	for (Operation op : {Operation::Union, Operation::Intersection, Operation::Difference, Operation::SymDiff,
	                     Operation::Product, Operation::Star, Operation::Reversal, Operation::Complement})
		CHECK(parse_operation(to_string(op)) == op);
	CHECK_THROWS_AS(parse_operation("shuffle"), RangeError);
	CHECK(is_binary(Operation::Product));
	CHECK_FALSE(is_binary(Operation::Reversal));
}
