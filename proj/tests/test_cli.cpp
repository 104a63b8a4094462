#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "quotient/automata.hpp"
#include "quotient/witnesses.hpp"

using nlohmann::json;

namespace {

struct Result {
	int code;
	std::string out, err;
};

Result run(std::vector<std::string> args) {
	args.insert(args.begin(), "quotient");
	std::vector<const char*> argv;
	for (const std::string& a : args)
		argv.push_back(a.c_str());
	std::ostringstream out, err;
	const int code = quotient::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
	return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
	args.push_back("--format");
	args.push_back("json");
	const Result r = run(std::move(args));
	INFO(r.err);
	return json::parse(r.out);
}

} // namespace

TEST_CASE("kappa") {
	CHECK(run_json({"kappa", "a*b"})["kappa"] == 3);
	CHECK(run_json({"kappa", "@"})["kappa"] == 1);
	CHECK(run_json({"kappa", "!@", "--alphabet", "ab"})["kappa"] == 1);
	const json j = run_json({"kappa", "ab"});
	CHECK(j["profile"]["is_suffix_free"] == true);
	CHECK(j["alphabet"] == "ab");

	const Result text = run({"kappa", "a*b"});
	CHECK(text.code == 0);
	CHECK(text.out.find("kappa") != std::string::npos);

	const Result missing = run({"kappa", "!a"});
	CHECK(missing.code == 2);
	CHECK(missing.err.find("--alphabet") != std::string::npos);
}

TEST_CASE("derive") {
	CHECK(run({"derive", "ab", "a"}).out == "b\n");
	CHECK(run({"derive", "a*b", "aab"}).out == "_\n");
	CHECK(run({"derive", "ab", ""}).out == "ab\n");
	CHECK(run({"derive", "ab", "c"}).code == 2);
}

TEST_CASE("bound") {
	CHECK(run({"bound", "thm3.boolean", "m=7", "n=5", "mu=4", "nu=3", "r=2"}).out == "11\n");
	CHECK(run({"bound", "thm2.product.c", "m=3", "n=3", "k=1"}).out == "20\n");
	CHECK(run({"bound", "prop5.star", "n=4", "l=1"}).out == "7\n");
	CHECK(run_json({"bound", "thm2.boolean", "m=3", "n=4"})["value"] == 12);
	const Result list = run({"bound", "--list"});
	CHECK(list.code == 0);
	CHECK(list.out.find("thm4.reversal.empty+sigma_plus") != std::string::npos);
	CHECK(run({"bound", "thm2.boolean", "m=x"}).code == 2);
	CHECK(run({"bound", "no.such"}).code == 2);
}

TEST_CASE("witness") {
	for (const std::vector<std::string> args : {std::vector<std::string>{"witness", "union.binary", "3", "3", "--check"},
	                                            {"witness", "star.unary", "4", "--check"},
	                                            {"witness", "suffixfree.intersection.marked", "4", "4", "--check"}}) {
		const Result r = run(args);
		INFO(r.out, r.err);
		CHECK(r.code == 0);
		CHECK(r.out.find(", TIGHT") != std::string::npos);
	}
	const Result plain = run({"witness", "union.binary", "3", "4"});
	CHECK(plain.code == 0);
	CHECK(plain.out.find("expected   12") != std::string::npos);
	const json j = run_json({"witness", "star.binary", "3", "--check"});
	CHECK(j["measured_kappa"] == 6);
	CHECK(j["tight"] == true);
	CHECK(run({"witness", "union.binary", "1", "1"}).code == 2);
}

TEST_CASE("verify") {
	const json j = run_json({"verify", "union", "a*", "b*"});
	for (const char* key : {"operands", "alphabet", "operation", "measured_kappa", "operand_profiles", "result_profile",
	                        "bound_reports", "derivative_kappa", "paths_agree", "violations", "notes"})
		CHECK(j.contains(key));
	CHECK(j["operation"] == "union");
	CHECK(j["paths_agree"] == true);
	CHECK(j["violations"] == 0);
	const json& first = j["bound_reports"][0];
	for (const char* key : {"bound_name", "applicable", "preconditions", "value", "equality", "satisfied", "tight"})
		CHECK(first.contains(key));

	CHECK(run({"verify", "star", "(a|b)*a"}).code == 0);
	CHECK(run({"verify", "union", "a"}).code == 2);
	CHECK(run({"verify", "shuffle", "a", "b"}).code == 2);
	CHECK(run({"verify", "complement", "!a"}).code == 2);
	CHECK(run({"verify", "complement", "!a", "--alphabet", "ab"}).code == 0);
}

TEST_CASE("table") {
	const json j = run_json({"table", "star.binary", "n=3..6"});
	REQUIRE(j["rows"].size() == 4);
	const std::vector<int> expected{6, 12, 24, 48};
	for (std::size_t i = 0; i < 4; ++i) {
		CHECK(j["rows"][i]["expected"] == expected[i]);
		CHECK(j["rows"][i]["measured"] == expected[i]);
		CHECK(j["rows"][i]["tight"] == true);
	}
	CHECK(run({"table", "union.binary", "m=2..3", "n=2..3", "--check"}).code == 0);
	const Result empty = run({"table", "star.binary", "n=5..4"});
	CHECK(empty.code == 0);
	CHECK(run({"table", "union.binary", "m=2..3"}).code == 2);
	CHECK(run({"table", "union.binary", "m=2", "k=3"}).code == 2);
}

TEST_CASE("campaign") {
	const Result r = run({"campaign", "--samples", "20"});
	CHECK(r.code == 0);
	CHECK(r.out.find("violations           0") != std::string::npos);

	const json j = run_json({"campaign", "--samples", "10"});
	CHECK(j.contains("bounds"));
	CHECK(j["samples_run"] == 10);

	const Result fail = run({"campaign", "--samples", "5", "--self-test-fail"});
	CHECK(fail.code == 1);
	CHECK(fail.out.find("FAILURE") != std::string::npos);

	CHECK(run({"campaign", "--reversal", "--samples", "20"}).code == 0);
}

TEST_CASE("errors and caps") {
	CHECK(run({}).code == 2);
	CHECK(run({"kappa", "a||b"}).code == 2);
	CHECK(run({"kappa", "(a|b)*a(a|b)(a|b)(a|b)", "--max-states", "4"}).code == 3);
	CHECK(run({"kappa", "@file:/nonexistent/path"}).code == 2);
}

TEST_CASE("automaton operands from files") {
	const auto path = std::filesystem::temp_directory_path() / "quotient_cli_test.dfa";
	{
		std::ofstream f(path);
		f << quotient::to_text(quotient::modular_counting_dfa('a', 1, 3, quotient::Alphabet("ab")));
	}
	const std::string operand = "@file:" + path.string();
	CHECK(run_json({"kappa", operand})["kappa"] == 3);
	const json j = run_json({"verify", "union", operand, "b*"});
	CHECK((!j.contains("derivative_kappa") || j["derivative_kappa"].is_null()));
	CHECK(j["measured_kappa"] == 4);
	CHECK(run({"kappa", operand, "--alphabet", "abc"}).code == 2);
	std::filesystem::remove(path);
}
