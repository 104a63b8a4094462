#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <set>

#include "quotient/error.hpp"
#include "quotient/report.hpp"

namespace py = pybind11;
using namespace quotient;

namespace {

py::object to_python(const nlohmann::json& j) {
	return py::module_::import("json").attr("loads")(j.dump());
}

bool is_dfa_text(const std::string& text) { return text.starts_with("dfa "); }

// Operands are regex text or DFA text (starting with "dfa ").
struct Operands {
	std::vector<Language> languages;
	Alphabet alphabet{"a"};
};

Operands load(const std::vector<std::string>& texts, const std::optional<std::string>& alphabet) {
	std::vector<std::optional<Dfa>> automata;
	std::set<char> letters;
	bool complement = false;
	for (const std::string& t : texts) {
		if (is_dfa_text(t)) {
			automata.emplace_back(parse_dfa(t));
			continue;
		}
		automata.emplace_back();
		const Regex r = parse(t);
		complement = complement || contains_complement(r);
		const std::set<char> used = letters_of(r);
		letters.insert(used.begin(), used.end());
	}
	Operands out;
	auto first_dfa = std::find_if(automata.begin(), automata.end(), [](const auto& d) { return d.has_value(); });
	if (alphabet)
		out.alphabet = Alphabet(*alphabet);
	else if (first_dfa != automata.end())
		out.alphabet = (*first_dfa)->alphabet();
	else if (complement)
		throw AlphabetError("an alphabet is required for expressions with complement");
	else if (!letters.empty())
		out.alphabet = Alphabet(std::string(letters.begin(), letters.end()));
	for (std::size_t i = 0; i < texts.size(); ++i) {
		if (automata[i]) {
			if (!(automata[i]->alphabet() == out.alphabet))
				throw AlphabetError("automaton operand is over {" + automata[i]->alphabet().letters() + "}");
			out.languages.emplace_back(*automata[i]);
		} else {
			out.languages.emplace_back(parse(texts[i], out.alphabet));
		}
	}
	return out;
}

Dfa minimal(const std::string& text, const std::optional<std::string>& alphabet, std::size_t max_states) {
	const Operands ops = load({text}, alphabet);
	return dfa_of(ops.languages[0], ops.alphabet, ExplorationConfig{max_states});
}

} // namespace

PYBIND11_MODULE(_core, m) {
	m.doc() = "Quotient complexity of regular languages";

	auto base = py::register_exception<Error>(m, "QuotientError", PyExc_ValueError);
	py::register_exception<ParseError>(m, "ParseError", base.ptr());
	py::register_exception<AlphabetError>(m, "AlphabetError", base.ptr());
	py::register_exception<RangeError>(m, "RangeError", base.ptr());
	py::register_exception<FormatError>(m, "FormatError", base.ptr());
	py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());

	m.def(
		"normalize",
		[](const std::string& text, const std::optional<std::string>& alphabet) {
			return to_string(alphabet ? parse(text, Alphabet(*alphabet)) : parse(text));
		},
		py::arg("regex"), py::arg("alphabet") = py::none(), "Parse a regex and print its normal form.");

	m.def(
		"derive",
		[](const std::string& text, const std::string& word, const std::optional<std::string>& alphabet) {
			const Operands ops = load({text}, alphabet);
			ops.alphabet.check_word(word);
			return to_string(derive(std::get<Regex>(ops.languages.at(0)), word));
		},
		py::arg("regex"), py::arg("word"), py::arg("alphabet") = py::none());

	m.def(
		"kappa",
		[](const std::string& text, const std::optional<std::string>& alphabet, std::size_t max_states) {
			return minimal(text, alphabet, max_states).state_count();
		},
		py::arg("operand"), py::arg("alphabet") = py::none(), py::arg("max_states") = 1'000'000,
		"Quotient complexity of a regex or DFA text.");

	m.def(
		"profile",
		[](const std::string& text, const std::optional<std::string>& alphabet, std::size_t max_states) {
			return to_python(as_json(profile(minimal(text, alphabet, max_states))));
		},
		py::arg("operand"), py::arg("alphabet") = py::none(), py::arg("max_states") = 1'000'000);

	m.def(
		"minimal_dfa",
		[](const std::string& text, const std::optional<std::string>& alphabet, std::size_t max_states) {
			return to_text(minimal(text, alphabet, max_states));
		},
		py::arg("operand"), py::arg("alphabet") = py::none(), py::arg("max_states") = 1'000'000,
		"Minimal DFA in text format.");

	m.def("bound_names", &bound_names);
	m.def(
		"evaluate_bound",
		[](const std::string& name, const std::map<std::string, Count>& args) { return evaluate_bound(name, args); },
		py::arg("name"), py::arg("args"));

	m.def("witness_families", &witness_families);
	m.def(
		"witness",
		[](const std::string& family, const std::vector<Count>& params, bool check) {
			const WitnessCase w = witness(family, params);
			return to_python(check ? as_json(check_witness(w)) : as_json(w));
		},
		py::arg("family"), py::arg("params") = std::vector<Count>{}, py::arg("check") = false);

	m.def(
		"verify",
		[](const std::string& operation, const std::vector<std::string>& operands,
		   const std::optional<std::string>& alphabet, std::size_t max_states) {
			const Operation op = parse_operation(operation);
			if (operands.size() != (is_binary(op) ? 2u : 1u))
				throw RangeError("operation '" + operation + "' takes " + (is_binary(op) ? "2" : "1") +
				                 " operand(s)");
			const Operands ops = load(operands, alphabet);
			VerifyReport r = verify_operation(ops.languages[0], operands.size() == 2 ? &ops.languages[1] : nullptr,
			                                  op, ops.alphabet, ExplorationConfig{max_states});
			r.operands = operands;
			return to_python(as_json(r));
		},
		py::arg("operation"), py::arg("operands"), py::arg("alphabet") = py::none(),
		py::arg("max_states") = 1'000'000);

	m.def(
		"campaign",
		[](std::uint64_t seed, std::size_t samples, std::size_t size, const std::string& alphabet) {
			CampaignConfig cfg;
			cfg.seed = seed;
			cfg.samples = samples;
			cfg.max_regex_size = size;
			cfg.alphabet = Alphabet(alphabet);
			return to_python(as_json(campaign(cfg)));
		},
		py::arg("seed") = 1, py::arg("samples") = 100, py::arg("size") = 5, py::arg("alphabet") = "ab");

	m.def(
		"reversal_campaign",
		[](std::uint64_t seed, std::size_t samples, std::size_t max_kappa, const std::string& alphabet) {
			ReversalConfig cfg;
			cfg.seed = seed;
			cfg.samples = samples;
			cfg.max_kappa = max_kappa;
			cfg.alphabet = Alphabet(alphabet);
			return to_python(as_json(reversal_campaign(cfg)));
		},
		py::arg("seed") = 1, py::arg("samples") = 200, py::arg("max_kappa") = 6, py::arg("alphabet") = "ab");
}
