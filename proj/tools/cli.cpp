#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "quotient/error.hpp"
#include "quotient/report.hpp"

namespace quotient::cli {

namespace {

using nlohmann::json;

struct Common {
	std::string alphabet;
	std::size_t max_states = 1'000'000;
	std::string format = "table";

	ExplorationConfig cap() const { return {max_states}; }
	bool as_json() const { return format == "json"; }
};

void add_common(CLI::App* cmd, Common& c) {
	cmd->add_option("--alphabet", c.alphabet, "Working alphabet, e.g. ab (required with complement)");
	cmd->add_option("--max-states", c.max_states, "Cap on explored states")->capture_default_str();
	cmd->add_option("--format", c.format, "Output format")
		->check(CLI::IsMember({"table", "json"}))
		->capture_default_str();
}

class UsageError : public Error {
public:
	using Error::Error;
};

constexpr std::string_view kFilePrefix = "@file:";

std::string read_file(const std::string& path) {
	std::ifstream in(path);
	if (!in)
		throw UsageError("cannot read '" + path + "'");
	std::ostringstream buf;
	buf << in.rdbuf();
	return buf.str();
}

bool is_file_operand(const std::string& text) { return text.starts_with(kFilePrefix); }

// Operands as given on the command line, plus the alphabet they are read over.
struct Operands {
	std::vector<Language> languages;
	std::vector<std::string> text;
	Alphabet alphabet{"a"};
};

Operands load_operands(const std::vector<std::string>& args, const std::string& alphabet_flag) {
	std::vector<Dfa> automata;
	std::set<char> letters;
	bool complement = false;
	for (const std::string& arg : args) {
		if (is_file_operand(arg)) {
			automata.push_back(parse_dfa(read_file(arg.substr(kFilePrefix.size()))));
			continue;
		}
		const Regex r = parse(arg);
		complement = complement || contains_complement(r);
		const std::set<char> used = letters_of(r);
		letters.insert(used.begin(), used.end());
	}

	Operands out;
	if (!alphabet_flag.empty())
		out.alphabet = Alphabet(alphabet_flag);
	else if (!automata.empty())
		out.alphabet = automata.front().alphabet();
	else if (complement)
		throw UsageError("--alphabet is required for expressions with complement");
	else if (!letters.empty())
		out.alphabet = Alphabet(std::string(letters.begin(), letters.end()));

	std::size_t next_dfa = 0;
	for (const std::string& arg : args) {
		out.text.push_back(arg);
		if (is_file_operand(arg)) {
			Dfa d = std::move(automata[next_dfa++]);
			if (!(d.alphabet() == out.alphabet))
				throw AlphabetError("automaton in '" + arg + "' is over {" + d.alphabet().letters() +
				                    "}, expected {" + out.alphabet.letters() + "}");
			out.languages.emplace_back(std::move(d));
		} else {
			out.languages.emplace_back(parse(arg, out.alphabet));
		}
	}
	return out;
}

Count parse_count(const std::string& text) {
	Count v = 0;
	auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
	if (ec != std::errc() || end != text.data() + text.size())
		throw UsageError("'" + text + "' is not an integer");
	return v;
}

// Column-aligned plain-text table.
void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
	std::vector<std::size_t> width(header.size());
	for (std::size_t c = 0; c < header.size(); ++c) {
		width[c] = header[c].size();
		for (const auto& row : rows)
			width[c] = std::max(width[c], row[c].size());
	}
	auto line = [&](const std::vector<std::string>& cells) {
		std::string text;
		for (std::size_t c = 0; c < cells.size(); ++c) {
			if (c)
				text += "  ";
			text += cells[c];
			if (c + 1 < cells.size())
				text += std::string(width[c] - cells[c].size(), ' ');
		}
		out << text << '\n';
	};
	line(header);
	for (const auto& row : rows)
		line(row);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_profile(std::ostream& out, const ComplexityProfile& p, const std::string& indent = "") {
	std::string tree;
	for (const auto& [state, word] : p.ur_tree)
		tree += (tree.empty() ? "" : " ") + (word.empty() ? std::string("_") : word);
	const std::vector<std::pair<std::string, std::string>> fields = {
		{"kappa", std::to_string(p.kappa)},
		{"accepting quotients", std::to_string(p.accepting_count)},
		{"initial accepting", yes_no(p.initial_accepting)},
		{"empty quotient", yes_no(p.has_empty_quotient)},
		{"universal quotient", yes_no(p.has_universal_quotient)},
		{"epsilon quotient", yes_no(p.has_epsilon_quotient)},
		{"sigma_plus quotient", yes_no(p.has_sigma_plus_quotient)},
		{"uniquely reachable", std::to_string(p.ur_tree.size()) + (tree.empty() ? "" : " (" + tree + ")")},
		{"  accepting (t)", std::to_string(p.ur_accepting_count)},
		{"  rejecting (s)", std::to_string(p.ur_rejecting_count)},
		{"suffix-free", yes_no(p.is_suffix_free)},
		{"finite", yes_no(p.is_finite)},
		{"empty language", yes_no(p.is_empty_language)},
	};
	for (const auto& [name, value] : fields)
		out << indent << std::left << std::setw(22) << name << value << '\n';
}

void print_report(std::ostream& out, const VerifyReport& r) {
	out << "operation  " << to_string(r.operation) << '\n';
	out << "alphabet   " << r.alphabet << '\n';
	for (std::size_t i = 0; i < r.operands.size(); ++i) {
		out << (i == 0 ? "K" : "L") << "          " << r.operands[i] << '\n';
		print_profile(out, r.operand_profiles[i], "  ");
	}
	out << "measured   " << r.measured_kappa << '\n';
	if (r.derivative_kappa)
		out << "derivative " << *r.derivative_kappa << (r.paths_agree() ? " (agrees)" : " (DISAGREES)") << '\n';
	std::vector<std::vector<std::string>> rows;
	for (const BoundCheck& b : r.bounds) {
		std::string status = "n/a";
		if (b.report.applicable)
			status = b.violated() ? "VIOLATED" : (b.tight ? "TIGHT" : "ok");
		std::string failed;
		for (const Precondition& p : b.report.preconditions)
			if (!p.holds)
				failed += (failed.empty() ? "" : ", ") + p.name;
		rows.push_back({b.report.bound_name, b.report.value ? std::to_string(*b.report.value) : "-",
		                b.report.equality ? "exact" : "upper", status, failed.empty() ? "" : "fails: " + failed});
	}
	print_table(out, {"bound", "value", "kind", "status", "preconditions"}, rows);
	for (const std::string& note : r.notes)
		out << "note: " << note << '\n';
}

int cmd_kappa(const std::string& text, const Common& c, std::ostream& out) {
	const Operands ops = load_operands({text}, c.alphabet);
	const Dfa d = dfa_of(ops.languages[0], ops.alphabet, c.cap());
	const ComplexityProfile p = profile(d);
	if (c.as_json()) {
		out << json{{"operand", text}, {"alphabet", ops.alphabet.letters()}, {"kappa", p.kappa},
		            {"profile", as_json(p)}}
		           .dump(2)
		    << '\n';
	} else {
		out << "alphabet             " << ops.alphabet.letters() << '\n';
		print_profile(out, p);
	}
	return Ok;
}

int cmd_derive(const std::string& text, const std::string& word, const Common& c, std::ostream& out) {
	if (is_file_operand(text))
		throw UsageError("derive needs a regex operand");
	const Operands ops = load_operands({text}, c.alphabet);
	ops.alphabet.check_word(word);
	const Regex d = derive(std::get<Regex>(ops.languages[0]), word);
	if (c.as_json())
		out << json{{"regex", text}, {"word", word}, {"derivative", to_string(d)}}.dump(2) << '\n';
	else
		out << to_string(d) << '\n';
	return Ok;
}

int cmd_bound(const std::string& name, const std::vector<std::string>& args, bool list, const Common& c,
              std::ostream& out) {
	if (list) {
		for (const std::string& n : bound_names())
			out << n << '\n';
		return Ok;
	}
	if (name.empty())
		throw UsageError("a bound name is required (see bound --list)");
	std::map<std::string, Count> values;
	for (const std::string& arg : args) {
		const auto eq = arg.find('=');
		if (eq == std::string::npos || eq == 0)
			throw UsageError("argument '" + arg + "' is not of the form name=value");
		values[arg.substr(0, eq)] = parse_count(arg.substr(eq + 1));
	}
	const Count v = evaluate_bound(name, values);
	if (c.as_json())
		out << json{{"bound_name", name}, {"arguments", values}, {"value", v}}.dump(2) << '\n';
	else
		out << v << '\n';
	return Ok;
}

void print_witness(std::ostream& out, const WitnessCase& w) {
	out << "family     " << w.family;
	for (Count p : w.params)
		out << ' ' << p;
	out << "\nalphabet   " << w.alphabet.letters() << "\noperation  " << to_string(w.operation) << '\n';
	for (std::size_t i = 0; i < w.operand_text.size(); ++i)
		out << (i == 0 ? "K" : "L") << "          " << w.operand_text[i] << "  (kappa " << w.expected_operand_kappas[i]
		    << ")\n";
}

int cmd_witness(const std::string& family, const std::vector<Count>& params, bool check, const Common& c,
                std::ostream& out) {
	const WitnessCase w = witness(family, params);
	if (!check) {
		if (c.as_json())
			out << as_json(w).dump(2) << '\n';
		else {
			print_witness(out, w);
			out << "expected   " << w.expected_result_kappa << '\n';
		}
		return Ok;
	}
	const WitnessCheck result = check_witness(w, c.cap());
	if (c.as_json()) {
		out << as_json(result).dump(2) << '\n';
	} else {
		print_witness(out, w);
		out << "operands   measured";
		for (std::size_t k : result.operand_kappas)
			out << ' ' << k;
		out << (result.operands_match() ? "" : "  MISMATCH") << '\n';
		out << "expected " << w.expected_result_kappa << ", measured " << result.report.measured_kappa << ", "
		    << (result.tight() ? "TIGHT" : "NOT TIGHT") << '\n';
	}
	return result.ok() ? Ok : Violation;
}

int cmd_verify(const std::string& op_name, const std::vector<std::string>& texts, const Common& c,
               std::ostream& out) {
	const Operation op = parse_operation(op_name);
	const std::size_t needed = is_binary(op) ? 2 : 1;
	if (texts.size() != needed)
		throw UsageError("operation '" + op_name + "' takes " + std::to_string(needed) + " operand(s)");
	const Operands ops = load_operands(texts, c.alphabet);
	VerifyReport r = verify_operation(ops.languages[0], needed == 2 ? &ops.languages[1] : nullptr, op,
	                                  ops.alphabet, c.cap());
	r.operands = ops.text;
	if (c.as_json())
		out << as_json(r).dump(2) << '\n';
	else
		print_report(out, r);
	return r.ok() ? Ok : Violation;
}

// A parameter range "name=lo..hi" or "name=v".
struct Range {
	std::string name;
	Count lo = 0, hi = -1;
};

Range parse_range(const std::string& text) {
	const auto eq = text.find('=');
	if (eq == std::string::npos || eq == 0)
		throw UsageError("range '" + text + "' is not of the form name=lo..hi");
	Range r{text.substr(0, eq)};
	const std::string body = text.substr(eq + 1);
	const auto dots = body.find("..");
	if (dots == std::string::npos) {
		r.lo = r.hi = parse_count(body);
	} else {
		r.lo = parse_count(body.substr(0, dots));
		r.hi = parse_count(body.substr(dots + 2));
	}
	return r;
}

std::vector<std::string> parameter_names(std::size_t arity) {
	if (arity == 1)
		return {"n"};
	if (arity == 2)
		return {"m", "n"};
	return {};
}

int cmd_table(const std::string& family, const std::vector<std::string>& range_text, bool check, const Common& c,
              std::ostream& out) {
	const std::vector<std::string> names = parameter_names(witness_arity(family));
	std::vector<std::optional<Range>> given(names.size());
	for (const std::string& text : range_text) {
		Range r = parse_range(text);
		auto it = std::find(names.begin(), names.end(), r.name);
		if (it == names.end())
			throw UsageError("family '" + family + "' has no parameter '" + r.name + "'");
		given[static_cast<std::size_t>(it - names.begin())] = std::move(r);
	}
	std::vector<Range> ranges;
	for (std::size_t i = 0; i < names.size(); ++i) {
		if (!given[i])
			throw UsageError("missing range for parameter '" + names[i] + "'");
		ranges.push_back(*given[i]);
	}

	std::vector<std::vector<Count>> grid{{}};
	for (const Range& r : ranges) {
		std::vector<std::vector<Count>> next;
		for (const auto& prefix : grid)
			for (Count v = r.lo; v <= r.hi; ++v) {
				next.push_back(prefix);
				next.back().push_back(v);
			}
		grid = std::move(next);
	}

	json rows_json = json::array();
	std::vector<std::vector<std::string>> rows;
	bool all_tight = true;
	for (const auto& params : grid) {
		WitnessCase w;
		try {
			w = witness(family, params);
		} catch (const RangeError&) {
			continue;
		}
		const WitnessCheck result = check_witness(w, c.cap());
		all_tight = all_tight && result.ok();
		std::vector<std::string> row;
		for (Count p : params)
			row.push_back(std::to_string(p));
		row.push_back(std::to_string(w.expected_result_kappa));
		row.push_back(std::to_string(result.report.measured_kappa));
		row.push_back(result.tight() ? "yes" : "no");
		rows.push_back(std::move(row));
		rows_json.push_back({{"params", params},
		                     {"expected", w.expected_result_kappa},
		                     {"measured", result.report.measured_kappa},
		                     {"tight", result.tight()}});
	}
	if (c.as_json()) {
		out << json{{"family", family}, {"rows", rows_json}}.dump(2) << '\n';
	} else {
		std::vector<std::string> header = names;
		header.insert(header.end(), {"expected", "measured", "tight"});
		print_table(out, header, rows);
	}
	return check && !all_tight ? Violation : Ok;
}

void print_tallies(std::ostream& out, const std::map<std::string, BoundTally>& tallies) {
	std::vector<std::vector<std::string>> rows;
	for (const auto& [name, t] : tallies)
		rows.push_back({name, std::to_string(t.applicable), std::to_string(t.satisfied), std::to_string(t.tight)});
	print_table(out, {"bound", "applicable", "satisfied", "tight"}, rows);
}

void print_failure(std::ostream& out, const CampaignFailure& f) {
	out << "FAILURE in sample " << f.sample << " (seed " << f.seed << "): " << f.check << '\n';
	for (const std::string& input : f.inputs)
		out << "  input  " << input << '\n';
	out << "  detail " << f.detail << '\n';
}

struct CampaignArgs {
	std::uint64_t seed = 1;
	std::size_t samples = 100;
	std::size_t size = 5;
	bool self_test_fail = false;
	bool reversal = false;
};

int cmd_campaign(const CampaignArgs& a, const Common& c, std::ostream& out) {
	const Alphabet alphabet(c.alphabet.empty() ? "ab" : c.alphabet);
	if (a.samples == 0)
		throw UsageError("--samples must be at least 1");
	if (a.reversal) {
		ReversalConfig cfg;
		cfg.seed = a.seed;
		cfg.samples = a.samples;
		cfg.max_regex_size = a.size;
		cfg.alphabet = alphabet;
		cfg.cap = c.cap();
		const ReversalSummary s = reversal_campaign(cfg);
		if (c.as_json()) {
			out << as_json(s).dump(2) << '\n';
		} else {
			out << "samples " << s.samples_run << " (" << s.from_regex << " regex, " << s.from_dfa << " dfa)\n";
			print_tallies(out, s.bounds);
			if (s.failure)
				print_failure(out, *s.failure);
		}
		return s.ok() ? Ok : Violation;
	}

	CampaignConfig cfg;
	cfg.seed = a.seed;
	cfg.samples = a.samples;
	cfg.max_regex_size = a.size;
	cfg.alphabet = alphabet;
	cfg.cap = c.cap();
	cfg.inject_failure = a.self_test_fail;
	const CampaignSummary s = campaign(cfg);
	if (c.as_json()) {
		out << as_json(s).dump(2) << '\n';
	} else {
		out << "seed " << s.seed << ", samples " << s.samples_run << "/" << s.samples_requested << ", size <= "
		    << s.max_regex_size << ", alphabet " << s.alphabet << '\n';
		out << "operations verified  " << s.operations_verified << '\n';
		out << "two-path agreements  " << s.path_agreements << '\n';
		out << "identity checks      " << s.identity_checks << '\n';
		out << "star equality checks " << s.star_equality_checks << '\n';
		out << "complement checks    " << s.complement_checks << '\n';
		out << "violations           " << s.violations << '\n';
		print_tallies(out, s.bounds);
		if (s.failure)
			print_failure(out, *s.failure);
	}
	return s.ok() ? Ok : Violation;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
	CLI::App app{"Quotient complexity of regular languages"};
	app.name("quotient");
	app.require_subcommand(1);
	Common common;

	std::string regex, word, name, family, op;
	std::vector<std::string> words;
	std::vector<Count> params;
	bool check = false, list = false;
	CampaignArgs campaign_args;

	auto* kappa_cmd = app.add_subcommand("kappa", "Quotient complexity and profile of a language");
	kappa_cmd->add_option("regex", regex, "Regex, or @file:<path> for a DFA")->required();
	add_common(kappa_cmd, common);

	auto* derive_cmd = app.add_subcommand("derive", "Derivative of a regex by a word");
	derive_cmd->add_option("regex", regex)->required();
	derive_cmd->add_option("word", word)->required();
	add_common(derive_cmd, common);

	auto* bound_cmd = app.add_subcommand("bound", "Evaluate a closed-form bound, e.g. bound thm2.boolean m=3 n=4");
	bound_cmd->add_option("name", name);
	bound_cmd->add_option("args", words, "name=value arguments");
	bound_cmd->add_flag("--list", list, "List bound names");
	add_common(bound_cmd, common);

	auto* witness_cmd = app.add_subcommand("witness", "Generate a witness case");
	witness_cmd->add_option("family", family)->required();
	witness_cmd->add_option("params", params);
	witness_cmd->add_flag("--check", check, "Measure and compare with the expected values");
	add_common(witness_cmd, common);

	auto* verify_cmd = app.add_subcommand("verify", "Measure an operation and check every bound");
	verify_cmd->add_option("operation", op)->required();
	verify_cmd->add_option("operands", words)->required();
	add_common(verify_cmd, common);

	auto* table_cmd = app.add_subcommand("table", "Tightness sweep over a witness family, e.g. table star.binary n=3..6");
	table_cmd->add_option("family", family)->required();
	table_cmd->add_option("ranges", words, "name=lo..hi or name=value");
	table_cmd->add_flag("--check", check, "Exit with status 1 unless every row is tight");
	add_common(table_cmd, common);

	auto* campaign_cmd = app.add_subcommand("campaign", "Randomized property campaign");
	campaign_cmd->add_option("--seed", campaign_args.seed)->capture_default_str();
	campaign_cmd->add_option("--samples", campaign_args.samples)->capture_default_str();
	campaign_cmd->add_option("--size", campaign_args.size, "Maximum operator nodes per regex")->capture_default_str();
	campaign_cmd->add_flag("--reversal", campaign_args.reversal, "Run the reversal-bound campaign instead");
	campaign_cmd->add_flag("--self-test-fail", campaign_args.self_test_fail, "Force a failure to test the harness");
	add_common(campaign_cmd, common);

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		const int code = app.exit(e, out, err);
		return code == 0 ? Ok : Usage;
	}

	try {
		if (*kappa_cmd)
			return cmd_kappa(regex, common, out);
		if (*derive_cmd)
			return cmd_derive(regex, word, common, out);
		if (*bound_cmd)
			return cmd_bound(name, words, list, common, out);
		if (*witness_cmd)
			return cmd_witness(family, params, check, common, out);
		if (*verify_cmd)
			return cmd_verify(op, words, common, out);
		if (*table_cmd)
			return cmd_table(family, words, check, common, out);
		if (*campaign_cmd)
			return cmd_campaign(campaign_args, common, out);
	} catch (const CapExceeded& e) {
		err << "error: " << e.what() << '\n';
		return Cap;
	} catch (const Error& e) {
		err << "error: " << e.what() << '\n';
		return Usage;
	}
	return Usage;
}

} // namespace quotient::cli
