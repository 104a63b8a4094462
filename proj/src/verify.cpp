#include "quotient/verify.hpp"

#include <algorithm>

#include "quotient/error.hpp"

namespace quotient {

std::size_t VerifyReport::violations() const noexcept {
	return static_cast<std::size_t>(std::count_if(bounds.begin(), bounds.end(), [](const BoundCheck& b) {
		return b.violated();
	}));
}

namespace {

std::string describe(const Language& lang) {
	if (const Regex* r = std::get_if<Regex>(&lang))
		return to_string(*r);
	return "dfa with " + std::to_string(std::get<Dfa>(lang).state_count()) + " states";
}

Dfa operate(Operation op, const Dfa& left, const Dfa* right, const ExplorationConfig& cfg) {
	if (auto connective = boolean_connective(op))
		return minimize(product_dfa(left, *right, *connective));
	switch (op) {
	case Operation::Product: return concat_dfa(left, *right, cfg);
	case Operation::Star: return star_dfa(left, cfg);
	case Operation::Reversal: return reverse(left, cfg);
	case Operation::Complement: return complement_dfa(left);
	default: break;
	}
	throw RangeError("unsupported operation");
}

Regex operate(Operation op, const Regex& left, const Regex* right) {
	if (auto connective = boolean_connective(op))
		return combine(*connective, left, *right);
	switch (op) {
	case Operation::Product: return concat_of({left, *right});
	case Operation::Star: return star_of(left);
	case Operation::Reversal: return reverse_regex(left);
	case Operation::Complement: return complement_of(left);
	default: break;
	}
	throw RangeError("unsupported operation");
}

} // namespace

VerifyReport verify_operation(const Language& left, const Language* right, Operation op, const Alphabet& alphabet,
                              const ExplorationConfig& cfg) {
	if (is_binary(op) != (right != nullptr))
		throw RangeError("operation '" + std::string(to_string(op)) + "' takes " + (is_binary(op) ? "two" : "one") +
		                 " operand(s)");
	VerifyReport rep;
	rep.alphabet = alphabet.letters();
	rep.operation = op;
	rep.operands.push_back(describe(left));
	if (right)
		rep.operands.push_back(describe(*right));

	const Dfa left_dfa = dfa_of(left, alphabet, cfg);
	rep.operand_profiles.push_back(profile(left_dfa));
	std::optional<Dfa> right_dfa;
	if (right) {
		right_dfa = dfa_of(*right, alphabet, cfg);
		rep.operand_profiles.push_back(profile(*right_dfa));
	}

	const Dfa result = operate(op, left_dfa, right_dfa ? &*right_dfa : nullptr, cfg);
	rep.measured_kappa = result.state_count();
	rep.result_profile = profile(result);

	const Regex* left_regex = std::get_if<Regex>(&left);
	const Regex* right_regex = right ? std::get_if<Regex>(right) : nullptr;
	if (left_regex && (!right || right_regex)) {
		const Regex expr = operate(op, normalize(*left_regex), right_regex ? &*right_regex : nullptr);
		rep.derivative_kappa = minimize(build_dfa(expr, alphabet, cfg)).state_count();
		if (!rep.paths_agree())
			rep.notes.push_back("derivative path measured " + std::to_string(*rep.derivative_kappa) +
			                    " but automaton path measured " + std::to_string(rep.measured_kappa));
	}

	if (right && !BoundInputs::from_profiles(rep.operand_profiles[0], rep.operand_profiles[1]).consistent())
		rep.notes.push_back("operand measurements are mutually inconsistent; thm3 bounds skipped");

	const ComplexityProfile* right_profile = right ? &rep.operand_profiles[1] : nullptr;
	for (BoundReport& b : bounds_for(op, rep.operand_profiles[0], right_profile)) {
		BoundCheck check;
		if (b.applicable) {
			const auto measured = static_cast<Count>(rep.measured_kappa);
			check.satisfied = measured <= *b.value;
			check.tight = measured == *b.value;
		}
		check.report = std::move(b);
		rep.bounds.push_back(std::move(check));
	}
	return rep;
}

bool WitnessCheck::operands_match() const {
	if (operand_kappas.size() != witness.expected_operand_kappas.size())
		return false;
	for (std::size_t i = 0; i < operand_kappas.size(); ++i)
		if (static_cast<Count>(operand_kappas[i]) != witness.expected_operand_kappas[i])
			return false;
	return true;
}

WitnessCheck check_witness(const WitnessCase& w, const ExplorationConfig& cfg) {
	WitnessCheck out{w, {}, {}};
	const Language* right = w.operands.size() > 1 ? &w.operands[1] : nullptr;
	out.report = verify_operation(w.operands.at(0), right, w.operation, w.alphabet, cfg);
	out.report.operands = w.operand_text;
	for (const ComplexityProfile& p : out.report.operand_profiles)
		out.operand_kappas.push_back(p.kappa);
	return out;
}

Regex reverse_regex(const Regex& r) {
	std::vector<Regex> ops;
	for (const Regex& x : r.operands())
		ops.push_back(reverse_regex(x));
	switch (r.kind()) {
	case Kind::Empty:
	case Kind::Epsilon:
	case Kind::Letter: return r;
	case Kind::Star: return star_of(ops[0]);
	case Kind::Complement: return complement_of(ops[0]);
	case Kind::Concat: std::reverse(ops.begin(), ops.end()); return concat_of(std::move(ops));
	case Kind::Union: return union_of(std::move(ops));
	case Kind::Intersect: return intersect_of(std::move(ops));
	case Kind::Diff: return diff_of(ops[0], ops[1]);
	case Kind::SymDiff: return symdiff_of(std::move(ops));
	}
	return r;
}

Regex product_derivative_rhs(const Regex& k, const Regex& l, std::string_view w) {
	const Regex kn = normalize(k), ln = normalize(l);
	if (w.empty())
		return concat_of({kn, ln});
	std::vector<Regex> terms{concat_of({derive(kn, w), ln})};
	if (kn.nullable())
		terms.push_back(derive(ln, w));
	for (std::size_t i = 1; i < w.size(); ++i)
		if (derive(kn, w.substr(0, i)).nullable())
			terms.push_back(derive(ln, w.substr(i)));
	return union_of(std::move(terms));
}

Regex star_derivative_rhs(const Regex& l, std::string_view w) {
	if (w.empty())
		throw RangeError("the star identity needs a non-empty word");
	const Regex ln = normalize(l);
	const Regex star = star_of(ln);
	std::vector<Regex> terms;
	for (std::size_t i = 0; i <= w.size(); ++i)
		if (derive(star, w.substr(0, i)).nullable())
			terms.push_back(derive(ln, w.substr(i)));
	return concat_of({union_of(std::move(terms)), star});
}

namespace {

constexpr Operation kUnaryOps[] = {Operation::Star, Operation::Complement, Operation::Reversal};
constexpr Operation kBinaryOps[] = {Operation::Union, Operation::Intersection, Operation::Difference,
                                    Operation::SymDiff, Operation::Product};
constexpr BoolOp kConnectives[] = {BoolOp::Union, BoolOp::Intersection, BoolOp::Difference, BoolOp::SymDiff};

std::vector<std::string> words_up_to(const Alphabet& alphabet, std::size_t length) {
	std::vector<std::string> out{""};
	for (std::size_t begin = 0, len = 0; len < length; ++len) {
		const std::size_t end = out.size();
		for (std::size_t i = begin; i < end; ++i)
			for (char c : alphabet)
				out.push_back(out[i] + c);
		begin = end;
	}
	return out;
}

bool same_language(const Regex& a, const Regex& b, const Alphabet& alphabet, const ExplorationConfig& cfg) {
	return a == b || equivalent(build_dfa(a, alphabet, cfg), build_dfa(b, alphabet, cfg));
}

void tally(std::map<std::string, BoundTally>& table, const BoundCheck& b) {
	BoundTally& t = table[b.report.bound_name];
	if (!b.report.applicable)
		return;
	++t.applicable;
	t.satisfied += b.satisfied;
	t.tight += b.tight;
}

CampaignFailure bound_failure(const CampaignConfig& cfg, std::size_t sample, const VerifyReport& rep,
                              const BoundCheck& b) {
	return {cfg.seed,
	        sample,
	        "bound " + b.report.bound_name + " on " + std::string(to_string(rep.operation)),
	        rep.operands,
	        "measured " + std::to_string(rep.measured_kappa) + ", bound " + std::to_string(*b.report.value) +
	            (b.report.equality ? " (exact)" : "")};
}

} // namespace

CampaignSummary campaign(const CampaignConfig& cfg) {
	if (cfg.samples == 0)
		throw RangeError("a campaign needs at least one sample");
	CampaignSummary s;
	s.seed = cfg.seed;
	s.samples_requested = cfg.samples;
	s.max_regex_size = cfg.max_regex_size;
	s.alphabet = cfg.alphabet.letters();
	const std::vector<std::string> words = words_up_to(cfg.alphabet, cfg.identity_word_length);

	for (std::size_t i = 0; i < cfg.samples && !s.failure; ++i) {
		std::mt19937_64 rng = sample_rng(cfg.seed, i);
		const Regex k = random_regex(rng, cfg.max_regex_size, cfg.alphabet);
		const Regex l = random_regex(rng, cfg.max_regex_size, cfg.alphabet);
		const std::vector<std::string> inputs{to_string(k), to_string(l)};
		++s.samples_run;
		auto fail = [&](std::string check, std::string detail) {
			s.failure = CampaignFailure{cfg.seed, i, std::move(check), inputs, std::move(detail)};
		};

		if (cfg.inject_failure) {
			fail("self-test", "failure injected on request");
			break;
		}

		auto run = [&](Operation op, const Language& left, const Language* right) {
			const VerifyReport rep = verify_operation(left, right, op, cfg.alphabet, cfg.cap);
			++s.operations_verified;
			if (rep.derivative_kappa && rep.paths_agree())
				++s.path_agreements;
			for (const BoundCheck& b : rep.bounds) {
				tally(s.bounds, b);
				if (b.violated()) {
					++s.violations;
					if (!s.failure)
						s.failure = bound_failure(cfg, i, rep, b);
				}
				if (b.report.bound_name == "thm2.star.b" && b.report.applicable)
					++s.star_equality_checks;
				if (b.report.bound_name == "thm2.complement")
					++s.complement_checks;
			}
			if (!rep.paths_agree() && !s.failure)
				fail("two-path agreement on " + std::string(to_string(op)), rep.notes.front());
		};

		const Language left{k}, right{l};
		for (Operation op : kBinaryOps)
			run(op, left, &right);
		for (Operation op : kUnaryOps)
			run(op, left, nullptr);
		if (s.failure)
			break;

		const std::size_t kk = kappa(k, cfg.alphabet, cfg.cap);
		++s.complement_checks;
		if (kappa(complement_of(complement_of(k)), cfg.alphabet, cfg.cap) != kk) {
			fail("complement involution", "kappa(!!K) differs from kappa(K) = " + std::to_string(kk));
			break;
		}

		auto identity = [&](const std::string& name, const std::string& w, const Regex& lhs, const Regex& rhs) {
			++s.identity_checks;
			if (!s.failure && !same_language(lhs, rhs, cfg.alphabet, cfg.cap))
				fail(name + " for w = \"" + w + "\"", to_string(lhs) + " differs from " + to_string(rhs));
		};
		const Regex not_k = complement_of(k), kl = concat_of({k, l}), k_star = star_of(k);
		for (const std::string& w : words) {
			const Regex kw = derive(k, w), lw = derive(l, w);
			identity("complement identity", w, derive(not_k, w), complement_of(kw));
			for (BoolOp op : kConnectives)
				identity(std::string(to_string(op)) + " identity", w, derive(combine(op, k, l), w), combine(op, kw, lw));
			identity("product identity", w, derive(kl, w), product_derivative_rhs(k, l, w));
			if (w.empty())
				identity("star identity", w, k_star, union_of({Regex::epsilon(), concat_of({k, k_star})}));
			else
				identity("star identity", w, derive(k_star, w), star_derivative_rhs(k, w));
			if (s.failure)
				break;
		}
	}
	return s;
}

ReversalSummary reversal_campaign(const ReversalConfig& cfg) {
	ReversalSummary s;
	for (std::size_t i = 0; i < cfg.samples && !s.failure; ++i) {
		std::mt19937_64 rng = sample_rng(cfg.seed, i);
		std::optional<Language> sample;
		if (i % 2 == 0) {
			for (int attempt = 0; attempt < 100 && !sample; ++attempt) {
				Regex r = random_regex(rng, cfg.max_regex_size, cfg.alphabet);
				if (kappa(r, cfg.alphabet, cfg.cap) <= cfg.max_kappa)
					sample.emplace(std::move(r));
			}
		}
		if (sample)
			++s.from_regex;
		else {
			sample.emplace(random_dfa(rng, cfg.max_kappa, cfg.alphabet));
			++s.from_dfa;
		}
		++s.samples_run;

		const VerifyReport rep = verify_operation(*sample, nullptr, Operation::Reversal, cfg.alphabet, cfg.cap);
		for (const BoundCheck& b : rep.bounds) {
			tally(s.bounds, b);
			if (b.violated() && !s.failure)
				s.failure = CampaignFailure{cfg.seed, i, "bound " + b.report.bound_name, rep.operands,
				                            "measured " + std::to_string(rep.measured_kappa) + ", bound " +
				                                std::to_string(*b.report.value)};
		}
		if (!rep.paths_agree() && !s.failure)
			s.failure = CampaignFailure{cfg.seed, i, "two-path agreement on reversal", rep.operands, rep.notes.front()};
	}
	return s;
}

} // namespace quotient
