#include "quotient/report.hpp"

namespace quotient {

using nlohmann::json;

json as_json(const ComplexityProfile& p) {
	json tree = json::array();
	for (const auto& [state, word] : p.ur_tree)
		tree.push_back({{"state", state}, {"word", word}});
	return {
		{"kappa", p.kappa},
		{"accepting_count", p.accepting_count},
		{"initial_accepting", p.initial_accepting},
		{"has_empty_quotient", p.has_empty_quotient},
		{"has_universal_quotient", p.has_universal_quotient},
		{"has_epsilon_quotient", p.has_epsilon_quotient},
		{"has_sigma_plus_quotient", p.has_sigma_plus_quotient},
		{"ur_tree", tree},
		{"ur_accepting_count", p.ur_accepting_count},
		{"ur_rejecting_count", p.ur_rejecting_count},
		{"is_suffix_free", p.is_suffix_free},
		{"is_finite", p.is_finite},
		{"is_empty_language", p.is_empty_language},
	};
}

json as_json(const BoundReport& b) {
	json pre = json::array();
	for (const Precondition& p : b.preconditions)
		pre.push_back({{"name", p.name}, {"holds", p.holds}});
	return {
		{"bound_name", b.bound_name},
		{"applicable", b.applicable},
		{"preconditions", pre},
		{"value", b.value ? json(*b.value) : json(nullptr)},
		{"equality", b.equality},
	};
}

json as_json(const BoundCheck& b) {
	json out = as_json(b.report);
	out["satisfied"] = b.satisfied;
	out["tight"] = b.tight;
	out["violated"] = b.violated();
	return out;
}

json as_json(const VerifyReport& r) {
	json profiles = json::array(), bounds = json::array();
	for (const ComplexityProfile& p : r.operand_profiles)
		profiles.push_back(as_json(p));
	for (const BoundCheck& b : r.bounds)
		bounds.push_back(as_json(b));
	return {
		{"operands", r.operands},
		{"alphabet", r.alphabet},
		{"operation", to_string(r.operation)},
		{"measured_kappa", r.measured_kappa},
		{"operand_profiles", profiles},
		{"result_profile", as_json(r.result_profile)},
		{"bound_reports", bounds},
		{"derivative_kappa", r.derivative_kappa ? json(*r.derivative_kappa) : json(nullptr)},
		{"paths_agree", r.paths_agree()},
		{"violations", r.violations()},
		{"notes", r.notes},
	};
}

json as_json(const WitnessCase& w) {
	return {
		{"family", w.family},
		{"params", w.params},
		{"operands", w.operand_text},
		{"alphabet", w.alphabet.letters()},
		{"expected_operand_kappas", w.expected_operand_kappas},
		{"operation", to_string(w.operation)},
		{"expected_result_kappa", w.expected_result_kappa},
	};
}

json as_json(const WitnessCheck& c) {
	json out = as_json(c.witness);
	out["operand_kappas"] = c.operand_kappas;
	out["measured_kappa"] = c.report.measured_kappa;
	out["operands_match"] = c.operands_match();
	out["tight"] = c.tight();
	out["report"] = as_json(c.report);
	return out;
}

json as_json(const CampaignFailure& f) {
	return {
		{"seed", f.seed}, {"sample", f.sample}, {"check", f.check}, {"inputs", f.inputs}, {"detail", f.detail},
	};
}

namespace {

json tallies(const std::map<std::string, BoundTally>& table) {
	json out = json::object();
	for (const auto& [name, t] : table)
		out[name] = {{"applicable", t.applicable}, {"satisfied", t.satisfied}, {"tight", t.tight}};
	return out;
}

} // namespace

json as_json(const CampaignSummary& s) {
	return {
		{"seed", s.seed},
		{"samples_requested", s.samples_requested},
		{"samples_run", s.samples_run},
		{"max_regex_size", s.max_regex_size},
		{"alphabet", s.alphabet},
		{"operations_verified", s.operations_verified},
		{"path_agreements", s.path_agreements},
		{"identity_checks", s.identity_checks},
		{"star_equality_checks", s.star_equality_checks},
		{"complement_checks", s.complement_checks},
		{"violations", s.violations},
		{"bounds", tallies(s.bounds)},
		{"failure", s.failure ? as_json(*s.failure) : json(nullptr)},
		{"ok", s.ok()},
	};
}

json as_json(const ReversalSummary& s) {
	return {
		{"samples_run", s.samples_run},
		{"from_regex", s.from_regex},
		{"from_dfa", s.from_dfa},
		{"bounds", tallies(s.bounds)},
		{"failure", s.failure ? as_json(*s.failure) : json(nullptr)},
		{"ok", s.ok()},
	};
}

} // namespace quotient
