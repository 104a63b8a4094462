#pragma once

#include <string>
#include <vector>

#include "quotient/automata.hpp"
#include "quotient/bounds.hpp"

namespace quotient {

/// A parametric witness instance together with the complexities it is known
/// to reach.
struct WitnessCase {
	std::string family;
	std::vector<Count> params;
	std::vector<Language> operands;
	/// Printable form of each operand: regex text, or a description of a DFA.
	std::vector<std::string> operand_text;
	Alphabet alphabet{"ab"};
	std::vector<Count> expected_operand_kappas;
	Operation operation = Operation::Union;
	Count expected_result_kappa = 0;
};

/// Family identifiers in a stable order.
std::vector<std::string> witness_families();

/// Number of integer parameters the family takes.
std::size_t witness_arity(const std::string& family);

/// Throws RangeError for an unknown family or parameters outside its range.
WitnessCase witness(const std::string& family, const std::vector<Count>& params);

/// Cyclic counter accepting {w : |w|_letter = residue (mod modulus)}.
Dfa modular_counting_dfa(char letter, Count residue, Count modulus, const Alphabet& alphabet);

/// Regex for the language of modular_counting_dfa.
Regex modular_counting_regex(char letter, Count residue, Count modulus, const Alphabet& alphabet);

} // namespace quotient
