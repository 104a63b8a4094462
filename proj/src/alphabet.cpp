#include "quotient/alphabet.hpp"

#include "quotient/error.hpp"

namespace quotient {

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
	if (letters_.empty())
		throw AlphabetError("alphabet must not be empty");
	index_.fill(-1);
	for (std::size_t i = 0; i < letters_.size(); ++i) {
		const char c = letters_[i];
		if (c < 'a' || c > 'z')
			throw AlphabetError(std::string("invalid alphabet letter '") + c + "'");
		if (index_[c - 'a'] >= 0)
			throw AlphabetError(std::string("duplicate alphabet letter '") + c + "'");
		index_[c - 'a'] = static_cast<signed char>(i);
	}
}

std::optional<std::size_t> Alphabet::index_of(char c) const noexcept {
	if (c < 'a' || c > 'z' || index_[c - 'a'] < 0)
		return std::nullopt;
	return static_cast<std::size_t>(index_[c - 'a']);
}

void Alphabet::check_word(std::string_view word) const {
	for (char c : word)
		if (!contains(c))
			throw AlphabetError(std::string("letter '") + c + "' is not in alphabet {" + letters_ + "}");
}

} // namespace quotient
