#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace quotient {

/// Ordered set of letters drawn from a-z. Complement and completeness are
/// always relative to an explicit alphabet.
class Alphabet {
public:
	/// Letters in the order given; throws AlphabetError on an empty list,
	/// duplicates, or characters outside a-z.
	explicit Alphabet(std::string_view letters);

	std::size_t size() const noexcept { return letters_.size(); }
	char operator[](std::size_t i) const { return letters_[i]; }
	const std::string& letters() const noexcept { return letters_; }

	bool contains(char c) const noexcept { return index_of(c).has_value(); }
	std::optional<std::size_t> index_of(char c) const noexcept;

	/// Throws AlphabetError unless every character of `word` is a letter.
	void check_word(std::string_view word) const;

	auto begin() const noexcept { return letters_.begin(); }
	auto end() const noexcept { return letters_.end(); }

	friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept {
		return a.letters_ == b.letters_;
	}

private:
	std::string letters_;
	std::array<signed char, 26> index_{};
};

} // namespace quotient
