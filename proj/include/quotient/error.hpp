#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quotient {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Malformed regex text; `position()` is the 0-based offset of the offending character.
class ParseError : public Error {
public:
	ParseError(const std::string& what, std::size_t position)
		: Error(what + " at position " + std::to_string(position)), position_(position) {}

	std::size_t position() const noexcept { return position_; }

private:
	std::size_t position_;
};

/// A letter that is not part of the working alphabet, or an invalid alphabet.
class AlphabetError : public Error {
public:
	using Error::Error;
};

/// Derivative exploration or subset construction produced more states than allowed.
class CapExceeded : public Error {
public:
	using Error::Error;
};

/// Argument outside the domain of a bound evaluator or generator.
class RangeError : public Error {
public:
	using Error::Error;
};

/// Malformed DFA text.
class FormatError : public Error {
public:
	using Error::Error;
};

} // namespace quotient
