#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quotient/alphabet.hpp"

namespace quotient {

struct NormalForm;

/// Node kinds, listed in canonical-order rank.
enum class Kind : std::uint8_t {
	Empty,      // the empty language, written @
	Epsilon,    // the empty word, written _
	Letter,
	Star,
	Complement,
	Concat,
	Union,
	Intersect,
	Diff,
	SymDiff,
};

std::string_view kind_name(Kind k) noexcept;

/// Immutable extended regular-expression tree with shared structure.
///
/// A Regex built through the `*_of` functions below is in normal form: the
/// similarity rules (idempotence, commutativity and associativity of union,
/// `@` as union unit and concatenation annihilator, `_` as concatenation
/// unit) are applied, extended to intersection (ACI) and symmetric difference
/// (flattened, sorted, pairs cancel). `Regex::raw` builds a tree verbatim,
/// which `normalize` then brings to normal form.
class Regex {
public:
	static Regex empty();
	static Regex epsilon();
	static Regex letter(char c);
	/// Builds a node without any rewriting. Arity is checked.
	static Regex raw(Kind kind, std::vector<Regex> operands);

	Kind kind() const noexcept;
	/// Symbol of a Letter node; '\0' otherwise.
	char symbol() const noexcept;
	std::span<const Regex> operands() const noexcept;
	const Regex& operand(std::size_t i = 0) const { return operands()[i]; }

	/// True iff the empty word belongs to the denoted language.
	bool nullable() const noexcept;
	std::size_t hash() const noexcept;
	/// Total number of nodes.
	std::size_t size() const noexcept;
	/// Number of non-leaf nodes.
	std::size_t operator_count() const noexcept;

	friend bool operator==(const Regex& a, const Regex& b) noexcept;
	/// Canonical total order: kind rank, then letter, then operands lexicographically.
	friend std::strong_ordering operator<=>(const Regex& a, const Regex& b) noexcept;

private:
	friend struct NormalForm;
	struct Node;
	explicit Regex(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
	static Regex make(Kind kind, char symbol, std::vector<Regex> operands, bool normal);

	std::shared_ptr<const Node> node_;
};

struct RegexHash {
	std::size_t operator()(const Regex& r) const noexcept { return r.hash(); }
};

// Normalizing constructors. Operands must already be in normal form.
Regex union_of(std::vector<Regex> operands);
Regex concat_of(std::vector<Regex> operands);
Regex intersect_of(std::vector<Regex> operands);
Regex symdiff_of(std::vector<Regex> operands);
Regex diff_of(Regex left, Regex right);
Regex star_of(Regex operand);
Regex complement_of(Regex operand);

/// Normal form of an arbitrary tree; denotes the same language.
Regex normalize(const Regex& r);
bool is_normal(const Regex& r);

/// Parses the text grammar; the result is in normal form.
///
///   union   := symdiff ('|' symdiff)*
///   symdiff := diff ('^' diff)*
///   diff    := inter ('-' inter)*
///   inter   := concat ('&' concat)*
///   concat  := unary+
///   unary   := '!' unary | atom '*'*
///   atom    := letter | '@' | '_' | '(' union ')'
///
/// Whitespace between tokens is ignored. Throws ParseError or AlphabetError.
Regex parse(std::string_view text, const Alphabet& alphabet);
/// Parses without checking letters against an alphabet.
Regex parse(std::string_view text);

/// Canonical text with minimal parentheses; parse(to_string(r)) == r for normal-form r.
std::string to_string(const Regex& r);

std::set<char> letters_of(const Regex& r);
bool contains_complement(const Regex& r);

/// Derivative by a letter, in normal form.
Regex derive(const Regex& r, char a);
/// Derivative by a word: r itself for the empty word, else letter by letter.
Regex derive(const Regex& r, std::string_view word);

} // namespace quotient

template <>
struct std::hash<quotient::Regex> {
	std::size_t operator()(const quotient::Regex& r) const noexcept { return r.hash(); }
};
