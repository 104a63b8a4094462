#include <cctype>
#include <string>

#include "quotient/error.hpp"
#include "quotient/regex.hpp"

namespace quotient {

namespace {

class Parser {
public:
	Parser(std::string_view text, const Alphabet* alphabet) : text_(text), alphabet_(alphabet) {}

	Regex run() {
		Regex r = parse_union();
		skip_space();
		if (pos_ < text_.size()) {
			if (text_[pos_] == ')')
				throw ParseError("unbalanced ')'", pos_);
			throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
		}
		return r;
	}

private:
	void skip_space() {
		while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
	}

	int peek() {
		skip_space();
		return pos_ < text_.size() ? text_[pos_] : -1;
	}

	bool accept(char c) {
		if (peek() == c) {
			++pos_;
			return true;
		}
		return false;
	}

	Regex parse_union() {
		Regex r = parse_symdiff();
		while (accept('|'))
			r = union_of({r, parse_symdiff()});
		return r;
	}

	Regex parse_symdiff() {
		Regex r = parse_diff();
		while (accept('^'))
			r = symdiff_of({r, parse_diff()});
		return r;
	}

	Regex parse_diff() {
		Regex r = parse_inter();
		while (accept('-'))
			r = diff_of(r, parse_inter());
		return r;
	}

	Regex parse_inter() {
		Regex r = parse_concat();
		while (accept('&'))
			r = intersect_of({r, parse_concat()});
		return r;
	}

	static bool starts_unary(int c) {
		return (c >= 'a' && c <= 'z') || c == '@' || c == '_' || c == '(' || c == '!';
	}

	Regex parse_concat() {
		std::vector<Regex> items;
		while (starts_unary(peek()))
			items.push_back(parse_unary());
		if (items.empty()) {
			if (pos_ >= text_.size())
				throw ParseError("unexpected end of expression", pos_);
			throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
		}
		return concat_of(std::move(items));
	}

	Regex parse_unary() {
		if (accept('!'))
			return complement_of(parse_unary());
		Regex r = parse_atom();
		while (accept('*'))
			r = star_of(r);
		return r;
	}

	Regex parse_atom() {
		const int c = peek();
		const std::size_t at = pos_;
		if (c == '(') {
			++pos_;
			Regex r = parse_union();
			if (!accept(')'))
				throw ParseError("missing ')' for '(' opened", at);
			return r;
		}
		++pos_;
		if (c == '@')
			return Regex::empty();
		if (c == '_')
			return Regex::epsilon();
		const char letter = static_cast<char>(c);
		if (alphabet_ && !alphabet_->contains(letter))
			throw AlphabetError(std::string("letter '") + letter + "' at position " + std::to_string(at) +
			                    " is not in alphabet {" + alphabet_->letters() + "}");
		return Regex::letter(letter);
	}

	std::string_view text_;
	const Alphabet* alphabet_;
	std::size_t pos_ = 0;
};

// Binding strength used by the printer; higher binds tighter.
int level(Kind k) {
	switch (k) {
	case Kind::Union: return 1;
	case Kind::SymDiff: return 2;
	case Kind::Diff: return 3;
	case Kind::Intersect: return 4;
	case Kind::Concat: return 5;
	case Kind::Complement: return 6;
	case Kind::Star: return 7;
	default: return 8;
	}
}

void print(const Regex& r, std::string& out);

void print_at(const Regex& r, int min_level, std::string& out) {
	if (level(r.kind()) < min_level) {
		out += '(';
		print(r, out);
		out += ')';
	} else {
		print(r, out);
	}
}

void print_joined(const Regex& r, std::string_view sep, std::string& out) {
	const int child = level(r.kind()) + 1;
	bool first = true;
	for (const Regex& op : r.operands()) {
		if (!first)
			out += sep;
		first = false;
		print_at(op, child, out);
	}
}

void print(const Regex& r, std::string& out) {
	switch (r.kind()) {
	case Kind::Empty: out += '@'; break;
	case Kind::Epsilon: out += '_'; break;
	case Kind::Letter: out += r.symbol(); break;
	case Kind::Star:
		print_at(r.operand(), level(Kind::Star), out);
		out += '*';
		break;
	case Kind::Complement:
		out += '!';
		print_at(r.operand(), level(Kind::Complement), out);
		break;
	case Kind::Concat: print_joined(r, "", out); break;
	case Kind::Union: print_joined(r, "|", out); break;
	case Kind::Intersect: print_joined(r, "&", out); break;
	case Kind::SymDiff: print_joined(r, "^", out); break;
	case Kind::Diff:
		// left-associative: a-b-c is (a-b)-c
		print_at(r.operand(0), level(Kind::Diff), out);
		out += '-';
		print_at(r.operand(1), level(Kind::Diff) + 1, out);
		break;
	}
}

} // namespace

Regex parse(std::string_view text, const Alphabet& alphabet) { return Parser(text, &alphabet).run(); }

Regex parse(std::string_view text) { return Parser(text, nullptr).run(); }

std::string to_string(const Regex& r) {
	std::string out;
	print(r, out);
	return out;
}

} // namespace quotient
