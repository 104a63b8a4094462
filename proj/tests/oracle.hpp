#pragma once

// Reference semantics that do not use derivatives: membership by direct
// recursion on the expression tree, and quotient counting by enumerating
// words and comparing their residual behaviour on bounded suffixes.

#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "quotient/regex.hpp"

namespace oracle {

using quotient::Kind;
using quotient::Regex;

class Membership {
public:
	explicit Membership(const Regex& r) : root_(r) {}

	bool operator()(const std::string& w) {
		word_ = w;
		memo_.clear();
		return match(root_, 0, w.size());
	}

private:
	bool match(const Regex& r, std::size_t i, std::size_t j) {
		const auto key = std::make_tuple(r, i, j);
		if (auto it = memo_.find(key); it != memo_.end())
			return it->second;
		const bool v = compute(r, i, j);
		memo_.emplace(key, v);
		return v;
	}

	bool compute(const Regex& r, std::size_t i, std::size_t j) {
		auto ops = r.operands();
		switch (r.kind()) {
		case Kind::Empty: return false;
		case Kind::Epsilon: return i == j;
		case Kind::Letter: return j == i + 1 && word_[i] == r.symbol();
		case Kind::Complement: return !match(ops[0], i, j);
		case Kind::Star:
			if (i == j)
				return true;
			for (std::size_t k = i + 1; k <= j; ++k)
				if (match(ops[0], i, k) && match(r, k, j))
					return true;
			return false;
		case Kind::Concat: return concat(ops, 0, i, j);
		case Kind::Union:
			for (const Regex& x : ops)
				if (match(x, i, j))
					return true;
			return false;
		case Kind::Intersect:
			for (const Regex& x : ops)
				if (!match(x, i, j))
					return false;
			return true;
		case Kind::Diff: return match(ops[0], i, j) && !match(ops[1], i, j);
		case Kind::SymDiff: {
			bool v = false;
			for (const Regex& x : ops)
				v = v != match(x, i, j);
			return v;
		}
		}
		return false;
	}

	bool concat(std::span<const Regex> ops, std::size_t from, std::size_t i, std::size_t j) {
		if (from + 1 == ops.size())
			return match(ops[from], i, j);
		for (std::size_t k = i; k <= j; ++k)
			if (match(ops[from], i, k) && concat(ops, from + 1, k, j))
				return true;
		return false;
	}

	Regex root_;
	std::string word_;
	std::map<std::tuple<Regex, std::size_t, std::size_t>, bool> memo_;
};

/// Every word over `letters` of length at most `max_length`, shortest first.
inline std::vector<std::string> words(const std::string& letters, std::size_t max_length) {
	std::vector<std::string> out{""};
	std::size_t begin = 0;
	for (std::size_t len = 0; len < max_length; ++len) {
		const std::size_t end = out.size();
		for (std::size_t i = begin; i < end; ++i)
			for (char c : letters)
				out.push_back(out[i] + c);
		begin = end;
	}
	return out;
}

/// Number of classes of words of length <= prefix_length under "same
/// membership for every suffix of length <= suffix_length". A lower bound on
/// the quotient complexity, exact once both lengths are large enough.
inline std::size_t nerode_count(const std::function<bool(const std::string&)>& member, const std::string& letters,
                                std::size_t prefix_length, std::size_t suffix_length) {
	const std::vector<std::string> suffixes = words(letters, suffix_length);
	std::set<std::vector<bool>> classes;
	for (const std::string& p : words(letters, prefix_length)) {
		std::vector<bool> sig;
		sig.reserve(suffixes.size());
		for (const std::string& s : suffixes)
			sig.push_back(member(p + s));
		classes.insert(std::move(sig));
	}
	return classes.size();
}

inline std::size_t nerode_count(const Regex& r, const std::string& letters, std::size_t prefix_length,
                                std::size_t suffix_length) {
	Membership m(r);
	return nerode_count([&](const std::string& w) { return m(w); }, letters, prefix_length, suffix_length);
}

} // namespace oracle
