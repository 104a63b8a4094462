#include "quotient/regex.hpp"

namespace quotient {

namespace {

std::vector<Regex> derive_each(std::span<const Regex> ops, char a);

// `r` is in normal form.
Regex derive_normal(const Regex& r, char a) {
	switch (r.kind()) {
	case Kind::Empty:
	case Kind::Epsilon:
		return Regex::empty();
	case Kind::Letter:
		return r.symbol() == a ? Regex::epsilon() : Regex::empty();
	case Kind::Union:
		return union_of(derive_each(r.operands(), a));
	case Kind::Concat: {
		// (x1 x2..xn)_a = (x1)_a x2..xn  |  x1^eps (x2..xn)_a
		const auto ops = r.operands();
		const Regex& head = ops.front();
		Regex rest = concat_of({ops.begin() + 1, ops.end()});
		Regex d = concat_of({derive_normal(head, a), rest});
		if (!head.nullable())
			return d;
		return union_of({std::move(d), derive_normal(rest, a)});
	}
	case Kind::Star:
		return concat_of({derive_normal(r.operand(), a), r});
	case Kind::Complement:
		return complement_of(derive_normal(r.operand(), a));
	case Kind::Intersect:
		return intersect_of(derive_each(r.operands(), a));
	case Kind::Diff:
		return diff_of(derive_normal(r.operand(0), a), derive_normal(r.operand(1), a));
	case Kind::SymDiff:
		return symdiff_of(derive_each(r.operands(), a));
	}
	return Regex::empty();
}

std::vector<Regex> derive_each(std::span<const Regex> ops, char a) {
	std::vector<Regex> out;
	out.reserve(ops.size());
	for (const Regex& op : ops)
		out.push_back(derive_normal(op, a));
	return out;
}

} // namespace

Regex derive(const Regex& r, char a) { return derive_normal(normalize(r), a); }

Regex derive(const Regex& r, std::string_view word) {
	Regex out = normalize(r);
	for (char a : word)
		out = derive_normal(out, a);
	return out;
}

} // namespace quotient
