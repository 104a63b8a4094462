#include "quotient/regex.hpp"

#include <algorithm>
#include <stdexcept>

namespace quotient {

struct Regex::Node {
	Kind kind;
	char symbol;
	bool nullable;
	// Set when the node was produced by a normalizing constructor.
	bool normal;
	std::size_t hash;
	std::size_t size;
	std::size_t operators;
	std::vector<Regex> operands;
};

std::string_view kind_name(Kind k) noexcept {
	switch (k) {
	case Kind::Empty: return "Empty";
	case Kind::Epsilon: return "Epsilon";
	case Kind::Letter: return "Letter";
	case Kind::Star: return "Star";
	case Kind::Complement: return "Complement";
	case Kind::Concat: return "Concat";
	case Kind::Union: return "Union";
	case Kind::Intersect: return "Intersect";
	case Kind::Diff: return "Diff";
	case Kind::SymDiff: return "SymDiff";
	}
	return "?";
}

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
	return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

bool compute_nullable(Kind kind, const std::vector<Regex>& ops) {
	switch (kind) {
	case Kind::Empty:
	case Kind::Letter:
		return false;
	case Kind::Epsilon:
	case Kind::Star:
		return true;
	case Kind::Complement:
		return !ops[0].nullable();
	case Kind::Concat:
	case Kind::Intersect:
		return std::all_of(ops.begin(), ops.end(), [](const Regex& r) { return r.nullable(); });
	case Kind::Union:
		return std::any_of(ops.begin(), ops.end(), [](const Regex& r) { return r.nullable(); });
	case Kind::Diff:
		return ops[0].nullable() && !ops[1].nullable();
	case Kind::SymDiff:
		return std::count_if(ops.begin(), ops.end(), [](const Regex& r) { return r.nullable(); }) % 2 == 1;
	}
	return false;
}

} // namespace

Regex Regex::make(Kind kind, char symbol, std::vector<Regex> operands, bool normal) {
	auto node = std::make_shared<Node>();
	node->kind = kind;
	node->symbol = symbol;
	node->nullable = compute_nullable(kind, operands);
	node->normal = normal;
	std::size_t h = mix(static_cast<std::size_t>(kind) * 0x100000001b3ULL, static_cast<unsigned char>(symbol));
	std::size_t size = 1;
	std::size_t operators = operands.empty() ? 0 : 1;
	for (const Regex& op : operands) {
		h = mix(h, op.hash());
		size += op.size();
		operators += op.operator_count();
	}
	node->hash = h;
	node->size = size;
	node->operators = operators;
	node->operands = std::move(operands);
	return Regex(std::move(node));
}

Regex Regex::empty() {
	static const Regex r = make(Kind::Empty, '\0', {}, true);
	return r;
}

Regex Regex::epsilon() {
	static const Regex r = make(Kind::Epsilon, '\0', {}, true);
	return r;
}

Regex Regex::letter(char c) { return make(Kind::Letter, c, {}, true); }

Regex Regex::raw(Kind kind, std::vector<Regex> operands) {
	switch (kind) {
	case Kind::Empty:
	case Kind::Epsilon:
	case Kind::Letter:
		throw std::invalid_argument("Regex::raw: leaf kinds have dedicated constructors");
	case Kind::Star:
	case Kind::Complement:
		if (operands.size() != 1)
			throw std::invalid_argument("Regex::raw: unary node needs exactly one operand");
		break;
	case Kind::Diff:
		if (operands.size() != 2)
			throw std::invalid_argument("Regex::raw: Diff needs exactly two operands");
		break;
	default:
		if (operands.empty())
			throw std::invalid_argument("Regex::raw: n-ary node needs at least one operand");
	}
	return make(kind, '\0', std::move(operands), false);
}

Kind Regex::kind() const noexcept { return node_->kind; }
char Regex::symbol() const noexcept { return node_->symbol; }
std::span<const Regex> Regex::operands() const noexcept { return node_->operands; }
bool Regex::nullable() const noexcept { return node_->nullable; }
std::size_t Regex::hash() const noexcept { return node_->hash; }
std::size_t Regex::size() const noexcept { return node_->size; }
std::size_t Regex::operator_count() const noexcept { return node_->operators; }

std::strong_ordering operator<=>(const Regex& a, const Regex& b) noexcept {
	if (a.node_ == b.node_)
		return std::strong_ordering::equal;
	if (auto c = a.kind() <=> b.kind(); c != 0)
		return c;
	if (auto c = a.symbol() <=> b.symbol(); c != 0)
		return c;
	const auto& xs = a.node_->operands;
	const auto& ys = b.node_->operands;
	const std::size_t n = std::min(xs.size(), ys.size());
	for (std::size_t i = 0; i < n; ++i)
		if (auto c = xs[i] <=> ys[i]; c != 0)
			return c;
	return xs.size() <=> ys.size();
}

bool operator==(const Regex& a, const Regex& b) noexcept {
	if (a.node_ == b.node_)
		return true;
	if (a.hash() != b.hash() || a.size() != b.size())
		return false;
	return (a <=> b) == 0;
}

namespace {

void flatten_into(Kind kind, std::vector<Regex>& out, std::vector<Regex>&& operands) {
	for (Regex& op : operands) {
		if (op.kind() == kind)
			out.insert(out.end(), op.operands().begin(), op.operands().end());
		else
			out.push_back(std::move(op));
	}
}

} // namespace

struct NormalForm {
	static Regex build(Kind kind, std::vector<Regex> operands) {
		return Regex::make(kind, '\0', std::move(operands), true);
	}
	static bool flagged(const Regex& r) noexcept { return r.node_->normal; }
};

Regex union_of(std::vector<Regex> operands) {
	std::vector<Regex> flat;
	flatten_into(Kind::Union, flat, std::move(operands));
	std::erase_if(flat, [](const Regex& r) { return r.kind() == Kind::Empty; });
	std::sort(flat.begin(), flat.end());
	flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
	if (flat.empty())
		return Regex::empty();
	if (flat.size() == 1)
		return flat.front();
	return NormalForm::build(Kind::Union, std::move(flat));
}

Regex concat_of(std::vector<Regex> operands) {
	std::vector<Regex> flat;
	flatten_into(Kind::Concat, flat, std::move(operands));
	if (std::any_of(flat.begin(), flat.end(), [](const Regex& r) { return r.kind() == Kind::Empty; }))
		return Regex::empty();
	std::erase_if(flat, [](const Regex& r) { return r.kind() == Kind::Epsilon; });
	if (flat.empty())
		return Regex::epsilon();
	if (flat.size() == 1)
		return flat.front();
	return NormalForm::build(Kind::Concat, std::move(flat));
}

Regex intersect_of(std::vector<Regex> operands) {
	if (operands.empty())
		throw std::invalid_argument("intersect_of: no operands");
	std::vector<Regex> flat;
	flatten_into(Kind::Intersect, flat, std::move(operands));
	std::sort(flat.begin(), flat.end());
	flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
	if (flat.size() == 1)
		return flat.front();
	return NormalForm::build(Kind::Intersect, std::move(flat));
}

Regex symdiff_of(std::vector<Regex> operands) {
	std::vector<Regex> flat;
	flatten_into(Kind::SymDiff, flat, std::move(operands));
	std::sort(flat.begin(), flat.end());
	std::vector<Regex> kept;
	for (std::size_t i = 0; i < flat.size();) {
		std::size_t j = i;
		while (j < flat.size() && flat[j] == flat[i])
			++j;
		if ((j - i) % 2 == 1)
			kept.push_back(flat[i]);
		i = j;
	}
	if (kept.empty())
		return Regex::empty();
	if (kept.size() == 1)
		return kept.front();
	return NormalForm::build(Kind::SymDiff, std::move(kept));
}

Regex diff_of(Regex left, Regex right) {
	return NormalForm::build(Kind::Diff, {std::move(left), std::move(right)});
}

Regex star_of(Regex operand) {
	return NormalForm::build(Kind::Star, {std::move(operand)});
}

Regex complement_of(Regex operand) {
	return NormalForm::build(Kind::Complement, {std::move(operand)});
}

Regex normalize(const Regex& r) {
	if (r.kind() <= Kind::Letter || NormalForm::flagged(r))
		return r;
	std::vector<Regex> ops;
	ops.reserve(r.operands().size());
	for (const Regex& op : r.operands())
		ops.push_back(normalize(op));
	switch (r.kind()) {
	case Kind::Star: return star_of(std::move(ops[0]));
	case Kind::Complement: return complement_of(std::move(ops[0]));
	case Kind::Concat: return concat_of(std::move(ops));
	case Kind::Union: return union_of(std::move(ops));
	case Kind::Intersect: return intersect_of(std::move(ops));
	case Kind::Diff: return diff_of(std::move(ops[0]), std::move(ops[1]));
	case Kind::SymDiff: return symdiff_of(std::move(ops));
	default: return r;
	}
}

bool is_normal(const Regex& r) { return normalize(r) == r; }

namespace {

void collect_letters(const Regex& r, std::set<char>& out) {
	if (r.kind() == Kind::Letter)
		out.insert(r.symbol());
	for (const Regex& op : r.operands())
		collect_letters(op, out);
}

} // namespace

std::set<char> letters_of(const Regex& r) {
	std::set<char> out;
	collect_letters(r, out);
	return out;
}

bool contains_complement(const Regex& r) {
	if (r.kind() == Kind::Complement)
		return true;
	return std::any_of(r.operands().begin(), r.operands().end(), contains_complement);
}

} // namespace quotient
