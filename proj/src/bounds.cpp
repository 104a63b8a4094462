#include "quotient/bounds.hpp"

#include <algorithm>

#include "quotient/error.hpp"

namespace quotient {

std::string_view to_string(Operation op) noexcept {
	switch (op) {
	case Operation::Union: return "union";
	case Operation::Intersection: return "intersection";
	case Operation::Difference: return "difference";
	case Operation::SymDiff: return "symdiff";
	case Operation::Product: return "product";
	case Operation::Star: return "star";
	case Operation::Reversal: return "reversal";
	case Operation::Complement: return "complement";
	}
	return "?";
}

Operation parse_operation(std::string_view name) {
	for (Operation op : {Operation::Union, Operation::Intersection, Operation::Difference, Operation::SymDiff,
	                     Operation::Product, Operation::Star, Operation::Reversal, Operation::Complement})
		if (to_string(op) == name)
			return op;
	throw RangeError("unknown operation '" + std::string(name) + "'");
}

bool is_binary(Operation op) noexcept {
	return op == Operation::Union || op == Operation::Intersection || op == Operation::Difference ||
	       op == Operation::SymDiff || op == Operation::Product;
}

std::optional<BoolOp> boolean_connective(Operation op) noexcept {
	switch (op) {
	case Operation::Union: return BoolOp::Union;
	case Operation::Intersection: return BoolOp::Intersection;
	case Operation::Difference: return BoolOp::Difference;
	case Operation::SymDiff: return BoolOp::SymDiff;
	default: return std::nullopt;
	}
}

std::string_view to_string(SpecialKind q) noexcept {
	switch (q) {
	case SpecialKind::Epsilon: return "epsilon";
	case SpecialKind::SigmaPlus: return "sigma_plus";
	case SpecialKind::Empty: return "empty";
	case SpecialKind::Universal: return "universal";
	}
	return "?";
}

bool has(const SpecialQuotients& flags, SpecialKind q) noexcept {
	switch (q) {
	case SpecialKind::Epsilon: return flags.epsilon;
	case SpecialKind::SigmaPlus: return flags.sigma_plus;
	case SpecialKind::Empty: return flags.empty;
	case SpecialKind::Universal: return flags.universal;
	}
	return false;
}

namespace {

Count add(Count a, Count b) {
	Count out;
	if (__builtin_add_overflow(a, b, &out))
		throw RangeError("bound value overflows");
	return out;
}

Count sub(Count a, Count b) {
	Count out;
	if (__builtin_sub_overflow(a, b, &out))
		throw RangeError("bound value overflows");
	return out;
}

Count mul(Count a, Count b) {
	Count out;
	if (__builtin_mul_overflow(a, b, &out))
		throw RangeError("bound value overflows");
	return out;
}

Count pow2(Count e) {
	if (e < 0 || e > 62)
		throw RangeError("exponent " + std::to_string(e) + " out of range");
	return Count{1} << e;
}

void require(bool condition, const char* what) {
	if (!condition)
		throw RangeError(what);
}

} // namespace

Count bound_boolean(Count m, Count n) {
	require(m >= 1 && n >= 1, "m and n must be positive");
	return mul(m, n);
}

Count bound_product(Count m, Count n, Count k, Count l) {
	require(m >= 1 && n >= 1, "m and n must be positive");
	require(0 <= k && k <= m, "k must lie in [0, m]");
	require(0 <= l && l <= n, "l must lie in [0, n]");
	if (k == 0 || l == 0)
		return 1;
	if (n == 1)
		return m - (k - 1);
	return sub(mul(m, pow2(n)), mul(k, pow2(n - 1)));
}

Count bound_star(Count n, Count l, bool only_initial_accepting) {
	require(n >= 1, "n must be positive");
	require(0 <= l && l <= n, "l must lie in [0, n]");
	if (n == 1)
		return 2;
	if (only_initial_accepting) {
		require(l == 0, "inconsistent inputs: L is the only accepting quotient but l > 0");
		return n;
	}
	require(l > 0, "inconsistent inputs: n > 1 requires an accepting quotient");
	return add(pow2(n - 1), pow2(n - l - 1));
}

Count bound_urbool(Count m, Count n, Count m_u, Count n_u, Count r) {
	require(m >= 1 && n >= 1, "m and n must be positive");
	require(m_u >= 0 && n_u >= 0 && r >= 0, "counts must be non-negative");
	const Count alpha = sub(mul(r, add(m, n)), mul(r, r + 1));
	const Count beta = mul(m_u - r, n - (r + 1));
	const Count gamma = mul(n_u - r, m - m_u - 1);
	return sub(mul(m, n), add(alpha, add(beta, gamma)));
}

Count bound_urproduct(Count m, Count n, Count k, Count s, Count t) {
	require(m >= 1 && n >= 1, "m and n must be positive");
	require(k >= 0 && s >= 0 && t >= 0, "counts must be non-negative");
	Count v = sub(mul(m, pow2(n)), mul(k, pow2(n - 1)));
	v = sub(v, mul(s, pow2(n) - 1));
	return sub(v, mul(t, pow2(n - 1) - 1));
}

Count bound_suffixfree_or_finite_boolean(Count m, Count n) {
	require(m > 1 && n > 1, "m and n must exceed 1");
	return sub(mul(m, n), m + n - 2);
}

Count bound_suffixfree_intersection(Count m, Count n) {
	require(m >= 1 && n >= 1, "m and n must be positive");
	return sub(mul(m, n), mul(2, m + n - 3));
}

Count bound_star_epsilon(Count n, Count l) {
	require(n >= 3, "n must be at least 3");
	require(0 < l && l <= n, "l must lie in (0, n]");
	return add(add(pow2(n - 3), pow2(n - l - 1)), 1);
}

std::optional<Count> special_boolean_value(SpecialKind q, BoolOp op, Count m, Count n, Count k, Count l) {
	require(m >= 1 && n >= 1, "m and n must be positive");
	const Count mn = mul(m, n);
	switch (q) {
	case SpecialKind::Epsilon:
		switch (op) {
		case BoolOp::Union: return mn - 2;
		case BoolOp::Intersection: return mn - (2 * m + 2 * n - 6);
		case BoolOp::Difference: return mn - (m + 2 * n - k - 3);
		case BoolOp::SymDiff: return mn - 2;
		}
		break;
	case SpecialKind::SigmaPlus:
		switch (op) {
		case BoolOp::Intersection: return mn - 2;
		case BoolOp::Union: return mn - (2 * m + 2 * n - 6);
		case BoolOp::Difference: return mn - (2 * m + l - 3);
		case BoolOp::SymDiff: return mn - 2;
		}
		break;
	case SpecialKind::Empty:
		if (op == BoolOp::Intersection)
			return mn - (m + n - 2);
		if (op == BoolOp::Difference)
			return mn - n + 1;
		break;
	case SpecialKind::Universal:
		if (op == BoolOp::Union)
			return mn - (m + n - 2);
		if (op == BoolOp::Difference)
			return mn - m + 1;
		break;
	}
	return std::nullopt;
}

namespace {

constexpr SpecialKind kSpecialKinds[] = {SpecialKind::Epsilon, SpecialKind::SigmaPlus, SpecialKind::Empty,
                                         SpecialKind::Universal};

BoundReport make_report(std::string name, std::vector<Precondition> pre) {
	BoundReport r;
	r.bound_name = std::move(name);
	r.applicable = std::all_of(pre.begin(), pre.end(), [](const Precondition& p) { return p.holds; });
	r.preconditions = std::move(pre);
	return r;
}

std::string q_name(SpecialKind q) { return std::string(to_string(q)); }

} // namespace

std::vector<BoundReport> bound_special_boolean(BoolOp op, Count m, Count n, Count k, Count l,
                                               const SpecialQuotients& left, const SpecialQuotients& right) {
	std::vector<BoundReport> out;
	for (SpecialKind q : kSpecialKinds) {
		if (!special_boolean_value(q, op, m, n, k, l))
			continue;
		BoundReport r = make_report("thm4." + q_name(q) + "." + std::string(to_string(op)),
		                            {{"k>0", k > 0},
		                             {"l>0", l > 0},
		                             {"K has " + q_name(q), has(left, q)},
		                             {"L has " + q_name(q), has(right, q)}});
		if (r.applicable)
			r.value = special_boolean_value(q, op, m, n, k, l);
		out.push_back(std::move(r));
	}
	return out;
}

std::vector<BoundReport> bound_special_reversal(Count n, const SpecialQuotients& flags) {
	struct Case {
		const char* name;
		std::vector<SpecialKind> needs;
		Count exponent_shift; // value = 2^(n - shift) + plus_one
		bool plus_one;
	};
	const Case cases[] = {
		{"epsilon", {SpecialKind::Epsilon}, 2, true},
		{"sigma_plus", {SpecialKind::SigmaPlus}, 2, true},
		{"empty", {SpecialKind::Empty}, 1, false},
		{"universal", {SpecialKind::Universal}, 1, false},
		{"empty+universal", {SpecialKind::Empty, SpecialKind::Universal}, 2, false},
		{"empty+sigma_plus", {SpecialKind::Empty, SpecialKind::SigmaPlus}, 3, true},
	};
	std::vector<BoundReport> out;
	for (const Case& c : cases) {
		std::vector<Precondition> pre;
		for (SpecialKind q : c.needs)
			pre.push_back({"L has " + q_name(q), has(flags, q)});
		pre.push_back({"n>=" + std::to_string(c.exponent_shift), n >= c.exponent_shift});
		BoundReport r = make_report(std::string("thm4.reversal.") + c.name, std::move(pre));
		if (r.applicable)
			r.value = add(pow2(n - c.exponent_shift), c.plus_one ? 1 : 0);
		out.push_back(std::move(r));
	}
	return out;
}

BoundInputs BoundInputs::from_profiles(const ComplexityProfile& left, const ComplexityProfile& right) {
	BoundInputs in;
	in.m = static_cast<Count>(left.kappa);
	in.n = static_cast<Count>(right.kappa);
	in.k = static_cast<Count>(left.accepting_count);
	in.l = static_cast<Count>(right.accepting_count);
	in.m_u = static_cast<Count>(left.ur_tree.size());
	in.n_u = static_cast<Count>(right.ur_tree.size());
	in.r = static_cast<Count>(shared_ur_count(left.ur_tree, right.ur_tree).r);
	in.s = static_cast<Count>(left.ur_rejecting_count);
	in.t = static_cast<Count>(left.ur_accepting_count);
	in.left_flags = left.special();
	in.right_flags = right.special();
	return in;
}

bool BoundInputs::consistent() const noexcept {
	return m >= 1 && n >= 1 && 0 <= k && k <= m && 0 <= l && l <= n && 0 <= r && r <= std::min(m_u, n_u) &&
	       s >= 0 && t >= 0 && s + t <= m_u && m_u <= m && n_u <= n;
}

namespace {

std::vector<BoundReport> boolean_bounds(BoolOp op, const ComplexityProfile& left, const ComplexityProfile& right) {
	const BoundInputs in = BoundInputs::from_profiles(left, right);
	std::vector<BoundReport> out;

	BoundReport general = make_report("thm2.boolean", {});
	general.value = bound_boolean(in.m, in.n);
	out.push_back(std::move(general));

	BoundReport ur = make_report("thm3.boolean", {{"inputs consistent", in.consistent()}});
	if (ur.applicable)
		ur.value = bound_urbool(in.m, in.n, in.m_u, in.n_u, in.r);
	out.push_back(std::move(ur));

	BoundReport cor1 = make_report(
		"cor1.boolean", {{"K non-empty", !left.is_empty_language},
	                     {"L non-empty", !right.is_empty_language},
	                     {"K finite or suffix-free", left.is_finite || left.is_suffix_free},
	                     {"L finite or suffix-free", right.is_finite || right.is_suffix_free},
	                     {"m>1", in.m > 1},
	                     {"n>1", in.n > 1}});
	if (cor1.applicable)
		cor1.value = bound_suffixfree_or_finite_boolean(in.m, in.n);
	out.push_back(std::move(cor1));

	for (BoundReport& r : bound_special_boolean(op, in.m, in.n, in.k, in.l, in.left_flags, in.right_flags))
		out.push_back(std::move(r));

	if (op == BoolOp::Intersection) {
		BoundReport cor2 = make_report("cor2.intersection", {{"K non-empty", !left.is_empty_language},
		                                                     {"L non-empty", !right.is_empty_language},
		                                                     {"K suffix-free", left.is_suffix_free},
		                                                     {"L suffix-free", right.is_suffix_free}});
		if (cor2.applicable)
			cor2.value = bound_suffixfree_intersection(in.m, in.n);
		out.push_back(std::move(cor2));
	}
	return out;
}

std::vector<BoundReport> product_bounds(const ComplexityProfile& left, const ComplexityProfile& right) {
	const BoundInputs in = BoundInputs::from_profiles(left, right);
	std::vector<BoundReport> out;

	BoundReport a = make_report("thm2.product.a", {{"k=0 or l=0", in.k == 0 || in.l == 0}});
	a.equality = true;
	if (a.applicable)
		a.value = 1;
	out.push_back(std::move(a));

	BoundReport b = make_report("thm2.product.b", {{"k>0", in.k > 0}, {"l>0", in.l > 0}, {"n=1", in.n == 1}});
	if (b.applicable)
		b.value = bound_product(in.m, in.n, in.k, in.l);
	out.push_back(std::move(b));

	BoundReport c = make_report("thm2.product.c", {{"k>0", in.k > 0}, {"l>0", in.l > 0}, {"n>1", in.n > 1}});
	if (c.applicable)
		c.value = bound_product(in.m, in.n, in.k, in.l);
	out.push_back(std::move(c));

	BoundReport ur = make_report("thm3.product", {{"inputs consistent", in.consistent()}});
	if (ur.applicable)
		ur.value = bound_urproduct(in.m, in.n, in.k, in.s, in.t);
	out.push_back(std::move(ur));
	return out;
}

std::vector<BoundReport> star_bounds(const ComplexityProfile& p) {
	const Count n = static_cast<Count>(p.kappa);
	const Count l = static_cast<Count>(p.accepting_count) - (p.initial_accepting ? 1 : 0);
	const bool only_initial = p.initial_accepting && p.accepting_count == 1;
	std::vector<BoundReport> out;

	BoundReport a = make_report("thm2.star.a", {{"n=1", n == 1}});
	if (a.applicable)
		a.value = bound_star(n, l, only_initial);
	out.push_back(std::move(a));

	BoundReport b = make_report("thm2.star.b", {{"n>1", n > 1}, {"L is its only accepting quotient", only_initial}});
	b.equality = true;
	if (b.applicable)
		b.value = bound_star(n, l, true);
	out.push_back(std::move(b));

	BoundReport c = make_report("thm2.star.c", {{"n>1", n > 1}, {"l>0", l > 0}});
	if (c.applicable)
		c.value = bound_star(n, l, false);
	out.push_back(std::move(c));

	BoundReport e = make_report("prop5.star",
	                            {{"n>=3", n >= 3}, {"l>0", l > 0}, {"L has epsilon", p.has_epsilon_quotient}});
	if (e.applicable)
		e.value = bound_star_epsilon(n, l);
	out.push_back(std::move(e));
	return out;
}

} // namespace

std::vector<BoundReport> bounds_for(Operation op, const ComplexityProfile& left, const ComplexityProfile* right) {
	if (is_binary(op) && right == nullptr)
		throw RangeError("operation '" + std::string(to_string(op)) + "' needs two operands");
	switch (op) {
	case Operation::Union:
	case Operation::Intersection:
	case Operation::Difference:
	case Operation::SymDiff:
		return boolean_bounds(*boolean_connective(op), left, *right);
	case Operation::Product:
		return product_bounds(left, *right);
	case Operation::Star:
		return star_bounds(left);
	case Operation::Reversal:
		return bound_special_reversal(static_cast<Count>(left.kappa), left.special());
	case Operation::Complement: {
		BoundReport r = make_report("thm2.complement", {});
		r.equality = true;
		r.value = static_cast<Count>(left.kappa);
		return {r};
	}
	}
	return {};
}

namespace {

Count arg(const std::map<std::string, Count>& args, const char* key) {
	auto it = args.find(key);
	if (it == args.end())
		throw RangeError(std::string("missing argument '") + key + "'");
	return it->second;
}

} // namespace

std::vector<std::string> bound_names() {
	std::vector<std::string> names = {"thm2.complement", "thm2.boolean",   "thm2.product.a",    "thm2.product.b",
	                                  "thm2.product.c",  "thm2.star.a",    "thm2.star.b",       "thm2.star.c",
	                                  "thm3.boolean",    "thm3.product",   "cor1.boolean",      "cor2.intersection",
	                                  "prop5.star"};
	for (SpecialKind q : kSpecialKinds)
		for (BoolOp op : {BoolOp::Union, BoolOp::Intersection, BoolOp::Difference, BoolOp::SymDiff})
			if (special_boolean_value(q, op, 1, 1, 0, 0))
				names.push_back("thm4." + q_name(q) + "." + std::string(to_string(op)));
	for (const BoundReport& r : bound_special_reversal(1, {}))
		names.push_back(r.bound_name);
	return names;
}

Count evaluate_bound(std::string_view name, const std::map<std::string, Count>& args) {
	const std::string key(name);
	if (key == "thm2.complement")
		return arg(args, "n");
	if (key == "thm2.boolean")
		return bound_boolean(arg(args, "m"), arg(args, "n"));
	if (key == "thm2.product.a")
		return 1;
	if (key == "thm2.product.b") {
		require(arg(args, "k") > 0, "case b needs k > 0");
		return bound_product(arg(args, "m"), 1, arg(args, "k"), 1);
	}
	if (key == "thm2.product.c") {
		const Count n = arg(args, "n");
		require(arg(args, "k") > 0 && n > 1, "case c needs k > 0 and n > 1");
		return bound_product(arg(args, "m"), n, arg(args, "k"), args.contains("l") ? arg(args, "l") : 1);
	}
	if (key == "thm2.star.a")
		return 2;
	if (key == "thm2.star.b") {
		const Count n = arg(args, "n");
		require(n > 1, "case b needs n > 1");
		return bound_star(n, 0, true);
	}
	if (key == "thm2.star.c") {
		const Count n = arg(args, "n");
		require(n > 1, "case c needs n > 1");
		return bound_star(n, arg(args, "l"), false);
	}
	if (key == "thm3.boolean")
		return bound_urbool(arg(args, "m"), arg(args, "n"), arg(args, "mu"), arg(args, "nu"), arg(args, "r"));
	if (key == "thm3.product")
		return bound_urproduct(arg(args, "m"), arg(args, "n"), arg(args, "k"), arg(args, "s"), arg(args, "t"));
	if (key == "cor1.boolean")
		return bound_suffixfree_or_finite_boolean(arg(args, "m"), arg(args, "n"));
	if (key == "cor2.intersection")
		return bound_suffixfree_intersection(arg(args, "m"), arg(args, "n"));
	if (key == "prop5.star")
		return bound_star_epsilon(arg(args, "n"), arg(args, "l"));

	if (key.starts_with("thm4.reversal.")) {
		SpecialQuotients all{true, true, true, true};
		for (const BoundReport& r : bound_special_reversal(arg(args, "n"), all))
			if (r.bound_name == key) {
				require(r.applicable, "n too small for this reversal bound");
				return *r.value;
			}
	} else if (key.starts_with("thm4.")) {
		for (SpecialKind q : kSpecialKinds)
			for (BoolOp op : {BoolOp::Union, BoolOp::Intersection, BoolOp::Difference, BoolOp::SymDiff}) {
				if (key != "thm4." + q_name(q) + "." + std::string(to_string(op)))
					continue;
				const Count k = (q == SpecialKind::Epsilon && op == BoolOp::Difference) ? arg(args, "k") : 1;
				const Count l = (q == SpecialKind::SigmaPlus && op == BoolOp::Difference) ? arg(args, "l") : 1;
				if (auto v = special_boolean_value(q, op, arg(args, "m"), arg(args, "n"), k, l))
					return *v;
			}
	}
	throw RangeError("unknown bound '" + key + "'");
}

} // namespace quotient
