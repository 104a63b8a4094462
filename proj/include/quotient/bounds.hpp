#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quotient/analysis.hpp"
#include "quotient/automata.hpp"

namespace quotient {

using Count = std::int64_t;

enum class Operation { Union, Intersection, Difference, SymDiff, Product, Star, Reversal, Complement };

std::string_view to_string(Operation op) noexcept;
/// Accepts the names printed by to_string; throws RangeError otherwise.
Operation parse_operation(std::string_view name);
bool is_binary(Operation op) noexcept;
/// The boolean connective of a binary boolean operation.
std::optional<BoolOp> boolean_connective(Operation op) noexcept;

enum class SpecialKind { Epsilon, SigmaPlus, Empty, Universal };
std::string_view to_string(SpecialKind q) noexcept;
bool has(const SpecialQuotients& flags, SpecialKind q) noexcept;

// Closed-form evaluators. Each throws RangeError outside its stated domain
// or when the value does not fit in 63 bits.

/// mn
Count bound_boolean(Count m, Count n);
/// 1 if k=0 or l=0; m-(k-1) if n=1; m*2^n - k*2^(n-1) otherwise.
Count bound_product(Count m, Count n, Count k, Count l);
/// `l` counts accepting quotients other than L itself; `only_initial_accepting`
/// says L is its only accepting quotient.
Count bound_star(Count n, Count l, bool only_initial_accepting);
/// mn - (alpha + beta + gamma) with
///   alpha = r(m+n) - r(r+1), beta = (m_u-r)(n-(r+1)), gamma = (n_u-r)(m-m_u-1).
Count bound_urbool(Count m, Count n, Count m_u, Count n_u, Count r);
/// m*2^n - k*2^(n-1) - s(2^n - 1) - t(2^(n-1) - 1)
Count bound_urproduct(Count m, Count n, Count k, Count s, Count t);
/// mn - (m+n-2), for m, n > 1.
Count bound_suffixfree_or_finite_boolean(Count m, Count n);
/// mn - 2(m+n-3)
Count bound_suffixfree_intersection(Count m, Count n);
/// 2^(n-3) + 2^(n-l-1) + 1, for n >= 3 and l > 0.
Count bound_star_epsilon(Count n, Count l);
/// Value of the special-quotient bound for `op` when both operands have `q`;
/// nullopt when no such bound exists for the pair.
std::optional<Count> special_boolean_value(SpecialKind q, BoolOp op, Count m, Count n, Count k, Count l);

struct Precondition {
	std::string name;
	bool holds = false;
};

struct BoundReport {
	std::string bound_name;
	bool applicable = false;
	std::vector<Precondition> preconditions;
	/// Present iff applicable.
	std::optional<Count> value;
	/// The bound is an exact value rather than an upper bound.
	bool equality = false;
};

/// Reports for every special-quotient boolean bound of `op`; applicable only
/// when k, l > 0 and both operands have the quotient.
std::vector<BoundReport> bound_special_boolean(BoolOp op, Count m, Count n, Count k, Count l,
                                               const SpecialQuotients& left, const SpecialQuotients& right);

/// Reversal bounds from the special quotients of L, including the cumulative
/// empty+universal and empty+sigma_plus cases. A bound whose exponent would be
/// negative is reported as not applicable.
std::vector<BoundReport> bound_special_reversal(Count n, const SpecialQuotients& flags);

/// Operand data consumed by the binary bounds.
struct BoundInputs {
	Count m = 1, n = 1;
	Count k = 0, l = 0;
	Count m_u = 0, n_u = 0, r = 0, s = 0, t = 0;
	SpecialQuotients left_flags, right_flags;

	static BoundInputs from_profiles(const ComplexityProfile& left, const ComplexityProfile& right);
	/// k <= m, l <= n, r <= min(m_u, n_u), s + t <= m_u <= m.
	bool consistent() const noexcept;
};

/// Every bound relevant to `op`, with applicability decided from the operand
/// profiles. `right` is required for binary operations and ignored otherwise.
std::vector<BoundReport> bounds_for(Operation op, const ComplexityProfile& left, const ComplexityProfile* right);

/// Evaluates a bound by its stable name (e.g. "thm3.boolean") from named
/// integer arguments (m, n, k, l, mu, nu, r, s, t). Throws RangeError on an
/// unknown name, a missing argument, or a violated case condition.
Count evaluate_bound(std::string_view name, const std::map<std::string, Count>& args);

/// All stable bound names accepted by evaluate_bound.
std::vector<std::string> bound_names();

} // namespace quotient
