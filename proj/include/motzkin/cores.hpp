#pragma once

// Simultaneous core partitions, counted two ways.
//
// A partition is an a-core when no hook length is divisible by a (equivalent
// to: no hook equals a). The primary counting path works on beta-sets (sets
// of first-column hook lengths): for coprime s and s+d every simultaneous
// (s, s+d)-core has its beta-set inside the finite gap set of the numerical
// semigroup <s, s+d>, and the core conditions become closure under
// subtracting each modulus. A naive path enumerates every partition up to
// the size bound (s^2-1)((s+d)^2-1)/24 and filters by hooks; it exists to
// cross-check the fast path, not to be fast.

#include "motzkin/identities.hpp"
#include "motzkin/numeric.hpp"
#include "motzkin/triangles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace motzkin {

// Weakly decreasing positive parts; the empty partition has no parts.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<long> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) {
                throw std::invalid_argument("Partition: parts must be positive");
            }
            if (i > 0 && parts_[i - 1] < parts_[i]) {
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
            }
        }
    }

    const std::vector<long>& parts() const { return parts_; }

    long size() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }

private:
    std::vector<long> parts_;
};

// Hook lengths of every cell of the Young diagram, row by row.
inline std::vector<long> hook_lengths(const Partition& p) {
    const auto& parts = p.parts();
    std::vector<long> hooks;
    if (parts.empty()) return hooks;
    std::vector<long> conjugate(static_cast<std::size_t>(parts[0]), 0);
    for (long part : parts) {
        for (long j = 0; j < part; ++j) conjugate[static_cast<std::size_t>(j)] += 1;
    }
    hooks.reserve(static_cast<std::size_t>(p.size()));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (long j = 0; j < parts[i]; ++j) {
            hooks.push_back((parts[i] - j) + (conjugate[static_cast<std::size_t>(j)] - static_cast<long>(i)) - 1);
        }
    }
    return hooks;
}

inline bool is_core(const Partition& p, long a) {
    if (a < 1) throw std::invalid_argument("is_core: modulus must be positive");
    for (long h : hook_lengths(p)) {
        if (h % a == 0) return false;
    }
    return true;
}

// Finite set of distinct nonnegative integers. The canonical beta-set of a
// partition is its set of first-column hook lengths:
// h_i = parts[i] + (#parts - 1 - i); the empty partition maps to the empty set.
class BetaSet {
public:
    BetaSet() = default;

    explicit BetaSet(std::set<long> elems) : elements_(std::move(elems)) {
        if (!elements_.empty() && *elements_.begin() < 0) {
            throw std::invalid_argument("BetaSet: elements must be nonnegative");
        }
    }

    static BetaSet from_partition(const Partition& p) {
        std::set<long> elems;
        const auto& parts = p.parts();
        const long m = static_cast<long>(parts.size());
        for (long i = 0; i < m; ++i) {
            elems.insert(parts[static_cast<std::size_t>(i)] + m - 1 - i);
        }
        return BetaSet(std::move(elems));
    }

    // Inverse of from_partition on canonical sets; shifted sets (containing
    // extra small elements such as 0) normalize to the same partition.
    Partition to_partition() const {
        const long m = static_cast<long>(elements_.size());
        std::vector<long> parts;
        long i = 0;
        for (auto it = elements_.rbegin(); it != elements_.rend(); ++it, ++i) {
            long part = *it - (m - 1 - i);
            if (part > 0) parts.push_back(part);
        }
        return Partition(std::move(parts));
    }

    // Abacus criterion: the partition is an a-core iff the set is closed
    // under subtracting a (whenever x >= a, x - a must also be present).
    bool is_core(long a) const {
        if (a < 1) throw std::invalid_argument("BetaSet::is_core: modulus must be positive");
        for (long x : elements_) {
            if (x >= a && elements_.find(x - a) == elements_.end()) return false;
        }
        return true;
    }

    const std::set<long>& elements() const { return elements_; }

    bool operator==(const BetaSet& o) const { return elements_ == o.elements_; }

private:
    std::set<long> elements_;
};

// Largest possible size of a simultaneous (s, s+d)-core, gcd(s,d)=1.
inline long simultaneous_core_size_bound(long s, long d) {
    if (s < 1 || d < 1) throw std::invalid_argument("simultaneous_core_size_bound: need s,d >= 1");
    const long a = s, b = s + d;
    return (a * a - 1) * (b * b - 1) / 24;
}

// Visits every partition with size <= max_size exactly once (empty included),
// as a weakly decreasing vector of parts.
template <typename Visitor>
void for_each_partition_up_to(long max_size, Visitor&& visit) {
    std::vector<long> parts;
    auto rec = [&](auto&& self, long budget, long max_part) -> void {
        visit(static_cast<const std::vector<long>&>(parts));
        for (long p = std::min(budget, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, budget - p, p);
            parts.pop_back();
        }
    };
    rec(rec, max_size, max_size);
}

struct CoreCount {
    Integer total;
    std::map<long, Integer> by_size;
};

namespace detail {

inline void require_coprime(long s, long d, const char* what) {
    if (s < 1 || d < 1) {
        throw std::invalid_argument(std::string(what) + ": need s >= 1 and d >= 1");
    }
    if (std::gcd(s, d) != 1) {
        throw std::invalid_argument(std::string(what) + ": s and d must be coprime");
    }
}

}  // namespace detail

// Beta-set enumeration of all simultaneous (s, s+d, s+2d)-cores, counted in
// aggregate and by partition size. Candidate beta-sets are subsets of the
// gaps of <s, s+d> that are closed under subtracting s, s+d and s+2d; each
// leaf of the search corresponds to exactly one core partition.
inline CoreCount count_simultaneous_cores_detailed(long s, long d) {
    detail::require_coprime(s, d, "count_simultaneous_cores");
    const long a = s, b = s + d, c = s + 2 * d;
    const long frobenius = a * b - a - b;

    CoreCount result{0, {}};
    if (frobenius < 1) {  // s = 1: only the empty partition survives
        result.total = 1;
        result.by_size[0] = 1;
        return result;
    }

    std::vector<char> representable(static_cast<std::size_t>(frobenius) + 1, 0);
    representable[0] = 1;
    for (long x = 1; x <= frobenius; ++x) {
        representable[static_cast<std::size_t>(x)] =
            (x >= a && representable[static_cast<std::size_t>(x - a)]) ||
            (x >= b && representable[static_cast<std::size_t>(x - b)]);
    }

    std::vector<long> gaps;
    std::vector<long> position(static_cast<std::size_t>(frobenius) + 1, -1);
    for (long x = 1; x <= frobenius; ++x) {
        if (!representable[static_cast<std::size_t>(x)]) {
            position[static_cast<std::size_t>(x)] = static_cast<long>(gaps.size());
            gaps.push_back(x);
        }
    }

    const long m = static_cast<long>(gaps.size());
    std::vector<std::vector<long>> required(static_cast<std::size_t>(m));
    std::vector<char> banned(static_cast<std::size_t>(m), 0);
    for (long i = 0; i < m; ++i) {
        const long x = gaps[static_cast<std::size_t>(i)];
        for (long mod : {a, b, c}) {
            if (x < mod) continue;
            const long y = x - mod;
            if (y == 0 || representable[static_cast<std::size_t>(y)]) {
                banned[static_cast<std::size_t>(i)] = 1;  // would need a hook of length mod
                break;
            }
            required[static_cast<std::size_t>(i)].push_back(position[static_cast<std::size_t>(y)]);
        }
    }

    std::vector<char> chosen(static_cast<std::size_t>(m), 0);
    auto rec = [&](auto&& self, long i, long count, long hook_sum) -> void {
        if (i == m) {
            result.total += 1;
            const long size = hook_sum - count * (count - 1) / 2;
            result.by_size[size] += 1;
            return;
        }
        self(self, i + 1, count, hook_sum);  // leave gaps[i] out
        if (!banned[static_cast<std::size_t>(i)]) {
            bool ok = true;
            for (long j : required[static_cast<std::size_t>(i)]) {
                if (!chosen[static_cast<std::size_t>(j)]) { ok = false; break; }
            }
            if (ok) {
                chosen[static_cast<std::size_t>(i)] = 1;
                self(self, i + 1, count + 1, hook_sum + gaps[static_cast<std::size_t>(i)]);
                chosen[static_cast<std::size_t>(i)] = 0;
            }
        }
    };
    rec(rec, 0, 0, 0);
    return result;
}

inline Integer count_simultaneous_cores(long s, long d) {
    return count_simultaneous_cores_detailed(s, d).total;
}

// Cross-check oracle: scan every partition of size <= size_bound and filter
// by the hook criterion for all three moduli. size_bound < 0 selects the
// default bound (s^2-1)((s+d)^2-1)/24; any larger bound must give the same
// count, since no simultaneous core is bigger.
inline Integer count_simultaneous_cores_naive(long s, long d, long size_bound = -1) {
    detail::require_coprime(s, d, "count_simultaneous_cores_naive");
    if (size_bound < 0) size_bound = simultaneous_core_size_bound(s, d);
    const long moduli[3] = {s, s + d, s + 2 * d};
    Integer count = 0;
    for_each_partition_up_to(size_bound, [&](const std::vector<long>& parts) {
        const Partition p(parts);
        for (long mod : moduli) {
            if (!is_core(p, mod)) return;
        }
        count += 1;
    });
    return count;
}

// Three-way comparison: brute-force count vs. the binomial-sum formula vs.
// T(s+d-1,s)/d. Equality is consistency with the conjecture, not a proof.
inline VerificationReport check_conjecture(long s, long d) {
    detail::require_coprime(s, d, "check_conjecture");
    const Integer counted = count_simultaneous_cores(s, d);
    const Integer formula = conjecture_sum(s, d);
    const Integer triangle = require_divisible(motzkin_entry(s + d - 1, s), d, "check_conjecture");
    VerificationReport r;
    r.identity = "conjecture";
    r.params = {{"s", std::to_string(s)}, {"d", std::to_string(d)}};
    r.values = {{"count", counted.get_str()},
                {"formula", formula.get_str()},
                {"triangle", triangle.get_str()}};
    r.equal = detail::all_values_equal(r.values);
    return r;
}

}  // namespace motzkin
