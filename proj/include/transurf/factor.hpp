#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "transurf/poly.hpp"

namespace transurf {

/// unit * prod(factor^multiplicity). Factors are primitive over Z with
/// positive leading coefficient, pairwise non-associate, and listed in
/// factor_order_less order.
struct Factorization {
    Rational unit{1};
    std::vector<std::pair<MultiPoly, unsigned>> factors;

    MultiPoly expand() const;
};

struct FactorOptions {
    std::uint64_t seed = 0x7261ce5eedull;
    /// Number of evaluation points tried before giving up.
    unsigned retry_budget = 16;
};

/// Square-free decomposition: factors square-free and pairwise coprime,
/// but not necessarily irreducible. Throws ZeroInput for p = 0.
Factorization squarefree(const MultiPoly &p);

/// Complete factorization over Q. Throws ZeroInput for p = 0 and
/// FactorizationFailure when no usable evaluation point was found within
/// the retry budget.
Factorization factor_irreducible(const MultiPoly &p, const FactorOptions &options = {});

/// p = c * q for some nonzero rational c (two zeros are associate).
bool is_associate(const MultiPoly &p, const MultiPoly &q);

/// Called after every successful squarefree / factor_irreducible call.
/// Intended for test harnesses that audit all factorizations of a run.
using FactorizationObserver =
    std::function<void(const MultiPoly &input, const Factorization &result, bool irreducible)>;
void set_factorization_observer(FactorizationObserver observer);

} // namespace transurf
