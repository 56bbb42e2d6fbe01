#pragma once

#include "qbailey/bailey.hpp"
#include "qbailey/qseries.hpp"
#include "qbailey/report.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qbailey {

enum class Side { lhs, rhs };

/* One catalogued identity: both sides as independent builders, the lattice it
 * lives on, and the order verified by default. Entries whose statement is a
 * finite-index family carry the members explicitly; verify() then checks each
 * member and the top-level builders expose the aggregate (sum over the box)
 * for inspection.
 *
 * expected_mismatch pins entries that are catalogued exactly as displayed but
 * are known not to hold (see the eq-4.1 annotation): verification is OK when
 * the outcome reproduces the pinned first mismatch, and anything else —
 * including an unexpected match — is flagged. */
struct IdentityEntry {
    std::string id;
    int denom = 1;
    long default_order = 50;
    std::string description;
    std::string annotation;
    std::function<QSeries(long trunc)> lhs, rhs;

    struct Member {
        std::string label;
        std::function<QSeries(long trunc)> lhs, rhs;
    };
    std::vector<Member> family;

    std::optional<VerifyReport::Mismatch> expected_mismatch;
};

const std::vector<IdentityEntry>& catalog();
const IdentityEntry* find_entry(std::string_view id);

/* Builders for one side; throws on unknown id. */
QSeries build(std::string_view id, Side side, long trunc);

/* Compare both sides below `order` lattice units (exponents k/denom, k < order). */
VerifyReport verify(const IdentityEntry& entry, long order);
VerifyReport verify(std::string_view id, long order);

/* The 1/(q)_inf^(2M) family. M = 1 and 2 return the catalogued eq-4.7 and
 * eq-4.8; M = 3 assembles the 6-fold pair (lift of the tensor of the 2-fold
 * and 1-fold unit pairs) and compares its limit sum against 1/(q)_inf^6.
 * Larger M is rejected with the cost diagnostics. */
IdentityEntry gen_even_power_identity(int M);

/* Mock theta series exposed by name to the CLI. */
struct MockTheta {
    std::string id;
    std::string description;
    std::function<QSeries(long trunc)> build;
};
const std::vector<MockTheta>& mock_thetas();
const MockTheta* find_mock_theta(std::string_view id);

/* Named Bailey pairs (1-fold pairs are registered as 1-fold multifolds for a
 * uniform CLI surface). The catalogued pair-3.7-3.8 is the internally
 * consistent pair: alpha exactly as displayed, beta with the Eq (2.2)
 * prefactor 1/(aq)_{N1+N2} = 1/(q^2;q)_{N1+N2}; the displayed beta absorbs
 * the unit factor (1-q) into 1/(q)_{N1+N2+1}. */
const std::vector<MultifoldPair>& pair_registry();
const MultifoldPair* find_pair(std::string_view name);

OnefoldPair make_unit_onefold();   // a=1, alpha = delta_0, beta_n = 1/(q)_n^2
OnefoldPair make_pair_3536();      // a=q, indefinite-theta alpha, beta_n = (-1)^n/(q^2;q^2)_n
MultifoldPair make_unit_twofold();  // (4.3)-(4.4)
MultifoldPair make_unit_fourfold(); // (4.5)-(4.6)
MultifoldPair make_pair_3738();     // (3.7)-(3.8), consistent normalization

/* ---- testing hooks ---------------------------------------------------- */

/* Single-constant corruptions of the thm2-3.1 left side, used to show the
 * comparison is not vacuous: every mutation must produce a first mismatch at
 * low order against the genuine right side. */
enum class Thm31Mutation {
    drop_sign,       // (-1)^j  ->  +1
    quad_j_doubled,  // q^(j^2) ->  q^(2j^2)
    lin_j_doubled,   // q^j     ->  q^(2j)
    lin_j_dropped,   // q^j     ->  1
    inner_base_q,    // (q^2;q^2)_j -> (q;q)_j
    prefactor_index, // (q)_{n1+n2+1} -> (q)_{n1+n2}
    lin_n1_doubled,  // q^(n1)  ->  q^(2 n1)
};
constexpr Thm31Mutation kAllThm31Mutations[] = {
    Thm31Mutation::drop_sign,       Thm31Mutation::quad_j_doubled,
    Thm31Mutation::lin_j_doubled,   Thm31Mutation::lin_j_dropped,
    Thm31Mutation::inner_base_q,    Thm31Mutation::prefactor_index,
    Thm31Mutation::lin_n1_doubled,
};
const char* to_string(Thm31Mutation m);
QSeries thm2_31_lhs_mutated(Thm31Mutation m, long trunc);

/* A deliberately broken entry (sign corruption of thm2-3.1) used to exercise
 * the mismatch exit path end to end. The CLI registers it only when
 * QBAILEY_ENABLE_FIXTURES=1. */
IdentityEntry corrupted_fixture_entry();

} // namespace qbailey
