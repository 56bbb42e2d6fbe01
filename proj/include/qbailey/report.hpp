#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qbailey {

/* Outcome of comparing the two sides of an identity (or the two sides of a
 * defining relation) to a given lattice order. Coefficients are exact
 * integers of arbitrary length; JSON carries them as decimal strings. */
struct VerifyReport {
    enum class Status { match, mismatch, error };

    std::string id;
    long order = 0;   // lattice units compared (exponents k < order, k/denom)
    int denom = 1;
    Status status = Status::match;

    struct Mismatch {
        long expo_num = 0;
        int denom = 1;
        mpz_class lhs, rhs;
        bool operator==(const Mismatch&) const = default;
    };
    std::optional<Mismatch> first_mismatch; // present iff status == mismatch

    std::string note;     // annotation / failing index / error message
    double wall_ms = 0.0;
    long term_count = 0;  // exponents below order where either side is nonzero

    bool ok_against_expectation(const std::optional<Mismatch>& expected) const;
    bool operator==(const VerifyReport&) const = default;
};

const char* to_string(VerifyReport::Status s);

/* {"schema":1,"reports":[...]}; parse(emit(r)) == r for every status */
std::string reports_to_json(std::span<const VerifyReport> reports);
std::vector<VerifyReport> reports_from_json(const std::string& text);

std::string report_to_text(const VerifyReport& r);

} // namespace qbailey
