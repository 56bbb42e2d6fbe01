#include "qbailey/report.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace qbailey {

using nlohmann::ordered_json;

const char* to_string(VerifyReport::Status s) {
    switch (s) {
        case VerifyReport::Status::match: return "match";
        case VerifyReport::Status::mismatch: return "mismatch";
        case VerifyReport::Status::error: return "error";
    }
    return "?";
}

bool VerifyReport::ok_against_expectation(const std::optional<Mismatch>& expected) const {
    if (!expected)
        return status == Status::match;
    return status == Status::mismatch && first_mismatch && *first_mismatch == *expected;
}

static ordered_json report_to_jobj(const VerifyReport& r) {
    ordered_json j;
    j["id"] = r.id;
    j["order"] = r.order;
    j["denom"] = r.denom;
    j["status"] = to_string(r.status);
    if (r.first_mismatch) {
        const auto& m = *r.first_mismatch;
        j["first_mismatch"] = {{"expo_num", m.expo_num},
                               {"denom", m.denom},
                               {"lhs", m.lhs.get_str()},
                               {"rhs", m.rhs.get_str()}};
    }
    if (!r.note.empty()) j["note"] = r.note;
    j["wall_ms"] = r.wall_ms;
    j["terms"] = r.term_count;
    return j;
}

static VerifyReport report_from_jobj(const ordered_json& j) {
    VerifyReport r;
    r.id = j.at("id").get<std::string>();
    r.order = j.at("order").get<long>();
    r.denom = j.at("denom").get<int>();
    const std::string st = j.at("status").get<std::string>();
    if (st == "match")
        r.status = VerifyReport::Status::match;
    else if (st == "mismatch")
        r.status = VerifyReport::Status::mismatch;
    else if (st == "error")
        r.status = VerifyReport::Status::error;
    else
        throw std::invalid_argument("VerifyReport: unknown status " + st);
    if (j.contains("first_mismatch")) {
        const auto& m = j.at("first_mismatch");
        VerifyReport::Mismatch fm;
        fm.expo_num = m.at("expo_num").get<long>();
        fm.denom = m.at("denom").get<int>();
        fm.lhs = mpz_class(m.at("lhs").get<std::string>());
        fm.rhs = mpz_class(m.at("rhs").get<std::string>());
        r.first_mismatch = fm;
    }
    if (j.contains("note")) r.note = j.at("note").get<std::string>();
    r.wall_ms = j.at("wall_ms").get<double>();
    r.term_count = j.at("terms").get<long>();
    return r;
}

std::string reports_to_json(std::span<const VerifyReport> reports) {
    ordered_json j;
    j["schema"] = 1;
    j["reports"] = ordered_json::array();
    for (const auto& r : reports)
        j["reports"].push_back(report_to_jobj(r));
    return j.dump(2);
}

std::vector<VerifyReport> reports_from_json(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    if (!j.contains("schema") || j.at("schema").get<int>() != 1)
        throw std::invalid_argument("reports_from_json: unsupported schema");
    std::vector<VerifyReport> out;
    for (const auto& jr : j.at("reports"))
        out.push_back(report_from_jobj(jr));
    return out;
}

std::string report_to_text(const VerifyReport& r) {
    std::ostringstream os;
    os << r.id << ": " << to_string(r.status) << " (order " << r.order;
    if (r.denom != 1) os << ", denom " << r.denom;
    os << ", " << r.term_count << " terms, " << r.wall_ms << " ms)";
    if (r.first_mismatch) {
        const auto& m = *r.first_mismatch;
        os << " first mismatch at q^(" << m.expo_num << "/" << m.denom
           << "): lhs " << m.lhs.get_str() << ", rhs " << m.rhs.get_str();
    }
    if (!r.note.empty()) os << " [" << r.note << "]";
    return os.str();
}

} // namespace qbailey
