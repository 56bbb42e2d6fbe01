#include "qbailey/catalog.hpp"
#include "qbailey/report.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

namespace {

using namespace qbailey;

std::optional<long> env_default_order() {
    const char* s = std::getenv("QBAILEY_DEFAULT_ORDER");
    if (!s || !*s) return std::nullopt;
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end == s || *end != '\0' || v < 1)
        throw CLI::ValidationError("QBAILEY_DEFAULT_ORDER", "must be a positive integer");
    return v;
}

bool fixtures_enabled() {
    const char* s = std::getenv("QBAILEY_ENABLE_FIXTURES");
    return s && std::string(s) == "1";
}

std::vector<IdentityEntry> active_entries() {
    std::vector<IdentityEntry> v = catalog();
    if (fixtures_enabled()) v.push_back(corrupted_fixture_entry());
    return v;
}

long resolve_order(std::optional<long> cli_order, long fallback) {
    if (cli_order) return *cli_order;
    if (auto env = env_default_order()) return *env;
    return fallback;
}

int run_verify(const std::vector<std::string>& ids, bool all, std::optional<long> order,
               int jobs, const std::string& format) {
    const std::vector<IdentityEntry> entries = active_entries();
    std::vector<const IdentityEntry*> selected;
    if (all) {
        for (const auto& e : entries) selected.push_back(&e);
    } else {
        if (ids.empty()) {
            std::cerr << "verify: no ids given (use --all or see `list`)\n";
            return 2;
        }
        for (const auto& id : ids) {
            const IdentityEntry* found = nullptr;
            for (const auto& e : entries)
                if (e.id == id) { found = &e; break; }
            if (!found) {
                std::cerr << "verify: unknown identity id: " << id << "\n";
                return 2;
            }
            selected.push_back(found);
        }
    }

    std::vector<VerifyReport> reports(selected.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= selected.size()) return;
            reports[i] = verify(*selected[i], resolve_order(order, selected[i]->default_order));
        }
    };
    const int n_threads = std::min<int>(jobs, static_cast<int>(selected.size()));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    bool any_unexpected_mismatch = false, any_error = false;
    for (size_t i = 0; i < selected.size(); ++i) {
        if (reports[i].status == VerifyReport::Status::error) any_error = true;
        else if (!reports[i].ok_against_expectation(selected[i]->expected_mismatch))
            any_unexpected_mismatch = true;
    }

    if (format == "json") {
        std::cout << reports_to_json(reports) << "\n";
    } else {
        for (size_t i = 0; i < selected.size(); ++i) {
            std::cout << report_to_text(reports[i]);
            if (selected[i]->expected_mismatch &&
                reports[i].ok_against_expectation(selected[i]->expected_mismatch))
                std::cout << " [as documented]";
            std::cout << "\n";
        }
    }
    if (any_error) return 2;
    return any_unexpected_mismatch ? 1 : 0;
}

int run_list() {
    for (const auto& e : active_entries()) {
        std::cout << e.id << "  (denom " << e.denom << ", default order " << e.default_order
                  << ")\n    " << e.description << "\n";
        if (!e.annotation.empty()) std::cout << "    note: " << e.annotation << "\n";
    }
    return 0;
}

void print_series(const QSeries& s, const std::string& format) {
    if (format == "csv") {
        std::cout << "expo_num,denom,coeff\n";
        s.write_csv(std::cout);
    } else {
        std::cout << s.to_text() << "\n";
    }
}

std::vector<long> parse_index_list(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        out.push_back(std::stol(tok));
    return out;
}

int run_expand(const std::string& target, std::optional<long> order, const std::string& format,
               int sign, long e, long base, const std::string& length, int denom, bool recip,
               const std::string& id, const std::string& name) {
    if (target == "poch") {
        const long T = resolve_order(order, denom == 2 ? 100 : 50);
        PochSpec spec{sign, e, base,
                      length == "inf" ? std::optional<long>{} : std::stol(length)};
        print_series(recip ? poch_reciprocal(spec, denom, T) : poch(spec, denom, T), format);
        return 0;
    }
    if (target == "pair-alpha" || target == "pair-beta") {
        const MultifoldPair* p = find_pair(name);
        if (!p) {
            std::cerr << "expand: unknown pair name: " << name << "\n";
            return 2;
        }
        const std::vector<long> idx = parse_index_list(length); // --n doubles as the index list
        if (static_cast<int>(idx.size()) != p->folds) {
            std::cerr << "expand: pair " << name << " needs " << p->folds << " indices\n";
            return 2;
        }
        for (long v : idx)
            if (v < 0) {
                std::cerr << "expand: indices must be >= 0\n";
                return 2;
            }
        const long T = resolve_order(order, p->denom == 2 ? 100 : 50);
        print_series(target == "pair-alpha" ? p->alpha(idx, T) : p->beta(idx, T), format);
        return 0;
    }
    if (target == "lhs" || target == "rhs") {
        const IdentityEntry* entry = nullptr;
        for (const auto& en : active_entries())
            if (en.id == id) { entry = &en; break; }
        if (!entry) {
            std::cerr << "expand: unknown identity id: " << id << "\n";
            return 2;
        }
        const long T = resolve_order(order, entry->default_order);
        print_series(target == "lhs" ? entry->lhs(T) : entry->rhs(T), format);
        return 0;
    }
    if (const MockTheta* m = find_mock_theta(target)) {
        const long T = resolve_order(order, 50);
        print_series(m->build(T), format);
        return 0;
    }
    std::cerr << "expand: unknown target '" << target
              << "' (expected poch, pair-alpha, pair-beta, lhs, rhs, or a mock theta id)\n";
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qbailey: exact q-series engine and Bailey-pair identity verifier"};
    app.require_subcommand(1);

    auto* verify_cmd = app.add_subcommand("verify", "compare both sides of catalogued identities");
    std::vector<std::string> ids;
    bool all = false;
    long order_raw = -1;
    int jobs = 1;
    std::string v_format = "text";
    verify_cmd->add_option("ids", ids, "identity ids (see `list`)");
    verify_cmd->add_flag("--all", all, "verify every catalogued identity");
    verify_cmd
        ->add_option("--order", order_raw,
                     "lattice order: compare exponents k/denom for k < order")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--jobs", jobs, "verify up to N identities concurrently")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--format", v_format)->check(CLI::IsMember({"text", "json"}));

    app.add_subcommand("list", "list catalogued identities");

    auto* expand_cmd = app.add_subcommand("expand", "print a named series");
    std::string target, e_format = "text", length = "inf", id, name;
    int sign = 1, denom = 1;
    long e = 1, base = 1;
    long e_order_raw = -1;
    bool recip = false;
    expand_cmd->add_option("target", target,
                           "poch | pair-alpha | pair-beta | lhs | rhs | <mock theta id>")
        ->required();
    expand_cmd->add_option("--order", e_order_raw, "truncation order in lattice units")
        ->check(CLI::PositiveNumber);
    expand_cmd->add_option("--format", e_format)->check(CLI::IsMember({"text", "csv"}));
    expand_cmd->add_option("--sign", sign, "poch: +1 or -1")->check(CLI::IsMember({-1, 1}));
    expand_cmd->add_option("--e", e, "poch: argument exponent numerator");
    expand_cmd->add_option("--base", base, "poch: base exponent numerator");
    expand_cmd->add_option("--n", length, "poch: length (integer or 'inf'); pairs: index list i,j,...");
    expand_cmd->add_option("--denom", denom, "exponent lattice denominator")
        ->check(CLI::IsMember({1, 2, 4}));
    expand_cmd->add_flag("--recip", recip, "poch: expand the reciprocal");
    expand_cmd->add_option("--id", id, "lhs/rhs: identity id");
    expand_cmd->add_option("--name", name, "pairs: registered pair name");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        if (ex.get_exit_code() == 0) return app.exit(ex); // --help
        app.exit(ex);
        return 2;
    }

    try {
        if (verify_cmd->parsed())
            return run_verify(ids, all,
                              order_raw > 0 ? std::optional<long>(order_raw) : std::nullopt,
                              jobs, v_format);
        if (app.get_subcommand("list")->parsed()) return run_list();
        return run_expand(target,
                          e_order_raw > 0 ? std::optional<long>(e_order_raw) : std::nullopt,
                          e_format, sign, e, base, length, denom, recip, id, name);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
