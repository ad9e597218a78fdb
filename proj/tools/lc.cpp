#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcn/enumerate.hpp"
#include "lcn/families.hpp"
#include "lcn/lc_core.hpp"

using json = nlohmann::ordered_json;

namespace {

// Integers go out as decimal strings: values here routinely exceed 2^53.
json record_json(const lcn::LcReport& rep) {
    json j;
    j["n"] = rep.n.str();
    json factors = json::array();
    for (const auto& [p, e] : rep.factorization.factors)
        for (unsigned i = 0; i < e; ++i) factors.push_back(p.str());
    j["factors"] = factors;
    j["is_lc"] = rep.is_lc;
    j["degree"] = rep.degree ? json(rep.degree->str()) : json(nullptr);
    j["primary"] = rep.primary ? json(*rep.primary) : json(nullptr);
    json sums = json::array();
    for (const auto& e : rep.per_prime)
        sums.push_back({{"p", e.p.str()}, {"s", e.s.str()}});
    j["digit_sums"] = sums;
    j["flags"] = rep.flags;
    return j;
}

std::optional<lcn::Integer> parse_integer(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t start = s[0] == '-' ? 1 : 0;
    if (start == s.size()) return std::nullopt;
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    return lcn::Integer(s);
}

// "A..B" or a single "A"
bool parse_range(const std::string& s, lcn::Integer& lo, lcn::Integer& hi) {
    auto pos = s.find("..");
    std::string a = pos == std::string::npos ? s : s.substr(0, pos);
    std::string b = pos == std::string::npos ? s : s.substr(pos + 2);
    auto la = parse_integer(a), lb = parse_integer(b);
    if (!la || !lb) return false;
    lo = *la;
    hi = *lb;
    return lo <= hi;
}

unsigned resolve_threads(unsigned cli_value) {
    if (cli_value > 0) return cli_value;
    if (const char* env = std::getenv("LC_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

int run_check(const std::string& arg) {
    auto n = parse_integer(arg);
    if (!n || *n < 2) {
        std::cerr << "check: expected an integer >= 2, got '" << arg << "'\n";
        return 2;
    }
    lcn::LcReport rep = lcn::analyze(*n);
    std::cout << record_json(rep).dump() << "\n";
    return rep.is_lc ? 0 : 1;
}

int run_enumerate(std::uint64_t limit, const std::string& method, bool compare, unsigned threads) {
    if (limit < 3) {
        std::cerr << "enumerate: limit must be >= 3\n";
        return 2;
    }
    if (compare) {
        lcn::EnumerationResult a = lcn::enumerate_dfs(limit, threads);
        lcn::EnumerationResult b = lcn::enumerate_oracle(limit);
        auto cmp = lcn::compare_enumerations(a, b);
        for (const auto& e : a.entries) std::cout << record_json(e).dump() << "\n";
        if (!cmp.equal) {
            std::cerr << "enumerate: methods diverge at index " << *cmp.first_divergence << "\n";
            return 1;
        }
        return 0;
    }
    lcn::EnumerationResult res = method == "oracle" ? lcn::enumerate_oracle(limit)
                                                    : lcn::enumerate_dfs(limit, threads);
    for (const auto& e : res.entries) std::cout << record_json(e).dump() << "\n";
    return 0;
}

int run_family(const lcn::FamilySpec& spec, const std::string& m_range, const std::string& stride_str,
               bool require_prime, bool verify_symbolic, bool digit_sums, bool allow_inadmissible,
               unsigned threads) {
    if (verify_symbolic) {
        bool all_ok = true;
        bool c = lcn::verify_congruence_symbolic(spec);
        std::cout << "congruence " << (c ? "pass" : "fail") << "\n";
        all_ok = all_ok && c;
        for (std::size_t i = 0; i < spec.claims.size(); ++i) {
            bool e = lcn::verify_expansion_symbolic(spec, spec.claims[i]);
            std::cout << "expansion[" << i << "] " << (e ? "pass" : "fail") << "\n";
            all_ok = all_ok && e;
        }
        if (m_range.empty()) return all_ok ? 0 : 1;
        if (!all_ok) return 1;
    }
    if (m_range.empty()) return 0;

    lcn::Integer lo, hi;
    if (!parse_range(m_range, lo, hi)) {
        std::cerr << "family: bad m range '" << m_range << "' (expected A..B)\n";
        return 2;
    }
    lcn::Integer stride = spec.m_divisor;
    if (!stride_str.empty()) {
        auto s = parse_integer(stride_str);
        if (!s || *s < 1) {
            std::cerr << "family: bad stride\n";
            return 2;
        }
        stride = *s;
    }

    if (require_prime) {
        lcn::KtupleOptions opts;
        opts.allow_inadmissible = allow_inadmissible;
        opts.threads = threads;
        lcn::KtupleResult res = lcn::ktuple_search(spec, lo, hi, stride, opts);
        for (const auto& hit : res.hits) {
            json j = record_json(hit.report);
            j["m"] = hit.m.str();
            if (digit_sums) {
                json prof = json::array();
                for (const auto& [p, s] : lcn::digit_sum_profile(spec, hit.m, allow_inadmissible))
                    prof.push_back({{"p", p.str()}, {"s", s.str()}});
                j["digit_sums"] = prof;
            }
            std::cout << j.dump() << "\n";
        }
        std::cerr << "scanned " << res.scanned << " values of m, " << res.hits.size() << " hits\n";
        return 0;
    }

    for (lcn::Integer m = lo; m <= hi; m += stride) {
        lcn::EvalResult ev = lcn::evaluate(spec, m, allow_inadmissible);
        json j;
        j["m"] = m.str();
        j["n"] = ev.n.str();
        json factors = json::array();
        for (const auto& v : ev.factor_values) factors.push_back(v.str());
        j["factors"] = factors;
        j["all_prime"] = ev.all_prime;
        if (digit_sums) {
            json prof = json::array();
            for (const auto& [p, s] : lcn::digit_sum_profile(spec, m, allow_inadmissible))
                prof.push_back({{"p", p.str()}, {"s", s.str()}});
            j["digit_sums"] = prof;
        }
        if (!ev.primality_certain) j["flags"] = json::array({"probable-prime"});
        std::cout << j.dump() << "\n";
    }
    return 0;
}

int run_derive(const std::string& arg) {
    auto n = parse_integer(arg);
    if (!n || *n < 2) {
        std::cerr << "derive-family: expected an integer >= 2\n";
        return 2;
    }
    lcn::LcReport rep = lcn::analyze(*n);
    if (!rep.is_lc) {
        std::cerr << "derive-family: " << *n << " is not a Lucas-Carmichael integer\n";
        return 1;
    }
    if (rep.factorization.omega() % 2 == 0) {
        std::cerr << "derive-family: " << *n << " has an even number of prime factors\n";
        return 1;
    }
    lcn::DerivedFamily d = lcn::derive_family(rep);
    std::cout << "# seed " << d.seed << "\n";
    std::cout << "# k1 = " << d.k1 << "\n";
    std::cout << "# r =";
    for (const auto& r : d.r) std::cout << " " << r;
    std::cout << "\n# R = " << d.R << "\n";
    lcn::format_family_config(d.spec, std::cout);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lucas-Carmichael integers: digit-sum tests, enumeration, polynomial families"};
    app.require_subcommand(1);
    unsigned threads = 0; // 0 = LC_THREADS env, then hardware concurrency
    app.add_option("--threads", threads, "Worker threads (default: LC_THREADS env or all cores)");

    auto* check = app.add_subcommand("check", "Classify one integer");
    std::string check_n;
    check->add_option("n", check_n, "Integer to test")->required();

    auto* enumerate = app.add_subcommand("enumerate", "List Lucas-Carmichael integers up to a limit");
    std::uint64_t limit = 0;
    std::string method = "dfs";
    bool compare = false;
    enumerate->add_option("--limit", limit, "Upper bound")->required();
    enumerate->add_option("--method", method, "dfs or oracle")
        ->check(CLI::IsMember({"dfs", "oracle"}));
    enumerate->add_flag("--compare", compare, "Run both methods and fail on divergence");

    auto* family = app.add_subcommand("family", "Evaluate, search, or verify a polynomial family");
    std::string fam_name, spec_file, m_range, stride_str;
    bool require_prime = false, verify_symbolic = false, digit_sums = false, allow_inadmissible = false;
    family->add_option("name", fam_name, "Built-in family: u3, u5, or u7");
    family->add_option("--spec", spec_file, "Family config file (one 'a b' form per line)");
    family->add_option("--m", m_range, "m range A..B (or a single value)");
    family->add_option("--stride", stride_str, "Step between m values (default: the family's m divisor)");
    family->add_flag("--require-prime", require_prime, "Emit only m where every factor is prime");
    family->add_flag("--verify-symbolic", verify_symbolic, "Check congruence and expansion identities");
    family->add_flag("--digit-sums", digit_sums, "Append the per-factor digit-sum profile");
    family->add_flag("--allow-inadmissible", allow_inadmissible, "Scan m outside the admissible set");

    auto* derive = app.add_subcommand("derive-family", "Derive a polynomial family from an LC seed");
    std::string derive_n;
    derive->add_option("n", derive_n, "Seed Lucas-Carmichael integer")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*check) return run_check(check_n);
        if (*enumerate) return run_enumerate(limit, method, compare, resolve_threads(threads));
        if (*family) {
            lcn::FamilySpec spec;
            if (!spec_file.empty()) {
                std::ifstream in(spec_file);
                if (!in) {
                    std::cerr << "family: cannot open spec file '" << spec_file << "'\n";
                    return 2;
                }
                spec = lcn::parse_family_config(in);
            } else if (fam_name == "u3") {
                spec = lcn::builtin(lcn::BuiltinFamily::u3);
            } else if (fam_name == "u5") {
                spec = lcn::builtin(lcn::BuiltinFamily::u5);
            } else if (fam_name == "u7") {
                spec = lcn::builtin(lcn::BuiltinFamily::u7);
            } else {
                std::cerr << "family: expected u3, u5, u7, or --spec FILE\n";
                return 2;
            }
            return run_family(spec, m_range, stride_str, require_prime, verify_symbolic, digit_sums,
                              allow_inadmissible, resolve_threads(threads));
        }
        if (*derive) return run_derive(derive_n);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
