#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "radix/construct.hpp"
#include "radix/indexdiv.hpp"
#include "radix/reference_table.hpp"
#include "radix/splitting.hpp"

using json = nlohmann::ordered_json;
using namespace radix;

namespace {

json shape_json(const FactorShape& shape) {
    FactorShape c = shape;
    c.canonicalize();
    json arr = json::array();
    for (const auto& en : c.entries) arr.push_back({en.e, en.f, en.count});
    return arr;
}

// product notation: one factor per distinct prime, residue degree annotated
std::string shape_pretty(const FactorShape& shape) {
    FactorShape c = shape;
    c.canonicalize();
    std::string out;
    int idx = 1;
    for (const auto& en : c.entries)
        for (long long i = 0; i < en.count; ++i) {
            if (!out.empty()) out += " ";
            out += "P" + std::to_string(idx++);
            if (en.e > 1) out += "^" + std::to_string(en.e);
            out += "(f=" + std::to_string(en.f) + ")";
        }
    return out;
}

BigInt parse_big(const std::string& s) {
    try {
        return BigInt(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: " + s);
    }
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

json report_for(const std::string& command) {
    json r;
    r["schema_version"] = "1";
    r["command"] = command;
    return r;
}

json split_json(const SplitReport& rep, bool pretty) {
    json r;
    r["case"] = rep.case_label;
    r["shape"] = shape_json(rep.shape);
    if (pretty) r["shape_pretty"] = shape_pretty(rep.shape);
    r["mirrors"] = rep.mirrors;
    r["notes"] = rep.notes;
    r["reduced"] = rep.reduced;
    r["removed_root"] = rep.removed_root.str();
    return r;
}

int cmd_split(long long n, const std::string& a_str, const std::string& p_str, bool pretty) {
    BigInt a = parse_big(a_str);
    BigInt p = parse_big(p_str);
    if (!is_probable_prime(p)) throw std::invalid_argument("p must be prime");
    SplitReport rep = split(n, a, p);
    json r = report_for("split");
    r["input"] = {{"n", n}, {"a", a.str()}, {"p", p.str()}};
    r["result"] = split_json(rep, pretty);
    emit(r);
    return 0;
}

int cmd_cnid(long long n, const std::string& a_str, int N, long long prime) {
    BigInt a = parse_big(a_str);
    auto norm = normalize_input(n, a);
    const RadicalInput& in = norm.input;
    json r = report_for("cnid");
    r["input"] = {{"n", n}, {"a", a.str()}, {"N", N}};
    json verdicts = json::object();
    auto primes = prime_divisors(n);
    if (prime > 0) primes = {prime};
    for (long long p : primes) {
        if (n % p != 0) {
            verdicts[std::to_string(p)] = false; // only p | n can obstruct
            continue;
        }
        bool formula = cnid_formula(in, p, N);
        bool pleasants = is_cnid(split(in, BigInt(p)).shape, p, N);
        if (formula != pleasants)
            throw std::logic_error("index-divisor paths disagree at p = " + std::to_string(p));
        verdicts[std::to_string(p)] = formula;
    }
    r["result"]["verdicts"] = verdicts;
    auto g = min_generators(in);
    r["result"]["min_generators"] = {
        {"generators", g.generators}, {"max_n", g.max_n}, {"certainty", g.certainty}};
    emit(r);
    return 0;
}

json poly_json(const oracle::IntPoly& f) {
    json arr = json::array();
    for (const auto& c : f) arr.push_back(c.str());
    return arr;
}

int cmd_construct(const std::string& sub, int N, long long n, long long p, long long ell,
                  long long seed, long long budget, bool pretty) {
    json r = report_for("construct " + sub);
    if (sub == "cnid-example") {
        RadicalInput in = cnid_family(N);
        r["input"] = {{"N", N}};
        r["result"] = {{"n", in.n},
                       {"a", in.a.str()},
                       {"is_cnid", cnid_formula(in, 2, N)},
                       {"case", split2(in).case_label}};
    } else if (sub == "pleasants-poly") {
        auto f = pleasants_poly(p, N, ell);
        auto ore = oracle::ore_shape(f, p);
        r["input"] = {{"p", p}, {"N", N}, {"ell", ell}};
        r["result"] = {{"degree", (long long)f.size() - 1},
                       {"coefficients", poly_json(f)},
                       {"oracle_conclusive", ore.conclusive},
                       {"shape", shape_json(ore.shape)}};
        if (pretty) r["result"]["shape_pretty"] = shape_pretty(ore.shape);
    } else if (sub == "exceptional-disc") {
        auto cert = exceptional_disc_search(n, budget, {}, seed);
        r["input"] = {{"n", n}, {"seed", seed}, {"budget", budget}};
        r["result"] = {{"n", cert.n},
                       {"a", cert.a.str()},
                       {"p", cert.p},
                       {"ell", cert.ell},
                       {"m", cert.mm},
                       {"xi", cert.xi},
                       {"ell_pow_mod_p", cert.ell_pow_mod_p.str()},
                       {"disc_mod_p", cert.disc_mod_p.str()},
                       {"checks", cert.checks}};
    } else if (sub == "exceptional-index") {
        auto w = exceptional_index_search(n, budget, seed);
        r["input"] = {{"n", n}, {"seed", seed}, {"budget", budget}};
        std::string reduced = w.c.str() + "*X1^" + std::to_string(w.n * (w.n - 1) / 2);
        r["result"] = {{"n", w.n},
                       {"p", w.p},
                       {"k", w.k},
                       {"reduced_form", reduced},
                       {"full_matrix_checked", w.full_matrix_checked},
                       {"insolvable", w.insolvable},
                       {"full_form_monomials", (long long)w.full_form.size()}};
    } else {
        throw std::invalid_argument("unknown construct subcommand: " + sub);
    }
    emit(r);
    return 0;
}

int cmd_verify(const std::string& sub, long long n, const std::string& a_str,
               const std::string& p_str, int m, long long precision, bool pretty) {
    json r = report_for("verify " + sub);
    if (sub == "table") {
        json rows = json::array();
        bool all_ok = true;
        for (const auto& row : reference_table()) {
            SplitReport rep = split(RadicalInput::make(row.n, row.a), 2);
            bool ok = rep.case_label == row.case_label && rep.shape == row.shape;
            all_ok = all_ok && ok;
            json jr = {{"n", row.n},
                       {"a", row.a.str()},
                       {"case", rep.case_label},
                       {"shape", shape_json(rep.shape)},
                       {"pass", ok}};
            if (pretty) jr["shape_pretty"] = shape_pretty(rep.shape);
            rows.push_back(jr);
        }
        r["result"] = {{"rows", rows}, {"pass", all_ok}};
        emit(r);
        return all_ok ? 0 : 1;
    }
    if (sub == "oracle") {
        BigInt a = parse_big(a_str);
        BigInt p = parse_big(p_str);
        if (!is_probable_prime(p)) throw std::invalid_argument("p must be prime");
        auto agr = validate_against_oracle(RadicalInput::make(n, a), p);
        r["input"] = {{"n", n}, {"a", a.str()}, {"p", p.str()}};
        r["result"] = {{"case", agr.report.case_label},
                       {"shape", shape_json(agr.report.shape)},
                       {"oracle_conclusive", agr.oracle_conclusive},
                       {"agree", agr.agree},
                       {"oracle_detail", agr.oracle_detail},
                       {"velez_run", agr.velez_run},
                       {"velez_ok", agr.velez_ok}};
        emit(r);
        return !agr.oracle_conclusive || agr.agree ? 0 : 1;
    }
    if (sub == "velez") {
        BigInt a = parse_big(a_str);
        auto rep = oracle::verify_velez(m, a, precision);
        r["input"] = {{"m", m}, {"a", a.str()}, {"precision", precision}};
        r["result"] = {{"case", rep.case_label},
                       {"irreducible", rep.irreducible},
                       {"verified", rep.verified},
                       {"product_ok", rep.product_ok},
                       {"degrees_ok", rep.degrees_ok},
                       {"precision_used", rep.precision_used},
                       {"shape", shape_json(rep.shape)},
                       {"message", rep.message}};
        emit(r);
        return rep.verified ? 0 : 1;
    }
    throw std::invalid_argument("unknown verify subcommand: " + sub);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"splitting of primes in radical number fields Q(a^(1/n))"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "add product-notation rendering to the JSON output");
    bool json_flag = false;
    app.add_flag("--json", json_flag, "JSON output (the default)");

    long long n = 0, prime = 0, seed = 0, budget = 200000, precision = 0;
    int N = 1, m = 1;
    std::string a_str, p_str, sub;

    auto* sp = app.add_subcommand("split", "factor shape of a prime p in Q(a^(1/n))");
    sp->add_option("--n", n)->required();
    sp->add_option("--a", a_str)->required();
    sp->add_option("--p", p_str)->required();

    auto* cn = app.add_subcommand("cnid", "common N-index divisor verdicts and generator count");
    cn->add_option("--n", n)->required();
    cn->add_option("--a", a_str)->required();
    cn->add_option("--N", N)->required();
    cn->add_option("--prime", prime, "restrict to one prime");

    auto* co = app.add_subcommand("construct", "build example fields and polynomials");
    co->add_option("subcommand", sub,
                   "cnid-example | pleasants-poly | exceptional-disc | exceptional-index")
        ->required();
    co->add_option("--N", N);
    co->add_option("--n", n);
    co->add_option("--p", p_str);
    co->add_option("--ell", prime);
    co->add_option("--seed", seed);
    co->add_option("--budget", budget);

    auto* ve = app.add_subcommand("verify", "cross-check closed forms against the oracle");
    ve->add_option("subcommand", sub, "oracle | velez | table")->required();
    ve->add_option("--n", n);
    ve->add_option("--a", a_str);
    ve->add_option("--p", p_str);
    ve->add_option("--m", m);
    ve->add_option("--precision", precision);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sp->parsed()) return cmd_split(n, a_str, p_str, pretty);
        if (cn->parsed()) return cmd_cnid(n, a_str, N, prime);
        if (co->parsed()) {
            long long pp = p_str.empty() ? 0 : (long long)parse_big(p_str);
            return cmd_construct(sub, N, n, pp, prime, seed, budget, pretty);
        }
        if (ve->parsed()) {
            if (precision <= 0) precision = oracle::default_precision();
            return cmd_verify(sub, n, a_str, p_str, m, precision, pretty);
        }
    } catch (const BudgetExhausted& e) {
        json r = report_for("error");
        r["error"] = e.what();
        r["attempts"] = e.attempts;
        emit(r);
        return 3;
    } catch (const std::invalid_argument& e) {
        json r = report_for("error");
        r["error"] = e.what();
        emit(r);
        return 2;
    } catch (const std::exception& e) {
        json r = report_for("error");
        r["error"] = e.what();
        emit(r);
        return 1;
    }
    return 1;
}
