// dlchi: exact Euler characteristics of twisted flag configuration varieties
// for GL_n, with brute-force finite field verification.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dlchi/dlchi.hpp"

using json = nlohmann::ordered_json;
using namespace dlchi;

namespace {

json big_to_json(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<int64_t>::min();
    static const BigInt hi = std::numeric_limits<int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<int64_t>();
    return v.str();
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw usage_error("cannot open output file " + out_path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

json samples_to_json(const std::vector<CountSample>& samples) {
    json arr = json::array();
    for (const CountSample& s : samples) {
        json e;
        e["p"] = s.p;
        e["k"] = s.k;
        e["q"] = s.q;
        e["count"] = s.count;
        arr.push_back(e);
    }
    return arr;
}

json poly_to_json(const std::vector<BigInt>& coeffs) {
    json arr = json::array();
    for (const BigInt& c : coeffs) arr.push_back(big_to_json(c));
    return arr;
}

json case_to_json(const CaseResult& c) {
    json e;
    e["id"] = c.id;
    e["check"] = c.check;
    e["w"] = c.w_one_line.empty() ? json(nullptr) : json(c.w_one_line);
    e["rho"] = c.rho.empty() ? json(nullptr) : json(c.rho);
    e["lambda"] = c.lambda.empty() ? json(nullptr) : json(c.lambda);
    e["lambda_prime"] = c.lambda_prime.empty() ? json(nullptr) : json(c.lambda_prime);
    e["spec"] = c.spec.empty() ? json(nullptr) : json(c.spec);
    e["samples"] = samples_to_json(c.samples);
    e["poly"] = poly_to_json(c.poly);
    e["phi_at_1"] = c.has_value ? big_to_json(c.value) : json(nullptr);
    e["expected"] = c.has_expected ? big_to_json(c.expected) : json(nullptr);
    e["status"] = c.status;
    if (!c.detail.empty()) e["detail"] = c.detail;
    return e;
}

json config_json(int n, const PipelineOptions& opts, const std::string& only) {
    json cfg;
    cfg["n"] = n;
    cfg["mode"] = to_string(opts.mode);
    cfg["q"] = opts.power_base;
    cfg["budget"] = opts.flag_budget;
    cfg["threads"] = resolve_threads(opts.threads);
    if (!only.empty()) cfg["only"] = only;
    return cfg;
}

std::string render_json(const json& j) { return j.dump(2); }

/* Splits on commas that are not nested in parentheses or brackets. */
std::vector<std::string> split_top_level(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

/* --only "w=(1 2),lambda=(2,1,1)": every term must match the case. */
CaseFilter parse_only_filter(const std::string& expr, int n) {
    if (expr.empty()) return nullptr;
    struct Term {
        std::string key;
        std::string value;
    };
    auto terms = std::make_shared<std::vector<Term>>();
    for (const std::string& raw : split_top_level(expr)) {
        auto eq = raw.find('=');
        if (eq == std::string::npos)
            throw usage_error("bad --only term '" + raw + "', expected key=value");
        std::string key = raw.substr(0, eq);
        std::string value = raw.substr(eq + 1);
        if (key != "check" && key != "w" && key != "rho" && key != "lambda" &&
            key != "lambda_prime" && key != "spec")
            throw usage_error("unknown --only key '" + key + "'");
        terms->push_back({key, value});
    }
    return [terms, n](const CaseResult& c) {
        for (const Term& t : *terms) {
            if (t.key == "check") {
                if (c.check != t.value) return false;
            } else if (t.key == "w") {
                PermutationW w = parse_cycles(n, t.value);
                if (c.w_one_line != w.one_line()) return false;
            } else if (t.key == "rho") {
                if (c.rho != parse_partition(t.value).to_string()) return false;
            } else if (t.key == "lambda") {
                if (c.lambda != parse_partition(t.value).to_string()) return false;
            } else if (t.key == "lambda_prime") {
                if (c.lambda_prime != parse_partition(t.value).to_string()) return false;
            } else if (t.key == "spec") {
                if (c.spec != parse_spec(t.value).to_string()) return false;
            }
        }
        return true;
    };
}

struct CommonArgs {
    std::string format = "text";
    std::string out;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--format", args.format, "output format: text,json,csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", args.out, "write output to a file instead of stdout");
}

// ---------------------------------------------------------------- chi

int run_chi(int n, const std::string& rho_s, const std::string& lambda_s,
            const std::string& methods_s, uint64_t coset_budget, const CommonArgs& io) {
    if (n < 1 || n > 10) throw usage_error("chi supports 1 <= n <= 10");
    Partition rho = parse_partition(rho_s);
    Partition lambda = parse_partition(lambda_s);
    if (rho.weight() != n || lambda.weight() != n)
        throw usage_error("rho and lambda must be partitions of n");

    std::vector<std::string> methods;
    for (const std::string& m : split_top_level(methods_s)) {
        if (m != "count" && m != "recursive" && m != "scalar" && m != "induced" && m != "green")
            throw usage_error("unknown method '" + m + "'");
        methods.push_back(m);
    }
    if (methods.empty()) throw usage_error("no methods selected");

    std::vector<std::pair<std::string, BigInt>> values;
    for (const std::string& m : methods) {
        if (m == "count") values.emplace_back(m, x_count(rho, lambda));
        else if (m == "recursive") values.emplace_back(m, x_recursive(rho, lambda));
        else if (m == "scalar") values.emplace_back(m, scalar_product_ph(rho, lambda));
        else if (m == "induced") values.emplace_back(m, induced_trivial_value(lambda, rho, coset_budget));
        else values.emplace_back(m, BigInt(green_polynomial(rho, lambda)(1)));
    }
    bool agree = true;
    for (const auto& [name, v] : values) agree = agree && v == values.front().second;

    if (io.format == "json") {
        json j;
        j["version"] = kVersion;
        j["command"] = "chi";
        j["n"] = n;
        j["rho"] = rho.to_string();
        j["lambda"] = lambda.to_string();
        json mv;
        for (const auto& [name, v] : values) mv[name] = big_to_json(v);
        j["methods"] = mv;
        j["agree"] = agree;
        j["value"] = big_to_json(values.front().second);
        emit(render_json(j), io.out);
    } else if (io.format == "csv") {
        std::ostringstream os;
        os << "rho,lambda,method,value\n";
        for (const auto& [name, v] : values)
            os << csv_quote(rho.to_string()) << ',' << csv_quote(lambda.to_string()) << ','
               << name << ',' << v.str() << '\n';
        emit(os.str(), io.out);
    } else {
        std::ostringstream os;
        os << "X(rho=" << rho.to_string() << ", lambda=" << lambda.to_string() << ")\n";
        for (const auto& [name, v] : values)
            os << "  " << name << ": " << v.str() << "\n";
        os << (agree ? "agree" : "DISAGREE") << ": " << values.front().second.str();
        emit(os.str(), io.out);
    }
    return agree ? 0 : 1;
}

// ---------------------------------------------------------------- table

int run_table(int n, const CommonArgs& io) {
    if (n < 1 || n > 10) throw usage_error("table supports 1 <= n <= 10");
    std::vector<Partition> labels = all_partitions(n);
    std::reverse(labels.begin(), labels.end()); // ascending, (1^n) first
    std::vector<std::vector<BigInt>> values;
    for (const Partition& rho : labels) {
        std::vector<BigInt> row;
        for (const Partition& lam : labels) row.push_back(x_count(rho, lam));
        values.push_back(std::move(row));
    }
    if (io.format == "json") {
        json j;
        j["version"] = kVersion;
        j["command"] = "table";
        j["n"] = n;
        json order = json::array();
        for (const Partition& p : labels) order.push_back(p.to_string());
        j["order"] = order;
        json rows;
        for (size_t i = 0; i < labels.size(); ++i) {
            json row;
            for (size_t k = 0; k < labels.size(); ++k)
                row[labels[k].to_string()] = big_to_json(values[i][k]);
            rows[labels[i].to_string()] = row;
        }
        j["values"] = rows;
        emit(render_json(j), io.out);
    } else if (io.format == "csv") {
        std::ostringstream os;
        os << "rho,lambda,x\n";
        for (size_t i = 0; i < labels.size(); ++i)
            for (size_t k = 0; k < labels.size(); ++k)
                os << csv_quote(labels[i].to_string()) << ','
                   << csv_quote(labels[k].to_string()) << ',' << values[i][k].str() << '\n';
        emit(os.str(), io.out);
    } else {
        std::ostringstream os;
        size_t width = 0;
        for (const Partition& p : labels) width = std::max(width, p.to_string().size());
        os << std::string(width + 2, ' ') << "lambda:";
        for (const Partition& lam : labels) os << ' ' << lam.to_string();
        os << '\n';
        for (size_t i = 0; i < labels.size(); ++i) {
            std::string r = labels[i].to_string();
            os << r << std::string(width + 2 - r.size(), ' ') << "       ";
            for (size_t k = 0; k < labels.size(); ++k) {
                os << ' ' << values[i][k].str()
                   << std::string(labels[k].to_string().size() > values[i][k].str().size()
                                      ? labels[k].to_string().size() - values[i][k].str().size()
                                      : 0,
                                  ' ');
            }
            os << '\n';
        }
        emit(os.str(), io.out);
    }
    return 0;
}

// ---------------------------------------------------------------- green

int run_green(int n, const std::string& rho_s, const std::string& lambda_s,
              const CommonArgs& io) {
    if (n < 1 || n > 10) throw usage_error("green supports 1 <= n <= 10");
    Partition rho = parse_partition(rho_s);
    Partition lambda = parse_partition(lambda_s);
    if (rho.weight() != n || lambda.weight() != n)
        throw usage_error("rho and lambda must be partitions of n");
    IntPolynomial g = green_polynomial(rho, lambda);
    if (io.format == "json") {
        json j;
        j["version"] = kVersion;
        j["command"] = "green";
        j["n"] = n;
        j["rho"] = rho.to_string();
        j["lambda"] = lambda.to_string();
        j["poly"] = poly_to_json(g.coefficients());
        j["poly_string"] = g.to_string();
        j["at_1"] = big_to_json(g(1));
        emit(render_json(j), io.out);
    } else if (io.format == "csv") {
        std::ostringstream os;
        os << "rho,lambda,power,coefficient\n";
        const auto& coeffs = g.coefficients();
        for (size_t d = 0; d < coeffs.size(); ++d)
            os << csv_quote(rho.to_string()) << ',' << csv_quote(lambda.to_string()) << ','
               << d << ',' << coeffs[d].str() << '\n';
        emit(os.str(), io.out);
    } else {
        std::ostringstream os;
        os << "Q(rho=" << rho.to_string() << ", lambda=" << lambda.to_string()
           << ")(q) = " << g.to_string() << "\n";
        os << "at q=1: " << g(1).str();
        emit(os.str(), io.out);
    }
    return 0;
}

// ---------------------------------------------------------------- char-table

int run_char_table(int n, const CommonArgs& io) {
    if (n < 1 || n > 10) throw usage_error("char-table supports 1 <= n <= 10");
    CharacterTable table(n);
    const auto& labels = table.labels();
    if (io.format == "json") {
        json j;
        j["version"] = kVersion;
        j["command"] = "char-table";
        j["n"] = n;
        json order = json::array();
        for (const Partition& p : labels) order.push_back(p.to_string());
        j["order"] = order;
        json rows;
        for (const Partition& mu : labels) {
            json row;
            for (const Partition& rho : labels) row[rho.to_string()] = table.at(mu, rho);
            rows[mu.to_string()] = row;
        }
        j["values"] = rows;
        emit(render_json(j), io.out);
    } else if (io.format == "csv") {
        std::ostringstream os;
        os << "mu";
        for (const Partition& rho : labels) os << ',' << csv_quote(rho.to_string());
        os << '\n';
        for (const Partition& mu : labels) {
            os << csv_quote(mu.to_string());
            for (const Partition& rho : labels) os << ',' << table.at(mu, rho);
            os << '\n';
        }
        emit(os.str(), io.out);
    } else {
        std::ostringstream os;
        os << "irreducible characters of S_" << n << " (rows mu, columns rho)\n";
        for (const Partition& mu : labels) {
            os << mu.to_string() << ":";
            for (const Partition& rho : labels) os << ' ' << table.at(mu, rho);
            os << '\n';
        }
        emit(os.str(), io.out);
    }
    return 0;
}

// ---------------------------------------------------------------- count

int run_count(int n, const std::string& w_s, const std::string& spec_s, int q,
              const std::string& eig_s, uint64_t budget, int threads, const CommonArgs& io) {
    if (n < 1 || n > 8) throw usage_error("count supports 1 <= n <= 8");
    PermutationW w = parse_cycles(n, w_s);
    GroupElementSpec spec = parse_spec(spec_s);
    if (spec.n() != n) throw usage_error("spec total size must equal n");
    int p = 0, k = 0;
    if (!detail::is_prime_power(q, p, k)) throw usage_error("q must be a prime power");
    FiniteField f(p, k);
    std::vector<uint16_t> eig;
    for (const std::string& tok : split_top_level(eig_s))
        if (!tok.empty()) eig.push_back(static_cast<uint16_t>(std::stoi(tok)));
    MatrixGF g = build_group_element(spec, f, eig);
    uint64_t c = count_Y(w, g, budget, threads);
    if (io.format == "json") {
        json j;
        j["version"] = kVersion;
        j["command"] = "count";
        j["n"] = n;
        j["w"] = w.one_line();
        j["spec"] = spec.to_string();
        j["lambda"] = spec.lambda().to_string();
        j["lambda_prime"] = spec.lambda_prime().to_string();
        j["q"] = q;
        j["count"] = c;
        emit(render_json(j), io.out);
    } else if (io.format == "csv") {
        std::ostringstream os;
        os << "w,spec,q,count\n"
           << csv_quote(w.cycle_string()) << ',' << csv_quote(spec.to_string()) << ',' << q
           << ',' << c << '\n';
        emit(os.str(), io.out);
    } else {
        std::ostringstream os;
        os << "|Y(w=" << w.cycle_string() << ", g=[" << spec.to_string() << "], GF(" << q
           << "))| = " << c;
        emit(os.str(), io.out);
    }
    return 0;
}

// ---------------------------------------------------------------- verify

int run_verify(int n, const std::string& mode_s, int q, uint64_t budget, int threads,
               const std::string& only, const CommonArgs& io) {
    if (n < 1 || n > 6) throw usage_error("verify supports 1 <= n <= 6");
    PipelineOptions opts;
    opts.mode = mode_s == "power-tower" ? SampleMode::power_tower : SampleMode::cross_size;
    opts.power_base = q;
    opts.flag_budget = budget;
    opts.threads = threads;
    CaseFilter filter = parse_only_filter(only, n);
    VerifyReport rep = verify_all(n, opts, filter);

    int mismatches = rep.count_status("mismatch");
    int resource_errors = rep.count_status("resource-error");

    if (io.format == "json") {
        json j;
        j["version"] = kVersion;
        j["command"] = "verify";
        j["config"] = config_json(n, opts, only);
        json cases = json::array();
        for (const CaseResult& c : rep.cases) cases.push_back(case_to_json(c));
        j["cases"] = cases;
        json summary;
        summary["cases"] = rep.cases.size();
        summary["ok"] = rep.count_status("ok");
        summary["mismatch"] = mismatches;
        summary["skipped"] = rep.count_status("skipped");
        summary["resource_error"] = resource_errors;
        j["summary"] = summary;
        emit(render_json(j), io.out);
    } else if (io.format == "csv") {
        std::ostringstream os;
        os << "id,check,w,rho,lambda,lambda_prime,spec,phi_at_1,expected,status\n";
        for (const CaseResult& c : rep.cases) {
            std::ostringstream w_os;
            for (size_t i = 0; i < c.w_one_line.size(); ++i) {
                if (i) w_os << ' ';
                w_os << c.w_one_line[i];
            }
            os << csv_quote(c.id) << ',' << c.check << ',' << csv_quote(w_os.str()) << ','
               << csv_quote(c.rho) << ',' << csv_quote(c.lambda) << ','
               << csv_quote(c.lambda_prime) << ',' << csv_quote(c.spec) << ','
               << (c.has_value ? c.value.str() : "") << ','
               << (c.has_expected ? c.expected.str() : "") << ',' << c.status << '\n';
        }
        emit(os.str(), io.out);
    } else {
        std::ostringstream os;
        for (const CaseResult& c : rep.cases) {
            os << '[' << c.status << "] " << c.id;
            if (c.has_value) os << " value=" << c.value.str();
            if (c.has_expected) os << " expected=" << c.expected.str();
            if (!c.detail.empty()) os << "  (" << c.detail << ")";
            os << '\n';
        }
        os << "cases: " << rep.cases.size() << ", ok: " << rep.count_status("ok")
           << ", mismatch: " << mismatches << ", skipped: " << rep.count_status("skipped")
           << ", resource-error: " << resource_errors;
        emit(os.str(), io.out);
    }
    // Per-case resource errors are reported in the output but do not fail the
    // run; only a verified disagreement does.
    return mismatches > 0 ? 1 : 0;
}

// ---------------------------------------------------------------- hecke-check

int run_hecke_check(int n, int q, const CommonArgs& io) {
    if (n < 1 || n > 3) throw usage_error("hecke-check supports 1 <= n <= 3");
    if (q < 2 || q > 5) throw usage_error("hecke-check supports 2 <= q <= 5");
    int p = 0, k = 0;
    if (!detail::is_prime_power(q, p, k)) throw usage_error("q must be a prime power");
    FiniteField f(p, k);

    HeckeRelationsReport rel = hecke_relations_check(n, f);
    struct TraceLine {
        std::string w;
        std::string spec;
        int64_t trace;
        uint64_t count;
        bool ok;
    };
    std::vector<TraceLine> traces;
    bool traces_ok = true;
    for (const GroupElementSpec& spec : all_specs(n)) {
        if (static_cast<uint32_t>(spec.num_slots()) + 1 > f.order()) continue;
        MatrixGF g = build_group_element(spec, f);
        for (const PermutationW& w : all_permutations(n)) {
            TraceIdentityReport tr = trace_identity_check(w, g);
            traces.push_back({w.cycle_string(), spec.to_string(), tr.trace, tr.count, tr.ok});
            traces_ok = traces_ok && tr.ok;
        }
    }

    if (io.format == "json") {
        json j;
        j["version"] = kVersion;
        j["command"] = "hecke-check";
        j["n"] = n;
        j["q"] = q;
        j["flags"] = rel.flags;
        json relations;
        relations["quadratic"] = rel.quadratic_ok;
        relations["braid"] = rel.braid_ok;
        relations["commuting"] = rel.commuting_ok;
        relations["length_additive"] = rel.length_additive_ok;
        j["relations"] = relations;
        json failures = json::array();
        for (const std::string& s : rel.failures) failures.push_back(s);
        j["failures"] = failures;
        json tr_arr = json::array();
        for (const TraceLine& t : traces) {
            json e;
            e["w"] = t.w;
            e["spec"] = t.spec;
            e["trace"] = t.trace;
            e["count"] = t.count;
            e["ok"] = t.ok;
            tr_arr.push_back(e);
        }
        j["trace_identity"] = tr_arr;
        j["ok"] = rel.ok() && traces_ok;
        emit(render_json(j), io.out);
    } else if (io.format == "csv") {
        std::ostringstream os;
        os << "check,w,spec,trace,count,status\n";
        os << "quadratic,,,,," << (rel.quadratic_ok ? "ok" : "fail") << '\n';
        os << "braid,,,,," << (rel.braid_ok ? "ok" : "fail") << '\n';
        os << "commuting,,,,," << (rel.commuting_ok ? "ok" : "fail") << '\n';
        os << "length-additive,,,,," << (rel.length_additive_ok ? "ok" : "fail") << '\n';
        for (const TraceLine& t : traces)
            os << "trace-identity," << csv_quote(t.w) << ',' << csv_quote(t.spec) << ','
               << t.trace << ',' << t.count << ',' << (t.ok ? "ok" : "fail") << '\n';
        emit(os.str(), io.out);
    } else {
        std::ostringstream os;
        os << "Hecke relations on " << rel.flags << " flags over GF(" << q << "):\n";
        os << "  quadratic:       " << (rel.quadratic_ok ? "ok" : "FAIL") << '\n';
        os << "  braid:           " << (rel.braid_ok ? "ok" : "FAIL") << '\n';
        os << "  commuting:       " << (rel.commuting_ok ? "ok" : "FAIL") << '\n';
        os << "  length additive: " << (rel.length_additive_ok ? "ok" : "FAIL") << '\n';
        for (const std::string& s : rel.failures) os << "  ! " << s << '\n';
        os << "trace identity (operator trace vs point count):\n";
        for (const TraceLine& t : traces)
            os << "  w=" << t.w << " spec=[" << t.spec << "]: trace=" << t.trace
               << " count=" << t.count << (t.ok ? " ok" : " FAIL") << '\n';
        os << ((rel.ok() && traces_ok) ? "all checks pass" : "FAILURES PRESENT");
        emit(os.str(), io.out);
    }
    return (rel.ok() && traces_ok) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Euler characteristics of twisted flag configuration varieties"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    // chi
    auto* chi = app.add_subcommand("chi", "compute X(rho, lambda) by several methods");
    int chi_n = 0;
    std::string chi_rho, chi_lambda;
    std::string chi_methods = "count,recursive,scalar,induced,green";
    uint64_t chi_budget = kDefaultCosetBudget;
    CommonArgs chi_io;
    chi->add_option("--n", chi_n, "weight of the partitions")->required();
    chi->add_option("--rho", chi_rho, "cycle type, e.g. 3,2,2,2,1")->required();
    chi->add_option("--lambda", chi_lambda, "Jordan type, e.g. 7,3")->required();
    chi->add_option("--methods", chi_methods,
                    "comma list from: count,recursive,scalar,induced,green");
    chi->add_option("--coset-budget", chi_budget, "cap on cosets for the induced method");
    add_common(chi, chi_io);

    // table
    auto* table = app.add_subcommand("table", "X values for all pairs of partitions of n");
    int table_n = 0;
    CommonArgs table_io;
    table->add_option("--n", table_n, "weight")->required();
    add_common(table, table_io);

    // green
    auto* green = app.add_subcommand("green", "Green polynomial Q(rho, lambda)(q)");
    int green_n = 0;
    std::string green_rho, green_lambda;
    CommonArgs green_io;
    green->add_option("--n", green_n, "weight")->required();
    green->add_option("--rho", green_rho, "class partition")->required();
    green->add_option("--lambda", green_lambda, "unipotent type")->required();
    add_common(green, green_io);

    // char-table
    auto* chart = app.add_subcommand("char-table", "character table of S_n");
    int chart_n = 0;
    CommonArgs chart_io;
    chart->add_option("--n", chart_n, "symmetric group size")->required();
    add_common(chart, chart_io);

    // count
    auto* count = app.add_subcommand("count", "brute-force point count of one twisted variety");
    int count_n = 0, count_q = 0, count_threads = 0;
    std::string count_w, count_spec, count_eig;
    uint64_t count_budget = kDefaultFlagBudget;
    CommonArgs count_io;
    count->add_option("--n", count_n, "matrix size")->required();
    count->add_option("--w", count_w, "permutation in cycle notation, e.g. \"(1 2)\"")->required();
    count->add_option("--spec", count_spec, "group element spec, e.g. \"2,1|1\"")->required();
    count->add_option("--q", count_q, "field order (prime power)")->required();
    count->add_option("--eigenvalues", count_eig, "field element indices, one per slot");
    count->add_option("--budget", count_budget, "flag enumeration budget");
    count->add_option("--threads", count_threads, "worker threads (0: DLCHI_THREADS or auto)");
    add_common(count, count_io);

    // verify
    auto* verify = app.add_subcommand("verify", "run the verification battery for one n");
    int verify_n = 0, verify_q = 2, verify_threads = 0;
    std::string verify_mode = "cross-size", verify_only;
    uint64_t verify_budget = kDefaultFlagBudget;
    CommonArgs verify_io;
    verify->add_option("--n", verify_n, "matrix size")->required();
    verify->add_option("--mode", verify_mode, "sampling mode")
        ->check(CLI::IsMember({"cross-size", "power-tower"}));
    verify->add_option("--q", verify_q, "power tower base (prime)");
    verify->add_option("--budget", verify_budget, "flag enumeration budget");
    verify->add_option("--threads", verify_threads, "worker threads (0: DLCHI_THREADS or auto)");
    verify->add_option("--only", verify_only,
                       "filter cases, e.g. \"w=(1 2),lambda=(2,1,1)\" or \"check=coxeter\"");
    add_common(verify, verify_io);

    // hecke-check
    auto* hecke = app.add_subcommand("hecke-check",
                                     "Hecke relations and the trace identity on small flags");
    int hecke_n = 0, hecke_q = 2;
    CommonArgs hecke_io;
    hecke->add_option("--n", hecke_n, "matrix size (at most 3)")->required();
    hecke->add_option("--q", hecke_q, "field order (at most 5)")->required();
    add_common(hecke, hecke_io);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (chi->parsed())
            return run_chi(chi_n, chi_rho, chi_lambda, chi_methods, chi_budget, chi_io);
        if (table->parsed()) return run_table(table_n, table_io);
        if (green->parsed()) return run_green(green_n, green_rho, green_lambda, green_io);
        if (chart->parsed()) return run_char_table(chart_n, chart_io);
        if (count->parsed())
            return run_count(count_n, count_w, count_spec, count_q, count_eig, count_budget,
                             count_threads, count_io);
        if (verify->parsed())
            return run_verify(verify_n, verify_mode, verify_q, verify_budget, verify_threads,
                              verify_only, verify_io);
        if (hecke->parsed()) return run_hecke_check(hecke_n, hecke_q, hecke_io);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "resource error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
