#pragma once

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "dlchi/assignment.hpp"
#include "dlchi/bigint.hpp"
#include "dlchi/group_element.hpp"
#include "dlchi/hecke.hpp"
#include "dlchi/induced.hpp"
#include "dlchi/partition.hpp"
#include "dlchi/permutation.hpp"
#include "dlchi/pipeline.hpp"

namespace dlchi {

struct CaseResult {
    std::string id;
    std::string check;
    std::string w_cycles;
    std::vector<int> w_one_line;
    std::string rho;
    std::string lambda;
    std::string lambda_prime;
    std::string spec;
    std::vector<CountSample> samples;
    std::vector<BigInt> poly;
    bool has_value = false;
    BigInt value = 0;
    bool has_expected = false;
    BigInt expected = 0;
    std::string status = "ok"; // ok | mismatch | skipped | resource-error
    std::string detail;
};

struct VerifyReport {
    int n = 0;
    SampleMode mode = SampleMode::cross_size;
    int power_base = 2;
    std::vector<CaseResult> cases;

    int count_status(const std::string& s) const {
        int c = 0;
        for (const auto& r : cases)
            if (r.status == s) ++c;
        return c;
    }
    bool all_ok() const { return count_status("mismatch") == 0; }
};

using CaseFilter = std::function<bool(const CaseResult&)>;

namespace detail {

inline void set_w(CaseResult& c, const PermutationW& w) {
    c.w_cycles = w.cycle_string();
    c.w_one_line = w.one_line();
}

inline void set_spec(CaseResult& c, const GroupElementSpec& spec) {
    c.spec = spec.to_string();
    c.lambda = spec.lambda().to_string();
    c.lambda_prime = spec.lambda_prime().to_string();
}

inline void run_euler_case(CaseResult& c, const PermutationW& w, const GroupElementSpec& spec,
                           const BigInt& expected, const PipelineOptions& opts,
                           PositionCountCache& cache) {
    c.has_expected = true;
    c.expected = expected;
    try {
        EulerResult r = euler_characteristic(w, spec, opts, &cache);
        c.samples = r.series.samples;
        c.poly = r.poly.coefficients();
        c.has_value = true;
        c.value = r.chi;
        if (c.value == expected) {
            c.status = "ok";
        } else {
            c.status = "mismatch";
            c.detail = "phi(1) = " + c.value.str() + " but expected " + expected.str();
        }
    } catch (const resource_error& e) {
        c.status = "resource-error";
        c.detail = e.what();
    }
}

/* True when the spec cannot be built in this sampling mode at all. */
inline bool spec_admissible(const GroupElementSpec& spec, const PipelineOptions& opts,
                            int extra_eigenvalues = 0) {
    if (opts.mode == SampleMode::power_tower)
        return opts.power_base - 1 >= spec.num_slots() + extra_eigenvalues;
    return true;
}

} // namespace detail

/* Main theorem cases: for every class rho and every spec,
   chi(Y(w_rho, g_spec)) must equal |P(rho, lambda(spec))|. */
inline void verify_main_theorem(VerifyReport& rep, const PipelineOptions& opts,
                                PositionCountCache& cache, const CaseFilter& filter) {
    int n = rep.n;
    for (const Partition& rho : all_partitions(n)) {
        PermutationW w = PermutationW::class_representative(rho);
        for (const GroupElementSpec& spec : all_specs(n)) {
            CaseResult c;
            c.check = "main-theorem";
            c.rho = rho.to_string();
            detail::set_w(c, w);
            detail::set_spec(c, spec);
            c.id = "main/n=" + std::to_string(n) + "/rho=" + rho.to_string() + "/spec=" +
                   spec.to_string();
            if (filter && !filter(c)) continue;
            if (!detail::spec_admissible(spec, opts)) {
                c.status = "skipped";
                c.detail = "spec needs " + std::to_string(spec.num_slots()) +
                           " distinct nonzero eigenvalues in the base field";
                rep.cases.push_back(std::move(c));
                continue;
            }
            detail::run_euler_case(c, w, spec, x_count(rho, spec.lambda()), opts, cache);
            rep.cases.push_back(std::move(c));
        }
    }
}

/* Coxeter specialization: w a single n-cycle forces chi = 1 exactly for the
   regular group elements (lambda = (n)), 0 otherwise. */
inline void verify_coxeter(VerifyReport& rep, const PipelineOptions& opts,
                           PositionCountCache& cache, const CaseFilter& filter) {
    int n = rep.n;
    Partition full({n});
    PermutationW w = PermutationW::class_representative(full);
    for (const GroupElementSpec& spec : all_specs(n)) {
        CaseResult c;
        c.check = "coxeter";
        c.rho = full.to_string();
        detail::set_w(c, w);
        detail::set_spec(c, spec);
        c.id = "coxeter/n=" + std::to_string(n) + "/spec=" + spec.to_string();
        if (filter && !filter(c)) continue;
        if (!detail::spec_admissible(spec, opts)) {
            c.status = "skipped";
            c.detail = "spec needs " + std::to_string(spec.num_slots()) +
                       " distinct nonzero eigenvalues in the base field";
            rep.cases.push_back(std::move(c));
            continue;
        }
        BigInt expected = spec.lambda() == full ? 1 : 0;
        detail::run_euler_case(c, w, spec, expected, opts, cache);
        rep.cases.push_back(std::move(c));
    }
}

/* chi depends on w only through its conjugacy class: compare the class
   representative against its conjugates by simple reflections. */
inline void verify_conjugation(VerifyReport& rep, const PipelineOptions& opts,
                               PositionCountCache& cache, const CaseFilter& filter) {
    int n = rep.n;
    for (const Partition& rho : all_partitions(n)) {
        PermutationW w = PermutationW::class_representative(rho);
        for (int i = 1; i < n; ++i) {
            PermutationW s = PermutationW::simple(n, i);
            PermutationW w2 = s * w * s;
            if (w2 == w) continue;
            for (const GroupElementSpec& spec : all_specs(n)) {
                CaseResult c;
                c.check = "conjugation";
                c.rho = rho.to_string();
                detail::set_w(c, w2);
                detail::set_spec(c, spec);
                c.id = "conjugation/n=" + std::to_string(n) + "/rho=" + rho.to_string() +
                       "/s=" + std::to_string(i) + "/spec=" + spec.to_string();
                if (filter && !filter(c)) continue;
                if (!detail::spec_admissible(spec, opts)) {
                    c.status = "skipped";
                    c.detail = "spec needs " + std::to_string(spec.num_slots()) +
                               " distinct nonzero eigenvalues in the base field";
                    rep.cases.push_back(std::move(c));
                    continue;
                }
                try {
                    EulerResult base = euler_characteristic(w, spec, opts, &cache);
                    detail::run_euler_case(c, w2, spec, base.chi, opts, cache);
                    c.detail = "conjugated by s_" + std::to_string(i) +
                               (c.status == "ok" ? "" : "; " + c.detail);
                } catch (const resource_error& e) {
                    c.status = "resource-error";
                    c.detail = e.what();
                }
                rep.cases.push_back(std::move(c));
            }
        }
    }
}

/* The counts themselves, not just chi, must be blind to which eigenvalues
   realize the slots. Compare the default choice 1..r against 1..r-1, r+1
   over the same fields. */
inline void verify_eigenvalue_independence(VerifyReport& rep, const PipelineOptions& opts,
                                           PositionCountCache& cache, const CaseFilter& filter) {
    int n = rep.n;
    for (const Partition& rho : all_partitions(n)) {
        PermutationW w = PermutationW::class_representative(rho);
        for (const GroupElementSpec& spec : all_specs(n)) {
            CaseResult c;
            c.check = "proposition";
            c.rho = rho.to_string();
            detail::set_w(c, w);
            detail::set_spec(c, spec);
            c.id = "proposition/n=" + std::to_string(n) + "/rho=" + rho.to_string() +
                   "/spec=" + spec.to_string();
            if (filter && !filter(c)) continue;
            if (!detail::spec_admissible(spec, opts, 1)) {
                c.status = "skipped";
                c.detail = "alternate eigenvalue choice does not fit in the base field";
                rep.cases.push_back(std::move(c));
                continue;
            }
            int r = spec.num_slots();
            std::vector<uint16_t> alt;
            for (int e = 1; e < r; ++e) alt.push_back(static_cast<uint16_t>(e));
            alt.push_back(static_cast<uint16_t>(r + 1));
            try {
                // both runs need r + 1 units, so fix the field list by hand
                auto sizes = admissible_field_sizes(n, spec, opts, w.length() + 2, 1);
                PipelineOptions opts_a = opts;
                PipelineOptions opts_b = opts;
                opts_b.eigenvalues = alt;
                std::ostringstream diff;
                bool same = true;
                for (auto [p, k] : sizes) {
                    const PositionCounts& ca =
                        cache.get(spec, opts_a.eigenvalues, p, k, opts.flag_budget, opts.threads);
                    const PositionCounts& cb =
                        cache.get(spec, opts_b.eigenvalues, p, k, opts.flag_budget, opts.threads);
                    uint64_t va = ca.at(w), vb = cb.at(w);
                    CountSample s;
                    s.p = p;
                    s.k = k;
                    s.q = ca.q;
                    s.count = va;
                    c.samples.push_back(s);
                    if (va != vb) {
                        same = false;
                        diff << "q=" << ca.q << ": " << va << " vs " << vb << "; ";
                    }
                }
                c.status = same ? "ok" : "mismatch";
                if (!same) c.detail = "counts differ between eigenvalue choices: " + diff.str();
            } catch (const resource_error& e) {
                c.status = "resource-error";
                c.detail = e.what();
            }
            rep.cases.push_back(std::move(c));
        }
    }
}

/* Hecke relations and the trace identity on the full flag module; only
   feasible for tiny n and q. */
inline void verify_hecke(VerifyReport& rep, const PipelineOptions& opts,
                         const CaseFilter& filter) {
    int n = rep.n;
    if (n > 3) {
        CaseResult c;
        c.check = "hecke-relations";
        c.id = "hecke/n=" + std::to_string(n);
        if (filter && !filter(c)) return;
        c.status = "skipped";
        c.detail = "flag module checks are limited to n <= 3";
        rep.cases.push_back(std::move(c));
        return;
    }
    std::vector<std::pair<int, int>> sizes;
    if (opts.mode == SampleMode::power_tower)
        sizes.push_back({opts.power_base, 1});
    else
        sizes = {{2, 1}, {3, 1}};
    for (auto [p, k] : sizes) {
        FiniteField f(p, k);
        {
            CaseResult c;
            c.check = "hecke-relations";
            c.id = "hecke/n=" + std::to_string(n) + "/q=" + std::to_string(f.order());
            if (!filter || filter(c)) {
                try {
                    HeckeRelationsReport hr = hecke_relations_check(n, f);
                    c.status = hr.ok() ? "ok" : "mismatch";
                    if (!hr.ok()) {
                        std::ostringstream os;
                        for (const auto& s : hr.failures) os << s << "; ";
                        c.detail = os.str();
                    } else {
                        c.detail = std::to_string(hr.flags) + " flags";
                    }
                } catch (const resource_error& e) {
                    c.status = "resource-error";
                    c.detail = e.what();
                }
                rep.cases.push_back(std::move(c));
            }
        }
        for (const GroupElementSpec& spec : all_specs(n)) {
            if (static_cast<uint32_t>(spec.num_slots()) + 1 > f.order()) continue;
            MatrixGF g = build_group_element(spec, f);
            for (const PermutationW& w : all_permutations(n)) {
                CaseResult c;
                c.check = "trace-identity";
                detail::set_w(c, w);
                detail::set_spec(c, spec);
                c.id = "trace/n=" + std::to_string(n) + "/q=" + std::to_string(f.order()) +
                       "/w=" + w.cycle_string() + "/spec=" + spec.to_string();
                if (filter && !filter(c)) continue;
                try {
                    TraceIdentityReport tr = trace_identity_check(w, g);
                    c.has_value = true;
                    c.value = tr.trace;
                    c.has_expected = true;
                    c.expected = BigInt(tr.count);
                    c.status = tr.ok ? "ok" : "mismatch";
                    if (!tr.ok)
                        c.detail = "operator trace " + std::to_string(tr.trace) +
                                   " != point count " + std::to_string(tr.count);
                } catch (const resource_error& e) {
                    c.status = "resource-error";
                    c.detail = e.what();
                }
                rep.cases.push_back(std::move(c));
            }
        }
    }
}

/* Full verification battery for one n. */
inline VerifyReport verify_all(int n, const PipelineOptions& opts = {},
                               const CaseFilter& filter = nullptr) {
    VerifyReport rep;
    rep.n = n;
    rep.mode = opts.mode;
    rep.power_base = opts.power_base;
    PositionCountCache cache;
    verify_main_theorem(rep, opts, cache, filter);
    verify_coxeter(rep, opts, cache, filter);
    verify_conjugation(rep, opts, cache, filter);
    verify_eigenvalue_independence(rep, opts, cache, filter);
    verify_hecke(rep, opts, filter);
    return rep;
}

} // namespace dlchi
