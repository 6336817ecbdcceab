// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Each criterion also carries a wall-clock budget that is part of the check.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qf/constructions.hpp"
#include "qf/ellmonoid.hpp"

using namespace qf;

namespace {

int failures = 0;

void run(int number, const std::string& name, double budget_s,
         const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = secs <= budget_s;
    if (!ok || !in_budget) ++failures;
    std::printf("[%s] %02d %s (%.2fs, budget %.0fs)%s%s\n",
                (ok && in_budget) ? "PASS" : "FAIL", number, name.c_str(), secs, budget_s,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

bool criterion_family_checklist(std::string& detail) {
    for (long long p = -4; p <= -1; ++p)
        for (long long n = -8; n <= 8; ++n)
            if (!check_stable_iso(make_tg(p, n)).ok) {
                detail = "checklist failed at p=" + std::to_string(p) +
                         " n=" + std::to_string(n);
                return false;
            }
    return true;
}

bool criterion_hyperbolic(std::string& detail) {
    for (long long p = -4; p <= -1; ++p)
        for (long long n = -8; n <= 8; ++n)
            if (!verify_tg_hyperbolic(p, n)) {
                detail = "witness failed at p=" + std::to_string(p) +
                         " n=" + std::to_string(n);
                return false;
            }
    return true;
}

bool criterion_invariant(std::string& detail) {
    std::vector<InvariantValue> vals;
    for (long long n = -8; n <= 8; ++n) vals.push_back(tg_invariant(-2, n));
    for (std::size_t i = 0; i < vals.size(); ++i)
        for (std::size_t j = i + 1; j < vals.size(); ++j)
            if (vals[i] == vals[j]) {
                detail = "collision between exponents";
                return false;
            }
    for (long long n = -8; n <= 8; ++n) {
        InvariantValue tw = twist_invariant(tg_invariant(-2, n));
        if (!(tw == tg_invariant(-2, -n))) {
            detail = "twist did not send n to -n at n=" + std::to_string(n);
            return false;
        }
        if (n != 0 && tw == tg_invariant(-2, n)) {
            detail = "twist fixed a nonzero exponent";
            return false;
        }
    }
    return true;
}

bool criterion_classification(std::string& detail) {
    const std::vector<std::pair<Int, std::size_t>> expected{
        {7, 1}, {15, 2}, {105, 4}, {1155, 8}};
    for (const auto& [q, want] : expected) {
        PrimEnumeration en = enumerate_prim_Z(q);
        if (en.count_bF != want) {
            detail = "count mismatch for one modulus";
            return false;
        }
        for (const TwoSidedPrimEmbedding& pe : en.representatives)
            if (!validate_embedding(pe, 0).ok) {
                detail = "an enumerated representative failed validation";
                return false;
            }
        PrimOrbitCounts bf = count_prim_orbits_bruteforce(q);
        if (bf.bF != want || bf.F != en.count_F) {
            detail = "exhaustive orbit count disagrees";
            return false;
        }
    }
    return true;
}

bool criterion_worked_example(std::string& detail) {
    TwoSidedPrimEmbedding pe = make_coprime_embedding_Z(3, 5, true);
    StableIso del = delta_map(pe, 0);
    Components c = components(del);
    if (!(c.a.at(0, 0) == GroupRingElem::constant(-19) &&
          c.b.at(0, 0) == GroupRingElem::constant(-19) &&
          c.s.at(0, 0) == GroupRingElem::constant(-6))) {
        detail = "components differ from (-19, -19, -6)";
        return false;
    }
    UnionResult u = glue_union(del);
    if (!(u.form.psi == RingMatrix::from_ints({{15, 0}, {-19, 6}}, ring_Z()))) {
        detail = "union form differs";
        return false;
    }
    RingMatrix r = r_iso(pe, 0);
    if (!(r == RingMatrix::from_ints({{3, -2}, {5, -3}}, ring_Z()) &&
          check_isometry(r, u.form, pe.m))) {
        detail = "certifying isometry differs";
        return false;
    }
    if (bprim_compare(pr_map(del), pe, {}).verdict != Verdict::Equal) {
        detail = "roundtrip verdict not Equal";
        return false;
    }
    return true;
}

bool roundtrip_once(const TwoSidedPrimEmbedding& pe, int degree_bound, std::string& detail) {
    StableIso del = delta_map(pe, degree_bound);
    if (!check_stable_iso(del).ok) {
        detail = "delta failed the checklist";
        return false;
    }
    PrimCompareOutcome cmp = bprim_compare(pr_map(del), pe, {degree_bound, 8, false});
    if (cmp.verdict != Verdict::Equal) {
        detail = cmp.verdict == Verdict::Unknown ? "pr o delta verdict Unknown"
                                                 : "pr o delta verdict Distinct";
        return false;
    }
    StableIso again = delta_map(pr_map(del), degree_bound);
    CompareOutcome back = biso_compare(del, again, {degree_bound, 8});
    if (back.verdict != Verdict::Equal) {
        detail = back.verdict == Verdict::Unknown ? "delta o pr verdict Unknown"
                                                  : "delta o pr verdict Distinct";
        return false;
    }
    return true;
}

bool criterion_roundtrips(std::string& detail) {
    std::mt19937_64 rng(20260824);
    std::uniform_int_distribution<long long> pick(1, 50);
    std::uniform_int_distribution<int> coin(0, 1);
    int done = 0;
    while (done < 20) {
        long long y1 = pick(rng), y2 = pick(rng);
        if (std::gcd(y1, y2) != 1) continue;
        if (coin(rng)) y1 = -y1;
        if (coin(rng)) y2 = -y2;
        TwoSidedPrimEmbedding pe = make_coprime_embedding_Z(y1, y2, coin(rng) != 0);
        if (!validate_embedding(pe, 0).ok) {
            detail = "random embedding failed validation";
            return false;
        }
        if (!roundtrip_once(pe, 0, detail)) {
            detail += " (integral pair " + std::to_string(y1) + "," + std::to_string(y2) + ")";
            return false;
        }
        ++done;
    }
    for (long long p : {-1LL, -2LL})
        for (long long n = -3; n <= 3; ++n)
            if (!roundtrip_once(make_jg_embedding(p, n, 8), 8, detail)) {
                detail += " (family p=" + std::to_string(p) + " n=" + std::to_string(n) + ")";
                return false;
            }
    return true;
}

bool criterion_extended(std::string& detail) {
    for (long long p : {-1LL, -2LL})
        for (long long n = -4; n <= 4; ++n) {
            TriBool res = check_extended(make_jg_embedding(p, n, 8), 8);
            bool want_true = (n == 0);
            if ((res == TriBool::True) != want_true) {
                detail = "wrong verdict at p=" + std::to_string(p) +
                         " n=" + std::to_string(n) +
                         (res == TriBool::Unknown ? " (Unknown)" : "");
                return false;
            }
        }
    return true;
}

bool criterion_phi_lemma(std::string& detail) {
    Ring ring = ring_laurent();
    EpsQuadraticForm v{+1, RingMatrix::scalar(GroupRingElem::constant(3), ring)};
    StableIso id = identity_iso(boundary_formation(v));
    StableIso neg = boundary_of_isometry(-RingMatrix::identity(1, ring), v, v);
    std::vector<StableIso> pool{id, neg, make_tg(-1, 1), make_tg(-1, 2)};
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = 0; j < pool.size(); ++j)
            if (!verify_phi_lemma(pool[i], pool[j]).ok) {
                detail = "failed on a Laurent pair";
                return false;
            }
    TwoSidedPrimEmbedding pe = make_coprime_embedding_Z(3, 5, true);
    StableIso del = delta_map(pe, 0);
    if (!verify_phi_lemma(identity_iso(del.src), del).ok ||
        !verify_phi_lemma(del, invert(del)).ok) {
        detail = "failed on an integral pair";
        return false;
    }
    return true;
}

bool criterion_presented_forms(std::string& detail) {
    Ring ring = ring_laurent();
    ExtendedSymmetricForm e{RingMatrix::from_ints({{0, 1}, {1, 0}}, ring),
                            RingMatrix::from_ints({{1, 24}}, ring)};
    TwoSidedPrimEmbedding pe = esf_to_embedding(e, 4);
    if (!validate_embedding(pe, 4).ok) {
        detail = "presented-form embedding failed validation";
        return false;
    }
    if (bprim_compare(pe, make_nab_fixture(24, 1, ring), {}).verdict != Verdict::Equal) {
        detail = "presented form not matched to the fixture";
        return false;
    }
    for (Int a : {Int(24), Int(48)})
        if (!verify_nab_delta_trivial(a).certified) {
            detail = "triviality witness failed";
            return false;
        }
    return true;
}

bool criterion_monoid(std::string& detail) {
    ComplementMode mode;
    for (auto [y1, y2] : std::vector<std::pair<long long, long long>>{{3, 5}, {2, 7}}) {
        QuasiFormation x;
        x.K_rank = 1;
        x.V = RingMatrix::from_ints({{y1}, {y2}}, ring_Z());
        Int prod = Int(y1) * Int(y2);
        if (!(boundary_minus(x).psi.at(0, 0) == GroupRingElem::constant(prod)) ||
            !(boundary_plus(x, mode).psi.at(0, 0) == GroupRingElem::constant(prod))) {
            detail = "boundary representatives wrong";
            return false;
        }
    }
    QuasiFormation graph, first, unit_col, nonunit_col;
    graph.K_rank = first.K_rank = unit_col.K_rank = nonunit_col.K_rank = 1;
    graph.V = RingMatrix::from_ints({{0}, {1}}, ring_Z());
    first.V = RingMatrix::from_ints({{1}, {0}}, ring_Z());
    unit_col.V = RingMatrix::from_ints({{3}, {-1}}, ring_Z());
    nonunit_col.V = RingMatrix::from_ints({{3}, {5}}, ring_Z());
    if (!is_elementary_rep(graph) || is_elementary_rep(first) ||
        !is_elementary_rep(unit_col) || is_elementary_rep(nonunit_col)) {
        detail = "elementary-representative test wrong on a known class";
        return false;
    }
    HypMode h;
    h.kind = HypMode::Zexact;
    for (auto* x : {&graph, &unit_col, &nonunit_col}) {
        StableIso del = delta_of_quasiformation(*x, mode, 0);
        if (!check_stable_iso(del).ok) {
            detail = "quasi-formation boundary failed checklist";
            return false;
        }
        EpsQuadraticForm k = kappa(del);
        if (k.rank() == 0) continue;
        HypResult res = hyperbolicity_test(k, h);
        if (res.verdict != TriBool::True) {
            detail = "glued union of a boundary is not recognized as hyperbolic";
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    run(1, "one-parameter family passes the stable-isomorphism checklist", 5.0,
        criterion_family_checklist);
    run(2, "SL2 witness carries each union to the hyperbolic plane", 5.0, criterion_hyperbolic);
    run(3, "residue invariant separates exponents and collapses under the twist", 2.0,
        criterion_invariant);
    run(4, "classification counts 1,2,4,8 match the exhaustive orbit count", 30.0,
        criterion_classification);
    run(5, "worked integral example reproduces every stated value", 1.0,
        criterion_worked_example);
    run(6, "both roundtrips are Equal on random and parameterized inputs", 60.0,
        criterion_roundtrips);
    run(7, "extendedness holds exactly at the constant member of the family", 30.0,
        criterion_extended);
    run(8, "four-part isometry lemma verified across the sample of pairs", 5.0,
        criterion_phi_lemma);
    run(9, "presented symmetric form matches its fixture; triviality witnesses", 2.0,
        criterion_presented_forms);
    run(10, "monoid layer: boundaries, elementary test, hyperbolic unions", 5.0,
        criterion_monoid);
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
