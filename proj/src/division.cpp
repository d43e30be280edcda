#include "skewgb/division.hpp"

#include <algorithm>

namespace skewgb {

namespace {

void check_inputs(const ModVector& f, const std::vector<ModVector>& F) {
    if (F.empty()) throw ContractViolation("division requires a nonempty divisor set");
    for (const auto& g : F) {
        if (g.is_zero()) throw ContractViolation("division requires nonzero divisors");
        if (g.spec() != f.spec() || g.rank() != f.rank())
            throw ContractViolation("mixed specs or ranks in division");
    }
}

}  // namespace

std::optional<std::pair<ModVector, ReductionStep>> reduce_step(const ModVector& f,
                                                               const std::vector<ModVector>& F,
                                                               const OrderSpec& order) {
    check_inputs(f, F);
    if (f.is_zero()) return std::nullopt;  // 0 ->F 0
    Leading lf = *leading(f, order);

    struct Candidate {
        int idx;
        Exponent alpha;
        Leading lead;                    // leading data of F[idx]
        std::optional<RingElem> c_alpha; // c_{alpha, f_j}, filled on demand
        std::optional<RingElem> d;       // sigma^{alpha}(lc(f_j)) c_{alpha, f_j}
    };
    std::vector<Candidate> cands;
    for (size_t j = 0; j < F.size(); ++j) {
        Leading lj = *leading(F[j], order);
        auto shift = divides(lj.lm, lf.lm);
        if (!shift) continue;
        cands.push_back({static_cast<int>(j), *shift, lj, std::nullopt, std::nullopt});
    }
    if (cands.empty()) return std::nullopt;
    auto d_of = [&](Candidate& c) -> const RingElem& {
        if (!c.d) {
            c.c_alpha = c_of(f.spec(), c.alpha, c.lead.lm.exp).c;
            c.d = sigma_alpha(*f.spec(), c.alpha, c.lead.lc) * *c.c_alpha;
        }
        return *c.d;
    };

    // Single-divisor attempt: greatest lm(f_j) first, ties by input position.
    std::vector<size_t> by_lm(cands.size());
    for (size_t i = 0; i < by_lm.size(); ++i) by_lm[i] = i;
    std::stable_sort(by_lm.begin(), by_lm.end(), [&](size_t a, size_t b) {
        return cmp_modmon(order, cands[a].lead.lm, cands[b].lead.lm) == Cmp::GT;
    });
    ReductionStep step;
    for (size_t i : by_lm) {
        auto r = try_divide(lf.lc, d_of(cands[i]));
        if (!r) continue;
        step.divisors = {cands[i].idx};
        step.coeffs = {*r};
        step.shifts = {cands[i].alpha};
        step.c_alphas = {*cands[i].c_alpha};
        return std::make_pair(apply_step(f, F, step), step);
    }

    // Combined equation over all divisors.
    std::vector<RingElem> row;
    for (auto& c : cands) row.push_back(d_of(c));
    auto sol = ideal_solve(lf.lc, row);
    if (!sol) return std::nullopt;  // coefficient equation unsolvable: f is reduced
    for (size_t i = 0; i < cands.size(); ++i) {
        if ((*sol)[i].is_zero()) continue;
        step.divisors.push_back(cands[i].idx);
        step.coeffs.push_back((*sol)[i]);
        step.shifts.push_back(cands[i].alpha);
        step.c_alphas.push_back(*cands[i].c_alpha);
    }
    if (step.divisors.empty()) throw InternalError("nonzero leading coefficient solved by the empty combination");
    return std::make_pair(apply_step(f, F, step), step);
}

ModVector apply_step(const ModVector& f, const std::vector<ModVector>& F,
                     const ReductionStep& step) {
    ModVector h = f;
    for (size_t i = 0; i < step.divisors.size(); ++i) {
        ModVector sub = shifted_term_times_vector(step.coeffs[i], step.shifts[i],
                                                  F[step.divisors[i]]);
        h = h - sub;
    }
    return h;
}

DivisionResult division(const ModVector& f, const std::vector<ModVector>& F,
                        const OrderSpec& order) {
    check_inputs(f, F);
    DivisionResult res{std::vector<SkewPoly>(F.size(), SkewPoly::zero(f.spec())), f};
    while (true) {
        auto step = reduce_step(res.remainder, F, order);
        if (!step) break;
        res.remainder = step->first;
        const ReductionStep& s = step->second;
        for (size_t i = 0; i < s.divisors.size(); ++i)
            res.quotients[s.divisors[i]].add_term(s.shifts[i], s.coeffs[i]);
    }
    return res;
}

std::pair<ModVector, std::vector<SkewPoly>> reduce_full(const ModVector& f,
                                                        const std::vector<ModVector>& F,
                                                        const OrderSpec& order) {
    DivisionResult r = division(f, F, order);
    return {r.remainder, r.quotients};
}

}  // namespace skewgb
