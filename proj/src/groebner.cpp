#include "skewgb/groebner.hpp"

#include <algorithm>
#include <map>

namespace skewgb {

namespace {

void require_quasi_commutative_bijective(const SpecHandle& spec, const char* what) {
    if (!spec->quasi_commutative || !spec->bijective)
        throw UnsupportedOperation(std::string(what) +
                                   " requires a quasi-commutative bijective extension (algebra " +
                                   spec->name + " is not)");
}

void check_family(const std::vector<ModVector>& F, const char* what) {
    if (F.empty()) throw ContractViolation(std::string(what) + " requires a nonempty input");
    for (const auto& f : F) {
        if (f.is_zero()) throw ContractViolation(std::string(what) + " requires nonzero vectors");
        if (f.spec() != F[0].spec() || f.rank() != F[0].rank())
            throw ContractViolation("mixed specs or ranks");
    }
}

SubsetData subset_data(const std::vector<Leading>& leads, const std::vector<int>& subset,
                       const SpecHandle& spec, const ModMonomial& lcm) {
    SubsetData d;
    d.subset = subset;
    d.lcm = lcm;
    for (int i : subset) {
        d.beta.push_back(leads[i].lm.exp);
        d.gamma.push_back(exp_sub(lcm.exp, leads[i].lm.exp));
        RingElem c = c_of(spec, d.gamma.back(), d.beta.back()).c;
        d.row.push_back(sigma_alpha(*spec, d.gamma.back(), leads[i].lc) * c);
    }
    d.generators = row_syzygies(d.row);
    return d;
}

// The combination sum_j b_j x^{gamma_j} g_{subset_j} of one B_S generator.
ModVector s_combination(const std::vector<ModVector>& G, const SubsetData& d,
                        const std::vector<RingElem>& b) {
    ModVector v = ModVector::zero(G[0].spec(), G[0].rank());
    for (size_t j = 0; j < d.subset.size(); ++j) {
        if (b[j].is_zero()) continue;
        v.add(shifted_term_times_vector(b[j], d.gamma[j], G[d.subset[j]]));
    }
    return v;
}

// Subsets of size >= 2 of one leading-index class, in increasing size then
// lexicographic member order; `need_above` keeps only subsets touching a new
// element (indices >= need_above), pass 0 to enumerate all.
std::vector<std::vector<int>> class_subsets(const std::vector<int>& cls, int need_above) {
    std::vector<std::vector<int>> out;
    const size_t n = cls.size();
    for (size_t size = 2; size <= n; ++size) {
        std::vector<size_t> pick(size);
        for (size_t i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            std::vector<int> sub;
            bool fresh = false;
            for (size_t p : pick) {
                sub.push_back(cls[p]);
                if (cls[p] >= need_above) fresh = true;
            }
            if (fresh) out.push_back(std::move(sub));
            // next combination
            size_t i = size;
            while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (size_t k = i; k < size; ++k) pick[k] = pick[k - 1] + 1;
        }
    }
    return out;
}

std::map<int, std::vector<int>> leading_index_classes(const std::vector<Leading>& leads) {
    std::map<int, std::vector<int>> classes;
    for (size_t i = 0; i < leads.size(); ++i) classes[leads[i].lm.index].push_back(static_cast<int>(i));
    return classes;
}

}  // namespace

std::optional<SubsetData> compute_BF(const std::vector<ModVector>& S, const OrderSpec& order) {
    check_family(S, "compute_BF");
    require_quasi_commutative_bijective(S[0].spec(), "compute_BF");
    std::vector<Leading> leads;
    for (const auto& g : S) leads.push_back(*leading(g, order));
    std::optional<ModMonomial> lcm = leads[0].lm;
    for (size_t i = 1; i < leads.size() && lcm; ++i) lcm = lcm_mod(*lcm, leads[i].lm);
    if (!lcm) return std::nullopt;  // mixed indices: X_S = 0
    std::vector<int> all(S.size());
    for (size_t i = 0; i < S.size(); ++i) all[i] = static_cast<int>(i);
    return subset_data(leads, all, S[0].spec(), *lcm);
}

GBResult buchberger(const std::vector<ModVector>& F, const OrderSpec& order) {
    check_family(F, "buchberger");
    const SpecHandle& spec = F[0].spec();
    require_quasi_commutative_bijective(spec, "buchberger");
    const size_t s = F.size();

    GBResult res;
    res.basis = F;
    for (size_t i = 0; i < s; ++i) {
        std::vector<SkewPoly> col(s, SkewPoly::zero(spec));
        col[i] = SkewPoly::one(spec);
        res.h_cols.push_back(std::move(col));
    }

    size_t known = 0;  // size of G at the previous round; subsets touching
                       // indices >= known are the new ones
    while (known < res.basis.size()) {
        std::vector<Leading> leads;
        for (const auto& g : res.basis) leads.push_back(*leading(g, order));
        const size_t t = res.basis.size();

        std::vector<std::vector<int>> todo;
        for (const auto& [idx, cls] : leading_index_classes(leads))
            for (auto& sub : class_subsets(cls, static_cast<int>(known))) todo.push_back(std::move(sub));
        known = t;

        for (const auto& sub : todo) {
            SubsetData d = subset_data(leads, sub, spec, [&] {
                std::optional<ModMonomial> l = leads[sub[0]].lm;
                for (size_t i = 1; i < sub.size(); ++i) l = lcm_mod(*l, leads[sub[i]].lm);
                return *l;
            }());
            for (const auto& b : d.generators) {
                ModVector v = s_combination(res.basis, d, b);
                if (v.is_zero()) continue;
                DivisionResult div = division(v, res.basis, order);
                if (div.remainder.is_zero()) continue;
                // provenance: r = sum_j b_j x^{gamma_j} g_{i_j} - sum_k q_k g_k
                std::vector<SkewPoly> col(s, SkewPoly::zero(spec));
                for (size_t j = 0; j < d.subset.size(); ++j) {
                    if (b[j].is_zero()) continue;
                    SkewPoly w = SkewPoly::term(spec, b[j], d.gamma[j]);
                    for (size_t c = 0; c < s; ++c)
                        col[c] = col[c] + poly_mul(w, res.h_cols[d.subset[j]][c]);
                }
                for (size_t k = 0; k < res.basis.size(); ++k) {
                    if (div.quotients[k].is_zero()) continue;
                    for (size_t c = 0; c < s; ++c)
                        col[c] = col[c] - poly_mul(div.quotients[k], res.h_cols[k][c]);
                }
                res.basis.push_back(div.remainder);
                res.h_cols.push_back(std::move(col));
            }
        }
    }

    for (size_t i = 0; i < s; ++i) res.q_cols.push_back(division(F[i], res.basis, order).quotients);

    // G^T = H^T F^T and F^T = Q^T G^T must hold exactly.
    for (size_t i = 0; i < res.basis.size(); ++i) {
        ModVector acc = ModVector::zero(spec, F[0].rank());
        for (size_t j = 0; j < s; ++j) acc.add(poly_times_vector(res.h_cols[i][j], F[j]));
        if (acc != res.basis[i]) throw InternalError("transformation matrix H failed to reconstruct the basis");
    }
    for (size_t j = 0; j < s; ++j) {
        ModVector acc = ModVector::zero(spec, F[0].rank());
        for (size_t i = 0; i < res.basis.size(); ++i)
            acc.add(poly_times_vector(res.q_cols[j][i], res.basis[i]));
        if (acc != F[j]) throw InternalError("transformation matrix Q failed to reconstruct the input");
    }
    return res;
}

bool is_groebner(const std::vector<ModVector>& G, const OrderSpec& order) {
    check_family(G, "is_groebner");
    const SpecHandle& spec = G[0].spec();
    require_quasi_commutative_bijective(spec, "is_groebner");
    std::vector<Leading> leads;
    for (const auto& g : G) leads.push_back(*leading(g, order));
    auto classes = leading_index_classes(leads);
    // Pre-check: all leading-index classes singletons means no subset has a
    // nonzero X_F, so G is trivially a Groebner basis.
    bool any_pair = false;
    for (const auto& [idx, cls] : classes)
        if (cls.size() >= 2) any_pair = true;
    if (!any_pair) return true;

    for (const auto& [idx, cls] : classes) {
        for (const auto& sub : class_subsets(cls, 0)) {
            std::optional<ModMonomial> lcm = leads[sub[0]].lm;
            for (size_t i = 1; i < sub.size(); ++i) lcm = lcm_mod(*lcm, leads[sub[i]].lm);
            SubsetData d = subset_data(leads, sub, spec, *lcm);
            for (const auto& b : d.generators) {
                ModVector v = s_combination(G, d, b);
                if (!reduce_full(v, G, order).first.is_zero()) return false;
            }
        }
    }
    return true;
}

std::optional<std::vector<SkewPoly>> member(const ModVector& f, const std::vector<ModVector>& G,
                                            const OrderSpec& order) {
    if (f.is_zero()) return std::vector<SkewPoly>(G.size(), SkewPoly::zero(f.spec()));
    DivisionResult r = division(f, G, order);
    if (!r.remainder.is_zero()) return std::nullopt;
    return r.quotients;
}

std::optional<std::vector<SkewPoly>> member(const ModVector& f, const GBResult& gb,
                                            const OrderSpec& order) {
    return member(f, gb.basis, order);
}

}  // namespace skewgb
