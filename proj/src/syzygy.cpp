#include "skewgb/syzygy.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace skewgb {

namespace {

bool column_is_zero(const CoeffColumn& col) {
    for (const auto& p : col)
        if (!p.is_zero()) return false;
    return true;
}

void push_unique(std::vector<CoeffColumn>& cols, CoeffColumn col) {
    if (column_is_zero(col)) return;
    for (const auto& c : cols)
        if (c == col) return;
    cols.push_back(std::move(col));
}

}  // namespace

std::optional<SaturatedSubset> saturate(const std::vector<int>& J,
                                        const std::vector<ModMonomial>& lms) {
    if (J.empty()) throw ContractViolation("saturate requires a nonempty index set");
    std::optional<ModMonomial> lcm = lms.at(J[0]);
    for (size_t i = 1; i < J.size() && lcm; ++i) lcm = lcm_mod(*lcm, lms.at(J[i]));
    if (!lcm) return std::nullopt;
    SaturatedSubset out;
    out.lcm = *lcm;
    for (size_t j = 0; j < lms.size(); ++j) {
        if (divides(lms[j], *lcm)) {
            out.indices.push_back(static_cast<int>(j));
            out.beta.push_back(lms[j].exp);
            out.gamma.push_back(exp_sub(lcm->exp, lms[j].exp));
        }
    }
    return out;
}

std::vector<CoeffColumn> syz_leading(const std::vector<ModVector>& G, const OrderSpec& order) {
    if (G.empty()) throw ContractViolation("syz_leading requires a nonempty basis");
    const SpecHandle& spec = G[0].spec();
    if (!spec->quasi_commutative || !spec->bijective)
        throw UnsupportedOperation("syzygy computation requires a quasi-commutative bijective extension");

    std::vector<ModMonomial> lms;
    std::vector<RingElem> lcs;
    for (const auto& g : G) {
        Leading l = *leading(g, order);
        lms.push_back(l.lm);
        lcs.push_back(l.lc);
    }
    const size_t t = G.size();

    // Enumerate the saturations of all nonempty subsets of each leading-index
    // class, deduplicated by the saturated set.
    std::map<int, std::vector<int>> classes;
    for (size_t i = 0; i < t; ++i) classes[lms[i].index].push_back(static_cast<int>(i));

    std::vector<CoeffColumn> cols;
    std::set<std::vector<int>> seen;
    for (const auto& [idx, cls] : classes) {
        const size_t n = cls.size();
        for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
            std::vector<int> J;
            for (size_t b = 0; b < n; ++b)
                if (mask & (1ul << b)) J.push_back(cls[b]);
            auto sat = saturate(J, lms);
            if (!sat) continue;
            if (!seen.insert(sat->indices).second) continue;
            std::vector<RingElem> row;
            for (size_t j = 0; j < sat->indices.size(); ++j) {
                RingElem c = c_of(spec, sat->gamma[j], sat->beta[j]).c;
                row.push_back(sigma_alpha(*spec, sat->gamma[j], lcs[sat->indices[j]]) * c);
            }
            for (const auto& b : row_syzygies(row)) {
                CoeffColumn col(t, SkewPoly::zero(spec));
                for (size_t j = 0; j < sat->indices.size(); ++j)
                    col[sat->indices[j]] = SkewPoly::term(spec, b[j], sat->gamma[j]);
                push_unique(cols, std::move(col));
            }
        }
    }
    return cols;
}

std::vector<CoeffColumn> syz_basis(const GBResult& gb, const OrderSpec& order,
                                   std::vector<CoeffColumn>* p_out,
                                   std::vector<CoeffColumn>* zlg_out) {
    std::vector<CoeffColumn> zlg = syz_leading(gb.basis, order);
    if (zlg_out) *zlg_out = zlg;
    if (p_out) p_out->clear();
    std::vector<CoeffColumn> out;
    for (const auto& col : zlg) {
        // sum_j col_j g_j lies in <G>; divide it by G to get the quotient
        // column p (the remainder must vanish for a Groebner basis).
        ModVector v = apply_presentation(gb.basis, col);
        DivisionResult div = division(v, gb.basis, order);
        if (!div.remainder.is_zero())
            throw InternalError("Z(L_G) combination did not reduce to zero over the basis");
        if (p_out) p_out->push_back(div.quotients);
        CoeffColumn z(col.size(), SkewPoly::zero(gb.basis[0].spec()));
        for (size_t j = 0; j < col.size(); ++j) z[j] = col[j] - div.quotients[j];
        out.push_back(std::move(z));
    }
    return out;
}

SyzygyMatrices syz_module(const std::vector<ModVector>& F, const OrderSpec& order) {
    SyzygyMatrices out;
    out.F = F;
    GBResult gb = buchberger(F, order);
    out.G = gb.basis;
    out.h_cols = gb.h_cols;
    out.q_cols = gb.q_cols;
    out.z_basis = syz_basis(gb, order, &out.p, &out.z_leading);

    const SpecHandle& spec = F[0].spec();
    const size_t s = F.size();
    const size_t t = gb.basis.size();

    // Block (Z(G)^T H^T)^T: column a with a_j = sum_i z_i h_cols[i][j].
    for (const auto& z : out.z_basis) {
        CoeffColumn a(s, SkewPoly::zero(spec));
        for (size_t i = 0; i < t; ++i) {
            if (z[i].is_zero()) continue;
            for (size_t j = 0; j < s; ++j) a[j] = a[j] + poly_mul(z[i], gb.h_cols[i][j]);
        }
        push_unique(out.z_module, std::move(a));
    }
    // Block I_s - (Q^T H^T)^T: column k with a_j = delta_jk - sum_i q_cols[k][i] h_cols[i][j].
    for (size_t k = 0; k < s; ++k) {
        CoeffColumn a(s, SkewPoly::zero(spec));
        a[k] = SkewPoly::one(spec);
        for (size_t i = 0; i < t; ++i) {
            if (gb.q_cols[k][i].is_zero()) continue;
            for (size_t j = 0; j < s; ++j)
                a[j] = a[j] - poly_mul(gb.q_cols[k][i], gb.h_cols[i][j]);
        }
        push_unique(out.z_module, std::move(a));
    }

    for (const auto& a : out.z_module)
        if (!apply_presentation(F, a).is_zero())
            throw InternalError("assembled syzygy column does not annihilate F");
    return out;
}

ModVector apply_presentation(const std::vector<ModVector>& F, const CoeffColumn& a) {
    if (F.empty()) throw ContractViolation("apply_presentation requires a nonempty family");
    if (a.size() != F.size())
        throw ContractViolation("coefficient column length does not match the family");
    ModVector out = ModVector::zero(F[0].spec(), F[0].rank());
    for (size_t i = 0; i < F.size(); ++i) {
        if (a[i].is_zero()) continue;
        out.add(poly_times_vector(a[i], F[i]));
    }
    return out;
}

}  // namespace skewgb
