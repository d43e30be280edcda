#include "skewgb/order.hpp"

#include <numeric>

namespace skewgb {

namespace {

void check_len(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size()) throw ContractViolation("exponent length mismatch");
}

}  // namespace

int exp_degree(const Exponent& a) { return std::accumulate(a.begin(), a.end(), 0); }

Exponent exp_add(const Exponent& a, const Exponent& b) {
    check_len(a, b);
    Exponent r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exponent exp_sub(const Exponent& a, const Exponent& b) {
    check_len(a, b);
    Exponent r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0) throw ContractViolation("exponent subtraction went negative");
    }
    return r;
}

bool exp_leq(const Exponent& a, const Exponent& b) {
    check_len(a, b);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponent exp_max(const Exponent& a, const Exponent& b) {
    check_len(a, b);
    Exponent r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool exp_is_zero(const Exponent& a) {
    for (int v : a)
        if (v != 0) return false;
    return true;
}

OrderSpec default_order(int nvars, int rank, ModuleOrder mo, bool reverse_basis) {
    OrderSpec o;
    o.precedence.resize(nvars);
    std::iota(o.precedence.begin(), o.precedence.end(), 0);
    o.module_order = mo;
    o.basis_dir.resize(rank);
    std::iota(o.basis_dir.begin(), o.basis_dir.end(), 1);
    if (reverse_basis) std::reverse(o.basis_dir.begin(), o.basis_dir.end());
    return o;
}

Cmp cmp_mon(const OrderSpec& order, const Exponent& a, const Exponent& b) {
    check_len(a, b);
    int da = exp_degree(a), db = exp_degree(b);
    if (da != db) return da > db ? Cmp::GT : Cmp::LT;
    for (int p : order.precedence) {
        if (a[p] != b[p]) return a[p] > b[p] ? Cmp::GT : Cmp::LT;
    }
    return Cmp::EQ;
}

Cmp cmp_modmon(const OrderSpec& order, const ModMonomial& a, const ModMonomial& b) {
    Cmp c = cmp_mon(order, a.exp, b.exp);
    if (c != Cmp::EQ) return c;
    if (a.index == b.index) return Cmp::EQ;
    int pa = -1, pb = -1;
    for (size_t i = 0; i < order.basis_dir.size(); ++i) {
        if (order.basis_dir[i] == a.index) pa = static_cast<int>(i);
        if (order.basis_dir[i] == b.index) pb = static_cast<int>(i);
    }
    if (pa < 0 || pb < 0) throw ContractViolation("basis index outside the order's direction list");
    const bool greater = (order.module_order == ModuleOrder::TOP) ? pa > pb : pa < pb;
    return greater ? Cmp::GT : Cmp::LT;
}

std::optional<Exponent> divides(const ModMonomial& a, const ModMonomial& b) {
    if (a.index != b.index) return std::nullopt;
    if (!exp_leq(a.exp, b.exp)) return std::nullopt;
    return exp_sub(b.exp, a.exp);
}

std::optional<ModMonomial> lcm_mod(const ModMonomial& a, const ModMonomial& b) {
    if (a.index != b.index) return std::nullopt;
    return ModMonomial{exp_max(a.exp, b.exp), a.index};
}

}  // namespace skewgb
