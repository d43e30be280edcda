#include "skewgb/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

namespace skewgb {

namespace {

std::vector<std::string> expand_inputs(const std::vector<std::string>& inputs) {
    std::vector<std::string> out;
    for (const auto& arg : inputs) {
        std::ifstream in(arg);
        if (!in) {
            out.push_back(arg);  // inline expression
            continue;
        }
        std::string line;
        while (std::getline(in, line)) {
            size_t hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            size_t a = line.find_first_not_of(" \t\r");
            if (a == std::string::npos) continue;
            size_t b = line.find_last_not_of(" \t\r");
            out.push_back(line.substr(a, b - a + 1));
        }
    }
    return out;
}

int scan_max_basis_index(const std::vector<std::string>& texts) {
    int best = 1;
    for (const auto& t : texts) {
        size_t i = 0;
        while (i < t.size()) {
            if (std::isalpha(static_cast<unsigned char>(t[i])) || t[i] == '_') {
                size_t j = i;
                while (j < t.size() &&
                       (std::isalnum(static_cast<unsigned char>(t[j])) || t[j] == '_'))
                    ++j;
                std::string id = t.substr(i, j - i);
                if (id.size() >= 2 && id.size() <= 8 && id[0] == 'e' &&
                    std::all_of(id.begin() + 1, id.end(),
                                [](unsigned char c) { return std::isdigit(c); }))
                    best = std::max(best, std::stoi(id.substr(1)));
                i = j;
            } else {
                ++i;
            }
        }
    }
    return best;
}

OrderSpec make_order(const SessionConfig& cfg, const SpecHandle& spec, int rank) {
    OrderSpec order = default_order(spec->nvars(), rank, cfg.module_order, cfg.basis_reversed);
    if (!cfg.order.empty()) {
        if (static_cast<int>(cfg.order.size()) != spec->nvars())
            throw ParseError("--order must list every algebra variable exactly once");
        order.precedence.clear();
        std::vector<bool> seen(spec->nvars(), false);
        for (const auto& name : cfg.order) {
            auto it = std::find(spec->vars.begin(), spec->vars.end(), name);
            if (it == spec->vars.end()) throw ParseError("--order names unknown variable " + name);
            int pos = static_cast<int>(it - spec->vars.begin());
            if (seen[pos]) throw ParseError("--order repeats variable " + name);
            seen[pos] = true;
            order.precedence.push_back(pos);
        }
    }
    return order;
}

struct Context {
    SpecHandle spec;
    OrderSpec order;
    int rank;
    Report& rep;

    void line(const std::string& s) { rep.lines.push_back(s); }
    void record(std::string kind, std::string name, std::string value) {
        rep.records.push_back({std::move(kind), std::move(name), std::move(value)});
    }
    void emit(const std::string& kind, const std::string& name, const std::string& value) {
        line(name + " = " + value);
        record(kind, name, value);
    }
    std::string vec(const ModVector& v) const { return render_vector(v, order); }
    std::string poly(const SkewPoly& p) const { return render_poly(p, order); }
};

std::string describe_order(const SpecHandle& spec, const OrderSpec& order) {
    std::string s = "deglex ";
    for (size_t i = 0; i < order.precedence.size(); ++i) {
        if (i) s += " > ";
        s += spec->vars[order.precedence[i]];
    }
    s += (order.module_order == ModuleOrder::TOP) ? "; TOP " : "; TOPREV ";
    for (size_t i = 0; i < order.basis_dir.size(); ++i) {
        if (i) s += "..";
        if (i == 1 && order.basis_dir.size() > 2) {
            s += "e" + std::to_string(order.basis_dir.back());
            break;
        }
        s += "e" + std::to_string(order.basis_dir[i]);
    }
    return s;
}

std::string matrix_text(const std::vector<std::vector<SkewPoly>>& cols, size_t rows,
                        const OrderSpec& order) {
    // cols[c][r]: entry (r, c) of the row-major matrix presentation
    std::string s = "[ ";
    for (size_t r = 0; r < rows; ++r) {
        if (r) s += " ; ";
        for (size_t c = 0; c < cols.size(); ++c) {
            if (c) s += ", ";
            s += render_poly(cols[c][r], order);
        }
    }
    return s + " ]";
}

void emit_matrix(Context& ctx, const std::string& name,
                 const std::vector<std::vector<SkewPoly>>& cols, size_t rows) {
    ctx.line(name + " = " + matrix_text(cols, rows, ctx.order));
    for (size_t c = 0; c < cols.size(); ++c)
        for (size_t r = 0; r < rows; ++r)
            ctx.record("matrix-entry",
                       name + "[" + std::to_string(r + 1) + "][" + std::to_string(c + 1) + "]",
                       ctx.poly(cols[c][r]));
}

ModMonomial product_monomial(const Context& ctx, const SkewPoly& q, const ModVector& f) {
    auto lq = poly_leading(q, ctx.order);
    Leading lf = *leading(f, ctx.order);
    return ModMonomial{exp_add(lq->first, lf.lm.exp), lf.lm.index};
}

void verify_division(const Context& ctx, const ModVector& f, const std::vector<ModVector>& F,
                     const DivisionResult& res) {
    ModVector acc = res.remainder;
    for (size_t i = 0; i < F.size(); ++i)
        if (!res.quotients[i].is_zero()) acc.add(poly_times_vector(res.quotients[i], F[i]));
    if (acc != f) throw InternalError("division identity f = sum q_i f_i + h failed");
    if (!res.remainder.is_zero() && reduce_step(res.remainder, F, ctx.order))
        throw InternalError("division remainder is not reduced");
    if (!f.is_zero()) {
        std::optional<ModMonomial> mx;
        auto consider = [&](const ModMonomial& m) {
            if (!mx || cmp_modmon(ctx.order, m, *mx) == Cmp::GT) mx = m;
        };
        for (size_t i = 0; i < F.size(); ++i)
            if (!res.quotients[i].is_zero()) consider(product_monomial(ctx, res.quotients[i], F[i]));
        if (!res.remainder.is_zero()) consider(leading(res.remainder, ctx.order)->lm);
        if (!mx || *mx != leading(f, ctx.order)->lm)
            throw InternalError("division max-formula failed");
    }
}

void cmd_reduce(Context& ctx, const ModVector& f, const std::vector<ModVector>& F) {
    DivisionResult res = division(f, F, ctx.order);
    verify_division(ctx, f, F, res);
    for (size_t i = 0; i < res.quotients.size(); ++i)
        ctx.emit("quotient", "q" + std::to_string(i + 1), ctx.poly(res.quotients[i]));
    ctx.emit("remainder", "h", ctx.vec(res.remainder));
    ctx.line("identity f = q1*f1 + ... + q" + std::to_string(F.size()) + "*f" +
             std::to_string(F.size()) + " + h verified; h is reduced w.r.t. {f1..f" +
             std::to_string(F.size()) + "}");
    ctx.record("status", "verified", "true");
}

void cmd_gbasis(Context& ctx, const std::vector<ModVector>& F) {
    GBResult gb = buchberger(F, ctx.order);
    if (!is_groebner(gb.basis, ctx.order))
        throw InternalError("completed basis failed the Groebner criterion");
    for (size_t i = 0; i < gb.basis.size(); ++i)
        ctx.emit("basis-element", "g" + std::to_string(i + 1), ctx.vec(gb.basis[i]));
    emit_matrix(ctx, "H", gb.h_cols, F.size());        // s x t: g_i = sum_j H[j][i] f_j
    emit_matrix(ctx, "Q", gb.q_cols, gb.basis.size()); // t x s: f_j = sum_i Q[i][j] g_i
    ctx.line("G^T = H^T F^T and F^T = Q^T G^T verified; is_groebner(G) = true");
    ctx.record("status", "verified", "true");
}

void cmd_member(Context& ctx, const ModVector& f, const std::vector<ModVector>& F) {
    GBResult gb = buchberger(F, ctx.order);
    auto comb = member(f, gb, ctx.order);
    if (!comb) {
        ctx.line("not a member");
        ctx.record("member", "f", "no");
        return;
    }
    ctx.line("member");
    ctx.record("member", "f", "yes");
    // translate the combination over G back to the input generators via H
    std::vector<SkewPoly> over_f(F.size(), SkewPoly::zero(ctx.spec));
    for (size_t i = 0; i < gb.basis.size(); ++i) {
        if ((*comb)[i].is_zero()) continue;
        for (size_t j = 0; j < F.size(); ++j)
            over_f[j] = over_f[j] + poly_mul((*comb)[i], gb.h_cols[i][j]);
    }
    ModVector acc = ModVector::zero(ctx.spec, f.rank());
    for (size_t j = 0; j < F.size(); ++j)
        if (!over_f[j].is_zero()) acc.add(poly_times_vector(over_f[j], F[j]));
    if (acc != f) throw InternalError("membership combination failed to reconstruct the input");
    for (size_t j = 0; j < F.size(); ++j)
        ctx.emit("combination", "c" + std::to_string(j + 1), ctx.poly(over_f[j]));
    ctx.line("identity f = c1*f1 + ... verified");
    ctx.record("status", "verified", "true");
}

void cmd_syzygy(Context& ctx, const std::vector<ModVector>& F) {
    SyzygyMatrices syz = syz_module(F, ctx.order);
    for (size_t i = 0; i < syz.G.size(); ++i)
        ctx.emit("basis-element", "g" + std::to_string(i + 1), ctx.vec(syz.G[i]));
    emit_matrix(ctx, "H", syz.h_cols, F.size());
    emit_matrix(ctx, "Q", syz.q_cols, syz.G.size());

    // Z(L_G) columns must annihilate the leading terms, Z(G) the basis.
    std::vector<ModVector> lt_vectors;
    for (const auto& g : syz.G) {
        Leading l = *leading(g, ctx.order);
        lt_vectors.push_back(ModVector::term(ctx.spec, g.rank(), l.lc, l.lm));
    }
    for (const auto& col : syz.z_leading)
        if (!apply_presentation(lt_vectors, col).is_zero())
            throw InternalError("Z(L_G) column does not annihilate L_G");
    for (const auto& col : syz.z_basis)
        if (!apply_presentation(syz.G, col).is_zero())
            throw InternalError("Z(G) column does not annihilate G");

    auto emit_cols = [&](const std::string& name, const std::vector<CoeffColumn>& cols) {
        if (cols.empty()) ctx.line(name + ": none");
        for (size_t i = 0; i < cols.size(); ++i)
            ctx.emit("syzygy-column", name + "[" + std::to_string(i + 1) + "]",
                     render_column(cols[i], ctx.order));
    };
    emit_cols("Z(L_G)", syz.z_leading);
    emit_cols("P", syz.p);
    emit_cols("Z(G)", syz.z_basis);
    emit_cols("Z(F)", syz.z_module);
    if (syz.z_module.empty()) {
        ctx.line("Syz(F) = 0 => the presentation columns are A-independent (the module is free)");
        ctx.record("note", "free", "Syz(F) = 0");
    }
    ctx.record("status", "verified", "true");
}

}  // namespace

Report run_command(const std::string& command, const SessionConfig& config,
                   const std::vector<std::string>& inputs) {
    Report rep;
    try {
        if (command != "reduce" && command != "gbasis" && command != "member" &&
            command != "syzygy")
            throw ParseError("unknown command " + command +
                             " (available: reduce, gbasis, member, syzygy)");
        SpecHandle spec = load_algebra(config.algebra);
        std::vector<std::string> texts = expand_inputs(inputs);
        const bool needs_f = (command == "reduce" || command == "member");
        if (texts.size() < (needs_f ? 2u : 1u))
            throw ParseError(command + (needs_f ? " needs a target vector and at least one divisor"
                                                : " needs at least one input vector"));
        int rank = config.rank > 0 ? config.rank : scan_max_basis_index(texts);
        OrderSpec order = make_order(config, spec, rank);
        Context ctx{spec, order, rank, rep};

        ctx.line("algebra: " + spec->name);
        ctx.line("order: " + describe_order(spec, order) + "; rank " + std::to_string(rank));
        ctx.record("config", "algebra", spec->name);
        ctx.record("config", "order", describe_order(spec, order));
        ctx.record("config", "rank", std::to_string(rank));

        std::vector<ModVector> vecs;
        for (const auto& t : texts) vecs.push_back(parse_vector(t, spec, rank));
        if (needs_f) {
            ctx.emit("input", "f", ctx.vec(vecs[0]));
            for (size_t i = 1; i < vecs.size(); ++i)
                ctx.emit("input", "f" + std::to_string(i), ctx.vec(vecs[i]));
            std::vector<ModVector> F(vecs.begin() + 1, vecs.end());
            if (command == "reduce")
                cmd_reduce(ctx, vecs[0], F);
            else
                cmd_member(ctx, vecs[0], F);
        } else {
            for (size_t i = 0; i < vecs.size(); ++i)
                ctx.emit("input", "f" + std::to_string(i + 1), ctx.vec(vecs[i]));
            if (command == "gbasis")
                cmd_gbasis(ctx, vecs);
            else
                cmd_syzygy(ctx, vecs);
        }
        rep.exit_code = kOk;
    } catch (const ParseError& e) {
        rep.lines.push_back(std::string("error: ") + e.what());
        rep.records.push_back({"error", "parse", e.what()});
        rep.exit_code = kParseOrValidation;
    } catch (const ContractViolation& e) {
        rep.lines.push_back(std::string("error: ") + e.what());
        rep.records.push_back({"error", "validation", e.what()});
        rep.exit_code = kParseOrValidation;
    } catch (const UnsupportedOperation& e) {
        rep.lines.push_back(std::string("error: ") + e.what());
        rep.records.push_back({"error", "unsupported", e.what()});
        rep.exit_code = kUnsupported;
    } catch (const std::exception& e) {
        rep.lines.push_back(std::string("internal error: ") + e.what());
        rep.records.push_back({"error", "internal", e.what()});
        rep.exit_code = kInternal;
    }
    return rep;
}

}  // namespace skewgb
