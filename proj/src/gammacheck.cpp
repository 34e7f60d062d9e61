// SPDX-License-Identifier: MIT
// Re-derivation of (a_x, u_c) from a 3A factorisation c = g h and dihedral products.
#include <stdexcept>

#include "axc/data.hpp"
#include "axc/invsets.hpp"
#include "axc/nsalgebra.hpp"

namespace axc::inv {

namespace {

constexpr int kN = 12;

char involution_kind(const Perm& p) {
    auto ct = cycle_type(p).str();
    if (ct == "2^2") return 'b';
    if (ct == "2^6") return 's';
    return 0;
}

struct Ctx {
    std::vector<std::string>* trace;
    int depth;
};

std::optional<Rat> axis_pair(const Perm& x, const Perm& y) {
    char kx = involution_kind(x), ky = involution_kind(y);
    if (!kx || !ky) return std::nullopt;
    if (x == y) return Rat(1);
    auto [pair, sw] = std::pair<std::string, bool>{std::string{kx, ky}, false};
    (void)sw;
    if (pair == "bs") pair = "sb";
    int id = classify(kN, kx, x, ky, y);
    return shape_gamma(shape(pair, id));
}

std::optional<Rat> axis_u(const Perm& x, const Perm& c, Ctx ctx);

// (a_x . a_h, a_g) by expanding a_x . a_h inside the dihedral algebra of (x, h)
std::optional<Rat> product_pairing(const Perm& x, const Perm& h, const Perm& g, Ctx ctx) {
    char kx = involution_kind(x), kh = involution_kind(h);
    std::string pair{kx, kh};
    if (pair == "bs") pair = "sb";
    std::string type = x == h ? "1A" : shape(pair, classify(kN, kx, x, kh, h));
    if (type == "1A") return axis_pair(x, g);
    Perm rho = compose(x, h);
    auto label_perm = [&](const std::string& l) -> std::optional<std::pair<char, Perm>> {
        if (l[0] == 'a' && l.size() > 1 && l[1] != 'r') {
            int i = std::stoi(l.substr(1));
            int k = i >= 0 ? i / 2 : -((-i + 1) / 2);
            Perm t = (i - 2 * k) == 0 ? x : h;
            return std::pair{'a', conj(t, power(rho, k))};
        }
        if (l == "ar") return std::pair{'a', rho};
        if (l == "ar2") return std::pair{'a', power(rho, 2)};
        if (l == "ar3") return std::pair{'a', power(rho, 3)};
        if (l == "u") return std::pair{'u', rho};
        if (l == "ur2") return std::pair{'u', power(rho, 2)};
        return std::nullopt;  // v, w
    };
    Rat total = 0;
    for (const auto& term : ns::expand_axis_product(type)) {
        auto lp = label_perm(term.label);
        if (!lp) {
            ctx.trace->push_back("unsupported odd axis " + term.label + " in " + type);
            return std::nullopt;
        }
        std::optional<Rat> v = lp->first == 'a' ? axis_pair(lp->second, g) : axis_u(g, lp->second, ctx);
        if (!v) return std::nullopt;
        total += term.coef * *v;
    }
    ctx.trace->push_back("(a_x a_h, a_g) in " + type + " = " + str(total));
    return total;
}

// (a_x, u_c) through a factorisation c = g h with (g, h) of shape 3A
std::optional<Rat> axis_u(const Perm& x, const Perm& c, Ctx ctx) {
    if (ctx.depth > 1) {
        // deeper chains are read from the table
        char kx = involution_kind(x);
        Rat v = gamma_of(kN, kx, x, 't', canonical('t', c));
        ctx.trace->push_back("table value (a, u) = " + str(v));
        return v;
    }
    const ClassSet& Xb = class_set(kN, 'b');
    char kx = involution_kind(x);
    if (!kx) return std::nullopt;
    static const std::vector<std::string> prefer[2] = {{"2A", "2B", "4B", "3C"}, {"3A", "6A"}};
    for (int pass = 0; pass < 2; ++pass)
        for (const Perm& cc : {c, c.inverse()})
            for (const Perm& g : Xb.points) {
                Perm h = compose(g, cc);
                if (involution_kind(h) != 'b') continue;
                if (shape("bb", classify(kN, 'b', g, 'b', h)) != "3A") continue;
                std::string pair{kx, 'b'};
                if (pair == "bs") pair = "sb";
                std::string t = x == h ? "1A" : shape(pair, classify(kN, kx, x, 'b', h));
                bool ok = t == "1A" || std::find(prefer[pass].begin(), prefer[pass].end(), t) != prefer[pass].end();
                if (!ok) continue;
                std::vector<std::string> local;
                Ctx sub{&local, ctx.depth + 1};
                auto ag = axis_pair(x, g), ah = axis_pair(x, h), aghg = axis_pair(x, conj(h, g));
                auto prod = product_pairing(x, h, g, sub);
                if (!ag || !ah || !aghg || !prod) continue;
                Rat val = Rat(2048) / 135 * (Rat(1, 32) * (2 * *ag + 2 * *ah + *aghg) - *prod);
                val.canonicalize();
                ctx.trace->push_back(std::string(ctx.depth, ' ') + "x=" + x.str() + " g=" + g.str() + " h=" + h.str() +
                                     " shape(x,h)=" + t + " -> " + str(val));
                for (auto& l : local) ctx.trace->push_back(std::string(ctx.depth + 1, ' ') + l);
                return val;
            }
    return std::nullopt;
}

}  // namespace

GammaRecompute recompute_gamma_entry(const std::string& pair, int id) {
    if (pair != "st" && pair != "bt") throw std::invalid_argument("recomputation covers st and bt only");
    const Partition& P = suborbits(kN, pair);
    Perm x = base_point(pair[0], kN);
    GammaRecompute out;
    auto v = axis_u(x, P.reps.at(id - 1), Ctx{&out.trace, 0});
    if (!v) throw std::domain_error(pair + " orbital " + std::to_string(id) + " has no factorisation expanding into supported terms");
    out.value = *v;
    return out;
}

}  // namespace axc::inv
