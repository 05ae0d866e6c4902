#include "weilrep/group_ext.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <unordered_map>

namespace weilrep {

CocycleVerdict validate_cocycle(const TwoCocycle& c, long long budget) {
    const auto& B = *c.base;
    const auto& A = *c.coeff;
    auto identity_check = [&](const std::function<int(int, int)>& val, const FiniteGroup& base) -> CocycleVerdict {
        for (long long b = 0; b < base.size; ++b) {
            if (val(base.identity, (int)b) != A.identity || val((int)b, base.identity) != A.identity)
                return {false, "not normalized at b=" + std::to_string(b)};
        }
        return {true, ""};
    };
    auto triple = [&](const std::function<int(int, int)>& val, const FiniteGroup& base, long long x, long long y,
                      long long z) -> bool {
        const int lhs = A.mul(val((int)x, (int)y), val(base.mul((int)x, (int)y), (int)z));
        const int rhs = A.mul(val((int)y, (int)z), val((int)x, base.mul((int)y, (int)z)));
        return lhs == rhs;
    };
    auto run = [&](const std::function<int(int, int)>& val, const FiniteGroup& base,
                   long long triple_budget) -> CocycleVerdict {
        auto idc = identity_check(val, base);
        if (!idc.ok) return idc;
        const long long n = base.size;
        if (n * n * n <= triple_budget) {
            for (long long x = 0; x < n; ++x)
                for (long long y = 0; y < n; ++y)
                    for (long long z = 0; z < n; ++z)
                        if (!triple(val, base, x, y, z))
                            return {false, "cocycle identity fails at (" + std::to_string(x) + "," +
                                               std::to_string(y) + "," + std::to_string(z) + ")"};
        } else {
            std::mt19937 rng(513);
            for (long long i = 0; i < triple_budget; ++i) {
                const long long x = rng() % n, y = rng() % n, z = rng() % n;
                if (!triple(val, base, x, y, z))
                    return {false, "cocycle identity fails at sampled (" + std::to_string(x) + "," +
                                       std::to_string(y) + "," + std::to_string(z) + ")"};
            }
        }
        return {true, ""};
    };
    if (c.reduced_base && B.size * B.size * B.size > budget) {
        // exhaustive at the reduced level, sampled triples upstairs
        auto v = run(c.reduced_value, *c.reduced_base, budget);
        if (!v.ok) return v;
        return run(c.value, B, 10000);
    }
    return run(c.value, B, budget);
}

CentralExtension build_extension(const TwoCocycle& c, const std::string& name) {
    auto verdict = validate_cocycle(c);
    if (!verdict.ok) throw std::runtime_error("invalid cocycle: " + verdict.witness);
    CentralExtension e;
    e.base = c.base;
    e.coeff = c.coeff;
    const long long na = c.coeff->size;
    auto base = c.base;
    auto coeff = c.coeff;
    auto val = c.value;
    auto mul = [base, coeff, val, na](int x, int y) {
        const int xb = (int)(x / na), xe = (int)(x % na);
        const int yb = (int)(y / na), ye = (int)(y % na);
        return (int)((long long)base->mul(xb, yb) * na + coeff->mul(val(xb, yb), coeff->mul(xe, ye)));
    };
    const int id = (int)((long long)base->identity * na + coeff->identity);
    auto out = std::make_shared<FiniteGroup>();
    out->size = base->size * na;
    out->identity = id;
    out->name = name.empty() ? base->name + "~" : name;
    out->mul = mul;
    out->inv = [base, coeff, val, na](int x) {
        const int xb = (int)(x / na), xe = (int)(x % na);
        const int bi = base->inv(xb);
        // [xb, xe][bi, e'] = [1, c(xb,bi) xe e'] = id
        const int need = coeff->inv(coeff->mul(val(xb, bi), xe));
        return (int)((long long)bi * na + need);
    };
    for (int s : base->generators) out->generators.push_back((int)((long long)s * na + coeff->identity));
    for (long long s = 1; s < na; ++s) out->generators.push_back((int)((long long)base->identity * na + s));
    e.group = out;
    e.proj = [na](int x) { return (int)(x / na); };
    e.embed_coeff = [base, na](int a) { return (int)((long long)base->identity * na + a); };
    e.make = [na](int b, int a) { return (int)((long long)b * na + a); };
    return e;
}

std::function<int(int)> sqrt_iso(const MultiplicativeStructure& ms, const CentralExtension& tF2) {
    const auto* F = ms.field();
    auto squares = std::make_shared<std::vector<int>>(ms.squares());
    auto proj = tF2.proj;
    auto msp = std::make_shared<MultiplicativeStructure>(ms);
    auto map = [squares, proj, msp, F](int x) {
        const int a = (*squares)[proj(x)];
        const int v = msp->sqrt_section(a);
        return x % 2 == 1 ? F->neg(v) : v;
    };
    // bijective homomorphism check
    std::vector<char> hit(F->q(), 0);
    for (long long x = 0; x < tF2.group->size; ++x) {
        const int v = map((int)x);
        if (hit[v]) throw std::logic_error("sqrt map is not injective");
        hit[v] = 1;
        for (long long y = 0; y < tF2.group->size; ++y)
            if (F->mul(map((int)x), map((int)y)) != map(tF2.group->mul((int)x, (int)y)))
                throw std::logic_error("sqrt map is not a homomorphism");
    }
    return map;
}

int c_prime(const MultiplicativeStructure& ms, int t1, int t2) {
    const auto* F = ms.field();
    const int k1 = ms.kappa_of(t1), k2 = ms.kappa_of(t2);
    const int k12 = ms.kappa_of(F->mul(t1, t2));
    return F->mul(F->mul(k1, k2), F->inv(k12));
}

int c_triple_prime(const MultiplicativeStructure& ms, int t1, int t2) {
    const auto* F = ms.field();
    const int a1sq = F->mul(t1, F->inv(ms.kappa_of(t1)));
    const int a2sq = F->mul(t2, F->inv(ms.kappa_of(t2)));
    const int cp = c_prime(ms, t1, t2);
    return ms.sqrt_cocycle(a1sq, a2sq) * ms.sqrt_cocycle(F->mul(a1sq, a2sq), cp);
}

namespace {

GroupPtr fx_group(const GaloisField* F) {
    // F^x with element indices 0..q-2 mapping to field indices 1..q-1 by the
    // identity shift idx+1 .. no: keep field indices directly, using a lookup
    const int q = F->q();
    std::vector<int> elems;
    for (int a = 1; a < q; ++a) elems.push_back(a);
    auto g = std::make_shared<FiniteGroup>();
    g->size = q - 1;
    g->identity = 0;  // element index of field value 1
    g->name = "F" + std::to_string(q) + "^x";
    g->mul = [F](int a, int b) { return F->mul(a + 1, b + 1) - 1; };
    g->inv = [F](int a) { return F->inv(a + 1) - 1; };
    return g;
}

}  // namespace

TildeTower build_tilde_tower(const GaloisField* F, int m, long long budget) {
    if (F->q() % 4 != 1) throw std::runtime_error("the square-root tower needs q = 1 mod 4");
    TildeTower T;
    T.F = F;
    T.ms = std::make_shared<MultiplicativeStructure>(F);
    const auto& ms = *T.ms;
    const int q = F->q();

    T.fx = fx_group(F);

    // ~F^{x2}: extension of F^{x2} by {+-1} via the sqrt sign cocycle
    const auto& squares = ms.squares();
    auto sq_index = std::make_shared<std::unordered_map<int, int>>();
    for (std::size_t i = 0; i < squares.size(); ++i) sq_index->emplace(squares[i], (int)i);
    auto sqg = std::make_shared<FiniteGroup>();
    sqg->size = (long long)squares.size();
    sqg->identity = sq_index->at(1);
    sqg->name = "F^{x2}";
    {
        auto sqv = std::make_shared<std::vector<int>>(squares);
        sqg->mul = [F, sqv, sq_index](int a, int b) { return sq_index->at(F->mul((*sqv)[a], (*sqv)[b])); };
        sqg->inv = [F, sqv, sq_index](int a) { return sq_index->at(F->inv((*sqv)[a])); };
    }
    auto sign2 = make_cyclic(2, "{+-1}");
    {
        TwoCocycle c;
        c.base = std::static_pointer_cast<const FiniteGroup>(sqg);
        c.coeff = sign2;
        auto msp = T.ms;
        auto sqv = std::make_shared<std::vector<int>>(squares);
        c.value = [msp, sqv](int a, int b) { return msp->sqrt_cocycle((*sqv)[a], (*sqv)[b]) == 1 ? 0 : 1; };
        T.tF2 = build_extension(c, "~F^{x2}");
    }

    // ~F^x via the closed-form sign cocycle on F^x
    {
        TwoCocycle c;
        c.base = T.fx;
        c.coeff = sign2;
        auto msp = T.ms;
        c.value = [msp](int a, int b) { return c_triple_prime(*msp, a + 1, b + 1) == 1 ? 0 : 1; };
        T.tFx = build_extension(c, "~F^x");
    }

    // GSp(W) as a materialized matrix group
    SymplecticSpace sp(F, m);
    T.gsp_elements = sp.enumerate_gsp(budget);
    auto idx_of = std::make_shared<std::map<std::vector<int>, int>>();
    for (std::size_t i = 0; i < T.gsp_elements.size(); ++i) idx_of->emplace(T.gsp_elements[i].mat.a, (int)i);
    auto elems = std::make_shared<std::vector<SympF>>(T.gsp_elements);
    auto spc = std::make_shared<SymplecticSpace>(sp);
    {
        int id = idx_of->at(sp.identity().mat.a);
        T.gsp = make_from_oracle(
            (long long)elems->size(), id,
            [spc, elems, idx_of](int a, int b) { return idx_of->at(spc->mul((*elems)[a], (*elems)[b]).mat.a); }, {},
            "GSp", true);
    }
    {
        auto e = elems;
        T.gsp_lambda = [e](int g) { return (*e)[g].lambda; };
    }

    // ~GSp: pull c''' back along the similitude
    {
        TwoCocycle c;
        c.base = T.gsp;
        c.coeff = sign2;
        auto msp = T.ms;
        auto lam = T.gsp_lambda;
        c.value = [msp, lam](int a, int b) { return c_triple_prime(*msp, lam(a), lam(b)) == 1 ? 0 : 1; };
        c.reduced_base = T.fx;
        c.reduction = [lam](int g) { return lam(g) - 1; };
        c.reduced_value = [msp](int a, int b) { return c_triple_prime(*msp, a + 1, b + 1) == 1 ? 0 : 1; };
        T.tgsp = build_extension(c, "~GSp");
    }

    // lambda~ : [g, e] -> [lambda_g, e]
    {
        auto lam = T.gsp_lambda;
        auto proj = T.tgsp.proj;
        T.tilde_lambda = [lam, proj](int x) {
            const int g = proj(x);
            const int e = x % 2;
            return (lam(g) - 1) * 2 + e;
        };
    }

    // nu: [a, e] -> [sqrt(a) e (as scalar matrix), e]
    {
        auto msp = T.ms;
        auto sqv = std::make_shared<std::vector<int>>(squares);
        auto make = T.tgsp.make;
        auto idx = idx_of;
        const int n2m = 2 * m;
        auto fptr = F;
        T.nu = [msp, sqv, make, idx, n2m, fptr](int x) {
            const int a = (*sqv)[x / 2];
            const int e = x % 2;
            int s = msp->sqrt_section(a);
            if (e == 1) s = fptr->neg(s);
            std::vector<int> mat(n2m * n2m, 0);
            for (int i = 0; i < n2m; ++i) mat[i * n2m + i] = s;
            return make(idx->at(mat), e);
        };
        for (long long x = 0; x < T.tF2.group->size; ++x) T.nu_image.push_back(T.nu((int)x));
        std::sort(T.nu_image.begin(), T.nu_image.end());
    }

    T.pgsp = quotient(T.tgsp.group, T.nu_image, "PGSp+-");

    // tau~([g, e]) = (a_g e)^{-1} with lambda_g = a_g^2 kappa(class)
    {
        auto msp = T.ms;
        auto lam = T.gsp_lambda;
        auto proj = T.tgsp.proj;
        auto fptr = F;
        T.tau_tilde = [msp, lam, proj, fptr](int x) {
            const int g = proj(x);
            const int e = x % 2;
            int a = msp->square_part_root(lam(g));
            if (e == 1) a = fptr->neg(a);
            return fptr->inv(a);
        };
    }

    // the F^x-valued cocycle c(g1~, g2~) = sqrt(c'(class l1, class l2))
    {
        TwoCocycle c;
        c.base = T.tgsp.group;
        c.coeff = T.fx;
        auto msp = T.ms;
        auto lam = T.gsp_lambda;
        auto proj = T.tgsp.proj;
        c.value = [msp, lam, proj](int x, int y) {
            const int cp = c_prime(*msp, lam(proj(x)), lam(proj(y)));
            return msp->sqrt_section(cp) - 1;
        };
        // reduces through F^x/F^{x2} = Z/2: classes of the similitude
        c.reduced_base = make_cyclic(2, "F^x/F^{x2}");
        {
            auto m2 = msp;
            auto l2 = lam;
            auto p2 = proj;
            c.reduction = [m2, l2, p2](int x) { return m2->is_square(l2(p2(x))) ? 0 : 1; };
            const int xi = m2->xi();
            auto fptr2 = F;
            c.reduced_value = [m2, fptr2, xi](int a, int b) {
                const int t1 = a == 0 ? 1 : xi, t2 = b == 0 ? 1 : xi;
                return m2->sqrt_section(c_prime(*m2, t1, t2)) - 1;
            };
        }
        T.tower_cocycle = c;
        T.wide = build_extension(c, "wide~GSp");
    }

    // embedded Sp and the kernel ~F^{x2} Sp of the class map
    for (std::size_t i = 0; i < T.gsp_elements.size(); ++i) {
        if (T.gsp_elements[i].lambda == 1) T.sp_in_tgsp.push_back(T.tgsp.make((int)i, 0));
        if (ms.is_square(T.gsp_elements[i].lambda)) {
            T.f2sp_in_tgsp.push_back(T.tgsp.make((int)i, 0));
            T.f2sp_in_tgsp.push_back(T.tgsp.make((int)i, 1));
        }
    }
    std::sort(T.sp_in_tgsp.begin(), T.sp_in_tgsp.end());
    std::sort(T.f2sp_in_tgsp.begin(), T.f2sp_in_tgsp.end());
    return T;
}

PgspQuotient quotient_pgsp_q3(const SymplecticSpace& sp, long long budget) {
    const auto* F = sp.field();
    if (F->q() % 4 != 3) throw std::runtime_error("this quotient needs q = 3 mod 4");
    PgspQuotient out;
    out.gsp_elements = sp.enumerate_gsp(budget);
    auto idx_of = std::make_shared<std::map<std::vector<int>, int>>();
    for (std::size_t i = 0; i < out.gsp_elements.size(); ++i) idx_of->emplace(out.gsp_elements[i].mat.a, (int)i);
    auto elems = std::make_shared<std::vector<SympF>>(out.gsp_elements);
    auto spc = std::make_shared<SymplecticSpace>(sp);
    out.gsp = make_from_oracle(
        (long long)elems->size(), idx_of->at(sp.identity().mat.a),
        [spc, elems, idx_of](int a, int b) { return idx_of->at(spc->mul((*elems)[a], (*elems)[b]).mat.a); }, {}, "GSp",
        true);
    // central subgroup {a I : a in F^{x2}}
    MultiplicativeStructure ms(F);
    std::vector<int> center;
    for (int a : ms.squares()) {
        std::vector<int> mat(sp.dim() * sp.dim(), 0);
        for (int i = 0; i < sp.dim(); ++i) mat[i * sp.dim() + i] = a;
        center.push_back(idx_of->at(mat));
    }
    out.pgsp = quotient(out.gsp, center, "PGSp+-");
    for (std::size_t i = 0; i < out.gsp_elements.size(); ++i)
        if (out.gsp_elements[i].lambda == 1) out.sp_indices.push_back((int)i);
    return out;
}

}  // namespace weilrep
