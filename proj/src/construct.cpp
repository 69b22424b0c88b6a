#include "swcx/construct.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "swcx/error.hpp"

namespace swcx {

namespace {

std::uint64_t upow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

std::vector<ProjPoint> proj_line(const Field& F) {
    std::vector<ProjPoint> pts;
    for (int a = 0; a < F.q(); ++a) pts.push_back({static_cast<Felt>(a), 1});
    pts.push_back({1, 0});
    return pts;
}

ProjPoint normalize_proj(const Field& F, Felt a, Felt b) {
    if (a == 0 && b == 0) throw std::invalid_argument("projective point needs a nonzero pair");
    if (b != 0) {
        return {F.mul(a, F.inv(b)), 1};
    }
    return {1, 0};
}

Mat lambda_matrix(const Field& F, const ProjPoint& pt, Felt alpha, Felt beta) {
    Felt a = pt.a, b = pt.b;
    Felt qv = quadratic_form(F, a, b, alpha, beta);
    if (qv == 0) throw std::invalid_argument("quadratic form vanishes; chi must be irreducible");
    Felt iq = F.inv(qv);
    Mat m(4, 2);
    m.at(0, 0) = F.neg(F.mul(b, a));
    m.at(0, 1) = F.neg(F.mul(b, b));
    m.at(1, 0) = F.mul(a, a);
    m.at(1, 1) = F.mul(a, b);
    m.at(2, 0) = F.mul(beta, F.mul(b, b));
    m.at(2, 1) = F.sub(F.neg(F.mul(alpha, F.mul(b, b))), F.mul(a, b));
    m.at(3, 0) = F.neg(F.mul(beta, F.mul(a, b)));
    m.at(3, 1) = F.add(F.mul(a, a), F.mul(alpha, F.mul(a, b)));
    for (Felt& x : m.a) x = F.mul(iq, x);
    return m;
}

Mat m_matrix(const Field& F, const ProjPoint& pt, Felt alpha, Felt beta) {
    Mat m = lambda_matrix(F, pt, alpha, beta);
    for (int c = 0; c < 2; ++c) std::swap(m.at(1, c), m.at(2, c));
    return m;
}

ConstructionResult build_construction(const Field& F, std::optional<std::pair<Felt, Felt>> chi) {
    ConstructionResult r;
    r.field = F;
    if (chi) {
        std::tie(r.alpha, r.beta) = *chi;
        for (int x = 0; x < F.q(); ++x) {
            if (quadratic_form(F, static_cast<Felt>(x), 1, r.alpha, r.beta) == 0) {
                throw std::invalid_argument("supplied quadratic has a root");
            }
        }
    } else {
        std::tie(r.alpha, r.beta) = find_irreducible_quadratic(F);
    }
    r.points = proj_line(F);
    Mat gen(4, 0), mu(4, 0);
    for (const ProjPoint& p : r.points) {
        Mat lam = lambda_matrix(F, p, r.alpha, r.beta);
        Mat mm = m_matrix(F, p, r.alpha, r.beta);
        gen = gen.cols == 0 ? lam : hconcat(gen, lam);
        mu = mu.cols == 0 ? mm : hconcat(mu, mm);
        r.lambdas.push_back(std::move(lam));
        r.ms.push_back(std::move(mm));
    }
    r.code = Code(F, 2, static_cast<int>(r.points.size()), gen);
    r.fmap = CodeMap(r.code, mu);
    return r;
}

bool ConstructVerifyReport::all() const {
    return is_isometry && fixes_and_swaps && is_automorphism && preimage_formulas_hold &&
           indicator_identity && ext_linear && mds && kernel_multisets_differ && unextendable;
}

ConstructVerifyReport verify_construction(const ConstructionResult& r) {
    const Field& F = r.field;
    int q = F.q();
    int n = q + 1;
    ConstructVerifyReport rep;

    rep.is_isometry = is_swc_isometry(r.fmap, singleton_partition(q, 2));

    rep.fixes_and_swaps = r.fmap.mu.row(0) == r.code.gen.row(0) &&
                          r.fmap.mu.row(3) == r.code.gen.row(3) &&
                          r.fmap.mu.row(1) == r.code.gen.row(2) &&
                          r.fmap.mu.row(2) == r.code.gen.row(1);

    rep.is_automorphism = image(F, r.fmap.mu) == image(F, r.code.gen);

    // Kernels are the expected 2-dimensional coset directions and the shifted
    // vector (-alpha*x - beta*y, x, x, y) is a preimage of (x, y) under both
    // coordinate maps; together these pin the full preimage formulas. The four
    // spot evaluations are checked verbatim as well.
    bool pre = true;
    std::vector<Subspace> vkers, ukers;
    for (int i = 0; i < n; ++i) {
        Felt a = r.points[i].a, b = r.points[i].b;
        Subspace v = span_of(F, {{a, b, 0, 0}, {0, 0, a, b}}, 4);
        Subspace u = span_of(F, {{a, 0, b, 0}, {0, a, 0, b}}, 4);
        vkers.push_back(v);
        ukers.push_back(u);
        if (kernel(F, r.lambdas[i]) != v) pre = false;
        if (kernel(F, r.ms[i]) != u) pre = false;
        Vec za = {a, b, 0, 0}, zb = {0, 0, a, b};
        Vec e1 = {F.neg(r.alpha), 1, 1, 0}, e2 = {F.neg(r.beta), 0, 0, 1};
        if (!vec_is_zero(vec_mat(F, za, r.lambdas[i]))) pre = false;
        if (!vec_is_zero(vec_mat(F, zb, r.lambdas[i]))) pre = false;
        if (vec_mat(F, e1, r.lambdas[i]) != Vec{1, 0}) pre = false;
        if (vec_mat(F, e2, r.lambdas[i]) != Vec{0, 1}) pre = false;
        for (int x = 0; x < q && pre; ++x) {
            for (int y = 0; y < q && pre; ++y) {
                Felt fx = static_cast<Felt>(x), fy = static_cast<Felt>(y);
                Vec w = {F.sub(F.neg(F.mul(r.alpha, fx)), F.mul(r.beta, fy)), fx, fx, fy};
                Vec target = {fx, fy};
                if (vec_mat(F, w, r.lambdas[i]) != target) pre = false;
                if (vec_mat(F, w, r.ms[i]) != target) pre = false;
            }
        }
    }
    rep.preimage_formulas_hold = pre;

    bool ind = true;
    for (std::uint64_t wi = 0; wi < upow(q, 4) && ind; ++wi) {
        Vec w = vec_from_index(q, 4, wi);
        int cv = 0, cu = 0;
        for (int i = 0; i < n; ++i) {
            if (subspace_contains(F, vkers[i], w)) ++cv;
            if (subspace_contains(F, ukers[i], w)) ++cu;
        }
        if (cv != cu) ind = false;
    }
    rep.indicator_identity = ind;

    try {
        MinDistResult md = min_distance_ext(r.code, r.alpha, r.beta);
        rep.ext_linear = true;
        rep.min_distance = md.d;
        rep.mds = md.mds;
    } catch (const std::invalid_argument&) {
        rep.ext_linear = false;
    }

    std::multiset<Subspace> lam_kers, mu_kers;
    for (int i = 0; i < n; ++i) {
        lam_kers.insert(kernel(F, r.lambdas[i]));
        mu_kers.insert(kernel(F, r.ms[i]));
    }
    rep.kernel_multisets_differ = lam_kers != mu_kers;

    MatGroup gl2 = gl_group(F, 2);
    rep.unextendable = !coordinate_matching(r.fmap, orbits(gl2)).has_value() &&
                       !extend_to_monomial(r.fmap, gl2).has_value();

    return rep;
}

bool SubcodeReport::all() const {
    return constant_weight && restriction_is_isometry && restriction_unextendable &&
           preimage_piecewise_hold && covering_zero_orbit && covering_nonzero_orbit &&
           dim3_restrictions_unextendable && one_dim_restrictions_extend;
}

SubcodeReport subcode_analysis(const ConstructionResult& r) {
    const Field& F = r.field;
    int q = F.q();
    int n = q + 1;
    SubcodeReport rep;

    Mat gen2 = submatrix_rows(r.code.gen, {0, 1});
    Mat mu2 = submatrix_rows(r.fmap.mu, {0, 1});
    Code sub(F, 2, n, gen2);
    CodeMap fsub(sub, mu2);

    bool cw = true;
    for (int wi = 1; wi < q * q; ++wi) {
        Vec w = vec_from_index(q, 2, wi);
        if (hamming_weight(vec_mat(F, w, gen2), 2) != n - 1) cw = false;
    }
    rep.constant_weight = cw;

    rep.restriction_is_isometry = is_swc_isometry(fsub, singleton_partition(q, 2));

    MatGroup gl2 = gl_group(F, 2);
    rep.restriction_unextendable = !extend_to_monomial(fsub, trivial_group(F, 2)).has_value() &&
                                   !extend_to_monomial(fsub, gl2).has_value();

    // Piecewise preimages of each alphabet value under the restricted
    // coordinate maps, with W' identified with F^2.
    auto lines = proj_line(F);
    auto line_of = [&](const ProjPoint& p) {
        std::set<std::pair<Felt, Felt>> pts;
        for (int t = 0; t < q; ++t) {
            pts.insert({F.mul(static_cast<Felt>(t), p.a), F.mul(static_cast<Felt>(t), p.b)});
        }
        return pts;
    };
    bool piecewise = true;
    for (int i = 0; i < n && piecewise; ++i) {
        const ProjPoint& p = r.points[i];
        Mat lam2 = submatrix_rows(r.lambdas[i], {0, 1});  // W' rows
        Mat msub = submatrix_rows(r.ms[i], {0, 1});
        for (int x = 0; x < q && piecewise; ++x) {
            for (int y = 0; y < q && piecewise; ++y) {
                Felt fx = static_cast<Felt>(x), fy = static_cast<Felt>(y);
                std::set<std::pair<Felt, Felt>> got_lam, got_mu;
                for (int wi = 0; wi < q * q; ++wi) {
                    Vec w = vec_from_index(q, 2, wi);
                    if (vec_mat(F, w, lam2) == Vec{fx, fy}) got_lam.insert({w[0], w[1]});
                    if (vec_mat(F, w, msub) == Vec{fx, fy}) got_mu.insert({w[0], w[1]});
                }
                std::set<std::pair<Felt, Felt>> want_lam, want_mu;
                if (fx == 0 && fy == 0) {
                    want_lam = line_of(p);
                } else if (normalize_proj(F, fx, fy) == p) {
                    Felt px = F.sub(F.neg(F.mul(r.alpha, fx)), F.mul(r.beta, fy));
                    for (auto [lx, ly] : line_of(p)) {
                        want_lam.insert({F.add(px, lx), F.add(fx, ly)});
                    }
                }
                if (p.b != 0) {
                    Felt ab = F.mul(p.a, F.inv(p.b));
                    want_mu.insert({F.sub(F.sub(F.neg(F.mul(r.alpha, fx)), F.mul(r.beta, fy)),
                                          F.mul(ab, fx)),
                                    F.sub(fx, F.mul(ab, fy))});
                } else if (fx == 0 && fy == 0) {
                    for (int wi = 0; wi < q * q; ++wi) {
                        Vec w = vec_from_index(q, 2, wi);
                        want_mu.insert({w[0], w[1]});
                    }
                }
                if (got_lam != want_lam || got_mu != want_mu) piecewise = false;
            }
        }
    }
    rep.preimage_piecewise_hold = piecewise;

    // q * [w = 0] + 1 = #{points whose line contains w}, pointwise on W'.
    bool cover0 = true;
    for (int wi = 0; wi < q * q; ++wi) {
        Vec w = vec_from_index(q, 2, wi);
        int cnt = 0;
        for (const ProjPoint& p : lines) {
            if (line_of(p).count({w[0], w[1]})) ++cnt;
        }
        int lhs = (wi == 0 ? q : 0) + 1;
        if (cnt != lhs) cover0 = false;
    }
    rep.covering_zero_orbit = cover0;

    // For every nonzero (x,y): the mu columns away from [1:0] cover the value
    // exactly where the lambda column at [x:y] attains it.
    bool covernz = true;
    for (int x = 0; x < q; ++x) {
        for (int y = 0; y < q; ++y) {
            if (x == 0 && y == 0) continue;
            Felt fx = static_cast<Felt>(x), fy = static_cast<Felt>(y);
            ProjPoint xy = normalize_proj(F, fx, fy);
            int xi = static_cast<int>(std::find(r.points.begin(), r.points.end(), xy) -
                                      r.points.begin());
            Mat lamxy = submatrix_rows(r.lambdas[xi], {0, 1});
            for (int wi = 0; wi < q * q; ++wi) {
                Vec w = vec_from_index(q, 2, wi);
                int lhs = 0;
                for (int i = 0; i < n; ++i) {
                    if (r.points[i] == ProjPoint{1, 0}) continue;
                    Mat msub = submatrix_rows(r.ms[i], {0, 1});
                    if (vec_mat(F, w, msub) == Vec{fx, fy}) ++lhs;
                }
                int rhs = vec_mat(F, w, lamxy) == Vec{fx, fy} ? 1 : 0;
                if (lhs != rhs) covernz = false;
            }
        }
    }
    rep.covering_nonzero_orbit = covernz;

    bool dim3 = true;
    for (std::vector<int> rows : {std::vector<int>{0, 1, 2}, std::vector<int>{1, 2, 3}}) {
        Code sub3(F, 2, n, submatrix_rows(r.code.gen, rows));
        CodeMap fsub3(sub3, submatrix_rows(r.fmap.mu, rows));
        if (!is_swc_isometry(fsub3, singleton_partition(q, 2))) dim3 = false;
        if (image(F, fsub3.mu) != image(F, sub3.gen)) dim3 = false;
        if (extend_to_monomial(fsub3, trivial_group(F, 2)).has_value()) dim3 = false;
        if (extend_to_monomial(fsub3, gl2).has_value()) dim3 = false;
    }
    rep.dim3_restrictions_unextendable = dim3;

    bool onedim = true;
    for (std::uint64_t wi = 1; wi < upow(q, 4) && onedim; ++wi) {
        Vec w = vec_from_index(q, 4, wi);
        Mat g1 = Mat::from_rows({vec_mat(F, w, r.code.gen)});
        Mat m1 = Mat::from_rows({vec_mat(F, w, r.fmap.mu)});
        Code c1(F, 2, n, g1);
        CodeMap f1(c1, m1);
        if (!extend_to_monomial(f1, trivial_group(F, 2)).has_value()) onedim = false;
    }
    rep.one_dim_restrictions_extend = onedim;

    return rep;
}

std::pair<Code, CodeMap> pad_and_embed(const ConstructionResult& r, int ell_target,
                                       int n_target) {
    int q = r.field.q();
    if (ell_target < 2) throw std::invalid_argument("target alphabet dimension must be >= 2");
    if (n_target <= q) throw std::invalid_argument("target length must exceed q");
    int n0 = q + 1;
    auto widen = [&](const Mat& m) {
        Mat out(4, n_target * ell_target);
        for (int row = 0; row < 4; ++row) {
            for (int i = 0; i < n0; ++i) {
                out.at(row, i * ell_target) = m.at(row, i * 2);
                out.at(row, i * ell_target + 1) = m.at(row, i * 2 + 1);
            }
        }
        return out;
    };
    Code c(r.field, ell_target, n_target, widen(r.code.gen));
    CodeMap f(c, widen(r.fmap.mu));
    return {std::move(c), std::move(f)};
}

}  // namespace swcx
