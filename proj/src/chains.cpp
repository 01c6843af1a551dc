#include "qabel/catalog.hpp"
#include "qabel/qpoch.hpp"
#include "qabel/transforms.hpp"

namespace qabel {

namespace {

using R = Rational;

R dv(const R& a, const R& b) { return div_exact(a, b); }

const IdentityEntry& entry(const std::string& id) { return Catalog::instance().at(id); }

ParamPoint scalars_point(std::initializer_list<std::pair<const char*, R>> vals,
                         std::initializer_list<std::pair<const char*, R>> halves) {
    ParamPoint p;
    for (const auto& [k, v] : vals) p.values[k] = v;
    for (const auto& [k, v] : halves) p.half_bases[k] = v;
    return p;
}

// Entry-point scale of Corollary 3.1's proof: prod (1-x_i^2)/(1-K0/x_i^2).
R finalnew2_multiplier(const MasterParams& m) {
    const KL kl = kl_constants(m.x_side());
    R r(1);
    for (int i = 0; i < 4; ++i) {
        const R xi2 = m.x[i] * m.x[i];
        r *= dv(1 - xi2, guard_nonzero(R(1) - dv(kl.K, xi2)));
    }
    return r;
}

SpecializationChain chain_finalnew2() {
    SpecializationChain c;
    c.entry_id = "c3.1-finalnew2";
    c.parent_id = "thm1";
    c.note = "p_i = q_i, a_i = x_i sigma_i";
    c.lift_symbols = {{"x1", "x2", "x3", "x4"}, {"q1", "q2", "q3", "q4"}};
    c.residual = [](const ParamPoint& pt, long n) -> Rational {
        MasterParams m;
        for (int i = 0; i < 4; ++i) {
            const std::string s = std::to_string(i + 1);
            m.x[i] = pt.value("x" + s);
            m.sigma_q[i] = pt.sigma("q" + s);
            m.sigma_p[i] = m.sigma_q[i];
            m.a[i] = m.x[i] * m.sigma_q[i];
        }
        const R parent = thm1_residual(m, n);
        const R child = entry("c3.1-finalnew2").residual(pt, n);
        return parent - dv(child, guard_nonzero(finalnew2_multiplier(m)));
    };
    return c;
}

SpecializationChain chain_rogerspsi65() {
    SpecializationChain c;
    c.entry_id = "c3.2-rogerspsi65";
    c.parent_id = "thm1";
    c.note = "roots sampled for a_i, x_i; b,d,e,c/a and y,w,u,z/x derived";
    c.lift_symbols = {{"ra1", "ra2", "ra3", "ra4", "rx1", "rx2", "rx3", "rx4", "a", "x"}, {"p", "q"}};
    c.residual = [](const ParamPoint& pt, long n) -> Rational {
        const R sp = pt.sigma("p"), sq = pt.sigma("q");
        const R p = sp * sp, q = sq * sq;
        const R ra1 = pt.value("ra1"), ra2 = pt.value("ra2"), ra3 = pt.value("ra3"), ra4 = pt.value("ra4");
        const R rx1 = pt.value("rx1"), rx2 = pt.value("rx2"), rx3 = pt.value("rx3"), rx4 = pt.value("rx4");
        const R a = pt.value("a"), x = pt.value("x");
        const R b = dv(ra1 * ra1, p), d = dv(ra2 * ra2, p), e = dv(ra3 * ra3, p);
        const R cc = dv(a * ra4 * p, guard_nonzero(ra1 * ra2 * ra3));
        const R y = dv(rx1 * rx1, q), w = dv(rx2 * rx2, q), u = dv(rx3 * rx3, q);
        const R z = dv(x * rx4 * q, guard_nonzero(rx1 * rx2 * rx3));
        MasterParams m;
        m.a = {ra1, ra2, ra3, ra4};
        m.x = {rx1, rx2, rx3, rx4};
        m.sigma_p = {sp, sp, sp, sp};
        m.sigma_q = {sq, sq, sq, sq};
        const ParamPoint ep = scalars_point(
            {{"a", a}, {"b", b}, {"c", cc}, {"d", d}, {"e", e}, {"x", x}, {"y", y}, {"z", z}, {"w", w}, {"u", u}},
            {{"p", sp}, {"q", sq}});
        const R parent = thm1_residual(m, n);
        const R child = entry("c3.2-rogerspsi65").residual(ep, n);
        const R mult = dv((1 - b) * (1 - d) * (1 - e) * (1 - dv(b * cc * cc * d * e, a * a)),
                          guard_nonzero((1 - dv(b * cc * d, a)) * (1 - dv(b * cc * e, a)) *
                                        (1 - dv(cc * d * e, a)) * (1 - dv(a, cc))));
        return parent - dv(child, guard_nonzero(mult));
    };
    return c;
}

SpecializationChain chain_ex25() {
    SpecializationChain c;
    c.entry_id = "ex3.3-gr-ex2.5";
    c.parent_id = "c3.2-rogerspsi65";
    c.note = "a = bc, x = z";
    c.lift_symbols = {{"b", "c", "d", "e", "x", "y", "w", "u"}, {"p", "q"}};
    c.residual = [](const ParamPoint& pt, long n) -> Rational {
        const R b = pt.value("b"), cc = pt.value("c"), x = pt.value("x");
        ParamPoint parent_pt = pt;
        parent_pt.values["a"] = b * cc;
        parent_pt.values["z"] = x;
        const ParamPoint child_pt = scalars_point(
            {{"y", pt.value("y")}, {"w", pt.value("w")}, {"u", pt.value("u")}}, {{"q", pt.sigma("q")}});
        const R parent = entry("c3.2-rogerspsi65").residual(parent_pt, n);
        const R child = entry("ex3.3-gr-ex2.5").residual(child_pt, n);
        return parent - child;
    };
    return c;
}

SpecializationChain chain_imp37() {
    SpecializationChain c;
    c.entry_id = "eq-important-3.7";
    c.parent_id = "c3.2-rogerspsi65";
    c.note = "e = 0 (polynomial substitution, exact)";
    c.lift_symbols = {{"a", "b", "c", "d", "x", "y", "z", "w", "u"}, {"p", "q"}};
    c.residual = [](const ParamPoint& pt, long n) -> Rational {
        ParamPoint parent_pt = pt;
        parent_pt.values["e"] = R(0);
        const R parent = entry("c3.2-rogerspsi65").residual(parent_pt, n);
        const R child = entry("eq-important-3.7").residual(pt, n);
        return parent - child;
    };
    return c;
}

// Shared lift for the quadratic-pattern substitution of Theorems 3.2/3.4:
// p_1 = p_2 = q, p_3 = p_4 = q^2, a_i^2 = (dq, q^2/d, bcq^3, a^2bcq^2) and
// x_i^2 = (abc, q^2/a, acq, abq), with a = rho_a^2 etc.
MasterParams quad_master(const R& roua, const R& roub, const R& rouc, const R& roud, const R& sg) {
    const R q = sg * sg;
    MasterParams m;
    m.sigma_p = {sg, sg, q, q};
    m.sigma_q = {sg, sg, q, q};
    m.a = {roud * sg, dv(q, roud), roub * rouc * sg * sg * sg, roua * roua * roub * rouc * q};
    m.x = {roua * roub * rouc, dv(q, roua), roua * rouc * sg, roua * roub * sg};
    return m;
}

SpecializationChain chain_zzzz() {
    SpecializationChain c;
    c.entry_id = "t3.4-zzzz";
    c.parent_id = "thm2";
    c.note = "quadratic-pattern substitution, roots sampled for a, b, c, d";
    c.lift_symbols = {{"ra", "rb", "rc", "rd"}, {"q"}};
    c.residual = [](const ParamPoint& pt, long n) -> Rational {
        const R ra = pt.value("ra"), rb = pt.value("rb"), rc = pt.value("rc"), rd = pt.value("rd");
        const R sg = pt.sigma("q");
        const R q = sg * sg;
        const R a = ra * ra, b = rb * rb, cc = rc * rc, d = rd * rd;
        const MasterParams m = quad_master(ra, rb, rc, rd, sg);
        const ParamPoint ep =
            scalars_point({{"a", a}, {"b", b}, {"c", cc}, {"d", d}}, {{"q", sg}});
        const R parent = thm2_residual(m, n);
        const R child = entry("t3.4-zzzz").residual(ep, n);
        const R mult = dv((1 - d) * (1 - dv(q, d)) * (1 - a * a * b * cc) * (1 - b * cc * q),
                          guard_nonzero((1 - a) * (1 - dv(a * b * cc * q, d)) * (1 - a * b * cc * d)));
        return parent - dv(child, guard_nonzero(mult));
    };
    return c;
}

SpecializationChain chain_t333() {
    SpecializationChain c;
    c.entry_id = "eq-xinrong-tomorrow333";
    c.parent_id = "t3.4-zzzz";
    c.note = "b = c = 0";
    c.lift_symbols = {{"a", "d"}, {"q"}};
    c.residual = [](const ParamPoint& pt, long n) -> Rational {
        ParamPoint parent_pt = pt;
        parent_pt.values["b"] = R(0);
        parent_pt.values["c"] = R(0);
        const R parent = entry("t3.4-zzzz").residual(parent_pt, n);
        const R child = entry("eq-xinrong-tomorrow333").residual(pt, n);
        return parent - child;
    };
    return c;
}

SpecializationChain chain_t444() {
    SpecializationChain c;
    c.entry_id = "eq-xinrong-tomorrow444";
    c.parent_id = "eq-xinrong-tomorrow333";
    c.note = "base q -> q^2, then a = q^2, d = q; scale (1-q)";
    c.lift_symbols = {{}, {"q"}};
    c.residual = [](const ParamPoint& pt, long n) -> Rational {
        const R sg = pt.sigma("q");
        const R q = sg * sg;
        ParamPoint parent_pt;
        parent_pt.values["a"] = q * q;
        parent_pt.values["d"] = q;
        parent_pt.half_bases["q"] = q;  // parent base q^2 has half-base q
        const R parent = entry("eq-xinrong-tomorrow333").residual(parent_pt, n);
        const R child = entry("eq-xinrong-tomorrow444").residual(pt, n);
        return parent - (1 - q) * child;
    };
    return c;
}

SpecializationChain chain_typeII() {
    SpecializationChain c;
    c.entry_id = "eq-type-II-concrete";
    c.parent_id = "thm2";
    c.note = "cubic-pattern substitution, roots for a, b, c; parent index n+1";
    c.lift_symbols = {{"ra", "rb", "rc"}, {"q"}};
    c.residual = [](const ParamPoint& pt, long n) -> Rational {
        const R ra = pt.value("ra"), rb = pt.value("rb"), rc = pt.value("rc");
        const R sg = pt.sigma("q");
        const R q = sg * sg, s3 = sg * sg * sg;
        const R a = ra * ra, b = rb * rb, cc = rc * rc;
        MasterParams m;
        m.sigma_p = {sg, sg, s3, s3};
        m.sigma_q = {sg, q, q, s3};
        m.a = {ra * sg, dv(sg, ra * rb), rc * s3, dv(ra * ra * rb * s3, rc)};
        m.x = {rb, dv(sg, rb), dv(q, rb), ra * ra * rb * s3};
        const ParamPoint ep = scalars_point({{"a", a}, {"b", b}, {"c", cc}}, {{"q", sg}});
        const R parent = thm2_residual(m, n + 1);
        const R child = entry("eq-type-II-concrete").residual(ep, n);
        return parent - child;
    };
    return c;
}

SpecializationChain chain_thirdadded() {
    SpecializationChain c;
    c.entry_id = "c3.5-thirdadded";
    c.parent_id = "thm3";
    c.note = "roots sampled for a_i, x_i; scale D from the proof's final division";
    c.lift_symbols = {{"rb", "rd", "re", "rca", "a", "ry", "rw", "ru", "rzx", "x"}, {"p", "q"}};
    c.residual = [](const ParamPoint& pt, long n) -> Rational {
        const R sp = pt.sigma("p"), sq = pt.sigma("q");
        const R p = sp * sp, q = sq * sq;
        const R rb = pt.value("rb"), rd = pt.value("rd"), re = pt.value("re"), rca = pt.value("rca");
        const R ry = pt.value("ry"), rw = pt.value("rw"), ru = pt.value("ru"), rzx = pt.value("rzx");
        const R a = pt.value("a"), x = pt.value("x");
        const R b = rb * rb, d = rd * rd, e = re * re;
        const R cc = a * rca;
        const R y = ry * ry, w = rw * rw, u = ru * ru;
        const R z = x * rzx;
        MasterParams m;
        m.sigma_p = {sp, sp, sp, sp};
        m.sigma_q = {sq, sq, sq, sq};
        m.a = {rb * sp, rd * sp, re * sp, rb * rd * re * rca * sp};
        m.x = {ry * sq, rw * sq, ru * sq, ry * rw * ru * rzx * sq};
        const ParamPoint ep = scalars_point(
            {{"a", a}, {"b", b}, {"c", cc}, {"d", d}, {"e", e}, {"x", x}, {"y", y}, {"z", z}, {"w", w}, {"u", u}},
            {{"p", sp}, {"q", sq}});
        const R parent = thm3_residual(m, n);
        const R child = entry("c3.5-thirdadded").residual(ep, n);
        const R D = dv((1 - dv(a, cc)) * (1 - dv(b * cc * d, a)) * (1 - dv(b * cc * e, a)) * (1 - dv(cc * d * e, a)),
                       guard_nonzero((1 - b) * (1 - d) * (1 - e) * (1 - dv(b * cc * cc * d * e, a * a))));
        return parent - D * child;
    };
    return c;
}

SpecializationChain chain_bibasic() {
    SpecializationChain c;
    c.entry_id = "eq-bibasic-gasper";
    c.parent_id = "c3.5-thirdadded";
    c.note = "x = zw; scale (a/c) D(bc/a,cd/a,ce/a,bcde/a)/D(cde/a,bce/a,bcd/a,a/c)";
    c.lift_symbols = {{"a", "b", "c", "d", "e", "z", "w", "y", "u"}, {"p", "q"}};
    c.residual = [](const ParamPoint& pt, long n) -> Rational {
        const R a = pt.value("a"), b = pt.value("b"), cc = pt.value("c"), d = pt.value("d"), e = pt.value("e");
        const R z = pt.value("z"), w = pt.value("w");
        ParamPoint parent_pt = pt;
        parent_pt.values["x"] = z * w;
        const ParamPoint child_pt = scalars_point(
            {{"a", a}, {"b", b}, {"c", cc}, {"d", d}, {"e", e}}, {{"p", pt.sigma("p")}});
        const R parent = entry("c3.5-thirdadded").residual(parent_pt, n);
        const R child = entry("eq-bibasic-gasper").residual(child_pt, n);
        const R s = dv(a, guard_nonzero(cc)) *
                    dv(dfun({dv(b * cc, a), dv(cc * d, a), dv(cc * e, a), dv(b * cc * d * e, a)}),
                       guard_nonzero(dfun({dv(cc * d * e, a), dv(b * cc * e, a), dv(b * cc * d, a), dv(a, cc)})));
        return parent - s * child;
    };
    return c;
}

SpecializationChain chain_quad_recurrence() {
    SpecializationChain c;
    c.entry_id = "t3.2-quad-recurrence";
    c.parent_id = "thm1";
    c.note = "quadratic-pattern substitution; scale (1-abc)(1-a/d)(q-ad)/(a(1-d)(1-q/d)(1-bcq)(1-a^2bc))";
    c.lift_symbols = {{"ra", "rb", "rc", "rd"}, {"q"}};
    c.residual = [](const ParamPoint& pt, long n) -> Rational {
        const R ra = pt.value("ra"), rb = pt.value("rb"), rc = pt.value("rc"), rd = pt.value("rd");
        const R sg = pt.sigma("q");
        const R q = sg * sg;
        const R a = ra * ra, b = rb * rb, cc = rc * rc, d = rd * rd;
        const MasterParams m = quad_master(ra, rb, rc, rd, sg);
        const ParamPoint ep = scalars_point({{"a", a}, {"b", b}, {"c", cc}, {"d", d}}, {{"q", sg}});
        const R parent = thm1_residual(m, n);
        const R child = entry("t3.2-quad-recurrence").residual(ep, n);
        const R mult = dv((1 - a * b * cc) * (1 - dv(a, d)) * (q - a * d),
                          guard_nonzero(a * (1 - d) * (1 - dv(q, d)) * (1 - b * cc * q) * (1 - a * a * b * cc)));
        return parent - mult * child;
    };
    return c;
}

SpecializationChain chain_cubic_recurrence() {
    SpecializationChain c;
    c.entry_id = "cubic-recurrence";
    c.parent_id = "thm1";
    c.note = "cubic-pattern substitution, roots for a, b, c; rearrangement multiplier";
    c.lift_symbols = {{"ra", "rb", "rc"}, {"q"}};
    c.residual = [](const ParamPoint& pt, long n) -> Rational {
        const R ra = pt.value("ra"), rb = pt.value("rb"), rc = pt.value("rc");
        const R sg = pt.sigma("q");
        const R q = sg * sg, s3 = sg * sg * sg;
        const R a = ra * ra, b = rb * rb, cc = rc * rc;
        MasterParams m;
        m.sigma_p = {sg, sg, s3, s3};
        m.sigma_q = {sg, q, q, s3};
        m.a = {ra * sg, dv(sg, ra * rb), rc * s3, dv(ra * ra * rb * s3, rc)};
        m.x = {rb, dv(sg, rb), dv(q, rb), ra * ra * rb * s3};
        const ParamPoint ep = scalars_point({{"a", a}, {"b", b}, {"c", cc}}, {{"q", sg}});
        const R parent = thm1_residual(m, n);
        const R child = entry("cubic-recurrence").residual(ep, n);
        return parent - child;
    };
    return c;
}

SpecializationChain chain_quartic_recurrence() {
    SpecializationChain c;
    c.entry_id = "quartic-recurrence";
    c.parent_id = "thm1";
    c.note = "quartic-pattern substitution, roots for a, b; rearrangement multiplier";
    c.lift_symbols = {{"ra", "rb"}, {"q"}};
    c.residual = [](const ParamPoint& pt, long n) -> Rational {
        const R ra = pt.value("ra"), rb = pt.value("rb");
        const R sg = pt.sigma("q");
        const R q = sg * sg, s3 = sg * sg * sg;
        const R a = ra * ra, b = rb * rb;
        MasterParams m;
        m.sigma_p = {sg, sg, q, q};
        m.sigma_q = {sg, s3, s3, s3};
        m.a = {ra * sg, rb * sg, ra * rb * q, ra * ra * rb * rb * q};
        m.x = {ra * rb * sg, dv(ra * rb, q), dv(ra * rb, sg), ra * rb};
        const ParamPoint ep = scalars_point({{"a", a}, {"b", b}}, {{"q", sg}});
        const R parent = thm1_residual(m, n);
        const R child = entry("quartic-recurrence").residual(ep, n);
        return parent - child;
    };
    return c;
}

ExponentParams corollary_exponent_params(const ParamPoint& pt, const std::array<R, 4>& r,
                                         const std::array<R, 4>& s) {
    ExponentParams ep;
    ep.r = r;
    ep.s = s;
    ep.base_sigma = pt.sigma("t");
    const R a = pt.value("a"), x = pt.value("x");
    ep.scalars["a"] = a;
    ep.scalars["b"] = pt.value("b");
    ep.scalars["c"] = a * pt.value("t1");
    ep.scalars["d"] = pt.value("d");
    ep.scalars["e"] = pt.value("e");
    ep.scalars["x"] = x;
    ep.scalars["y"] = pt.value("y");
    ep.scalars["z"] = x * pt.value("t2");
    ep.scalars["w"] = pt.value("w");
    ep.scalars["u"] = pt.value("u");
    return ep;
}

ParamPoint corollary_entry_point(const ParamPoint& pt) {
    ParamPoint ep;
    for (const char* k : {"b", "d", "e", "y", "w", "u", "t1", "t2"}) ep.values[k] = pt.value(k);
    ep.half_bases["t"] = pt.sigma("t");
    return ep;
}

SpecializationChain chain_c4(const std::string& id, std::array<R, 4> r, std::array<R, 4> s) {
    SpecializationChain c;
    c.entry_id = id;
    c.parent_id = "thm41";
    c.note = "exponent-pattern substitution with c = a t1, z = x t2";
    c.lift_symbols = {{"a", "b", "d", "e", "x", "y", "w", "u", "t1", "t2"}, {"t"}};
    c.residual = [id, r, s](const ParamPoint& pt, long n) -> Rational {
        const ExponentParams ep = corollary_exponent_params(pt, r, s);
        const R parent = thm41_residual(ep, n);
        const R child = entry(id).residual(corollary_entry_point(pt), n);
        return parent - child;
    };
    return c;
}

SpecializationChain chain_c42() {
    SpecializationChain c;
    c.entry_id = "c4.2-(1,1)-type";
    c.parent_id = "thm41";
    c.note = "r_i = r, s_i = s, p = q";
    c.lift_symbols = {{"a", "b", "c", "d", "e", "x", "y", "z", "w", "u"}, {"t"}};
    c.residual = [](const ParamPoint& pt, long n) -> Rational {
        ExponentParams ep;
        const R rr = R(1), ss = rat(1, 2);
        ep.r = {rr, rr, rr, rr};
        ep.s = {ss, ss, ss, ss};
        ep.base_sigma = pt.sigma("t");
        for (const char* k : {"a", "b", "c", "d", "e", "x", "y", "z", "w", "u"}) ep.scalars[k] = pt.value(k);
        const R parent = thm41_residual(ep, n);
        const R child = entry("c4.2-(1,1)-type").residual(pt, n);
        return parent - child;
    };
    return c;
}

SpecializationChain chain_quintic() {
    SpecializationChain c;
    c.entry_id = "c4.6-quintic";
    c.parent_id = "c4.6-(3,3)-type";
    c.note = "(b,d,e,t1) = (a,aq,a^2q/c,cq/a), (y,w,u,t2) = (a/q,a,acq^2,1/cq), q = t^4; parent index n+1";
    c.lift_symbols = {{"a", "c"}, {"t"}};
    c.residual = [](const ParamPoint& pt, long n) -> Rational {
        const R t = pt.sigma("t");
        const R q = pow_int(t, 4);
        const R a = pt.value("a"), cc = pt.value("c");
        ParamPoint parent_pt;
        parent_pt.values["b"] = a;
        parent_pt.values["d"] = a * q;
        parent_pt.values["e"] = dv(a * a * q, guard_nonzero(cc));
        parent_pt.values["t1"] = dv(cc * q, guard_nonzero(a));
        parent_pt.values["y"] = dv(a, q);
        parent_pt.values["w"] = a;
        parent_pt.values["u"] = a * cc * q * q;
        parent_pt.values["t2"] = dv(R(1), cc * q);
        parent_pt.half_bases["t"] = t;
        ParamPoint child_pt;
        child_pt.values["a"] = a;
        child_pt.values["c"] = cc;
        child_pt.half_bases["q"] = t * t;  // entry base q = (t^2)^2
        const R parent = entry("c4.6-(3,3)-type").residual(parent_pt, n + 1);
        const R child = entry("c4.6-quintic").residual(child_pt, n);
        return parent - child;
    };
    return c;
}

std::vector<SpecializationChain> build_chains() {
    const R h = rat(1, 2), o = R(1), th = rat(3, 2), fh = rat(5, 2), tw = R(2);
    std::vector<SpecializationChain> out;
    out.push_back(chain_finalnew2());
    out.push_back(chain_rogerspsi65());
    out.push_back(chain_ex25());
    out.push_back(chain_imp37());
    out.push_back(chain_zzzz());
    out.push_back(chain_t333());
    out.push_back(chain_t444());
    out.push_back(chain_typeII());
    out.push_back(chain_thirdadded());
    out.push_back(chain_bibasic());
    out.push_back(chain_quad_recurrence());
    out.push_back(chain_cubic_recurrence());
    out.push_back(chain_quartic_recurrence());
    out.push_back(chain_c42());
    out.push_back(chain_c4("c4.3-(2,2)-type", {h, h, o, o}, {h, h, o, o}));
    out.push_back(chain_c4("c4.4-(2,2)b-type", {h, h, tw, tw}, {h, th, th, th}));
    out.push_back(chain_c4("c4.5-(2,3)-type", {h, h, th, th}, {h, o, o, th}));
    out.push_back(chain_c4("c4.6-(3,3)-type", {o, o, th, fh}, {o, o, th, fh}));
    out.push_back(chain_quintic());
    return out;
}

}  // namespace

const std::vector<SpecializationChain>& specialization_chains() {
    static const std::vector<SpecializationChain> chains = build_chains();
    return chains;
}

const SpecializationChain* find_chain(const std::string& entry_id) {
    for (const auto& c : specialization_chains())
        if (c.entry_id == entry_id) return &c;
    return nullptr;
}

Rational verify_specialization(const std::string& id, const ParamPoint& lift_point, long n) {
    const SpecializationChain* c = find_chain(id);
    if (!c) throw std::invalid_argument("entry '" + id + "' has no specialization chain");
    return c->residual(lift_point, n);
}

}  // namespace qabel
