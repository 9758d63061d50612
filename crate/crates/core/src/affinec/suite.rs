//! Cleared instances of the folded defining relations, plus the
//! unfolded identities used to derive them.

use super::{cartan_bracket, FoldedAlgebra};
use crate::audit::{AuditConfig, Relation, Symbol, Word};
use crate::coeffring::{Monomial, QuarterElem, RingElem};
use crate::diagram::Diagram;
use crate::glinf::{bracket_inf, ConventionTable};

type Terms = Vec<(QuarterElem, Vec<Symbol>)>;

fn rel(name: impl Into<String>, indices: Vec<i64>, terms: Terms) -> Relation {
    terms
        .into_iter()
        .fold(Relation::new(name, indices), |r, (c, w)| {
            r.with(c, Word::of(w))
        })
}

fn q(m: Monomial) -> QuarterElem {
    m.into()
}

fn one() -> QuarterElem {
    QuarterElem::one()
}

fn minus_one() -> QuarterElem {
    -&QuarterElem::one()
}

fn ring(x: RingElem) -> QuarterElem {
    x.into()
}

/// `x y - c y x`.
fn twisted_commutator(
    name: &str,
    indices: Vec<i64>,
    x: Symbol,
    y: Symbol,
    c: QuarterElem,
) -> Relation {
    rel(name, indices, vec![(one(), vec![x, y]), (-&c, vec![y, x])])
}

/// `x w x^-1 - c w`.
fn conjugation(name: &str, indices: Vec<i64>, x: Symbol, w: Symbol, c: QuarterElem) -> Relation {
    rel(
        name,
        indices,
        vec![(one(), vec![x, w, x.inv()]), (-&c, vec![w])],
    )
}

/// The folded relation suite. Families indexed by unfolded diagonals use
/// `cfg.window`; level relations are instantiated per configured charge.
pub fn suite_affine(alg: &FoldedAlgebra, cfg: &AuditConfig) -> Vec<Relation> {
    let mut out = Vec::new();
    central_and_cartan(alg, cfg, &mut out);
    conjugations(alg, &mut out);
    commutators(alg, &mut out);
    serre(alg, &mut out);
    tails(alg, cfg, &mut out);
    infinite_brackets(alg, cfg, &mut out);
    out
}

fn nodes(alg: &FoldedAlgebra) -> impl Iterator<Item = usize> {
    alg.nodes()
}

fn central_and_cartan(alg: &FoldedAlgebra, cfg: &AuditConfig, out: &mut Vec<Relation>) {
    let mut diag: Vec<(String, Vec<i64>, Symbol)> = Vec::new();
    for i in nodes(alg) {
        diag.push(("W".into(), vec![i as i64], Symbol::w(i)));
    }
    for i in nodes(alg) {
        diag.push(("Wp".into(), vec![i as i64], Symbol::wp(i)));
    }
    diag.push(("D".into(), vec![], Symbol::d()));
    diag.push(("Dp".into(), vec![], Symbol::dp()));
    diag.push(("gamma".into(), vec![], Symbol::gamma()));
    diag.push(("gammap".into(), vec![], Symbol::gammap()));

    for (name, idx, x) in &diag {
        out.push(rel(
            format!("C1.inverse_{name}"),
            idx.clone(),
            vec![(one(), vec![*x, x.inv()]), (minus_one(), vec![])],
        ));
    }
    for (a, (na, ia, x)) in diag.iter().enumerate() {
        for (nb, ib, y) in &diag[a + 1..] {
            let idx = ia.iter().chain(ib).copied().collect();
            out.push(twisted_commutator(
                &format!("C1.comm_{na}_{nb}"),
                idx,
                *x,
                *y,
                one(),
            ));
        }
    }
    for (tag, g) in [("gamma", Symbol::gamma()), ("gammap", Symbol::gammap())] {
        for i in nodes(alg) {
            for (gt, x) in [("E", Symbol::efold(i)), ("F", Symbol::ffold(i))] {
                out.push(twisted_commutator(
                    &format!("C1.central_{tag}_{gt}"),
                    vec![i as i64],
                    g,
                    x,
                    one(),
                ));
            }
        }
    }

    // γ and γγ' on each charge, compared with their vacuum value
    let mut charges = cfg.charges.clone();
    charges.sort_unstable();
    charges.dedup();
    for n in charges {
        let vac = Diagram::vacuum(n);
        let g = alg.gamma_eigen(false, &vac);
        let gg = g * alg.gamma_eigen(true, &vac);
        out.push(
            rel(
                format!("C1.gamma_scalar[{g}]"),
                vec![n],
                vec![(one(), vec![Symbol::gamma()]), (-&q(g), vec![])],
            )
            .only_charge(n),
        );
        out.push(
            rel(
                format!("C1.level[{gg}]"),
                vec![n],
                vec![
                    (one(), vec![Symbol::gamma(), Symbol::gammap()]),
                    (-&q(gg), vec![]),
                ],
            )
            .only_charge(n),
        );
    }
}

fn conjugations(alg: &FoldedAlgebra, out: &mut Vec<Relation>) {
    let l = alg.l();
    let bracket = |i: usize, j: usize| ring(cartan_bracket(i, j, l).expect("node in range"));
    for i in nodes(alg) {
        let (e, f) = (Symbol::efold(i), Symbol::ffold(i));
        let ii = i as i64;
        let (ri, si) = if i == 0 {
            (alg.r_i(0), alg.s_i(0))
        } else {
            (one(), one())
        };
        out.push(conjugation("C2.D_E", vec![ii], Symbol::d(), e, ri.clone()));
        out.push(conjugation(
            "C2.D_F",
            vec![ii],
            Symbol::d(),
            f,
            ri.invert_vars(),
        ));
        out.push(conjugation(
            "C3.Dp_E",
            vec![ii],
            Symbol::dp(),
            e,
            si.clone(),
        ));
        out.push(conjugation(
            "C3.Dp_F",
            vec![ii],
            Symbol::dp(),
            f,
            si.invert_vars(),
        ));
        for j in nodes(alg) {
            let idx = vec![ii, j as i64];
            let (w, wp) = (Symbol::w(j), Symbol::wp(j));
            out.push(conjugation("C2.W_E", idx.clone(), w, e, bracket(i, j)));
            out.push(conjugation(
                "C2.W_F",
                idx.clone(),
                w,
                f,
                bracket(j, i).invert_vars(),
            ));
            out.push(conjugation(
                "C3.Wp_E",
                idx.clone(),
                wp,
                e,
                bracket(i, j).invert_vars(),
            ));
            out.push(conjugation("C3.Wp_F", idx, wp, f, bracket(j, i)));
        }
    }
}

fn commutators(alg: &FoldedAlgebra, out: &mut Vec<Relation>) {
    let l = alg.l();
    // C4 as (r_i - s_i)[E_i, F_j] - δ_ij (W_i - Wp_i)
    for i in nodes(alg) {
        for j in nodes(alg) {
            let c = &alg.r_i(i) - &alg.s_i(i);
            let (e, f) = (Symbol::efold(i), Symbol::ffold(j));
            let mut terms = vec![(c.clone(), vec![e, f]), (-&c, vec![f, e])];
            if i == j {
                terms.push((minus_one(), vec![Symbol::w(i)]));
                terms.push((one(), vec![Symbol::wp(i)]));
            }
            out.push(rel("C4", vec![i as i64, j as i64], terms));
        }
    }
    for i in nodes(alg) {
        for j in nodes(alg) {
            if j <= i + 1 || (i == 0 && j == l) {
                continue;
            }
            let idx = vec![i as i64, j as i64];
            out.push(twisted_commutator(
                "C5.e",
                idx.clone(),
                Symbol::efold(i),
                Symbol::efold(j),
                one(),
            ));
            out.push(twisted_commutator(
                "C5.f",
                idx,
                Symbol::ffold(i),
                Symbol::ffold(j),
                one(),
            ));
        }
    }
    let rs = q(Monomial::rs(1, 1));
    let (ll, l0) = (l as i64, 0);
    out.push(twisted_commutator(
        "C5.e_l_e_0",
        vec![ll, l0],
        Symbol::efold(l),
        Symbol::efold(0),
        rs.clone(),
    ));
    out.push(twisted_commutator(
        "C5.f_0_f_l",
        vec![l0, ll],
        Symbol::ffold(0),
        Symbol::ffold(l),
        rs,
    ));
}

/// `x x y - c1 x y x + c2 y x x`.
fn cubic(
    name: &str,
    idx: Vec<i64>,
    x: Symbol,
    y: Symbol,
    c1: QuarterElem,
    c2: QuarterElem,
) -> Relation {
    rel(
        name,
        idx,
        vec![
            (one(), vec![x, x, y]),
            (-&c1, vec![x, y, x]),
            (c2, vec![y, x, x]),
        ],
    )
}

/// `x^3 y - t x^2 y x + h t x y x^2 - h^3 y x^3`.
fn quartic(
    name: &str,
    idx: Vec<i64>,
    x: Symbol,
    y: Symbol,
    t: &QuarterElem,
    h: &QuarterElem,
) -> Relation {
    let h3 = &(h * h) * h;
    rel(
        name,
        idx,
        vec![
            (one(), vec![x, x, x, y]),
            (-t, vec![x, x, y, x]),
            (h * t, vec![x, y, x, x]),
            (-&h3, vec![y, x, x, x]),
        ],
    )
}

/// The e-side Serre family, the same family with `r, s` inverted on the
/// f-side, and the all-plus variant of the first e-side member.
fn serre(alg: &FoldedAlgebra, out: &mut Vec<Relation>) {
    let l = alg.l();
    for side in ["C6", "C7"] {
        let (gen, flip): (fn(usize) -> Symbol, bool) = if side == "C6" {
            (Symbol::efold, false)
        } else {
            (Symbol::ffold, true)
        };
        // `r, s -> r^-1, s^-1` on the f-side
        let v = |x: QuarterElem| if flip { x.invert_vars() } else { x };
        let r = q(Monomial::rs(1, 0));
        let s = q(Monomial::rs(0, 1));
        let rs = q(Monomial::rs(1, 1));
        let ix = |a: usize, b: usize| vec![a as i64, b as i64];

        out.push(cubic(
            &format!("{side}.0_1"),
            ix(0, 1),
            gen(0),
            gen(1),
            v(&r + &s),
            v(rs.clone()),
        ));
        if side == "C6" {
            // plus signs throughout
            out.push(rel(
                "C6.0_1.plus",
                ix(0, 1),
                vec![
                    (one(), vec![gen(0), gen(0), gen(1)]),
                    (&r + &s, vec![gen(0), gen(1), gen(0)]),
                    (rs.clone(), vec![gen(1), gen(0), gen(0)]),
                ],
            ));
        }
        for i in 1..=l.saturating_sub(2) {
            let (ri, si) = (alg.r_i(i), alg.s_i(i));
            out.push(cubic(
                &format!("{side}.i_i+1"),
                ix(i, i + 1),
                gen(i),
                gen(i + 1),
                v(&ri + &si),
                v(&ri * &si),
            ));
            let (rj, sj) = (alg.r_i(i + 1).invert_vars(), alg.s_i(i + 1).invert_vars());
            out.push(cubic(
                &format!("{side}.i+1_i"),
                ix(i + 1, i),
                gen(i + 1),
                gen(i),
                v(&rj + &sj),
                v(&rj * &sj),
            ));
        }
        let (ri, si) = (r.invert_vars(), s.invert_vars());
        out.push(cubic(
            &format!("{side}.l_l-1"),
            ix(l, l - 1),
            gen(l),
            gen(l - 1),
            v(&ri + &si),
            v(&ri * &si),
        ));
        let half = q(Monomial::new(1, 1));
        let t = &(&r + &half) + &s;
        out.push(quartic(
            &format!("{side}.l-1_l"),
            ix(l - 1, l),
            gen(l - 1),
            gen(l),
            &v(t.clone()),
            &v(half.clone()),
        ));
        out.push(quartic(
            &format!("{side}.1_0"),
            ix(1, 0),
            gen(1),
            gen(0),
            &v(t.invert_vars()),
            &v(half.invert_vars()),
        ));
    }
}

/// `e_j P[k;T] - c P[k;T] e_j` for `π(j), π(k) ∈ {0, 1}`, with the scalar
/// `c` claimed for the fiber pair and the order of `j` and `k`. The `p`
/// variant uses the e-dressing table, `p'` the f-dressing table.
fn tails(alg: &FoldedAlgebra, cfg: &AuditConfig, out: &mut Vec<Relation>) {
    let d = alg.dressing();
    let (lo, hi) = cfg.window;
    let m = |k, mm| Some(Monomial::rs(k, mm));
    for j in lo..=hi {
        for k in lo..=hi {
            let (pj, pk) = (alg.pi(j), alg.pi(k));
            let gap = j - k;
            let (p, pp) = match (pj, pk) {
                (0, 0) | (1, 1) if gap <= 0 => (m(0, 0), m(0, 0)),
                (0, 0) | (1, 1) => (m(-1, 1), m(1, -1)),
                (0, 1) if gap <= 0 => (m(0, 0), m(0, 0)),
                (0, 1) if gap == 1 => (m(1, 0), m(0, 1)),
                (0, 1) if gap > 2 => (m(2, 0), m(0, 2)),
                (1, 0) if gap <= 1 => (m(0, 0), m(0, 0)),
                (1, 0) if gap > 2 => (m(0, -1), m(-1, 0)),
                _ => (None, None),
            };
            let tag = format!("tail.{pj}{pk}");
            for (suffix, c, table) in [("p", p, d.e_table), ("p'", pp, d.f_table)] {
                if let Some(c) = c {
                    out.push(tail_relation(&format!("{tag}.{suffix}"), j, k, table, c));
                }
            }
        }
    }
}

fn tail_relation(name: &str, j: i64, k: i64, table: ConventionTable, c: Monomial) -> Relation {
    twisted_commutator(name, vec![j, k], Symbol::e(j), Symbol::tail(k, table), q(c))
}

/// `x K[m';T]^-1 = c K[m';T]^-1 x` with the `⟨,⟩_∞` scalars, for
/// `|m - m'| <= 2` in the window.
fn infinite_brackets(alg: &FoldedAlgebra, cfg: &AuditConfig, out: &mut Vec<Relation>) {
    let d = alg.dressing();
    let (lo, hi) = cfg.window;
    for m in lo..=hi {
        for mp in (m - 2).max(lo)..=(m + 2).min(hi) {
            let b = bracket_inf(m, mp);
            let kw = Symbol::k(mp, d.e_table).inv();
            let kwp = Symbol::k(mp, d.f_table).inv();
            let idx = vec![m, mp];
            out.push(twisted_commutator(
                "bracket.f_winv",
                idx.clone(),
                Symbol::f(m),
                kw,
                ring(b.invert_vars()),
            ));
            out.push(twisted_commutator(
                "bracket.e_winv",
                idx.clone(),
                Symbol::e(m),
                kw,
                ring(b.clone()),
            ));
            out.push(twisted_commutator(
                "bracket.f_wpinv",
                idx,
                Symbol::f(m),
                kwp,
                ring(b),
            ));
        }
    }
}
