//! The `U_{r,s}(gl(∞))` action on `F_n` and its relation suite.
//!
//! `e_i` removes the box on diagonal `i` and `f_i` adds one, both with
//! coefficient 1. The Cartan generators act diagonally through the
//! occupation numbers: `ω_i = a_i` with eigenvalue `r^{m_i}` and
//! `ω'_i = b_i` with eigenvalue `s^{m_i}`. Corner-status operators with an
//! arbitrary [`ConventionTable`] are provided alongside, including the
//! literal pair `(s^-1, r^-1 | r, s)`, which does not satisfy the
//! commutator relation (see `tests::literal_table_breaks_r4`).

use std::fmt;

use crate::audit::{Relation, Symbol, Word};
use crate::coeffring::{Monomial, RingElem};
use crate::diagram::{CornerKind, Diagram};
use crate::fock::{FockVector, LinearOp};

/// Eigenvalues of a corner-status operator: `cc` on a concave corner, `cv`
/// on a convex corner, 1 when the diagonal carries no corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConventionTable {
    pub cc: Monomial,
    pub cv: Monomial,
}

impl ConventionTable {
    /// `(r, s)`: agrees with `a_i b_{i+1}` off the filled sea.
    pub const STD: ConventionTable = ConventionTable::new(Monomial::rs(1, 0), Monomial::rs(0, 1));
    pub const STD_DUAL: ConventionTable =
        ConventionTable::new(Monomial::rs(0, 1), Monomial::rs(1, 0));
    /// `(s^-1, r^-1)`, the literal table for `ω_i`.
    pub const PAPER_OMEGA: ConventionTable =
        ConventionTable::new(Monomial::rs(0, -1), Monomial::rs(-1, 0));
    /// `(r, s)`, the literal table for `ω'_i`.
    pub const PAPER_OMEGA_PRIME: ConventionTable =
        ConventionTable::new(Monomial::rs(1, 0), Monomial::rs(0, 1));

    const NAMED: [(&'static str, ConventionTable); 4] = [
        ("std", ConventionTable::STD),
        ("std_dual", ConventionTable::STD_DUAL),
        ("paper_w", ConventionTable::PAPER_OMEGA),
        ("paper_wp", ConventionTable::PAPER_OMEGA_PRIME),
    ];

    pub const fn new(cc: Monomial, cv: Monomial) -> Self {
        ConventionTable { cc, cv }
    }

    pub fn eigen(&self, status: Option<CornerKind>) -> Monomial {
        match status {
            Some(CornerKind::Concave) => self.cc,
            Some(CornerKind::Convex) => self.cv,
            None => Monomial::ONE,
        }
    }

    pub fn preset(name: &str) -> Option<ConventionTable> {
        Self::NAMED
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, t)| *t)
    }

    pub fn preset_name(&self) -> Option<&'static str> {
        Self::NAMED.iter().find(|(_, t)| t == self).map(|(n, _)| *n)
    }
}

impl fmt::Display for ConventionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.preset_name() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{},{}", self.cc, self.cv),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EpsKind {
    /// `r^{m_i}`
    A,
    /// `s^{m_i}`
    B,
}

pub fn eps_eigen(i: i64, kind: EpsKind, y: &Diagram) -> Monomial {
    let m = i64::from(y.occupation(i));
    match kind {
        EpsKind::A => Monomial::rs(m, 0),
        EpsKind::B => Monomial::rs(0, m),
    }
}

pub fn corner_eigen(i: i64, table: &ConventionTable, y: &Diagram) -> Monomial {
    table.eigen(y.status(i))
}

pub fn e_inf(i: i64) -> LinearOp {
    LinearOp::new(format!("e[{i}]"), move |y| {
        y.remove_box(i).map(FockVector::basis).unwrap_or_default()
    })
}

pub fn f_inf(i: i64) -> LinearOp {
    LinearOp::new(format!("f[{i}]"), move |y| {
        y.add_box(i).map(FockVector::basis).unwrap_or_default()
    })
}

pub fn eps_diag(i: i64, kind: EpsKind) -> LinearOp {
    let name = match kind {
        EpsKind::A => format!("a[{i}]"),
        EpsKind::B => format!("b[{i}]"),
    };
    LinearOp::diagonal(name, move |y| eps_eigen(i, kind, y).into())
}

pub fn corner_diag(i: i64, table: ConventionTable) -> LinearOp {
    LinearOp::diagonal(format!("K[{i};{table}]"), move |y| {
        corner_eigen(i, &table, y).into()
    })
}

/// `⟨i,j⟩_∞`.
pub fn bracket_inf(i: i64, j: i64) -> RingElem {
    let m = if i == j {
        Monomial::rs(1, -1)
    } else if i == j - 1 {
        Monomial::rs(-1, 0)
    } else if i == j + 1 {
        Monomial::rs(0, 1)
    } else {
        Monomial::ONE
    };
    m.into()
}

/// `(ε_i, α_j)` with `α_j = ε_j - ε_{j+1}`.
pub fn pairing_eps_alpha(i: i64, j: i64) -> i64 {
    i64::from(i == j) - i64::from(i == j + 1)
}

fn r_pow(k: i64) -> RingElem {
    Monomial::rs(k, 0).into()
}

fn s_pow(k: i64) -> RingElem {
    Monomial::rs(0, k).into()
}

/// Denominator-cleared instances of the defining relations for every index
/// in `lo..=hi`, plus the nilpotency identities `e_k e_k = 0` and
/// `e_k e_j e_k = 0` and their `f` mirrors.
pub fn suite_glinf(lo: i64, hi: i64) -> Vec<Relation> {
    let window: Vec<i64> = (lo..=hi).collect();
    let one = RingElem::one;
    let minus = || RingElem::from_int(-1);
    let (a, b) = (Symbol::a, Symbol::b);
    let (e, f) = (Symbol::e, Symbol::f);
    let mut out = Vec::new();

    // R1: the Cartan part is commutative and invertible.
    for &i in &window {
        for &j in &window {
            if i < j {
                for (tag, x, y) in [("aa", a(i), a(j)), ("bb", b(i), b(j))] {
                    out.push(
                        Relation::new(format!("R1.comm_{tag}"), vec![i, j])
                            .with(one(), Word::of([x, y]))
                            .with(minus(), Word::of([y, x])),
                    );
                }
            }
            out.push(
                Relation::new("R1.comm_ab", vec![i, j])
                    .with(one(), Word::of([a(i), b(j)]))
                    .with(minus(), Word::of([b(j), a(i)])),
            );
        }
        for (tag, x) in [("a", a(i)), ("b", b(i))] {
            out.push(
                Relation::new(format!("R1.inverse_{tag}"), vec![i])
                    .with(one(), Word::of([x, x.inv()]))
                    .with(minus(), Word::identity()),
            );
            out.push(
                Relation::new(format!("R1.inverse_{tag}_left"), vec![i])
                    .with(one(), Word::of([x.inv(), x]))
                    .with(minus(), Word::identity()),
            );
        }
    }

    // R2, R3: ω_i e_j = r^{(ε_i,α_j)} e_j ω_i and the s-analogue.
    for &i in &window {
        for &j in &window {
            let p = pairing_eps_alpha(i, j);
            for (tag, cartan, scale) in [
                ("R2", a(i), r_pow as fn(i64) -> RingElem),
                ("R3", b(i), s_pow),
            ] {
                out.push(
                    Relation::new(format!("{tag}.e"), vec![i, j])
                        .with(one(), Word::of([cartan, e(j)]))
                        .with(-scale(p), Word::of([e(j), cartan])),
                );
                out.push(
                    Relation::new(format!("{tag}.f"), vec![i, j])
                        .with(one(), Word::of([cartan, f(j)]))
                        .with(-scale(-p), Word::of([f(j), cartan])),
                );
            }
        }
    }

    // R4 as (ω_i ω'_{i+1} - ω_{i+1} ω'_i) δ_ij - (r - s)[e_i, f_j].
    let r_minus_s = &RingElem::r() - &RingElem::s();
    for &i in &window {
        for &j in &window {
            let mut rel = Relation::new("R4", vec![i, j]);
            if i == j {
                rel = rel
                    .with(one(), Word::of([a(i), b(i + 1)]))
                    .with(minus(), Word::of([a(i + 1), b(i)]));
            }
            rel = rel
                .with(-&r_minus_s, Word::of([e(i), f(j)]))
                .with(r_minus_s.clone(), Word::of([f(j), e(i)]));
            out.push(rel);
        }
    }

    // R5
    for &i in &window {
        for &j in &window {
            if j - i > 1 {
                for (tag, gen) in [("e", e as fn(i64) -> Symbol), ("f", f)] {
                    out.push(
                        Relation::new(format!("R5.{tag}"), vec![i, j])
                            .with(one(), Word::of([gen(i), gen(j)]))
                            .with(minus(), Word::of([gen(j), gen(i)])),
                    );
                }
            }
        }
    }

    // R6, R7
    let r = RingElem::r();
    let s = RingElem::s();
    let r_plus_s = &r + &s;
    let rs = &r * &s;
    let rinv_plus_sinv = r_plus_s.invert_vars();
    let rs_inv = rs.invert_vars();
    for &i in &window {
        if i + 1 > hi {
            continue;
        }
        for (tag, g, c1, c2) in [
            ("R6", e as fn(i64) -> Symbol, &r_plus_s, &rs),
            ("R7", f, &rinv_plus_sinv, &rs_inv),
        ] {
            let (x, y) = (g(i), g(i + 1));
            out.push(serre_cubic(
                &format!("{tag}.a"),
                vec![i, i + 1],
                [[x, x, y], [x, y, x], [y, x, x]],
                c1,
                c2,
            ));
            out.push(serre_cubic(
                &format!("{tag}.b"),
                vec![i, i + 1],
                [[x, y, y], [y, x, y], [y, y, x]],
                c1,
                c2,
            ));
        }
    }

    // nilpotency
    for &k in &window {
        for (tag, gen) in [("e", e as fn(i64) -> Symbol), ("f", f)] {
            out.push(
                Relation::new(format!("nil.{tag}{tag}"), vec![k])
                    .with(one(), Word::of([gen(k), gen(k)])),
            );
        }
        for &j in &window {
            for (tag, gen) in [("e", e as fn(i64) -> Symbol), ("f", f)] {
                out.push(
                    Relation::new(format!("nil.{tag}{tag}{tag}"), vec![k, j])
                        .with(one(), Word::of([gen(k), gen(j), gen(k)])),
                );
            }
        }
    }
    out
}

/// The cleared commutator relation with `ω = K[·;paper_w]` and
/// `ω' = K[·;paper_wp]` in place of the occupation operators. Fails already
/// on the vacuum.
pub fn suite_glinf_literal(lo: i64, hi: i64) -> Vec<Relation> {
    let (w, wp) = (
        ConventionTable::PAPER_OMEGA,
        ConventionTable::PAPER_OMEGA_PRIME,
    );
    let r_minus_s = &RingElem::r() - &RingElem::s();
    let mut out = Vec::new();
    for i in lo..=hi {
        for j in lo..=hi {
            let mut rel = Relation::new("R4.literal", vec![i, j]);
            if i == j {
                rel = rel
                    .with(
                        RingElem::one(),
                        Word::of([Symbol::k(i, w), Symbol::k(i + 1, wp)]),
                    )
                    .with(
                        RingElem::from_int(-1),
                        Word::of([Symbol::k(i + 1, w), Symbol::k(i, wp)]),
                    );
            }
            out.push(
                rel.with(-&r_minus_s, Word::of([Symbol::e(i), Symbol::f(j)]))
                    .with(r_minus_s.clone(), Word::of([Symbol::f(j), Symbol::e(i)])),
            );
        }
    }
    out
}

/// `w0 - c1 w1 + c2 w2`.
fn serre_cubic(
    name: &str,
    indices: Vec<i64>,
    words: [[Symbol; 3]; 3],
    c1: &RingElem,
    c2: &RingElem,
) -> Relation {
    let [w0, w1, w2] = words;
    Relation::new(name, indices)
        .with(RingElem::one(), Word::of(w0))
        .with(-c1, Word::of(w1))
        .with(c2.clone(), Word::of(w2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::enumerate;
    use crate::fock::{op_equal_on, OpComparison};

    fn d(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    fn ring(s: &str) -> RingElem {
        s.parse().unwrap()
    }

    fn vac() -> Diagram {
        Diagram::vacuum(0)
    }

    #[test]
    fn generator_actions() {
        assert_eq!(f_inf(0).apply_basis(&vac()), FockVector::basis(d("0;-1")));
        assert_eq!(
            f_inf(1).apply_basis(&d("0;-1")),
            FockVector::basis(d("0;-1,-1"))
        );
        assert_eq!(
            f_inf(-1).apply_basis(&d("0;-1")),
            FockVector::basis(d("0;-2"))
        );
        assert_eq!(
            e_inf(1).apply_basis(&d("0;-1,-1")),
            FockVector::basis(d("0;-1"))
        );
        assert_eq!(e_inf(0).apply_basis(&d("0;-1")), FockVector::basis(vac()));
        assert!(e_inf(0).apply_basis(&vac()).is_zero());
    }

    #[test]
    fn e0_kills_y2() {
        let mut v = FockVector::term(d("0;-1"), RingElem::r());
        v.add_term(d("0;-2"), RingElem::s()).unwrap();
        assert_eq!(e_inf(0).apply(&v), FockVector::term(vac(), RingElem::r()));
    }

    #[test]
    fn eps_examples() {
        let a = |i| eps_diag(i, EpsKind::A);
        let b = |i| eps_diag(i, EpsKind::B);
        assert_eq!(
            a(0).apply_basis(&vac()),
            FockVector::term(vac(), RingElem::r())
        );
        assert_eq!(a(1).apply_basis(&vac()), FockVector::basis(vac()));
        let y1 = d("0;-1");
        assert_eq!(b(0).apply_basis(&y1), FockVector::basis(y1.clone()));
        assert_eq!(b(1).apply_basis(&y1), FockVector::term(y1, RingElem::s()));
    }

    #[test]
    fn r4_on_vacuum() {
        let comm = e_inf(0)
            .compose(&f_inf(0))
            .minus(&f_inf(0).compose(&e_inf(0)));
        let lhs = comm.scaled(ring("r - s"));
        let a = |i| eps_diag(i, EpsKind::A);
        let b = |i| eps_diag(i, EpsKind::B);
        let rhs = a(0).compose(&b(1)).minus(&a(1).compose(&b(0)));
        assert_eq!(
            lhs.apply_basis(&vac()),
            FockVector::term(vac(), ring("r - s"))
        );
        assert_eq!(
            op_equal_on(&lhs, &rhs, &enumerate(0, 5)),
            OpComparison::Equal
        );
    }

    #[test]
    fn zero_op_against_f0_reports_vacuum() {
        match op_equal_on(&LinearOp::zero(), &f_inf(0), &[vac()]) {
            OpComparison::Counterexample(y, res) => {
                assert_eq!(y, vac());
                assert_eq!(res, FockVector::term(d("0;-1"), RingElem::from_int(-1)));
            }
            OpComparison::Equal => panic!("expected a counterexample"),
        }
    }

    #[test]
    fn corner_diag_examples() {
        assert_eq!(
            corner_diag(0, ConventionTable::PAPER_OMEGA).apply_basis(&vac()),
            FockVector::term(vac(), ring("s^(-1)"))
        );
        let y1 = d("0;-1");
        assert_eq!(
            corner_diag(0, ConventionTable::STD).apply_basis(&y1),
            FockVector::term(y1.clone(), RingElem::s())
        );
        for t in [ConventionTable::STD, ConventionTable::PAPER_OMEGA] {
            assert_eq!(
                corner_diag(7, t).apply_basis(&y1),
                FockVector::basis(y1.clone())
            );
        }
    }

    #[test]
    fn brackets() {
        assert_eq!(bracket_inf(3, 3), ring("r*s^(-1)"));
        assert_eq!(bracket_inf(2, 3), ring("r^(-1)"));
        assert_eq!(bracket_inf(4, 3), ring("s"));
        assert_eq!(bracket_inf(0, 9), RingElem::one());
        assert_eq!(pairing_eps_alpha(3, 3), 1);
        assert_eq!(pairing_eps_alpha(4, 3), -1);
        assert_eq!(pairing_eps_alpha(0, 5), 0);
    }

    /// The literal eigenvalue table for ω/ω' does not satisfy the cleared
    /// commutator relation on the vacuum.
    #[test]
    fn literal_table_breaks_r4() {
        let w = |i| corner_diag(i, ConventionTable::PAPER_OMEGA);
        let wp = |i| corner_diag(i, ConventionTable::PAPER_OMEGA_PRIME);
        let cartan = w(0).compose(&wp(1)).minus(&w(1).compose(&wp(0)));
        let comm = e_inf(0)
            .compose(&f_inf(0))
            .minus(&f_inf(0).compose(&e_inf(0)))
            .scaled(ring("r - s"));
        let expected = &(&ring("s^(-1)") - &RingElem::r()) - &ring("r - s");
        assert_eq!(
            op_equal_on(&cartan, &comm, &enumerate(0, 3)),
            OpComparison::Counterexample(vac(), FockVector::term(vac(), expected))
        );
    }

    #[test]
    fn corner_tables_match_root_type_products_off_the_sea() {
        for y in enumerate(0, 6).into_iter().chain(enumerate(3, 6)) {
            for i in -8..=11 {
                let (mi, mj) = (y.occupation(i), y.occupation(i + 1));
                let std = corner_eigen(i, &ConventionTable::STD, &y);
                let ab = eps_eigen(i, EpsKind::A, &y) * eps_eigen(i + 1, EpsKind::B, &y);
                let pw = corner_eigen(i, &ConventionTable::PAPER_OMEGA, &y);
                let inv_ab =
                    (eps_eigen(i + 1, EpsKind::A, &y) * eps_eigen(i, EpsKind::B, &y)).inv();
                if (mi, mj) == (1, 1) {
                    assert_eq!(ab, std * Monomial::rs(1, 1));
                    assert_eq!(inv_ab, pw * Monomial::rs(-1, -1));
                } else {
                    assert_eq!(std, ab, "{y} at {i}");
                    assert_eq!(pw, inv_ab, "{y} at {i}");
                }
            }
        }
    }

    #[test]
    fn commutation_ratio_law() {
        for y in enumerate(0, 6) {
            for j in -8..=8 {
                if let Some(y2) = y.remove_box(j) {
                    for i in -8..=8 {
                        let before = eps_eigen(i, EpsKind::A, &y);
                        let after = eps_eigen(i, EpsKind::A, &y2);
                        assert_eq!(after, before * Monomial::rs(pairing_eps_alpha(i, j), 0));
                    }
                }
            }
        }
    }

    #[test]
    fn preset_names_round_trip() {
        for name in ["std", "std_dual", "paper_w"] {
            let t = ConventionTable::preset(name).unwrap();
            assert_eq!(t.to_string(), name);
        }
        // identical to std
        assert_eq!(
            ConventionTable::preset("paper_wp"),
            Some(ConventionTable::STD)
        );
    }
}
