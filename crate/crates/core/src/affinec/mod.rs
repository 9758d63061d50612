//! The folded `U_{r,s}(C_l^{(1)})` action on `F_n`.
//!
//! Unfolded diagonals are identified with the nodes `0..=l` through the
//! 2l-periodic folding map [`fold_pi`]. A folded generator at node `i` sums
//! the unfolded `e_j`/`f_j` over the fiber `π(j) = i`, each term dressed by
//! corner-status eigenvalues over the rest of the fiber and raised to
//! `ν_i = (α_i, α_i)` (1 at the end nodes, 1/2 in the middle).

mod kmm;
mod suite;

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::coeffring::{Monomial, QuarterElem, RingElem};
use crate::diagram::{CornerKind, Diagram};
use crate::error::{Error, Result};
use crate::fock::{FockVector, LinearOp};
use crate::glinf::ConventionTable;

pub use kmm::{kmm_compare, one_param_apply, KmmMismatch, KmmReport};
pub use suite::suite_affine;

/// `π: Z -> {0..=l}` with `π(i) = π(2l - i) = i` and period `2l`.
pub fn fold_pi(j: i64, l: usize) -> usize {
    let period = 2 * l as i64;
    let j0 = j.rem_euclid(period) as usize;
    if j0 <= l {
        j0
    } else {
        2 * l - j0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenKind {
    E,
    F,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Preset {
    Paper,
    Dual,
    Std,
}

impl Preset {
    pub const ALL: [Preset; 3] = [Preset::Paper, Preset::Dual, Preset::Std];
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Preset::Paper => "paper",
            Preset::Dual => "dual",
            Preset::Std => "std",
        })
    }
}

impl FromStr for Preset {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(Preset::Paper),
            "dual" => Ok(Preset::Dual),
            "std" => Ok(Preset::Std),
            _ => Err(Error::Config(format!(
                "unknown preset {s:?} (expected paper, dual or std)"
            ))),
        }
    }
}

/// How `r_i`, `s_i` are read off the root lengths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RiMode {
    /// `r_i = r^{(α_i,α_i)/2}`
    Half,
    /// `r_i = r^{(α_i,α_i)}`
    Full,
}

impl RiMode {
    pub const ALL: [RiMode; 2] = [RiMode::Half, RiMode::Full];
}

impl fmt::Display for RiMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RiMode::Half => "half",
            RiMode::Full => "full",
        })
    }
}

impl FromStr for RiMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "half" => Ok(RiMode::Half),
            "full" => Ok(RiMode::Full),
            _ => Err(Error::Config(format!(
                "unknown ri-mode {s:?} (expected half or full)"
            ))),
        }
    }
}

/// Corner tables used to dress `e` (and to build `Ω`) and to dress `f`
/// (and to build `Ω'`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DressingChoice {
    pub e_table: ConventionTable,
    pub f_table: ConventionTable,
}

impl DressingChoice {
    pub fn preset(p: Preset) -> Self {
        let (e_table, f_table) = match p {
            Preset::Paper => (
                ConventionTable::PAPER_OMEGA,
                ConventionTable::PAPER_OMEGA_PRIME,
            ),
            Preset::Dual => (
                ConventionTable::PAPER_OMEGA_PRIME,
                ConventionTable::PAPER_OMEGA,
            ),
            Preset::Std => (ConventionTable::STD, ConventionTable::STD_DUAL),
        };
        DressingChoice { e_table, f_table }
    }
}

/// `(α_i, α_i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Nu {
    One,
    Half,
}

impl Nu {
    /// Raises a fiber product to this power. Products of integral table
    /// entries always have an exact square root.
    fn raise(self, m: Monomial) -> Monomial {
        match self {
            Nu::One => m,
            Nu::Half => m
                .sqrt()
                .expect("fiber products of integral tables are squares"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FoldedAlgebra {
    l: usize,
    dressing: DressingChoice,
    ri_mode: RiMode,
}

impl FoldedAlgebra {
    pub fn new(l: usize, dressing: DressingChoice, ri_mode: RiMode) -> Result<Self> {
        if l < 2 {
            return Err(Error::Config(format!("rank must be at least 2, got {l}")));
        }
        for t in [dressing.e_table, dressing.f_table] {
            if !(t.cc.is_integral() && t.cv.is_integral()) {
                return Err(Error::Config(format!(
                    "dressing table {t} needs integer powers of r and s"
                )));
            }
        }
        Ok(FoldedAlgebra {
            l,
            dressing,
            ri_mode,
        })
    }

    pub fn with_preset(l: usize, preset: Preset, ri_mode: RiMode) -> Result<Self> {
        FoldedAlgebra::new(l, DressingChoice::preset(preset), ri_mode)
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn dressing(&self) -> DressingChoice {
        self.dressing
    }

    pub fn ri_mode(&self) -> RiMode {
        self.ri_mode
    }

    pub fn nodes(&self) -> std::ops::RangeInclusive<usize> {
        0..=self.l
    }

    pub fn nu(&self, i: usize) -> Nu {
        if i == 0 || i == self.l {
            Nu::One
        } else {
            Nu::Half
        }
    }

    /// Coefficients of the simple roots in the null root: `(1, 2, ..., 2, 1)`.
    pub fn marks(&self) -> Vec<i64> {
        self.nodes()
            .map(|i| if i == 0 || i == self.l { 1 } else { 2 })
            .collect()
    }

    pub fn pi(&self, j: i64) -> usize {
        fold_pi(j, self.l)
    }

    fn table(&self, kind: GenKind) -> &ConventionTable {
        match kind {
            GenKind::E => &self.dressing.e_table,
            GenKind::F => &self.dressing.f_table,
        }
    }

    /// Product of `table` over the corners of `y` in the fiber of node `i`
    /// whose diagonal satisfies `keep`.
    fn fiber_product(
        &self,
        i: usize,
        table: &ConventionTable,
        y: &Diagram,
        keep: impl Fn(i64) -> bool,
    ) -> Monomial {
        y.corners()
            .into_iter()
            .filter(|c| self.pi(c.diagonal) == i && keep(c.diagonal))
            .fold(Monomial::ONE, |acc, c| acc * table.eigen(Some(c.kind)))
    }

    /// Folded `E_i`/`F_i` on a basis diagram.
    pub fn apply_gen(&self, kind: GenKind, i: usize, y: &Diagram) -> FockVector {
        let nu = self.nu(i);
        let table = self.table(kind);
        let mut out = FockVector::zero();
        let want = match kind {
            GenKind::E => CornerKind::Convex,
            GenKind::F => CornerKind::Concave,
        };
        for c in y.corners() {
            if c.kind != want || self.pi(c.diagonal) != i {
                continue;
            }
            let j = c.diagonal;
            match kind {
                GenKind::E => {
                    let y2 = y.remove_box(j).expect("convex corner admits removal");
                    let lambda = nu.raise(self.fiber_product(i, table, &y2, |k| k > j));
                    out.push(y2, lambda.into());
                }
                GenKind::F => {
                    let y2 = y.add_box(j).expect("concave corner admits addition");
                    let lambda = nu.raise(self.fiber_product(i, table, y, |k| k < j));
                    out.push(y2, lambda.into());
                }
            }
        }
        out
    }

    /// Eigenvalue of `Ω_i` (or `Ω'_i` when `primed`).
    pub fn omega_eigen(&self, i: usize, primed: bool, y: &Diagram) -> Monomial {
        let table = if primed {
            &self.dressing.f_table
        } else {
            &self.dressing.e_table
        };
        self.nu(i).raise(self.fiber_product(i, table, y, |_| true))
    }

    /// `Π_{k' > k, π(k') = π(k)} table(status(k'))`, undressed by `ν`.
    pub fn tail_eigen(&self, k: i64, table: &ConventionTable, y: &Diagram) -> Monomial {
        self.fiber_product(self.pi(k), table, y, |d| d > k)
    }

    /// `Σ_k a(k, Y)` with `a(k, Y) = #{p : y_k < p <= n, π(p + k) = 0}`.
    pub fn d_exponent(&self, y: &Diagram) -> i64 {
        let n = y.charge();
        y.cols()
            .iter()
            .enumerate()
            .map(|(k, &yk)| {
                ((yk + 1)..=n)
                    .filter(|&p| self.pi(p + k as i64) == 0)
                    .count() as i64
            })
            .sum()
    }

    pub fn d_eigen(&self, primed: bool, y: &Diagram) -> Monomial {
        let a = self.d_exponent(y);
        if primed {
            Monomial::rs(0, a)
        } else {
            Monomial::rs(a, 0)
        }
    }

    /// `γ = Π Ω_i^{a_i}` (or `γ'`).
    pub fn gamma_eigen(&self, primed: bool, y: &Diagram) -> Monomial {
        self.nodes()
            .zip(self.marks())
            .fold(Monomial::ONE, |acc, (i, a)| {
                acc * self.omega_eigen(i, primed, y).pow(a)
            })
    }

    /// `r_i` according to the configured mode.
    pub fn r_i(&self, i: usize) -> QuarterElem {
        self.root_param(i, true)
    }

    pub fn s_i(&self, i: usize) -> QuarterElem {
        self.root_param(i, false)
    }

    fn root_param(&self, i: usize, is_r: bool) -> QuarterElem {
        // quarter units of the exponent: (α_i,α_i) is 1 or 1/2
        let quarters = match (self.nu(i), self.ri_mode) {
            (Nu::One, RiMode::Full) => 4,
            (Nu::One, RiMode::Half) | (Nu::Half, RiMode::Full) => 2,
            (Nu::Half, RiMode::Half) => 1,
        };
        if quarters == 1 {
            if is_r {
                QuarterElem::r_quarter()
            } else {
                QuarterElem::s_quarter()
            }
        } else {
            let m = quarters / 2;
            if is_r {
                Monomial::new(m, 0).into()
            } else {
                Monomial::new(0, m).into()
            }
        }
    }
}

pub fn folded_gen(kind: GenKind, i: usize, alg: &FoldedAlgebra) -> LinearOp {
    let alg = *alg;
    let name = match kind {
        GenKind::E => format!("Efold[{i}]"),
        GenKind::F => format!("Ffold[{i}]"),
    };
    LinearOp::new(name, move |y| alg.apply_gen(kind, i, y))
}

pub fn folded_cartan(i: usize, primed: bool, alg: &FoldedAlgebra) -> LinearOp {
    let alg = *alg;
    let name = if primed {
        format!("Wp[{i}]")
    } else {
        format!("W[{i}]")
    };
    LinearOp::diagonal(name, move |y| alg.omega_eigen(i, primed, y).into())
}

pub fn d_ops(alg: &FoldedAlgebra, primed: bool) -> LinearOp {
    let alg = *alg;
    LinearOp::diagonal(if primed { "Dp" } else { "D" }, move |y| {
        alg.d_eigen(primed, y).into()
    })
}

pub fn gamma_ops(alg: &FoldedAlgebra) -> (LinearOp, LinearOp) {
    let (a, b) = (*alg, *alg);
    (
        LinearOp::diagonal("gamma", move |y| a.gamma_eigen(false, y).into()),
        LinearOp::diagonal("gammap", move |y| b.gamma_eigen(true, y).into()),
    )
}

/// Whether a diagonal operator acts by one scalar on every basis diagram of
/// one charge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarCheck {
    pub vacuum_value: Monomial,
    /// First diagram whose eigenvalue differs from the vacuum's.
    pub deviation: Option<(Diagram, Monomial)>,
}

impl ScalarCheck {
    fn run(basis: &[Diagram], vacuum: &Diagram, eigen: impl Fn(&Diagram) -> Monomial) -> Self {
        let vacuum_value = eigen(vacuum);
        let deviation = basis
            .iter()
            .filter(|y| y.charge() == vacuum.charge())
            .map(|y| (y.clone(), eigen(y)))
            .find(|(_, m)| *m != vacuum_value);
        ScalarCheck {
            vacuum_value,
            deviation,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.deviation.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralReport {
    pub charge: i64,
    pub gamma: ScalarCheck,
    pub gamma_gammap: ScalarCheck,
    /// `c` with `γγ' = (rs)^c` on the vacuum, when it has that form.
    pub level: Option<Ratio<i64>>,
}

pub fn central_check(alg: &FoldedAlgebra, basis: &[Diagram]) -> Vec<CentralReport> {
    let mut charges: Vec<i64> = basis.iter().map(Diagram::charge).collect();
    charges.sort_unstable();
    charges.dedup();
    charges
        .into_iter()
        .map(|n| {
            let vac = Diagram::vacuum(n);
            let gamma = ScalarCheck::run(basis, &vac, |y| alg.gamma_eigen(false, y));
            let gamma_gammap = ScalarCheck::run(basis, &vac, |y| {
                alg.gamma_eigen(false, y) * alg.gamma_eigen(true, y)
            });
            let m = gamma_gammap.vacuum_value;
            let level = (m.u == m.v).then(|| Ratio::new(m.u, 2));
            CentralReport {
                charge: n,
                gamma,
                gamma_gammap,
                level,
            }
        })
        .collect()
}

/// Entry `⟨i,j⟩` of the two-parameter quantum Cartan matrix of type
/// `C_l^{(1)}`. Rows 0, 1, l-1 and l take their special boundary entries;
/// interior rows follow the generic tridiagonal pattern. Where rows 1 and
/// `l-1` coincide (`l = 2`) the row `l-1` entries win.
pub fn cartan_bracket(i: usize, j: usize, l: usize) -> Result<RingElem> {
    if l < 2 || i > l || j > l {
        return Err(Error::Config(format!(
            "Cartan entry ({i},{j}) outside 0..={l}"
        )));
    }
    let m = if (i == 0 && j == 0) || (i == l && j == l) {
        Monomial::rs(1, -1)
    } else if i == 0 && j == l {
        Monomial::rs(1, 1)
    } else if i == l && j == 0 {
        Monomial::rs(-1, -1)
    } else if (i == 0 && j == 1) || (i == l - 1 && j == l) {
        Monomial::rs(-1, 0)
    } else if (i == 1 && j == 0) || (i == l && j == l - 1) {
        Monomial::rs(0, 1)
    } else if i == j {
        Monomial::new(1, -1)
    } else if j == i + 1 {
        Monomial::new(-1, 0)
    } else if i == j + 1 {
        Monomial::new(0, 1)
    } else {
        Monomial::ONE
    };
    Ok(m.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::enumerate;

    fn d(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    fn ring(s: &str) -> RingElem {
        s.parse().unwrap()
    }

    fn paper(l: usize) -> FoldedAlgebra {
        FoldedAlgebra::with_preset(l, Preset::Paper, RiMode::Full).unwrap()
    }

    #[test]
    fn folding_examples() {
        assert_eq!([0, 1, 2, 3, 4].map(|j| fold_pi(j, 2)), [0, 1, 2, 1, 0]);
        assert_eq!(fold_pi(-1, 2), 1);
        assert_eq!(fold_pi(5, 3), 1);
        assert_eq!(fold_pi(-6, 3), 0);
    }

    #[test]
    fn folded_generator_examples() {
        let alg = paper(2);
        let vac = Diagram::vacuum(0);
        assert_eq!(
            folded_gen(GenKind::F, 0, &alg).apply_basis(&vac),
            FockVector::basis(d("0;-1"))
        );
        assert_eq!(
            folded_gen(GenKind::E, 1, &alg).apply_basis(&d("0;-1,-1")),
            FockVector::basis(d("0;-1"))
        );
        assert!(folded_gen(GenKind::E, 0, &alg).apply_basis(&vac).is_zero());
    }

    #[test]
    fn folded_cartan_examples() {
        let alg = paper(2);
        let vac = Diagram::vacuum(0);
        assert_eq!(
            folded_cartan(0, false, &alg).apply_basis(&vac),
            FockVector::term(vac.clone(), ring("s^(-1)"))
        );
        let y1 = d("0;-1");
        assert_eq!(
            folded_cartan(1, true, &alg).apply_basis(&y1),
            FockVector::term(y1, RingElem::r())
        );
        for p in Preset::ALL {
            let alg = FoldedAlgebra::with_preset(2, p, RiMode::Full).unwrap();
            assert_eq!(
                folded_cartan(2, false, &alg).apply_basis(&vac),
                FockVector::basis(vac.clone())
            );
        }
    }

    #[test]
    fn d_operator_examples() {
        for l in [2, 3, 4] {
            let alg = paper(l);
            for n in [-2, 0, 3] {
                let vac = Diagram::vacuum(n);
                assert_eq!(d_ops(&alg, false).apply_basis(&vac), FockVector::basis(vac));
            }
        }
        let alg = paper(2);
        for y in [d("0;-1"), d("0;-1,-1")] {
            assert_eq!(
                d_ops(&alg, false).apply_basis(&y),
                FockVector::term(y.clone(), RingElem::r())
            );
        }
        assert_eq!(
            d_ops(&alg, true).apply_basis(&d("0;-1")),
            FockVector::term(d("0;-1"), RingElem::s())
        );
    }

    #[test]
    fn cartan_matrix_entries() {
        for l in [2, 3, 5] {
            assert_eq!(cartan_bracket(0, 0, l).unwrap(), ring("r*s^(-1)"));
            assert_eq!(cartan_bracket(0, l, l).unwrap(), ring("r*s"));
            assert_eq!(cartan_bracket(l, 0, l).unwrap(), ring("r^(-1)*s^(-1)"));
            assert_eq!(cartan_bracket(1, 1, l).unwrap(), ring("r^(1/2)*s^(-1/2)"));
            assert_eq!(cartan_bracket(l, l - 1, l).unwrap(), RingElem::s());
            assert_eq!(cartan_bracket(l - 1, l, l).unwrap(), ring("r^(-1)"));
        }
        assert_eq!(cartan_bracket(1, 2, 3).unwrap(), ring("r^(-1/2)"));
        assert_eq!(cartan_bracket(3, 2, 5).unwrap(), ring("s^(1/2)"));
        assert_eq!(cartan_bracket(0, 2, 5).unwrap(), RingElem::one());
        assert!(cartan_bracket(3, 0, 2).is_err());
    }

    #[test]
    fn gamma_on_vacuum_uses_only_diagonal_zero() {
        for p in Preset::ALL {
            let alg = FoldedAlgebra::with_preset(2, p, RiMode::Full).unwrap();
            let vac = Diagram::vacuum(0);
            let (g, _) = gamma_ops(&alg);
            let expect = alg.dressing().e_table.cc;
            assert_eq!(g.apply_basis(&vac), FockVector::term(vac, expect.into()));
        }
    }

    #[test]
    fn central_check_reports_vacuum_values() {
        let alg = paper(2);
        let reports = central_check(&alg, &enumerate(0, 3));
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].gamma.vacuum_value, Monomial::rs(0, -1));
        // γγ' on φ_0 is s^-1 r, not a power of rs
        assert_eq!(reports[0].gamma_gammap.vacuum_value, Monomial::rs(1, -1));
        assert_eq!(reports[0].level, None);
    }

    #[test]
    fn root_parameters() {
        let full = paper(3);
        assert_eq!(full.r_i(0), Monomial::rs(1, 0).into());
        assert_eq!(full.r_i(1), Monomial::new(1, 0).into());
        let half = FoldedAlgebra::with_preset(3, Preset::Paper, RiMode::Half).unwrap();
        assert_eq!(half.r_i(3), Monomial::new(1, 0).into());
        assert_eq!(half.s_i(2), QuarterElem::s_quarter());
    }

    #[test]
    fn rejects_bad_algebras() {
        assert!(FoldedAlgebra::with_preset(1, Preset::Paper, RiMode::Full).is_err());
        let t = ConventionTable::new(Monomial::new(1, 0), Monomial::ONE);
        let bad = DressingChoice {
            e_table: t,
            f_table: t,
        };
        assert!(FoldedAlgebra::new(2, bad, RiMode::Full).is_err());
    }
}
