//! Cross-check of the folded generators at `r = q`, `s = q^-1` against a
//! one-parameter implementation that never multiplies ring elements: the
//! dressing exponent is read off by counting corner statuses, found from
//! occupation numbers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{fold_pi, FoldedAlgebra, GenKind};
use crate::coeffring::LaurentPoly;
use crate::diagram::Diagram;

/// Corner status from occupations: concave `(1, 0)`, convex `(0, 1)`.
fn status_counts(y: &Diagram, l: usize, node: usize, ks: impl Iterator<Item = i64>) -> (i64, i64) {
    let mut cc = 0;
    let mut cv = 0;
    for k in ks.filter(|&k| fold_pi(k, l) == node) {
        match (y.occupation(k), y.occupation(k + 1)) {
            (1, 0) => cc += 1,
            (0, 1) => cv += 1,
            _ => {}
        }
    }
    (cc, cv)
}

/// Folded `E_i`/`F_i` in the one-parameter algebra with the standard
/// tables: `q` on concave and `q^-1` on convex corners for `E`, the reverse
/// for `F`, raised to `(α_i, α_i)`. Coefficients are Laurent polynomials
/// in `t = q^(1/2)`.
pub fn one_param_apply(
    l: usize,
    kind: GenKind,
    node: usize,
    y: &Diagram,
) -> BTreeMap<Diagram, LaurentPoly> {
    let n = y.charge();
    let b = y.box_count() as i64;
    let (lo, hi) = (n - b - 3, n + b + 3);
    // 2 (α_i, α_i): exponent of t per unit power of q
    let nu2 = if node == 0 || node == l { 2 } else { 1 };
    let mut out: BTreeMap<Diagram, LaurentPoly> = BTreeMap::new();
    for j in lo..=hi {
        if fold_pi(j, l) != node {
            continue;
        }
        let pair = (y.occupation(j), y.occupation(j + 1));
        let (target, exponent) = match (kind, pair) {
            (GenKind::E, (0, 1)) => {
                let y2 = y.remove_box(j).expect("occupations say convex");
                let (cc, cv) = status_counts(&y2, l, node, (j + 1)..=hi);
                (y2, nu2 * (cc - cv))
            }
            (GenKind::F, (1, 0)) => {
                let y2 = y.add_box(j).expect("occupations say concave");
                let (cc, cv) = status_counts(y, l, node, lo..j);
                (y2, nu2 * (cv - cc))
            }
            _ => continue,
        };
        let slot = out.entry(target).or_insert_with(LaurentPoly::zero);
        slot.add_term(exponent, BigRational::from_integer(BigInt::from(1)));
    }
    out.retain(|_, p| !p.is_zero());
    out
}

fn two_param_specialized(
    alg: &FoldedAlgebra,
    kind: GenKind,
    node: usize,
    y: &Diagram,
) -> BTreeMap<Diagram, LaurentPoly> {
    alg.apply_gen(kind, node, y)
        .terms()
        .map(|(d, c)| (d.clone(), c.specialize()))
        .filter(|(_, p)| !p.is_zero())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KmmMismatch {
    pub operator: String,
    pub diagram: Diagram,
    pub two_param: BTreeMap<Diagram, LaurentPoly>,
    pub one_param: BTreeMap<Diagram, LaurentPoly>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KmmReport {
    /// Number of (operator, diagram) pairs compared.
    pub checked: usize,
    pub mismatch: Option<KmmMismatch>,
}

impl KmmReport {
    pub fn agrees(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Compares every folded `E_i`, `F_i` on `basis` under both paths and stops
/// at the first disagreement.
pub fn kmm_compare(alg: &FoldedAlgebra, basis: &[Diagram]) -> KmmReport {
    let mut checked = 0;
    for y in basis {
        for node in alg.nodes() {
            for kind in [GenKind::E, GenKind::F] {
                checked += 1;
                let a = two_param_specialized(alg, kind, node, y);
                let b = one_param_apply(alg.l(), kind, node, y);
                if a != b {
                    let name = match kind {
                        GenKind::E => format!("Efold[{node}]"),
                        GenKind::F => format!("Ffold[{node}]"),
                    };
                    return KmmReport {
                        checked,
                        mismatch: Some(KmmMismatch {
                            operator: name,
                            diagram: y.clone(),
                            two_param: a,
                            one_param: b,
                        }),
                    };
                }
            }
        }
    }
    KmmReport {
        checked,
        mismatch: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affinec::{DressingChoice, Preset, RiMode};
    use crate::coeffring::Monomial;
    use crate::diagram::enumerate;
    use crate::glinf::ConventionTable;

    #[test]
    fn std_preset_matches_one_parameter_oracle() {
        for l in [2, 3] {
            let alg = FoldedAlgebra::with_preset(l, Preset::Std, RiMode::Full).unwrap();
            let report = kmm_compare(&alg, &enumerate(0, 5));
            assert!(report.agrees(), "{:?}", report.mismatch);
        }
    }

    #[test]
    fn trivial_dressing_example() {
        let y: Diagram = "0;-1,-1".parse().unwrap();
        let out = one_param_apply(2, GenKind::E, 1, &y);
        assert_eq!(out.len(), 1);
        assert_eq!(out[&"0;-1".parse::<Diagram>().unwrap()], LaurentPoly::one());
    }

    #[test]
    fn corrupted_table_is_flagged() {
        let mut d = DressingChoice::preset(Preset::Std);
        d.e_table = ConventionTable::new(Monomial::rs(2, 0), d.e_table.cv);
        let alg = FoldedAlgebra::new(2, d, RiMode::Full).unwrap();
        let report = kmm_compare(&alg, &enumerate(0, 5));
        assert!(!report.agrees());
    }
}
