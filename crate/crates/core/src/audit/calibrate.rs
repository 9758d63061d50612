//! Exhaustive search over corner-table assignments.

use rayon::prelude::*;

use super::{AuditConfig, Context, Relation, Symbol, TableRef, Word};
use crate::coeffring::{Monomial, RingElem};
use crate::error::{Error, Result};
use crate::glinf::ConventionTable;

/// One table per slot, `$0` first.
pub type Assignment = Vec<ConventionTable>;

/// `r^a s^b` for `a, b ∈ {-1, -1/2, 0, 1/2, 1}`.
pub fn default_grid() -> Vec<Monomial> {
    (-2..=2)
        .flat_map(|u| (-2..=2).map(move |v| Monomial::new(u, v)))
        .collect()
}

/// `(r - s)(e_i f_i - f_i e_i) - (K[i;$0] - K[i;$1])` for `i` in `lo..=hi`.
pub fn root_commutator_template(lo: i64, hi: i64) -> Vec<Relation> {
    let rs = &RingElem::r() - &RingElem::s();
    (lo..=hi)
        .map(|i| {
            Relation::new("calibrate.root_commutator", vec![i])
                .with(rs.clone(), Word::of([Symbol::e(i), Symbol::f(i)]))
                .with(-&rs, Word::of([Symbol::f(i), Symbol::e(i)]))
                .with(
                    -RingElem::one(),
                    Word::of([Symbol::k(i, TableRef::Slot(0))]),
                )
                .with(RingElem::one(), Word::of([Symbol::k(i, TableRef::Slot(1))]))
        })
        .collect()
}

/// Every assignment of `(cc, cv)` pairs from `grid` to `n_slots` slots under
/// which all `templates` hold on the configured basis, in lexicographic
/// grid order. Refuses when the grid has more than `budget` points.
pub fn calibrate(
    templates: &[Relation],
    n_slots: usize,
    grid: &[Monomial],
    cfg: &AuditConfig,
    budget: u128,
) -> Result<Vec<Assignment>> {
    cfg.validate()?;
    let per_slot = (grid.len() as u128).pow(2);
    let count = u32::try_from(n_slots)
        .ok()
        .and_then(|n| per_slot.checked_pow(n))
        .unwrap_or(u128::MAX);
    if count > budget {
        return Err(Error::GridTooLarge { count, budget });
    }
    let probe = Context {
        folded: cfg.folded,
        slots: vec![ConventionTable::STD; n_slots],
    };
    for rel in templates {
        probe.check_relation_symbols(rel)?;
    }
    let basis = cfg.basis();
    let decode = |mut idx: u128| -> Assignment {
        let g = grid.len() as u128;
        let mut out = vec![ConventionTable::STD; n_slots];
        for slot in out.iter_mut().rev() {
            let t = idx % per_slot;
            idx /= per_slot;
            *slot = ConventionTable::new(grid[(t / g) as usize], grid[(t % g) as usize]);
        }
        out
    };
    let count = count as u64;
    let survivors = cfg.pool()?.install(|| {
        (0..count)
            .into_par_iter()
            .filter_map(|idx| {
                let ctx = Context {
                    folded: cfg.folded,
                    slots: decode(idx as u128),
                };
                templates
                    .iter()
                    .all(|rel| ctx.check_unchecked(rel, &basis).holds())
                    .then_some(ctx.slots)
            })
            .collect()
    });
    Ok(survivors)
}
