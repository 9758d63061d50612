//! Finite linear combinations of diagrams and operators acting on them.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::coeffring::{Monomial, RingElem};
use crate::diagram::Diagram;
use crate::error::{Error, Result};

/// A vector of `F_n`: diagrams of a single charge with nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FockVector {
    terms: BTreeMap<Diagram, RingElem>,
}

impl FockVector {
    pub fn zero() -> Self {
        FockVector::default()
    }

    pub fn basis(y: Diagram) -> Self {
        FockVector::term(y, RingElem::one())
    }

    pub fn term(y: Diagram, c: RingElem) -> Self {
        let mut v = FockVector::zero();
        v.push(y, c);
        v
    }

    pub fn charge(&self) -> Option<i64> {
        self.terms.keys().next().map(Diagram::charge)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, &RingElem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, y: &Diagram) -> RingElem {
        self.terms.get(y).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, y: Diagram, c: RingElem) -> Result<()> {
        if let Some(n) = self.charge() {
            if n != y.charge() {
                return Err(Error::MixedCharge(n, y.charge()));
            }
        }
        self.push(y, c);
        Ok(())
    }

    /// Unchecked accumulation for kernels, which never change the charge.
    pub(crate) fn push(&mut self, y: Diagram, c: RingElem) {
        debug_assert!(self.charge().is_none_or(|n| n == y.charge()));
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&y) {
            Some(slot) => {
                *slot = &*slot + &c;
                if slot.is_zero() {
                    self.terms.remove(&y);
                }
            }
            None => {
                self.terms.insert(y, c);
            }
        }
    }

    pub(crate) fn push_scaled(&mut self, other: &FockVector, c: &RingElem) {
        for (y, x) in &other.terms {
            self.push(y.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &RingElem) -> FockVector {
        let mut out = FockVector::zero();
        out.push_scaled(self, c);
        out
    }

    pub fn scale_monomial(&self, m: Monomial) -> FockVector {
        FockVector {
            terms: self
                .terms
                .iter()
                .map(|(y, c)| (y.clone(), c.mul_monomial(m)))
                .collect(),
        }
    }

    pub fn add(&self, other: &FockVector) -> Result<FockVector> {
        check_charges(self, other)?;
        let mut out = self.clone();
        out.push_scaled(other, &RingElem::one());
        Ok(out)
    }

    pub fn sub(&self, other: &FockVector) -> Result<FockVector> {
        check_charges(self, other)?;
        let mut out = self.clone();
        out.push_scaled(other, &RingElem::from_int(-1));
        Ok(out)
    }

    /// `Σ c_i v_i`.
    pub fn combine(scalars: &[RingElem], vectors: &[FockVector]) -> Result<FockVector> {
        if scalars.len() != vectors.len() {
            return Err(Error::Config(format!(
                "{} scalars for {} vectors",
                scalars.len(),
                vectors.len()
            )));
        }
        let mut charge: Option<i64> = None;
        for v in vectors {
            if let (Some(a), Some(b)) = (charge, v.charge()) {
                if a != b {
                    return Err(Error::MixedCharge(a, b));
                }
            }
            charge = charge.or(v.charge());
        }
        let mut out = FockVector::zero();
        for (c, v) in scalars.iter().zip(vectors) {
            out.push_scaled(v, c);
        }
        Ok(out)
    }
}

fn check_charges(a: &FockVector, b: &FockVector) -> Result<()> {
    match (a.charge(), b.charge()) {
        (Some(x), Some(y)) if x != y => Err(Error::MixedCharge(x, y)),
        _ => Ok(()),
    }
}

impl fmt::Display for FockVector {
    /// `coeff * (diagram)` terms joined by ` + `; multi-term coefficients
    /// are parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (y, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if c.len() > 1 {
                write!(f, "({c}) * ({y})")?;
            } else {
                write!(f, "{c} * ({y})")?;
            }
        }
        Ok(())
    }
}

type Kernel = dyn Fn(&Diagram) -> FockVector + Send + Sync;

/// A linear operator given by its values on basis diagrams.
#[derive(Clone)]
pub struct LinearOp {
    name: String,
    kernel: Arc<Kernel>,
}

impl LinearOp {
    pub fn new(
        name: impl Into<String>,
        kernel: impl Fn(&Diagram) -> FockVector + Send + Sync + 'static,
    ) -> Self {
        LinearOp {
            name: name.into(),
            kernel: Arc::new(kernel),
        }
    }

    /// Diagonal operator `Y -> eigen(Y) Y`.
    pub fn diagonal(
        name: impl Into<String>,
        eigen: impl Fn(&Diagram) -> RingElem + Send + Sync + 'static,
    ) -> Self {
        LinearOp::new(name, move |y| FockVector::term(y.clone(), eigen(y)))
    }

    pub fn identity() -> Self {
        LinearOp::new("1", |y| FockVector::basis(y.clone()))
    }

    pub fn zero() -> Self {
        LinearOp::new("0", |_| FockVector::zero())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn apply_basis(&self, y: &Diagram) -> FockVector {
        (self.kernel)(y)
    }

    pub fn apply(&self, v: &FockVector) -> FockVector {
        let mut out = FockVector::zero();
        for (y, c) in v.terms() {
            out.push_scaled(&self.apply_basis(y), c);
        }
        out
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearOp) -> LinearOp {
        let (a, b) = (self.clone(), inner.clone());
        LinearOp::new(format!("{}*{}", self.name, inner.name), move |y| {
            a.apply(&b.apply_basis(y))
        })
    }

    pub fn scaled(&self, c: RingElem) -> LinearOp {
        let a = self.clone();
        LinearOp::new(format!("({c})*{}", self.name), move |y| {
            a.apply_basis(y).scale(&c)
        })
    }

    pub fn plus(&self, other: &LinearOp) -> LinearOp {
        self.linear_combination(other, RingElem::one(), "+")
    }

    pub fn minus(&self, other: &LinearOp) -> LinearOp {
        self.linear_combination(other, RingElem::from_int(-1), "-")
    }

    fn linear_combination(&self, other: &LinearOp, c: RingElem, sym: &str) -> LinearOp {
        let (a, b) = (self.clone(), other.clone());
        LinearOp::new(format!("({} {sym} {})", self.name, other.name), move |y| {
            let mut out = a.apply_basis(y);
            out.push_scaled(&b.apply_basis(y), &c);
            out
        })
    }
}

impl fmt::Debug for LinearOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("LinearOp").field(&self.name).finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OpComparison {
    Equal,
    /// First basis diagram where the operators differ, with `p(Y) - q(Y)`.
    Counterexample(Diagram, FockVector),
}

pub fn op_equal_on(p: &LinearOp, q: &LinearOp, basis: &[Diagram]) -> OpComparison {
    for y in basis {
        let mut residual = p.apply_basis(y);
        residual.push_scaled(&q.apply_basis(y), &RingElem::from_int(-1));
        if !residual.is_zero() {
            return OpComparison::Counterexample(y.clone(), residual);
        }
    }
    OpComparison::Equal
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

    #[test]
    fn combine_cancels() {
        let phi = FockVector::basis(Diagram::vacuum(0));
        let v = FockVector::combine(&[1.into(), (-1).into()], &[phi.clone(), phi]).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn combine_merges_coefficients() {
        let y1 = FockVector::basis(d("0;-1"));
        let v = FockVector::combine(&[RingElem::r(), RingElem::s()], &[y1.clone(), y1]).unwrap();
        assert_eq!(v, FockVector::term(d("0;-1"), ring("r + s")));

        let phi = FockVector::basis(Diagram::vacuum(0));
        let v = FockVector::combine(&[ring("r - s"), RingElem::s()], &[phi.clone(), phi]).unwrap();
        assert_eq!(v, FockVector::term(Diagram::vacuum(0), RingElem::r()));
    }

    #[test]
    fn combine_rejects_mixed_charge() {
        let a = FockVector::basis(Diagram::vacuum(0));
        let b = FockVector::basis(Diagram::vacuum(3));
        assert_eq!(
            FockVector::combine(&[1.into(), 1.into()], &[a.clone(), b.clone()]),
            Err(Error::MixedCharge(0, 3))
        );
        assert!(a.add(&b).is_err());
        let mut c = a.clone();
        assert!(c.add_term(Diagram::vacuum(3), 1.into()).is_err());
    }

    #[test]
    fn zero_maps_to_zero() {
        let op = LinearOp::new("shift", |y| {
            FockVector::basis(y.add_box(0).unwrap_or_else(|| y.clone()))
        });
        assert!(op.apply(&FockVector::zero()).is_zero());
    }

    #[test]
    fn text_form() {
        let mut v = FockVector::term(d("0;-1"), ring("r + s"));
        v.push(Diagram::vacuum(0), RingElem::one());
        assert_eq!(v.to_string(), "1 * (0;) + (1*r^(1) + 1*s^(1)) * (0;-1)");
        assert_eq!(FockVector::zero().to_string(), "0");
    }

    #[test]
    fn identity_equal_to_itself() {
        let basis = enumerate(0, 4);
        assert_eq!(
            op_equal_on(&LinearOp::identity(), &LinearOp::identity(), &basis),
            OpComparison::Equal
        );
    }

    #[test]
    fn compose_applies_inner_first() {
        let add0 = LinearOp::new("f0", |y| {
            y.add_box(0).map(FockVector::basis).unwrap_or_default()
        });
        let add1 = LinearOp::new("f1", |y| {
            y.add_box(1).map(FockVector::basis).unwrap_or_default()
        });
        let v = add1.compose(&add0).apply_basis(&Diagram::vacuum(0));
        assert_eq!(v, FockVector::basis(d("0;-1,-1")));
        assert!(add0
            .compose(&add1)
            .apply_basis(&Diagram::vacuum(0))
            .is_zero());
    }
}
