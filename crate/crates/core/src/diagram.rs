//! Extended Young diagrams.
//!
//! A diagram of charge `n` is a weakly increasing column-depth sequence
//! `y_0 <= y_1 <= ...` that is eventually equal to `n`. Column `k` holds the
//! boxes at heights `p` with `y_k < p <= n`, and the box `(k, p)` lies on
//! diagonal `k + p`. Only the prefix of columns strictly below the charge is
//! stored.
//!
//! Corner sites: column `k` carries a concave corner (a box can be added)
//! when `k = 0` or `y_{k-1} < y_k`, on diagonal `k + y_k`; it carries a convex
//! corner (a box can be removed) when `y_k < y_{k+1}`, on diagonal
//! `k + y_k + 1`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::affinec::fold_pi;
use crate::cursor::Cursor;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CornerKind {
    Concave,
    Convex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Corner {
    pub column: usize,
    pub diagonal: i64,
    pub kind: CornerKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoxMove {
    Add,
    Remove,
}

/// Ordered by `(charge, box count, columns lexicographically)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    charge: i64,
    cols: Vec<i64>,
    boxes: u64,
}

impl Diagram {
    /// Validates and canonicalizes: trailing columns equal to the charge are
    /// dropped.
    pub fn new(charge: i64, mut cols: Vec<i64>) -> Result<Self> {
        while cols.last() == Some(&charge) {
            cols.pop();
        }
        for (k, w) in cols.windows(2).enumerate() {
            if w[0] > w[1] {
                return Err(Error::InvalidDiagram(format!(
                    "column {} has depth {} above column {} depth {}",
                    k,
                    w[0],
                    k + 1,
                    w[1]
                )));
            }
        }
        if let Some(&last) = cols.last() {
            if last > charge {
                return Err(Error::InvalidDiagram(format!(
                    "column depth {last} exceeds the charge {charge}"
                )));
            }
        }
        let boxes = cols.iter().map(|&y| (charge - y) as u64).sum();
        Ok(Diagram {
            charge,
            cols,
            boxes,
        })
    }

    /// The empty diagram `(n, n, n, ...)`.
    pub fn vacuum(charge: i64) -> Self {
        Diagram {
            charge,
            cols: Vec::new(),
            boxes: 0,
        }
    }

    pub fn charge(&self) -> i64 {
        self.charge
    }

    /// Stored column depths, all strictly below the charge.
    pub fn cols(&self) -> &[i64] {
        &self.cols
    }

    pub fn box_count(&self) -> u64 {
        self.boxes
    }

    pub fn is_vacuum(&self) -> bool {
        self.cols.is_empty()
    }

    /// `y_k`, reading the charge past the stored prefix.
    pub fn depth(&self, k: usize) -> i64 {
        self.cols.get(k).copied().unwrap_or(self.charge)
    }

    pub fn corners(&self) -> Vec<Corner> {
        let kk = self.cols.len();
        let mut out = Vec::with_capacity(2 * kk + 1);
        for k in 0..=kk {
            let y = self.depth(k);
            if k == 0 || self.depth(k - 1) < y {
                out.push(Corner {
                    column: k,
                    diagonal: k as i64 + y,
                    kind: CornerKind::Concave,
                });
            }
            if y < self.depth(k + 1) {
                out.push(Corner {
                    column: k,
                    diagonal: k as i64 + y + 1,
                    kind: CornerKind::Convex,
                });
            }
        }
        out.sort_by_key(|c| c.diagonal);
        out
    }

    fn corner_at(&self, d: i64) -> Option<Corner> {
        // k + y_k is strictly increasing, so at most one column matches
        // each of the two site formulas.
        let kk = self.cols.len();
        for k in 0..=kk {
            let y = self.depth(k);
            let site = k as i64 + y;
            if site == d && (k == 0 || self.depth(k - 1) < y) {
                return Some(Corner {
                    column: k,
                    diagonal: d,
                    kind: CornerKind::Concave,
                });
            }
            if site + 1 == d && y < self.depth(k + 1) {
                return Some(Corner {
                    column: k,
                    diagonal: d,
                    kind: CornerKind::Convex,
                });
            }
            if site > d {
                break;
            }
        }
        None
    }

    /// Corner kind on diagonal `d`, if any.
    pub fn status(&self, d: i64) -> Option<CornerKind> {
        self.corner_at(d).map(|c| c.kind)
    }

    /// Fermionic occupation `m_i`: 0 iff some column `k` has
    /// `k + y_k + 1 = i`.
    pub fn occupation(&self, i: i64) -> u8 {
        let kk = self.cols.len() as i64;
        // columns past the prefix contribute k + n + 1 for every k >= K
        if i - self.charge > kk {
            return 0;
        }
        let hole = self
            .cols
            .iter()
            .enumerate()
            .any(|(k, &y)| k as i64 + y + 1 == i);
        u8::from(!hole)
    }

    pub fn mutate_box(&self, d: i64, dir: BoxMove) -> Option<Diagram> {
        let corner = self.corner_at(d)?;
        let k = corner.column;
        let mut cols = self.cols.clone();
        match (dir, corner.kind) {
            (BoxMove::Add, CornerKind::Concave) => {
                if k == cols.len() {
                    cols.push(self.charge - 1);
                } else {
                    cols[k] -= 1;
                }
                Some(Diagram {
                    charge: self.charge,
                    cols,
                    boxes: self.boxes + 1,
                })
            }
            (BoxMove::Remove, CornerKind::Convex) => {
                cols[k] += 1;
                if cols[k] == self.charge {
                    cols.pop();
                }
                Some(Diagram {
                    charge: self.charge,
                    cols,
                    boxes: self.boxes - 1,
                })
            }
            _ => None,
        }
    }

    pub fn add_box(&self, d: i64) -> Option<Diagram> {
        self.mutate_box(d, BoxMove::Add)
    }

    pub fn remove_box(&self, d: i64) -> Option<Diagram> {
        self.mutate_box(d, BoxMove::Remove)
    }

    /// Number of boxes of each folded color `0..=l`.
    pub fn color_counts(&self, l: usize) -> Vec<u64> {
        let mut counts = vec![0u64; l + 1];
        for (k, &y) in self.cols.iter().enumerate() {
            for p in (y + 1)..=self.charge {
                counts[fold_pi(k as i64 + p, l)] += 1;
            }
        }
        counts
    }
}

impl Ord for Diagram {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.charge, self.boxes)
            .cmp(&(other.charge, other.boxes))
            .then_with(|| self.cols.cmp(&other.cols))
    }
}

impl PartialOrd for Diagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All diagrams of the given charge with at most `max_boxes` boxes, in
/// `(box count, lexicographic columns)` order.
pub fn enumerate(charge: i64, max_boxes: u64) -> Vec<Diagram> {
    let mut out = Vec::new();
    for b in 0..=max_boxes {
        let mut level: Vec<Diagram> = partitions(b)
            .into_iter()
            .map(|parts| Diagram {
                charge,
                cols: parts.iter().map(|&p| charge - p as i64).collect(),
                boxes: b,
            })
            .collect();
        level.sort();
        out.extend(level);
    }
    out
}

/// Partitions of `n` as weakly decreasing part lists.
fn partitions(n: u64) -> Vec<Vec<u64>> {
    fn go(rest: u64, max_part: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=rest.min(max_part)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.charge)?;
        for (i, y) in self.cols.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{y}")?;
        }
        Ok(())
    }
}

impl FromStr for Diagram {
    type Err = Error;

    /// `<charge>;<y_0>,<y_1>,...`
    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let charge = cur.signed_i64()?;
        cur.expect(';')?;
        let mut cols: Vec<i64> = Vec::new();
        if !cur.at_end() {
            loop {
                let at = cur.pos();
                let y = cur.signed_i64()?;
                if y >= charge {
                    return Err(Error::parse(
                        at,
                        format!("column depth {y} must be below the charge {charge}"),
                    ));
                }
                if let Some(&prev) = cols.last() {
                    if y < prev {
                        return Err(Error::parse(
                            at,
                            format!("column depth {y} is below the previous column {prev}"),
                        ));
                    }
                }
                cols.push(y);
                if !cur.eat(',') {
                    break;
                }
            }
        }
        if !cur.at_end() {
            return Err(cur.error("unexpected trailing input"));
        }
        Diagram::new(charge, cols)
    }
}
