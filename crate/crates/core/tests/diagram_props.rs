use std::collections::BTreeSet;

use fermifock::affinec::{fold_pi, FoldedAlgebra, GenKind, Preset, RiMode};
use fermifock::diagram::BoxMove;
use fermifock::{enumerate, CornerKind, Diagram};

/// Partition numbers by the pentagonal recurrence, unrelated to the
/// enumerator's generator.
fn partition_numbers(n: usize) -> Vec<u64> {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut acc = 0;
        for k in 1.. {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let g1 = k * (3 * k - 1) / 2;
            let g2 = k * (3 * k + 1) / 2;
            if g1 > m {
                break;
            }
            acc += sign * p[m - g1];
            if g2 <= m {
                acc += sign * p[m - g2];
            }
        }
        p[m] = acc;
    }
    p.into_iter().map(|x| x as u64).collect()
}

fn by_box_count(ys: &[Diagram], max: u64) -> Vec<u64> {
    let mut c = vec![0u64; max as usize + 1];
    for y in ys {
        c[y.box_count() as usize] += 1;
    }
    c
}

#[test]
fn counts_are_partition_numbers() {
    let expect = partition_numbers(10);
    assert_eq!(expect, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    for n in [-2, 0, 3] {
        let ys = enumerate(n, 10);
        assert_eq!(by_box_count(&ys, 10), expect);
        let distinct: BTreeSet<_> = ys.iter().collect();
        assert_eq!(distinct.len(), ys.len());
    }
}

fn small() -> Vec<Diagram> {
    let mut ys = enumerate(0, 8);
    ys.extend(enumerate(3, 8));
    ys
}

#[test]
fn corners_match_occupations() {
    for y in small() {
        let n = y.charge();
        let b = y.box_count() as i64;
        let corners = y.corners();
        let diagonals: BTreeSet<i64> = corners.iter().map(|c| c.diagonal).collect();
        assert_eq!(diagonals.len(), corners.len(), "{y}");
        for d in (n - b - 3)..=(n + b + 3) {
            let expect = match (y.occupation(d), y.occupation(d + 1)) {
                (1, 0) => Some(CornerKind::Concave),
                (0, 1) => Some(CornerKind::Convex),
                _ => None,
            };
            assert_eq!(y.status(d), expect, "{y} at {d}");
        }
        // charge: far left filled, far right empty
        assert_eq!(y.occupation(n - b - 3), 1);
        assert_eq!(y.occupation(n + b + 3), 0);
        let concave = corners
            .iter()
            .filter(|c| c.kind == CornerKind::Concave)
            .count();
        let convex = corners.len() - concave;
        assert_eq!(concave, convex + 1, "{y}");
    }
}

#[test]
fn mutation_swaps_occupations_and_colors() {
    for y in small() {
        for c in y.corners() {
            let d = c.diagonal;
            let (dir, back) = match c.kind {
                CornerKind::Concave => (BoxMove::Add, BoxMove::Remove),
                CornerKind::Convex => (BoxMove::Remove, BoxMove::Add),
            };
            let z = y.mutate_box(d, dir).unwrap();
            assert_eq!(z.mutate_box(d, back).as_ref(), Some(&y));
            assert_eq!(z.occupation(d), y.occupation(d + 1));
            assert_eq!(z.occupation(d + 1), y.occupation(d));
            assert_eq!(z.charge(), y.charge());
            for l in [2, 3] {
                let (big, little) = match dir {
                    BoxMove::Add => (z.color_counts(l), y.color_counts(l)),
                    BoxMove::Remove => (y.color_counts(l), z.color_counts(l)),
                };
                let mut bumped = little.clone();
                bumped[fold_pi(d, l)] += 1;
                assert_eq!(big, bumped, "{y} at {d}, l={l}");
            }
            assert!(y.mutate_box(d, back).is_none());
        }
    }
}

#[test]
fn d_exponent_is_color_zero_count() {
    for l in [2, 3] {
        let alg = FoldedAlgebra::with_preset(l, Preset::Paper, RiMode::Full).unwrap();
        for y in small() {
            assert_eq!(alg.d_exponent(&y), y.color_counts(l)[0] as i64, "{y}");
        }
        for n in [-1, 0, 3] {
            assert!(alg.d_eigen(false, &Diagram::vacuum(n)).is_one());
            assert!(alg.d_eigen(true, &Diagram::vacuum(n)).is_one());
        }
    }
}

fn algebras() -> Vec<FoldedAlgebra> {
    let mut out = Vec::new();
    for l in [2, 3] {
        for p in Preset::ALL {
            out.push(FoldedAlgebra::with_preset(l, p, RiMode::Full).unwrap());
        }
    }
    out
}

#[test]
fn raising_operators_are_locally_nilpotent() {
    for alg in algebras() {
        for y in enumerate(0, 5) {
            let b = y.box_count();
            for i in alg.nodes() {
                let mut v = fermifock::FockVector::basis(y.clone());
                for _ in 0..=b {
                    let mut next = fermifock::FockVector::zero();
                    for (z, c) in v.terms() {
                        let image = alg.apply_gen(GenKind::E, i, z);
                        next = next.add(&image.scale(c)).unwrap();
                    }
                    v = next;
                }
                assert!(v.is_zero(), "E_{i}^{} on {y}", b + 1);
            }
        }
    }
}

#[test]
fn generator_images_are_finite_and_weighted() {
    for alg in algebras() {
        let l = alg.l();
        for y in enumerate(0, 6).into_iter().chain(enumerate(3, 4)) {
            let b = y.box_count();
            for i in alg.nodes() {
                let e = alg.apply_gen(GenKind::E, i, &y);
                let f = alg.apply_gen(GenKind::F, i, &y);
                assert!(e.len() as u64 <= b && f.len() as u64 <= b + 1);
                for (z, _) in f.terms() {
                    let mut w = y.color_counts(l);
                    w[i] += 1;
                    assert_eq!(z.color_counts(l), w, "F_{i} {y} -> {z}");
                }
                for (z, _) in e.terms() {
                    let mut w = z.color_counts(l);
                    w[i] += 1;
                    assert_eq!(y.color_counts(l), w, "E_{i} {y} -> {z}");
                }
            }
        }
    }
}
