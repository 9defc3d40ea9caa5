//! Exhaustive generation of bounded posets with antitone involution, one per
//! isomorphism class.
//!
//! A bounded poset on `n` elements is an arbitrary poset on `n - 2`
//! elements with a bottom and a top adjoined. Those inner posets are grown
//! one maximal element at a time and deduplicated by certificate; each
//! bounded poset is then searched for antitone involutions, and the pairs
//! are deduplicated again with the involution in the certificate.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::canon::{canonical_labeling, CanonicalCertificate};
use crate::order::Poset;
use crate::ortho::OrthoPoset;
use crate::set::ElementSet;

/// Strict upper rows of a poset: bit `u` of `rows[v]` is set iff `v < u`.
type Rows = Vec<u64>;

fn relabel(rows: &[u64], order: &[usize]) -> Rows {
    let mut pos = vec![0usize; rows.len()];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    order
        .iter()
        .map(|&v| {
            let mut out = 0u64;
            let mut bits = rows[v];
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                out |= 1 << pos[u];
                bits &= bits - 1;
            }
            out
        })
        .collect()
}

fn canonical_rows(rows: &[u64]) -> (CanonicalCertificate, Rows) {
    let l = canonical_labeling(rows, None);
    let r = relabel(rows, &l.order);
    (l.certificate, r)
}

/// Every down-closed subset of the poset.
fn downsets(rows: &[u64]) -> Vec<u64> {
    let m = rows.len();
    let mut down = vec![0u64; m];
    for (v, &row) in rows.iter().enumerate() {
        for (u, d) in down.iter_mut().enumerate() {
            if row & (1 << u) != 0 {
                *d |= 1 << v;
            }
        }
    }
    (0u64..(1 << m))
        .filter(|&s| {
            let mut bits = s;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                if down[v] & !s != 0 {
                    return false;
                }
                bits &= bits - 1;
            }
            true
        })
        .collect()
}

/// Posets on `m` elements up to isomorphism, for `m = 0..=max`, in
/// canonical labeling.
fn inner_levels(max: usize) -> Vec<Vec<Rows>> {
    let mut levels: Vec<Vec<Rows>> = vec![vec![Vec::new()]];
    for m in 1..=max {
        let prev = &levels[m - 1];
        let found: Vec<(CanonicalCertificate, Rows)> = prev
            .par_iter()
            .flat_map_iter(|rows| {
                downsets(rows).into_iter().map(move |d| {
                    let mut ext = rows.clone();
                    for (v, row) in ext.iter_mut().enumerate() {
                        if d & (1 << v) != 0 {
                            *row |= 1 << (m - 1);
                        }
                    }
                    ext.push(0);
                    canonical_rows(&ext)
                })
            })
            .collect();
        let unique: BTreeMap<CanonicalCertificate, Rows> = found.into_iter().collect();
        levels.push(unique.into_values().collect());
    }
    levels
}

/// Adjoin bounds: bottom at 0, inner `i` at `i + 1`, top at `m + 1`.
fn bounded(inner: &[u64]) -> Rows {
    let m = inner.len();
    let n = m + 2;
    let top = 1u64 << (n - 1);
    let mut rows = Vec::with_capacity(n);
    rows.push(((1u64 << n) - 1) & !1);
    rows.extend(inner.iter().map(|&r| (r << 1) | top));
    rows.push(0);
    rows
}

/// All antitone involutions of a bounded poset.
fn involutions(rows: &[u64]) -> Vec<Vec<usize>> {
    let n = rows.len();
    let mut down = vec![0u64; n];
    for (v, &row) in rows.iter().enumerate() {
        for (u, d) in down.iter_mut().enumerate() {
            if row & (1 << u) != 0 {
                *d |= 1 << v;
            }
        }
    }
    let deg: Vec<(u32, u32)> = (0..n)
        .map(|v| (down[v].count_ones(), rows[v].count_ones()))
        .collect();
    let lt = |a: usize, b: usize| rows[a] & (1 << b) != 0;
    let mut out = Vec::new();
    let mut f = vec![usize::MAX; n];

    fn consistent(f: &[usize], lt: &dyn Fn(usize, usize) -> bool, a: usize, b: usize) -> bool {
        // a and b newly assigned, b = f(a); compare with every assigned c
        f.iter().enumerate().all(|(c, &fc)| {
            fc == usize::MAX
                || [a, b].iter().all(|&x| {
                    let fx = f[x];
                    lt(x, c) == lt(fc, fx) && lt(c, x) == lt(fx, fc)
                })
        })
    }

    fn go(
        i: usize,
        f: &mut Vec<usize>,
        deg: &[(u32, u32)],
        lt: &dyn Fn(usize, usize) -> bool,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = f.len();
        let Some(i) = (i..n).find(|&v| f[v] == usize::MAX) else {
            out.push(f.clone());
            return;
        };
        for j in i..n {
            if f[j] != usize::MAX || deg[j] != (deg[i].1, deg[i].0) {
                continue;
            }
            f[i] = j;
            f[j] = i;
            if consistent(f, lt, i, j) {
                go(i + 1, f, deg, lt, out);
            }
            f[i] = usize::MAX;
            f[j] = usize::MAX;
        }
    }

    go(0, &mut f, &deg, &lt, &mut out);
    out
}

fn names_for(inv: &[usize]) -> Vec<String> {
    let n = inv.len();
    let mut names = vec![String::new(); n];
    names[0] = "0".into();
    names[n - 1] = "1".into();
    let mut letter = 0u8;
    for v in 1..n - 1 {
        if !names[v].is_empty() {
            continue;
        }
        let base = if letter < 26 {
            char::from(b'a' + letter).to_string()
        } else {
            format!("x{letter}")
        };
        letter += 1;
        let w = inv[v];
        names[w] = format!("{base}'");
        names[v] = base;
    }
    names
}

fn to_ortho(rows: &[u64], inv: Vec<usize>) -> OrthoPoset {
    let n = rows.len();
    let up: Vec<ElementSet> = rows
        .iter()
        .enumerate()
        .map(|(v, &r)| ElementSet::from_bits(r | (1 << v)))
        .collect();
    let names = names_for(&inv);
    let poset = Poset::from_relation(names, up, Some((0, n - 1))).expect("generated order is valid");
    OrthoPoset::new(poset, inv).expect("generated involution is valid")
}

/// Structures of exactly size `n` from the inner posets of size `n - 2`,
/// sorted by certificate and relabeled canonically.
fn structures_from(inner: &[Rows]) -> Vec<(CanonicalCertificate, OrthoPoset)> {
    let mut found: Vec<(CanonicalCertificate, Rows, Vec<usize>)> = inner
        .par_iter()
        .flat_map_iter(|r| {
            let rows = bounded(r);
            let mut local: BTreeMap<CanonicalCertificate, (Rows, Vec<usize>)> = BTreeMap::new();
            for inv in involutions(&rows) {
                let l = canonical_labeling(&rows, Some(&inv));
                local.entry(l.certificate.clone()).or_insert_with(|| {
                    let pos = l.positions();
                    let crows = relabel(&rows, &l.order);
                    let cinv = l.order.iter().map(|&v| pos[inv[v]]).collect();
                    (crows, cinv)
                });
            }
            local.into_iter().map(|(c, (r, i))| (c, r, i))
        })
        .collect();
    found.sort_by(|a, b| a.0.cmp(&b.0));
    found.dedup_by(|a, b| a.0 == b.0);
    found
        .into_iter()
        .map(|(c, rows, inv)| (c, to_ortho(&rows, inv)))
        .collect()
}

/// Incremental generator caching the inner posets across sizes.
pub struct Generator {
    levels: Vec<Vec<Rows>>,
}

impl Generator {
    pub fn new(n_max: usize) -> Self {
        Generator {
            levels: inner_levels(n_max.saturating_sub(2)),
        }
    }

    /// Number of posets on `m` elements up to isomorphism.
    pub fn poset_count(&self, m: usize) -> usize {
        self.levels[m].len()
    }

    /// One representative per class of size `n`, ordered by certificate.
    pub fn of_size(&self, n: usize) -> Vec<(CanonicalCertificate, OrthoPoset)> {
        assert!(n >= 2, "bounded involutive posets need at least two elements");
        structures_from(&self.levels[n - 2])
    }
}

/// Every bounded poset with antitone involution of size `2..=n_max`,
/// one per isomorphism class, ordered by size and then certificate.
pub fn enumerate_structures<F>(n_max: usize, filter: F) -> impl Iterator<Item = OrthoPoset>
where
    F: Fn(&OrthoPoset) -> bool,
{
    let generator = Generator::new(n_max.max(2));
    (2..=n_max)
        .flat_map(move |n| generator.of_size(n))
        .map(|(_, q)| q)
        .filter(move |q| filter(q))
}

/// Number of classes of each size `2..=n_max`.
pub fn class_counts(n_max: usize) -> Vec<(usize, usize)> {
    let generator = Generator::new(n_max.max(2));
    (2..=n_max).map(|n| (n, generator.of_size(n).len())).collect()
}
