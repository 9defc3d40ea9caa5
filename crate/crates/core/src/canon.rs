//! Canonical labeling of finite orders, optionally carrying an involution.
//!
//! Individualisation-refinement: an ordered partition of the carrier is
//! refined until each vertex's counts of strict upper and lower neighbours
//! per cell (and the cell of its involution image) are constant on cells.
//! Non-singleton cells are then split by trying each vertex first, and the
//! certificate is the smallest adjacency code over all discrete leaves.
//! Automorphisms discovered at equal leaves prune equivalent branches.

use std::fmt;

use crate::ortho::OrthoPoset;

/// Relabeling-invariant encoding of an order with involution.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCertificate {
    n: usize,
    code: Vec<u64>,
}

impl CanonicalCertificate {
    pub fn size(&self) -> usize {
        self.n
    }

    /// Little-endian bytes of the size followed by the code words.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = (self.n as u64).to_le_bytes().to_vec();
        for w in &self.code {
            out.extend_from_slice(&w.to_le_bytes());
        }
        out
    }
}

impl fmt::Debug for CanonicalCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cert({}:", self.n)?;
        for w in &self.code {
            write!(f, " {w:x}")?;
        }
        f.write_str(")")
    }
}

/// A canonical labeling: `order[p]` is the vertex placed at position `p`.
#[derive(Clone, Debug)]
pub struct Labeling {
    pub certificate: CanonicalCertificate,
    pub order: Vec<usize>,
}

impl Labeling {
    /// `position[v]`, the inverse of `order`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (p, &v) in self.order.iter().enumerate() {
            pos[v] = p;
        }
        pos
    }
}

struct Graph<'a> {
    n: usize,
    up: &'a [u64],
    down: Vec<u64>,
    inv: Option<&'a [usize]>,
}

type Cells = Vec<Vec<usize>>;

impl Graph<'_> {
    fn initial(&self) -> Cells {
        let mut keyed: Vec<((u32, u32), usize)> = (0..self.n)
            .map(|v| ((self.down[v].count_ones(), self.up[v].count_ones()), v))
            .collect();
        keyed.sort();
        group(keyed)
    }

    fn refine(&self, cells: &mut Cells) {
        loop {
            let mut cell_of = vec![0usize; self.n];
            let mut masks = Vec::with_capacity(cells.len());
            for (i, cell) in cells.iter().enumerate() {
                let mut m = 0u64;
                for &v in cell {
                    cell_of[v] = i;
                    m |= 1 << v;
                }
                masks.push(m);
            }
            let mut next: Cells = Vec::with_capacity(self.n);
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let mut sig = Vec::with_capacity(2 * masks.len() + 1);
                        for &m in &masks {
                            sig.push((self.up[v] & m).count_ones());
                            sig.push((self.down[v] & m).count_ones());
                        }
                        if let Some(inv) = self.inv {
                            sig.push(cell_of[inv[v]] as u32);
                        }
                        (sig, v)
                    })
                    .collect();
                keyed.sort();
                next.extend(group(keyed));
            }
            let stable = next.len() == cells.len();
            *cells = next;
            if stable {
                return;
            }
        }
    }

    fn code(&self, order: &[usize]) -> Vec<u64> {
        let mut pos = vec![0usize; self.n];
        for (p, &v) in order.iter().enumerate() {
            pos[v] = p;
        }
        let mut code = Vec::with_capacity(2 * self.n);
        for &v in order {
            let mut row = 0u64;
            let mut bits = self.up[v];
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                row |= 1 << pos[u];
                bits &= bits - 1;
            }
            code.push(row);
        }
        if let Some(inv) = self.inv {
            code.extend(order.iter().map(|&v| pos[inv[v]] as u64));
        }
        code
    }
}

fn group<K: PartialEq>(keyed: Vec<(K, usize)>) -> Cells {
    let mut out: Cells = Vec::new();
    let mut last: Option<K> = None;
    for (k, v) in keyed {
        if last.as_ref() == Some(&k) {
            out.last_mut().expect("group started").push(v);
        } else {
            out.push(vec![v]);
            last = Some(k);
        }
    }
    out
}

struct Search<'a> {
    g: Graph<'a>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn run(&mut self, mut cells: Cells, prefix: &mut Vec<usize>) {
        self.g.refine(&mut cells);
        let Some(t) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            self.leaf(order);
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[t] {
            if tried.iter().any(|&u| self.same_orbit(prefix, u, v)) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(vec![v]);
            child.push(cells[t].iter().copied().filter(|&u| u != v).collect());
            child.extend_from_slice(&cells[t + 1..]);
            prefix.push(v);
            self.run(child, prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let code = self.g.code(&order);
        match &self.best {
            None => self.best = Some((code, order)),
            Some((best, best_order)) => {
                if code < *best {
                    self.best = Some((code, order));
                } else if code == *best {
                    let mut gamma = vec![0; self.g.n];
                    for (p, &v) in best_order.iter().enumerate() {
                        gamma[v] = order[p];
                    }
                    self.automorphisms.push(gamma);
                }
            }
        }
    }

    /// Whether some product of known automorphisms fixing `prefix`
    /// pointwise maps `u` to `v`.
    fn same_orbit(&self, prefix: &[usize], u: usize, v: usize) -> bool {
        let fixing: Vec<&Vec<usize>> = self
            .automorphisms
            .iter()
            .filter(|g| prefix.iter().all(|&p| g[p] == p))
            .collect();
        if fixing.is_empty() {
            return false;
        }
        let mut seen = 1u64 << u;
        let mut frontier = vec![u];
        while let Some(x) = frontier.pop() {
            for g in &fixing {
                let y = g[x];
                if seen & (1 << y) == 0 {
                    seen |= 1 << y;
                    frontier.push(y);
                }
            }
        }
        seen & (1 << v) != 0
    }
}

/// Canonical labeling of the strict order given by `up[v]` (bit `u` set iff
/// `v < u`), with an optional involution.
pub fn canonical_labeling(up: &[u64], inv: Option<&[usize]>) -> Labeling {
    let n = up.len();
    assert!(n <= 64, "canonical labeling supports at most 64 vertices");
    let mut down = vec![0u64; n];
    for (v, &row) in up.iter().enumerate() {
        let mut bits = row;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            down[u] |= 1 << v;
            bits &= bits - 1;
        }
    }
    let g = Graph { n, up, down, inv };
    let cells = g.initial();
    let mut search = Search {
        g,
        best: None,
        automorphisms: Vec::new(),
    };
    if n == 0 {
        return Labeling {
            certificate: CanonicalCertificate { n, code: Vec::new() },
            order: Vec::new(),
        };
    }
    search.run(cells, &mut Vec::new());
    let (code, order) = search.best.expect("search reaches a leaf");
    Labeling {
        certificate: CanonicalCertificate { n, code },
        order,
    }
}

pub(crate) fn strict_rows(q: &OrthoPoset) -> Vec<u64> {
    let p = q.poset();
    (0..q.len())
        .map(|x| {
            let mut row = p.up_set(x);
            row.remove(x);
            row.bits()
        })
        .collect()
}

pub fn canonical_labeling_of(q: &OrthoPoset) -> Labeling {
    canonical_labeling(&strict_rows(q), Some(q.involution()))
}

pub fn canonical_form(q: &OrthoPoset) -> CanonicalCertificate {
    canonical_labeling_of(q).certificate
}

/// Whether some bijection preserves the order and commutes with the
/// involutions.
pub fn is_isomorphic(a: &OrthoPoset, b: &OrthoPoset) -> bool {
    a.len() == b.len() && canonical_form(a) == canonical_form(b)
}
