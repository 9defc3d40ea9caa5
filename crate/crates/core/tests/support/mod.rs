//! Independent oracles. Everything here works from `leq` and the involution
//! alone and shares no code with the library's cone, arrow, canonical-form
//! or adjoint machinery.
#![allow(dead_code)]

use std::collections::BTreeSet;

use orthoimp::arrows::ArrowKind;
use orthoimp::document::PosetDocument;
use orthoimp::fixtures::fixture;
use orthoimp::ortho::OrthoPoset;

pub fn fix(name: &str) -> OrthoPoset {
    fixture(name).expect("fixture loads").structure
}

pub fn idx(q: &OrthoPoset, name: &str) -> usize {
    q.poset().index_of(name).unwrap_or_else(|| panic!("no element {name}"))
}

pub fn names(q: &OrthoPoset, xs: &BTreeSet<usize>) -> Vec<String> {
    xs.iter().map(|&x| q.name(x).to_string()).collect()
}

pub fn set_of(q: &OrthoPoset, names: &[&str]) -> BTreeSet<usize> {
    names.iter().map(|n| idx(q, n)).collect()
}

/// Plain relation matrix plus involution.
#[derive(Clone, Debug)]
pub struct Naive {
    pub n: usize,
    pub le: Vec<Vec<bool>>,
    pub inv: Vec<usize>,
}

impl Naive {
    pub fn of(q: &OrthoPoset) -> Self {
        let n = q.len();
        let le = (0..n).map(|x| (0..n).map(|y| q.leq(x, y)).collect()).collect();
        Naive {
            n,
            le,
            inv: q.involution().to_vec(),
        }
    }

    pub fn all(&self) -> BTreeSet<usize> {
        (0..self.n).collect()
    }

    pub fn lower(&self, a: &[usize]) -> BTreeSet<usize> {
        (0..self.n).filter(|&z| a.iter().all(|&x| self.le[z][x])).collect()
    }

    pub fn upper(&self, a: &[usize]) -> BTreeSet<usize> {
        (0..self.n).filter(|&z| a.iter().all(|&x| self.le[x][z])).collect()
    }

    pub fn max(&self, s: &BTreeSet<usize>) -> BTreeSet<usize> {
        s.iter()
            .copied()
            .filter(|&x| !s.iter().any(|&y| y != x && self.le[x][y]))
            .collect()
    }

    pub fn min(&self, s: &BTreeSet<usize>) -> BTreeSet<usize> {
        s.iter()
            .copied()
            .filter(|&x| !s.iter().any(|&y| y != x && self.le[y][x]))
            .collect()
    }

    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        let m = self.min(&self.upper(&[x, y]));
        let u = self.upper(&[x, y]);
        (m.len() == 1 && m.iter().all(|&j| u.iter().all(|&z| self.le[j][z]))).then(|| *m.iter().next().unwrap())
    }

    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        let m = self.max(&self.lower(&[x, y]));
        let l = self.lower(&[x, y]);
        (m.len() == 1 && m.iter().all(|&j| l.iter().all(|&z| self.le[z][j]))).then(|| *m.iter().next().unwrap())
    }

    pub fn bottom(&self) -> usize {
        (0..self.n).find(|&x| (0..self.n).all(|y| self.le[x][y])).unwrap()
    }

    pub fn top(&self) -> usize {
        (0..self.n).find(|&x| (0..self.n).all(|y| self.le[y][x])).unwrap()
    }

    fn join_set(&self, a: usize, s: &BTreeSet<usize>) -> Option<BTreeSet<usize>> {
        s.iter().map(|&b| self.join(a, b)).collect()
    }

    /// Arrow values straight from the defining formulas; `None` when some
    /// join is missing.
    pub fn imp(&self, kind: ArrowKind, x: usize, y: usize) -> Option<BTreeSet<usize>> {
        let nx = self.inv[x];
        let ny = self.inv[y];
        match kind {
            ArrowKind::C => Some(self.min(&self.upper(&[nx, y]))),
            ArrowKind::K => {
                let mut out = BTreeSet::new();
                for &u in &self.max(&self.lower(&[nx, y])) {
                    for &v in &self.max(&self.lower(&[nx, ny])) {
                        for &w in &self.min(&self.upper(&[nx, y])) {
                            // x ∧ w, computed as a meet directly
                            let m = self.meet(x, w)?;
                            let uv = self.join(u, v)?;
                            out.insert(self.join(uv, m)?);
                        }
                    }
                }
                Some(out)
            }
            ArrowKind::N => self.imp(ArrowKind::K, ny, nx),
            ArrowKind::S => self.join_set(nx, &self.max(&self.lower(&[x, y]))),
            ArrowKind::D => self.join_set(y, &self.max(&self.lower(&[nx, ny]))),
        }
    }

    pub fn orthogonal_poset(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| !self.le[x][self.inv[y]] || self.join(x, y).is_some()))
    }

    pub fn orthocomplemented(&self) -> bool {
        let t = self.top();
        (0..self.n).all(|x| self.join(x, self.inv[x]) == Some(t))
    }

    pub fn orthomodular(&self) -> bool {
        self.orthogonal_poset()
            && (0..self.n).all(|x| {
                (0..self.n).all(|y| {
                    !self.le[x][y]
                        || self
                            .meet(y, self.inv[x])
                            .and_then(|m| self.join(x, m))
                            == Some(y)
                })
            })
    }

    pub fn paraorthomodular(&self) -> bool {
        let b = self.bottom();
        (0..self.n).all(|x| {
            (0..self.n).all(|y| !(self.le[x][y] && self.meet(self.inv[x], y) == Some(b)) || x == y)
        })
    }

    pub fn lattice(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.join(x, y).is_some() && self.meet(x, y).is_some()))
    }

    /// Distributive lattice whose involution is a complementation.
    pub fn boolean_algebra(&self) -> bool {
        let (b, t) = (self.bottom(), self.top());
        self.lattice()
            && (0..self.n).all(|x| {
                self.join(x, self.inv[x]) == Some(t) && self.meet(x, self.inv[x]) == Some(b)
            })
            && (0..self.n).all(|x| {
                (0..self.n).all(|y| {
                    (0..self.n).all(|z| {
                        let l = self.meet(x, self.join(y, z).unwrap()).unwrap();
                        let r = self.join(self.meet(x, y).unwrap(), self.meet(x, z).unwrap()).unwrap();
                        l == r
                    })
                })
            })
    }

    fn leq1(&self, a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> bool {
        a.iter().all(|&x| b.iter().any(|&y| self.le[x][y]))
    }

    fn leq2(&self, a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> bool {
        b.iter().all(|&y| a.iter().any(|&x| self.le[x][y]))
    }

    /// Whether some set-valued operator satisfies the adjunction, by trying
    /// every subset of the carrier for every pair.
    pub fn adjoint_exists(&self, kind: ArrowKind) -> bool {
        assert!(self.n <= 8, "brute force is exponential");
        let values: Vec<Vec<BTreeSet<usize>>> = (0..self.n)
            .map(|y| (0..self.n).map(|z| self.imp(kind, y, z).expect("defined")).collect())
            .collect();
        (0..self.n).all(|x| {
            (0..self.n).all(|y| {
                (0u32..(1 << self.n)).any(|mask| {
                    let a: BTreeSet<usize> = (0..self.n).filter(|&i| mask & (1 << i) != 0).collect();
                    (0..self.n).all(|z| {
                        let left = self.leq1(&a, &BTreeSet::from([z]));
                        let right = self.leq2(&BTreeSet::from([x]), &values[y][z]);
                        left == right
                    })
                })
            })
        })
    }

    fn apply(&self, perm: &[usize]) -> (Vec<Vec<bool>>, Vec<usize>) {
        let mut le = vec![vec![false; self.n]; self.n];
        let mut inv = vec![0; self.n];
        for x in 0..self.n {
            for y in 0..self.n {
                le[perm[x]][perm[y]] = self.le[x][y];
            }
            inv[perm[x]] = perm[self.inv[x]];
        }
        (le, inv)
    }

    /// Lexicographically smallest encoding over all relabelings.
    pub fn brute_canonical(&self) -> (Vec<Vec<bool>>, Vec<usize>) {
        let mut best: Option<(Vec<Vec<bool>>, Vec<usize>)> = None;
        for perm in permutations(self.n) {
            let enc = self.apply(&perm);
            if best.as_ref().is_none_or(|b| enc < *b) {
                best = Some(enc);
            }
        }
        best.expect("at least one permutation")
    }
}

pub fn brute_isomorphic(a: &OrthoPoset, b: &OrthoPoset) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let (na, nb) = (Naive::of(a), Naive::of(b));
    permutations(a.len()).into_iter().any(|p| {
        let (le, inv) = na.apply(&p);
        le == nb.le && inv == nb.inv
    })
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Every bounded partial order on `n` labeled points together with every
/// antitone involution, as relation matrices.
pub fn labeled_structures(n: usize) -> Vec<Naive> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|(x, y)| x != y)
        .collect();
    let perms = permutations(n);
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut le = vec![vec![false; n]; n];
        for (i, x) in le.iter_mut().enumerate() {
            x[i] = true;
        }
        for (k, &(x, y)) in pairs.iter().enumerate() {
            if mask & (1 << k) != 0 {
                le[x][y] = true;
            }
        }
        let antisymmetric = pairs.iter().all(|&(x, y)| !(le[x][y] && le[y][x]));
        let transitive = (0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| !(le[x][y] && le[y][z]) || le[x][z]))
        });
        let bounded = (0..n).any(|b| (0..n).all(|y| le[b][y])) && (0..n).any(|t| (0..n).all(|y| le[y][t]));
        if !(antisymmetric && transitive && bounded) {
            continue;
        }
        for p in &perms {
            let involutive = (0..n).all(|x| p[p[x]] == x);
            let antitone = (0..n).all(|x| (0..n).all(|y| !le[x][y] || le[p[y]][p[x]]));
            if involutive && antitone {
                out.push(Naive {
                    n,
                    le: le.clone(),
                    inv: p.clone(),
                });
            }
        }
    }
    out
}

/// Rebuild a structure under a relabeling through the document format.
pub fn relabeled(q: &OrthoPoset, perm: &[usize]) -> OrthoPoset {
    let n = q.len();
    let mut elements = vec![String::new(); n];
    for x in 0..n {
        elements[perm[x]] = q.name(x).to_string();
    }
    let covers = q
        .poset()
        .covers()
        .into_iter()
        .map(|(a, b)| [perm[a], perm[b]])
        .collect();
    let mut involution = vec![0; n];
    for x in 0..n {
        involution[perm[x]] = perm[q.neg(x)];
    }
    PosetDocument {
        name: "relabeled".into(),
        elements,
        covers,
        involution,
    }
    .build()
    .expect("relabeling preserves validity")
}
