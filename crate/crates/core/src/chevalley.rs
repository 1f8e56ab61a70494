//! Chevalley basis with integral structure constants for simply-laced types.
//!
//! Signs come from a bimultiplicative 2-cocycle on the root lattice, fixed
//! by the Bourbaki node order: `ε(α_i, α_j) = −1` when `i = j` or when
//! `i < j` and the nodes are joined, `+1` otherwise. With the rescaling
//! `e_{−α} ↦ −e_{−α}` for positive `α` this gives `[e_α, e_{−α}] = h_α`.

use std::collections::HashMap;

use crate::rootsys::{dot, RootSystem};

/// Index of a basis element: `0..rank` are the `h_i`, then positive roots
/// in the root system's order, then their negatives in the same order.
pub type BasisIndex = usize;

/// Dense coordinate vector in the Chevalley basis.
pub type Element = Vec<i64>;

#[derive(Clone, Debug)]
pub struct ChevalleyBasis {
    rank: usize,
    /// Simple-root coefficients of every root, positive then negative.
    roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    cartan: Vec<Vec<i64>>,
    /// Sparse product table: `table[a][b]` lists `(c, coeff)` with
    /// `[x_a, x_b] = Σ coeff·x_c`.
    table: Vec<Vec<Vec<(usize, i64)>>>,
}

fn cocycle_sign(cartan: &[Vec<i64>], a: &[i64], b: &[i64]) -> i64 {
    let n = a.len();
    let mut parity = 0i64;
    for i in 0..n {
        if a[i] == 0 {
            continue;
        }
        for j in 0..n {
            if i == j || (i < j && cartan[i][j] == -1) {
                parity += a[i] * b[j];
            }
        }
    }
    if parity.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

impl ChevalleyBasis {
    pub fn build(rs: &RootSystem) -> ChevalleyBasis {
        let rank = rs.rank();
        let cartan = rs.cartan.clone();
        let mut roots: Vec<Vec<i64>> = rs.positive_root_coeffs.clone();
        roots.extend(rs.positive_root_coeffs.iter().map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()));
        let index: HashMap<Vec<i64>, usize> =
            roots.iter().enumerate().map(|(i, r)| (r.clone(), rank + i)).collect();
        let dim = rank + roots.len();
        let sgn = |r: &[i64]| if r.iter().sum::<i64>() > 0 { 1 } else { -1 };
        // (α, β) for simple-root coefficient vectors
        let form = |a: &[i64], b: &[i64]| -> i64 {
            let mut s = 0;
            for i in 0..rank {
                for j in 0..rank {
                    s += a[i] * cartan[i][j] * b[j];
                }
            }
            s
        };
        let mut table = vec![vec![Vec::new(); dim]; dim];
        for a in 0..dim {
            for b in 0..dim {
                let entry: Vec<(usize, i64)> = match (a < rank, b < rank) {
                    (true, true) => Vec::new(),
                    (true, false) => {
                        let beta = &roots[b - rank];
                        let c = dot(beta, &cartan.iter().map(|row| row[a]).collect::<Vec<_>>());
                        if c == 0 {
                            Vec::new()
                        } else {
                            vec![(b, c)]
                        }
                    }
                    (false, true) => {
                        let alpha = &roots[a - rank];
                        let c = dot(alpha, &cartan.iter().map(|row| row[b]).collect::<Vec<_>>());
                        if c == 0 {
                            Vec::new()
                        } else {
                            vec![(a, -c)]
                        }
                    }
                    (false, false) => {
                        let alpha = &roots[a - rank];
                        let beta = &roots[b - rank];
                        let s: Vec<i64> = alpha.iter().zip(beta).map(|(x, y)| x + y).collect();
                        if s.iter().all(|&x| x == 0) {
                            // h_α in the simple coroot basis
                            alpha
                                .iter()
                                .enumerate()
                                .filter(|(_, &x)| x != 0)
                                .map(|(i, &x)| (i, x))
                                .collect()
                        } else if let Some(&c) = index.get(&s) {
                            debug_assert_eq!(form(alpha, beta), -1);
                            let n = sgn(alpha) * sgn(beta) * sgn(&s) * cocycle_sign(&cartan, alpha, beta);
                            vec![(c, n)]
                        } else {
                            Vec::new()
                        }
                    }
                };
                table[a][b] = entry;
            }
        }
        ChevalleyBasis { rank, roots, index, cartan, table }
    }

    pub fn dim(&self) -> usize {
        self.rank + self.roots.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Simple-root coefficients of the root attached to a basis index, or
    /// `None` for Cartan elements.
    pub fn root_of(&self, idx: BasisIndex) -> Option<&[i64]> {
        (idx >= self.rank).then(|| self.roots[idx - self.rank].as_slice())
    }

    /// Basis index of the root vector `e_β` (simple-root coefficients).
    pub fn index_of(&self, beta: &[i64]) -> Option<BasisIndex> {
        self.index.get(beta).copied()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Structure constant `N_{β,γ}` with `[e_β, e_γ] = N e_{β+γ}`; `None`
    /// when `β+γ` is not a root.
    pub fn structure_constant(&self, beta: &[i64], gamma: &[i64]) -> Option<i64> {
        let a = self.index_of(beta)?;
        let b = self.index_of(gamma)?;
        match self.table[a][b].as_slice() {
            [(c, n)] if *c >= self.rank => Some(*n),
            _ => None,
        }
    }

    pub fn basis_element(&self, idx: BasisIndex) -> Element {
        let mut v = vec![0; self.dim()];
        v[idx] = 1;
        v
    }

    pub fn bracket_basis(&self, a: BasisIndex, b: BasisIndex) -> &[(usize, i64)] {
        &self.table[a][b]
    }

    pub fn bracket(&self, x: &Element, y: &Element) -> Element {
        let mut out = vec![0; self.dim()];
        for (a, &xa) in x.iter().enumerate() {
            if xa == 0 {
                continue;
            }
            for (b, &yb) in y.iter().enumerate() {
                if yb == 0 {
                    continue;
                }
                for &(c, n) in &self.table[a][b] {
                    out[c] += xa * yb * n;
                }
            }
        }
        out
    }

    /// Matrix of `ad x` (row = output index, column = input index).
    pub fn ad(&self, x: &Element) -> Vec<Vec<i64>> {
        let d = self.dim();
        let mut m = vec![vec![0; d]; d];
        for (a, &xa) in x.iter().enumerate() {
            if xa == 0 {
                continue;
            }
            for (b, col) in self.table[a].iter().enumerate() {
                for &(c, n) in col {
                    m[c][b] += xa * n;
                }
            }
        }
        m
    }

    /// Killing form `tr(ad x ∘ ad y)`.
    pub fn killing(&self, x: &Element, y: &Element) -> i64 {
        let ax = self.ad(x);
        let ay = self.ad(y);
        let d = self.dim();
        let mut t = 0;
        for i in 0..d {
            for k in 0..d {
                if ax[i][k] != 0 {
                    t += ax[i][k] * ay[k][i];
                }
            }
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, DiagramType};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn jacobi(cb: &ChevalleyBasis, a: usize, b: usize, c: usize) -> bool {
        let (x, y, z) = (cb.basis_element(a), cb.basis_element(b), cb.basis_element(c));
        let t1 = cb.bracket(&x, &cb.bracket(&y, &z));
        let t2 = cb.bracket(&y, &cb.bracket(&z, &x));
        let t3 = cb.bracket(&z, &cb.bracket(&x, &y));
        t1.iter().zip(&t2).zip(&t3).all(|((p, q), r)| p + q + r == 0)
    }

    #[test]
    fn sl2_relations() {
        let cb = ChevalleyBasis::build(&build_root_system(DiagramType::A(1)).unwrap());
        assert_eq!(cb.dim(), 3);
        let e = cb.basis_element(1);
        let f = cb.basis_element(2);
        assert_eq!(cb.bracket(&e, &f), vec![1, 0, 0]);
        let h = cb.basis_element(0);
        assert_eq!(cb.bracket(&h, &e), vec![0, 2, 0]);
        assert_eq!(cb.bracket(&h, &f), vec![0, 0, -2]);
    }

    #[test]
    fn jacobi_exhaustive_rank3() {
        for t in [DiagramType::A(3), DiagramType::A(2)] {
            let cb = ChevalleyBasis::build(&build_root_system(t).unwrap());
            let d = cb.dim();
            for a in 0..d {
                for b in 0..d {
                    for c in 0..d {
                        assert!(jacobi(&cb, a, b, c), "{t}: {a} {b} {c}");
                    }
                }
            }
        }
    }

    #[test]
    fn e7_dimension_and_antisymmetry() {
        let cb = ChevalleyBasis::build(&build_root_system(DiagramType::E7).unwrap());
        assert_eq!(cb.dim(), 133);
        for a in 0..cb.dim() {
            assert!(cb.bracket_basis(a, a).is_empty());
            for b in 0..cb.dim() {
                let ab = cb.bracket_basis(a, b);
                let ba = cb.bracket_basis(b, a);
                assert_eq!(ab.len(), ba.len());
                for ((c1, n1), (c2, n2)) in ab.iter().zip(ba) {
                    assert_eq!(c1, c2);
                    assert_eq!(*n1, -n2);
                }
                if a >= 7 && b >= 7 {
                    if let Some(n) = cb.structure_constant(cb.root_of(a).unwrap(), cb.root_of(b).unwrap()) {
                        assert_eq!(n.abs(), 1);
                    }
                }
            }
        }
    }

    #[test]
    fn cartan_action() {
        let cb = ChevalleyBasis::build(&build_root_system(DiagramType::E7).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let i = rng.gen_range(0..7);
            let b = rng.gen_range(7..cb.dim());
            let beta = cb.root_of(b).unwrap().to_vec();
            let expect: i64 = (0..7).map(|j| beta[j] * cb.cartan()[j][i]).sum();
            let r = cb.bracket(&cb.basis_element(i), &cb.basis_element(b));
            let mut want = vec![0; cb.dim()];
            want[b] = expect;
            assert_eq!(r, want);
        }
    }

    #[test]
    fn e7_jacobi_random() {
        let cb = ChevalleyBasis::build(&build_root_system(DiagramType::E7).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let d = cb.dim();
        for _ in 0..10_000 {
            let (a, b, c) = (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d));
            assert!(jacobi(&cb, a, b, c));
        }
    }

    #[test]
    fn killing_form_is_invariant() {
        let cb = ChevalleyBasis::build(&build_root_system(DiagramType::E7).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let d = cb.dim();
        // K(h_i, h_j) = 2h∨ · (α_i, α_j) with dual Coxeter number 18
        for i in 0..7 {
            for j in 0..7 {
                let k = cb.killing(&cb.basis_element(i), &cb.basis_element(j));
                assert_eq!(k, 36 * cb.cartan()[i][j]);
            }
        }
        for _ in 0..200 {
            let (x, y, z) = (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d));
            let (x, y, z) = (cb.basis_element(x), cb.basis_element(y), cb.basis_element(z));
            assert_eq!(cb.killing(&cb.bracket(&x, &y), &z), cb.killing(&x, &cb.bracket(&y, &z)));
        }
    }
}
