//! Homogeneous bundles as weight multisets.
//!
//! A bundle on `G/P` is recorded through the weights of its fibre as a
//! `P`-module. Exterior and symmetric powers act on those multisets, and
//! [`peel`] splits a multiset into irreducible Levi modules so that Bott's
//! algorithm can be applied summand by summand.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::bott::{bott, dotted, BottResult, FlagSpace};
use crate::error::{Error, Result};
use crate::rootsys::{add, WeylFrame};

/// Default cap on the number of weights (with multiplicity) in any single
/// multiset.
pub const DEFAULT_MAX_CELLS: u128 = 50_000_000;

/// Weights with multiplicities, ordered for reproducible output.
pub type Multiset = BTreeMap<Vec<i64>, i64>;

/// Multiset from a plain list of weights.
pub fn multiset<I: IntoIterator<Item = Vec<i64>>>(weights: I) -> Multiset {
    let mut m = Multiset::new();
    for w in weights {
        *m.entry(w).or_default() += 1;
    }
    m
}

pub fn total(m: &Multiset) -> i64 {
    m.values().sum()
}

/// A homogeneous bundle: its flag space and the weights of its fibre.
#[derive(Clone, Debug)]
pub struct BundleSpec {
    pub fs: FlagSpace,
    pub weights: Multiset,
    /// Optional symbolic description, e.g. `E⊗Λ²R`.
    pub symbolic: Option<String>,
}

impl BundleSpec {
    pub fn new(fs: FlagSpace, weights: Multiset) -> BundleSpec {
        BundleSpec { fs, weights, symbolic: None }
    }

    pub fn rank(&self) -> usize {
        total(&self.weights) as usize
    }

    pub fn dual(&self) -> BundleSpec {
        let weights = self.weights.iter().map(|(w, &m)| (w.iter().map(|x| -x).collect(), m)).collect();
        BundleSpec { fs: self.fs.clone(), weights, symbolic: None }
    }

    pub fn exterior_power(&self, j: usize) -> Result<BundleSpec> {
        Ok(BundleSpec::new(self.fs.clone(), exterior_power(&self.weights, j, DEFAULT_MAX_CELLS)?))
    }

    pub fn symmetric_power(&self, d: usize, cap: u128) -> Result<BundleSpec> {
        Ok(BundleSpec::new(self.fs.clone(), symmetric_power(&self.weights, d, cap)?))
    }
}

fn binom_u128(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r.saturating_mul(n - i) / (i + 1);
    }
    r
}

fn guard(what: impl Into<String>, cells: u128, cap: u128) -> Result<()> {
    if cells > cap {
        return Err(Error::SizeGuard { what: what.into(), cells, cap });
    }
    Ok(())
}

fn dim_of(m: &Multiset) -> usize {
    m.keys().next().map_or(0, Vec::len)
}

fn shift_into(dst: &mut Multiset, src: &Multiset, by: &[i64], times: i64) {
    for (w, &c) in src {
        let e = dst.entry(add(w, by)).or_default();
        *e += c * times;
    }
    dst.retain(|_, c| *c != 0);
}

/// All exterior powers `Λ^0 … Λ^rank` at once.
pub fn exterior_powers(m: &Multiset, cap: u128) -> Result<Vec<Multiset>> {
    let rank = total(m) as usize;
    guard(format!("Λ^{} of a rank-{rank} bundle", rank / 2), binom_u128(rank as u128, rank as u128 / 2), cap)?;
    let dim = dim_of(m);
    let mut out: Vec<Multiset> = vec![Multiset::new(); rank + 1];
    out[0].insert(vec![0; dim], 1);
    let mut seen = 0;
    for (w, &mult) in m {
        for _ in 0..mult {
            seen += 1;
            for j in (1..=seen).rev() {
                let (lo, hi) = out.split_at_mut(j);
                shift_into(&mut hi[0], &lo[j - 1], w, 1);
            }
        }
    }
    Ok(out)
}

/// `Λ^j` as the multiset of all `j`-subset sums.
pub fn exterior_power(m: &Multiset, j: usize, cap: u128) -> Result<Multiset> {
    let rank = total(m) as usize;
    if j > rank {
        return Err(Error::PowerOutOfRange(j, rank));
    }
    guard(format!("Λ^{j} of a rank-{rank} bundle"), binom_u128(rank as u128, j as u128), cap)?;
    let dim = dim_of(m);
    let mut layers: Vec<Multiset> = vec![Multiset::new(); j + 1];
    layers[0].insert(vec![0; dim], 1);
    let mut seen = 0;
    for (w, &mult) in m {
        for _ in 0..mult {
            seen += 1;
            for k in (1..=seen.min(j)).rev() {
                let (lo, hi) = layers.split_at_mut(k);
                shift_into(&mut hi[0], &lo[k - 1], w, 1);
            }
        }
    }
    Ok(layers.swap_remove(j))
}

/// `Sym^d` through Newton's identities `d·h_d = Σ_k p_k h_{d−k}`.
pub fn symmetric_power(m: &Multiset, d: usize, cap: u128) -> Result<Multiset> {
    Ok(symmetric_powers(m, d, cap)?.swap_remove(d))
}

/// `Sym^0 … Sym^d`.
pub fn symmetric_powers(m: &Multiset, d: usize, cap: u128) -> Result<Vec<Multiset>> {
    let rank = total(m) as u128;
    guard(format!("Sym^{d} of a rank-{rank} bundle"), binom_u128(rank + d as u128 - 1, d as u128), cap)?;
    let dim = dim_of(m);
    let power_sum = |k: i64| -> Multiset {
        let mut p = Multiset::new();
        for (w, &c) in m {
            *p.entry(w.iter().map(|x| k * x).collect()).or_default() += c;
        }
        p
    };
    let mut h: Vec<Multiset> = Vec::with_capacity(d + 1);
    h.push([(vec![0; dim], 1)].into());
    let sums: Vec<Multiset> = (1..=d as i64).map(power_sum).collect();
    for k in 1..=d {
        let mut acc: BTreeMap<Vec<i64>, i128> = BTreeMap::new();
        for i in 1..=k {
            for (pw, &pc) in &sums[i - 1] {
                for (hw, &hc) in &h[k - i] {
                    *acc.entry(add(pw, hw)).or_default() += pc as i128 * hc as i128;
                }
            }
        }
        let mut next = Multiset::new();
        for (w, c) in acc {
            debug_assert_eq!(c % k as i128, 0);
            let c = (c / k as i128) as i64;
            if c != 0 {
                next.insert(w, c);
            }
        }
        h.push(next);
    }
    Ok(h)
}

/// Tensor product of two multisets.
pub fn tensor(a: &Multiset, b: &Multiset) -> Multiset {
    let mut out = Multiset::new();
    for (x, &m) in a {
        for (y, &n) in b {
            *out.entry(add(x, y)).or_default() += m * n;
        }
    }
    out
}

/// Linear functional strictly positive on the simple roots of `levi`.
fn height(levi: &WeylFrame, w: &[i64]) -> i64 {
    let rho = levi.rho();
    levi.form(w, rho)
}

/// Split a multiset that is symmetric under the Levi Weyl group into
/// irreducible Levi modules, highest first.
pub fn peel(levi: &WeylFrame, m: &Multiset) -> Result<Vec<(Vec<i64>, i64)>> {
    let mut rest: HashMap<Vec<i64>, i64> =
        m.iter().filter(|(_, &c)| c != 0).map(|(w, &c)| (w.clone(), c)).collect();
    // Subtracting a character only touches weights strictly below its top,
    // so one pass in decreasing height visits the tops in order.
    let mut order: Vec<(i64, Vec<i64>)> = rest.keys().map(|w| (height(levi, w), w.clone())).collect();
    order.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = Vec::new();
    for (_, top) in order {
        let Some(&c) = rest.get(&top) else { continue };
        if !levi.is_dominant(&top) || c < 0 {
            return Err(Error::NotSymmetric(format!("{top:?}")));
        }
        for (w, k) in levi.character(&top) {
            let e = rest.entry(w.clone()).or_default();
            *e -= c * k;
            if *e < 0 {
                return Err(Error::NotSymmetric(format!("{w:?}")));
            }
            if *e == 0 {
                rest.remove(&w);
            }
        }
        out.push((top, c));
    }
    Ok(out)
}

/// Characters of the given irreducibles, summed back into a multiset.
pub fn reassemble(levi: &WeylFrame, parts: &[(Vec<i64>, i64)]) -> Multiset {
    let mut out = Multiset::new();
    for (hw, c) in parts {
        for (w, k) in levi.character(hw) {
            *out.entry(w).or_default() += c * k;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// One irreducible piece of a cohomology computation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ModuleEntry {
    /// Internal degree (e.g. the exterior power `j`).
    pub internal_degree: usize,
    /// Cohomological degree.
    pub degree: usize,
    /// Highest weight in the flag space's coordinates.
    pub highest: Vec<i64>,
    pub multiplicity: i64,
}

/// A multiset of irreducible `G`-modules placed in cohomological degrees.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VirtualModule {
    pub entries: Vec<ModuleEntry>,
}

impl VirtualModule {
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Signed multiplicities `Σ (−1)^deg`, keyed by highest weight.
    pub fn euler(&self) -> BTreeMap<Vec<i64>, i64> {
        let mut out = BTreeMap::new();
        for e in &self.entries {
            let s = if e.degree % 2 == 0 { 1 } else { -1 };
            *out.entry(e.highest.clone()).or_default() += s * e.multiplicity;
        }
        out.retain(|_, c: &mut i64| *c != 0);
        out
    }

    pub fn signed_dimension(&self, frame: &WeylFrame) -> BigInt {
        self.euler().iter().map(|(hw, &c)| frame.weyl_dimension(hw) * c).sum()
    }
}

/// `H^*(G/P, E)` for a bundle given by a Levi-symmetric weight multiset:
/// peel into irreducibles, then apply Bott to each.
pub fn cohomology_table(fs: &FlagSpace, m: &Multiset, internal_degree: usize) -> Result<VirtualModule> {
    let mut acc: BTreeMap<(usize, Vec<i64>), i64> = BTreeMap::new();
    for (hw, c) in peel(fs.levi(), m)? {
        if let BottResult::Cohomology { degree, highest } = bott(fs, &hw)? {
            *acc.entry((degree, highest)).or_default() += c;
        }
    }
    let entries = acc
        .into_iter()
        .map(|((degree, highest), multiplicity)| ModuleEntry { internal_degree, degree, highest, multiplicity })
        .collect();
    Ok(VirtualModule { entries })
}

/// `χ(G/P, E)` as an integer, computed weight by weight on `G/B` (no peeling
/// needed: `χ` is additive along a `B`-stable filtration).
pub fn euler_characteristic(frame: &WeylFrame, m: &Multiset) -> BigInt {
    let mut cache: HashMap<Vec<i64>, BigInt> = HashMap::new();
    let mut s = BigInt::zero();
    for (w, &c) in m {
        if let BottResult::Cohomology { degree, highest } = dotted(frame, w) {
            let d = cache.entry(highest).or_insert_with_key(|hw| frame.weyl_dimension(hw));
            if degree % 2 == 0 {
                s += &*d * c;
            } else {
                s -= &*d * c;
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bott::binomial;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn std_gl(n: usize) -> Multiset {
        multiset((0..n).map(|i| {
            let mut v = vec![0; n];
            v[i] = 2;
            v
        }))
    }

    fn gl_frame(sizes: &[usize]) -> WeylFrame {
        let fs = FlagSpace::product(&sizes.iter().map(|&n| FlagSpace::flag(&[n]).unwrap()).collect::<Vec<_>>())
            .unwrap();
        fs.frame().clone()
    }

    /// `C^a ⊗ C^b` in concatenated GL(a)×GL(b) coordinates.
    fn outer(a: usize, b: usize) -> Multiset {
        let mut ws = Vec::new();
        for i in 0..a {
            for j in 0..b {
                let mut v = vec![0; a + b];
                v[i] = 2;
                v[a + j] = 2;
                ws.push(v);
            }
        }
        multiset(ws)
    }

    #[test]
    fn exterior_basics() {
        let m = std_gl(2);
        assert_eq!(exterior_power(&m, 0, DEFAULT_MAX_CELLS).unwrap(), multiset([vec![0, 0]]));
        assert_eq!(exterior_power(&m, 2, DEFAULT_MAX_CELLS).unwrap(), multiset([vec![2, 2]]));
        assert!(matches!(exterior_power(&m, 3, DEFAULT_MAX_CELLS), Err(Error::PowerOutOfRange(3, 2))));
        let m = outer(3, 3);
        let all = exterior_powers(&m, DEFAULT_MAX_CELLS).unwrap();
        let ranks: Vec<i64> = all.iter().map(total).collect();
        assert_eq!(ranks.iter().sum::<i64>(), 1 << 9);
        for (j, r) in ranks.iter().enumerate() {
            assert_eq!(BigInt::from(*r), binomial(9, j as i64));
            assert_eq!(all[j], exterior_power(&m, j, DEFAULT_MAX_CELLS).unwrap());
        }
    }

    #[test]
    fn symmetric_basics() {
        let m = std_gl(2);
        assert_eq!(symmetric_power(&m, 1, DEFAULT_MAX_CELLS).unwrap(), m);
        assert_eq!(
            symmetric_power(&m, 2, DEFAULT_MAX_CELLS).unwrap(),
            multiset([vec![4, 0], vec![2, 2], vec![0, 4]])
        );
        assert_eq!(total(&symmetric_power(&std_gl(5), 3, DEFAULT_MAX_CELLS).unwrap()), 35);
        assert!(matches!(symmetric_power(&std_gl(20), 10, 1000), Err(Error::SizeGuard { .. })));
    }

    fn brute_sym(ws: &[Vec<i64>], d: usize) -> Multiset {
        fn rec(ws: &[Vec<i64>], start: usize, left: usize, cur: Vec<i64>, out: &mut Multiset) {
            if left == 0 {
                *out.entry(cur).or_default() += 1;
                return;
            }
            for i in start..ws.len() {
                rec(ws, i, left - 1, add(&cur, &ws[i]), out);
            }
        }
        let mut out = Multiset::new();
        rec(ws, 0, d, vec![0; ws[0].len()], &mut out);
        out
    }

    #[test]
    fn newton_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for rank in 1..=6 {
            for _ in 0..5 {
                let ws: Vec<Vec<i64>> = (0..rank).map(|_| (0..3).map(|_| rng.gen_range(-2..3)).collect()).collect();
                let m = multiset(ws.clone());
                for d in 0..=4 {
                    let newton = symmetric_power(&m, d, DEFAULT_MAX_CELLS).unwrap();
                    assert_eq!(newton, brute_sym(&ws, d), "rank {rank} d {d}");
                }
            }
        }
    }

    #[test]
    fn peel_examples() {
        let f = gl_frame(&[3]);
        assert_eq!(peel(&f, &std_gl(3)).unwrap(), vec![(vec![2, 0, 0], 1)]);
        let f = gl_frame(&[2, 3]);
        let l2 = exterior_power(&outer(2, 3), 2, DEFAULT_MAX_CELLS).unwrap();
        let parts = peel(&f, &l2).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(parts.contains(&(vec![4, 0, 2, 2, 0], 1)));
        assert!(parts.contains(&(vec![2, 2, 4, 0, 0], 1)));
        let mut bad = std_gl(3);
        bad.remove(&vec![0, 0, 2]);
        assert!(matches!(peel(&f_gl3(), &bad), Err(Error::NotSymmetric(_))));
    }

    fn f_gl3() -> WeylFrame {
        gl_frame(&[3])
    }

    #[test]
    fn peel_reassemble_identity() {
        let f = gl_frame(&[2, 3]);
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        let mut checked = 0;
        while checked < 100 {
            let mut parts = Vec::new();
            let mut rank = 0;
            for _ in 0..rng.gen_range(1..4) {
                let mut a = [rng.gen_range(-2..3), rng.gen_range(-2..3)];
                let mut b = [rng.gen_range(-2..3), rng.gen_range(-2..3), rng.gen_range(-2..3)];
                a.sort_unstable_by(|x, y| y.cmp(x));
                b.sort_unstable_by(|x, y| y.cmp(x));
                let hw = vec![2 * a[0], 2 * a[1], 2 * b[0], 2 * b[1], 2 * b[2]];
                rank += f.weyl_dimension(&hw).to_string().parse::<i64>().unwrap();
                parts.push((hw, 1));
            }
            if rank > 12 {
                continue;
            }
            let m = reassemble(&f, &parts);
            let peeled = peel(&f, &m).unwrap();
            assert_eq!(reassemble(&f, &peeled), m);
            checked += 1;
        }
    }

    /// Dimension of `S_λ C^n`.
    fn schur_dim(lambda: &[usize], n: usize) -> BigInt {
        if lambda.len() > n {
            return BigInt::zero();
        }
        let mut hw = vec![0i64; n];
        for (i, &x) in lambda.iter().enumerate() {
            hw[i] = 2 * x as i64;
        }
        gl_frame(&[n]).weyl_dimension(&hw)
    }

    fn partitions(t: usize, max: usize) -> Vec<Vec<usize>> {
        if t == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=t.min(max)).rev() {
            for mut rest in partitions(t - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    fn conjugate(l: &[usize]) -> Vec<usize> {
        (0..l.first().copied().unwrap_or(0)).map(|i| l.iter().filter(|&&x| x > i).count()).collect()
    }

    #[test]
    fn cauchy_rank_counts() {
        for a in 1..=3 {
            for b in 1..=3 {
                let all = exterior_powers(&outer(a, b), DEFAULT_MAX_CELLS).unwrap();
                for t in 0..=4.min(a * b) {
                    let sum: BigInt = partitions(t, t)
                        .iter()
                        .map(|l| schur_dim(l, a) * schur_dim(&conjugate(l), b))
                        .sum();
                    assert_eq!(BigInt::from(total(&all[t])), sum);
                    assert_eq!(sum, binomial((a * b) as i64, t as i64));
                }
            }
        }
    }

    #[test]
    fn cohomology_on_projective_line() {
        let fs = FlagSpace::projective(1).unwrap();
        // O(1) ⊕ O(-3) as weights of a P-module
        let m = multiset([vec![2, 0], vec![-6, 0]]);
        let t = cohomology_table(&fs, &m, 0).unwrap();
        assert_eq!(t.entries.len(), 2);
        assert_eq!(t.signed_dimension(fs.frame()), BigInt::from(0));
        assert_eq!(euler_characteristic(fs.frame(), &m), BigInt::from(0));
        let trivial = multiset([vec![0, 0]]);
        assert_eq!(euler_characteristic(fs.frame(), &trivial), BigInt::from(1));
    }
}
