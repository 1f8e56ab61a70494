//! Borel–Weil–Bott on partial flag varieties `G/P`.
//!
//! A [`FlagSpace`] is a [`WeylFrame`] for `G` together with the simple roots
//! kept in the Levi factor of `P`. Classical spaces (projective spaces,
//! Grassmannians, partial flags, isotropic Grassmannians and products of
//! these) use doubled ε-coordinates; the graded-E7 code builds flag spaces
//! of `G_0` directly on E7 Dynkin labels.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{add, sub, WeylFrame};

#[derive(Clone, Debug)]
pub struct FlagSpace {
    frame: WeylFrame,
    levi: WeylFrame,
    levi_positions: Vec<usize>,
    name: String,
}

/// Outcome of Bott's algorithm for one irreducible homogeneous bundle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BottResult {
    /// `λ + ρ` is singular: all cohomology vanishes.
    Zero,
    /// Cohomology is `V(highest)` in the given degree only.
    Cohomology { degree: usize, highest: Vec<i64> },
}

impl BottResult {
    pub fn is_zero(&self) -> bool {
        matches!(self, BottResult::Zero)
    }
}

fn gl_simple(n: usize, width: usize, offset: usize) -> Vec<Vec<i64>> {
    (0..n.saturating_sub(1))
        .map(|i| {
            let mut r = vec![0; width];
            r[offset + i] = 2;
            r[offset + i + 1] = -2;
            r
        })
        .collect()
}

fn d_simple(n: usize, width: usize, offset: usize) -> Vec<Vec<i64>> {
    let mut s = gl_simple(n, width, offset);
    let mut r = vec![0; width];
    r[offset + n - 2] = 2;
    r[offset + n - 1] = 2;
    s.push(r);
    s
}

impl FlagSpace {
    /// `G/P` where `P` has Levi spanned by the frame's simple roots at
    /// `levi_positions`.
    pub fn new(frame: WeylFrame, levi_positions: &[usize], name: impl Into<String>) -> Result<FlagSpace> {
        if let Some(&bad) = levi_positions.iter().find(|&&p| p >= frame.rank()) {
            return Err(Error::FlagSpace(format!("Levi position {bad} out of range")));
        }
        let mut pos = levi_positions.to_vec();
        pos.sort_unstable();
        pos.dedup();
        let levi = frame.sub(&pos);
        Ok(FlagSpace { frame, levi, levi_positions: pos, name: name.into() })
    }

    /// `Flag(b₁, b₁+b₂, …; Cⁿ)` for GL(n), `n = Σ blocks`.
    pub fn flag(blocks: &[usize]) -> Result<FlagSpace> {
        if blocks.is_empty() || blocks.contains(&0) {
            return Err(Error::FlagSpace(format!("bad block sizes {blocks:?}")));
        }
        let n: usize = blocks.iter().sum();
        let frame = WeylFrame::epsilon_with_dim(gl_simple(n, n, 0), n);
        let levi = levi_from_blocks(blocks);
        let name = if blocks.len() == 2 {
            format!("Grass({},{})", blocks[0], n)
        } else {
            let mut acc = 0;
            let dims: Vec<String> = blocks[..blocks.len() - 1]
                .iter()
                .map(|b| {
                    acc += b;
                    acc.to_string()
                })
                .collect();
            format!("Flag({};{})", dims.join(","), n)
        };
        FlagSpace::new(frame, &levi, name)
    }

    /// Grassmannian of `k`-planes in `Cⁿ`, blocks `(k, n−k)`.
    pub fn grassmannian(k: usize, n: usize) -> Result<FlagSpace> {
        if k == 0 || k >= n {
            return Err(Error::FlagSpace(format!("Grass({k},{n})")));
        }
        FlagSpace::flag(&[k, n - k])
    }

    /// `Pⁿ = Grass(1, n+1)`.
    pub fn projective(n: usize) -> Result<FlagSpace> {
        let mut fs = FlagSpace::grassmannian(1, n + 1)?;
        fs.name = format!("P{n}");
        Ok(fs)
    }

    /// Isotropic Grassmannian of `k`-planes in `C^{2n}` for Spin(2n),
    /// `1 ≤ k ≤ n−2` or `k = n` (one family of maximal isotropic spaces).
    pub fn isotropic_grassmannian(k: usize, n: usize) -> Result<FlagSpace> {
        if n < 3 || k == 0 || k == n - 1 || k > n {
            return Err(Error::FlagSpace(format!("IGrass({k},{})", 2 * n)));
        }
        let frame = WeylFrame::epsilon(d_simple(n, n, 0));
        let levi: Vec<usize> = (0..n).filter(|&i| i != k - 1).collect();
        FlagSpace::new(frame, &levi, format!("IGrass({k},{})", 2 * n))
    }

    /// Product of classical flag spaces in concatenated coordinates.
    pub fn product(factors: &[FlagSpace]) -> Result<FlagSpace> {
        if factors.is_empty() {
            return Err(Error::FlagSpace("empty product".into()));
        }
        let width: usize = factors.iter().map(|f| f.frame.dim()).sum();
        let mut simple = Vec::new();
        let mut levi = Vec::new();
        let mut offset = 0;
        for f in factors {
            let base = simple.len();
            for r in f.frame.simple_roots() {
                let mut v = vec![0; width];
                v[offset..offset + r.len()].copy_from_slice(r);
                simple.push(v);
            }
            levi.extend(f.levi_positions.iter().map(|p| p + base));
            offset += f.frame.dim();
        }
        let name = factors.iter().map(|f| f.name.as_str()).collect::<Vec<_>>().join("×");
        FlagSpace::new(WeylFrame::epsilon_with_dim(simple, width), &levi, name)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn frame(&self) -> &WeylFrame {
        &self.frame
    }

    pub fn levi(&self) -> &WeylFrame {
        &self.levi
    }

    pub fn levi_positions(&self) -> &[usize] {
        &self.levi_positions
    }

    pub fn dim(&self) -> usize {
        self.frame.positive_roots().len() - self.levi.positive_roots().len()
    }

    /// Positive roots of `G` outside the Levi (the weights of `T*(G/P)` at
    /// the base point).
    pub fn radical_roots(&self) -> Vec<Vec<i64>> {
        let levi: std::collections::HashSet<&Vec<i64>> = self.levi.positive_roots().iter().collect();
        self.frame.positive_roots().iter().filter(|r| !levi.contains(r)).cloned().collect()
    }

    /// Weight of the canonical line bundle.
    pub fn canonical_weight(&self) -> Vec<i64> {
        let mut k = vec![0; self.frame.dim()];
        for r in self.radical_roots() {
            k = sub(&k, &r);
        }
        k
    }

    /// Highest weight of the dual of the irreducible `P`-module `V_L(λ)`.
    pub fn levi_dual(&self, lambda: &[i64]) -> Vec<i64> {
        let neg: Vec<i64> = lambda.iter().map(|x| -x).collect();
        self.levi.to_dominant(&neg).0
    }
}

/// Levi positions for GL block sizes: every simple root inside a block.
fn levi_from_blocks(blocks: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut start = 0;
    for &b in blocks {
        out.extend(start..start + b - 1);
        start += b;
    }
    out
}

/// Cohomology of the irreducible homogeneous bundle attached to the
/// `P`-dominant weight `lambda`.
pub fn bott(fs: &FlagSpace, lambda: &[i64]) -> Result<BottResult> {
    if lambda.len() != fs.frame.dim() {
        return Err(Error::Dimension(lambda.len(), fs.frame.dim()));
    }
    if !fs.levi.is_dominant(lambda) {
        return Err(Error::NotDominant(format!("{lambda:?}")));
    }
    Ok(dotted(&fs.frame, lambda))
}

/// The dotted action `λ ↦ w(λ+ρ) − ρ` to the dominant chamber.
pub fn dotted(frame: &WeylFrame, lambda: &[i64]) -> BottResult {
    let shifted = add(lambda, frame.rho());
    let (dom, len) = frame.to_dominant(&shifted);
    if (0..frame.rank()).any(|i| frame.pairing(&dom, i) == 0) {
        return BottResult::Zero;
    }
    BottResult::Cohomology { degree: len, highest: sub(&dom, frame.rho()) }
}

/// Signed dimension `Σ (−1)^deg dim` of a Bott result.
pub fn signed_dimension(frame: &WeylFrame, r: &BottResult) -> BigInt {
    match r {
        BottResult::Zero => BigInt::zero(),
        BottResult::Cohomology { degree, highest } => {
            let d = frame.weyl_dimension(highest);
            if degree % 2 == 0 {
                d
            } else {
                -d
            }
        }
    }
}

/// `χ(Pⁿ, O(d))` through Bott, paired with the closed form `C(n+d, n)`
/// (valid for `d ≥ −n`).
pub fn projective_euler_check(n: usize, d: i64) -> Result<(BigInt, BigInt)> {
    let fs = FlagSpace::projective(n)?;
    let mut lambda = vec![0; n + 1];
    lambda[0] = 2 * d;
    let chi = signed_dimension(fs.frame(), &bott(&fs, &lambda)?);
    let closed = if d >= -(n as i64) {
        binomial(n as i64 + d, n as i64)
    } else {
        // Serre duality: χ(O(d)) = (−1)ⁿ χ(O(−n−1−d))
        let b = binomial(-d - 1, n as i64);
        if n.is_multiple_of(2) {
            b
        } else {
            -b
        }
    };
    Ok((chi, closed))
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    let mut r = BigInt::from(1);
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn triv(d: &BottResult) -> bool {
        matches!(d, BottResult::Cohomology { highest, .. } if highest.windows(2).all(|w| w[0] == w[1]))
    }

    #[test]
    fn p1_cases() {
        let fs = FlagSpace::projective(1).unwrap();
        let r = bott(&fs, &[0, 0]).unwrap();
        assert!(triv(&r) && matches!(r, BottResult::Cohomology { degree: 0, .. }));
        assert_eq!(bott(&fs, &[-2, 0]).unwrap(), BottResult::Zero);
        let r = bott(&fs, &[-4, 0]).unwrap();
        assert!(triv(&r) && matches!(r, BottResult::Cohomology { degree: 1, .. }));
    }

    #[test]
    fn projective_closed_forms() {
        assert_eq!(projective_euler_check(2, 3).unwrap().0, BigInt::from(10));
        assert_eq!(projective_euler_check(2, -1).unwrap().0, BigInt::from(0));
        assert_eq!(projective_euler_check(5, 2).unwrap().0, BigInt::from(21));
        for n in 1..6 {
            for d in -12..8 {
                let (a, b) = projective_euler_check(n, d).unwrap();
                assert_eq!(a, b, "P{n} O({d})");
            }
        }
    }

    #[test]
    fn dominant_is_fixed() {
        let fs = FlagSpace::flag(&[2, 2, 3]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let mut w: Vec<i64> = (0..7).map(|_| rng.gen_range(-4..5)).collect();
            w.sort_unstable_by(|a, b| b.cmp(a));
            let w: Vec<i64> = w.iter().map(|x| 2 * x).collect();
            assert_eq!(bott(&fs, &w).unwrap(), BottResult::Cohomology { degree: 0, highest: w });
        }
    }

    #[test]
    fn serre_duality_on_projective_spaces() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 2..6 {
            let fs = FlagSpace::grassmannian(1, n).unwrap();
            let kappa = fs.canonical_weight();
            for _ in 0..50 {
                let a = rng.gen_range(-8..8);
                let mut rest: Vec<i64> = (1..n).map(|_| rng.gen_range(-4..4)).collect();
                rest.sort_unstable_by(|a, b| b.cmp(a));
                let mut w = vec![2 * a];
                w.extend(rest.iter().map(|x| 2 * x));
                let dual = add(&fs.levi_dual(&w), &kappa);
                match (bott(&fs, &w).unwrap(), bott(&fs, &dual).unwrap()) {
                    (BottResult::Zero, BottResult::Zero) => {}
                    (BottResult::Cohomology { degree: d1, .. }, BottResult::Cohomology { degree: d2, .. }) => {
                        assert_eq!(d1 + d2, fs.dim())
                    }
                    other => panic!("Serre duality fails: {other:?}"),
                }
            }
        }
    }

    #[test]
    fn bad_inputs() {
        let fs = FlagSpace::grassmannian(2, 4).unwrap();
        assert!(matches!(bott(&fs, &[0, 2, 0, 0]), Err(Error::NotDominant(_))));
        assert!(bott(&fs, &[0, 0, 0]).is_err());
        assert!(FlagSpace::grassmannian(0, 3).is_err());
        assert!(FlagSpace::isotropic_grassmannian(4, 5).is_err());
        assert_eq!(FlagSpace::isotropic_grassmannian(5, 5).unwrap().dim(), 10);
        assert_eq!(FlagSpace::isotropic_grassmannian(1, 5).unwrap().dim(), 8);
        let fs = FlagSpace::product(&[FlagSpace::projective(1).unwrap(), FlagSpace::flag(&[2, 2, 2]).unwrap()])
            .unwrap();
        assert_eq!(fs.dim(), 1 + 8 + 4);
    }

    /// Evaluate `t^w` for a doubled GL weight at an integer torus point.
    fn mono(t: &[i64], w: &[i64]) -> BigRational {
        let mut r = BigRational::from_integer(1.into());
        for (ti, wi) in t.iter().zip(w) {
            let e = wi / 2;
            let b = BigRational::from_integer((*ti).into());
            let p = if e >= 0 { num_traits::pow(b, e as usize) } else { num_traits::pow(b.recip(), (-e) as usize) };
            r *= p;
        }
        r
    }

    fn char_value(frame: &WeylFrame, lambda: &[i64], t: &[i64]) -> BigRational {
        frame
            .character(lambda)
            .iter()
            .map(|(w, m)| mono(t, w) * BigRational::from_integer((*m).into()))
            .sum()
    }

    #[test]
    fn fixed_point_oracle_on_grass_2_4() {
        let fs = FlagSpace::grassmannian(2, 4).unwrap();
        let t = [2i64, 3, 5, 7];
        let one = BigRational::from_integer(1.into());
        // minimal coset representatives of W/W_L act by permuting coordinates
        let perms: Vec<[usize; 4]> =
            vec![[0, 1, 2, 3], [0, 2, 1, 3], [0, 3, 1, 2], [1, 2, 0, 3], [1, 3, 0, 2], [2, 3, 0, 1]];
        let radical = fs.radical_roots();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..500 {
            let mut a = [rng.gen_range(-3..4), rng.gen_range(-3..4)];
            let mut b = [rng.gen_range(-3..4), rng.gen_range(-3..4)];
            a.sort_unstable_by(|x, y| y.cmp(x));
            b.sort_unstable_by(|x, y| y.cmp(x));
            let lambda = vec![2 * a[0], 2 * a[1], 2 * b[0], 2 * b[1]];
            let lhs = match bott(&fs, &lambda).unwrap() {
                BottResult::Zero => BigRational::zero(),
                BottResult::Cohomology { degree, highest } => {
                    let v = char_value(fs.frame(), &highest, &t);
                    if degree % 2 == 0 {
                        v
                    } else {
                        -v
                    }
                }
            };
            let mut rhs = BigRational::zero();
            for p in &perms {
                let tp: Vec<i64> = p.iter().map(|&i| t[i]).collect();
                let mut term = char_value(fs.levi(), &lambda, &tp);
                for r in &radical {
                    term /= (&one - mono(&tp, &r.iter().map(|x| -x).collect::<Vec<_>>()));
                }
                rhs += term;
            }
            assert_eq!(lhs, rhs, "λ = {lambda:?}");
        }
    }
}
