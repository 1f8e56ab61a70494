//! Root systems, Weyl group actions and irreducible characters.
//!
//! Two coordinate models are used throughout:
//!
//! * [`Basis::Epsilon`]: the classical ε-model, with every coordinate stored
//!   doubled so half-spinor weights such as `(½,…,½)` stay integral.
//! * [`Basis::Dynkin`]: coordinates with respect to fundamental weights.
//!
//! All representation-theoretic algorithms run on a [`WeylFrame`], which
//! packages a set of simple roots in some coordinate model together with
//! the coroot pairing and an invariant form. A frame may describe a whole
//! root system or only a Levi subsystem embedded in a bigger one.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;

/// Cartan type of an irreducible simply-laced root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DiagramType {
    A(usize),
    D(usize),
    E6,
    E7,
}

impl DiagramType {
    pub fn rank(self) -> usize {
        match self {
            DiagramType::A(n) | DiagramType::D(n) => n,
            DiagramType::E6 => 6,
            DiagramType::E7 => 7,
        }
    }

    pub fn positive_root_count(self) -> usize {
        match self {
            DiagramType::A(n) => n * (n + 1) / 2,
            DiagramType::D(n) => n * (n - 1),
            DiagramType::E6 => 36,
            DiagramType::E7 => 63,
        }
    }
}

impl fmt::Display for DiagramType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramType::A(n) => write!(f, "A{n}"),
            DiagramType::D(n) => write!(f, "D{n}"),
            DiagramType::E6 => write!(f, "E6"),
            DiagramType::E7 => write!(f, "E7"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    /// Doubled ε-coordinates.
    Epsilon,
    /// Fundamental-weight coordinates.
    Dynkin,
}

/// An exact weight vector tagged with its coordinate model.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight {
    pub coords: Vec<i64>,
    pub basis: Basis,
}

impl Weight {
    pub fn new(coords: Vec<i64>, basis: Basis) -> Self {
        Weight { coords, basis }
    }

    pub fn dynkin(coords: Vec<i64>) -> Self {
        Weight::new(coords, Basis::Dynkin)
    }

    /// Build from actual (undoubled) ε-coordinates.
    pub fn epsilon(actual: &[i64]) -> Self {
        Weight::new(actual.iter().map(|x| 2 * x).collect(), Basis::Epsilon)
    }

    fn check(&self, other: &Weight) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch(self.basis, other.basis));
        }
        if self.coords.len() != other.coords.len() {
            return Err(Error::Dimension(self.coords.len(), other.coords.len()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Weight) -> Result<Weight> {
        self.check(other)?;
        Ok(Weight::new(add(&self.coords, &other.coords), self.basis))
    }

    pub fn try_sub(&self, other: &Weight) -> Result<Weight> {
        self.check(other)?;
        Ok(Weight::new(sub(&self.coords, &other.coords), self.basis))
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight::new(self.coords.iter().map(|x| k * x).collect(), self.basis)
    }

    /// Raw dot product of the stored coordinates.
    pub fn try_dot(&self, other: &Weight) -> Result<i64> {
        self.check(other)?;
        Ok(dot(&self.coords, &other.coords))
    }
}

pub fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn axpy(k: i64, x: &[i64], y: &[i64]) -> Vec<i64> {
    y.iter().zip(x).map(|(b, a)| b + k * a).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum FrameMode {
    /// Doubled ε-coordinates; pairing is `dot(w, α)/4`.
    Epsilon,
    /// Dynkin labels of a host system; pairing is the label itself.
    Dynkin,
}

/// Simple roots plus enough structure to act by the Weyl group, run
/// Freudenthal's formula and evaluate Weyl's dimension formula.
#[derive(Clone, Debug)]
pub struct WeylFrame {
    mode: FrameMode,
    dim: usize,
    /// Index of each simple root in the host system (identity for full frames).
    host_index: Vec<usize>,
    simple: Vec<Vec<i64>>,
    coroot: Vec<Vec<i64>>,
    den: i64,
    gram: Vec<Vec<i64>>,
    positive: Vec<Vec<i64>>,
    rho: Vec<i64>,
}

impl WeylFrame {
    /// Frame in doubled ε-coordinates spanned by the given simple roots.
    pub fn epsilon(simple: Vec<Vec<i64>>) -> WeylFrame {
        let dim = simple.first().map_or(0, |r| r.len());
        WeylFrame::epsilon_with_dim(simple, dim)
    }

    /// Like [`WeylFrame::epsilon`], with the ambient dimension given
    /// explicitly so that rank-0 frames (tori) are allowed.
    pub fn epsilon_with_dim(simple: Vec<Vec<i64>>, dim: usize) -> WeylFrame {
        let n = simple.len();
        let mut f = WeylFrame {
            mode: FrameMode::Epsilon,
            dim,
            host_index: (0..n).collect(),
            coroot: simple.clone(),
            simple,
            den: 4,
            gram: (0..dim)
                .map(|i| (0..dim).map(|j| i64::from(i == j)).collect())
                .collect(),
            positive: Vec::new(),
            rho: vec![0; dim],
        };
        f.finish();
        f
    }

    /// Frame in the Dynkin coordinates of a host with Cartan matrix
    /// `cartan`, restricted to the simple roots listed in `subset`.
    pub fn dynkin(cartan: &[Vec<i64>], subset: &[usize]) -> WeylFrame {
        let dim = cartan.len();
        let inv = linalg::inverse(cartan).expect("Cartan matrix is invertible");
        let det = linalg::determinant(cartan).abs();
        let gram = inv
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| (x * BigRational::from_integer(det.clone())).to_integer().to_i64().unwrap())
                    .collect()
            })
            .collect();
        let simple = subset.iter().map(|&i| cartan[i].clone()).collect();
        let coroot = subset
            .iter()
            .map(|&i| (0..dim).map(|j| i64::from(i == j)).collect())
            .collect();
        let mut f = WeylFrame {
            mode: FrameMode::Dynkin,
            dim,
            host_index: subset.to_vec(),
            simple,
            coroot,
            den: 1,
            gram,
            positive: Vec::new(),
            rho: vec![0; dim],
        };
        f.finish();
        f
    }

    /// The subframe on a subset of this frame's simple roots (given as
    /// positions in `self.simple`).
    pub fn sub(&self, positions: &[usize]) -> WeylFrame {
        let mut f = WeylFrame {
            mode: self.mode,
            dim: self.dim,
            host_index: positions.iter().map(|&p| self.host_index[p]).collect(),
            simple: positions.iter().map(|&p| self.simple[p].clone()).collect(),
            coroot: positions.iter().map(|&p| self.coroot[p].clone()).collect(),
            den: self.den,
            gram: self.gram.clone(),
            positive: Vec::new(),
            rho: vec![0; self.dim],
        };
        f.finish();
        f
    }

    fn finish(&mut self) {
        self.positive = generate_positive_roots(self);
        self.rho = match self.mode {
            FrameMode::Dynkin => {
                let mut r = vec![0; self.dim];
                for c in &self.coroot {
                    for (x, y) in r.iter_mut().zip(c) {
                        *x += y;
                    }
                }
                r
            }
            FrameMode::Epsilon => {
                let mut s = vec![0; self.dim];
                for b in &self.positive {
                    s = add(&s, b);
                }
                s.iter().map(|x| x / 2).collect()
            }
        };
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    pub fn rho(&self) -> &[i64] {
        &self.rho
    }

    pub fn host_index(&self) -> &[usize] {
        &self.host_index
    }

    /// `⟨w, α_i^∨⟩` for the `i`-th simple root of the frame.
    pub fn pairing(&self, w: &[i64], i: usize) -> i64 {
        let d = dot(w, &self.coroot[i]);
        debug_assert_eq!(d % self.den, 0, "non-integral pairing");
        d / self.den
    }

    /// Pairing with the coroot of an arbitrary root `beta` of the frame.
    pub fn root_pairing(&self, w: &[i64], beta: &[i64]) -> i64 {
        let num = 2 * self.form(w, beta);
        let den = self.form(beta, beta);
        num / den
    }

    /// Invariant form, scaled by a frame-dependent positive constant.
    pub fn form(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                s += x * self.gram[i][j] * y;
            }
        }
        s
    }

    pub fn reflect(&self, w: &[i64], i: usize) -> Vec<i64> {
        let p = self.pairing(w, i);
        axpy(-p, &self.simple[i], w)
    }

    pub fn is_dominant(&self, w: &[i64]) -> bool {
        (0..self.rank()).all(|i| self.pairing(w, i) >= 0)
    }

    /// Move `w` to the dominant chamber; returns the dominant representative
    /// and the number of simple reflections used (the length of the element).
    pub fn to_dominant(&self, w: &[i64]) -> (Vec<i64>, usize) {
        let mut v = w.to_vec();
        let mut len = 0;
        while let Some(i) = (0..self.rank()).find(|&i| self.pairing(&v, i) < 0) {
            v = self.reflect(&v, i);
            len += 1;
        }
        (v, len)
    }

    /// Weyl dimension formula.
    pub fn weyl_dimension(&self, lambda: &[i64]) -> BigInt {
        let lr = add(lambda, &self.rho);
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for b in &self.positive {
            num *= BigInt::from(self.form(&lr, b));
            den *= BigInt::from(self.form(&self.rho, b));
        }
        num / den
    }

    /// Weight multiplicities of the irreducible module with highest weight
    /// `lambda`, by Freudenthal's recursion. `lambda` must be dominant.
    pub fn character(&self, lambda: &[i64]) -> HashMap<Vec<i64>, i64> {
        let lr = add(lambda, &self.rho);
        let top = self.form(&lr, &lr);
        let mut mult: HashMap<Vec<i64>, i64> = HashMap::new();
        mult.insert(lambda.to_vec(), 1);
        let mut layer = vec![lambda.to_vec()];
        while !layer.is_empty() {
            let mut cand: Vec<Vec<i64>> = Vec::new();
            let mut seen = HashSet::new();
            for w in &layer {
                for a in &self.simple {
                    let mu = sub(w, a);
                    if !mult.contains_key(&mu) && seen.insert(mu.clone()) {
                        cand.push(mu);
                    }
                }
            }
            let mut next = Vec::new();
            for mu in cand {
                let mr = add(&mu, &self.rho);
                let denom = top - self.form(&mr, &mr);
                if denom <= 0 {
                    continue;
                }
                let mut s = 0i64;
                for b in &self.positive {
                    let mut k = 1;
                    loop {
                        let nu = axpy(k, b, &mu);
                        match mult.get(&nu) {
                            Some(&m) => s += m * self.form(&nu, b),
                            None => break,
                        }
                        k += 1;
                    }
                }
                let m = 2 * s;
                debug_assert_eq!(m % denom, 0, "Freudenthal recursion not integral");
                let m = m / denom;
                if m > 0 {
                    mult.insert(mu.clone(), m);
                    next.push(mu);
                }
            }
            layer = next;
        }
        mult
    }
}

/// Closure of the simple roots under root strings.
fn generate_positive_roots(frame: &WeylFrame) -> Vec<Vec<i64>> {
    let n = frame.simple.len();
    // simple-root coordinates alongside frame coordinates
    let mut all: Vec<(Vec<i64>, Vec<i64>)> = (0..n)
        .map(|i| {
            let mut c = vec![0; n];
            c[i] = 1;
            (c, frame.simple[i].clone())
        })
        .collect();
    let mut known: HashSet<Vec<i64>> = all.iter().map(|(c, _)| c.clone()).collect();
    let mut layer: Vec<usize> = (0..n).collect();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for &idx in &layer {
            let (coef, vec) = all[idx].clone();
            for i in 0..n {
                // length of the i-string below
                let mut p = 0;
                let mut c = coef.clone();
                loop {
                    c[i] -= 1;
                    if known.contains(&c) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - frame.pairing(&vec, i);
                if q > 0 {
                    let mut c2 = coef.clone();
                    c2[i] += 1;
                    if known.insert(c2.clone()) {
                        all.push((c2, add(&vec, &frame.simple[i])));
                        next.push(all.len() - 1);
                    }
                }
            }
        }
        layer = next;
    }
    all.sort_by(|a, b| {
        let ha: i64 = a.0.iter().sum();
        let hb: i64 = b.0.iter().sum();
        ha.cmp(&hb).then_with(|| b.0.cmp(&a.0))
    });
    all.into_iter().map(|(_, v)| v).collect()
}

/// An irreducible root system in its ε-model.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub diagram: DiagramType,
    pub cartan: Vec<Vec<i64>>,
    /// Simple roots, doubled ε-coordinates.
    pub simple_roots: Vec<Weight>,
    /// Positive roots, doubled ε-coordinates, graded-lex order.
    pub positive_roots: Vec<Weight>,
    /// Positive roots in simple-root coordinates (same order).
    pub positive_root_coeffs: Vec<Vec<i64>>,
    /// ρ in doubled ε-coordinates.
    pub rho: Weight,
    /// Fundamental weights as Dynkin unit vectors.
    pub fundamental_weights: Vec<Weight>,
    eps: WeylFrame,
    dynkin: WeylFrame,
}

/// Bourbaki simple roots of E8 (doubled ε-coordinates), of which E6 and E7
/// use the first six and seven.
fn e8_simple_roots() -> Vec<Vec<i64>> {
    vec![
        vec![1, -1, -1, -1, -1, -1, -1, 1],
        vec![2, 2, 0, 0, 0, 0, 0, 0],
        vec![-2, 2, 0, 0, 0, 0, 0, 0],
        vec![0, -2, 2, 0, 0, 0, 0, 0],
        vec![0, 0, -2, 2, 0, 0, 0, 0],
        vec![0, 0, 0, -2, 2, 0, 0, 0],
        vec![0, 0, 0, 0, -2, 2, 0, 0],
    ]
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    (0..n).map(|j| 2 * i64::from(i == j)).collect()
}

/// Build a root system of the given type in a fixed ε-model.
pub fn build_root_system(diagram: DiagramType) -> Result<RootSystem> {
    let simple: Vec<Vec<i64>> = match diagram {
        DiagramType::A(n) if n >= 1 => (0..n)
            .map(|i| sub(&unit(n + 1, i), &unit(n + 1, i + 1)))
            .collect(),
        DiagramType::D(n) if n >= 3 => {
            let mut s: Vec<Vec<i64>> = (0..n - 1)
                .map(|i| sub(&unit(n, i), &unit(n, i + 1)))
                .collect();
            s.push(add(&unit(n, n - 2), &unit(n, n - 1)));
            s
        }
        DiagramType::E6 => e8_simple_roots()[..6].to_vec(),
        DiagramType::E7 => e8_simple_roots(),
        other => return Err(Error::UnsupportedDiagram(other.to_string())),
    };
    let eps = WeylFrame::epsilon(simple.clone());
    let n = simple.len();
    let cartan: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| eps.pairing(&simple[i], j)).collect())
        .collect();
    let dynkin = WeylFrame::dynkin(&cartan, &(0..n).collect::<Vec<_>>());
    let positive: Vec<Weight> = eps
        .positive_roots()
        .iter()
        .map(|r| Weight::new(r.clone(), Basis::Epsilon))
        .collect();
    let coeffs = positive
        .iter()
        .map(|r| simple_root_coefficients(&cartan, &eps, &r.coords))
        .collect();
    Ok(RootSystem {
        diagram,
        rho: Weight::new(eps.rho().to_vec(), Basis::Epsilon),
        simple_roots: simple.into_iter().map(|r| Weight::new(r, Basis::Epsilon)).collect(),
        positive_roots: positive,
        positive_root_coeffs: coeffs,
        fundamental_weights: (0..n)
            .map(|i| Weight::dynkin((0..n).map(|j| i64::from(i == j)).collect()))
            .collect(),
        cartan,
        eps,
        dynkin,
    })
}

/// Coefficients of an ε-vector in the simple-root basis (exact; panics if
/// the vector is not in the root lattice).
fn simple_root_coefficients(cartan: &[Vec<i64>], eps: &WeylFrame, v: &[i64]) -> Vec<i64> {
    let n = cartan.len();
    let labels: Vec<i64> = (0..n).map(|i| eps.pairing(v, i)).collect();
    // labels = C^T c  with C[i][j] = <α_i, α_j^∨>
    let ct: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| cartan[j][i]).collect()).collect();
    let inv = linalg::inverse(&ct).expect("invertible");
    inv.iter()
        .map(|row| {
            let s: BigRational = row
                .iter()
                .zip(&labels)
                .map(|(a, &b)| a * BigRational::from_integer(b.into()))
                .sum();
            assert!(s.is_integer(), "not in the root lattice");
            s.to_integer().to_i64().unwrap()
        })
        .collect()
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn epsilon_frame(&self) -> &WeylFrame {
        &self.eps
    }

    pub fn dynkin_frame(&self) -> &WeylFrame {
        &self.dynkin
    }

    /// Dynkin labels of a weight given in either basis.
    pub fn to_dynkin(&self, w: &Weight) -> Result<Weight> {
        match w.basis {
            Basis::Dynkin => {
                if w.coords.len() != self.rank() {
                    return Err(Error::Dimension(w.coords.len(), self.rank()));
                }
                Ok(w.clone())
            }
            Basis::Epsilon => {
                if w.coords.len() != self.eps.dim() {
                    return Err(Error::Dimension(w.coords.len(), self.eps.dim()));
                }
                Ok(Weight::dynkin(
                    (0..self.rank()).map(|i| self.eps.pairing(&w.coords, i)).collect(),
                ))
            }
        }
    }

    /// Doubled ε-coordinates of a weight. Type A uses the GL convention
    /// `ω_i = ε_1+…+ε_i`; other types use the element of the root span.
    pub fn to_epsilon(&self, w: &Weight) -> Result<Weight> {
        if w.basis == Basis::Epsilon {
            return Ok(w.clone());
        }
        let n = self.rank();
        let dim = self.eps.dim();
        let mut acc = vec![BigRational::zero(); dim];
        for (i, &k) in w.coords.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let f = self.fundamental_epsilon(i);
            for (a, b) in acc.iter_mut().zip(f) {
                *a += b * BigRational::from_integer(k.into());
            }
        }
        let _ = n;
        let coords = acc
            .iter()
            .map(|x| {
                if x.is_integer() {
                    Ok(x.to_integer().to_i64().unwrap())
                } else {
                    Err(Error::NonIntegral)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Weight::new(coords, Basis::Epsilon))
    }

    /// Doubled ε-coordinates of ω_i as rationals.
    fn fundamental_epsilon(&self, i: usize) -> Vec<BigRational> {
        let dim = self.eps.dim();
        let q = |x: i64| BigRational::from_integer(x.into());
        match self.diagram {
            DiagramType::A(_) => (0..dim).map(|j| q(if j <= i { 2 } else { 0 })).collect(),
            DiagramType::D(n) => {
                if i < n - 2 {
                    (0..dim).map(|j| q(if j <= i { 2 } else { 0 })).collect()
                } else if i == n - 2 {
                    (0..dim).map(|j| q(if j == n - 1 { -1 } else { 1 })).collect()
                } else {
                    (0..dim).map(|_| q(1)).collect()
                }
            }
            DiagramType::E6 | DiagramType::E7 => {
                let n = self.rank();
                let inv = linalg::inverse(&self.cartan).expect("invertible");
                // ω_i = Σ_j (C^{-1})_{ij} α_j for symmetric C
                let mut acc = vec![BigRational::zero(); dim];
                for j in 0..n {
                    for (a, &b) in acc.iter_mut().zip(&self.simple_roots[j].coords) {
                        *a += &inv[i][j] * q(b);
                    }
                }
                acc
            }
        }
    }

    fn dominant_dynkin(&self, lambda: &Weight) -> Result<Vec<i64>> {
        let d = self.to_dynkin(lambda)?;
        if d.coords.iter().any(|&x| x < 0) {
            return Err(Error::NotDominant(format!("{:?}", d.coords)));
        }
        Ok(d.coords)
    }

    pub fn weyl_dimension(&self, lambda: &Weight) -> Result<BigInt> {
        let d = self.dominant_dynkin(lambda)?;
        Ok(self.dynkin.weyl_dimension(&d))
    }

    /// Weight multiplicities in Dynkin coordinates, ordered.
    pub fn freudenthal_character(&self, lambda: &Weight) -> Result<BTreeMap<Vec<i64>, i64>> {
        let d = self.dominant_dynkin(lambda)?;
        Ok(self.dynkin.character(&d).into_iter().collect())
    }

    /// Simple reflection `s_i` (1-based index, as in the usual node labels).
    pub fn reflect(&self, w: &Weight, i: usize) -> Result<Weight> {
        if i == 0 || i > self.rank() {
            return Err(Error::IndexOutOfRange(i, self.rank()));
        }
        let frame = match w.basis {
            Basis::Epsilon => &self.eps,
            Basis::Dynkin => &self.dynkin,
        };
        if w.coords.len() != frame.dim() {
            return Err(Error::Dimension(w.coords.len(), frame.dim()));
        }
        Ok(Weight::new(frame.reflect(&w.coords, i - 1), w.basis))
    }

    pub fn is_dominant(&self, w: &Weight) -> Result<bool> {
        Ok(self.to_dynkin(w)?.coords.iter().all(|&x| x >= 0))
    }

    /// Invariant form on doubled ε-coordinates, normalized so roots have
    /// square length 2.
    pub fn scalar_product(&self, a: &Weight, b: &Weight) -> Result<BigRational> {
        let d = a.try_dot(b)?;
        if a.basis != Basis::Epsilon {
            return Err(Error::BasisMismatch(a.basis, Basis::Epsilon));
        }
        Ok(BigRational::new(d.into(), 4.into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        for t in [
            DiagramType::A(1),
            DiagramType::A(6),
            DiagramType::D(4),
            DiagramType::D(6),
            DiagramType::E6,
            DiagramType::E7,
        ] {
            let rs = build_root_system(t).unwrap();
            assert_eq!(rs.positive_roots.len(), t.positive_root_count(), "{t}");
            assert_eq!(rs.rank(), t.rank());
        }
    }

    #[test]
    fn unsupported() {
        assert!(build_root_system(DiagramType::D(2)).is_err());
        assert!(build_root_system(DiagramType::A(0)).is_err());
    }

    #[test]
    fn cartan_e7_is_bourbaki() {
        let rs = build_root_system(DiagramType::E7).unwrap();
        // α1-α3, α2-α4, α3-α4, α4-α5, α5-α6, α6-α7
        let edges = [(0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6)];
        for i in 0..7 {
            for j in 0..7 {
                let expect = if i == j {
                    2
                } else if edges.contains(&(i.min(j), i.max(j))) {
                    -1
                } else {
                    0
                };
                assert_eq!(rs.cartan[i][j], expect, "({i},{j})");
            }
        }
    }

    #[test]
    fn rho_sums_and_pairings() {
        for t in [DiagramType::A(3), DiagramType::D(5), DiagramType::E6, DiagramType::E7] {
            let rs = build_root_system(t).unwrap();
            let mut s = vec![0; rs.rho.coords.len()];
            for b in &rs.positive_roots {
                s = add(&s, &b.coords);
            }
            assert_eq!(s, rs.rho.scale(2).coords);
            for i in 0..rs.rank() {
                assert_eq!(rs.epsilon_frame().pairing(&rs.rho.coords, i), 1);
            }
            for c in &rs.positive_root_coeffs {
                assert!(c.iter().all(|&x| x >= 0));
            }
        }
    }

    #[test]
    fn weyl_dimension_examples() {
        let d6 = build_root_system(DiagramType::D(6)).unwrap();
        let w5 = Weight::dynkin(vec![0, 0, 0, 0, 0, 1]);
        assert_eq!(d6.weyl_dimension(&w5).unwrap(), 32.into());
        assert_eq!(d6.to_epsilon(&w5).unwrap(), Weight::new(vec![1; 6], Basis::Epsilon));
        let a6 = build_root_system(DiagramType::A(6)).unwrap();
        let w3 = Weight::dynkin(vec![0, 0, 1, 0, 0, 0]);
        assert_eq!(a6.weyl_dimension(&w3).unwrap(), 35.into());
        let e6 = build_root_system(DiagramType::E6).unwrap();
        let w6 = Weight::dynkin(vec![0, 0, 0, 0, 0, 1]);
        assert_eq!(e6.weyl_dimension(&w6).unwrap(), 27.into());
        let e7 = build_root_system(DiagramType::E7).unwrap();
        assert_eq!(
            e7.weyl_dimension(&Weight::dynkin(vec![1, 0, 0, 0, 0, 0, 0])).unwrap(),
            133.into()
        );
        assert_eq!(
            e7.weyl_dimension(&Weight::dynkin(vec![0, 0, 0, 0, 0, 0, 1])).unwrap(),
            56.into()
        );
    }

    #[test]
    fn non_dominant_rejected() {
        let a2 = build_root_system(DiagramType::A(2)).unwrap();
        assert!(a2.weyl_dimension(&Weight::dynkin(vec![-1, 0])).is_err());
        assert!(a2.freudenthal_character(&Weight::dynkin(vec![0, -2])).is_err());
    }

    #[test]
    fn characters() {
        let a1 = build_root_system(DiagramType::A(1)).unwrap();
        for d in 0..6 {
            let ch = a1.freudenthal_character(&Weight::dynkin(vec![d])).unwrap();
            assert_eq!(ch.len() as i64, d + 1);
            assert!(ch.values().all(|&m| m == 1));
        }
        let a2 = build_root_system(DiagramType::A(2)).unwrap();
        let adj = a2.freudenthal_character(&Weight::dynkin(vec![1, 1])).unwrap();
        assert_eq!(adj[&vec![0, 0]], 2);
        assert_eq!(adj.values().sum::<i64>(), 8);

        let d6 = build_root_system(DiagramType::D(6)).unwrap();
        let ch = d6
            .freudenthal_character(&Weight::dynkin(vec![0, 0, 0, 0, 0, 1]))
            .unwrap();
        assert_eq!(ch.len(), 32);
        for (w, m) in &ch {
            assert_eq!(*m, 1);
            let e = d6.to_epsilon(&Weight::dynkin(w.clone())).unwrap();
            assert!(e.coords.iter().all(|x| x.abs() == 1));
            assert_eq!(e.coords.iter().filter(|&&x| x < 0).count() % 2, 0);
        }
    }

    #[test]
    fn reflections() {
        let e7 = build_root_system(DiagramType::E7).unwrap();
        for i in 1..=7 {
            let r = e7.reflect(&e7.rho, i).unwrap();
            assert_eq!(r, e7.rho.try_sub(&e7.simple_roots[i - 1]).unwrap());
            let back = e7.reflect(&r, i).unwrap();
            assert_eq!(back, e7.rho);
        }
        assert!(e7.reflect(&e7.rho, 8).is_err());
        assert!(e7.reflect(&e7.rho, 0).is_err());
        let a1 = build_root_system(DiagramType::A(1)).unwrap();
        let w = Weight::dynkin(vec![3]);
        assert_eq!(a1.reflect(&w, 1).unwrap().coords, vec![-3]);
    }

    #[test]
    fn basis_mismatch_is_error() {
        let a = Weight::dynkin(vec![1, 0]);
        let b = Weight::new(vec![1, 0], Basis::Epsilon);
        assert!(a.try_add(&b).is_err());
    }
}
