//! The geometric technique: an orbit closure `Ō ⊂ g₁` is desingularised by
//! `Z = G₀ ×_P V` for a `P`-stable subspace `V ⊂ g₁`. Syzygies come from
//! `Λ^j ξ` with `ξ = (g₁/V)^*`, and the Hilbert function of the
//! normalisation from `Sym^k V^*`.
//!
//! Weights are handled in the *positive* convention used by the report
//! format: a `P`-module is fed to Bott through the negatives of its genuine
//! weights, so `ξ` is represented by the roots of `g₁ ∖ V` and `V^*` by the
//! roots of `V`, and every module printed is a highest weight read off
//! directly. All weights are E7 Dynkin labels; the flag space lives on the
//! semisimple part of `g₀`.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::bott::{binomial, FlagSpace};
use crate::bundles::{cohomology_table, euler_characteristic, exterior_powers, multiset, symmetric_power, Multiset, VirtualModule};
use crate::grading::{FactorKind, GradedAlgebra, Label};
use crate::orbits::Representative;
use crate::rootsys::{add, WeylFrame};
use crate::{linalg, Error, Result};

/// A desingularisation `G₀ ×_P V → Ō`, normalised so that `P ⊇ B`.
#[derive(Clone, Debug)]
pub struct DesingData {
    pub fs: FlagSpace,
    /// Roots (simple-root coefficients) spanning `V`, sorted.
    pub sub_roots: Vec<Vec<i64>>,
    /// Roots of `g₁` not in `V`, sorted.
    pub quotient_roots: Vec<Vec<i64>>,
    /// E7 Dynkin labels of the roots of `V`.
    sub_labels: Vec<Vec<i64>>,
    quotient_labels: Vec<Vec<i64>>,
}

/// Positions (0-based E7 nodes) other than the grading node.
fn levi_nodes(g: &GradedAlgebra) -> Vec<usize> {
    (0..7).filter(|&i| i != g.node - 1).collect()
}

/// `s_i` acting on a root in simple-root coordinates.
fn reflect_root(g: &GradedAlgebra, r: &[i64], i: usize) -> Vec<i64> {
    let c: i64 = (0..7).map(|j| r[j] * g.rs.cartan[j][i]).sum();
    let mut out = r.to_vec();
    out[i] -= c;
    out
}

impl DesingData {
    /// Build from the roots of a subspace `V ⊂ g₁`. `V` must be stable
    /// under some parabolic of `g₀`; it is conjugated by `W(g₀)` so that the
    /// parabolic contains the standard Borel.
    pub fn from_subspace(g: &GradedAlgebra, roots: &[Vec<i64>]) -> Result<DesingData> {
        let g1: HashSet<Vec<i64>> = g.component(1).iter().cloned().collect();
        let mut v: Vec<Vec<i64>> = roots.to_vec();
        v.sort();
        v.dedup();
        if let Some(bad) = v.iter().find(|r| !g1.contains(*r)) {
            return Err(Error::NoDesingData(format!("{bad:?} is not a root of g_1")));
        }
        let vset: HashSet<Vec<i64>> = v.iter().cloned().collect();
        // Roots of g₀ stabilising V.
        let stab: Vec<&Vec<i64>> = g
            .component(0)
            .iter()
            .filter(|a| v.iter().all(|b| {
                let s = add(a, b);
                !g1.contains(&s) || vset.contains(&s)
            }))
            .collect();
        let stab_set: HashSet<&Vec<i64>> = stab.iter().copied().collect();
        // Sum of the radical roots, in Dynkin labels.
        let mut x = vec![0i64; 7];
        for a in &stab {
            let neg: Vec<i64> = a.iter().map(|t| -t).collect();
            if !stab_set.contains(&neg) {
                x = add(&x, &g.root_dynkin(a));
            }
        }
        let nodes = levi_nodes(g);
        loop {
            let Some(&i) = nodes.iter().find(|&&i| x[i] < 0) else { break };
            let c = x[i];
            for (j, xj) in x.iter_mut().enumerate() {
                *xj -= c * g.rs.cartan[i][j];
            }
            for r in v.iter_mut() {
                *r = reflect_root(g, r, i);
            }
        }
        v.sort();
        let levi: Vec<usize> = nodes.iter().enumerate().filter(|(_, &n)| x[n] == 0).map(|(p, _)| p).collect();
        let frame = WeylFrame::dynkin(&g.rs.cartan, &nodes);
        let fs = FlagSpace::new(frame, &levi, "G0/P")?;
        let d = DesingData::assemble(g, fs, v);
        d.check_borel_stable(g)?;
        Ok(d)
    }

    fn assemble(g: &GradedAlgebra, fs: FlagSpace, sub_roots: Vec<Vec<i64>>) -> DesingData {
        let vset: BTreeSet<&Vec<i64>> = sub_roots.iter().collect();
        let mut quotient_roots: Vec<Vec<i64>> = g.component(1).iter().filter(|r| !vset.contains(r)).cloned().collect();
        quotient_roots.sort();
        let sub_labels = sub_roots.iter().map(|r| g.root_dynkin(r)).collect();
        let quotient_labels = quotient_roots.iter().map(|r| g.root_dynkin(r)).collect();
        DesingData { fs, sub_roots, quotient_roots, sub_labels, quotient_labels }
    }

    fn check_borel_stable(&self, g: &GradedAlgebra) -> Result<()> {
        let vset: HashSet<&Vec<i64>> = self.sub_roots.iter().collect();
        let g1: HashSet<&Vec<i64>> = g.component(1).iter().collect();
        // P is generated by B and the negative Levi simple roots.
        let mut gens: Vec<Vec<i64>> = g.component(0).iter().filter(|a| a.iter().sum::<i64>() > 0).cloned().collect();
        let nodes = levi_nodes(g);
        for &p in self.fs.levi_positions() {
            let mut a = vec![0; 7];
            a[nodes[p]] = -1;
            gens.push(a);
        }
        for a in &gens {
            for b in &self.sub_roots {
                let s = add(a, b);
                if g1.contains(&s) && !vset.contains(&s) {
                    return Err(Error::NoDesingData("subspace is not stable under a parabolic".into()));
                }
            }
        }
        Ok(())
    }

    /// Build from the sl₂-characteristic of a nilpotent representative
    /// whose roots are linearly independent with pairwise products `≤ 0`:
    /// `h = Σ c_j h_{γ_j}` with `⟨γ_i, h⟩ = 2`, conjugated to be dominant
    /// for `g₀`; then `V = g₁(≥ 2)` and `P` is the non-negative part.
    pub fn from_characteristic(g: &GradedAlgebra, rep: &Representative) -> Result<DesingData> {
        if !rep.generic_span.is_empty() {
            return Err(Error::NoDesingData("representative has a generic span".into()));
        }
        let roots: Vec<Vec<i64>> =
            rep.terms.iter().map(|(_, l)| g.root_of_label(l).map(<[i64]>::to_vec)).collect::<Result<_>>()?;
        let h = characteristic(g, &roots)?;
        let nodes = levi_nodes(g);
        let mut h = h;
        loop {
            let Some(&i) = nodes.iter().find(|&&i| h[i] < 0) else { break };
            let c = h[i];
            for (j, hj) in h.iter_mut().enumerate() {
                *hj -= c * g.rs.cartan[i][j];
            }
        }
        let value = |r: &[i64]| -> i64 { r.iter().zip(&h).map(|(a, b)| a * b).sum() };
        let mut v: Vec<Vec<i64>> = g.component(1).iter().filter(|r| value(r) >= 2).cloned().collect();
        v.sort();
        let levi: Vec<usize> = nodes.iter().enumerate().filter(|(_, &n)| h[n] == 0).map(|(p, _)| p).collect();
        let frame = WeylFrame::dynkin(&g.rs.cartan, &nodes);
        let fs = FlagSpace::new(frame, &levi, "G0/P")?;
        Ok(DesingData::assemble(g, fs, v))
    }

    /// Dimension of the total space `Z`.
    pub fn total_dim(&self) -> usize {
        self.fs.dim() + self.sub_roots.len()
    }

    pub fn sub_rank(&self) -> usize {
        self.sub_roots.len()
    }

    pub fn xi_rank(&self) -> usize {
        self.quotient_roots.len()
    }

    /// `ξ = (g₁/V)^*` in the positive convention.
    pub fn xi(&self) -> Multiset {
        multiset(self.quotient_labels.iter().cloned())
    }

    /// `V^*` in the positive convention.
    pub fn sub_dual(&self) -> Multiset {
        multiset(self.sub_labels.iter().cloned())
    }
}

/// Values `⟨α_i, h⟩` (i = 1..7) of the characteristic `h` of `Σ e_γ`.
fn characteristic(g: &GradedAlgebra, roots: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = roots.len();
    let gram: Vec<Vec<i64>> = roots.iter().map(|a| roots.iter().map(|b| g.form(a, b)).collect()).collect();
    for i in 0..n {
        for j in 0..n {
            if i != j && gram[i][j] > 0 {
                return Err(Error::NoDesingData("representative roots are not pairwise non-acute".into()));
            }
        }
    }
    let inv = linalg::inverse(&gram).ok_or_else(|| Error::NoDesingData("representative roots are dependent".into()))?;
    let two = BigRational::from_integer(2.into());
    let c: Vec<BigRational> = inv.iter().map(|row| row.iter().fold(BigRational::zero(), |s, x| s + x * &two)).collect();
    let mut h = Vec::with_capacity(7);
    for label in 0..7 {
        let mut s = BigRational::zero();
        for (cj, r) in c.iter().zip(roots) {
            let d: i64 = (0..7).map(|i| r[i] * g.rs.cartan[i][label]).sum();
            s += cj * BigRational::from_integer(d.into());
        }
        if !s.is_integer() {
            return Err(Error::NonIntegral);
        }
        h.push(s.to_integer().to_i64().ok_or(Error::NonIntegral)?);
    }
    Ok(h)
}

/// `H^*(G₀/P, Λ^j ξ)` for `j = 0..=j_max`.
pub fn resolution_terms(d: &DesingData, j_max: usize, cap: u128) -> Result<Vec<VirtualModule>> {
    let powers = exterior_powers(&d.xi(), cap)?;
    (0..=j_max)
        .into_par_iter()
        .map(|j| match powers.get(j) {
            Some(m) => cohomology_table(&d.fs, m, j),
            None => Ok(VirtualModule::default()),
        })
        .collect()
}

/// `h(k) = χ(G₀/P, Sym^k V^*)` for `k = 0..=k_max`, computed concurrently.
pub fn hilbert_function(d: &DesingData, k_max: usize, cap: u128) -> Result<Vec<BigInt>> {
    let eta = d.sub_dual();
    let frame = d.fs.frame();
    (0..=k_max)
        .into_par_iter()
        .map(|k| Ok(euler_characteristic(frame, &symmetric_power(&eta, k, cap)?)))
        .collect()
}

/// `N_m = Σ_i (−1)^i C(dim, i) h(m − i)`: the numerator of `Σ h(k) t^k`
/// over `(1 − t)^dim`, truncated to the length of `h`.
pub fn numerator_from_hilbert(h: &[BigInt], dim: usize) -> Vec<BigInt> {
    (0..h.len())
        .map(|m| {
            (0..=m)
                .map(|i| {
                    let t = binomial(dim as i64, i as i64) * &h[m - i];
                    if i % 2 == 0 {
                        t
                    } else {
                        -t
                    }
                })
                .sum()
        })
        .collect()
}

/// Hilbert numerator of the normalisation of an orbit closure of the given
/// dimension, computed up to `t^D`. The returned polynomial has trailing
/// zeros trimmed; a nonzero `N_D` means the truncation cannot certify the
/// answer.
pub fn hilbert_numerator(d: &DesingData, dim: usize, max_degree: usize, cap: u128) -> Result<Vec<i64>> {
    let h = hilbert_function(d, max_degree, cap)?;
    let n = numerator_from_hilbert(&h, dim);
    if !n[max_degree].is_zero() {
        return Err(Error::Truncation(max_degree));
    }
    let mut out: Vec<i64> = n.iter().map(|c| c.to_i64().ok_or(Error::NonIntegral)).collect::<Result<_>>()?;
    while out.len() > 1 && out.last() == Some(&0) {
        out.pop();
    }
    Ok(out)
}

/// `N(1)`.
pub fn numerator_degree(numerator: &[i64]) -> i64 {
    numerator.iter().sum()
}

/// `N(1) = degree`.
pub fn degree_check(numerator: &[i64], degree: i64) -> bool {
    numerator_degree(numerator) == degree
}

/// Hilbert function of a degree-`deg` hypersurface in `n` variables.
pub fn hypersurface_hilbert(n: usize, deg: usize, k: usize) -> BigInt {
    let (n, deg, k) = (n as i64, deg as i64, k as i64);
    binomial(n - 1 + k, k) - if k >= deg { binomial(n - 1 + k - deg, k - deg) } else { BigInt::zero() }
}

/// Numerator `1 + t + … + t^{deg−1}` of a degree-`deg` hypersurface.
pub fn hypersurface_numerator(deg: usize) -> Vec<i64> {
    vec![1; deg.max(1)]
}

/// Render a highest weight (E7 Dynkin labels) the way the tables print it.
pub fn format_weight(g: &GradedAlgebra, hw: &[i64]) -> Result<String> {
    g.display_weight(hw)
}

/// One line per cohomology entry: `(weights)[degree]`, with `×m` for
/// multiplicities above one.
pub fn format_module(g: &GradedAlgebra, m: &VirtualModule) -> Result<Vec<String>> {
    m.entries
        .iter()
        .map(|e| {
            let w = format_weight(g, &e.highest)?;
            Ok(if e.multiplicity == 1 {
                format!("{w}[{}]", e.degree)
            } else {
                format!("{}×{w}[{}]", e.multiplicity, e.degree)
            })
        })
        .collect()
}

/// Signed Euler characteristic as `(w₁) - 2*(w₂) + …` in table notation.
pub fn format_chi(g: &GradedAlgebra, m: &VirtualModule) -> Result<String> {
    let terms = m
        .euler()
        .into_iter()
        .rev()
        .map(|(hw, c)| {
            let w = format_weight(g, &hw)?;
            let body = if c.abs() == 1 { w } else { format!("{}*{w}", c.abs()) };
            Ok((c < 0, body))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(join_signed(terms))
}

fn join_signed(terms: Vec<(bool, String)>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (neg, t)) in terms.iter().enumerate() {
        match (i, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        s.push_str(t);
    }
    s
}

/// The Euler characteristic of a module as a signed sum of `S_λE ⊗ V_ω`
/// terms, for the two-factor case `E ⊗ (orthogonal)` printed with
/// fundamental-weight names.
pub fn format_chi_schur(g: &GradedAlgebra, m: &VirtualModule) -> Result<String> {
    let mut terms = Vec::new();
    for (hw, c) in m.euler() {
        let grade = g.grade_of(&hw)?;
        let mut parts = Vec::new();
        for f in &g.levi {
            let coords = f.coords(&hw, grade)?;
            match f.kind {
                FactorKind::General => {
                    let l: Vec<String> = coords.iter().map(|x| (x / 2).to_string()).collect();
                    parts.push(format!("S_{{{}}}{}", l.join(","), f.name));
                }
                _ => {
                    let labels: Vec<i64> = f.display_nodes.iter().map(|&n| hw[n - 1]).collect();
                    if labels.iter().any(|&x| x != 0) {
                        parts.push(format!("V_{{{}}}", omega_name(&labels)));
                    }
                }
            }
        }
        let body = parts.join("⊗");
        let mag = c.abs();
        let coeff = if mag == 1 { String::new() } else { format!("{mag}") };
        terms.push((c < 0, format!("{coeff}{body}")));
    }
    Ok(join_signed(terms))
}

/// `ω₁+ω₅`, `2ω₁`, … from Dynkin labels.
pub fn omega_name(labels: &[i64]) -> String {
    let parts: Vec<String> = labels
        .iter()
        .enumerate()
        .filter(|(_, &a)| a != 0)
        .map(|(i, &a)| if a == 1 { format!("ω{}", i + 1) } else { format!("{a}ω{}", i + 1) })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

/// Roots of `g₁` named by printed weights, e.g. `(1,0;+,+,-,+,-)` or
/// `(1,1,0;1,0,0,0,1)`. GL parts are ε-coordinates; `+`/`-` stand for
/// `±½` in an orthogonal factor.
pub fn parse_weight_list(g: &GradedAlgebra, text: &str) -> Result<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    let mut rest = text;
    while let Some(open) = rest.find('(') {
        let close = rest[open..].find(')').ok_or_else(|| Error::Parse(format!("unclosed weight in {text:?}")))? + open;
        let body = &rest[open + 1..close];
        rest = &rest[close + 1..];
        let parts: Vec<&str> = body.split(';').collect();
        if parts.len() != g.levi.len() {
            return Err(Error::Parse(format!("weight ({body}) needs {} factors", g.levi.len())));
        }
        let mut coords = Vec::new();
        for (f, p) in g.levi.iter().zip(parts) {
            let c: Vec<i64> = p
                .split(',')
                .map(|t| match t.trim() {
                    "+" => Ok(1),
                    "-" => Ok(-1),
                    s => s.parse::<i64>().map(|x| 2 * x).map_err(|_| Error::Parse(format!("bad coordinate {s:?}"))),
                })
                .collect::<Result<_>>()?;
            if c.len() != f.width() {
                return Err(Error::Parse(format!("factor {} needs {} coordinates in ({body})", f.name, f.width())));
            }
            coords.push(c);
        }
        let root = g
            .component(1)
            .iter()
            .find(|r| g.factor_coords(&g.root_dynkin(r), 1).map(|fc| fc == coords).unwrap_or(false))
            .ok_or_else(|| Error::Parse(format!("({body}) is not a weight of g_1")))?;
        out.push(root.clone());
    }
    Ok(out)
}

/// Roots of `g₁` named by labels.
pub fn roots_of_labels(g: &GradedAlgebra, labels: &[Label]) -> Result<Vec<Vec<i64>>> {
    labels.iter().map(|l| g.root_of_label(l).map(<[i64]>::to_vec)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundles::DEFAULT_MAX_CELLS;
    use crate::grading::Case;
    use crate::orbits::parse_representative;

    fn desing(case: Case, rep: &str) -> (GradedAlgebra, DesingData) {
        let g = GradedAlgebra::new(case).unwrap();
        let r = parse_representative(&g, rep).unwrap();
        let d = DesingData::from_characteristic(&g, &r).unwrap();
        (g, d)
    }

    #[test]
    fn highest_weight_orbit_e7a7() {
        let (_, d) = desing(Case::E7a7, "[0000001]");
        assert_eq!((d.fs.dim(), d.sub_rank(), d.total_dim()), (16, 1, 17));
        let n = hilbert_numerator(&d, 17, 7, DEFAULT_MAX_CELLS).unwrap();
        assert_eq!(n, vec![1, 10, 28, 28, 10, 1]);
        assert!(degree_check(&n, 78));
    }

    #[test]
    fn cubic_hypersurface_e7a7() {
        let (_, d) = desing(Case::E7a7, "[0000001]+[0112221]");
        assert_eq!(d.total_dim(), 26);
        let h = hilbert_function(&d, 6, DEFAULT_MAX_CELLS).unwrap();
        for (k, hk) in h.iter().enumerate() {
            assert_eq!(*hk, hypersurface_hilbert(27, 3, k), "k = {k}");
        }
        assert_eq!(hilbert_numerator(&d, 26, 4, DEFAULT_MAX_CELLS).unwrap(), hypersurface_numerator(3));
    }

    #[test]
    fn generic_orbit_has_trivial_numerator() {
        let (_, d) = desing(Case::E7a1, "[∅]+[123456]");
        assert_eq!(d.fs.dim(), 0);
        assert_eq!(d.xi_rank(), 0);
        assert_eq!(hilbert_numerator(&d, 32, 2, DEFAULT_MAX_CELLS).unwrap(), vec![1]);
    }

    #[test]
    fn truncation_is_reported() {
        let (_, d) = desing(Case::E7a7, "[0000001]");
        assert!(matches!(hilbert_numerator(&d, 17, 3, DEFAULT_MAX_CELLS), Err(Error::Truncation(3))));
    }

    #[test]
    fn numerator_of_free_module() {
        // Σ C(n−1+k, k) t^k = 1/(1−t)^n
        let h: Vec<BigInt> = (0..6).map(|k| binomial(4 + k, k)).collect();
        let n = numerator_from_hilbert(&h, 5);
        assert_eq!(n[0], BigInt::from(1));
        assert!(n[1..].iter().all(Zero::is_zero));
    }

    #[test]
    fn exterior_zero_is_trivial() {
        let (g, d) = desing(Case::E7a6, "[1;∅]+[1;1234]+[2;12]");
        let t = resolution_terms(&d, 1, DEFAULT_MAX_CELLS).unwrap();
        assert_eq!(format_chi(&g, &t[0]).unwrap(), "(0,0;[0,0,0,0,0])");
        assert_eq!(format_chi(&g, &t[1]).unwrap(), "0");
    }

    #[test]
    fn weight_lists_round_trip() {
        let g = GradedAlgebra::new(Case::E7a6).unwrap();
        let roots = parse_weight_list(&g, "(1,0;+,+,+,+,+), (0,1;+,+,-,+,-)").unwrap();
        assert_eq!(roots.len(), 2);
        let g5 = GradedAlgebra::new(Case::E7a5).unwrap();
        let r = parse_weight_list(&g5, "(1,0,0;1,1,0,0,0)").unwrap();
        assert_eq!(g5.label_of_root(&r[0]).unwrap().to_string(), "[1;12]");
        assert!(parse_weight_list(&g5, "(1,0,0;1,1,1,0,0)").is_err());
        assert!(parse_weight_list(&g5, "(1,0;1,1,0,0,0)").is_err());
    }

    #[test]
    fn subspace_is_conjugated_to_borel_stable() {
        // A lowest-weight line is stable under the opposite Borel only;
        // conjugation must still land on the highest-weight line.
        let g = GradedAlgebra::new(Case::E7a3).unwrap();
        let all: Vec<Vec<i64>> = g.component(1).to_vec();
        let lowest = all.iter().min_by_key(|r| r.iter().sum::<i64>()).unwrap().clone();
        let d = DesingData::from_subspace(&g, &[lowest]).unwrap();
        assert_eq!(d.total_dim(), 10);
    }

    #[test]
    fn omega_names() {
        assert_eq!(omega_name(&[1, 0, 0, 0, 1]), "ω1+ω5");
        assert_eq!(omega_name(&[2, 0, 0, 0, 0]), "2ω1");
        assert_eq!(omega_name(&[0, 0, 0, 0, 0]), "0");
    }
}
