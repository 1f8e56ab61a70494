//! Orbit representatives in `g_1` and the invariants computed from them.
//!
//! The orbit dimension of `v ∈ g_1` is the rank of `x ↦ [x, v]` on `g_0`,
//! computed exactly. Representatives written with a `<…>` span stand for a
//! generic element of that span; their coefficients are drawn at random.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::chevalley::ChevalleyBasis;
use crate::error::{Error, Result};
use crate::grading::{Case, GradedAlgebra, Label};
use crate::linalg;

/// Default seed for generic-span coefficients.
pub const DEFAULT_SEED: u64 = 0x7e7a;
/// Number of random trials for generic spans.
pub const SPAN_TRIALS: usize = 3;
/// Random coefficients for generic spans are drawn from `1..=SPAN_COEFF_MAX`.
pub const SPAN_COEFF_MAX: i64 = 97;

/// A graded E7 together with its Chevalley basis, ready for bracket work.
#[derive(Clone, Debug)]
pub struct ThetaRep {
    pub graded: GradedAlgebra,
    pub cb: ChevalleyBasis,
    /// Chevalley indices spanning `g_0`: the full Cartan, then grade-0 roots.
    g0: Vec<usize>,
    /// Chevalley index of every label, in label order.
    g1: Vec<usize>,
    g1_pos: HashMap<usize, usize>,
}

impl ThetaRep {
    pub fn new(case: Case) -> Result<ThetaRep> {
        let graded = GradedAlgebra::new(case)?;
        let cb = ChevalleyBasis::build(&graded.rs);
        let mut g0: Vec<usize> = (0..cb.rank()).collect();
        g0.extend(graded.component(0).iter().map(|r| cb.index_of(r).expect("root")));
        let g1: Vec<usize> = graded
            .labels()
            .iter()
            .map(|(_, r)| cb.index_of(r).expect("root"))
            .collect();
        let g1_pos = g1.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        Ok(ThetaRep { graded, cb, g0, g1, g1_pos })
    }

    pub fn case(&self) -> Case {
        self.graded.case
    }

    pub fn g1_dim(&self) -> usize {
        self.g1.len()
    }

    pub fn g0_indices(&self) -> &[usize] {
        &self.g0
    }

    /// Chevalley index of the weight vector carrying a label.
    pub fn chevalley_index(&self, label: &Label) -> Result<usize> {
        let i = self
            .graded
            .label_index(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string(), self.case().to_string()))?;
        Ok(self.g1[i])
    }

    /// Position in label order of a Chevalley index lying in `g_1`.
    pub fn g1_position(&self, idx: usize) -> Option<usize> {
        self.g1_pos.get(&idx).copied()
    }

    /// Matrix of the action map `g_0 → g_1`, `x ↦ [x, v]`, with `v` given
    /// in label coordinates. Rows are `g_1` coordinates.
    pub fn action_matrix(&self, v: &[i64]) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.g0.len()]; self.g1.len()];
        for (col, &x) in self.g0.iter().enumerate() {
            for (p, &c) in v.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for &(out, n) in self.cb.bracket_basis(x, self.g1[p]) {
                    let row = self.g1_pos[&out];
                    m[row][col] += n * c;
                }
            }
        }
        m
    }

    /// Dimension of the `G_0`-orbit through `v` (label coordinates).
    pub fn orbit_dimension_of(&self, v: &[i64]) -> usize {
        linalg::rank_i64(&self.action_matrix(v))
    }

    /// Dimension of the orbit through `v` under the derived group
    /// `[G_0, G_0]`, i.e. with the grading element dropped from `g_0`.
    pub fn derived_orbit_dimension_of(&self, v: &[i64]) -> usize {
        let drop = self.graded.node - 1;
        let m: Vec<Vec<i64>> = self
            .action_matrix(v)
            .into_iter()
            .map(|row| row.into_iter().enumerate().filter(|&(c, _)| c != drop).map(|(_, x)| x).collect())
            .collect();
        linalg::rank_i64(&m)
    }
}

/// Codimension of a generic `[G_0, G_0]`-orbit in `g_1`. It is 1 exactly
/// when the derived group has a nonconstant polynomial invariant, and 0
/// otherwise. The generic rank is the maximum over [`SPAN_TRIALS`] random
/// points, which can only underestimate it with negligible probability.
pub fn derived_generic_codim(theta: &ThetaRep, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = theta.g1_dim();
    let best = (0..SPAN_TRIALS)
        .map(|_| {
            let v: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=SPAN_COEFF_MAX)).collect();
            theta.derived_orbit_dimension_of(&v)
        })
        .max()
        .unwrap_or(0);
    n - best
}

/// A formal integer combination of labelled weight vectors, optionally
/// with a generic element of a span of further vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Representative {
    pub case: Case,
    pub terms: Vec<(i64, Label)>,
    pub generic_span: Vec<Label>,
}

impl fmt::Display for Representative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if !self.generic_span.is_empty() {
            f.write_str("<")?;
            for (i, l) in self.generic_span.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{l}")?;
            }
            f.write_str(">")?;
            first = false;
        }
        for (c, l) in &self.terms {
            let sign = if *c < 0 { "-" } else if first { "" } else { "+" };
            f.write_str(sign)?;
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Parse a representative such as `[123]+[145]`, `2[1;2]-[3;4]` or
/// `<[1;12],[2;34]>+[1;45]`. A bare `0` is the zero vector.
pub fn parse_representative(g: &GradedAlgebra, text: &str) -> Result<Representative> {
    let case = g.case;
    let bad = |m: &str| Error::Parse(format!("representative `{text}`: {m}"));
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut rep = Representative { case, terms: Vec::new(), generic_span: Vec::new() };
    if s == "0" {
        return Ok(rep);
    }
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut first = true;
    while i < chars.len() {
        let mut sign = 1;
        match chars[i] {
            '+' => i += 1,
            '-' => {
                sign = -1;
                i += 1
            }
            _ if first => {}
            _ => return Err(bad("expected `+` or `-` between terms")),
        }
        first = false;
        let start = i;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        let coeff: i64 = if i > start {
            chars[start..i].iter().collect::<String>().parse().map_err(|_| bad("coefficient"))?
        } else {
            1
        };
        match chars.get(i) {
            Some('[') => {
                let end = find(&chars, i, ']').ok_or_else(|| bad("unclosed `[`"))?;
                let lbl: String = chars[i..=end].iter().collect();
                rep.terms.push((sign * coeff, g.parse_label(&lbl)?));
                i = end + 1;
            }
            Some('<') => {
                if sign != 1 || coeff != 1 || !rep.generic_span.is_empty() {
                    return Err(bad("a span takes no coefficient and appears once"));
                }
                let end = find(&chars, i, '>').ok_or_else(|| bad("unclosed `<`"))?;
                let body: String = chars[i + 1..end].iter().collect();
                for piece in split_top(&body) {
                    rep.generic_span.push(g.parse_label(piece)?);
                }
                if rep.generic_span.is_empty() {
                    return Err(bad("empty span"));
                }
                i = end + 1;
            }
            _ => return Err(bad("expected a label")),
        }
    }
    if rep.terms.is_empty() && rep.generic_span.is_empty() {
        return Err(bad("no terms"));
    }
    Ok(rep)
}

fn find(chars: &[char], from: usize, c: char) -> Option<usize> {
    (from..chars.len()).find(|&j| chars[j] == c)
}

/// Split on commas outside brackets.
fn split_top(body: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (i, c) in body.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&body[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if start < body.len() {
        out.push(&body[start..]);
    }
    out
}

impl Representative {
    pub fn is_generic(&self) -> bool {
        !self.generic_span.is_empty()
    }

    /// Label-coordinate vector, with the span filled by `span_coeffs`.
    pub fn vector(&self, theta: &ThetaRep, span_coeffs: &[i64]) -> Result<Vec<i64>> {
        let mut v = vec![0i64; theta.g1_dim()];
        let g = &theta.graded;
        let pos = |l: &Label| {
            g.label_index(l).ok_or_else(|| Error::UnknownLabel(l.to_string(), g.case.to_string()))
        };
        for (c, l) in &self.terms {
            v[pos(l)?] += c;
        }
        for (c, l) in span_coeffs.iter().zip(&self.generic_span) {
            v[pos(l)?] += c;
        }
        Ok(v)
    }
}

/// Orbit dimension with the default seed.
pub fn orbit_dimension(theta: &ThetaRep, rep: &Representative) -> Result<usize> {
    orbit_dimension_seeded(theta, rep, DEFAULT_SEED)
}

/// Orbit dimension; generic spans take the best of [`SPAN_TRIALS`] random
/// fillings drawn from a ChaCha stream keyed by `seed`.
pub fn orbit_dimension_seeded(theta: &ThetaRep, rep: &Representative, seed: u64) -> Result<usize> {
    if !rep.is_generic() {
        return Ok(theta.orbit_dimension_of(&rep.vector(theta, &[])?));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0;
    for _ in 0..SPAN_TRIALS {
        let coeffs: Vec<i64> =
            rep.generic_span.iter().map(|_| rng.gen_range(1..=SPAN_COEFF_MAX)).collect();
        best = best.max(theta.orbit_dimension_of(&rep.vector(theta, &coeffs)?));
    }
    Ok(best)
}

/// Ranks of the single-factor flattenings of a tensor-shaped
/// representative, keyed by factor name (`E`, `F`, `H`, `S`).
pub fn flattening_ranks(rep: &Representative) -> Result<BTreeMap<String, usize>> {
    let mut out = BTreeMap::new();
    let d = |x: u8| x as usize - 1;
    if rep.is_generic() {
        return Err(Error::Parse("flattening ranks need an explicit representative".into()));
    }
    match rep.case {
        Case::E7a4 => {
            // E⊗F⊗H with dims 2, 3, 4
            let dims = [2usize, 3, 4];
            for (f, name) in ["E", "F", "H"].iter().enumerate() {
                let others: Vec<usize> = (0..3).filter(|&g| g != f).collect();
                let cols = dims[others[0]] * dims[others[1]];
                let mut m = vec![vec![0i64; cols]; dims[f]];
                for (c, l) in &rep.terms {
                    let idx: Vec<usize> = l.0.iter().map(|p| d(p[0])).collect();
                    m[idx[f]][idx[others[0]] * dims[others[1]] + idx[others[1]]] += c;
                }
                out.insert(name.to_string(), linalg::rank_i64(&m));
            }
        }
        Case::E7a3 | Case::E7a5 => {
            // E⊗Λ²F
            let (e, f) = if rep.case == Case::E7a3 { (2, 6) } else { (3, 5) };
            let mut me = vec![vec![0i64; f * f]; e];
            let mut mf = vec![vec![0i64; e * f]; f];
            for (c, l) in &rep.terms {
                let a = d(l.0[0][0]);
                let (i, j) = (d(l.0[1][0]), d(l.0[1][1]));
                me[a][i * f + j] += c;
                me[a][j * f + i] -= c;
                mf[i][a * f + j] += c;
                mf[j][a * f + i] -= c;
            }
            out.insert("E".into(), linalg::rank_i64(&me));
            out.insert("F".into(), linalg::rank_i64(&mf));
        }
        Case::E7a6 => {
            // E⊗S with S the 16-dimensional half-spin module
            let mut m = vec![vec![0i64; 32]; 2];
            for (c, l) in &rep.terms {
                let a = d(l.0[0][0]);
                let mask: usize = l.0[1].iter().map(|&x| 1usize << d(x)).sum();
                m[a][mask] += c;
            }
            let r = linalg::rank_i64(&m);
            out.insert("E".into(), r);
            out.insert("S".into(), r);
        }
        other => return Err(Error::NoTensorStructure(other.to_string())),
    }
    Ok(out)
}

/// A homogeneous polynomial on `g_1` in the label coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantPoly {
    pub degree: usize,
    /// Monomials as sorted label-position multisets.
    pub monomials: BTreeMap<Vec<usize>, i64>,
}

impl InvariantPoly {
    pub fn evaluate(&self, v: &[i64]) -> BigInt {
        self.monomials
            .iter()
            .map(|(m, &c)| m.iter().fold(BigInt::from(c), |acc, &i| acc * v[i]))
            .sum()
    }

    /// Coefficients of `d f(v)(x·v)` for a basis element `x` of `g_0`, as a
    /// polynomial in `v`. Zero for every `x` iff `f` is `g_0`-invariant.
    pub fn derivative_along(&self, theta: &ThetaRep, x: usize) -> BTreeMap<Vec<usize>, i64> {
        let mut out: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
        for (mono, &c) in &self.monomials {
            for (k, &gamma) in mono.iter().enumerate() {
                let rest: Vec<usize> =
                    mono.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &p)| p).collect();
                // x·v has coordinate at γ equal to Σ_δ N(x,δ) v_δ
                for (delta, &didx) in theta.g1.iter().enumerate() {
                    for &(o, n) in theta.cb.bracket_basis(x, didx) {
                        if o == theta.g1[gamma] {
                            let mut m = rest.clone();
                            m.push(delta);
                            m.sort_unstable();
                            *out.entry(m).or_default() += c * n;
                        }
                    }
                }
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }
}

/// The degree-3 invariant of the 27-dimensional case, supported on triples
/// of pairwise orthogonal weights with signs fixed by invariance under the
/// derived algebra of `g_0`.
pub fn build_cubic_invariant(theta: &ThetaRep) -> Result<InvariantPoly> {
    if theta.case() != Case::E7a7 {
        return Err(Error::NoTensorStructure(theta.case().to_string()));
    }
    let g = &theta.graded;
    let roots: Vec<&[i64]> = g.labels().iter().map(|(_, r)| r.as_slice()).collect();
    let n = roots.len();
    let mut triples = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.form(roots[a], roots[b]) == 0
                    && g.form(roots[a], roots[c]) == 0
                    && g.form(roots[b], roots[c]) == 0
                {
                    triples.push(vec![a, b, c]);
                }
            }
        }
    }
    // Generators of the semisimple part: h_1..h_6 and grade-0 root vectors.
    let node = g.node - 1;
    let gens: Vec<usize> = theta
        .g0
        .iter()
        .copied()
        .filter(|&x| x >= theta.cb.rank() || x != node)
        .collect();
    let mut eqs: BTreeMap<(usize, Vec<usize>), Vec<i64>> = BTreeMap::new();
    for (t, mono) in triples.iter().enumerate() {
        let single = InvariantPoly { degree: 3, monomials: [(mono.clone(), 1)].into() };
        for &x in &gens {
            for (m, c) in single.derivative_along(theta, x) {
                eqs.entry((x, m)).or_insert_with(|| vec![0; triples.len()])[t] += c;
            }
        }
    }
    let rows: Vec<Vec<i64>> = eqs.into_values().collect();
    let ns = linalg::nullspace(&rows, triples.len());
    if ns.len() != 1 {
        return Err(Error::InvariantSpace(ns.len()));
    }
    let monomials = triples
        .into_iter()
        .zip(&ns[0])
        .filter(|(_, c)| **c != BigInt::from(0))
        .map(|(m, c)| (m, i64::try_from(c).expect("small coefficient")))
        .collect();
    Ok(InvariantPoly { degree: 3, monomials })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta(case: Case) -> ThetaRep {
        ThetaRep::new(case).unwrap()
    }

    fn dim(t: &ThetaRep, s: &str) -> usize {
        orbit_dimension(t, &parse_representative(&t.graded, s).unwrap()).unwrap()
    }

    #[test]
    fn parse_and_print() {
        let t = theta(Case::E7a2);
        let r = parse_representative(&t.graded, "[123]+[456]").unwrap();
        assert_eq!(r.terms.len(), 2);
        assert_eq!(r.to_string(), "[123]+[456]");
        let r = parse_representative(&t.graded, " -2[321] + [456]").unwrap();
        assert_eq!(r.to_string(), "-2[123]+[456]");
        assert!(parse_representative(&t.graded, "[99]").is_err());
        assert!(parse_representative(&t.graded, "[123][456]").is_err());
        assert!(parse_representative(&t.graded, "").is_err());
        let t = theta(Case::E7a3);
        let r = parse_representative(&t.graded, "[1;12]+[2;34]+[1;56]+[2;15]").unwrap();
        assert_eq!(r.terms.len(), 4);
        let r = parse_representative(&t.graded, "<[1;12],[2;12]>+[1;34]").unwrap();
        assert_eq!(r.generic_span.len(), 2);
        assert_eq!(parse_representative(&t.graded, &r.to_string()).unwrap(), r);
    }

    #[test]
    fn derived_invariants() {
        // every grading of E7 by a single node has a hypersurface orbit
        for case in Case::ALL {
            assert_eq!(derived_generic_codim(&theta(case), DEFAULT_SEED), 1, "{case}");
        }
    }

    #[test]
    fn small_dimensions() {
        let t = theta(Case::E7a2);
        assert_eq!(dim(&t, "[123]"), 13);
        assert_eq!(dim(&t, "[123]+[145]"), 20);
        assert_eq!(dim(&t, "[123]+[456]+[147]"), 31);
        assert_eq!(dim(&t, "0"), 0);
    }

    #[test]
    fn dimension_invariant_under_sign_and_order() {
        let t = theta(Case::E7a2);
        assert_eq!(dim(&t, "[456]-[123]+[147]"), dim(&t, "[123]+[456]+[147]"));
        let t = theta(Case::E7a4);
        let a = dim(&t, "[1;1;1]+[2;2;2]+[1;3;3]+[2;1;4]+[1;2;4]+[2;3;1]");
        assert_eq!(a, 24);
        assert_eq!(dim(&t, "[2;3;1]-[1;2;4]+[2;1;4]+[1;3;3]-[2;2;2]+[1;1;1]"), a);
    }

    #[test]
    fn flattenings() {
        let t = theta(Case::E7a4);
        let r = parse_representative(&t.graded, "[1;1;1]").unwrap();
        assert!(flattening_ranks(&r).unwrap().values().all(|&x| x == 1));
        let r = parse_representative(&t.graded, "[1;1;1]+[2;2;2]+[1;3;3]+[2;1;4]+[1;2;4]+[2;3;1]")
            .unwrap();
        let f = flattening_ranks(&r).unwrap();
        assert_eq!((f["E"], f["F"], f["H"]), (2, 3, 4));
        let t = theta(Case::E7a2);
        let r = parse_representative(&t.graded, "[123]").unwrap();
        assert!(flattening_ranks(&r).is_err());
    }

    #[test]
    fn cubic_invariant() {
        let t = theta(Case::E7a7);
        let delta = build_cubic_invariant(&t).unwrap();
        assert_eq!(delta.monomials.len(), 45);
        assert!(delta.monomials.values().all(|c| c.abs() == 1));
        for &x in t.g0_indices() {
            if x != 6 {
                assert!(delta.derivative_along(&t, x).is_empty());
            }
        }
        let o2 = parse_representative(&t.graded, "[0000001]+[0112221]").unwrap();
        let o3 = parse_representative(&t.graded, "[0000001]+[0112221]+[2234321]").unwrap();
        assert_eq!(delta.evaluate(&o2.vector(&t, &[]).unwrap()), BigInt::from(0));
        assert_ne!(delta.evaluate(&o3.vector(&t, &[]).unwrap()), BigInt::from(0));
        assert_eq!(delta.evaluate(&vec![0; 27]), BigInt::from(0));
        assert_eq!(dim(&t, "[0000001]"), 17);
        assert_eq!(dim(&t, "[0000001]+[0112221]"), 26);
        assert_eq!(dim(&t, "[0000001]+[0112221]+[2234321]"), 27);
    }
}
