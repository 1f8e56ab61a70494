//! Z-gradings of E7 by a distinguished node and the label schemes used to
//! name weight vectors of the degree-one piece.
//!
//! The Levi factor `g_0` is split into classical (or E6) factors. Each
//! factor carries an ordered list of E7 nodes; reading the E7 Dynkin labels
//! of a weight along that list gives the factor's own Dynkin labels, and
//! from there ε-coordinates. The label ⇄ root bijection is pinned by
//! sending each label to its ε-weight (e.g. `[123] ↦ ε₁+ε₂+ε₃`) and
//! matching against the factor coordinates of every root in `g_1`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rootsys::{build_root_system, DiagramType, RootSystem, Weight};

/// One of the seven gradings, named after the distinguished node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Case {
    E7a1,
    E7a2,
    E7a3,
    E7a4,
    E7a5,
    E7a6,
    E7a7,
}

impl Case {
    pub const ALL: [Case; 7] =
        [Case::E7a1, Case::E7a2, Case::E7a3, Case::E7a4, Case::E7a5, Case::E7a6, Case::E7a7];

    pub fn node(self) -> usize {
        self as usize + 1
    }

    pub fn from_node(node: usize) -> Result<Case> {
        Case::ALL.get(node.wrapping_sub(1)).copied().ok_or(Error::InvalidNode(node))
    }

    pub fn tag(self) -> &'static str {
        ["e7a1", "e7a2", "e7a3", "e7a4", "e7a5", "e7a6", "e7a7"][self as usize]
    }

    pub fn parse(s: &str) -> Result<Case> {
        Case::ALL
            .iter()
            .copied()
            .find(|c| c.tag() == s.trim())
            .ok_or_else(|| Error::UnknownCase(s.to_string()))
    }

    /// Factors of the Levi subalgebra, in display order.
    pub fn levi_factors(self) -> Vec<LeviFactor> {
        use FactorKind::*;
        let f = |name: &'static str, kind, nodes: &[usize], size| LeviFactor {
            name,
            kind,
            nodes: nodes.to_vec(),
            size_per_grade: size,
            display_nodes: nodes.to_vec(),
        };
        match self {
            Case::E7a1 => vec![f("D6", Orthogonal, &[7, 6, 5, 4, 2, 3], 0)],
            Case::E7a2 => vec![f("F", General, &[7, 6, 5, 4, 3, 1], 3)],
            Case::E7a3 => vec![f("E", General, &[1], 1), f("F", General, &[7, 6, 5, 4, 2], 2)],
            Case::E7a4 => vec![
                f("E", General, &[2], 1),
                f("F", General, &[1, 3], 1),
                f("H", General, &[7, 6, 5], 1),
            ],
            Case::E7a5 => vec![f("E", General, &[7, 6], 1), f("F", General, &[1, 3, 4, 2], 2)],
            Case::E7a6 => {
                // Printed labels put the half-spin node of g_1 fourth.
                let mut d5 = f("D5", Orthogonal, &[1, 3, 4, 5, 2], 0);
                d5.display_nodes = vec![1, 3, 4, 2, 5];
                vec![f("E", General, &[7], 1), d5]
            }
            Case::E7a7 => vec![f("E6", Exceptional, &[1, 2, 3, 4, 5, 6], 0)],
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FactorKind {
    /// GL(n): type A(n−1) plus a determinant twist fixed by the grade.
    General,
    /// Spin(2n), type D(n), in the standard ε-model.
    Orthogonal,
    /// E6, reported in Dynkin labels.
    Exceptional,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviFactor {
    pub name: &'static str,
    pub kind: FactorKind,
    /// E7 nodes in the factor's own Dynkin order.
    pub nodes: Vec<usize>,
    /// For GL factors, the degree of the determinant per unit of grade.
    pub size_per_grade: i64,
    /// Order in which Dynkin labels are printed (orthogonal and exceptional
    /// factors); a permutation of `nodes`.
    pub display_nodes: Vec<usize>,
}

impl LeviFactor {
    /// Natural dimension (number of ε-coordinates).
    pub fn width(&self) -> usize {
        match self.kind {
            FactorKind::General => self.nodes.len() + 1,
            FactorKind::Orthogonal | FactorKind::Exceptional => self.nodes.len(),
        }
    }

    pub fn diagram(&self) -> DiagramType {
        match self.kind {
            FactorKind::General => DiagramType::A(self.nodes.len()),
            FactorKind::Orthogonal => DiagramType::D(self.nodes.len()),
            FactorKind::Exceptional => DiagramType::E6,
        }
    }

    /// Factor Dynkin labels read off E7 Dynkin labels.
    pub fn dynkin(&self, e7_labels: &[i64]) -> Vec<i64> {
        self.nodes.iter().map(|&n| e7_labels[n - 1]).collect()
    }

    /// Doubled ε-coordinates (Dynkin labels for E6) of a weight given by
    /// E7 Dynkin labels and its grade.
    pub fn coords(&self, e7_labels: &[i64], grade: i64) -> Result<Vec<i64>> {
        let a = self.dynkin(e7_labels);
        Ok(match self.kind {
            FactorKind::General => gl_coords(&a, self.size_per_grade * grade)?,
            FactorKind::Orthogonal => d_coords(&a),
            FactorKind::Exceptional => a,
        })
    }

    /// Inverse of [`LeviFactor::coords`] on the Dynkin part.
    pub fn dynkin_from_coords(&self, coords: &[i64]) -> Vec<i64> {
        match self.kind {
            FactorKind::General => coords.windows(2).map(|w| (w[0] - w[1]) / 2).collect(),
            FactorKind::Orthogonal => {
                let n = coords.len();
                let mut a: Vec<i64> = coords.windows(2).map(|w| (w[0] - w[1]) / 2).collect();
                a.push((coords[n - 2] + coords[n - 1]) / 2);
                a
            }
            FactorKind::Exceptional => coords.to_vec(),
        }
    }
}

/// Doubled GL ε-coordinates from type-A Dynkin labels and total size.
pub fn gl_coords(a: &[i64], size: i64) -> Result<Vec<i64>> {
    let n = a.len() as i64 + 1;
    let weighted: i64 = a.iter().enumerate().map(|(j, x)| (j as i64 + 1) * x).sum();
    let num = 2 * (size - weighted);
    if num % n != 0 {
        return Err(Error::NonIntegral);
    }
    let last = num / n;
    let mut out = vec![0; n as usize];
    out[n as usize - 1] = last;
    for i in (0..a.len()).rev() {
        out[i] = out[i + 1] + 2 * a[i];
    }
    Ok(out)
}

/// Doubled D(n) ε-coordinates from Dynkin labels.
pub fn d_coords(a: &[i64]) -> Vec<i64> {
    let n = a.len();
    let mut out = vec![0i64; n];
    // ω_i = ε_1+…+ε_i (i ≤ n−2), ω_{n−1} = ½(ε_1+…+ε_{n−1}−ε_n), ω_n = ½(ε_1+…+ε_n)
    for (i, &k) in a.iter().enumerate() {
        for (j, x) in out.iter_mut().enumerate() {
            *x += k * if i < n - 2 {
                if j <= i {
                    2
                } else {
                    0
                }
            } else if i == n - 2 {
                if j == n - 1 {
                    -1
                } else {
                    1
                }
            } else {
                1
            };
        }
    }
    out
}

/// Name of a weight vector of `g_1`. Parts are separated by `;`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Label(pub Vec<Vec<u8>>);

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            if p.is_empty() {
                f.write_str("∅")?;
            }
            for d in p {
                write!(f, "{d}")?;
            }
        }
        f.write_str("]")
    }
}

impl Label {
    /// Parse a bracketed label for the given case; `∅` and `0` denote the
    /// empty set where subsets are expected.
    pub fn parse(case: Case, text: &str) -> Result<Label> {
        let bad = || Error::MalformedLabel(text.to_string());
        let inner = text
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(bad)?;
        let raw: Vec<&str> = inner.split(';').map(str::trim).collect();
        let digits = |s: &str, allow_empty: bool| -> Result<Vec<u8>> {
            if s == "∅" || s == "\\emptyset" || (allow_empty && (s == "0" || s.is_empty())) {
                return if allow_empty { Ok(Vec::new()) } else { Err(bad()) };
            }
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(bad))
                .collect()
        };
        let parts: Vec<Vec<u8>> = match (case, raw.len()) {
            (Case::E7a1, 1) | (Case::E7a2, 1) => vec![digits(raw[0], case == Case::E7a1)?],
            (Case::E7a3, 2) | (Case::E7a5, 2) => vec![digits(raw[0], false)?, digits(raw[1], false)?],
            (Case::E7a4, 3) => raw.iter().map(|s| digits(s, false)).collect::<Result<_>>()?,
            (Case::E7a6, 2) => vec![digits(raw[0], false)?, digits(raw[1], true)?],
            (Case::E7a7, 1) => vec![digits(raw[0], false)?],
            _ => return Err(bad()),
        };
        let mut label = Label(parts);
        if case != Case::E7a7 {
            for p in &mut label.0 {
                p.sort_unstable();
            }
        }
        Ok(label)
    }
}

/// Doubled ε-coordinates the label stands for, factor by factor.
fn label_coords(case: Case, label: &Label) -> Option<Vec<Vec<i64>>> {
    let p = &label.0;
    let ind = |n: usize, set: &[u8]| -> Option<Vec<i64>> {
        let mut v = vec![0; n];
        for &d in set {
            let i = (d as usize).checked_sub(1)?;
            if i >= n || v[i] != 0 {
                return None;
            }
            v[i] = 2;
        }
        Some(v)
    };
    let spin = |n: usize, set: &[u8]| -> Option<Vec<i64>> {
        let mut v = vec![1; n];
        for &d in set {
            let i = (d as usize).checked_sub(1)?;
            if i >= n || v[i] != 1 {
                return None;
            }
            v[i] = -1;
        }
        Some(v)
    };
    let single = |n: usize, s: &[u8]| if s.len() == 1 { ind(n, s) } else { None };
    Some(match case {
        Case::E7a1 => vec![spin(6, &p[0])?],
        Case::E7a2 if p[0].len() == 3 => vec![ind(7, &p[0])?],
        Case::E7a3 if p[1].len() == 2 => vec![single(2, &p[0])?, ind(6, &p[1])?],
        Case::E7a4 => vec![single(2, &p[0])?, single(3, &p[1])?, single(4, &p[2])?],
        Case::E7a5 if p[1].len() == 2 => vec![single(3, &p[0])?, ind(5, &p[1])?],
        Case::E7a6 => vec![single(2, &p[0])?, spin(5, &p[1])?],
        Case::E7a7 => vec![p[0].iter().map(|&d| d as i64).collect()],
        _ => return None,
    })
}

/// A Z-graded E7 with its label scheme for `g_1`.
#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    pub case: Case,
    pub rs: RootSystem,
    pub node: usize,
    /// Roots (simple-root coefficients) by degree.
    pub components: BTreeMap<i64, Vec<Vec<i64>>>,
    pub levi: Vec<LeviFactor>,
    /// The fundamental coweight of the node, as a doubled ε-vector.
    pub grading_element: Weight,
    labels: Vec<(Label, Vec<i64>)>,
    by_label: HashMap<Label, usize>,
    by_root: HashMap<Vec<i64>, usize>,
    /// 2·C⁻¹ of E7, used to recover grades from Dynkin labels.
    inv2: Vec<Vec<i64>>,
}

/// Grade E7 by the given node (1..=7, Bourbaki numbering).
pub fn grade(node: usize) -> Result<GradedAlgebra> {
    let case = Case::from_node(node)?;
    GradedAlgebra::new(case)
}

impl GradedAlgebra {
    pub fn new(case: Case) -> Result<GradedAlgebra> {
        let rs = build_root_system(DiagramType::E7)?;
        let k = case.node() - 1;
        let mut components: BTreeMap<i64, Vec<Vec<i64>>> = BTreeMap::new();
        for r in &rs.positive_root_coeffs {
            components.entry(r[k]).or_default().push(r.clone());
            let neg: Vec<i64> = r.iter().map(|x| -x).collect();
            components.entry(-r[k]).or_default().push(neg);
        }
        let levi = case.levi_factors();
        let grading_element = rs.to_epsilon(&rs.fundamental_weights[k])?;
        let inv = linalg::inverse(&rs.cartan).expect("invertible");
        let inv2 = inv
            .iter()
            .map(|r| r.iter().map(|x| (x * num_rational::BigRational::from_integer(2.into())).to_integer().try_into().unwrap()).collect())
            .collect();
        let mut g = GradedAlgebra {
            case,
            rs,
            node: k + 1,
            components,
            levi,
            grading_element,
            labels: Vec::new(),
            by_label: HashMap::new(),
            by_root: HashMap::new(),
            inv2,
        };
        g.build_labels()?;
        Ok(g)
    }

    fn build_labels(&mut self) -> Result<()> {
        let g1 = self.component(1).to_vec();
        let coords_of: HashMap<Vec<Vec<i64>>, Vec<i64>> = g1
            .iter()
            .map(|r| Ok((self.factor_coords(&self.root_dynkin(r), 1)?, r.clone())))
            .collect::<Result<_>>()?;
        let mut labels = Vec::new();
        for label in enumerate_labels(self.case) {
            let c = label_coords(self.case, &label).expect("enumerated labels are valid");
            let root = match self.case {
                Case::E7a7 => Some(c[0].clone()).filter(|r| g1.contains(r)),
                _ => coords_of.get(&c).cloned(),
            };
            if let Some(r) = root {
                labels.push((label, r));
            }
        }
        if labels.len() != g1.len() {
            return Err(Error::Parse(format!(
                "{}: label scheme covers {} of {} weights",
                self.case,
                labels.len(),
                g1.len()
            )));
        }
        labels.sort();
        self.by_label = labels.iter().enumerate().map(|(i, (l, _))| (l.clone(), i)).collect();
        self.by_root = labels.iter().enumerate().map(|(i, (_, r))| (r.clone(), i)).collect();
        self.labels = labels;
        Ok(())
    }

    pub fn component(&self, i: i64) -> &[Vec<i64>] {
        self.components.get(&i).map_or(&[], Vec::as_slice)
    }

    /// Dimension of `g_i` (`g_0` includes the Cartan subalgebra).
    pub fn dim(&self, i: i64) -> usize {
        self.component(i).len() + if i == 0 { self.rs.rank() } else { 0 }
    }

    pub fn max_degree(&self) -> i64 {
        *self.components.keys().last().unwrap_or(&0)
    }

    /// E7 Dynkin labels of a root given by simple-root coefficients.
    pub fn root_dynkin(&self, r: &[i64]) -> Vec<i64> {
        let c = &self.rs.cartan;
        (0..7).map(|j| (0..7).map(|i| r[i] * c[i][j]).sum()).collect()
    }

    /// Grade (coefficient at the node) of a weight in E7 Dynkin labels.
    pub fn grade_of(&self, labels: &[i64]) -> Result<i64> {
        let k = self.node - 1;
        let s: i64 = self.inv2[k].iter().zip(labels).map(|(a, b)| a * b).sum();
        if s % 2 != 0 {
            return Err(Error::NonIntegral);
        }
        Ok(s / 2)
    }

    /// Per-factor coordinates of a weight given by E7 Dynkin labels.
    pub fn factor_coords(&self, labels: &[i64], grade: i64) -> Result<Vec<Vec<i64>>> {
        self.levi.iter().map(|f| f.coords(labels, grade)).collect()
    }

    /// E7 Dynkin labels from per-factor coordinates and a grade.
    pub fn labels_from_factors(&self, coords: &[Vec<i64>], grade: i64) -> Vec<i64> {
        // Levi labels fix all nodes but k; the grade fixes the last one.
        let mut labels = vec![0i64; 7];
        for (f, c) in self.levi.iter().zip(coords) {
            for (n, a) in f.nodes.iter().zip(f.dynkin_from_coords(c)) {
                labels[n - 1] = a;
            }
        }
        let k = self.node - 1;
        // grade = (Σ inv2[k][j] labels[j]) / 2, linear in labels[k]
        let rest: i64 = (0..7).filter(|&j| j != k).map(|j| self.inv2[k][j] * labels[j]).sum();
        labels[k] = (2 * grade - rest) / self.inv2[k][k];
        labels
    }

    /// Table-style rendering of a weight given by E7 Dynkin labels: GL
    /// parts as ε-coordinates, other factors as bracketed Dynkin labels,
    /// factors separated by `;`.
    pub fn display_weight(&self, labels: &[i64]) -> Result<String> {
        let grade = self.grade_of(labels)?;
        let mut parts = Vec::new();
        for f in &self.levi {
            let text = match f.kind {
                FactorKind::General => {
                    let c = f.coords(labels, grade)?;
                    if c.iter().any(|x| x % 2 != 0) {
                        return Err(Error::NonIntegral);
                    }
                    c.iter().map(|x| (x / 2).to_string()).collect::<Vec<_>>().join(",")
                }
                FactorKind::Orthogonal | FactorKind::Exceptional => {
                    let l: Vec<String> = f.display_nodes.iter().map(|&n| labels[n - 1].to_string()).collect();
                    format!("[{}]", l.join(","))
                }
            };
            parts.push(text);
        }
        Ok(format!("({})", parts.join(";")))
    }

    /// Numbers of each factor in a table-style weight, in display order.
    fn display_parts(&self, text: &str) -> Result<Vec<Vec<i64>>> {
        let bad = |m: &str| Error::Parse(format!("weight `{text}`: {m}"));
        let body = text.trim().strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(|| bad("expected `(…)`"))?;
        let parts: Vec<&str> = body.split(';').collect();
        if parts.len() != self.levi.len() {
            return Err(bad(&format!("{} factors, expected {}", parts.len(), self.levi.len())));
        }
        parts
            .iter()
            .zip(&self.levi)
            .map(|(p, f)| {
                let p = p.trim();
                let inner = match f.kind {
                    FactorKind::General => p,
                    _ => p.strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(|| bad("expected `[…]`"))?,
                };
                let nums: Vec<i64> = inner
                    .split(',')
                    .map(|x| x.trim().parse::<i64>().map_err(|_| bad("not an integer list")))
                    .collect::<Result<_>>()?;
                if nums.len() != f.width() {
                    return Err(bad(&format!("factor {} takes {} entries", f.name, f.width())));
                }
                Ok(nums)
            })
            .collect()
    }

    /// The grade implied by each GL factor of a table-style weight: the
    /// sum of its ε-coordinates divided by the determinant degree per grade.
    /// A weight of a graded piece has the same grade in every factor.
    pub fn display_grades(&self, text: &str) -> Result<Vec<i64>> {
        let parts = self.display_parts(text)?;
        let mut out = Vec::new();
        for (p, f) in parts.iter().zip(&self.levi) {
            if f.kind == FactorKind::General {
                let s: i64 = p.iter().sum();
                if s % f.size_per_grade != 0 {
                    return Err(Error::NonIntegral);
                }
                out.push(s / f.size_per_grade);
            }
        }
        Ok(out)
    }

    /// Inverse of [`GradedAlgebra::display_weight`] for cases with a GL
    /// factor, which is what pins down the grade.
    pub fn parse_display_weight(&self, text: &str) -> Result<Vec<i64>> {
        let grades = self.display_grades(text)?;
        let grade = match grades.as_slice() {
            [] => return Err(Error::Parse(format!("weight `{text}`: grade is not shown"))),
            [g, rest @ ..] if rest.iter().all(|x| x == g) => *g,
            _ => return Err(Error::Parse(format!("weight `{text}`: factors disagree on the grade {grades:?}"))),
        };
        let coords: Vec<Vec<i64>> = self
            .display_parts(text)?
            .into_iter()
            .zip(&self.levi)
            .map(|(p, f)| match f.kind {
                FactorKind::General => p.iter().map(|x| 2 * x).collect(),
                FactorKind::Orthogonal | FactorKind::Exceptional => {
                    let mut a = vec![0; p.len()];
                    for (x, n) in p.iter().zip(&f.display_nodes) {
                        a[f.nodes.iter().position(|m| m == n).expect("permutation")] = *x;
                    }
                    if f.kind == FactorKind::Orthogonal {
                        d_coords(&a)
                    } else {
                        a
                    }
                }
            })
            .collect();
        let labels = self.labels_from_factors(&coords, grade);
        if self.display_weight(&labels)? != text.replace(' ', "") {
            return Err(Error::Parse(format!("weight `{text}` is not integral")));
        }
        Ok(labels)
    }

    /// Invariant form on roots in simple-root coordinates.
    pub fn form(&self, a: &[i64], b: &[i64]) -> i64 {
        let c = &self.rs.cartan;
        let mut s = 0;
        for i in 0..7 {
            for j in 0..7 {
                s += a[i] * c[i][j] * b[j];
            }
        }
        s
    }

    pub fn labels(&self) -> &[(Label, Vec<i64>)] {
        &self.labels
    }

    pub fn root_of_label(&self, label: &Label) -> Result<&[i64]> {
        self.by_label
            .get(label)
            .map(|&i| self.labels[i].1.as_slice())
            .ok_or_else(|| Error::UnknownLabel(label.to_string(), self.case.to_string()))
    }

    pub fn label_of_root(&self, root: &[i64]) -> Option<&Label> {
        self.by_root.get(root).map(|&i| &self.labels[i].0)
    }

    /// Position of a label in [`GradedAlgebra::labels`].
    pub fn label_index(&self, label: &Label) -> Option<usize> {
        self.by_label.get(label).copied()
    }

    pub fn parse_label(&self, text: &str) -> Result<Label> {
        let l = Label::parse(self.case, text)?;
        self.root_of_label(&l)?;
        Ok(l)
    }

    /// Invariant form evaluated on two labelled weights of `g_1`.
    pub fn scalar_product(&self, a: &Label, b: &Label) -> Result<i64> {
        Ok(self.form(self.root_of_label(a)?, self.root_of_label(b)?))
    }
}

/// Closed-form scalar product of two labels, where the case has one.
pub fn closed_form_scalar_product(case: Case, a: &Label, b: &Label) -> Option<i64> {
    let inter = |x: &[u8], y: &[u8]| x.iter().filter(|d| y.contains(d)).count() as i64;
    let symdiff = |x: &[u8], y: &[u8]| x.len() as i64 + y.len() as i64 - 2 * inter(x, y);
    let (p, q) = (&a.0, &b.0);
    Some(match case {
        Case::E7a1 => 2 - symdiff(&p[0], &q[0]) / 2,
        Case::E7a2 => inter(&p[0], &q[0]) - 1,
        Case::E7a3 | Case::E7a5 => inter(&p[0], &q[0]) + inter(&p[1], &q[1]) - 1,
        Case::E7a4 => inter(&p[0], &q[0]) + inter(&p[1], &q[1]) + inter(&p[2], &q[2]) - 1,
        Case::E7a6 => 1 + inter(&p[0], &q[0]) - symdiff(&p[1], &q[1]) / 2,
        Case::E7a7 => return None,
    })
}

fn subsets(n: u8, k: Option<usize>) -> Vec<Vec<u8>> {
    (0u32..(1 << n))
        .map(|m| (1..=n).filter(|i| m & (1 << (i - 1)) != 0).collect::<Vec<u8>>())
        .filter(|s| k.is_none_or(|k| s.len() == k))
        .collect()
}

fn enumerate_labels(case: Case) -> Vec<Label> {
    let even = |n| subsets(n, None).into_iter().filter(|s| s.len() % 2 == 0).collect::<Vec<_>>();
    let one = |n: u8| (1..=n).map(|i| vec![i]).collect::<Vec<_>>();
    let mut out = Vec::new();
    match case {
        Case::E7a1 => out.extend(even(6).into_iter().map(|s| Label(vec![s]))),
        Case::E7a2 => out.extend(subsets(7, Some(3)).into_iter().map(|s| Label(vec![s]))),
        Case::E7a3 | Case::E7a5 => {
            let (e, f) = if case == Case::E7a3 { (2, 6) } else { (3, 5) };
            for a in one(e) {
                for s in subsets(f, Some(2)) {
                    out.push(Label(vec![a.clone(), s]));
                }
            }
        }
        Case::E7a4 => {
            for a in one(2) {
                for i in one(3) {
                    for u in one(4) {
                        out.push(Label(vec![a.clone(), i.clone(), u]));
                    }
                }
            }
        }
        Case::E7a6 => {
            for a in one(2) {
                for s in even(5) {
                    out.push(Label(vec![a.clone(), s]));
                }
            }
        }
        Case::E7a7 => {
            let rs = build_root_system(DiagramType::E7).expect("E7");
            for r in &rs.positive_root_coeffs {
                if r[6] == 1 {
                    out.push(Label(vec![r.iter().map(|&x| x as u8).collect()]));
                }
            }
        }
    }
    out
}
