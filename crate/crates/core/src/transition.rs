//! The equivariant map from the Specht module to web space, its matrix in the
//! two canonical bases, and the checks run against that matrix.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graphs::{
    reachability_poset, tableau_graph_on, web_graph_on, LabeledDigraph, PosetRelation,
};
use crate::linalg::{self, Matrix};
use crate::report::Report;
use crate::scalar::{Coefficient, ExactInteger};
use crate::specht::SpechtBasis;
use crate::tableaux::{enumerate_tableaux, Tableau};
use crate::webaction::{WebBasis, WebVector};
use crate::webs::tableau_to_web;

/// Which end of a path's label word acts on the ground web first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordConvention {
    /// The label of the first edge out of the source acts first.
    FirstActsFirst,
    /// The label of the last edge acts first.
    LastActsFirst,
}

/// Everything indexed for one `n`: both bases, both graphs, and the bijection
/// between their canonical indices.
#[derive(Debug, Clone)]
pub struct Bases {
    pub webs: WebBasis,
    pub tableaux: Vec<Tableau>,
    pub tableau_graph: LabeledDigraph,
    pub web_graph: LabeledDigraph,
    /// Web index of each tableau index.
    pub psi: Vec<usize>,
    /// Tableau index of each web index.
    pub psi_inv: Vec<usize>,
    /// Lexicographically smallest label word of a source path, per tableau.
    min_paths: Vec<Vec<usize>>,
    /// Lexicographically largest label word of a source path, per tableau.
    max_paths: Vec<Vec<usize>>,
}

impl Bases {
    pub fn new(n: usize) -> Result<Self> {
        let webs = WebBasis::new(n)?;
        let tableaux = enumerate_tableaux(n)?;
        let tableau_graph = tableau_graph_on(&tableaux)?;
        let web_graph = web_graph_on(&webs)?;
        let psi = tableaux
            .iter()
            .map(|t| {
                webs.index_of(&tableau_to_web(t))
                    .ok_or_else(|| Error::Defect(format!("{t} has no web")))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut psi_inv = vec![usize::MAX; psi.len()];
        for (t, &w) in psi.iter().enumerate() {
            psi_inv[w] = t;
        }
        let source = tableaux
            .iter()
            .position(|t| *t == Tableau::column_filled(n).expect("n >= 1"))
            .expect("column-filled tableau is standard");
        let min_paths = extremal_paths(&tableau_graph, source, false)?;
        let max_paths = extremal_paths(&tableau_graph, source, true)?;
        Ok(Self {
            webs,
            tableaux,
            tableau_graph,
            web_graph,
            psi,
            psi_inv,
            min_paths,
            max_paths,
        })
    }

    pub fn n(&self) -> usize {
        self.webs.n()
    }

    pub fn len(&self) -> usize {
        self.webs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.webs.is_empty()
    }

    pub fn tableau_index(&self, t: &Tableau) -> Option<usize> {
        self.tableaux.iter().position(|u| u == t)
    }

    /// Label word of the lexicographically smallest source path to `t`.
    pub fn source_path(&self, t: usize) -> &[usize] {
        &self.min_paths[t]
    }

    pub fn web_poset(&self) -> Result<PosetRelation> {
        reachability_poset(&self.web_graph)
    }

    /// `act_word(labels, w0)` under the given convention.
    pub fn word_image<C: Coefficient>(
        &self,
        labels: &[usize],
        convention: WordConvention,
    ) -> Result<WebVector<C>> {
        let ground = WebVector::basis(self.n(), 0);
        match convention {
            WordConvention::FirstActsFirst => self.webs.act_word(labels, &ground),
            WordConvention::LastActsFirst => {
                let reversed: Vec<usize> = labels.iter().rev().copied().collect();
                self.webs.act_word(&reversed, &ground)
            }
        }
    }

    /// The image of `v_T`: the label word of a source path to `T`, applied to
    /// the ground web. Recomputed along a second path when one exists; a
    /// disagreement is a defect.
    pub fn phi_vector<C: Coefficient>(&self, t: &Tableau) -> Result<WebVector<C>> {
        let k = self
            .tableau_index(t)
            .ok_or_else(|| Error::Parse(format!("{t} does not have n = {}", self.n())))?;
        let v = self.word_image(&self.min_paths[k], WordConvention::FirstActsFirst)?;
        if self.max_paths[k] != self.min_paths[k] {
            let other = self.word_image(&self.max_paths[k], WordConvention::FirstActsFirst)?;
            if other != v {
                return Err(Error::Defect(format!(
                    "image of v_T for {t} depends on the path"
                )));
            }
        }
        Ok(v)
    }

    /// Column for web `w'` is the image of `v_{ψ⁻¹(w')}`. Columns are built
    /// incrementally along the shortest-lex path tree.
    pub fn transition_matrix<C: Coefficient>(&self) -> Result<TransitionMatrix<C>> {
        self.matrix_along(&self.min_paths, WordConvention::FirstActsFirst)
    }

    /// Same matrix assembled from the lexicographically largest paths.
    pub fn transition_matrix_alt_paths<C: Coefficient>(&self) -> Result<TransitionMatrix<C>> {
        self.matrix_along(&self.max_paths, WordConvention::FirstActsFirst)
    }

    pub fn transition_matrix_with<C: Coefficient>(
        &self,
        convention: WordConvention,
    ) -> Result<TransitionMatrix<C>> {
        self.matrix_along(&self.min_paths, convention)
    }

    fn matrix_along<C: Coefficient>(
        &self,
        paths: &[Vec<usize>],
        convention: WordConvention,
    ) -> Result<TransitionMatrix<C>> {
        let size = self.len();
        let mut columns: Vec<Option<WebVector<C>>> = vec![None; size];
        let mut order: Vec<usize> = (0..size).collect();
        order.sort_by_key(|&t| paths[t].len());
        for t in order {
            let path = &paths[t];
            let col = match (convention, path.split_last()) {
                (_, None) => WebVector::basis(self.n(), 0),
                (WordConvention::FirstActsFirst, Some((&last, prefix))) => {
                    let parent = self.find_by_path(paths, prefix)?;
                    let prev = columns[parent].as_ref().expect("parents come first");
                    self.webs.act_simple_on_vector(last, prev)?
                }
                (WordConvention::LastActsFirst, Some(_)) => self.word_image(path, convention)?,
            };
            columns[t] = Some(col);
        }
        let mut entries = Matrix::zeros(size, size);
        for (t, col) in columns.into_iter().enumerate() {
            let col = col.expect("every tableau reached");
            for (w, c) in col.terms() {
                entries.set(w, self.psi[t], c.clone());
            }
        }
        Ok(TransitionMatrix {
            n: self.n(),
            labels: self.webs.webs().iter().map(ToString::to_string).collect(),
            entries,
        })
    }

    fn find_by_path(&self, paths: &[Vec<usize>], prefix: &[usize]) -> Result<usize> {
        let mut v = self
            .tableau_index(&Tableau::column_filled(self.n())?)
            .expect("source present");
        for &l in prefix {
            v = self
                .tableau_graph
                .follow(v, l)
                .ok_or_else(|| Error::Defect(format!("path prefix {prefix:?} leaves the graph")))?;
        }
        debug_assert_eq!(paths[v], prefix);
        Ok(v)
    }

    /// `ρ_S(s_i)` re-indexed so that basis vector `k` is `v_{ψ⁻¹(web k)}`.
    pub fn specht_matrix_in_web_order<S: ExactInteger>(
        &self,
        specht: &SpechtBasis,
        i: usize,
    ) -> Result<Matrix<Ratio<S>>> {
        let raw = specht.rep_matrix::<S>(i)?;
        let size = self.len();
        let mut m = Matrix::zeros(size, size);
        for r in 0..size {
            for c in 0..size {
                m.set(r, c, raw.get(self.psi_inv[r], self.psi_inv[c]).clone());
            }
        }
        Ok(m)
    }
}

/// For each vertex, the lexicographically smallest (or largest) label word
/// among directed paths from `source`. All such paths have equal length.
fn extremal_paths(g: &LabeledDigraph, source: usize, largest: bool) -> Result<Vec<Vec<usize>>> {
    let order = g
        .topological_order()
        .ok_or_else(|| Error::Defect("tableau graph has a cycle".into()))?;
    let mut best: Vec<Option<Vec<usize>>> = vec![None; g.vertex_count()];
    best[source] = Some(Vec::new());
    for v in order {
        let Some(path) = best[v].clone() else {
            return Err(Error::Defect(format!(
                "{} unreachable from the source",
                g.name(v)
            )));
        };
        for &(l, d) in g.out_edges(v) {
            let mut candidate = path.clone();
            candidate.push(l);
            let better = match &best[d] {
                None => true,
                Some(cur) if cur.len() != candidate.len() => {
                    return Err(Error::Defect(format!(
                        "paths to {} differ in length",
                        g.name(d)
                    )))
                }
                Some(cur) => (candidate < *cur) != largest && candidate != *cur,
            };
            if better {
                best[d] = Some(candidate);
            }
        }
    }
    Ok(best
        .into_iter()
        .map(|p| p.expect("checked above"))
        .collect())
}

/// Coefficients `c_w^{w'}`: row `w` (output web), column `w'` (input Specht
/// vector `v_{ψ⁻¹(w')}`), both in canonical web order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionMatrix<C> {
    pub n: usize,
    /// Canonical web text forms; row and column labels.
    pub labels: Vec<String>,
    pub entries: Matrix<C>,
}

impl<C: Coefficient> TransitionMatrix<C> {
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn get(&self, row: usize, col: usize) -> &C {
        self.entries.get(row, col)
    }

    pub fn transpose(&self) -> Self {
        Self {
            n: self.n,
            labels: self.labels.clone(),
            entries: self.entries.transpose(),
        }
    }

    /// Header row and column are web text forms; entries are decimal.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let header = std::iter::once(String::new()).chain(self.labels.iter().cloned());
        w.write_record(header).expect("in-memory write");
        for (r, label) in self.labels.iter().enumerate() {
            let row = std::iter::once(label.clone())
                .chain(self.entries.row(r).iter().map(ToString::to_string));
            w.write_record(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
    }
}

impl TransitionMatrix<BigInt> {
    pub fn from_csv(n: usize, text: &str) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .from_reader(text.as_bytes());
        let mut records = reader.records();
        let parse_err = |e: csv::Error| Error::Parse(format!("CSV: {e}"));
        let header = records
            .next()
            .ok_or_else(|| Error::Parse("empty CSV".into()))?
            .map_err(parse_err)?;
        let labels: Vec<String> = header.iter().skip(1).map(str::to_string).collect();
        let mut rows = Vec::with_capacity(labels.len());
        for (r, record) in records.enumerate() {
            let record = record.map_err(parse_err)?;
            let label = record.get(0).unwrap_or_default();
            if labels.get(r).map(String::as_str) != Some(label) {
                return Err(Error::Parse(format!(
                    "row {r} label {label:?} does not match header"
                )));
            }
            let row = record
                .iter()
                .skip(1)
                .map(|f| {
                    f.trim()
                        .parse::<BigInt>()
                        .map_err(|_| Error::Parse(format!("bad entry {f:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if row.len() != labels.len() {
                return Err(Error::Parse(format!(
                    "row {r} has {} entries, expected {}",
                    row.len(),
                    labels.len()
                )));
            }
            rows.push(row);
        }
        if rows.len() != labels.len() {
            return Err(Error::Parse("matrix is not square".into()));
        }
        Ok(Self {
            n,
            labels,
            entries: Matrix::from_rows(rows),
        })
    }
}

pub fn phi_vector(t: &Tableau) -> Result<WebVector<BigInt>> {
    Bases::new(t.n())?.phi_vector(t)
}

pub fn transition_matrix(n: usize) -> Result<TransitionMatrix<BigInt>> {
    Bases::new(n)?.transition_matrix()
}

/// Zero strictly below the diagonal and ones on it.
pub fn check_triangularity<C: Coefficient>(m: &TransitionMatrix<C>) -> Report {
    let mut report = Report::new("triangularity");
    for (r, c, v) in m.entries.entries() {
        if r > c && !v.is_zero() {
            report.fail(
                "entry",
                [&m.labels[r], &m.labels[c]],
                format!("{v} below the diagonal"),
            );
        } else if r == c && !v.is_one() {
            report.fail(
                "entry",
                [&m.labels[r], &m.labels[c]],
                format!("diagonal entry {v}"),
            );
        }
    }
    report.set_stat("size", m.size() as u64);
    report
}

/// A nonzero entry at (v, w') requires v ⪯ w'.
pub fn check_poset_support<C: Coefficient>(
    m: &TransitionMatrix<C>,
    poset: &PosetRelation,
) -> Report {
    let mut report = Report::new("poset_support");
    let mut nonzero = 0;
    for (r, c, v) in m.entries.entries() {
        if !v.is_zero() {
            nonzero += 1;
            if !poset.leq(r, c) {
                report.fail(
                    "entry",
                    [&m.labels[r], &m.labels[c]],
                    format!("entry {v} outside the order"),
                );
            }
        }
    }
    report.set_stat("nonzero_entries", nonzero);
    report
}

/// Report-only scan for the two open conjectures: every entry is nonnegative,
/// and the support is exactly the order. Violations are findings, not errors.
pub fn conjecture_report<C: Coefficient>(m: &TransitionMatrix<C>, poset: &PosetRelation) -> Report {
    let mut report = Report::new("conjecture");
    let (mut negative, mut mismatched, mut nonzero, mut related) = (0, 0, 0, 0);
    for (r, c, v) in m.entries.entries() {
        let rel = poset.leq(r, c);
        related += rel as u64;
        nonzero += !v.is_zero() as u64;
        if v.is_negative() {
            negative += 1;
            report.fail(
                "negative_entry",
                [&m.labels[r], &m.labels[c]],
                v.to_string(),
            );
        }
        if v.is_zero() == rel {
            mismatched += 1;
            report.fail(
                "support_mismatch",
                [&m.labels[r], &m.labels[c]],
                format!("entry {v}, related {rel}"),
            );
        }
    }
    report.set_stat("negative_entries", negative);
    report.set_stat("support_mismatches", mismatched);
    report.set_stat("nonzero_entries", nonzero);
    report.set_stat("related_pairs", related);
    report
}

/// `ρ_W(s_i) M = M ρ_S(s_i)` for every generator, in exact rationals.
pub fn check_equivariance(n: usize) -> Result<Report> {
    let bases = Bases::new(n)?;
    let m = bases.transition_matrix::<BigInt>()?;
    equivariance_of(&bases, &m, "equivariance")
}

pub fn equivariance_of(bases: &Bases, m: &TransitionMatrix<BigInt>, name: &str) -> Result<Report> {
    let specht = SpechtBasis::new(bases.n())?;
    let mr = m.entries.map(|v| Ratio::from_integer(v.clone()));
    let mut report = Report::new(name);
    for i in bases.webs.generators() {
        let web = bases
            .webs
            .generator_matrix::<BigInt>(i)?
            .map(|v| Ratio::from_integer(v.clone()));
        let sp = bases.specht_matrix_in_web_order::<BigInt>(&specht, i)?;
        let (lhs, rhs) = (web.mul(&mr), mr.mul(&sp));
        for (r, c, v) in lhs.entries() {
            if v != rhs.get(r, c) {
                report.fail(
                    "entry",
                    [format!("s{i}"), m.labels[r].clone(), m.labels[c].clone()],
                    format!("web side {v}, Specht side {}", rhs.get(r, c)),
                );
            }
        }
    }
    report.set_stat("generators", (2 * bases.n() - 1) as u64);
    Ok(report)
}

/// Span of integer equations, compacted to an echelon basis whenever the
/// pending rows outgrow the column count.
struct RowSpace {
    cols: usize,
    rows: Vec<Vec<BigInt>>,
}

impl RowSpace {
    fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
        }
    }

    /// Adds a rational form, cleared of denominators and content.
    fn push(&mut self, eq: &[Ratio<BigInt>]) {
        if eq.iter().all(Zero::is_zero) {
            return;
        }
        let lcm = eq.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let ints: Vec<BigInt> = eq
            .iter()
            .map(|v| (v * Ratio::from_integer(lcm.clone())).to_integer())
            .collect();
        self.rows.push(primitive(ints));
        if self.rows.len() > 2 * self.cols + 64 {
            self.compact();
        }
    }

    fn compact(&mut self) {
        self.rows.sort();
        self.rows.dedup();
        if self.rows.is_empty() {
            return;
        }
        let e = linalg::fraction_free_echelon(Matrix::from_rows(std::mem::take(&mut self.rows)));
        self.rows = (0..e.rank())
            .map(|r| primitive(e.matrix.row(r).to_vec()))
            .collect();
    }

    fn nullspace(mut self) -> Vec<Vec<Ratio<BigInt>>> {
        self.compact();
        let system = if self.rows.is_empty() {
            Matrix::zeros(1, self.cols)
        } else {
            Matrix::from_rows(self.rows)
        };
        linalg::nullspace(&system)
    }
}

fn primitive(row: Vec<BigInt>) -> Vec<BigInt> {
    let g = row.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() || g.is_one() {
        row
    } else {
        row.into_iter().map(|v| v / &g).collect()
    }
}

/// Basis of `{X : ρ_W(s_i) X = X ρ_S(s_i) for all i}` over the rationals,
/// each element as a row-major matrix in web order. Solves for all entries
/// of `X` at once.
pub fn commutant_basis(bases: &Bases) -> Result<Vec<Matrix<Ratio<BigInt>>>> {
    let size = bases.len();
    let specht = SpechtBasis::new(bases.n())?;
    let unknowns = size * size;
    let mut space = RowSpace::new(unknowns);
    for i in bases.webs.generators() {
        let web = bases.webs.generator_matrix::<BigInt>(i)?;
        let sp = bases.specht_matrix_in_web_order::<BigInt>(&specht, i)?;
        for r in 0..size {
            for c in 0..size {
                // (ρ_W X)[r][c] - (X ρ_S)[r][c] as a form in X[k][l] = x[k * size + l].
                let mut eq = vec![Ratio::<BigInt>::zero(); unknowns];
                for k in 0..size {
                    let a = web.get(r, k);
                    if !a.is_zero() {
                        eq[k * size + c] += Ratio::from_integer(a.clone());
                    }
                    let b = sp.get(k, c);
                    if !b.is_zero() {
                        eq[r * size + k] -= b.clone();
                    }
                }
                space.push(&eq);
            }
        }
    }
    Ok(space
        .nullspace()
        .into_iter()
        .map(|x| Matrix::from_rows(x.chunks(size).map(<[_]>::to_vec).collect()))
        .collect())
}

/// The same commutant, solved through the cyclic vector `v_{T0}`. Each
/// standard Specht vector is `ρ_S(σ_c) v_{T0}` for the label word `σ_c` of a
/// source path, so a commuting `X` is fixed by `x = X e_{w0}` through
/// `X e_c = ρ_W(σ_c) x`; only the `C_n` entries of `x` are unknown.
pub fn cyclic_commutant_basis(bases: &Bases) -> Result<Vec<Matrix<Ratio<BigInt>>>> {
    let size = bases.len();
    let n = bases.n();
    let specht = SpechtBasis::new(n)?;
    let sp = bases
        .webs
        .generators()
        .map(|i| bases.specht_matrix_in_web_order::<BigInt>(&specht, i))
        .collect::<Result<Vec<_>>>()?;
    // words[c] carries e_{w0} to e_c on the Specht side.
    let mut words = Vec::with_capacity(size);
    for c in 0..size {
        let word = bases.source_path(bases.psi_inv[c]).to_vec();
        let mut v = vec![Ratio::<BigInt>::zero(); size];
        v[0] = Ratio::one();
        for &l in &word {
            v = sp[l - 1].mul_vec(&v);
        }
        if v.iter()
            .enumerate()
            .any(|(k, x)| *x != if k == c { Ratio::one() } else { Ratio::zero() })
        {
            return Err(Error::Defect(format!(
                "source path does not reach {}",
                bases.webs.web(c)
            )));
        }
        words.push(word);
    }
    // lift[c] = ρ_W(σ_c) as columns of web vectors.
    let lift = words
        .iter()
        .map(|word| {
            (0..size)
                .map(|j| bases.webs.act_word::<BigInt>(word, &WebVector::basis(n, j)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let mut space = RowSpace::new(size);
    for i in bases.webs.generators() {
        let s = &sp[i - 1];
        for c in 0..size {
            // ρ_W(s_i) X e_c - Σ_k ρ_S(s_i)[k][c] X e_k, as forms in x.
            let mut forms = vec![vec![Ratio::<BigInt>::zero(); size]; size];
            for (j, col) in lift[c].iter().enumerate() {
                for (r, v) in bases.webs.act_simple_on_vector(i, col)?.terms() {
                    forms[r][j] += Ratio::from_integer(v.clone());
                }
            }
            for (k, lifted) in lift.iter().enumerate() {
                let coeff = s.get(k, c);
                if coeff.is_zero() {
                    continue;
                }
                for (j, col) in lifted.iter().enumerate() {
                    for (r, v) in col.terms() {
                        forms[r][j] -= coeff * Ratio::from_integer(v.clone());
                    }
                }
            }
            for form in &forms {
                space.push(form);
            }
        }
    }
    space
        .nullspace()
        .into_iter()
        .map(|x| {
            let x = WebVector::from_dense(n, &x);
            let columns = words
                .iter()
                .map(|word| Ok(bases.webs.act_word(word, &x)?.to_dense(size)))
                .collect::<Result<Vec<_>>>()?;
            Ok(Matrix::from_columns(&columns))
        })
        .collect()
}

pub fn commutant_dimension(n: usize) -> Result<usize> {
    Ok(commutant_basis(&Bases::new(n)?)?.len())
}

/// Uniqueness: the commutant is one-dimensional and, scaled so that its
/// (w0, w0) entry is 1, equals the transition matrix.
pub fn check_uniqueness(bases: &Bases, m: &TransitionMatrix<BigInt>) -> Result<Report> {
    Ok(uniqueness_of(&commutant_basis(bases)?, m, "uniqueness"))
}

/// As [`check_uniqueness`], with the commutant from [`cyclic_commutant_basis`].
pub fn check_uniqueness_cyclic(bases: &Bases, m: &TransitionMatrix<BigInt>) -> Result<Report> {
    Ok(uniqueness_of(
        &cyclic_commutant_basis(bases)?,
        m,
        "uniqueness_cyclic",
    ))
}

fn uniqueness_of(
    basis: &[Matrix<Ratio<BigInt>>],
    m: &TransitionMatrix<BigInt>,
    name: &str,
) -> Report {
    let mut report = Report::new(name);
    report.set_stat("commutant_dimension", basis.len() as u64);
    if basis.len() != 1 {
        report.fail(
            "commutant",
            [basis.len()],
            "expected a one-dimensional commutant",
        );
        return report;
    }
    let x = &basis[0];
    let scale = x.get(0, 0).clone();
    if scale.is_zero() {
        report.fail(
            "entry",
            [&m.labels[0], &m.labels[0]],
            "commutant generator vanishes at (w0, w0)",
        );
        return report;
    }
    for (r, c, v) in x.entries() {
        let normalized = v / &scale;
        if normalized != Ratio::from_integer(m.get(r, c).clone()) {
            report.fail(
                "entry",
                [&m.labels[r], &m.labels[c]],
                format!("commutant {normalized} vs transition {}", m.get(r, c)),
            );
        }
    }
    report
}

/// Every commutant element sends the coordinates of `v_{T0}` to a multiple of
/// the ground web. Independent of how the transition matrix is built.
pub fn source_image_check(n: usize) -> Result<Report> {
    let bases = Bases::new(n)?;
    Ok(source_image_of(&bases, &commutant_basis(&bases)?))
}

pub fn source_image_of(bases: &Bases, basis: &[Matrix<Ratio<BigInt>>]) -> Report {
    let mut report = Report::new("source_image");
    report.set_stat("commutant_dimension", basis.len() as u64);
    // ψ(T0) = w0 is web 0, so v_{T0} is coordinate vector 0.
    for (k, x) in basis.iter().enumerate() {
        for r in 1..bases.len() {
            if !x.get(r, 0).is_zero() {
                report.fail(
                    "entry",
                    [format!("basis {k}"), bases.webs.web(r).to_string()],
                    format!("image of v_T0 has coefficient {} here", x.get(r, 0)),
                );
            }
        }
    }
    report
}

/// Every web-graph edge `w''' --s_i--> w'` satisfies
/// column(w') = ρ_W(s_i) column(w''').
pub fn check_column_recurrence(bases: &Bases, m: &TransitionMatrix<BigInt>) -> Result<Report> {
    let mut report = Report::new("column_recurrence");
    for e in bases.web_graph.edges() {
        let col = WebVector::from_dense(bases.n(), &m.entries.column(e.src));
        let image = bases.webs.act_simple_on_vector(e.label, &col)?;
        if image.to_dense(bases.len()) != m.entries.column(e.dst) {
            report.fail(
                "edge",
                [bases.web_graph.name(e.src), bases.web_graph.name(e.dst)],
                format!("s{} does not carry one column to the next", e.label),
            );
        }
    }
    report.set_stat("edges", bases.web_graph.edges().len() as u64);
    Ok(report)
}

/// For `w ⪯ w'''`, an edge `w''' --s_i--> w'` and an edge `w --s_i--> w''`,
/// the order must contain `w'' ⪯ w'`.
pub fn check_diamond_transport(bases: &Bases, poset: &PosetRelation) -> Report {
    let mut report = Report::new("diamond_transport");
    let g = &bases.web_graph;
    let mut configurations = 0;
    for e in g.edges() {
        for w in 0..bases.len() {
            if !poset.leq(w, e.src) {
                continue;
            }
            if let Some(w2) = g.follow(w, e.label) {
                configurations += 1;
                if !poset.leq(w2, e.dst) {
                    report.fail(
                        "configuration",
                        [g.name(w), g.name(e.src), g.name(e.dst)],
                        format!("s{}", e.label),
                    );
                }
            }
        }
    }
    report.set_stat("configurations", configurations);
    report
}

/// Exact determinant of the transition matrix.
pub fn transition_determinant<S: ExactInteger>(m: &TransitionMatrix<S>) -> S {
    linalg::determinant(&m.entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: Vec<Vec<i64>>) -> Matrix<BigInt> {
        Matrix::from_rows(rows).map(|v| BigInt::from(*v))
    }

    #[test]
    fn phi_examples() {
        let bases = Bases::new(2).unwrap();
        let t0 = Tableau::column_filled(2).unwrap();
        assert_eq!(
            bases.phi_vector::<BigInt>(&t0).unwrap(),
            WebVector::basis(2, 0)
        );
        let t1 = Tableau::row_filled(2).unwrap();
        let v = bases.phi_vector::<BigInt>(&t1).unwrap();
        assert_eq!(
            v.display(&bases.webs).to_string(),
            "+1·(1,2)(3,4) +1·(1,4)(2,3)"
        );

        let v = phi_vector(&Tableau::row_filled(3).unwrap()).unwrap();
        assert_eq!(v.len(), 5);
        assert!(v.terms().all(|(_, c)| c.is_one()));
    }

    #[test]
    fn matrix_examples() {
        assert_eq!(transition_matrix(1).unwrap().entries, ints(vec![vec![1]]));
        let m = transition_matrix(2).unwrap();
        assert_eq!(m.entries, ints(vec![vec![1, 1], vec![0, 1]]));
        assert_eq!(m.labels, ["(1,2)(3,4)", "(1,4)(2,3)"]);

        let m = transition_matrix(3).unwrap();
        assert_eq!(m.size(), 5);
        assert!(m
            .entries
            .entries()
            .all(|(_, _, v)| v.is_zero() || v.is_one()));
        assert!(m.entries.column(4).iter().all(One::is_one));
    }

    #[test]
    fn triangularity_and_negative_control() {
        let m = transition_matrix(2).unwrap();
        assert!(check_triangularity(&m).pass());
        let r = check_triangularity(&m.transpose());
        assert!(!r.pass());
        assert_eq!(r.witnesses()[0].subject, ["(1,4)(2,3)", "(1,2)(3,4)"]);
    }

    #[test]
    fn support_and_conjecture_small() {
        for n in 1..=4 {
            let bases = Bases::new(n).unwrap();
            let m = bases.transition_matrix::<BigInt>().unwrap();
            let poset = bases.web_poset().unwrap();
            assert!(check_poset_support(&m, &poset).pass());
            assert!(conjecture_report(&m, &poset).pass());
            let identity: TransitionMatrix<BigInt> = TransitionMatrix {
                n,
                labels: m.labels.clone(),
                entries: Matrix::identity(m.size()),
            };
            assert!(check_poset_support(&identity, &poset).pass());
        }
    }

    #[test]
    fn equivariance_small() {
        // n = 2, s_1: both sides equal [[-1, 0], [0, 1]].
        let bases = Bases::new(2).unwrap();
        let specht = SpechtBasis::new(2).unwrap();
        let m = bases.transition_matrix::<BigInt>().unwrap().entries;
        let web = bases.webs.generator_matrix::<BigInt>(1).unwrap();
        let sp = bases
            .specht_matrix_in_web_order::<BigInt>(&specht, 1)
            .unwrap();
        assert_eq!(web.mul(&m), ints(vec![vec![-1, 0], vec![0, 1]]));
        let rhs = m.map(|v| Ratio::from_integer(v.clone())).mul(&sp);
        assert_eq!(
            rhs,
            ints(vec![vec![-1, 0], vec![0, 1]]).map(|v| Ratio::from_integer(v.clone()))
        );
        for n in 1..=3 {
            assert!(check_equivariance(n).unwrap().pass());
        }
    }

    #[test]
    fn commutant_small() {
        assert_eq!(commutant_dimension(1).unwrap(), 1);
        let bases = Bases::new(2).unwrap();
        let basis = commutant_basis(&bases).unwrap();
        assert_eq!(basis.len(), 1);
        let scale = basis[0].get(0, 0).clone();
        let normalized = basis[0].map(|v| v / &scale);
        assert_eq!(
            normalized,
            ints(vec![vec![1, 1], vec![0, 1]]).map(|v| Ratio::from_integer(v.clone()))
        );
        let m = bases.transition_matrix().unwrap();
        assert!(check_uniqueness(&bases, &m).unwrap().pass());
        for n in 1..=3 {
            assert!(source_image_check(n).unwrap().pass());
        }
    }

    #[test]
    fn cyclic_commutant_matches_full_system() {
        for n in 1..=3 {
            let bases = Bases::new(n).unwrap();
            let full = commutant_basis(&bases).unwrap();
            let cyclic = cyclic_commutant_basis(&bases).unwrap();
            assert_eq!(full.len(), 1);
            assert_eq!(cyclic.len(), 1);
            let scale = |x: &Matrix<Ratio<BigInt>>| x.map(|v| v / x.get(0, 0));
            assert_eq!(scale(&full[0]), scale(&cyclic[0]));
        }
    }

    #[test]
    fn csv_round_trip() {
        let m = transition_matrix(2).unwrap();
        let csv = m.to_csv();
        assert_eq!(
            csv,
            ",\"(1,2)(3,4)\",\"(1,4)(2,3)\"\n\"(1,2)(3,4)\",1,1\n\"(1,4)(2,3)\",0,1\n"
        );
        assert_eq!(TransitionMatrix::from_csv(2, &csv).unwrap(), m);
        assert!(TransitionMatrix::from_csv(2, ",a\nb,1\n").is_err());
        assert!(TransitionMatrix::from_csv(2, ",a\na,x\n").is_err());
        assert!(TransitionMatrix::from_csv(2, ",a,b\na,1\n").is_err());
    }

    #[test]
    fn determinant_is_one() {
        for n in 1..=5 {
            assert!(transition_determinant(&transition_matrix(n).unwrap()).is_one());
        }
    }

    #[test]
    fn alternate_paths_agree() {
        for n in 1..=6 {
            let bases = Bases::new(n).unwrap();
            assert_eq!(
                bases.transition_matrix::<BigInt>().unwrap(),
                bases.transition_matrix_alt_paths::<BigInt>().unwrap()
            );
        }
    }
}
