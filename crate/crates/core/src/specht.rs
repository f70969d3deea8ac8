//! The tabloid model of the Specht module for shape (n,n).

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::scalar::{Coefficient, ExactInteger};
use crate::tableaux::{check_generator, check_size, enumerate_tableaux, Filling, Tableau};

/// A row-equivalence class of two-row fillings, identified by its top row set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tabloid {
    top: Vec<usize>,
}

impl Tabloid {
    pub fn new(n: usize, mut top: Vec<usize>) -> Result<Self> {
        check_size(n)?;
        top.sort_unstable();
        top.dedup();
        if top.len() != n || top.iter().any(|&v| v == 0 || v > 2 * n) {
            return Err(Error::Parse(format!(
                "{top:?} is not an {n}-subset of 1..{}",
                2 * n
            )));
        }
        Ok(Self { top })
    }

    pub fn of(filling: &Filling) -> Self {
        let mut top = filling.top().to_vec();
        top.sort_unstable();
        Self { top }
    }

    pub fn n(&self) -> usize {
        self.top.len()
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn swap_values(&self, i: usize) -> Tabloid {
        let mut top: Vec<usize> = self
            .top
            .iter()
            .map(|&v| {
                if v == i {
                    i + 1
                } else if v == i + 1 {
                    i
                } else {
                    v
                }
            })
            .collect();
        top.sort_unstable();
        Tabloid { top }
    }
}

impl fmt::Display for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.top.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// All n-subsets of {1..2n}, lexicographic.
pub fn enumerate_tabloids(n: usize) -> Result<Vec<Tabloid>> {
    check_size(n)?;
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    subsets(2 * n, n, 1, &mut current, &mut out);
    Ok(out)
}

fn subsets(size: usize, k: usize, next: usize, current: &mut Vec<usize>, out: &mut Vec<Tabloid>) {
    if current.len() == k {
        out.push(Tabloid {
            top: current.clone(),
        });
        return;
    }
    for v in next..=size - (k - current.len()) + 1 {
        current.push(v);
        subsets(size, k, v + 1, current, out);
        current.pop();
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TabloidVector<C> {
    n: usize,
    terms: BTreeMap<Tabloid, C>,
}

impl<C: Coefficient> TabloidVector<C> {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Tabloid, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, t: &Tabloid) -> C {
        self.terms.get(t).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, t: Tabloid, value: C) {
        if value.is_zero() {
            return;
        }
        let slot = self.terms.entry(t.clone()).or_insert_with(C::zero);
        *slot = slot.clone() + value;
        if slot.is_zero() {
            self.terms.remove(&t);
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (t, c) in other.terms() {
            out.add_term(t.clone(), c.clone());
        }
        out
    }
}

impl<C: Coefficient> fmt::Display for TabloidVector<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (t, c)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            let sign = if c.is_negative() { '-' } else { '+' };
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "{sign}{t}")?;
            } else {
                write!(f, "{sign}{mag}{t}")?;
            }
        }
        Ok(())
    }
}

/// Signed sum of the tabloids obtained by flipping every subset of columns.
pub fn specht_vector<C: Coefficient>(filling: &Filling) -> TabloidVector<C> {
    let n = filling.n();
    let columns: Vec<(usize, usize)> = filling.columns().collect();
    let mut out = TabloidVector::zero(n);
    for flips in 0u64..1 << n {
        let mut top: Vec<usize> = columns
            .iter()
            .enumerate()
            .map(|(c, &(t, b))| if flips >> c & 1 == 1 { b } else { t })
            .collect();
        let sign = if flips.count_ones() % 2 == 0 {
            C::one()
        } else {
            -C::one()
        };
        top.sort_unstable();
        out.add_term(Tabloid { top }, sign);
    }
    out
}

/// Relabels `i` and `i + 1` inside every tabloid.
pub fn act_simple_on_tabloid_vector<C: Coefficient>(
    i: usize,
    v: &TabloidVector<C>,
) -> Result<TabloidVector<C>> {
    check_generator(i, v.n)?;
    let mut out = TabloidVector::zero(v.n);
    for (t, c) in v.terms() {
        out.add_term(t.swap_values(i), c.clone());
    }
    Ok(out)
}

/// The standard Specht basis inside tabloid space for one `n`.
#[derive(Debug, Clone)]
pub struct SpechtBasis {
    n: usize,
    tableaux: Vec<Tableau>,
    tabloids: Vec<Tabloid>,
    tabloid_index: HashMap<Tabloid, usize>,
}

impl SpechtBasis {
    pub fn new(n: usize) -> Result<Self> {
        let tableaux = enumerate_tableaux(n)?;
        let tabloids = enumerate_tabloids(n)?;
        let tabloid_index = tabloids.iter().cloned().zip(0..).collect();
        Ok(Self {
            n,
            tableaux,
            tabloids,
            tabloid_index,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    pub fn tabloids(&self) -> &[Tabloid] {
        &self.tabloids
    }

    pub fn dense<C: Coefficient>(&self, v: &TabloidVector<C>) -> Vec<C> {
        let mut out = vec![C::zero(); self.tabloids.len()];
        for (t, c) in v.terms() {
            out[self.tabloid_index[t]] = c.clone();
        }
        out
    }

    /// Tabloid coordinates of the standard Specht vectors, one column each.
    pub fn basis_matrix<S: Coefficient>(&self) -> Matrix<S> {
        let columns: Vec<Vec<S>> = self
            .tableaux
            .iter()
            .map(|t| self.dense(&specht_vector::<S>(t.as_filling())))
            .collect();
        Matrix::from_columns(&columns)
    }

    /// Coordinates of each vector in the standard Specht basis. Fails if a
    /// vector lies outside the module or the basis is dependent.
    pub fn coordinates<S: ExactInteger>(
        &self,
        vectors: &[TabloidVector<S>],
    ) -> Result<Matrix<Ratio<S>>> {
        let basis = self.basis_matrix::<S>();
        let rhs: Vec<Vec<S>> = vectors.iter().map(|v| self.dense(v)).collect();
        linalg::solve(&basis, &Matrix::from_columns(&rhs))
            .map_err(|e| Error::Defect(format!("Specht coordinates: {e}")))
    }

    /// Matrix of `s_i` in the standard Specht basis: column `T` holds the
    /// coordinates of `s_i v_T`.
    pub fn rep_matrix<S: ExactInteger>(&self, i: usize) -> Result<Matrix<Ratio<S>>> {
        check_generator(i, self.n)?;
        let images = self
            .tableaux
            .iter()
            .map(|t| act_simple_on_tabloid_vector(i, &specht_vector::<S>(t.as_filling())))
            .collect::<Result<Vec<_>>>()?;
        self.coordinates(&images)
    }
}

pub fn specht_rep_matrix<S: ExactInteger>(n: usize, i: usize) -> Result<Matrix<Ratio<S>>> {
    SpechtBasis::new(n)?.rep_matrix(i)
}
