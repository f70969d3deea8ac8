//! The action of simple transpositions on web space.
//!
//! `s_i` negates a web containing the arc (i,i+1). Otherwise it sends `w` to
//! `w + w'`, where `w'` re-pairs the endpoints of the two arcs through `i`
//! and `i + 1` as (i,i+1) and the arc joining their far ends.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Coefficient;
use crate::tableaux::check_generator;
use crate::webs::{enumerate_webs, Arc, Web};

/// Image of a basis web under one generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimpleImage {
    /// `s_i w = -w`.
    Negate,
    /// `s_i w = w + w'` with `w'` given by canonical index.
    AddWeb(usize),
}

/// The web `w'` in `s_i w = w + w'`, or `None` when (i,i+1) is an arc of `w`.
pub fn simple_partner(w: &Web, i: usize) -> Result<Option<Web>> {
    check_generator(i, w.n())?;
    let (j, k) = (w.mate(i), w.mate(i + 1));
    if j == i + 1 {
        return Ok(None);
    }
    let rewired = w
        .rewire(
            &[Arc::new(i, j), Arc::new(i + 1, k)],
            &[Arc::new(i, i + 1), Arc::new(j, k)],
        )
        .map_err(|e| Error::Defect(format!("s_{i} on {w}: {e}")))?;
    Ok(Some(rewired))
}

/// A sparse combination of basis webs, keyed by canonical index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WebVector<C> {
    n: usize,
    terms: BTreeMap<usize, C>,
}

impl<C: Coefficient> WebVector<C> {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(n: usize, index: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::from([(index, C::one())]),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, index: usize) -> C {
        self.terms.get(&index).cloned().unwrap_or_else(C::zero)
    }

    /// Nonzero terms in canonical index order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &C)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, index: usize, value: C) {
        if value.is_zero() {
            return;
        }
        let slot = self.terms.entry(index).or_insert_with(C::zero);
        *slot = slot.clone() + value;
        if slot.is_zero() {
            self.terms.remove(&index);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in other.terms() {
            out.add_term(k, v.clone());
        }
        out
    }

    pub fn scale(&self, factor: &C) -> Self {
        let mut out = Self::zero(self.n);
        for (k, v) in self.terms() {
            out.add_term(k, v.clone() * factor.clone());
        }
        out
    }

    pub fn to_dense(&self, dim: usize) -> Vec<C> {
        let mut out = vec![C::zero(); dim];
        for (k, v) in self.terms() {
            out[k] = v.clone();
        }
        out
    }

    pub fn from_dense(n: usize, dense: &[C]) -> Self {
        let mut out = Self::zero(n);
        for (k, v) in dense.iter().enumerate() {
            out.add_term(k, v.clone());
        }
        out
    }

    /// Text form: signed coefficient, `·`, web text; terms in index order.
    pub fn display<'a>(&'a self, basis: &'a WebBasis) -> impl fmt::Display + 'a {
        DisplayVector {
            vector: self,
            basis,
        }
    }
}

struct DisplayVector<'a, C> {
    vector: &'a WebVector<C>,
    basis: &'a WebBasis,
}

impl<C: Coefficient> fmt::Display for DisplayVector<'_, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vector.is_zero() {
            return f.write_str("0");
        }
        for (pos, (k, v)) in self.vector.terms().enumerate() {
            if pos > 0 {
                f.write_str(" ")?;
            }
            let sign = if v.is_negative() { '-' } else { '+' };
            write!(f, "{sign}{}·{}", v.abs(), self.basis.web(k))?;
        }
        Ok(())
    }
}

/// The canonically ordered web basis for one `n`, with a precomputed table of
/// generator images.
#[derive(Debug, Clone)]
pub struct WebBasis {
    n: usize,
    webs: Vec<Web>,
    index: HashMap<Web, usize>,
    /// `images[k * (2n - 1) + (i - 1)]` is the image of web `k` under `s_i`.
    images: Vec<SimpleImage>,
}

impl WebBasis {
    pub fn new(n: usize) -> Result<Self> {
        let webs = enumerate_webs(n)?;
        let index: HashMap<Web, usize> = webs.iter().cloned().zip(0..).collect();
        let gens = 2 * n - 1;
        let mut images = Vec::with_capacity(webs.len() * gens);
        for w in &webs {
            for i in 1..=gens {
                images.push(match simple_partner(w, i)? {
                    None => SimpleImage::Negate,
                    Some(p) => SimpleImage::AddWeb(index[&p]),
                });
            }
        }
        Ok(Self {
            n,
            webs,
            index,
            images,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.webs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.webs.is_empty()
    }

    pub fn webs(&self) -> &[Web] {
        &self.webs
    }

    pub fn web(&self, index: usize) -> &Web {
        &self.webs[index]
    }

    pub fn index_of(&self, w: &Web) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn generators(&self) -> std::ops::RangeInclusive<usize> {
        1..=2 * self.n - 1
    }

    pub fn image(&self, index: usize, i: usize) -> Result<SimpleImage> {
        check_generator(i, self.n)?;
        Ok(self.images[index * (2 * self.n - 1) + i - 1])
    }

    pub fn vector_of<C: Coefficient>(&self, w: &Web) -> Result<WebVector<C>> {
        let k = self
            .index_of(w)
            .ok_or_else(|| Error::Parse(format!("web {w} does not have n = {}", self.n)))?;
        Ok(WebVector::basis(self.n, k))
    }

    pub fn act_simple_on_web<C: Coefficient>(&self, i: usize, w: &Web) -> Result<WebVector<C>> {
        let v = self.vector_of(w)?;
        self.act_simple_on_vector(i, &v)
    }

    /// Linear extension of the generator rule; cancelled terms are pruned.
    pub fn act_simple_on_vector<C: Coefficient>(
        &self,
        i: usize,
        v: &WebVector<C>,
    ) -> Result<WebVector<C>> {
        check_generator(i, self.n)?;
        let gens = 2 * self.n - 1;
        let mut out = WebVector::zero(self.n);
        for (k, c) in v.terms() {
            match self.images[k * gens + i - 1] {
                SimpleImage::Negate => out.add_term(k, -c.clone()),
                SimpleImage::AddWeb(p) => {
                    out.add_term(k, c.clone());
                    out.add_term(p, c.clone());
                }
            }
        }
        Ok(out)
    }

    /// Applies `labels` left to right: the first label acts first.
    pub fn act_word<C: Coefficient>(
        &self,
        labels: &[usize],
        v: &WebVector<C>,
    ) -> Result<WebVector<C>> {
        labels
            .iter()
            .try_fold(v.clone(), |acc, &i| self.act_simple_on_vector(i, &acc))
    }

    /// Matrix of `s_i` in the canonical basis (column k = image of web k).
    pub fn generator_matrix<C: Coefficient>(&self, i: usize) -> Result<Matrix<C>> {
        check_generator(i, self.n)?;
        let mut m = Matrix::zeros(self.len(), self.len());
        for k in 0..self.len() {
            match self.image(k, i)? {
                SimpleImage::Negate => m.set(k, k, -C::one()),
                SimpleImage::AddWeb(p) => {
                    m.set(k, k, C::one());
                    m.set(p, k, C::one());
                }
            }
        }
        Ok(m)
    }
}
