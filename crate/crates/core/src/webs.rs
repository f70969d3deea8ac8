//! Noncrossing perfect matchings ("webs") on 2n boundary points, their
//! nesting statistics, and the bijection with standard tableaux.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tableaux::{check_size, Tableau};

/// An arc between two boundary points, always stored with `left < right`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub left: usize,
    pub right: usize,
}

impl Arc {
    /// Normalizes the unordered pair {a, b}.
    pub fn new(a: usize, b: usize) -> Self {
        Self {
            left: a.min(b),
            right: a.max(b),
        }
    }

    /// True when `self` lies strictly beneath `other`.
    pub fn is_beneath(&self, other: &Arc) -> bool {
        other.left < self.left && self.right < other.right
    }

    pub fn crosses(&self, other: &Arc) -> bool {
        let (a, b) = if self.left < other.left {
            (self, other)
        } else {
            (other, self)
        };
        a.left < b.left && b.left < a.right && a.right < b.right
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.left, self.right)
    }
}

/// A noncrossing perfect matching of {1..2n}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Web {
    /// `mate[v - 1]` is the endpoint matched with `v`.
    mate: Vec<usize>,
}

impl Web {
    /// The web (1,2)(3,4)...(2n-1,2n).
    pub fn ground(n: usize) -> Result<Self> {
        check_size(n)?;
        Ok(Self {
            mate: (1..=2 * n)
                .map(|v| if v % 2 == 1 { v + 1 } else { v - 1 })
                .collect(),
        })
    }

    /// The fully nested web (1,2n)(2,2n-1)...(n,n+1).
    pub fn fully_nested(n: usize) -> Result<Self> {
        check_size(n)?;
        Ok(Self {
            mate: (1..=2 * n).map(|v| 2 * n + 1 - v).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.mate.len() / 2
    }

    /// The endpoint matched with `v` (1-based).
    pub fn mate(&self, v: usize) -> usize {
        self.mate[v - 1]
    }

    pub fn arcs(&self) -> Vec<Arc> {
        self.mate
            .iter()
            .enumerate()
            .filter(|&(k, &m)| k + 1 < m)
            .map(|(k, &m)| Arc {
                left: k + 1,
                right: m,
            })
            .collect()
    }

    pub fn contains(&self, arc: Arc) -> bool {
        arc.left >= 1 && arc.right <= self.mate.len() && self.mate(arc.left) == arc.right
    }

    /// Number of arcs strictly above each arc, keyed by arc.
    pub fn per_arc_nesting(&self) -> BTreeMap<Arc, usize> {
        // In a noncrossing matching the arcs open at `a.left` are exactly
        // the arcs covering `a`.
        let mut open = 0usize;
        let mut out = BTreeMap::new();
        for v in 1..=self.mate.len() {
            let m = self.mate(v);
            if v < m {
                out.insert(Arc { left: v, right: m }, open);
                open += 1;
            } else {
                open -= 1;
            }
        }
        out
    }

    pub fn nesting_number(&self) -> usize {
        self.per_arc_nesting().values().sum()
    }

    /// The innermost arc strictly covering `arc`, if any.
    pub fn umbrella_arc(&self, arc: Arc) -> Result<Option<Arc>> {
        if !self.contains(arc) {
            return Err(Error::ArcNotInWeb(arc));
        }
        Ok(self
            .arcs()
            .into_iter()
            .filter(|b| arc.is_beneath(b))
            .max_by_key(|b| b.left))
    }

    /// Replaces the arcs through the endpoints of `remove` by `insert`. The
    /// result is validated.
    pub fn rewire(&self, remove: &[Arc], insert: &[Arc]) -> Result<Web> {
        let mut mate = self.mate.clone();
        for a in remove {
            if !self.contains(*a) {
                return Err(Error::ArcNotInWeb(*a));
            }
            mate[a.left - 1] = 0;
            mate[a.right - 1] = 0;
        }
        for a in insert {
            if mate[a.left - 1] != 0 || mate[a.right - 1] != 0 {
                return Err(Error::NotPerfectMatching(format!(
                    "endpoint of {a} already used"
                )));
            }
            mate[a.left - 1] = a.right;
            mate[a.right - 1] = a.left;
        }
        let arcs: Vec<Arc> = mate
            .iter()
            .enumerate()
            .filter(|(k, &m)| k + 1 < m)
            .map(|(k, &m)| Arc {
                left: k + 1,
                right: m,
            })
            .collect();
        validate_web(&arcs.iter().map(|a| (a.left, a.right)).collect::<Vec<_>>())
    }

    /// The single nest move on unnested side-by-side arcs `(j,j')`, `(k,k')`
    /// with `j' < k`: they become `(j,k')` and `(j',k)`. Returns `None` when
    /// the arcs are not in that position or the result would cross.
    pub fn nest_move(&self, first: Arc, second: Arc) -> Option<Web> {
        if !self.contains(first) || !self.contains(second) || first.right >= second.left {
            return None;
        }
        self.rewire(
            &[first, second],
            &[
                Arc::new(first.left, second.right),
                Arc::new(first.right, second.left),
            ],
        )
        .ok()
    }
}

impl Ord for Web {
    /// Lexicographic on the arc list sorted by left endpoint.
    fn cmp(&self, other: &Self) -> Ordering {
        self.n()
            .cmp(&other.n())
            .then_with(|| self.arcs().cmp(&other.arcs()))
    }
}

impl PartialOrd for Web {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Web {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in self.arcs() {
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl FromStr for Web {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| Error::Parse(format!("expected `(i,j)` at {rest:?}")))?;
            let (a, b) = body
                .0
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("expected `i,j` in {:?}", body.0)))?;
            let num = |t: &str| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad endpoint {t:?}")))
            };
            pairs.push((num(a)?, num(b)?));
            rest = body.1.trim_start();
        }
        validate_web(&pairs)
    }
}

/// Checks that `pairs` form a noncrossing perfect matching of {1..2n} and
/// returns it in canonical form.
pub fn validate_web(pairs: &[(usize, usize)]) -> Result<Web> {
    check_size(pairs.len())?;
    let size = 2 * pairs.len();
    let mut mate = vec![0usize; size];
    for &(a, b) in pairs {
        for v in [a, b] {
            if v == 0 || v > size {
                return Err(Error::NotPerfectMatching(format!(
                    "endpoint {v} outside 1..{size}"
                )));
            }
        }
        if a == b || mate[a - 1] != 0 || mate[b - 1] != 0 {
            return Err(Error::NotPerfectMatching(format!(
                "endpoint of {{{a},{b}}} used more than once"
            )));
        }
        mate[a - 1] = b;
        mate[b - 1] = a;
    }
    let mut arcs: Vec<Arc> = pairs.iter().map(|&(a, b)| Arc::new(a, b)).collect();
    arcs.sort();
    // An arc crosses an earlier-opened one exactly when the stack of open
    // arcs is not closed in LIFO order.
    let mut open: Vec<Arc> = Vec::new();
    for v in 1..=size {
        let arc = Arc::new(v, mate[v - 1]);
        if v == arc.left {
            open.push(arc);
        } else {
            let top = open.pop().expect("right endpoint with no open arc");
            if top != arc {
                return Err(Error::CrossingArcs(arc, top).normalized());
            }
        }
    }
    Ok(Web { mate })
}

impl Error {
    fn normalized(self) -> Self {
        match self {
            Error::CrossingArcs(a, b) if b < a => Error::CrossingArcs(b, a),
            other => other,
        }
    }
}

/// Every web on 2n points in canonical order: ascending nesting number,
/// ties broken lexicographically on the arc list.
pub fn enumerate_webs(n: usize) -> Result<Vec<Web>> {
    check_size(n)?;
    let mut all = Vec::new();
    let mut mate = vec![0usize; 2 * n];
    matchings(&mut mate, &mut Vec::with_capacity(n), 0, 1, &mut all);
    let mut keyed: Vec<(usize, Vec<Arc>, Web)> = all
        .into_iter()
        .map(|w| (w.nesting_number(), w.arcs(), w))
        .collect();
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    Ok(keyed.into_iter().map(|(_, _, w)| w).collect())
}

fn matchings(
    mate: &mut [usize],
    open: &mut Vec<usize>,
    lefts: usize,
    next: usize,
    out: &mut Vec<Web>,
) {
    let size = mate.len();
    if next > size {
        out.push(Web {
            mate: mate.to_vec(),
        });
        return;
    }
    if lefts < size / 2 {
        open.push(next);
        matchings(mate, open, lefts + 1, next + 1, out);
        open.pop();
    }
    // Closing always pairs with the most recently opened arc.
    if let Some(u) = open.pop() {
        mate[u - 1] = next;
        mate[next - 1] = u;
        matchings(mate, open, lefts, next + 1, out);
        mate[u - 1] = 0;
        mate[next - 1] = 0;
        open.push(u);
    }
}

/// The bijection from tableaux to webs: each bottom-row entry, read left to
/// right, is joined to its nearest unmatched smaller vertex.
pub fn tableau_to_web(t: &Tableau) -> Web {
    let in_top = t.top_mask();
    let size = 2 * t.n();
    let mut mate = vec![0usize; size];
    let mut open = Vec::with_capacity(t.n());
    for v in 1..=size {
        if in_top[v] {
            open.push(v);
        } else {
            let u = open
                .pop()
                .expect("standard tableau always has an unmatched smaller vertex");
            mate[u - 1] = v;
            mate[v - 1] = u;
        }
    }
    Web { mate }
}

/// Inverse of [`tableau_to_web`]: left endpoints form the top row.
pub fn web_to_tableau(w: &Web) -> Tableau {
    let (top, bottom): (Vec<usize>, Vec<usize>) = (1..=w.mate.len()).partition(|&v| v < w.mate(v));
    Tableau::new(top, bottom).expect("left endpoints of a noncrossing matching form a standard row")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::enumerate_tableaux;

    fn web(s: &str) -> Web {
        s.parse().unwrap()
    }

    /// Ordered pairs (b, a) with b strictly covering a.
    fn brute_nesting(w: &Web) -> usize {
        let arcs = w.arcs();
        arcs.iter()
            .map(|a| arcs.iter().filter(|b| a.is_beneath(b)).count())
            .sum()
    }

    #[test]
    fn validation() {
        assert_eq!(validate_web(&[(1, 2), (3, 4)]).unwrap().n(), 2);
        assert_eq!(
            validate_web(&[(4, 3), (2, 1)]).unwrap().to_string(),
            "(1,2)(3,4)"
        );
        assert_eq!(
            validate_web(&[(1, 3), (2, 4)]),
            Err(Error::CrossingArcs(Arc::new(1, 3), Arc::new(2, 4)))
        );
        assert!(matches!(
            validate_web(&[(1, 2), (2, 3)]),
            Err(Error::NotPerfectMatching(_))
        ));
        assert!(matches!(
            validate_web(&[(1, 1), (2, 3)]),
            Err(Error::NotPerfectMatching(_))
        ));
        assert!(matches!(
            validate_web(&[(1, 5), (2, 3)]),
            Err(Error::NotPerfectMatching(_))
        ));
        assert_eq!(validate_web(&[]), Err(Error::UnsupportedSize(0)));
        assert!("(1,4)(2,3)".parse::<Web>().is_ok());
        assert!("(1,4(2,3)".parse::<Web>().is_err());
        assert!("(1,4)(2,x)".parse::<Web>().is_err());
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_webs(1).unwrap(), vec![web("(1,2)")]);
        assert_eq!(
            enumerate_webs(2).unwrap(),
            vec![web("(1,2)(3,4)"), web("(1,4)(2,3)")]
        );
        let three = enumerate_webs(3).unwrap();
        assert_eq!(three.len(), 5);
        assert_eq!(three[0], Web::ground(3).unwrap());
        assert_eq!(three[4], Web::fully_nested(3).unwrap());
        assert!(enumerate_webs(0).is_err());
        let counts = [1, 2, 5, 14, 42, 132, 429, 1430];
        for (n, &c) in (1..=8).zip(&counts) {
            let all = enumerate_webs(n).unwrap();
            assert_eq!(all.len(), c);
            let keys: Vec<_> = all.iter().map(|w| (w.nesting_number(), w.arcs())).collect();
            assert!(keys.windows(2).all(|k| k[0] < k[1]));
        }
    }

    #[test]
    fn nesting_numbers() {
        for n in 1..=5 {
            assert_eq!(Web::ground(n).unwrap().nesting_number(), 0);
        }
        let w = web("(1,6)(2,5)(3,4)");
        assert_eq!(w.nesting_number(), 3);
        assert_eq!(
            w.per_arc_nesting().values().copied().collect::<Vec<_>>(),
            vec![0, 1, 2]
        );
        assert_eq!(web("(1,6)(2,3)(4,5)").nesting_number(), 2);
        for n in 1..=8 {
            for w in enumerate_webs(n).unwrap() {
                assert_eq!(w.nesting_number(), brute_nesting(&w));
            }
        }
    }

    #[test]
    fn umbrellas() {
        let w = web("(1,6)(2,5)(3,4)");
        assert_eq!(
            w.umbrella_arc(Arc::new(3, 4)).unwrap(),
            Some(Arc::new(2, 5))
        );
        assert_eq!(w.umbrella_arc(Arc::new(1, 6)).unwrap(), None);
        let w = web("(1,6)(2,3)(4,5)");
        assert_eq!(
            w.umbrella_arc(Arc::new(4, 5)).unwrap(),
            Some(Arc::new(1, 6))
        );
        assert_eq!(
            w.umbrella_arc(Arc::new(1, 2)),
            Err(Error::ArcNotInWeb(Arc::new(1, 2)))
        );
    }

    #[test]
    fn psi_examples() {
        for n in 1..=5 {
            assert_eq!(
                tableau_to_web(&Tableau::column_filled(n).unwrap()),
                Web::ground(n).unwrap()
            );
            assert_eq!(
                web_to_tableau(&Web::ground(n).unwrap()),
                Tableau::column_filled(n).unwrap()
            );
        }
        let t: Tableau = "1 2 4 | 3 5 6".parse().unwrap();
        assert_eq!(tableau_to_web(&t), web("(1,6)(2,3)(4,5)"));
        assert_eq!(web_to_tableau(&web("(1,6)(2,3)(4,5)")), t);
        let t: Tableau = "1 2 3 | 4 5 6".parse().unwrap();
        assert_eq!(tableau_to_web(&t), web("(1,6)(2,5)(3,4)"));
        assert_eq!(web_to_tableau(&web("(1,6)(2,5)(3,4)")), t);
    }

    #[test]
    fn psi_is_a_bijection() {
        for n in 1..=8 {
            let tabs = enumerate_tableaux(n).unwrap();
            let webs = enumerate_webs(n).unwrap();
            for t in &tabs {
                let w = tableau_to_web(t);
                assert_eq!(&web_to_tableau(&w), t);
                let lefts: Vec<usize> = w.arcs().iter().map(|a| a.left).collect();
                assert_eq!(lefts, t.top());
            }
            for w in &webs {
                assert_eq!(&tableau_to_web(&web_to_tableau(w)), w);
            }
        }
    }

    #[test]
    fn nest_move_delta_matches_brute_force() {
        for n in 2..=5 {
            for w in enumerate_webs(n).unwrap() {
                let arcs = w.arcs();
                for a in &arcs {
                    for b in &arcs {
                        if let Some(moved) = w.nest_move(*a, *b) {
                            let delta = brute_nesting(&moved) as isize - brute_nesting(&w) as isize;
                            assert_eq!(delta, b.left as isize - a.right as isize);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rewire_rejects_bad_input() {
        let w = Web::ground(2).unwrap();
        assert!(w.rewire(&[Arc::new(1, 4)], &[]).is_err());
        assert!(w.nest_move(Arc::new(3, 4), Arc::new(1, 2)).is_none());
        assert_eq!(
            w.nest_move(Arc::new(1, 2), Arc::new(3, 4)),
            Some(web("(1,4)(2,3)"))
        );
    }
}
