//! Named theorem-check suites. Each suite runs at one `n` and yields a
//! [`Report`]; the command line and the acceptance tests share them.

use std::cell::OnceCell;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::Ratio;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graphs::{
    check_isomorphism, distances_from_source, khovanov_order_check, label_paths_from,
    sources_and_sinks, structural_checks, LabeledDigraph, PosetRelation,
};
use crate::linalg::{self, Matrix};
use crate::report::Report;
use crate::specht::{act_simple_on_tabloid_vector, specht_vector, SpechtBasis};
use crate::tableaux::{enumerate_tableaux, reading_permutation, Permutation, Tableau};
use crate::transition::{self, Bases, TransitionMatrix};
use crate::webaction::{SimpleImage, WebVector};
use crate::webs::{enumerate_webs, tableau_to_web, web_to_tableau, Arc, Web};

/// Lazily built objects shared by the suites at one `n`.
pub struct Context {
    n: usize,
    bases: OnceCell<Bases>,
    matrix: OnceCell<TransitionMatrix<BigInt>>,
    poset: OnceCell<PosetRelation>,
    specht: OnceCell<SpechtBasis>,
}

impl Context {
    pub fn new(n: usize) -> Result<Self> {
        crate::tableaux::check_size(n)?;
        Ok(Self {
            n,
            bases: OnceCell::new(),
            matrix: OnceCell::new(),
            poset: OnceCell::new(),
            specht: OnceCell::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bases(&self) -> Result<&Bases> {
        if self.bases.get().is_none() {
            let _ = self.bases.set(Bases::new(self.n)?);
        }
        Ok(self.bases.get().expect("set above"))
    }

    pub fn matrix(&self) -> Result<&TransitionMatrix<BigInt>> {
        if self.matrix.get().is_none() {
            let m = self.bases()?.transition_matrix()?;
            let _ = self.matrix.set(m);
        }
        Ok(self.matrix.get().expect("set above"))
    }

    /// Installs a matrix obtained elsewhere, e.g. from a cache.
    pub fn with_matrix(self, m: TransitionMatrix<BigInt>) -> Self {
        let _ = self.matrix.set(m);
        self
    }

    pub fn poset(&self) -> Result<&PosetRelation> {
        if self.poset.get().is_none() {
            let p = self.bases()?.web_poset()?;
            let _ = self.poset.set(p);
        }
        Ok(self.poset.get().expect("set above"))
    }

    pub fn specht(&self) -> Result<&SpechtBasis> {
        if self.specht.get().is_none() {
            let _ = self.specht.set(SpechtBasis::new(self.n)?);
        }
        Ok(self.specht.get().expect("set above"))
    }
}

pub struct Suite {
    pub name: &'static str,
    /// Largest `n` run by default; larger `n` is skipped unless overridden.
    pub max_n: usize,
    pub run: fn(&Context) -> Result<Report>,
}

pub const SUITES: &[Suite] = &[
    Suite {
        name: "catalan",
        max_n: 12,
        run: catalan,
    },
    Suite {
        name: "bijection",
        max_n: 12,
        run: bijection,
    },
    Suite {
        name: "isomorphism",
        max_n: 10,
        run: isomorphism,
    },
    Suite {
        name: "source_sink",
        max_n: 10,
        run: source_sink,
    },
    Suite {
        name: "distance",
        max_n: 10,
        run: distance,
    },
    Suite {
        name: "reduced_words",
        max_n: 10,
        run: reduced_words,
    },
    Suite {
        name: "nesting_delta",
        max_n: 8,
        run: nesting_delta,
    },
    Suite {
        name: "in_edges",
        max_n: 10,
        run: in_edges,
    },
    Suite {
        name: "unnest_count",
        max_n: 8,
        run: unnest_count,
    },
    Suite {
        name: "structural",
        max_n: 10,
        run: structural,
    },
    Suite {
        name: "khovanov",
        max_n: 8,
        run: khovanov,
    },
    Suite {
        name: "specht",
        max_n: 6,
        run: specht,
    },
    Suite {
        name: "specht_coxeter",
        max_n: 5,
        run: specht_coxeter,
    },
    Suite {
        name: "triangularity",
        max_n: 9,
        run: triangularity,
    },
    Suite {
        name: "determinant",
        max_n: 7,
        run: determinant,
    },
    Suite {
        name: "poset_support",
        max_n: 9,
        run: poset_support,
    },
    Suite {
        name: "path_independence",
        max_n: 9,
        run: path_independence,
    },
    Suite {
        name: "column_recurrence",
        max_n: 8,
        run: column_recurrence,
    },
    Suite {
        name: "diamond_transport",
        max_n: 7,
        run: diamond_transport,
    },
    Suite {
        name: "equivariance",
        max_n: 6,
        run: equivariance,
    },
    Suite {
        name: "uniqueness",
        max_n: 5,
        run: uniqueness,
    },
    Suite {
        name: "source_image",
        max_n: 5,
        run: source_image,
    },
];

pub fn suite(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

/// Runs one suite; above its default cap it is skipped (passing, with a
/// `skipped` stat) unless `override_cap` is set.
pub fn run_suite(s: &Suite, ctx: &Context, override_cap: bool) -> Result<Report> {
    if ctx.n() > s.max_n && !override_cap {
        let mut r = Report::new(s.name);
        r.set_stat("skipped", 1);
        r.set_stat("max_n", s.max_n as u64);
        return Ok(r);
    }
    let mut r = (s.run)(ctx)?.renamed(s.name);
    r.set_stat("n", ctx.n() as u64);
    Ok(r)
}

fn catalan(ctx: &Context) -> Result<Report> {
    let n = ctx.n();
    let closed = binomial(BigInt::from(2 * n), BigInt::from(n)) / BigInt::from(n + 1);
    let tableaux = enumerate_tableaux(n)?.len();
    let webs = enumerate_webs(n)?.len();
    let mut r = Report::new("catalan");
    for (what, count) in [("tableaux", tableaux), ("webs", webs)] {
        if BigInt::from(count) != closed {
            r.fail("count", [what], format!("{count} != C_{n} = {closed}"));
        }
        r.set_stat(what, count as u64);
    }
    Ok(r)
}

fn bijection(ctx: &Context) -> Result<Report> {
    let n = ctx.n();
    let mut r = Report::new("bijection");
    for t in enumerate_tableaux(n)? {
        let w = tableau_to_web(&t);
        if web_to_tableau(&w) != t {
            r.fail(
                "tableau",
                [t.to_string()],
                format!("round trip through {w} fails"),
            );
        }
        let lefts: Vec<usize> = w.arcs().iter().map(|a| a.left).collect();
        if lefts != t.top() {
            r.fail(
                "tableau",
                [t.to_string()],
                "left endpoints differ from the top row",
            );
        }
    }
    for w in enumerate_webs(n)? {
        if tableau_to_web(&web_to_tableau(&w)) != w {
            r.fail("web", [w.to_string()], "round trip fails");
        }
    }
    Ok(r)
}

fn isomorphism(ctx: &Context) -> Result<Report> {
    check_isomorphism(ctx.n())
}

fn source_sink(ctx: &Context) -> Result<Report> {
    let n = ctx.n();
    let b = ctx.bases()?;
    let mut r = Report::new("source_sink");
    let expect = |g: &LabeledDigraph, src: String, sink: String, r: &mut Report| {
        if g.topological_order().is_none() {
            r.fail("graph", [g.name(0)], "directed cycle");
        }
        let (sources, sinks) = sources_and_sinks(g);
        let names = |v: &[usize]| v.iter().map(|&k| g.name(k).to_string()).collect::<Vec<_>>();
        if names(&sources) != [src.clone()] {
            r.fail("sources", names(&sources), format!("expected only {src}"));
        }
        if names(&sinks) != [sink.clone()] {
            r.fail("sinks", names(&sinks), format!("expected only {sink}"));
        }
    };
    expect(
        &b.tableau_graph,
        Tableau::column_filled(n)?.to_string(),
        Tableau::row_filled(n)?.to_string(),
        &mut r,
    );
    expect(
        &b.web_graph,
        Web::ground(n)?.to_string(),
        Web::fully_nested(n)?.to_string(),
        &mut r,
    );
    Ok(r)
}

fn distance(ctx: &Context) -> Result<Report> {
    let b = ctx.bases()?;
    let mut r = Report::new("distance");
    let tdist = distances_from_source(&b.tableau_graph)?;
    let wdist = distances_from_source(&b.web_graph)?;
    for (t, tab) in b.tableaux.iter().enumerate() {
        let w = b.psi[t];
        let inversions = reading_permutation(tab).inversion_count();
        let nesting = b.webs.web(w).nesting_number();
        if !(tdist[t] == inversions && wdist[w] == nesting && inversions == nesting) {
            r.fail(
                "vertex",
                [tab.to_string(), b.webs.web(w).to_string()],
                format!(
                    "tableau distance {}, web distance {}, inversions {inversions}, nesting {nesting}",
                    tdist[t], wdist[w]
                ),
            );
        }
    }
    for e in b.web_graph.edges() {
        let (a, c) = (
            b.webs.web(e.src).nesting_number(),
            b.webs.web(e.dst).nesting_number(),
        );
        if c != a + 1 {
            r.fail(
                "edge",
                [b.web_graph.name(e.src), b.web_graph.name(e.dst)],
                format!("nesting {a} -> {c}"),
            );
        }
    }
    r.set_stat(
        "max_distance",
        wdist.iter().copied().max().unwrap_or(0) as u64,
    );
    Ok(r)
}

/// Paths enumerated exhaustively from the source up to this many per graph.
const PATH_LIMIT: usize = 50_000;

fn reduced_words(ctx: &Context) -> Result<Report> {
    let b = ctx.bases()?;
    let size = 2 * ctx.n();
    let mut r = Report::new("reduced_words");
    let check = |labels: &[usize], at: &str, r: &mut Report| -> Result<()> {
        let p = Permutation::from_simple_word(size, labels)?;
        if p.inversion_count() != labels.len() {
            r.fail(
                "path",
                [at.to_string()],
                format!("word {labels:?} is not reduced"),
            );
        }
        Ok(())
    };
    for t in 0..b.tableaux.len() {
        check(b.source_path(t), b.tableau_graph.name(t), &mut r)?;
    }
    let paths = label_paths_from(&b.web_graph, 0, PATH_LIMIT);
    r.set_stat("paths_checked", paths.len() as u64);
    r.set_stat("exhaustive", (paths.len() < PATH_LIMIT) as u64);
    for (v, labels) in &paths {
        check(labels, b.web_graph.name(*v), &mut r)?;
    }
    Ok(r)
}

/// Ordered pairs (b, a) with b strictly covering a.
fn brute_nesting(w: &Web) -> usize {
    let arcs = w.arcs();
    arcs.iter()
        .map(|a| arcs.iter().filter(|b| a.is_beneath(b)).count())
        .sum()
}

fn nesting_delta(ctx: &Context) -> Result<Report> {
    let mut r = Report::new("nesting_delta");
    let mut moves = 0;
    for w in enumerate_webs(ctx.n())? {
        let base = brute_nesting(&w);
        let arcs = w.arcs();
        for a in &arcs {
            for b in arcs.iter().filter(|b| a.right < b.left) {
                let Some(moved) = w.nest_move(*a, *b) else {
                    continue;
                };
                moves += 1;
                let delta = brute_nesting(&moved) as i64 - base as i64;
                // (j,j'), (k,k') -> (j,k'), (j',k): delta is k - j'.
                let expected = b.left as i64 - a.right as i64;
                if delta != expected {
                    r.fail(
                        "move",
                        [w.to_string(), moved.to_string()],
                        format!("delta {delta}, k - j' = {expected}"),
                    );
                }
            }
        }
    }
    r.set_stat("moves", moves);
    Ok(r)
}

fn in_edges(ctx: &Context) -> Result<Report> {
    let b = ctx.bases()?;
    let mut r = Report::new("in_edges");
    for (k, w) in b.webs.webs().iter().enumerate() {
        for i in b.webs.generators() {
            let arc = Arc::new(i, i + 1);
            let count = b
                .web_graph
                .in_edges(k)
                .iter()
                .filter(|(l, _)| *l == i)
                .count();
            let expected = if w.contains(arc) {
                w.umbrella_arc(arc)?.is_some() as usize
            } else {
                0
            };
            if count != expected {
                r.fail(
                    "vertex",
                    [w.to_string()],
                    format!("{count} in-edges labeled s{i}, expected {expected}"),
                );
            }
        }
    }
    Ok(r)
}

fn unnest_count(ctx: &Context) -> Result<Report> {
    let b = ctx.bases()?;
    let mut r = Report::new("unnest_count");
    let size = b.len();
    // below[w][i] = #{w' : s_i w' = w' + w, n(w') > n(w)}.
    let gens = 2 * ctx.n() - 1;
    let mut below = vec![0usize; size * gens];
    for src in 0..size {
        for i in b.webs.generators() {
            if let SimpleImage::AddWeb(dst) = b.webs.image(src, i)? {
                if b.webs.web(src).nesting_number() > b.webs.web(dst).nesting_number() {
                    below[dst * gens + i - 1] += 1;
                }
            }
        }
    }
    for (k, w) in b.webs.webs().iter().enumerate() {
        for i in b.webs.generators() {
            let arc = Arc::new(i, i + 1);
            if !w.contains(arc) {
                continue;
            }
            let umbrella = w.umbrella_arc(arc)?;
            let siblings = w
                .arcs()
                .into_iter()
                .filter(|&a| a != arc)
                .map(|a| w.umbrella_arc(a))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .filter(|u| *u == umbrella)
                .count();
            if below[k * gens + i - 1] != siblings {
                r.fail(
                    "vertex",
                    [w.to_string()],
                    format!(
                        "s{i}: {} webs unnest onto it, {siblings} arcs share the umbrella",
                        below[k * gens + i - 1]
                    ),
                );
            }
        }
    }
    Ok(r)
}

fn structural(ctx: &Context) -> Result<Report> {
    let b = ctx.bases()?;
    let mut r = Report::new("structural");
    r.absorb(structural_checks(&b.tableau_graph).renamed("tableau_graph"));
    r.absorb(structural_checks(&b.web_graph).renamed("web_graph"));
    Ok(r)
}

fn khovanov(ctx: &Context) -> Result<Report> {
    khovanov_order_check(ctx.n())
}

fn specht(ctx: &Context) -> Result<Report> {
    let b = ctx.bases()?;
    let n = ctx.n();
    let mut r = Report::new("specht");
    for e in b.tableau_graph.edges() {
        let src = &b.tableaux[e.src];
        let dst = &b.tableaux[e.dst];
        let moved =
            act_simple_on_tabloid_vector(e.label, &specht_vector::<BigInt>(src.as_filling()))?;
        if moved != specht_vector(dst.as_filling()) {
            r.fail(
                "edge",
                [src.to_string(), dst.to_string()],
                format!("s{} v_T != v_(s T)", e.label),
            );
        }
    }
    let t0 = Tableau::column_filled(n)?;
    let v0 = specht_vector::<BigInt>(t0.as_filling());
    for i in (1..2 * n).step_by(2) {
        if act_simple_on_tabloid_vector(i, &v0)? != v0.neg() {
            r.fail("generator", [format!("s{i}")], "does not negate v_T0");
        }
    }
    let rank = linalg::rank(&ctx.specht()?.basis_matrix::<BigInt>());
    r.set_stat("rank", rank as u64);
    if rank != b.len() {
        r.fail(
            "rank",
            [rank],
            format!(
                "standard Specht vectors span rank {rank}, expected {}",
                b.len()
            ),
        );
    }
    Ok(r)
}

fn specht_coxeter(ctx: &Context) -> Result<Report> {
    let specht = ctx.specht()?;
    let n = ctx.n();
    let mats = (1..2 * n)
        .map(|i| specht.rep_matrix::<BigInt>(i))
        .collect::<Result<Vec<Matrix<Ratio<BigInt>>>>>()?;
    let mut r = Report::new("specht_coxeter");
    let id = Matrix::identity(specht.tableaux().len());
    for (a, ma) in mats.iter().enumerate() {
        let i = a + 1;
        if ma.mul(ma) != id {
            r.fail("relation", [format!("s{i}^2")], "not the identity");
        }
        for (c, mc) in mats.iter().enumerate().skip(a + 1) {
            let j = c + 1;
            if j == i + 1 {
                if ma.mul(mc).mul(ma) != mc.mul(ma).mul(mc) {
                    r.fail(
                        "relation",
                        [format!("s{i} s{j} s{i}")],
                        "braid relation fails",
                    );
                }
            } else if ma.mul(mc) != mc.mul(ma) {
                r.fail(
                    "relation",
                    [format!("s{i} s{j}")],
                    "generators do not commute",
                );
            }
        }
    }
    Ok(r)
}

fn triangularity(ctx: &Context) -> Result<Report> {
    Ok(transition::check_triangularity(ctx.matrix()?))
}

fn determinant(ctx: &Context) -> Result<Report> {
    let det = transition::transition_determinant(ctx.matrix()?);
    let mut r = Report::new("determinant");
    if !det.is_one() {
        r.fail("matrix", ["transition"], format!("determinant {det}"));
    }
    Ok(r)
}

fn poset_support(ctx: &Context) -> Result<Report> {
    Ok(transition::check_poset_support(ctx.matrix()?, ctx.poset()?))
}

fn path_independence(ctx: &Context) -> Result<Report> {
    let b = ctx.bases()?;
    let mut r = Report::new("path_independence");
    let alt = b.transition_matrix_alt_paths::<BigInt>()?;
    let m = ctx.matrix()?;
    for c in 0..m.size() {
        if alt.entries.column(c) != m.entries.column(c) {
            r.fail(
                "column",
                [m.labels[c].clone()],
                "smallest and largest label paths disagree",
            );
        }
    }
    // Depth-first over all label paths from the source, extending the image
    // one generator per edge.
    let mut stack = vec![(
        source_of(b)?,
        Vec::new(),
        WebVector::<BigInt>::basis(ctx.n(), 0),
    )];
    let mut seen = vec![0usize; b.len()];
    let mut checked = 0;
    while let Some((t, labels, v)) = stack.pop() {
        if checked == PATH_LIMIT {
            break;
        }
        checked += 1;
        seen[t] += 1;
        if v.to_dense(b.len()) != m.entries.column(b.psi[t]) {
            r.fail(
                "path",
                [b.tableau_graph.name(t).to_string()],
                format!("word {labels:?} gives a different image"),
            );
        }
        for &(l, d) in b.tableau_graph.out_edges(t).iter().rev() {
            let mut next = labels.clone();
            next.push(l);
            stack.push((d, next, b.webs.act_simple_on_vector(l, &v)?));
        }
    }
    r.set_stat("paths_checked", checked as u64);
    r.set_stat("exhaustive", stack.is_empty() as u64);
    let multi = seen.iter().filter(|&&k| k > 1).count();
    r.set_stat("tableaux_with_several_paths", multi as u64);
    Ok(r)
}

fn source_of(b: &Bases) -> Result<usize> {
    b.tableau_index(&Tableau::column_filled(b.n())?)
        .ok_or_else(|| Error::Defect("source tableau missing".into()))
}

fn column_recurrence(ctx: &Context) -> Result<Report> {
    transition::check_column_recurrence(ctx.bases()?, ctx.matrix()?)
}

fn diamond_transport(ctx: &Context) -> Result<Report> {
    Ok(transition::check_diamond_transport(
        ctx.bases()?,
        ctx.poset()?,
    ))
}

fn equivariance(ctx: &Context) -> Result<Report> {
    transition::equivariance_of(ctx.bases()?, ctx.matrix()?, "equivariance")
}

/// Above this `n` the commutant is solved only through the cyclic vector.
const FULL_COMMUTANT_MAX_N: usize = 4;

fn uniqueness(ctx: &Context) -> Result<Report> {
    let b = ctx.bases()?;
    let m = ctx.matrix()?;
    let mut r = Report::new("uniqueness");
    if ctx.n() <= FULL_COMMUTANT_MAX_N {
        r.absorb(transition::check_uniqueness(b, m)?.renamed("full"));
    }
    r.absorb(transition::check_uniqueness_cyclic(b, m)?.renamed("cyclic"));
    Ok(r)
}

fn source_image(ctx: &Context) -> Result<Report> {
    let b = ctx.bases()?;
    let mut r = Report::new("source_image");
    if ctx.n() <= FULL_COMMUTANT_MAX_N {
        r.absorb(transition::source_image_of(b, &transition::commutant_basis(b)?).renamed("full"));
    }
    r.absorb(
        transition::source_image_of(b, &transition::cyclic_commutant_basis(b)?).renamed("cyclic"),
    );
    Ok(r)
}
