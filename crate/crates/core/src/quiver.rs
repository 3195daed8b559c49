//! Quivers on ADE trees, modules over the preprojective algebra with exact
//! rational matrices, path maps, the block maps attached to chamber weights,
//! the kernel invariants `D_gamma`, and the polytope data `lambda_w`, `A_gamma`.
//!
//! `D_gamma(M)` is defined operationally as `dim ker phi_{-gamma}(M)`; all
//! ranks are computed over the rationals, so the numbers are exact.

use num::BigRational;
use serde::{Deserialize, Serialize};

use crate::cartan::{pairing, CartanData, CartanFamily, Coweight, Weight};
use crate::field::Rationals;
use crate::matrix::Matrix;
use crate::weyl::{signed_supports, ChamberWeight, WeylGroup};
use crate::{Error, Result};

pub type QMatrix = Matrix<BigRational>;

/// An orientation of the Dynkin tree: one directed arrow per tree edge, plus
/// implicitly the reversed (star) arrow for each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    pub cartan: CartanData,
    /// `(source, target)` per tree edge, in the edge order of `cartan.edges()`.
    orient: Vec<(usize, usize)>,
}

impl Quiver {
    /// Orient every edge from the lower-numbered vertex to the higher one.
    /// In type A this is the rightward orientation `i -> i+1`.
    pub fn rightward(cartan: &CartanData) -> Self {
        Quiver {
            cartan: cartan.clone(),
            orient: cartan.edges().to_vec(),
        }
    }

    /// Build a quiver with an explicit orientation. `arrows` must list each
    /// tree edge exactly once, in either direction.
    pub fn with_orientation(cartan: &CartanData, arrows: &[(usize, usize)]) -> Result<Self> {
        let mut orient: Vec<Option<(usize, usize)>> = vec![None; cartan.edges().len()];
        for &(s, t) in arrows {
            cartan.check_vertex(s)?;
            cartan.check_vertex(t)?;
            let key = (s.min(t), s.max(t));
            let Some(k) = cartan.edges().iter().position(|&e| e == key) else {
                return Err(Error::InvalidCartan(format!(
                    "{s} and {t} are not adjacent in the Dynkin tree"
                )));
            };
            if orient[k].is_some() {
                return Err(Error::InvalidCartan(format!(
                    "edge between {s} and {t} oriented twice"
                )));
            }
            orient[k] = Some((s, t));
        }
        let orient: Option<Vec<(usize, usize)>> = orient.into_iter().collect();
        match orient {
            Some(orient) => Ok(Quiver {
                cartan: cartan.clone(),
                orient,
            }),
            None => Err(Error::InvalidCartan(
                "orientation must cover every tree edge".into(),
            )),
        }
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank
    }

    /// Directed arrows `(src, tgt)` of the chosen orientation.
    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.orient
    }

    /// Index of the tree edge joining `u` and `v`, with a flag telling
    /// whether the oriented arrow points from `u` to `v`.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<(usize, bool)> {
        self.orient.iter().enumerate().find_map(|(k, &(s, t))| {
            if (s, t) == (u, v) {
                Some((k, true))
            } else if (s, t) == (v, u) {
                Some((k, false))
            } else {
                None
            }
        })
    }

    pub fn is_rightward_type_a(&self) -> bool {
        self.cartan.family == CartanFamily::A
            && self.orient.iter().enumerate().all(|(k, &(s, t))| (s, t) == (k + 1, k + 2))
    }
}

/// A module over the preprojective algebra: graded dimensions and a rational
/// matrix for each arrow of the doubled quiver.
#[derive(Debug, Clone, PartialEq)]
pub struct PiModule {
    pub dims: Vec<usize>,
    /// `fwd[k]`: map along the oriented arrow of edge `k` (target x source).
    pub fwd: Vec<QMatrix>,
    /// `star[k]`: map along the reversed arrow of edge `k`.
    pub star: Vec<QMatrix>,
}

impl PiModule {
    pub fn zero(q: &Quiver) -> Self {
        let dims = vec![0; q.rank()];
        let fwd = q
            .arrows()
            .iter()
            .map(|_| Matrix::zero(&Rationals, 0, 0))
            .collect();
        let star = q
            .arrows()
            .iter()
            .map(|_| Matrix::zero(&Rationals, 0, 0))
            .collect();
        PiModule { dims, fwd, star }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// True when every star map is zero, i.e. the module is a representation
    /// of the oriented quiver itself.
    pub fn is_kq(&self) -> bool {
        self.star.iter().all(|m| m.is_zero(&Rationals))
    }
}

/// Multiset of intervals defining a type A module: each `[from, to]` with a
/// multiplicity, one-dimensional at every vertex it covers, identity maps
/// rightward.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalSpec {
    pub intervals: Vec<Interval>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    pub from: usize,
    pub to: usize,
    pub mult: usize,
}

impl IntervalSpec {
    pub fn new(intervals: Vec<Interval>) -> Self {
        IntervalSpec { intervals }
    }

    pub fn validate(&self, rank: usize) -> Result<()> {
        for iv in &self.intervals {
            if iv.from == 0 || iv.to > rank || iv.from > iv.to {
                return Err(Error::BadInterval(format!(
                    "[{}, {}] does not fit in 1..={rank}",
                    iv.from, iv.to
                )));
            }
            if iv.mult == 0 {
                return Err(Error::BadInterval(format!(
                    "interval [{}, {}] has multiplicity 0",
                    iv.from, iv.to
                )));
            }
        }
        Ok(())
    }

    /// Graded dimension vector of the resulting module.
    pub fn dims(&self, rank: usize) -> Vec<usize> {
        let mut d = vec![0; rank];
        for iv in &self.intervals {
            for v in iv.from..=iv.to {
                d[v - 1] += iv.mult;
            }
        }
        d
    }

    pub fn total_dim(&self) -> usize {
        self.intervals.iter().map(|iv| iv.mult * (iv.to - iv.from + 1)).sum()
    }

    /// Expand to single intervals, repeating each one `mult` times.
    pub fn summands(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for iv in &self.intervals {
            for _ in 0..iv.mult {
                out.push((iv.from, iv.to));
            }
        }
        out
    }

    pub fn concat(&self, other: &IntervalSpec) -> IntervalSpec {
        let mut intervals = self.intervals.clone();
        intervals.extend(other.intervals.iter().copied());
        IntervalSpec { intervals }
    }

    pub fn label(&self) -> String {
        if self.intervals.is_empty() {
            return "0".to_string();
        }
        self.intervals
            .iter()
            .map(|iv| {
                if iv.mult == 1 {
                    format!("[{},{}]", iv.from, iv.to)
                } else {
                    format!("{}[{},{}]", iv.mult, iv.from, iv.to)
                }
            })
            .collect::<Vec<_>>()
            .join("+")
    }
}

/// Check matrix shapes and the preprojective relation at every vertex; exact
/// zero is required.
pub fn validate_module(q: &Quiver, m: &PiModule) -> Result<()> {
    if m.dims.len() != q.rank() {
        return Err(Error::ShapeMismatch(format!(
            "{} graded dimensions for rank {}",
            m.dims.len(),
            q.rank()
        )));
    }
    if m.fwd.len() != q.arrows().len() || m.star.len() != q.arrows().len() {
        return Err(Error::ShapeMismatch("one matrix pair per edge required".into()));
    }
    for (k, &(s, t)) in q.arrows().iter().enumerate() {
        let (ds, dt) = (m.dims[s - 1], m.dims[t - 1]);
        if m.fwd[k].rows() != dt || m.fwd[k].cols() != ds {
            return Err(Error::ShapeMismatch(format!(
                "arrow {s}->{t} must be {dt}x{ds}, got {}x{}",
                m.fwd[k].rows(),
                m.fwd[k].cols()
            )));
        }
        if m.star[k].rows() != ds || m.star[k].cols() != dt {
            return Err(Error::ShapeMismatch(format!(
                "arrow {t}->{s} must be {ds}x{dt}, got {}x{}",
                m.star[k].rows(),
                m.star[k].cols()
            )));
        }
    }
    let mut bad = Vec::new();
    for i in 1..=q.rank() {
        let di = m.dims[i - 1];
        let mut acc: QMatrix = Matrix::zero(&Rationals, di, di);
        for (k, &(s, t)) in q.arrows().iter().enumerate() {
            if t == i {
                // incoming oriented arrow: + fwd . star
                acc = acc.add(&Rationals, &m.fwd[k].mul(&Rationals, &m.star[k]));
            }
            if s == i {
                // incoming star arrow: - star . fwd
                let prod = m.star[k].mul(&Rationals, &m.fwd[k]);
                acc = acc.add(&Rationals, &prod.scale(&Rationals, &-num::one::<BigRational>()));
            }
        }
        if !acc.is_zero(&Rationals) {
            bad.push(i);
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Error::RelationViolation(bad))
    }
}

/// Build the direct sum of one-direction interval modules on a rightward
/// type A quiver. Star maps are zero, so the preprojective relation holds.
pub fn build_from_intervals(q: &Quiver, spec: &IntervalSpec) -> Result<PiModule> {
    if !q.is_rightward_type_a() {
        return Err(Error::BadInterval(
            "interval modules need a rightward type A quiver".into(),
        ));
    }
    spec.validate(q.rank())?;
    let dims = spec.dims(q.rank());
    let summands = spec.summands();
    let fwd: Vec<QMatrix> = q
        .arrows()
        .iter()
        .map(|&(s, t)| {
            Matrix::from_fn(dims[t - 1], dims[s - 1], |r, c| {
                // basis at a vertex is ordered by summand; the arrow s -> t
                // maps the copy of summand z at s identically onto its copy
                // at t whenever the interval covers both vertices
                let row_summand = summand_at(&summands, t, r);
                let col_summand = summand_at(&summands, s, c);
                if row_summand == col_summand {
                    num::one()
                } else {
                    num::zero()
                }
            })
        })
        .collect();
    let star: Vec<QMatrix> = q
        .arrows()
        .iter()
        .map(|&(s, t)| Matrix::zero(&Rationals, dims[s - 1], dims[t - 1]))
        .collect();
    let m = PiModule { dims, fwd, star };
    debug_assert!(validate_module(q, &m).is_ok());
    Ok(m)
}

/// Which summand owns basis vector `idx` of the fiber at `vertex`?
fn summand_at(summands: &[(usize, usize)], vertex: usize, idx: usize) -> usize {
    let mut seen = 0;
    for (z, &(a, b)) in summands.iter().enumerate() {
        if a <= vertex && vertex <= b {
            if seen == idx {
                return z;
            }
            seen += 1;
        }
    }
    panic!("basis index {idx} out of range at vertex {vertex}");
}

/// Block-diagonal direct sum of two modules over the same quiver.
pub fn direct_sum(q: &Quiver, m: &PiModule, n: &PiModule) -> Result<PiModule> {
    if m.dims.len() != n.dims.len() || m.fwd.len() != n.fwd.len() {
        return Err(Error::ShapeMismatch("direct sum over different quivers".into()));
    }
    let _ = q;
    let dims = m.dims.iter().zip(&n.dims).map(|(a, b)| a + b).collect();
    let fwd = m
        .fwd
        .iter()
        .zip(&n.fwd)
        .map(|(a, b)| a.direct_sum(&Rationals, b))
        .collect();
    let star = m
        .star
        .iter()
        .zip(&n.star)
        .map(|(a, b)| a.direct_sum(&Rationals, b))
        .collect();
    Ok(PiModule { dims, fwd, star })
}

/// Composition of arrow maps along the unique simple path from `i` to `j` in
/// the tree, each step taken in the travel direction. `phi_ii` is the
/// identity.
pub fn path_map(q: &Quiver, m: &PiModule, i: usize, j: usize) -> QMatrix {
    let path = tree_path(&q.cartan, i, j);
    let mut acc: QMatrix = Matrix::identity(&Rationals, m.dims[i - 1]);
    for step in path.windows(2) {
        let (u, v) = (step[0], step[1]);
        let (k, forward) = q.edge_between(u, v).expect("path steps are edges");
        let mat = if forward { &m.fwd[k] } else { &m.star[k] };
        acc = mat.mul(&Rationals, &acc);
    }
    acc
}

/// Vertex path from `i` to `j` (inclusive) in the Dynkin tree.
fn tree_path(cartan: &CartanData, i: usize, j: usize) -> Vec<usize> {
    if i == j {
        return vec![i];
    }
    let mut prev: Vec<Option<usize>> = vec![None; cartan.rank + 1];
    let mut queue = std::collections::VecDeque::from([i]);
    prev[i] = Some(i);
    while let Some(u) = queue.pop_front() {
        if u == j {
            break;
        }
        for &v in cartan.adjacent(u) {
            if prev[v].is_none() {
                prev[v] = Some(u);
                queue.push_back(v);
            }
        }
    }
    let mut path = vec![j];
    let mut cur = j;
    while cur != i {
        cur = prev[cur].expect("tree is connected");
        path.push(cur);
    }
    path.reverse();
    path
}

/// The block map attached to a chamber weight: source summed over the
/// negative support, target over the positive support, block `(j, i)` the
/// path map `M_i -> M_j`.
#[derive(Debug, Clone)]
pub struct PhiGamma {
    pub matrix: QMatrix,
    pub source_vertices: Vec<usize>,
    pub target_vertices: Vec<usize>,
}

pub fn phi_gamma(q: &Quiver, m: &PiModule, gamma: &Weight) -> Result<PhiGamma> {
    let (pos, neg) = signed_supports(gamma);
    for (i, mult) in pos.iter().chain(neg.iter()) {
        if *mult >= 2 {
            return Err(Error::UnsupportedMultiplicity(*i));
        }
    }
    let source_vertices: Vec<usize> = neg.iter().map(|&(i, _)| i).collect();
    let target_vertices: Vec<usize> = pos.iter().map(|&(i, _)| i).collect();
    let src_dim: usize = source_vertices.iter().map(|&i| m.dims[i - 1]).sum();
    let tgt_dim: usize = target_vertices.iter().map(|&i| m.dims[i - 1]).sum();
    let mut matrix: QMatrix = Matrix::zero(&Rationals, tgt_dim, src_dim);
    let mut row0 = 0;
    for &j in &target_vertices {
        let mut col0 = 0;
        for &i in &source_vertices {
            let block = path_map(q, m, i, j);
            for r in 0..block.rows() {
                for c in 0..block.cols() {
                    matrix.set(row0 + r, col0 + c, block.at(r, c).clone());
                }
            }
            col0 += m.dims[i - 1];
        }
        row0 += m.dims[j - 1];
    }
    Ok(PhiGamma {
        matrix,
        source_vertices,
        target_vertices,
    })
}

/// `D_gamma(M) = dim ker phi_{-gamma}(M)`, a nonnegative integer.
pub fn d_gamma(q: &Quiver, m: &PiModule, gamma: &Weight) -> Result<usize> {
    let phi = phi_gamma(q, m, &gamma.neg())?;
    Ok(phi.matrix.kernel_dim(&Rationals))
}

/// The polytope data of a module: one coweight per Weyl element and the
/// integer `A_gamma = -D_{-gamma}(M)` per chamber weight.
#[derive(Debug, Clone)]
pub struct PolytopeData {
    /// `lambda[w]`, indexed like the enumerating Weyl group.
    pub lambda: Vec<Coweight>,
    /// `(gamma, A_gamma)` in the canonical chamber-weight order.
    pub a_gamma: Vec<(Weight, i64)>,
}

/// Compute `lambda_w = sum_i -D_{-w w_i}(M) * w coroot_i` for every `w`, and
/// the full `A_gamma` table.
pub fn polytope_data(
    q: &Quiver,
    m: &PiModule,
    weyl: &WeylGroup,
    gammas: &[ChamberWeight],
) -> Result<PolytopeData> {
    let rank = q.rank();
    let mut lambda = Vec::with_capacity(weyl.len());
    for w in 0..weyl.len() {
        let mut acc = Coweight::zero(rank);
        for i in 1..=rank {
            let w_omega = weyl.apply_to_weight(w, &Weight::fundamental(rank, i));
            let d = d_gamma(q, m, &w_omega.neg())? as i64;
            let w_coroot = weyl.apply_to_coweight(w, &Coweight::simple_coroot(rank, i));
            acc = acc.add(&w_coroot.scale(-d));
        }
        lambda.push(acc);
    }
    let mut a_gamma = Vec::with_capacity(gammas.len());
    for cw in gammas {
        let d = d_gamma(q, m, &cw.weight.neg())? as i64;
        a_gamma.push((cw.weight.clone(), -d));
    }
    Ok(PolytopeData { lambda, a_gamma })
}

impl PolytopeData {
    /// Consistency: `A_{w w_i} = (lambda_w, w w_i)` for all `w, i`.
    pub fn consistent(&self, weyl: &WeylGroup) -> bool {
        let rank = weyl.cartan.rank;
        let table: std::collections::HashMap<&Weight, i64> =
            self.a_gamma.iter().map(|(g, a)| (g, *a)).collect();
        for w in 0..weyl.len() {
            for i in 1..=rank {
                let gamma = weyl.apply_to_weight(w, &Weight::fundamental(rank, i));
                let Some(&a) = table.get(&gamma) else {
                    return false;
                };
                if pairing(&gamma, &self.lambda[w]) != a {
                    return false;
                }
            }
        }
        true
    }
}
