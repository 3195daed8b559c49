//! Submodule tests and Euler characteristics of quiver Grassmannians.
//!
//! For interval-built type A modules the Euler characteristic is computed by
//! the Caldero–Chapoton convolution over direct summands: a one-direction
//! module has exactly one submodule per suffix of its support (plus zero), so
//! the count is a small lattice-point convolution and needs no geometry.

use std::collections::HashMap;

use crate::cartan::Coweight;
use crate::field::Rationals;
use crate::matrix::{Matrix, RowSpace};
use crate::quiver::{IntervalSpec, PiModule, QMatrix, Quiver};
use crate::{Error, Result};

/// Dimension-vector dictionary `nu = sum_i e_i coroot_i`.
pub fn nu_of_dim_vector(e: &[usize]) -> Coweight {
    Coweight(e.iter().map(|&x| x as i64).collect())
}

/// Inverse dictionary `e_i = <w_i, nu>`; fails on negative coordinates.
pub fn dim_vector_of_nu(nu: &Coweight) -> Result<Vec<usize>> {
    nu.0.iter()
        .map(|&x| {
            usize::try_from(x)
                .map_err(|_| Error::BadDimVector(format!("coweight coordinate {x} is negative")))
        })
        .collect()
}

/// Is the graded collection of column spans a submodule, i.e. stable under
/// every arrow of the doubled quiver?
pub fn is_submodule(q: &Quiver, m: &PiModule, subspaces: &[QMatrix]) -> Result<bool> {
    if subspaces.len() != q.rank() {
        return Err(Error::ShapeMismatch(format!(
            "{} subspaces for rank {}",
            subspaces.len(),
            q.rank()
        )));
    }
    for (i, s) in subspaces.iter().enumerate() {
        if s.rows() != m.dims[i] {
            return Err(Error::ShapeMismatch(format!(
                "subspace at vertex {} lives in dimension {}, module has {}",
                i + 1,
                s.rows(),
                m.dims[i]
            )));
        }
    }
    let spans: Vec<RowSpace<_>> = subspaces
        .iter()
        .map(|s| RowSpace::of_column_span(&Rationals, s))
        .collect();
    for (k, &(s, t)) in q.arrows().iter().enumerate() {
        let image = m.fwd[k].mul(&Rationals, &subspaces[s - 1]);
        if !spans[t - 1].contains_rows(&Rationals, &image.transpose()) {
            return Ok(false);
        }
        let image = m.star[k].mul(&Rationals, &subspaces[t - 1]);
        if !spans[s - 1].contains_rows(&Rationals, &image.transpose()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The full subspace at every vertex.
pub fn full_subspaces(m: &PiModule) -> Vec<QMatrix> {
    m.dims
        .iter()
        .map(|&d| Matrix::identity(&Rationals, d))
        .collect()
}

/// The zero subspace at every vertex.
pub fn zero_subspaces(m: &PiModule) -> Vec<QMatrix> {
    m.dims
        .iter()
        .map(|&d| Matrix::zero(&Rationals, d, 0))
        .collect()
}

/// Dimension vectors of the submodules of a single interval `[a, b]`: zero
/// and the indicator of each suffix `[c, b]`.
fn interval_submodule_dims(rank: usize, a: usize, b: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![0; rank]];
    for c in (a..=b).rev() {
        let mut v = vec![0; rank];
        for i in c..=b {
            v[i - 1] = 1;
        }
        out.push(v);
    }
    out
}

/// Euler characteristic of the quiver Grassmannian of an interval-built
/// module, by convolution over the summands.
pub fn euler_cc(rank: usize, spec: &IntervalSpec, e: &[usize]) -> Result<u64> {
    spec.validate(rank)?;
    if e.len() != rank {
        return Err(Error::BadDimVector(format!(
            "dimension vector has {} entries for rank {rank}",
            e.len()
        )));
    }
    let mut states: HashMap<Vec<usize>, u64> = HashMap::new();
    states.insert(vec![0; rank], 1);
    for (a, b) in spec.summands() {
        let options = interval_submodule_dims(rank, a, b);
        let mut next: HashMap<Vec<usize>, u64> = HashMap::new();
        for (acc, count) in &states {
            'opt: for opt in &options {
                let mut sum = acc.clone();
                for i in 0..rank {
                    sum[i] += opt[i];
                    if sum[i] > e[i] {
                        continue 'opt;
                    }
                }
                *next.entry(sum).or_insert(0) += count;
            }
        }
        states = next;
    }
    Ok(states.get(e).copied().unwrap_or(0))
}

/// Sum of Euler characteristics over all dimension vectors: the number of
/// submodules that survive at q -> 1, which is the product of
/// `(length + 1)` over the summands.
pub fn euler_total(rank: usize, spec: &IntervalSpec) -> Result<u64> {
    let dims = spec.dims(rank);
    let mut total = 0u64;
    let mut e = vec![0usize; rank];
    loop {
        total += euler_cc(rank, spec, &e)?;
        // odometer over the box 0..=d
        let mut i = 0;
        loop {
            if i == rank {
                return Ok(total);
            }
            if e[i] < dims[i] {
                e[i] += 1;
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{CartanData, CartanFamily};
    use crate::quiver::{build_from_intervals, Interval};
    use num::BigRational;

    fn q1(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn setup(rank: usize, ivs: &[(usize, usize, usize)]) -> (Quiver, PiModule, IntervalSpec) {
        let q = Quiver::rightward(&CartanData::new(CartanFamily::A, rank).unwrap());
        let spec = IntervalSpec::new(
            ivs.iter()
                .map(|&(from, to, mult)| Interval { from, to, mult })
                .collect(),
        );
        let m = build_from_intervals(&q, &spec).unwrap();
        (q, m, spec)
    }

    #[test]
    fn zero_and_full_are_submodules() {
        let (q, m, _) = setup(3, &[(1, 2, 1), (2, 3, 2)]);
        assert!(is_submodule(&q, &m, &zero_subspaces(&m)).unwrap());
        assert!(is_submodule(&q, &m, &full_subspaces(&m)).unwrap());
    }

    #[test]
    fn interval_head_is_not_a_submodule_but_tail_is() {
        let (q, m, _) = setup(2, &[(1, 2, 1)]);
        // (M_1, 0): the arrow pushes M_1 into the missing fiber
        let head = vec![
            Matrix::identity(&Rationals, 1),
            Matrix::zero(&Rationals, 1, 0),
        ];
        assert!(!is_submodule(&q, &m, &head).unwrap());
        let tail = vec![
            Matrix::zero(&Rationals, 1, 0),
            Matrix::identity(&Rationals, 1),
        ];
        assert!(is_submodule(&q, &m, &tail).unwrap());
    }

    #[test]
    fn proper_line_inside_plane() {
        let (q, m, _) = setup(2, &[(1, 2, 1), (2, 2, 1)]);
        // span{(1, 1)} inside the two-dimensional fiber at vertex 2
        let n = vec![
            Matrix::zero(&Rationals, 1, 0),
            Matrix::from_rows(vec![vec![q1(1)], vec![q1(1)]]),
        ];
        assert!(is_submodule(&q, &m, &n).unwrap());
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let (q, m, _) = setup(2, &[(1, 2, 1)]);
        let bad = vec![
            Matrix::identity(&Rationals, 2),
            Matrix::identity(&Rationals, 1),
        ];
        assert!(is_submodule(&q, &m, &bad).is_err());
    }

    #[test]
    fn euler_of_simple_powers() {
        let (_, _, spec) = setup(1, &[(1, 1, 2)]);
        // two simple summands: convolution gives the binomial C(2, 1)
        assert_eq!(euler_cc(1, &spec, &[1]).unwrap(), 2);
        assert_eq!(euler_cc(1, &spec, &[0]).unwrap(), 1);
        assert_eq!(euler_cc(1, &spec, &[2]).unwrap(), 1);
        assert_eq!(euler_cc(1, &spec, &[3]).unwrap(), 0);
    }

    #[test]
    fn euler_of_interval() {
        let (_, _, spec) = setup(2, &[(1, 2, 1)]);
        assert_eq!(euler_cc(2, &spec, &[1, 1]).unwrap(), 1);
        assert_eq!(euler_cc(2, &spec, &[0, 1]).unwrap(), 1);
        assert_eq!(euler_cc(2, &spec, &[1, 0]).unwrap(), 0);
        assert_eq!(euler_cc(2, &spec, &[0, 0]).unwrap(), 1);
    }

    #[test]
    fn euler_of_decomposable() {
        let (_, _, spec) = setup(2, &[(1, 2, 1), (2, 2, 1)]);
        // two summands each contribute a line at vertex 2
        assert_eq!(euler_cc(2, &spec, &[0, 1]).unwrap(), 2);
    }

    #[test]
    fn euler_total_is_product_of_lengths_plus_one() {
        let (_, _, spec) = setup(3, &[(1, 3, 1), (2, 3, 2), (1, 1, 1)]);
        // (3+1) * (2+1)^2 * (1+1)
        assert_eq!(euler_total(3, &spec).unwrap(), 4 * 9 * 2);
    }

    #[test]
    fn dim_vector_dictionary_round_trips() {
        let e = vec![0usize, 2, 1];
        let nu = nu_of_dim_vector(&e);
        assert_eq!(nu, Coweight(vec![0, 2, 1]));
        assert_eq!(dim_vector_of_nu(&nu).unwrap(), e);
        assert!(dim_vector_of_nu(&Coweight(vec![-1])).is_err());
    }
}
