//! Weyl group enumeration, chamber weights, admissible words and the
//! pseudo-Weyl dominance test.
//!
//! Words are stored in application order: `[i_1, ..., i_m]` denotes the
//! product `s_{i_m} ... s_{i_1}`, i.e. `s_{i_1}` acts first. Elements are
//! canonicalized by their action matrix on the weight lattice in
//! fundamental-weight coordinates.

use std::collections::HashMap;

use crate::cartan::{CartanData, Coweight, Weight};
use crate::{Error, Result};

/// One Weyl group element: its weight-lattice action and one reduced word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    /// Row-major `rank x rank` action matrix in fundamental-weight
    /// coordinates.
    pub matrix: Vec<i64>,
    /// A reduced word in application order.
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }
}

/// The full Weyl group of a Cartan datum, enumerated breadth-first from the
/// identity. Element 0 is the identity; elements are sorted by length.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    pub cartan: CartanData,
    elements: Vec<WeylElement>,
    index: HashMap<Vec<i64>, usize>,
    /// `left_mul[w][i-1]` is the index of `s_i * w`.
    left_mul: Vec<Vec<usize>>,
}

impl WeylGroup {
    /// BFS closure of the simple reflections. Fails if the group exceeds
    /// `bound` elements (guards against misuse on large ranks).
    pub fn enumerate(cartan: &CartanData, bound: usize) -> Result<Self> {
        let rank = cartan.rank;
        let id: Vec<i64> = identity_matrix(rank);
        let simple: Vec<Vec<i64>> = (1..=rank).map(|i| reflection_matrix(cartan, i)).collect();

        let mut elements = vec![WeylElement {
            matrix: id.clone(),
            word: Vec::new(),
        }];
        let mut index = HashMap::new();
        index.insert(id, 0usize);
        let mut edges: Vec<Vec<usize>> = Vec::new();

        let mut head = 0;
        while head < elements.len() {
            let mut row = Vec::with_capacity(rank);
            for i in 1..=rank {
                let m = mat_mul(rank, &simple[i - 1], &elements[head].matrix);
                let next = match index.get(&m) {
                    Some(&idx) => idx,
                    None => {
                        if elements.len() >= bound {
                            return Err(Error::WeylBoundExceeded(bound));
                        }
                        let mut word = elements[head].word.clone();
                        word.push(i);
                        elements.push(WeylElement { matrix: m.clone(), word });
                        index.insert(m, elements.len() - 1);
                        elements.len() - 1
                    }
                };
                row.push(next);
            }
            edges.push(row);
            head += 1;
        }

        Ok(WeylGroup {
            cartan: cartan.clone(),
            elements,
            index,
            left_mul: edges,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn element(&self, w: usize) -> &WeylElement {
        &self.elements[w]
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn length(&self, w: usize) -> usize {
        self.elements[w].word.len()
    }

    /// Index of `s_i * w`.
    pub fn left_mul(&self, w: usize, i: usize) -> usize {
        self.left_mul[w][i - 1]
    }

    pub fn index_of_matrix(&self, m: &[i64]) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn apply_to_weight(&self, w: usize, lambda: &Weight) -> Weight {
        let rank = self.cartan.rank;
        let m = &self.elements[w].matrix;
        let coords = (0..rank)
            .map(|r| (0..rank).map(|c| m[r * rank + c] * lambda.0[c]).sum())
            .collect();
        Weight(coords)
    }

    /// Apply a word (application order) to a coweight by successive simple
    /// reflections.
    pub fn apply_word_to_coweight(&self, word: &[usize], nu: &Coweight) -> Coweight {
        let mut v = nu.clone();
        for &i in word {
            v = self.cartan.reflect_coweight(i, &v);
        }
        v
    }

    pub fn apply_to_coweight(&self, w: usize, nu: &Coweight) -> Coweight {
        self.apply_word_to_coweight(&self.elements[w].word, nu)
    }

    /// `w^{-1} nu`; the inverse of `s_{i_m}...s_{i_1}` is the reversed word.
    pub fn apply_inverse_to_coweight(&self, w: usize, nu: &Coweight) -> Coweight {
        let rev: Vec<usize> = self.elements[w].word.iter().rev().copied().collect();
        self.apply_word_to_coweight(&rev, nu)
    }

    /// All reduced words of element `w`, in application order. Derived by
    /// walking down the weak order through left descents.
    pub fn reduced_words(&self, w: usize) -> Vec<Vec<usize>> {
        if w == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for i in 1..=self.cartan.rank {
            let v = self.left_mul(w, i);
            if self.length(v) + 1 == self.length(w) {
                for mut word in self.reduced_words(v) {
                    word.push(i);
                    out.push(word);
                }
            }
        }
        out
    }

    /// Merged Weyl orbits of all fundamental weights, deduplicated by weight
    /// coordinates, in lexicographic coordinate order.
    pub fn chamber_weights(&self) -> Vec<ChamberWeight> {
        let mut seen: std::collections::BTreeMap<Vec<i64>, (usize, usize)> =
            std::collections::BTreeMap::new();
        for w in 0..self.len() {
            for j in self.cartan.vertices() {
                let gamma = self.apply_to_weight(w, &Weight::fundamental(self.cartan.rank, j));
                seen.entry(gamma.0).or_insert((w, j));
            }
        }
        seen.into_iter()
            .map(|(coords, (witness, source_j))| ChamberWeight::new(Weight(coords), witness, source_j))
            .collect()
    }

    /// Is the word `[i_1..i_m]` j-admissible, i.e. does every prefix satisfy
    /// `<s_{i_{a-1}}...s_{i_1} w_j, coroot_{i_a}> >= 0`?
    ///
    /// The simply-laced pairing `<alpha_{i_a}, mu>` equals the coordinate
    /// `<mu, coroot_{i_a}>` extracted here.
    pub fn is_admissible(&self, word: &[usize], j: usize) -> bool {
        let mut mu = Weight::fundamental(self.cartan.rank, j);
        for &i in word {
            if mu.coord(i) < 0 {
                return false;
            }
            mu = self.cartan.reflect_weight(i, &mu);
        }
        true
    }

    /// Pseudo-Weyl dominance over all ordered pairs: for every `v, w`,
    /// `w^{-1} lambda_v - w^{-1} lambda_w` must be a nonnegative combination
    /// of simple coroots. `lambda` is indexed by element.
    pub fn check_pseudo_weyl(&self, lambda: &[Coweight]) -> Result<bool> {
        if lambda.len() != self.len() {
            return Err(Error::MissingData(format!(
                "need one coweight per Weyl element ({} given, {} needed)",
                lambda.len(),
                self.len()
            )));
        }
        for w in 0..self.len() {
            let pulled: Vec<Coweight> = (0..self.len())
                .map(|v| self.apply_inverse_to_coweight(w, &lambda[v]))
                .collect();
            let base = &pulled[w];
            for lv in &pulled {
                if !lv.sub(base).is_nonneg() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// A chamber weight: a Weyl translate of a fundamental weight, with one
/// witness `(w, j)` such that `gamma = w * w_j`, and its signed supports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberWeight {
    pub weight: Weight,
    /// Index of a witness Weyl element in the enumerating group.
    pub witness: usize,
    /// Fundamental weight index `j` with `gamma = witness * w_j`.
    pub source_j: usize,
    /// Vertices with positive coordinate, with multiplicities.
    pub pos: Vec<(usize, u32)>,
    /// Vertices with negative coordinate, with multiplicities `|gamma_i|`.
    pub neg: Vec<(usize, u32)>,
}

impl ChamberWeight {
    pub fn new(weight: Weight, witness: usize, source_j: usize) -> Self {
        let (pos, neg) = signed_supports(&weight);
        ChamberWeight {
            weight,
            witness,
            source_j,
            pos,
            neg,
        }
    }
}

/// Split a weight into its positive and negative supports (1-based vertices
/// with multiplicities).
pub fn signed_supports(gamma: &Weight) -> (Vec<(usize, u32)>, Vec<(usize, u32)>) {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for (idx, &c) in gamma.0.iter().enumerate() {
        if c > 0 {
            pos.push((idx + 1, c as u32));
        } else if c < 0 {
            neg.push((idx + 1, (-c) as u32));
        }
    }
    (pos, neg)
}

fn identity_matrix(rank: usize) -> Vec<i64> {
    let mut m = vec![0i64; rank * rank];
    for i in 0..rank {
        m[i * rank + i] = 1;
    }
    m
}

/// Action matrix of `s_i` on weight coordinates: identity except column `i`,
/// where `s_i` subtracts the Cartan column.
fn reflection_matrix(cartan: &CartanData, i: usize) -> Vec<i64> {
    let rank = cartan.rank;
    let mut m = identity_matrix(rank);
    for r in 0..rank {
        m[r * rank + (i - 1)] -= cartan.cartan[r][i - 1];
    }
    m
}

fn mat_mul(rank: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; rank * rank];
    for r in 0..rank {
        for k in 0..rank {
            let av = a[r * rank + k];
            if av == 0 {
                continue;
            }
            for c in 0..rank {
                out[r * rank + c] += av * b[k * rank + c];
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{pairing, CartanFamily};

    fn group(family: CartanFamily, rank: usize) -> WeylGroup {
        let cartan = CartanData::new(family, rank).unwrap();
        WeylGroup::enumerate(&cartan, 100_000).unwrap()
    }

    #[test]
    fn group_orders() {
        // Symmetric group orders for type A, and 2^{n-1} n! for type D.
        assert_eq!(group(CartanFamily::A, 1).len(), 2);
        assert_eq!(group(CartanFamily::A, 2).len(), 6);
        assert_eq!(group(CartanFamily::A, 3).len(), 24);
        assert_eq!(group(CartanFamily::D, 4).len(), 192);
    }

    #[test]
    fn bound_honored() {
        let cartan = CartanData::new(CartanFamily::A, 3).unwrap();
        assert!(matches!(
            WeylGroup::enumerate(&cartan, 10),
            Err(Error::WeylBoundExceeded(10))
        ));
    }

    #[test]
    fn words_are_reduced_and_act_correctly() {
        let g = group(CartanFamily::A, 3);
        for w in 0..g.len() {
            let el = g.element(w);
            // replaying the stored word must reproduce the action matrix
            let mut probe = 0usize;
            for &i in &el.word {
                probe = g.left_mul(probe, i);
            }
            assert_eq!(probe, w);
        }
    }

    #[test]
    fn simple_reflections_square_to_identity_and_braid() {
        let g = group(CartanFamily::A, 3);
        let c = &g.cartan;
        for i in 1..=3usize {
            assert_eq!(g.left_mul(g.left_mul(0, i), i), 0);
            for j in 1..=3usize {
                if i == j {
                    continue;
                }
                let m = if c.cartan[i - 1][j - 1] == 0 { 2 } else { 3 };
                let mut w = 0usize;
                for _ in 0..m {
                    w = g.left_mul(w, i);
                    w = g.left_mul(w, j);
                }
                assert_eq!(w, 0, "braid relation for ({i},{j})");
            }
        }
    }

    #[test]
    fn chamber_weight_counts() {
        // Orbit closure sizes: sum of binomials C(n+1, j) in type A.
        assert_eq!(group(CartanFamily::A, 1).chamber_weights().len(), 2);
        assert_eq!(group(CartanFamily::A, 2).chamber_weights().len(), 6);
        assert_eq!(group(CartanFamily::A, 3).chamber_weights().len(), 14);
    }

    #[test]
    fn a2_chamber_weights_explicit() {
        let g = group(CartanFamily::A, 2);
        let mut coords: Vec<Vec<i64>> = g
            .chamber_weights()
            .iter()
            .map(|cw| cw.weight.0.clone())
            .collect();
        coords.sort();
        let mut expected = vec![
            vec![1, 0],
            vec![0, 1],
            vec![-1, 0],
            vec![0, -1],
            vec![1, -1],
            vec![-1, 1],
        ];
        expected.sort();
        assert_eq!(coords, expected);
    }

    #[test]
    fn chamber_weight_witnesses_and_supports() {
        let g = group(CartanFamily::A, 3);
        for cw in g.chamber_weights() {
            let w = g.apply_to_weight(cw.witness, &Weight::fundamental(3, cw.source_j));
            assert_eq!(w, cw.weight);
            for (i, m) in &cw.pos {
                assert_eq!(cw.weight.coord(*i), *m as i64);
            }
            for (i, m) in &cw.neg {
                assert_eq!(cw.weight.coord(*i), -(*m as i64));
            }
        }
    }

    #[test]
    fn orbit_size_times_stabilizer() {
        let g = group(CartanFamily::A, 3);
        for j in 1..=3usize {
            let mut orbit = std::collections::HashSet::new();
            let mut stab = 0usize;
            for w in 0..g.len() {
                let img = g.apply_to_weight(w, &Weight::fundamental(3, j));
                if img == Weight::fundamental(3, j) {
                    stab += 1;
                }
                orbit.insert(img.0);
            }
            assert_eq!(orbit.len() * stab, g.len());
        }
    }

    #[test]
    fn admissibility_examples() {
        let g = group(CartanFamily::A, 2);
        assert!(g.is_admissible(&[1], 1));
        assert!(!g.is_admissible(&[1, 1], 1));
        assert!(g.is_admissible(&[1, 2], 1));
    }

    #[test]
    fn pairing_invariant_under_group_action() {
        let g = group(CartanFamily::A, 3);
        let lam = Weight(vec![2, -1, 3]);
        let nu = Coweight(vec![1, 4, -2]);
        let base = pairing(&lam, &nu);
        for w in 0..g.len() {
            if g.length(w) > 6 {
                continue;
            }
            let wl = g.apply_to_weight(w, &lam);
            let wn = g.apply_to_coweight(w, &nu);
            assert_eq!(pairing(&wl, &wn), base);
        }
    }

    #[test]
    fn pseudo_weyl_examples() {
        let g = group(CartanFamily::A, 1);
        let all_equal = vec![Coweight(vec![3]), Coweight(vec![3])];
        assert!(g.check_pseudo_weyl(&all_equal).unwrap());
        // identity element is index 0, s_1 is index 1
        let ok = vec![Coweight(vec![-1]), Coweight(vec![1])];
        assert!(g.check_pseudo_weyl(&ok).unwrap());
        let bad = vec![Coweight(vec![1]), Coweight(vec![-1])];
        assert!(!g.check_pseudo_weyl(&bad).unwrap());
        assert!(g.check_pseudo_weyl(&[]).is_err());
    }

    #[test]
    fn reduced_words_of_longest_element_a2() {
        let g = group(CartanFamily::A, 2);
        let w0 = (0..g.len()).max_by_key(|&w| g.length(w)).unwrap();
        let mut words = g.reduced_words(w0);
        words.sort();
        assert_eq!(words, vec![vec![1, 2, 1], vec![2, 1, 2]]);
    }
}
