use std::collections::VecDeque;

use thiserror::Error;

use super::{parity, Complex, PseudomanifoldReport, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrientationError {
    #[error("not a closed pseudomanifold ({} bad ridges, {} components)", .0.bad_ridges.len(), .0.components)]
    NotClosed(PseudomanifoldReport),
    #[error("no coherent orientation exists (conflict at facet {0:?})")]
    NonOrientable(Vec<Vertex>),
    #[error("orientation has {got} signs for {expected} facets")]
    WrongLength { expected: usize, got: usize },
    #[error("orientation is not coherent across ridge {0:?}")]
    Incoherent(Vec<Vertex>),
    #[error("sign {0} is not +1 or -1")]
    BadSign(i8),
}

/// A closed pseudomanifold with a coherent orientation.
///
/// `signs[i]` is the orientation of facet `i` relative to its sorted vertex
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrientedComplex {
    complex: Complex,
    signs: Vec<i8>,
}

/// Sign that facet `g` must carry so that it induces the opposite orientation
/// to facet `f` (with sign `sf`) on their shared ridge, where the ridge omits
/// position `pf` of `f` and position `pg` of `g`.
fn neighbour_sign(sf: i8, pf: usize, pg: usize) -> i8 {
    if (pf + pg).is_multiple_of(2) {
        -sf
    } else {
        sf
    }
}

impl OrientedComplex {
    /// Coherent orientation by breadth-first propagation; the lexicographically
    /// smallest facet gets sign +1.
    pub fn orient(complex: Complex) -> Result<Self, OrientationError> {
        let report = complex.check_closed_pseudomanifold();
        if !report.passed() {
            return Err(OrientationError::NotClosed(report));
        }
        let ridges = complex.ridge_map();
        let mut signs = vec![0i8; complex.facet_count()];
        signs[0] = 1;
        let mut queue = VecDeque::from([0usize]);
        while let Some(f) = queue.pop_front() {
            let facet = &complex.facets()[f];
            for pf in 0..facet.len() {
                let mut ridge = facet.clone();
                ridge.remove(pf);
                for &(g, pg) in &ridges[&ridge] {
                    if g == f {
                        continue;
                    }
                    let want = neighbour_sign(signs[f], pf, pg);
                    if signs[g] == 0 {
                        signs[g] = want;
                        queue.push_back(g);
                    } else if signs[g] != want {
                        return Err(OrientationError::NonOrientable(complex.facets()[g].clone()));
                    }
                }
            }
        }
        Ok(Self { complex, signs })
    }

    /// Wraps explicit signs, checking closedness and coherence.
    pub fn with_signs(complex: Complex, signs: Vec<i8>) -> Result<Self, OrientationError> {
        if signs.len() != complex.facet_count() {
            return Err(OrientationError::WrongLength {
                expected: complex.facet_count(),
                got: signs.len(),
            });
        }
        if let Some(&s) = signs.iter().find(|s| s.abs() != 1) {
            return Err(OrientationError::BadSign(s));
        }
        let report = complex.check_closed_pseudomanifold();
        if !report.passed() {
            return Err(OrientationError::NotClosed(report));
        }
        let oriented = Self { complex, signs };
        if let Some(ridge) = oriented.incoherent_ridge() {
            return Err(OrientationError::Incoherent(ridge));
        }
        Ok(oriented)
    }

    /// Caller guarantees closedness and coherence.
    pub(crate) fn unchecked(complex: Complex, signs: Vec<i8>) -> Self {
        Self { complex, signs }
    }

    /// Orients `complex` coherently so that `facet` carries `sign`.
    pub fn orient_like(
        complex: Complex,
        facet: &[Vertex],
        sign: i8,
    ) -> Result<Self, OrientationError> {
        let idx = complex
            .facet_index(facet)
            .expect("reference facet belongs to the complex");
        let mut oriented = Self::orient(complex)?;
        if oriented.signs[idx] != sign {
            oriented.reverse();
        }
        Ok(oriented)
    }

    /// First ridge (in sorted order) across which the two facets fail to
    /// induce opposite orientations.
    pub fn incoherent_ridge(&self) -> Option<Vec<Vertex>> {
        let mut bad: Vec<Vec<Vertex>> = self
            .complex
            .ridge_map()
            .into_iter()
            .filter(|(_, inc)| {
                inc.len() == 2 && inc[1].0 != inc[0].0 && {
                    let (f, pf) = inc[0];
                    let (g, pg) = inc[1];
                    self.signs[g] != neighbour_sign(self.signs[f], pf, pg)
                }
            })
            .map(|(r, _)| r)
            .collect();
        bad.sort();
        bad.into_iter().next()
    }

    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    pub fn into_complex(self) -> Complex {
        self.complex
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn sign_of(&self, facet_index: usize) -> i8 {
        self.signs[facet_index]
    }

    /// Facet `i` as an oriented vertex tuple: sorted order when positive,
    /// first two entries swapped when negative.
    pub fn oriented_facet(&self, i: usize) -> Vec<Vertex> {
        let mut f = self.complex.facets()[i].clone();
        if self.signs[i] < 0 && f.len() >= 2 {
            f.swap(0, 1);
        }
        f
    }

    /// Sign of an oriented tuple relative to its sorted order.
    pub fn tuple_sign(tuple: &[Vertex]) -> i8 {
        parity(tuple)
    }

    pub fn reverse(&mut self) {
        for s in &mut self.signs {
            *s = -*s;
        }
    }

    pub fn reversed(&self) -> Self {
        let mut out = self.clone();
        out.reverse();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tetra() -> Complex {
        Complex::new([[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]).unwrap()
    }

    #[test]
    fn orients_tetrahedron_boundary() {
        let o = OrientedComplex::orient(tetra()).unwrap();
        // boundary of [1,2,3,4]: +[2,3,4] -[1,3,4] +[1,2,4] -[1,2,3], seeded so [1,2,3] is +
        assert_eq!(o.signs(), &[1, -1, 1, -1]);
        assert!(o.incoherent_ridge().is_none());
    }

    #[test]
    fn orients_hexagon_around_the_cycle() {
        let hex = Complex::new((1..=6).map(|i| [i, i % 6 + 1])).unwrap();
        let o = OrientedComplex::orient(hex).unwrap();
        let mut heads = Vec::new();
        for i in 0..6 {
            let t = o.oriented_facet(i);
            heads.push((t[0], t[1]));
        }
        heads.sort();
        assert_eq!(heads, vec![(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1)]);
    }

    #[test]
    fn orient_is_deterministic() {
        let a = OrientedComplex::orient(tetra()).unwrap();
        let b = OrientedComplex::orient(tetra()).unwrap();
        assert_eq!(a.signs(), b.signs());
    }

    #[test]
    fn rejects_incoherent_signs() {
        let err = OrientedComplex::with_signs(tetra(), vec![1, 1, 1, -1]).unwrap_err();
        assert!(matches!(err, OrientationError::Incoherent(_)));
        assert!(OrientedComplex::with_signs(tetra(), vec![-1, 1, -1, 1]).is_ok());
    }

    #[test]
    fn orient_like_flips_when_needed() {
        let o = OrientedComplex::orient_like(tetra(), &[1, 2, 3], -1).unwrap();
        assert_eq!(o.signs(), &[-1, 1, -1, 1]);
    }
}
