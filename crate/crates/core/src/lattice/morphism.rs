use super::{DivisorClass, IntMatrix, IntersectionLattice, LatticeError};

/// A finite morphism of surfaces seen through its action on numerical
/// classes.
///
/// `pushforward` is `target_rank × source_rank` and `pullback` is
/// `source_rank × target_rank`. Construction checks the projection formula
/// `f_*x · y = x · f^*y` on all basis pairs and `f_* f^* = deg · id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeMorphism {
    source: IntersectionLattice,
    target: IntersectionLattice,
    pushforward: IntMatrix,
    pullback: IntMatrix,
    degree: u32,
}

impl LatticeMorphism {
    pub fn new(
        source: IntersectionLattice,
        target: IntersectionLattice,
        pushforward: IntMatrix,
        pullback: IntMatrix,
        degree: u32,
    ) -> Result<Self, LatticeError> {
        let (s, t) = (source.rank(), target.rank());
        if pushforward.nrows() != t || pushforward.ncols() != s {
            return Err(LatticeError::RankMismatch { expected: t, found: pushforward.nrows() });
        }
        if pullback.nrows() != s || pullback.ncols() != t {
            return Err(LatticeError::RankMismatch { expected: s, found: pullback.nrows() });
        }
        // (P x)ᵀ G_t y = xᵀ G_s (Q y)  ⇔  Pᵀ G_t = G_s Q
        if pushforward.transpose().mul(target.gram()) != source.gram().mul(&pullback) {
            return Err(LatticeError::ProjectionFormula);
        }
        if pushforward.mul(&pullback) != IntMatrix::scalar(t, degree as i64) {
            return Err(LatticeError::DegreeIdentity(degree));
        }
        Ok(Self { source, target, pushforward, pullback, degree })
    }

    pub fn source(&self) -> &IntersectionLattice {
        &self.source
    }

    pub fn target(&self) -> &IntersectionLattice {
        &self.target
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn pushforward_matrix(&self) -> &IntMatrix {
        &self.pushforward
    }

    pub fn pullback_matrix(&self) -> &IntMatrix {
        &self.pullback
    }

    pub fn push(&self, c: &DivisorClass) -> DivisorClass {
        self.pushforward.apply(c)
    }

    pub fn pull(&self, c: &DivisorClass) -> DivisorClass {
        self.pullback.apply(c)
    }
}
