use alloc::vec::Vec;

use super::{FieldElement, NumberFieldError};
use crate::exact::PolyQ;
use crate::realalg::{interval_eval, isolate_real_roots, DyadicInterval, IsolatedRoot};

/// The real embeddings `sigma_1 < ... < sigma_n`, ordered by ascending root of `g`.
#[derive(Debug, Clone)]
pub struct Embeddings {
    roots: Vec<IsolatedRoot>,
}

/// Extra bits carried through root refinement and Horner evaluation.
const GUARD_BITS: u32 = 32;

impl Embeddings {
    pub fn new(g: &PolyQ) -> Result<Self, NumberFieldError> {
        let n = g.degree().unwrap_or(0);
        let roots = isolate_real_roots(g).map_err(NumberFieldError::RealAlg)?;
        if roots.len() != n {
            return Err(NumberFieldError::NotTotallyReal { real_roots: roots.len(), degree: n });
        }
        Ok(Embeddings { roots })
    }

    pub fn count(&self) -> usize {
        self.roots.len()
    }

    /// Enclosures of `sigma_i(theta)` of width at most `2^-(bits + guard)`.
    pub fn refined(&self, bits: u32) -> RefinedEmbeddings {
        let prec = bits + GUARD_BITS;
        RefinedEmbeddings {
            prec,
            thetas: self.roots.iter().map(|r| r.refine(prec).interval()).collect(),
        }
    }
}

/// Root enclosures at a fixed working precision.
#[derive(Debug, Clone)]
pub struct RefinedEmbeddings {
    prec: u32,
    thetas: Vec<DyadicInterval>,
}

impl RefinedEmbeddings {
    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn theta(&self, i: usize) -> &DyadicInterval {
        &self.thetas[i]
    }

    /// Enclosure of `sigma_i(a)`.
    pub fn eval(&self, a: &FieldElement, i: usize) -> DyadicInterval {
        interval_eval(&a.as_poly(), &self.thetas[i], self.prec)
    }

    pub fn eval_all(&self, a: &FieldElement) -> Vec<DyadicInterval> {
        (0..self.thetas.len()).map(|i| self.eval(a, i)).collect()
    }
}
