use super::{DivisorGerm, VectorField};
use crate::gb::{self, ModuleElement};
use crate::linalg;
use crate::poly::Polynomial;
use crate::{Error, Result};

/// Saito's criterion at the origin, with the Cohen–Macaulay cross-check for
/// quasi-homogeneous equations.
#[derive(Clone, Debug)]
pub struct FreenessReport {
    pub free: bool,
    /// Minimal number of generators of `Der(log D)` at the origin.
    pub mu: usize,
    /// Minimal generators (a basis when free).
    pub generators: Vec<VectorField>,
    /// `det M` of the coefficient matrix, when `μ = n`.
    pub determinant: Option<Polynomial>,
    /// `u` with `det M = u·h`.
    pub unit: Option<Polynomial>,
    /// Weights for which `h` is quasi-homogeneous, if any.
    pub weights: Option<Vec<u32>>,
    /// `pd(R/((h)+J_h))` when the graded cross-check ran.
    pub projective_dimension: Option<usize>,
}

impl FreenessReport {
    pub fn basis(&self) -> Option<&[VectorField]> {
        self.free.then_some(self.generators.as_slice())
    }

    /// Rows are the coefficient vectors of the basis fields.
    pub fn matrix(&self) -> Option<Vec<Vec<Polynomial>>> {
        self.basis().map(|b| b.iter().map(|f| f.coeffs().to_vec()).collect())
    }
}

pub(super) fn is_free_at_origin(d: &DivisorGerm) -> Result<FreenessReport> {
    d.ensure_reduced()?;
    let n = d.nvars();
    let gens = d.der_log()?;
    let elems: Vec<ModuleElement> = gens.iter().map(|f| ModuleElement::new(f.coeffs().to_vec())).collect();
    let keep = gb::minimal_subset_at_origin(&elems)?;
    let minimal: Vec<VectorField> = keep.iter().map(|&i| gens[i].clone()).collect();
    let mu = minimal.len();
    if mu < n {
        return Err(Error::Internal(format!("Der(log D) generated by {mu} < n fields")));
    }

    let (free, determinant, unit) = if mu == n {
        let m: Vec<Vec<Polynomial>> = minimal.iter().map(|f| f.coeffs().to_vec()).collect();
        let det = linalg::det(&m);
        let u = det
            .div_exact(d.h())
            .ok_or_else(|| Error::Internal("Saito determinant not divisible by h".into()))?;
        if !u.vanishes_at_origin() {
            (true, Some(det), Some(u))
        } else {
            return Err(Error::Internal(
                "n minimal logarithmic fields whose determinant is not a unit multiple of h".into(),
            ));
        }
    } else {
        (false, None, None)
    };

    let weights = gb::quasi_homogeneous_weights(std::slice::from_ref(d.h()));
    let mut projective_dimension = None;
    if weights.is_some() && !d.is_smooth_at_origin() {
        let res = gb::free_resolution(d.singular_locus_ideal().gens())?;
        let pd = res.projective_dimension();
        projective_dimension = Some(pd);
        if res.minimal_at_origin && (pd == 2) != free {
            return Err(Error::Internal(format!(
                "Saito test says free = {free} but pd(R/((h)+J_h)) = {pd}"
            )));
        }
    }

    Ok(FreenessReport {
        free,
        mu,
        generators: minimal,
        determinant,
        unit,
        weights,
        projective_dimension,
    })
}
