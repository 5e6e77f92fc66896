//! Logarithmic 1-forms, their residues on the divisor and its components,
//! and verifiers for closed or commuting bases.
//!
//! A residue is kept as a certified fraction `a/b` modulo an equation, with
//! `b` a nonzerodivisor there. Equality of classes is decided by
//! cross-multiplication and local membership.

mod coords;
mod forms;
mod residue;

pub use coords::{LinearChange, DEFAULT_SEED};
pub use forms::{
    dlog_in_minimal_basis, dual_basis, dual_of_fields, verify_closed_basis_certificate, verify_commuting_basis,
    ClosedBasisCertificate, LogOneForm,
};
pub use residue::{
    admissible_indices, residue, residue_is_holomorphic_on_smooth_component, residue_with_index, ResidueClass,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisor::{basis_commutes, DivisorGerm};
    use crate::poly::Ring;

    #[test]
    fn dual_basis_of_crossing() {
        let r = Ring::new(["x", "y"]).unwrap();
        let d = DivisorGerm::parse(&r, "x*y", None).unwrap();
        let free = d.is_free_at_origin().unwrap();
        let forms = dual_basis(&d, &free).unwrap();
        assert!(forms.iter().all(|w| w.is_logarithmic(&r, d.h()) && w.is_closed()));
        assert!(basis_commutes(free.basis().unwrap()));
        let cert = verify_closed_basis_certificate(&d, &forms).unwrap();
        assert!(cert.issued);
        assert!(dlog_in_minimal_basis(&d, &free).unwrap());
    }

    #[test]
    fn closedness() {
        let r = Ring::new(["x", "y"]).unwrap();
        let w = LogOneForm::parse(&r, &["y", "x^2"], "x*y").unwrap();
        let h = r.parse("x*y").unwrap();
        assert!(w.is_logarithmic(&r, &h));
        assert!(!w.is_closed());
        assert!(LogOneForm::dlog(&h).is_closed());
        let not_log = LogOneForm::parse(&r, &["1", "0"], "x^2").unwrap();
        assert!(!not_log.is_logarithmic(&r, &h));
    }

    #[test]
    fn residues_on_components() {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        let d = DivisorGerm::parse(&r, "x*y", Some(&["x", "y"])).unwrap();
        let dlog = LogOneForm::dlog(d.h());
        assert!(matches!(residue(&dlog, &d, None), Err(crate::Error::NoAdmissibleIndex)));
        for f in d.factors().unwrap() {
            let rho = residue(&dlog, &d, Some(f)).unwrap();
            assert!(rho.is_one());
            assert!(rho.is_holomorphic().unwrap());
        }
        let dx_over_x = LogOneForm::parse(&r, &["1", "0", "0"], "x").unwrap();
        let x = r.parse("x").unwrap();
        let y = r.parse("y").unwrap();
        assert!(residue(&dx_over_x, &d, Some(&x)).unwrap().is_one());
        assert!(residue(&dx_over_x, &d, Some(&y)).unwrap().is_zero());
    }

    #[test]
    fn umbrella_residue() {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        let d = DivisorGerm::parse(&r, "x^2 - y^2*z", None).unwrap();
        let w = LogOneForm::parse(&r, &["y*z", "-x*z", "-1/2*x*y"], "x^2 - y^2*z").unwrap();
        let rho = residue(&w, &d, None).unwrap();
        let expected = ResidueClass::new(&r, r.parse("y*z").unwrap(), r.parse("2*x").unwrap(), d.h().clone()).unwrap();
        assert!(rho.equals(&expected));
        let quarter_z = ResidueClass::new(&r, r.parse("z").unwrap(), r.parse("4").unwrap(), d.h().clone()).unwrap();
        assert!(rho.product(&rho).equals(&quarter_z));
        assert_eq!(rho.to_string(), "y*z / (2*x)");
    }

    #[test]
    fn residue_display_prefers_leading_variables() {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        let d1 = r.parse("x+y").unwrap();
        let c = ResidueClass::new(&r, r.parse("1/2").unwrap(), r.parse("2*y").unwrap(), d1).unwrap();
        assert_eq!(c.to_string(), "-1 / (4*x)");
    }

    #[test]
    fn coordinate_changes_are_invertible_and_seeded() {
        let a = LinearChange::random(4, DEFAULT_SEED);
        assert_eq!(a, LinearChange::random(4, DEFAULT_SEED));
        assert_eq!(crate::linalg::rank(&a.matrix), 4);
    }
}
