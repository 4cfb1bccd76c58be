//! Polytope side of the toric Fano dictionary.
//!
//! A Fano polytope `Q` stands for the toric variety `X` whose fan is spanned
//! by the faces of `Q`. Nothing about `X` is built; every quantity is read
//! off `Q` and its dual `P = Q*`.

use num_bigint::BigInt;
use num_traits::One;

use crate::checks::{certify_equality, r_invariant, CheckReport, Status, Witness};
use crate::error::{Error, Result};
use crate::kernel::matrix::int_determinant;
use crate::kernel::rational::{factorial, pow};
use crate::kernel::{barycenter, volume, Rational, UnimodularAffineMap, VPolytope};
use crate::lattice::{dual_polytope, is_fano, is_reflexive};

fn require_fano(q: &VPolytope) -> Result<()> {
    if is_fano(q) {
        Ok(())
    } else {
        Err(Error::NotFano)
    }
}

/// `c_1(X)^n = n! vol(Q*)`.
pub fn anticanonical_degree(q: &VPolytope) -> Result<Rational> {
    require_fano(q)?;
    let p = dual_polytope(q)?;
    Ok(volume(&p) * Rational::from_integer(factorial(q.dim())))
}

/// Whether `X` carries a Kähler–Einstein metric: `barycenter(Q*) = 0`.
pub fn ke_criterion(q: &VPolytope) -> Result<bool> {
    require_fano(q)?;
    Ok(barycenter(&dual_polytope(q)?).is_zero())
}

/// Whether every facet of `Q` is a simplex whose vertices form a lattice basis.
pub fn is_smooth(q: &VPolytope) -> Result<bool> {
    require_fano(q)?;
    let smooth = q.h().facets().iter().all(|f| {
        let on: Vec<_> = q.vertices_on(f).collect();
        if on.len() != q.dim() {
            return false;
        }
        let rows: Vec<Vec<BigInt>> = on
            .iter()
            .map(|&i| {
                q.vertices()[i]
                    .to_lattice()
                    .expect("lattice vertex")
                    .coords()
                    .to_vec()
            })
            .collect();
        int_determinant(&rows).magnitude().is_one()
    });
    Ok(smooth)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricFanoReport {
    pub fano: VPolytope,
    pub dual: VPolytope,
    pub degree: Rational,
    pub reflexive: bool,
    pub smooth: bool,
    pub ke_exists: bool,
    /// `R(Q*)`; equals `R(X)` at least when `X` is smooth.
    pub r_value: Rational,
    /// `(n+1)^n`, valid when `ke_exists`.
    pub plain_bound: Rational,
    pub plain_status: Status,
    /// `((n+1)/R)^n`.
    pub bb_bound: Rational,
    pub bb_status: Status,
    pub is_projective_space: bool,
    pub certificate: Option<UnimodularAffineMap>,
    /// Named consistency conditions between the fields; all must hold.
    pub cross_checks: Vec<(&'static str, bool)>,
}

impl ToricFanoReport {
    pub fn consistent(&self) -> bool {
        self.cross_checks.iter().all(|(_, ok)| *ok)
    }

    /// Worst of the two bound verdicts, or a violation when a cross-check fails.
    pub fn status(&self) -> Status {
        if !self.consistent() {
            return Status::Violation;
        }
        self.plain_status.worst(self.bb_status)
    }

    pub fn to_check_report(&self) -> CheckReport {
        let r_label = if self.smooth { "r_variety" } else { "r_dual" };
        let mut report = CheckReport::new("toric", self.status())
            .with_input("q", self.fano.vertices().to_vec())
            .with_value("dual", self.dual.vertices().to_vec())
            .with_value("degree", &self.degree)
            .with_value("reflexive", self.reflexive)
            .with_value("smooth", self.smooth)
            .with_value("ke_exists", self.ke_exists)
            .with_value(r_label, &self.r_value)
            .with_value("plain_bound", &self.plain_bound)
            .with_value("plain_status", self.plain_status.as_str())
            .with_value("bb_bound", &self.bb_bound)
            .with_value("bb_status", self.bb_status.as_str())
            .with_value("is_projective_space", self.is_projective_space)
            .with_bound(self.bb_bound.clone());
        for (name, ok) in &self.cross_checks {
            report = report.with_value(name, *ok);
        }
        if let Some(f) = &self.certificate {
            report = report.with_witness(Witness::Map(f.clone()));
        }
        if !self.consistent() {
            report = report.with_reason("cross-check failed");
        }
        report
    }
}

pub fn toric_report(q: &VPolytope) -> Result<ToricFanoReport> {
    require_fano(q)?;
    let n = q.dim();
    let p = dual_polytope(q)?;
    let degree = volume(&p) * Rational::from_integer(factorial(n));
    let reflexive = is_reflexive(q)?;
    let smooth = is_smooth(q)?;
    let r = r_invariant(&p)?;
    let ke_exists = r.barycenter.is_zero();

    let n1 = Rational::from_integer(BigInt::from(n + 1));
    let plain_bound = pow(&n1, n);
    let plain_status = if ke_exists {
        Status::of_le(&degree, &plain_bound)
    } else {
        Status::NotApplicable
    };
    let bb_bound = pow(&(&n1 / &r.value), n);
    let bb_status = Status::of_le(&degree, &bb_bound);

    let certificate = certify_equality(&p)?;
    let is_projective_space = certificate.is_some();

    let cross_checks = vec![
        ("degree_within_bb_bound", bb_status != Status::Violation),
        (
            "bb_equality_iff_projective_space",
            (bb_status == Status::Equality) == is_projective_space,
        ),
        (
            "plain_equality_iff_projective_space",
            !ke_exists || (plain_status == Status::Equality) == is_projective_space,
        ),
        ("r_one_iff_ke", r.value.is_one() == ke_exists),
        (
            "degree_integral_if_reflexive",
            !reflexive || degree.is_integer(),
        ),
    ];

    Ok(ToricFanoReport {
        fano: q.clone(),
        dual: p,
        degree,
        reflexive,
        smooth,
        ke_exists,
        r_value: r.value,
        plain_bound,
        plain_status,
        bb_bound,
        bb_status,
        is_projective_space,
        certificate,
        cross_checks,
    })
}
