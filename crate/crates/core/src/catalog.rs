//! Built-in example families: the nilpotent `h3`, the solvable `g7`, the
//! real form of `sl(2, C)`, a non-complex nilpotent example and the abelian
//! algebra.
//!
//! The three complex families are stated in the `(ω, Θ) = (-F, -Ψ)`
//! presentation; their expected tables use that presentation and are
//! translated when compared. The internal structure is always the standard
//! one.

use crate::error::Error;
use crate::exterior::{e, Form, Tensor};
use crate::liealg::LieAlgebra6;
use crate::su3::{validate_su3, SU3Structure};
use crate::Scalar;

/// Sign presentation of the exterior data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    /// `ω = -F`, `Θ = -Ψ`.
    PaperOmega,
    /// `F`, `Ψ±` as stored.
    InternalF,
}

impl Convention {
    pub fn tag(self) -> &'static str {
        match self {
            Convention::PaperOmega => "paper-omega",
            Convention::InternalF => "internal-F",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Convention> {
        match tag {
            "paper-omega" => Some(Convention::PaperOmega),
            "internal-F" => Some(Convention::InternalF),
            _ => None,
        }
    }

    /// Sign relating stored `F`, `Ψ±`, `dF`, `dΨ±` to their presentation.
    pub fn form_sign(self) -> Scalar {
        match self {
            Convention::PaperOmega => -Scalar::one(),
            Convention::InternalF => Scalar::one(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expected {
    Form(Form),
    Bool(bool),
    Count(usize),
    Scalar(Scalar),
    /// `Ric = c·g`.
    MetricMultiple(Scalar),
    /// Connection terms `∇_{e_i} e_j = c e_k` as zero-based `(i, j, k, c)`.
    Coefficients(Vec<(usize, usize, usize, Scalar)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedValue {
    pub key: &'static str,
    pub value: Expected,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub params: Vec<(String, Scalar)>,
    pub algebra: LieAlgebra6,
    pub structure: SU3Structure,
    /// Presentation used by `expected` for the sign-sensitive forms.
    pub convention: Convention,
    pub expected: Vec<ExpectedValue>,
}

impl CatalogEntry {
    pub fn expected(&self, key: &str) -> Option<&Expected> {
        self.expected.iter().find(|x| x.key == key).map(|x| &x.value)
    }
}

pub const NAMES: [&str; 5] = ["h3", "g7", "sl2c", "nilp_noncomplex", "abelian"];

/// Parameter names with their defaults.
pub fn default_params(name: &str) -> Result<Vec<(&'static str, Scalar)>, Error> {
    Ok(match name {
        "h3" => vec![("t", Scalar::new(-1, 2))],
        "g7" => vec![
            ("delta", Scalar::one()),
            ("r", Scalar::one()),
            ("t", Scalar::one()),
        ],
        "sl2c" => vec![("t", Scalar::one())],
        "nilp_noncomplex" | "abelian" => vec![],
        _ => return Err(Error::UnknownEntry(name.to_string())),
    })
}

pub fn describe(name: &str) -> &'static str {
    match name {
        "h3" => "nilpotent h3 family, de6 = -2t(e12 - e34)",
        "g7" => "solvable g7 family with parameters delta = ±1, r, t",
        "sl2c" => "real form of sl(2,C), scaled by t",
        "nilp_noncomplex" => "non-complex nilpotent ACYT example (de1 = e36, de4 = e26, de5 = e23)",
        "abelian" => "abelian algebra, flat Kähler",
        _ => "",
    }
}

fn f2(a: usize, b: usize) -> Form {
    e(&[a, b])
}

fn forms(d: [(usize, Form); 6]) -> [Form; 6] {
    std::array::from_fn(|k| {
        debug_assert_eq!(d[k].0, k + 1);
        d[k].1.clone()
    })
}

/// Builds and validates an entry, overriding defaults with `overrides`.
pub fn get_entry(name: &str, overrides: &[(String, Scalar)]) -> Result<CatalogEntry, Error> {
    let defaults = default_params(name)?;
    let mut params: Vec<(String, Scalar)> = defaults
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect();
    for (k, v) in overrides {
        match params.iter_mut().find(|(pk, _)| pk == k) {
            Some(slot) => slot.1 = v.clone(),
            None => {
                return Err(Error::ParameterDomain(format!(
                    "{name} has no parameter {k:?}"
                )))
            }
        }
    }
    let p = |k: &str| -> Scalar {
        params
            .iter()
            .find(|(pk, _)| pk == k)
            .map(|(_, v)| v.clone())
            .expect("known parameter")
    };
    for (k, v) in &params {
        if v.is_zero() {
            return Err(Error::ParameterDomain(format!(
                "nonzero parameter required: {k} = 0"
            )));
        }
        if k == "delta" && !v.abs().is_one() {
            return Err(Error::ParameterDomain(format!(
                "delta must be 1 or -1, got {v}"
            )));
        }
    }

    let s = SU3Structure::standard();
    let z = || Form::zero(2);
    let (algebra, convention, expected) = match name {
        "h3" => {
            let t = p("t");
            let m2t = &Scalar::int(-2) * &t;
            let alg = forms([
                (1, z()),
                (2, z()),
                (3, z()),
                (4, z()),
                (5, z()),
                (6, (&f2(1, 2) - &f2(3, 4)).scale(&m2t)),
            ]);
            let torsion = (&e(&[1, 2, 6]) - &e(&[3, 4, 6])).scale(&m2t);
            let d_omega = (&e(&[1, 2, 5]) - &e(&[3, 4, 5])).scale(&(&Scalar::int(2) * &t));
            (
                alg,
                Convention::PaperOmega,
                complex_expectations(torsion, d_omega, 1),
            )
        }
        "g7" => {
            let (delta, r, t) = (p("delta"), p("r"), p("t"));
            let two_t = &Scalar::int(2) / &t;
            let k = &(&(&Scalar::int(2) * &delta) * &t) / &(&r * &r);
            let alg = forms([
                (1, f2(2, 5).scale(&-&two_t)),
                (2, f2(1, 5).scale(&two_t)),
                (3, f2(4, 5).scale(&two_t)),
                (4, f2(3, 5).scale(&-&two_t)),
                (5, z()),
                (6, (&f2(1, 2) - &f2(3, 4)).scale(&-&k)),
            ]);
            let torsion = (&e(&[1, 2, 6]) - &e(&[3, 4, 6])).scale(&-&k);
            let d_omega = (&e(&[1, 2, 5]) - &e(&[3, 4, 5])).scale(&k);
            (
                alg,
                Convention::PaperOmega,
                complex_expectations(torsion, d_omega, 1),
            )
        }
        "sl2c" => {
            let t = p("t");
            let u = t.recip();
            let alg = forms([
                (1, (&f2(3, 5) - &f2(4, 6)).scale(&u)),
                (2, (&f2(3, 6) + &f2(4, 5)).scale(&u)),
                (3, (&f2(1, 5) - &f2(2, 6)).scale(&-&u)),
                (4, (&f2(1, 6) + &f2(2, 5)).scale(&-&u)),
                (5, (&f2(1, 3) - &f2(2, 4)).scale(&u)),
                (6, (&f2(1, 4) + &f2(2, 3)).scale(&u)),
            ]);
            let torsion = (&(&(&e(&[1, 3, 5]).scale(&Scalar::int(3)) + &e(&[1, 4, 6]))
                + &e(&[2, 3, 6]))
                + &e(&[2, 4, 5]))
                .scale(&-&u);
            let d_omega = (&(&(&e(&[1, 3, 6]) + &e(&[1, 4, 5])) + &e(&[2, 3, 5]))
                + &e(&[2, 4, 6]).scale(&Scalar::int(3)))
                .scale(&-&u);
            (
                alg,
                Convention::PaperOmega,
                complex_expectations(torsion, d_omega, 3),
            )
        }
        "nilp_noncomplex" => {
            let alg = forms([
                (1, f2(3, 6)),
                (2, z()),
                (3, z()),
                (4, f2(2, 6)),
                (5, f2(2, 3)),
                (6, z()),
            ]);
            (alg, Convention::InternalF, noncomplex_expectations(&s))
        }
        "abelian" => {
            let alg: [Form; 6] = std::array::from_fn(|_| z());
            let expected = vec![
                ExpectedValue {
                    key: "torsion",
                    value: Expected::Form(Form::zero(3)),
                },
                ExpectedValue {
                    key: "kahler",
                    value: Expected::Bool(true),
                },
                ExpectedValue {
                    key: "holonomy_dim",
                    value: Expected::Count(0),
                },
            ];
            (alg, Convention::InternalF, expected)
        }
        _ => unreachable!("checked by default_params"),
    };
    let algebra = LieAlgebra6::new(algebra)?;
    if let Err(v) = algebra.validate() {
        return Err(Error::InvalidAlgebra(format!(
            "catalog entry {name}: d(d e{}) = {}",
            v.k,
            v.dd.render()
        )));
    }
    if let Some(first) = validate_su3(&s).first_violation() {
        return Err(Error::InvalidStructure(format!("catalog entry {name}: {first}")));
    }
    Ok(CatalogEntry {
        name: name.to_string(),
        params,
        algebra,
        structure: s,
        convention,
        expected,
    })
}

fn complex_expectations(torsion: Form, d_omega: Form, holonomy: usize) -> Vec<ExpectedValue> {
    let b = |key, v| ExpectedValue {
        key,
        value: Expected::Bool(v),
    };
    vec![
        ExpectedValue {
            key: "torsion",
            value: Expected::Form(torsion),
        },
        ExpectedValue {
            key: "dF",
            value: Expected::Form(d_omega),
        },
        b("nijenhuis_zero", true),
        b("balanced", true),
        b("acyt", true),
        b("instanton", true),
        b("nabla_T_zero", true),
        ExpectedValue {
            key: "holonomy_dim",
            value: Expected::Count(holonomy),
        },
    ]
}

fn noncomplex_expectations(s: &SU3Structure) -> Vec<ExpectedValue> {
    let b = |key, v| ExpectedValue {
        key,
        value: Expected::Bool(v),
    };
    let form = |key, f| ExpectedValue {
        key,
        value: Expected::Form(f),
    };
    let scalar = |key, n: i64| ExpectedValue {
        key,
        value: Expected::Scalar(Scalar::int(n)),
    };
    let torsion = &(&(&e(&[1, 3, 6]) + &e(&[2, 3, 5])) - &e(&[2, 4, 6]))
        - &e(&[1, 4, 5]).scale(&Scalar::int(2));
    let coeffs = [
        (1, 6, 3, -1),
        (5, 2, 3, 1),
        (4, 6, 2, -1),
        (4, 5, 1, -1),
        (5, 1, 4, -1),
        (1, 4, 5, -1),
    ]
    .into_iter()
    .map(|(i, j, k, c)| (i - 1, j - 1, k - 1, Scalar::int(c)))
    .collect();
    vec![
        form("dF", e(&[2, 3, 6]).scale(&Scalar::int(-3))),
        form("nijenhuis", -s.psi_minus()),
        scalar("(N,Psi+)", 0),
        scalar("(N,Psi-)", -4),
        form("theta", Form::zero(1)),
        form("dPsi+", Form::zero(4)),
        form("dPsi-", crate::connection::star(s.f())),
        form("torsion", torsion),
        form("dT", s.phi().scale(&Scalar::int(-2))),
        ExpectedValue {
            key: "connection_terms",
            value: Expected::Coefficients(coeffs),
        },
        ExpectedValue {
            key: "ricci",
            value: Expected::MetricMultiple(Scalar::int(-2)),
        },
        scalar("scal", -12),
        scalar("scal_g", 1),
        b("g1", true),
        b("hermitian", false),
        b("nearly_kahler", false),
        b("balanced", true),
        b("acyt", true),
        b("nabla_T_zero", true),
        b("nabla_N_zero", true),
        b("instanton", true),
    ]
}

/// Full tensor `c·δ` for comparing against a metric multiple.
pub fn metric_multiple(c: &Scalar) -> Tensor {
    Tensor::identity().scale(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_validates_and_is_unimodular() {
        for name in NAMES {
            let entry = get_entry(name, &[]).unwrap();
            assert!(entry.algebra.validate().is_ok(), "{name}");
            assert!(entry.algebra.is_unimodular(), "{name}");
        }
    }

    #[test]
    fn h3_default_has_de6_e12_minus_e34() {
        let entry = get_entry("h3", &[]).unwrap();
        assert_eq!(entry.algebra.d1forms()[5], &e(&[1, 2]) - &e(&[3, 4]));
    }

    #[test]
    fn sl2c_de1() {
        let entry = get_entry("sl2c", &[("t".into(), Scalar::one())]).unwrap();
        assert_eq!(entry.algebra.d1forms()[0], &e(&[3, 5]) - &e(&[4, 6]));
    }

    #[test]
    fn g7_both_signs_validate() {
        for d in [1, -1] {
            let entry = get_entry(
                "g7",
                &[
                    ("delta".into(), Scalar::int(d)),
                    ("r".into(), Scalar::new(3, 2)),
                    ("t".into(), Scalar::new(-2, 5)),
                ],
            )
            .unwrap();
            assert!(entry.algebra.validate().is_ok());
        }
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            get_entry("h3", &[("t".into(), Scalar::zero())]),
            Err(Error::ParameterDomain(m)) if m.contains("nonzero parameter required")
        ));
        assert!(matches!(
            get_entry("g7", &[("delta".into(), Scalar::int(2))]),
            Err(Error::ParameterDomain(_))
        ));
        assert!(matches!(
            get_entry("h3", &[("q".into(), Scalar::one())]),
            Err(Error::ParameterDomain(_))
        ));
        assert!(matches!(get_entry("s3xs3", &[]), Err(Error::UnknownEntry(_))));
    }
}
