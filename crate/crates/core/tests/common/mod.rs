#![allow(dead_code, clippy::needless_range_loop)]

use acyt::catalog::{get_entry, CatalogEntry};
use acyt::exterior::{e, Blade, Form, DIM};
use acyt::liealg::{invert, LieAlgebra6, Mat6};
use acyt::su3::SU3Structure;
use acyt::Scalar;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// Nonzero rational with numerator in `[-n, n]` and denominator in `[1, d]`.
pub fn rational(r: &mut ChaCha8Rng, n: i64, d: i64) -> Scalar {
    loop {
        let p = r.gen_range(-n..=n);
        if p != 0 {
            return Scalar::new(p, r.gen_range(1..=d));
        }
    }
}

/// Random 3-form; each coefficient is zero with probability one half.
pub fn skew3(r: &mut ChaCha8Rng) -> Form {
    let mut f = Form::zero(3);
    for b in Blade::all(3) {
        if r.gen_bool(0.5) {
            f.add_term(b, rational(r, 4, 3));
        }
    }
    f
}

/// Cayley transform `(I - A)(I + A)⁻¹` of a random skew `A`: a rational
/// orthogonal matrix.
pub fn cayley(r: &mut ChaCha8Rng) -> Mat6 {
    let mut a: Mat6 = Default::default();
    for i in 0..DIM {
        for j in (i + 1)..DIM {
            if r.gen_bool(0.4) {
                let v = Scalar::new(r.gen_range(-2..=2), r.gen_range(1..=3));
                a[j][i] = -&v;
                a[i][j] = v;
            }
        }
    }
    let id = |i: usize, j: usize| if i == j { Scalar::one() } else { Scalar::zero() };
    let plus: Mat6 = std::array::from_fn(|i| std::array::from_fn(|j| &id(i, j) + &a[i][j]));
    let minus: Mat6 = std::array::from_fn(|i| std::array::from_fn(|j| &id(i, j) - &a[i][j]));
    let inv = invert(&plus).expect("I + A is invertible for skew A");
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..DIM).map(|k| &minus[i][k] * &inv[k][j]).sum())
    })
}

pub fn random_entry(r: &mut ChaCha8Rng) -> CatalogEntry {
    let pick = r.gen_range(0..3);
    let nz = |r: &mut ChaCha8Rng| rational(r, 5, 4);
    match pick {
        0 => get_entry("h3", &[("t".into(), nz(r))]).unwrap(),
        1 => {
            let delta = if r.gen_bool(0.5) { Scalar::one() } else { -Scalar::one() };
            get_entry(
                "g7",
                &[("delta".into(), delta), ("r".into(), nz(r)), ("t".into(), nz(r))],
            )
            .unwrap()
        }
        _ => get_entry("sl2c", &[("t".into(), nz(r))]).unwrap(),
    }
}

/// `su(2) ⊕ su(2)` with `J` pairing the two factors: a CYT structure
/// with nonzero Lee form. `sign` flips the orientation of the second factor.
pub fn su2_su2(sign: i64) -> LieAlgebra6 {
    let s = Scalar::int(sign);
    LieAlgebra6::new([
        -e(&[2, 5]),
        e(&[1, 5]),
        -e(&[4, 6]).scale(&s),
        e(&[3, 6]).scale(&s),
        -e(&[1, 2]),
        -e(&[3, 4]).scale(&s),
    ])
    .unwrap()
}

/// `h3 ⊕ R³` with `de3 = e14`; the standard structure is not G1 here.
pub fn non_g1() -> LieAlgebra6 {
    let mut d: [Form; DIM] = std::array::from_fn(|_| Form::zero(2));
    d[2] = e(&[1, 4]);
    LieAlgebra6::new(d).unwrap()
}

/// Isometric copy of `(g, s)` along an orthogonal `phi`.
pub fn transport(g: &LieAlgebra6, s: &SU3Structure, phi: &Mat6) -> (LieAlgebra6, SU3Structure) {
    (g.transported(phi).unwrap(), s.transported(phi).unwrap())
}

/// Rational point `((1 - m²)/(1 + m²), 2m/(1 + m²))` on the unit circle.
pub fn circle_point(m: &Scalar) -> (Scalar, Scalar) {
    let m2 = m * m;
    let den = &Scalar::one() + &m2;
    (&(&Scalar::one() - &m2) / &den, &(&Scalar::int(2) * m) / &den)
}

/// ACYT instances: random catalog parameters, phase rotations of the
/// non-complex example and the `su(2) ⊕ su(2)` CYT structure, each moved by a
/// random isometry.
pub fn acyt_instances(seed: u64) -> Vec<(String, LieAlgebra6, SU3Structure)> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    for n in 0..24 {
        let entry = random_entry(&mut r);
        let phi = cayley(&mut r);
        let (g, s) = transport(&entry.algebra, &entry.structure, &phi);
        out.push((format!("{} #{n} {:?}", entry.name, entry.params), g, s));
    }
    for n in 0..6 {
        let entry = get_entry("nilp_noncomplex", &[]).unwrap();
        let (a, b) = circle_point(&rational(&mut r, 3, 4));
        let s = entry.structure.rotated_phase(&a, &b).unwrap();
        let phi = cayley(&mut r);
        let (g, s) = transport(&entry.algebra, &s, &phi);
        out.push((format!("nilp_noncomplex phase #{n}"), g, s));
    }
    for n in 0..4 {
        let sign = if r.gen_bool(0.5) { 1 } else { -1 };
        let phi = cayley(&mut r);
        let (g, s) = transport(&su2_su2(sign), &SU3Structure::standard(), &phi);
        out.push((format!("su2+su2 #{n}"), g, s));
    }
    out
}
