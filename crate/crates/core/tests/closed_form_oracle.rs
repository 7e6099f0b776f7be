use fracfreq::closed_form::{
    affine_arg, affine_jomega, affine_mag, jomega_pow, jomega_pow_arg, jomega_pow_mag,
    CaseIIParams, CaseIParams,
};
use fracfreq::complex::{add, argument, mul, Complex};
use fracfreq::roots::principal_pow;

const ALPHAS: [f64; 5] = [0.1, 0.25, 0.5, 0.75, 0.9];
const COEFFS: [f64; 4] = [0.5, 1.0, 2.0, 10.0];

fn omegas() -> impl Iterator<Item = f64> {
    (0..64).map(|i| 10f64.powf(-3.0 + 6.0 * i as f64 / 63.0))
}

fn oracle(omega: f64, alpha: f64) -> Complex {
    principal_pow(Complex::imaginary(omega).unwrap(), alpha).unwrap()
}

#[test]
fn case_one_matches_principal_power_componentwise() {
    for omega in omegas() {
        for alpha in ALPHAS {
            let p = CaseIParams::new(omega, alpha).unwrap();
            let v = jomega_pow(&p);
            let o = oracle(omega, alpha);
            assert!(v.approx_eq(&o, 1e-12), "w={omega} a={alpha}: {v} vs {o}");
        }
    }
}

#[test]
fn case_two_matches_affine_oracle() {
    for omega in omegas() {
        for alpha in ALPHAS {
            for a in COEFFS {
                for b in COEFFS {
                    let p = CaseIIParams::new(a, b, omega, alpha).unwrap();
                    let o = add(
                        mul(Complex::real(a).unwrap(), oracle(omega, alpha)).unwrap(),
                        Complex::real(b).unwrap(),
                    )
                    .unwrap();
                    let v = affine_jomega(&p).unwrap();
                    assert!(v.approx_eq(&o, 1e-12), "{v} vs {o}");

                    let mag = affine_mag(&p).unwrap();
                    let pyth = v.re() * v.re() + v.im() * v.im();
                    assert!((mag * mag - pyth).abs() <= 1e-12 * pyth);

                    let arg = affine_arg(&p).unwrap();
                    assert!((arg - argument(v).unwrap()).abs() <= 1e-12);
                    assert!(arg > 0.0 && arg < std::f64::consts::FRAC_PI_2);
                }
            }
        }
    }
}

#[test]
fn case_one_phase_constant_and_magnitude_increasing() {
    for alpha in ALPHAS {
        let args: Vec<f64> = omegas()
            .map(|w| jomega_pow_arg(&CaseIParams::new(w, alpha).unwrap()))
            .collect();
        assert!(args.iter().all(|&a| a == args[0]));

        let mags: Vec<f64> = omegas()
            .map(|w| jomega_pow_mag(&CaseIParams::new(w, alpha).unwrap()))
            .collect();
        assert!(mags.windows(2).all(|w| w[1] > w[0]));
    }
}

#[test]
fn boundary_limits_through_the_oracle() {
    // α = 1 is outside the closed-form domain but the oracle gives jω
    assert!(CaseIParams::new(3.0, 1.0).is_err());
    assert!(oracle(3.0, 1.0).approx_eq(&Complex::imaginary(3.0).unwrap(), 1e-15));
    // b = 0 with a = 1 is Case I
    assert!(CaseIIParams::new(1.0, 0.0, 3.0, 0.5).is_err());
    let p = CaseIIParams::new(1.0, f64::MIN_POSITIVE, 3.0, 0.5).unwrap();
    let q = CaseIParams::new(3.0, 0.5).unwrap();
    assert!((affine_mag(&p).unwrap() - jomega_pow_mag(&q)).abs() < 1e-15);
    assert!((affine_arg(&p).unwrap() - jomega_pow_arg(&q)).abs() < 1e-15);
}
