use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use semigen::functions::{f_psi_extremal, janowski_series, ma_minda_extremal, HerglotzSpec};
use semigen::membership::{inclusion_rate_from_psi, GridSpec};
use semigen::radius::decay_rate;
use semigen::semiflow::{integrate, integrate_at, uniform_times, verify_decay, Trajectory, DEFAULT_STEP_TOL};
use semigen::series::{PowerSeries, RingSampler};
use semigen::ClassSpec;

const ORDER: usize = 4096;
const T_END: f64 = 6.0;

fn start_points() -> Vec<Complex64> {
    (0..8)
        .map(|j| {
            let r = 0.3 + 0.69 * j as f64 / 7.0;
            Complex64::from_polar(r, 2.0 * PI * j as f64 / 8.0 + 0.3)
        })
        .collect()
}

fn grid_min_re(s: &PowerSeries, grid: &GridSpec) -> f64 {
    let ring = RingSampler::new(grid.angular_samples);
    grid.radii
        .iter()
        .flat_map(|&r| ring.eval(s, r))
        .map(|v| v.re)
        .fold(f64::INFINITY, f64::min)
}

fn assert_decays(f: &PowerSeries, k: f64, label: &str) -> Vec<Trajectory> {
    let times = uniform_times(T_END, 60);
    start_points()
        .into_iter()
        .map(|z0| {
            let traj = integrate_at(f, z0, &times, DEFAULT_STEP_TOL).unwrap();
            let cert = verify_decay(&traj, k, 1e-8);
            assert!(cert.holds, "{label}, z0 = {z0}: {cert:?}");
            traj
        })
        .collect()
}

#[test]
fn herglotz_generators_decay_at_their_rate() {
    let grid = GridSpec::default();
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for i in 0..6 {
        let shift = rng.gen_range(0.1..0.6);
        let h = HerglotzSpec::random(&mut rng).p_series(ORDER);
        let one = PowerSeries::constant(Complex64::new(shift, 0.0), ORDER);
        let p = &one + &h.scale(Complex64::new(1.0 - shift, 0.0));
        let k_star = grid_min_re(&p, &grid);
        assert!(k_star > 0.0);
        assert_decays(&p.times_z(), k_star - 1e-3, &format!("sample {i}"));
    }
}

#[test]
fn modulus_is_monotone_for_generators() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for i in 0..6 {
        let p = HerglotzSpec::random(&mut rng).p_series(ORDER);
        let f = p.times_z();
        for z0 in start_points() {
            let traj = integrate(&f, z0, T_END, DEFAULT_STEP_TOL).unwrap();
            for w in traj.points.windows(2) {
                assert!(w[1].norm() <= w[0].norm() + 1e-9, "sample {i}, z0 = {z0}");
            }
        }
    }
}

#[test]
fn f_psi_extremal_decays_at_inclusion_rate() {
    let grid = GridSpec::up_to(0.99);
    let alpha = 3.0 - 2.0 * 2f64.sqrt();
    let psis = [
        ("-z/2", PowerSeries::from_real(&[0.0, -0.5]).unwrap()),
        ("-z", PowerSeries::from_real(&[0.0, -1.0]).unwrap()),
        ("z/(2(1-0.3z))", PowerSeries::from_fn(ORDER, |n| Complex64::new(if n == 0 { 0.0 } else { 0.5 * 0.3f64.powi(n as i32 - 1) }, 0.0))),
        ("z/(1-alpha z^2)", PowerSeries::from_fn(ORDER, |n| Complex64::new(if n % 2 == 1 { alpha.powi(n as i32 / 2) } else { 0.0 }, 0.0))),
    ];
    for (label, psi) in psis {
        let psi = psi.with_order(ORDER);
        let delta = inclusion_rate_from_psi(&psi, &grid).unwrap();
        assert!(delta > 0.0, "{label}");
        let f = f_psi_extremal(&psi).unwrap();
        assert_decays(f.as_series(), delta - 1e-3, label);
    }
}

#[test]
fn janowski_extremal_decays_at_closed_form_rate() {
    for (a, b) in [(0.0, -1.0), (-0.5, -1.0), (-0.2, -0.6), (-0.1, -0.3), (0.0, -0.5)] {
        let f = ma_minda_extremal(&janowski_series(a, b, ORDER)).unwrap();
        let k = decay_rate(&ClassSpec::Janowski { a, b }).unwrap();
        assert_decays(f.as_series(), k - 1e-3, &format!("A = {a}, B = {b}"));
    }
}
