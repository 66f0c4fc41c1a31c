//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured quantities. Run with
//! `cargo test -p framelab-cli --test acceptance -- --nocapture`.

use std::process::Command;

use itertools::Itertools;
use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use framelab::cyclotomic::{conductor_for, CycloNum};
use framelab::dihedral::{dft_matrix, GroupElement, Matrix, RepKind, Representation};
use framelab::erasure::{erase_and_reconstruct, exhaustive_erasure_audit};
use framelab::minors::{
    chebotarev_check, check_haar, det_cofactor, det_exact, det_float, even_dependence_certificate,
    orbit_matrix, pair_independence_tau, validate_row_kernel, Mode, OrbitMatrix, Status,
};
use framelab::sampling;
use framelab::sympoly::{det_poly, isolated_monomial, symbolic_orbit_matrix, UniPoly};

fn kappa(n: u32) -> Representation {
    Representation::new(RepKind::Kappa, n).unwrap()
}

fn sigma(n: u32) -> Representation {
    Representation::new(RepKind::Sigma, n).unwrap()
}

fn paper_vector() -> Vec<CycloNum> {
    let cond = conductor_for(5);
    let i = CycloNum::imaginary_unit(cond);
    let one = CycloNum::one(cond);
    vec![
        i.clone(),
        -&i,
        one.clone(),
        &one + &i,
        &CycloNum::from_integer(cond, 2) - &i,
    ]
}

fn paper_orbit() -> OrbitMatrix {
    orbit_matrix(&kappa(5), &paper_vector()).unwrap()
}

#[test]
fn criterion_01_paper_frame_cli_pass_252() {
    let out = Command::new(env!("CARGO_BIN_EXE_framelab"))
        .args([
            "check-haar",
            "--n",
            "5",
            "--rep",
            "kappa",
            "--mode",
            "exact",
            "--vector",
            "i,-i,1,1+i,2-i",
        ])
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert_eq!(out.status.code(), Some(0), "stdout: {}", stdout);
    assert!(stdout.contains("PASS"), "stdout: {}", stdout);
    assert!(stdout.contains("252"), "stdout: {}", stdout);
    println!("criterion 1 PASS: n=5 paper frame certified, 252 subsets, exit 0");
}

#[test]
fn criterion_02_even_orders_always_fail_with_canonical_witness() {
    let mut rng = ChaCha8Rng::seed_from_u64(1002);
    for n in [4u32, 6, 8] {
        let cert = even_dependence_certificate(n).expect("identity verifies entrywise");
        let cond = conductor_for(n);
        let canonical = cert.canonical_witness(cond);
        let indices = cert.subset_indices();
        for trial in 0..20 {
            let v = sampling::random_vector(n as usize, cond, &mut rng);
            let m = orbit_matrix(&kappa(n), &v).unwrap();
            let haar = check_haar(&m, Mode::Exact);
            assert_eq!(haar.status, Status::Fail, "n={} trial={}", n, trial);
            assert!(
                validate_row_kernel(&m, &indices, &canonical),
                "canonical witness must vanish exactly, n={} trial={}",
                n,
                trial
            );
        }
    }
    println!("criterion 2 PASS: n=4,6,8 identity verified; 20 vectors each FAIL with exact (+1..,-1..) witness");
}

#[test]
fn criterion_03_prime_orders_generic_vectors_pass() {
    let mut rng = ChaCha8Rng::seed_from_u64(1003);
    for n in [3u32, 5, 7] {
        let cond = conductor_for(n);
        let expected = match n {
            3 => 20,
            5 => 252,
            _ => 3432,
        };
        for trial in 0..20 {
            let v = sampling::random_vector(n as usize, cond, &mut rng);
            let m = orbit_matrix(&kappa(n), &v).unwrap();
            let cert = check_haar(&m, Mode::Exact);
            assert_eq!(cert.status, Status::Pass, "n={} trial={}", n, trial);
            assert_eq!(cert.subsets_checked, expected);
        }
    }
    println!("criterion 3 PASS: n=3,5,7 x 20 seeded vectors all certified in exact mode");
}

#[test]
fn criterion_04_chebotarev_minors() {
    for n in [2u32, 3, 5, 7] {
        let report = chebotarev_check(n, Mode::Exact);
        assert!(report.all_nonzero, "n={}", n);
    }
    let n4 = chebotarev_check(4, Mode::Exact);
    assert!(!n4.all_nonzero);
    assert_eq!(n4.zero_minor_witness, Some((vec![0, 2], vec![0, 2])));
    println!("criterion 4 PASS: all DFT minors nonzero for n=2,3,5,7; n=4 zero minor at rows {{0,2}} cols {{0,2}}");
}

#[test]
fn criterion_05_monomial_isolation_identity_n7() {
    // Paper shape: 4 rotations, 3 reflections. The symbolic coefficient of
    // f0 f1^2 f2^2 f3^2 equals (up to sign) the product of the two DFT
    // minors, computed independently: one by Laplace expansion of the full
    // symbolic matrix, the other by Bareiss determinants of DFT submatrices.
    let n = 7u32;
    let mut rng = ChaCha8Rng::seed_from_u64(1005);
    let mut shapes: Vec<(Vec<u32>, Vec<u32>)> = vec![(vec![0, 1, 2, 3], vec![0, 1, 2])];
    for _ in 0..4 {
        let mut all: Vec<u32> = (0..7).collect();
        all.shuffle(&mut rng);
        let mut ks = all[..4].to_vec();
        all.shuffle(&mut rng);
        let mut ls = all[..3].to_vec();
        ks.sort_unstable();
        ls.sort_unstable();
        shapes.push((ks, ls));
    }
    for (ks, ls) in &shapes {
        let lambda: Vec<GroupElement> = ks
            .iter()
            .map(|&k| GroupElement::rotation(k, n))
            .chain(ls.iter().map(|&l| GroupElement::reflection(l, n)))
            .collect();
        let sym = symbolic_orbit_matrix(&lambda, &sigma(n), n).unwrap();
        let det = det_poly(&sym);
        let coeff = det.coefficient_of(&isolated_monomial(4, 7));
        assert_eq!(isolated_monomial(4, 7), vec![1, 2, 2, 2, 0, 0, 0]);
        let f = dft_matrix(n);
        let minor1 = Matrix::from_fn(4, 4, |i, j| f.get(i, ks[j] as usize).clone());
        let minor2 = Matrix::from_fn(3, 3, |i, j| f.get(4 + i, ls[j] as usize).clone());
        let product = &det_exact(&minor1) * &det_exact(&minor2);
        assert!(!coeff.is_zero());
        let sign = if coeff == product {
            "+"
        } else {
            assert_eq!(coeff, -&product, "ks={:?} ls={:?}", ks, ls);
            "-"
        };
        assert!(!product.is_zero());
        let _ = sign;
    }
    println!("criterion 5 PASS: n=7 coefficient of f0*f1^2*f2^2*f3^2 = ±(product of the two DFT minors), exactly, on {} subset shapes", shapes.len());
}

#[test]
fn criterion_06_n3_indeterminate_substitution() {
    // All 20 cardinality-3 subsets of Σ: substituting f = (1, z, z^4) yields
    // a nonzero univariate polynomial of degree ≤ 8.
    let n = 3u32;
    let cond = conductor_for(n);
    let elements = GroupElement::enumerate(n);
    let z_vals = [
        UniPoly::one(cond),
        UniPoly::monomial(CycloNum::one(cond), 1),
        UniPoly::monomial(CycloNum::one(cond), 4),
    ];
    let mut checked = 0;
    for lambda in elements.iter().copied().combinations(3) {
        let sym = symbolic_orbit_matrix(&lambda, &sigma(n), n).unwrap();
        let det = det_poly(&sym);
        let p = det.substitute_univariate(&z_vals);
        assert!(!p.is_zero(), "Λ={:?}", lambda);
        assert!(p.degree().unwrap() <= 8, "Λ={:?}", lambda);
        checked += 1;
    }
    assert_eq!(checked, 20);
    println!("criterion 6 PASS: all 20 n=3 subsets give nonzero polynomials of degree <= 8 in z");
}

#[test]
fn criterion_07_tau_representation_theorems() {
    // (a) n=5: every j and 10 random vectors with v1·v2 ≠ 0 pass all pairs.
    let mut rng = ChaCha8Rng::seed_from_u64(1007);
    let cond5 = conductor_for(5);
    for j in 1..=4u32 {
        for trial in 0..10 {
            let v = sampling::random_vector_nonzero_entries(2, cond5, &mut rng);
            let report = pair_independence_tau(5, j, &[v[0].clone(), v[1].clone()]).unwrap();
            assert_eq!(report.pairs.len(), 45);
            assert!(report.all_independent(), "j={} trial={}", j, trial);
        }
    }
    // (b) n=9: τ₃ has the dependent pair {e, r³} for every vector (τ₃(r³)=I);
    // τ₁ passes every pairwise check on 10 random vectors.
    let rep93 = Representation::new(RepKind::Tau(3), 9).unwrap();
    let id2 = Matrix::identity(2, rep93.conductor());
    assert_eq!(rep93.matrix(GroupElement::rotation(3, 9)), id2);
    let cond9 = conductor_for(9);
    let v = sampling::random_vector_nonzero_entries(2, cond9, &mut rng);
    let rep = pair_independence_tau(9, 3, &[v[0].clone(), v[1].clone()]).unwrap();
    assert!(rep
        .dependent_pairs()
        .contains(&(GroupElement::identity(), GroupElement::rotation(3, 9))));
    for trial in 0..10 {
        let v = sampling::random_vector_nonzero_entries(2, cond9, &mut rng);
        let report = pair_independence_tau(9, 1, &[v[0].clone(), v[1].clone()]).unwrap();
        assert!(report.all_independent(), "tau_1 n=9 trial={}", trial);
    }
    // (c) n ∈ {4, 6}: every irreducible τ_j pairs {e, r^{n/2}} dependently.
    for n in [4u32, 6] {
        let cond = conductor_for(n);
        for j in 1..n {
            let rep = match Representation::new(RepKind::Tau(j), n) {
                Ok(r) => r,
                Err(_) => continue, // j = n/2 is reducible
            };
            let half = GroupElement::rotation(n / 2, n);
            let m = rep.matrix(half);
            let pm_id = [
                Matrix::identity(2, cond),
                Matrix::identity(2, cond).scale(&framelab::rational::rat(-1, 1)),
            ];
            assert!(m == pm_id[0] || m == pm_id[1], "n={} j={}", n, j);
            let v = sampling::random_vector_nonzero_entries(2, cond, &mut rng);
            let report = pair_independence_tau(n, j, &[v[0].clone(), v[1].clone()]).unwrap();
            assert!(
                report
                    .dependent_pairs()
                    .contains(&(GroupElement::identity(), half)),
                "n={} j={}",
                n,
                j
            );
        }
    }
    println!("criterion 7 PASS: tau pairwise theorems hold (n=5 generic, n=9 j=3 vs j=1, n=4/6 dependent pair {{e, r^(n/2)}})");
}

#[test]
fn criterion_08_intertwining_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(1008);
    for n in [3u32, 5] {
        let cond = conductor_for(n);
        let f = dft_matrix(n);
        for trial in 0..5 {
            let v = sampling::random_vector(n as usize, cond, &mut rng);
            let fv = f.apply(&v);
            let a = check_haar(&orbit_matrix(&kappa(n), &v).unwrap(), Mode::Exact);
            let b = check_haar(&orbit_matrix(&sigma(n), &fv).unwrap(), Mode::Exact);
            assert_eq!(a.status, b.status, "n={} trial={}", n, trial);
        }
    }
    println!("criterion 8 PASS: exact Haar verdicts agree between (kappa, v) and (sigma, F v) for n=3,5 x 5 vectors");
}

#[test]
fn criterion_09_erasure_simulation() {
    // n=5 paper frame: all 252 maximal patterns reconstruct to < 1e−8.
    let m = paper_orbit();
    let mut rng = ChaCha8Rng::seed_from_u64(1009);
    let u: Vec<Complex64> = (0..5)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let summary = exhaustive_erasure_audit(&m, &u);
    assert_eq!(summary.patterns_checked, 252);
    assert_eq!(summary.singular_patterns, 0);
    assert!(
        summary.worst_error < 1e-8,
        "worst error {}",
        summary.worst_error
    );
    // Spot-check a concrete maximal pattern end to end.
    let report = erase_and_reconstruct(&m, &u, &[0, 2, 4, 6, 8]);
    assert!(!report.singular && report.reconstruction_error < 1e-8);

    // n=4 random frames: at least one singular pattern, matching check_haar.
    for trial in 0..3 {
        let cond = conductor_for(4);
        let v = sampling::random_vector(4, cond, &mut rng);
        let m4 = orbit_matrix(&kappa(4), &v).unwrap();
        let u4: Vec<Complex64> = (0..4)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let s4 = exhaustive_erasure_audit(&m4, &u4);
        let cert = check_haar(&m4, Mode::Exact);
        assert!(s4.singular_patterns >= 1, "trial {}", trial);
        assert_eq!(
            s4.singular_patterns == 0,
            cert.status == Status::Pass,
            "trial {}",
            trial
        );
    }
    println!("criterion 9 PASS: paper frame survives all 252 patterns (< 1e-8); n=4 frames always hit singular patterns, matching check_haar");
}

#[test]
fn criterion_10_oracle_suites() {
    // det_exact ≡ cofactor oracle on 200 random matrices of order ≤ 4.
    let mut rng = ChaCha8Rng::seed_from_u64(1010);
    for trial in 0..200 {
        let d = 1 + trial % 4;
        let cond = conductor_for([3u32, 4, 5, 7][trial % 4]);
        let m = Matrix::from_fn(d, d, |_, _| {
            sampling::random_gaussian_rational(cond, &mut rng)
        });
        assert_eq!(det_exact(&m), det_cofactor(&m), "trial {}", trial);
    }
    // Symbolic-evaluate ≡ numeric determinant on 50 random instances.
    for trial in 0..50 {
        let n = [3u32, 4, 5][trial % 3];
        let nn = n as usize;
        let cond = conductor_for(n);
        let elements = GroupElement::enumerate(n);
        let lambda: Vec<GroupElement> = elements.choose_multiple(&mut rng, nn).copied().collect();
        let rep = sigma(n);
        let sym = symbolic_orbit_matrix(&lambda, &rep, n).unwrap();
        let det_sym = det_poly(&sym);
        let v = sampling::random_vector(nn, cond, &mut rng);
        let numeric = Matrix::from_fn(nn, nn, |i, j| rep.matrix(lambda[i]).apply(&v)[j].clone());
        assert_eq!(
            det_sym.substitute(&v),
            det_exact(&numeric),
            "trial {}",
            trial
        );
    }
    // Float/exact determinant agreement at relative 1e−8 on 100 instances.
    for trial in 0..100 {
        let d = 2 + trial % 4;
        let cond = conductor_for(5);
        let m = Matrix::from_fn(d, d, |_, _| {
            sampling::random_gaussian_rational(cond, &mut rng)
        });
        let exact = det_exact(&m).to_complex_float();
        let float = det_float(&m.to_complex()).value;
        let denom = exact.norm().max(float.norm()).max(1e-300);
        assert!(
            (exact - float).norm() / denom < 1e-8,
            "trial {}: exact {} float {}",
            trial,
            exact,
            float
        );
    }
    println!("criterion 10 PASS: 200 cofactor-oracle, 50 symbolic-evaluation, 100 float-agreement checks");
}
