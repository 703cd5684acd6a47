//! Seeded randomized property battery behind `latpol selftest`.
//!
//! Every property is deterministic for a fixed seed (ChaCha8), so a
//! failure report is reproducible. Any violated property is returned as
//! a self-check error, which the CLI maps to exit code 1.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::certificate::{principality_certificate, Certificate};
use crate::error::{Error, Result};
use crate::lattice::{hyperbolic_e, hyperbolic_f, Lattice, DEGREE_INDEX};
use crate::matrix::IntMat;
use crate::monodromy::{
    alpha_invariant, beauville_mukai_vector, canonical_invariant, h_lambda,
    isometry_orbit_oracle,
};
use crate::normal_form::{
    hermite_normal_form, integer_kernel, is_saturated, rank, saturate_rows, smith_normal_form,
};
use crate::symplectic::polarization_type;

pub(super) fn run(seed: u64, trials: u32) -> Result<Value> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let properties: &[(&str, fn(&mut ChaCha8Rng, u32) -> Result<()>)] = &[
        ("smith-normal-form", prop_smith),
        ("hermite-normal-form", prop_hermite),
        ("kernel-and-saturation", prop_kernel_saturation),
        ("symplectic-type", prop_symplectic),
        ("signature-invariance", prop_signature),
        ("monodromy-invariant", prop_monodromy),
        ("beauville-mukai", prop_beauville_mukai),
        ("certificate", prop_certificate),
    ];
    let mut report = Vec::new();
    for (name, prop) in properties {
        prop(&mut rng, trials).map_err(|e| {
            Error::SelfCheck(format!("property {name} (seed {seed}): {e}"))
        })?;
        report.push(json!({ "name": name, "trials": trials, "status": "pass" }));
    }
    Ok(json!({
        "seed": seed,
        "trials": trials,
        "properties": report,
        "status": "pass",
    }))
}

fn check(cond: bool, detail: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::SelfCheck(detail()))
    }
}

fn rand_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, amp: i64) -> IntMat {
    let mut m = IntMat::zero(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, BigInt::from(rng.gen_range(-amp..=amp)));
        }
    }
    m
}

/// Random product of elementary row operations: always determinant +-1.
fn rand_unimodular(rng: &mut ChaCha8Rng, n: usize) -> IntMat {
    let mut t = IntMat::identity(n);
    if n < 2 {
        return t;
    }
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        match rng.gen_range(0..4) {
            0 => t.swap_rows(i, j),
            1 => t.negate_row(i),
            _ => {
                let c = BigInt::from(*[-2, -1, 1, 2].get(rng.gen_range(0..4)).unwrap());
                t.add_row_multiple(i, j, &c);
            }
        }
    }
    t
}

fn divisor_chain_ok(diag: &[BigInt]) -> bool {
    diag.windows(2).all(|w| {
        if w[0].is_zero() {
            w[1].is_zero()
        } else {
            (&w[1] % &w[0]).is_zero()
        }
    })
}

fn prop_smith(rng: &mut ChaCha8Rng, trials: u32) -> Result<()> {
    for trial in 0..trials {
        let rows = rng.gen_range(1..=5);
        let cols = rng.gen_range(1..=5);
        let m = rand_matrix(rng, rows, cols, 9);
        let snf = smith_normal_form(&m);
        check(snf.u.is_unimodular() && snf.v.is_unimodular(), || {
            format!("trial {trial}: smith witness not unimodular for\n{m}")
        })?;
        check(snf.u.mul(&m).mul(&snf.v) == snf.s, || {
            format!("trial {trial}: u*m*v != s for\n{m}")
        })?;
        let mut diag = Vec::new();
        for i in 0..rows {
            for j in 0..cols {
                let e = snf.s.get(i, j);
                if i == j {
                    check(e >= &BigInt::zero(), || {
                        format!("trial {trial}: negative smith entry for\n{m}")
                    })?;
                    diag.push(e.clone());
                } else {
                    check(e.is_zero(), || {
                        format!("trial {trial}: smith form not diagonal for\n{m}")
                    })?;
                }
            }
        }
        check(divisor_chain_ok(&diag), || {
            format!("trial {trial}: smith diagonal not a divisor chain for\n{m}")
        })?;
        check(smith_normal_form(&snf.s).s == snf.s, || {
            format!("trial {trial}: smith form not idempotent for\n{m}")
        })?;
    }
    Ok(())
}

fn prop_hermite(rng: &mut ChaCha8Rng, trials: u32) -> Result<()> {
    for trial in 0..trials {
        let rows = rng.gen_range(1..=5);
        let cols = rng.gen_range(1..=5);
        let m = rand_matrix(rng, rows, cols, 9);
        let hnf = hermite_normal_form(&m);
        check(hnf.u.is_unimodular(), || {
            format!("trial {trial}: hermite witness not unimodular for\n{m}")
        })?;
        check(hnf.u.mul(&m) == hnf.h, || {
            format!("trial {trial}: u*m != h for\n{m}")
        })?;
        check(hermite_normal_form(&hnf.h).h == hnf.h, || {
            format!("trial {trial}: hermite form not idempotent for\n{m}")
        })?;
        let nonzero = (0..rows)
            .filter(|&i| (0..cols).any(|j| !hnf.h.get(i, j).is_zero()))
            .count();
        check(nonzero == rank(&m), || {
            format!("trial {trial}: hermite row count disagrees with rank for\n{m}")
        })?;
    }
    Ok(())
}

/// Nonzero rows of the Hermite form: a canonical label for the integer
/// row span, so two spans are equal iff these labels are.
fn row_span_label(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let m = IntMat::from_rows(rows.to_vec()).expect("rectangular");
    let h = hermite_normal_form(&m).h;
    (0..h.rows())
        .map(|i| h.row(i).to_vec())
        .filter(|r| r.iter().any(|e| !e.is_zero()))
        .collect()
}

fn prop_kernel_saturation(rng: &mut ChaCha8Rng, trials: u32) -> Result<()> {
    for trial in 0..trials {
        let rows = rng.gen_range(1..=4);
        let cols = rng.gen_range(1..=5);
        let m = rand_matrix(rng, rows, cols, 7);
        let ker = integer_kernel(&m);
        for x in &ker {
            let image = m.mul_vec(x);
            check(image.iter().all(|e| e.is_zero()), || {
                format!("trial {trial}: kernel vector not annihilated for\n{m}")
            })?;
        }
        check(ker.len() == cols - rank(&m), || {
            format!("trial {trial}: kernel rank mismatch for\n{m}")
        })?;
        if !ker.is_empty() {
            let kmat = IntMat::from_rows(ker.clone()).expect("rectangular");
            check(is_saturated(&kmat)?, || {
                format!("trial {trial}: kernel basis not saturated for\n{m}")
            })?;
        }

        // Saturation: full-rank random rows, possibly after a few retries.
        let r = rng.gen_range(1..=3);
        let c = rng.gen_range(r..=5);
        let mut basis = rand_matrix(rng, r, c, 5);
        let mut tries = 0;
        while rank(&basis) < r && tries < 20 {
            basis = rand_matrix(rng, r, c, 5);
            tries += 1;
        }
        if rank(&basis) < r {
            continue;
        }
        let sat = saturate_rows(&basis)?;
        check(sat.rows() == r && rank(&sat) == r, || {
            format!("trial {trial}: saturation changed rank for\n{basis}")
        })?;
        check(is_saturated(&sat)?, || {
            format!("trial {trial}: saturation output not saturated for\n{basis}")
        })?;
        // The original rows must lie in the integer span of the saturation.
        let mut stacked: Vec<Vec<BigInt>> = (0..r).map(|i| sat.row(i).to_vec()).collect();
        stacked.extend((0..r).map(|i| basis.row(i).to_vec()));
        let sat_rows: Vec<Vec<BigInt>> = (0..r).map(|i| sat.row(i).to_vec()).collect();
        check(
            row_span_label(&stacked) == row_span_label(&sat_rows),
            || format!("trial {trial}: saturation does not contain the input rows for\n{basis}"),
        )?;
    }
    Ok(())
}

fn prop_symplectic(rng: &mut ChaCha8Rng, trials: u32) -> Result<()> {
    for trial in 0..trials {
        let g = rng.gen_range(1..=3);
        let mut chain = vec![BigInt::from(rng.gen_range(1..=4))];
        for _ in 1..g {
            let next = chain.last().unwrap() * BigInt::from(rng.gen_range(1..=3));
            chain.push(next);
        }
        let mut block = IntMat::zero(2 * g, 2 * g);
        for (i, d) in chain.iter().enumerate() {
            block.set(i, g + i, d.clone());
            block.set(g + i, i, -d);
        }
        let t = rand_unimodular(rng, 2 * g);
        let a = t.transpose().mul(&block).mul(&t);
        let ptype = polarization_type(&a)?;
        check(ptype.chain() == chain.as_slice(), || {
            format!(
                "trial {trial}: polarization type {:?} != planted {chain:?}",
                ptype.chain()
            )
        })?;
    }
    Ok(())
}

fn prop_signature(rng: &mut ChaCha8Rng, trials: u32) -> Result<()> {
    for trial in 0..trials {
        let n = rng.gen_range(1..=5);
        let mut g = IntMat::zero(n, n);
        for i in 0..n {
            for j in i..n {
                let e = BigInt::from(rng.gen_range(-6..=6i64));
                g.set(i, j, e.clone());
                g.set(j, i, e);
            }
        }
        let t = rand_unimodular(rng, n);
        let conj = t.transpose().mul(&g).mul(&t);
        let (s1, s2) = (
            Lattice::new(g.clone())?.signature(),
            Lattice::new(conj)?.signature(),
        );
        check(s1 == s2, || {
            format!("trial {trial}: signature changed under basis change for\n{g}")
        })?;
        check(s1.plus + s1.zero + s1.minus == n, || {
            format!("trial {trial}: signature does not sum to rank for\n{g}")
        })?;
    }
    Ok(())
}

/// Standard isotropic test class: `d*e3 + d*k'*f3 + c*l` with
/// `k' = c^2 (n-1)/d^2`; primitive with divisibility `d` whenever
/// `gcd(c, d) = 1`.
fn pattern_lambda(n: u64, d: u64, c: i64) -> Result<crate::lattice::LatticeVector> {
    let l = Lattice::k3n(n)?;
    let k = (n - 1) / (d * d);
    let mut coords = vec![BigInt::zero(); 23];
    coords[hyperbolic_e(3)] = BigInt::from(d);
    coords[hyperbolic_f(3)] = BigInt::from(d) * BigInt::from(c) * BigInt::from(c) * BigInt::from(k);
    coords[DEGREE_INDEX] = BigInt::from(c);
    l.vector(coords)
}

fn rand_admissible(rng: &mut ChaCha8Rng) -> (u64, u64) {
    let d = rng.gen_range(1..=5u64);
    let m = rng.gen_range(1..=4u64);
    (d * d * m + 1, d)
}

fn rand_coprime(rng: &mut ChaCha8Rng, d: u64) -> i64 {
    loop {
        let c = rng.gen_range(1..=(3 * d as i64));
        if c.gcd(&(d as i64)) == 1 {
            return c;
        }
    }
}

fn prop_monodromy(rng: &mut ChaCha8Rng, trials: u32) -> Result<()> {
    for trial in 0..trials {
        let (n, d) = rand_admissible(rng);
        let c = rand_coprime(rng, d);
        let lambda = pattern_lambda(n, d, c)?;
        let inv = h_lambda(n, &lambda)?;
        let expected = canonical_invariant(n, d, c)?;
        check(inv.class == expected, || {
            format!(
                "trial {trial}: h_lambda gave {:?}, canonical form {expected:?} for (n, d, c) = ({n}, {d}, {c})",
                inv.class
            )
        })?;

        // The brute-force isometry search must agree with canonicalization.
        let c2 = rand_coprime(rng, d);
        let same_class = canonical_invariant(n, d, c2)? == expected;
        let orbit = isometry_orbit_oracle(n, d, c, c2, 2 * d)?;
        check(orbit == same_class, || {
            format!(
                "trial {trial}: orbit search {orbit}, canonical comparison {same_class} for (n, d) = ({n}, {d}), residues {c} and {c2}"
            )
        })?;
    }
    Ok(())
}

fn prop_beauville_mukai(rng: &mut ChaCha8Rng, trials: u32) -> Result<()> {
    for trial in 0..trials {
        let (n, d) = rand_admissible(rng);
        let b = if d == 1 { 0 } else { rand_coprime(rng, d) };
        // The constructor verifies primitivity, square, orthogonality,
        // divisibility and the moduli dimension; reaching Ok is the test.
        let w = beauville_mukai_vector(n, d, b)?;
        check(w.vv == BigInt::from(2 * n - 2), || {
            format!("trial {trial}: (v,v) != 2n-2 for (n, d, b) = ({n}, {d}, {b})")
        })?;
        check(w.moduli_dimension == BigInt::from(2 * n), || {
            format!("trial {trial}: moduli dimension != 2n for (n, d, b) = ({n}, {d}, {b})")
        })?;
        let round_trip = alpha_invariant(&w)?;
        let direct = canonical_invariant(n, d, b)?;
        check(round_trip == direct, || {
            format!(
                "trial {trial}: fiber-class invariant {round_trip:?} != {direct:?} for (n, d, b) = ({n}, {d}, {b})"
            )
        })?;
    }
    Ok(())
}

fn prop_certificate(rng: &mut ChaCha8Rng, trials: u32) -> Result<()> {
    for trial in 0..trials.min(10) {
        let (n, d) = rand_admissible(rng);
        let c = rand_coprime(rng, d);
        let lambda = pattern_lambda(n, d, c)?;
        let cert = principality_certificate(n, &lambda)?;
        cert.verify()?;
        let doc = cert.to_json();
        Certificate::from_json(&doc)?.verify()?;

        // A tampered conclusion must be rejected.
        let mut forged = doc.clone();
        if let Value::Array(items) = &mut forged["conclusion"] {
            *items.last_mut().expect("nonempty conclusion") = json!("3");
        }
        let verdict = Certificate::from_json(&forged).and_then(|c| c.verify());
        check(verdict.is_err(), || {
            format!("trial {trial}: forged conclusion accepted for (n, d, c) = ({n}, {d}, {c})")
        })?;
    }
    Ok(())
}
