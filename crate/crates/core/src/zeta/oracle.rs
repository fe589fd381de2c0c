//! Fixed points of hyperbolic toral automorphisms by lattice enumeration.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{divisors, mobius, ClosedOrbit, OrbitSet};
use crate::algebra::Matrix;
use crate::error::{Error, Result};

type M2 = [[i128; 2]; 2];

fn overflow() -> Error {
    Error::Invalid("integer overflow while iterating the matrix".into())
}

fn mul2(a: &M2, b: &M2) -> Result<M2> {
    let mut out = [[0i128; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            let x = a[i][0].checked_mul(b[0][j]).ok_or_else(overflow)?;
            let y = a[i][1].checked_mul(b[1][j]).ok_or_else(overflow)?;
            out[i][j] = x.checked_add(y).ok_or_else(overflow)?;
        }
    }
    Ok(out)
}

fn det2(m: &M2) -> Result<i128> {
    let x = m[0][0].checked_mul(m[1][1]).ok_or_else(overflow)?;
    let y = m[0][1].checked_mul(m[1][0]).ok_or_else(overflow)?;
    x.checked_sub(y).ok_or_else(overflow)
}

/// Extended gcd: `(g, u, v)` with `u a + v b = g >= 0`.
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1, mut s0, mut s1, mut t0, mut t1) = (a, b, 1i128, 0i128, 0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Counts solutions `x in [0,1)^2` of `B x in Z^2` for nonsingular `B` by
/// walking the coset representatives of `Z^2 / B Z^2` read off the column
/// Hermite form of `B`.
fn count_torus_solutions(b: &M2, iterate: u32) -> Result<usize> {
    let det = det2(b)?;
    let d = det.abs();
    // column operations clearing the top-right entry
    let (g, _, _) = ext_gcd(b[0][0], b[0][1]);
    if g == 0 {
        return Err(Error::NonHyperbolic(iterate));
    }
    let lo_a = g;
    let lo_c = ((b[0][1] / g) * b[1][0] - (b[0][0] / g) * b[1][1]).abs();
    if lo_a.checked_mul(lo_c) != Some(d) {
        return Err(Error::OracleMismatch { iterate, found: 0, expected: format!("Hermite form with diagonal product {d}") });
    }
    let adj: M2 = [[b[1][1], -b[0][1]], [-b[1][0], b[0][0]]];
    let sgn = det.signum();
    let mut seen = BTreeSet::new();
    for i in 0..lo_a {
        for j in 0..lo_c {
            // x = adj z / det, kept as numerators over |det| reduced mod |det|
            let p0 = (sgn * (adj[0][0] * i + adj[0][1] * j)).rem_euclid(d);
            let p1 = (sgn * (adj[1][0] * i + adj[1][1] * j)).rem_euclid(d);
            // B x must be integral
            if (b[0][0] * p0 + b[0][1] * p1) % d != 0 || (b[1][0] * p0 + b[1][1] * p1) % d != 0 {
                return Err(Error::OracleMismatch { iterate, found: seen.len(), expected: format!("integral image at representative ({i}, {j})") });
            }
            seen.insert((p0, p1));
        }
    }
    if seen.len() as i128 != d {
        return Err(Error::OracleMismatch { iterate, found: seen.len(), expected: d.to_string() });
    }
    Ok(seen.len())
}

/// Lefschetz numbers `L_1, ..., L_K` of the automorphism of `T^2` induced by
/// `a`, each fixed point of `a^k` counted with index `sign det(I - a^k)`.
pub fn cat_map_oracle(a: [[i64; 2]; 2], iterates: u32) -> Result<Vec<BigInt>> {
    let a: M2 = [[a[0][0].into(), a[0][1].into()], [a[1][0].into(), a[1][1].into()]];
    let mut pow = [[1i128, 0], [0, 1]];
    let mut out = Vec::with_capacity(iterates as usize);
    for k in 1..=iterates {
        pow = mul2(&pow, &a)?;
        let b: M2 = [[pow[0][0] - 1, pow[0][1]], [pow[1][0], pow[1][1] - 1]];
        let det = det2(&b)?;
        if det == 0 {
            return Err(Error::NonHyperbolic(k));
        }
        let count = count_torus_solutions(&b, k)?;
        // det(I - a^k) = det(-B) = det(B) in dimension two
        out.push(BigInt::from(det.signum()) * BigInt::from(count));
    }
    Ok(out)
}

/// `sum_i (-1)^i tr(h_i^k)`.
pub fn trace_lefschetz(h: &[Matrix<BigInt>], k: u32) -> Result<BigInt> {
    let mut acc = BigInt::zero();
    for (i, hi) in h.iter().enumerate() {
        let p = hi.pow(k)?;
        let tr: BigInt = (0..p.rows()).map(|j| p.get(j, j).clone()).sum();
        if i % 2 == 0 {
            acc += tr;
        } else {
            acc -= tr;
        }
    }
    Ok(acc)
}

/// Closed orbits of a suspension flow from fixed-point data: `fix[k-1]` holds
/// the number of fixed points of the `k`-th iterate and their common index.
/// Prime periods come from Möbius inversion; every iterate is recorded.
pub fn orbits_from_fixed_points(fix: &[(BigInt, i8)], complete_below: i64) -> Result<OrbitSet> {
    let top = (complete_below - 1).max(0) as usize;
    if fix.len() < top {
        return Err(Error::InsufficientOrbitOrder { requested: complete_below, available: fix.len() as i64 + 1 });
    }
    let mut orbits = Vec::new();
    for d in 1..=top as u64 {
        let mut s = BigInt::zero();
        for e in divisors(d) {
            s += BigInt::from(mobius(d / e)) * &fix[(e - 1) as usize].0;
        }
        let (prime, rem) = s.div_rem(&BigInt::from(d));
        if !rem.is_zero() || prime.is_negative() {
            return Err(Error::Invalid(format!("fixed-point counts give a non-integral number {s}/{d} of prime orbits of period {d}")));
        }
        if prime.is_zero() {
            continue;
        }
        let mut j = 1u64;
        while d * j <= top as u64 {
            let eps = fix[(d * j - 1) as usize].1;
            orbits.push(ClosedOrbit::new((d * j) as u32, j as u32, eps).with_count(prime.clone()));
            j += 1;
        }
    }
    OrbitSet::new(orbits, complete_below)
}

/// Closed orbits of the suspension of the toral automorphism `a`, complete
/// below `complete_below`. Fixed-point counts use `|det(a^k - I)|`.
pub fn cat_map_orbits(a: [[i64; 2]; 2], complete_below: i64) -> Result<OrbitSet> {
    let am = Matrix::from_rows(a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(), 2, BigInt::zero())?;
    let id = Matrix::identity(2, &BigInt::zero());
    let mut fix = Vec::new();
    let mut pow = id.clone();
    for k in 1..complete_below.max(1) {
        pow = pow.mul(&am)?;
        let det = pow.sub(&id)?.det_division_free()?;
        if det.is_zero() {
            return Err(Error::NonHyperbolic(k as u32));
        }
        let sign = if det.is_positive() { 1 } else { -1 };
        fix.push((det.abs(), sign));
    }
    orbits_from_fixed_points(&fix, complete_below)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::{eta_from_lefschetz_numbers, eta_from_orbits, zeta_from_homology, zeta_from_orbits};
    use alloc::vec;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn im(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(), rows[0].len(), BigInt::zero()).unwrap()
    }

    #[test]
    fn golden_cat_map() {
        assert_eq!(cat_map_oracle([[2, 1], [1, 1]], 3).unwrap(), big(&[-1, -5, -16]));
    }

    #[test]
    fn agrees_with_traces() {
        for a in [[[2i64, 1], [1, 1]], [[3, 1], [2, 1]], [[1, 1], [1, 2]], [[0, 1], [1, 1]], [[-2, 1], [1, -1]]] {
            let l = cat_map_oracle(a, 6).unwrap();
            let h = [im(&[&[1]]), im(&[&[a[0][0], a[0][1]], &[a[1][0], a[1][1]]]), im(&[&[a[0][0] * a[1][1] - a[0][1] * a[1][0]]])];
            for (k, lk) in l.iter().enumerate() {
                assert_eq!(lk, &trace_lefschetz(&h, k as u32 + 1).unwrap(), "matrix {a:?} iterate {}", k + 1);
            }
        }
    }

    #[test]
    fn non_hyperbolic() {
        assert_eq!(cat_map_oracle([[1, 1], [0, 1]], 2), Err(Error::NonHyperbolic(1)));
        // finite order rotation: A^4 = I
        assert_eq!(cat_map_oracle([[0, -1], [1, 0]], 5), Err(Error::NonHyperbolic(4)));
    }

    #[test]
    fn orbits_reproduce_lefschetz_eta() {
        let n = 9;
        let s = cat_map_orbits([[2, 1], [1, 1]], n).unwrap();
        let l = cat_map_oracle([[2, 1], [1, 1]], (n - 1) as u32).unwrap();
        assert_eq!(eta_from_orbits(&s, n).unwrap(), eta_from_lefschetz_numbers(&l));
        let h = [im(&[&[1]]), im(&[&[2, 1], &[1, 1]]), im(&[&[1]])];
        assert_eq!(zeta_from_orbits(&s, n).unwrap(), zeta_from_homology(&h, n).unwrap());
        // period-one prime orbits: the single fixed point
        assert!(s.orbits().iter().any(|o| o.n == 1 && o.m == 1 && o.eps == -1 && o.count == BigInt::from(1)));
        assert_eq!(vec![1], s.orbits().iter().filter(|o| o.n == 1).map(|o| o.m).collect::<Vec<_>>());
    }

    #[test]
    fn ext_gcd_identity() {
        for (a, b) in [(12, 18), (-4, 6), (0, 5), (7, 0), (-3, -9)] {
            let (g, u, v) = ext_gcd(a, b);
            assert_eq!(u * a + v * b, g);
            assert!(g >= 0);
        }
    }
}
