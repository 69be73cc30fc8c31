//! Library values against brute-force enumeration written independently
//! of the library's algorithms.

use qmoments::families::{family_closed, FamilyId};
use qmoments::moments::{
    catalan, functional_on_poly, moment_vector, qcatalan_carlitz, cantero_iserles, CatalanVariant, MomentRoute,
};
use qmoments::qkernel::{parse_ratfunc, Monomial, Rational};
use qmoments::qseries::q_binomial;
use qmoments::{MPoly, RatFunc, XPoly};

/// `Σ c_e q^e` from a coefficient table.
fn qpoly(coeffs: &[i64]) -> RatFunc {
    let terms = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != 0)
        .map(|(e, c)| (Monomial::q(e as i32), Rational::from_integer((*c).into())));
    RatFunc::from_poly(MPoly::from_terms(terms))
}

fn rf(s: &str) -> RatFunc {
    parse_ratfunc(s).unwrap()
}

fn int(n: u128) -> RatFunc {
    RatFunc::constant(Rational::from_integer(n.into()))
}

/// `[n,k]` as the inversion generating function of 0/1 words with `k` ones.
fn binomial_by_inversions(n: u32, k: u32) -> Vec<i64> {
    let mut out = vec![0i64; (k * (n - k) + 1) as usize];
    for w in 0u32..(1 << n) {
        if w.count_ones() != k {
            continue;
        }
        let mut inv = 0;
        let mut ones = 0;
        for i in (0..n).rev() {
            if w >> i & 1 == 1 {
                ones += 1;
            } else {
                inv += ones;
            }
        }
        out[inv] += 1;
    }
    out
}

/// Dyck paths of semilength `n` by area (`Σ` height before each up-step).
fn dyck_by_area(n: usize) -> Vec<i64> {
    let mut out = vec![0i64; n * n + 1];
    fn walk(up: usize, down: usize, h: usize, area: usize, n: usize, out: &mut Vec<i64>) {
        if up == n && down == n {
            out[area] += 1;
            return;
        }
        if up < n {
            walk(up + 1, down, h + 1, area + h, n, out);
        }
        if h > 0 {
            walk(up, down + 1, h - 1, area, n, out);
        }
    }
    walk(0, 0, 0, 0, n, &mut out);
    out
}

/// Paths of `len` steps from 0 to 0 using `+up` and `-1`, optionally kept
/// non-negative.
fn count_paths(len: usize, up: i64, nonneg: bool) -> u128 {
    let mut ways = std::collections::BTreeMap::from([(0i64, 1u128)]);
    for _ in 0..len {
        let mut next = std::collections::BTreeMap::new();
        for (h, w) in ways {
            for s in [up, -1] {
                let g = h + s;
                if !nonneg || g >= 0 {
                    *next.entry(g).or_insert(0) += w;
                }
            }
        }
        ways = next;
    }
    ways.get(&0).copied().unwrap_or(0)
}

#[test]
fn gaussian_binomials_count_inversions() {
    for n in 0..=9 {
        for k in 0..=n {
            let want = qpoly(&binomial_by_inversions(n, k));
            assert_eq!(RatFunc::from_poly(q_binomial(n as i64, k as i64)), want, "[{n},{k}]");
        }
    }
}

#[test]
fn carlitz_catalan_is_area_of_dyck_paths() {
    let c = qcatalan_carlitz(7, 2).unwrap().values;
    for (n, v) in c.iter().enumerate() {
        assert_eq!(v, &qpoly(&dyck_by_area(n)), "C_{n}(q)");
    }
    assert_eq!(c[3].to_string(), "1+2q+q^2+q^3");
}

#[test]
fn classical_moments_count_lattice_paths() {
    let f = moment_vector(&FamilyId::parse("f").unwrap(), 6, MomentRoute::Triangle).unwrap().values;
    let l = moment_vector(&FamilyId::parse("l").unwrap(), 6, MomentRoute::Triangle).unwrap().values;
    for n in 0..=6 {
        assert_eq!(f[n], int(count_paths(2 * n, 1, true)), "Catalan {n}");
        assert_eq!(l[n], int(count_paths(2 * n, 1, false)), "central binomial {n}");
    }
    let fm = FamilyId::parse("fm").unwrap().with_m(3).unwrap();
    let fuss = moment_vector(&fm, 5, MomentRoute::Triangle).unwrap().values;
    let closed = catalan(CatalanVariant::Fuss, 3, 5).unwrap();
    for n in 0..=5 {
        let walks = int(count_paths(3 * n, 2, true));
        assert_eq!(fuss[n], walks, "Fuss-Catalan m=3 n={n}");
        assert_eq!(closed[n], walks);
    }
}

#[test]
fn square_sum_of_binomials_by_inversions() {
    for n in 0..=6u32 {
        let mut sum = vec![0i64; (n * n + 1) as usize];
        for j in 0..=n {
            let b = binomial_by_inversions(n, j);
            for (a, x) in b.iter().enumerate() {
                for (c, y) in b.iter().enumerate() {
                    sum[a + c + (j * j) as usize] += x * y;
                }
            }
        }
        assert_eq!(qpoly(&sum), qpoly(&binomial_by_inversions(2 * n, n)), "n={n}");
    }
}

#[test]
fn non_orthogonality_witness() {
    let big_f = FamilyId::parse("F").unwrap();
    let p = family_closed(&big_f, 3).unwrap().mul_x(1);
    assert_eq!(functional_on_poly(&big_f, &p).unwrap(), rf("(q-1)q^3"));
}

#[test]
fn u_orthogonality_examples() {
    let u = FamilyId::parse("u").unwrap();
    let u2 = family_closed(&u, 2).unwrap();
    let u3 = family_closed(&u, 3).unwrap();
    assert!(functional_on_poly(&u, &(&u3 * &u2)).unwrap().is_zero());
    assert_eq!(functional_on_poly(&u, &(&u2 * &u2)).unwrap(), rf("q^3/((1+q)(1+q^2)(1+q^2)(1+q^3))"));
}

#[test]
fn closed_form_examples() {
    let f = family_closed(&FamilyId::parse("f").unwrap(), 2).unwrap();
    assert_eq!(f, XPoly::parse("x^2 - 1").unwrap());
    let u = family_closed(&FamilyId::parse("u").unwrap(), 2).unwrap();
    assert_eq!(u.to_string(), "x^2 - q/((1+q)(1+q^2))");
    let t = moment_vector(&FamilyId::parse("t").unwrap(), 1, MomentRoute::Triangle).unwrap().values;
    assert_eq!(t[1], rf("q/(1+q)"));
}

#[test]
fn cantero_iserles_low_terms() {
    let a = cantero_iserles(2).unwrap();
    assert_eq!(a[0], RatFunc::one());
    assert_eq!(a[1], rf("-1/(1-z)"));
    assert_eq!(a[2].limit_q1().unwrap(), rf("z/(1-z)^3"));
}

#[test]
fn limits_at_one() {
    assert_eq!(rf("(1-q^3)/(1-q)").limit_q1().unwrap(), int(3));
    // [2]·[4] / [2] at q = 1
    assert_eq!(rf("(1-q^2)(1-q^4)/((1-q)(1-q^2))").limit_q1().unwrap(), int(4));
}
