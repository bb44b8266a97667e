//! Univariate polynomials over a field, just enough to split minimal
//! polynomials of endomorphisms into coprime parts.

use num::BigUint;
use rand_chacha::ChaCha8Rng;

use crate::field::Field;
use crate::linalg::Mat;

/// Coefficients from low to high degree; no trailing zeros.
pub type Poly<E> = Vec<E>;

fn trim<F: Field>(f: &F, mut p: Poly<F::Elem>) -> Poly<F::Elem> {
    while p.last().is_some_and(|c| f.is_zero(c)) {
        p.pop();
    }
    p
}

fn degree<E>(p: &Poly<E>) -> Option<usize> {
    p.len().checked_sub(1)
}

fn monic<F: Field>(f: &F, p: Poly<F::Elem>) -> Poly<F::Elem> {
    let p = trim(f, p);
    match p.last() {
        None => p,
        Some(lead) => {
            let inv = f.inv(lead).expect("nonzero leading coefficient");
            p.iter().map(|c| f.mul(c, &inv)).collect()
        }
    }
}

fn sub<F: Field>(f: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
    let n = a.len().max(b.len());
    let z = f.zero();
    let out = (0..n).map(|i| f.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect();
    trim(f, out)
}

fn mul<F: Field>(f: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    trim(f, out)
}

fn divrem<F: Field>(f: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> (Poly<F::Elem>, Poly<F::Elem>) {
    let db = degree(b).expect("division by the zero polynomial");
    let inv = f.inv(&b[db]).expect("nonzero leading coefficient");
    let mut r = trim(f, a.clone());
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![f.zero(); r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = f.mul(&r[dr], &inv);
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = f.sub(&r[shift + i], &f.mul(&c, bc));
        }
        q[shift] = c;
        r = trim(f, r);
    }
    (trim(f, q), r)
}

fn gcd<F: Field>(f: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
    let (mut a, mut b) = (trim(f, a.clone()), trim(f, b.clone()));
    while !b.is_empty() {
        let (_, r) = divrem(f, &a, &b);
        a = b;
        b = r;
    }
    monic(f, a)
}

fn derivative<F: Field>(f: &F, a: &Poly<F::Elem>) -> Poly<F::Elem> {
    let out = a.iter().enumerate().skip(1).map(|(i, c)| f.mul(c, &f.from_i64(i as i64))).collect();
    trim(f, out)
}

fn powmod<F: Field>(f: &F, base: &Poly<F::Elem>, exp: &BigUint, m: &Poly<F::Elem>) -> Poly<F::Elem> {
    let mut acc = vec![f.one()];
    let base = divrem(f, base, m).1;
    for i in (0..exp.bits()).rev() {
        acc = divrem(f, &mul(f, &acc, &acc), m).1;
        if exp.bit(i) {
            acc = divrem(f, &mul(f, &acc, &base), m).1;
        }
    }
    acc
}

/// Minimal polynomial of a square matrix, monic.
pub fn minimal_polynomial<F: Field>(m: &Mat<F>) -> Poly<F::Elem> {
    let f = m.field().clone();
    let n = m.rows();
    let mut powers: Vec<Vec<F::Elem>> = Vec::new();
    let mut cur = Mat::identity(&f, n);
    loop {
        powers.push(cur.entries().to_vec());
        // columns = flattened powers; look for a dependency involving the newest one
        let cols = powers.len();
        let mut sys = Mat::zeros(&f, n * n, cols);
        for (j, p) in powers.iter().enumerate() {
            for (i, e) in p.iter().enumerate() {
                sys.set(i, j, e.clone());
            }
        }
        let ker = sys.kernel_basis();
        if ker.cols() > 0 {
            let coeffs = ker.col_vec(0);
            return monic(&f, coeffs);
        }
        cur = cur.mul(m);
    }
}

/// Evaluates `p(m)`.
pub fn evaluate<F: Field>(p: &Poly<F::Elem>, m: &Mat<F>) -> Mat<F> {
    let f = m.field().clone();
    let n = m.rows();
    let mut acc = Mat::zeros(&f, n, n);
    for c in p.iter().rev() {
        acc = acc.mul(m).add(&Mat::identity(&f, n).scale(c));
    }
    acc
}

/// A monic factor `g` of the squarefree part `r` of `p` with `0 < deg g < deg r`,
/// or `None` when `p` is a power of one irreducible (or no split was found
/// over the rationals).
pub fn coprime_split<F: Field>(f: &F, p: &Poly<F::Elem>, rng: &mut ChaCha8Rng) -> Option<Poly<F::Elem>> {
    let p = monic(f, p.clone());
    let d = derivative(f, &p);
    if d.is_empty() {
        return None;
    }
    let r = divrem(f, &p, &gcd(f, &p, &d)).0;
    let r = monic(f, r);
    let dr = degree(&r)?;
    if dr < 2 {
        return None;
    }
    let q = f.characteristic();
    if q == 0 {
        for c in -8i64..=8 {
            let lin = vec![f.from_i64(-c), f.one()];
            if divrem(f, &r, &lin).1.is_empty() {
                return Some(lin);
            }
        }
        return None;
    }
    let x = vec![f.zero(), f.one()];
    let qb = BigUint::from(q);
    let mut h = x.clone();
    for deg in 1..=dr {
        h = powmod(f, &h, &qb, &r);
        let g = gcd(f, &sub(f, &h, &x), &r);
        let dg = degree(&g).unwrap_or(0);
        if dg == 0 {
            continue;
        }
        if dg < dr {
            return Some(g);
        }
        if dr == deg {
            return None;
        }
        return equal_degree_split(f, &r, deg, q, rng);
    }
    None
}

fn equal_degree_split<F: Field>(
    f: &F,
    r: &Poly<F::Elem>,
    d: usize,
    q: u64,
    rng: &mut ChaCha8Rng,
) -> Option<Poly<F::Elem>> {
    let dr = degree(r)?;
    let qd = BigUint::from(q).pow(d as u32);
    for _ in 0..200 {
        let a: Poly<F::Elem> = trim(f, (0..dr).map(|_| f.random(rng)).collect());
        if degree(&a).unwrap_or(0) == 0 {
            continue;
        }
        let b = if q == 2 {
            // trace map a + a^2 + ... + a^(2^(d-1))
            let mut acc = Vec::new();
            let mut t = a.clone();
            for _ in 0..d {
                acc = sub(f, &acc, &sub(f, &Vec::new(), &t));
                t = divrem(f, &mul(f, &t, &t), r).1;
            }
            acc
        } else {
            let e = (&qd - 1u32) / 2u32;
            sub(f, &powmod(f, &a, &e, r), &vec![f.one()])
        };
        let g = gcd(f, &b, r);
        let dg = degree(&g).unwrap_or(0);
        if dg > 0 && dg < dr {
            return Some(g);
        }
    }
    None
}
